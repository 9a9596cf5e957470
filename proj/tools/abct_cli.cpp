#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "abct/classes.hpp"
#include "abct/groebner.hpp"
#include "abct/io.hpp"
#include "abct/matroid.hpp"

using namespace abct;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

int usage_error(const std::string& msg) {
    std::cerr << "usage error: " << msg << "\n";
    return kExitUsage;
}

long elapsed_ms(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 start)
        .count();
}

uint64_t trial_seed(uint64_t base, int trial) {
    return base + 0x9E3779B97F4A7C15ull * static_cast<uint64_t>(trial + 1);
}

int cmd_class(int n, bool json, bool timed) {
    if (n < 5) return usage_error("class: --n must be at least 5");
    const auto start = std::chrono::steady_clock::now();
    const ClassResult r = abct_class(n);
    const long ms = elapsed_ms(start);
    if (json) {
        auto j = class_result_json(r);
        if (timed) j["elapsed_ms"] = ms;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << render_schur_text(r.expansion) << "\n";
        if (timed) std::cout << "elapsed_ms: " << ms << "\n";
    }
    return kExitOk;
}

int cmd_degree(int n, bool oracle, bool json) {
    if (n < 5) return usage_error("degree: --n must be at least 5");
    const Int deg = pluecker_degree(n);
    Int skew;
    bool equal = true;
    if (oracle) {
        skew = degree_skew_oracle(n);
        equal = (deg == skew);
    }
    if (json) {
        OrderedJson j;
        j["n"] = n;
        j["degree"] = deg.get_str();
        if (oracle) {
            j["oracle"] = skew.get_str();
            j["equal"] = equal;
        }
        std::cout << j.dump() << "\n";
    } else {
        std::cout << deg.get_str() << "\n";
        if (oracle) std::cout << "oracle: " << skew.get_str() << "\n";
    }
    if (!equal) {
        std::cerr << "degree mismatch at n = " << n << ": pieri " << deg.get_str() << ", skew oracle "
                  << skew.get_str() << "\n";
        return kExitVerificationFailure;
    }
    return kExitOk;
}

int cmd_euler(int n, bool json) {
    if (n < 5) return usage_error("euler: --n must be at least 5");
    const EulerCheck r = euler_coefficient_check(n);
    if (json) {
        OrderedJson j;
        j["n"] = n;
        j["coeff"] = r.coeff.get_str();
        j["closed_form"] = r.closed_form.get_str();
        j["eulerian"] = r.eulerian.get_str();
        j["all_equal"] = r.all_equal;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "coeff: " << r.coeff.get_str() << "\n"
                  << "closed_form: " << r.closed_form.get_str() << "\n"
                  << "eulerian: " << r.eulerian.get_str() << "\n"
                  << "all_equal: " << (r.all_equal ? "true" : "false") << "\n";
    }
    return r.all_equal ? kExitOk : kExitVerificationFailure;
}

int cmd_verify_class(int max_n, bool json) {
    if (max_n < 5) return usage_error("verify-class: --max-n must be at least 5");
    ClassCalculator calc;
    bool genseries_ok = true;
    bool porteous_ok = true;
    std::string counterexample;
    for (int m = 0; m <= max_n - 5 && genseries_ok; ++m) {
        if (calc.f(m) != genseries_oracle(m)) {
            genseries_ok = false;
            counterexample = "genseries m=" + std::to_string(m) + ": recursion " +
                             render_schur_text(calc.f(m)) + " vs series " +
                             render_schur_text(genseries_oracle(m));
        }
    }
    for (int n = 5; n <= max_n && porteous_ok; ++n) {
        if (calc.class_of(n).expansion != porteous_oracle(n)) {
            porteous_ok = false;
            counterexample = "porteous n=" + std::to_string(n) + ": recursion " +
                             render_schur_text(calc.class_of(n).expansion) + " vs porteous " +
                             render_schur_text(porteous_oracle(n));
        }
    }
    const bool ok = genseries_ok && porteous_ok;
    if (json) {
        OrderedJson j;
        j["max_n"] = max_n;
        j["genseries_ok"] = genseries_ok;
        j["porteous_ok"] = porteous_ok;
        j["ok"] = ok;
        if (!ok) j["counterexample"] = counterexample;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "recursion vs generating series, m <= " << max_n - 5 << ": "
                  << (genseries_ok ? "ok" : "FAIL") << "\n"
                  << "recursion vs porteous, 5 <= n <= " << max_n << ": "
                  << (porteous_ok ? "ok" : "FAIL") << "\n";
        if (!ok) std::cout << "counterexample: " << counterexample << "\n";
    }
    return ok ? kExitOk : kExitVerificationFailure;
}

struct GeometryTally {
    long vandermonde = 0;
    long functoriality = 0;
    long positivity = 0;
    long quartics = 0;
    long rank_bound = 0;
    long rank_exact = 0;
    std::vector<std::string> failures;

    void merge(const GeometryTally& o) {
        vandermonde += o.vandermonde;
        functoriality += o.functoriality;
        positivity += o.positivity;
        quartics += o.quartics;
        rank_bound += o.rank_bound;
        rank_exact += o.rank_exact;
        failures.insert(failures.end(), o.failures.begin(), o.failures.end());
    }
};

ExactMatrix random_matrix(Rng& rng, int rows, int cols) {
    ExactMatrix M(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) M.at(i, j) = Rat(rng.draw_int(-99, 99));
    return M;
}

GeometryTally run_geometry_trial(int n, int d, uint64_t seed) {
    GeometryTally t;
    Rng rng(seed);
    const ExactMatrix W = random_matrix(rng, 2, n);
    auto fail = [&](const std::string& what, const ExactMatrix& M) {
        t.failures.push_back(what + " seed=" + std::to_string(seed) + " matrix:\n" + matrix_to_csv(M));
    };

    for (const auto& I : index_subsets(n, d + 1)) {
        if (vandermonde_check(W, d, I).equal)
            ++t.vandermonde;
        else
            fail("vandermonde I=" + subset_label(I), W);
    }

    const auto PW = pluecker_coordinates(W);
    if (!PW.all_zero()) {
        const auto rank2 = Rank2Matroid::from_bases(n, [&] {
            std::set<std::pair<int, int>> b;
            for (const auto& [I, v] : PW.coords)
                if (v != 0) b.emplace(I[0], I[1]);
            return b;
        }());
        const auto image = veronese_image_matroid(rank2, d);
        const auto P_img = pluecker_coordinates(veronese_matrix(W, d));
        const bool match = P_img.all_zero() ? image.is_empty()
                                            : (matroid_of_point(P_img).bases == image.bases);
        if (match)
            ++t.functoriality;
        else
            fail("matroid functoriality", W);
    }

    {
        // strictly increasing slopes make every Pluecker coordinate positive
        ExactMatrix pos(2, n);
        long prev = 0;
        for (int j = 0; j < n; ++j) {
            prev += 1 + rng.draw_int(0, 9);
            pos.at(0, j) = 1;
            pos.at(1, j) = Rat(prev);
        }
        bool ok = true;
        const auto P_pos = pluecker_coordinates(veronese_matrix(pos, d));
        for (const auto& [I, v] : P_pos.coords)
            if (v <= 0) ok = false;
        if (ok)
            ++t.positivity;
        else
            fail("positivity propagation", pos);
    }

    if (d == 2 && n >= 6) {
        const ExactMatrix T = sample_vdn_point(n, 2, seed);
        const auto P = pluecker_coordinates(T);
        for (const auto& I : index_subsets(n, 6)) {
            if (quartic_residual(P, I) == 0)
                ++t.quartics;
            else
                fail("quartic I=" + subset_label(I), T);
        }
        const int rank = exact_rank(veronese_matrix(T, 2));
        if (rank <= 5) {
            ++t.rank_bound;
            if (rank == 5) ++t.rank_exact;
        } else {
            fail("rank " + std::to_string(rank) + " > 5", T);
        }
    }
    return t;
}

int cmd_verify_geometry(int n, int d, uint64_t seed, int trials, bool json, bool serial) {
    if (n < d + 1) return usage_error("verify-geometry: requires --n >= d+1");
    if (d < 1) return usage_error("verify-geometry: --d must be at least 1");
    if (trials < 1) return usage_error("verify-geometry: --trials must be positive");

    std::vector<GeometryTally> slots(static_cast<size_t>(trials));
#pragma omp parallel for schedule(dynamic) if (!serial)
    for (int trial = 0; trial < trials; ++trial)
        slots[static_cast<size_t>(trial)] = run_geometry_trial(n, d, trial_seed(seed, trial));

    GeometryTally total;
    for (const auto& s : slots) total.merge(s);
    const bool ok = total.failures.empty();

    if (json) {
        OrderedJson j;
        j["n"] = n;
        j["d"] = d;
        j["seed"] = seed;
        j["trials"] = trials;
        j["vandermonde_checks"] = total.vandermonde;
        j["functoriality_checks"] = total.functoriality;
        j["positivity_checks"] = total.positivity;
        j["quartic_checks"] = total.quartics;
        j["rank_checks"] = total.rank_bound;
        j["rank_exactly_5"] = total.rank_exact;
        j["failures"] = total.failures.size();
        j["ok"] = ok;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "trials: " << trials << "\n"
                  << "vandermonde checks: " << total.vandermonde << "\n"
                  << "functoriality checks: " << total.functoriality << "\n"
                  << "positivity checks: " << total.positivity << "\n"
                  << "quartic checks: " << total.quartics << "\n"
                  << "rank checks: " << total.rank_bound << " (exactly 5: " << total.rank_exact
                  << ")\n"
                  << "ok: " << (ok ? "true" : "false") << "\n";
    }
    if (!ok) {
        std::cerr << "first counterexample:\n" << total.failures.front();
        return kExitVerificationFailure;
    }
    return kExitOk;
}

int cmd_matroid_image(const std::string& file, int d, bool json) {
    if (d < 1) return usage_error("matroid-image: --d must be at least 1");
    const Rank2Matroid M = rank2_matroid_from_file(file);
    if (d + 1 > M.n) return usage_error("matroid-image: requires d+1 <= n");
    const MatroidK img = veronese_image_matroid(M, d);
    const bool axiom = exchange_axiom_holds(img.bases);
    if (json) {
        auto j = matroid_k_json(img);
        j["empty"] = img.is_empty();
        j["exchange_axiom"] = axiom;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "n: " << img.n << "\nk: " << img.k << "\n";
        if (img.is_empty()) {
            std::cout << "empty: true\n";
        } else {
            std::cout << "bases:";
            for (const auto& I : img.bases) std::cout << " [" << subset_label(I) << "]";
            std::cout << "\n";
        }
        std::cout << "exchange_axiom: " << (axiom ? "true" : "false") << "\n";
    }
    return axiom ? kExitOk : kExitVerificationFailure;
}

int cmd_enumerate_matroids(int n, bool json) {
    if (n < 2) return usage_error("enumerate-matroids: --n must be at least 2");
    if (n > 9) return usage_error("enumerate-matroids: --n above 9 is not supported");
    const auto all = enumerate_rank2_matroids(n);
    if (json) {
        OrderedJson j;
        j["n"] = n;
        j["count"] = all.size();
        OrderedJson list = OrderedJson::array();
        for (const auto& M : all) list.push_back(rank2_matroid_json(M));
        j["matroids"] = std::move(list);
        std::cout << j.dump() << "\n";
    } else {
        for (const auto& M : all) {
            bool first = true;
            for (const auto& [a, b] : M.bases) {
                std::cout << (first ? "" : " ") << "[" << a + 1 << "," << b + 1 << "]";
                first = false;
            }
            std::cout << "\n";
        }
        std::cout << "count: " << all.size() << "\n";
    }
    return kExitOk;
}

int cmd_strata_dim(const std::string& preset, int n, int d, uint64_t seed, bool json) {
    if (n < 4) return usage_error("strata-dim: --n must be at least 4");
    Rank2Matroid M;
    if (preset == "m1")
        M = preset_m1(n);
    else if (preset == "m2")
        M = preset_m2(n);
    else if (preset == "uniform")
        M = preset_uniform(n);
    else
        return usage_error("strata-dim: --preset must be one of m1|m2|uniform");
    const int dim = strata_dimension_experiment(M, d, seed);
    if (json) {
        OrderedJson j;
        j["preset"] = preset;
        j["n"] = n;
        j["d"] = d;
        j["seed"] = seed;
        j["dim"] = dim;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "dim: " << dim << "\n";
    }
    return kExitOk;
}

int cmd_groebner_check(int cols, bool trace, bool serial, bool json) {
    if (cols < 3) return usage_error("groebner-check: --cols must be at least 3");
    if (cols > 8) return usage_error("groebner-check: --cols above 8 is not supported");
    const auto gens = minors_ideal_generators(cols);
    const LexOrder ord = LexOrder::standard(3 * cols);
    const auto rep = buchberger_check(gens, ord, {.parallel = !serial, .trace = trace});
    if (json) {
        OrderedJson j;
        j["cols"] = cols;
        j["generators"] = gens.size();
        j["pairs"] = rep.pairs_total;
        j["skipped_coprime"] = rep.pairs_skipped_coprime;
        j["reduced"] = rep.pairs_reduced;
        j["groebner"] = rep.is_groebner;
        if (rep.failing_pair)
            j["failing_pair"] = {rep.failing_pair->first, rep.failing_pair->second};
        if (trace) {
            OrderedJson t = OrderedJson::array();
            for (const auto& [i, jdx, terms] : rep.trace) t.push_back({i, jdx, terms});
            j["trace"] = std::move(t);
        }
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "generators: " << gens.size() << "\n"
                  << "pairs: " << rep.pairs_total << "\n"
                  << "skipped_coprime: " << rep.pairs_skipped_coprime << "\n"
                  << "reduced: " << rep.pairs_reduced << "\n";
        if (trace)
            for (const auto& [i, jdx, terms] : rep.trace)
                std::cout << "pair (" << i << "," << jdx << "): remainder terms " << terms << "\n";
        std::cout << "groebner: " << (rep.is_groebner ? "true" : "false") << "\n";
        if (rep.failing_pair)
            std::cout << "failing_pair: (" << rep.failing_pair->first << ","
                      << rep.failing_pair->second << ")\n";
    }
    return rep.is_groebner ? kExitOk : kExitVerificationFailure;
}

int cmd_paper_tables(bool json) {
    ClassCalculator calc;
    if (json) {
        OrderedJson j;
        OrderedJson classes = OrderedJson::array();
        for (int n = 5; n <= 9; ++n) classes.push_back(class_result_json(calc.class_of(n)));
        OrderedJson degrees = OrderedJson::array();
        for (int n = 5; n <= 10; ++n)
            degrees.push_back({{"n", n}, {"degree", calc.degree(n).get_str()}});
        j["classes"] = std::move(classes);
        j["degrees"] = std::move(degrees);
        std::cout << j.dump() << "\n";
    } else {
        for (int n = 5; n <= 9; ++n)
            std::cout << "[V(3," << n << ")] = " << render_schur_text(calc.class_of(n).expansion)
                      << "\n";
        for (int n = 5; n <= 10; ++n)
            std::cout << "deg V(3," << n << ") = " << calc.degree(n).get_str() << "\n";
    }
    return kExitOk;
}

int cmd_pluecker(const std::string& file, int d, bool json) {
    const ExactMatrix M = matrix_from_file(file);
    if (M.rows() > M.cols()) return usage_error("pluecker: matrix must have rows <= cols");
    ExactMatrix target = M;
    if (d >= 1) target = veronese_matrix(M, d);
    if (target.rows() > target.cols())
        return usage_error("pluecker: veronese image has more rows than columns");
    (void)json;  // output is a JSON map either way
    std::cout << pluecker_json(pluecker_coordinates(target)).dump() << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact classes, degrees and verification suites for the varieties V(3,n)"};
    app.require_subcommand(1);

    int n = 0, d = 2, pd = 0, cols = 6, trials = 50, max_n = 12;
    uint64_t seed = 1;
    bool json = false, timed = false, oracle = false, trace = false, serial = false;
    std::string file, preset;

    auto* c_class = app.add_subcommand("class", "Schur expansion of the class of V(3,n)");
    c_class->add_option("--n", n, "number of points")->required();
    c_class->add_flag("--json", json);
    c_class->add_flag("--time", timed, "report wall time");

    auto* c_degree = app.add_subcommand("degree", "Pluecker degree of V(3,n)");
    c_degree->add_option("--n", n)->required();
    c_degree->add_flag("--oracle", oracle, "cross-check with the skew-tableau oracle");
    c_degree->add_flag("--json", json);

    auto* c_euler = app.add_subcommand("euler", "Eulerian coefficient check for V(3,n)");
    c_euler->add_option("--n", n)->required();
    c_euler->add_flag("--json", json);

    auto* c_vclass = app.add_subcommand("verify-class", "recursion against both class oracles");
    c_vclass->add_option("--max-n", max_n)->required();
    c_vclass->add_flag("--json", json);

    auto* c_vgeo = app.add_subcommand("verify-geometry",
                                      "Vandermonde, quartic, rank and matroid checks on samples");
    c_vgeo->add_option("--n", n)->required();
    c_vgeo->add_option("--d", d);
    c_vgeo->add_option("--seed", seed);
    c_vgeo->add_option("--trials", trials);
    c_vgeo->add_flag("--serial", serial, "disable the parallel trial fan-out");
    c_vgeo->add_flag("--json", json);

    auto* c_mimage = app.add_subcommand("matroid-image", "Veronese image of a rank-2 matroid");
    c_mimage->add_option("--file", file, "matroid JSON file")->required();
    c_mimage->add_option("--d", d);
    c_mimage->add_flag("--json", json);

    auto* c_enum = app.add_subcommand("enumerate-matroids", "all rank-2 matroids on [n]");
    c_enum->add_option("--n", n)->required();
    c_enum->add_flag("--json", json);

    auto* c_strata = app.add_subcommand("strata-dim", "dimension of a Veronese stratum image");
    c_strata->add_option("--preset", preset, "m1|m2|uniform")->required();
    c_strata->add_option("--n", n)->required();
    c_strata->add_option("--d", d);
    c_strata->add_option("--seed", seed);
    c_strata->add_flag("--json", json);

    auto* c_groeb = app.add_subcommand("groebner-check",
                                       "Buchberger criterion for the theta-prime minors");
    c_groeb->add_option("--cols", cols)->required();
    c_groeb->add_flag("--trace", trace, "print each remainder's term count");
    c_groeb->add_flag("--serial", serial, "disable the parallel pair fan-out");
    c_groeb->add_flag("--json", json);

    auto* c_tables = app.add_subcommand("paper-tables", "reference tables of classes and degrees");
    c_tables->add_flag("--json", json);

    auto* c_pluecker = app.add_subcommand("pluecker", "Pluecker coordinates of a matrix file");
    c_pluecker->add_option("--file", file, "matrix CSV or JSON file")->required();
    c_pluecker->add_option("--d", pd, "apply the d-th Veronese first (0 = none)");
    c_pluecker->add_flag("--json", json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (c_class->parsed()) return cmd_class(n, json, timed);
        if (c_degree->parsed()) return cmd_degree(n, oracle, json);
        if (c_euler->parsed()) return cmd_euler(n, json);
        if (c_vclass->parsed()) return cmd_verify_class(max_n, json);
        if (c_vgeo->parsed()) return cmd_verify_geometry(n, d, seed, trials, json, serial);
        if (c_mimage->parsed()) return cmd_matroid_image(file, d, json);
        if (c_enum->parsed()) return cmd_enumerate_matroids(n, json);
        if (c_strata->parsed()) return cmd_strata_dim(preset, n, d, seed, json);
        if (c_groeb->parsed()) return cmd_groebner_check(cols, trace, serial, json);
        if (c_tables->parsed()) return cmd_paper_tables(json);
        if (c_pluecker->parsed()) return cmd_pluecker(file, pd, json);
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailure;
    }
    return kExitUsage;
}
