#include "abct/groebner.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace abct {

LexOrder LexOrder::standard(int nvars) {
    LexOrder ord;
    ord.priority.resize(static_cast<size_t>(nvars));
    for (int i = 0; i < nvars; ++i) ord.priority[static_cast<size_t>(i)] = i;
    return ord;
}

int LexOrder::compare(const Mono& a, const Mono& b) const {
    for (int v : priority) {
        const int d = a[static_cast<size_t>(v)] - b[static_cast<size_t>(v)];
        if (d != 0) return d;
    }
    return 0;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> t, const LexOrder& ord) {
    std::sort(t.begin(), t.end(),
              [&ord](const Term& x, const Term& y) { return ord.compare(x.mono, y.mono) > 0; });
    MultiPoly p;
    for (auto& term : t) {
        if (!p.terms.empty() && p.terms.back().mono == term.mono) {
            p.terms.back().coeff += term.coeff;
            if (p.terms.back().coeff == 0) p.terms.pop_back();
        } else if (term.coeff != 0) {
            p.terms.push_back(std::move(term));
        }
    }
    return p;
}

Rat MultiPoly::evaluate(const std::vector<Rat>& values) const {
    Rat acc = 0;
    for (const auto& t : terms) {
        Rat m = Rat(t.coeff);
        for (size_t v = 0; v < t.mono.size(); ++v)
            for (int e = 0; e < t.mono[v]; ++e) m *= values[v];
        acc += m;
    }
    return acc;
}

bool mono_divides(const Mono& a, const Mono& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Mono mono_lcm(const Mono& a, const Mono& b) {
    Mono m(a.size());
    for (size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
    return m;
}

bool mono_coprime(const Mono& a, const Mono& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

std::vector<MultiPoly> minors_ideal_generators(int n_cols) {
    if (n_cols < 3) throw std::invalid_argument("minors_ideal_generators requires n_cols >= 3");
    const int nvars = 3 * n_cols;
    const LexOrder ord = LexOrder::standard(nvars);
    auto var = [n_cols](int row, int col) { return row * n_cols + col; };
    // entry(r, j): degree-2 monomial in column j, rows x1x2, x1x3, x2x3
    auto entry = [&](int r, int j) {
        Mono m(static_cast<size_t>(nvars), 0);
        const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
        m[static_cast<size_t>(var(pairs[r][0], j))] += 1;
        m[static_cast<size_t>(var(pairs[r][1], j))] += 1;
        return m;
    };
    const int perm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}, {1, 0, 2}, {0, 2, 1}};
    const int sign[6] = {1, 1, 1, -1, -1, -1};

    std::vector<MultiPoly> gens;
    for (int a = 0; a < n_cols; ++a) {
        for (int b = a + 1; b < n_cols; ++b) {
            for (int c = b + 1; c < n_cols; ++c) {
                const int cols[3] = {a, b, c};
                std::vector<Term> terms;
                for (int s = 0; s < 6; ++s) {
                    Mono m(static_cast<size_t>(nvars), 0);
                    for (int r = 0; r < 3; ++r) {
                        const Mono e = entry(r, cols[perm[s][r]]);
                        for (int v = 0; v < nvars; ++v) m[static_cast<size_t>(v)] += e[static_cast<size_t>(v)];
                    }
                    terms.push_back({std::move(m), Int(sign[s])});
                }
                gens.push_back(MultiPoly::from_terms(std::move(terms), ord));
            }
        }
    }
    return gens;
}

namespace {

// p -= c * x^shift * g, with p and g sorted descending under ord
MultiPoly sub_scaled(const MultiPoly& p, const Int& c, const Mono& shift, const MultiPoly& g,
                     const LexOrder& ord) {
    MultiPoly out;
    out.terms.reserve(p.terms.size() + g.terms.size());
    size_t i = 0, j = 0;
    auto shifted = [&](size_t idx) {
        Mono m = g.terms[idx].mono;
        for (size_t v = 0; v < m.size(); ++v) m[v] += shift[v];
        return m;
    };
    Mono current = j < g.terms.size() ? shifted(j) : Mono{};
    while (i < p.terms.size() || j < g.terms.size()) {
        if (j == g.terms.size()) {
            out.terms.push_back(p.terms[i++]);
            continue;
        }
        if (i == p.terms.size()) {
            Int coeff = -c * g.terms[j].coeff;
            if (coeff != 0) out.terms.push_back({current, std::move(coeff)});
            if (++j < g.terms.size()) current = shifted(j);
            continue;
        }
        const int cmp = ord.compare(p.terms[i].mono, current);
        if (cmp > 0) {
            out.terms.push_back(p.terms[i++]);
        } else if (cmp < 0) {
            Int coeff = -c * g.terms[j].coeff;
            if (coeff != 0) out.terms.push_back({current, std::move(coeff)});
            if (++j < g.terms.size()) current = shifted(j);
        } else {
            Int coeff = p.terms[i].coeff - c * g.terms[j].coeff;
            if (coeff != 0) out.terms.push_back({p.terms[i].mono, std::move(coeff)});
            ++i;
            if (++j < g.terms.size()) current = shifted(j);
        }
    }
    return out;
}

}  // namespace

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, const LexOrder& ord) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("s_polynomial of zero polynomial");
    const Mono L = mono_lcm(f.lt().mono, g.lt().mono);
    Int cl;
    mpz_lcm(cl.get_mpz_t(), f.lt().coeff.get_mpz_t(), g.lt().coeff.get_mpz_t());
    if (cl < 0) cl = -cl;

    auto cofactor = [&](const MultiPoly& h) {
        Mono shift(L.size());
        for (size_t v = 0; v < L.size(); ++v) shift[v] = L[v] - h.lt().mono[v];
        return std::make_pair(Int(cl / h.lt().coeff), std::move(shift));
    };
    auto [cf, mf] = cofactor(f);
    auto [cg, mg] = cofactor(g);

    // (cf * x^mf) f - (cg * x^mg) g, built as 0 + first - second
    MultiPoly first;
    first.terms.reserve(f.terms.size());
    for (const auto& t : f.terms) {
        Mono m = t.mono;
        for (size_t v = 0; v < m.size(); ++v) m[v] += mf[v];
        first.terms.push_back({std::move(m), t.coeff * cf});
    }
    return sub_scaled(first, cg, mg, g, ord);
}

MultiPoly reduce(const MultiPoly& f, const std::vector<MultiPoly>& G, const LexOrder& ord) {
    for (const auto& g : G)
        if (g.is_zero()) throw std::invalid_argument("reduce: zero divisor polynomial");
    MultiPoly rem;
    MultiPoly p = f;
    while (!p.is_zero()) {
        const Term& t = p.lt();
        const MultiPoly* divisor = nullptr;
        for (const auto& g : G)
            if (mono_divides(g.lt().mono, t.mono)) {
                divisor = &g;
                break;
            }
        if (divisor == nullptr) {
            rem.terms.push_back(t);
            p.terms.erase(p.terms.begin());
            continue;
        }
        if (t.coeff % divisor->lt().coeff != 0)
            throw std::domain_error("reduce: leading coefficient does not divide (non-integral step)");
        Mono shift(t.mono.size());
        for (size_t v = 0; v < shift.size(); ++v) shift[v] = t.mono[v] - divisor->lt().mono[v];
        p = sub_scaled(p, t.coeff / divisor->lt().coeff, shift, *divisor, ord);
    }
    return rem;
}

BuchbergerReport buchberger_check(const std::vector<MultiPoly>& G, const LexOrder& ord,
                                  const BuchbergerOptions& opts) {
    if (G.empty()) throw std::invalid_argument("buchberger_check requires a nonempty basis");
    const int m = static_cast<int>(G.size());
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) pairs.emplace_back(i, j);

    BuchbergerReport rep;
    rep.pairs_total = static_cast<long>(pairs.size());

    std::vector<int> skipped(pairs.size(), 0);
    std::vector<int> failed(pairs.size(), 0);
    std::vector<long> rem_terms(pairs.size(), 0);

    const long npairs = static_cast<long>(pairs.size());
    bool had_error = false;
    std::string first_error;
#pragma omp parallel for schedule(dynamic) if (opts.parallel)
    for (long idx = 0; idx < npairs; ++idx) {
        try {
            const auto [i, j] = pairs[static_cast<size_t>(idx)];
            if (mono_coprime(G[static_cast<size_t>(i)].lt().mono, G[static_cast<size_t>(j)].lt().mono)) {
                skipped[static_cast<size_t>(idx)] = 1;
                continue;
            }
            const MultiPoly rem =
                reduce(s_polynomial(G[static_cast<size_t>(i)], G[static_cast<size_t>(j)], ord), G, ord);
            rem_terms[static_cast<size_t>(idx)] = rem.term_count();
            if (!rem.is_zero()) failed[static_cast<size_t>(idx)] = 1;
        } catch (const std::exception& e) {
            // exceptions must not escape the worker threads
#pragma omp critical
            {
                if (!had_error) first_error = e.what();
                had_error = true;
            }
        }
    }
    if (had_error) throw std::domain_error(first_error);

    rep.is_groebner = true;
    for (size_t idx = 0; idx < pairs.size(); ++idx) {
        if (skipped[idx]) {
            ++rep.pairs_skipped_coprime;
            continue;
        }
        ++rep.pairs_reduced;
        if (opts.trace)
            rep.trace.emplace_back(pairs[idx].first + 1, pairs[idx].second + 1, rem_terms[idx]);
        if (failed[idx] && rep.is_groebner) {
            rep.is_groebner = false;
            rep.failing_pair = {pairs[idx].first + 1, pairs[idx].second + 1};
        }
    }
    return rep;
}

}  // namespace abct
