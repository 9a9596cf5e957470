#include "abct/matroid.hpp"

#include <algorithm>
#include <stdexcept>

namespace abct {

Rank2Matroid Rank2Matroid::from_classes(int n, const std::vector<std::vector<int>>& classes) {
    if (classes.size() < 2)
        throw std::invalid_argument("rank-2 matroid needs at least two parallel classes");
    std::vector<int> cls(static_cast<size_t>(n), -1);
    for (size_t c = 0; c < classes.size(); ++c) {
        if (classes[c].empty()) throw std::invalid_argument("empty parallel class");
        for (int e : classes[c]) {
            if (e < 0 || e >= n || cls[static_cast<size_t>(e)] != -1)
                throw std::invalid_argument("parallel classes must be disjoint subsets of the ground set");
            cls[static_cast<size_t>(e)] = static_cast<int>(c);
        }
    }
    Rank2Matroid M;
    M.n = n;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (cls[static_cast<size_t>(a)] >= 0 && cls[static_cast<size_t>(b)] >= 0 &&
                cls[static_cast<size_t>(a)] != cls[static_cast<size_t>(b)])
                M.bases.emplace(a, b);
    return M;
}

Rank2Matroid Rank2Matroid::from_bases(int n, std::set<std::pair<int, int>> bases) {
    if (bases.empty()) throw std::invalid_argument("rank-2 matroid needs a nonempty basis set");
    for (const auto& [a, b] : bases)
        if (a < 0 || b <= a || b >= n) throw std::invalid_argument("basis pair out of range");
    if (!exchange_axiom_holds(bases)) throw std::invalid_argument("exchange axiom fails");
    Rank2Matroid M;
    M.n = n;
    M.bases = std::move(bases);
    return M;
}

std::vector<int> Rank2Matroid::loops() const {
    std::vector<bool> covered(static_cast<size_t>(n), false);
    for (const auto& [a, b] : bases) covered[static_cast<size_t>(a)] = covered[static_cast<size_t>(b)] = true;
    std::vector<int> out;
    for (int e = 0; e < n; ++e)
        if (!covered[static_cast<size_t>(e)]) out.push_back(e);
    return out;
}

std::vector<std::vector<int>> Rank2Matroid::parallel_classes() const {
    // non-loops a, b are parallel iff {a,b} is not a basis
    std::vector<bool> covered(static_cast<size_t>(n), false);
    for (const auto& [a, b] : bases) covered[static_cast<size_t>(a)] = covered[static_cast<size_t>(b)] = true;
    std::vector<int> cls(static_cast<size_t>(n), -1);
    std::vector<std::vector<int>> out;
    for (int e = 0; e < n; ++e) {
        if (!covered[static_cast<size_t>(e)] || cls[static_cast<size_t>(e)] >= 0) continue;
        std::vector<int> group{e};
        cls[static_cast<size_t>(e)] = static_cast<int>(out.size());
        for (int f = e + 1; f < n; ++f)
            if (covered[static_cast<size_t>(f)] && !has_basis(e, f)) {
                group.push_back(f);
                cls[static_cast<size_t>(f)] = static_cast<int>(out.size());
            }
        out.push_back(std::move(group));
    }
    return out;
}

MatroidK Rank2Matroid::as_matroid_k() const {
    MatroidK M;
    M.n = n;
    M.k = 2;
    for (const auto& [a, b] : bases) M.bases.insert(IndexSet{a, b});
    return M;
}

bool exchange_axiom_holds(const std::set<IndexSet>& bases) {
    if (bases.size() <= 1) return true;
    for (const auto& I : bases) {
        for (const auto& J : bases) {
            for (int a : I) {
                if (std::binary_search(J.begin(), J.end(), a)) continue;
                bool found = false;
                for (int b : J) {
                    if (std::binary_search(I.begin(), I.end(), b)) continue;
                    IndexSet K;
                    for (int x : I)
                        if (x != a) K.push_back(x);
                    K.push_back(b);
                    std::sort(K.begin(), K.end());
                    if (bases.count(K)) {
                        found = true;
                        break;
                    }
                }
                if (!found) return false;
            }
        }
    }
    return true;
}

bool exchange_axiom_holds(const std::set<std::pair<int, int>>& bases) {
    std::set<IndexSet> s;
    for (const auto& [a, b] : bases) s.insert(IndexSet{a, b});
    return exchange_axiom_holds(s);
}

MatroidK matroid_of_point(const PlueckerVector& P) {
    if (P.all_zero()) throw std::invalid_argument("matroid_of_point: zero Pluecker vector");
    MatroidK M;
    M.n = P.n;
    M.k = P.k;
    for (const auto& [I, v] : P.coords)
        if (v != 0) M.bases.insert(I);
    return M;
}

MatroidK veronese_image_matroid(const Rank2Matroid& M, int d) {
    if (d + 1 > M.n) throw std::invalid_argument("veronese_image_matroid requires d+1 <= n");
    MatroidK out;
    out.n = M.n;
    out.k = d + 1;
    for (const auto& I : index_subsets(M.n, d + 1)) {
        bool ok = true;
        for (size_t a = 0; a < I.size() && ok; ++a)
            for (size_t b = a + 1; b < I.size() && ok; ++b)
                ok = M.has_basis(I[a], I[b]);
        if (ok) out.bases.insert(I);
    }
    if (!exchange_axiom_holds(out.bases))
        throw std::logic_error("veronese image violates the exchange axiom");
    return out;
}

namespace {

// set partitions of `elems` into at least two blocks, via restricted
// growth strings
void set_partitions_min2(const std::vector<int>& elems,
                         const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
    const size_t m = elems.size();
    std::vector<int> rgs(m, 0);
    auto blocks_of = [&]() {
        int nb = *std::max_element(rgs.begin(), rgs.end()) + 1;
        std::vector<std::vector<int>> blocks(static_cast<size_t>(nb));
        for (size_t i = 0; i < m; ++i) blocks[static_cast<size_t>(rgs[i])].push_back(elems[i]);
        return blocks;
    };
    while (true) {
        auto blocks = blocks_of();
        if (blocks.size() >= 2) emit(blocks);
        // next restricted growth string
        size_t i = m;
        while (i-- > 1) {
            const int maxPrefix = *std::max_element(rgs.begin(), rgs.begin() + static_cast<long>(i));
            if (rgs[i] <= maxPrefix) {
                ++rgs[i];
                std::fill(rgs.begin() + static_cast<long>(i) + 1, rgs.end(), 0);
                break;
            }
        }
        if (i == 0) break;
    }
}

}  // namespace

std::vector<Rank2Matroid> enumerate_rank2_matroids(int n) {
    if (n < 2) throw std::invalid_argument("enumerate_rank2_matroids requires n >= 2");
    std::vector<Rank2Matroid> out;
    for (unsigned long loopmask = 0; loopmask < (1ul << n); ++loopmask) {
        std::vector<int> nonloops;
        for (int e = 0; e < n; ++e)
            if (!(loopmask & (1ul << e))) nonloops.push_back(e);
        if (nonloops.size() < 2) continue;
        set_partitions_min2(nonloops, [&](const std::vector<std::vector<int>>& blocks) {
            out.push_back(Rank2Matroid::from_classes(n, blocks));
        });
    }
    return out;
}

Parameterization matroid_cell_param(const Rank2Matroid& M) {
    const auto classes = M.parallel_classes();
    const int n = M.n;
    std::vector<int> class_of(static_cast<size_t>(n), -1);
    for (size_t c = 0; c < classes.size(); ++c)
        for (int e : classes[c]) class_of[static_cast<size_t>(e)] = static_cast<int>(c);
    std::vector<int> scalar_index(static_cast<size_t>(n), -1);
    int nonloops = 0;
    for (int e = 0; e < n; ++e)
        if (class_of[static_cast<size_t>(e)] >= 0) scalar_index[static_cast<size_t>(e)] = nonloops++;

    Parameterization p;
    p.n = n;
    p.param_count = 2 * static_cast<int>(classes.size()) + nonloops;
    const int scalars_base = 2 * static_cast<int>(classes.size());
    p.build = [n, class_of, scalar_index, scalars_base](const std::vector<Jet>& t) {
        const size_t params = t.empty() ? 0 : t[0].g.size();
        JetMatrix m(2, std::vector<Jet>(static_cast<size_t>(n), Jet(Rat(0), params)));
        for (int e = 0; e < n; ++e) {
            const int c = class_of[static_cast<size_t>(e)];
            if (c < 0) continue;  // loop: zero column
            const Jet& scale = t[static_cast<size_t>(scalars_base + scalar_index[static_cast<size_t>(e)])];
            m[0][static_cast<size_t>(e)] = scale * t[static_cast<size_t>(2 * c)];
            m[1][static_cast<size_t>(e)] = scale * t[static_cast<size_t>(2 * c + 1)];
        }
        return m;
    };
    return p;
}

int strata_dimension_experiment(const Rank2Matroid& M, int d, uint64_t seed) {
    if (M.bases.empty()) throw std::invalid_argument("strata_dimension_experiment: empty matroid");
    Rng rng(seed);
    const Parameterization p = matroid_cell_param(M);
    return image_dimension_sampled(p, d, rng, 3);
}

Rank2Matroid preset_m1(int n) {
    std::vector<std::vector<int>> classes;
    for (int e = 1; e < n; ++e) classes.push_back({e});
    return Rank2Matroid::from_classes(n, classes);
}

Rank2Matroid preset_m2(int n) {
    if (n < 4) throw std::invalid_argument("preset_m2 requires n >= 4");
    std::vector<std::vector<int>> classes;
    for (int e = 1; e < n - 2; ++e) classes.push_back({e});
    classes.push_back({n - 2, n - 1});
    return Rank2Matroid::from_classes(n, classes);
}

Rank2Matroid preset_uniform(int n) {
    std::vector<std::vector<int>> classes;
    for (int e = 0; e < n; ++e) classes.push_back({e});
    return Rank2Matroid::from_classes(n, classes);
}

}  // namespace abct
