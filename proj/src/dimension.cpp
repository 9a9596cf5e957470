#include "abct/dimension.hpp"

#include <algorithm>

namespace abct {

Jet jet_determinant(const JetMatrix& m) {
    const size_t n = m.size();
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    const size_t params = m[0][0].g.size();
    Jet acc(Rat(0), params);
    for (size_t j = 0; j < n; ++j) {
        JetMatrix sub(n - 1);
        for (size_t i = 1; i < n; ++i)
            for (size_t t = 0; t < n; ++t)
                if (t != j) sub[i - 1].push_back(m[i][t]);
        Jet term = m[0][j] * jet_determinant(sub);
        if (j % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

Parameterization full_grassmannian_param(int n) {
    Parameterization p;
    p.n = n;
    p.param_count = 2 * n;
    p.build = [n](const std::vector<Jet>& t) {
        JetMatrix m(2, std::vector<Jet>(static_cast<size_t>(n)));
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < n; ++j) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = t[static_cast<size_t>(i * n + j)];
        return m;
    };
    return p;
}

namespace {

// columnwise Veronese on a 2 x n jet matrix
JetMatrix jet_veronese(const JetMatrix& W, int d) {
    const size_t n = W[0].size();
    const size_t params = W[0][0].g.size();
    JetMatrix V(static_cast<size_t>(d + 1), std::vector<Jet>(n, Jet(Rat(0), params)));
    for (size_t j = 0; j < n; ++j) {
        for (int r = 0; r <= d; ++r) {
            Jet v(Rat(1), params);
            for (int e = 0; e < d - r; ++e) v = v * W[0][j];
            for (int e = 0; e < r; ++e) v = v * W[1][j];
            V[static_cast<size_t>(r)][j] = v;
        }
    }
    return V;
}

}  // namespace

int image_dimension(const Parameterization& param, int d, const std::vector<Rat>& point) {
    if (static_cast<int>(point.size()) != param.param_count)
        throw std::invalid_argument("image_dimension: wrong parameter count");
    const size_t np = point.size();
    std::vector<Jet> t;
    t.reserve(np);
    for (size_t i = 0; i < np; ++i) t.push_back(Jet::parameter(point[i], np, i));

    const JetMatrix V = jet_veronese(param.build(t), d);
    const int k = d + 1;

    std::vector<Jet> minors;
    for (const auto& I : index_subsets(param.n, k)) {
        JetMatrix sub(static_cast<size_t>(k), std::vector<Jet>(static_cast<size_t>(k)));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                sub[static_cast<size_t>(i)][static_cast<size_t>(j)] = V[static_cast<size_t>(i)][static_cast<size_t>(I[static_cast<size_t>(j)])];
        minors.push_back(jet_determinant(sub));
    }

    // lex-smallest chart with nonzero Pluecker value at the base point
    size_t chart = minors.size();
    for (size_t i = 0; i < minors.size(); ++i)
        if (minors[i].v != 0) {
            chart = i;
            break;
        }
    if (chart == minors.size()) throw ChartError("all Pluecker coordinates vanish at the base point");

    ExactMatrix jac(static_cast<int>(minors.size()) - 1, static_cast<int>(np));
    int row = 0;
    for (size_t i = 0; i < minors.size(); ++i) {
        if (i == chart) continue;
        const Jet q = minors[i] / minors[chart];
        for (size_t c = 0; c < np; ++c) jac.at(row, static_cast<int>(c)) = q.g[c];
        ++row;
    }
    return exact_rank(jac);
}

int image_dimension_sampled(const Parameterization& param, int d, Rng& rng, int attempts) {
    int best = -1;
    int budget = attempts * 8;
    for (int done = 0; done < attempts && budget > 0; --budget) {
        std::vector<Rat> point;
        point.reserve(static_cast<size_t>(param.param_count));
        for (int i = 0; i < param.param_count; ++i) point.emplace_back(rng.draw_nonzero(99));
        try {
            best = std::max(best, image_dimension(param, d, point));
            ++done;
        } catch (const ChartError&) {
            // degenerate point, draw again
        }
    }
    if (best < 0) throw ChartError("no chart found after retry budget");
    return best;
}

}  // namespace abct
