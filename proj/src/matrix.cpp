#include "abct/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace abct {

std::vector<IndexSet> index_subsets(int n, int k) {
    std::vector<IndexSet> out;
    if (k < 0 || k > n) return out;
    IndexSet cur(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) cur[static_cast<size_t>(i)] = i;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++cur[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j) cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)] + 1;
    }
    return out;
}

bool PlueckerVector::all_zero() const {
    return std::all_of(coords.begin(), coords.end(),
                       [](const auto& t) { return t.second == 0; });
}

std::vector<std::vector<int>> monomial_index(int k, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> exp(static_cast<size_t>(k), 0);
    // descending lex = reverse of the colex enumeration below, built directly
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == k - 1) {
            exp[static_cast<size_t>(pos)] = remaining;
            out.push_back(exp);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            exp[static_cast<size_t>(pos)] = e;
            self(self, pos + 1, remaining - e);
        }
    };
    rec(rec, 0, d);
    return out;
}

ExactMatrix veronese_matrix(const ExactMatrix& M, int d) {
    if (d < 1) throw std::invalid_argument("veronese_matrix requires d >= 1");
    const auto mons = monomial_index(M.rows(), d);
    ExactMatrix V(static_cast<int>(mons.size()), M.cols());
    for (int j = 0; j < M.cols(); ++j) {
        for (size_t r = 0; r < mons.size(); ++r) {
            Rat v = 1;
            for (int i = 0; i < M.rows(); ++i)
                for (int e = 0; e < mons[r][static_cast<size_t>(i)]; ++e) v *= M.at(i, j);
            V.at(static_cast<int>(r), j) = v;
        }
    }
    return V;
}

ExactMatrix theta_prime_matrix(const ExactMatrix& chart, int d) {
    if (d < 2) throw std::invalid_argument("theta_prime_matrix requires d >= 2");
    const int k = chart.rows();
    std::vector<std::vector<int>> mons;
    for (const auto& m : monomial_index(k, d))
        if (std::count(m.begin(), m.end(), d) == 0) mons.push_back(m);
    ExactMatrix V(static_cast<int>(mons.size()), chart.cols());
    for (int j = 0; j < chart.cols(); ++j) {
        for (size_t r = 0; r < mons.size(); ++r) {
            Rat v = 1;
            for (int i = 0; i < k; ++i)
                for (int e = 0; e < mons[r][static_cast<size_t>(i)]; ++e) v *= chart.at(i, j);
            V.at(static_cast<int>(r), j) = v;
        }
    }
    return V;
}

int exact_rank(const ExactMatrix& M) {
    const int rows = M.rows(), cols = M.cols();
    std::vector<std::vector<Rat>> a(static_cast<size_t>(rows), std::vector<Rat>(static_cast<size_t>(cols)));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) a[static_cast<size_t>(i)][static_cast<size_t>(j)] = M.at(i, j);

    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i)
            if (a[static_cast<size_t>(i)][static_cast<size_t>(col)] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[static_cast<size_t>(pivot)], a[static_cast<size_t>(rank)]);
        const Rat p = a[static_cast<size_t>(rank)][static_cast<size_t>(col)];
        for (int i = rank + 1; i < rows; ++i) {
            const Rat factor = a[static_cast<size_t>(i)][static_cast<size_t>(col)] / p;
            if (factor == 0) continue;
            for (int j = col; j < cols; ++j)
                a[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
                    factor * a[static_cast<size_t>(rank)][static_cast<size_t>(j)];
        }
        ++rank;
    }
    return rank;
}

namespace {

Rat det_laplace(const ExactMatrix& M, const std::vector<int>& rows, const std::vector<int>& cols) {
    const size_t n = rows.size();
    if (n == 1) return M.at(rows[0], cols[0]);
    if (n == 2)
        return M.at(rows[0], cols[0]) * M.at(rows[1], cols[1]) -
               M.at(rows[0], cols[1]) * M.at(rows[1], cols[0]);
    Rat acc = 0;
    std::vector<int> sub(rows.begin() + 1, rows.end());
    for (size_t j = 0; j < n; ++j) {
        if (M.at(rows[0], cols[j]) == 0) continue;
        std::vector<int> subcols;
        for (size_t t = 0; t < n; ++t)
            if (t != j) subcols.push_back(cols[t]);
        Rat term = M.at(rows[0], cols[j]) * det_laplace(M, sub, subcols);
        if (j % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

Rat det_elimination(std::vector<std::vector<Rat>> a) {
    const size_t n = a.size();
    Rat det = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return Rat(0);
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (size_t i = col + 1; i < n; ++i) {
            if (a[i][col] == 0) continue;
            const Rat factor = a[i][col] / a[col][col];
            for (size_t j = col; j < n; ++j) a[i][j] -= factor * a[col][j];
        }
    }
    return det;
}

Rat minor_of(const ExactMatrix& M, const IndexSet& cols) {
    const int k = static_cast<int>(cols.size());
    if (k <= 3) {
        std::vector<int> rows(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) rows[static_cast<size_t>(i)] = i;
        return det_laplace(M, rows, cols);
    }
    std::vector<std::vector<Rat>> a(static_cast<size_t>(k), std::vector<Rat>(static_cast<size_t>(k)));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) a[static_cast<size_t>(i)][static_cast<size_t>(j)] = M.at(i, cols[static_cast<size_t>(j)]);
    return det_elimination(std::move(a));
}

}  // namespace

Rat determinant(const ExactMatrix& M) {
    if (M.rows() != M.cols()) throw std::invalid_argument("determinant requires a square matrix");
    IndexSet cols(static_cast<size_t>(M.cols()));
    for (int j = 0; j < M.cols(); ++j) cols[static_cast<size_t>(j)] = j;
    return minor_of(M, cols);
}

PlueckerVector pluecker_coordinates(const ExactMatrix& M) {
    if (M.rows() > M.cols())
        throw std::invalid_argument("pluecker_coordinates requires k <= n");
    PlueckerVector P;
    P.k = M.rows();
    P.n = M.cols();
    for (const auto& I : index_subsets(M.cols(), M.rows())) P.coords.emplace(I, minor_of(M, I));
    return P;
}

ZMembership z_membership(const ExactMatrix& M, int d) {
    const Int expected = binomial(static_cast<unsigned long>(d + M.rows() - 1), static_cast<unsigned long>(d));
    if (Int(M.cols()) < expected) return {true, true};
    return {exact_rank(veronese_matrix(M, d)) < expected.get_si(), false};
}

Rat quartic_residual(const PlueckerVector& P, const IndexSet& I) {
    if (P.k != 3) throw std::invalid_argument("quartic_residual requires k = 3");
    if (I.size() != 6) throw std::invalid_argument("quartic_residual requires a 6-subset");
    auto p = [&](int a, int b, int c) { return P.at({I[static_cast<size_t>(a)], I[static_cast<size_t>(b)], I[static_cast<size_t>(c)]}); };
    return p(0, 1, 2) * p(0, 4, 5) * p(1, 3, 5) * p(2, 3, 4) -
           p(1, 2, 3) * p(0, 1, 5) * p(0, 2, 4) * p(3, 4, 5);
}

VandermondeCheck vandermonde_check(const ExactMatrix& W, int d, const IndexSet& I) {
    if (W.rows() != 2) throw std::invalid_argument("vandermonde_check requires a 2 x n matrix");
    if (static_cast<int>(I.size()) != d + 1)
        throw std::invalid_argument("vandermonde_check requires a (d+1)-subset");
    VandermondeCheck r;
    r.lhs = minor_of(veronese_matrix(W, d), I);
    r.rhs = 1;
    for (size_t a = 0; a < I.size(); ++a)
        for (size_t b = a + 1; b < I.size(); ++b)
            r.rhs *= W.at(0, I[a]) * W.at(1, I[b]) - W.at(0, I[b]) * W.at(1, I[a]);
    r.equal = (r.lhs == r.rhs);
    return r;
}

bool chart_rank_equivalence(const ExactMatrix& chart, int n) {
    if (chart.rows() != 3 || chart.cols() != n - 3 || n < 6)
        throw std::invalid_argument("chart_rank_equivalence requires a 3 x (n-3) chart, n >= 6");
    ExactMatrix full(3, n);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < n - 3; ++j) full.at(i, j) = chart.at(i, j);
        full.at(i, n - 3 + i) = 1;
    }
    const bool full_deficient = exact_rank(veronese_matrix(full, 2)) < 6;
    const bool prime_deficient = exact_rank(theta_prime_matrix(chart, 2)) < 3;
    return full_deficient == prime_deficient;
}

ExactMatrix sample_vdn_point(int n, int d, uint64_t seed) {
    if (n < d + 1) throw std::invalid_argument("sample_vdn_point requires n >= d+1");
    Rng rng(seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        ExactMatrix W(2, n);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < n; ++j) W.at(i, j) = Rat(rng.draw_int(-99, 99));
        ExactMatrix T = veronese_matrix(W, d);
        if (exact_rank(T) == d + 1) return T;
    }
    throw std::runtime_error("sample_vdn_point: degenerate random source");
}

}  // namespace abct
