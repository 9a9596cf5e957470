#include "abct/classes.hpp"

#include <algorithm>
#include <stdexcept>

namespace abct {

std::array<ChernRootForm, 6> squared_bundle_roots() {
    return {ChernRootForm{{2, 0, 0}}, ChernRootForm{{0, 2, 0}}, ChernRootForm{{0, 0, 2}},
            ChernRootForm{{1, 1, 0}}, ChernRootForm{{1, 0, 1}}, ChernRootForm{{0, 1, 1}}};
}

const SchurExpansion& ClassCalculator::f(int m) {
    if (m < 0) throw std::invalid_argument("f_m requires m >= 0");
    if (memo_.empty()) {
        memo_.push_back(SchurExpansion::unit());
        memo_.push_back(SchurExpansion::single(Partition(1), 4));
        SchurExpansion f2 = SchurExpansion::single(Partition(2), 11);
        f2.add_term(Partition(1, 1), 6);
        memo_.push_back(std::move(f2));
    }
    const SchurExpansion s2_2s11 = [] {
        SchurExpansion e = SchurExpansion::single(Partition(2));
        e.add_term(Partition(1, 1), 2);
        return e;
    }();
    const SchurExpansion s21 = SchurExpansion::single(Partition(2, 1));
    while (static_cast<int>(memo_.size()) <= m) {
        const int k = static_cast<int>(memo_.size());
        SchurExpansion fk = pieri_mul(memo_[k - 1], 1) * 2;
        fk -= schur_mul(memo_[k - 2], s2_2s11);
        fk += schur_mul(memo_[k - 3], s21);
        fk.add_term(Partition(k), pow2(k));
        memo_.push_back(std::move(fk));
    }
    return memo_[static_cast<size_t>(m)];
}

ClassResult ClassCalculator::class_of(int n) {
    if (n < 5) throw std::invalid_argument("abct_class requires n >= 5");
    ClassResult r{n, n - 5, f(n - 5)};
    // lambda1 <= n-5 < n-3, so this cannot fire; kept as a hard invariant
    for (const auto& [p, c] : r.expansion.terms())
        if (!p.fits_width(n - 3)) throw std::logic_error("class term outside the 3 x (n-3) box");
    return r;
}

Int ClassCalculator::degree(int n) {
    if (n < 5) throw std::invalid_argument("pluecker_degree requires n >= 5");
    const int width = n - 3;
    SchurExpansion e = f(n - 5);
    for (int step = 0; step < 2 * n - 4; ++step) {
        const SchurExpansion grown = pieri_mul(e, 1);
        SchurExpansion next;
        // partitions outside the 3 x (n-3) box vanish in H*(G(3,n)) and
        // can never re-enter it by adding boxes, so drop them each step
        for (const auto& [p, c] : grown.terms())
            if (p.fits_width(width)) next.add_term(p, c);
        e = std::move(next);
    }
    return e.coeff(Partition(width, width, width));
}

SchurExpansion abct_recursion(int m) {
    ClassCalculator calc;
    return calc.f(m);
}

ClassResult abct_class(int n) {
    ClassCalculator calc;
    return calc.class_of(n);
}

namespace {

// truncated power series in t with SymPoly3 coefficients
using Series = std::vector<SymPoly3>;

Series series_product(const Series& a, const Series& b, int max_deg) {
    Series c(static_cast<size_t>(max_deg) + 1);
    for (int i = 0; i <= max_deg; ++i) {
        if (a[static_cast<size_t>(i)].is_zero()) continue;
        for (int j = 0; i + j <= max_deg; ++j)
            c[static_cast<size_t>(i + j)] += a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
    }
    return c;
}

// geometric series 1/(1 - root t) truncated at t^max_deg
Series geometric_series(const SymPoly3& root, int max_deg) {
    Series s(static_cast<size_t>(max_deg) + 1);
    s[0] = SymPoly3::constant(1);
    for (int j = 1; j <= max_deg; ++j)
        s[static_cast<size_t>(j)] = s[static_cast<size_t>(j - 1)] * root;
    return s;
}

}  // namespace

SchurExpansion genseries_oracle(int m) {
    if (m < 0) throw std::invalid_argument("genseries_oracle requires m >= 0");
    Series prod(static_cast<size_t>(m) + 1);
    prod[0] = SymPoly3::constant(1);
    for (const auto& root : squared_bundle_roots())
        prod = series_product(prod, geometric_series(root.to_poly(), m), m);
    return decompose_to_schur(prod[static_cast<size_t>(m)]);
}

SchurExpansion porteous_oracle(int n) {
    if (n < 5) throw std::invalid_argument("porteous_oracle requires n >= 5");
    const int m = n - 5;
    // E[k] = coefficient of t^k in prod_i (1 - beta_i t), i.e. (-1)^k e_k(beta)
    std::vector<SymPoly3> E(7);
    E[0] = SymPoly3::constant(1);
    std::vector<SymPoly3> next(7);
    int used = 0;
    for (const auto& root : squared_bundle_roots()) {
        ++used;
        for (int k = 0; k <= used; ++k) {
            next[static_cast<size_t>(k)] = E[static_cast<size_t>(k)];
            if (k > 0) next[static_cast<size_t>(k)] -= E[static_cast<size_t>(k - 1)] * root.to_poly();
        }
        E = next;
    }
    // h_m from sum_{k=0}^{min(m,6)} E[k] h_{m-k} = 0 for m >= 1
    std::vector<SymPoly3> h(static_cast<size_t>(m) + 1);
    h[0] = SymPoly3::constant(1);
    for (int d = 1; d <= m; ++d) {
        SymPoly3 acc;
        for (int k = 1; k <= std::min(d, 6); ++k)
            acc -= E[static_cast<size_t>(k)] * h[static_cast<size_t>(d - k)];
        h[static_cast<size_t>(d)] = std::move(acc);
    }
    return decompose_to_schur(h[static_cast<size_t>(m)]);
}

Int pluecker_degree(int n) {
    ClassCalculator calc;
    return calc.degree(n);
}

Int syt_skew_count(const Partition& lambda, const Partition& mu) {
    for (int i = 0; i < 3; ++i)
        if (mu[i] > lambda[i]) return 0;
    const int boxes = lambda.size() - mu.size();
    if (boxes == 0) return 1;
    auto inv_fact = [](int a) -> Rat {
        if (a < 0) return Rat(0);
        return Rat(1) / Rat(factorial(static_cast<unsigned long>(a)));
    };
    Rat cells[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) cells[i][j] = inv_fact(lambda[i] - mu[j] - i + j);
    Rat det = cells[0][0] * (cells[1][1] * cells[2][2] - cells[1][2] * cells[2][1]) -
              cells[0][1] * (cells[1][0] * cells[2][2] - cells[1][2] * cells[2][0]) +
              cells[0][2] * (cells[1][0] * cells[2][1] - cells[1][1] * cells[2][0]);
    Rat count = Rat(factorial(static_cast<unsigned long>(boxes))) * det;
    if (count.get_den() != 1) throw std::logic_error("syt_skew_count: non-integer determinant");
    return count.get_num();
}

Int degree_skew_oracle(int n) {
    if (n < 5) throw std::invalid_argument("degree_skew_oracle requires n >= 5");
    const int w = n - 3;
    const Partition rect(w, w, w);
    const SchurExpansion cls = abct_recursion(n - 5);
    Int total = 0;
    for (const auto& [mu, c] : cls.terms()) total += c * syt_skew_count(rect, mu);
    return total;
}

Int eulerian_number(int n, int k) {
    if (n < 1 || k < 0 || k >= n)
        throw std::invalid_argument("eulerian_number requires 0 <= k < n");
    std::vector<Int> row{1};  // A(1, *)
    for (int i = 2; i <= n; ++i) {
        std::vector<Int> next(static_cast<size_t>(i), 0);
        for (int j = 0; j < i; ++j) {
            Int v = 0;
            if (j < i - 1) v += Int(j + 1) * row[static_cast<size_t>(j)];
            if (j > 0) v += Int(i - j) * row[static_cast<size_t>(j - 1)];
            next[static_cast<size_t>(j)] = v;
        }
        row = std::move(next);
    }
    return row[static_cast<size_t>(k)];
}

EulerCheck euler_coefficient_check(int n) {
    if (n < 5) throw std::invalid_argument("euler_coefficient_check requires n >= 5");
    EulerCheck r;
    r.coeff = abct_class(n).expansion.coeff(Partition(n - 5));
    r.closed_form = pow2(static_cast<unsigned long>(n - 3)) - Int(n - 2);
    r.eulerian = eulerian_number(n - 3, 1);
    r.all_equal = (r.coeff == r.closed_form) && (r.coeff == r.eulerian);
    return r;
}

}  // namespace abct
