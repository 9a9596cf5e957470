#pragma once

#include <array>
#include <vector>

#include "abct/symfunc.hpp"

namespace abct {

/// Cohomology class of V(3,n) in G(3,n): the expansion is f_{n-5},
/// homogeneous of degree codim = n-5.
struct ClassResult {
    int n = 0;
    int codim = 0;
    SchurExpansion expansion;
};

/// Integer linear form c1*a1 + c2*a2 + c3*a3 in the Chern roots of the
/// dual tautological bundle.
struct ChernRootForm {
    std::array<int, 3> coefficients{0, 0, 0};
    SymPoly3 to_poly() const {
        return SymPoly3::linear(coefficients[0], coefficients[1], coefficients[2]);
    }
};

/// The six Chern roots of Sym^2 of the dual tautological bundle:
/// 2a1, 2a2, 2a3, a1+a2, a1+a3, a2+a3.
std::array<ChernRootForm, 6> squared_bundle_roots();

/// Memoized evaluation of the recursion
///   f_0 = 1, f_1 = 4 s_1, f_2 = 11 s_2 + 6 s_{1,1},
///   f_m = 2 s_1 f_{m-1} - (s_2 + 2 s_{1,1}) f_{m-2} + s_{2,1} f_{m-3} + 2^m s_m.
/// One instance computes each f_m exactly once. Not thread safe; use
/// one instance per thread (all returned values are immutable).
class ClassCalculator {
public:
    const SchurExpansion& f(int m);
    ClassResult class_of(int n);
    Int degree(int n);

private:
    std::vector<SchurExpansion> memo_;
};

SchurExpansion abct_recursion(int m);

/// Class of V(3,n); throws std::invalid_argument for n < 5.
ClassResult abct_class(int n);

/// Coefficient of t^m in the generating series
/// prod_i 1/(1-2x_i t) * prod_{i<j} 1/(1-(x_i+x_j)t), decomposed into
/// the Schur basis. Independent check of abct_recursion.
SchurExpansion genseries_oracle(int m);

/// h_{n-5} evaluated at the six squared-bundle Chern roots, obtained
/// from the elementary symmetric polynomials e_k(beta) through the
/// Jacobi-Trudi relation h_m = sum_k (-1)^{k-1} e_k h_{m-k}.
SchurExpansion porteous_oracle(int n);

/// Degree of V(3,n) under the Pluecker embedding: the coefficient of
/// s_{(n-3)^3} in f_{n-5} * s_1^{2n-4}.
Int pluecker_degree(int n);

/// Same degree via skew standard Young tableaux: the coefficient of the
/// rectangle in s_mu * s_1^N is the number of SYT of shape (n-3)^3/mu.
Int degree_skew_oracle(int n);

/// Number of standard Young tableaux of skew shape lambda/mu (at most
/// three rows), by the Aitken determinant N! det(1/(l_i - m_j - i + j)!).
Int syt_skew_count(const Partition& lambda, const Partition& mu);

/// Eulerian number A(n,k) by the standard recurrence; requires 0 <= k < n.
Int eulerian_number(int n, int k);

struct EulerCheck {
    Int coeff;        // coefficient of s_(n-5) in [V(3,n)]
    Int closed_form;  // 2^{n-3} - (n-2)
    Int eulerian;     // A(n-3, 1)
    bool all_equal = false;
};

EulerCheck euler_coefficient_check(int n);

}  // namespace abct
