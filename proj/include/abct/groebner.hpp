#pragma once

#include <optional>
#include <tuple>
#include <vector>

#include "abct/arith.hpp"

namespace abct {

/// Exponent vector of a monomial; fixed length = number of variables.
using Mono = std::vector<int>;

/// Lexicographic term order given by a priority list of variable
/// indices (highest priority first). The ambient order here is
/// x_{11} > x_{12} > ... > x_{1,c} > x_{21} > ... > x_{3,c}, which is
/// the identity priority when variables are indexed row-major.
struct LexOrder {
    std::vector<int> priority;

    static LexOrder standard(int nvars);

    /// <0, 0, >0 as a < b, a == b, a > b.
    int compare(const Mono& a, const Mono& b) const;
};

struct Term {
    Mono mono;
    Int coeff;

    bool operator==(const Term&) const = default;
};

/// Integer-coefficient multivariate polynomial, terms kept sorted in
/// strictly descending order under the ambient LexOrder (every
/// operation takes the order explicitly and preserves the invariant).
struct MultiPoly {
    std::vector<Term> terms;

    bool is_zero() const { return terms.empty(); }
    const Term& lt() const { return terms.front(); }
    long term_count() const { return static_cast<long>(terms.size()); }

    /// Sorts descending under ord, combines equal monomials, drops zeros.
    static MultiPoly from_terms(std::vector<Term> t, const LexOrder& ord);

    Rat evaluate(const std::vector<Rat>& values) const;

    bool operator==(const MultiPoly&) const = default;
};

bool mono_divides(const Mono& a, const Mono& b);
Mono mono_lcm(const Mono& a, const Mono& b);
bool mono_coprime(const Mono& a, const Mono& b);

/// The C(n_cols,3) maximal minors of the 3 x n_cols matrix with rows
/// (x_{1j}x_{2j}), (x_{1j}x_{3j}), (x_{2j}x_{3j}), as polynomials in the
/// 3*n_cols variables x_{ij} indexed row-major. Each minor is a sum of
/// six squarefree degree-6 terms with coefficients +-1.
std::vector<MultiPoly> minors_ideal_generators(int n_cols);

/// S(f,g) = (L/lt f) f - (L/lt g) g with L the lcm of the leading
/// monomials; coefficients cleared to integers via the lcm of the
/// leading coefficients.
MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, const LexOrder& ord);

/// Multivariate division remainder: repeatedly cancels the leading
/// term of the running polynomial by the first generator whose leading
/// monomial divides it (first divisor wins, so the result is
/// deterministic for a fixed generator order). Requires the divisor's
/// leading coefficient to divide the cancelled coefficient; holds
/// throughout this artifact because minors have +-1 leading terms, and
/// is checked at runtime.
MultiPoly reduce(const MultiPoly& f, const std::vector<MultiPoly>& G, const LexOrder& ord);

struct BuchbergerReport {
    bool is_groebner = false;
    /// 1-based indices of the first failing pair in (i,j)-lex order.
    std::optional<std::pair<int, int>> failing_pair;
    long pairs_total = 0;
    long pairs_skipped_coprime = 0;
    long pairs_reduced = 0;
    /// (i, j, remainder term count) per reduced pair when tracing.
    std::vector<std::tuple<int, int, long>> trace;
};

struct BuchbergerOptions {
    bool parallel = true;  // fan the independent pair reductions out over OpenMP
    bool trace = false;
};

/// Buchberger criterion: every S-polynomial of a pair of generators
/// reduces to zero (pairs with coprime leading monomials are skipped by
/// the product criterion and counted separately).
BuchbergerReport buchberger_check(const std::vector<MultiPoly>& G, const LexOrder& ord,
                                  const BuchbergerOptions& opts = {});

}  // namespace abct
