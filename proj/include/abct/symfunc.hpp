#pragma once

#include <array>
#include <functional>
#include <map>

#include "abct/arith.hpp"
#include "abct/partition.hpp"

namespace abct {

/// Element of the ring of symmetric functions in three variables,
/// written in the Schur basis: a finite map partition -> integer with
/// no zero coefficients stored.
class SchurExpansion {
public:
    using TermMap = std::map<Partition, Int>;

    SchurExpansion() = default;

    /// The constant 1 = s_0.
    static SchurExpansion unit() { return single(Partition{}); }
    static SchurExpansion single(const Partition& p, Int coeff = 1);

    void add_term(const Partition& p, const Int& coeff);
    Int coeff(const Partition& p) const;

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// True when every stored partition has the same size (the zero
    /// expansion is vacuously homogeneous).
    bool is_homogeneous() const;
    /// Common degree of a homogeneous expansion; throws otherwise.
    int degree() const;

    SchurExpansion& operator+=(const SchurExpansion& o);
    SchurExpansion& operator-=(const SchurExpansion& o);
    SchurExpansion operator+(const SchurExpansion& o) const;
    SchurExpansion operator-(const SchurExpansion& o) const;
    SchurExpansion operator*(const Int& c) const;

    bool operator==(const SchurExpansion&) const = default;

private:
    TermMap terms_;
};

/// Exponent triple of a monomial x1^a x2^b x3^c.
using Exp3 = std::array<int, 3>;

/// Symmetric polynomial in x1,x2,x3 in expanded monomial form. All
/// monomials of every S3-orbit are stored so the symmetry invariant can
/// be asserted directly on the term map.
class SymPoly3 {
public:
    // descending lex, so begin() is the leading exponent triple
    using TermMap = std::map<Exp3, Int, std::greater<Exp3>>;

    SymPoly3() = default;
    static SymPoly3 constant(Int c);
    /// Linear form c1*x1 + c2*x2 + c3*x3.
    static SymPoly3 linear(const Int& c1, const Int& c2, const Int& c3);

    void add_term(const Exp3& e, const Int& coeff);
    Int coeff(const Exp3& e) const;

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Invariance under the six permutations of exponent triples.
    bool is_symmetric() const;

    SymPoly3& operator+=(const SymPoly3& o);
    SymPoly3& operator-=(const SymPoly3& o);
    SymPoly3 operator+(const SymPoly3& o) const;
    SymPoly3 operator-(const SymPoly3& o) const;
    SymPoly3 operator*(const SymPoly3& o) const;
    SymPoly3 operator*(const Int& c) const;

    bool operator==(const SymPoly3&) const = default;

private:
    TermMap terms_;
};

/// Pieri rule: e * s_m, m >= 1. Product partitions are obtained by
/// adding a horizontal strip of m boxes; anything acquiring a fourth
/// row vanishes in three variables and is dropped.
SchurExpansion pieri_mul(const SchurExpansion& e, int m);

/// General product in the Schur basis via Littlewood-Richardson
/// coefficients, restricted to partitions with at most three rows.
SchurExpansion schur_mul(const SchurExpansion& a, const SchurExpansion& b);

/// Number of LR skew tableaux of shape nu/lambda and content mu
/// (three-row partitions only). Exposed for direct testing.
Int lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Expands each s_lambda as the sum of its semistandard-tableau
/// monomials in three variables.
SymPoly3 to_monomial_form(const SchurExpansion& e);

/// Inverse of to_monomial_form by leading-term subtraction under lex
/// order on exponent triples. Throws std::invalid_argument when the
/// input is not symmetric (detected by a non-weakly-decreasing leading
/// exponent triple).
SchurExpansion decompose_to_schur(const SymPoly3& p);

}  // namespace abct
