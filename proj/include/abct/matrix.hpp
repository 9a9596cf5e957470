#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "abct/arith.hpp"

namespace abct {

/// Dense matrix of exact rationals.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows * cols)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int i, int j) { return a_[static_cast<size_t>(i * cols_ + j)]; }
    const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i * cols_ + j)]; }

    bool operator==(const ExactMatrix&) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rat> a_;
};

/// Deterministic random source; all sampling in the library draws from
/// this so results are reproducible from the seed across platforms
/// (raw mt19937_64 output, no distribution objects).
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    /// Uniform-ish integer in [lo, hi] (modulo bias is irrelevant here).
    long draw_int(long lo, long hi) {
        return lo + static_cast<long>(gen_() % static_cast<uint64_t>(hi - lo + 1));
    }

    /// Nonzero integer in [-bound, bound].
    long draw_nonzero(long bound) {
        long v = 0;
        while (v == 0) v = draw_int(-bound, bound);
        return v;
    }

private:
    std::mt19937_64 gen_;
};

/// Sorted index subset (0-based columns).
using IndexSet = std::vector<int>;

/// All k-subsets of {0,...,n-1} in lexicographic order.
std::vector<IndexSet> index_subsets(int n, int k);

/// Map from sorted k-subsets of the columns to the corresponding
/// maximal minor.
struct PlueckerVector {
    int k = 0;
    int n = 0;
    std::map<IndexSet, Rat> coords;

    const Rat& at(const IndexSet& I) const { return coords.at(I); }
    bool all_zero() const;
};

/// Exponent vectors of the degree-d monomials in k variables, in
/// descending lexicographic order. Any fixed order gives the same
/// minors up to sign, and only ranks and ideals are consumed here; the
/// descending-lex choice matches the k=2 pattern x^d, x^{d-1}y, ..., y^d.
std::vector<std::vector<int>> monomial_index(int k, int d);

/// Columnwise d-th Veronese: the C(d+k-1,d) x n matrix whose column j
/// lists all degree-d monomials in the entries of column j of M.
ExactMatrix veronese_matrix(const ExactMatrix& M, int d);

/// veronese_matrix without the pure-power rows x_i^d; input is the
/// k x (n-k) chart block of a matrix whose last k columns are the identity.
ExactMatrix theta_prime_matrix(const ExactMatrix& chart, int d);

/// Rank over the rationals by exact Gaussian elimination.
int exact_rank(const ExactMatrix& M);

/// Determinant of a square rational matrix (Laplace for size <= 3,
/// elimination otherwise).
Rat determinant(const ExactMatrix& M);

/// All maximal minors of a k x n matrix, k <= n.
PlueckerVector pluecker_coordinates(const ExactMatrix& M);

struct ZMembership {
    bool member = false;
    /// n < C(d+k-1,d), where every point of G(k,n) is in the locus.
    bool trivially_true = false;
};

/// Whether the columnwise Veronese of M drops rank.
ZMembership z_membership(const ExactMatrix& M, int d);

/// Residual of the quartic
/// p_{i1i2i3} p_{i1i5i6} p_{i2i4i6} p_{i3i4i5} - p_{i2i3i4} p_{i1i2i6} p_{i1i3i5} p_{i4i5i6}
/// at a k=3 Pluecker vector; I is a sorted 6-subset of the columns.
Rat quartic_residual(const PlueckerVector& P, const IndexSet& I);

struct VandermondeCheck {
    Rat lhs;  // I-minor of the Veronese image of W
    Rat rhs;  // product of the pairwise minors of W over I
    bool equal = false;
};

/// Checks the factorization p_I(theta_d(W)) = prod_{a<b in I} p_{ab}(W)
/// for a 2 x n matrix W and a (d+1)-subset I.
VandermondeCheck vandermonde_check(const ExactMatrix& W, int d, const IndexSet& I);

/// On the chart whose last 3 columns are the identity, rank deficiency
/// of the full 6 x n Veronese matrix is equivalent to rank deficiency
/// of the 3 x (n-3) pure-power-free block. Returns whether the two
/// vanishing statements agree at the given rational chart point.
bool chart_rank_equivalence(const ExactMatrix& chart, int n);

/// Samples a full-rank (d+1) x n matrix lying in V(d+1,n) as the
/// Veronese image of a random integer 2 x n matrix; deterministic in
/// the seed, bounded retries on degenerate draws.
ExactMatrix sample_vdn_point(int n, int d, uint64_t seed);

}  // namespace abct
