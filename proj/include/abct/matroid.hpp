#pragma once

#include <set>
#include <vector>

#include "abct/dimension.hpp"
#include "abct/matrix.hpp"

namespace abct {

/// Set of k-subsets of {0,...,n-1}; a matroid when nonempty and the
/// basis-exchange axiom holds. Empty models the "empty Veronese image"
/// case, distinguished from a matroid by is_empty().
struct MatroidK {
    int n = 0;
    int k = 0;
    std::set<IndexSet> bases;

    bool is_empty() const { return bases.empty(); }
    bool operator==(const MatroidK&) const = default;
};

/// Rank-2 matroid on {0,...,n-1}, stored as its set of basis pairs.
/// Equivalently: a loop set plus a partition of the non-loops into at
/// least two parallel classes, with bases = pairs across distinct classes.
struct Rank2Matroid {
    int n = 0;
    std::set<std::pair<int, int>> bases;  // each pair (a,b) with a < b

    /// Builds from loops + parallel classes (the classes must cover
    /// exactly the non-loops; at least two classes).
    static Rank2Matroid from_classes(int n, const std::vector<std::vector<int>>& classes);

    /// Validates the exchange axiom and nonemptiness.
    static Rank2Matroid from_bases(int n, std::set<std::pair<int, int>> bases);

    /// Elements contained in no basis.
    std::vector<int> loops() const;

    /// Partition of the non-loops into parallel classes, each sorted,
    /// ordered by smallest element.
    std::vector<std::vector<int>> parallel_classes() const;

    bool has_basis(int a, int b) const {
        return bases.count(a < b ? std::make_pair(a, b) : std::make_pair(b, a)) > 0;
    }

    MatroidK as_matroid_k() const;

    bool operator==(const Rank2Matroid&) const = default;
};

/// Basis-exchange axiom by brute force over all basis pairs and
/// elements; vacuously true for zero or one basis.
bool exchange_axiom_holds(const std::set<IndexSet>& bases);
bool exchange_axiom_holds(const std::set<std::pair<int, int>>& bases);

/// Support of a Pluecker vector as a set of bases. Rejects the zero vector.
MatroidK matroid_of_point(const PlueckerVector& P);

/// d-th Veronese image of a rank-2 matroid: all (d+1)-subsets whose
/// 2-subsets all are bases. Either empty or a matroid; the exchange
/// axiom is asserted on the result.
MatroidK veronese_image_matroid(const Rank2Matroid& M, int d);

/// All rank-2 matroids on {0,...,n-1}, canonically from (loops,
/// parallel-class partition); duplicate-free.
std::vector<Rank2Matroid> enumerate_rank2_matroids(int n);

/// Parameterization of the matroid cell: one 2-vector per parallel
/// class, one scalar per non-loop element, zero columns for loops.
Parameterization matroid_cell_param(const Rank2Matroid& M);

/// Dimension of the d-th Veronese image of the cell of M, by Jacobian
/// rank at sampled generic points (3-point retry, maximum reported).
int strata_dimension_experiment(const Rank2Matroid& M, int d, uint64_t seed);

/// Preset cells on {0,...,n-1}: "m1" = element 0 is a loop, all other
/// elements free; "m2" = m1 with the last two elements made parallel;
/// "uniform" = all elements free (U_{2,n}).
Rank2Matroid preset_m1(int n);
Rank2Matroid preset_m2(int n);
Rank2Matroid preset_uniform(int n);

}  // namespace abct
