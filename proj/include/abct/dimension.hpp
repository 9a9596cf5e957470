#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "abct/jet.hpp"
#include "abct/matrix.hpp"

namespace abct {

/// No affine Pluecker chart exists at the sampled base point (all
/// candidate coordinates vanish); callers retry with a fresh point.
struct ChartError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A rational map from parameter space to 2 x n matrices, evaluated on
/// jets so its Veronese-image Pluecker coordinates can be differentiated.
struct Parameterization {
    int n = 0;
    int param_count = 0;
    std::function<JetMatrix(const std::vector<Jet>&)> build;
};

/// All 2n matrix entries free.
Parameterization full_grassmannian_param(int n);

/// Exact rank of the Jacobian of the affine-chart Pluecker coordinates
/// of the d-th Veronese image of param at the given parameter point:
/// the local dimension of the image closure at a smooth generic point.
/// The chart is the lex-smallest index set with nonzero coordinate;
/// throws ChartError when every coordinate vanishes at the point.
int image_dimension(const Parameterization& param, int d, const std::vector<Rat>& point);

/// Convenience: evaluates image_dimension at `attempts` random integer
/// points drawn from rng and returns the maximum rank seen (rank at a
/// point is a lower bound for the dimension, with equality off a
/// measure-zero locus). Chart failures draw a fresh point.
int image_dimension_sampled(const Parameterization& param, int d, Rng& rng, int attempts = 3);

}  // namespace abct
