#pragma once

#include <stdexcept>
#include <vector>

#include "abct/arith.hpp"

namespace abct {

/// First-order jet over the rationals: a value together with its exact
/// partial derivatives with respect to a fixed list of parameters.
/// Arithmetic is forward-mode differentiation with no rounding.
struct Jet {
    Rat v;
    std::vector<Rat> g;

    Jet() = default;
    Jet(Rat value, size_t params) : v(std::move(value)), g(params) {}

    /// Seed parameter i with derivative 1.
    static Jet parameter(Rat value, size_t params, size_t i) {
        Jet j(std::move(value), params);
        j.g[i] = 1;
        return j;
    }

    Jet operator+(const Jet& o) const {
        Jet r(v + o.v, g.size());
        for (size_t i = 0; i < g.size(); ++i) r.g[i] = g[i] + o.g[i];
        return r;
    }

    Jet operator-(const Jet& o) const {
        Jet r(v - o.v, g.size());
        for (size_t i = 0; i < g.size(); ++i) r.g[i] = g[i] - o.g[i];
        return r;
    }

    Jet operator*(const Jet& o) const {
        Jet r(v * o.v, g.size());
        for (size_t i = 0; i < g.size(); ++i) r.g[i] = g[i] * o.v + v * o.g[i];
        return r;
    }

    Jet operator/(const Jet& o) const {
        if (o.v == 0) throw std::domain_error("jet division by zero value");
        Jet r(v / o.v, g.size());
        for (size_t i = 0; i < g.size(); ++i) r.g[i] = (g[i] * o.v - v * o.g[i]) / (o.v * o.v);
        return r;
    }

    Jet& operator+=(const Jet& o) { return *this = *this + o; }
    Jet& operator-=(const Jet& o) { return *this = *this - o; }
};

using JetMatrix = std::vector<std::vector<Jet>>;

/// Determinant of a square jet matrix by cofactor expansion (sizes here
/// are at most d+1 <= 5).
Jet jet_determinant(const JetMatrix& m);

}  // namespace abct
