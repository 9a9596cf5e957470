#pragma once

#include <array>
#include <compare>
#include <stdexcept>
#include <string>

namespace abct {

/// Partition with at most three parts, stored full-length as a weakly
/// decreasing triple. Trailing zeros are part of the canonical form;
/// rendering omits them (s_{1,1} is stored as (1,1,0)).
struct Partition {
    std::array<int, 3> parts{0, 0, 0};

    Partition() = default;
    Partition(int a, int b = 0, int c = 0) : parts{a, b, c} {
        if (c < 0 || b < c || a < b)
            throw std::invalid_argument("partition parts must be weakly decreasing and nonnegative");
    }

    int operator[](int i) const { return parts[static_cast<size_t>(i)]; }

    /// |lambda|, the number of boxes.
    int size() const { return parts[0] + parts[1] + parts[2]; }

    /// Number of nonzero parts.
    int rows() const { return (parts[0] > 0) + (parts[1] > 0) + (parts[2] > 0); }

    /// True when the partition fits a 3 x width box.
    bool fits_width(int width) const { return parts[0] <= width; }

    auto operator<=>(const Partition&) const = default;

    /// "2,1" with trailing zeros omitted; the zero partition renders "0".
    std::string label() const {
        if (parts[0] == 0) return "0";
        std::string s = std::to_string(parts[0]);
        for (int i = 1; i < 3 && parts[static_cast<size_t>(i)] > 0; ++i)
            s += "," + std::to_string(parts[static_cast<size_t>(i)]);
        return s;
    }
};

}  // namespace abct
