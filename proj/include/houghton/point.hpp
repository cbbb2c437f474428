#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

namespace houghton {

/// A point (index, ray) of the star S = N x {1..n}.  `ray` is 1-based,
/// `index` runs 0,1,2,... outward along the ray.
struct RayPoint {
    int index = 0;
    int ray = 1;

    friend bool operator==(const RayPoint&, const RayPoint&) = default;

    // Ordered by (ray, index).  Every deterministic tie-break in the
    // library (class representatives, cycle alignment, ...) uses this.
    friend std::strong_ordering operator<=>(const RayPoint& a, const RayPoint& b) {
        if (auto c = a.ray <=> b.ray; c != 0) return c;
        return a.index <=> b.index;
    }
};

std::string to_string(const RayPoint& p);

struct RayPointHash {
    std::size_t operator()(const RayPoint& p) const noexcept {
        std::uint64_t v = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.ray)) << 32) |
                          static_cast<std::uint32_t>(p.index);
        v ^= v >> 33;
        v *= 0xff51afd7ed558ccdULL;
        v ^= v >> 33;
        return static_cast<std::size_t>(v);
    }
};

} // namespace houghton
