#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace liverseg {

using Shape3 = std::array<int, 3>;
using Spacing3 = std::array<double, 3>;

inline std::size_t voxel_count(const Shape3& s) {
  return static_cast<std::size_t>(s[0]) * static_cast<std::size_t>(s[1]) *
         static_cast<std::size_t>(s[2]);
}

// Linear index for x-fastest (Fortran-like) layout.
inline std::size_t lindex(const Shape3& s, int x, int y, int z) {
  return static_cast<std::size_t>(x) +
         static_cast<std::size_t>(s[0]) *
             (static_cast<std::size_t>(y) + static_cast<std::size_t>(s[1]) * static_cast<std::size_t>(z));
}

inline void check_shape_valid(const Shape3& s) {
  if (s[0] < 1 || s[1] < 1 || s[2] < 1)
    throw std::invalid_argument("shape components must be >= 1");
}

inline void check_spacing_valid(const Spacing3& s) {
  if (s[0] <= 0.0 || s[1] <= 0.0 || s[2] <= 0.0)
    throw std::invalid_argument("spacing components must be > 0");
}

inline int clamp_int(int v, int lo, int hi) { return v < lo ? lo : (v > hi ? hi : v); }

template <typename T>
inline T clamp_val(T v, T lo, T hi) {
  return v < lo ? lo : (v > hi ? hi : v);
}

}  // namespace liverseg
