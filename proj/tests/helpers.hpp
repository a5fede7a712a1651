#pragma once

#include <doctest.h>

#include <algorithm>

#include "tridi/core.hpp"
#include "tridi/roots.hpp"

namespace tridi::testing {

inline double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
  REQUIRE(a.size() == b.size());
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline bool has_entry(const Spectrum& s, Complex value, int mult, double tol = 1e-12) {
  return std::any_of(s.entries.begin(), s.entries.end(), [&](const SpectrumEntry& e) {
    return std::abs(e.value - value) <= tol && e.mult == mult;
  });
}

inline TridiagonalMatrix ones_j(std::size_t n) {
  return make_zero_diag(Vector(n - 1, 1.0), Vector(n - 1, 1.0));
}

}  // namespace tridi::testing
