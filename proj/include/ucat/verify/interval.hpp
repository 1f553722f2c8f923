#pragma once

// Unimodal category of an edge-linear density on an interval, computed from
// the values along the path alone. Kept free of the tree machinery so it can
// cross-check the tree algorithm on path instances.

#include <cstddef>
#include <span>
#include <vector>

#include "ucat/rational.hpp"

namespace ucat::verify {

inline std::size_t interval_ucat(std::span<const Rational> values) {
  std::vector<Rational> rest(values.begin(), values.end());
  const std::size_t n = rest.size();
  std::size_t count = 0;
  auto exhausted = [&] {
    for (const auto& x : rest) {
      if (sgn(x) != 0) return false;
    }
    return true;
  };
  std::vector<Rational> peel(n);
  while (!exhausted()) {
    // Leftmost point where the profile first stops rising.
    std::size_t peak = 0;
    while (peak + 1 < n && rest[peak] <= rest[peak + 1]) ++peak;

    peel[peak] = rest[peak];
    for (std::size_t j = peak + 1; j < n; ++j) {
      if (rest[j - 1] < rest[j]) {
        peel[j] = peel[j - 1];
      } else {
        Rational lowered = peel[j - 1] - (rest[j - 1] - rest[j]);
        peel[j] = sgn(lowered) > 0 ? lowered : Rational(0);
      }
    }
    for (std::size_t j = peak; j-- > 0;) {
      if (rest[j + 1] < rest[j]) {
        peel[j] = peel[j + 1];
      } else {
        Rational lowered = peel[j + 1] - (rest[j + 1] - rest[j]);
        peel[j] = sgn(lowered) > 0 ? lowered : Rational(0);
      }
    }
    for (std::size_t j = 0; j < n; ++j) rest[j] -= peel[j];
    ++count;
  }
  return count;
}

}  // namespace ucat::verify
