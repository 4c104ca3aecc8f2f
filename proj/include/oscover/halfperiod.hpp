#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "oscover/errors.hpp"

namespace oscover {

/// One of the four half-periods w0..w3 of the base elliptic curve, i.e.
/// an element of its two-torsion group, isomorphic to (Z/2)^2 with w0
/// (the origin) as identity. The three nonzero labels are abstract; the
/// bijection with (Z/2)^2 is fixed globally as xor on labels, so
/// w1 + w2 = w3 and every element is its own inverse.
class HalfPeriod {
 public:
  constexpr HalfPeriod() = default;

  constexpr explicit HalfPeriod(int label) : label_(label) {
    if (label < 0 || label > 3) throw DomainError("half-period label must be in 0..3");
  }

  static constexpr HalfPeriod origin() { return HalfPeriod{}; }

  constexpr int label() const { return label_; }
  constexpr bool is_origin() const { return label_ == 0; }

  friend constexpr HalfPeriod operator+(HalfPeriod a, HalfPeriod b) {
    return HalfPeriod(a.label_ ^ b.label_);
  }

  friend constexpr bool operator==(HalfPeriod, HalfPeriod) = default;

 private:
  int label_ = 0;
};

constexpr HalfPeriod add(HalfPeriod a, HalfPeriod b) { return a + b; }

// The degree-0 component of a fiber divisor, as a point of the two-torsion
// group. Two fiber divisors supported on half-periods are linearly
// equivalent iff their degrees and torsion labels agree.
using TorsionLabel = HalfPeriod;

/// Torsion label of the formal fiber sum m0*[w0] + ... + m3*[w3]:
/// the group sum of w_i taken over odd multiplicities. Negative
/// multiplicities are allowed (formal divisors).
constexpr TorsionLabel torsion_of_fibers(const std::array<std::int64_t, 4>& m) {
  int x = 0;
  for (int i = 0; i < 4; ++i) {
    if (m[static_cast<std::size_t>(i)] % 2 != 0) x ^= i;
  }
  return TorsionLabel(x);
}

inline std::string to_string(HalfPeriod w) { return "w" + std::to_string(w.label()); }

}  // namespace oscover
