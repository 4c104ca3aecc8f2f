#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oscover/picclass.hpp"

namespace oscover {

/// The type of a cover: the vector of intersection multiplicities of its
/// canonical model with the exceptional curves r0..r3. Entries are
/// non-negative; sum() and sum_squares() are the two derived invariants
/// everything else is phrased in.
struct TypeVector {
  Vec4 gamma{0, 0, 0, 0};

  TypeVector() = default;
  explicit TypeVector(const Vec4& g);

  std::int64_t sum() const;          // gamma^(1)
  std::int64_t sum_squares() const;  // gamma^(2)

  friend bool operator==(const TypeVector&, const TypeVector&) = default;
  friend auto operator<=>(const TypeVector& a, const TypeVector& b) { return a.gamma <=> b.gamma; }
};

/// Numerical data of a marked hyperelliptic cover of the elliptic curve:
/// osculating order d, degree n, ramification index rho at the marked
/// point (odd, at most 2d-1), arithmetic genus g, and type gamma.
struct CoverSpec {
  std::int64_t d = 1;
  std::int64_t n = 1;
  std::int64_t rho = 1;
  std::int64_t g = 0;
  TypeVector type;
};

/// Pole order cutting the d-th osculating space at a hyperelliptic
/// Weierstrass point: j = 2d-1, defined only while 2d-1 < 2g.
std::int64_t osculating_gap_order(std::int64_t d, std::int64_t g);

struct CoverCondition {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Result of the necessary-condition check. Conditions are evaluated
/// independently (never short-circuited) so rejections can be binned by
/// cause.
struct CoverReport {
  CoverCondition parity_chain;       // gamma0+1 = gamma1 = gamma2 = gamma3 = n  (mod 2)
  CoverCondition genus_bound;        // 2g+1 <= gamma^(1)
  CoverCondition quadratic_bound;    // gamma^(2) <= (2d-1)(2n-2)+4-rho^2
  CoverCondition ramification;       // rho odd, rho <= 2d-1

  bool pass() const;
  std::vector<CoverCondition> violations() const;
};

CoverReport check_cover(const CoverSpec& spec);

}  // namespace oscover
