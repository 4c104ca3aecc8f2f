#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "oscover/halfperiod.hpp"

namespace oscover {

using Vec4 = std::array<std::int64_t, 4>;

/// A divisor class on the blown-up ruled surface, written in the basis
///
///   { e*C0,  e*F(w0)..e*F(w3),  s0..s3,  r0..r3 }
///
/// where e*C0 is the pullback of the zero-section, e*F(w_i) the pullback
/// of the fiber over the half-period w_i, and s_i, r_i the exceptional
/// curves over the eight fixed points of the lifted involution.
///
/// Fibers are supported over half-periods only; the representation cannot
/// express a fiber over a generic point. On such classes, linear
/// equivalence is decided by (c, s, r, fiber degree, torsion label).
struct PicClass {
  std::int64_t c = 0;           // coefficient of e*C0
  Vec4 fibers{0, 0, 0, 0};      // fiber multiplicity over w0..w3
  Vec4 s{0, 0, 0, 0};           // coefficients of s0..s3
  Vec4 r{0, 0, 0, 0};           // coefficients of r0..r3

  std::int64_t fiber_degree() const;
  TorsionLabel torsion() const { return torsion_of_fibers(fibers); }

  static PicClass section();              // e*C0
  static PicClass fiber(HalfPeriod w);    // e*F(w)
  static PicClass s_exceptional(int i);
  static PicClass r_exceptional(int i);
  static PicClass strict_section();       // e*C0 - s0 - s1 - s2 - s3

  PicClass& operator+=(const PicClass& o);
  PicClass& operator-=(const PicClass& o);
  friend PicClass operator+(PicClass a, const PicClass& b) { return a += b; }
  friend PicClass operator-(PicClass a, const PicClass& b) { return a -= b; }
  friend PicClass operator*(std::int64_t t, PicClass a);

  friend bool operator==(const PicClass&, const PicClass&) = default;
};

/// The intersection pairing. Gram data: (e*C0)^2 = 0, e*C0 . fiber = 1,
/// fiber . fiber = 0 (any pair), s_i^2 = r_i^2 = -1, all other pairs of
/// distinct basis elements 0.
std::int64_t intersect(const PicClass& a, const PicClass& b);

/// K = -2 e*C0 + s0+..+s3 + r0+..+r3 (ruled surface over an elliptic
/// base with C0^2 = 0, corrected by the eight blow-ups).
PicClass canonical_class();

/// Arithmetic genus 1 + (D.(D+K))/2. Throws if D.(D+K) is odd, which
/// cannot happen unless the Gram data is corrupted.
std::int64_t adjunction_genus(const PicClass& d);

/// Linear equivalence: equal c, s, r, equal fiber degree, equal torsion.
bool lin_equiv(const PicClass& a, const PicClass& b);

/// Apply a permutation of the half-period indices simultaneously to
/// fibers, s and r: the image has fibers[perm[i]] = a.fibers[i], etc.
/// Every such relabeling preserves intersection numbers, adjunction
/// genus and linear equivalence.
PicClass relabel(const PicClass& a, const std::array<int, 4>& perm);

enum class CurveKind { c0_strict, s_exceptional, r_exceptional, z_curve };

std::string to_string(CurveKind kind);

/// A curve on the surface with a distinguished role, carrying its class.
struct NamedCurve {
  CurveKind kind;
  int index = 0;  // which s_i / r_i, when applicable
  PicClass cls;
};

/// The canonical curves: the strict transform of the section (which
/// passes through all four s_i) and the eight exceptional curves.
NamedCurve named_curve(CurveKind kind, int index = 0);

/// A z-curve reference wrapping an explicitly built class.
NamedCurve named_z_curve(const PicClass& cls);

}  // namespace oscover
