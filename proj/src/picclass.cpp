#include "oscover/picclass.hpp"

#include <stdexcept>

#include "oscover/checked.hpp"

namespace oscover {

std::int64_t PicClass::fiber_degree() const {
  std::int64_t deg = 0;
  for (auto m : fibers) deg = checked_add(deg, m);
  return deg;
}

PicClass PicClass::section() {
  PicClass out;
  out.c = 1;
  return out;
}

PicClass PicClass::fiber(HalfPeriod w) {
  PicClass out;
  out.fibers[static_cast<std::size_t>(w.label())] = 1;
  return out;
}

PicClass PicClass::s_exceptional(int i) {
  if (i < 0 || i > 3) throw DomainError("exceptional index must be in 0..3");
  PicClass out;
  out.s[static_cast<std::size_t>(i)] = 1;
  return out;
}

PicClass PicClass::r_exceptional(int i) {
  if (i < 0 || i > 3) throw DomainError("exceptional index must be in 0..3");
  PicClass out;
  out.r[static_cast<std::size_t>(i)] = 1;
  return out;
}

PicClass PicClass::strict_section() {
  PicClass out = section();
  for (std::size_t i = 0; i < 4; ++i) out.s[i] = -1;
  return out;
}

PicClass& PicClass::operator+=(const PicClass& o) {
  c = checked_add(c, o.c);
  for (std::size_t i = 0; i < 4; ++i) {
    fibers[i] = checked_add(fibers[i], o.fibers[i]);
    s[i] = checked_add(s[i], o.s[i]);
    r[i] = checked_add(r[i], o.r[i]);
  }
  return *this;
}

PicClass& PicClass::operator-=(const PicClass& o) {
  c = checked_sub(c, o.c);
  for (std::size_t i = 0; i < 4; ++i) {
    fibers[i] = checked_sub(fibers[i], o.fibers[i]);
    s[i] = checked_sub(s[i], o.s[i]);
    r[i] = checked_sub(r[i], o.r[i]);
  }
  return *this;
}

PicClass operator*(std::int64_t t, PicClass a) {
  a.c = checked_mul(t, a.c);
  for (std::size_t i = 0; i < 4; ++i) {
    a.fibers[i] = checked_mul(t, a.fibers[i]);
    a.s[i] = checked_mul(t, a.s[i]);
    a.r[i] = checked_mul(t, a.r[i]);
  }
  return a;
}

std::int64_t intersect(const PicClass& a, const PicClass& b) {
  // c picks up one point on every fiber; exceptional curves are
  // orthogonal (-1)-classes; everything else pairs to zero.
  std::int64_t acc = checked_mul(a.c, b.fiber_degree());
  acc = checked_add(acc, checked_mul(b.c, a.fiber_degree()));
  for (std::size_t i = 0; i < 4; ++i) {
    acc = checked_sub(acc, checked_mul(a.s[i], b.s[i]));
    acc = checked_sub(acc, checked_mul(a.r[i], b.r[i]));
  }
  return acc;
}

PicClass canonical_class() {
  PicClass k;
  k.c = -2;
  for (std::size_t i = 0; i < 4; ++i) {
    k.s[i] = 1;
    k.r[i] = 1;
  }
  return k;
}

std::int64_t adjunction_genus(const PicClass& d) {
  const std::int64_t t = intersect(d, d + canonical_class());
  if (t % 2 != 0) throw std::logic_error("D.(D+K) odd: intersection data corrupted");
  return 1 + t / 2;
}

bool lin_equiv(const PicClass& a, const PicClass& b) {
  return a.c == b.c && a.s == b.s && a.r == b.r &&
         a.fiber_degree() == b.fiber_degree() && a.torsion() == b.torsion();
}

PicClass relabel(const PicClass& a, const std::array<int, 4>& perm) {
  bool seen[4] = {false, false, false, false};
  for (int p : perm) {
    if (p < 0 || p > 3 || seen[p]) throw DomainError("relabel requires a permutation of 0..3");
    seen[p] = true;
  }
  PicClass out;
  out.c = a.c;
  for (std::size_t i = 0; i < 4; ++i) {
    const auto j = static_cast<std::size_t>(perm[i]);
    out.fibers[j] = a.fibers[i];
    out.s[j] = a.s[i];
    out.r[j] = a.r[i];
  }
  return out;
}

NamedCurve named_curve(CurveKind kind, int index) {
  switch (kind) {
    case CurveKind::c0_strict: return {kind, 0, PicClass::strict_section()};
    case CurveKind::s_exceptional: return {kind, index, PicClass::s_exceptional(index)};
    case CurveKind::r_exceptional: return {kind, index, PicClass::r_exceptional(index)};
    case CurveKind::z_curve: throw DomainError("a z-curve needs an explicit class");
  }
  throw DomainError("unknown curve kind");
}

NamedCurve named_z_curve(const PicClass& cls) { return {CurveKind::z_curve, 0, cls}; }

std::string to_string(CurveKind kind) {
  switch (kind) {
    case CurveKind::c0_strict: return "strict-section";
    case CurveKind::s_exceptional: return "s-exceptional";
    case CurveKind::r_exceptional: return "r-exceptional";
    case CurveKind::z_curve: return "z-curve";
  }
  return "unknown";
}

}  // namespace oscover
