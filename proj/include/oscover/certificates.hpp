#pragma once

#include <string>
#include <vector>

#include "oscover/builder.hpp"

namespace oscover {

// Certificates separate what the lattice computes from what the source
// theorems declare; a report never presents a declared fact as computed.
enum class FactSource { computed, declared };

struct CertFact {
  std::string name;
  bool holds = false;
  FactSource source = FactSource::computed;
  std::string detail;
};

/// Input to the irreducibility criterion: the class of an effective
/// divisor plus the geometric facts the lattice cannot see, declared by
/// the caller (sourced from the theorems for constructed families).
struct CurveCertificate {
  PicClass cls;
  std::vector<CurveKind> declared_support_excludes;  // kinds absent from the support
  bool declared_c0_meets_only_marked_point = false;  // meets strict section only at p0
  Vec4 declared_s_intersections{0, 0, 0, 0};         // must match the lattice numbers
};

struct IrreducibilityReport {
  bool pass = false;
  std::vector<CertFact> facts;
};

/// Numeric irreducibility criterion: passes iff the declared support
/// excludes the strict section and all eight exceptional curves, the
/// declared intersection with the strict section is the single marked
/// point, and the computed degrees cls.s_i equal delta_{i,0}. Throws
/// DataError if the declared s-degrees contradict the lattice.
IrreducibilityReport irreducibility_certificate(const CurveCertificate& cert);

/// The honest declarations for the generic member of a constructed
/// family's linear system, sourced from the construction theorems.
CurveCertificate theorem_certificate_for(const FamilySpec& fam);

struct WeierstrassReport {
  bool pass = false;
  std::vector<CertFact> facts;
  CoverSpec cover;  // the emitted (d, n, rho=1, g, gamma)
};

/// Chain of facts making the generic member a hyperelliptic cover with a
/// Weierstrass point at the marked point: the degree-2 projection onto a
/// rational image and the ramification are declared; the genus and the
/// two cover relations are computed. Throws InconsistencyError if a
/// computed relation fails.
WeierstrassReport hyperelliptic_weierstrass_certificate(const FamilySpec& fam);

std::string to_string(FactSource s);

}  // namespace oscover
