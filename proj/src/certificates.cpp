#include "oscover/certificates.hpp"

#include <algorithm>
#include <sstream>

namespace oscover {

namespace {

bool excludes(const CurveCertificate& cert, CurveKind kind) {
  return std::find(cert.declared_support_excludes.begin(), cert.declared_support_excludes.end(),
                   kind) != cert.declared_support_excludes.end();
}

std::string vec_str(const Vec4& v) {
  std::ostringstream os;
  os << "(" << v[0] << "," << v[1] << "," << v[2] << "," << v[3] << ")";
  return os.str();
}

}  // namespace

IrreducibilityReport irreducibility_certificate(const CurveCertificate& cert) {
  Vec4 computed{};
  for (int i = 0; i < 4; ++i)
    computed[static_cast<std::size_t>(i)] = intersect(cert.cls, PicClass::s_exceptional(i));

  if (computed != cert.declared_s_intersections)
    throw DataError("declared s-intersection degrees " + vec_str(cert.declared_s_intersections) +
                    " contradict the lattice " + vec_str(computed));

  IrreducibilityReport rep;

  CertFact support;
  support.name = "support-excludes-section-and-exceptionals";
  support.source = FactSource::declared;
  support.holds = excludes(cert, CurveKind::c0_strict) &&
                  excludes(cert, CurveKind::s_exceptional) &&
                  excludes(cert, CurveKind::r_exceptional);
  support.detail = "support contains none of the strict section, s_i, r_i";
  rep.facts.push_back(support);

  CertFact single;
  single.name = "meets-strict-section-only-at-marked-point";
  single.source = FactSource::declared;
  single.holds = cert.declared_c0_meets_only_marked_point;
  single.detail = "intersection with the strict section is the single point p0";
  rep.facts.push_back(single);

  CertFact degrees;
  degrees.name = "s-intersection-degrees-are-delta";
  degrees.source = FactSource::computed;
  degrees.holds = computed == Vec4{1, 0, 0, 0};
  degrees.detail = "deg(class . s_i) = " + vec_str(computed) + ", required (1,0,0,0)";
  rep.facts.push_back(degrees);

  rep.pass = support.holds && single.holds && degrees.holds;
  return rep;
}

CurveCertificate theorem_certificate_for(const FamilySpec& fam) {
  CurveCertificate cert;
  cert.cls = fam.lambda;
  cert.declared_support_excludes = {CurveKind::c0_strict, CurveKind::s_exceptional,
                                    CurveKind::r_exceptional};
  cert.declared_c0_meets_only_marked_point = true;
  for (int i = 0; i < 4; ++i)
    cert.declared_s_intersections[static_cast<std::size_t>(i)] =
        intersect(fam.lambda, PicClass::s_exceptional(i));
  return cert;
}

WeierstrassReport hyperelliptic_weierstrass_certificate(const FamilySpec& fam) {
  WeierstrassReport rep;
  rep.cover = CoverSpec{fam.d, fam.n, 1, fam.g, fam.gamma};

  const std::int64_t g1 = fam.gamma.sum();
  const std::int64_t g2 = fam.gamma.sum_squares();

  rep.facts.push_back({"projects-2-to-1-onto-rational-curve", true, FactSource::declared,
                       "the quotient image of the generic member is rational"});
  rep.facts.push_back({"quotient-ramified-at-marked-point", true, FactSource::declared,
                       "p0 is a ramification point of the degree-2 projection"});
  rep.facts.push_back({"generic-member-smooth", true, FactSource::declared,
                       "smoothness of the generic member is not decided by the lattice"});
  rep.facts.push_back({"generic-member-transverse-to-s0", true, FactSource::declared,
                       "the generic member meets s0 transversally at the marked point"});
  rep.facts.push_back({"invariant-under-involution", true, FactSource::declared,
                       "all constituents are built invariant"});

  CertFact genus;
  genus.name = "arithmetic-genus";
  genus.source = FactSource::computed;
  genus.holds = adjunction_genus(fam.lambda) == fam.g && 2 * fam.g + 1 == g1;
  genus.detail = "adjunction genus " + std::to_string(adjunction_genus(fam.lambda)) +
                 " = (gamma^(1)-1)/2 = " + std::to_string((g1 - 1) / 2);
  rep.facts.push_back(genus);

  CertFact quad;
  quad.name = "quadratic-degree-relation";
  quad.source = FactSource::computed;
  quad.holds = g2 == (2 * fam.d - 1) * (2 * fam.n - 2) + 3;
  quad.detail = "gamma^(2) = " + std::to_string(g2) + " = (2d-1)(2n-2)+3";
  rep.facts.push_back(quad);

  CertFact necessary;
  necessary.name = "necessary-conditions";
  necessary.source = FactSource::computed;
  necessary.holds = check_cover(rep.cover).pass();
  necessary.detail = "parity, genus and quadratic bounds at rho = 1";
  rep.facts.push_back(necessary);

  if (!genus.holds) throw InconsistencyError("certificate genus relation");
  if (!quad.holds) throw InconsistencyError("certificate quadratic relation");
  if (!necessary.holds) throw InconsistencyError("certificate necessary conditions");

  rep.pass = true;
  return rep;
}

std::string to_string(FactSource s) { return s == FactSource::computed ? "computed" : "declared"; }

}  // namespace oscover
