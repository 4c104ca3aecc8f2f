#include "oscover/json_io.hpp"

namespace oscover {

namespace {

Json vec_json(const Vec4& v) { return Json::array({v[0], v[1], v[2], v[3]}); }

Vec4 vec_from(const Json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 4)
    throw DomainError("field '" + field + "' must be an array of 4 integers");
  Vec4 out{};
  for (std::size_t i = 0; i < 4; ++i) {
    if (!j[i].is_number_integer())
      throw DomainError("field '" + field + "' must contain integers only");
    out[i] = j[i].get<std::int64_t>();
  }
  return out;
}

Json fact_json(const CertFact& fact) {
  return Json{{"name", fact.name},
              {"holds", fact.holds},
              {"source", to_string(fact.source)},
              {"detail", fact.detail}};
}

Json condition_json(const CoverCondition& c) {
  return Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}};
}

Json eps_json(const EpsilonChoice& eps, const Vec4& vector) {
  return Json{{"family", to_string(eps.family)},
              {"k", eps.k},
              {"signs", Json::array({eps.signs[0], eps.signs[1], eps.signs[2], eps.signs[3]})},
              {"convention", eps.convention == EpsConvention::french ? "french" : "english"},
              {"vector", vec_json(vector)}};
}

}  // namespace

Json to_json(const PicClass& cls) {
  return Json{{"c", cls.c}, {"fibers", vec_json(cls.fibers)}, {"s", vec_json(cls.s)},
              {"r", vec_json(cls.r)}};
}

PicClass picclass_from_json(const Json& j) {
  if (!j.is_object()) throw DomainError("class must be a JSON object");
  for (const auto& key : {"c", "fibers", "s", "r"})
    if (!j.contains(key)) throw DomainError(std::string("class is missing field '") + key + "'");
  if (!j["c"].is_number_integer()) throw DomainError("field 'c' must be an integer");
  PicClass out;
  out.c = j["c"].get<std::int64_t>();
  out.fibers = vec_from(j["fibers"], "fibers");
  out.s = vec_from(j["s"], "s");
  out.r = vec_from(j["r"], "r");
  return out;
}

Json to_json(const TypeVector& t) { return vec_json(t.gamma); }

TypeVector typevector_from_json(const Json& j) { return TypeVector(vec_from(j, "gamma")); }

Json to_json(const CoverSpec& spec) {
  return Json{{"d", spec.d}, {"n", spec.n}, {"rho", spec.rho}, {"g", spec.g},
              {"gamma", to_json(spec.type)}};
}

Json to_json(const CoverReport& report, const CoverSpec& spec) {
  return Json{{"spec", to_json(spec)},
              {"pass", report.pass()},
              {"conditions", Json::array({condition_json(report.parity_chain),
                                          condition_json(report.genus_bound),
                                          condition_json(report.quadratic_bound),
                                          condition_json(report.ramification)})}};
}

Json to_json(const MembershipReport& report) {
  return Json{{"difference", to_json(report.difference)},
              {"coefficients_match", report.coefficients_match},
              {"torsion_match", report.torsion_match},
              {"member", report.member},
              {"obstructions", report.obstructions}};
}

Json to_json(const FamilySpec& fam) {
  Json j{{"d", fam.d},
         {"mu", vec_json(fam.mu.mu)},
         {"eps", eps_json(fam.eps, fam.eps_vector)},
         {"gamma", to_json(fam.gamma)},
         {"gamma1", fam.gamma.sum()},
         {"gamma2", fam.gamma.sum_squares()},
         {"n", fam.n},
         {"g", fam.g},
         {"family_dimension", fam.family_dimension},
         {"lambda_class", to_json(fam.lambda)},
         {"witness_matches_type", fam.witness_matches_type}};

  const auto& v = fam.verification;
  j["verification"] = Json{{"adjunction_matches_genus", v.adjunction_matches_genus},
                           {"cover_check_pass", v.cover_check_pass},
                           {"closed_form_applicable", v.closed_form_applicable},
                           {"closed_form_matches", v.closed_form_matches},
                           {"d0_equiv_d1", v.d0_equiv_d1},
                           {"g_in_lambda", v.g_in_lambda},
                           {"f_in_lambda", v.f_in_lambda},
                           {"c_identity_f", v.c_identity_f},
                           {"c_identity_g", v.c_identity_g},
                           {"r_identity", v.r_identity},
                           {"all", v.all()}};

  if (fam.witness) {
    const Witness& w = *fam.witness;
    Json constituents = Json::object();
    for (const auto& part : w.constituents())
      constituents[part.name] = Json{{"class", to_json(part.cls)},
                                     {"tau_invariant", part.tau_invariant},
                                     {"source", part.source}};
    j["witness"] = Json{
        {"gamma", to_json(w.gamma)},
        {"n", w.n},
        {"g", w.g},
        {"lambda_class", to_json(w.lambda)},
        {"m", w.m},
        {"m_k", Json::array({w.m_k[0], w.m_k[1], w.m_k[2]})},
        {"m_plus", w.m_plus},
        {"m_minus", w.m_minus},
        {"m_prime", w.m_prime},
        {"z_minus_composite", w.z_minus_composite},
        {"constituents", constituents},
        {"readings",
         Json{{"z_prime_fiber", to_string(w.readings.zprime_adopted)},
              {"z_prime_fiber_origin_ok", w.readings.zprime_origin_ok},
              {"z_prime_fiber_w1_ok", w.readings.zprime_omega1_ok},
              {"z_prime_rejected_diff", to_json(w.readings.zprime_rejected_diff)},
              {"f_s_multiplicity", to_string(w.readings.f_adopted)},
              {"f_applicable", w.readings.f_applicable},
              {"f_single_ok", w.readings.f_single_ok},
              {"f_double_ok", w.readings.f_double_ok},
              {"f_rejected_diff", to_json(w.readings.f_rejected_diff)}}}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json to_json(const IrreducibilityReport& report) {
  Json facts = Json::array();
  for (const auto& f : report.facts) facts.push_back(fact_json(f));
  return Json{{"pass", report.pass}, {"facts", facts}};
}

Json to_json(const WeierstrassReport& report) {
  Json facts = Json::array();
  for (const auto& f : report.facts) facts.push_back(fact_json(f));
  return Json{{"pass", report.pass}, {"facts", facts}, {"cover", to_json(report.cover)}};
}

Json to_json(const std::vector<AdmissibleType>& types) {
  Json out = Json::array();
  for (const auto& t : types)
    out.push_back(Json{{"gamma", to_json(t.gamma)}, {"g_max", t.g_max}});
  return out;
}

Json to_json(const std::vector<FamilyRow>& rows) {
  Json out = Json::array();
  for (const auto& row : rows) {
    Json params = Json::array();
    for (const auto& p : row.parametrizations)
      params.push_back(Json{{"mu", vec_json(p.mu.mu)}, {"eps", eps_json(p.eps, p.eps_vector)}});
    out.push_back(Json{{"d", row.d},
                       {"gamma", to_json(row.gamma)},
                       {"n", row.n},
                       {"g", row.g},
                       {"dim", row.dim},
                       {"parametrizations", params}});
  }
  return out;
}

Json to_json(const OracleReport& report) {
  Json mismatches = Json::array();
  for (const auto& m : report.mismatches)
    mismatches.push_back(Json{{"n", m.n}, {"gamma", to_json(m.gamma)}, {"kind", m.kind}});
  return Json{{"cells_checked", report.cells_checked},
              {"clean", report.clean()},
              {"mismatches", mismatches}};
}

Json to_json(const VerifyReport& report) {
  Json criteria = Json::array();
  for (const auto& c : report.criteria)
    criteria.push_back(Json{{"id", c.id}, {"name", c.name}, {"pass", c.pass},
                            {"cases", c.cases}, {"detail", c.detail}});
  return Json{{"d_max", report.d_max},
              {"mu_max", report.mu_max},
              {"pass", report.pass()},
              {"criteria", criteria}};
}

}  // namespace oscover
