#include "oscover/typesystem.hpp"

#include <sstream>

#include "oscover/checked.hpp"

namespace oscover {

TypeVector::TypeVector(const Vec4& g) : gamma(g) {
  for (auto x : gamma)
    if (x < 0) throw DomainError("type entries must be non-negative");
}

std::int64_t TypeVector::sum() const {
  std::int64_t acc = 0;
  for (auto x : gamma) acc = checked_add(acc, x);
  return acc;
}

std::int64_t TypeVector::sum_squares() const {
  std::int64_t acc = 0;
  for (auto x : gamma) acc = checked_add(acc, checked_mul(x, x));
  return acc;
}

std::int64_t osculating_gap_order(std::int64_t d, std::int64_t g) {
  if (d < 1) throw DomainError("osculating order must be positive");
  if (g < 1) throw DomainError("genus must be positive");
  const std::int64_t j = checked_sub(checked_mul(2, d), 1);
  if (!(j < checked_mul(2, g))) throw DomainError("order exceeds gap range");
  return j;
}

bool CoverReport::pass() const {
  return parity_chain.pass && genus_bound.pass && quadratic_bound.pass && ramification.pass;
}

std::vector<CoverCondition> CoverReport::violations() const {
  std::vector<CoverCondition> out;
  for (const auto* c : {&parity_chain, &genus_bound, &quadratic_bound, &ramification})
    if (!c->pass) out.push_back(*c);
  return out;
}

namespace {

bool same_parity(std::int64_t a, std::int64_t b) { return ((a - b) % 2) == 0; }

std::string show(std::int64_t v) { return std::to_string(v); }

}  // namespace

CoverReport check_cover(const CoverSpec& spec) {
  const auto& g4 = spec.type.gamma;
  const std::int64_t g1 = spec.type.sum();
  const std::int64_t g2 = spec.type.sum_squares();

  CoverReport rep;

  rep.parity_chain.name = "parity-chain";
  rep.parity_chain.pass = same_parity(g4[0] + 1, g4[1]) && same_parity(g4[1], g4[2]) &&
                          same_parity(g4[2], g4[3]) && same_parity(g4[3], spec.n);
  {
    std::ostringstream os;
    os << "gamma0+1, gamma1, gamma2, gamma3, n = " << g4[0] + 1 << ", " << g4[1] << ", " << g4[2]
       << ", " << g4[3] << ", " << spec.n << " (mod 2)";
    rep.parity_chain.detail = os.str();
  }

  const std::int64_t genus_lhs = checked_add(checked_mul(2, spec.g), 1);
  rep.genus_bound.name = "genus-bound";
  rep.genus_bound.pass = genus_lhs <= g1;
  rep.genus_bound.detail = "2g+1 = " + show(genus_lhs) + " <= gamma^(1) = " + show(g1);

  const std::int64_t sheets = checked_sub(checked_mul(2, spec.d), 1);
  const std::int64_t bound =
      checked_sub(checked_add(checked_mul(sheets, checked_sub(checked_mul(2, spec.n), 2)), 4),
                  checked_mul(spec.rho, spec.rho));
  rep.quadratic_bound.name = "quadratic-bound";
  rep.quadratic_bound.pass = g2 <= bound;
  rep.quadratic_bound.detail =
      "gamma^(2) = " + show(g2) + " <= (2d-1)(2n-2)+4-rho^2 = " + show(bound);

  rep.ramification.name = "ramification-bound";
  rep.ramification.pass = spec.rho >= 1 && spec.rho % 2 == 1 && spec.rho <= sheets;
  rep.ramification.detail = "rho = " + show(spec.rho) + " odd, <= 2d-1 = " + show(sheets);

  return rep;
}

}  // namespace oscover
