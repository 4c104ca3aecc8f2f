#include "oscover/enumerate.hpp"

#include "oscover/checked.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <map>
#include <set>
#include <sstream>
#include <thread>

namespace oscover {

namespace {

std::int64_t isqrt(std::int64_t v) {
  if (v < 0) return -1;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

// All mu with entries in [0, mu_max] satisfying mu0+1 = mu1 = mu2 = mu3
// (mod 2), in lexicographic order.
std::vector<Vec4> parity_mu_vectors(std::int64_t mu_max) {
  std::vector<Vec4> out;
  for (std::int64_t a = 0; a <= mu_max; ++a)
    for (std::int64_t b = 0; b <= mu_max; ++b)
      for (std::int64_t c = 0; c <= mu_max; ++c)
        for (std::int64_t e = 0; e <= mu_max; ++e) {
          if ((a + 1 - b) % 2 != 0) continue;
          if ((b - c) % 2 != 0 || (c - e) % 2 != 0) continue;
          out.push_back({a, b, c, e});
        }
  return out;
}

// Canonical offset choices for one d: pattern A then B, k ascending, sign
// masks ascending over the indices where the pattern is nonzero. Choices
// whose resolved vector repeats an earlier one within the same (family)
// are dropped.
std::vector<EpsilonChoice> epsilon_choices(std::int64_t d) {
  std::vector<EpsilonChoice> out;
  for (EpsFamily family : {EpsFamily::A, EpsFamily::B}) {
    std::set<Vec4> seen;
    for (int k = 0; k < 4; ++k) {
      EpsilonChoice base{family, k, {1, 1, 1, 1}, EpsConvention::french};
      const Vec4 pattern = epsilon_vector(d, base);
      std::vector<int> free_idx;
      for (int i = 0; i < 4; ++i)
        if (pattern[static_cast<std::size_t>(i)] != 0) free_idx.push_back(i);
      const int combos = 1 << free_idx.size();
      for (int mask = 0; mask < combos; ++mask) {
        EpsilonChoice choice = base;
        for (std::size_t b = 0; b < free_idx.size(); ++b)
          if (mask & (1 << b)) choice.signs[static_cast<std::size_t>(free_idx[b])] = -1;
        const Vec4 vec = epsilon_vector(d, choice);
        if (seen.insert(vec).second) out.push_back(choice);
      }
    }
  }
  return out;
}

using RowKey = std::pair<std::int64_t, Vec4>;
using RowMap = std::map<RowKey, FamilyRow>;

bool same_parametrization(const Parametrization& a, const Parametrization& b) {
  return a.mu == b.mu && a.eps.family == b.eps.family && a.eps_vector == b.eps_vector;
}

void merge_rows(RowMap& into, RowMap&& from) {
  for (auto& [key, row] : from) {
    auto it = into.find(key);
    if (it == into.end()) {
      into.emplace(key, std::move(row));
      continue;
    }
    for (auto& p : row.parametrizations) {
      bool dup = false;
      for (const auto& q : it->second.parametrizations) dup = dup || same_parametrization(p, q);
      if (!dup) it->second.parametrizations.push_back(std::move(p));
    }
  }
}

RowMap sweep_chunk(const SweepConfig& cfg, const std::vector<Vec4>& mus, std::size_t begin,
                   std::size_t end) {
  RowMap rows;
  for (std::size_t idx = begin; idx < end; ++idx) {
    const MuVector mu(mus[idx]);
    for (std::int64_t d = 1; d <= cfg.d_max; ++d) {
      for (const auto& eps : epsilon_choices(d)) {
        TypeVector gamma;
        try {
          gamma = gamma_of(d, mu, eps);
        } catch (const DomainError&) {
          continue;  // negative entries: this sign choice yields no type
        }
        const auto dg = try_degree_genus(d, gamma);
        if (!dg || dg->g > cfg.genus_max) continue;

        const FamilySpec fam = build_family(d, mu, eps);

        const RowKey key{d, gamma.gamma};
        auto it = rows.find(key);
        if (it == rows.end()) {
          FamilyRow row;
          row.d = d;
          row.gamma = gamma;
          row.n = fam.n;
          row.g = fam.g;
          row.dim = fam.family_dimension;
          row.parametrizations.push_back({mu, eps, fam.eps_vector});
          rows.emplace(key, std::move(row));
        } else {
          Parametrization p{mu, eps, fam.eps_vector};
          bool dup = false;
          for (const auto& q : it->second.parametrizations) dup = dup || same_parametrization(p, q);
          if (!dup) it->second.parametrizations.push_back(std::move(p));
        }
      }
    }
  }
  return rows;
}

}  // namespace

std::vector<AdmissibleType> enumerate_admissible(std::int64_t d, std::int64_t n, std::int64_t rho) {
  std::vector<AdmissibleType> out;
  if (d < 1) return out;
  const std::int64_t sheets = checked_sub(checked_mul(2, d), 1);
  if (rho < 1 || rho % 2 == 0 || rho > sheets) return out;

  const std::int64_t bound =
      checked_sub(checked_add(checked_mul(sheets, checked_sub(checked_mul(2, n), 2)), 4),
                  checked_mul(rho, rho));
  const std::int64_t cap = isqrt(bound);
  if (cap < 0) return out;

  Vec4 g{};
  for (g[0] = 0; g[0] <= cap; ++g[0])
    for (g[1] = 0; g[1] <= cap; ++g[1])
      for (g[2] = 0; g[2] <= cap; ++g[2])
        for (g[3] = 0; g[3] <= cap; ++g[3]) {
          const TypeVector type(g);
          const CoverSpec probe{d, n, rho, 0, type};
          if (!check_cover(probe).pass()) continue;
          out.push_back({type, (type.sum() - 1) / 2});
        }
  return out;
}

std::vector<FamilyRow> enumerate_families(const SweepConfig& cfg) {
  if (cfg.d_max < 1 || cfg.mu_max < 0 || cfg.genus_max < 0)
    throw DomainError("sweep bounds must be positive");

  const std::vector<Vec4> mus = parity_mu_vectors(cfg.mu_max);

  // Workers own disjoint mu ranges and share nothing; partial results are
  // merged in range order, so output is independent of scheduling.
  const std::size_t hw = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  const std::size_t chunks = std::min<std::size_t>(std::max<std::size_t>(1, hw), mus.size());
  std::vector<std::future<RowMap>> parts;
  const std::size_t per = chunks == 0 ? 0 : (mus.size() + chunks - 1) / chunks;
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t begin = c * per;
    const std::size_t end = std::min(mus.size(), begin + per);
    if (begin >= end) break;
    parts.push_back(std::async(std::launch::async,
                               [&cfg, &mus, begin, end] { return sweep_chunk(cfg, mus, begin, end); }));
  }

  RowMap rows;
  for (auto& part : parts) merge_rows(rows, part.get());

  std::vector<FamilyRow> out;
  out.reserve(rows.size());
  for (auto& [key, row] : rows) out.push_back(std::move(row));
  return out;
}

std::string families_csv(const std::vector<FamilyRow>& rows) {
  std::ostringstream os;
  os << "d,mu0,mu1,mu2,mu3,family,k,gamma0,gamma1,gamma2,gamma3,n,g,dim\n";
  for (const auto& row : rows) {
    const Parametrization& p = row.parametrizations.front();
    os << row.d;
    for (auto m : p.mu.mu) os << "," << m;
    os << "," << to_string(p.eps.family) << "," << p.eps.k;
    for (auto g : row.gamma.gamma) os << "," << g;
    os << "," << row.n << "," << row.g << "," << row.dim << "\n";
  }
  return os.str();
}

GapReport construction_gap(std::int64_t d, std::int64_t n) {
  if (d < 1 || n < 1) throw DomainError("gap report needs positive d and n");
  GapReport rep;
  rep.d = d;
  rep.n = n;
  for (const auto& t : enumerate_admissible(d, n, 1)) rep.admissible.push_back(t.gamma);

  // constructed types of degree n all have gamma entries below the
  // saturated square sum, so a mu sweep up to that cap is exhaustive
  const std::int64_t cap = isqrt((2 * d - 1) * (2 * n - 2) + 3);
  SweepConfig cfg;
  cfg.d_max = d;
  cfg.mu_max = std::max<std::int64_t>(cap, 1);
  cfg.genus_max = 2 * cap + 1;
  std::set<Vec4> constructed;
  for (const auto& row : enumerate_families(cfg))
    if (row.d == d && row.n == n) constructed.insert(row.gamma.gamma);
  for (const auto& g : constructed) rep.constructed.push_back(TypeVector(g));

  for (const auto& t : rep.admissible)
    if (!constructed.count(t.gamma)) rep.unconstructed.push_back(t);
  return rep;
}

OracleReport oracle_crosscheck(std::int64_t d, std::int64_t n_max, FaultInjection fault) {
  OracleReport rep;
  if (d < 1) return rep;

  for (std::int64_t n = 1; n <= n_max; ++n) {
    // Admissibility recomputed from first principles, inline on purpose:
    // this path must stay independent of check_cover.
    std::set<Vec4> oracle_set;
    const std::int64_t rho = 1;
    bool rho_ok = (rho % 2 == 1) && rho <= 2 * d - 1;
    if (fault == FaultInjection::ramification_bound) rho_ok = rho <= 2 * d - 3;

    const std::int64_t bound = (2 * d - 1) * (2 * n - 2) + 4 - rho * rho;
    const std::int64_t cap = isqrt(bound);

    if (rho_ok && cap >= 0) {
      Vec4 g{};
      for (g[0] = 0; g[0] <= cap; ++g[0])
        for (g[1] = 0; g[1] <= cap; ++g[1])
          for (g[2] = 0; g[2] <= cap; ++g[2])
            for (g[3] = 0; g[3] <= cap; ++g[3]) {
              ++rep.cells_checked;

              bool parity_ok = ((g[0] + 1) % 2 == g[1] % 2) && (g[1] % 2 == g[2] % 2) &&
                               (g[2] % 2 == g[3] % 2) && (g[3] % 2 == n % 2);
              if (fault == FaultInjection::parity)
                parity_ok = (g[0] % 2 == g[1] % 2) && (g[1] % 2 == g[2] % 2) &&
                            (g[2] % 2 == g[3] % 2) && (g[3] % 2 == n % 2);

              const std::int64_t sq = g[0] * g[0] + g[1] * g[1] + g[2] * g[2] + g[3] * g[3];
              bool quad_ok = sq <= bound;
              if (fault == FaultInjection::quadratic_bound) quad_ok = sq < bound;

              const std::int64_t lin = g[0] + g[1] + g[2] + g[3];
              bool genus_ok = lin >= 1;  // g = 0 satisfies 2g+1 <= gamma^(1)
              if (fault == FaultInjection::genus_bound) genus_ok = lin >= 3;

              if (parity_ok && quad_ok && genus_ok) oracle_set.insert(g);
            }
    }

    std::set<Vec4> impl_set;
    for (const auto& entry : enumerate_admissible(d, n, rho)) impl_set.insert(entry.gamma.gamma);

    for (const auto& g : impl_set)
      if (!oracle_set.count(g)) rep.mismatches.push_back({n, TypeVector(g), "impl-only"});
    for (const auto& g : oracle_set)
      if (!impl_set.count(g)) rep.mismatches.push_back({n, TypeVector(g), "oracle-only"});

    // Degree relation: for every gamma in the cube saturating
    // gamma^(2) = (2d-1)(2n-2)+3 the implementation must recover this n.
    if (cap >= 0) {
      Vec4 g{};
      for (g[0] = 0; g[0] <= cap; ++g[0])
        for (g[1] = 0; g[1] <= cap; ++g[1])
          for (g[2] = 0; g[2] <= cap; ++g[2])
            for (g[3] = 0; g[3] <= cap; ++g[3]) {
              const std::int64_t sq = g[0] * g[0] + g[1] * g[1] + g[2] * g[2] + g[3] * g[3];
              if (sq != (2 * d - 1) * (2 * n - 2) + 3) continue;
              std::int64_t expected = n;
              if (fault == FaultInjection::degree_relation) expected = n - 1;
              const auto dg = try_degree_genus(d, TypeVector(g));
              if (!dg || dg->n != expected) rep.mismatches.push_back({n, TypeVector(g), "degree"});
            }
    }
  }
  return rep;
}

std::string to_string(FaultInjection f) {
  switch (f) {
    case FaultInjection::none: return "none";
    case FaultInjection::parity: return "parity";
    case FaultInjection::genus_bound: return "genus-bound";
    case FaultInjection::quadratic_bound: return "quadratic-bound";
    case FaultInjection::ramification_bound: return "ramification-bound";
    case FaultInjection::degree_relation: return "degree-relation";
  }
  return "unknown";
}

}  // namespace oscover
