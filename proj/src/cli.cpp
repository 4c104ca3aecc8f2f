#include "oscover/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "oscover/certificates.hpp"
#include "oscover/verify.hpp"

namespace oscover {

namespace {

// malformed input syntax, as opposed to a valid request outside the domain
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Vec4 to_vec4(const std::vector<std::int64_t>& v, const std::string& flag) {
  if (v.size() != 4) throw UsageError("--" + flag + " expects exactly 4 comma-separated integers");
  return {v[0], v[1], v[2], v[3]};
}

Json parse_json_flag(const std::string& text, const std::string& flag) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError("--" + flag + " is not valid JSON: " + std::string(e.what()));
  }
}

}  // namespace

int CommandResult::exit_code() const {
  switch (status) {
    case Status::ok: return 0;
    case Status::domain_error: return 1;
    case Status::usage_error: return 2;
    case Status::inconsistency: return 3;
  }
  return 1;
}

CommandResult run(const std::vector<std::string>& args) {
  CLI::App app{"exact divisor-lattice engine for hyperelliptic covers of an elliptic curve"};
  app.require_subcommand(0, 1);

  // check-cover
  auto* cover_cmd = app.add_subcommand("check-cover", "evaluate the necessary conditions");
  std::int64_t cc_d = 1, cc_n = 1, cc_rho = 1, cc_g = 0;
  std::vector<std::int64_t> cc_gamma;
  cover_cmd->add_option("--d", cc_d, "osculating order")->required();
  cover_cmd->add_option("--n", cc_n, "degree")->required();
  cover_cmd->add_option("--rho", cc_rho, "ramification index (default 1)");
  cover_cmd->add_option("--g", cc_g, "arithmetic genus")->required();
  cover_cmd->add_option("--gamma", cc_gamma, "type gamma0,gamma1,gamma2,gamma3")
      ->required()
      ->delimiter(',');

  // build-family
  auto* build_cmd = app.add_subcommand("build-family", "construct and verify one family");
  std::int64_t bf_d = 1;
  std::vector<std::int64_t> bf_mu;
  std::string bf_family = "A";
  int bf_k = 0;
  std::vector<std::int64_t> bf_signs;
  std::string bf_convention = "french";
  build_cmd->add_option("--d", bf_d, "osculating order")->required();
  build_cmd->add_option("--mu", bf_mu, "mu0,mu1,mu2,mu3")->required()->delimiter(',');
  build_cmd->add_option("--family", bf_family, "offset pattern A or B")
      ->check(CLI::IsMember({"A", "B"}));
  build_cmd->add_option("--k", bf_k, "distinguished index 0..3");
  build_cmd->add_option("--signs", bf_signs, "s0,s1,s2,s3 each +1 or -1")->delimiter(',');
  build_cmd->add_option("--eps-convention", bf_convention, "offset normalization")
      ->check(CLI::IsMember({"french", "english"}));

  // enumerate
  auto* enum_cmd = app.add_subcommand("enumerate", "sweep all constructed families");
  std::int64_t en_dmax = 2, en_mumax = 3, en_gmax = 1000;
  std::string en_format = "csv", en_out;
  enum_cmd->add_option("--d-max", en_dmax, "maximal osculating order")->required();
  enum_cmd->add_option("--mu-max", en_mumax, "componentwise bound on mu")->required();
  enum_cmd->add_option("--genus-max", en_gmax, "genus ceiling");
  enum_cmd->add_option("--format", en_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  enum_cmd->add_option("--out", en_out, "output path (stdout when omitted)");

  // intersect
  auto* int_cmd = app.add_subcommand("intersect", "intersection number of two classes");
  std::string in_a, in_b;
  int_cmd->add_option("--a", in_a, "first class as JSON")->required();
  int_cmd->add_option("--b", in_b, "second class as JSON")->required();

  // genus
  auto* genus_cmd = app.add_subcommand("genus", "arithmetic genus by adjunction");
  std::string ge_class;
  genus_cmd->add_option("--class", ge_class, "divisor class as JSON")->required();

  // verify-paper
  auto* verify_cmd = app.add_subcommand("verify-paper", "run the full consistency suite");
  std::int64_t vp_dmax = 4, vp_mumax = 5;
  verify_cmd->add_option("--d-max", vp_dmax, "maximal osculating order");
  verify_cmd->add_option("--mu-max", vp_mumax, "componentwise bound on mu");

  CommandResult result;

  std::vector<const char*> argv;
  argv.push_back("oscover");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());

    if (app.get_subcommands().empty()) {
      result.status = CommandResult::Status::usage_error;
      result.diagnostics.push_back({Diagnostic::Severity::error,
                                    "a subcommand is required; see --help"});
      return result;
    }

    if (cover_cmd->parsed()) {
      const CoverSpec spec{cc_d, cc_n, cc_rho, cc_g, TypeVector(to_vec4(cc_gamma, "gamma"))};
      result.payload = to_json(check_cover(spec), spec);
    } else if (build_cmd->parsed()) {
      EpsilonChoice eps;
      eps.family = bf_family == "A" ? EpsFamily::A : EpsFamily::B;
      eps.k = bf_k;
      if (!bf_signs.empty()) {
        const Vec4 sv = to_vec4(bf_signs, "signs");
        for (std::size_t i = 0; i < 4; ++i) eps.signs[i] = static_cast<int>(sv[i]);
      }
      eps.convention =
          bf_convention == "french" ? EpsConvention::french : EpsConvention::english;
      const FamilySpec fam = build_family(bf_d, MuVector(to_vec4(bf_mu, "mu")), eps);
      Json out = to_json(fam);
      out["certificates"] =
          Json{{"irreducibility", to_json(irreducibility_certificate(theorem_certificate_for(fam)))},
               {"hyperelliptic_weierstrass", to_json(hyperelliptic_weierstrass_certificate(fam))}};
      result.payload = out;
    } else if (enum_cmd->parsed()) {
      SweepConfig cfg;
      cfg.d_max = en_dmax;
      cfg.mu_max = en_mumax;
      cfg.genus_max = en_gmax;
      cfg.format = en_format == "csv" ? SweepConfig::Format::csv : SweepConfig::Format::json;
      const auto rows = enumerate_families(cfg);
      std::string body = cfg.format == SweepConfig::Format::csv ? families_csv(rows)
                                                                : to_json(rows).dump(2) + "\n";
      if (en_out.empty()) {
        result.payload = Json{{"rows", rows.size()}};
        result.payload["body"] = body;  // replaced by raw text in run_main
      } else {
        std::ofstream out(en_out, std::ios::binary);
        if (!out) throw DomainError("cannot open output path: " + en_out);
        out << body;
        result.payload = Json{{"rows", rows.size()}, {"out", en_out}};
      }
    } else if (int_cmd->parsed()) {
      const PicClass a = picclass_from_json(parse_json_flag(in_a, "a"));
      const PicClass b = picclass_from_json(parse_json_flag(in_b, "b"));
      result.payload = Json{{"a", to_json(a)}, {"b", to_json(b)}, {"value", intersect(a, b)}};
    } else if (genus_cmd->parsed()) {
      const PicClass cls = picclass_from_json(parse_json_flag(ge_class, "class"));
      result.payload = Json{{"class", to_json(cls)}, {"genus", adjunction_genus(cls)}};
    } else if (verify_cmd->parsed()) {
      const VerifyReport rep = verify_paper(vp_dmax, vp_mumax);
      result.payload = to_json(rep);
      if (!rep.pass()) {
        result.status = CommandResult::Status::inconsistency;
        result.diagnostics.push_back(
            {Diagnostic::Severity::error, "one or more consistency criteria failed"});
      }
    }
  } catch (const CLI::CallForHelp&) {
    result.payload = Json{{"help", app.help()}};
  } catch (const CLI::ParseError& e) {
    result.status = CommandResult::Status::usage_error;
    result.diagnostics.push_back({Diagnostic::Severity::error, e.what()});
  } catch (const UsageError& e) {
    result.status = CommandResult::Status::usage_error;
    result.diagnostics.push_back({Diagnostic::Severity::error, e.what()});
  } catch (const InconsistencyError& e) {
    result.status = CommandResult::Status::inconsistency;
    result.diagnostics.push_back({Diagnostic::Severity::error, e.what()});
    Json detail{{"check", e.check()}};
    if (e.lhs()) detail["lhs"] = to_json(*e.lhs());
    if (e.rhs()) detail["rhs"] = to_json(*e.rhs());
    result.payload = detail;
  } catch (const DataError& e) {
    result.status = CommandResult::Status::inconsistency;
    result.diagnostics.push_back({Diagnostic::Severity::error, e.what()});
  } catch (const DomainError& e) {
    result.status = CommandResult::Status::domain_error;
    result.diagnostics.push_back({Diagnostic::Severity::error, e.what()});
  } catch (const OverflowError& e) {
    result.status = CommandResult::Status::domain_error;
    result.diagnostics.push_back({Diagnostic::Severity::error, e.what()});
  }
  return result;
}

int run_main(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  CommandResult result = run(args);

  for (const auto& diag : result.diagnostics) std::cerr << diag.message << "\n";

  if (result.payload.is_object() && result.payload.contains("help")) {
    std::cout << result.payload["help"].get<std::string>();
  } else if (result.payload.is_object() && result.payload.contains("body")) {
    std::cout << result.payload["body"].get<std::string>();
  } else if (!result.payload.is_null()) {
    std::cout << result.payload.dump(2) << "\n";
  }
  return result.exit_code();
}

}  // namespace oscover
