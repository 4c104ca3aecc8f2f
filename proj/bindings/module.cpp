#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "oscover/certificates.hpp"
#include "oscover/json_io.hpp"
#include "oscover/verify.hpp"

namespace py = pybind11;
using namespace oscover;

namespace {

std::string dump(const Json& j) { return j.dump(); }

EpsilonChoice make_eps(const std::string& family, int k, const std::array<int, 4>& signs,
                       const std::string& convention) {
  EpsilonChoice eps;
  if (family != "A" && family != "B") throw DomainError("family must be 'A' or 'B'");
  eps.family = family == "A" ? EpsFamily::A : EpsFamily::B;
  eps.k = k;
  eps.signs = signs;
  if (convention != "french" && convention != "english")
    throw DomainError("convention must be 'french' or 'english'");
  eps.convention = convention == "french" ? EpsConvention::french : EpsConvention::english;
  return eps;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact divisor-lattice engine for hyperelliptic covers of an elliptic curve";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<DataError>(m, "DataError", PyExc_ValueError);
  py::register_exception<OverflowError>(m, "CoefficientOverflow", PyExc_OverflowError);
  py::register_exception<InconsistencyError>(m, "InconsistencyError", PyExc_RuntimeError);

  py::class_<HalfPeriod>(m, "HalfPeriod")
      .def(py::init<int>(), py::arg("label"))
      .def_property_readonly("label", &HalfPeriod::label)
      .def_property_readonly("is_origin", &HalfPeriod::is_origin)
      .def(py::self + py::self)
      .def(py::self == py::self)
      .def("__repr__", [](HalfPeriod w) { return to_string(w); });

  m.def("torsion_of_fibers", [](const Vec4& fibers) { return torsion_of_fibers(fibers); },
        py::arg("fibers"));

  py::class_<PicClass>(m, "PicClass")
      .def(py::init([](std::int64_t c, const Vec4& fibers, const Vec4& s, const Vec4& r) {
             PicClass out;
             out.c = c;
             out.fibers = fibers;
             out.s = s;
             out.r = r;
             return out;
           }),
           py::arg("c") = 0, py::arg("fibers") = Vec4{0, 0, 0, 0},
           py::arg("s") = Vec4{0, 0, 0, 0}, py::arg("r") = Vec4{0, 0, 0, 0})
      .def_readwrite("c", &PicClass::c)
      .def_readwrite("fibers", &PicClass::fibers)
      .def_readwrite("s", &PicClass::s)
      .def_readwrite("r", &PicClass::r)
      .def_property_readonly("fiber_degree", &PicClass::fiber_degree)
      .def_property_readonly("torsion", &PicClass::torsion)
      .def_static("section", &PicClass::section)
      .def_static("fiber", &PicClass::fiber, py::arg("w"))
      .def_static("s_exceptional", &PicClass::s_exceptional, py::arg("i"))
      .def_static("r_exceptional", &PicClass::r_exceptional, py::arg("i"))
      .def_static("strict_section", &PicClass::strict_section)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self == py::self)
      .def("__rmul__", [](const PicClass& a, std::int64_t t) { return t * a; })
      .def("to_json", [](const PicClass& p) { return dump(to_json(p)); })
      .def_static("from_json",
                  [](const std::string& text) { return picclass_from_json(Json::parse(text)); })
      .def("__repr__", [](const PicClass& p) { return dump(to_json(p)); });

  m.def("intersect", &intersect, py::arg("a"), py::arg("b"));
  m.def("canonical_class", &canonical_class);
  m.def("adjunction_genus", &adjunction_genus, py::arg("d"));
  m.def("lin_equiv", &lin_equiv, py::arg("a"), py::arg("b"));
  m.def("relabel", &relabel, py::arg("cls"), py::arg("perm"));

  py::class_<TypeVector>(m, "TypeVector")
      .def(py::init<const Vec4&>(), py::arg("gamma"))
      .def_readonly("gamma", &TypeVector::gamma)
      .def_property_readonly("sum", &TypeVector::sum)
      .def_property_readonly("sum_squares", &TypeVector::sum_squares)
      .def(py::self == py::self)
      .def("__repr__", [](const TypeVector& t) { return dump(to_json(t)); });

  py::class_<CoverSpec>(m, "CoverSpec")
      .def(py::init([](std::int64_t d, std::int64_t n, std::int64_t rho, std::int64_t g,
                       const Vec4& gamma) {
             return CoverSpec{d, n, rho, g, TypeVector(gamma)};
           }),
           py::arg("d"), py::arg("n"), py::arg("rho"), py::arg("g"), py::arg("gamma"))
      .def_readonly("d", &CoverSpec::d)
      .def_readonly("n", &CoverSpec::n)
      .def_readonly("rho", &CoverSpec::rho)
      .def_readonly("g", &CoverSpec::g)
      .def_readonly("type", &CoverSpec::type)
      .def("__repr__", [](const CoverSpec& s) { return dump(to_json(s)); });

  m.def("osculating_gap_order", &osculating_gap_order, py::arg("d"), py::arg("g"));

  py::class_<CoverReport>(m, "CoverReport")
      .def_property_readonly("pass_", &CoverReport::pass)
      .def("violations",
           [](const CoverReport& r) {
             std::vector<std::string> out;
             for (const auto& v : r.violations()) out.push_back(v.name);
             return out;
           })
      .def("__bool__", &CoverReport::pass);

  m.def("check_cover", &check_cover, py::arg("spec"));

  py::class_<MuVector>(m, "MuVector")
      .def(py::init<const Vec4&>(), py::arg("mu"))
      .def_readonly("mu", &MuVector::mu)
      .def(py::self == py::self);

  py::class_<EpsilonChoice>(m, "EpsilonChoice")
      .def(py::init(&make_eps), py::arg("family") = "A", py::arg("k") = 0,
           py::arg("signs") = std::array<int, 4>{1, 1, 1, 1}, py::arg("convention") = "french")
      .def_property_readonly("family",
                             [](const EpsilonChoice& e) { return to_string(e.family); })
      .def_readonly("k", &EpsilonChoice::k)
      .def_readonly("signs", &EpsilonChoice::signs);

  m.def("epsilon_vector", &epsilon_vector, py::arg("d"), py::arg("eps"));
  m.def("gamma_of", &gamma_of, py::arg("d"), py::arg("mu"), py::arg("eps"));

  py::class_<DegreeGenus>(m, "DegreeGenus")
      .def_readonly("n", &DegreeGenus::n)
      .def_readonly("g", &DegreeGenus::g);

  m.def("degree_genus_of", &degree_genus_of, py::arg("d"), py::arg("gamma"));
  m.def("closed_form_degree", &closed_form_degree, py::arg("d"), py::arg("mu"), py::arg("eps"));
  m.def("z_class", &z_class, py::arg("alpha"), py::arg("k"));
  m.def("lambda_class", &lambda_class, py::arg("d"), py::arg("n"), py::arg("gamma"));

  py::class_<MembershipReport>(m, "MembershipReport")
      .def_readonly("member", &MembershipReport::member)
      .def_readonly("obstructions", &MembershipReport::obstructions)
      .def_readonly("difference", &MembershipReport::difference)
      .def("to_json", [](const MembershipReport& r) { return dump(to_json(r)); });

  m.def("membership_report", &membership_report, py::arg("cls"), py::arg("lambda_cls"));

  py::class_<FamilySpec>(m, "FamilySpec")
      .def_readonly("d", &FamilySpec::d)
      .def_readonly("n", &FamilySpec::n)
      .def_readonly("g", &FamilySpec::g)
      .def_readonly("gamma", &FamilySpec::gamma)
      .def_readonly("family_dimension", &FamilySpec::family_dimension)
      .def_property_readonly("lambda_class", [](const FamilySpec& f) { return f.lambda; })
      .def_readonly("witness_matches_type", &FamilySpec::witness_matches_type)
      .def("to_json", [](const FamilySpec& f) { return dump(to_json(f)); });

  m.def("build_family", &build_family, py::arg("d"), py::arg("mu"), py::arg("eps"));

  py::class_<IrreducibilityReport>(m, "IrreducibilityReport")
      .def_readonly("pass_", &IrreducibilityReport::pass)
      .def("to_json", [](const IrreducibilityReport& r) { return dump(to_json(r)); });

  py::class_<WeierstrassReport>(m, "WeierstrassReport")
      .def_readonly("pass_", &WeierstrassReport::pass)
      .def_readonly("cover", &WeierstrassReport::cover)
      .def("to_json", [](const WeierstrassReport& r) { return dump(to_json(r)); });

  py::class_<CurveCertificate>(m, "CurveCertificate")
      .def(py::init<>())
      .def_readwrite("cls", &CurveCertificate::cls)
      .def_readwrite("declared_support_excludes", &CurveCertificate::declared_support_excludes)
      .def_readwrite("declared_c0_meets_only_marked_point",
                     &CurveCertificate::declared_c0_meets_only_marked_point)
      .def_readwrite("declared_s_intersections", &CurveCertificate::declared_s_intersections);

  py::enum_<CurveKind>(m, "CurveKind")
      .value("c0_strict", CurveKind::c0_strict)
      .value("s_exceptional", CurveKind::s_exceptional)
      .value("r_exceptional", CurveKind::r_exceptional)
      .value("z_curve", CurveKind::z_curve);

  m.def("irreducibility_certificate", &irreducibility_certificate, py::arg("cert"));
  m.def("theorem_certificate_for", &theorem_certificate_for, py::arg("family"));
  m.def("hyperelliptic_weierstrass_certificate", &hyperelliptic_weierstrass_certificate,
        py::arg("family"));

  py::class_<AdmissibleType>(m, "AdmissibleType")
      .def_readonly("gamma", &AdmissibleType::gamma)
      .def_readonly("g_max", &AdmissibleType::g_max);

  m.def("enumerate_admissible", &enumerate_admissible, py::arg("d"), py::arg("n"), py::arg("rho"));

  py::class_<SweepConfig>(m, "SweepConfig")
      .def(py::init([](std::int64_t d_max, std::int64_t mu_max, std::int64_t genus_max) {
             SweepConfig cfg;
             cfg.d_max = d_max;
             cfg.mu_max = mu_max;
             cfg.genus_max = genus_max;
             return cfg;
           }),
           py::arg("d_max"), py::arg("mu_max"), py::arg("genus_max") = 1000);

  py::class_<FamilyRow>(m, "FamilyRow")
      .def_readonly("d", &FamilyRow::d)
      .def_readonly("gamma", &FamilyRow::gamma)
      .def_readonly("n", &FamilyRow::n)
      .def_readonly("g", &FamilyRow::g)
      .def_readonly("dim", &FamilyRow::dim);

  m.def("enumerate_families", &enumerate_families, py::arg("cfg"));
  m.def("families_csv",
        [](const SweepConfig& cfg) { return families_csv(enumerate_families(cfg)); },
        py::arg("cfg"));

  py::class_<GapReport>(m, "GapReport")
      .def_readonly("d", &GapReport::d)
      .def_readonly("n", &GapReport::n)
      .def_readonly("admissible", &GapReport::admissible)
      .def_readonly("constructed", &GapReport::constructed)
      .def_readonly("unconstructed", &GapReport::unconstructed);

  m.def("construction_gap", &construction_gap, py::arg("d"), py::arg("n"));

  py::enum_<FaultInjection>(m, "FaultInjection")
      .value("none", FaultInjection::none)
      .value("parity", FaultInjection::parity)
      .value("genus_bound", FaultInjection::genus_bound)
      .value("quadratic_bound", FaultInjection::quadratic_bound)
      .value("ramification_bound", FaultInjection::ramification_bound)
      .value("degree_relation", FaultInjection::degree_relation);

  py::class_<OracleReport>(m, "OracleReport")
      .def_property_readonly("clean", &OracleReport::clean)
      .def_readonly("cells_checked", &OracleReport::cells_checked)
      .def("to_json", [](const OracleReport& r) { return dump(to_json(r)); });

  m.def("oracle_crosscheck", &oracle_crosscheck, py::arg("d"), py::arg("n_max"),
        py::arg("fault") = FaultInjection::none);

  py::class_<VerifyReport>(m, "VerifyReport")
      .def_property_readonly("pass_", &VerifyReport::pass)
      .def("to_json", [](const VerifyReport& r) { return dump(to_json(r)); });

  m.def("verify_paper", &verify_paper, py::arg("d_max"), py::arg("mu_max"));

  m.attr("__version__") = "0.1.0";
}
