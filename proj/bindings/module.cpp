#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "toricsg/ensemble.hpp"
#include "toricsg/ktheory.hpp"
#include "toricsg/report.hpp"
#include "toricsg/verify.hpp"
#include "toricsg/version.hpp"

namespace py = pybind11;
using namespace toricsg;

namespace {

using Pair = std::pair<i64, i64>;

Vec2 to_vec(Pair p) { return {p.first, p.second}; }
Pair from_vec(Vec2 v) { return {v.x, v.y}; }

std::vector<Vec2> to_vecs(const std::vector<Pair>& ps) {
    std::vector<Vec2> out;
    out.reserve(ps.size());
    for (Pair p : ps) out.push_back(to_vec(p));
    return out;
}

py::object json_to_py(const json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

py::dict group_dict(const AbelianGroup& g) {
    py::dict d;
    d["free_rank"] = g.free_rank;
    d["torsion"] = g.torsion;
    d["name"] = g.str();
    return d;
}

}  // namespace

PYBIND11_MODULE(toricsg, m) {
    m.doc() = "Structural invariants and C*-algebra K-theory of finitely generated "
              "subsemigroups of Z^2, with exact brute-force verification.";
    m.attr("__version__") = kVersion;

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<BoundTooLarge>(m, "BoundTooLarge", PyExc_RuntimeError);
    py::register_exception<NotMember>(m, "NotMember", PyExc_ValueError);
    py::register_exception<OnFace>(m, "OnFace", PyExc_ValueError);

    py::class_<ToricSemigroup>(m, "ToricSemigroup")
        .def_static(
            "validate",
            [](const std::vector<Pair>& gens) { return ToricSemigroup::validate(to_vecs(gens)); },
            py::arg("generators"))
        .def_property_readonly("generators",
                               [](const ToricSemigroup& S) {
                                   std::vector<Pair> out;
                                   for (Vec2 g : S.generators()) out.push_back(from_vec(g));
                                   return out;
                               })
        .def("ray", [](const ToricSemigroup& S, int j) { return from_vec(S.ray(j).r); },
             py::arg("j"))
        .def("asymptotic_generator",
             [](const ToricSemigroup& S, int j) { return from_vec(S.asymptotic_generator(j)); },
             py::arg("j"))
        .def("face",
             [](const ToricSemigroup& S, int j) {
                 const Face& f = S.face(j);
                 py::dict d;
                 d["ray"] = from_vec(f.ray.r);
                 d["coefficients"] = f.coefficients;
                 d["d"] = f.d;
                 d["asymptotic_generator"] = from_vec(f.asymptotic_generator);
                 d["gaps"] = f.gaps;
                 d["conductor"] = f.conductor;
                 return d;
             },
             py::arg("j"))
        .def("saturation_member",
             [](const ToricSemigroup& S, Pair p) { return S.saturation_member(to_vec(p)); },
             py::arg("p"));

    m.def("k_theory",
          [](const ToricSemigroup& S) {
              KTheoryReport r = k_theory(S);
              py::dict d;
              d["a1"] = from_vec(r.a1);
              d["a2"] = from_vec(r.a2);
              d["M"] = std::vector<std::vector<i64>>{{r.M.a, r.M.b}, {r.M.c, r.M.d}};
              d["Mperp"] =
                  std::vector<std::vector<i64>>{{r.Mperp.a, r.Mperp.b}, {r.Mperp.c, r.Mperp.d}};
              d["detM"] = r.detM;
              d["snf_factors"] = r.snf_factors;
              d["sf_quotient"] = group_dict(r.sf_quotient);
              d["K0"] = group_dict(r.K0);
              d["K1"] = group_dict(r.K1);
              return d;
          },
          py::arg("semigroup"));

    m.def("gap_analysis",
          [](const std::vector<i64>& gens) {
              NumericalSemigroup ns = analyze_numerical_semigroup(gens);
              py::dict d;
              d["d"] = ns.d;
              d["reduced_generators"] = ns.reduced_generators;
              d["apery"] = ns.apery;
              d["gaps"] = ns.gaps;
              d["frobenius"] = ns.frobenius;
              d["conductor"] = ns.conductor;
              return d;
          },
          py::arg("generators"));

    py::class_<Oracle>(m, "Oracle")
        .def(py::init<ToricSemigroup, i64>(), py::arg("semigroup"),
             py::arg("cell_cap") = Oracle::kDefaultCellCap)
        .def("member", [](Oracle& o, Pair p) { return o.member(to_vec(p)); }, py::arg("p"))
        .def("enumerate",
             [](Oracle& o, i64 bound) {
                 std::vector<Pair> out;
                 // the table may round its bound up; keep only the window
                 for (Vec2 p : o.table(bound).members())
                     if (o.functional(p) <= bound) out.push_back(from_vec(p));
                 return out;
             },
             py::arg("bound"))
        .def("index_map",
             [](Oracle& o, Pair s, int j) { return index_map(o, to_vec(s), j); }, py::arg("s"),
             py::arg("j"))
        .def("find_translator",
             [](Oracle& o, const std::vector<Pair>& ys) {
                 return from_vec(o.find_translator(to_vecs(ys)));
             },
             py::arg("points"))
        .def("independence_failure_check", &Oracle::independence_failure_check,
             py::arg("bound"));

    m.def("analyze_report",
          [](const std::vector<Pair>& gens) {
              InstanceSpec spec{"", to_vecs(gens)};
              ToricSemigroup S = ToricSemigroup::validate(spec.generators);
              json rep = base_report(spec);
              rep["semigroup"] = semigroup_json(S);
              rep["ktheory"] = k_theory(S);
              return json_to_py(rep);
          },
          py::arg("generators"), "Full analysis report as a plain dict.");

    m.def("verify_report",
          [](const std::vector<Pair>& gens, i64 bound, i64 budget) {
              ToricSemigroup S = ToricSemigroup::validate(to_vecs(gens));
              VerifyOptions opt;
              opt.bound = bound;
              opt.budget = budget;
              VerifyOutcome v = verify_instance(S, opt);
              json rep{{"checks", v.checks},
                       {"mismatch", v.mismatch},
                       {"budget_exhausted", v.budget_exhausted}};
              return json_to_py(rep);
          },
          py::arg("generators"), py::arg("bound") = 200, py::arg("budget") = 64,
          "All oracle checks as a plain dict.");

    m.def("generate_ensemble",
          [](int count, std::uint64_t seed, i64 coord_max) {
              std::vector<std::vector<Pair>> out;
              for (const auto& spec : generate_ensemble(count, seed, coord_max)) {
                  std::vector<Pair> gens;
                  for (Vec2 g : spec.generators) gens.push_back(from_vec(g));
                  out.push_back(std::move(gens));
              }
              return out;
          },
          py::arg("count"), py::arg("seed"), py::arg("coord_max") = 8);
}
