#include "monores/cli.hpp"
#include "monores/eagon.hpp"
#include "monores/io.hpp"
#include "monores/lattice.hpp"
#include "monores/resolution.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace monores;

namespace {

using Exps = std::vector<Exponent>;

py::int_ to_py(const mpz_class& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

py::tuple to_tuple(const Multidegree& m) {
  py::tuple t(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    t[i] = m[i];
  return t;
}

MonomialIdeal make_ideal(const std::vector<Exps>& gens, std::optional<std::vector<std::string>> vars) {
  Json doc;
  doc["gens"] = gens;
  if (vars)
    doc["vars"] = *vars;
  return parse_ideal_json(doc.dump());
}

py::dict series_terms(const BigradedSeries& s) {
  py::dict d;
  for (const auto& [key, c] : s.terms())
    d[py::make_tuple(key.t, to_tuple(key.y))] = to_py(c);
  return d;
}

py::dict homology_dict(const HomologyTable& h) {
  py::dict d;
  for (std::size_t i = 0; i < h.dims.size(); ++i)
    for (const auto& [j, n] : h.dims[i])
      if (n > 0)
        d[py::make_tuple(i, to_tuple(j))] = n;
  return d;
}

FreeComplex named_complex(const MonomialIdeal& I, const std::string& kind) {
  if (kind == "taylor")
    return taylor_complex(I);
  if (kind == "scarf")
    return scarf_complex(I);
  if (kind == "koszul")
    return koszul_complex(I, RingKind::quotient);
  if (kind == "koszul_s")
    return koszul_complex(I, RingKind::polynomial);
  throw InputError("unknown complex '" + kind + "'");
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Multigraded Poincare series and resolutions over monomial quotient rings";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

  py::class_<MonomialIdeal>(m, "Ideal")
      .def(py::init(&make_ideal), py::arg("gens"), py::arg("vars") = py::none())
      .def_static("from_json", &parse_ideal_json)
      .def_static("load", &load_ideal)
      .def_property_readonly("num_vars", &MonomialIdeal::num_vars)
      .def_property_readonly("vars", &MonomialIdeal::var_names)
      .def_property_readonly("gens", [](const MonomialIdeal& I) {
        std::vector<Exps> out;
        for (const auto& g : I.generators())
          out.push_back(g.vec());
        return out;
      })
      .def_property_readonly("lcm", [](const MonomialIdeal& I) { return I.lcm_all().vec(); })
      .def("is_generic", [](const MonomialIdeal& I) { return is_generic(I); })
      .def("to_json", [](const MonomialIdeal& I) { return ideal_to_json(I).dump(); })
      .def("__eq__", [](const MonomialIdeal& a, const MonomialIdeal& b) { return a == b; })
      .def("__repr__", [](const MonomialIdeal& I) { return "Ideal(" + I.to_string() + ")"; });

  py::class_<BigradedSeries>(m, "Series")
      .def_property_readonly("tmax", &BigradedSeries::tmax)
      .def_property_readonly("ybound", [](const BigradedSeries& s) { return s.ybound().vec(); })
      .def_property_readonly("terms", &series_terms)
      .def("coeff", [](const BigradedSeries& s, int t, const Exps& y) { return to_py(s.coeff(t, Multidegree(y))); })
      .def("to_json", [](const BigradedSeries& s) { return series_to_json(s).dump(); })
      .def("__eq__", [](const BigradedSeries& a, const BigradedSeries& b) { return a.same_terms(b); })
      .def("__str__", &BigradedSeries::to_string)
      .def("__repr__", [](const BigradedSeries& s) { return "Series(" + s.to_string() + ")"; });

  m.def("denominator", &denominator, py::arg("ideal"), py::arg("tmax") = -1, py::arg("char") = 0);
  m.def(
      "poincare_series",
      [](const MonomialIdeal& I, int tmax, bool padded, std::uint64_t p) {
        if (tmax < 0)
          tmax = default_tmax(I);
        return padded ? poincare_series(I, tmax, padded_bound(I), p) : poincare_series(I, tmax, p);
      },
      py::arg("ideal"), py::arg("tmax") = -1, py::arg("padded") = true, py::arg("char") = 0);
  m.def(
      "deviations",
      [](const MonomialIdeal& I, int nmax) {
        const auto table = deviations(poincare_series(I, nmax, padded_bound(I)), nmax);
        py::dict d;
        for (const auto& [key, e] : table)
          if (sgn(e) != 0)
            d[py::make_tuple(key.n, to_tuple(key.j))] = to_py(e);
        return d;
      },
      py::arg("ideal"), py::arg("nmax") = 6);
  m.def("candidate_terms", [](const MonomialIdeal& I) {
    std::vector<py::tuple> out;
    for (const auto& c : candidate_terms(I))
      out.push_back(py::make_tuple(c.sign, c.t_power, to_tuple(c.y)));
    return out;
  });
  m.def("verify_lcm", [](const MonomialIdeal& I) { return verify_lcm_coefficients(denominator(I), I); });

  m.def("golod_denominator", py::overload_cast<const MonomialIdeal&, int, std::uint64_t>(&golod_denominator),
        py::arg("ideal"), py::arg("tmax") = -1, py::arg("char") = 0);
  m.def(
      "is_golod",
      [](const MonomialIdeal& I, int tmax, std::uint64_t p) {
        return is_golod_truncated(I, tmax >= 0 ? tmax : static_cast<int>(I.lcm_all().total_degree()) + 2, p);
      },
      py::arg("ideal"), py::arg("tmax") = -1, py::arg("char") = 0);
  m.def("is_golod_generic", &is_golod_generic);

  m.def(
      "homology",
      [](const MonomialIdeal& I, const std::string& kind, unsigned jobs) {
        return homology_dict(homology(named_complex(I, kind), I.lcm_all(), jobs));
      },
      py::arg("ideal"), py::arg("complex") = "taylor", py::arg("jobs") = 1,
      "Multigraded homology dimensions {(i, j): dim} of a taylor, scarf, koszul or koszul_s complex.");
  m.def(
      "ranks", [](const MonomialIdeal& I, const std::string& kind) { return named_complex(I, kind).ranks(); },
      py::arg("ideal"), py::arg("complex") = "taylor");
  m.def(
      "betti",
      [](const MonomialIdeal& I, int tmax) {
        const auto res = resolve_residue_field(I, tmax >= 0 ? tmax : default_tmax(I), I.lcm_all());
        return res.complex.ranks();
      },
      py::arg("ideal"), py::arg("tmax") = -1);

  m.def(
      "eagon_check",
      [](const MonomialIdeal& I, int imax) {
        const auto res = eagon_resolution(I, imax);
        const auto chk = check_eagon(res, default_eagon_bound(I, imax));
        py::dict d;
        d["ranks"] = chk.ranks;
        d["formula_ranks"] = chk.formula_ranks;
        d["d_squared_zero"] = chk.d_squared_zero;
        d["exact"] = chk.exact;
        d["ok"] = chk.ok();
        return d;
      },
      py::arg("ideal"), py::arg("imax") = 5);
  m.def("eagon_rank_formula", &eagon_rank_formula);

  m.def("lattice_isomorphisms", [](const MonomialIdeal& a, const MonomialIdeal& b) {
    std::vector<py::dict> out;
    for (const auto& map : find_lattice_isomorphisms(a, b)) {
      py::dict d;
      d["atom_map"] = map.atom_map;
      d["gcd_preserving"] = map.gcd_preserving;
      d["transported"] = transport_denominator(denominator(a), map);
      out.push_back(d);
    }
    return out;
  });
  m.def("polarize", [](const MonomialIdeal& I) { return Polarization(I).polarized(); });
  m.def("polarization_transport", [](const MonomialIdeal& I) {
    const Polarization pol(I);
    return transport_denominator(denominator(pol.polarized()), polarization_lattice_map(pol));
  });

  m.def(
      "run",
      [](const std::string& command, const std::vector<std::string>& inputs, bool json, bool check) {
        RunConfig cfg;
        cfg.command = command;
        cfg.inputs = inputs;
        cfg.format = json ? OutputFormat::json : OutputFormat::table;
        cfg.check = check;
        std::ostringstream out, err;
        const int code = run(cfg, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("command"), py::arg("inputs"), py::arg("json") = false, py::arg("check") = false,
      "Runs a CLI subcommand in-process; returns (exit_code, stdout, stderr).");
}
