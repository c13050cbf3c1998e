#include "tevtrop/core.hpp"
#include "tevtrop/covers.hpp"
#include "tevtrop/formulas.hpp"
#include "tevtrop/grid.hpp"
#include "tevtrop/hurwitz.hpp"
#include "tevtrop/paths.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace tevtrop;

namespace {

py::object to_py_int(const BigInt& v) {
  return py::module_::import("builtins").attr("int")(v.str());
}

py::object to_py_fraction(const BigRat& r) {
  auto fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py_int(numerator(r)), to_py_int(denominator(r)));
}

using MuArg = std::optional<std::vector<std::vector<int>>>;

Params params_from(int g, int ell, const MuArg& mu) {
  if (!mu) return Params::all_simple(g, ell);
  std::vector<Profile> mus;
  for (const auto& parts : *mu) mus.emplace_back(parts);
  return Params(g, ell, std::move(mus));
}

py::dict cell_dict(const GridCell& cell) {
  py::dict d;
  d["word"] = cell.word;
  d["j"] = cell.j;
  d["delta"] = cell.delta;
  d["joined_ends"] = cell.joined_ends;
  d["merge_size"] = cell.merge_size;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Exact tropical Tevelev degrees: closed formulas, grid enumeration, "
      "and explicit cover construction.";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<OracleRangeError>(m, "OracleRangeError",
                                           PyExc_ValueError);

  m.def(
      "deg",
      [](int g, int ell, const MuArg& mu) {
        const DegreeValue dv =
            mu ? tev_general(params_from(g, ell, mu)) : tev_ell(g, ell);
        return to_py_int(dv.value);
      },
      py::arg("g"), py::arg("ell"), py::arg("mu") = py::none(),
      "Tropical Tevelev degree; mu is an optional list of profiles "
      "(lists of positive parts), default all-simple.");

  m.def(
      "deg_info",
      [](int g, int ell, const MuArg& mu) {
        const DegreeValue dv =
            mu ? tev_general(params_from(g, ell, mu)) : tev_ell(g, ell);
        py::dict out;
        out["value"] = to_py_int(dv.value);
        out["provenance"] = to_string(dv.provenance);
        return out;
      },
      py::arg("g"), py::arg("ell"), py::arg("mu") = py::none(),
      "Degree together with the name of the formula that produced it.");

  m.def(
      "validate",
      [](int g, int ell, const MuArg& mu) {
        return tevtrop::validate(params_from(g, ell, mu)).violations;
      },
      py::arg("g"), py::arg("ell"), py::arg("mu") = py::none(),
      "List of violation messages; empty when the instance is valid.");

  m.def(
      "grid",
      [](int g, int ell, const MuArg& mu) {
        const Grid grid = mu ? build_grid_general(params_from(g, ell, mu))
                             : build_grid(g, ell);
        py::list out;
        for (const GridCell& cell : grid.cells) out.append(cell_dict(cell));
        return out;
      },
      py::arg("g"), py::arg("ell"), py::arg("mu") = py::none(),
      "Grid cells as dicts with word, j, delta, joined_ends, merge_size.");

  m.def(
      "covers",
      [](int g, int ell) {
        Params p = Params::all_simple(g, ell);
        py::list out;
        for (const GridCell& cell : build_grid(g, ell).cells) {
          const TropicalCover cover = build_cover(cell, p);
          const MultiplicityReport rep = multiplicity(cover);
          py::dict entry = cell_dict(cell);
          entry["multiplicity"] = to_py_fraction(rep.value);
          entry["determinant"] = to_py_int(rep.det_abs);
          entry["fingerprint"] = cover_fingerprint(cover);
          out.append(entry);
        }
        return out;
      },
      py::arg("g"), py::arg("ell"),
      "One verified cover per grid cell (all-simple profiles, g >= 1), "
      "with exact multiplicity and dilation determinant.");

  m.def(
      "hurwitz",
      [](int d, const std::vector<std::vector<int>>& profiles, bool marked) {
        if (profiles.size() != 3) {
          throw DomainError("hurwitz expects exactly three profiles");
        }
        LocalHurwitzQuery q;
        q.d = d;
        q.profiles = {Profile(profiles[0]), Profile(profiles[1]),
                      Profile(profiles[2])};
        q.marked = marked;
        return to_py_fraction(local_hurwitz(q));
      },
      py::arg("d"), py::arg("profiles"), py::arg("marked") = true,
      "Local Hurwitz number for a trivalent vertex (catalog, else oracle).");

  m.def(
      "count_exact",
      [](int g, int i) { return to_py_int(tevtrop::count_exact(g, i)); },
      py::arg("g"), py::arg("i"),
      "Genus words with exactly i descents.");

  m.def(
      "count_at_least",
      [](int g, int i) { return to_py_int(tevtrop::count_at_least(g, i)); },
      py::arg("g"), py::arg("i"),
      "Genus words with at most i descents (final degree at least g+1-2i).");

  m.def(
      "l2_feasible",
      [](int d, int j1, int j2, int L1, int L2, int L3) {
        return l2_decomposition_exists(d, j1, j2, L1, L2, L3);
      },
      py::arg("d"), py::arg("j1"), py::arg("j2"), py::arg("L1"),
      py::arg("L2"), py::arg("L3"),
      "Whether some decomposition witnesses the middle-fragment datum.");

  m.attr("__version__") = "1.0.0";
}
