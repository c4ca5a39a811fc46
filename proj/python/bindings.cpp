#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cgap/commands.hpp"
#include "cgap/errors.hpp"
#include "cgap/extremal.hpp"
#include "cgap/frame.hpp"
#include "cgap/geometry.hpp"
#include "cgap/inequalities.hpp"
#include "cgap/lemmas.hpp"
#include "cgap/polygon_io.hpp"
#include "cgap/sweep.hpp"

namespace py = pybind11;
using namespace cgap;

namespace {

using XY = std::pair<double, double>;

ConvexPolygon polygon_from(const std::vector<XY>& pts) {
  std::vector<Point2> v;
  v.reserve(pts.size());
  for (auto [x, y] : pts) v.push_back({x, y});
  return make_polygon(v);
}

XY xy(Point2 p) { return {p.x, p.y}; }

py::dict frame_dict(const NormalizedFrame& f) {
  py::dict d;
  d["theta"] = f.theta_angle;
  d["reflected"] = f.reflected;
  d["scale_factor"] = f.scale_factor;
  d["omega"] = f.omega;
  d["ell"] = f.ell;
  d["slope"] = f.slope;
  d["alpha"] = f.alpha;
  d["A0"] = f.area0;
  d["P0"] = f.perimeter0;
  d["B"] = f.B;
  d["lambda5"] = f.lambda5;
  d["lambda6"] = f.lambda6;
  d["s"] = f.s;
  d["u"] = f.u ? py::object(py::float_(*f.u)) : py::object(py::none());
  d["c"] = f.c;
  d["b"] = f.b;
  d["rho"] = f.rho;
  std::vector<XY> vs;
  for (const auto& v : f.polygon.vertices()) vs.push_back(xy(v));
  d["vertices"] = vs;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Centroid gap of convex polygons: measures, profiles, lemma checks, extremal search";

  py::register_exception<DegenerateInput>(m, "DegenerateInput", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<OutOfRange>(m, "OutOfRange", PyExc_IndexError);
  py::register_exception<SkippedDegenerate>(m, "SkippedDegenerate", PyExc_RuntimeError);
  py::register_exception<InternalInvariantViolation>(m, "InternalInvariantViolation",
                                                      PyExc_AssertionError);

  py::class_<ConvexPolygon>(m, "ConvexPolygon")
      .def(py::init(&polygon_from), py::arg("points"),
           "Convex hull of the points; raises DegenerateInput without interior")
      .def_property_readonly("vertices",
                             [](const ConvexPolygon& p) {
                               std::vector<XY> out;
                               for (const auto& v : p.vertices()) out.push_back(xy(v));
                               return out;
                             })
      .def_property_readonly("scale", &ConvexPolygon::scale)
      .def("__len__", &ConvexPolygon::size)
      .def("__eq__", [](const ConvexPolygon& a, const ConvexPolygon& b) { return a == b; })
      .def("__repr__", [](const ConvexPolygon& p) {
        return "<ConvexPolygon with " + std::to_string(p.size()) + " vertices>";
      });

  py::class_<CheckReport>(m, "CheckReport")
      .def_readonly("name", &CheckReport::name)
      .def_readonly("lhs", &CheckReport::lhs)
      .def_readonly("rhs", &CheckReport::rhs)
      .def_readonly("margin", &CheckReport::margin)
      .def_readonly("tolerance", &CheckReport::tolerance)
      .def_readonly("passed", &CheckReport::pass)
      .def_readonly("context", &CheckReport::context)
      .def("__repr__", [](const CheckReport& c) {
        return "<CheckReport " + c.name + (c.pass ? " pass" : " FAIL") + " margin=" + fmt_num(c.margin) + ">";
      });

  // geometry
  m.def("area", [](const ConvexPolygon& p) { return measures(p).area; });
  m.def("perimeter", [](const ConvexPolygon& p) { return measures(p).perimeter; });
  m.def("area_centroid", [](const ConvexPolygon& p) { return xy(area_centroid(p)); });
  m.def("boundary_centroid", [](const ConvexPolygon& p) { return xy(boundary_centroid(p)); });
  m.def("width", [](const ConvexPolygon& p, double theta) { return width(p, UnitVector::from_angle(theta)); },
        py::arg("polygon"), py::arg("theta"));
  m.def("diameter", &diameter);
  m.def("gap_projection",
        [](const ConvexPolygon& p, double theta) { return gap_projection(p, UnitVector::from_angle(theta)); },
        py::arg("polygon"), py::arg("theta"));
  m.def("gap_ratio",
        [](const ConvexPolygon& p, double theta) { return gap_ratio(p, UnitVector::from_angle(theta)); },
        py::arg("polygon"), py::arg("theta"));
  m.def("chord_length", &chord_length, py::arg("polygon"), py::arg("t"));

  // frame and profiles
  m.def("normalize",
        [](const ConvexPolygon& p, double theta) { return frame_dict(normalize(p, UnitVector::from_angle(theta))); },
        py::arg("polygon"), py::arg("theta"));
  m.def(
      "profile",
      [](const ConvexPolygon& p, std::size_t grid, double reference_t) {
        const Profile pr = profile(p, grid, reference_t);
        py::dict d;
        d["t"] = pr.ts;
        d["ell"] = pr.ell;
        d["A"] = pr.area;
        d["P"] = pr.perimeter;
        d["Ptilde"] = pr.ptilde;
        d["a"] = pr.a;
        d["p"] = pr.p;
        d["c_a"] = pr.c_a;
        d["c_p"] = pr.c_p;
        return d;
      },
      py::arg("polygon"), py::arg("grid") = 2048, py::arg("reference_t") = 0.0);
  m.def("sweep_csv", &sweep_csv, py::arg("polygon"), py::arg("theta") = 0.0, py::arg("grid") = 2048);

  // checks
  m.def(
      "lemma_suite",
      [](const ConvexPolygon& p, double theta, double rel_tol) {
        LemmaOptions o;
        o.rel_tol = rel_tol;
        py::gil_scoped_release nogil;
        return run_lemma_suite(p, UnitVector::from_angle(theta), o).checks;
      },
      py::arg("polygon"), py::arg("theta"), py::arg("rel_tol") = 1e-9);
  m.def("tan_inequality_check", &tan_inequality_check, py::arg("phi"), py::arg("psi"));
  m.def("quintic_check", [] { return quintic_check().all(); });
  m.def("quintic_coefficients", [] { return quintic_polynomial().coeffs(); });
  m.def(
      "region_inequalities_check",
      [](std::size_t n, std::uint64_t seed) {
        py::gil_scoped_release nogil;
        return region_inequalities_check(n, seed).checks;
      },
      py::arg("n_samples"), py::arg("seed"));

  // extremal family and search
  m.def("triangle", [](double eps) { return triangle(eps).polygon; }, py::arg("eps"));
  m.def("closed_form_gap", &closed_form_gap, py::arg("eps"));
  m.def("closed_form_ratio", &closed_form_ratio, py::arg("eps"), py::arg("cos_e_theta"));
  m.def(
      "convergence_table",
      [](const std::vector<double>& eps) {
        std::vector<py::dict> rows;
        for (const auto& r : convergence_table(eps)) {
          py::dict d;
          d["eps"] = r.eps;
          d["ratio"] = r.ratio;
          d["closed_form_ratio"] = r.closed_form_ratio;
          d["gap_over_diameter"] = r.gap_over_diameter;
          d["gap_over_perimeter"] = r.gap_over_perimeter;
          rows.push_back(d);
        }
        return rows;
      },
      py::arg("eps_list"));
  m.def("random_convex_polygon", &random_convex_polygon, py::arg("n"), py::arg("seed"),
        py::arg("anisotropy") = 1.0);
  m.def(
      "maximize_ratio",
      [](std::size_t n, std::size_t budget, std::uint64_t seed, std::size_t restarts, std::size_t jobs) {
        SearchOptions o;
        o.restarts = restarts;
        o.jobs = jobs;
        std::optional<SearchState> s;
        {
          py::gil_scoped_release nogil;
          s.emplace(maximize_ratio(n, budget, seed, o));
        }
        py::dict d;
        d["best_ratio"] = s->best_ratio;
        d["best_theta"] = s->best_theta;
        d["evaluations"] = s->evaluations;
        d["best_polygon"] = s->best_polygon;
        d["bound_violated"] = s->bound_violated;
        return d;
      },
      py::arg("n"), py::arg("budget"), py::arg("seed"), py::arg("restarts") = 8, py::arg("jobs") = 1);

  // files
  m.def("read_polygon_file", &read_polygon_file, py::arg("path"));
  m.def("polygon_to_json", &polygon_to_json);
  m.def("polygon_to_csv", &polygon_to_csv);
}
