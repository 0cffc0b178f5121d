#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "io.hpp"

#include "centersvar/error.hpp"

namespace py = pybind11;
using namespace centersvar;

namespace {

Rational to_rational(const py::handle& h) {
    if (py::isinstance<py::float_>(h)) fail(ErrorCode::InvalidInput, "floats are not exact; pass int, Fraction or str");
    return parse_rational(py::str(h).cast<std::string>());
}

ProjectivePoint to_point(const py::handle& h) {
    RVector v;
    for (const auto& c : h) v.push_back(to_rational(c));
    return ProjectivePoint(v);
}

Configuration to_configuration(const py::handle& h) {
    std::vector<ProjectivePoint> pts;
    for (const auto& p : h) pts.push_back(to_point(p));
    if (pts.empty()) fail(ErrorCode::InvalidInput, "empty point list");
    const std::size_t dim = pts.front().dim();
    for (const auto& p : pts)
        if (p.dim() != dim) fail(ErrorCode::InvalidInput, "points have different lengths");
    return Configuration(dim, std::move(pts));
}

py::object from_json(const io::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::object fraction(const Rational& r) { return py::module_::import("fractions").attr("Fraction")(format_rational(r)); }

py::tuple point_tuple(const ProjectivePoint& p) {
    py::tuple out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = py::int_(py::str(p[i].get_str()));
    return out;
}

py::list point_list(const Configuration& c) {
    py::list out;
    for (const auto& p : c.points()) out.append(point_tuple(p));
    return out;
}

py::list values(const InvariantVector& v) {
    py::list out;
    for (const auto& x : v.canonical().values) out.append(fraction(x));
    return out;
}

std::optional<ProjectivePoint> optional_point(const py::object& o) {
    if (o.is_none()) return std::nullopt;
    return to_point(o);
}

}  // namespace

PYBIND11_MODULE(_centersvar, m) {
    m.doc() = "Exact and numeric routines for centers of projection of point configurations";

    static PyObject* error_type = PyErr_NewException("centersvar.CentersvarError", PyExc_ValueError, nullptr);
    m.attr("CentersvarError") = py::handle(error_type);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object inst = py::reinterpret_borrow<py::object>(error_type)(py::str(e.what()));
            inst.attr("code") = std::string(to_string(e.code()));
            PyErr_SetObject(error_type, inst.ptr());
        }
    });

    m.def("project", [](const py::object& pts, const py::object& center) {
        return point_list(project(to_configuration(pts), to_point(center)));
    }, py::arg("points"), py::arg("center"), "Images of points of P^3 under the canonical camera with the given center.");

    m.def("g5", [](const py::object& pts) { return values(g5(to_configuration(pts))); });
    m.def("t6", [](const py::object& pts) { return values(t6(to_configuration(pts))); });
    m.def("fano15", [](const py::object& pts) { return values(fano15(to_configuration(pts))); });
    m.def("morley", [](const py::object& pts) { return fraction(morley(to_configuration(pts))); });
    m.def("g5_lifted", [](const py::object& x, const py::object& a) { return values(g5_lifted(to_configuration(x), to_point(a))); });
    m.def("t6_lifted", [](const py::object& x, const py::object& a) { return values(t6_lifted(to_configuration(x), to_point(a))); });
    m.def("fano15_lifted", [](const py::object& x, const py::object& a) {
        return values(fano15_lifted(to_configuration(x), to_point(a)));
    });
    m.def("gale_transform", [](const py::object& pts) { return point_list(gale_transform(to_configuration(pts))); });
    m.def("stability_class", [](const py::object& pts) { return std::string(to_string(stability_class(to_configuration(pts)))); });
    m.def("weddle_quartic", [](const py::object& pts) { return from_json(io::to_json(weddle_quartic(to_configuration(pts)))); });

    m.def("cubic_locus_n5", [](const py::object& x, const py::object& y, const py::object& a) {
        const ProjectivePoint center = to_point(a);
        const Configuration xs = to_configuration(x);
        const TwistedCubic c = cubic_locus_n5(xs, to_configuration(y), center);
        return from_json(io::to_json(CentersVariety{CubicFibrationN5{center, c, classify_degeneration_n5(xs, center)}}));
    }, py::arg("x"), py::arg("y"), py::arg("a"));
    m.def("classify_degeneration_n5", [](const py::object& x, const py::object& a) {
        return std::string(to_string(classify_degeneration_n5(to_configuration(x), to_point(a))));
    });
    m.def("map_a_to_b_n6", [](const py::object& x, const py::object& y, const py::object& a) {
        return point_tuple(map_a_to_b_n6(to_configuration(x), to_configuration(y), to_point(a)));
    });
    m.def("map_b_to_a_n6", [](const py::object& x, const py::object& y, const py::object& b) {
        return point_tuple(map_b_to_a_n6(to_configuration(x), to_configuration(y), to_point(b)));
    });
    m.def("centers", [](const py::object& x, const py::object& y, const py::object& a, double tol, std::uint64_t seed) {
        const Configuration xs = to_configuration(x), ys = to_configuration(y);
        const std::optional<ProjectivePoint> center = optional_point(a);
        CentersVariety v;
        {
            py::gil_scoped_release release;
            v = centers_variety(xs, ys, center, {.tol = tol, .seed = seed});
        }
        return from_json(io::to_json(v));
    }, py::arg("x"), py::arg("y"), py::arg("a") = py::none(), py::arg("tol") = 1e-9, py::arg("seed") = 0,
       "Centers variety of two configurations of P^3, as a report dictionary.");

    m.def("generate_reconstruction", [](std::size_t n, std::uint64_t seed, int bound) {
        return from_json(io::to_json(generate_reconstruction(n, seed, bound)));
    }, py::arg("n"), py::arg("seed") = 0, py::arg("bound") = 10);
    m.def("generate_degenerate", [](const std::string& kind, std::size_t n, std::uint64_t seed) {
        const DegenerateInstance inst = generate_degenerate(parse_degenerate_kind(kind), n, seed);
        py::dict out;
        out["points"] = point_list(inst.points);
        out["center"] = inst.center ? py::object(point_tuple(*inst.center)) : py::object(py::none());
        return out;
    }, py::arg("kind"), py::arg("n") = 0, py::arg("seed") = 0);
}
