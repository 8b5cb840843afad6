#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "planecycles/fpt.hpp"
#include "planecycles/generate.hpp"
#include "planecycles/model.hpp"
#include "planecycles/monotonicity.hpp"
#include "planecycles/nested.hpp"
#include "planecycles/oracle.hpp"
#include "planecycles/rainbow.hpp"
#include "planecycles/svg.hpp"

namespace py = pybind11;
using namespace planecycles;

namespace {

ColoredPointSet make_point_set(const std::vector<std::pair<Coord, Coord>>& points,
                               const std::vector<int>& colors) {
    std::vector<Point> pts;
    pts.reserve(points.size());
    for (auto [x, y] : points) pts.push_back(Point{x, y});
    return ColoredPointSet(std::move(pts), colors);
}

PlaneCycle checked_cycle(const ColoredPointSet& ps, const std::vector<int>& cycle) {
    auto check = validate_cycle(ps, cycle);
    if (!check.ok()) throw std::invalid_argument(check.violation->message);
    return *check.cycle;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Plane cycles in geometric complete multipartite graphs";

    py::register_exception<Error>(m, "GeometryError");

    py::class_<ColoredPointSet>(m, "PointSet")
        .def(py::init(&make_point_set), py::arg("points"), py::arg("colors"))
        .def_static("parse", [](const std::string& text) { return parse_instance_text(text); })
        .def("__len__", &ColoredPointSet::size)
        .def_property_readonly("points",
                               [](const ColoredPointSet& ps) {
                                   std::vector<std::pair<Coord, Coord>> out;
                                   for (const Point& p : ps.points()) out.emplace_back(p.x, p.y);
                                   return out;
                               })
        .def_property_readonly("colors",
                               [](const ColoredPointSet& ps) { return ps.colors(); })
        .def_property_readonly("color_count", &ColoredPointSet::color_count)
        .def("text", [](const ColoredPointSet& ps) { return instance_text(ps); })
        .def("__repr__", [](const ColoredPointSet& ps) {
            return "<PointSet n=" + std::to_string(ps.size()) + " colors=" +
                   std::to_string(ps.color_count()) + ">";
        });

    m.def("validate_cycle", [](const ColoredPointSet& ps, const std::vector<int>& cycle) {
        py::dict out;
        auto check = validate_cycle(ps, cycle);
        out["ok"] = check.ok();
        if (check.ok()) {
            out["cycle"] = check.cycle->vertices;
            out["rainbow"] = color_profile(ps, *check.cycle).rainbow;
        } else {
            out["message"] = check.violation->message;
        }
        return out;
    });

    m.def("detect", [](const ColoredPointSet& ps) -> py::object {
        auto witness = find_configuration(ps);
        if (!witness) return py::none();
        py::dict out;
        out["kind"] = to_string(witness->kind);
        out["u"] = witness->u;
        out["u_prime"] = witness->u_prime;
        out["v"] = witness->v;
        out["v_prime"] = witness->v_prime;
        if (witness->kind == ConfigKind::C4) out["w"] = witness->w;
        out["cycle"] = witness_cycle(ps, *witness).vertices;
        return out;
    });
    m.def("has_nonrainbow_plane_cycle", &has_nonrainbow_plane_cycle);

    m.def("shorten", [](const ColoredPointSet& ps, const std::vector<int>& cycle) {
        return shorten_cycle(ps, checked_cycle(ps, cycle)).vertices;
    });
    m.def("principal_points", [](const ColoredPointSet& ps, const std::vector<int>& cycle) {
        py::list out;
        for (const auto& pp : principal_points(ps, checked_cycle(ps, cycle))) {
            py::dict d;
            d["vertex"] = pp.vertex;
            d["prev"] = pp.prev;
            d["next"] = pp.next;
            d["ear"] = pp.is_ear;
            d["good"] = pp.good;
            out.append(d);
        }
        return out;
    });

    m.def("nested_cycle",
          [](const ColoredPointSet& ps, const std::vector<int>& blues, int t) {
              return cycle_of_length(ps, blues, t).vertices;
          });
    m.def("suggest_blue_ring", &suggest_blue_ring);

    m.def(
        "hamiltonian",
        [](const ColoredPointSet& ps, bool construct, int workers) -> py::object {
            auto decision = decide_hamiltonian(ps, construct, workers);
            if (!decision.yes) return py::none();
            if (decision.cycle) return py::cast(decision.cycle->vertices);
            return py::cast(true);
        },
        py::arg("ps"), py::arg("construct") = true, py::arg("workers") = 1);

    m.def("enumerate_cycles", [](const ColoredPointSet& ps, int max_len) {
        py::dict out;
        auto inv = enumerate_plane_cycles(ps, max_len);
        for (const auto& [len, cycles] : inv.by_length) {
            py::list lst;
            for (const auto& c : cycles) lst.append(c.vertices);
            out[py::int_(len)] = lst;
        }
        return out;
    });
    m.def("brute_hamiltonian", [](const ColoredPointSet& ps) -> py::object {
        auto ham = brute_hamiltonian(ps);
        if (!ham) return py::none();
        return py::cast(ham->vertices);
    });

    m.def(
        "generate",
        [](const std::string& kind, int n, std::uint64_t seed, int colors, Coord range,
           int interior) {
            auto k = kind_from_name(kind);
            if (!k) throw std::invalid_argument("unknown generator kind: " + kind);
            GenSpec spec;
            spec.kind = *k;
            spec.n = n;
            spec.seed = seed;
            spec.color_count = colors;
            spec.range = range;
            spec.interior = interior;
            return generate(spec);
        },
        py::arg("kind"), py::arg("n"), py::arg("seed") = 0, py::arg("colors") = 2,
        py::arg("range") = 1000, py::arg("interior") = 0);

    m.def(
        "render_svg",
        [](const ColoredPointSet& ps, py::object cycle) {
            std::optional<PlaneCycle> c;
            if (!cycle.is_none()) c = checked_cycle(ps, cycle.cast<std::vector<int>>());
            return render_svg(ps, c);
        },
        py::arg("ps"), py::arg("cycle") = py::none());
}
