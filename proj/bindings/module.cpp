#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "grassmorph/classify.hpp"
#include "grassmorph/morphisms.hpp"
#include "grassmorph/report.hpp"

namespace py = pybind11;
using namespace grassmorph;

namespace {

Rational rational_from_py(const py::handle& h) {
    if (py::isinstance<py::int_>(h)) return Rational(BigInt(py::cast<std::string>(py::str(h))));
    return parse_rational(py::cast<std::string>(h));
}

ProjPoint point_from_py(const py::handle& h) {
    auto seq = py::cast<py::sequence>(h);
    if (seq.size() != 3) throw ParseError("point must have three coordinates");
    return ProjPoint(rational_from_py(seq[0]), rational_from_py(seq[1]), rational_from_py(seq[2]));
}

PointConfig config_from_py(const py::sequence& pts) {
    std::vector<ProjPoint> v;
    for (const auto& h : pts) v.push_back(point_from_py(h));
    return make_point_config(std::move(v));
}

py::list point_to_py(const ProjPoint& p) {
    py::list out;
    for (std::size_t i = 0; i < 3; ++i) out.append(to_string(p[i]));
    return out;
}

py::dict json_to_py(const Json& j) {
    return py::cast<py::dict>(py::module_::import("json").attr("loads")(j.dump()));
}

py::dict verdict_to_py(const ClassVerdict& v) { return json_to_py(to_json(v)); }

} // namespace

PYBIND11_MODULE(_grassmorph, m) {
    m.doc() = "morphisms P^2 -> Gr(2, C^4): exact construction, verification and classification";

    py::register_exception<Error>(m, "GrassmorphError");

    m.def("realizability", [](long long q2, long long s2) { return verdict_to_py(realizability(q2, s2)); },
          py::arg("q2"), py::arg("s2"),
          "Decide whether the class (q2, s2) is represented by a morphism.");

    m.def("realizability_by_intervals",
          [](long long q2, long long s2) { return verdict_to_py(realizability_by_intervals(q2, s2)); },
          py::arg("q2"), py::arg("s2"));

    m.def("classification_table",
          [](int c_max, bool use_decomposable) {
              return json_to_py(Json{{"rows", table_json(classification_table(c_max, use_decomposable))}});
          },
          py::arg("c_max"), py::arg("use_decomposable") = true);

    m.def("decomposable_classes", [](int c) {
        py::list out;
        for (const auto& [q2, s2] : decomposable_classes(c)) out.append(py::make_tuple(q2, s2));
        return out;
    });

    m.def("embedded_classes", [] {
        py::list out;
        for (const auto& [q2, s2] : embedded_classes()) out.append(py::make_tuple(q2, s2));
        return out;
    });

    m.def("construct", [](int a, int b, std::uint64_t seed) {
              SplitSurjection s = example_split(a, b);
              SurjectivityReport surj = is_surjective(s, seed);
              Json out;
              out["surjective"] = surj.surjective;
              Json minors = Json::array();
              for (const auto& f : pluecker_polys(s)) minors.push_back(f.str());
              out["pluecker_polys"] = minors;
              if (surj.surjective) {
                  ClassResult r = cohomology_class(s, seed);
                  out["class"] = Json::array({r.cls.q2, r.cls.s2});
              }
              return json_to_py(out);
          },
          py::arg("a"), py::arg("b"), py::arg("seed") = 0,
          "The explicit split surjection for (a, b): surjectivity, minors, class.");

    m.def("cohomology_class", [](int a, int b, std::uint64_t seed) {
              ClassResult r = cohomology_class(example_split(a, b), seed);
              return py::make_tuple(r.cls.q2, r.cls.s2);
          },
          py::arg("a"), py::arg("b"), py::arg("seed") = 0);

    m.def("dual_class", [](long long q2, long long s2) { return py::make_tuple(s2, q2); });

    m.def("is_surjective", [](int a, int b) { return is_surjective(example_split(a, b)).surjective; },
          py::arg("a"), py::arg("b"));

    m.def("evaluate", [](int a, int b, const py::sequence& point) {
              PlueckerPoint img = evaluate(example_split(a, b), point_from_py(point));
              py::list out;
              for (std::size_t i = 0; i < 6; ++i) out.append(to_string(img[i]));
              return out;
          },
          py::arg("a"), py::arg("b"), py::arg("point"));

    m.def("hodge_dual", [](const py::sequence& coords) {
              if (coords.size() != 6) throw ParseError("expected six Plücker coordinates");
              std::array<Rational, 6> p;
              for (std::size_t i = 0; i < 6; ++i) p[i] = rational_from_py(coords[i]);
              PlueckerPoint q = hodge_dual(PlueckerPoint(p));
              py::list out;
              for (std::size_t i = 0; i < 6; ++i) out.append(to_string(q[i]));
              return out;
          },
          py::arg("coords"));

    m.def("check_relation", [](const py::sequence& coords) {
        if (coords.size() != 6) throw ParseError("expected six Plücker coordinates");
        std::array<Rational, 6> p;
        for (std::size_t i = 0; i < 6; ++i) p[i] = rational_from_py(coords[i]);
        return check_relation(PlueckerPoint(p));
    });

    m.def("cb_check", [](const py::sequence& points, int d) {
              PointConfig z = config_from_py(points);
              return json_to_py(to_json(cb_check(z, d), z, d));
          },
          py::arg("points"), py::arg("d"),
          "Cayley-Bacharach rank test at twist d, with an exact certificate on failure.");

    m.def("h0_ideal", [](const py::sequence& points, int d) { return h0_ideal(config_from_py(points), d); },
          py::arg("points"), py::arg("d"));

    m.def("gen_position_points", [](int ell, int t, int c, std::uint64_t seed, bool strict_three) {
              PointConfig z = gen_position_points(ell, t, c, seed, strict_three);
              py::list out;
              for (const auto& p : z.points) out.append(point_to_py(p));
              return out;
          },
          py::arg("ell"), py::arg("t"), py::arg("c"), py::arg("seed") = 0,
          py::arg("strict_three") = false);

    m.def("verify_position", [](const py::sequence& points, int t, int c, bool strict_three) {
              return json_to_py(to_json(verify_position(config_from_py(points), t, c, strict_three)));
          },
          py::arg("points"), py::arg("t"), py::arg("c"), py::arg("strict_three") = false);

    m.def("collision_scan", [](int a, int b, std::uint64_t p, long long sample, std::uint64_t seed) {
              ScanMode mode;
              if (sample > 0) {
                  mode.full = false;
                  mode.sample_size = sample;
                  mode.seed = seed;
              }
              return json_to_py(to_json(collision_scan(example_split(a, b), p, mode)));
          },
          py::arg("a"), py::arg("b"), py::arg("p"), py::arg("sample") = 0, py::arg("seed") = 0,
          "Finite-field fiber scan; evidence of injectivity, not a proof.");

    m.def("tangent_class", [](std::uint64_t seed) {
              TangentSurjection t = tangent_random(seed);
              TangentClassResult r = tangent_class(t, seed);
              return py::make_tuple(r.cls.q2, r.cls.s2);
          },
          py::arg("seed") = 0, "Class of a random tangent-bundle morphism.");
}
