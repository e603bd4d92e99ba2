#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "beatty/criteria.hpp"
#include "beatty/disjointness.hpp"
#include "beatty/literal.hpp"
#include "beatty/oracle.hpp"
#include "beatty/sequence.hpp"
#include "beatty/stadium.hpp"

namespace py = pybind11;
using namespace beatty;

namespace {

py::object big_to_py(const BigInt& b) {
    PyObject* p = PyLong_FromString(b.str().c_str(), nullptr, 10);
    if (p == nullptr) throw py::error_already_set();
    return py::reinterpret_steal<py::object>(p);
}

BigInt big_from_py(const py::object& o) {
    return BigInt(py::str(o).cast<std::string>());
}

py::object opt_big(const std::optional<BigInt>& v) {
    if (!v) return py::none();
    return big_to_py(*v);
}

py::list big_list(const std::vector<BigInt>& values) {
    py::list out;
    for (const auto& v : values) out.append(big_to_py(v));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Beatty sequences over exact quadratic-irrational arithmetic";

    // Translators run newest-first, so the derived error registers second.
    py::register_exception<Error>(m, "BeattyError", PyExc_ValueError);
    py::register_exception<MixedRadicands>(m, "MixedRadicandsError", PyExc_ArithmeticError);

    py::class_<Rational>(m, "Rational")
        .def(py::init([](py::object num, py::object den) {
                 return Rational(big_from_py(num), big_from_py(den));
             }),
             py::arg("num"), py::arg("den") = py::int_(1))
        .def_property_readonly("num", [](const Rational& r) { return big_to_py(r.num()); })
        .def_property_readonly("den", [](const Rational& r) { return big_to_py(r.den()); })
        .def("is_integer", &Rational::is_integer)
        .def("floor", [](const Rational& r) { return big_to_py(r.floor()); })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def(py::self < py::self)
        .def(py::self <= py::self)
        .def(py::self > py::self)
        .def(py::self >= py::self)
        .def("reciprocal", &Rational::reciprocal)
        .def("__str__", &Rational::str)
        .def("__repr__", [](const Rational& r) { return "Rational(" + r.str() + ")"; });

    py::class_<ExactReal>(m, "ExactReal")
        .def(py::init<Rational>())
        .def(py::init([](py::object n) { return ExactReal(big_from_py(n)); }))
        .def_static("quadratic", &ExactReal::quadratic, py::arg("a"), py::arg("b"), py::arg("d"))
        .def_static("sqrt_of", &ExactReal::sqrt_of, py::arg("d"))
        .def("is_rational", &ExactReal::is_rational)
        .def("is_quadratic", &ExactReal::is_quadratic)
        .def("is_integer", &ExactReal::is_integer)
        .def("is_irrational", &ExactReal::is_irrational)
        .def_property_readonly("a", &ExactReal::rat_part)
        .def_property_readonly("b", &ExactReal::sqrt_coeff)
        .def_property_readonly("d", &ExactReal::radicand)
        .def("sign", &ExactReal::sign)
        .def("floor", [](const ExactReal& x) { return big_to_py(x.floor()); })
        .def("frac", &ExactReal::frac)
        .def("reciprocal", &ExactReal::reciprocal)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def(py::self < py::self)
        .def(py::self <= py::self)
        .def(py::self > py::self)
        .def(py::self >= py::self)
        .def("__str__", &ExactReal::str)
        .def("__repr__", [](const ExactReal& x) { return "ExactReal(" + x.str() + ")"; });

    m.def("parse_real", [](const std::string& text) { return parse_real(text); },
          "Parse an exact-real literal such as '1/2+1/2*sqrt(5)'");

    py::class_<BeattySeq>(m, "BeattySeq")
        .def(py::init<ExactReal, ExactReal>(), py::arg("alpha"), py::arg("beta") = ExactReal(0))
        .def_property_readonly("alpha", &BeattySeq::alpha)
        .def_property_readonly("beta", &BeattySeq::beta)
        .def("is_canonical", &BeattySeq::is_canonical)
        .def("normalized",
             [](const BeattySeq& s) {
                 auto [seq, shift] = s.normalized();
                 return py::make_tuple(seq, big_to_py(shift));
             })
        .def("term", [](const BeattySeq& s, long long n) { return big_to_py(s.term(n)); })
        .def("values",
             [](const BeattySeq& s, long long lo, long long hi) {
                 return big_list(s.values(lo, hi));
             })
        .def("generate",
             [](const BeattySeq& s, long long lo, long long hi) {
                 py::list out;
                 for (const auto& [n, v] : s.generate(lo, hi))
                     out.append(py::make_tuple(n, big_to_py(v)));
                 return out;
             })
        .def("contains",
             [](const BeattySeq& s, py::object k) { return opt_big(s.contains(big_from_py(k))); })
        .def("density_estimate", &BeattySeq::density_estimate)
        .def("__repr__", [](const BeattySeq& s) {
            return "BeattySeq(" + s.alpha().str() + ", " + s.beta().str() + ")";
        });

    m.def("equal_rational", &equal_rational);

    py::class_<PartitionVerdict>(m, "PartitionVerdict")
        .def_property_readonly("kind",
                               [](const PartitionVerdict& v) { return to_string(v.kind); })
        .def_property_readonly("n0", [](const PartitionVerdict& v) { return opt_big(v.exception); })
        .def_property_readonly("repeated",
                               [](const PartitionVerdict& v) { return big_list(v.repeated); })
        .def_property_readonly("missing",
                               [](const PartitionVerdict& v) { return big_list(v.missing); })
        .def("__repr__", [](const PartitionVerdict& v) {
            std::string s = std::string("PartitionVerdict(") + to_string(v.kind);
            if (v.exception) s += ", n0=" + v.exception->str();
            return s + ")";
        });

    m.def("complementary", &complementary);
    m.def("skolem_condition", &skolem_condition);
    m.def("skolem_classify", &skolem_classify);
    m.def("fraenkel_condition", &fraenkel_condition);
    m.def("lemma_positions",
          [](long long r, long long s, const ExactReal& b1, const ExactReal& b2, long long k) {
              LemmaPositions p = lemma_positions(r, s, b1, b2, k);
              return py::make_tuple(p.x, p.y,
                                    p.j ? py::cast(*p.j) : py::object(py::none()));
          });
    m.def("relocate_common_start", &relocate_common_start);

    py::class_<WindowReport>(m, "WindowReport")
        .def_readonly("lo", &WindowReport::lo)
        .def_readonly("hi", &WindowReport::hi)
        .def_property_readonly("missing",
                               [](const WindowReport& r) { return big_list(r.missing); })
        .def_property_readonly("repeated",
                               [](const WindowReport& r) {
                                   py::list out;
                                   for (const auto& [k, mult] : r.repeated)
                                       out.append(py::make_tuple(big_to_py(k), mult));
                                   return out;
                               })
        .def_readonly("per_seq_counts", &WindowReport::per_seq_counts)
        .def("clean", &WindowReport::clean);

    m.def("window_report", &window_report);
    m.def("verify_partition", &verify_partition);
    m.def("verify_eventual", &verify_eventual);
    m.def("disjoint_window",
          [](const BeattySeq& s1, const BeattySeq& s2, long long lo, long long hi) {
              return big_list(disjoint_window(s1, s2, lo, hi));
          });
    m.def("rational_disjoint_oracle", &rational_disjoint_oracle);
    m.def("rational_disjoint_witness", &rational_disjoint_witness);

    py::class_<DisjointnessFinding>(m, "DisjointnessFinding")
        .def_property_readonly("kind",
                               [](const DisjointnessFinding& f) { return to_string(f.kind); })
        .def_property_readonly("m", [](const DisjointnessFinding& f) { return opt_big(f.m); })
        .def_property_readonly("n", [](const DisjointnessFinding& f) { return opt_big(f.n); });

    m.def("crt_coprime", [](py::object n, py::object m) {
        return crt_coprime(big_from_py(n), big_from_py(m));
    });
    m.def("skolem_necessary", &skolem_necessary);
    m.def("jrt_coprime", [](const Rational& a1, const Rational& a2) {
        JrtResult r = jrt_coprime(a1, a2);
        py::object witness = py::none();
        if (r.witness)
            witness = py::make_tuple(big_to_py(r.witness->first), big_to_py(r.witness->second));
        return py::make_tuple(r.coprime, witness);
    });
    m.def("gamma_disjoint_exists", &gamma_disjoint_exists);
    m.def("gamma_witness", &gamma_witness);
    m.def("lattice_condition", &lattice_condition);
    m.def("offsets_all_intersect", &offsets_all_intersect);

    py::class_<StadiumConfig>(m, "StadiumConfig")
        .def(py::init<ExactReal, ExactReal, ExactReal, ExactReal>(), py::arg("alpha1"),
             py::arg("alpha2"), py::arg("beta1"), py::arg("beta2"))
        .def_readonly("alpha1", &StadiumConfig::alpha1)
        .def_readonly("alpha2", &StadiumConfig::alpha2)
        .def_readonly("beta1", &StadiumConfig::beta1)
        .def_readonly("beta2", &StadiumConfig::beta2);

    py::class_<RecordEvent>(m, "RecordEvent")
        .def_readonly("time", &RecordEvent::time)
        .def_readonly("athlete", &RecordEvent::athlete)
        .def_property_readonly("recorded",
                               [](const RecordEvent& e) { return big_to_py(e.recorded); })
        .def("__repr__", [](const RecordEvent& e) {
            return "RecordEvent(t=" + e.time.str() + ", " + e.athlete + " -> " +
                   e.recorded.str() + ")";
        });

    py::class_<Occupancy>(m, "Occupancy")
        .def_readonly("in_a", &Occupancy::in_a)
        .def_readonly("in_b", &Occupancy::in_b);

    py::class_<MultiConfig>(m, "MultiConfig")
        .def(py::init<std::vector<std::pair<ExactReal, ExactReal>>, ExactReal>(),
             py::arg("athletes"), py::arg("base_speed") = ExactReal(0));

    m.def("position_x", &position_x);
    m.def("position_y", &position_y);
    m.def("simulate_two", &simulate_two);
    m.def("simulate_multi", &simulate_multi);
    m.def("domain_occupancy", &domain_occupancy);
    m.def("edge_point", &edge_point);
}
