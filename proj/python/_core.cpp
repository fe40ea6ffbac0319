#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "netform/best_response.hpp"
#include "netform/dynamics.hpp"
#include "netform/errors.hpp"
#include "netform/generators.hpp"
#include "netform/io.hpp"
#include "netform/meta_tree.hpp"
#include "netform/oracle.hpp"
#include "netform/utility.hpp"

namespace py = pybind11;
using namespace netform;

namespace {

py::object to_fraction(const Rational& r) {
    return py::module_::import("fractions").attr("Fraction")(r.numerator(), r.denominator());
}

/// Accepts int, fractions.Fraction or a string such as "1/2".
Rational from_python(const py::handle& h) {
    if (py::isinstance<py::str>(h)) return parse_rational(h.cast<std::string>());
    if (py::isinstance<py::int_>(h)) return Rational(h.cast<std::int64_t>());
    if (py::hasattr(h, "numerator") && py::hasattr(h, "denominator") && !py::isinstance<py::float_>(h)) {
        return Rational(h.attr("numerator").cast<std::int64_t>(), h.attr("denominator").cast<std::int64_t>());
    }
    throw py::type_error("expected int, fractions.Fraction or str");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Network formation with attack and immunization: exact best responses and dynamics";

    auto base = py::register_exception<Error>(m, "NetformError", PyExc_ValueError);
    py::register_exception<InstanceTooLarge>(m, "InstanceTooLarge", base.ptr());

    py::enum_<Adversary>(m, "Adversary")
        .value("MAXIMUM_CARNAGE", Adversary::MaximumCarnage)
        .value("RANDOM_ATTACK", Adversary::RandomAttack);

    py::class_<Strategy>(m, "Strategy")
        .def(py::init([](std::vector<PlayerId> endpoints, bool immunize) { return Strategy{std::move(endpoints), immunize}; }),
             py::arg("endpoints") = std::vector<PlayerId>{}, py::arg("immunize") = false)
        .def_readwrite("endpoints", &Strategy::endpoints)
        .def_readwrite("immunize", &Strategy::immunize)
        .def("__eq__", [](const Strategy& a, const Strategy& b) { return a == b; })
        .def("__repr__", [](const Strategy& s) {
            return "Strategy(" + py::repr(py::cast(s.endpoints)).cast<std::string>() +
                   ", immunize=" + (s.immunize ? "True" : "False") + ")";
        });

    py::class_<GameState>(m, "Game")
        .def(py::init([](int n, py::object alpha, py::object beta, Adversary adversary) {
                 return GameState(n, from_python(alpha), from_python(beta), adversary);
             }),
             py::arg("n"), py::arg("alpha"), py::arg("beta"), py::arg("adversary") = Adversary::MaximumCarnage)
        .def_property_readonly("n", &GameState::size)
        .def_property_readonly("alpha", [](const GameState& g) { return to_fraction(g.alpha()); })
        .def_property_readonly("beta", [](const GameState& g) { return to_fraction(g.beta()); })
        .def_property_readonly("adversary", &GameState::adversary)
        .def("strategy", &GameState::strategy, py::arg("player"))
        .def("set_strategy", &GameState::set_strategy, py::arg("player"), py::arg("strategy"))
        .def("add_edge", &GameState::add_edge, py::arg("owner"), py::arg("endpoint"))
        .def("set_immunized", &GameState::set_immunized, py::arg("player"), py::arg("immunize") = true)
        .def("immunized", &GameState::immunized, py::arg("player"))
        .def("utility", [](const GameState& g, PlayerId p) { return to_fraction(utility(g, p)); }, py::arg("player"))
        .def("welfare", [](const GameState& g) { return to_fraction(social_welfare(g)); })
        .def("to_json", [](const GameState& g) { return serialize_game(g); })
        .def_static("from_json", [](const std::string& text) { return parse_game(text); }, py::arg("text"))
        .def("to_dot", [](const GameState& g) { return to_dot(g); })
        .def("__eq__", [](const GameState& a, const GameState& b) { return a == b; });

    m.def(
        "best_response",
        [](const GameState& g, PlayerId a) {
            const auto br = best_response(g, a);
            return py::make_tuple(br.strategy, to_fraction(br.utility));
        },
        py::arg("game"), py::arg("player"), "Best response strategy and its exact utility.");

    m.def(
        "oracle_best_response",
        [](const GameState& g, PlayerId a, int cap) {
            const auto r = oracle_best_response(g, a, cap);
            return py::make_tuple(to_fraction(r.best_utility), r.witnesses);
        },
        py::arg("game"), py::arg("player"), py::arg("cap") = kDefaultOracleCap,
        "Exhaustive best utility and every strategy attaining it.");

    m.def(
        "is_nash_equilibrium",
        [](const GameState& g) {
            const auto c = is_nash_equilibrium(g);
            return py::make_tuple(c.equilibrium, c.deviator ? py::cast(*c.deviator) : py::none());
        },
        py::arg("game"));

    m.def(
        "run_dynamics",
        [](const GameState& g, int max_rounds, std::uint64_t seed, std::vector<PlayerId> order) {
            DynamicsConfig config;
            config.max_rounds = max_rounds;
            config.seed = seed;
            config.player_order = std::move(order);
            const auto out = run_dynamics(g, config);
            py::dict d;
            d["status"] = std::string(to_string(out.status));
            d["rounds"] = out.rounds;
            d["period"] = out.period;
            d["welfare"] = to_fraction(out.welfare);
            d["final_state"] = out.final_state;
            return d;
        },
        py::arg("game"), py::arg("max_rounds") = 100, py::arg("seed") = 0,
        py::arg("player_order") = std::vector<PlayerId>{});

    m.def(
        "meta_tree",
        [](const GameState& g, std::vector<PlayerId> component) {
            const MetaTree t = meta_tree_construct(g, component);
            py::list blocks;
            for (const auto& b : t.blocks) {
                py::dict d;
                d["kind"] = b.kind == BlockKind::Candidate ? "candidate" : "bridge";
                d["members"] = b.members;
                blocks.append(d);
            }
            return py::make_tuple(blocks, t.tree_edges);
        },
        py::arg("game"), py::arg("component"), "Blocks and (candidate, bridge) tree edges of a mixed component.");

    m.def("gen_erdos_renyi", [](int n, double d, std::uint64_t seed, py::object alpha, py::object beta,
                                Adversary adv) { return gen_erdos_renyi_avg_degree(n, d, seed, from_python(alpha), from_python(beta), adv); },
          py::arg("n"), py::arg("avg_degree") = 5.0, py::arg("seed") = 0, py::arg("alpha") = 2, py::arg("beta") = 2,
          py::arg("adversary") = Adversary::MaximumCarnage);

    m.def("gen_gnm_connected", [](int n, long long edges, double fraction, std::uint64_t seed) {
              return gen_gnm_connected(n, edges, fraction, seed);
          },
          py::arg("n"), py::arg("m"), py::arg("immunized_fraction") = 0.0, py::arg("seed") = 0);
}
