#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qco/ensembles.hpp"
#include "qco/io.hpp"

namespace py = pybind11;
using namespace qco;

namespace {

py::dict report_dict(const OverheadReport& r) {
    py::dict d;
    d["variant"] = r.variant == Variant::QT ? "Q_T" : "Q";
    d["label"] = r.label;
    d["set_size"] = r.set_size;
    d["d"] = r.d;
    d["t"] = r.t;
    d["delta"] = r.delta;
    d["q"] = r.q;
    d["q_opt_bar"] = r.q_opt_bar;
    d["delta_opt"] = r.delta_opt;
    d["no_gap"] = r.no_gap;
    d["degenerate_delta"] = r.degenerate_delta;
    d["norms_converged"] = r.norms_converged;
    if (r.epsilon) d["epsilon"] = *r.epsilon;
    if (r.ell_vol) d["ell_vol"] = *r.ell_vol;
    if (r.ell_delta) d["ell_delta"] = *r.ell_delta;
    return d;
}

py::dict profile_dict(const DeltaProfile& p) {
    py::dict d;
    d["per_spin_norms"] = p.per_spin_norms;
    d["delta_of_t"] = p.delta_of_t;
    d["converged"] = std::vector<bool>(p.converged.begin(), p.converged.end());
    d["t_max"] = p.t_max;
    d["set_size"] = p.set_size;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "circuit-overhead bounds for single-qubit gate sets";

    py::register_exception<Error>(m, "QcoError");

    py::class_<ProjectiveGate>(m, "Gate")
        .def(py::init([](const Matrix2& mtx) { return ProjectiveGate::from_matrix(mtx); }),
             py::arg("matrix"))
        .def_property_readonly("matrix",
                               [](const ProjectiveGate& g) { return g.matrix(); })
        .def("dagger", &ProjectiveGate::dagger)
        .def("__mul__", &ProjectiveGate::operator*)
        .def("__repr__", [](const ProjectiveGate& g) {
            AxisAngle aa = axis_angle(g);
            char buf[128];
            std::snprintf(buf, sizeof(buf), "Gate(axis=(%.4f, %.4f, %.4f), angle=%.4f)",
                          aa.axis[0], aa.axis[1], aa.axis[2], aa.angle);
            return std::string(buf);
        });

    py::class_<GateSet>(m, "GateSet")
        .def(py::init([](const std::vector<ProjectiveGate>& gates, const std::string& label) {
                 GateSet s;
                 s.gates = gates;
                 s.label = label;
                 return s;
             }),
             py::arg("gates"), py::arg("label") = "")
        .def_readonly("gates", &GateSet::gates)
        .def_readonly("label", &GateSet::label)
        .def("__len__", &GateSet::size);

    m.def("projective_distance", &projective_distance);
    m.def("projective_equal", &projective_equal, py::arg("u"), py::arg("v"),
          py::arg("tol") = 1e-9);
    m.def("projective_order", &projective_order, py::arg("u"), py::arg("max_order"));
    m.def("rotation_gate", &rotation_gate, py::arg("axis"), py::arg("theta"));
    m.def("axis_angle", [](const ProjectiveGate& g) {
        AxisAngle aa = axis_angle(g);
        return py::make_tuple(aa.axis, aa.angle);
    });
    m.def("haar_gate", [](std::uint64_t seed) {
        Rng rng(seed);
        return haar_sample(rng);
    });
    m.def("finite_order_gate", [](std::uint64_t seed, int r) {
        Rng rng(seed);
        return finite_order_sample(rng, r);
    });

    m.def("clifford_group", &clifford_group);
    m.def("hurwitz_group", &hurwitz_group);
    m.def("phase_gate", &phase_gate);
    m.def("t24_gate", &t24_gate);
    m.def("t12_gate", &t12_gate);
    m.def("group_closure", &group_closure, py::arg("generators"), py::arg("cap"),
          py::arg("label") = "group");
    m.def("derived_set", &derived_set);

    m.def("irrep", [](const ProjectiveGate& g, int s) { return irrep(g, s).entries; });
    m.def("character", &character);
    m.def("irrep_multiplicity", &irrep_multiplicity);

    m.def(
        "delta_profile",
        [](const GateSet& s, int t, int workers) {
            return profile_dict(delta_profile(s, t, workers));
        },
        py::arg("set"), py::arg("t"), py::arg("workers") = 0);
    m.def("brute_force_delta", &brute_force_delta);

    m.def("delta_opt", &delta_opt);
    m.def("q_value", &q_value);
    m.def("q_opt_bar", &q_opt_bar);
    m.def("t_of_eps", &t_of_eps, py::arg("epsilon"), py::arg("d") = 2);
    m.def("km_density", &km_density, py::arg("x"), py::arg("n"),
          py::arg("symmetric") = false);

    m.def(
        "q_report",
        [](const GateSet& s, int t, std::optional<double> eps, int workers) {
            return report_dict(q_report(s, t, eps, workers));
        },
        py::arg("set"), py::arg("t"), py::arg("epsilon") = py::none(),
        py::arg("workers") = 0);
    m.def(
        "q_t",
        [](const GateSet& group, const ProjectiveGate& gate, int t,
           std::optional<double> eps, int workers) {
            return report_dict(q_t(group, gate, t, eps, workers));
        },
        py::arg("group"), py::arg("gate"), py::arg("t"),
        py::arg("epsilon") = py::none(), py::arg("workers") = 0);

    m.def(
        "sweep",
        [](const std::string& kind, const GateSet& base, int n, int order, int size,
           std::uint64_t seed, const std::vector<int>& t_list, const std::string& variant,
           int workers) {
            EnsembleSpec spec;
            if (kind == "haar")
                spec.kind = EnsembleKind::Haar;
            else if (kind == "group-completion")
                spec.kind = EnsembleKind::GroupCompletion;
            else
                throw InputError("sweep kind must be haar or group-completion");
            spec.base_group = base;
            spec.n = n;
            spec.order = order;
            spec.size = size;
            spec.seed = seed;
            spec.t_list = t_list;
            auto results = run_sweep(spec, variant == "Q_T" ? Variant::QT : Variant::Q, 0,
                                     1, workers);
            py::list out;
            for (const auto& r : results) {
                py::dict d;
                d["member_index"] = r.member_index;
                d["failed"] = r.failed;
                py::list reps;
                for (const auto& rep : r.reports) reps.append(report_dict(rep));
                d["reports"] = reps;
                out.append(d);
            }
            return out;
        },
        py::arg("kind"), py::arg("base_group") = GateSet{}, py::arg("n") = 0,
        py::arg("order") = 0, py::arg("size") = 1, py::arg("seed") = 0,
        py::arg("t_list") = std::vector<int>{5}, py::arg("variant") = "Q_T",
        py::arg("workers") = 0);

    m.def(
        "search_best_completion",
        [](const GateSet& group, int r, int t, int budget, const std::string& strategy,
           std::uint64_t seed, int workers) {
            auto res = search_best_completion(
                group, r, t, budget,
                strategy == "axis-grid" ? SearchStrategy::AxisGrid : SearchStrategy::Random,
                seed, workers);
            return py::make_tuple(res.best, res.q);
        },
        py::arg("group"), py::arg("order"), py::arg("t"), py::arg("budget"),
        py::arg("strategy") = "random", py::arg("seed") = 0, py::arg("workers") = 0);

    m.attr("__version__") = "0.1.0";
}
