// Copyright 2026 The bellport Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <utility>

#include "bellport/bell.hpp"
#include "bellport/channels.hpp"
#include "bellport/cli.hpp"
#include "bellport/errors.hpp"
#include "bellport/protocol.hpp"
#include "bellport/protocol3.hpp"
#include "bellport/qudit.hpp"

namespace py = pybind11;
using namespace bellport;

namespace {

using Amplitudes = Eigen::VectorXcd;
using SignPair = std::pair<int, int>;

PureState to_state(const Amplitudes& amps, int d = 2) {
    int sites = 0;
    Eigen::Index n = 1;
    while (n < amps.size()) {
        n *= d;
        ++sites;
    }
    if (n != amps.size() || sites == 0) {
        throw std::invalid_argument("amplitude count is not a positive power of the local dimension");
    }
    return PureState(d, sites, std::vector<Complex>(amps.data(), amps.data() + amps.size()),
                     Normalization::unnormalized)
        .normalized();
}

Amplitudes to_numpy(const PureState& s) {
    Amplitudes out(static_cast<Eigen::Index>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i) {
        out(static_cast<Eigen::Index>(i)) = s.amplitude(i);
    }
    return out;
}

BellLabel label(const SignPair& p) { return {Sign(p.first), Sign(p.second)}; }
BellClass cls(const SignPair& p) { return {Sign(p.first), Sign(p.second)}; }
SignPair pair_of(const BellClass& c) { return {c.j.value(), c.k.value()}; }

std::vector<BellLabel> labels(const std::vector<SignPair>& ps) {
    std::vector<BellLabel> out;
    for (const SignPair& p : ps) {
        out.push_back(label(p));
    }
    return out;
}

py::dict teleport_py(const Amplitudes& client, const Amplitudes& channel, const SignPair& assumed,
                     const std::vector<SignPair>& outcomes) {
    const std::vector<BellLabel> forced = labels(outcomes);
    const TeleportResult r = teleport(to_state(client), to_state(channel), cls(assumed), forced);
    py::dict d;
    d["fidelity"] = r.fidelity;
    d["joint_probability"] = r.record.joint_probability;
    d["aggregate_class"] = pair_of(r.record.aggregate_class);
    d["recipient_state"] = to_numpy(r.recipient_state);
    return d;
}

py::dict order_parameter_py(const Amplitudes& amps) {
    const OrderParameter op = order_parameter(to_state(amps));
    py::dict d;
    d["u1"] = op.expectations.u1;
    d["u2"] = op.expectations.u2;
    d["u3"] = op.expectations.u3;
    d["efficiency"] = op.efficiency;
    py::dict omega;
    for (const BellClass& c : all_bell_classes()) {
        omega[py::cast(pair_of(c))] = op.omega_of(c);
    }
    d["omega"] = omega;
    return d;
}

py::dict class_weights_py(const Amplitudes& amps) {
    const ClassDecomposition dec = decompose_classes(to_state(amps));
    py::dict d;
    for (const BellClass& c : all_bell_classes()) {
        d[py::cast(pair_of(c))] = dec.weight(c);
    }
    return d;
}

py::list fig2_py(std::size_t trials, std::uint64_t seed, const std::string& ensemble, bool enumerate) {
    Fig2Options opts;
    opts.trials = trials;
    opts.seed = seed;
    opts.ensemble = parse_fig2_ensemble(ensemble);
    opts.enumerate_branches = enumerate;
    py::list rows;
    for (const Fig2Row& r : fig2_run(opts)) {
        py::dict d;
        d["trial"] = r.trial;
        d["assumed_class"] = pair_of(r.assumed_class);
        d["omega"] = r.omega;
        d["measured_class"] = pair_of(r.measured_class);
        d["fidelity"] = r.fidelity;
        if (enumerate) {
            d["branch_min_fidelity"] = r.branch_min_fidelity;
        }
        rows.append(d);
    }
    return rows;
}

py::dict scan_py(double theta) {
    const BoundScanResult r = min_fidelity_scan(theta);
    py::dict d;
    d["theta"] = r.theta;
    d["minimum"] = r.minimum;
    d["a"] = r.a;
    d["b"] = r.b;
    d["abs_c"] = r.c_abs;
    d["evaluations"] = r.evaluations;
    return d;
}

py::dict qudit_teleport_py(int d, const Amplitudes& client, const std::vector<SignPair>& channel,
                           const std::vector<SignPair>& outcomes) {
    std::vector<QuditBellLabel> ch;
    for (const auto& [j, k] : channel) {
        ch.emplace_back(j, k, d);
    }
    std::vector<QuditBellLabel> forced;
    for (const auto& [j, k] : outcomes) {
        forced.emplace_back(j, k, d);
    }
    const QuditTeleportResult r =
        qudit_teleport(to_state(client, d), qudit_bell_product(ch), qudit_class_of(ch), forced);
    py::dict out;
    out["fidelity"] = r.fidelity;
    out["joint_probability"] = r.joint_probability;
    out["aggregate"] = std::pair{r.aggregate.j, r.aggregate.k};
    return out;
}

int cli_py(std::vector<std::string> args) {
    args.insert(args.begin(), "bellport");
    std::vector<char*> argv;
    for (std::string& a : args) {
        argv.push_back(a.data());
    }
    return cli::main(static_cast<int>(argv.size()), argv.data());
}

}  // namespace

PYBIND11_MODULE(_bellport, m) {
    m.doc() = "Bell-measurement teleportation simulator.";

    py::register_exception<ImpossibleOutcome>(m, "ImpossibleOutcome");
    py::register_exception<EmptyData>(m, "EmptyData");

    m.attr("__version__") = cli::version();

    m.def("bell_state", [](int j, int k) { return to_numpy(bell_state(label({j, k}))); }, py::arg("j"), py::arg("k"));
    m.def(
        "bell_product", [](const std::vector<SignPair>& ls) { return to_numpy(bell_basis_state(labels(ls))); },
        py::arg("labels"));
    m.def(
        "class_of", [](const std::vector<SignPair>& ls) { return pair_of(class_of(labels(ls))); }, py::arg("labels"));
    m.def(
        "x_operator",
        [](int j, int k, int p, int q) {
            return Eigen::MatrixXcd(x_operator(Sign(j), Sign(k), Sign(p), Sign(q)).matrix());
        },
        py::arg("j"), py::arg("k"), py::arg("p"), py::arg("q"));
    m.def(
        "epsilon", [](int j, int k, int p, int q) { return epsilon_sign(Sign(j), Sign(k), Sign(p), Sign(q)).value(); },
        py::arg("j"), py::arg("k"), py::arg("p"), py::arg("q"));
    m.def(
        "random_state", [](int sites, std::uint64_t seed, int d) { return to_numpy(random_state(sites, d, seed)); },
        py::arg("sites"), py::arg("seed"), py::arg("d") = 2);

    m.def("teleport", &teleport_py, py::arg("client"), py::arg("channel"), py::arg("assumed"), py::arg("outcomes"),
          "Teleport with forced outcomes on the default pairing.");
    m.def("order_parameter", &order_parameter_py, py::arg("state"));
    m.def("class_weights", &class_weights_py, py::arg("state"));
    m.def(
        "branch_probabilities",
        [](const Amplitudes& client, const Amplitudes& channel) {
            return branch_probabilities(to_state(client), to_state(channel));
        },
        py::arg("client"), py::arg("channel"));

    m.def("cluster_state", [](int sites) { return to_numpy(cluster_state(sites)); }, py::arg("sites"));
    m.def("aklt_state", [](int sites) { return to_numpy(aklt_state(sites)); }, py::arg("sites"));
    m.def(
        "heisenberg_ground_state",
        [](int sites) {
            const HeisenbergGround g = heisenberg_ground_state(sites);
            return py::make_tuple(to_numpy(g.state), g.energy, g.gap);
        },
        py::arg("sites"));
    m.def(
        "string_order", [](const Amplitudes& amps) { return string_order(to_state(amps)); }, py::arg("state"));
    m.def("appendix_a_channel", [](double phi) { return to_numpy(appendix_a_channel(phi)); }, py::arg("phi"));

    m.def("fig2", &fig2_py, py::arg("trials") = 2000, py::arg("seed") = 42, py::arg("ensemble") = "perturbed",
          py::arg("enumerate_branches") = false);
    m.def("satisfies_bound", [](double f, double omega) { return satisfies_bound(f, omega); }, py::arg("fidelity"),
          py::arg("omega"));
    m.def("min_fidelity_scan", &scan_py, py::arg("theta"));

    m.def(
        "theta_rank", [](int kappa) { return theta_rank(kappa).rank; }, py::arg("kappa"));
    m.def("qudit_teleport", &qudit_teleport_py, py::arg("d"), py::arg("client"), py::arg("channel"),
          py::arg("outcomes"));
    m.def(
        "qudit_class_dimension", [](int d, int sites, int j, int k) { return qudit_class_dimension(d, sites, {j, k, d}); },
        py::arg("d"), py::arg("sites"), py::arg("j"), py::arg("k"));

    m.def("cli", &cli_py, py::arg("args"), "Run the command-line tool with the given arguments.");
}
