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

#include "bellport/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "bellport/errors.hpp"

namespace bellport {

LocalOperator correction_gate(const BellClass& channel_class, const BellClass& measurement_class) {
    return x_tilde_operator(channel_class.j, channel_class.k, measurement_class.j, measurement_class.k).adjoint();
}

std::vector<SitePair> default_pairing(int total_sites) {
    if (total_sites < 3 || total_sites % 2 == 0) {
        throw std::invalid_argument("default_pairing needs an odd site count >= 3");
    }
    std::vector<SitePair> pairs;
    for (int a = 0; a + 1 < total_sites - 1; a += 2) {
        pairs.emplace_back(a, a + 1);
    }
    return pairs;
}

namespace {

void check_teleport_inputs(const PureState& client, const PureState& channel) {
    if (client.local_dim() != 2 || client.num_sites() != 1) {
        throw std::invalid_argument("client must be a single qubit");
    }
    if (!client.is_normalized()) {
        throw std::invalid_argument("client must be normalized");
    }
    if (channel.local_dim() != 2 || channel.num_sites() < 2 || channel.num_sites() % 2 != 0) {
        throw std::invalid_argument("channel must have an even number of qubits");
    }
}

}  // namespace

TeleportResult teleport(const PureState& client, const PureState& channel, const BellClass& assumed,
                        std::span<const SitePair> pairing, OutcomeChooser chooser) {
    check_teleport_inputs(client, channel);
    const PureState total = tensor(client, channel.is_normalized() ? channel : channel.normalized());
    const int n = total.num_sites();
    std::vector<SitePair> pairs(pairing.begin(), pairing.end());
    if (pairs.empty()) {
        pairs = default_pairing(n);
    }
    if (static_cast<int>(pairs.size()) * 2 != n - 1) {
        throw std::invalid_argument("pairing must leave exactly one recipient site");
    }
    const bool client_measured = std::any_of(pairs.begin(), pairs.end(), [](const SitePair& p) {
        return p.first == 0 || p.second == 0;
    });
    if (!client_measured) {
        throw std::invalid_argument("pairing must include the client site 0");
    }
    auto [record, residual] = measure_sequence(total, pairs, chooser);
    const LocalOperator gate = correction_gate(assumed, record.aggregate_class);
    PureState corrected = apply_local(residual, gate, 0);
    const double fid = overlap(client, corrected);
    return {std::move(record), gate, std::move(corrected), fid};
}

TeleportResult teleport(const PureState& client, const PureState& channel, const BellClass& assumed,
                        std::span<const BellLabel> forced) {
    return teleport(client, channel, assumed, {}, OutcomeChooser(forced));
}

TeleportResult teleport(const PureState& client, const PureState& channel, const BellClass& assumed, Rng& rng) {
    return teleport(client, channel, assumed, {}, OutcomeChooser(rng));
}

BranchSummary enumerate_branches(const PureState& client, const PureState& channel, const BellClass& assumed,
                                 std::span<const SitePair> pairing) {
    const int pairs = channel.num_sites() / 2;
    std::size_t total = 1;
    for (int i = 0; i < pairs; ++i) {
        total *= 4;
    }
    BranchSummary summary;
    std::vector<BellLabel> forced(static_cast<std::size_t>(pairs), BellLabel{kPlus, kPlus});
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t c = code;
        for (auto& l : forced) {
            l = BellLabel::from_index(static_cast<int>(c % 4));
            c /= 4;
        }
        try {
            const TeleportResult r = teleport(client, channel, assumed, pairing, OutcomeChooser(forced));
            ++summary.branches;
            summary.min_fidelity = std::min(summary.min_fidelity, r.fidelity);
            summary.mean_fidelity += r.record.joint_probability * r.fidelity;
        } catch (const ImpossibleOutcome&) {
        }
    }
    return summary;
}

std::vector<double> branch_probabilities(const PureState& client, const PureState& channel,
                                         std::span<const SitePair> pairing) {
    const int pairs = channel.num_sites() / 2;
    std::size_t total = 1;
    for (int i = 0; i < pairs; ++i) {
        total *= 4;
    }
    std::vector<double> probs(total, 0.0);
    std::vector<BellLabel> forced(static_cast<std::size_t>(pairs), BellLabel{kPlus, kPlus});
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t c = code;
        for (auto it = forced.rbegin(); it != forced.rend(); ++it) {
            *it = BellLabel::from_index(static_cast<int>(c % 4));
            c /= 4;
        }
        try {
            probs[code] = teleport(client, channel, {kPlus, kPlus}, pairing, OutcomeChooser(forced)).record.joint_probability;
        } catch (const ImpossibleOutcome&) {
        }
    }
    return probs;
}

OrderParameter order_parameter(const PureState& s) {
    OrderParameter op;
    op.expectations = upsilon_expectations(s);
    const double r3 = std::sqrt(3.0);
    op.t_vector = {op.expectations.u1 / r3, op.expectations.u2 / r3, op.expectations.u3 / r3};
    op.efficiency = 0.0;
    for (double t : op.t_vector) {
        op.efficiency += t * t;
    }
    for (const BellClass& c : all_bell_classes()) {
        op.omega[static_cast<std::size_t>(c.index())] = omega(op.expectations, c);
    }
    return op;
}

double fidelity_formula(const PureState& client, const PureState& two_qubit_channel, const BellLabel& assumed,
                        const BellLabel& outcome) {
    if (two_qubit_channel.local_dim() != 2 || two_qubit_channel.num_sites() != 2) {
        throw std::invalid_argument("fidelity_formula needs a two-qubit channel");
    }
    if (client.local_dim() != 2 || client.num_sites() != 1) {
        throw std::invalid_argument("client must be a single qubit");
    }
    Eigen::Matrix2cd xt = Eigen::Matrix2cd::Zero();
    for (const BellLabel& l : all_bell_labels()) {
        const Complex c = inner_product(bell_state(l), two_qubit_channel);
        xt += c * x_tilde_operator(l.j, l.k, outcome.j, outcome.k).matrix();
    }
    const Eigen::Vector2cd v(client.amplitude(0), client.amplitude(1));
    const Eigen::Matrix2cd ref = x_tilde_operator(assumed.j, assumed.k, outcome.j, outcome.k).matrix();
    const Complex num = v.dot(ref.adjoint() * xt * v);
    const double den = std::abs(v.dot(xt.adjoint() * xt * v));
    if (den / 4.0 <= kZeroProbability) {
        throw ImpossibleOutcome("branch has zero probability");
    }
    return std::norm(num) / den;
}

LocalOperator coherent_error(double theta, const std::array<Complex, 3>& n) {
    const Complex i(0.0, 1.0);
    const Eigen::Matrix2cd gen =
        n[0] * u_matrix(1).matrix() + n[1] * u_matrix(2).matrix() + i * n[2] * u_matrix(3).matrix();
    return LocalOperator(std::cos(theta / 2) * Eigen::Matrix2cd::Identity() - i * std::sin(theta / 2) * gen);
}

double branch_fidelity(const LocalOperator& r, const PureState& client) {
    const Eigen::Vector2cd v(client.amplitude(0), client.amplitude(1));
    const Eigen::Matrix2cd& m = r.matrix();
    return std::norm(v.dot(m * v)) / std::abs(v.dot(m.adjoint() * m * v));
}

double appendix_delta(double theta, Complex a, Complex b) {
    const double co = std::cos(theta / 2);
    const double si = std::sin(theta / 2);
    // R|+> = (co + si a, si b); <+|R^dagger R|+> = |R|+>|^2.
    const Complex top = co + si * a;
    const Complex bottom = si * b;
    const double num = std::norm(top);
    return num / (num + std::norm(bottom));
}

namespace {

struct ScanBox {
    std::array<double, 4> lo;
    std::array<double, 4> hi;
};

// Best point of a uniform grid over the box; points off the normalization
// surface (|a|^2 + |b|^2 / 2 > 1) are skipped.
void scan_box(double theta, const ScanBox& box, int points, BoundScanResult& best) {
    std::array<std::vector<double>, 4> axis;
    for (std::size_t d = 0; d < 4; ++d) {
        axis[d].resize(static_cast<std::size_t>(points));
        for (int i = 0; i < points; ++i) {
            const double t = points == 1 ? 0.5 : static_cast<double>(i) / (points - 1);
            axis[d][static_cast<std::size_t>(i)] = box.lo[d] + t * (box.hi[d] - box.lo[d]);
        }
    }
    for (double ar : axis[0]) {
        for (double ai : axis[1]) {
            const double a2 = ar * ar + ai * ai;
            if (a2 > 1.0) {
                continue;
            }
            for (double br : axis[2]) {
                for (double bi : axis[3]) {
                    const double rest = 2.0 * (1.0 - a2) - (br * br + bi * bi);
                    if (rest < 0.0) {
                        continue;
                    }
                    ++best.evaluations;
                    const double v = appendix_delta(theta, {ar, ai}, {br, bi});
                    if (v < best.minimum) {
                        best.minimum = v;
                        best.a = {ar, ai};
                        best.b = {br, bi};
                        best.c_abs = std::sqrt(rest);
                    }
                }
            }
        }
    }
}

}  // namespace

BoundScanResult min_fidelity_scan(double theta, int grid_points, int refinements) {
    if (!(theta >= 0.0 && theta < std::numbers::pi)) {
        throw std::invalid_argument("theta must lie in [0, pi)");
    }
    if (grid_points < 2 || refinements < 0) {
        throw std::invalid_argument("grid needs at least 2 points per axis");
    }
    BoundScanResult best;
    best.theta = theta;
    best.minimum = std::numeric_limits<double>::infinity();
    const double rb = std::numbers::sqrt2;
    ScanBox box{{-1.0, -1.0, -rb, -rb}, {1.0, 1.0, rb, rb}};
    scan_box(theta, box, grid_points, best);
    std::array<double, 4> step = {2.0 / (grid_points - 1), 2.0 / (grid_points - 1), 2 * rb / (grid_points - 1),
                                  2 * rb / (grid_points - 1)};
    constexpr int kZoomPoints = 11;
    for (int pass = 0; pass < refinements; ++pass) {
        const std::array<double, 4> centre = {best.a.real(), best.a.imag(), best.b.real(), best.b.imag()};
        for (std::size_t d = 0; d < 4; ++d) {
            box.lo[d] = centre[d] - step[d];
            box.hi[d] = centre[d] + step[d];
            step[d] = 2.0 * step[d] / (kZoomPoints - 1);
        }
        scan_box(theta, box, kZoomPoints, best);
    }
    return best;
}

double min_fidelity_over_clients(const LocalOperator& r, int polar_points, int azimuth_points) {
    if (polar_points < 2 || azimuth_points < 2) {
        throw std::invalid_argument("Bloch grid needs at least 2 points per axis");
    }
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < polar_points; ++i) {
        const double pol = std::numbers::pi * i / (polar_points - 1);
        for (int k = 0; k < azimuth_points; ++k) {
            const double az = 2.0 * std::numbers::pi * k / (azimuth_points - 1);
            const PureState v(2, 1, {std::cos(pol / 2), std::polar(std::sin(pol / 2), az)});
            best = std::min(best, branch_fidelity(r, v));
        }
    }
    return best;
}

std::string to_string(Fig2Ensemble e) { return e == Fig2Ensemble::perturbed ? "perturbed" : "uniform"; }

Fig2Ensemble parse_fig2_ensemble(const std::string& text) {
    if (text == "perturbed") {
        return Fig2Ensemble::perturbed;
    }
    if (text == "uniform") {
        return Fig2Ensemble::uniform;
    }
    throw std::invalid_argument("unknown ensemble '" + text + "' (expected perturbed or uniform)");
}

PureState fig2_channel(Fig2Ensemble ensemble, Rng& rng) {
    if (ensemble == Fig2Ensemble::uniform) {
        return random_state(4, 2, rng);
    }
    const BellClass cls = BellClass::from_index(static_cast<int>(rng.below(4)));
    PureState inside = class_projector_apply(random_state(4, 2, rng), cls).normalized();
    const double theta = std::numbers::pi * rng.uniform();
    std::array<Complex, 3> n{};
    double norm = 0.0;
    for (Complex& z : n) {
        z = rng.complex_normal();
        norm += std::norm(z);
    }
    for (Complex& z : n) {
        z /= std::sqrt(norm);
    }
    return apply_local(inside, coherent_error(theta, n), 3).normalized();
}

std::vector<Fig2Row> fig2_run(const Fig2Options& options) {
    if (options.trials < 1) {
        throw std::invalid_argument("fig2 needs at least one trial");
    }
    const Rng root(options.seed);
    std::vector<Fig2Row> rows;
    rows.reserve(options.trials * 4);
    for (std::size_t t = 0; t < options.trials; ++t) {
        Rng rng = root.split(t);
        const PureState client = random_state(1, 2, rng);
        const PureState channel = fig2_channel(options.ensemble, rng);
        const OrderParameter op = order_parameter(channel);
        for (const BellClass& c : all_bell_classes()) {
            const TeleportResult r = teleport(client, channel, c, rng);
            Fig2Row row{t, c, op.omega_of(c), r.record.aggregate_class, r.fidelity, r.fidelity};
            if (options.enumerate_branches) {
                row.branch_min_fidelity = enumerate_branches(client, channel, c).min_fidelity;
            }
            rows.push_back(row);
        }
    }
    return rows;
}

bool satisfies_bound(double fidelity, double omega, double slack) { return fidelity >= (omega - 1.0) / 2.0 - slack; }

std::size_t count_bound_violations(std::span<const Fig2Row> rows, double slack) {
    std::size_t bad = 0;
    for (const Fig2Row& r : rows) {
        const double f = std::min(r.fidelity, r.branch_min_fidelity);
        bad += satisfies_bound(f, r.omega, slack) ? 0 : 1;
    }
    return bad;
}

}  // namespace bellport
