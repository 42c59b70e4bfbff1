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

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bellport/bell.hpp"
#include "bellport/measurement.hpp"
#include "bellport/statevector.hpp"

namespace bellport {

struct TeleportResult {
    MeasurementRecord record;
    LocalOperator correction;
    /// Corrected single-site state held by the recipient.
    PureState recipient_state;
    double fidelity = 0.0;
};

/// (Xt^{jk}_{pq})^dagger for channel class [j:k] and measurement class [p:q].
LocalOperator correction_gate(const BellClass& channel_class, const BellClass& measurement_class);

/// (0,1), (2,3), ... over `total_sites` sites, leaving the last site unpaired.
std::vector<SitePair> default_pairing(int total_sites);

/// Runs the protocol on client (site 0) followed by the channel. An empty
/// pairing selects default_pairing. The pairing must measure the client and
/// leave exactly one site for the recipient.
TeleportResult teleport(const PureState& client, const PureState& channel, const BellClass& assumed,
                        std::span<const SitePair> pairing, OutcomeChooser chooser);
TeleportResult teleport(const PureState& client, const PureState& channel, const BellClass& assumed,
                        std::span<const BellLabel> forced);
TeleportResult teleport(const PureState& client, const PureState& channel, const BellClass& assumed, Rng& rng);

/// Every branch of the default pairing with nonzero probability.
struct BranchSummary {
    std::size_t branches = 0;
    double min_fidelity = 1.0;
    /// Probability-weighted average fidelity.
    double mean_fidelity = 0.0;
};
BranchSummary enumerate_branches(const PureState& client, const PureState& channel, const BellClass& assumed,
                                 std::span<const SitePair> pairing = {});

/// Joint probability of every outcome tuple on the pairing (default when empty),
/// indexed with the first pair's BellLabel::index most significant.
std::vector<double> branch_probabilities(const PureState& client, const PureState& channel,
                                         std::span<const SitePair> pairing = {});

struct OrderParameter {
    UpsilonExpectations expectations;
    /// <Upsilon^alpha> / sqrt(3).
    std::array<double, 3> t_vector{};
    double efficiency = 0.0;
    /// Omega_[j:k] indexed by BellClass::index().
    std::array<double, 4> omega{};

    double omega_of(const BellClass& c) const { return omega[static_cast<std::size_t>(c.index())]; }
};

OrderParameter order_parameter(const PureState& s);

/// Fidelity of one branch through a two-qubit channel, evaluated from the
/// Bell-basis coefficients C_[j:k] of the channel without simulating the
/// measurement. Throws ImpossibleOutcome for a zero-probability branch.
double fidelity_formula(const PureState& client, const PureState& two_qubit_channel, const BellLabel& assumed,
                        const BellLabel& outcome);

/// cos(theta/2) I - i sin(theta/2) (n1 U1 + n2 U2 + i n3 U3). Unitary only for real n.
LocalOperator coherent_error(double theta, const std::array<Complex, 3>& n);

/// |<v|R|v>|^2 / |<v|R^dagger R|v>|.
double branch_fidelity(const LocalOperator& r, const PureState& client);

/// Delta at client |+> for R = cos(theta/2) I + sin(theta/2) [[a, c], [b, -a]].
/// The value does not depend on c.
double appendix_delta(double theta, Complex a, Complex b);

struct BoundScanResult {
    double theta = 0.0;
    double minimum = 1.0;
    Complex a;
    Complex b;
    double c_abs = 0.0;
    std::size_t evaluations = 0;
};

/// Minimizes appendix_delta over (a, b, c) on the surface
/// |a|^2 + (|b|^2 + |c|^2)/2 = 1 with a grid over (Re a, Im a, Re b, Im b) of
/// `grid_points` per axis, then `refinements` zoomed passes around the best point.
BoundScanResult min_fidelity_scan(double theta, int grid_points = 50, int refinements = 12);

/// min over a (polar, azimuth) Bloch grid of clients of branch_fidelity(r, v).
double min_fidelity_over_clients(const LocalOperator& r, int polar_points = 181, int azimuth_points = 361);

enum class Fig2Ensemble {
    /// A Haar state inside a random Bell class with R(theta, n) applied to the
    /// last channel qubit; theta uniform on [0, pi), n a random complex unit vector.
    perturbed,
    /// Haar-random four-qubit state.
    uniform,
};

std::string to_string(Fig2Ensemble e);
Fig2Ensemble parse_fig2_ensemble(const std::string& text);

struct Fig2Row {
    std::size_t trial = 0;
    BellClass assumed_class{kPlus, kPlus};
    double omega = 0.0;
    BellClass measured_class{kPlus, kPlus};
    double fidelity = 0.0;
    /// Minimum over all possible branches; filled only when enumerating.
    double branch_min_fidelity = 1.0;
};

struct Fig2Options {
    std::size_t trials = 2000;
    std::uint64_t seed = 42;
    Fig2Ensemble ensemble = Fig2Ensemble::perturbed;
    bool enumerate_branches = false;
};

/// Channel for one trial of the chosen ensemble.
PureState fig2_channel(Fig2Ensemble ensemble, Rng& rng);

/// One row per (trial, assumed class). Trial t draws from Rng(seed).split(t).
std::vector<Fig2Row> fig2_run(const Fig2Options& options);

/// fidelity >= (omega - 1)/2 - slack.
bool satisfies_bound(double fidelity, double omega, double slack = 1e-9);

/// Rows violating the bound (sampled branch, plus every branch when enumerated).
std::size_t count_bound_violations(std::span<const Fig2Row> rows, double slack = 1e-9);

}  // namespace bellport
