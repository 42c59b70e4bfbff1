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

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bellport/bell.hpp"
#include "bellport/statevector.hpp"

namespace bellport {

namespace channel {

struct BellProduct {
    std::vector<BellLabel> labels;
};
struct SingletRandom {
    int pairs;
    std::uint64_t seed;
};
struct MajumdarGhoshDimers {
    int pairs;
};
struct HeisenbergRing {
    int sites;
};
struct Cluster1D {
    int sites;
};
struct GHZ {
    int sites;
};
struct AKLTVirtual {
    int sites;
};
struct Random {
    int sites;
    std::uint64_t seed;
};
struct Explicit {
    std::vector<Complex> amplitudes;
};

}  // namespace channel

using ChannelSpec =
    std::variant<channel::BellProduct, channel::SingletRandom, channel::MajumdarGhoshDimers, channel::HeisenbergRing,
                 channel::Cluster1D, channel::GHZ, channel::AKLTVirtual, channel::Random, channel::Explicit>;

/// Normalized channel state for `spec`.
PureState build(const ChannelSpec& spec);

/// Short name of the variant, e.g. "cluster".
std::string channel_name(const ChannelSpec& spec);

/// Product of single-site U factors with an overall sign. factors[i] is the
/// U index (0..3) acting on site i.
struct SiteOperatorString {
    int sign = 1;
    std::vector<int> factors;

    /// Operator product (*this) * rhs, reduced site by site.
    SiteOperatorString operator*(const SiteOperatorString& rhs) const;
    bool operator==(const SiteOperatorString&) const = default;

    PureState apply(const PureState& s) const;
    /// e.g. "-U1 U2 U2 U3 U3 U2".
    std::string to_string() const;
};

/// U^a U^b = sign * U^c.
std::pair<int, int> u_product(int a, int b);

/// |x+>^L followed by controlled-U^2 on each neighbouring pair.
PureState cluster_state(int sites);

/// K_j for j in 1..L.
SiteOperatorString cluster_stabilizer(int sites, int j);

struct ClusterGOperators {
    SiteOperatorString g1;
    SiteOperatorString g2;
};

/// G^1, G^2 as K products; the branch follows the parity of L/2.
ClusterGOperators cluster_g_operators(int sites);

struct StabilizerReport {
    std::string name;
    double eigenvalue = 0.0;
    double deviation = 0.0;
};

/// eigenvalue = Re <s|Op|s>, deviation = |Op s - eigenvalue s|.
StabilizerReport stabilizer_report(const std::string& name, const SiteOperatorString& op, const PureState& s);

struct AkltProjection {
    PureState state;
    /// Norm of the projected vector before renormalization.
    double projection_norm = 0.0;
};

/// Triplet projections on virtual pairs (1,2), (3,4), ..., (L-3,L-2) applied to
/// the all-singlet Bell product, then renormalized.
AkltProjection aklt_projected(int sites);
PureState aklt_state(int sites);

/// 4 <s^z_first (prod over virtual pairs of -U2 (x) U2) s^z_last>.
double string_order(const PureState& s);

struct HeisenbergGround {
    PureState state;
    double energy = 0.0;
    /// Gap to the next level in the total-Sz = 0 sector.
    double gap = 0.0;
};

inline constexpr double kDegeneracyTolerance = 1e-8;
inline constexpr int kMaxHeisenbergSites = 12;

/// Ground state of sum_i sigma_i . sigma_{i+1} on a periodic ring, from a
/// dense eigensolve in the total-Sz = 0 sector. Throws NumericalDegeneracy.
HeisenbergGround heisenberg_ground_state(int sites);

/// Random complex combination of non-crossing dimer singlet products.
PureState singlet_random(int pairs, std::uint64_t seed);
PureState singlet_random(int pairs, Rng& rng);

/// All non-crossing perfect matchings of 2 * pairs sites, each pair (a, b) with a < b.
std::vector<std::vector<std::pair<int, int>>> noncrossing_matchings(int pairs);

/// Product of singlets |-:-} on the listed (a, b) site pairs.
PureState dimer_product(int sites, const std::vector<std::pair<int, int>>& dimers);

PureState majumdar_ghosh(int pairs);
PureState ghz(int sites);

/// cos(phi) |+:-}|-:+} + sin(phi) |-:+}|+:-}, a class [-:-] channel whose
/// branch probabilities are not uniform.
PureState appendix_a_channel(double phi);

}  // namespace bellport
