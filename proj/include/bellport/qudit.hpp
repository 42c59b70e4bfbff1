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

#include <span>
#include <string>
#include <vector>

#include "bellport/measurement.hpp"
#include "bellport/statevector.hpp"

namespace bellport {

/// omega = exp(2 pi i / d).
Complex root_of_unity(int d, int power = 1);

/// Labels (j, k) mod d.
struct QuditBellLabel {
    int j = 0;
    int k = 0;
    int d = 2;

    QuditBellLabel() = default;
    /// Reduces j, k mod d. Throws std::invalid_argument for d < 2.
    QuditBellLabel(int j_, int k_, int d_);
    bool operator==(const QuditBellLabel&) const = default;
    int index() const { return j * d + k; }
    static QuditBellLabel from_index(int i, int d) { return {i / d, i % d, d}; }
    QuditBellLabel operator+(const QuditBellLabel& o) const;
};

std::string to_string(const QuditBellLabel& l);

/// P^k Q^j with P|l> = |l+1>, Q|l> = omega^l |l>.
LocalOperator generalized_pauli(int d, int k, int j);

/// (1/sqrt(d)) sum_l omega^{jl} |l> (x) |l+k>.
PureState qudit_bell(const QuditBellLabel& l);

/// Generalized Bell pair i on sites (2i, 2i+1).
PureState qudit_bell_product(std::span<const QuditBellLabel> labels);

/// Class (sum j, sum k) mod d of a generalized Bell product.
QuditBellLabel qudit_class_of(std::span<const QuditBellLabel> labels);

/// Xt^{jk}_{pq} = R^{kj} R^{q,-p}.
LocalOperator qudit_x_tilde(const QuditBellLabel& channel, const QuditBellLabel& outcome);

struct QuditMeasurementOutcome {
    SitePair pair;
    QuditBellLabel label;
    double probability = 0.0;
};

struct QuditTeleportResult {
    std::vector<QuditMeasurementOutcome> outcomes;
    QuditBellLabel aggregate;
    double joint_probability = 1.0;
    LocalOperator correction;
    PureState recipient_state;
    double fidelity = 0.0;
};

/// Client (site 0) followed by a channel of 2 * pairs qudits, measured on the
/// adjacent pairs (0,1), (2,3), ... with the last site kept. The correction is
/// (Xt^{jk}_{pq})^dagger for channel class `assumed` and aggregate outcome (sum p, sum q).
QuditTeleportResult qudit_teleport(const PureState& client, const PureState& channel, const QuditBellLabel& assumed,
                                   std::span<const QuditBellLabel> forced);
QuditTeleportResult qudit_teleport(const PureState& client, const PureState& channel, const QuditBellLabel& assumed,
                                   Rng& rng);

/// Upsilon_P = P on every site; Upsilon_Q = Q (x) Q^{-1} on every pair.
/// A class-(j,k) Bell product has eigenvalues omega^{-j} and omega^{-k}.
PureState apply_qudit_upsilon_p(const PureState& s, int power = 1);
PureState apply_qudit_upsilon_q(const PureState& s, int power = 1);

/// (1/d^2) sum_{a,b} omega^{aj + bk} Upsilon_P^a Upsilon_Q^b s, unnormalized.
PureState qudit_class_projector_apply(const PureState& s, const QuditBellLabel& cls);

/// |P_(j,k) s| for every class, indexed by QuditBellLabel::index.
std::vector<double> qudit_decompose(const PureState& s, int d);

/// Rank of the class projector on `sites` qudits, computed on every basis state.
int qudit_class_dimension(int d, int sites, const QuditBellLabel& cls, double tol = 1e-9);

}  // namespace bellport
