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
#include <string>

#include "bellport/bell.hpp"
#include "bellport/statevector.hpp"

namespace bellport {

struct Bell3Label {
    Sign j;
    Sign k;
    Sign l;
    bool operator==(const Bell3Label&) const = default;
    /// 0..7 with j most significant, + before -.
    int index() const { return j.bit() * 4 + k.bit() * 2 + l.bit(); }
    static Bell3Label from_index(int i) {
        return {Sign::from_bit((i >> 2) & 1), Sign::from_bit((i >> 1) & 1), Sign::from_bit(i & 1)};
    }
};

std::string to_string(const Bell3Label& l);
const std::array<Bell3Label, 8>& all_bell3_labels();

/// (|+,k,l> + j|-,-k,-l>) / sqrt(2).
PureState bell3_state(const Bell3Label& l);

/// Lambda^1 = U1 U1 U1, Lambda^2 = U2 U2 I, Lambda^3 = U2 I U2 on sites
/// (first, first+1, first+2).
PureState apply_lambda(const PureState& s, int alpha, int first = 0);

/// A (x) B on two sites.
struct TwoSiteOperator {
    LocalOperator first;
    LocalOperator second;
    Eigen::Matrix4cd dense() const;
    PureState apply(const PureState& s, int site_a, int site_b) const;
};

/// Z^k_q = I if k == q, U1 otherwise.
LocalOperator z_operator(Sign k, Sign q);

/// Y^{jkl}_{pqr} = Z^k_q (x) X^{jl}_{pr}.
TwoSiteOperator y_operator(const Bell3Label& target, const Bell3Label& source);

/// (1/2) sum_{p,q} |p:q:(kq)} (x) Xt^{jl}_{pq} |v>.
PureState three_qubit_expansion(const PureState& client, const Bell3Label& channel);

enum class Measure3Mode {
    /// Lambda^1, Lambda^2, Lambda^3 on (client, channel 1, channel 2).
    full,
    /// Lambda^1 and Lambda^2 only: rank-2 projectors.
    reduced,
};

std::string to_string(Measure3Mode m);

struct Teleport3Result {
    /// Full mode: (p, q, t). Reduced mode: (p, q) with l left at +.
    Bell3Label outcome{kPlus, kPlus, kPlus};
    double probability = 0.0;
    LocalOperator correction;
    /// Recipient density matrix after correction.
    Eigen::Matrix2cd recipient_density;
    double fidelity = 0.0;
    double recipient_purity = 1.0;
};

/// Outcome probabilities indexed by Bell3Label::index (full) or BellLabel::index (reduced).
std::vector<double> outcome_distribution3(const PureState& client, const PureState& channel, Measure3Mode mode);

/// Teleport through a three-qubit channel with (Lambda^1, Lambda^3) class `assumed`.
/// The correction is (Xt^{jl}_{pq})^dagger. In reduced mode forced.l is ignored.
Teleport3Result teleport3(const PureState& client, const PureState& channel, const BellClass& assumed,
                          Measure3Mode mode, const Bell3Label& forced);
Teleport3Result teleport3(const PureState& client, const PureState& channel, const BellClass& assumed,
                          Measure3Mode mode, Rng& rng);

/// Purity of the recipient qubit after projecting the measured sites onto the
/// joint Lambda^1 = p, Lambda^3 = r eigenspace. Below 1 when the recipient
/// stays entangled with the unmeasured Lambda^2 degree of freedom.
double lambda13_recipient_purity(const PureState& client, const PureState& channel, Sign p, Sign r);

struct ThetaReport {
    int kappa = 1;
    int rank = 0;
    Complex determinant;
    /// max |(Theta^dagger Theta - I)_{ij}|.
    double unitarity_defect = 0.0;
};

/// Theta = (I (x) I + kappa U2 (x) U2) / sqrt(2) for kappa = +-1.
ThetaReport theta_rank(int kappa);

}  // namespace bellport
