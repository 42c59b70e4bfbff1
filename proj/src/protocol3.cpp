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

#include "bellport/protocol3.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/LU>

#include "bellport/errors.hpp"
#include "bellport/measurement.hpp"

namespace bellport {

std::string to_string(const Bell3Label& l) { return {to_char(l.j), ':', to_char(l.k), ':', to_char(l.l)}; }

const std::array<Bell3Label, 8>& all_bell3_labels() {
    static const std::array<Bell3Label, 8> labels = [] {
        std::array<Bell3Label, 8> out{};
        for (int i = 0; i < 8; ++i) {
            out[static_cast<std::size_t>(i)] = Bell3Label::from_index(i);
        }
        return out;
    }();
    return labels;
}

PureState bell3_state(const Bell3Label& l) {
    const double h = 1.0 / std::numbers::sqrt2;
    std::vector<Complex> amps(8);
    amps[static_cast<std::size_t>(l.k.bit() * 2 + l.l.bit())] = h;
    amps[static_cast<std::size_t>(4 + l.k.flipped().bit() * 2 + l.l.flipped().bit())] = h * l.j.value();
    return PureState(2, 3, std::move(amps));
}

PureState apply_lambda(const PureState& s, int alpha, int first) {
    if (first < 0 || first + 2 >= s.num_sites()) {
        throw std::invalid_argument("apply_lambda: sites out of range");
    }
    switch (alpha) {
        case 1: {
            PureState t = apply_local(s, u_matrix(1), first);
            t = apply_local(t, u_matrix(1), first + 1);
            return apply_local(t, u_matrix(1), first + 2);
        }
        case 2:
            return apply_local(apply_local(s, u_matrix(2), first), u_matrix(2), first + 1);
        case 3:
            return apply_local(apply_local(s, u_matrix(2), first), u_matrix(2), first + 2);
        default:
            throw std::invalid_argument("Lambda index must be 1, 2 or 3");
    }
}

Eigen::Matrix4cd TwoSiteOperator::dense() const {
    Eigen::Matrix4cd m;
    for (int r1 = 0; r1 < 2; ++r1) {
        for (int r2 = 0; r2 < 2; ++r2) {
            for (int c1 = 0; c1 < 2; ++c1) {
                for (int c2 = 0; c2 < 2; ++c2) {
                    m(r1 * 2 + r2, c1 * 2 + c2) = first(r1, c1) * second(r2, c2);
                }
            }
        }
    }
    return m;
}

PureState TwoSiteOperator::apply(const PureState& s, int site_a, int site_b) const {
    return apply_local(apply_local(s, first, site_a), second, site_b);
}

LocalOperator z_operator(Sign k, Sign q) { return k == q ? u_matrix(0) : u_matrix(1); }

TwoSiteOperator y_operator(const Bell3Label& target, const Bell3Label& source) {
    return {z_operator(target.k, source.k), x_operator(target.j, target.l, source.j, source.l)};
}

PureState three_qubit_expansion(const PureState& client, const Bell3Label& channel) {
    if (client.local_dim() != 2 || client.num_sites() != 1) {
        throw std::invalid_argument("client must be a single qubit");
    }
    std::vector<Complex> amps(16);
    for (Sign p : kSigns) {
        for (Sign q : kSigns) {
            const PureState meas = bell3_state({p, q, channel.k * q});
            const PureState bob = apply_local(client, x_tilde_operator(channel.j, channel.l, p, q), 0);
            const PureState term = tensor(meas, bob);
            for (std::size_t i = 0; i < 16; ++i) {
                amps[i] += 0.5 * term.amplitude(i);
            }
        }
    }
    return PureState(2, 4, std::move(amps), Normalization::unnormalized);
}

std::string to_string(Measure3Mode m) { return m == Measure3Mode::full ? "full" : "reduced"; }

namespace {

using BobMatrix = Eigen::Matrix<Complex, 8, 2>;

BobMatrix joint_matrix(const PureState& client, const PureState& channel) {
    if (client.local_dim() != 2 || client.num_sites() != 1 || !client.is_normalized()) {
        throw std::invalid_argument("client must be a normalized qubit");
    }
    if (channel.local_dim() != 2 || channel.num_sites() != 3) {
        throw std::invalid_argument("channel must have three qubits");
    }
    const PureState total = tensor(client, channel.is_normalized() ? channel : channel.normalized());
    BobMatrix m;
    for (int row = 0; row < 8; ++row) {
        for (int b = 0; b < 2; ++b) {
            m(row, b) = total.amplitude(static_cast<std::size_t>(row * 2 + b));
        }
    }
    return m;
}

// Unnormalized recipient vector for measured-site outcome |label}.
Eigen::Vector2cd bob_vector(const BobMatrix& m, const Bell3Label& label) {
    const PureState b = bell3_state(label);
    Eigen::Matrix<Complex, 8, 1> bra;
    for (int i = 0; i < 8; ++i) {
        bra(i) = b.amplitude(static_cast<std::size_t>(i));
    }
    return m.transpose() * bra.conjugate();
}

// Unnormalized recipient density for the listed measured-site outcomes.
Eigen::Matrix2cd bob_density(const BobMatrix& m, std::initializer_list<Bell3Label> labels) {
    Eigen::Matrix2cd rho = Eigen::Matrix2cd::Zero();
    for (const Bell3Label& l : labels) {
        const Eigen::Vector2cd w = bob_vector(m, l);
        rho += w * w.adjoint();
    }
    return rho;
}

Eigen::Matrix2cd branch_density(const BobMatrix& m, Measure3Mode mode, const Bell3Label& outcome) {
    if (mode == Measure3Mode::full) {
        return bob_density(m, {outcome});
    }
    return bob_density(m, {Bell3Label{outcome.j, outcome.k, kPlus}, Bell3Label{outcome.j, outcome.k, kMinus}});
}

Teleport3Result finish(const PureState& client, const BellClass& assumed, const Bell3Label& outcome,
                       const Eigen::Matrix2cd& rho) {
    const double prob = rho.trace().real();
    if (prob <= kZeroProbability) {
        throw ImpossibleOutcome("three-qubit outcome " + to_string(outcome) + " has zero probability");
    }
    Teleport3Result r;
    r.outcome = outcome;
    r.probability = prob;
    r.correction = x_tilde_operator(assumed.j, assumed.k, outcome.j, outcome.k).adjoint();
    const Eigen::Matrix2cd& d = r.correction.matrix();
    r.recipient_density = d * (rho / prob) * d.adjoint();
    const Eigen::Vector2cd v(client.amplitude(0), client.amplitude(1));
    r.fidelity = v.dot(r.recipient_density * v).real();
    r.recipient_purity = (r.recipient_density * r.recipient_density).trace().real();
    return r;
}

}  // namespace

std::vector<double> outcome_distribution3(const PureState& client, const PureState& channel, Measure3Mode mode) {
    const BobMatrix m = joint_matrix(client, channel);
    std::vector<double> probs;
    if (mode == Measure3Mode::full) {
        for (const Bell3Label& l : all_bell3_labels()) {
            probs.push_back(bob_vector(m, l).squaredNorm());
        }
    } else {
        for (const BellLabel& l : all_bell_labels()) {
            probs.push_back(branch_density(m, mode, {l.j, l.k, kPlus}).trace().real());
        }
    }
    return probs;
}

Teleport3Result teleport3(const PureState& client, const PureState& channel, const BellClass& assumed,
                          Measure3Mode mode, const Bell3Label& forced) {
    const BobMatrix m = joint_matrix(client, channel);
    Bell3Label outcome = forced;
    if (mode == Measure3Mode::reduced) {
        outcome.l = kPlus;
    }
    return finish(client, assumed, outcome, branch_density(m, mode, outcome));
}

Teleport3Result teleport3(const PureState& client, const PureState& channel, const BellClass& assumed,
                          Measure3Mode mode, Rng& rng) {
    const std::vector<double> probs = outcome_distribution3(client, channel, mode);
    const double u = rng.uniform();
    double acc = 0.0;
    std::size_t pick = probs.size();
    std::size_t last = 0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        if (probs[i] <= kZeroProbability) {
            continue;
        }
        last = i;
        acc += probs[i];
        if (u < acc) {
            pick = i;
            break;
        }
    }
    if (pick == probs.size()) {
        pick = last;
    }
    const int idx = static_cast<int>(pick);
    const Bell3Label outcome = mode == Measure3Mode::full
                                   ? Bell3Label::from_index(idx)
                                   : Bell3Label{BellLabel::from_index(idx).j, BellLabel::from_index(idx).k, kPlus};
    return teleport3(client, channel, assumed, mode, outcome);
}

double lambda13_recipient_purity(const PureState& client, const PureState& channel, Sign p, Sign r) {
    const BobMatrix m = joint_matrix(client, channel);
    const Eigen::Matrix2cd rho = bob_density(m, {Bell3Label{p, kPlus, r}, Bell3Label{p, kMinus, r}});
    const double prob = rho.trace().real();
    if (prob <= kZeroProbability) {
        throw ImpossibleOutcome("Lambda^1, Lambda^3 outcome has zero probability");
    }
    const Eigen::Matrix2cd n = rho / prob;
    return (n * n).trace().real();
}

ThetaReport theta_rank(int kappa) {
    if (kappa != 1 && kappa != -1) {
        throw std::invalid_argument("kappa must be +1 or -1");
    }
    const TwoSiteOperator zz{u_matrix(2), u_matrix(2)};
    const Eigen::Matrix4cd theta =
        (Eigen::Matrix4cd::Identity() + static_cast<double>(kappa) * zz.dense()) / std::numbers::sqrt2;
    Eigen::FullPivLU<Eigen::Matrix4cd> lu(theta);
    ThetaReport r;
    r.kappa = kappa;
    r.rank = static_cast<int>(lu.rank());
    r.determinant = theta.determinant();
    r.unitarity_defect = (theta.adjoint() * theta - Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff();
    return r;
}

}  // namespace bellport
