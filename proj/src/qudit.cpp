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

#include "bellport/qudit.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/SVD>

#include "bellport/errors.hpp"

namespace bellport {

namespace {

int mod(int a, int d) { return ((a % d) + d) % d; }

void check_dim(int d) {
    if (d < 2) {
        throw std::invalid_argument("qudit dimension must be at least 2");
    }
}

}  // namespace

Complex root_of_unity(int d, int power) {
    check_dim(d);
    return std::polar(1.0, 2.0 * std::numbers::pi * mod(power, d) / d);
}

QuditBellLabel::QuditBellLabel(int j_, int k_, int d_) : d(d_) {
    check_dim(d_);
    j = mod(j_, d_);
    k = mod(k_, d_);
}

QuditBellLabel QuditBellLabel::operator+(const QuditBellLabel& o) const {
    if (d != o.d) {
        throw std::invalid_argument("qudit labels of different dimension");
    }
    return {j + o.j, k + o.k, d};
}

std::string to_string(const QuditBellLabel& l) { return std::to_string(l.j) + ":" + std::to_string(l.k); }

LocalOperator generalized_pauli(int d, int k, int j) {
    check_dim(d);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    // P^k Q^j |l> = omega^{jl} |l+k>.
    for (int l = 0; l < d; ++l) {
        m(mod(l + k, d), l) = root_of_unity(d, j * l);
    }
    return LocalOperator(m);
}

PureState qudit_bell(const QuditBellLabel& l) {
    const int d = l.d;
    std::vector<Complex> amps(static_cast<std::size_t>(d * d));
    const double h = 1.0 / std::sqrt(static_cast<double>(d));
    for (int x = 0; x < d; ++x) {
        amps[static_cast<std::size_t>(x * d + mod(x + l.k, d))] = h * root_of_unity(d, l.j * x);
    }
    return PureState(d, 2, std::move(amps));
}

PureState qudit_bell_product(std::span<const QuditBellLabel> labels) {
    if (labels.empty()) {
        throw std::invalid_argument("qudit_bell_product needs at least one label");
    }
    PureState out = qudit_bell(labels[0]);
    for (std::size_t i = 1; i < labels.size(); ++i) {
        out = tensor(out, qudit_bell(labels[i]));
    }
    return out;
}

QuditBellLabel qudit_class_of(std::span<const QuditBellLabel> labels) {
    if (labels.empty()) {
        throw std::invalid_argument("qudit_class_of needs at least one label");
    }
    QuditBellLabel c(0, 0, labels[0].d);
    for (const QuditBellLabel& l : labels) {
        c = c + l;
    }
    return c;
}

LocalOperator qudit_x_tilde(const QuditBellLabel& channel, const QuditBellLabel& outcome) {
    if (channel.d != outcome.d) {
        throw std::invalid_argument("qudit labels of different dimension");
    }
    const int d = channel.d;
    return generalized_pauli(d, channel.k, channel.j) * generalized_pauli(d, outcome.k, -outcome.j);
}

namespace {

QuditTeleportResult run_qudit(const PureState& client, const PureState& channel, const QuditBellLabel& assumed,
                              std::span<const QuditBellLabel> forced, Rng* rng) {
    const int d = client.local_dim();
    if (client.num_sites() != 1 || !client.is_normalized()) {
        throw std::invalid_argument("client must be a single normalized qudit");
    }
    if (channel.local_dim() != d || channel.num_sites() < 2 || channel.num_sites() % 2 != 0) {
        throw std::invalid_argument("channel must hold an even number of qudits of the client's dimension");
    }
    if (assumed.d != d) {
        throw std::invalid_argument("assumed class has the wrong dimension");
    }
    const int pairs = channel.num_sites() / 2;
    if (rng == nullptr && static_cast<int>(forced.size()) != pairs) {
        throw std::invalid_argument("need one forced outcome per measured pair");
    }
    PureState current = tensor(client, channel.is_normalized() ? channel : channel.normalized());
    QuditTeleportResult result;
    result.aggregate = QuditBellLabel(0, 0, d);
    const int labels = d * d;
    for (int step = 0; step < pairs; ++step) {
        std::vector<PureState> branches;
        std::vector<double> probs;
        for (int i = 0; i < labels; ++i) {
            branches.push_back(contract_sites(current, 0, 1, qudit_bell(QuditBellLabel::from_index(i, d))));
            probs.push_back(branches.back().norm_squared());
        }
        int pick = 0;
        if (rng == nullptr) {
            const QuditBellLabel f(forced[static_cast<std::size_t>(step)].j, forced[static_cast<std::size_t>(step)].k, d);
            pick = f.index();
            if (probs[static_cast<std::size_t>(pick)] <= kZeroProbability) {
                throw ImpossibleOutcome("forced qudit outcome " + to_string(f) + " has zero probability");
            }
        } else {
            const double u = rng->uniform();
            double acc = 0.0;
            pick = -1;
            int last = 0;
            for (int i = 0; i < labels; ++i) {
                if (probs[static_cast<std::size_t>(i)] <= kZeroProbability) {
                    continue;
                }
                last = i;
                acc += probs[static_cast<std::size_t>(i)];
                if (u < acc) {
                    pick = i;
                    break;
                }
            }
            if (pick < 0) {
                pick = last;
            }
        }
        const QuditBellLabel label = QuditBellLabel::from_index(pick, d);
        const double p = probs[static_cast<std::size_t>(pick)];
        result.outcomes.push_back({{2 * step, 2 * step + 1}, label, p});
        result.aggregate = result.aggregate + label;
        result.joint_probability *= p;
        current = branches[static_cast<std::size_t>(pick)].normalized();
    }
    result.correction = qudit_x_tilde(assumed, result.aggregate).adjoint();
    result.recipient_state = apply_local(current, result.correction, 0);
    result.fidelity = overlap(client, result.recipient_state);
    return result;
}

}  // namespace

QuditTeleportResult qudit_teleport(const PureState& client, const PureState& channel, const QuditBellLabel& assumed,
                                   std::span<const QuditBellLabel> forced) {
    return run_qudit(client, channel, assumed, forced, nullptr);
}

QuditTeleportResult qudit_teleport(const PureState& client, const PureState& channel, const QuditBellLabel& assumed,
                                   Rng& rng) {
    return run_qudit(client, channel, assumed, {}, &rng);
}

PureState apply_qudit_upsilon_p(const PureState& s, int power) {
    const LocalOperator p = generalized_pauli(s.local_dim(), power, 0);
    PureState out = s;
    for (int site = 0; site < s.num_sites(); ++site) {
        out = apply_local(out, p, site);
    }
    return out;
}

PureState apply_qudit_upsilon_q(const PureState& s, int power) {
    if (s.num_sites() % 2 != 0) {
        throw std::invalid_argument("qudit classes need an even number of sites");
    }
    const int d = s.local_dim();
    const LocalOperator q = generalized_pauli(d, 0, power);
    const LocalOperator q_inv = generalized_pauli(d, 0, -power);
    PureState out = s;
    for (int site = 0; site < s.num_sites(); ++site) {
        out = apply_local(out, site % 2 == 0 ? q : q_inv, site);
    }
    return out;
}

PureState qudit_class_projector_apply(const PureState& s, const QuditBellLabel& cls) {
    const int d = s.local_dim();
    if (cls.d != d) {
        throw std::invalid_argument("class label has the wrong dimension");
    }
    std::vector<Complex> acc(s.size());
    for (int a = 0; a < d; ++a) {
        const PureState pa = apply_qudit_upsilon_p(s, a);
        for (int b = 0; b < d; ++b) {
            const PureState pab = apply_qudit_upsilon_q(pa, b);
            const Complex w = root_of_unity(d, a * cls.j + b * cls.k);
            for (std::size_t i = 0; i < acc.size(); ++i) {
                acc[i] += w * pab.amplitude(i);
            }
        }
    }
    const double scale = 1.0 / (static_cast<double>(d) * d);
    for (Complex& z : acc) {
        z *= scale;
    }
    return PureState(d, s.num_sites(), std::move(acc), Normalization::unnormalized);
}

std::vector<double> qudit_decompose(const PureState& s, int d) {
    if (s.local_dim() != d) {
        throw std::invalid_argument("state dimension does not match d");
    }
    std::vector<double> coeffs;
    for (int i = 0; i < d * d; ++i) {
        coeffs.push_back(qudit_class_projector_apply(s, QuditBellLabel::from_index(i, d)).norm());
    }
    return coeffs;
}

int qudit_class_dimension(int d, int sites, const QuditBellLabel& cls, double tol) {
    check_dim(d);
    if (sites < 2 || sites % 2 != 0) {
        throw std::invalid_argument("qudit classes need an even number of sites");
    }
    std::size_t n = 1;
    for (int i = 0; i < sites; ++i) {
        n *= static_cast<std::size_t>(d);
    }
    const auto dim = static_cast<Eigen::Index>(n);
    Eigen::MatrixXcd proj(dim, dim);
    for (Eigen::Index c = 0; c < dim; ++c) {
        std::vector<Complex> e(n);
        e[static_cast<std::size_t>(c)] = 1.0;
        const PureState image = qudit_class_projector_apply(PureState(d, sites, std::move(e)), cls);
        for (Eigen::Index r = 0; r < dim; ++r) {
            proj(r, c) = image.amplitude(static_cast<std::size_t>(r));
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(proj);
    int rank = 0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
        rank += svd.singularValues()[i] > tol ? 1 : 0;
    }
    return rank;
}

}  // namespace bellport
