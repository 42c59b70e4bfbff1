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

#include "bellport/channels.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "bellport/errors.hpp"

namespace bellport {

namespace {

void require_even(int sites, int minimum, const char* what) {
    if (sites < minimum || sites % 2 != 0) {
        throw std::invalid_argument(std::string(what) + " needs an even number of sites >= " + std::to_string(minimum));
    }
}

void require_positive(int n, const char* what) {
    if (n < 1) {
        throw std::invalid_argument(std::string(what) + " size must be positive");
    }
}

struct UProductTable {
    std::array<std::array<std::pair<int, int>, 4>, 4> entries{};
    UProductTable() {
        for (int a = 0; a < 4; ++a) {
            for (int b = 0; b < 4; ++b) {
                const LocalOperator prod = u_matrix(a) * u_matrix(b);
                bool found = false;
                for (int c = 0; c < 4 && !found; ++c) {
                    for (int sign : {1, -1}) {
                        if (prod == u_matrix(c) * Complex(sign)) {
                            entries[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = {sign, c};
                            found = true;
                            break;
                        }
                    }
                }
                if (!found) {
                    throw std::logic_error("U products do not close");
                }
            }
        }
    }
};

}  // namespace

std::pair<int, int> u_product(int a, int b) {
    static const UProductTable table;
    if (a < 0 || a > 3 || b < 0 || b > 3) {
        throw std::invalid_argument("U index must be in 0..3");
    }
    return table.entries[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

SiteOperatorString SiteOperatorString::operator*(const SiteOperatorString& rhs) const {
    if (factors.size() != rhs.factors.size()) {
        throw std::invalid_argument("operator strings act on different site counts");
    }
    SiteOperatorString out{sign * rhs.sign, std::vector<int>(factors.size())};
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const auto [s, c] = u_product(factors[i], rhs.factors[i]);
        out.sign *= s;
        out.factors[i] = c;
    }
    return out;
}

PureState SiteOperatorString::apply(const PureState& s) const {
    if (static_cast<int>(factors.size()) != s.num_sites()) {
        throw std::invalid_argument("operator string length does not match the state");
    }
    PureState out = s;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i] != 0) {
            out = apply_local(out, u_matrix(factors[i]), static_cast<int>(i));
        }
    }
    if (sign < 0) {
        std::vector<Complex> amps(out.amplitudes().begin(), out.amplitudes().end());
        for (Complex& z : amps) {
            z = -z;
        }
        out = PureState(out.local_dim(), out.num_sites(), std::move(amps), out.status());
    }
    return out;
}

std::string SiteOperatorString::to_string() const {
    std::ostringstream out;
    out << (sign < 0 ? "-" : "");
    for (std::size_t i = 0; i < factors.size(); ++i) {
        out << (i ? " " : "") << 'U' << factors[i];
    }
    return out.str();
}

PureState cluster_state(int sites) {
    require_even(sites, 2, "cluster_state");
    const std::size_t n = std::size_t{1} << sites;
    const double amp = std::pow(2.0, -0.5 * sites);
    PureState s(2, sites, std::vector<Complex>(n, Complex(amp)));
    // Each factor (|+>_j + |->_j U^2_{j+1}) is a controlled-U^2 on the |x+> product.
    for (int j = 0; j + 1 < sites; ++j) {
        std::vector<Complex> amps(s.amplitudes().begin(), s.amplitudes().end());
        for (std::size_t idx = 0; idx < n; ++idx) {
            const bool control = (idx >> (sites - 1 - j)) & 1U;
            const bool target = (idx >> (sites - 2 - j)) & 1U;
            if (control && target) {
                amps[idx] = -amps[idx];
            }
        }
        s = PureState(2, sites, std::move(amps));
    }
    return s;
}

SiteOperatorString cluster_stabilizer(int sites, int j) {
    if (sites < 2 || j < 1 || j > sites) {
        throw std::invalid_argument("cluster_stabilizer index out of range");
    }
    SiteOperatorString k{1, std::vector<int>(static_cast<std::size_t>(sites), 0)};
    k.factors[static_cast<std::size_t>(j - 1)] = 1;
    if (j > 1) {
        k.factors[static_cast<std::size_t>(j - 2)] = 2;
    }
    if (j < sites) {
        k.factors[static_cast<std::size_t>(j)] = 2;
    }
    return k;
}

ClusterGOperators cluster_g_operators(int sites) {
    require_even(sites, 4, "cluster_g_operators");
    const int half = sites / 2;
    auto k = [&](int j) { return cluster_stabilizer(sites, j); };
    ClusterGOperators g{{1, std::vector<int>(static_cast<std::size_t>(sites), 0)},
                        {1, std::vector<int>(static_cast<std::size_t>(sites), 0)}};
    const int blocks = half % 2 == 0 ? half / 2 : (half - 1) / 2;
    if (half % 2 != 0) {
        g.g1 = k(2 * half - 1);
        g.g2 = k(2 * half);
    }
    for (int j = 1; j <= blocks; ++j) {
        g.g1 = g.g1 * k(4 * j - 3) * k(4 * j);
        g.g2 = g.g2 * k(4 * j - 2) * k(4 * j - 1);
    }
    return g;
}

StabilizerReport stabilizer_report(const std::string& name, const SiteOperatorString& op, const PureState& s) {
    const PureState image = op.apply(s);
    const double ev = inner_product(s, image).real();
    double dev = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        dev += std::norm(image.amplitude(i) - ev * s.amplitude(i));
    }
    return {name, ev, std::sqrt(dev)};
}

AkltProjection aklt_projected(int sites) {
    require_even(sites, 4, "aklt_state");
    const int pairs = sites / 2;
    const std::vector<BellLabel> singlets(static_cast<std::size_t>(pairs), BellLabel{kMinus, kMinus});
    PureState s = bell_basis_state(singlets);
    const PureState singlet = bell_state({kMinus, kMinus});
    // P^t = I - |-:-}{-:-| on qubits (r, r+1) for r = 1, 3, ..., L-3.
    for (int r = 1; r + 2 < sites; r += 2) {
        std::vector<Complex> amps(s.amplitudes().begin(), s.amplitudes().end());
        const std::size_t n = amps.size();
        const int sa = sites - 1 - r;
        const int sb = sites - 2 - r;
        for (std::size_t idx = 0; idx < n; ++idx) {
            if (((idx >> sa) & 1U) || ((idx >> sb) & 1U)) {
                continue;
            }
            std::array<std::size_t, 4> slot{};
            for (std::size_t u = 0; u < 4; ++u) {
                slot[u] = idx | (((u >> 1) & 1U) << sa) | ((u & 1U) << sb);
            }
            Complex proj = 0.0;
            for (std::size_t u = 0; u < 4; ++u) {
                proj += std::conj(singlet.amplitude(u)) * amps[slot[u]];
            }
            for (std::size_t u = 0; u < 4; ++u) {
                amps[slot[u]] -= singlet.amplitude(u) * proj;
            }
        }
        s = PureState(2, sites, std::move(amps), Normalization::unnormalized);
    }
    const double norm = s.norm();
    return {s.normalized(), norm};
}

PureState aklt_state(int sites) { return aklt_projected(sites).state; }

double string_order(const PureState& s) {
    if (s.local_dim() != 2 || s.num_sites() % 2 != 0 || s.num_sites() < 2) {
        throw std::invalid_argument("string_order needs an even number of qubits");
    }
    const int sites = s.num_sites();
    LocalOperator sz = u_matrix(2) * Complex(0.5);
    PureState t = apply_local(s, sz, 0);
    t = apply_local(t, sz, sites - 1);
    for (int r = 1; r + 2 < sites; r += 2) {
        t = apply_local(t, u_matrix(2), r);
        t = apply_local(t, -u_matrix(2), r + 1);
    }
    return 4.0 * inner_product(s, t).real();
}

HeisenbergGround heisenberg_ground_state(int sites) {
    require_even(sites, 4, "heisenberg_ground_state");
    if (sites > kMaxHeisenbergSites) {
        throw std::invalid_argument("heisenberg_ground_state supports at most " +
                                    std::to_string(kMaxHeisenbergSites) + " sites");
    }
    const std::size_t full = std::size_t{1} << sites;
    std::vector<std::size_t> sector;
    std::vector<int> position(full, -1);
    for (std::size_t idx = 0; idx < full; ++idx) {
        if (std::popcount(idx) == sites / 2) {
            position[idx] = static_cast<int>(sector.size());
            sector.push_back(idx);
        }
    }
    const auto dim = static_cast<Eigen::Index>(sector.size());
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    for (Eigen::Index c = 0; c < dim; ++c) {
        const std::size_t idx = sector[static_cast<std::size_t>(c)];
        for (int i = 0; i < sites; ++i) {
            const int j = (i + 1) % sites;
            const std::size_t bi = std::size_t{1} << (sites - 1 - i);
            const std::size_t bj = std::size_t{1} << (sites - 1 - j);
            const bool same = static_cast<bool>(idx & bi) == static_cast<bool>(idx & bj);
            h(c, c) += same ? 1.0 : -1.0;
            if (!same) {
                h(position[idx ^ bi ^ bj], c) += 2.0;
            }
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
    if (solver.info() != Eigen::Success) {
        throw NumericalDegeneracy("Heisenberg eigensolve failed", 0.0);
    }
    const auto& values = solver.eigenvalues();
    const double gap = values[1] - values[0];
    if (gap < kDegeneracyTolerance) {
        throw NumericalDegeneracy("Heisenberg ground state is degenerate (gap " + std::to_string(gap) + ")", gap);
    }
    std::vector<Complex> amps(full);
    const Eigen::VectorXd v = solver.eigenvectors().col(0);
    for (Eigen::Index c = 0; c < dim; ++c) {
        amps[sector[static_cast<std::size_t>(c)]] = v[c];
    }
    return {PureState(2, sites, std::move(amps), Normalization::unnormalized).normalized(), values[0], gap};
}

std::vector<std::vector<std::pair<int, int>>> noncrossing_matchings(int pairs) {
    require_positive(pairs, "noncrossing_matchings");
    // Matchings of sites [lo, hi): site lo pairs with some m, splitting the rest
    // into (lo, m) and (m, hi).
    auto rec = [](auto& self, int lo, int hi) -> std::vector<std::vector<std::pair<int, int>>> {
        if (lo >= hi) {
            return {{}};
        }
        std::vector<std::vector<std::pair<int, int>>> out;
        for (int m = lo + 1; m < hi; m += 2) {
            for (const auto& inner : self(self, lo + 1, m)) {
                for (const auto& outer : self(self, m + 1, hi)) {
                    std::vector<std::pair<int, int>> match{{lo, m}};
                    match.insert(match.end(), inner.begin(), inner.end());
                    match.insert(match.end(), outer.begin(), outer.end());
                    out.push_back(std::move(match));
                }
            }
        }
        return out;
    };
    return rec(rec, 0, 2 * pairs);
}

PureState dimer_product(int sites, const std::vector<std::pair<int, int>>& dimers) {
    require_even(sites, 2, "dimer_product");
    if (static_cast<int>(dimers.size()) * 2 != sites) {
        throw std::invalid_argument("dimer_product needs a perfect matching");
    }
    const std::size_t n = std::size_t{1} << sites;
    std::vector<Complex> amps(n);
    const double h = std::pow(2.0, -0.5 * static_cast<double>(dimers.size()));
    for (std::size_t idx = 0; idx < n; ++idx) {
        double a = h;
        for (const auto& [x, y] : dimers) {
            const unsigned bx = (idx >> (sites - 1 - x)) & 1U;
            const unsigned by = (idx >> (sites - 1 - y)) & 1U;
            if (bx == by) {
                a = 0.0;
                break;
            }
            // |-:-} = (|+,-> - |-,+>) / sqrt(2) with x first.
            a *= bx == 0 ? 1.0 : -1.0;
        }
        amps[idx] = a;
    }
    return PureState(2, sites, std::move(amps));
}

PureState singlet_random(int pairs, Rng& rng) {
    const int sites = 2 * pairs;
    const auto matchings = noncrossing_matchings(pairs);
    std::vector<Complex> amps(std::size_t{1} << sites);
    for (const auto& m : matchings) {
        const Complex w = rng.complex_normal();
        const PureState d = dimer_product(sites, m);
        for (std::size_t i = 0; i < amps.size(); ++i) {
            amps[i] += w * d.amplitude(i);
        }
    }
    return PureState(2, sites, std::move(amps), Normalization::unnormalized).normalized();
}

PureState singlet_random(int pairs, std::uint64_t seed) {
    Rng rng(seed);
    return singlet_random(pairs, rng);
}

PureState majumdar_ghosh(int pairs) {
    require_positive(pairs, "majumdar_ghosh");
    const std::vector<BellLabel> labels(static_cast<std::size_t>(pairs), BellLabel{kMinus, kMinus});
    return bell_basis_state(labels);
}

PureState ghz(int sites) {
    require_positive(sites, "ghz");
    std::vector<Complex> amps(std::size_t{1} << sites);
    amps.front() = 1.0 / std::numbers::sqrt2;
    amps.back() = 1.0 / std::numbers::sqrt2;
    return PureState(2, sites, std::move(amps));
}

PureState appendix_a_channel(double phi) {
    const std::array<BellLabel, 2> first{BellLabel{kPlus, kMinus}, BellLabel{kMinus, kPlus}};
    const std::array<BellLabel, 2> second{BellLabel{kMinus, kPlus}, BellLabel{kPlus, kMinus}};
    const PureState a = bell_basis_state(first);
    const PureState b = bell_basis_state(second);
    std::vector<Complex> amps(a.size());
    for (std::size_t i = 0; i < amps.size(); ++i) {
        amps[i] = std::cos(phi) * a.amplitude(i) + std::sin(phi) * b.amplitude(i);
    }
    return PureState(2, 4, std::move(amps));
}

namespace {

struct Builder {
    PureState operator()(const channel::BellProduct& c) const { return bell_basis_state(c.labels); }
    PureState operator()(const channel::SingletRandom& c) const { return singlet_random(c.pairs, c.seed); }
    PureState operator()(const channel::MajumdarGhoshDimers& c) const { return majumdar_ghosh(c.pairs); }
    PureState operator()(const channel::HeisenbergRing& c) const { return heisenberg_ground_state(c.sites).state; }
    PureState operator()(const channel::Cluster1D& c) const { return cluster_state(c.sites); }
    PureState operator()(const channel::GHZ& c) const { return ghz(c.sites); }
    PureState operator()(const channel::AKLTVirtual& c) const { return aklt_state(c.sites); }
    PureState operator()(const channel::Random& c) const {
        require_positive(c.sites, "random channel");
        return random_state(c.sites, 2, c.seed);
    }
    PureState operator()(const channel::Explicit& c) const {
        const std::size_t n = c.amplitudes.size();
        if (n < 2 || !std::has_single_bit(n)) {
            throw std::invalid_argument("explicit amplitudes must have length 2^n");
        }
        return PureState(2, std::countr_zero(n), c.amplitudes);
    }
};

struct Namer {
    std::string operator()(const channel::BellProduct&) const { return "bell-product"; }
    std::string operator()(const channel::SingletRandom&) const { return "singlet-random"; }
    std::string operator()(const channel::MajumdarGhoshDimers&) const { return "majumdar-ghosh"; }
    std::string operator()(const channel::HeisenbergRing&) const { return "heisenberg-ring"; }
    std::string operator()(const channel::Cluster1D&) const { return "cluster"; }
    std::string operator()(const channel::GHZ&) const { return "ghz"; }
    std::string operator()(const channel::AKLTVirtual&) const { return "aklt"; }
    std::string operator()(const channel::Random&) const { return "random"; }
    std::string operator()(const channel::Explicit&) const { return "explicit"; }
};

}  // namespace

PureState build(const ChannelSpec& spec) { return std::visit(Builder{}, spec); }

std::string channel_name(const ChannelSpec& spec) { return std::visit(Namer{}, spec); }

}  // namespace bellport
