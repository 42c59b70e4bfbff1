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
#include <cmath>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "bellport/errors.hpp"
#include "oracle.hpp"

using namespace bellport;

namespace {

SiteOperatorString ops(int sign, std::vector<int> factors) { return {sign, std::move(factors)}; }

oracle::Vec dense_cluster(int n) {
    oracle::Vec v = oracle::Vec::Constant(std::size_t{1} << n, std::pow(2.0, -0.5 * n));
    for (int s = 0; s + 1 < n; ++s) {
        for (Eigen::Index i = 0; i < v.size(); ++i) {
            const bool a = ((i >> (n - 1 - s)) & 1) != 0;
            const bool b = ((i >> (n - 2 - s)) & 1) != 0;
            if (a && b) {
                v(i) = -v(i);
            }
        }
    }
    return v;
}

oracle::Mat dense_heisenberg(int n) {
    oracle::Mat sy(2, 2);
    sy << 0, oracle::C(0, -1), oracle::C(0, 1), 0;
    const std::array<oracle::Mat, 3> pauli{oracle::u(1), sy, oracle::u(2)};
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
    oracle::Mat h = oracle::Mat::Zero(dim, dim);
    for (int i = 0; i < n; ++i) {
        for (const oracle::Mat& p : pauli) {
            h += oracle::embed(p, i, n) * oracle::embed(p, (i + 1) % n, n);
        }
    }
    return h;
}

LocalOperator random_unitary(Rng& rng) {
    Eigen::MatrixXcd m(2, 2);
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            m(r, c) = rng.complex_normal();
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(m);
    return LocalOperator(qr.householderQ() * Eigen::MatrixXcd::Identity(2, 2));
}

}  // namespace

TEST(UProduct, MatchesMatrixMultiplication) {
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            const auto [sign, c] = u_product(a, b);
            const LocalOperator expect = u_matrix(a) * u_matrix(b);
            EXPECT_EQ(sign > 0 ? u_matrix(c) : -u_matrix(c), expect) << a << b;
        }
    }
}

TEST(SiteOperatorString, ApplyAndFormat) {
    const SiteOperatorString g = ops(-1, {1, 2, 0});
    EXPECT_EQ(g.to_string(), "-U1 U2 U0");
    Rng rng(41);
    const PureState s = random_state(3, 2, rng);
    const oracle::Mat dense = -oracle::kron(oracle::kron(oracle::u(1), oracle::u(2)), oracle::u(0));
    EXPECT_LT((oracle::vec(g.apply(s)) - dense * oracle::vec(s)).norm(), 1e-14);
    EXPECT_EQ(g * g, ops(1, {0, 0, 0}));
}

TEST(Build, Variants) {
    const std::array<BellLabel, 2> mg{BellLabel{kMinus, kMinus}, BellLabel{kMinus, kMinus}};
    const PureState m = build(channel::MajumdarGhoshDimers{2});
    EXPECT_NEAR(overlap(m, bell_basis_state(mg)), 1.0, 1e-12);
    EXPECT_EQ(decompose_classes(m).pure_class(), (BellClass{kPlus, kPlus}));
    EXPECT_NEAR(decompose_classes(build(channel::HeisenbergRing{4})).efficiency(), 1.0, 1e-10);
    const PureState r1 = build(channel::Random{4, 77});
    const PureState r2 = build(channel::Random{4, 77});
    EXPECT_EQ((oracle::vec(r1) - oracle::vec(r2)).norm(), 0.0);
    EXPECT_EQ(build(channel::GHZ{3}).num_sites(), 3);
    EXPECT_EQ(build(channel::Explicit{{1.0, 0.0, 0.0, 0.0}}).num_sites(), 2);
    EXPECT_THROW(build(channel::Explicit{{1.0, 1.0, 0.0, 0.0}}), std::invalid_argument);
    EXPECT_THROW(build(channel::Explicit{{1.0, 0.0, 0.0}}), std::invalid_argument);
    EXPECT_EQ(channel_name(channel::Cluster1D{4}), "cluster");
    EXPECT_EQ(channel_name(channel::AKLTVirtual{4}), "aklt");
}

TEST(Cluster, MatchesControlledZConstruction) {
    for (int n : {2, 4, 6}) {
        EXPECT_NEAR(std::norm(oracle::vec(cluster_state(n)).dot(dense_cluster(n))), 1.0, 1e-12) << n;
    }
}

TEST(Cluster, StabilizersHoldAndCommute) {
    Rng rng(42);
    for (int n : {4, 6, 8}) {
        const PureState s = cluster_state(n);
        const PureState r = random_state(n, 2, rng);
        for (int j = 1; j <= n; ++j) {
            const StabilizerReport rep = stabilizer_report("K", cluster_stabilizer(n, j), s);
            EXPECT_NEAR(rep.eigenvalue, 1.0, 1e-10);
            EXPECT_LT(rep.deviation, 1e-10);
            for (int l = 1; l <= n; ++l) {
                const SiteOperatorString kj = cluster_stabilizer(n, j);
                const SiteOperatorString kl = cluster_stabilizer(n, l);
                EXPECT_LT((oracle::vec(kj.apply(kl.apply(r))) - oracle::vec(kl.apply(kj.apply(r)))).norm(), 1e-12);
            }
        }
    }
    EXPECT_EQ(cluster_stabilizer(4, 1), ops(1, {1, 2, 0, 0}));
    EXPECT_EQ(cluster_stabilizer(4, 3), ops(1, {0, 2, 1, 2}));
}

TEST(Cluster, GOperatorsMatchExplicitFactorizations) {
    const ClusterGOperators g4 = cluster_g_operators(4);
    EXPECT_EQ(g4.g1, cluster_stabilizer(4, 1) * cluster_stabilizer(4, 4));
    EXPECT_EQ(g4.g2, cluster_stabilizer(4, 2) * cluster_stabilizer(4, 3));
    const ClusterGOperators g6 = cluster_g_operators(6);
    EXPECT_EQ(g6.g1, ops(-1, {1, 2, 2, 3, 3, 2}));
    EXPECT_EQ(g6.g2, ops(-1, {2, 3, 3, 2, 2, 1}));
    const ClusterGOperators g8 = cluster_g_operators(8);
    // Sites 4 and 5 give U1 U2 = U3 and U2 U1 = -U3, as at L = 6.
    EXPECT_EQ(g8.g1, ops(-1, {1, 2, 2, 3, 3, 2, 2, 1}));
    EXPECT_NEAR(stabilizer_report("G", ops(1, {1, 2, 2, 3, 3, 2, 2, 1}), cluster_state(8)).eigenvalue, -1.0, 1e-10);
    EXPECT_EQ(g8.g2, ops(1, {2, 3, 3, 2, 2, 3, 3, 2}));
    for (int n : {4, 6, 8}) {
        const ClusterGOperators g = cluster_g_operators(n);
        const PureState s = cluster_state(n);
        for (const SiteOperatorString* op : {&g.g1, &g.g2}) {
            EXPECT_NEAR(stabilizer_report("G", *op, s).eigenvalue, 1.0, 1e-10);
            for (int f : op->factors) {
                EXPECT_GE(f, 1);
                EXPECT_LE(f, 3);
            }
        }
    }
}

TEST(Cluster, IsNotAPureClassState) {
    for (int n : {4, 6, 8}) {
        const ClassDecomposition dec = decompose_classes(cluster_state(n));
        EXPECT_LT(dec.max_weight(), 1.0 - 1e-6);
        EXPECT_FALSE(dec.pure_class());
    }
}

TEST(Aklt, StringOrderAndClass) {
    for (int n : {4, 6, 8}) {
        const PureState s = aklt_state(n);
        const double so = string_order(s);
        EXPECT_NEAR(so, -1.0, 1e-10);
        const double sign = (n / 2) % 2 == 0 ? 1.0 : -1.0;
        EXPECT_NEAR(upsilon_expectations(s).u2, -sign * so, 1e-10);
        EXPECT_TRUE(decompose_classes(s).pure_class().has_value());
        EXPECT_GT(aklt_projected(n).projection_norm, 0.0);
        EXPECT_LT(aklt_projected(n).projection_norm, 1.0);
    }
    EXPECT_THROW(aklt_state(5), std::invalid_argument);
    EXPECT_THROW(aklt_state(2), std::invalid_argument);
}

TEST(Aklt, FourSiteBruteForce) {
    const oracle::Vec singlet = oracle::bell(-1, -1);
    const oracle::Vec start = oracle::kron(singlet, singlet);
    const oracle::Mat pt =
        oracle::kron(oracle::kron(oracle::Mat(oracle::Mat::Identity(2, 2)),
                                  oracle::Mat(oracle::Mat::Identity(4, 4) - singlet * singlet.adjoint())),
                     oracle::Mat(oracle::Mat::Identity(2, 2)));
    oracle::Vec v = pt * start;
    EXPECT_NEAR(v.norm(), aklt_projected(4).projection_norm, 1e-12);
    v.normalize();
    EXPECT_NEAR(std::norm(v.dot(oracle::vec(aklt_state(4)))), 1.0, 1e-12);
}

TEST(StringOrder, ProductAndSingletExamples) {
    for (int n : {2, 4, 6, 8}) {
        const std::vector<int> zeros(static_cast<std::size_t>(n), 0);
        const double expect = (n / 2 - 1) % 2 == 0 ? 1.0 : -1.0;
        EXPECT_NEAR(string_order(PureState::basis(2, zeros)), expect, 1e-12);
        const std::vector<BellLabel> singlets(static_cast<std::size_t>(n / 2), BellLabel{kMinus, kMinus});
        const PureState s = bell_basis_state(singlets);
        const double sign = (n / 2) % 2 == 0 ? 1.0 : -1.0;
        EXPECT_NEAR(upsilon_expectations(s).u2, -sign * string_order(s), 1e-12);
    }
    EXPECT_THROW(string_order(random_state(3, 2, 1)), std::invalid_argument);
}

TEST(Heisenberg, GroundStateMatchesFullDiagonalization) {
    for (int n : {4, 6, 8}) {
        const HeisenbergGround g = heisenberg_ground_state(n);
        const oracle::Mat h = dense_heisenberg(n);
        Eigen::SelfAdjointEigenSolver<oracle::Mat> solver(h);
        EXPECT_NEAR(g.energy, solver.eigenvalues()(0), 1e-9);
        const oracle::Vec v = oracle::vec(g.state);
        EXPECT_NEAR(oracle::expect(h, v), g.energy, 1e-9);
        EXPECT_LT((h * v - g.energy * v).norm(), 1e-8);
        EXPECT_GT(g.gap, kDegeneracyTolerance);
        EXPECT_NEAR(decompose_classes(g.state).efficiency(), 1.0, 1e-8);
    }
    EXPECT_NEAR(heisenberg_ground_state(4).energy, -8.0, 1e-10);
    EXPECT_THROW(heisenberg_ground_state(14), std::invalid_argument);
    EXPECT_THROW(heisenberg_ground_state(5), std::invalid_argument);
}

TEST(Singlets, CatalanMatchingsAndDimers) {
    const std::array<std::size_t, 4> catalan{1, 2, 5, 14};
    for (int pairs = 1; pairs <= 4; ++pairs) {
        const auto m = noncrossing_matchings(pairs);
        EXPECT_EQ(m.size(), catalan[static_cast<std::size_t>(pairs - 1)]);
        for (const auto& dimers : m) {
            const PureState d = dimer_product(2 * pairs, dimers);
            EXPECT_NEAR(d.norm(), 1.0, 1e-12);
        }
    }
    const std::vector<std::pair<int, int>> one{{0, 1}};
    EXPECT_NEAR(overlap(dimer_product(2, one), bell_state({kMinus, kMinus})), 1.0, 1e-12);
    EXPECT_NEAR(overlap(majumdar_ghosh(3), build(channel::BellProduct{{{kMinus, kMinus}, {kMinus, kMinus},
                                                                        {kMinus, kMinus}}})),
                1.0, 1e-12);
}

TEST(Singlets, RandomSingletsShareOneClassAndAreRotationInvariant) {
    Rng rng(43);
    for (int pairs : {2, 3}) {
        const Sign s = pairs % 2 == 0 ? kPlus : kMinus;
        for (int t = 0; t < 10; ++t) {
            const PureState psi = singlet_random(pairs, rng);
            EXPECT_EQ(decompose_classes(psi).pure_class(), (BellClass{s, s}));
            const LocalOperator a = random_unitary(rng);
            PureState rotated = psi;
            for (int site = 0; site < 2 * pairs; ++site) {
                rotated = apply_local(rotated, a, site);
            }
            EXPECT_NEAR(overlap(rotated, psi), 1.0, 1e-10);
        }
    }
    const PureState a = singlet_random(2, std::uint64_t{5});
    const PureState b = singlet_random(2, std::uint64_t{5});
    EXPECT_EQ((oracle::vec(a) - oracle::vec(b)).norm(), 0.0);
}

TEST(Ghz, Amplitudes) {
    const PureState g = ghz(4);
    EXPECT_NEAR(g.amplitude(0).real(), 1.0 / std::numbers::sqrt2, 1e-15);
    EXPECT_NEAR(g.amplitude(15).real(), 1.0 / std::numbers::sqrt2, 1e-15);
    EXPECT_EQ(decompose_classes(g).pure_class(), (BellClass{kPlus, kPlus}));
}
