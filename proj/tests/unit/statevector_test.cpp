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

#include "bellport/statevector.hpp"

#include <array>
#include <numeric>

#include <gtest/gtest.h>

#include "bellport/bell.hpp"
#include "bellport/errors.hpp"
#include "oracle.hpp"

using namespace bellport;

namespace {

LocalOperator random_unitary(int d, Rng& rng) {
    Eigen::MatrixXcd m(d, d);
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) {
            m(r, c) = rng.complex_normal();
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(m);
    return LocalOperator(qr.householderQ() * Eigen::MatrixXcd::Identity(d, d));
}

LocalOperator random_matrix(int d, Rng& rng) {
    Eigen::MatrixXcd m(d, d);
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) {
            m(r, c) = rng.complex_normal();
        }
    }
    return LocalOperator(m);
}

double max_diff(const PureState& a, const PureState& b) {
    return (oracle::vec(a) - oracle::vec(b)).cwiseAbs().maxCoeff();
}

}  // namespace

TEST(PureState, Construction) {
    EXPECT_THROW(PureState(2, 2, {1.0, 0.0, 0.0}), std::invalid_argument);
    EXPECT_THROW(PureState(2, 1, {1.0, 1.0}), std::invalid_argument);
    const PureState raw(2, 1, {1.0, 1.0}, Normalization::unnormalized);
    EXPECT_FALSE(raw.is_normalized());
    EXPECT_DOUBLE_EQ(raw.norm_squared(), 2.0);
    EXPECT_TRUE(raw.normalized().is_normalized());
    EXPECT_THROW(PureState(2, 1, {0.0, 0.0}, Normalization::unnormalized).normalized(), ImpossibleOutcome);
    const std::array<int, 3> digits{1, 0, 2};
    const PureState b = PureState::basis(3, digits);
    EXPECT_EQ(b.amplitude(9 + 2), Complex(1.0));
    EXPECT_EQ(b.digit(11, 0), 1);
    EXPECT_EQ(b.digit(11, 2), 2);
}

TEST(Tensor, BasisProduct) {
    const PureState plus = PureState(2, 1, {1.0, 0.0});
    const PureState minus = PureState(2, 1, {0.0, 1.0});
    const PureState t = tensor(plus, minus);
    EXPECT_EQ(t.amplitude(0), Complex(0.0));
    EXPECT_EQ(t.amplitude(1), Complex(1.0));
    EXPECT_EQ(t.amplitude(2), Complex(0.0));
    EXPECT_EQ(t.amplitude(3), Complex(0.0));
    EXPECT_THROW(tensor(plus, PureState(3, 1, {1.0, 0.0, 0.0})), std::invalid_argument);
}

TEST(Tensor, MatchesKronecker) {
    Rng rng(5);
    const PureState a = random_state(2, 2, rng);
    const PureState b = random_state(1, 2, rng);
    EXPECT_LT((oracle::vec(tensor(a, b)) - oracle::kron(oracle::vec(a), oracle::vec(b))).norm(), 1e-15);
    const std::array<PureState, 3> parts{a, b, a};
    EXPECT_EQ(tensor(parts).num_sites(), 5);
}

TEST(Tensor, ClientWithBellPair) {
    Rng rng(8);
    const PureState v = random_state(1, 2, rng);
    const PureState t = tensor(v, bell_state({kPlus, kPlus}));
    const oracle::Vec expect = oracle::kron(oracle::vec(v), oracle::bell(1, 1));
    EXPECT_LT((oracle::vec(t) - expect).norm(), 1e-15);
}

TEST(ApplyLocal, Examples) {
    const std::array<int, 2> pp{0, 0};
    const std::array<int, 2> mp{1, 0};
    EXPECT_EQ(max_diff(apply_local(PureState::basis(2, pp), u_matrix(1), 0), PureState::basis(2, mp)), 0.0);
    Rng rng(3);
    const PureState s = random_state(3, 2, rng);
    EXPECT_EQ(max_diff(apply_local(s, u_matrix(0), 1), s), 0.0);
    EXPECT_THROW(apply_local(s, u_matrix(0), 3), std::invalid_argument);
    EXPECT_THROW(apply_local(s, LocalOperator::identity(3), 0), std::invalid_argument);
}

TEST(ApplyLocal, MatchesDenseEmbedding) {
    Rng rng(11);
    for (int d : {2, 3}) {
        for (int n : {1, 2, 3}) {
            const PureState s = random_state(n, d, rng);
            for (int site = 0; site < n; ++site) {
                const LocalOperator op = random_matrix(d, rng);
                const oracle::Vec expect = oracle::embed(op.matrix(), site, n) * oracle::vec(s);
                EXPECT_LT((oracle::vec(apply_local(s, op, site)) - expect).norm(), 1e-12);
            }
        }
    }
}

TEST(ApplyLocal, UnitaryPreservesNormAndDistinctSitesCommute) {
    Rng rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        const PureState s = random_state(4, 2, rng);
        const LocalOperator a = random_unitary(2, rng);
        const LocalOperator b = random_unitary(2, rng);
        const PureState ab = apply_local(apply_local(s, a, 0), b, 2);
        const PureState ba = apply_local(apply_local(s, b, 2), a, 0);
        EXPECT_NEAR(ab.norm(), 1.0, 1e-12);
        EXPECT_TRUE(ab.is_normalized());
        EXPECT_LT(max_diff(ab, ba), 1e-12);
    }
    const PureState s = random_state(2, 2, rng);
    EXPECT_FALSE(apply_local(s, random_matrix(2, rng), 0).is_normalized());
}

TEST(InnerProduct, Examples) {
    const PureState a = bell_state({kPlus, kPlus});
    const PureState b = bell_state({kPlus, kMinus});
    EXPECT_NEAR(std::abs(inner_product(a, b)), 0.0, 1e-15);
    EXPECT_NEAR(inner_product(a, a).real(), 1.0, 1e-15);
    const std::array<int, 2> pp{0, 0};
    EXPECT_NEAR(std::abs(inner_product(PureState::basis(2, pp), a) - 1.0 / std::numbers::sqrt2), 0.0, 1e-15);
    EXPECT_THROW(inner_product(a, random_state(3, 2, 1)), std::invalid_argument);
}

TEST(InnerProduct, TensorFactorizes) {
    Rng rng(13);
    for (int t = 0; t < 10; ++t) {
        const PureState a = random_state(1, 2, rng);
        const PureState b = random_state(2, 2, rng);
        const PureState c = random_state(1, 2, rng);
        const PureState d = random_state(2, 2, rng);
        EXPECT_LT(std::abs(inner_product(tensor(a, b), tensor(c, d)) - inner_product(a, c) * inner_product(b, d)),
                  1e-12);
    }
}

TEST(PermuteSites, ExamplesAndErrors) {
    Rng rng(14);
    const PureState s = random_state(3, 2, rng);
    const std::array<int, 3> id{0, 1, 2};
    EXPECT_EQ(max_diff(permute_sites(s, id), s), 0.0);
    const std::array<int, 2> pm{0, 1};
    const std::array<int, 2> mp{1, 0};
    const std::array<int, 2> swap{1, 0};
    EXPECT_EQ(max_diff(permute_sites(PureState::basis(2, pm), swap), PureState::basis(2, mp)), 0.0);
    const std::array<int, 3> bad{0, 0, 1};
    EXPECT_THROW(permute_sites(s, bad), std::invalid_argument);
    const std::array<int, 2> short_perm{0, 1};
    EXPECT_THROW(permute_sites(s, short_perm), std::invalid_argument);
}

TEST(PermuteSites, ComposesAndMovesSites) {
    Rng rng(15);
    const PureState s = random_state(4, 2, rng);
    std::array<int, 4> p1{2, 0, 3, 1};
    std::array<int, 4> p2{1, 3, 0, 2};
    std::array<int, 4> composed{};
    for (int i = 0; i < 4; ++i) {
        composed[static_cast<std::size_t>(i)] = p2[static_cast<std::size_t>(p1[static_cast<std::size_t>(i)])];
    }
    EXPECT_LT(max_diff(permute_sites(permute_sites(s, p1), p2), permute_sites(s, composed)), 1e-15);
    const LocalOperator a = random_unitary(2, rng);
    EXPECT_LT(max_diff(permute_sites(apply_local(s, a, 1), p1), apply_local(permute_sites(s, p1), a, p1[1])), 1e-12);
    EXPECT_NEAR(permute_sites(s, p1).norm(), 1.0, 1e-12);
}

TEST(ContractSites, InsertThenContractRoundTrips) {
    Rng rng(16);
    for (int d : {2, 3}) {
        const PureState rest = random_state(2, d, rng);
        const PureState pair = random_state(2, d, rng);
        const PureState full = insert_sites(rest, 1, 3, pair);
        EXPECT_EQ(full.num_sites(), 4);
        EXPECT_NEAR(full.norm(), 1.0, 1e-12);
        const PureState back = contract_sites(full, 1, 3, pair);
        EXPECT_LT(max_diff(back, rest), 1e-12);
        EXPECT_FALSE(back.is_normalized());
    }
}

TEST(SchmidtRank, ProductAndEntangled) {
    Rng rng(17);
    EXPECT_EQ(schmidt_rank(random_product_state(4, 2, rng), 2), 1);
    EXPECT_EQ(schmidt_rank(bell_state({kMinus, kMinus}), 1), 2);
    EXPECT_EQ(schmidt_rank(random_state(4, 2, rng), 2), 4);
}

TEST(Rng, KnownSplitMixValueAndDeterminism) {
    EXPECT_EQ(splitmix64(0), 0xE220A8397B1DCDAFULL);
    Rng a(99);
    Rng b(99);
    for (int i = 0; i < 100; ++i) {
        EXPECT_EQ(a.next_u64(), b.next_u64());
    }
    EXPECT_NE(Rng(99).split(0).next_u64(), Rng(99).split(1).next_u64());
    EXPECT_EQ(Rng(99).split(7).next_u64(), Rng(99).split(7).next_u64());
}

TEST(Rng, Ranges) {
    Rng rng(1);
    double mean = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double u = rng.uniform();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        const std::uint64_t k = rng.below(5);
        ASSERT_LT(k, 5u);
        mean += rng.normal();
    }
    EXPECT_LT(std::abs(mean / 10000.0), 0.05);
    EXPECT_THROW(rng.below(0), std::invalid_argument);
}

TEST(RandomState, ReproducibleAndNormalized) {
    const PureState a = random_state(4, 2, 123);
    const PureState b = random_state(4, 2, 123);
    EXPECT_EQ(max_diff(a, b), 0.0);
    EXPECT_NEAR(a.norm(), 1.0, 1e-12);
    const PureState p = random_product_state(3, 3, 9);
    EXPECT_NEAR(p.norm(), 1.0, 1e-12);
    EXPECT_EQ(schmidt_rank(p, 1), 1);
}

TEST(RandomState, UpsilonOneMeanStrictlyInsideUnitInterval) {
    Rng rng(2024);
    const oracle::Mat y1 = oracle::upsilon(1, 4);
    double mean = 0.0;
    for (int t = 0; t < 1000; ++t) {
        mean += std::abs(oracle::expect(y1, oracle::vec(random_state(4, 2, rng))));
    }
    mean /= 1000.0;
    EXPECT_GT(mean, 0.0);
    EXPECT_LT(mean, 1.0);
}
