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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "bellport/errors.hpp"

namespace bellport {

namespace {

std::size_t checked_size(int local_dim, int num_sites) {
    if (local_dim < 2) {
        throw std::invalid_argument("local_dim must be at least 2");
    }
    if (num_sites < 1) {
        throw std::invalid_argument("num_sites must be at least 1");
    }
    std::size_t n = 1;
    for (int i = 0; i < num_sites; ++i) {
        n *= static_cast<std::size_t>(local_dim);
        if (n > kMaxAmplitudes) {
            throw std::invalid_argument("state exceeds " + std::to_string(kMaxAmplitudes) + " amplitudes");
        }
    }
    return n;
}

std::size_t stride_of(int local_dim, int num_sites, int site) {
    std::size_t stride = 1;
    for (int i = site + 1; i < num_sites; ++i) {
        stride *= static_cast<std::size_t>(local_dim);
    }
    return stride;
}

void check_same_shape(const PureState& a, const PureState& b) {
    if (a.local_dim() != b.local_dim() || a.num_sites() != b.num_sites()) {
        throw std::invalid_argument("states have different shapes");
    }
}

}  // namespace

PureState::PureState(int local_dim, int num_sites, std::vector<Complex> amplitudes, Normalization status)
    : local_dim_(local_dim), num_sites_(num_sites), amplitudes_(std::move(amplitudes)), status_(status) {
    if (amplitudes_.size() != checked_size(local_dim, num_sites)) {
        throw std::invalid_argument("amplitude count does not match local_dim^num_sites");
    }
    if (status_ == Normalization::normalized && std::abs(norm() - 1.0) > kNormTolerance) {
        throw std::invalid_argument("state declared normalized has norm " + std::to_string(norm()));
    }
}

PureState PureState::basis(int local_dim, std::span<const int> digits) {
    const int n = static_cast<int>(digits.size());
    std::vector<Complex> amps(checked_size(local_dim, n));
    std::size_t index = 0;
    for (int d : digits) {
        if (d < 0 || d >= local_dim) {
            throw std::invalid_argument("basis digit out of range");
        }
        index = index * static_cast<std::size_t>(local_dim) + static_cast<std::size_t>(d);
    }
    amps[index] = 1.0;
    return PureState(local_dim, n, std::move(amps));
}

double PureState::norm_squared() const {
    double total = 0.0;
    for (const Complex& z : amplitudes_) {
        total += std::norm(z);
    }
    return total;
}

double PureState::norm() const { return std::sqrt(norm_squared()); }

PureState PureState::normalized() const {
    const double n = norm();
    if (n == 0.0) {
        throw ImpossibleOutcome("cannot normalize the zero vector");
    }
    std::vector<Complex> amps(amplitudes_);
    for (Complex& z : amps) {
        z /= n;
    }
    return PureState(local_dim_, num_sites_, std::move(amps));
}

int PureState::digit(std::size_t index, int site) const {
    return static_cast<int>((index / stride_of(local_dim_, num_sites_, site)) % static_cast<std::size_t>(local_dim_));
}

PureState tensor(const PureState& a, const PureState& b) {
    if (a.local_dim() != b.local_dim()) {
        throw std::invalid_argument("tensor: local dimensions differ");
    }
    const int n = a.num_sites() + b.num_sites();
    std::vector<Complex> amps(checked_size(a.local_dim(), n));
    const auto av = a.amplitudes();
    const auto bv = b.amplitudes();
    for (std::size_t i = 0; i < av.size(); ++i) {
        for (std::size_t j = 0; j < bv.size(); ++j) {
            amps[i * bv.size() + j] = av[i] * bv[j];
        }
    }
    const bool norm = a.is_normalized() && b.is_normalized();
    return PureState(a.local_dim(), n, std::move(amps), norm ? Normalization::normalized : Normalization::unnormalized);
}

PureState tensor(std::span<const PureState> parts) {
    if (parts.empty()) {
        throw std::invalid_argument("tensor: no factors");
    }
    PureState out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) {
        out = tensor(out, parts[i]);
    }
    return out;
}

PureState apply_local(const PureState& s, const LocalOperator& op, int site) {
    const int d = s.local_dim();
    if (op.dim() != d) {
        throw std::invalid_argument("apply_local: operator dimension does not match the state");
    }
    if (site < 0 || site >= s.num_sites()) {
        throw std::invalid_argument("apply_local: site out of range");
    }
    const std::size_t stride = stride_of(d, s.num_sites(), site);
    const std::size_t block = stride * static_cast<std::size_t>(d);
    const auto in = s.amplitudes();
    std::vector<Complex> out(in.size());
    const Eigen::MatrixXcd& m = op.matrix();
    for (std::size_t base = 0; base < in.size(); base += block) {
        for (std::size_t off = 0; off < stride; ++off) {
            const std::size_t first = base + off;
            for (int r = 0; r < d; ++r) {
                Complex acc = 0.0;
                for (int c = 0; c < d; ++c) {
                    const Complex w = m(r, c);
                    if (w != Complex(0.0)) {
                        acc += w * in[first + static_cast<std::size_t>(c) * stride];
                    }
                }
                out[first + static_cast<std::size_t>(r) * stride] = acc;
            }
        }
    }
    // A unitary keeps a normalized input normalized; anything else is flagged.
    const bool keep = s.is_normalized() && op.is_unitary(1e-12);
    return PureState(d, s.num_sites(), std::move(out), keep ? Normalization::normalized : Normalization::unnormalized);
}

Complex inner_product(const PureState& a, const PureState& b) {
    check_same_shape(a, b);
    Complex total = 0.0;
    const auto av = a.amplitudes();
    const auto bv = b.amplitudes();
    for (std::size_t i = 0; i < av.size(); ++i) {
        total += std::conj(av[i]) * bv[i];
    }
    return total;
}

double overlap(const PureState& a, const PureState& b) { return std::norm(inner_product(a, b)); }

Complex local_expectation(const PureState& s, const LocalOperator& op, int site) {
    return inner_product(s, apply_local(s, op, site));
}

PureState permute_sites(const PureState& s, std::span<const int> perm) {
    const int n = s.num_sites();
    if (static_cast<int>(perm.size()) != n) {
        throw std::invalid_argument("permute_sites: permutation length differs from site count");
    }
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int p : perm) {
        if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)]) {
            throw std::invalid_argument("permute_sites: not a bijection");
        }
        seen[static_cast<std::size_t>(p)] = true;
    }
    const int d = s.local_dim();
    std::vector<std::size_t> new_stride(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        new_stride[static_cast<std::size_t>(i)] = stride_of(d, n, perm[static_cast<std::size_t>(i)]);
    }
    const auto in = s.amplitudes();
    std::vector<Complex> out(in.size());
    std::vector<int> digits(static_cast<std::size_t>(n), 0);
    for (std::size_t idx = 0; idx < in.size(); ++idx) {
        std::size_t target = 0;
        for (int i = 0; i < n; ++i) {
            target += static_cast<std::size_t>(digits[static_cast<std::size_t>(i)]) * new_stride[static_cast<std::size_t>(i)];
        }
        out[target] = in[idx];
        for (int i = n - 1; i >= 0; --i) {
            if (++digits[static_cast<std::size_t>(i)] < d) {
                break;
            }
            digits[static_cast<std::size_t>(i)] = 0;
        }
    }
    return PureState(d, n, std::move(out), s.status());
}

namespace {

// Index of the remaining sites after deleting digits a and b from idx.
struct PairSplitter {
    int d;
    int n;
    int a;
    int b;
    std::size_t stride_a;
    std::size_t stride_b;

    PairSplitter(int d_, int n_, int a_, int b_)
        : d(d_), n(n_), a(a_), b(b_), stride_a(stride_of(d_, n_, a_)), stride_b(stride_of(d_, n_, b_)) {}

    std::size_t rest(std::size_t idx) const {
        std::size_t r = 0;
        std::size_t stride = 1;
        for (int site = n - 1; site >= 0; --site) {
            const auto digit = idx % static_cast<std::size_t>(d);
            idx /= static_cast<std::size_t>(d);
            if (site != a && site != b) {
                r += digit * stride;
                stride *= static_cast<std::size_t>(d);
            }
        }
        return r;
    }
    std::size_t pair(std::size_t idx) const {
        const auto ua = (idx / stride_a) % static_cast<std::size_t>(d);
        const auto ub = (idx / stride_b) % static_cast<std::size_t>(d);
        return ua * static_cast<std::size_t>(d) + ub;
    }
};

void check_pair_args(int d, int n, int a, int b, const PureState& pair) {
    if (pair.local_dim() != d || pair.num_sites() != 2) {
        throw std::invalid_argument("pair state must be two sites of matching dimension");
    }
    if (a == b || a < 0 || b < 0 || a >= n || b >= n) {
        throw std::invalid_argument("invalid site pair");
    }
}

}  // namespace

PureState contract_sites(const PureState& s, int a, int b, const PureState& pair) {
    const int d = s.local_dim();
    const int n = s.num_sites();
    check_pair_args(d, n, a, b, pair);
    if (n < 3) {
        throw std::invalid_argument("contract_sites needs at least three sites");
    }
    const PairSplitter split(d, n, a, b);
    std::vector<Complex> rest(s.size() / static_cast<std::size_t>(d * d));
    const auto amps = s.amplitudes();
    for (std::size_t idx = 0; idx < amps.size(); ++idx) {
        if (amps[idx] != Complex(0.0)) {
            rest[split.rest(idx)] += std::conj(pair.amplitude(split.pair(idx))) * amps[idx];
        }
    }
    return PureState(d, n - 2, std::move(rest), Normalization::unnormalized);
}

PureState insert_sites(const PureState& rest, int a, int b, const PureState& pair) {
    const int d = rest.local_dim();
    const int n = rest.num_sites() + 2;
    check_pair_args(d, n, a, b, pair);
    const PairSplitter split(d, n, a, b);
    std::vector<Complex> out(checked_size(d, n));
    for (std::size_t idx = 0; idx < out.size(); ++idx) {
        out[idx] = pair.amplitude(split.pair(idx)) * rest.amplitude(split.rest(idx));
    }
    const bool norm = rest.is_normalized() && pair.is_normalized();
    return PureState(d, n, std::move(out), norm ? Normalization::normalized : Normalization::unnormalized);
}

int schmidt_rank(const PureState& s, int cut, double tol) {
    if (cut <= 0 || cut >= s.num_sites()) {
        throw std::invalid_argument("schmidt_rank: cut must split the sites into two non-empty parts");
    }
    const Eigen::Index cols = static_cast<Eigen::Index>(stride_of(s.local_dim(), s.num_sites(), cut - 1));
    const Eigen::Index rows = static_cast<Eigen::Index>(s.size()) / cols;
    const auto amps = s.amplitudes();
    const Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> m(amps.data(), rows, cols);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    const auto& sv = svd.singularValues();
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        rank += sv[i] > tol ? 1 : 0;
    }
    return rank;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) {
        u1 = uniform();
    }
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(t);
    has_spare_ = true;
    return r * std::cos(t);
}

Complex Rng::complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re, im};
}

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("Rng::below requires n > 0");
    }
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x = engine_();
    while (x >= limit) {
        x = engine_();
    }
    return x % n;
}

Rng Rng::split(std::uint64_t stream) const { return Rng(splitmix64(seed_ ^ splitmix64(stream + 0x5851F42D4C957F2DULL))); }

PureState random_state(int num_sites, int local_dim, Rng& rng) {
    std::vector<Complex> amps(checked_size(local_dim, num_sites));
    double total = 0.0;
    for (Complex& z : amps) {
        z = rng.complex_normal();
        total += std::norm(z);
    }
    const double n = std::sqrt(total);
    for (Complex& z : amps) {
        z /= n;
    }
    return PureState(local_dim, num_sites, std::move(amps));
}

PureState random_state(int num_sites, int local_dim, std::uint64_t seed) {
    Rng rng(seed);
    return random_state(num_sites, local_dim, rng);
}

PureState random_product_state(int num_sites, int local_dim, Rng& rng) {
    checked_size(local_dim, num_sites);
    PureState out = random_state(1, local_dim, rng);
    for (int i = 1; i < num_sites; ++i) {
        out = tensor(out, random_state(1, local_dim, rng));
    }
    return out;
}

PureState random_product_state(int num_sites, int local_dim, std::uint64_t seed) {
    Rng rng(seed);
    return random_product_state(num_sites, local_dim, rng);
}

}  // namespace bellport
