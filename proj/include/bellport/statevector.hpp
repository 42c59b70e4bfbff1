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

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "bellport/algebra.hpp"

namespace bellport {

/// Upper bound on amplitudes held by one state (2^24, i.e. 24 qubits).
/// Experiments here stay at or below 13 qubits; 21 qubit sites (client plus
/// a 20-qubit channel) is the documented practical ceiling.
inline constexpr std::size_t kMaxAmplitudes = std::size_t{1} << 24;

inline constexpr double kNormTolerance = 1e-10;

enum class Normalization { normalized, unnormalized };

/// Dense pure state over `num_sites` sites of dimension `local_dim`.
///
/// Amplitude index is the base-`local_dim` number whose most significant digit
/// is site 0. States are immutable; every operation returns a new value.
/// Projection results carry Normalization::unnormalized so callers can read the
/// pre-normalization norm as a probability.
class PureState {
  public:
    PureState() = default;

    /// Throws std::invalid_argument on a size mismatch, or if a state declared
    /// normalized is off unit norm by more than kNormTolerance.
    PureState(int local_dim, int num_sites, std::vector<Complex> amplitudes,
              Normalization status = Normalization::normalized);

    /// Computational basis state; digits[i] is the level of site i.
    static PureState basis(int local_dim, std::span<const int> digits);

    int local_dim() const { return local_dim_; }
    int num_sites() const { return num_sites_; }
    std::size_t size() const { return amplitudes_.size(); }
    std::span<const Complex> amplitudes() const { return amplitudes_; }
    Complex amplitude(std::size_t index) const { return amplitudes_.at(index); }
    Normalization status() const { return status_; }
    bool is_normalized() const { return status_ == Normalization::normalized; }

    double norm_squared() const;
    double norm() const;

    /// Rescales to unit norm. Throws ImpossibleOutcome if the norm is zero.
    PureState normalized() const;

    /// Site digit of `index` for site `site`.
    int digit(std::size_t index, int site) const;

  private:
    int local_dim_ = 2;
    int num_sites_ = 0;
    std::vector<Complex> amplitudes_;
    Normalization status_ = Normalization::normalized;
};

/// Kronecker product; sites of `a` precede sites of `b`.
PureState tensor(const PureState& a, const PureState& b);
PureState tensor(std::span<const PureState> parts);

/// Applies `op` to `site` with a strided kernel. Result status follows the input.
PureState apply_local(const PureState& s, const LocalOperator& op, int site);

/// <a|b>, conjugate-linear in `a`.
Complex inner_product(const PureState& a, const PureState& b);

/// |<a|b>|^2.
double overlap(const PureState& a, const PureState& b);

/// <s|op_site|s> for a single-site operator.
Complex local_expectation(const PureState& s, const LocalOperator& op, int site);

/// Moves site i of `s` to position perm[i]. Throws unless `perm` is a bijection.
PureState permute_sites(const PureState& s, std::span<const int> perm);

/// <pair|_{(a,b)} s over the remaining sites in ascending order, unnormalized.
/// `pair` is a two-site state whose first site maps to `a`. Needs >= 3 sites.
PureState contract_sites(const PureState& s, int a, int b, const PureState& pair);

/// Inverse of contract_sites: places `pair` on sites (a, b) of the enlarged state.
PureState insert_sites(const PureState& rest, int a, int b, const PureState& pair);

/// Schmidt rank across the cut (sites [0, cut) | [cut, n)).
int schmidt_rank(const PureState& s, int cut, double tol = 1e-10);

/// Seedable, splittable generator with a platform-independent output stream.
///
/// Words come from std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Uniform doubles take the top 53 bits; normals use Box-Muller.
/// split(stream) seeds a child generator from SplitMix64(seed, stream).
class Rng {
  public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t next_u64() { return engine_(); }
    /// Uniform on [0, 1).
    double uniform();
    double normal();
    Complex complex_normal();
    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n);
    Rng split(std::uint64_t stream) const;

  private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Uniform on the unit sphere: i.i.d. complex normals, then normalized.
PureState random_state(int num_sites, int local_dim, Rng& rng);
PureState random_state(int num_sites, int local_dim, std::uint64_t seed);

/// Tensor product of independent single-site random_state draws.
PureState random_product_state(int num_sites, int local_dim, Rng& rng);
PureState random_product_state(int num_sites, int local_dim, std::uint64_t seed);

}  // namespace bellport
