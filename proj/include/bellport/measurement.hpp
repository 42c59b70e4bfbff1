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
#include <span>
#include <utility>
#include <vector>

#include "bellport/bell.hpp"
#include "bellport/statevector.hpp"

namespace bellport {

/// Outcomes with probability at or below this are impossible.
inline constexpr double kZeroProbability = 1e-14;

using SitePair = std::pair<int, int>;

struct MeasurementOutcome {
    SitePair pair;
    BellLabel label;
    double probability = 0.0;
};

struct MeasurementRecord {
    std::vector<MeasurementOutcome> outcomes;
    BellClass aggregate_class{kPlus, kPlus};
    double joint_probability = 1.0;
};

/// Forced choices pick the outcome; a generator samples it.
class OutcomeChooser {
  public:
    explicit OutcomeChooser(Rng& rng) : rng_(&rng) {}
    explicit OutcomeChooser(std::span<const BellLabel> forced) : forced_(forced) {}

    BellLabel choose(const std::array<double, 4>& probabilities, std::size_t step);
    bool samples() const { return rng_ != nullptr; }
    std::size_t forced_count() const { return forced_.size(); }

  private:
    Rng* rng_ = nullptr;
    std::span<const BellLabel> forced_;
};

/// <p:q|_{ab} s: amplitudes on the remaining sites in ascending order, unnormalized.
/// Requires at least three sites.
PureState contract_pair(const PureState& s, int a, int b, const BellLabel& label);

/// Inverse of contract_pair: inserts |p:q} on sites (a, b) of the enlarged state.
PureState embed_pair(const PureState& rest, int a, int b, const BellLabel& label);

/// Probabilities of (+,+), (+,-), (-,+), (-,-) for a Bell measurement on (a, b).
std::array<double, 4> outcome_distribution(const PureState& s, int a, int b);

/// Bell measurement on (a, b). The post-state keeps all sites, with the pair
/// set to |p:q}. Forcing an outcome of probability <= kZeroProbability throws
/// ImpossibleOutcome.
std::pair<MeasurementOutcome, PureState> bell_measure(const PureState& s, int a, int b, const BellLabel& forced);
std::pair<MeasurementOutcome, PureState> bell_measure(const PureState& s, int a, int b, Rng& rng);

/// Measures disjoint pairs in order. The residual state covers the unmeasured
/// sites in ascending order and is normalized.
std::pair<MeasurementRecord, PureState> measure_sequence(const PureState& s, std::span<const SitePair> pairing,
                                                         OutcomeChooser chooser);

/// Throws std::invalid_argument unless the pairs are disjoint, in range, and
/// leave at least one site unmeasured.
void validate_pairing(int num_sites, std::span<const SitePair> pairing);

}  // namespace bellport
