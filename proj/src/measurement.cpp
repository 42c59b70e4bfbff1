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

#include "bellport/measurement.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "bellport/errors.hpp"

namespace bellport {

namespace {

void check_pair(const PureState& s, int a, int b) {
    if (s.local_dim() != 2) {
        throw std::invalid_argument("Bell measurements act on qubits");
    }
    if (a == b) {
        throw std::invalid_argument("Bell measurement needs two distinct sites");
    }
    if (a < 0 || b < 0 || a >= s.num_sites() || b >= s.num_sites()) {
        throw std::invalid_argument("Bell measurement site out of range");
    }
}

std::string label_text(const BellLabel& l) { return "(" + to_string(l) + ")"; }

}  // namespace

BellLabel OutcomeChooser::choose(const std::array<double, 4>& probabilities, std::size_t step) {
    if (rng_ == nullptr) {
        if (step >= forced_.size()) {
            throw std::invalid_argument("fewer forced outcomes than measured pairs");
        }
        const BellLabel l = forced_[step];
        if (probabilities[static_cast<std::size_t>(l.index())] <= kZeroProbability) {
            throw ImpossibleOutcome("forced outcome " + label_text(l) + " has zero probability");
        }
        return l;
    }
    const double u = rng_->uniform();
    double acc = 0.0;
    int last_possible = 0;
    for (int i = 0; i < 4; ++i) {
        const double p = probabilities[static_cast<std::size_t>(i)];
        if (p <= kZeroProbability) {
            continue;
        }
        last_possible = i;
        acc += p;
        if (u < acc) {
            return BellLabel::from_index(i);
        }
    }
    return BellLabel::from_index(last_possible);
}

PureState contract_pair(const PureState& s, int a, int b, const BellLabel& label) {
    check_pair(s, a, b);
    return contract_sites(s, a, b, bell_state(label));
}

PureState embed_pair(const PureState& rest, int a, int b, const BellLabel& label) {
    return insert_sites(rest, a, b, bell_state(label));
}

std::array<double, 4> outcome_distribution(const PureState& s, int a, int b) {
    check_pair(s, a, b);
    std::array<double, 4> probs{};
    for (const BellLabel& l : all_bell_labels()) {
        double p = 0.0;
        if (s.num_sites() == 2) {
            const PureState pair = a < b ? s : permute_sites(s, std::array<int, 2>{1, 0});
            p = overlap(bell_state(l), pair);
        } else {
            p = contract_pair(s, a, b, l).norm_squared();
        }
        probs[static_cast<std::size_t>(l.index())] = p;
    }
    return probs;
}

namespace {

std::pair<MeasurementOutcome, PureState> measure_with(const PureState& s, int a, int b, OutcomeChooser chooser) {
    const std::array<double, 4> probs = outcome_distribution(s, a, b);
    const BellLabel l = chooser.choose(probs, 0);
    MeasurementOutcome outcome{{a, b}, l, probs[static_cast<std::size_t>(l.index())]};
    if (s.num_sites() == 2) {
        return {outcome, bell_state(l)};
    }
    return {outcome, embed_pair(contract_pair(s, a, b, l).normalized(), a, b, l)};
}

}  // namespace

std::pair<MeasurementOutcome, PureState> bell_measure(const PureState& s, int a, int b, const BellLabel& forced) {
    return measure_with(s, a, b, OutcomeChooser(std::span<const BellLabel>(&forced, 1)));
}

std::pair<MeasurementOutcome, PureState> bell_measure(const PureState& s, int a, int b, Rng& rng) {
    return measure_with(s, a, b, OutcomeChooser(rng));
}

void validate_pairing(int num_sites, std::span<const SitePair> pairing) {
    std::vector<bool> used(static_cast<std::size_t>(num_sites), false);
    for (const auto& [a, b] : pairing) {
        if (a == b || a < 0 || b < 0 || a >= num_sites || b >= num_sites) {
            throw std::invalid_argument("pairing has an invalid pair");
        }
        if (used[static_cast<std::size_t>(a)] || used[static_cast<std::size_t>(b)]) {
            throw std::invalid_argument("pairing pairs overlap");
        }
        used[static_cast<std::size_t>(a)] = used[static_cast<std::size_t>(b)] = true;
    }
    if (2 * pairing.size() >= static_cast<std::size_t>(num_sites)) {
        throw std::invalid_argument("pairing must leave at least one site unmeasured");
    }
}

std::pair<MeasurementRecord, PureState> measure_sequence(const PureState& s, std::span<const SitePair> pairing,
                                                         OutcomeChooser chooser) {
    validate_pairing(s.num_sites(), pairing);
    if (!chooser.samples() && chooser.forced_count() != pairing.size()) {
        throw std::invalid_argument("need exactly one forced outcome per measured pair");
    }
    std::vector<int> remaining(static_cast<std::size_t>(s.num_sites()));
    for (int i = 0; i < s.num_sites(); ++i) {
        remaining[static_cast<std::size_t>(i)] = i;
    }
    auto position = [&](int site) {
        return static_cast<int>(std::find(remaining.begin(), remaining.end(), site) - remaining.begin());
    };

    MeasurementRecord record;
    PureState current = s.is_normalized() ? s : s.normalized();
    for (std::size_t step = 0; step < pairing.size(); ++step) {
        const auto [a, b] = pairing[step];
        const int pa = position(a);
        const int pb = position(b);
        std::array<PureState, 4> branches;
        std::array<double, 4> probs{};
        for (const BellLabel& l : all_bell_labels()) {
            const auto i = static_cast<std::size_t>(l.index());
            branches[i] = contract_pair(current, pa, pb, l);
            probs[i] = branches[i].norm_squared();
        }
        const BellLabel l = chooser.choose(probs, step);
        const auto i = static_cast<std::size_t>(l.index());
        record.outcomes.push_back({{a, b}, l, probs[i]});
        record.aggregate_class = record.aggregate_class * as_class(l);
        record.joint_probability *= probs[i];
        current = branches[i].normalized();
        remaining.erase(remaining.begin() + std::max(pa, pb));
        remaining.erase(remaining.begin() + std::min(pa, pb));
    }
    return {std::move(record), std::move(current)};
}

}  // namespace bellport
