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

#include "bellport/bell.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bellport {

std::string to_string(const BellLabel& l) { return {to_char(l.j), ':', to_char(l.k)}; }

std::string to_string(const BellClass& c) { return {'[', to_char(c.j), ':', to_char(c.k), ']'}; }

std::ostream& operator<<(std::ostream& out, const BellLabel& l) { return out << to_string(l); }

std::ostream& operator<<(std::ostream& out, const BellClass& c) { return out << to_string(c); }

BellClass parse_bell_class(const std::string& text) {
    std::string t = text;
    if (t.size() == 5 && t.front() == '[' && t.back() == ']') {
        t = t.substr(1, 3);
    }
    auto sign = [&](char ch) {
        if (ch == '+') {
            return kPlus;
        }
        if (ch == '-') {
            return kMinus;
        }
        throw std::invalid_argument("bad Bell class '" + text + "'");
    };
    if (t.size() != 3 || t[1] != ':') {
        throw std::invalid_argument("bad Bell class '" + text + "', expected e.g. +:-");
    }
    return {sign(t[0]), sign(t[2])};
}

const std::array<BellLabel, 4>& all_bell_labels() {
    static const std::array<BellLabel, 4> labels = {BellLabel::from_index(0), BellLabel::from_index(1),
                                                    BellLabel::from_index(2), BellLabel::from_index(3)};
    return labels;
}

const std::array<BellClass, 4>& all_bell_classes() {
    static const std::array<BellClass, 4> classes = {BellClass::from_index(0), BellClass::from_index(1),
                                                     BellClass::from_index(2), BellClass::from_index(3)};
    return classes;
}

PureState bell_state(const BellLabel& l) {
    const double h = 1.0 / std::numbers::sqrt2;
    std::vector<Complex> amps(4);
    amps[static_cast<std::size_t>(l.k.bit())] = h;
    amps[static_cast<std::size_t>(2 + l.k.flipped().bit())] = h * l.j.value();
    return PureState(2, 2, std::move(amps));
}

PureState bell_basis_state(std::span<const BellLabel> labels) {
    if (labels.empty()) {
        throw std::invalid_argument("bell_basis_state needs at least one label");
    }
    PureState out = bell_state(labels[0]);
    for (std::size_t i = 1; i < labels.size(); ++i) {
        out = tensor(out, bell_state(labels[i]));
    }
    return out;
}

BellClass class_of(std::span<const BellLabel> labels) {
    BellClass c{kPlus, kPlus};
    for (const BellLabel& l : labels) {
        c = c * as_class(l);
    }
    return c;
}

PureState apply_upsilon(const PureState& s, int alpha) {
    if (s.local_dim() != 2) {
        throw std::invalid_argument("Upsilon operators act on qubits");
    }
    if (alpha < 1 || alpha > 3) {
        throw std::invalid_argument("Upsilon index must be 1, 2 or 3");
    }
    const LocalOperator u = u_matrix(alpha);
    PureState out = s;
    for (int site = 0; site < s.num_sites(); ++site) {
        out = apply_local(out, u, site);
    }
    return out;
}

UpsilonExpectations upsilon_expectations(const PureState& s) {
    UpsilonExpectations e;
    e.u1 = inner_product(s, apply_upsilon(s, 1)).real();
    e.u2 = inner_product(s, apply_upsilon(s, 2)).real();
    e.u3 = inner_product(s, apply_upsilon(s, 3)).real();
    return e;
}

double omega(const UpsilonExpectations& e, const BellClass& c) {
    return c.j.value() * e.u1 + c.k.value() * e.u2 + (c.j * c.k).value() * e.u3;
}

PureState class_projector_apply(const PureState& s, const BellClass& c) {
    if (s.num_sites() % 2 != 0) {
        throw std::invalid_argument("Bell classes are defined for an even number of qubits");
    }
    const PureState y1 = apply_upsilon(s, 1);
    const PureState y2 = apply_upsilon(s, 2);
    const PureState y3 = apply_upsilon(s, 3);
    const double j = c.j.value();
    const double k = c.k.value();
    std::vector<Complex> amps(s.size());
    for (std::size_t i = 0; i < amps.size(); ++i) {
        amps[i] = 0.25 * (s.amplitude(i) + j * y1.amplitude(i) + k * y2.amplitude(i) + j * k * y3.amplitude(i));
    }
    return PureState(2, s.num_sites(), std::move(amps), Normalization::unnormalized);
}

ClassDecomposition::ClassDecomposition(std::array<double, 4> coefficients,
                                       std::array<std::optional<PureState>, 4> components)
    : coefficients_(coefficients), components_(std::move(components)) {}

BellClass ClassDecomposition::dominant() const {
    int best = 0;
    for (int i = 1; i < 4; ++i) {
        if (coefficients_[static_cast<std::size_t>(i)] > coefficients_[static_cast<std::size_t>(best)]) {
            best = i;
        }
    }
    return BellClass::from_index(best);
}

double ClassDecomposition::max_weight() const { return weight(dominant()); }

std::optional<BellClass> ClassDecomposition::pure_class() const {
    if (max_weight() > 1.0 - kPureClassSlack) {
        return dominant();
    }
    return std::nullopt;
}

double ClassDecomposition::efficiency() const {
    double sum = 0.0;
    for (double c : coefficients_) {
        sum += c * c * c * c;
    }
    return (4.0 * sum - 1.0) / 3.0;
}

ClassDecomposition decompose_classes(const PureState& s) {
    std::array<double, 4> coeffs{};
    std::array<std::optional<PureState>, 4> comps;
    for (const BellClass& c : all_bell_classes()) {
        const PureState proj = class_projector_apply(s, c);
        const double n = proj.norm();
        const auto i = static_cast<std::size_t>(c.index());
        coeffs[i] = n;
        if (n >= kAbsentComponent) {
            comps[i] = proj.normalized();
        } else {
            coeffs[i] = 0.0;
        }
    }
    return ClassDecomposition(coeffs, std::move(comps));
}

}  // namespace bellport
