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
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "bellport/algebra.hpp"
#include "bellport/statevector.hpp"

namespace bellport {

/// Label (j, k) of the two-qubit Bell state |j:k}.
struct BellLabel {
    Sign j;
    Sign k;
    bool operator==(const BellLabel&) const = default;
    /// 0..3 in the order (+,+), (+,-), (-,+), (-,-).
    int index() const { return j.bit() * 2 + k.bit(); }
    static BellLabel from_index(int i) { return {Sign::from_bit((i >> 1) & 1), Sign::from_bit(i & 1)}; }
};

/// Bell class [j:k] of a multi-qubit channel.
struct BellClass {
    Sign j;
    Sign k;
    bool operator==(const BellClass&) const = default;
    int index() const { return j.bit() * 2 + k.bit(); }
    static BellClass from_index(int i) { return {Sign::from_bit((i >> 1) & 1), Sign::from_bit(i & 1)}; }
    BellClass operator*(const BellClass& o) const { return {j * o.j, k * o.k}; }
};

inline BellClass as_class(const BellLabel& l) { return {l.j, l.k}; }
inline BellLabel as_label(const BellClass& c) { return {c.j, c.k}; }

/// "+:-" style text.
std::string to_string(const BellLabel& l);
std::string to_string(const BellClass& c);
std::ostream& operator<<(std::ostream& out, const BellLabel& l);
std::ostream& operator<<(std::ostream& out, const BellClass& c);

/// Parses "+:-" or "[+:-]". Throws std::invalid_argument.
BellClass parse_bell_class(const std::string& text);

const std::array<BellLabel, 4>& all_bell_labels();
const std::array<BellClass, 4>& all_bell_classes();

/// (|+,k> + j|-,-k>) / sqrt(2).
PureState bell_state(const BellLabel& l);

/// Tensor product of the listed Bell pairs, pair i on sites (2i, 2i+1).
PureState bell_basis_state(std::span<const BellLabel> labels);

/// (prod j_i, prod k_i).
BellClass class_of(std::span<const BellLabel> labels);

/// Upsilon^alpha = U^alpha on every site, alpha in 1..3.
PureState apply_upsilon(const PureState& s, int alpha);

struct UpsilonExpectations {
    double u1 = 0.0;
    double u2 = 0.0;
    double u3 = 0.0;
    double operator[](int alpha) const { return alpha == 1 ? u1 : alpha == 2 ? u2 : u3; }
};

/// Real parts of <Upsilon^1>, <Upsilon^2>, <Upsilon^3>. For odd site counts
/// Upsilon^3 is anti-Hermitian and its reported value is the real part.
UpsilonExpectations upsilon_expectations(const PureState& s);

/// Omega_[j:k] = j<Y1> + k<Y2> + jk<Y3>.
double omega(const UpsilonExpectations& e, const BellClass& c);

/// (1/4)(I + j Y1 + k Y2 + jk Y3) s, unnormalized. Requires an even site count.
PureState class_projector_apply(const PureState& s, const BellClass& c);

/// Threshold below which a class component is treated as absent.
inline constexpr double kAbsentComponent = 1e-12;
/// A state is in a pure class when its weight there exceeds 1 - kPureClassSlack.
inline constexpr double kPureClassSlack = 1e-9;

/// s = sum_c coefficient(c) * component(c).
///
/// Coefficients are the real, non-negative projector norms; the phase of each
/// term is carried by its normalized component.
class ClassDecomposition {
  public:
    ClassDecomposition(std::array<double, 4> coefficients, std::array<std::optional<PureState>, 4> components);

    double coefficient(const BellClass& c) const { return coefficients_[static_cast<std::size_t>(c.index())]; }
    double weight(const BellClass& c) const { return coefficient(c) * coefficient(c); }
    const std::optional<PureState>& component(const BellClass& c) const {
        return components_[static_cast<std::size_t>(c.index())];
    }
    /// Class with the largest weight; ties resolve to the lowest index.
    BellClass dominant() const;
    double max_weight() const;
    /// The class holding weight above 1 - kPureClassSlack, if any.
    std::optional<BellClass> pure_class() const;
    /// 4 sum |c|^4 - 1 over 3.
    double efficiency() const;

  private:
    std::array<double, 4> coefficients_;
    std::array<std::optional<PureState>, 4> components_;
};

ClassDecomposition decompose_classes(const PureState& s);

}  // namespace bellport
