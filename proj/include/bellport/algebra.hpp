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
#include <complex>
#include <cstdint>
#include <ostream>
#include <span>
#include <stdexcept>

#include <Eigen/Dense>

namespace bellport {

using Complex = std::complex<double>;

/// A label taking the values +1 or -1.
class Sign {
  public:
    constexpr Sign() = default;
    /// Throws std::invalid_argument unless `value` is +1 or -1.
    constexpr explicit Sign(int value) : value_(check(value)) {}

    static constexpr Sign plus() { return Sign(1); }
    static constexpr Sign minus() { return Sign(-1); }

    constexpr int value() const { return value_; }
    /// 0 for +1, 1 for -1. Used as a dense table index.
    constexpr int bit() const { return value_ == 1 ? 0 : 1; }
    constexpr Sign flipped() const { return Sign(-value_); }
    constexpr bool is_plus() const { return value_ == 1; }

    constexpr Sign operator*(Sign other) const { return Sign(value_ * other.value_); }
    constexpr Sign operator-() const { return flipped(); }
    constexpr bool operator==(const Sign&) const = default;

    static constexpr Sign from_bit(int bit) { return Sign(bit == 0 ? 1 : -1); }

  private:
    static constexpr int check(int value) {
        if (value != 1 && value != -1) {
            throw std::invalid_argument("Sign must be +1 or -1");
        }
        return value;
    }
    int value_ = 1;
};

inline constexpr Sign kPlus = Sign::plus();
inline constexpr Sign kMinus = Sign::minus();

inline constexpr std::array<Sign, 2> kSigns = {kPlus, kMinus};

std::ostream& operator<<(std::ostream& out, Sign s);
/// '+' or '-'.
char to_char(Sign s);

/// A dim x dim complex matrix acting on one site.
///
/// Value type. Entries of the U and X families are exactly 0 or +-1, which a
/// double represents exactly, so those operators compare equal bit-for-bit.
class LocalOperator {
  public:
    LocalOperator() = default;
    explicit LocalOperator(Eigen::MatrixXcd matrix);

    static LocalOperator identity(int dim);

    int dim() const { return static_cast<int>(matrix_.rows()); }
    const Eigen::MatrixXcd& matrix() const { return matrix_; }
    Complex operator()(int row, int col) const { return matrix_(row, col); }

    LocalOperator adjoint() const;
    LocalOperator operator*(const LocalOperator& rhs) const;
    LocalOperator operator*(Complex scale) const;
    LocalOperator operator-() const;
    LocalOperator operator+(const LocalOperator& rhs) const;

    /// Exact entrywise equality.
    bool operator==(const LocalOperator& rhs) const;

    /// max |entry| of (this - rhs); infinity if the dimensions differ.
    double max_abs_diff(const LocalOperator& rhs) const;
    bool is_unitary(double tol = 1e-12) const;

  private:
    Eigen::MatrixXcd matrix_;
};

std::ostream& operator<<(std::ostream& out, const LocalOperator& op);

/// U^0 = I, U^1 = bit flip, U^2 = diag(1, -1), U^3 = [[0, -1], [1, 0]].
/// Throws std::invalid_argument outside 0..3.
LocalOperator u_matrix(int index);

/// Parity map: +1 -> 0, -1 -> 1. nu(ab) = nu(a) + nu(b) mod 2.
constexpr int nu_parity(Sign a) { return a.bit(); }

/// Dense sign tables over (j, k, p, q) in {+-1}^4, 16 entries each.
///
/// epsilon is -1 exactly when j != p and k != q. delta is the sign in front
/// of (U^1)^nu(kq) (U^2)^nu(jp) in the table of X^{jk}_{pq}.
class SignTables {
  public:
    static const SignTables& instance();

    Sign epsilon(Sign j, Sign k, Sign p, Sign q) const { return epsilon_[index(j, k, p, q)]; }
    Sign delta(Sign j, Sign k, Sign p, Sign q) const { return delta_[index(j, k, p, q)]; }
    /// U index (0..3) of X^{jk}_{pq} up to the delta sign.
    int u_index(Sign j, Sign k, Sign p, Sign q) const { return u_index_[index(j, k, p, q)]; }

    static constexpr int index(Sign j, Sign k, Sign p, Sign q) {
        return (j.bit() << 3) | (k.bit() << 2) | (p.bit() << 1) | q.bit();
    }

  private:
    SignTables();
    std::array<Sign, 16> epsilon_{};
    std::array<Sign, 16> delta_{};
    std::array<int, 16> u_index_{};
};

Sign epsilon_sign(Sign j, Sign k, Sign p, Sign q);
Sign delta_sign(Sign j, Sign k, Sign p, Sign q);

/// X^{jk}_{pq}: the local gate with (I (x) X^{jk}_{pq}) |p:q} = |j:k}.
LocalOperator x_operator(Sign j, Sign k, Sign p, Sign q);

/// epsilon^{pq}_{++} X^{jk}_{pq}, the gate left on the recipient after a Bell
/// measurement with outcome (p:q) through channel |j:k}.
LocalOperator x_tilde_operator(Sign j, Sign k, Sign p, Sign q);

}  // namespace bellport
