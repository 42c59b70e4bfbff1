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

#include "bellport/algebra.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace bellport {

std::ostream& operator<<(std::ostream& out, Sign s) { return out << to_char(s); }

char to_char(Sign s) { return s.is_plus() ? '+' : '-'; }

LocalOperator::LocalOperator(Eigen::MatrixXcd matrix) : matrix_(std::move(matrix)) {
    if (matrix_.rows() != matrix_.cols() || matrix_.rows() < 1) {
        throw std::invalid_argument("LocalOperator must be a non-empty square matrix");
    }
}

LocalOperator LocalOperator::identity(int dim) {
    if (dim < 1) {
        throw std::invalid_argument("LocalOperator dimension must be positive");
    }
    return LocalOperator(Eigen::MatrixXcd::Identity(dim, dim));
}

LocalOperator LocalOperator::adjoint() const { return LocalOperator(matrix_.adjoint()); }

LocalOperator LocalOperator::operator*(const LocalOperator& rhs) const {
    if (dim() != rhs.dim()) {
        throw std::invalid_argument("LocalOperator dimension mismatch in product");
    }
    return LocalOperator(matrix_ * rhs.matrix_);
}

LocalOperator LocalOperator::operator*(Complex scale) const { return LocalOperator(matrix_ * scale); }

LocalOperator LocalOperator::operator-() const { return LocalOperator(-matrix_); }

LocalOperator LocalOperator::operator+(const LocalOperator& rhs) const {
    if (dim() != rhs.dim()) {
        throw std::invalid_argument("LocalOperator dimension mismatch in sum");
    }
    return LocalOperator(matrix_ + rhs.matrix_);
}

bool LocalOperator::operator==(const LocalOperator& rhs) const {
    return dim() == rhs.dim() && matrix_ == rhs.matrix_;
}

double LocalOperator::max_abs_diff(const LocalOperator& rhs) const {
    if (dim() != rhs.dim()) {
        return std::numeric_limits<double>::infinity();
    }
    return (matrix_ - rhs.matrix_).cwiseAbs().maxCoeff();
}

bool LocalOperator::is_unitary(double tol) const {
    const Eigen::MatrixXcd gram = matrix_ * matrix_.adjoint();
    return (gram - Eigen::MatrixXcd::Identity(dim(), dim())).cwiseAbs().maxCoeff() <= tol;
}

std::ostream& operator<<(std::ostream& out, const LocalOperator& op) {
    out << '[';
    for (int r = 0; r < op.dim(); ++r) {
        out << (r ? "; " : "");
        for (int c = 0; c < op.dim(); ++c) {
            const Complex z = op(r, c);
            out << (c ? ", " : "") << z.real();
            if (z.imag() != 0.0) {
                out << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << 'i';
            }
        }
    }
    return out << ']';
}

LocalOperator u_matrix(int index) {
    Eigen::Matrix2cd m;
    switch (index) {
        case 0:
            m << 1, 0, 0, 1;
            break;
        case 1:
            m << 0, 1, 1, 0;
            break;
        case 2:
            m << 1, 0, 0, -1;
            break;
        case 3:
            m << 0, -1, 1, 0;
            break;
        default:
            throw std::invalid_argument("u_matrix index must be in 0..3, got " + std::to_string(index));
    }
    return LocalOperator(m);
}

namespace {

struct XEntry {
    int j, k, p, q;
    int u;
    int sign;
};

// X^{jk}_{pq} for p,q not equal to j,k, as listed: each row gives the U index
// and its sign. The four diagonal entries X^{jk}_{jk} = U^0 are added below.
constexpr std::array<XEntry, 12> kXTable = {{
    {+1, -1, +1, +1, 1, +1},
    {+1, +1, +1, -1, 1, +1},
    {-1, +1, -1, -1, 1, +1},
    {-1, -1, -1, +1, 1, +1},
    {-1, +1, +1, +1, 2, +1},
    {+1, +1, -1, +1, 2, +1},
    {+1, -1, -1, -1, 2, -1},
    {-1, -1, +1, -1, 2, -1},
    {-1, -1, +1, +1, 3, +1},
    {+1, -1, -1, +1, 3, +1},
    {+1, +1, -1, -1, 3, -1},
    {-1, +1, +1, -1, 3, -1},
}};

}  // namespace

SignTables::SignTables() {
    for (Sign j : kSigns) {
        for (Sign k : kSigns) {
            for (Sign p : kSigns) {
                for (Sign q : kSigns) {
                    const int i = index(j, k, p, q);
                    epsilon_[i] = (j != p && k != q) ? kMinus : kPlus;
                    if (j == p && k == q) {
                        u_index_[i] = 0;
                        delta_[i] = kPlus;
                    }
                }
            }
        }
    }
    for (const XEntry& e : kXTable) {
        const Sign j(e.j), k(e.k), p(e.p), q(e.q);
        const int i = index(j, k, p, q);
        // (U^1)^nu(kq) (U^2)^nu(jp) is U^{nu(kq) + 2 nu(jp)} exactly, since U^1 U^2 = U^3.
        const int expected_u = nu_parity(k * q) + 2 * nu_parity(j * p);
        if (expected_u != e.u) {
            throw std::logic_error("X table entry disagrees with its (U^1)^a (U^2)^b factorization");
        }
        u_index_[i] = e.u;
        delta_[i] = Sign(e.sign);
    }
}

const SignTables& SignTables::instance() {
    static const SignTables tables;
    return tables;
}

Sign epsilon_sign(Sign j, Sign k, Sign p, Sign q) { return SignTables::instance().epsilon(j, k, p, q); }

Sign delta_sign(Sign j, Sign k, Sign p, Sign q) { return SignTables::instance().delta(j, k, p, q); }

LocalOperator x_operator(Sign j, Sign k, Sign p, Sign q) {
    const auto& t = SignTables::instance();
    const LocalOperator flips = nu_parity(k * q) ? u_matrix(1) : u_matrix(0);
    const LocalOperator phases = nu_parity(j * p) ? u_matrix(2) : u_matrix(0);
    return flips * phases * Complex(t.delta(j, k, p, q).value());
}

LocalOperator x_tilde_operator(Sign j, Sign k, Sign p, Sign q) {
    return x_operator(j, k, p, q) * Complex(epsilon_sign(p, q, kPlus, kPlus).value());
}

}  // namespace bellport
