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

// Brute-force reference implementations built from dense matrices. They share
// no code with the library beyond the PureState container.

#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <tuple>
#include <vector>

#include <Eigen/Dense>

#include "bellport/statevector.hpp"

namespace oracle {

using C = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline Vec vec(const bellport::PureState& s) {
    Vec v(static_cast<Eigen::Index>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i) {
        v(static_cast<Eigen::Index>(i)) = s.amplitude(i);
    }
    return v;
}

inline Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

inline Vec kron(const Vec& a, const Vec& b) {
    Vec out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        out.segment(i * b.size(), b.size()) = a(i) * b;
    }
    return out;
}

/// I (x) ... (x) op (x) ... (x) I with op on `site` of `n` sites.
inline Mat embed(const Mat& op, int site, int n) {
    const auto d = op.rows();
    Mat out = Mat::Identity(1, 1);
    for (int s = 0; s < n; ++s) {
        out = kron(out, s == site ? op : Mat(Mat::Identity(d, d)));
    }
    return out;
}

inline Mat u(int i) {
    Mat m(2, 2);
    switch (i) {
        case 0:
            m << 1, 0, 0, 1;
            break;
        case 1:
            m << 0, 1, 1, 0;
            break;
        case 2:
            m << 1, 0, 0, -1;
            break;
        default:
            m << 0, -1, 1, 0;
            break;
    }
    return m;
}

/// (|+,k> + j|-,-k>)/sqrt(2) written out from the definition.
inline Vec bell(int j, int k) {
    Vec v = Vec::Zero(4);
    const int kb = k == 1 ? 0 : 1;
    v(kb) = 1.0 / std::numbers::sqrt2;
    v(2 + (1 - kb)) = static_cast<double>(j) / std::numbers::sqrt2;
    return v;
}

/// The X^{jk}_{pq} relations as a literal lookup table: (U index, sign).
inline std::pair<int, int> x_entry(int j, int k, int p, int q) {
    using Key = std::tuple<int, int, int, int>;
    static const std::map<Key, std::pair<int, int>> table = [] {
        std::map<Key, std::pair<int, int>> t;
        for (int a : {1, -1}) {
            for (int b : {1, -1}) {
                t[{a, b, a, b}] = {0, 1};
            }
        }
        t[{1, -1, 1, 1}] = {1, 1};
        t[{1, 1, 1, -1}] = {1, 1};
        t[{-1, 1, -1, -1}] = {1, 1};
        t[{-1, -1, -1, 1}] = {1, 1};
        t[{-1, 1, 1, 1}] = {2, 1};
        t[{1, 1, -1, 1}] = {2, 1};
        t[{1, -1, -1, -1}] = {2, -1};
        t[{-1, -1, 1, -1}] = {2, -1};
        t[{-1, -1, 1, 1}] = {3, 1};
        t[{1, -1, -1, 1}] = {3, 1};
        t[{1, 1, -1, -1}] = {3, -1};
        t[{-1, 1, 1, -1}] = {3, -1};
        return t;
    }();
    return table.at({j, k, p, q});
}

inline Mat x(int j, int k, int p, int q) {
    const auto [idx, sign] = x_entry(j, k, p, q);
    return static_cast<double>(sign) * u(idx);
}

inline int eps(int j, int k, int p, int q) { return (j != p && k != q) ? -1 : 1; }

inline Mat x_tilde(int j, int k, int p, int q) { return static_cast<double>(eps(p, q, 1, 1)) * x(j, k, p, q); }

/// Fidelity |<a|b>|^2 for unit vectors.
inline double fid(const Vec& a, const Vec& b) { return std::norm(a.dot(b)); }

/// U^alpha on every site.
inline Mat upsilon(int alpha, int n) {
    Mat out = Mat::Identity(1, 1);
    for (int s = 0; s < n; ++s) {
        out = kron(out, u(alpha));
    }
    return out;
}

inline double expect(const Mat& op, const Vec& v) { return v.dot(op * v).real(); }

}  // namespace oracle
