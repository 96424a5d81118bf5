/*
   Copyright 2026 The bistellar authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <vector>

#include "polynomial.hpp"

namespace bistellar {

/// Square matrix of polynomials over one coefficient domain, n <= 8.
class PolyMatrix {
  public:
    PolyMatrix(std::size_t n, Domain d) : n_(n), dom_(d), e_(n * n, Polynomial::zero(d)) {
        if (n == 0 || n > 8) throw input_error("PolyMatrix size must be 1..8");
    }

    std::size_t size() const { return n_; }
    Domain domain() const { return dom_; }

    Polynomial& at(std::size_t r, std::size_t c) { return e_[r * n_ + c]; }
    const Polynomial& at(std::size_t r, std::size_t c) const { return e_[r * n_ + c]; }

    void set(std::size_t r, std::size_t c, Polynomial p) {
        if (p.domain() != dom_) throw input_error("matrix entry domain mismatch");
        e_[r * n_ + c] = std::move(p);
    }

  private:
    std::size_t n_;
    Domain dom_;
    std::vector<Polynomial> e_;
};

namespace detail {

inline Polynomial det_cofactor(const PolyMatrix& m, std::vector<std::size_t> rows,
                               std::vector<std::size_t> cols) {
    const std::size_t n = rows.size();
    if (n == 1) return m.at(rows[0], cols[0]);
    Polynomial acc = Polynomial::zero(m.domain());
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t j = 0; j < n; ++j) {
        const Polynomial& pivot = m.at(rows[0], cols[j]);
        if (pivot.is_zero()) continue;
        std::vector<std::size_t> sub_cols;
        sub_cols.reserve(n - 1);
        for (std::size_t k = 0; k < n; ++k)
            if (k != j) sub_cols.push_back(cols[k]);
        Polynomial minor = det_cofactor(m, sub_rows, sub_cols);
        Polynomial contrib = pivot * minor;
        acc = (j % 2 == 0) ? acc + contrib : acc - contrib;
    }
    return acc;
}

}  // namespace detail

/// Exact symbolic determinant by cofactor expansion along the first row,
/// canonicalizing after every combination.
inline Polynomial determinant(const PolyMatrix& m) {
    std::vector<std::size_t> idx(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) idx[i] = i;
    return detail::det_cofactor(m, idx, idx);
}

/// Exact determinant of a scalar matrix by fraction-free elimination
/// (Bareiss). Entries must share one domain; works over Q and any field.
inline Scalar determinant_scalar(std::vector<std::vector<Scalar>> m) {
    const std::size_t n = m.size();
    if (n == 0) throw input_error("empty matrix");
    const Domain dom = m[0][0].domain();
    for (const auto& row : m) {
        if (row.size() != n) throw input_error("non-square matrix");
        for (const auto& x : row)
            if (x.domain() != dom) throw input_error("matrix entry domain mismatch");
    }
    Scalar prev = Scalar::one(dom);
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t p = k + 1;
            while (p < n && m[p][k].is_zero()) ++p;
            if (p == n) return Scalar::zero(dom);
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
            m[i][k] = Scalar::zero(dom);
        }
        prev = m[k][k];
    }
    Scalar det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

}  // namespace bistellar
