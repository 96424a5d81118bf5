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

#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polymatrix.hpp"
#include "rational.hpp"
#include "triangulation.hpp"

namespace bistellar {

/// Symmetric hollow matrix of exact squared distances.
class SquaredDistanceMatrix {
  public:
    explicit SquaredDistanceMatrix(std::vector<std::vector<Rat>> m) : m_(std::move(m)) {
        const std::size_t k = m_.size();
        if (k == 0) throw input_error("empty distance matrix");
        for (std::size_t i = 0; i < k; ++i) {
            if (m_[i].size() != k) throw input_error("distance matrix not square");
            if (m_[i][i] != 0) throw input_error("distance matrix not hollow");
            for (std::size_t j = 0; j < i; ++j)
                if (m_[i][j] != m_[j][i]) throw input_error("distance matrix not symmetric");
        }
    }

    std::size_t size() const { return m_.size(); }
    const Rat& at(std::size_t i, std::size_t j) const { return m_[i][j]; }

  private:
    std::vector<std::vector<Rat>> m_;
};

namespace detail {

inline Rat det_rat(std::vector<std::vector<Rat>> m) {
    const std::size_t n = m.size();
    Rat det = 1;
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return Rat(0);
        if (p != c) {
            std::swap(m[p], m[c]);
            sign = -sign;
        }
        det *= m[c][c];
        Rat inv = Rat(1) / m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            Rat f = m[r][c] * inv;
            for (std::size_t cc = c; cc < n; ++cc) m[r][cc] -= f * m[c][cc];
        }
    }
    return sign < 0 ? Rat(-det) : det;
}

inline Rat bordered_det_subset(const SquaredDistanceMatrix& m,
                               const std::vector<std::size_t>& idx) {
    const std::size_t k = idx.size();
    std::vector<std::vector<Rat>> a(k + 1, std::vector<Rat>(k + 1, Rat(0)));
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = 0; c < k; ++c)
            if (r != c) a[r][c] = m.at(idx[r], idx[c]);
        a[r][k] = 1;
        a[k][r] = 1;
    }
    return det_rat(std::move(a));
}

template <typename Fn>
inline bool for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        if (!fn(idx)) return false;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return true;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace detail

/// Bordered Cayley-Menger determinant of the whole matrix: the (k+1)x(k+1)
/// determinant of squared distances bordered by ones with a zero corner.
inline Rat cm_det_exact(const SquaredDistanceMatrix& m) {
    std::vector<std::size_t> idx(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) idx[i] = i;
    return detail::bordered_det_subset(m, idx);
}

struct MengerReport {
    bool realisable = true;
    std::string violation;                  // empty when realisable
    std::vector<std::size_t> subset;        // first violating subset
    Rat value;                              // its bordered determinant
};

/// Menger's embeddability test for R^d: every subset of size k <= d+1 must
/// have bordered determinant of sign (-1)^k or 0, every subset of size d+2
/// must vanish, and when n = d+3 the full determinant must vanish too.
inline MengerReport menger_realisable(const SquaredDistanceMatrix& m, std::size_t d) {
    const std::size_t n = m.size();
    MengerReport rep;
    auto fail = [&](const std::vector<std::size_t>& idx, const Rat& v, const std::string& why) {
        rep.realisable = false;
        rep.subset = idx;
        rep.value = v;
        rep.violation = why;
        return false;
    };
    for (std::size_t k = 2; k <= std::min(n, d + 1); ++k) {
        const int want = (k % 2 == 0) ? 1 : -1;
        bool ok = detail::for_each_subset(n, k, [&](const std::vector<std::size_t>& idx) {
            Rat v = detail::bordered_det_subset(m, idx);
            int s = sign_of(v);
            if (s != 0 && s != want)
                return fail(idx, v, "size-" + std::to_string(k) + " subset has sign " +
                                        std::to_string(s) + ", expected " + std::to_string(want) +
                                        " or 0");
            return true;
        });
        if (!ok) return rep;
    }
    if (n >= d + 2) {
        bool ok = detail::for_each_subset(n, d + 2, [&](const std::vector<std::size_t>& idx) {
            Rat v = detail::bordered_det_subset(m, idx);
            if (v != 0)
                return fail(idx, v, "size-" + std::to_string(d + 2) + " subset determinant nonzero");
            return true;
        });
        if (!ok) return rep;
    }
    if (n == d + 3) {
        std::vector<std::size_t> idx(n);
        for (std::size_t i = 0; i < n; ++i) idx[i] = i;
        Rat v = detail::bordered_det_subset(m, idx);
        if (v != 0) {
            fail(idx, v, "full determinant nonzero at n = d+3");
            return rep;
        }
    }
    return rep;
}

/// Edge labelling by squared lengths, keyed by sorted vertex pairs.
using EdgeLabelling = std::map<VertexTuple, Rat>;

/// A labelling is locally d-realisable when every k-face with k <= d has
/// bordered determinant of sign (-1)^{k+1} or 0 and every (d+1)-face
/// vanishes. Non-degenerate mode demands the strict sign for 2 <= k <= d.
inline bool locally_realisable(const Triangulation& t, const EdgeLabelling& labelling,
                               std::size_t d = 3, bool nondegenerate = false) {
    require_structure(t);
    for (const auto& e : faces_of_dim(t, 1))
        if (!labelling.count(e))
            throw input_error("missing edge label (" + std::to_string(e[0]) + "," +
                              std::to_string(e[1]) + ")");
    auto face_det = [&](const VertexTuple& f) {
        const std::size_t k = f.size();
        std::vector<std::vector<Rat>> a(k + 1, std::vector<Rat>(k + 1, Rat(0)));
        for (std::size_t r = 0; r < k; ++r) {
            for (std::size_t c = 0; c < k; ++c)
                if (r != c)
                    a[r][c] = labelling.at({std::min(f[r], f[c]), std::max(f[r], f[c])});
            a[r][k] = 1;
            a[k][r] = 1;
        }
        return detail::det_rat(std::move(a));
    };
    for (std::size_t k = 1; k <= std::min<std::size_t>(d, static_cast<std::size_t>(t.dim)); ++k) {
        const int want = (k % 2 == 0) ? -1 : 1;  // (-1)^{k+1}
        for (const auto& f : faces_of_dim(t, static_cast<int>(k))) {
            int s = sign_of(face_det(f));
            if (s != 0 && s != want) return false;
            if (nondegenerate && k >= 2 && s == 0) return false;
        }
    }
    if (static_cast<std::size_t>(t.dim) >= d + 1)
        for (const auto& f : faces_of_dim(t, static_cast<int>(d) + 1))
            if (face_det(f) != 0) return false;
    return true;
}

/// Unbordered 4x4 determinant of squared distances; zero exactly when the
/// four plane points are concyclic or collinear.
inline Rat concyclic_det4(const SquaredDistanceMatrix& m) {
    if (m.size() != 4) throw input_error("concyclic_det4 needs a 4x4 matrix");
    std::vector<std::vector<Rat>> a(4, std::vector<Rat>(4, Rat(0)));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (i != j) a[i][j] = m.at(i, j);
    return detail::det_rat(std::move(a));
}

/// Unbordered (n+2)x(n+2) determinant; zero exactly when n+2 points of
/// n-space lie on one (n-1)-sphere or hyperplane. n=2 is concyclic_det4.
inline Rat berger_cocyclic(const SquaredDistanceMatrix& m, std::size_t n) {
    if (m.size() != n + 2)
        throw input_error("berger criterion needs n+2 points, got " + std::to_string(m.size()));
    std::vector<std::vector<Rat>> a(m.size(), std::vector<Rat>(m.size(), Rat(0)));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            if (i != j) a[i][j] = m.at(i, j);
    return detail::det_rat(std::move(a));
}

// --- Floating-point consistency conditions ---

namespace detail {

inline double det4_double(const std::array<std::array<double, 4>, 4>& m) {
    double det = 0;
    for (int p0 = 0; p0 < 4; ++p0) {
        for (int p1 = 0; p1 < 4; ++p1) {
            if (p1 == p0) continue;
            for (int p2 = 0; p2 < 4; ++p2) {
                if (p2 == p0 || p2 == p1) continue;
                int p3 = 6 - p0 - p1 - p2;
                int inv = (p0 > p1) + (p0 > p2) + (p0 > p3) + (p1 > p2) + (p1 > p3) + (p2 > p3);
                double t = m[0][p0] * m[1][p1] * m[2][p2] * m[3][p3];
                det += (inv % 2 == 0) ? t : -t;
            }
        }
    }
    return det;
}

}  // namespace detail

/// Ptolemy defect for four points in cyclic order with sides a,b,c,d and
/// diagonals x = P1P3, y = P2P4:  a*c + b*d - x*y.
inline double ptolemy_residual(double a, double b, double c, double d, double x, double y) {
    return a * c + b * d - x * y;
}

/// 4x4 determinant of sinh^2(d_ij / 2); about zero for four points on a
/// hyperbolic circle (or line, horocycle, equidistant branch), curvature -1.
inline double hyperbolic_det4(const std::array<std::array<double, 4>, 4>& dist) {
    std::array<std::array<double, 4>, 4> m{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double s = std::sinh(dist[i][j] / 2.0);
            m[i][j] = i == j ? 0.0 : s * s;
        }
    return detail::det4_double(m);
}

/// 4x4 determinant of sin^2(d_ij / (2 rho)) on the sphere of radius rho;
/// nonpositive, and about zero on a great circle.
inline double spherical_det4(const std::array<std::array<double, 4>, 4>& dist, double rho = 1.0) {
    if (rho <= 0) throw input_error("sphere radius must be positive");
    std::array<std::array<double, 4>, 4> m{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double s = std::sin(dist[i][j] / (2.0 * rho));
            m[i][j] = i == j ? 0.0 : s * s;
        }
    return detail::det4_double(m);
}

/// Second diagonal of a Euclidean quadrilateral with sides a,b,c,d in order
/// and diagonal e separating triangles (a,b,e) and (c,d,e). Convex branch
/// (positive square root). Throws on e = 0 or a negative Heron radicand.
inline double quad_diagonal(double a, double b, double c, double d, double e) {
    if (e <= 0) throw input_error("diagonal e must be positive");
    const double a2 = a * a, b2 = b * b, c2 = c * c, d2 = d * d, e2 = e * e;
    const double r1 = 4 * a2 * b2 - (a2 + b2 - e2) * (a2 + b2 - e2);
    const double r2 = 4 * c2 * d2 - (c2 + d2 - e2) * (c2 + d2 - e2);
    if (r1 < 0 || r2 < 0) throw input_error("non-realizable quadrilateral: negative radicand");
    const double twof2 = a2 + b2 + c2 + d2 - e2 + (a2 - b2) * (c2 - d2) / e2 + std::sqrt(r1 * r2) / e2;
    if (twof2 < 0) throw input_error("non-realizable quadrilateral: negative diagonal square");
    return std::sqrt(twof2 / 2.0);
}

/// Residuals of the two Lambert quadrilateral identities
/// (cosh OF - cosh OA cosh AF, cosh OF - cosh OB cosh BF).
inline std::pair<double, double> lambert_check(double oa, double af, double ob, double bf,
                                               double of) {
    return {std::cosh(of) - std::cosh(oa) * std::cosh(af),
            std::cosh(of) - std::cosh(ob) * std::cosh(bf)};
}

}  // namespace bistellar
