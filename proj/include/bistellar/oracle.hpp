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
#include <vector>

#include "pointconfig.hpp"
#include "random.hpp"

namespace bistellar {

namespace detail {

/// Affine independence of d+1 rational points in R^d via an exact d x d
/// difference determinant.
inline bool affinely_independent(const std::vector<const std::vector<Rat>*>& pts, int dim) {
    std::vector<std::vector<Rat>> m;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        std::vector<Rat> row;
        for (int c = 0; c < dim; ++c)
            row.push_back((*pts[i])[static_cast<std::size_t>(c)] -
                          (*pts[0])[static_cast<std::size_t>(c)]);
        m.push_back(std::move(row));
    }
    return det_rat(std::move(m)) != 0;
}

}  // namespace detail

/// k random rational points in R^d with every (d+1)-subset affinely
/// independent; degenerate samples are rejected and redrawn. Numerators lie
/// in [-64, 64] and denominators in [1, 16].
inline PointConfig random_generic_config(int d, std::size_t k, RandomSource& rng) {
    if (d < 1 || k < 1) throw input_error("need d >= 1 and k >= 1");
    for (;;) {
        PointConfig cfg;
        cfg.dim = d;
        for (std::size_t i = 0; i < k; ++i) {
            std::vector<Rat> p;
            for (int c = 0; c < d; ++c) p.push_back(rng.rational());
            cfg.points.push_back(std::move(p));
        }
        bool generic = true;
        const std::size_t m = static_cast<std::size_t>(d) + 1;
        if (k >= m) {
            generic = detail::for_each_subset(k, m, [&](const std::vector<std::size_t>& idx) {
                std::vector<const std::vector<Rat>*> pts;
                for (auto i : idx) pts.push_back(&cfg.points[i]);
                return detail::affinely_independent(pts, d);
            });
        }
        if (generic) return cfg;
    }
}

inline PointConfig random_generic_config(int d, std::size_t k, std::uint64_t seed) {
    RandomSource rng(seed);
    return random_generic_config(d, k, rng);
}

/// Rational points ((1-t^2)/(1+t^2), 2t/(1+t^2)) on the unit circle.
inline PointConfig rational_circle_points(const std::vector<Rat>& params) {
    for (std::size_t i = 0; i < params.size(); ++i)
        for (std::size_t j = i + 1; j < params.size(); ++j)
            if (params[i] == params[j]) throw input_error("duplicate circle parameters");
    PointConfig cfg;
    cfg.dim = 2;
    for (const Rat& t : params) {
        Rat den = 1 + t * t;
        cfg.points.push_back({(1 - t * t) / den, 2 * t / den});
    }
    return cfg;
}

/// Rational points on the unit (n-1)-sphere in R^n by inverse stereographic
/// projection of parameters u in Q^{n-1}:
///   P = ((1-|u|^2)/(1+|u|^2), 2u/(1+|u|^2)).
/// The zero parameter maps to the pole (1, 0, ..., 0); n=2 reduces to
/// rational_circle_points.
inline PointConfig rational_sphere_points(int n, const std::vector<std::vector<Rat>>& params) {
    if (n < 2) throw input_error("sphere dimension n must be >= 2");
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (params[i].size() != static_cast<std::size_t>(n) - 1)
            throw input_error("stereographic parameter arity must be n-1");
        for (std::size_t j = i + 1; j < params.size(); ++j)
            if (params[i] == params[j]) throw input_error("duplicate sphere parameters");
    }
    PointConfig cfg;
    cfg.dim = n;
    for (const auto& u : params) {
        Rat s = 0;
        for (const Rat& c : u) s += c * c;
        Rat den = 1 + s;
        std::vector<Rat> p;
        p.push_back((1 - s) / den);
        for (const Rat& c : u) p.push_back(2 * c / den);
        cfg.points.push_back(std::move(p));
    }
    return cfg;
}

// --- Floating hyperbolic / spherical samplers (hyperboloid model) ---

namespace detail {

using HPoint = std::array<double, 3>;  // x0^2 - x1^2 - x2^2 = 1, x0 > 0

inline double lorentz(const HPoint& a, const HPoint& b) {
    return a[0] * b[0] - a[1] * b[1] - a[2] * b[2];
}

inline double hyp_dist(const HPoint& a, const HPoint& b) {
    return std::acosh(std::max(1.0, lorentz(a, b)));
}

inline std::array<std::array<double, 4>, 4> pairwise_hyp(const std::array<HPoint, 4>& pts) {
    std::array<std::array<double, 4>, 4> d{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) d[i][j] = i == j ? 0.0 : hyp_dist(pts[i], pts[j]);
    return d;
}

}  // namespace detail

/// Four points at hyperbolic distance r from a common center: their
/// sinh^2(d/2) determinant vanishes up to rounding.
inline std::array<std::array<double, 4>, 4> hyperbolic_circle_sample(RandomSource& rng) {
    const double r = rng.uniform(0.3, 1.5);
    std::array<detail::HPoint, 4> pts;
    for (int i = 0; i < 4; ++i) {
        double th = rng.uniform(0, 2 * M_PI);
        pts[static_cast<std::size_t>(i)] = {std::cosh(r), std::sinh(r) * std::cos(th),
                                            std::sinh(r) * std::sin(th)};
    }
    return detail::pairwise_hyp(pts);
}

/// Four unconstrained hyperbolic points.
inline std::array<std::array<double, 4>, 4> hyperbolic_generic_sample(RandomSource& rng) {
    std::array<detail::HPoint, 4> pts;
    for (int i = 0; i < 4; ++i) {
        double rho = rng.uniform(0.2, 1.5), th = rng.uniform(0, 2 * M_PI);
        pts[static_cast<std::size_t>(i)] = {std::cosh(rho), std::sinh(rho) * std::cos(th),
                                            std::sinh(rho) * std::sin(th)};
    }
    return detail::pairwise_hyp(pts);
}

struct LambertLengths {
    double oa, af, ob, bf, of;
};

/// Constructs a Lambert quadrilateral O-A-F-B (right angles at O, A, B) by
/// intersecting the perpendicular geodesics erected at A on OA and at B on
/// OB; returns the measured side and diagonal lengths.
inline LambertLengths lambert_sample(RandomSource& rng) {
    for (;;) {
        const double p = rng.uniform(0.15, 0.8);
        const double q = rng.uniform(0.15, 0.8);
        const double tp = std::tanh(p) * std::cosh(q);
        if (tp >= 0.98) continue;  // perpendiculars would not meet
        const double s = std::atanh(tp);
        detail::HPoint O{1, 0, 0};
        detail::HPoint A{std::cosh(p), std::sinh(p), 0};
        detail::HPoint B{std::cosh(q), 0, std::sinh(q)};
        detail::HPoint F{std::cosh(q) * std::cosh(s), std::sinh(s), std::sinh(q) * std::cosh(s)};
        return {detail::hyp_dist(O, A), detail::hyp_dist(A, F), detail::hyp_dist(O, B),
                detail::hyp_dist(B, F), detail::hyp_dist(O, F)};
    }
}

/// Four points on a great circle of the unit sphere.
inline std::array<std::array<double, 4>, 4> spherical_circle_sample(RandomSource& rng) {
    std::array<std::array<double, 3>, 4> pts;
    for (int i = 0; i < 4; ++i) {
        double th = rng.uniform(0, 2 * M_PI);
        pts[static_cast<std::size_t>(i)] = {std::cos(th), std::sin(th), 0.0};
    }
    std::array<std::array<double, 4>, 4> d{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double dot = 0;
            for (int c = 0; c < 3; ++c)
                dot += pts[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] *
                       pts[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)];
            d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                i == j ? 0.0 : std::acos(std::clamp(dot, -1.0, 1.0));
        }
    return d;
}

/// Four uniform points on the unit sphere (geodesic distances).
inline std::array<std::array<double, 4>, 4> spherical_generic_sample(RandomSource& rng) {
    std::array<std::array<double, 3>, 4> pts;
    for (int i = 0; i < 4; ++i) {
        double z = rng.uniform(-1, 1), phi = rng.uniform(0, 2 * M_PI);
        double r = std::sqrt(std::max(0.0, 1 - z * z));
        pts[static_cast<std::size_t>(i)] = {r * std::cos(phi), r * std::sin(phi), z};
    }
    std::array<std::array<double, 4>, 4> d{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double dot = 0;
            for (int c = 0; c < 3; ++c)
                dot += pts[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] *
                       pts[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)];
            d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                i == j ? 0.0 : std::acos(std::clamp(dot, -1.0, 1.0));
        }
    return d;
}

struct CyclicQuad {
    double a, b, c, d;  // sides in order
    double e, f;        // diagonals P1P3, P2P4
};

/// Convex quadrilateral inscribed in a random circle, vertices in cyclic
/// order with a minimum angular gap.
inline CyclicQuad cyclic_quad_sample(RandomSource& rng) {
    for (;;) {
        std::array<double, 4> th;
        for (auto& t : th) t = rng.uniform(0, 2 * M_PI);
        std::sort(th.begin(), th.end());
        double min_gap = 2 * M_PI - (th[3] - th[0]);
        for (int i = 0; i < 3; ++i)
            min_gap = std::min(min_gap, th[static_cast<std::size_t>(i) + 1] - th[static_cast<std::size_t>(i)]);
        if (min_gap < 0.05) continue;
        const double R = rng.uniform(0.5, 2.0);
        auto chord = [&](double u, double v) { return 2 * R * std::fabs(std::sin((u - v) / 2)); };
        return {chord(th[0], th[1]), chord(th[1], th[2]), chord(th[2], th[3]), chord(th[3], th[0]),
                chord(th[0], th[2]), chord(th[1], th[3])};
    }
}

}  // namespace bistellar
