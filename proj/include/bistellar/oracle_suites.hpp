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

#include <cmath>
#include <string>

#include <json.hpp>

#include "checkmove.hpp"
#include "oracle.hpp"
#include "pentagon.hpp"

namespace bistellar {

struct SuiteResult {
    std::string name;
    bool pass = true;
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
    nlohmann::json stats = nlohmann::json::object();

    void fail(const std::string& what) {
        pass = false;
        ++failures;
        if (!stats.contains("first_failure")) stats["first_failure"] = what;
    }

    /// Per-trial residual log, bounded so reports stay small.
    void log_residuals(const std::vector<double>& r) {
        if (r.size() <= 1024) stats["residuals"] = r;
    }
};

/// Five exact-rational points in R^3 have vanishing bordered determinant;
/// five affinely independent points in R^4 have a nonzero one of sign -1.
inline SuiteResult suite_cm(std::uint64_t seed, std::uint64_t trials) {
    SuiteResult r{"cm"};
    RandomSource rng(seed);
    r.trials = trials;
    for (std::uint64_t i = 0; i < trials; ++i) {
        PointConfig flat = random_generic_config(3, 5, rng);
        if (cm_det_exact(flat.squared_distances()) != 0) r.fail("R^3 determinant nonzero");
        PointConfig full = random_generic_config(4, 5, rng);
        Rat d = cm_det_exact(full.squared_distances());
        if (sign_of(d) != -1) r.fail("R^4 determinant sign is not -1");
    }
    r.stats["r3_exact_zero"] = trials - r.failures;
    return r;
}

/// Rational circle quadruples have exactly vanishing unbordered determinant.
inline SuiteResult suite_concyclic(std::uint64_t seed, std::uint64_t trials) {
    SuiteResult r{"concyclic"};
    RandomSource rng(seed);
    r.trials = trials;
    for (std::uint64_t i = 0; i < trials; ++i) {
        std::vector<Rat> params;
        while (params.size() < 4) {
            Rat t = rng.rational();
            if (std::find(params.begin(), params.end(), t) == params.end()) params.push_back(t);
        }
        PointConfig cfg = rational_circle_points(params);
        if (concyclic_det4(cfg.squared_distances()) != 0) r.fail("circle quadruple determinant nonzero");
    }
    return r;
}

/// Rational 5-tuples on the unit sphere in R^3 satisfy the (n+2)-point
/// cocyclicity determinant exactly.
inline SuiteResult suite_berger(std::uint64_t seed, std::uint64_t trials) {
    SuiteResult r{"berger"};
    RandomSource rng(seed);
    r.trials = trials;
    for (std::uint64_t i = 0; i < trials; ++i) {
        std::vector<std::vector<Rat>> params;
        while (params.size() < 5) {
            std::vector<Rat> u = {rng.rational(), rng.rational()};
            if (std::find(params.begin(), params.end(), u) == params.end()) params.push_back(u);
        }
        PointConfig cfg = rational_sphere_points(3, params);
        if (berger_cocyclic(cfg.squared_distances(), 3) != 0) r.fail("sphere 5-tuple determinant nonzero");
    }
    return r;
}

/// Four concyclic points in cyclic order: a*c + b*d - x*y vanishes to 1e-9
/// relative.
inline SuiteResult suite_ptolemy(std::uint64_t seed, std::uint64_t trials) {
    SuiteResult r{"ptolemy"};
    RandomSource rng(seed);
    r.trials = trials;
    double worst = 0;
    for (std::uint64_t i = 0; i < trials; ++i) {
        CyclicQuad q = cyclic_quad_sample(rng);
        double res = ptolemy_residual(q.a, q.b, q.c, q.d, q.e, q.f);
        double scale = std::max({q.a * q.c, q.b * q.d, q.e * q.f});
        double rel = std::fabs(res) / scale;
        worst = std::max(worst, rel);
        if (rel >= 1e-9) r.fail("ptolemy residual above 1e-9 relative");
    }
    r.stats["max_relative_residual"] = worst;
    return r;
}

/// Pentagon completion: all five relations hold. Exhaustive over F_2 / F_4
/// (every tuple with invertible c, f, g); random sampling elsewhere.
inline SuiteResult suite_pentagon(std::uint64_t seed, std::uint64_t trials, Domain field) {
    SuiteResult r{"pentagon"};
    if (field.finite() && field.size() <= 16) {
        const std::uint64_t q = field.size();
        std::uint64_t done = 0;
        std::array<std::uint64_t, 7> v{};
        for (v[0] = 0; v[0] < q; ++v[0])
            for (v[1] = 0; v[1] < q; ++v[1])
                for (v[2] = 1; v[2] < q; ++v[2])
                    for (v[3] = 0; v[3] < q; ++v[3])
                        for (v[4] = 0; v[4] < q; ++v[4])
                            for (v[5] = 1; v[5] < q; ++v[5])
                                for (v[6] = 1; v[6] < q; ++v[6]) {
                                    auto res = pentagon_complete(
                                        Scalar::of(field, v[0]), Scalar::of(field, v[1]),
                                        Scalar::of(field, v[2]), Scalar::of(field, v[3]),
                                        Scalar::of(field, v[4]), Scalar::of(field, v[5]),
                                        Scalar::of(field, v[6]));
                                    if (!res.all_hold()) r.fail("pentagon relation failed");
                                    ++done;
                                }
        r.trials = done;
        r.stats["mode"] = "exhaustive";
        return r;
    }
    RandomSource rng(seed);
    r.trials = trials;
    r.stats["mode"] = "random";
    for (std::uint64_t i = 0; i < trials; ++i) {
        auto pick = [&](bool nonzero) {
            if (!field.finite()) {
                return Scalar::of_rat(nonzero ? rng.rational_nonzero() : rng.rational());
            }
            std::uint64_t q = field.size();
            return Scalar::of(field, nonzero ? 1 + rng.below(q - 1) : rng.below(q));
        };
        auto res = pentagon_complete(pick(false), pick(false), pick(true), pick(false), pick(false),
                                     pick(true), pick(true));
        if (!res.all_hold()) r.fail("pentagon relation failed");
    }
    return r;
}

/// quad_diagonal matches the measured second diagonal of sampled convex
/// cyclic quadrilaterals within 1e-9 relative.
inline SuiteResult suite_quad(std::uint64_t seed, std::uint64_t trials) {
    SuiteResult r{"quad"};
    RandomSource rng(seed);
    r.trials = trials;
    double worst = 0;
    for (std::uint64_t i = 0; i < trials; ++i) {
        CyclicQuad q = cyclic_quad_sample(rng);
        double f = quad_diagonal(q.a, q.b, q.c, q.d, q.e);
        double rel = std::fabs(f - q.f) / q.f;
        worst = std::max(worst, rel);
        if (rel >= 1e-9) r.fail("diagonal mismatch above 1e-9 relative");
    }
    r.stats["max_relative_error"] = worst;
    return r;
}

/// Hyperbolic suites: circle samples have |det| < 1e-8; Lambert residuals
/// below 1e-8; generic samples recorded (minimum |det| over the run).
inline SuiteResult suite_hyperbolic(std::uint64_t seed, std::uint64_t trials) {
    SuiteResult r{"hyperbolic"};
    RandomSource rng(seed);
    r.trials = trials;
    double worst_circle = 0, worst_lambert = 0, min_generic = HUGE_VAL;
    for (std::uint64_t i = 0; i < trials; ++i) {
        double dc = std::fabs(hyperbolic_det4(hyperbolic_circle_sample(rng)));
        worst_circle = std::max(worst_circle, dc);
        if (dc >= 1e-8) r.fail("circle determinant above 1e-8");
        LambertLengths L = lambert_sample(rng);
        auto [r1, r2] = lambert_check(L.oa, L.af, L.ob, L.bf, L.of);
        worst_lambert = std::max({worst_lambert, std::fabs(r1), std::fabs(r2)});
        if (std::fabs(r1) >= 1e-8 || std::fabs(r2) >= 1e-8) r.fail("lambert residual above 1e-8");
        min_generic = std::min(min_generic, std::fabs(hyperbolic_det4(hyperbolic_generic_sample(rng))));
    }
    r.stats["max_circle_det"] = worst_circle;
    r.stats["max_lambert_residual"] = worst_lambert;
    r.stats["min_generic_det"] = min_generic;
    return r;
}

/// Spherical suites: great-circle samples have |det| < 1e-8 and random
/// samples satisfy det <= 1e-8 (the determinant is nonpositive).
inline SuiteResult suite_spherical(std::uint64_t seed, std::uint64_t trials) {
    SuiteResult r{"spherical"};
    RandomSource rng(seed);
    r.trials = trials;
    double worst_circle = 0, max_generic = -HUGE_VAL;
    for (std::uint64_t i = 0; i < trials; ++i) {
        double dc = std::fabs(spherical_det4(spherical_circle_sample(rng)));
        worst_circle = std::max(worst_circle, dc);
        if (dc >= 1e-8) r.fail("great-circle determinant above 1e-8");
        double dg = spherical_det4(spherical_generic_sample(rng));
        max_generic = std::max(max_generic, dg);
        if (dg > 1e-8) r.fail("random sphere determinant above 1e-8");
    }
    r.stats["max_circle_det"] = worst_circle;
    r.stats["max_generic_det"] = max_generic;
    return r;
}

/// Realizable-direction invariance: squared distances of six generic rational
/// points in R^3 annihilate all six pentachoron relations exactly (checked
/// both by evaluating the symbolic system and through the local-realisability
/// determinants), and the matrix passes the exact embeddability test for d=3.
inline SuiteResult suite_invariance(std::uint64_t seed, std::uint64_t trials) {
    SuiteResult r{"invariance"};
    RandomSource rng(seed);
    r.trials = trials;
    const Triangulation sphere4 = boundary_of_simplex(4);  // six pentachora on six vertices
    const RelationSystem sys = cayley_menger_system(sphere4, Domain::rational());
    auto idx = sys.var_index();
    for (std::uint64_t i = 0; i < trials; ++i) {
        PointConfig cfg = random_generic_config(3, 6, rng);
        EdgeLabelling lab = induced_labelling(cfg, sphere4);
        std::map<std::uint32_t, Scalar> assignment;
        for (const auto& [e, v] : lab)
            assignment[idx.at(edge_var_name(e[0], e[1]))] = Scalar::of_rat(v);
        for (const auto& rel : sys.relations)
            if (!rel.evaluate(assignment).is_zero()) r.fail("pentachoron relation nonzero");
        if (!locally_realisable(sphere4, lab, 3, false)) r.fail("labelling not locally 3-realisable");
        if (!menger_realisable(cfg.squared_distances(), 3).realisable)
            r.fail("matrix fails the exact embeddability test");
    }
    r.stats["relations_per_trial"] = sys.relations.size();
    return r;
}

inline nlohmann::json suite_to_json(const SuiteResult& r) {
    nlohmann::json j;
    j["suite"] = r.name;
    j["pass"] = r.pass;
    j["trials"] = r.trials;
    j["failures"] = r.failures;
    j["stats"] = r.stats;
    return j;
}

}  // namespace bistellar
