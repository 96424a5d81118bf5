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

#include <catch_amalgamated.hpp>

#include <bistellar/distgeom.hpp>
#include <bistellar/oracle.hpp>
#include <bistellar/pentagon.hpp>

using namespace bistellar;

namespace {

SquaredDistanceMatrix all_equal(std::size_t k, const Rat& v) {
    std::vector<std::vector<Rat>> m(k, std::vector<Rat>(k, v));
    for (std::size_t i = 0; i < k; ++i) m[i][i] = 0;
    return SquaredDistanceMatrix(std::move(m));
}

SquaredDistanceMatrix from_points(const std::vector<std::vector<Rat>>& pts) {
    PointConfig cfg;
    cfg.dim = static_cast<int>(pts[0].size());
    cfg.points = pts;
    return cfg.squared_distances();
}

}  // namespace

TEST_CASE("bordered determinant reference values") {
    CHECK(cm_det_exact(all_equal(2, Rat(1))) == 2);
    CHECK(cm_det_exact(all_equal(3, Rat(1))) == -3);
    CHECK(cm_det_exact(all_equal(4, Rat(1))) == 4);   // unit regular tetrahedron
    CHECK(cm_det_exact(all_equal(5, Rat(1))) == -5);  // regular 4-simplex
    // five points of R^3 always vanish
    CHECK(cm_det_exact(from_points({{Rat(0), Rat(0), Rat(0)},
                                    {Rat(1), Rat(0), Rat(0)},
                                    {Rat(0), Rat(1), Rat(0)},
                                    {Rat(0), Rat(0), Rat(1)},
                                    {Rat(1), Rat(1), Rat(1)}})) == 0);
}

TEST_CASE("distance matrix invariants are checked") {
    std::vector<std::vector<Rat>> bad = {{Rat(0), Rat(1)}, {Rat(2), Rat(0)}};
    CHECK_THROWS_AS(SquaredDistanceMatrix(bad), input_error);
    std::vector<std::vector<Rat>> diag = {{Rat(1), Rat(1)}, {Rat(1), Rat(0)}};
    CHECK_THROWS_AS(SquaredDistanceMatrix(diag), input_error);
}

TEST_CASE("menger embeddability") {
    auto tetra = all_equal(4, Rat(1));
    CHECK(menger_realisable(tetra, 3).realisable);
    auto rep = menger_realisable(tetra, 2);
    CHECK_FALSE(rep.realisable);
    CHECK(rep.subset.size() == 4);
    CHECK(rep.value == 4);

    // squared sides (100, 1, 1): triangle inequality fails, size-3 sign flips
    std::vector<std::vector<Rat>> tri = {{Rat(0), Rat(100), Rat(1)},
                                         {Rat(100), Rat(0), Rat(1)},
                                         {Rat(1), Rat(1), Rat(0)}};
    auto rep2 = menger_realisable(SquaredDistanceMatrix(tri), 3);
    CHECK_FALSE(rep2.realisable);
    CHECK(rep2.subset.size() == 3);
    CHECK(sign_of(rep2.value) == 1);

    RandomSource rng(5);
    for (int i = 0; i < 25; ++i) {
        PointConfig cfg = random_generic_config(3, 6, rng);
        CHECK(menger_realisable(cfg.squared_distances(), 3).realisable);
    }
}

TEST_CASE("locally realisable labellings") {
    Triangulation sphere4 = boundary_of_simplex(4);
    RandomSource rng(9);
    PointConfig cfg = random_generic_config(3, 6, rng);
    EdgeLabelling lab = induced_labelling(cfg, sphere4);
    CHECK(locally_realisable(sphere4, lab, 3, false));
    CHECK(locally_realisable(sphere4, lab, 3, true));

    EdgeLabelling zeros;
    for (const auto& e : faces_of_dim(sphere4, 1)) zeros[e] = 0;
    CHECK(locally_realisable(sphere4, zeros, 3, false));
    CHECK_FALSE(locally_realisable(sphere4, zeros, 3, true));

    EdgeLabelling missing = lab;
    missing.erase(missing.begin());
    CHECK_THROWS_AS(locally_realisable(sphere4, missing, 3, false), input_error);

    // a repeated point keeps the degenerate branch realisable but not the
    // non-degenerate one
    PointConfig degenerate = cfg;
    degenerate.points[1] = degenerate.points[0];
    EdgeLabelling lab2 = induced_labelling(degenerate, sphere4);
    CHECK(lab2.at({0, 1}) == 0);
    CHECK_FALSE(locally_realisable(sphere4, lab2, 3, true));
}

TEST_CASE("concyclicity determinants") {
    // unit square: sides 1, diagonals 2 (squared)
    std::vector<std::vector<Rat>> square = {{Rat(0), Rat(1), Rat(2), Rat(1)},
                                            {Rat(1), Rat(0), Rat(1), Rat(2)},
                                            {Rat(2), Rat(1), Rat(0), Rat(1)},
                                            {Rat(1), Rat(2), Rat(1), Rat(0)}};
    CHECK(concyclic_det4(SquaredDistanceMatrix(square)) == 0);

    PointConfig circle = rational_circle_points({Rat(0), Rat(1), Rat(-1), Rat(2)});
    CHECK(concyclic_det4(circle.squared_distances()) == 0);

    auto off = from_points({{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(2), Rat(0)}, {Rat(0), Rat(1)}});
    CHECK(concyclic_det4(off) == -16);
    CHECK_THROWS_AS(concyclic_det4(all_equal(5, Rat(1))), input_error);
}

TEST_CASE("berger criterion") {
    PointConfig circle = rational_circle_points({Rat(0), Rat(1), Rat(-1), Rat(2)});
    CHECK(berger_cocyclic(circle.squared_distances(), 2) ==
          concyclic_det4(circle.squared_distances()));

    PointConfig sphere = rational_sphere_points(
        3, {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1), Rat(1)}, {Rat(2), Rat(-1)}});
    CHECK(berger_cocyclic(sphere.squared_distances(), 3) == 0);

    RandomSource rng(21);
    PointConfig generic = random_generic_config(3, 5, rng);
    CHECK(berger_cocyclic(generic.squared_distances(), 3) != 0);
    CHECK_THROWS_AS(berger_cocyclic(generic.squared_distances(), 2), input_error);
}

TEST_CASE("ptolemy residual") {
    const double s2 = std::sqrt(2.0);
    CHECK(std::fabs(ptolemy_residual(1, 1, 1, 1, s2, s2)) < 1e-12);
    // (0,0),(1,0),(1,1),(0,2): not cyclic in this order
    const double a = 1, b = 1, c = std::sqrt(2.0), d = 2;
    const double x = s2, y = std::sqrt(4.0 + 1.0) /* (1,0)-(0,2) */;
    CHECK(std::fabs(ptolemy_residual(a, b, c, d, x, y)) > 1e-3);
}

TEST_CASE("hyperbolic determinant") {
    std::array<std::array<double, 4>, 4> zeros{};
    CHECK(hyperbolic_det4(zeros) == 0.0);
    RandomSource rng(12);
    for (int i = 0; i < 100; ++i)
        CHECK(std::fabs(hyperbolic_det4(hyperbolic_circle_sample(rng))) < 1e-8);
    // fixed-seed generic samples stay away from zero
    RandomSource rng2(0);
    double min_abs = HUGE_VAL;
    for (int i = 0; i < 100; ++i)
        min_abs = std::min(min_abs, std::fabs(hyperbolic_det4(hyperbolic_generic_sample(rng2))));
    CHECK(min_abs > 1e-9);
}

TEST_CASE("spherical determinant") {
    std::array<std::array<double, 4>, 4> zeros{};
    CHECK(spherical_det4(zeros) == 0.0);
    RandomSource rng(13);
    for (int i = 0; i < 100; ++i) {
        CHECK(std::fabs(spherical_det4(spherical_circle_sample(rng))) < 1e-8);
        CHECK(spherical_det4(spherical_generic_sample(rng)) <= 1e-8);
    }
    CHECK_THROWS_AS(spherical_det4(zeros, 0.0), input_error);
    // radius scaling: doubling the radius with doubled distances is neutral
    RandomSource rng2(14);
    auto d = spherical_generic_sample(rng2);
    auto d2 = d;
    for (auto& row : d2)
        for (auto& v : row) v *= 2;
    CHECK(spherical_det4(d2, 2.0) == Catch::Approx(spherical_det4(d, 1.0)));
}

TEST_CASE("quadrilateral diagonal") {
    CHECK(quad_diagonal(1, 1, 1, 1, std::sqrt(2.0)) == Catch::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(quad_diagonal(1, 2, 1, 2, std::sqrt(5.0)) == Catch::Approx(std::sqrt(5.0)).epsilon(1e-12));
    RandomSource rng(77);
    for (int i = 0; i < 200; ++i) {
        CyclicQuad q = cyclic_quad_sample(rng);
        CHECK(std::fabs(quad_diagonal(q.a, q.b, q.c, q.d, q.e) - q.f) / q.f < 1e-9);
    }
    CHECK_THROWS_AS(quad_diagonal(1, 1, 1, 1, 0), input_error);
    CHECK_THROWS_AS(quad_diagonal(1, 1, 1, 1, 3), input_error);  // (1,1,3) is no triangle
}

TEST_CASE("lambert quadrilateral identities") {
    auto [z1, z2] = lambert_check(0, 0, 0, 0, 0);
    CHECK(z1 == 0.0);
    CHECK(z2 == 0.0);
    RandomSource rng(8);
    for (int i = 0; i < 200; ++i) {
        LambertLengths L = lambert_sample(rng);
        auto [r1, r2] = lambert_check(L.oa, L.af, L.ob, L.bf, L.of);
        CHECK(std::fabs(r1) < 1e-8);
        CHECK(std::fabs(r2) < 1e-8);
    }
    auto [w1, w2] = lambert_check(0.5, 0.7, 0.4, 0.9, 0.2);
    CHECK(std::fabs(w1) > 1e-3);
    CHECK(std::fabs(w2) > 1e-3);
}

TEST_CASE("pentagon completion over Q") {
    Domain q = Domain::rational();
    auto res = pentagon_complete(Scalar::of_rat(Rat(1)), Scalar::of_rat(Rat(2)),
                                 Scalar::of_rat(Rat(3)), Scalar::of_rat(Rat(4)),
                                 Scalar::of_rat(Rat(5)), Scalar::of_rat(Rat(6)),
                                 Scalar::of_rat(Rat(7)));
    CHECK(res.j == Scalar::of_rat(Rat(43, 6)));
    CHECK(res.k == Scalar::of_rat(Rat(15, 7)));
    CHECK(res.i == Scalar::of_rat(Rat(103, 42)));
    CHECK(res.all_hold());

    CHECK_THROWS_AS(pentagon_complete(Scalar::of_rat(Rat(1)), Scalar::of_rat(Rat(1)),
                                      Scalar::zero(q), Scalar::of_rat(Rat(1)),
                                      Scalar::of_rat(Rat(1)), Scalar::of_rat(Rat(1)),
                                      Scalar::of_rat(Rat(1))),
                    input_error);

    RandomSource rng(55);
    for (int i = 0; i < 500; ++i) {
        auto r = pentagon_complete(Scalar::of_rat(rng.rational()), Scalar::of_rat(rng.rational()),
                                   Scalar::of_rat(rng.rational_nonzero()),
                                   Scalar::of_rat(rng.rational()), Scalar::of_rat(rng.rational()),
                                   Scalar::of_rat(rng.rational_nonzero()),
                                   Scalar::of_rat(rng.rational_nonzero()));
        CHECK(r.all_hold());
    }
}

TEST_CASE("pentagon completion over finite fields") {
    Domain f101 = Domain::prime(101);
    RandomSource rng(66);
    for (int i = 0; i < 2000; ++i) {
        auto pick = [&](bool nz) { return Scalar::of(f101, nz ? 1 + rng.below(100) : rng.below(101)); };
        auto r = pentagon_complete(pick(false), pick(false), pick(true), pick(false), pick(false),
                                   pick(true), pick(true));
        CHECK(r.all_hold());
    }
    // exhaustive over F_2 and F_4
    for (unsigned m = 1; m <= 2; ++m) {
        Domain d = Domain::binary(m);
        const std::uint64_t qs = d.size();
        for (std::uint64_t a = 0; a < qs; ++a)
            for (std::uint64_t b = 0; b < qs; ++b)
                for (std::uint64_t c = 1; c < qs; ++c)
                    for (std::uint64_t dd = 0; dd < qs; ++dd)
                        for (std::uint64_t e = 0; e < qs; ++e)
                            for (std::uint64_t f = 1; f < qs; ++f)
                                for (std::uint64_t g = 1; g < qs; ++g)
                                    CHECK(pentagon_complete(Scalar::of(d, a), Scalar::of(d, b),
                                                            Scalar::of(d, c), Scalar::of(d, dd),
                                                            Scalar::of(d, e), Scalar::of(d, f),
                                                            Scalar::of(d, g))
                                              .all_hold());
    }
}

TEST_CASE("pentagon completion on the regular pentagon") {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    auto r = pentagon_complete_real(1, 1, 1, 1, 1, phi, phi);
    CHECK(r.max_residual < 1e-9);
    CHECK(r.i == Catch::Approx(phi).epsilon(1e-9));
    CHECK(r.j == Catch::Approx(phi).epsilon(1e-9));
    CHECK(r.k == Catch::Approx(phi).epsilon(1e-9));
}
