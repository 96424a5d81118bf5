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

#include <bistellar/oracle.hpp>
#include <bistellar/oracle_suites.hpp>

using namespace bistellar;

TEST_CASE("generic configurations are generic and deterministic") {
    PointConfig a = random_generic_config(3, 6, 1);
    PointConfig b = random_generic_config(3, 6, 1);
    CHECK(a.points == b.points);
    CHECK(a.count() == 6);
    // every 4-subset affinely independent comes with the construction; the
    // 5-point bordered determinant vanishes regardless
    RandomSource rng(2);
    for (int i = 0; i < 20; ++i) {
        PointConfig c = random_generic_config(3, 5, rng);
        CHECK(cm_det_exact(c.squared_distances()) == 0);
    }
    CHECK_THROWS_AS(random_generic_config(0, 3, 1), input_error);
}

TEST_CASE("rational circle points") {
    PointConfig two = rational_circle_points({Rat(0), Rat(1)});
    CHECK(two.points[0] == std::vector<Rat>{Rat(1), Rat(0)});
    CHECK(two.points[1] == std::vector<Rat>{Rat(0), Rat(1)});
    CHECK(two.squared_distance(0, 1) == 2);
    CHECK_THROWS_AS(rational_circle_points({Rat(1), Rat(1)}), input_error);

    RandomSource rng(3);
    for (int i = 0; i < 1000; ++i) {
        std::vector<Rat> params;
        while (params.size() < 4) {
            Rat t = rng.rational();
            if (std::find(params.begin(), params.end(), t) == params.end()) params.push_back(t);
        }
        CHECK(concyclic_det4(rational_circle_points(params).squared_distances()) == 0);
    }
}

TEST_CASE("rational sphere points") {
    // the zero parameter maps to the pole (1, 0, ..., 0)
    PointConfig pole = rational_sphere_points(3, {{Rat(0), Rat(0)}});
    CHECK(pole.points[0] == std::vector<Rat>{Rat(1), Rat(0), Rat(0)});

    // n = 2 agrees with the circle construction
    PointConfig c1 = rational_sphere_points(2, {{Rat(2)}, {Rat(-3, 2)}});
    PointConfig c2 = rational_circle_points({Rat(2), Rat(-3, 2)});
    CHECK(c1.points == c2.points);

    // unit norm, exactly
    RandomSource rng(4);
    for (int i = 0; i < 50; ++i) {
        PointConfig p = rational_sphere_points(3, {{rng.rational(), rng.rational()}});
        Rat norm = 0;
        for (const Rat& c : p.points[0]) norm += c * c;
        CHECK(norm == 1);
    }
    CHECK_THROWS_AS(rational_sphere_points(3, {{Rat(1)}}), input_error);
    CHECK_THROWS_AS(rational_sphere_points(3, {{Rat(1), Rat(0)}, {Rat(1), Rat(0)}}), input_error);
}

TEST_CASE("induced labellings") {
    Triangulation sphere4 = boundary_of_simplex(4);
    PointConfig cfg = random_generic_config(3, 6, 7);
    EdgeLabelling lab = induced_labelling(cfg, sphere4);
    CHECK(lab.size() == 15);
    for (const auto& [e, v] : lab) CHECK(v > 0);

    PointConfig fewer = random_generic_config(3, 5, 7);
    CHECK_THROWS_AS(induced_labelling(fewer, sphere4), input_error);
}

TEST_CASE("point config JSON round-trip") {
    PointConfig cfg = random_generic_config(3, 4, 11);
    PointConfig back = pointconfig_from_json(pointconfig_to_json(cfg));
    CHECK(back.dim == cfg.dim);
    CHECK(back.points == cfg.points);
}

TEST_CASE("oracle suites pass at reduced trial counts") {
    CHECK(suite_cm(0, 50).pass);
    CHECK(suite_concyclic(0, 100).pass);
    CHECK(suite_berger(0, 50).pass);
    CHECK(suite_ptolemy(0, 200).pass);
    CHECK(suite_quad(0, 200).pass);
    CHECK(suite_hyperbolic(0, 100).pass);
    CHECK(suite_spherical(0, 100).pass);
    CHECK(suite_invariance(0, 5).pass);
    CHECK(suite_pentagon(0, 0, Domain::binary(1)).trials == 16);     // exhaustive
    CHECK(suite_pentagon(0, 0, Domain::binary(2)).trials == 6912);   // exhaustive
    CHECK(suite_pentagon(0, 300, Domain::prime(101)).pass);
    CHECK(suite_pentagon(0, 300, Domain::rational()).pass);
}
