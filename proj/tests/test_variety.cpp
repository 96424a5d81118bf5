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

#include <bistellar/random.hpp>
#include <bistellar/relations.hpp>
#include <bistellar/spine.hpp>
#include <bistellar/variety.hpp>

using namespace bistellar;

namespace {

/// Independent oracle: dense odometer enumeration evaluating every relation
/// through the generic polynomial path. No pruning, no variable reordering.
std::uint64_t brute_force_count(const RelationSystem& sys, Domain field) {
    const std::size_t v = sys.vars.size();
    const std::uint64_t q = field.size();
    std::vector<std::uint64_t> odo(v, 0);
    std::uint64_t count = 0;
    for (;;) {
        std::map<std::uint32_t, Scalar> a;
        for (std::uint32_t i = 0; i < v; ++i) a[i] = Scalar::of(field, odo[i]);
        bool ok = true;
        for (const auto& rel : sys.relations) {
            Polynomial lifted = rel;
            if (rel.domain() != field) {
                // re-express coefficients in the counting field via parsing
                lifted = Polynomial::parse(rel.str(sys.vars), sys.var_index(), field);
            }
            if (!lifted.evaluate(a).is_zero()) {
                ok = false;
                break;
            }
        }
        if (ok) ++count;
        std::size_t d = 0;
        while (d < v && ++odo[d] == q) odo[d++] = 0;
        if (d == v) break;
    }
    return count;
}

RelationSystem fixture_system(const std::string& name) {
    return ptolemy_system_from_spine(spine_fixture(name), Domain::binary(1));
}

}  // namespace

TEST_CASE("fixture counts over the binary tower") {
    auto counts = [](const std::string& name) {
        std::vector<std::uint64_t> out;
        for (unsigned m = 1; m <= 4; ++m)
            out.push_back(count_solutions(fixture_system(name), Domain::binary(m)));
        return out;
    };
    CHECK(counts("2_1") == std::vector<std::uint64_t>{3, 13, 15, 61});
    CHECK(counts("2_2") == std::vector<std::uint64_t>{2, 4, 29, 16});
    CHECK(counts("2_3") == std::vector<std::uint64_t>{2, 4, 8, 16});
    CHECK(counts("2_4") == std::vector<std::uint64_t>{4, 16, 64, 256});
}

TEST_CASE("pruned enumeration agrees with dense brute force") {
    for (const auto& name : spine_fixture_names()) {
        RelationSystem sys = fixture_system(name);
        for (unsigned m = 1; m <= 3; ++m) {
            Domain f = Domain::binary(m);
            CHECK(count_solutions(sys, f) == brute_force_count(sys, f));
        }
    }
    // a couple of random small systems over F2/F4, including higher degrees
    RandomSource rng(19);
    for (int trial = 0; trial < 10; ++trial) {
        RelationSystem sys;
        sys.dom = Domain::binary(1);
        sys.vars = {"u", "v", "w", "t"};
        auto idx = sys.var_index();
        for (int r = 0; r < 2; ++r) {
            Polynomial p = Polynomial::zero(sys.dom);
            for (int t = 0; t < 3; ++t) {
                Monomial m;
                for (int f = 0; f < 2; ++f)
                    m = m * Monomial::var(static_cast<std::uint32_t>(rng.below(4)),
                                          static_cast<std::uint32_t>(rng.below(2)) + 1);
                p = p + Polynomial::term(Scalar::one(sys.dom), m);
            }
            sys.relations.push_back(p);
        }
        for (unsigned m = 1; m <= 2; ++m) {
            Domain f = Domain::binary(m);
            CHECK(count_solutions(sys, f) == brute_force_count(sys, f));
        }
    }
}

TEST_CASE("counting a rational-coefficient system reduces coefficients") {
    Triangulation one;
    one.dim = 4;
    one.vertices = 5;
    one.simplices = {{0, 1, 2, 3, 4}};
    RelationSystem sys = cayley_menger_system(one, Domain::rational());
    CHECK(count_solutions(sys, Domain::binary(1)) == 576);
    CHECK(count_solutions(sys, Domain::binary(2)) == 274432);
    // identical counts when the system is generated over F2 directly
    RelationSystem f2sys = cayley_menger_system(one, Domain::binary(1));
    CHECK(count_solutions(f2sys, Domain::binary(1)) == 576);
    CHECK(count_solutions(f2sys, Domain::binary(2)) == 274432);
}

TEST_CASE("local move complexes over F2: frozen regression counts") {
    auto system_of = [](std::vector<VertexTuple> tops) {
        Triangulation t;
        t.dim = 4;
        t.vertices = 6;
        t.simplices = std::move(tops);
        // shared 15-variable universe: build over all edges of the 6 vertices
        Triangulation full;
        full.dim = 4;
        full.vertices = 6;
        full.simplices = {{0, 1, 2, 3, 4}, {0, 1, 2, 3, 5}, {0, 1, 2, 4, 5},
                          {0, 1, 3, 4, 5}, {0, 2, 3, 4, 5}, {1, 2, 3, 4, 5}};
        RelationSystem all = cayley_menger_system(full, Domain::rational());
        std::map<VertexTuple, std::uint32_t> edge_id;
        for (std::uint32_t i = 0; i < 6; ++i)
            for (std::uint32_t j = i + 1; j < 6; ++j) {
                auto it = std::find(all.vars.begin(), all.vars.end(), edge_var_name(i, j));
                edge_id[{i, j}] = static_cast<std::uint32_t>(it - all.vars.begin());
            }
        RelationSystem sys;
        sys.dom = Domain::rational();
        sys.vars = all.vars;
        for (const auto& s : t.simplices)
            sys.relations.push_back(pentachoron_relation(s, sys.dom, edge_id));
        return sys;
    };
    const VertexTuple s0 = {1, 2, 3, 4, 5}, s1 = {0, 2, 3, 4, 5}, s2 = {0, 1, 3, 4, 5},
                      s3 = {0, 1, 2, 4, 5}, s4 = {0, 1, 2, 3, 5}, s5 = {0, 1, 2, 3, 4};
    Domain f2 = Domain::binary(1);

    RelationSystem before24 = system_of({s0, s1});
    RelationSystem after24 = system_of({s2, s3, s4, s5});
    CHECK(count_solutions(before24, f2) == 11264);
    CHECK(count_solutions(after24, f2) == 5888);

    SolutionSet sa = collect_solutions(before24, f2);
    SolutionSet sb = collect_solutions(after24, f2);
    CHECK(sa.assignments.size() == 11264);
    CHECK(sb.assignments.size() == 5888);
    DiffReport diff = solution_diff(sa, sb);
    CHECK(diff.only_a.size() == 6272);
    CHECK(diff.only_b.size() == 896);

    RelationSystem before33 = system_of({s0, s1, s2});
    RelationSystem after33 = system_of({s3, s4, s5});
    CHECK(count_solutions(before33, f2) == 7680);
    CHECK(count_solutions(after33, f2) == 7680);
    DiffReport diff33 = solution_diff(collect_solutions(before33, f2), collect_solutions(after33, f2));
    CHECK(diff33.only_a.size() == 2688);
    CHECK(diff33.only_b.size() == 2688);

    RelationSystem all6 = system_of({s0, s1, s2, s3, s4, s5});
    CHECK(count_solutions(all6, f2) == 4992);
    // the five relations of a vertex star already imply the sixth over F2
    RelationSystem five = system_of({s0, s1, s2, s3, s4});
    CHECK(count_solutions(five, f2) == 4992);
}

TEST_CASE("count equals collect length and every solution re-verifies") {
    for (const auto& name : spine_fixture_names()) {
        RelationSystem sys = fixture_system(name);
        for (unsigned m = 1; m <= 3; ++m) {
            Domain f = Domain::binary(m);
            SolutionSet set = collect_solutions(sys, f);
            CHECK(set.assignments.size() == count_solutions(sys, f));
            for (const auto& a : set.assignments) {
                std::map<std::uint32_t, Scalar> point;
                for (std::uint32_t i = 0; i < a.size(); ++i) point[i] = Scalar::of(f, a[i]);
                for (const auto& rel : sys.relations) {
                    Polynomial lifted = Polynomial::parse(rel.str(sys.vars), sys.var_index(), f);
                    CHECK(lifted.evaluate(point).is_zero());
                }
            }
        }
    }
}

TEST_CASE("counts are invariant under variable reordering and thread counts") {
    RelationSystem sys = fixture_system("2_1");
    // shuffle: reverse the variable list (z, y, x) and rename relations
    RelationSystem rev;
    rev.dom = sys.dom;
    rev.vars = {"z", "y", "x"};
    auto idx = rev.var_index();
    for (const auto& rel : sys.relations)
        rev.relations.push_back(Polynomial::parse(rel.str(sys.vars), idx, rev.dom));
    for (unsigned m = 1; m <= 3; ++m) {
        Domain f = Domain::binary(m);
        CHECK(count_solutions(sys, f) == count_solutions(rev, f));
    }

    EnumOptions one, four;
    four.threads = 4;
    Triangulation pair;
    pair.dim = 4;
    pair.vertices = 6;
    pair.simplices = {{1, 2, 3, 4, 5}, {0, 2, 3, 4, 5}};
    RelationSystem cm = cayley_menger_system(pair, Domain::rational());
    CHECK(count_solutions(cm, Domain::binary(1), one) ==
          count_solutions(cm, Domain::binary(1), four));
    SolutionSet c1 = collect_solutions(cm, Domain::binary(1), one);
    SolutionSet c4 = collect_solutions(cm, Domain::binary(1), four);
    CHECK(c1.assignments == c4.assignments);
}

TEST_CASE("budget gating") {
    Triangulation full;
    full.dim = 4;
    full.vertices = 6;
    full.simplices = {{1, 2, 3, 4, 5}, {0, 2, 3, 4, 5}, {0, 1, 3, 4, 5}};
    RelationSystem sys = cayley_menger_system(full, Domain::rational());
    REQUIRE(sys.vars.size() == 15);
    CHECK_THROWS_AS(count_solutions(sys, Domain::binary(3)), budget_error);  // 8^15 > 2^34
    CHECK(is_long_run(sys, Domain::binary(2), {}));                          // 4^15 > 2^28
    CHECK_FALSE(is_long_run(sys, Domain::binary(1), {}));

    EnumOptions tight;
    tight.node_budget = 1000;
    CHECK_THROWS_AS(count_solutions(fixture_system("2_4"), Domain::binary(4), tight), budget_error);

    EnumOptions tiny_cap;
    tiny_cap.collect_cap = 2;
    CHECK_THROWS_AS(collect_solutions(fixture_system("2_4"), Domain::binary(1), tiny_cap),
                    budget_error);
}

TEST_CASE("empty and infeasible systems") {
    RelationSystem empty;
    empty.dom = Domain::binary(1);
    empty.vars = {"a", "b", "c"};
    CHECK(count_solutions(empty, Domain::binary(1)) == 8);
    CHECK(count_solutions(empty, Domain::binary(2)) == 64);

    RelationSystem contradiction = empty;
    contradiction.relations.push_back(Polynomial::constant(Scalar::one(contradiction.dom)));
    CHECK(count_solutions(contradiction, Domain::binary(1)) == 0);

    CHECK_THROWS_AS(count_solutions(empty, Domain::rational()), input_error);
    CHECK_THROWS_AS(count_solutions(fixture_system("2_4"), Domain::prime(3)), input_error);
}

TEST_CASE("dimension estimation") {
    CountReport plane;
    plane.counts = {{Domain::binary(1), 4, false},
                    {Domain::binary(2), 16, false},
                    {Domain::binary(3), 64, false}};
    auto est = dim_estimate(plane);
    REQUIRE(est.dimension.has_value());
    CHECK(*est.dimension == 2);

    CountReport empty_var;
    empty_var.counts = {{Domain::binary(1), 0, false}, {Domain::binary(2), 0, false}};
    CHECK(dim_estimate(empty_var).diagnostic == "empty variety");

    CountReport single;
    single.counts = {{Domain::binary(1), 4, false}};
    CHECK(dim_estimate(single).diagnostic == "insufficient fields");

    CountReport crooked;
    crooked.counts = {{Domain::binary(1), 3, false},
                      {Domain::binary(2), 13, false},
                      {Domain::binary(3), 15, false}};
    CHECK(dim_estimate(crooked).diagnostic == "inconsistent");

    // full affine space has exponent = variable count
    RelationSystem empty;
    empty.dom = Domain::binary(1);
    empty.vars = {"a", "b", "c"};
    auto rep = count_over_fields(empty, {Domain::binary(1), Domain::binary(2)});
    auto est2 = dim_estimate(rep);
    REQUIRE(est2.dimension.has_value());
    CHECK(*est2.dimension == 3);
}

TEST_CASE("stable equivalence proxy") {
    const std::vector<Domain> fields = {Domain::binary(1), Domain::binary(2), Domain::binary(3)};
    RelationSystem a = fixture_system("2_4");
    auto self = stable_equiv_compare(a, a, fields);
    CHECK(self.kind == EquivKind::Consistent);
    CHECK(self.k == 0);

    RelationSystem padded = a;
    padded.vars.push_back("w");  // fresh unconstrained variable
    auto pad = stable_equiv_compare(a, padded, fields);
    CHECK(pad.kind == EquivKind::Consistent);
    CHECK(pad.k == 1);
    auto unpad = stable_equiv_compare(padded, a, fields);
    CHECK(unpad.kind == EquivKind::Consistent);
    CHECK(unpad.k == -1);

    auto cross = stable_equiv_compare(fixture_system("2_1"), a, fields);
    CHECK(cross.kind != EquivKind::Consistent);
}

TEST_CASE("solution diff reports") {
    Domain f2 = Domain::binary(1);
    SolutionSet x{f2, {"a", "b"}, {{0, 0}, {1, 1}}};
    SolutionSet y{f2, {"a", "b"}, {{0, 0}, {1, 1}}};
    CHECK(solution_diff(x, y).empty());

    SolutionSet z{f2, {"a", "b"}, {{0, 1}}};
    auto d = solution_diff(x, z);
    CHECK(d.only_a.size() == 2);
    CHECK(d.only_b.size() == 1);

    SolutionSet w{f2, {"a", "c"}, {}};
    CHECK_THROWS_AS(solution_diff(x, w), input_error);
    SolutionSet v{Domain::binary(2), {"a", "b"}, {}};
    CHECK_THROWS_AS(solution_diff(x, v), input_error);
}

TEST_CASE("count report JSON uses decimal strings") {
    CountReport rep;
    rep.counts = {{Domain::binary(2), 1ull << 40, true}};
    auto j = count_report_to_json(rep);
    CHECK(j[0]["count"] == "1099511627776");
    CHECK(j[0]["long"] == true);
}
