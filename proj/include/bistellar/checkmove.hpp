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

#include <optional>

#include "pachner.hpp"
#include "relations.hpp"
#include "report.hpp"
#include "variety.hpp"

namespace bistellar {

/// Builds the consistency system of a set of top simplices against a shared
/// edge-variable universe (4D: Cayley-Menger per pentachoron; 3D: opposite-
/// edge Ptolemy per tetrahedron).
inline RelationSystem local_system(int dim, const std::vector<VertexTuple>& tops,
                                   const std::vector<std::string>& vars,
                                   const std::map<VertexTuple, std::uint32_t>& edge_id,
                                   Domain dom) {
    RelationSystem sys;
    sys.dom = dom;
    sys.vars = vars;
    for (const auto& s : tops)
        sys.relations.push_back(dim == 4 ? pentachoron_relation(s, dom, edge_id)
                                         : tetrahedron_relation(s, dom, edge_id));
    return sys;
}

/// Move-invariance experiment: applies the move, builds the before/after
/// local systems, counts both over every requested field on the shared edge
/// universe, compares (stable-equivalence proxy), and emits the solution-set
/// symmetric difference wherever both sides are collectible. Dimension
/// estimates on each side's own variables feed the fiber-dimension record
/// for vertex-adding moves (predicted fiber: +3).
inline nlohmann::json check_move_report(const Triangulation& t, const MoveLocus& locus,
                                        const std::vector<Domain>& fields,
                                        const EnumOptions& opts, bool emit_diff = true) {
    require_structure(t);
    const Triangulation after = pachner(t, locus);

    std::vector<VertexTuple> before_tops, after_tops;
    if (locus.kind == MoveKind::Identity) {
        before_tops = t.simplices;
        after_tops = t.simplices;
    } else {
        auto plan = detail::plan_move(t, locus);
        before_tops = plan.removed;
        after_tops = plan.created;
    }

    auto edges_of = [&](const std::vector<VertexTuple>& tops) {
        Triangulation local;
        local.dim = t.dim;
        local.vertices = after.vertices >= t.vertices ? after.vertices : t.vertices;
        local.simplices = tops;
        return faces_of_dim(local, 1);
    };
    const auto before_edges = edges_of(before_tops);
    const auto after_edges = edges_of(after_tops);

    std::set<VertexTuple> shared_edges = before_edges;
    shared_edges.insert(after_edges.begin(), after_edges.end());

    const Domain base = t.dim == 4 ? Domain::rational() : Domain::binary(1);
    auto make_universe = [&](const std::set<VertexTuple>& edges) {
        std::pair<std::vector<std::string>, std::map<VertexTuple, std::uint32_t>> u;
        for (const auto& e : edges) {
            u.second[e] = static_cast<std::uint32_t>(u.first.size());
            u.first.push_back(t.dim == 4 ? edge_var_name(e[0], e[1])
                                         : "e_" + std::to_string(e[0]) + "_" + std::to_string(e[1]));
        }
        return u;
    };

    const auto shared = make_universe(shared_edges);
    const auto own_b = make_universe(before_edges);
    const auto own_a = make_universe(after_edges);

    RelationSystem before_shared = local_system(t.dim, before_tops, shared.first, shared.second, base);
    RelationSystem after_shared = local_system(t.dim, after_tops, shared.first, shared.second, base);
    RelationSystem before_own = local_system(t.dim, before_tops, own_b.first, own_b.second, base);
    RelationSystem after_own = local_system(t.dim, after_tops, own_a.first, own_a.second, base);

    nlohmann::json res;
    res["move"] = move_kind_str(locus.kind);
    res["locus"] = locus.verts;

    EquivVerdict verdict;
    verdict.a = count_over_fields(before_shared, fields, opts);
    verdict.b = count_over_fields(after_shared, fields, opts);
    verdict = stable_equiv_compare_counts(verdict.a, verdict.b, fields);
    auto side_json = [&](const RelationSystem& own, const CountReport& own_counts) {
        nlohmann::json s;
        s["variables"] = own.vars.size();
        s["relations"] = own.relations.size();
        s["counts"] = count_report_to_json(own_counts);
        s["dim"] = dim_estimate_to_json(dim_estimate(own_counts));
        return s;
    };
    // A side whose edge set already spans the union has the shared system as
    // its own system; reuse those counts instead of enumerating again.
    const CountReport counts_b =
        before_own.vars == shared.first ? verdict.a : count_over_fields(before_own, fields, opts);
    const CountReport counts_a =
        after_own.vars == shared.first ? verdict.b : count_over_fields(after_own, fields, opts);
    res["before"] = side_json(before_own, counts_b);
    res["after"] = side_json(after_own, counts_a);

    nlohmann::json sh;
    sh["variables"] = shared.first.size();
    sh["before_counts"] = count_report_to_json(verdict.a);
    sh["after_counts"] = count_report_to_json(verdict.b);
    sh["verdict"] = {{"kind", equiv_kind_str(verdict.kind)},
                     {"k", verdict.k},
                     {"note", EquivVerdict::kNote}};

    if (emit_diff) {
        auto& diffs = sh["diff"] = nlohmann::json::array();
        for (std::size_t i = 0; i < fields.size(); ++i) {
            nlohmann::json d;
            d["field"] = fields[i].tag();
            const std::uint64_t na = verdict.a.counts[i].count;
            const std::uint64_t nb = verdict.b.counts[i].count;
            if (na > opts.collect_cap || nb > opts.collect_cap) {
                d["skipped"] = "solution sets exceed the collect cap";
            } else {
                SolutionSet sa = collect_solutions(before_shared, fields[i], opts);
                SolutionSet sb = collect_solutions(after_shared, fields[i], opts);
                DiffReport diff = solution_diff(sa, sb);
                d["only_before_count"] = diff.only_a.size();
                d["only_after_count"] = diff.only_b.size();
                d["only_before"] = diff.only_a;
                d["only_after"] = diff.only_b;
                nlohmann::json probe;
                probe["a"] = diff.only_a;
                probe["b"] = diff.only_b;
                d["digest"] = fnv1a64_hex(probe.dump());
            }
            diffs.push_back(d);
        }
    }
    res["shared_universe"] = sh;

    // Fiber record: a 1-5 move introduces 5 new edge variables constrained by
    // two effective relations, so forgetting them should drop the dimension
    // by 3. Other moves keep the edge universe, predicting a delta of 0.
    nlohmann::json fib;
    const auto db = dim_estimate(counts_b), da = dim_estimate(counts_a);
    fib["dim_before"] = db.dimension ? nlohmann::json(*db.dimension) : nlohmann::json();
    fib["dim_after"] = da.dimension ? nlohmann::json(*da.dimension) : nlohmann::json();
    std::optional<long long> predicted;
    if (locus.kind == MoveKind::M15) predicted = 3;
    else if (locus.kind == MoveKind::M51) predicted = -3;
    else if (locus.kind != MoveKind::M14 && locus.kind != MoveKind::M41) predicted = 0;
    if (predicted) fib["predicted"] = *predicted;
    auto mean_raw = [](const DimEstimate& e) -> std::optional<double> {
        if (e.pairs.empty()) return std::nullopt;
        double s = 0;
        for (const auto& p : e.pairs) s += p.raw;
        return s / static_cast<double>(e.pairs.size());
    };
    const auto rb = mean_raw(db), ra = mean_raw(da);
    if (rb && ra) {
        const double delta_raw = *ra - *rb;
        fib["delta_raw"] = delta_raw;
        if (predicted) fib["matches_raw"] = std::fabs(delta_raw - static_cast<double>(*predicted)) <= 0.15;
    }
    if (db.dimension && da.dimension) {
        const long long delta = *da.dimension - *db.dimension;
        fib["delta"] = delta;
        if (predicted) fib["matches"] = (delta == *predicted);
    } else {
        fib["delta"] = nlohmann::json();
        fib["note"] = "dimension estimate unresolved on at least one side";
    }
    res["fiber"] = fib;
    return res;
}

}  // namespace bistellar
