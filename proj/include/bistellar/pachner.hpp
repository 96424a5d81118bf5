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

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "triangulation.hpp"

namespace bistellar {

/// Bistellar move kinds. 3D: 1-4/4-1, 2-3/3-2. 4D: 1-5/5-1, 2-4/4-2, 3-3.
enum class MoveKind { M14, M41, M23, M32, M15, M51, M24, M42, M33, Identity };

inline MoveKind move_kind_parse(const std::string& s) {
    if (s == "1-4") return MoveKind::M14;
    if (s == "4-1") return MoveKind::M41;
    if (s == "2-3") return MoveKind::M23;
    if (s == "3-2") return MoveKind::M32;
    if (s == "1-5") return MoveKind::M15;
    if (s == "5-1") return MoveKind::M51;
    if (s == "2-4") return MoveKind::M24;
    if (s == "4-2") return MoveKind::M42;
    if (s == "3-3") return MoveKind::M33;
    if (s == "identity") return MoveKind::Identity;
    throw input_error("unknown move kind: '" + s + "'");
}

inline std::string move_kind_str(MoveKind k) {
    switch (k) {
        case MoveKind::M14: return "1-4";
        case MoveKind::M41: return "4-1";
        case MoveKind::M23: return "2-3";
        case MoveKind::M32: return "3-2";
        case MoveKind::M15: return "1-5";
        case MoveKind::M51: return "5-1";
        case MoveKind::M24: return "2-4";
        case MoveKind::M42: return "4-2";
        case MoveKind::M33: return "3-3";
        case MoveKind::Identity: return "identity";
    }
    return "?";
}

inline int move_dim(MoveKind k) {
    switch (k) {
        case MoveKind::M14:
        case MoveKind::M41:
        case MoveKind::M23:
        case MoveKind::M32: return 3;
        case MoveKind::Identity: return 0;  // any
        default: return 4;
    }
}

/// Identifying data of a move: the target simplex for 1-(n+2), the apex
/// vertex for (n+2)-1, the shared codim-1 face for 2-(n+1), the central edge
/// for (n+1)-2, and the bulk triangle for 3-3.
struct MoveLocus {
    MoveKind kind = MoveKind::Identity;
    VertexTuple verts;
};

namespace detail {

struct MovePlan {
    std::vector<VertexTuple> removed;
    std::vector<VertexTuple> created;
    std::optional<std::uint32_t> fresh_vertex;    // for 1-(n+2)
    std::optional<std::uint32_t> dropped_vertex;  // for (n+2)-1
};

inline VertexTuple sorted_union(VertexTuple a, const VertexTuple& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
}

inline VertexTuple without(const VertexTuple& s, std::uint32_t v) {
    VertexTuple r;
    r.reserve(s.size() - 1);
    for (auto x : s)
        if (x != v) r.push_back(x);
    return r;
}

inline VertexTuple with(VertexTuple s, std::uint32_t v) {
    s.push_back(v);
    std::sort(s.begin(), s.end());
    return s;
}

inline bool contains_face(const VertexTuple& simplex, const VertexTuple& face) {
    return std::includes(simplex.begin(), simplex.end(), face.begin(), face.end());
}

inline std::vector<VertexTuple> tops_containing(const Triangulation& t, const VertexTuple& face) {
    std::vector<VertexTuple> out;
    for (const auto& s : t.simplices)
        if (contains_face(s, face)) out.push_back(s);
    return out;
}

inline void check_locus_exists(const Triangulation& t, const VertexTuple& verts) {
    for (auto v : verts)
        if (v >= t.vertices) throw move_error("locus vertex out of range");
    std::set<VertexTuple> faces = all_faces(t);
    if (!verts.empty() && !faces.count(verts))
        throw move_error("locus face not present in the triangulation");
}

inline MovePlan plan_move(const Triangulation& t, const MoveLocus& locus) {
    const int n = t.dim;
    MovePlan plan;
    VertexTuple L = locus.verts;
    std::sort(L.begin(), L.end());

    switch (locus.kind) {
        case MoveKind::Identity: return plan;

        case MoveKind::M14:
        case MoveKind::M15: {
            if (L.size() != static_cast<std::size_t>(n) + 1)
                throw move_error("locus must be a top simplex");
            if (!std::count(t.simplices.begin(), t.simplices.end(), L))
                throw move_error("target simplex not in triangulation");
            const std::uint32_t v = t.vertices;
            plan.fresh_vertex = v;
            plan.removed = {L};
            for (std::size_t omit = 0; omit < L.size(); ++omit)
                plan.created.push_back(with(without(L, L[omit]), v));
            return plan;
        }

        case MoveKind::M41:
        case MoveKind::M51: {
            if (L.size() != 1) throw move_error("locus must be a single vertex");
            const std::uint32_t v = L[0];
            if (v >= t.vertices) throw move_error("locus vertex out of range");
            auto star = tops_containing(t, {v});
            if (star.size() != static_cast<std::size_t>(n) + 1)
                throw move_error("vertex star has " + std::to_string(star.size()) +
                                 " top simplices, need " + std::to_string(n + 1));
            VertexTuple link;
            for (const auto& s : star) link = sorted_union(link, without(s, v));
            if (link.size() != static_cast<std::size_t>(n) + 1)
                throw move_error("vertex link does not span a single simplex");
            for (auto u : link)
                if (!std::count(star.begin(), star.end(), with(without(link, u), v)))
                    throw move_error("vertex star is not the cone pattern");
            plan.removed = star;
            plan.created = {link};
            plan.dropped_vertex = v;
            return plan;
        }

        case MoveKind::M23:
        case MoveKind::M24: {
            if (L.size() != static_cast<std::size_t>(n))
                throw move_error("locus must be a codimension-1 face");
            check_locus_exists(t, L);
            auto tops = tops_containing(t, L);
            if (tops.size() != 2)
                throw move_error("face lies in " + std::to_string(tops.size()) +
                                 " top simplices, need 2");
            std::uint32_t p = 0, q = 0;
            for (auto x : tops[0])
                if (!std::count(L.begin(), L.end(), x)) p = x;
            for (auto x : tops[1])
                if (!std::count(L.begin(), L.end(), x)) q = x;
            plan.removed = tops;
            for (std::size_t omit = 0; omit < L.size(); ++omit)
                plan.created.push_back(with(with(without(L, L[omit]), p), q));
            return plan;
        }

        case MoveKind::M32:
        case MoveKind::M42: {
            if (L.size() != 2) throw move_error("locus must be an edge");
            check_locus_exists(t, L);
            auto tops = tops_containing(t, L);
            if (tops.size() != static_cast<std::size_t>(n))
                throw move_error("edge lies in " + std::to_string(tops.size()) +
                                 " top simplices, need " + std::to_string(n));
            VertexTuple wheel;
            for (const auto& s : tops) wheel = sorted_union(wheel, s);
            if (wheel.size() != static_cast<std::size_t>(n) + 2)
                throw move_error("edge star does not span n+2 vertices");
            VertexTuple W;
            for (auto x : wheel)
                if (x != L[0] && x != L[1]) W.push_back(x);
            for (auto w : W)
                if (!std::count(tops.begin(), tops.end(), with(with(without(W, w), L[0]), L[1])))
                    throw move_error("edge star is not the bipyramid pattern");
            plan.removed = tops;
            plan.created = {with(W, L[0]), with(W, L[1])};
            return plan;
        }

        case MoveKind::M33: {
            if (n != 4) throw move_error("3-3 move requires dimension 4");
            if (L.size() != 3) throw move_error("locus must be a triangle");
            check_locus_exists(t, L);
            auto tops = tops_containing(t, L);
            if (tops.size() != 3)
                throw move_error("triangle lies in " + std::to_string(tops.size()) +
                                 " top simplices, need 3");
            VertexTuple all;
            for (const auto& s : tops) all = sorted_union(all, s);
            if (all.size() != 6) throw move_error("3-3 configuration must span 6 vertices");
            VertexTuple D;
            for (auto x : all)
                if (!std::count(L.begin(), L.end(), x)) D.push_back(x);
            for (auto d : D)
                if (!std::count(tops.begin(), tops.end(), sorted_union(L, without(D, d))))
                    throw move_error("triangle star is not the 3-3 pattern");
            plan.removed = tops;
            for (auto b : L) plan.created.push_back(sorted_union(D, without(L, b)));
            return plan;
        }
    }
    throw move_error("unhandled move kind");
}

}  // namespace detail

/// Applies a Pachner move. Admissibility: every face the move creates must be
/// absent from the current complex (fresh-vertex moves are always admissible).
/// Inverse moves that delete a vertex renumber ids above it to keep them
/// dense. Throws move_error on pattern mismatch or inadmissible locus.
inline Triangulation pachner(const Triangulation& t, const MoveLocus& locus) {
    require_structure(t);
    if (locus.kind == MoveKind::Identity) return t.canonical();
    if (move_dim(locus.kind) != t.dim)
        throw move_error("move " + move_kind_str(locus.kind) + " needs dimension " +
                         std::to_string(move_dim(locus.kind)));
    auto plan = detail::plan_move(t, locus);

    if (!plan.fresh_vertex) {
        // Collect faces the move would create and demand they are absent.
        std::set<VertexTuple> removed_faces;
        Triangulation rem;
        rem.dim = t.dim;
        rem.vertices = t.vertices;
        rem.simplices = plan.removed;
        removed_faces = all_faces(rem);
        std::set<VertexTuple> current = all_faces(t);
        Triangulation crt = rem;
        crt.vertices = t.vertices + 1;  // ids are only compared, range is irrelevant here
        crt.simplices = plan.created;
        for (const auto& f : all_faces(crt)) {
            if (removed_faces.count(f)) continue;
            if (current.count(f)) {
                std::string fs;
                for (auto v : f) fs += (fs.empty() ? "" : ",") + std::to_string(v);
                throw move_error("inadmissible: created face (" + fs + ") already present");
            }
        }
    }

    Triangulation out;
    out.dim = t.dim;
    out.vertices = t.vertices + (plan.fresh_vertex ? 1 : 0);
    for (const auto& s : t.simplices)
        if (!std::count(plan.removed.begin(), plan.removed.end(), s)) out.simplices.push_back(s);
    for (const auto& s : plan.created) {
        if (std::count(out.simplices.begin(), out.simplices.end(), s))
            throw move_error("inadmissible: created top simplex already present");
        out.simplices.push_back(s);
    }

    if (plan.dropped_vertex) {
        const std::uint32_t v = *plan.dropped_vertex;
        for (auto& s : out.simplices)
            for (auto& x : s)
                if (x > v) --x;
        out.vertices = t.vertices - 1;
    }
    return out.canonical();
}

/// Locus that undoes the move just applied ("before" is the pre-move state).
inline MoveLocus inverse_locus(const Triangulation& before, const MoveLocus& applied) {
    auto plan = detail::plan_move(before, applied);
    switch (applied.kind) {
        case MoveKind::Identity: return applied;
        case MoveKind::M14: return {MoveKind::M41, {*plan.fresh_vertex}};
        case MoveKind::M15: return {MoveKind::M51, {*plan.fresh_vertex}};
        case MoveKind::M41:
        case MoveKind::M51: {
            // ids above the dropped vertex shift down in the move's output
            VertexTuple link = plan.created[0];
            for (auto& x : link)
                if (x > *plan.dropped_vertex) --x;
            return {applied.kind == MoveKind::M41 ? MoveKind::M14 : MoveKind::M15, link};
        }
        case MoveKind::M23:
        case MoveKind::M24: {
            VertexTuple apexes;
            for (const auto& s : plan.removed) {
                for (auto x : s)
                    if (!std::count(applied.verts.begin(), applied.verts.end(), x) &&
                        !std::count(apexes.begin(), apexes.end(), x))
                        apexes.push_back(x);
            }
            std::sort(apexes.begin(), apexes.end());
            return {applied.kind == MoveKind::M23 ? MoveKind::M32 : MoveKind::M42, apexes};
        }
        case MoveKind::M32:
        case MoveKind::M42: {
            VertexTuple W =
                detail::without(detail::without(plan.created[0], applied.verts[0]), applied.verts[1]);
            return {applied.kind == MoveKind::M32 ? MoveKind::M23 : MoveKind::M24, W};
        }
        case MoveKind::M33: {
            VertexTuple all;
            for (const auto& s : plan.removed) all = detail::sorted_union(all, s);
            VertexTuple D;
            for (auto x : all)
                if (!std::count(applied.verts.begin(), applied.verts.end(), x)) D.push_back(x);
            return {MoveKind::M33, D};
        }
        default: throw move_error("no inverse for this kind");
    }
}

/// All pattern-level candidate loci for a kind (admissibility not checked).
inline std::vector<MoveLocus> enumerate_loci(const Triangulation& t, MoveKind kind) {
    std::vector<MoveLocus> out;
    const int n = t.dim;
    switch (kind) {
        case MoveKind::M14:
        case MoveKind::M15:
            for (const auto& s : t.simplices) out.push_back({kind, s});
            break;
        case MoveKind::M41:
        case MoveKind::M51: {
            std::vector<std::size_t> deg(t.vertices, 0);
            for (const auto& s : t.simplices)
                for (auto v : s) ++deg[v];
            for (std::uint32_t v = 0; v < t.vertices; ++v)
                if (deg[v] == static_cast<std::size_t>(n) + 1) out.push_back({kind, {v}});
            break;
        }
        case MoveKind::M23:
        case MoveKind::M24: {
            for (const auto& f : faces_of_dim(t, n - 1))
                if (detail::tops_containing(t, f).size() == 2) out.push_back({kind, f});
            break;
        }
        case MoveKind::M32:
        case MoveKind::M42: {
            for (const auto& e : faces_of_dim(t, 1))
                if (detail::tops_containing(t, e).size() == static_cast<std::size_t>(n))
                    out.push_back({kind, e});
            break;
        }
        case MoveKind::M33: {
            for (const auto& f : faces_of_dim(t, 2))
                if (detail::tops_containing(t, f).size() == 3) out.push_back({kind, f});
            break;
        }
        case MoveKind::Identity: out.push_back({kind, {}}); break;
    }
    return out;
}

}  // namespace bistellar
