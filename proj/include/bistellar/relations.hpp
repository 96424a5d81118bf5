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

#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "polymatrix.hpp"
#include "polynomial.hpp"
#include "spine.hpp"
#include "triangulation.hpp"

namespace bistellar {

/// Named variables plus polynomials required to vanish simultaneously.
struct RelationSystem {
    Domain dom = Domain::binary(1);
    std::vector<std::string> vars;
    std::vector<Polynomial> relations;

    std::unordered_map<std::string, std::uint32_t> var_index() const {
        std::unordered_map<std::string, std::uint32_t> m;
        for (std::uint32_t i = 0; i < vars.size(); ++i) m[vars[i]] = i;
        return m;
    }

    std::vector<std::string> relation_strings() const {
        std::vector<std::string> out;
        out.reserve(relations.size());
        for (const auto& r : relations) out.push_back(r.str(vars));
        return out;
    }

    friend bool operator==(const RelationSystem&, const RelationSystem&) = default;
};

// --- JSON: {"field": tag, "variables": [names], "relations": [strings]} ---

inline nlohmann::json system_to_json(const RelationSystem& sys) {
    nlohmann::json j;
    j["field"] = sys.dom.tag();
    j["variables"] = sys.vars;
    j["relations"] = sys.relation_strings();
    return j;
}

inline RelationSystem system_from_json(const nlohmann::json& j) {
    RelationSystem sys;
    try {
        sys.dom = Domain::parse(j.at("field").get<std::string>());
        sys.vars = j.at("variables").get<std::vector<std::string>>();
        auto idx = sys.var_index();
        if (idx.size() != sys.vars.size()) throw input_error("duplicate variable names");
        for (const auto& r : j.at("relations"))
            sys.relations.push_back(Polynomial::parse(r.get<std::string>(), idx, sys.dom));
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("relation system JSON: ") + e.what());
    }
    return sys;
}

// --- Ptolemy systems ---

/// One relation a*c + b*d + x*y per butterfly; variables are the 2-cells.
/// The coefficient domain must have characteristic 2 unless signed_mode is
/// set, which emits the experimental a*c + b*d - x*y variant instead.
inline RelationSystem ptolemy_system_from_spine(const SpinePresentation& s, Domain dom,
                                                bool signed_mode = false) {
    if (!signed_mode && dom.characteristic() != 2)
        throw input_error("ptolemy system needs a characteristic-2 domain (or signed mode)");
    RelationSystem sys;
    sys.dom = dom;
    sys.vars = s.cells;
    auto idx = sys.var_index();
    if (idx.size() != sys.vars.size()) throw input_error("duplicate cell names");
    auto cell = [&](const std::string& name) -> std::uint32_t {
        auto it = idx.find(name);
        if (it == idx.end()) throw input_error("undeclared cell name: '" + name + "'");
        return it->second;
    };
    for (const auto& b : s.butterflies) {
        Polynomial rel = Polynomial::zero(dom);
        for (std::size_t i = 0; i < 3; ++i) {
            const auto& [u, v] = b.pairs[i];
            Polynomial prod =
                Polynomial::term(Scalar::one(dom), Monomial::var(cell(u)) * Monomial::var(cell(v)));
            rel = (signed_mode && i == 2) ? rel - prod : rel + prod;
        }
        sys.relations.push_back(rel);
    }
    return sys;
}

/// Opposite-edge relation of one tetrahedron: e01*e23 + e02*e13 + e03*e12
/// (last product negated in signed mode).
inline Polynomial tetrahedron_relation(const VertexTuple& tet, Domain dom,
                                       const std::map<VertexTuple, std::uint32_t>& edge_id,
                                       bool signed_mode = false) {
    if (tet.size() != 4) throw input_error("tetrahedron needs 4 vertices");
    auto eid = [&](std::uint32_t a, std::uint32_t b) {
        return edge_id.at({std::min(a, b), std::max(a, b)});
    };
    // the three ways to split {0,1,2,3} into opposite pairs
    static constexpr int kSplit[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
    Polynomial rel = Polynomial::zero(dom);
    for (int i = 0; i < 3; ++i) {
        Monomial m = Monomial::var(eid(tet[static_cast<std::size_t>(kSplit[i][0])],
                                       tet[static_cast<std::size_t>(kSplit[i][1])])) *
                     Monomial::var(eid(tet[static_cast<std::size_t>(kSplit[i][2])],
                                       tet[static_cast<std::size_t>(kSplit[i][3])]));
        Polynomial prod = Polynomial::term(Scalar::one(dom), m);
        rel = (signed_mode && i == 2) ? rel - prod : rel + prod;
    }
    return rel;
}

/// Dual reading of a 3D triangulation: variables are edges; each tetrahedron
/// (v0,v1,v2,v3) yields e01*e23 + e02*e13 + e03*e12 (opposite-edge pairs).
inline RelationSystem ptolemy_system_from_3d(const Triangulation& t, Domain dom,
                                             bool signed_mode = false) {
    if (t.dim != 3) throw input_error("ptolemy system needs a 3D triangulation");
    require_structure(t);
    if (!signed_mode && dom.characteristic() != 2)
        throw input_error("ptolemy system needs a characteristic-2 domain (or signed mode)");
    RelationSystem sys;
    sys.dom = dom;
    std::map<VertexTuple, std::uint32_t> edge_id;
    for (const auto& e : faces_of_dim(t, 1)) {
        edge_id[e] = static_cast<std::uint32_t>(sys.vars.size());
        sys.vars.push_back("e_" + std::to_string(e[0]) + "_" + std::to_string(e[1]));
    }
    for (const auto& s : t.simplices)
        sys.relations.push_back(tetrahedron_relation(s, dom, edge_id, signed_mode));
    return sys;
}

// --- Cayley-Menger systems for 4D triangulations ---

inline std::string edge_var_name(std::uint32_t i, std::uint32_t j) {
    if (i > j) std::swap(i, j);
    return "b_" + std::to_string(i) + "_" + std::to_string(j);
}

/// Symbolic bordered determinant for one pentachoron: the 6x6 matrix of
/// squared-edge-length variables b_ij bordered by a row and column of ones
/// with zero corner, expanded exactly.
inline Polynomial pentachoron_relation(const VertexTuple& penta, Domain dom,
                                       const std::map<VertexTuple, std::uint32_t>& edge_id) {
    if (penta.size() != 5) throw input_error("pentachoron needs 5 vertices");
    PolyMatrix m(6, dom);
    for (std::size_t a = 0; a < 5; ++a) {
        for (std::size_t b = 0; b < 5; ++b) {
            if (a == b) continue;
            std::uint32_t i = penta[a], j = penta[b];
            if (i > j) std::swap(i, j);
            m.set(a, b, Polynomial::variable(dom, edge_id.at({i, j})));
        }
        m.set(a, 5, Polynomial::constant(Scalar::one(dom)));
        m.set(5, a, Polynomial::constant(Scalar::one(dom)));
    }
    return determinant(m);
}

/// One bordered-determinant relation per pentachoron; variables are the
/// squared edge lengths of the whole complex.
inline RelationSystem cayley_menger_system(const Triangulation& t, Domain dom) {
    if (t.dim != 4) throw input_error("cayley-menger system needs a 4D triangulation");
    require_structure(t);
    RelationSystem sys;
    sys.dom = dom;
    std::map<VertexTuple, std::uint32_t> edge_id;
    for (const auto& e : faces_of_dim(t, 1)) {
        edge_id[e] = static_cast<std::uint32_t>(sys.vars.size());
        sys.vars.push_back(edge_var_name(e[0], e[1]));
    }
    for (const auto& s : t.simplices) sys.relations.push_back(pentachoron_relation(s, dom, edge_id));
    return sys;
}

}  // namespace bistellar
