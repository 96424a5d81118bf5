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
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "errors.hpp"

namespace bistellar {

using VertexTuple = std::vector<std::uint32_t>;

/// Pure combinatorial triangulation: dimension, dense vertex ids [0, V),
/// top simplices as strictly increasing (n+1)-tuples. Immutable by use:
/// operations return new values.
struct Triangulation {
    int dim = 3;
    std::uint32_t vertices = 0;
    std::vector<VertexTuple> simplices;

    friend bool operator==(const Triangulation&, const Triangulation&) = default;

    /// Sorts the simplex list; tuples are already sorted by invariant.
    Triangulation canonical() const {
        Triangulation t = *this;
        std::sort(t.simplices.begin(), t.simplices.end());
        return t;
    }
};

struct ValidationIssue {
    std::string code;  // "dimension", "tuple", "duplicate", "boundary", ...
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
};

/// Structural checks only: tuple shape, ranges, duplicates. These must hold
/// before any face computation makes sense.
inline ValidationReport validate_structure(const Triangulation& t) {
    ValidationReport rep;
    if (t.dim != 3 && t.dim != 4)
        rep.issues.push_back({"dimension", "dimension must be 3 or 4"});
    const std::size_t want = static_cast<std::size_t>(t.dim) + 1;
    for (const auto& s : t.simplices) {
        if (s.size() != want) {
            rep.issues.push_back({"tuple", "simplex has " + std::to_string(s.size()) +
                                               " vertices, expected " + std::to_string(want)});
            continue;
        }
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] >= t.vertices)
                rep.issues.push_back({"tuple", "vertex id " + std::to_string(s[i]) +
                                                   " out of range [0, " +
                                                   std::to_string(t.vertices) + ")"});
            if (i > 0 && s[i] <= s[i - 1])
                rep.issues.push_back({"tuple", "simplex tuple not strictly increasing"});
        }
    }
    std::set<VertexTuple> seen;
    for (const auto& s : t.simplices)
        if (!seen.insert(s).second)
            rep.issues.push_back({"duplicate", "duplicate simplex"});
    return rep;
}

inline void require_structure(const Triangulation& t) {
    auto rep = validate_structure(t);
    if (!rep.ok()) throw input_error("invalid triangulation: " + rep.issues.front().message);
}

namespace detail {

inline void subsets_of_size(const VertexTuple& s, std::size_t k, std::set<VertexTuple>& out) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        VertexTuple f(k);
        for (std::size_t i = 0; i < k; ++i) f[i] = s[idx[i]];
        out.insert(std::move(f));
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == s.size() - k + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace detail

/// All k-dimensional faces (k+1 vertices), deduplicated.
inline std::set<VertexTuple> faces_of_dim(const Triangulation& t, int k) {
    std::set<VertexTuple> out;
    if (k < 0 || k > t.dim) return out;
    for (const auto& s : t.simplices) detail::subsets_of_size(s, static_cast<std::size_t>(k) + 1, out);
    return out;
}

/// Every face of every dimension 0..n.
inline std::set<VertexTuple> all_faces(const Triangulation& t) {
    std::set<VertexTuple> out;
    for (const auto& s : t.simplices)
        for (std::size_t k = 1; k <= s.size(); ++k) detail::subsets_of_size(s, k, out);
    return out;
}

inline std::vector<std::size_t> f_vector(const Triangulation& t) {
    std::vector<std::size_t> f(static_cast<std::size_t>(t.dim) + 1, 0);
    for (int k = 0; k <= t.dim; ++k) f[static_cast<std::size_t>(k)] = faces_of_dim(t, k).size();
    return f;
}

/// Full diagnostic: structure plus the closed pseudo-manifold condition
/// (every (n-1)-face in exactly two top simplices).
inline ValidationReport validate(const Triangulation& t) {
    ValidationReport rep = validate_structure(t);
    if (!rep.ok()) return rep;
    std::map<VertexTuple, int> count;
    for (const auto& s : t.simplices) {
        for (std::size_t omit = 0; omit < s.size(); ++omit) {
            VertexTuple f;
            f.reserve(s.size() - 1);
            for (std::size_t i = 0; i < s.size(); ++i)
                if (i != omit) f.push_back(s[i]);
            ++count[f];
        }
    }
    const char* facet_name = t.dim == 4 ? "tetrahedron" : "triangle";
    for (const auto& [f, c] : count) {
        if (c != 2) {
            std::string fs;
            for (auto v : f) fs += (fs.empty() ? "" : ",") + std::to_string(v);
            rep.issues.push_back({"boundary", std::string(facet_name) + " (" + fs + ") in " +
                                                  std::to_string(c) +
                                                  (t.dim == 4 ? " pentachoron" : " tetrahedron") +
                                                  (c == 1 ? "" : "s")});
        }
    }
    return rep;
}

/// Alternating sum of face counts over the derived face lattice.
inline long long euler_characteristic(const Triangulation& t) {
    require_structure(t);
    long long chi = 0;
    auto f = f_vector(t);
    for (std::size_t k = 0; k < f.size(); ++k)
        chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(f[k]);
    return chi;
}

// --- JSON file format: {"dimension": n, "vertices": V, "simplices": [[...], ...]} ---

inline nlohmann::json triangulation_to_json(const Triangulation& t) {
    nlohmann::json j;
    j["dimension"] = t.dim;
    j["vertices"] = t.vertices;
    j["simplices"] = t.canonical().simplices;
    return j;
}

inline Triangulation triangulation_from_json(const nlohmann::json& j) {
    Triangulation t;
    try {
        t.dim = j.at("dimension").get<int>();
        t.vertices = j.at("vertices").get<std::uint32_t>();
        t.simplices = j.at("simplices").get<std::vector<VertexTuple>>();
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("triangulation JSON: ") + e.what());
    }
    require_structure(t);
    return t;
}

// --- Stock examples used across tests and fixtures ---

/// Boundary of the (n+1)-simplex: the minimal triangulated n-sphere.
inline Triangulation boundary_of_simplex(int n) {
    Triangulation t;
    t.dim = n;
    t.vertices = static_cast<std::uint32_t>(n) + 2;
    for (std::uint32_t omit = 0; omit < t.vertices; ++omit) {
        VertexTuple s;
        for (std::uint32_t v = 0; v < t.vertices; ++v)
            if (v != omit) s.push_back(v);
        t.simplices.push_back(std::move(s));
    }
    return t;
}

}  // namespace bistellar
