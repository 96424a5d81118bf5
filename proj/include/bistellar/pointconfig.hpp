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

#include <vector>

#include <json.hpp>

#include "distgeom.hpp"
#include "rational.hpp"
#include "triangulation.hpp"

namespace bistellar {

/// Labeled points with exact rational coordinates in R^d.
struct PointConfig {
    int dim = 0;
    std::vector<std::vector<Rat>> points;

    std::size_t count() const { return points.size(); }

    Rat squared_distance(std::size_t i, std::size_t j) const {
        Rat s = 0;
        for (int c = 0; c < dim; ++c) {
            Rat d = points[i][static_cast<std::size_t>(c)] - points[j][static_cast<std::size_t>(c)];
            s += d * d;
        }
        return s;
    }

    SquaredDistanceMatrix squared_distances() const {
        std::vector<std::vector<Rat>> m(count(), std::vector<Rat>(count(), Rat(0)));
        for (std::size_t i = 0; i < count(); ++i)
            for (std::size_t j = i + 1; j < count(); ++j) m[i][j] = m[j][i] = squared_distance(i, j);
        return SquaredDistanceMatrix(std::move(m));
    }
};

inline nlohmann::json pointconfig_to_json(const PointConfig& cfg) {
    nlohmann::json j;
    j["dimension"] = cfg.dim;
    j["mode"] = "exact";
    auto& pts = j["points"] = nlohmann::json::array();
    for (const auto& p : cfg.points) {
        nlohmann::json jp = nlohmann::json::array();
        for (const auto& c : p) jp.push_back(rat_str(c));
        pts.push_back(jp);
    }
    return j;
}

inline PointConfig pointconfig_from_json(const nlohmann::json& j) {
    PointConfig cfg;
    try {
        cfg.dim = j.at("dimension").get<int>();
        if (j.contains("mode") && j.at("mode").get<std::string>() != "exact")
            throw input_error("only exact-mode point configurations are accepted here");
        for (const auto& jp : j.at("points")) {
            std::vector<Rat> p;
            for (const auto& c : jp) p.push_back(rat_parse(c.get<std::string>()));
            if (p.size() != static_cast<std::size_t>(cfg.dim))
                throw input_error("point arity does not match dimension");
            cfg.points.push_back(std::move(p));
        }
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("point config JSON: ") + e.what());
    }
    return cfg;
}

/// Squared-distance edge labelling induced by placing one point per vertex.
inline EdgeLabelling induced_labelling(const PointConfig& cfg, const Triangulation& t) {
    require_structure(t);
    if (cfg.count() != t.vertices)
        throw input_error("point count " + std::to_string(cfg.count()) +
                          " does not match vertex count " + std::to_string(t.vertices));
    EdgeLabelling lab;
    for (const auto& e : faces_of_dim(t, 1)) lab[e] = cfg.squared_distance(e[0], e[1]);
    return lab;
}

}  // namespace bistellar
