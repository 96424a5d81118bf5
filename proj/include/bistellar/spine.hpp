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
#include <string>
#include <vector>

#include <json.hpp>

#include "errors.hpp"

namespace bistellar {

using CellPair = std::pair<std::string, std::string>;

/// One true vertex of a special spine: three unordered opposite pairs of
/// 2-cell names. A cell may meet a vertex more than once, so names repeat.
struct Butterfly {
    std::array<CellPair, 3> pairs;
};

/// Spine presentation: declared 2-cells and one butterfly per true vertex.
struct SpinePresentation {
    std::vector<std::string> cells;
    std::vector<Butterfly> butterflies;
};

/// Built-in complexity-2 presentations, keyed "2_1".."2_4".
inline SpinePresentation spine_fixture(const std::string& name) {
    auto bf = [](CellPair a, CellPair b, CellPair c) { return Butterfly{{a, b, c}}; };
    if (name == "2_1")
        return {{"x", "y", "z"},
                {bf({"x", "x"}, {"z", "z"}, {"y", "z"}), bf({"y", "y"}, {"z", "z"}, {"x", "z"})}};
    if (name == "2_2")
        return {{"x", "y", "z"},
                {bf({"x", "x"}, {"y", "y"}, {"y", "z"}), bf({"x", "x"}, {"z", "z"}, {"x", "y"})}};
    if (name == "2_3")
        return {{"x", "y", "z"},
                {bf({"x", "x"}, {"y", "y"}, {"y", "z"}), bf({"x", "x"}, {"z", "z"}, {"y", "z"})}};
    if (name == "2_4")
        return {{"x", "y", "z"}, {bf({"x", "x"}, {"y", "y"}, {"z", "z"})}};
    throw input_error("unknown fixture: '" + name + "' (expected 2_1..2_4)");
}

inline const std::vector<std::string>& spine_fixture_names() {
    static const std::vector<std::string> names = {"2_1", "2_2", "2_3", "2_4"};
    return names;
}

// --- JSON: {"cells": [names], "butterflies": [[[a,c],[b,d],[x,y]], ...]} ---

inline nlohmann::json spine_to_json(const SpinePresentation& s) {
    nlohmann::json j;
    j["cells"] = s.cells;
    auto& bs = j["butterflies"] = nlohmann::json::array();
    for (const auto& b : s.butterflies) {
        nlohmann::json jb = nlohmann::json::array();
        for (const auto& [u, v] : b.pairs) jb.push_back({u, v});
        bs.push_back(jb);
    }
    return j;
}

inline SpinePresentation spine_from_json(const nlohmann::json& j) {
    SpinePresentation s;
    try {
        s.cells = j.at("cells").get<std::vector<std::string>>();
        for (const auto& jb : j.at("butterflies")) {
            if (jb.size() != 3) throw input_error("butterfly needs exactly 3 pairs");
            Butterfly b;
            for (std::size_t i = 0; i < 3; ++i) {
                if (jb[i].size() != 2) throw input_error("butterfly pair needs 2 cells");
                b.pairs[i] = {jb[i][0].get<std::string>(), jb[i][1].get<std::string>()};
            }
            s.butterflies.push_back(b);
        }
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("spine JSON: ") + e.what());
    }
    return s;
}

}  // namespace bistellar
