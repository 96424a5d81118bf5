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

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "errors.hpp"

namespace bistellar {

inline constexpr const char* kVersion = "bistellar 0.1.0";

/// FNV-1a 64-bit content digest (not cryptographic; used to tie reports to
/// their inputs and to compare snapshots byte-for-byte).
inline std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001B3ull;
    }
    return h;
}

inline std::string fnv1a64_hex(const std::string& data) {
    static const char* digits = "0123456789abcdef";
    std::uint64_t h = fnv1a64(data);
    std::string out = "fnv1a64:";
    for (int i = 60; i >= 0; i -= 4) out += digits[(h >> i) & 0xF];
    return out;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot write file: " + path);
    out << data;
}

inline nlohmann::json json_parse(const std::string& text, const std::string& origin) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw input_error(origin + ": " + e.what());
    }
}

/// Machine-readable run report. nlohmann::json keeps keys sorted, so dumping
/// is deterministic; identical inputs and seed yield identical bytes.
/// Wall-clock timing is deliberately not part of the payload.
class RunReport {
  public:
    RunReport(std::string command) {
        j_["command"] = std::move(command);
        j_["version"] = kVersion;
        j_["inputs"] = nlohmann::json::object();
    }

    void add_input(const std::string& name, const std::string& content) {
        j_["inputs"][name] = fnv1a64_hex(content);
    }

    void set_results(nlohmann::json results) { j_["results"] = std::move(results); }

    const nlohmann::json& json() const { return j_; }
    std::string dump() const { return j_.dump(2) + "\n"; }

  private:
    nlohmann::json j_;
};

}  // namespace bistellar
