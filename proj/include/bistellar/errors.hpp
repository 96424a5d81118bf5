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

#include <stdexcept>
#include <string>

namespace bistellar {

/// Malformed or contract-violating input (files, domains, arguments). CLI exit 2.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// Enumeration request exceeds the configured node budget. CLI exit 3.
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

/// Pachner move locus does not match its pattern or would create an
/// already-present face. CLI exit 4.
struct move_error : std::runtime_error {
    explicit move_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bistellar
