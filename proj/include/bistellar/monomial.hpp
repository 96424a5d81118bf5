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
#include <string>
#include <vector>

#include "errors.hpp"

namespace bistellar {

/// Sparse monomial: sorted (variable id, exponent) pairs, exponents >= 1.
class Monomial {
  public:
    using Factor = std::pair<std::uint32_t, std::uint32_t>;

    Monomial() = default;  // the empty monomial (1)

    static Monomial var(std::uint32_t id, std::uint32_t exp = 1) {
        Monomial m;
        if (exp > 0) m.f_.push_back({id, exp});
        return m;
    }

    static Monomial of(std::vector<Factor> factors) {
        std::sort(factors.begin(), factors.end());
        Monomial m;
        for (const auto& [v, e] : factors) {
            if (e == 0) continue;
            if (!m.f_.empty() && m.f_.back().first == v) m.f_.back().second += e;
            else m.f_.push_back({v, e});
        }
        return m;
    }

    const std::vector<Factor>& factors() const { return f_; }
    bool is_one() const { return f_.empty(); }

    std::uint32_t degree() const {
        std::uint32_t d = 0;
        for (const auto& [v, e] : f_) d += e;
        return d;
    }

    std::uint32_t exponent_of(std::uint32_t id) const {
        for (const auto& [v, e] : f_)
            if (v == id) return e;
        return 0;
    }

    std::uint32_t max_var() const { return f_.empty() ? 0 : f_.back().first; }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r;
        std::size_t i = 0, j = 0;
        while (i < a.f_.size() || j < b.f_.size()) {
            if (j == b.f_.size() || (i < a.f_.size() && a.f_[i].first < b.f_[j].first))
                r.f_.push_back(a.f_[i++]);
            else if (i == a.f_.size() || b.f_[j].first < a.f_[i].first)
                r.f_.push_back(b.f_[j++]);
            else {
                r.f_.push_back({a.f_[i].first, a.f_[i].second + b.f_[j].second});
                ++i, ++j;
            }
        }
        return r;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    /// "x", "x^2", "x^2*y" with variable names looked up by id.
    std::string str(const std::vector<std::string>& names) const {
        if (f_.empty()) return "1";
        std::string out;
        for (const auto& [v, e] : f_) {
            if (!out.empty()) out += "*";
            if (v >= names.size()) throw input_error("variable id out of range");
            out += names[v];
            if (e > 1) out += "^" + std::to_string(e);
        }
        return out;
    }

    std::vector<Factor> f_;
};

/// Canonical term precedence: total degree first, then the exponent pattern
/// (the multiset of exponents, compared as a descending sequence), then the
/// exponent vector lexicographically. Higher-ranked monomials print first, so
/// x^2 + z^2 + y*z comes out with both squares ahead of the cross term.
inline bool canonical_before(const Monomial& a, const Monomial& b) {
    const std::uint32_t da = a.degree(), db = b.degree();
    if (da != db) return da > db;

    auto pattern = [](const Monomial& m) {
        std::vector<std::uint32_t> p;
        p.reserve(m.factors().size());
        for (const auto& [v, e] : m.factors()) p.push_back(e);
        std::sort(p.begin(), p.end(), std::greater<>());
        return p;
    };
    const auto pa = pattern(a), pb = pattern(b);
    if (pa != pb) return std::lexicographical_compare(pb.begin(), pb.end(), pa.begin(), pa.end());

    // Lex on exponent vectors: at the smallest variable id where they differ,
    // the larger exponent ranks first.
    std::size_t i = 0, j = 0;
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    while (i < fa.size() && j < fb.size()) {
        if (fa[i].first != fb[j].first) return fa[i].first < fb[j].first;
        if (fa[i].second != fb[j].second) return fa[i].second > fb[j].second;
        ++i, ++j;
    }
    return i < fa.size();
}

struct CanonicalLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return canonical_before(a, b); }
};

}  // namespace bistellar
