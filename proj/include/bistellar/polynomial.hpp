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

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "monomial.hpp"
#include "scalar.hpp"

namespace bistellar {

/// Multivariate polynomial in canonical form: terms strictly ordered by the
/// canonical monomial precedence, no zero coefficients, one fixed coefficient
/// domain. Structural equality therefore equals mathematical equality.
class Polynomial {
  public:
    struct Term {
        Scalar coeff;
        Monomial mono;
        friend bool operator==(const Term&, const Term&) = default;
    };

    explicit Polynomial(Domain d) : dom_(d) {}

    static Polynomial zero(Domain d) { return Polynomial(d); }

    static Polynomial constant(const Scalar& c) {
        Polynomial p(c.domain());
        if (!c.is_zero()) p.terms_.push_back({c, Monomial()});
        return p;
    }

    static Polynomial variable(Domain d, std::uint32_t id) {
        Polynomial p(d);
        p.terms_.push_back({Scalar::one(d), Monomial::var(id)});
        return p;
    }

    static Polynomial term(const Scalar& c, const Monomial& m) {
        Polynomial p(c.domain());
        if (!c.is_zero()) p.terms_.push_back({c, m});
        return p;
    }

    Domain domain() const { return dom_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    std::uint32_t total_degree() const {
        std::uint32_t d = 0;
        for (const auto& t : terms_) d = std::max(d, t.mono.degree());
        return d;
    }

    std::uint32_t max_var() const {
        std::uint32_t v = 0;
        for (const auto& t : terms_) v = std::max(v, t.mono.max_var());
        return v;
    }

    bool uses_var(std::uint32_t id) const {
        for (const auto& t : terms_)
            if (t.mono.exponent_of(id) > 0) return true;
        return false;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        a.check(b);
        Polynomial r(a.dom_);
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            if (j == b.terms_.size() ||
                (i < a.terms_.size() && canonical_before(a.terms_[i].mono, b.terms_[j].mono))) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (i == a.terms_.size() ||
                       canonical_before(b.terms_[j].mono, a.terms_[i].mono)) {
                r.terms_.push_back(b.terms_[j++]);
            } else {
                Scalar c = a.terms_[i].coeff + b.terms_[j].coeff;
                if (!c.is_zero()) r.terms_.push_back({c, a.terms_[i].mono});
                ++i, ++j;
            }
        }
        return r;
    }

    Polynomial operator-() const {
        Polynomial r(dom_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({-t.coeff, t.mono});
        return r;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check(b);
        std::map<Monomial, Scalar, CanonicalLess> acc;
        for (const auto& ta : a.terms_)
            for (const auto& tb : b.terms_) {
                Monomial m = ta.mono * tb.mono;
                Scalar c = ta.coeff * tb.coeff;
                auto it = acc.find(m);
                if (it == acc.end()) acc.emplace(std::move(m), c);
                else it->second = it->second + c;
            }
        Polynomial r(a.dom_);
        for (const auto& [m, c] : acc)
            if (!c.is_zero()) r.terms_.push_back({c, m});
        return r;
    }

    friend Polynomial operator*(const Scalar& c, const Polynomial& p) {
        return Polynomial::constant(c) * p;
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Value at a point. Every variable occurring in the polynomial must be
    /// assigned, and all values must live in the coefficient domain.
    Scalar evaluate(const std::map<std::uint32_t, Scalar>& assignment) const {
        Scalar acc = Scalar::zero(dom_);
        for (const auto& t : terms_) {
            Scalar prod = t.coeff;
            for (const auto& [v, e] : t.mono.factors()) {
                auto it = assignment.find(v);
                if (it == assignment.end())
                    throw input_error("evaluate: missing variable id " + std::to_string(v));
                if (it->second.domain() != dom_)
                    throw input_error("evaluate: domain mismatch for variable id " +
                                      std::to_string(v));
                prod = prod * it->second.pow(e);
            }
            acc = acc + prod;
        }
        return acc;
    }

    /// Canonical textual form: terms in canonical order joined by " + ",
    /// monomials rendered "x^2*y" style. The zero polynomial prints "0".
    std::string str(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& t : terms_) {
            if (!out.empty()) out += " + ";
            if (t.mono.is_one()) out += t.coeff.str();
            else if (t.coeff.is_one()) out += t.mono.str(names);
            else out += t.coeff.str() + "*" + t.mono.str(names);
        }
        return out;
    }

    /// Parses the canonical textual form back. Unknown names are an error.
    static Polynomial parse(const std::string& text,
                            const std::unordered_map<std::string, std::uint32_t>& vars,
                            Domain dom) {
        Polynomial acc = zero(dom);
        for (const std::string& term_text : split_terms(text)) {
            Scalar coeff = Scalar::one(dom);
            Monomial mono;
            for (const std::string& f : split(term_text, '*')) {
                std::string fac = trim(f);
                if (fac.empty()) throw input_error("empty factor in polynomial: '" + text + "'");
                if (fac[0] == '-' || (fac[0] >= '0' && fac[0] <= '9')) {
                    coeff = coeff * Scalar::parse(dom, fac);
                    continue;
                }
                auto caret = fac.find('^');
                std::string name = caret == std::string::npos ? fac : fac.substr(0, caret);
                std::uint32_t exp = 1;
                if (caret != std::string::npos) {
                    try {
                        exp = static_cast<std::uint32_t>(std::stoul(fac.substr(caret + 1)));
                    } catch (const std::exception&) {
                        throw input_error("bad exponent in '" + fac + "'");
                    }
                }
                auto it = vars.find(name);
                if (it == vars.end()) throw input_error("undeclared variable: '" + name + "'");
                mono = mono * Monomial::var(it->second, exp);
            }
            acc = acc + term(coeff, mono);
        }
        return acc;
    }

  private:
    void check(const Polynomial& b) const {
        if (dom_ != b.dom_)
            throw input_error("polynomial domain mismatch: " + dom_.tag() + " vs " + b.dom_.tag());
    }

    static std::string trim(const std::string& s) {
        auto a = s.find_first_not_of(" \t");
        auto b = s.find_last_not_of(" \t");
        return a == std::string::npos ? "" : s.substr(a, b - a + 1);
    }

    static std::vector<std::string> split(const std::string& s, char sep) {
        std::vector<std::string> out;
        std::size_t start = 0;
        for (std::size_t i = 0; i <= s.size(); ++i) {
            if (i == s.size() || s[i] == sep) {
                out.push_back(s.substr(start, i - start));
                start = i + 1;
            }
        }
        return out;
    }

    static std::vector<std::string> split_terms(const std::string& s) {
        std::vector<std::string> out;
        std::size_t start = 0, pos;
        while ((pos = s.find(" + ", start)) != std::string::npos) {
            out.push_back(s.substr(start, pos - start));
            start = pos + 3;
        }
        out.push_back(s.substr(start));
        if (out.size() == 1 && trim(out[0]) == "0") return {};
        return out;
    }

    Domain dom_;
    std::vector<Term> terms_;
};

/// Spec-level arithmetic entry point; preconditions as the operators.
enum class PolyOp { Add, Mul };
inline Polynomial poly_arith(const Polynomial& p, const Polynomial& q, PolyOp op) {
    return op == PolyOp::Add ? p + q : p * q;
}

}  // namespace bistellar
