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
#include <string>

#include "errors.hpp"
#include "gf2m.hpp"
#include "rational.hpp"

namespace bistellar {

enum class FieldKind : std::uint8_t { Binary, Prime, Rational };

/// Coefficient domain: F_{2^m} (m in 1..4), F_p (p prime, p <= 2^16), or Q.
struct Domain {
    FieldKind kind = FieldKind::Rational;
    std::uint32_t param = 0;  // m for Binary, p for Prime

    friend bool operator==(const Domain&, const Domain&) = default;

    static Domain binary(unsigned m) {
        if (m < 1 || m > 4) throw input_error("F_{2^m} supports m in 1..4");
        return {FieldKind::Binary, m};
    }
    static Domain prime(std::uint32_t p) {
        if (p < 2 || p > 65536u || !is_prime(p))
            throw input_error("F_p requires a prime p <= 2^16, got " + std::to_string(p));
        return {FieldKind::Prime, p};
    }
    static Domain rational() { return {FieldKind::Rational, 0}; }

    std::uint32_t characteristic() const {
        switch (kind) {
            case FieldKind::Binary: return 2;
            case FieldKind::Prime: return param;
            default: return 0;
        }
    }

    bool finite() const { return kind != FieldKind::Rational; }

    std::uint64_t size() const {  // 0 for Q
        if (kind == FieldKind::Binary) return 1ull << param;
        if (kind == FieldKind::Prime) return param;
        return 0;
    }

    /// Tags: "F2" "F4" "F8" "F16" (binary tower), "Fp:<p>", "Q".
    std::string tag() const {
        if (kind == FieldKind::Rational) return "Q";
        if (kind == FieldKind::Binary) return "F" + std::to_string(1ull << param);
        return "Fp:" + std::to_string(param);
    }

    static Domain parse(const std::string& tag) {
        if (tag == "Q") return rational();
        if (tag == "F2") return binary(1);
        if (tag == "F4") return binary(2);
        if (tag == "F8") return binary(3);
        if (tag == "F16") return binary(4);
        if (tag.rfind("Fp:", 0) == 0) return prime(parse_u32(tag.substr(3)));
        if (tag.size() > 1 && tag[0] == 'F') return prime(parse_u32(tag.substr(1)));
        throw input_error("unknown field tag: '" + tag + "'");
    }

    static bool is_prime(std::uint32_t p) {
        if (p < 2) return false;
        for (std::uint32_t d = 2; d * d <= p; ++d)
            if (p % d == 0) return false;
        return true;
    }

  private:
    static std::uint32_t parse_u32(const std::string& s) {
        try {
            unsigned long v = std::stoul(s);
            if (v > 0xFFFFFFFFul) throw std::out_of_range("u32");
            return static_cast<std::uint32_t>(v);
        } catch (const std::exception&) {
            throw input_error("bad field tag number: '" + s + "'");
        }
    }
};

/// Immutable field element carrying its domain. Mixed-domain arithmetic throws.
class Scalar {
  public:
    Scalar() = default;  // 0 in Q

    static Scalar zero(Domain d) { return Scalar(d); }
    static Scalar one(Domain d) { return of(d, 1); }

    /// Canonical element from an unsigned representative (reduced for finite fields).
    static Scalar of(Domain d, std::uint64_t v) {
        Scalar s(d);
        if (d.kind == FieldKind::Rational) s.r_ = Rat(v);
        else s.u_ = static_cast<std::uint32_t>(v % d.size());
        return s;
    }

    static Scalar of(Domain d, const Rat& r) {
        if (d.kind != FieldKind::Rational) throw input_error("rational value in finite domain");
        Scalar s(d);
        s.r_ = r;
        return s;
    }

    static Scalar of_rat(const Rat& r) { return of(Domain::rational(), r); }

    Domain domain() const { return dom_; }
    bool is_zero() const { return dom_.finite() ? u_ == 0 : r_ == 0; }
    bool is_one() const { return dom_.finite() ? u_ == 1 : r_ == 1; }

    /// Finite-field representative (bit vector for F_{2^m}, residue for F_p).
    std::uint32_t repr() const {
        if (!dom_.finite()) throw input_error("repr() on a rational scalar");
        return u_;
    }
    const Rat& rat() const {
        if (dom_.finite()) throw input_error("rat() on a finite-field scalar");
        return r_;
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        a.check(b);
        Scalar s(a.dom_);
        switch (a.dom_.kind) {
            case FieldKind::Binary: s.u_ = a.u_ ^ b.u_; break;
            case FieldKind::Prime: s.u_ = add_mod(a.u_, b.u_, a.dom_.param); break;
            case FieldKind::Rational: s.r_ = a.r_ + b.r_; break;
        }
        return s;
    }

    friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

    Scalar operator-() const {
        Scalar s(dom_);
        switch (dom_.kind) {
            case FieldKind::Binary: s.u_ = u_; break;
            case FieldKind::Prime: s.u_ = u_ == 0 ? 0 : dom_.param - u_; break;
            case FieldKind::Rational: s.r_ = -r_; break;
        }
        return s;
    }

    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        a.check(b);
        Scalar s(a.dom_);
        switch (a.dom_.kind) {
            case FieldKind::Binary:
                s.u_ = gf2m_mul_fast(a.dom_.param, static_cast<std::uint8_t>(a.u_),
                                     static_cast<std::uint8_t>(b.u_));
                break;
            case FieldKind::Prime:
                s.u_ = static_cast<std::uint32_t>(
                    (static_cast<std::uint64_t>(a.u_) * b.u_) % a.dom_.param);
                break;
            case FieldKind::Rational: s.r_ = a.r_ * b.r_; break;
        }
        return s;
    }

    Scalar inv() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        Scalar s(dom_);
        switch (dom_.kind) {
            case FieldKind::Binary: s.u_ = gf2m_inv_fast(dom_.param, static_cast<std::uint8_t>(u_)); break;
            case FieldKind::Prime: s.u_ = pow_mod(u_, dom_.param - 2, dom_.param); break;
            case FieldKind::Rational: s.r_ = Rat(1) / r_; break;
        }
        return s;
    }

    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }

    Scalar pow(std::uint64_t e) const {
        Scalar r = one(dom_), base = *this;
        while (e) {
            if (e & 1ull) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        if (a.dom_ != b.dom_) return false;
        return a.dom_.finite() ? a.u_ == b.u_ : a.r_ == b.r_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::string str() const {
        return dom_.finite() ? std::to_string(u_) : rat_str(r_);
    }

    /// Parses the canonical element form. Binaryextension elements are codes
    /// 0..q-1 (bit vectors); prime-field and rational values are integers or
    /// fractions, reduced into the field.
    static Scalar parse(Domain d, const std::string& s) {
        if (d.kind == FieldKind::Rational) return of(d, rat_parse(s));
        Rat r = rat_parse(s);
        if (d.kind == FieldKind::Binary) {
            auto code = [&](const BigInt& n) {
                if (n < 0 || n >= d.size())
                    throw input_error("element code '" + n.str() + "' out of range for " + d.tag());
                return of(d, n.convert_to<std::uint32_t>());
            };
            if (is_integer(r)) return code(numerator(r));
            return code(numerator(r)) * code(denominator(r)).inv();
        }
        if (!is_integer(r)) {  // reduce a/b as a * b^{-1}
            Scalar num = from_int(d, numerator(r));
            Scalar den = from_int(d, denominator(r));
            if (den.is_zero())
                throw input_error("denominator not invertible in " + d.tag());
            return num * den.inv();
        }
        return from_int(d, numerator(r));
    }

    /// Reduces an arbitrary-precision integer modulo the characteristic.
    static Scalar from_int(Domain d, const BigInt& n) {
        if (!d.finite()) return of_rat(Rat(n));
        BigInt m = n % d.characteristic();
        if (m < 0) m += d.characteristic();
        return of(d, m.convert_to<std::uint32_t>());
    }

  private:
    explicit Scalar(Domain d) : dom_(d) {}

    void check(const Scalar& b) const {
        if (dom_ != b.dom_)
            throw input_error("domain mismatch: " + dom_.tag() + " vs " + b.dom_.tag());
    }

    static std::uint32_t add_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
        std::uint64_t s = static_cast<std::uint64_t>(a) + b;
        return static_cast<std::uint32_t>(s >= p ? s - p : s);
    }
    static std::uint32_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
        std::uint64_t r = 1 % p;
        a %= p;
        while (e) {
            if (e & 1ull) r = r * a % p;
            a = a * a % p;
            e >>= 1;
        }
        return static_cast<std::uint32_t>(r);
    }

    Domain dom_ = Domain::rational();
    std::uint32_t u_ = 0;
    Rat r_;
};

}  // namespace bistellar
