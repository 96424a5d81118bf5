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
#include <cmath>

#include "scalar.hpp"

namespace bistellar {

/// Completion of pentagon data: given edge values a..g with c, f, g
/// invertible, the remaining diagonals are forced:
///   j = (ce + dg)/f,  k = (ac + bf)/g,  i = (ace + bef + adg)/(fg)
/// and the five quadrilateral relations
///   (1) jf = gd + ec   (2) kg = ac + bf   (3) if = ad + ke
///   (4) ig = aj + be   (5) kj = ic + bd
/// all hold in any commutative ring. The flags re-verify each relation.
struct PentagonResult {
    Scalar i, j, k;
    std::array<bool, 5> holds;
    bool all_hold() const {
        for (bool h : holds)
            if (!h) return false;
        return true;
    }
};

inline PentagonResult pentagon_complete(const Scalar& a, const Scalar& b, const Scalar& c,
                                        const Scalar& d, const Scalar& e, const Scalar& f,
                                        const Scalar& g) {
    if (c.is_zero() || f.is_zero() || g.is_zero())
        throw input_error("pentagon completion needs invertible c, f, g");
    const Scalar j = (c * e + d * g) * f.inv();
    const Scalar k = (a * c + b * f) * g.inv();
    const Scalar i = (a * c * e + b * e * f + a * d * g) * (f * g).inv();
    PentagonResult r{i, j, k, {}};
    r.holds[0] = (j * f == g * d + e * c);
    r.holds[1] = (k * g == a * c + b * f);
    r.holds[2] = (i * f == a * d + k * e);
    r.holds[3] = (i * g == a * j + b * e);
    r.holds[4] = (k * j == i * c + b * d);
    return r;
}

/// Floating variant for geometric length data; relations are checked to a
/// relative tolerance. Returns the largest relative residual seen.
struct PentagonRealResult {
    double i, j, k;
    double max_residual;
};

inline PentagonRealResult pentagon_complete_real(double a, double b, double c, double d, double e,
                                                 double f, double g) {
    if (c == 0 || f == 0 || g == 0)
        throw input_error("pentagon completion needs nonzero c, f, g");
    const double j = (c * e + d * g) / f;
    const double k = (a * c + b * f) / g;
    const double i = (a * c * e + b * e * f + a * d * g) / (f * g);
    auto rel = [](double lhs, double rhs) {
        double scale = std::max({std::fabs(lhs), std::fabs(rhs), 1e-300});
        return std::fabs(lhs - rhs) / scale;
    };
    double worst = 0;
    worst = std::max(worst, rel(j * f, g * d + e * c));
    worst = std::max(worst, rel(k * g, a * c + b * f));
    worst = std::max(worst, rel(i * f, a * d + k * e));
    worst = std::max(worst, rel(i * g, a * j + b * e));
    worst = std::max(worst, rel(k * j, i * c + b * d));
    return {i, j, k, worst};
}

}  // namespace bistellar
