// Copyright 2026 The sqfa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <boost/rational.hpp>

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

// Under C++20 rewritten comparisons, boost 1.74's mixed `integer == rational`
// template calls itself forever. Exact non-template overloads win overload
// resolution and break the cycle.
namespace boost {

inline bool operator==(const rational<std::int64_t>& a, std::int64_t b) {
    return a.numerator() == b && a.denominator() == 1;
}
inline bool operator==(std::int64_t b, const rational<std::int64_t>& a) { return a == b; }
inline bool operator==(const rational<std::int64_t>& a, int b) { return a == static_cast<std::int64_t>(b); }
inline bool operator==(int b, const rational<std::int64_t>& a) { return a == static_cast<std::int64_t>(b); }

}  // namespace boost

namespace sqfa {

using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational& r) { return boost::rational_cast<double>(r); }

inline std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Parses "3", "-1/3" or a plain decimal such as "0.25" exactly.
inline Rational parse_rational(std::string_view text) {
    auto fail = [&] { throw std::invalid_argument("not a rational number: '" + std::string(text) + "'"); };
    if (text.empty()) fail();
    auto parse_int = [&](std::string_view s) -> std::int64_t {
        if (s.empty()) fail();
        std::size_t i = 0;
        bool neg = false;
        if (s[0] == '-' || s[0] == '+') {
            neg = s[0] == '-';
            i = 1;
        }
        if (i == s.size()) fail();
        std::int64_t v = 0;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') fail();
            if (v > (INT64_MAX - 9) / 10) fail();
            v = v * 10 + (s[i] - '0');
        }
        return neg ? -v : v;
    };
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        std::int64_t den = parse_int(text.substr(slash + 1));
        if (den == 0) fail();
        return Rational(parse_int(text.substr(0, slash)), den);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        if (frac.size() > 15) fail();
        bool neg = !whole.empty() && whole[0] == '-';
        std::int64_t w = (whole.empty() || whole == "-" || whole == "+") ? 0 : parse_int(whole);
        std::int64_t scale = 1;
        std::int64_t f = 0;
        for (char c : frac) {
            if (c < '0' || c > '9') fail();
            f = f * 10 + (c - '0');
            scale *= 10;
        }
        Rational mag = Rational(w < 0 ? -w : w) + Rational(f, scale);
        return neg ? -mag : mag;
    }
    return Rational(parse_int(text));
}

/// Closest rational with denominator at most `max_den` (continued fractions).
/// Throws when it is further than 1e-12 from `x`.
inline Rational rational_from_double(double x, std::int64_t max_den = 1'000'000) {
    if (!std::isfinite(x)) throw std::invalid_argument("non-finite value has no rational form");
    double rest = x;
    std::int64_t h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    for (int iter = 0; iter < 64; ++iter) {
        double a = std::floor(rest);
        if (std::fabs(a) > 9e15) break;
        auto ai = static_cast<std::int64_t>(a);
        std::int64_t k2 = ai * k1 + k0;
        if (k2 > max_den) break;
        std::int64_t h2 = ai * h1 + h0;
        h0 = h1; h1 = h2; k0 = k1; k1 = k2;
        double frac = rest - a;
        if (std::fabs(static_cast<double>(h1) / static_cast<double>(k1) - x) < 1e-15 || frac < 1e-15) break;
        rest = 1.0 / frac;
    }
    if (k1 == 0 || std::fabs(static_cast<double>(h1) / static_cast<double>(k1) - x) > 1e-12)
        throw std::invalid_argument("no small rational close to " + std::to_string(x));
    return Rational(h1, k1);
}

/// cos^2(pi * a) when it is rational. By Niven's theorem that happens exactly
/// when a mod 1 has denominator 1, 2, 3, 4 or 6.
inline std::optional<Rational> cos_squared_pi(const Rational& a) {
    // reduce to a multiple of 1/12 in [0, 1)
    Rational t = a - Rational(static_cast<std::int64_t>(std::floor(to_double(a))));
    if (t < 0) t += 1;
    if (t >= 1) t -= 1;
    Rational twelfths = t * 12;
    if (twelfths.denominator() != 1) return std::nullopt;
    switch (twelfths.numerator()) {
        case 0: return Rational(1);
        case 2: case 10: return Rational(3, 4);
        case 3: case 9: return Rational(1, 2);
        case 4: case 8: return Rational(1, 4);
        case 6: return Rational(0);
        default: return std::nullopt;
    }
}

}  // namespace sqfa
