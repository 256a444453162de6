/*
   Copyright 2026 The idtag authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.

   v0.1.0
*/

#ifndef IDTAG_INT128_HPP
#define IDTAG_INT128_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace idtag {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

/* helpers for u128, which the standard library does not cover reliably
   (std::to_string, std::numeric_limits etc. are unavailable in strict mode) */

inline std::string to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
        v /= 10;
    }
    return std::string(s.rbegin(), s.rend());
}

// parses a non-negative decimal integer; throws std::invalid_argument on junk,
// std::out_of_range past 2^128 - 1
inline u128 parse_u128(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("parse_u128: empty string");
    constexpr u128 max = ~static_cast<u128>(0);
    u128 v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') throw std::invalid_argument("parse_u128: not a decimal digit");
        const unsigned d = static_cast<unsigned>(c - '0');
        if (v > (max - d) / 10) throw std::out_of_range("parse_u128: value exceeds 128 bits");
        v = v * 10 + d;
    }
    return v;
}

inline u128 gcd_u128(u128 a, u128 b) {
    while (b != 0) {
        const u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// checked product, throws std::overflow_error if a*b does not fit 128 bits
inline u128 checked_mul_u128(u128 a, u128 b) {
    if (a != 0 && b > ~static_cast<u128>(0) / a)
        throw std::overflow_error("u128 product overflow");
    return a * b;
}

// exact non-negative rational with 128-bit numerator and denominator,
// always stored reduced
struct Rational {
    u128 num = 0;
    u128 den = 1;

    Rational() = default;
    Rational(u128 n, u128 d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        const u128 g = gcd_u128(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    bool operator==(const Rational& other) const = default;

    double value() const { return static_cast<double>(static_cast<long double>(num) / static_cast<long double>(den)); }

    std::string str() const { return to_string(num) + "/" + to_string(den); }
};

} // namespace idtag

#endif
