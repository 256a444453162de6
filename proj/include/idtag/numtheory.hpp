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

#ifndef IDTAG_NUMTHEORY_HPP
#define IDTAG_NUMTHEORY_HPP

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "int128.hpp"

namespace idtag {

inline u64 mulmod_u64(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

inline u64 powmod_u64(u64 base, u128 exp, u64 m) {
    if (m == 1) return 0;
    u64 r = 1;
    u64 b = base % m;
    while (exp > 0) {
        if (exp & 1) r = mulmod_u64(r, b, m);
        b = mulmod_u64(b, b, m);
        exp >>= 1;
    }
    return r;
}

// 128-bit modular product via shift-and-add; slow, reserved for operands
// beyond 64 bits where no native double-width type exists
inline u128 mulmod_u128(u128 a, u128 b, u128 m) {
    a %= m;
    b %= m;
    if (a == 0 || b == 0) return 0;
    if (m <= (~static_cast<u64>(0))) return mulmod_u64(static_cast<u64>(a), static_cast<u64>(b), static_cast<u64>(m));
    u128 r = 0;
    while (b > 0) {
        if (b & 1) {
            r += a;
            if (r >= m) r -= m;
        }
        b >>= 1;
        if (b == 0) break;
        a <<= 1;
        if (a >= m) a -= m;
    }
    return r;
}

inline u128 powmod_u128(u128 base, u128 exp, u128 m) {
    if (m == 1) return 0;
    u128 r = 1;
    u128 b = base % m;
    while (exp > 0) {
        if (exp & 1) r = mulmod_u128(r, b, m);
        b = mulmod_u128(b, b, m);
        exp >>= 1;
    }
    return r;
}

namespace detail {

inline bool miller_rabin_u64(u64 n, u64 a) {
    if (a % n == 0) return true;
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    u64 x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod_u64(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

inline bool miller_rabin_u128(u128 n, u128 a) {
    a %= n;
    if (a == 0) return true;
    u128 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    u128 x = powmod_u128(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod_u128(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

} // namespace detail

// deterministic for the full 64-bit range (standard 12-witness set)
inline bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
        if (!detail::miller_rabin_u64(n, a)) return false;
    return true;
}

// deterministic below 2^64, strong-probable-prime (24 fixed witnesses) above;
// only used internally on cofactors while factoring p^m - 1
inline bool is_prime_u128(u128 n) {
    if (n <= (~static_cast<u64>(0))) return is_prime_u64(static_cast<u64>(n));
    if ((n & 1) == 0) return false;
    for (u64 a : {2ull,  3ull,  5ull,  7ull,  11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull,
                  41ull, 43ull, 47ull, 53ull, 59ull, 61ull, 67ull, 71ull, 73ull, 79ull, 83ull, 89ull})
        if (!detail::miller_rabin_u128(n, a)) return false;
    return true;
}

namespace detail {

// Brent's cycle variant of Pollard rho; n odd composite, not a prime power check needed
inline u64 pollard_rho_u64(u64 n) {
    if (n % 2 == 0) return 2;
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1;
        u64 q = 1;
        int lam = 1;
        while (d == 1) {
            x = y;
            for (int i = 0; i < lam; ++i) y = (mulmod_u64(y, y, n) + c) % n;
            int k = 0;
            while (k < lam && d == 1) {
                const u64 ys = y;
                const int lim = std::min(128, lam - k);
                for (int i = 0; i < lim; ++i) {
                    y = (mulmod_u64(y, y, n) + c) % n;
                    q = mulmod_u64(q, x > y ? x - y : y - x, n);
                }
                d = std::gcd(q, n);
                if (d == n) {
                    // backtrack one step at a time
                    y = ys;
                    d = 1;
                    do {
                        y = (mulmod_u64(y, y, n) + c) % n;
                        d = std::gcd(x > y ? x - y : y - x, n);
                    } while (d == 1);
                    break;
                }
                k += lim;
            }
            lam *= 2;
        }
        if (d != n) return d;
    }
}

inline u128 pollard_rho_u128(u128 n) {
    if (n <= (~static_cast<u64>(0))) return pollard_rho_u64(static_cast<u64>(n));
    if ((n & 1) == 0) return 2;
    for (u128 c = 1;; ++c) {
        u128 x = 2, y = 2, d = 1;
        while (d == 1) {
            x = mulmod_u128(x, x, n) + c;
            if (x >= n) x -= n;
            y = mulmod_u128(y, y, n) + c;
            if (y >= n) y -= n;
            y = mulmod_u128(y, y, n) + c;
            if (y >= n) y -= n;
            d = gcd_u128(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

inline void factor_rec(u128 n, std::vector<u128>& out) {
    if (n == 1) return;
    if (is_prime_u128(n)) {
        out.push_back(n);
        return;
    }
    const u128 d = pollard_rho_u128(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

} // namespace detail

// prime factorization (p_i, e_i) with p_i ascending
inline std::vector<std::pair<u128, unsigned>> factorize(u128 n) {
    std::vector<u128> primes;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull, 41ull, 43ull, 47ull}) {
        while (n % p == 0) {
            primes.push_back(p);
            n /= p;
        }
    }
    detail::factor_rec(n, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<u128, unsigned>> out;
    for (u128 p : primes) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.emplace_back(p, 1u);
    }
    return out;
}

// distinct prime factors of p^m - 1, computed via the cyclotomic splitting
// p^m - 1 = prod_{d | m} Phi_d(p) so that the pieces handed to Pollard rho
// stay small (usually within 64 bits)
inline std::vector<u128> prime_factors_of_pm1(u64 p, unsigned m) {
    std::vector<unsigned> divisors;
    for (unsigned d = 1; d <= m; ++d)
        if (m % d == 0) divisors.push_back(d);
    std::vector<u128> phi(m + 1, 0);
    std::vector<u128> primes;
    for (unsigned d : divisors) {
        u128 pd = 1;
        for (unsigned i = 0; i < d; ++i) pd = checked_mul_u128(pd, p);
        u128 value = pd - 1;
        for (unsigned e : divisors) {
            if (e < d && d % e == 0) value /= phi[e];
        }
        phi[d] = value;
        for (const auto& [f, mult] : factorize(value)) {
            (void)mult;
            primes.push_back(f);
        }
    }
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    return primes;
}

// smallest generator of GF(p)^* ; pre: p prime
inline u64 smallest_primitive_root(u64 p) {
    if (p == 2) return 1;
    const std::vector<u128> factors = prime_factors_of_pm1(p, 1);
    for (u64 g = 2; g < p; ++g) {
        bool ok = true;
        for (u128 f : factors) {
            if (powmod_u64(g, (p - 1) / static_cast<u64>(f), p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw Error("no primitive root found (unreachable for prime p)");
}

// prime closest to n by absolute distance; ties resolved toward the smaller prime
inline u64 nearest_prime(u64 n) {
    for (u64 d = 0;; ++d) {
        if (n >= d && n - d >= 2 && is_prime_u64(n - d)) return n - d;
        if (d <= ~n && is_prime_u64(n + d)) return n + d; // n + d must not wrap
    }
}

} // namespace idtag

#endif
