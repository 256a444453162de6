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

#ifndef IDTAG_FIELD_HPP
#define IDTAG_FIELD_HPP

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "int128.hpp"
#include "numtheory.hpp"

namespace idtag {

/* Finite fields GF(p^m) with an explicit canonical element order.

   Representation: an element is its coefficient vector over GF(p) in the
   polynomial basis, little-endian (constant term first); prime-field
   elements are single residues.  The modulus for extension fields is the
   Conway polynomial C_{p,m} where the built-in table covers (p, m)
   (p <= 23, m in {2, 3, 4}); beyond the table the modulus is the first
   irreducible monic polynomial x^m + a_{m-1} x^{m-1} + ... + a_0 with x
   primitive, enumerating candidates by ascending N = sum a_i p^i.  Either
   way the choice is deterministic and part of the serialized field spec,
   because codeword bytes depend on it.

   Element order: index 0 is the zero element and index i >= 1 is alpha^(i-1)
   for the primitive element alpha (the residue class of x for extension
   fields, the smallest primitive root for prime fields).  element_from_index
   runs in O(log i) multiplications by square-and-multiply -- it never steps
   through the order sequentially.  The inverse map uses baby-step/giant-step
   and is offered only for fields with at most 2^48 elements.

   Size budgets (checked at construction): p < 2^63 for prime fields,
   p < 2^61 and m <= 16 for extension fields, p^m < 2^127.  The extension
   limits guarantee that the lazy 128-bit accumulator in the multiplication
   kernel, bounded by (2m-1)(p-1)^2, cannot wrap. */

struct FieldElement {
    std::vector<u64> coefficients; // little-endian over GF(p), size = degree m

    bool operator==(const FieldElement&) const = default;
};

namespace detail {

using Poly = std::vector<u64>; // little-endian coefficients over GF(p)

inline void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod f with f monic
inline Poly poly_mod(Poly a, const Poly& f, u64 p) {
    poly_trim(a);
    const std::size_t df = f.size() - 1;
    while (a.size() > df) {
        const u64 c = a.back();
        if (c != 0) {
            const std::size_t shift = a.size() - 1 - df;
            for (std::size_t i = 0; i < df; ++i) {
                if (f[i] == 0) continue;
                const u64 s = mulmod_u64(c, f[i], p);
                a[shift + i] = a[shift + i] >= s ? a[shift + i] - s : a[shift + i] + p - s;
            }
        }
        a.pop_back();
        poly_trim(a);
    }
    return a;
}

inline Poly poly_mul(const Poly& a, const Poly& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    std::vector<u128> conv(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) conv[i + j] += mulmod_u64(a[i], b[j], p);
    }
    Poly out(conv.size());
    for (std::size_t i = 0; i < conv.size(); ++i) out[i] = static_cast<u64>(conv[i] % p);
    poly_trim(out);
    return out;
}

inline Poly poly_powmod(Poly base, u128 e, const Poly& f, u64 p) {
    Poly r{1};
    base = poly_mod(std::move(base), f, p);
    while (e > 0) {
        if (e & 1) r = poly_mod(poly_mul(r, base, p), f, p);
        base = poly_mod(poly_mul(base, base, p), f, p);
        e >>= 1;
    }
    return r;
}

inline Poly poly_gcd(Poly a, Poly b, u64 p) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        const u64 lead_inv = powmod_u64(b.back(), p - 2, p);
        Poly monic(b.size());
        for (std::size_t i = 0; i < b.size(); ++i) monic[i] = mulmod_u64(b[i], lead_inv, p);
        Poly r = poly_mod(std::move(a), monic, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Rabin's irreducibility test for monic f of degree m >= 1 over GF(p)
inline bool poly_is_irreducible(const Poly& f, u64 p) {
    const unsigned m = static_cast<unsigned>(f.size()) - 1;
    if (m == 0 || f.back() != 1) return false;
    if (m == 1) return true;
    if (f[0] == 0) return false; // divisible by x
    std::vector<Poly> frob(m + 1); // frob[i] = x^(p^i) mod f
    Poly h{0, 1};
    for (unsigned i = 1; i <= m; ++i) {
        h = poly_powmod(std::move(h), p, f, p);
        frob[i] = h;
    }
    Poly x_mod = poly_mod(Poly{0, 1}, f, p);
    if (frob[m] != x_mod) return false;
    for (unsigned r = 2; r <= m; ++r) {
        if (m % r != 0) continue;
        bool r_prime = true;
        for (unsigned d = 2; d * d <= r; ++d)
            if (r % d == 0) r_prime = false;
        if (!r_prime) continue;
        Poly g = frob[m / r];
        if (g.size() < 2) g.resize(2, 0);
        g[1] = g[1] >= 1 ? g[1] - 1 : p - 1; // g - x
        poly_trim(g);
        Poly d = poly_gcd(f, std::move(g), p);
        if (d.size() != 1) return false;
    }
    return true;
}

// is the residue class of x a generator of GF(p^m)^* modulo f?
inline bool poly_x_is_primitive(const Poly& f, u64 p, u128 order, const std::vector<u128>& order_prime_factors) {
    for (u128 ell : order_prime_factors) {
        if (poly_powmod(Poly{0, 1}, order / ell, f, p) == Poly{1}) return false;
    }
    return true;
}

struct ConwayEntry {
    u64 p;
    unsigned m;
    std::vector<u64> coeffs; // little-endian including the monic leading 1
};

// Conway polynomials C_{p,m}: generated offline from the standard definition
// (norm-compatible, minimal in the twisted lexicographic order) and verified
// against published tables before freezing
inline const std::vector<ConwayEntry>& conway_table() {
    static const std::vector<ConwayEntry> table = {
        {2, 2, {1, 1, 1}},
        {2, 3, {1, 1, 0, 1}},
        {2, 4, {1, 1, 0, 0, 1}},
        {3, 2, {2, 2, 1}},
        {3, 3, {1, 2, 0, 1}},
        {3, 4, {2, 0, 0, 2, 1}},
        {5, 2, {2, 4, 1}},
        {5, 3, {3, 3, 0, 1}},
        {5, 4, {2, 4, 4, 0, 1}},
        {7, 2, {3, 6, 1}},
        {7, 3, {4, 0, 6, 1}},
        {7, 4, {3, 4, 5, 0, 1}},
        {11, 2, {2, 7, 1}},
        {11, 3, {9, 2, 0, 1}},
        {11, 4, {2, 10, 8, 0, 1}},
        {13, 2, {2, 12, 1}},
        {13, 3, {11, 2, 0, 1}},
        {13, 4, {2, 12, 3, 0, 1}},
        {17, 2, {3, 16, 1}},
        {17, 3, {14, 1, 0, 1}},
        {17, 4, {3, 10, 7, 0, 1}},
        {19, 2, {2, 18, 1}},
        {19, 3, {17, 4, 0, 1}},
        {19, 4, {2, 11, 2, 0, 1}},
        {23, 2, {5, 21, 1}},
        {23, 3, {18, 2, 0, 1}},
        {23, 4, {5, 19, 3, 0, 1}},
    };
    return table;
}

inline const Poly* conway_lookup(u64 p, unsigned m) {
    for (const ConwayEntry& e : conway_table())
        if (e.p == p && e.m == m) return &e.coeffs;
    return nullptr;
}

} // namespace detail

class Field {
  public:
    static constexpr unsigned MAX_EXT_DEGREE = 16;
    static constexpr u64 MAX_PRIME_CHAR = (u64(1) << 63) - 1;     // prime fields
    static constexpr u64 MAX_EXT_CHAR = (u64(1) << 61) - 1;       // extension fields
    static constexpr u128 MAX_DLOG_SIZE = u128(1) << 48;          // baby-step/giant-step cap

    // full-validation constructor; the make_* factories below pick canonical
    // moduli and primitive elements, this one accepts externally supplied
    // parts (e.g. a deserialized field spec) and re-checks every invariant
    Field(u64 p, unsigned m, std::vector<u64> modulus, std::vector<u64> primitive)
        : p_(p), m_(m), modulus_(std::move(modulus)) {
        if (m_ < 1) throw std::invalid_argument("extension degree must be at least 1");
        if (m_ > MAX_EXT_DEGREE)
            throw DegreeTooLarge("extension degree " + std::to_string(m_) + " exceeds the supported maximum " +
                                 std::to_string(MAX_EXT_DEGREE));
        if (!is_prime_u64(p_)) throw NotPrime(std::to_string(p_) + " is not prime");
        if (m_ == 1 && p_ > MAX_PRIME_CHAR) throw BudgetExceeded("prime field characteristic must stay below 2^63");
        if (m_ >= 2 && p_ > MAX_EXT_CHAR) throw BudgetExceeded("extension field characteristic must stay below 2^61");
        size_ = 1;
        constexpr u128 size_limit = (u128(1) << 127) - 1;
        for (unsigned i = 0; i < m_; ++i) {
            if (size_ > size_limit / p_) throw BudgetExceeded("field size p^m must stay below 2^127");
            size_ *= p_;
        }
        if (m_ == 1) {
            if (!modulus_.empty()) throw std::invalid_argument("prime fields take an empty modulus");
        } else {
            if (modulus_.size() != m_ + 1) throw std::invalid_argument("modulus must have m+1 coefficients");
            if (modulus_.back() != 1) throw std::invalid_argument("modulus must be monic");
            for (u64 c : modulus_)
                if (c >= p_) throw std::invalid_argument("modulus coefficient out of range");
            if (!detail::poly_is_irreducible(modulus_, p_))
                throw std::invalid_argument("modulus is not irreducible over GF(p)");
        }
        if (primitive.size() != m_) throw std::invalid_argument("primitive element must have m coefficients");
        for (u64 c : primitive)
            if (c >= p_) throw std::invalid_argument("primitive element coefficient out of range");
        primitive_ = FieldElement{std::move(primitive)};
        build_reduction_rows();
        // verify the claimed generator has full multiplicative order
        const std::vector<u128> factors = prime_factors_of_pm1(p_, m_);
        if (is_zero(primitive_)) throw std::invalid_argument("primitive element must be nonzero");
        for (u128 ell : factors) {
            if (size_ > 2 && pow(primitive_, (size_ - 1) / ell) == one())
                throw std::invalid_argument("claimed primitive element does not generate the multiplicative group");
        }
    }

    u64 characteristic() const { return p_; }
    unsigned degree() const { return m_; }
    u128 size() const { return size_; }
    // little-endian including the monic leading coefficient; empty for m = 1
    const std::vector<u64>& modulus() const { return modulus_; }
    const FieldElement& primitive_element() const { return primitive_; }

    bool operator==(const Field& other) const {
        return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_ &&
               primitive_ == other.primitive_;
    }

    FieldElement zero() const { return FieldElement{std::vector<u64>(m_, 0)}; }

    FieldElement one() const {
        std::vector<u64> c(m_, 0);
        c[0] = 1;
        return FieldElement{std::move(c)};
    }

    bool is_zero(const FieldElement& a) const {
        check_member(a);
        return std::all_of(a.coefficients.begin(), a.coefficients.end(), [](u64 c) { return c == 0; });
    }

    // element from residues c_0..c_{m-1}, validated
    FieldElement from_residues(std::vector<u64> residues) const {
        if (residues.size() != m_) throw std::invalid_argument("expected m residues");
        for (u64 c : residues)
            if (c >= p_) throw std::invalid_argument("residue out of range");
        return FieldElement{std::move(residues)};
    }

    FieldElement add(const FieldElement& a, const FieldElement& b) const {
        check_member(a);
        check_member(b);
        FieldElement out = a;
        add_flat(out.coefficients.data(), b.coefficients.data(), out.coefficients.data());
        return out;
    }

    FieldElement sub(const FieldElement& a, const FieldElement& b) const {
        check_member(a);
        check_member(b);
        FieldElement out = a;
        for (unsigned j = 0; j < m_; ++j) {
            const u64 bj = b.coefficients[j];
            out.coefficients[j] =
                out.coefficients[j] >= bj ? out.coefficients[j] - bj : out.coefficients[j] + p_ - bj;
        }
        return out;
    }

    FieldElement neg(const FieldElement& a) const { return sub(zero(), a); }

    FieldElement mul(const FieldElement& a, const FieldElement& b) const {
        check_member(a);
        check_member(b);
        FieldElement out = zero();
        mul_flat(a.coefficients.data(), b.coefficients.data(), out.coefficients.data());
        return out;
    }

    // a^e with the convention 0^0 = 1
    FieldElement pow(const FieldElement& a, u128 e) const {
        check_member(a);
        FieldElement result = one();
        FieldElement base = a;
        while (e > 0) {
            if (e & 1) result = mul(result, base);
            e >>= 1;
            if (e > 0) base = mul(base, base);
        }
        return result;
    }

    FieldElement inv(const FieldElement& a) const {
        if (is_zero(a)) throw DivisionByZero("zero has no multiplicative inverse");
        return pow(a, size_ - 2);
    }

    /* canonical order: 0, alpha^0, alpha^1, ..., alpha^(p^m - 2) */

    FieldElement element_from_index(u128 index) const {
        if (index >= size_) throw IndexOutOfRange("element index " + to_string(index) + " out of range");
        if (index == 0) return zero();
        return pow(primitive_, index - 1);
    }

    // inverse of element_from_index via baby-step/giant-step; O(sqrt(p^m))
    // time and memory per call, offered only for p^m <= 2^48
    u128 index_from_element(const FieldElement& a) const {
        check_member(a);
        for (u64 c : a.coefficients)
            if (c >= p_) throw std::invalid_argument("residue out of range");
        if (size_ > MAX_DLOG_SIZE)
            throw FieldTooLargeForDiscreteLog("index_from_element requires p^m <= 2^48");
        if (is_zero(a)) return 0;
        const u64 order = static_cast<u64>(size_ - 1);
        if (order == 1) return 1; // GF(2): the only unit is 1
        u64 steps = 1;
        while (steps * steps < order) ++steps;
        std::vector<std::pair<u64, u64>> baby; // (rank of alpha^j, j)
        baby.reserve(steps);
        FieldElement cur = one();
        for (u64 j = 0; j < steps; ++j) {
            baby.emplace_back(static_cast<u64>(rank_of(cur)), j);
            cur = mul(cur, primitive_);
        }
        std::sort(baby.begin(), baby.end());
        const FieldElement giant = pow(primitive_, order - steps % order); // alpha^(-steps)
        FieldElement gamma = a;
        for (u64 i = 0; i * steps <= order; ++i) {
            const u64 key = static_cast<u64>(rank_of(gamma));
            auto it = std::lower_bound(baby.begin(), baby.end(), std::make_pair(key, u64(0)));
            if (it != baby.end() && it->first == key) return (i * steps + it->second) % order + 1;
            gamma = mul(gamma, giant);
        }
        throw Error("discrete logarithm not found (element not generated by alpha?)");
    }

    // the m least-significant base-p symbols of the element, constant term
    // first; for prime fields this is the single residue
    std::vector<u64> expand_symbol(const FieldElement& a) const {
        check_member(a);
        return a.coefficients;
    }

    // positional encoding sum c_i p^i (not the discrete-log index)
    u128 rank_of(const FieldElement& a) const {
        check_member(a);
        u128 r = 0;
        for (unsigned i = m_; i-- > 0;) r = r * p_ + a.coefficients[i];
        return r;
    }

    // the first `count` elements in canonical order, materialized by
    // successive multiplication (cheaper than count calls of
    // element_from_index when a full prefix is wanted)
    std::vector<FieldElement> first_elements(u64 count) const {
        if (count > size_) throw IndexOutOfRange("cannot materialize more elements than the field holds");
        std::vector<FieldElement> out;
        out.reserve(count);
        if (count == 0) return out;
        out.push_back(zero());
        FieldElement cur = one();
        for (u64 i = 1; i < count; ++i) {
            out.push_back(cur);
            cur = mul(cur, primitive_);
        }
        return out;
    }

    /* flat kernels: operate on raw residue spans of length m, avoiding
       element construction in evaluation-heavy loops; out may alias a or b */

    void add_flat(const u64* a, const u64* b, u64* out) const {
        for (unsigned j = 0; j < m_; ++j) {
            const u64 s = a[j] + b[j]; // < 2p < 2^64
            out[j] = s >= p_ ? s - p_ : s;
        }
    }

    void mul_flat(const u64* a, const u64* b, u64* out) const {
        if (m_ == 1) {
            out[0] = mulmod_u64(a[0], b[0], p_);
            return;
        }
        u128 conv[2 * MAX_EXT_DEGREE - 1] = {};
        for (unsigned i = 0; i < m_; ++i) {
            const u64 ai = a[i];
            if (ai == 0) continue;
            for (unsigned j = 0; j < m_; ++j) conv[i + j] += static_cast<u128>(ai) * b[j];
        }
        // fold x^t for t = 2m-2 .. m using the precomputed reduced rows;
        // the accumulator stays below (2m-1)(p-1)^2 < 2^128
        for (unsigned t = 2 * m_ - 2; t >= m_; --t) {
            const u64 c = static_cast<u64>(conv[t] % p_);
            if (c == 0) continue;
            const u64* row = &reduction_rows_[(t - m_) * m_];
            for (unsigned j = 0; j < m_; ++j) conv[j] += static_cast<u128>(c) * row[j];
        }
        for (unsigned j = 0; j < m_; ++j) out[j] = static_cast<u64>(conv[j] % p_);
    }

    // Horner evaluation of sum coeffs[i] x^i for len coefficients stored as
    // len*m flat residues (coefficient i at coeffs[i*m]); the zero locator
    // short-circuits to the constant term, consistent with pow(0, 0) = 1
    FieldElement eval_poly_flat(const u64* coeffs, u64 len, const FieldElement& x) const {
        check_member(x);
        if (len == 0) throw std::invalid_argument("cannot evaluate an empty polynomial");
        if (is_zero(x)) return FieldElement{std::vector<u64>(coeffs, coeffs + m_)};
        std::vector<u64> acc(coeffs + (len - 1) * m_, coeffs + len * m_);
        std::vector<u64> tmp(m_);
        for (u64 i = len - 1; i-- > 0;) {
            mul_flat(acc.data(), x.coefficients.data(), tmp.data());
            const u64* c = coeffs + i * m_;
            for (unsigned j = 0; j < m_; ++j) {
                const u64 s = tmp[j] + c[j];
                acc[j] = s >= p_ ? s - p_ : s;
            }
        }
        return FieldElement{std::move(acc)};
    }

  private:
    void check_member(const FieldElement& a) const {
        if (a.coefficients.size() != m_)
            throw std::invalid_argument("element does not belong to this field (degree mismatch)");
    }

    void build_reduction_rows() {
        if (m_ < 2) return;
        reduction_rows_.assign(static_cast<std::size_t>(m_ - 1) * m_, 0);
        // row 0: x^m = -(a_0 + a_1 x + ... + a_{m-1} x^{m-1})
        std::vector<u64> cur(m_);
        for (unsigned j = 0; j < m_; ++j) cur[j] = modulus_[j] == 0 ? 0 : p_ - modulus_[j];
        for (unsigned t = 0; t + 1 < m_; ++t) {
            std::copy(cur.begin(), cur.end(), reduction_rows_.begin() + static_cast<std::size_t>(t) * m_);
            if (t + 2 < m_) {
                // cur <- x * cur reduced: shift up, fold the overflow term
                const u64 top = cur[m_ - 1];
                for (unsigned j = m_ - 1; j > 0; --j) cur[j] = cur[j - 1];
                cur[0] = 0;
                if (top != 0) {
                    const u64* row0 = reduction_rows_.data();
                    for (unsigned j = 0; j < m_; ++j) {
                        const u64 add = mulmod_u64(top, row0[j], p_);
                        const u64 s = cur[j] + add;
                        cur[j] = s >= p_ ? s - p_ : s;
                    }
                }
            }
        }
    }

    u64 p_;
    unsigned m_;
    std::vector<u64> modulus_;
    FieldElement primitive_;
    u128 size_ = 0;
    std::vector<u64> reduction_rows_; // (m-1) rows of m entries: x^(m+t) reduced
};

// GF(p) with the smallest primitive root as generator
inline Field make_prime_field(u64 p) {
    if (!is_prime_u64(p)) throw NotPrime(std::to_string(p) + " is not prime");
    if (p > Field::MAX_PRIME_CHAR) throw BudgetExceeded("prime field characteristic must stay below 2^63");
    return Field(p, 1, {}, {smallest_primitive_root(p)});
}

// GF(p^m), m >= 2, with the canonical modulus (Conway table, then
// deterministic search) and alpha = x as generator
inline Field make_extension_field(u64 p, unsigned m) {
    if (m < 2) throw std::invalid_argument("make_extension_field requires m >= 2 (use make_prime_field)");
    if (m > Field::MAX_EXT_DEGREE)
        throw DegreeTooLarge("extension degree " + std::to_string(m) + " exceeds the supported maximum " +
                             std::to_string(Field::MAX_EXT_DEGREE));
    if (!is_prime_u64(p)) throw NotPrime(std::to_string(p) + " is not prime");
    if (p > Field::MAX_EXT_CHAR) throw BudgetExceeded("extension field characteristic must stay below 2^61");
    std::vector<u64> primitive(m, 0);
    primitive[1] = 1; // alpha = x
    if (const detail::Poly* conway = detail::conway_lookup(p, m))
        return Field(p, m, *conway, std::move(primitive));
    // deterministic fallback: expanding-box search.  Shell B = 2, 4, 8, ...
    // visits every coefficient vector (a_0, ..., a_{m-1}) whose digits lie
    // below min(B, p) and that was not already covered by the previous
    // shell, in ascending N = sum a_i p^i within the shell; the first
    // irreducible candidate with x primitive wins.  Mixing all coefficient
    // positions early matters: a plain ascending-N order starts with the p
    // binomials x^m + a_0, and a whole binomial stratum can be reducible
    // (for p = 2 mod 3 no x^3 + a_0 is irreducible), which would put
    // millions of hopeless candidates in front of the first usable one.
    u128 order = 1;
    constexpr u128 size_limit = (u128(1) << 127) - 1;
    for (unsigned i = 0; i < m; ++i) {
        if (order > size_limit / p) throw BudgetExceeded("field size p^m must stay below 2^127");
        order *= p;
    }
    order -= 1;
    const std::vector<u128> factors = prime_factors_of_pm1(p, m);
    detail::Poly f(m + 1, 0);
    f[m] = 1;
    for (u64 box = 2;; box *= 2) {
        const u64 hi = std::min(box, p);
        const u64 lo = box == 2 ? 0 : std::min(box / 2, p);
        if (lo >= hi) break; // every digit vector was visited
        std::vector<u64> digits(m, 0);
        for (;;) {
            u64 top = 0;
            for (unsigned i = 0; i < m; ++i) top = std::max(top, digits[i]);
            if (top >= lo && digits[0] != 0) {
                for (unsigned i = 0; i < m; ++i) f[i] = digits[i];
                if (detail::poly_is_irreducible(f, p) &&
                    detail::poly_x_is_primitive(f, p, order, factors))
                    return Field(p, m, f, std::move(primitive));
            }
            unsigned pos = 0;
            while (pos < m && ++digits[pos] == hi) digits[pos++] = 0;
            if (pos == m) break;
        }
    }
    throw Error("no primitive irreducible modulus found (unreachable)");
}

} // namespace idtag

#endif
