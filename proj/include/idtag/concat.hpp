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

#ifndef IDTAG_CONCAT_HPP
#define IDTAG_CONCAT_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "reed_solomon.hpp"
#include "rng.hpp"

namespace idtag {

/* Concatenated identification code (q, k, delta):

       inner (q, k)_q Reed-Solomon  o  outer (q^k, q^(k-delta))_{q^k} Reed-Solomon

   yielding a [q^(k+1), k q^(k-delta), (q-k+1)(q^k - q^(k-delta) + 1)]_q code
   whose codewords serve as tagging functions: identity i maps to the
   codeword T_i, the sender transmits (j, T_i(j)) for a random position j,
   and a verifier for i' accepts iff T_{i'}(j) equals the received tag.
   The number of identities is q^(k q^(k-delta)) -- reported as a
   (base, exponent) pair, never materialized.

   tag() computes a single position directly: j selects the outer locator
   (j div q) and the inner locator (j mod q); the outer polynomial is
   evaluated by Horner at one point, the resulting GF(q^k) symbol expands
   into k base-field residues (little-endian), and those form the inner
   message evaluated at the inner locator.  Cost: O(q^(k-delta))
   multiplications in GF(q^k) plus O(k) in GF(q), with no matrix and no
   full codeword ever built. */

struct Identity {
    // coefficient i of the outer message occupies residues [i*k, (i+1)*k),
    // little-endian in the polynomial basis of GF(q^k)
    std::vector<u64> residues;

    bool operator==(const Identity&) const = default;
};

struct Challenge {
    u128 randomness = 0; // position j in [0, q^(k+1))
    u64 tag = 0;         // GF(q) residue
};

struct IdentityCount {
    u128 base = 0;     // q
    u128 exponent = 0; // k q^(k-delta)
    double log10_value = 0.0;
};

// lambda_2 <= 1 - d/n for any (n, d) error-correcting code used as an
// identification code; exact rational
inline Rational ecc_false_id_bound(u128 n, u128 d) {
    if (d > n || n == 0) throw std::invalid_argument("need 0 <= d <= n, n > 0");
    return Rational(n - d, n);
}

// closed form of the (q, 3, 2) false-identification bound:
// 2/q + 1/q^2 - 3/q^3 + 2/q^4 over the common denominator q^4
inline Rational lambda2_closed_form_q32(u64 q) {
    const u128 q1 = q;
    const u128 q2 = q1 * q1;
    const u128 q3 = q2 * q1;
    const u128 q4 = q3 * q1;
    return Rational(2 * q3 + q2 - 3 * q1 + 2, q4);
}

class ConcatCode {
  public:
    // pre: q prime, q > k > delta > 0, q^(k+1) < 2^127
    ConcatCode(u64 q, unsigned k, unsigned delta) : q_(q), k_(k), delta_(delta) {
        if (delta < 1 || k <= delta || static_cast<u64>(k) >= q)
            throw InvalidScaling("(q, k, delta) must satisfy q > k > delta > 0");
        if (!is_prime_u64(q)) throw NotPrime(std::to_string(q) + " is not prime");
        if (k > Field::MAX_EXT_DEGREE)
            throw DegreeTooLarge("outer field degree k exceeds the supported maximum " +
                                 std::to_string(Field::MAX_EXT_DEGREE));
        constexpr u128 size_limit = (u128(1) << 127) - 1;
        u128 n = 1;
        for (unsigned i = 0; i < k + 1; ++i) {
            if (n > size_limit / q) throw BudgetExceeded("blocklength q^(k+1) must stay below 2^127");
            n *= q;
        }
        n_c_ = n;                       // q^(k+1)
        const u128 qk = n / q;          // q^k
        u128 qkd = 1;                   // q^(k-delta)
        for (unsigned i = 0; i < k - delta; ++i) qkd *= q;
        length_ = qkd;
        k_c_ = static_cast<u128>(k) * qkd;
        d_c_ = (q - k + 1) * (qk - qkd + 1);
        scaling_warning_ = 2 * static_cast<u64>(k) > q; // k/q > 0.5
        inner_ = std::make_shared<Field>(make_prime_field(q));
        outer_ = std::make_shared<Field>(make_extension_field(q, k));
    }

    u64 q() const { return q_; }
    unsigned k() const { return k_; }
    unsigned delta() const { return delta_; }
    const Field& inner_field() const { return *inner_; }
    const Field& outer_field() const { return *outer_; }

    u128 block_length() const { return n_c_; }  // n_c = q^(k+1)
    u128 dimension() const { return k_c_; }     // k_c = k q^(k-delta)
    u128 distance() const { return d_c_; }      // d_c = (q-k+1)(q^k - q^(k-delta) + 1)
    u128 identity_length() const { return length_; } // outer message coefficients, q^(k-delta)

    // true when k/q > 0.5, the regime where the inner-code scaling argument
    // degrades; callers should surface this to the user
    bool scaling_warning() const { return scaling_warning_; }

    IdentityCount identity_count() const {
        IdentityCount c;
        c.base = q_;
        c.exponent = k_c_;
        c.log10_value = static_cast<double>(static_cast<long double>(k_c_) * std::log10(static_cast<long double>(q_)));
        return c;
    }

    Rational false_id_bound() const {
        const Rational bound = ecc_false_id_bound(n_c_, d_c_);
        if (k_ == 3 && delta_ == 2 && !(bound == lambda2_closed_form_q32(q_)))
            throw Error("internal inconsistency: closed-form lambda2 disagrees with 1 - d/n");
        return bound;
    }

    u64 materialization_cap = 1'000'000; // codeword symbols (oracle route)

    // identity whose outer message digits are `value` in base q^k,
    // most significant digit first; desk scale only
    Identity identity_from_integer(u128 value) const {
        const u64 len = checked_identity_length();
        const u128 base = outer_->size(); // q^k
        // reject values at or above q^(k q^(k-delta)) whenever that count
        // is small enough to compare against; beyond 2^128 every value fits
        u128 count = 1;
        bool count_exact = true;
        for (u64 i = 0; i < len && count_exact; ++i) {
            if (count > (~static_cast<u128>(0)) / base) {
                count_exact = false;
                break;
            }
            count *= base;
        }
        if (count_exact && value >= count)
            throw ValueOutOfRange("identity integer " + to_string(value) + " out of range (only " + to_string(count) +
                                  " identities exist)");
        Identity id;
        id.residues.assign(static_cast<std::size_t>(len) * k_, 0);
        for (u64 i = len; i-- > 0;) {
            const FieldElement coeff = outer_->element_from_index(value % base);
            value /= base;
            std::copy(coeff.coefficients.begin(), coeff.coefficients.end(), id.residues.begin() + i * k_);
        }
        if (value != 0)
            throw ValueOutOfRange("identity integer has more base-q^k digits than the outer message holds");
        return id;
    }

    // identity drawn uniformly from the full codebook: the SplitMix64 stream
    // seeded with `seed` supplies, for each outer coefficient m_0, m_1, ...,
    // its k base-field residues in little-endian order, each rejected-sampled
    // below q (part of the external reproducibility contract)
    Identity identity_from_seed(u64 seed) const {
        const u64 len = checked_identity_length();
        SplitMix64 rng(seed);
        Identity id;
        id.residues.resize(static_cast<std::size_t>(len) * k_);
        for (u64& r : id.residues) r = rng.uniform_below(q_);
        return id;
    }

    FieldElement coefficient(const Identity& id, u64 i) const {
        check_identity(id);
        if (i >= length_) throw IndexOutOfRange("coefficient index out of range");
        const std::size_t off = static_cast<std::size_t>(i) * k_;
        return outer_->from_residues({id.residues.begin() + off, id.residues.begin() + off + k_});
    }

    // T_i(j) computed on demand; returns the GF(q) tag element
    FieldElement tag(const Identity& id, u128 j) const {
        check_identity(id);
        if (j >= n_c_) throw IndexOutOfRange("randomness " + to_string(j) + " out of range for blocklength " +
                                             to_string(n_c_));
        const u128 outer_index = j / q_;
        const u64 inner_index = static_cast<u64>(j % q_);
        const FieldElement outer_locator = outer_->element_from_index(outer_index);
        const FieldElement symbol =
            outer_->eval_poly_flat(id.residues.data(), static_cast<u64>(length_), outer_locator);
        // the little-endian expansion of the symbol is the inner message
        const FieldElement inner_locator = inner_->element_from_index(inner_index);
        if (inner_->is_zero(inner_locator)) return inner_->from_residues({symbol.coefficients[0]});
        const u64 x = inner_locator.coefficients[0];
        u64 acc = symbol.coefficients[k_ - 1];
        for (unsigned i = k_ - 1; i-- > 0;) {
            acc = mulmod_u64(acc, x, q_);
            const u64 s = acc + symbol.coefficients[i];
            acc = s >= q_ ? s - q_ : s;
        }
        return inner_->from_residues({acc});
    }

    // reference route for tests: outer generator matrix, vector-matrix
    // product, symbol expansion, block-wise inner encoding via the inner
    // generator matrix; deliberately shares no code with tag()
    std::vector<u64> full_codeword_oracle(const Identity& id) const {
        check_identity(id);
        if (n_c_ > materialization_cap)
            throw MaterializationTooLarge("full codeword of " + to_string(n_c_) +
                                          " symbols exceeds the materialization cap");
        const u64 len = static_cast<u64>(length_);
        const u64 n_outer = static_cast<u64>(outer_->size());
        RsCode outer_rs(*outer_, n_outer, len);
        outer_rs.materialization_cap = ~static_cast<u64>(0); // guarded by n_c above
        RsCode inner_rs(*inner_, q_, k_);
        inner_rs.materialization_cap = ~static_cast<u64>(0);
        const auto g_outer = outer_rs.generator_matrix();
        const auto g_inner = inner_rs.generator_matrix();
        Message msg;
        msg.reserve(len);
        for (u64 i = 0; i < len; ++i) msg.push_back(coefficient(id, i));
        std::vector<u64> out;
        out.reserve(static_cast<std::size_t>(n_outer) * q_);
        for (u64 col = 0; col < n_outer; ++col) {
            FieldElement symbol = outer_->zero();
            for (u64 row = 0; row < len; ++row)
                symbol = outer_->add(symbol, outer_->mul(msg[row], g_outer[row][col]));
            const std::vector<u64> block = outer_->expand_symbol(symbol);
            for (u64 pos = 0; pos < q_; ++pos) {
                FieldElement acc = inner_->zero();
                for (unsigned row = 0; row < k_; ++row)
                    acc = inner_->add(acc,
                                      inner_->mul(inner_->from_residues({block[row]}), g_inner[row][pos]));
                out.push_back(acc.coefficients[0]);
            }
        }
        return out;
    }

  private:
    u64 checked_identity_length() const {
        if (length_ > (u128(1) << 40))
            throw MaterializationTooLarge("identity with " + to_string(length_) +
                                          " outer coefficients cannot be materialized");
        return static_cast<u64>(length_);
    }

    void check_identity(const Identity& id) const {
        if (static_cast<u128>(id.residues.size()) != length_ * k_)
            throw std::invalid_argument("identity does not match the code parameters");
    }

    u64 q_;
    unsigned k_;
    unsigned delta_;
    u128 n_c_ = 0;
    u128 k_c_ = 0;
    u128 d_c_ = 0;
    u128 length_ = 0;
    bool scaling_warning_ = false;
    std::shared_ptr<const Field> inner_;
    std::shared_ptr<const Field> outer_;
};

// spec-style constructor name; returns the code object carrying the derived
// [n_c, k_c, d_c]_q parameters
inline ConcatCode derive_params(u64 q, unsigned k, unsigned delta) { return ConcatCode(q, k, delta); }

/* capacity trend checker (the three conditions a code family must meet to
   carry identification capacity): over a family of block-code parameter
   points [M, k, d]_q,
       1. log k / log M -> 1
       2. log q / log M -> 0
       3. d / M -> 1
   The checker reports the per-point ratios and a trend verdict; it judges
   monotone movement toward the limit, not attainment. */

struct CodePoint {
    u128 M = 0; // blocklength
    u128 k = 0; // dimension
    u128 d = 0; // minimum distance
    u64 q = 2;  // alphabet size
};

inline CodePoint code_point(const ConcatCode& code) {
    return CodePoint{code.block_length(), code.dimension(), code.distance(), code.q()};
}

// full-length single-level Reed-Solomon point (q, k)_q
inline CodePoint single_rs_point(u64 q, u64 k) {
    if (k < 1 || k > q) throw std::invalid_argument("single RS point needs 1 <= k <= q");
    return CodePoint{q, k, q - k + 1, q};
}

enum class Trend { Increasing, Decreasing, Flat, Mixed };

struct ConditionReport {
    std::vector<double> ratios;
    double limit = 0.0;
    Trend trend = Trend::Flat;
    bool approaching = false; // moving toward (or sitting at) the limit
};

struct CapacityReport {
    ConditionReport size_condition;     // log k / log M -> 1
    ConditionReport alphabet_condition; // log q / log M -> 0
    ConditionReport distance_condition; // d / M -> 1
};

namespace detail {

template <typename RatioFn>
ConditionReport capacity_condition(const std::vector<CodePoint>& points, double limit, RatioFn ratio) {
    ConditionReport report;
    report.limit = limit;
    for (const CodePoint& p : points) report.ratios.push_back(ratio(p));
    constexpr double eps = 1e-12;
    bool increasing = true, decreasing = true, flat = true;
    for (std::size_t i = 1; i < report.ratios.size(); ++i) {
        const double diff = report.ratios[i] - report.ratios[i - 1];
        if (diff > eps) {
            decreasing = false;
            flat = false;
        } else if (diff < -eps) {
            increasing = false;
            flat = false;
        }
    }
    report.trend = flat         ? Trend::Flat
                   : increasing ? Trend::Increasing
                   : decreasing ? Trend::Decreasing
                                : Trend::Mixed;
    const double first = std::fabs(report.ratios.front() - limit);
    const double last = std::fabs(report.ratios.back() - limit);
    report.approaching = last < 1e-9 || last + eps < first;
    return report;
}

} // namespace detail

inline CapacityReport capacity_conditions(const std::vector<CodePoint>& points) {
    if (points.size() < 3)
        throw InsufficientPoints("trend analysis needs at least 3 parameter points, got " +
                                 std::to_string(points.size()));
    for (const CodePoint& p : points)
        if (p.M < 2 || p.k < 1 || p.d < 1 || p.q < 2)
            throw std::invalid_argument("degenerate block-code point");
    CapacityReport report;
    report.size_condition = detail::capacity_condition(points, 1.0, [](const CodePoint& p) {
        return static_cast<double>(std::log(static_cast<long double>(p.k)) / std::log(static_cast<long double>(p.M)));
    });
    report.alphabet_condition = detail::capacity_condition(points, 0.0, [](const CodePoint& p) {
        return static_cast<double>(std::log(static_cast<long double>(p.q)) / std::log(static_cast<long double>(p.M)));
    });
    report.distance_condition = detail::capacity_condition(points, 1.0, [](const CodePoint& p) {
        return static_cast<double>(static_cast<long double>(p.d) / static_cast<long double>(p.M));
    });
    return report;
}

/* generic codebook concatenation over explicit symbol strings: outer symbol
   outer_alphabet[i] is replaced by inner_codebook[i]; the concatenated
   codeword is the juxtaposition of the substituted inner codewords */
inline std::vector<std::string> concatenate_codebooks(const std::vector<std::string>& inner_codebook,
                                                      const std::vector<std::string>& outer_codewords,
                                                      const std::string& outer_alphabet) {
    if (inner_codebook.size() != outer_alphabet.size())
        throw AlphabetMismatch("outer alphabet has " + std::to_string(outer_alphabet.size()) +
                               " symbols but the inner codebook has " + std::to_string(inner_codebook.size()) +
                               " codewords");
    for (std::size_t i = 0; i < outer_alphabet.size(); ++i)
        if (outer_alphabet.find(outer_alphabet[i], i + 1) != std::string::npos)
            throw AlphabetMismatch("outer alphabet contains duplicate symbols");
    if (!inner_codebook.empty())
        for (const std::string& w : inner_codebook)
            if (w.size() != inner_codebook.front().size())
                throw std::invalid_argument("inner codewords must share one length");
    std::vector<std::string> out;
    out.reserve(outer_codewords.size());
    for (const std::string& word : outer_codewords) {
        std::string cat;
        for (char symbol : word) {
            const std::size_t idx = outer_alphabet.find(symbol);
            if (idx == std::string::npos)
                throw AlphabetMismatch(std::string("outer codeword symbol '") + symbol +
                                       "' missing from the alphabet");
            cat += inner_codebook[idx];
        }
        out.push_back(std::move(cat));
    }
    return out;
}

} // namespace idtag

#endif
