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

#ifndef IDTAG_REED_SOLOMON_HPP
#define IDTAG_REED_SOLOMON_HPP

#include <vector>

#include "errors.hpp"
#include "field.hpp"

namespace idtag {

using Message = std::vector<FieldElement>; // k coefficients, m_0 first

/* Evaluation-style Reed-Solomon code (n, k)_{p^m} with locator set fixed to
   the first n field elements in canonical order (so locator 0 participates
   whenever n >= 1).  A message (m_0, ..., m_{k-1}) encodes to the
   evaluations of T(x) = m_0 + m_1 x + ... + m_{k-1} x^{k-1}; with the
   0^0 = 1 convention the generator matrix entry (i, j) is locator_j^i and
   the evaluation at the zero locator is the constant term m_0.

   Single positions are computed on demand through evaluate_tag; the
   codeword / matrix routes materialize and are desk-scale only, guarded by
   materialization_cap (counted in symbols resp. matrix entries). */

class RsCode {
  public:
    // pre: 1 <= k <= n <= field size
    RsCode(Field field, u64 n, u64 k) : field_(std::move(field)), n_(n), k_(k) {
        if (k_ < 1 || k_ > n_) throw std::invalid_argument("Reed-Solomon code needs 1 <= k <= n");
        if (static_cast<u128>(n_) > field_.size())
            throw std::invalid_argument("blocklength exceeds the number of distinct locators");
    }

    const Field& field() const { return field_; }
    u64 length() const { return n_; }
    u64 dimension() const { return k_; }
    u64 distance() const { return n_ - k_ + 1; } // MDS

    u64 materialization_cap = 1'000'000; // symbols / matrix entries
    u64 search_cap = 1'000'000;          // messages scanned by min_distance_bruteforce

    // single codeword position, O(k) multiplications, no matrix
    FieldElement evaluate_tag(const Message& msg, u128 locator_index) const {
        check_message(msg);
        if (locator_index >= n_)
            throw IndexOutOfRange("locator index " + to_string(locator_index) + " out of range for n = " +
                                  std::to_string(n_));
        return evaluate_at(msg, field_.element_from_index(locator_index));
    }

    std::vector<FieldElement> codeword(const Message& msg) const {
        check_message(msg);
        if (n_ > materialization_cap)
            throw MaterializationTooLarge("codeword of " + std::to_string(n_) +
                                          " symbols exceeds the materialization cap");
        const std::vector<FieldElement> locators = field_.first_elements(n_);
        std::vector<FieldElement> out;
        out.reserve(n_);
        for (const FieldElement& x : locators) out.push_back(evaluate_at(msg, x));
        return out;
    }

    // k x n matrix with entry (i, j) = locator_j^i; row-major
    std::vector<std::vector<FieldElement>> generator_matrix() const {
        if (static_cast<u128>(n_) * k_ > materialization_cap)
            throw MaterializationTooLarge("generator matrix with " + to_string(static_cast<u128>(n_) * k_) +
                                          " entries exceeds the materialization cap");
        const std::vector<FieldElement> locators = field_.first_elements(n_);
        std::vector<std::vector<FieldElement>> rows;
        rows.reserve(k_);
        std::vector<FieldElement> row(n_, field_.one()); // locator^0 = 1, also for locator 0
        for (u64 i = 0; i < k_; ++i) {
            rows.push_back(row);
            if (i + 1 < k_)
                for (u64 j = 0; j < n_; ++j) row[j] = field_.mul(row[j], locators[j]);
        }
        return rows;
    }

    // exhaustive minimum weight over all q^k - 1 nonzero messages;
    // cost O(q^k * n * k), guarded by search_cap on the message count
    u64 min_distance_bruteforce() const {
        u128 message_count = 1;
        try {
            for (u64 i = 0; i < k_; ++i) message_count = checked_mul_u128(message_count, field_.size());
        } catch (const std::overflow_error&) {
            throw SearchSpaceTooLarge("q^k message enumeration exceeds the search cap");
        }
        if (message_count > search_cap)
            throw SearchSpaceTooLarge("q^k message enumeration exceeds the search cap");
        const std::vector<FieldElement> elements = field_.first_elements(static_cast<u64>(field_.size()));
        const std::vector<FieldElement> locators = field_.first_elements(n_);
        const u64 q = static_cast<u64>(field_.size());
        u64 best = n_;
        Message msg(k_, field_.zero());
        for (u64 index = 1; index < static_cast<u64>(message_count); ++index) {
            u64 v = index;
            for (u64 i = 0; i < k_; ++i) {
                msg[i] = elements[v % q];
                v /= q;
            }
            // stop as soon as the partial weight already matches the best:
            // the final weight can only be larger
            u64 weight = 0;
            for (u64 j = 0; j < n_ && weight < best; ++j)
                if (!field_.is_zero(evaluate_at(msg, locators[j]))) ++weight;
            if (weight < best) best = weight;
        }
        return best;
    }

  private:
    void check_message(const Message& msg) const {
        if (msg.size() != k_) throw std::invalid_argument("message must have exactly k coefficients");
        for (const FieldElement& c : msg)
            if (c.coefficients.size() != field_.degree())
                throw std::invalid_argument("message coefficient does not belong to the code's field");
    }

    FieldElement evaluate_at(const Message& msg, const FieldElement& x) const {
        if (field_.is_zero(x)) return msg[0];
        FieldElement acc = msg[k_ - 1];
        for (u64 i = k_ - 1; i-- > 0;) acc = field_.add(field_.mul(acc, x), msg[i]);
        return acc;
    }

    Field field_;
    u64 n_;
    u64 k_;
};

} // namespace idtag

#endif
