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

#ifndef IDTAG_RNG_HPP
#define IDTAG_RNG_HPP

#include "int128.hpp"

namespace idtag {

/* All randomness in the library flows through SplitMix64 (Steele, Lea,
   Flood: "Fast splittable pseudorandom number generators", OOPSLA 2014).
   The generator is part of the external contract: a given seed must
   reproduce identical identities, challenges and experiment reports on
   any platform.

   Stream discipline:
     - SplitMix64(seed) starts with state = seed, unmixed.
     - substream(root, i) is an independent stream with
           state = mix64(root + GOLDEN * (i + 1))
       where GOLDEN = 0x9E3779B97F4A7C15 and mix64 is the SplitMix64
       output permutation applied to the raw value.
     - next_u128() draws the high 64 bits first, then the low.
     - uniform draws below a bound use rejection sampling and consume a
       variable number of raw draws. */

inline u64 mix64(u64 z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

class SplitMix64 {
  public:
    static constexpr u64 GOLDEN = 0x9E3779B97F4A7C15ull;

    explicit SplitMix64(u64 seed) : state_(seed) {}

    u64 next() {
        state_ += GOLDEN;
        return mix64(state_);
    }

    u128 next_u128() {
        const u64 hi = next();
        const u64 lo = next();
        return (static_cast<u128>(hi) << 64) | lo;
    }

    // uniform draw from [0, bound) by rejection; pre: bound > 0
    u64 uniform_below(u64 bound) {
        // largest multiple of bound not exceeding 2^64 - 1; draws at or
        // beyond it are rejected to keep the residues unbiased
        const u64 limit = ~static_cast<u64>(0) - (~static_cast<u64>(0) % bound);
        for (;;) {
            const u64 v = next();
            if (v < limit) return v % bound;
        }
    }

    u128 uniform_below_u128(u128 bound) {
        if (bound <= (~static_cast<u64>(0))) return uniform_below(static_cast<u64>(bound));
        const u128 all = ~static_cast<u128>(0);
        const u128 limit = all - (all % bound);
        for (;;) {
            const u128 v = next_u128();
            if (v < limit) return v % bound;
        }
    }

  private:
    u64 state_;
};

inline SplitMix64 substream(u64 root, u64 index) {
    return SplitMix64(mix64(root + SplitMix64::GOLDEN * (index + 1)));
}

} // namespace idtag

#endif
