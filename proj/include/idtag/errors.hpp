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

#ifndef IDTAG_ERRORS_HPP
#define IDTAG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace idtag {

// common base so callers can catch the whole family at once
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NotPrime : Error {
    using Error::Error;
};
struct DegreeTooLarge : Error {
    using Error::Error;
};
struct DivisionByZero : Error {
    using Error::Error;
};
struct IndexOutOfRange : Error {
    using Error::Error;
};
struct FieldTooLargeForDiscreteLog : Error {
    using Error::Error;
};
struct BudgetExceeded : Error {
    using Error::Error;
};
struct MaterializationTooLarge : Error {
    using Error::Error;
};
struct SearchSpaceTooLarge : Error {
    using Error::Error;
};
struct InvalidScaling : Error {
    using Error::Error;
};
struct ValueOutOfRange : Error {
    using Error::Error;
};
struct IntegerTooLarge : Error {
    using Error::Error;
};
struct AlphabetMismatch : Error {
    using Error::Error;
};
struct InsufficientPoints : Error {
    using Error::Error;
};
struct MalformedChallenge : Error {
    using Error::Error;
};

} // namespace idtag

#endif
