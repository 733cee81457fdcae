/*
   Copyright 2026 The qtele Authors

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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qtele {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& w) : Error(w) {}
};

struct ZeroInput : Error {
    explicit ZeroInput(const std::string& w) : Error(w) {}
};

struct NotDivisible : Error {
    explicit NotDivisible(const std::string& w) : Error(w) {}
};

struct NotCoprime : Error {
    explicit NotCoprime(const std::string& w) : Error(w) {}
};

struct DenominatorMismatch : Error {
    explicit DenominatorMismatch(const std::string& w) : Error(w) {}
};

struct InvalidQMR : Error {
    explicit InvalidQMR(const std::string& w) : Error(w) {}
};

struct EvaluationFailure : Error {
    explicit EvaluationFailure(const std::string& w) : Error(w) {}
};

struct PoleAtPoint : Error {
    explicit PoleAtPoint(const std::string& w) : Error(w) {}
};

struct BadQValue : Error {
    explicit BadQValue(const std::string& w) : Error(w) {}
};

struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct RejectedInput : Error {
    explicit RejectedInput(const std::string& w) : Error(w) {}
};

// A postcondition of a sub-algorithm failed.  Must never fire; indicates a bug.
struct InternalCheckFailure : Error {
    explicit InternalCheckFailure(const std::string& w) : Error(w) {}
};

struct ResidualIdentityFailure : Error {
    explicit ResidualIdentityFailure(const std::string& w) : Error(w) {}
};

struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& w) : Error(w) {}
};

}  // namespace qtele
