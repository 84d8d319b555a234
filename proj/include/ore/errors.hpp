/*
   Copyright 2026 The oretower Authors

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

#include <stdexcept>
#include <string>

namespace ore {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define ORE_DEFINE_ERROR(Name)                   \
    class Name : public Error {                  \
    public:                                      \
        using Error::Error;                      \
    }

// Arithmetic errors.
ORE_DEFINE_ERROR(ModeMismatch);
ORE_DEFINE_ERROR(NotAUnit);
ORE_DEFINE_ERROR(SeriesNotEvaluable);
ORE_DEFINE_ERROR(DivisionByZero);
ORE_DEFINE_ERROR(InsufficientPrecision);
ORE_DEFINE_ERROR(NotDivisible);
ORE_DEFINE_ERROR(AlgebraMismatch);
ORE_DEFINE_ERROR(DegreeTooHigh);

// Structural errors.
ORE_DEFINE_ERROR(DomainError);
ORE_DEFINE_ERROR(NotValidated);
ORE_DEFINE_ERROR(UnknownCorpusEntry);
ORE_DEFINE_ERROR(InvalidStrategy);

#undef ORE_DEFINE_ERROR

/// 1-based location of a token inside parsed text.
struct SourceSpan {
    int line = 1;
    int column = 1;
    int length = 1;
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, SourceSpan span)
        : Error(std::to_string(span.line) + ":" + std::to_string(span.column) + ": " + message),
          span_(span), message_(message) {}

    const SourceSpan& span() const noexcept { return span_; }
    const std::string& message() const noexcept { return message_; }

private:
    SourceSpan span_;
    std::string message_;
};

class UnknownIdentifier : public ParseError {
public:
    using ParseError::ParseError;
};

}  // namespace ore
