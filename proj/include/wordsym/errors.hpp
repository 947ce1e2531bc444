#pragma once

#include <stdexcept>
#include <string>

namespace wordsym {

// Error taxonomy mirrors the CLI exit codes: ParseError -> 2,
// HypothesisError -> 3, InvariantError -> 4.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    using Error::Error;
};

struct HypothesisError : Error {
    using Error::Error;
};

struct InvariantError : Error {
    using Error::Error;
};

// Exact mode requested but the dominant eigenvalue lives in a field of
// degree > 4; callers fall back to approximate arithmetic.
struct FieldDegreeError : HypothesisError {
    using HypothesisError::HypothesisError;
};

// The length-<=2 frequency system had no unique solution.
struct SingularSystemError : HypothesisError {
    using HypothesisError::HypothesisError;
};

}  // namespace wordsym
