#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sbreak {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class ParseErrorKind {
    MalformedNumber,
    Truncated,
    UnknownRuleType,
    NegativeExceedsLiterals,
    InvalidAtom,
    MissingComputeHeader,
    DuplicateSymbol,
};

const char* to_string(ParseErrorKind kind);

/// Raised by the smodels reader. `token_index` is the 0-based index of the
/// offending token (a symbol name counts as a single token).
class ParseError : public Error {
public:
    ParseError(ParseErrorKind kind, std::size_t token_index, const std::string& detail);

    ParseErrorKind kind() const noexcept { return kind_; }
    std::size_t token_index() const noexcept { return token_index_; }

private:
    ParseErrorKind kind_;
    std::size_t    token_index_;
};

/// Input uses a construct the symmetry pipeline does not handle (weight rules).
class UnsupportedFeature : public Error {
public:
    using Error::Error;
};

/// A generator that cannot be turned into a constraint chain.
class UnsupportedGenerator : public Error {
public:
    UnsupportedGenerator(std::size_t generator_index, const std::string& detail);

    std::size_t generator_index() const noexcept { return index_; }

private:
    std::size_t index_;
};

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

class NonTightProgram : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

class InvariantError : public Error {
public:
    using Error::Error;
};

} // namespace sbreak
