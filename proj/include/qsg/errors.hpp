#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qsg {

/// Base class for all engine errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

/// Two operands were built over different generator tables.
class TableMismatch : public Error {
public:
    TableMismatch() : Error("elements belong to different generator tables") {}
};

class UnknownGenerator : public Error {
public:
    using Error::Error;
};

/// normalize() ran out of rule applications; `word` is the term being rewritten.
class StepBudgetExceeded : public Error {
public:
    StepBudgetExceeded(std::string word, std::size_t budget)
        : Error("step budget of " + std::to_string(budget) + " rule applications exceeded while rewriting " + word),
          word_(std::move(word))
    {
    }
    const std::string& word() const { return word_; }

private:
    std::string word_;
};

class NotInvertible : public Error {
public:
    NotInvertible(const std::string& what, std::string witness)
        : Error(what + ": " + witness), witness_(std::move(witness))
    {
    }
    const std::string& witness() const { return witness_; }

private:
    std::string witness_;
};

/// Malformed rule set, presentation file or localization request.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Lexing or parsing failure; `position` is a 1-based column.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " at position " + std::to_string(position)), position_(position)
    {
    }
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

}  // namespace qsg
