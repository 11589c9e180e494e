#pragma once

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>

namespace ctxalg {

/// Base class of everything thrown by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed formula text. Carries the byte offset of the failure and a
/// description of what was expected there.
class ParseError : public Error {
public:
  ParseError(std::size_t offset, const std::string& expected)
      : Error("syntax error at offset " + std::to_string(offset) + ": expected " + expected),
        offset_(offset),
        expected_(expected) {}

  std::size_t offset() const { return offset_; }
  const std::string& expected() const { return expected_; }

private:
  std::size_t offset_;
  std::string expected_;
};

/// Invalid input: bad files, unknown names, mismatched universes or
/// alphabets, violated preconditions. The CLI maps this to exit code 2.
class InputError : public Error {
public:
  explicit InputError(const std::string& what) : Error(what) {}
};

/// Universe closure would produce more formulas than the caller allowed.
class CapExceededError : public InputError {
public:
  CapExceededError(std::size_t would_generate, std::size_t cap)
      : InputError("universe closure would generate " + std::to_string(would_generate) +
                   " formulas, exceeding cap " + std::to_string(cap)),
        would_generate_(would_generate) {}

  std::size_t would_generate() const { return would_generate_; }

private:
  std::size_t would_generate_;
};

/// A well-formed request with no defined answer: zero denominator in a
/// degree, a vector outside a basis span, a failed estimation. Exit code 3.
class DomainError : public Error {
public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

/// expand_in_basis could not express the vector within tolerance.
class NotInSpanError : public DomainError {
public:
  explicit NotInSpanError(double residual)
      : DomainError(format_message(residual)), residual_(residual) {}

  double residual() const { return residual_; }

private:
  static std::string format_message(double residual) {
    std::ostringstream os;
    os << "vector is not in the span of the basis (residual " << residual << ")";
    return os.str();
  }
  double residual_;
};

/// Violation of a consistency check that should hold by theorem; seeing one
/// means a bug, not bad input. The CLI maps this to exit code 4.
class InternalCheckError : public Error {
public:
  explicit InternalCheckError(const std::string& what) : Error(what) {}
};

}  // namespace ctxalg
