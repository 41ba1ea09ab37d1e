#pragma once

#include <stdexcept>
#include <string>

namespace sklift {

// Invalid mathematical input: odd weight where even is required, a prime that
// divides a denominator, a vanishing Euler factor, ...
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// A request for more coefficients than the inputs provably determine.
class PrecisionError : public std::runtime_error {
 public:
  explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

// A check whose failure is a mathematical outcome rather than bad input
// (e.g. an expansion that is not a Hecke eigenform).
class CheckFailure : public std::runtime_error {
 public:
  explicit CheckFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sklift
