#pragma once

#include <stdexcept>
#include <string>

namespace dtrip {

// Invalid input: violated precondition, unparseable token, non-square where a
// square is required. The CLI maps this to exit code 2.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A configured resource limit (degree cap, time budget, precision cap) was hit
// before an answer could be certified. The CLI maps these to exit code 3.
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegreeCapExceeded : public LimitError {
 public:
  DegreeCapExceeded(long cap, long partial_degree, long would_be)
      : LimitError("splitting field degree cap " + std::to_string(cap) +
                   " exceeded (reached degree " + std::to_string(partial_degree) +
                   ", next step needs " + std::to_string(would_be) + ")"),
        cap_(cap), partial_degree_(partial_degree) {}

  long cap() const { return cap_; }
  long partial_degree() const { return partial_degree_; }

 private:
  long cap_;
  long partial_degree_;
};

class PrecisionExhausted : public LimitError {
 public:
  using LimitError::LimitError;
};

class Cancelled : public LimitError {
 public:
  Cancelled() : LimitError("operation cancelled") {}
};

// Arithmetic self-check failed. Never the caller's fault.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace dtrip
