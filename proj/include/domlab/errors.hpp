#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace domlab {

/// Base for every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (graph6, hypergraph, OA, design files).
class FormatError : public Error {
 public:
  FormatError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Input violates a structural requirement of the invariant being computed,
/// e.g. an isolated vertex where total domination is undefined.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// Caller broke an operation precondition (non-bipartite input to a
/// bipartite routine, a repeated vertex in a sequence, size limits).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Order outside the supported finite-field set.
class UnsupportedOrder : public Error {
 public:
  explicit UnsupportedOrder(int q)
      : Error("unsupported order " + std::to_string(q)), q_(q) {}
  int order() const { return q_; }

 private:
  int q_;
};

}  // namespace domlab
