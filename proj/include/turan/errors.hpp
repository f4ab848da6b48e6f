#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace turan {

// Vertex count exceeds the single-word row capacity.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Malformed arguments (bad ranges, overlapping sets, unsorted input, ...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Arguments outside the domain where a formula or construction is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// The detector ran out of budget; the question is undecided, not answered.
class BudgetExhausted : public std::runtime_error {
 public:
  explicit BudgetExhausted(std::uint64_t nodes)
      : std::runtime_error("search budget exhausted after " +
                           std::to_string(nodes) + " nodes"),
        nodes_(nodes) {}

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  std::uint64_t nodes_;
};

// A request too large for exhaustive enumeration.
class ScaleRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A self-check failed. Seeing this means a bug, not bad input.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace turan
