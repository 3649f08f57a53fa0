#pragma once

#include <stdexcept>
#include <string>

namespace oraclebench {

// Value outside the range a register or table can hold.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Unknown register, width mismatch, overlapping registers.
class LayoutError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A precondition on the quantum state itself does not hold
// (unnormalized state, ancilla not in |0>, ...).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class NotAPermutation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class WrongOracleKind : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class PromiseViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class AutomorphicGraph : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed permutation or graph file.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace oraclebench
