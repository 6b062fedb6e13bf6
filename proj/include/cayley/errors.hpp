#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cayley {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Cayley table input is not even a square table with in-range entries.
class MalformedTable : public Error {
public:
  using Error::Error;
};

/// A group axiom fails; the message carries the first witness found.
class NotAGroup : public Error {
public:
  using Error::Error;
};

/// A constructor descriptor is syntactically fine but semantically invalid
/// (p not prime, sym degree above the cap, nonpositive order, ...).
class InvalidSpec : public Error {
public:
  using Error::Error;
};

/// Permutation-generator closure exceeded its element cap.
class ClosureTooLarge : public Error {
public:
  ClosureTooLarge(std::size_t cap)
      : Error("generator closure exceeded cap of " + std::to_string(cap) + " elements"),
        cap(cap) {}
  std::size_t cap;
};

/// Two operands belong to different groups.
class GroupMismatch : public Error {
public:
  using Error::Error;
};

/// Operation requires a nonempty subset.
class EmptySubset : public Error {
public:
  using Error::Error;
};

/// Stabilization search ran out of steps without reaching the group or a cycle.
class Inconclusive : public Error {
public:
  explicit Inconclusive(int max_steps)
      : Error("stabilization inconclusive after " + std::to_string(max_steps) +
              " steps; raise max_steps"),
        max_steps(max_steps) {}
  int max_steps;
};

/// Fixed-width integer backend would wrap; exact arithmetic refuses.
class Overflow : public Error {
public:
  using Error::Error;
};

/// Brute-force enumeration would exceed its tuple cap.
class TooLarge : public Error {
public:
  TooLarge(std::uint64_t tuples, std::uint64_t cap)
      : Error("enumeration of " + std::to_string(tuples) +
              " tuples exceeds cap of " + std::to_string(cap)),
        tuples(tuples), cap(cap) {}
  std::uint64_t tuples;
  std::uint64_t cap;
};

/// An unconditional mathematical identity failed to hold. Signals a bug in
/// this library (or memory corruption), never a property of the input.
class InternalInconsistency : public Error {
public:
  using Error::Error;
};

/// Located syntax error in a descriptor string or table file.
class ParseError : public Error {
public:
  ParseError(const std::string& what, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line(line), column(column) {}
  int line;
  int column;
};

}  // namespace cayley
