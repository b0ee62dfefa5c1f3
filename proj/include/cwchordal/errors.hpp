#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "vertex_set.hpp"

namespace cwc {

/// Malformed text input; offset is the byte position where parsing failed.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), reason_(what), offset_(offset) {}
  std::size_t offset() const { return offset_; }
  /// Message without the position suffix.
  const std::string& reason() const { return reason_; }

 private:
  std::string reason_;
  std::size_t offset_;
};

/// An input violated an operation's precondition. When the violation is
/// structural (a forbidden induced subgraph, a hole, a cycle) the offending
/// vertices are attached.
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what, std::vector<Vertex> witness = {})
      : std::invalid_argument(what), witness_(std::move(witness)) {}
  const std::vector<Vertex>& witness() const { return witness_; }

 private:
  std::vector<Vertex> witness_;
};

/// A structural claim that must hold on every class member failed.
class ClaimViolation : public std::logic_error {
 public:
  ClaimViolation(const std::string& claim, std::vector<Vertex> witness)
      : std::logic_error("claim violated: " + claim), claim_(claim), witness_(std::move(witness)) {}
  const std::string& claim() const { return claim_; }
  const std::vector<Vertex>& witness() const { return witness_; }

 private:
  std::string claim_;
  std::vector<Vertex> witness_;
};

}  // namespace cwc
