#pragma once

#include <stdexcept>
#include <string>

namespace hyperhom {

// Base for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad input or misuse of the API by the caller (CLI exit code 2).
struct UserError : Error {
  using Error::Error;
};

// A mathematical invariant failed to hold; indicates a bug (CLI exit code 1).
struct InternalError : Error {
  using Error::Error;
};

struct ParseError : UserError {
  ParseError(const std::string& what, int line)
      : UserError(what + " (line " + std::to_string(line) + ")"), line(line) {}
  int line;
};

struct DuplicateVertexInEdge : ParseError {
  using ParseError::ParseError;
};

struct EmptyEdge : UserError {
  using UserError::UserError;
};

struct NotASimplicialComplex : UserError {
  using UserError::UserError;
};

struct InvalidMorphism : UserError {
  using UserError::UserError;
};

struct AmbientMismatch : UserError {
  using UserError::UserError;
};

struct DegreeOutOfRange : UserError {
  using UserError::UserError;
};

struct NotASubgroup : UserError {
  using UserError::UserError;
};

struct HypothesisViolated : UserError {
  using UserError::UserError;
};

struct NonIncreasingRadii : UserError {
  using UserError::UserError;
};

struct InvalidMetric : UserError {
  using UserError::UserError;
};

struct AsymmetricDistance : InvalidMetric {
  using InvalidMetric::InvalidMetric;
};

// Rank matrix fed to diagram extraction was not realizable by any filtration.
struct NegativeMultiplicity : InternalError {
  using InternalError::InternalError;
};

struct ValueOutOfRange : UserError {
  using UserError::UserError;
};

struct DomainMismatch : UserError {
  using UserError::UserError;
};

struct EmptyHypergraphError : UserError {
  using UserError::UserError;
};

struct PreconditionViolated : UserError {
  using UserError::UserError;
};

struct TokenCollision : UserError {
  using UserError::UserError;
};

}  // namespace hyperhom
