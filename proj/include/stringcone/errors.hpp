#pragma once

#include <stdexcept>
#include <string>

namespace stringcone {

/// Base class for all failures raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A cone description violates one of the structural invariants.
class InvalidCone : public Error {
 public:
  explicit InvalidCone(const std::string& msg) : Error(msg) {}
};

/// Point configuration does not span the ambient space.
class DegenerateConfiguration : public Error {
 public:
  explicit DegenerateConfiguration(const std::string& msg) : Error(msg) {}
};

/// The lifting heights do not induce a triangulation that uses every point
/// as a vertex with full-dimensional simplex cells.
class NotStrictlyConvex : public Error {
 public:
  explicit NotStrictlyConvex(const std::string& msg) : Error(msg) {}
};

class PointOutsideCone : public Error {
 public:
  explicit PointOutsideCone(const std::string& msg) : Error(msg) {}
};

class NotInAnySimplex : public Error {
 public:
  explicit NotInAnySimplex(const std::string& msg) : Error(msg) {}
};

/// A located point sits on a wall between simplex cones; only possible when
/// the perturbation direction is not generic.
class AmbiguousLocation : public Error {
 public:
  explicit AmbiguousLocation(const std::string& msg) : Error(msg) {}
};

class PointNotInDomain : public Error {
 public:
  explicit PointNotInDomain(const std::string& msg) : Error(msg) {}
};

/// Random sampling failed to produce a generic object within the retry budget.
class GenericityFailure : public Error {
 public:
  explicit GenericityFailure(const std::string& msg) : Error(msg) {}
};

/// Quotient coefficients turned out non-generic (dimension or solve mismatch).
class NonGenericCoefficients : public Error {
 public:
  explicit NonGenericCoefficients(const std::string& msg) : Error(msg) {}
};

class PresentationNotCertified : public Error {
 public:
  explicit PresentationNotCertified(const std::string& msg) : Error(msg) {}
};

/// Malformed input document (JSON syntax or schema).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace stringcone
