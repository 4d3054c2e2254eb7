#pragma once

#include <stdexcept>
#include <string>

namespace itemq {

/// Base class for every error the engine reports.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that does not parse or violates a type invariant.
class MalformedInput : public Error {
 public:
  using Error::Error;
};

/// An itemset that was expected to be a family member is not one.
class UnknownItemset : public Error {
 public:
  using Error::Error;
};

/// A documented precondition (e.g. antimonotonicity) does not hold.
class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

/// The sample space would exceed the configured attribute limit.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// No distribution satisfies the given frequencies.
class InconsistentFrequencies : public Error {
 public:
  using Error::Error;
};

}  // namespace itemq
