#pragma once

#include <stdexcept>
#include <string>

namespace cayrep {

// Base class for everything thrown by this library. The three intermediate
// bases below sort errors by who is at fault: bad input, a failed
// mathematical claim, or a size limit. The command-line tool maps them to
// exit codes 2, 1, and 3.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The caller handed in something malformed or out of contract.
struct InvalidInput : Error {
  using Error::Error;
};

// A claim that should hold mathematically failed when checked.
struct VerificationFailure : Error {
  using Error::Error;
};

// The input is beyond a configured or hard size limit.
struct ResourceLimit : Error {
  using Error::Error;
};

// An element or permutation was used with a group it does not belong to.
struct MismatchedSpec : InvalidInput {
  using InvalidInput::InvalidInput;
};

// Permutations of different degrees were combined.
struct DegreeMismatch : InvalidInput {
  using InvalidInput::InvalidInput;
};

// A multiplication table fails one of the group axioms.
struct NotAGroup : InvalidInput {
  using InvalidInput::InvalidInput;
};

// A connection set contains the identity element.
struct IdentityInSet : InvalidInput {
  using InvalidInput::InvalidInput;
};

// A connection set is not closed under inversion.
struct NotInverseClosed : InvalidInput {
  using InvalidInput::InvalidInput;
};

// The chosen cyclic factor does not have order a positive power of two.
struct OddOrderFactor : InvalidInput {
  using InvalidInput::InvalidInput;
};

// The whole group has odd order, so no factor qualifies.
struct OddOrder : InvalidInput {
  using InvalidInput::InvalidInput;
};

// Malformed command-line input or text literal. Position is 1-based.
struct UsageError : InvalidInput {
  int line;
  int column;
  UsageError(const std::string& what, int line_, int column_)
      : InvalidInput(what), line(line_), column(column_) {}
};

// A claimed witness element fails its defining condition on recheck.
struct WitnessInvalid : VerificationFailure {
  using VerificationFailure::VerificationFailure;
};

// A constructed object failed a self-check that must hold by design.
// Seeing this means a bug in the library, not bad input.
struct InternalVerificationFailed : VerificationFailure {
  using VerificationFailure::VerificationFailure;
};

// A closure or search grew past its configured bound.
struct CapExceeded : ResourceLimit {
  long cap;
  explicit CapExceeded(const std::string& what, long cap_) : ResourceLimit(what), cap(cap_) {}
};

// The input exceeds a hard size limit of the requested operation.
struct TooLarge : ResourceLimit {
  long size;
  explicit TooLarge(const std::string& what, long size_) : ResourceLimit(what), size(size_) {}
};

}  // namespace cayrep
