#pragma once

#include <stdexcept>
#include <string>

namespace fanchar {

/// Bad input: malformed files, failed preconditions, invalid fans/groups.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public InputError {
 public:
  using InputError::InputError;
};

class PreconditionError : public InputError {
 public:
  using InputError::InputError;
};

class InvarianceError : public InputError {
 public:
  using InputError::InputError;
};

class RankError : public InputError {
 public:
  using InputError::InputError;
};

class OrthogonalityError : public InputError {
 public:
  using InputError::InputError;
};

/// Group closure exceeded the configured element cap.
class InfiniteGroupError : public InputError {
 public:
  using InputError::InputError;
};

/// Two routes that must agree by a theorem of the underlying mathematics
/// produced different answers.
class TheoremViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal invariant failed; always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class DivisibilityError : public InternalError {
 public:
  using InternalError::InternalError;
};

#define FANCHAR_ASSERT(cond, msg)                                          \
  do {                                                                     \
    if (!(cond)) throw ::fanchar::InternalError(std::string("assertion: ") + (msg)); \
  } while (0)

}  // namespace fanchar
