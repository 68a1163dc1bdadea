#pragma once

#include <stdexcept>
#include <string>

namespace liegrad {

/// Caller-supplied data is malformed: dimension mismatch, unknown name,
/// bad rational syntax, and similar.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An input file could not be parsed.
class ParseError : public InputError {
public:
  using InputError::InputError;
};

/// An operation was invoked outside its stated contract
/// (e.g. extracting relations from an invalid grading).
class PreconditionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A configured safety cap was exceeded.
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A certificate failed to replay. Certificates are constructed together
/// with a mechanical validity check, so this indicates an internal bug.
class CertificateError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace liegrad
