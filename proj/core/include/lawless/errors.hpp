#pragma once

#include <stdexcept>
#include <string>

namespace lawless {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad generator index, unparsable word, out-of-range
/// parameter. The CLI maps these to exit code 2.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A search or enumeration ran past its configured budget. Never carries a
/// partial answer.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A constructed object failed one of its asserted postconditions. These are
/// fatal: the CLI maps them to exit code 1.
class CertificateFailure : public Error {
 public:
  using Error::Error;
};

class LengthBoundViolated : public CertificateFailure {
 public:
  using CertificateFailure::CertificateFailure;
};

class NotFound : public Error {
 public:
  using Error::Error;
};

}  // namespace lawless
