#pragma once

#include <stdexcept>
#include <string>

namespace adelic {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// All known digits of an element are zero but its precision is finite.
class IndeterminateValuation : public Error {
 public:
  using Error::Error;
};

/// A base-specific operation was applied to an element of the other base kind.
class WrongBase : public Error {
 public:
  using Error::Error;
};

/// The requested digits lie beyond the known precision of an element.
class PrecisionLoss : public Error {
 public:
  using Error::Error;
};

/// A defining polynomial outside the validated list of local models.
class UnsupportedPolynomial : public Error {
 public:
  using Error::Error;
};

/// The operation is not implemented for this kind of global field.
class UnsupportedField : public Error {
 public:
  using Error::Error;
};

/// The pair (L, K) is not a supported field extension.
class NotAnExtension : public Error {
 public:
  using Error::Error;
};

/// The certified enumeration radius of a theta sum exceeds the configured cap.
class RadiusExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (field, idele or local field literals).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace adelic
