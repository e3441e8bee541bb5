// Error taxonomy shared across the library.
//
// Everything derives from wperp::Error so callers can catch one type; the
// subclasses exist because tests and the CLI react differently to them.

#ifndef WPERP_ERROR_HPP
#define WPERP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace wperp {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input could not be parsed; message carries a 1-based line number when known.
struct ParseError : Error {
  using Error::Error;
};

// A closure loop hit its configured cap before finishing.
struct CapExceeded : Error {
  using Error::Error;
};

// A floating-point value did not match any admissible exact quantity
// (e.g. an inner product that is no -cos(pi/m) for m <= 360 and not <= -1).
struct NumericAmbiguity : Error {
  using Error::Error;
};

// Two different finite orders were derived for the same pair of generator
// classes.  The relation table never produces this on well-formed input, so
// it signals an implementation bug rather than a bad graph.
struct InconsistentOrders : Error {
  using Error::Error;
};

}  // namespace wperp

#endif  // WPERP_ERROR_HPP
