#pragma once

#include <stdexcept>
#include <string>

namespace ktypes {

/// Base class for all library errors.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Two weights with different ambient dimensions were combined.
struct dimension_error : error {
  using error::error;
};

/// A pairing was requested against a zero-norm vector.
struct degenerate_root_error : error {
  using error::error;
};

/// Group parameters fall below the rank hypotheses of the classification.
struct rank_error : error {
  using error::error;
};

/// Malformed user input (group string, weight coordinates, ...).
struct parse_error : error {
  using error::error;
};

/// A compact simple root matched no classification case.  This would be a
/// counterexample to the classification, so it aborts verification; the
/// message carries the chamber word and the offending root.
struct classification_error : error {
  using error::error;
};

} // namespace ktypes
