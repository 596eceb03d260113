#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "ktypes/errors.hpp"

namespace ktypes {

/// Exact rational scalar.  Every quantity in the library is one of these;
/// there is no floating point anywhere in the computation paths.
using Rat = mpq_class;
using Int = mpz_class;

/// Parse "n", "-n" or "n/d" (d > 0 after canonicalization).
Rat rat_parse(const std::string& s);

/// Canonical string form: "3", "-3", "1/2", "-7/6".
inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline bool rat_is_integer(const Rat& q) { return q.get_den() == 1; }

/// Floor as a machine integer; throws if out of range.
std::int64_t rat_floor_i64(const Rat& q);
std::int64_t rat_ceil_i64(const Rat& q);

/// Exact conversion to a machine integer; throws unless q is an integer
/// that fits.
std::int64_t rat_to_i64(const Rat& q);

} // namespace ktypes
