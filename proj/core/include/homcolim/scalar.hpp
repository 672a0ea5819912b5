#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace homcolim {

// Exact coefficients. Rational mode is ℚ (mpq, always canonical with
// positive denominator), integer mode is ℤ (mpz). No floating point anywhere.
using Rat = mpq_class;
using Int = mpz_class;

// Raised when an input document or a precondition fails validation.
struct validation_error : std::runtime_error {
  explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when an internal consistency check fails (d^2 != 0, SNF identity, ...).
// Reaching this indicates a bug, not bad input.
struct internal_error : std::logic_error {
  explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

inline void check_internal(bool ok, const char* what) {
  if (!ok) throw internal_error(what);
}

// Parses "p/q" or "p". Throws validation_error on garbage.
Rat parse_rational(const std::string& s);

// Serializes as "p" or "p/q" (q > 1).
std::string format_rational(const Rat& r);

}  // namespace homcolim
