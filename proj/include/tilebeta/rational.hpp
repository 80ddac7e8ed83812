#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace tilebeta {

/// Parse a rational literal "p/q" (the "/q" part optional, q > 0 after sign
/// normalization). Throws Error{parse_error} on malformed input.
mpq_class parse_rational(const std::string& text);

/// Canonical literal form "p/q"; the denominator is always printed.
std::string rational_literal(const mpq_class& x);

/// Decimal expansion with `digits` fractional digits, rounded half away from
/// zero. Exact function of the rational value, independent of any float state.
std::string decimal_string(const mpq_class& x, int digits);

mpz_class lcm(const mpz_class& a, const mpz_class& b);
mpz_class floor_q(const mpq_class& x);
mpq_class abs_q(const mpq_class& x);

/// 2^e for possibly negative e.
mpq_class pow2_q(long e);

struct SqrtBounds {
  mpq_class lo, hi;  // lo^2 <= x <= hi^2, hi - lo <= 2^-prec (0 if exact)
};

/// Certified enclosure of sqrt(x) for x >= 0.
SqrtBounds sqrt_enclosure(const mpq_class& x, int prec_bits);

/// Canonical key string for a rational vector, usable for exact hashing.
std::string vector_key(const std::vector<mpq_class>& v);

}  // namespace tilebeta
