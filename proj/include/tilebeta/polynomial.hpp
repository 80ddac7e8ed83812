#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "tilebeta/interval.hpp"

namespace tilebeta {

// Polynomials are coefficient vectors, constant term first.
using ZPoly = std::vector<mpz_class>;
using QPoly = std::vector<mpq_class>;

int degree(const QPoly& p);  // -1 for the zero polynomial
int degree(const ZPoly& p);
void normalize(QPoly& p);  // strip leading zeros
QPoly to_q(const ZPoly& p);
bool is_monic(const ZPoly& p);
std::string poly_string(const ZPoly& p, const std::string& var = "x");

mpq_class eval_q(const QPoly& p, const mpq_class& x);
mpq_class eval_q(const ZPoly& p, const mpq_class& x);
Interval eval_interval(const ZPoly& p, const Interval& x);
Box eval_box(const ZPoly& p, const Box& x);

QPoly derivative(const QPoly& p);
ZPoly derivative(const ZPoly& p);

QPoly add(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
QPoly scale(const QPoly& a, const mpq_class& c);
/// Remainder of a mod b; b nonzero.
QPoly rem(const QPoly& a, const QPoly& b);
/// Quotient and remainder.
void divmod(const QPoly& a, const QPoly& b, QPoly* quo, QPoly* remv);
/// Monic gcd over Q.
QPoly gcd_q(QPoly a, QPoly b);
/// g = gcd(a, b) monic, with u*a + v*b = g.
void xgcd_q(const QPoly& a, const QPoly& b, QPoly* g, QPoly* u, QPoly* v);

/// True and sets *quot when b (monic, integer) divides a exactly over Z.
bool divide_exact(const ZPoly& a, const ZPoly& b, ZPoly* quot);

bool is_squarefree(const ZPoly& p);
/// p / gcd(p, p'), monic integer polynomial with the same distinct roots.
ZPoly squarefree_part(const ZPoly& p);

/// All integer roots of a monic integer polynomial (each listed once).
std::vector<mpz_class> integer_roots(const ZPoly& p);
/// Divide out (x - r) exactly.
ZPoly deflate(const ZPoly& p, const mpz_class& r);

/// Cauchy bound: all complex roots have |z| < bound.
mpq_class cauchy_bound(const ZPoly& p);

/// Sturm chain of a squarefree polynomial.
std::vector<QPoly> sturm_chain(const ZPoly& p);
int sign_variations(const std::vector<QPoly>& chain, const mpq_class& x);
/// Number of real roots in (a, b].
int count_roots(const std::vector<QPoly>& chain, const mpq_class& a, const mpq_class& b);

/// Characteristic polynomial det(xI - M) of a square integer matrix; monic.
ZPoly char_poly(const std::vector<std::vector<mpz_class>>& m);

/// Reverse coefficient order (x^d * p(1/x)).
ZPoly reciprocal(const ZPoly& p);

}  // namespace tilebeta
