#pragma once

#include <optional>
#include <vector>

#include "tilebeta/beta_map.hpp"

namespace tilebeta {

/// Lattice form of a beta transform: f(w) = A w - w_j on coefficient vectors,
/// where A is the companion matrix and value(w_j) = y_j. All w_j and region
/// boundary vectors lie in (1/q) Z^d.
struct LiftedMap {
  BetaTransform base;
  FieldPtr field;
  std::vector<AlgebraicNumber> w_vectors;          // one per branch
  std::vector<AlgebraicNumber> region_boundaries;  // phi^{-1}(x_j), j = 0..l
  mpz_class q;
};

LiftedMap lift_map(const BetaTransform& t);

/// Branch j (1-based) whose region contains w; out_of_domain otherwise.
int region_index(const LiftedMap& m, const AlgebraicNumber& w);

/// One step A w - w_j; out_of_domain when value(w) is outside [0, B).
AlgebraicNumber step(const LiftedMap& m, const AlgebraicNumber& w);

/// Trapping-region thresholds, one per conjugate i = 2..d: certified rational
/// R_i >= max_j |psi_i(w_j)| / (1 - |beta_i|). Every orbit point then keeps
/// |psi_i| <= max(|psi_i(w_0)|, R_i). Errors: not_pisot.
std::vector<mpq_class> trapping_bounds(const LiftedMap& m);

/// The same quantity for an explicit translate set (formula-level surface).
mpq_class trapping_bound_for(const FieldPtr& field,
                             const std::vector<AlgebraicNumber>& translates, int i);

/// Escape threshold for a certified-expanding conjugate i: rational
/// R >= max_j |psi_i(w_j)| / (|beta_i| - 1), tight to 2^-64 (exact when the
/// ratio is rational). Once |psi_i(w)| > R the modulus grows strictly.
/// Errors: not_expanding.
mpq_class escape_threshold(const LiftedMap& m, int i);

/// The paper-style preset: c-coordinate threshold r scaled into psi
/// coordinates, i.e. a tight rational upper bound of r * |p'(beta_i)|.
mpq_class scaled_escape_preset(const LiftedMap& m, int i, const mpq_class& r);

struct OrbitOptions {
  long budget = 1000000;
  // Override the escape test with an explicit threshold for one conjugate.
  std::optional<int> conjugate;
  std::optional<mpq_class> threshold;
};

struct OrbitOutcome {
  enum class Status { eventually_periodic, provably_infinite, undetermined };
  Status status = Status::undetermined;

  long preperiod = 0;  // K, eventually_periodic
  long period = 0;     // L >= 1, eventually_periodic

  long escape_iterate = -1;  // provably_infinite
  int conjugate = 0;
  mpq_class threshold;

  long iterations = 0;
  std::vector<AlgebraicNumber> prefix;  // w_0 .. w_t (states up to the verdict)
  mpz_class scale;                      // q' = lcm(q, den(w_0))
  // Pisot case: lattice-point bound that guarantees termination within budget.
  std::optional<mpz_class> lattice_bound;
};

/// Iterate f with exact cycle detection and certified escape tests.
OrbitOutcome orbit(const LiftedMap& m, const AlgebraicNumber& w0, OrbitOptions opt = {});

/// Central-tile view of the same orbit: symbols of the visited intervals.
struct CentralOrbit {
  OrbitOutcome outcome;
  std::vector<int> symbols;
};
CentralOrbit central_orbit(const LiftedMap& m, const AlgebraicNumber& x0, OrbitOptions opt = {});

}  // namespace tilebeta
