#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tilebeta/number_field.hpp"

namespace tilebeta {

/// Element of Q(beta) as rational coefficients over the power basis
/// {1, beta, ..., beta^{d-1}}. The same vector serves as the lattice point
/// of the lifted dynamics; evaluation at beta is the identity on this
/// representation.
class AlgebraicNumber {
 public:
  explicit AlgebraicNumber(FieldPtr field);  // zero
  AlgebraicNumber(FieldPtr field, const mpq_class& rational);
  AlgebraicNumber(FieldPtr field, std::vector<mpq_class> coeffs);

  static AlgebraicNumber beta(FieldPtr field);

  const std::vector<mpq_class>& coeffs() const { return coeffs_; }
  const FieldPtr& field() const { return field_; }

  bool is_zero() const;
  bool is_rational() const;
  mpq_class rational_value() const;  // pre: is_rational()

  AlgebraicNumber operator-() const;
  friend AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend AlgebraicNumber operator*(const mpq_class& c, const AlgebraicNumber& a);
  friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b);

  AlgebraicNumber inverse() const;  // division_by_zero on zero

  /// Exact key usable for hashing/grouping (canonical coefficient string).
  std::string key() const;

 private:
  FieldPtr field_;
  std::vector<mpq_class> coeffs_;  // size d, canonical
};

/// Certified sign of the value at beta; exact zero is decided from the
/// coefficients, so this always terminates.
int sign(const AlgebraicNumber& a);

/// Total order on values: -1, 0, +1 for a < b, a == b, a > b.
int compare(const AlgebraicNumber& a, const AlgebraicNumber& b);

/// Enclosure of the value at beta with width <= 2^-prec_bits.
Interval enclosure(const AlgebraicNumber& a, int prec_bits);

/// Enclosure of the conjugate embedding psi_i(a) = sum a_k beta_i^k for any
/// root index 1 <= i <= d (i = 1 is beta itself).
Box embedding_box(const AlgebraicNumber& a, int i, int prec_bits);

/// Spec surface: conjugate embeddings only (2 <= i <= d); bad_index otherwise.
Box conjugate_enclosure(const AlgebraicNumber& a, int i, int prec_bits);

/// Certified sign of psi_i(a); terminates because psi_i is injective.
int embedding_sign(const AlgebraicNumber& a, int i);

/// The in-field Galois conjugate when it exists (d <= 2): the element whose
/// image under psi_2 equals the value of `a` under psi_1 and vice versa.
std::optional<AlgebraicNumber> galois_conjugate_in_field(const AlgebraicNumber& a);

/// Companion-matrix action on the coefficient vector; equals beta * a.
AlgebraicNumber mul_by_beta(const AlgebraicNumber& a);

/// Common denominator of the coefficients.
mpz_class denominator_lcm(const AlgebraicNumber& a);

void require_same_field(const AlgebraicNumber& a, const AlgebraicNumber& b);

}  // namespace tilebeta
