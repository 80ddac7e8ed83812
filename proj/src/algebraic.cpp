#include "tilebeta/algebraic.hpp"

#include <algorithm>

#include "tilebeta/error.hpp"

namespace tilebeta {

namespace {

std::vector<mpq_class> reduce_mod_field(const FieldPtr& f, QPoly v) {
  const QPoly p = to_q(f->poly());
  const int d = f->degree();
  normalize(v);
  if (degree(v) >= d) v = rem(v, p);
  v.resize(static_cast<std::size_t>(d), mpq_class(0));
  return v;
}

}  // namespace

AlgebraicNumber::AlgebraicNumber(FieldPtr field)
    : field_(std::move(field)), coeffs_(static_cast<std::size_t>(field_->degree()), mpq_class(0)) {}

AlgebraicNumber::AlgebraicNumber(FieldPtr field, const mpq_class& rational)
    : AlgebraicNumber(std::move(field)) {
  coeffs_[0] = rational;
}

AlgebraicNumber::AlgebraicNumber(FieldPtr field, std::vector<mpq_class> coeffs)
    : field_(std::move(field)), coeffs_(reduce_mod_field(field_, std::move(coeffs))) {}

AlgebraicNumber AlgebraicNumber::beta(FieldPtr field) {
  AlgebraicNumber b(std::move(field));
  if (b.field_->degree() == 1) {
    b.coeffs_[0] = mpq_class(-b.field_->poly()[0]);
  } else {
    b.coeffs_[1] = 1;
  }
  return b;
}

bool AlgebraicNumber::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const mpq_class& c) { return c == 0; });
}

bool AlgebraicNumber::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

mpq_class AlgebraicNumber::rational_value() const {
  if (!is_rational()) fail(Errc::internal, "rational_value of an irrational element");
  return coeffs_[0];
}

void require_same_field(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (!a.field()->same_field(*b.field()))
    fail(Errc::field_mismatch, "operands from different number fields");
}

AlgebraicNumber AlgebraicNumber::operator-() const {
  AlgebraicNumber r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  require_same_field(a, b);
  AlgebraicNumber r = a;
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
  return r;
}

AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  require_same_field(a, b);
  AlgebraicNumber r = a;
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] -= b.coeffs_[i];
  return r;
}

AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  require_same_field(a, b);
  QPoly prod = mul(a.coeffs_, b.coeffs_);
  return AlgebraicNumber(a.field_, std::move(prod));
}

AlgebraicNumber operator*(const mpq_class& c, const AlgebraicNumber& a) {
  AlgebraicNumber r = a;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

AlgebraicNumber AlgebraicNumber::inverse() const {
  if (is_zero()) fail(Errc::division_by_zero, "inverse of zero");
  QPoly g, u, v;
  QPoly self = coeffs_;
  normalize(self);
  xgcd_q(self, to_q(field_->poly()), &g, &u, &v);
  if (degree(g) != 0) fail(Errc::internal, "element not invertible in the field");
  return AlgebraicNumber(field_, scale(u, 1 / g[0]));
}

AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  require_same_field(a, b);
  return a * b.inverse();
}

bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  return a.field_->same_field(*b.field_) && a.coeffs_ == b.coeffs_;
}

std::string AlgebraicNumber::key() const { return vector_key(coeffs_); }

Interval enclosure(const AlgebraicNumber& a, int prec_bits) {
  Box b = embedding_box(a, 1, prec_bits);
  return b.re;
}

Box embedding_box(const AlgebraicNumber& a, int i, int prec_bits) {
  const auto& f = *a.field();
  if (i < 1 || i > f.degree()) fail(Errc::bad_index, "embedding index " + std::to_string(i));
  // refine the root until the evaluated enclosure is tight enough
  const mpq_class target = pow2_q(-prec_bits);
  int bits = std::max(prec_bits, 16);
  for (;;) {
    Box root = f.root_box(i, bits);
    Box acc = Box::real_point(0);
    for (int k = static_cast<int>(a.coeffs().size()) - 1; k >= 0; --k) {
      acc = acc * root;
      acc.re = acc.re + a.coeffs()[static_cast<std::size_t>(k)];
    }
    if (acc.width() <= target) return acc;
    bits *= 2;
    if (bits > (1 << 22)) fail(Errc::internal, "embedding enclosure did not converge");
  }
}

Box conjugate_enclosure(const AlgebraicNumber& a, int i, int prec_bits) {
  if (i < 2 || i > a.field()->degree())
    fail(Errc::bad_index, "conjugate index " + std::to_string(i));
  if (prec_bits <= 0) fail(Errc::bad_index, "precision must be positive");
  return embedding_box(a, i, prec_bits);
}

int embedding_sign(const AlgebraicNumber& a, int i) {
  if (a.is_zero()) return 0;
  for (int bits = 16;; bits *= 2) {
    Box b = embedding_box(a, i, bits);
    if (!b.is_real() && !b.im.contains_zero())
      fail(Errc::internal, "sign of a non-real embedding");
    int s = b.re.sign();
    if (s != 0) return s;
    if (bits > (1 << 22)) fail(Errc::internal, "sign refinement did not converge");
  }
}

int sign(const AlgebraicNumber& a) { return embedding_sign(a, 1); }

int compare(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  require_same_field(a, b);
  if (a.coeffs() == b.coeffs()) return 0;
  return sign(a - b);
}

std::optional<AlgebraicNumber> galois_conjugate_in_field(const AlgebraicNumber& a) {
  const auto& f = a.field();
  if (f->degree() == 1) return a;
  if (f->degree() != 2) return std::nullopt;
  // beta + beta_2 = -g_1, so conj(w0 + w1 beta) = (w0 - g1 w1) - w1 beta
  const mpq_class g1(f->poly()[1]);
  std::vector<mpq_class> c = {a.coeffs()[0] - g1 * a.coeffs()[1], -a.coeffs()[1]};
  return AlgebraicNumber(f, std::move(c));
}

AlgebraicNumber mul_by_beta(const AlgebraicNumber& a) {
  const auto& comp = a.field()->companion();
  const int d = a.field()->degree();
  std::vector<mpq_class> out(static_cast<std::size_t>(d), mpq_class(0));
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) {
      const mpz_class& m = comp[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      if (m != 0) out[static_cast<std::size_t>(r)] += mpq_class(m) * a.coeffs()[static_cast<std::size_t>(c)];
    }
  return AlgebraicNumber(a.field(), std::move(out));
}

mpz_class denominator_lcm(const AlgebraicNumber& a) {
  mpz_class d(1);
  for (const auto& c : a.coeffs()) d = lcm(d, c.get_den());
  return d;
}

}  // namespace tilebeta
