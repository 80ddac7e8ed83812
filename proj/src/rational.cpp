#include "tilebeta/rational.hpp"

#include <cctype>
#include <sstream>

#include "tilebeta/error.hpp"

namespace tilebeta {

namespace {

bool valid_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

mpq_class parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den))
    fail(Errc::parse_error, "bad rational literal '" + text + "'");
  mpz_class n(num), d(den);
  if (d == 0) fail(Errc::parse_error, "zero denominator in '" + text + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return q;
}

std::string rational_literal(const mpq_class& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string decimal_string(const mpq_class& x, int digits) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const bool neg = sgn(x) < 0;
  mpq_class y = abs_q(x) * scale;
  // round half away from zero
  mpz_class r = floor_q(y + mpq_class(1, 2));
  mpz_class ip = r / scale, fp = r % scale;
  std::string frac = fp.get_str();
  frac.insert(frac.begin(), static_cast<std::size_t>(digits) - frac.size(), '0');
  std::string out = ip.get_str() + "." + frac;
  if (neg && r != 0) out.insert(out.begin(), '-');
  return out;
}

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

mpz_class floor_q(const mpq_class& x) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return r;
}

mpq_class abs_q(const mpq_class& x) { return sgn(x) < 0 ? mpq_class(-x) : x; }

mpq_class pow2_q(long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) return mpq_class(p);
  mpq_class q(1, p);
  q.canonicalize();
  return q;
}

SqrtBounds sqrt_enclosure(const mpq_class& x, int prec_bits) {
  if (sgn(x) < 0) fail(Errc::internal, "sqrt of negative rational");
  if (sgn(x) == 0) return {mpq_class(0), mpq_class(0)};
  mpz_class two_k;
  mpz_ui_pow_ui(two_k.get_mpz_t(), 2, static_cast<unsigned long>(prec_bits));
  mpz_class four_k = two_k * two_k;
  mpq_class scaled = x * four_k;
  mpz_class u = floor_q(scaled);
  mpz_class s;
  mpz_sqrt(s.get_mpz_t(), u.get_mpz_t());
  // exact square of a dyadic value
  if (s * s == u && scaled == u) {
    mpq_class v(s, two_k);
    v.canonicalize();
    return {v, v};
  }
  mpq_class lo(s, two_k), hi(s + 1, two_k);
  lo.canonicalize();
  hi.canonicalize();
  return {lo, hi};
}

std::string vector_key(const std::vector<mpq_class>& v) {
  std::ostringstream os;
  for (const auto& c : v) os << c.get_num().get_str() << "/" << c.get_den().get_str() << ",";
  return os.str();
}

}  // namespace tilebeta
