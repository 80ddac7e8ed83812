#include "tilebeta/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "tilebeta/error.hpp"

namespace tilebeta {

int degree(const QPoly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

int degree(const ZPoly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

void normalize(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly to_q(const ZPoly& p) {
  QPoly q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[i] = mpq_class(p[i]);
  return q;
}

bool is_monic(const ZPoly& p) {
  int d = degree(p);
  return d >= 0 && p[static_cast<std::size_t>(d)] == 1;
}

std::string poly_string(const ZPoly& p, const std::string& var) {
  std::ostringstream os;
  bool first = true;
  for (int i = degree(p); i >= 0; --i) {
    const mpz_class& c = p[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    mpz_class a = abs(c);
    if (a != 1 || i == 0) os << a.get_str();
    if (i >= 1) {
      os << var;
      if (i >= 2) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

mpq_class eval_q(const QPoly& p, const mpq_class& x) {
  mpq_class acc = 0;
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) acc = acc * x + p[static_cast<std::size_t>(i)];
  return acc;
}

mpq_class eval_q(const ZPoly& p, const mpq_class& x) {
  mpq_class acc = 0;
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) acc = acc * x + p[static_cast<std::size_t>(i)];
  return acc;
}

Interval eval_interval(const ZPoly& p, const Interval& x) {
  Interval acc = Interval::point(0);
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    acc = acc * x + mpq_class(p[static_cast<std::size_t>(i)]);
  return acc;
}

Box eval_box(const ZPoly& p, const Box& x) {
  Box acc = Box::real_point(0);
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
    acc = acc * x;
    acc.re = acc.re + mpq_class(p[static_cast<std::size_t>(i)]);
  }
  return acc;
}

QPoly derivative(const QPoly& p) {
  if (p.size() <= 1) return {};
  QPoly d(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = mpq_class(static_cast<long>(i)) * p[i];
  return d;
}

ZPoly derivative(const ZPoly& p) {
  if (p.size() <= 1) return {};
  ZPoly d(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = mpz_class(static_cast<long>(i)) * p[i];
  return d;
}

QPoly add(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()), mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  normalize(r);
  return r;
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (degree(a) < 0 || degree(b) < 0) return {};
  QPoly r(a.size() + b.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  normalize(r);
  return r;
}

QPoly scale(const QPoly& a, const mpq_class& c) {
  QPoly r = a;
  for (auto& x : r) x *= c;
  normalize(r);
  return r;
}

void divmod(const QPoly& a, const QPoly& b, QPoly* quo, QPoly* remv) {
  int db = degree(b);
  if (db < 0) fail(Errc::internal, "polynomial division by zero");
  QPoly r = a;
  normalize(r);
  QPoly q(std::max<std::size_t>(r.size(), 1), mpq_class(0));
  const mpq_class lead = b[static_cast<std::size_t>(db)];
  while (degree(r) >= db) {
    int dr = degree(r);
    mpq_class c = r[static_cast<std::size_t>(dr)] / lead;
    int shift = dr - db;
    q[static_cast<std::size_t>(shift)] = c;
    for (int i = 0; i <= db; ++i)
      r[static_cast<std::size_t>(i + shift)] -= c * b[static_cast<std::size_t>(i)];
    normalize(r);
  }
  normalize(q);
  if (quo) *quo = q;
  if (remv) *remv = r;
}

QPoly rem(const QPoly& a, const QPoly& b) {
  QPoly r;
  divmod(a, b, nullptr, &r);
  return r;
}

namespace {
QPoly make_monic(QPoly p) {
  int d = degree(p);
  if (d < 0) return p;
  mpq_class lead = p[static_cast<std::size_t>(d)];
  for (auto& c : p) c /= lead;
  p.resize(static_cast<std::size_t>(d) + 1);
  return p;
}
}  // namespace

QPoly gcd_q(QPoly a, QPoly b) {
  normalize(a);
  normalize(b);
  while (degree(b) >= 0) {
    QPoly r = rem(a, b);
    a = std::move(b);
    b = make_monic(std::move(r));
  }
  return make_monic(std::move(a));
}

void xgcd_q(const QPoly& a, const QPoly& b, QPoly* g, QPoly* u, QPoly* v) {
  QPoly r0 = a, r1 = b;
  normalize(r0);
  normalize(r1);
  QPoly s0 = {mpq_class(1)}, s1 = {};
  QPoly t0 = {}, t1 = {mpq_class(1)};
  while (degree(r1) >= 0) {
    QPoly q, r;
    divmod(r0, r1, &q, &r);
    QPoly s2 = add(s0, scale(mul(q, s1), mpq_class(-1)));
    QPoly t2 = add(t0, scale(mul(q, t1), mpq_class(-1)));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  int d = degree(r0);
  if (d < 0) fail(Errc::internal, "xgcd of zero polynomials");
  mpq_class lead = r0[static_cast<std::size_t>(d)];
  if (g) *g = scale(r0, 1 / lead);
  if (u) *u = scale(s0, 1 / lead);
  if (v) *v = scale(t0, 1 / lead);
}

bool divide_exact(const ZPoly& a, const ZPoly& b, ZPoly* quot) {
  if (!is_monic(b)) fail(Errc::internal, "divide_exact expects a monic divisor");
  QPoly q, r;
  divmod(to_q(a), to_q(b), &q, &r);
  if (degree(r) >= 0) return false;
  ZPoly zq(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i].get_den() != 1) return false;
    zq[i] = q[i].get_num();
  }
  if (quot) *quot = zq;
  return true;
}

bool is_squarefree(const ZPoly& p) {
  return degree(gcd_q(to_q(p), to_q(derivative(p)))) == 0;
}

ZPoly squarefree_part(const ZPoly& p) {
  QPoly g = gcd_q(to_q(p), to_q(derivative(p)));
  QPoly q;
  divmod(to_q(p), g, &q, nullptr);
  // monic integer polynomial by Gauss's lemma; clear any residual denominators
  mpz_class den(1);
  for (const auto& c : q) den = lcm(den, c.get_den());
  ZPoly r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    mpq_class c = q[i] * den;
    r[i] = c.get_num();
  }
  // normalize to monic (content of a monic-rational quotient scaled by den)
  int d = degree(r);
  if (d < 0 || r[static_cast<std::size_t>(d)] == 0) fail(Errc::internal, "bad squarefree part");
  mpz_class lead = r[static_cast<std::size_t>(d)];
  for (auto& c : r) {
    mpz_class qz, rz;
    mpz_fdiv_qr(qz.get_mpz_t(), rz.get_mpz_t(), c.get_mpz_t(), lead.get_mpz_t());
    if (rz != 0) fail(Errc::internal, "non-integral squarefree part");
    c = qz;
  }
  return r;
}

std::vector<mpz_class> integer_roots(const ZPoly& p) {
  std::vector<mpz_class> roots;
  ZPoly cur = p;
  // strip x^k factors
  while (degree(cur) > 0 && cur[0] == 0) {
    if (roots.empty() || roots.back() != 0) roots.push_back(0);
    cur.erase(cur.begin());
  }
  if (degree(cur) <= 0) return roots;
  mpz_class c0 = abs(cur[0]);
  for (mpz_class t(1); t * t <= c0; ++t) {
    if (c0 % t != 0) continue;
    for (const mpz_class& div : {t, c0 / t}) {
      for (const mpz_class& cand : {div, mpz_class(-div)}) {
        if (eval_q(cur, mpq_class(cand)) == 0 &&
            std::find(roots.begin(), roots.end(), cand) == roots.end())
          roots.push_back(cand);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

ZPoly deflate(const ZPoly& p, const mpz_class& r) {
  // synthetic division by (x - r); must be exact
  int d = degree(p);
  if (d < 1) fail(Errc::internal, "deflate of constant polynomial");
  ZPoly q(static_cast<std::size_t>(d));
  mpz_class carry = p[static_cast<std::size_t>(d)];
  for (int i = d - 1; i >= 0; --i) {
    q[static_cast<std::size_t>(i)] = carry;
    carry = p[static_cast<std::size_t>(i)] + carry * r;
  }
  if (carry != 0) fail(Errc::internal, "deflate by a non-root");
  return q;
}

mpq_class cauchy_bound(const ZPoly& p) {
  int d = degree(p);
  if (d < 1) return 1;
  mpz_class lead = abs(p[static_cast<std::size_t>(d)]);
  mpq_class m = 0;
  for (int i = 0; i < d; ++i) {
    mpq_class c(abs(p[static_cast<std::size_t>(i)]), lead);
    c.canonicalize();
    m = std::max(m, c);
  }
  return m + 1;
}

std::vector<QPoly> sturm_chain(const ZPoly& p) {
  std::vector<QPoly> chain;
  chain.push_back(to_q(p));
  chain.push_back(to_q(derivative(p)));
  while (degree(chain.back()) > 0) {
    QPoly r = rem(chain[chain.size() - 2], chain.back());
    if (degree(r) < 0) break;
    chain.push_back(scale(r, mpq_class(-1)));
  }
  return chain;
}

int sign_variations(const std::vector<QPoly>& chain, const mpq_class& x) {
  int var = 0, last = 0;
  for (const auto& f : chain) {
    int s = sgn(eval_q(f, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++var;
    last = s;
  }
  return var;
}

int count_roots(const std::vector<QPoly>& chain, const mpq_class& a, const mpq_class& b) {
  return sign_variations(chain, a) - sign_variations(chain, b);
}

ZPoly char_poly(const std::vector<std::vector<mpz_class>>& m) {
  // Faddeev-LeVerrier; exact over Q, result is integral for integer input.
  const std::size_t n = m.size();
  using QMat = std::vector<std::vector<mpq_class>>;
  auto mat_mul = [&](const QMat& a, const QMat& b) {
    QMat r(n, std::vector<mpq_class>(n, mpq_class(0)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        if (a[i][k] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
      }
    return r;
  };
  QMat mq(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mq[i][j] = mpq_class(m[i][j]);

  std::vector<mpq_class> c(n + 1, mpq_class(0));
  c[n] = 1;
  QMat mk = mq;
  for (std::size_t k = 1; k <= n; ++k) {
    if (k > 1) {
      QMat tmp = mk;
      for (std::size_t i = 0; i < n; ++i) tmp[i][i] += c[n - k + 1];
      mk = mat_mul(mq, tmp);
    }
    mpq_class tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += mk[i][i];
    c[n - k] = -tr / static_cast<long>(k);
  }
  ZPoly out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (c[i].get_den() != 1) fail(Errc::internal, "non-integral characteristic polynomial");
    out[i] = c[i].get_num();
  }
  return out;
}

ZPoly reciprocal(const ZPoly& p) {
  ZPoly r(p.rbegin(), p.rend());
  return r;
}

}  // namespace tilebeta
