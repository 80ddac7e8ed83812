#include "tilebeta/interval.hpp"

#include <algorithm>

#include "tilebeta/error.hpp"

namespace tilebeta {

Interval operator+(const Interval& a, const Interval& b) {
  return Interval(a.lo + b.lo, a.hi + b.hi);
}

Interval operator-(const Interval& a, const Interval& b) {
  return Interval(a.lo - b.hi, a.hi - b.lo);
}

Interval operator-(const Interval& a) { return Interval(-a.hi, -a.lo); }

Interval operator*(const Interval& a, const Interval& b) {
  mpq_class p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return Interval(std::min(std::min(p1, p2), std::min(p3, p4)),
                  std::max(std::max(p1, p2), std::max(p3, p4)));
}

Interval operator*(const mpq_class& a, const Interval& b) {
  if (sgn(a) >= 0) return Interval(a * b.lo, a * b.hi);
  return Interval(a * b.hi, a * b.lo);
}

Interval operator+(const Interval& a, const mpq_class& b) {
  return Interval(a.lo + b, a.hi + b);
}

Interval abs_i(const Interval& a) {
  if (sgn(a.lo) >= 0) return a;
  if (sgn(a.hi) <= 0) return -a;
  return Interval(mpq_class(0), std::max<mpq_class>(-a.lo, a.hi));
}

Interval square(const Interval& a) {
  Interval m = abs_i(a);
  return Interval(m.lo * m.lo, m.hi * m.hi);
}

Interval divide(const Interval& a, const Interval& b) {
  if (b.sign() == 0) fail(Errc::internal, "interval division by straddling interval");
  mpq_class p1 = a.lo / b.lo, p2 = a.lo / b.hi, p3 = a.hi / b.lo, p4 = a.hi / b.hi;
  return Interval(std::min(std::min(p1, p2), std::min(p3, p4)),
                  std::max(std::max(p1, p2), std::max(p3, p4)));
}

bool overlap(const Interval& a, const Interval& b) { return a.lo <= b.hi && b.lo <= a.hi; }

Interval hull(const Interval& a, const Interval& b) {
  return Interval(std::min(a.lo, b.lo), std::max(a.hi, b.hi));
}

Box operator+(const Box& a, const Box& b) { return Box(a.re + b.re, a.im + b.im); }
Box operator-(const Box& a, const Box& b) { return Box(a.re - b.re, a.im - b.im); }

Box operator*(const Box& a, const Box& b) {
  return Box(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}

Box operator*(const mpq_class& a, const Box& b) { return Box(a * b.re, a * b.im); }

Interval mag2(const Box& a) { return square(a.re) + square(a.im); }

Box divide(const Box& a, const Box& b) {
  Interval m = mag2(b);
  if (m.sign() <= 0) fail(Errc::internal, "box division by enclosure of zero");
  Box num = a * b.conj();
  return Box(divide(num.re, m), divide(num.im, m));
}

bool overlap(const Box& a, const Box& b) { return overlap(a.re, b.re) && overlap(a.im, b.im); }

bool strictly_inside(const Box& a, const Box& b) {
  return a.re.lo > b.re.lo && a.re.hi < b.re.hi && a.im.lo > b.im.lo && a.im.hi < b.im.hi;
}

bool intersect(const Box& a, const Box& b, Box* out) {
  mpq_class rlo = std::max(a.re.lo, b.re.lo), rhi = std::min(a.re.hi, b.re.hi);
  mpq_class ilo = std::max(a.im.lo, b.im.lo), ihi = std::min(a.im.hi, b.im.hi);
  if (rlo > rhi || ilo > ihi) return false;
  *out = Box(Interval(rlo, rhi), Interval(ilo, ihi));
  return true;
}

}  // namespace tilebeta
