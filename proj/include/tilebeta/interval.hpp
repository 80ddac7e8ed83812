#pragma once

#include <gmpxx.h>

#include "tilebeta/rational.hpp"

namespace tilebeta {

/// Closed interval with exact rational endpoints.
struct Interval {
  mpq_class lo, hi;

  Interval() : lo(0), hi(0) {}
  Interval(const mpq_class& a, const mpq_class& b) : lo(a), hi(b) {}
  static Interval point(const mpq_class& x) { return Interval(x, x); }

  bool is_point() const { return lo == hi; }
  bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
  bool contains(const mpq_class& x) const { return lo <= x && x <= hi; }
  mpq_class width() const { return hi - lo; }
  mpq_class mid() const { return (lo + hi) / 2; }

  // Certified sign: -1 or +1 when the interval excludes zero, 0 otherwise.
  int sign() const {
    if (sgn(lo) > 0) return 1;
    if (sgn(hi) < 0) return -1;
    return 0;
  }
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
Interval operator*(const mpq_class& a, const Interval& b);
Interval operator+(const Interval& a, const mpq_class& b);

/// [min(|x|) , max(|x|)] over x in a.
Interval abs_i(const Interval& a);
Interval square(const Interval& a);
/// Division; requires b.sign() != 0.
Interval divide(const Interval& a, const Interval& b);
bool overlap(const Interval& a, const Interval& b);
Interval hull(const Interval& a, const Interval& b);

/// Rectangular complex enclosure.
struct Box {
  Interval re, im;

  Box() = default;
  Box(const Interval& r, const Interval& i) : re(r), im(i) {}
  static Box real_point(const mpq_class& x) {
    return Box(Interval::point(x), Interval::point(0));
  }
  static Box point(const mpq_class& x, const mpq_class& y) {
    return Box(Interval::point(x), Interval::point(y));
  }

  bool is_real() const { return im.is_point() && sgn(im.lo) == 0; }
  bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
  mpq_class width() const { return std::max(re.width(), im.width()); }
  Box conj() const { return Box(re, -im); }
};

Box operator+(const Box& a, const Box& b);
Box operator-(const Box& a, const Box& b);
Box operator*(const Box& a, const Box& b);
Box operator*(const mpq_class& a, const Box& b);

/// |z|^2 enclosure.
Interval mag2(const Box& a);
/// a / b; requires 0 not in mag2(b).
Box divide(const Box& a, const Box& b);
bool overlap(const Box& a, const Box& b);
/// Strict containment of a in the interior of b.
bool strictly_inside(const Box& a, const Box& b);
bool intersect(const Box& a, const Box& b, Box* out);

}  // namespace tilebeta
