// Certified root isolation and Q(beta) construction.
//
// Real roots are isolated by Sturm-sequence bisection over exact rationals.
// Complex roots are isolated by subdividing the upper half of the Cauchy
// bounding box with interval-evaluation exclusion tests and interval-Newton
// inclusion tests; a Newton-contracted box contains exactly one root. Cells
// touching the real axis are tested on a conjugate-symmetric box, where a
// unique root must be real and is left to the Sturm side. Certified boxes are
// refined below a Mahler-type separation bound before deduplication, so
// overlapping boxes provably hold the same root.

#include "tilebeta/number_field.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "tilebeta/error.hpp"

namespace tilebeta {

namespace {

// ---------------------------------------------------------------- exact C

struct QC {
  mpq_class re, im;
};

QC qc_mul(const QC& a, const QC& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

QC eval_qc(const ZPoly& p, const QC& z) {
  QC acc{mpq_class(0), mpq_class(0)};
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
    acc = qc_mul(acc, z);
    acc.re += p[static_cast<std::size_t>(i)];
  }
  return acc;
}

// ------------------------------------------------------------- real roots

struct RealIso {
  mpq_class lo, hi;  // p(lo) p(hi) < 0, exactly one root inside
};

// pre: squarefree with no rational roots
std::vector<RealIso> isolate_real(const ZPoly& p) {
  const auto chain = sturm_chain(p);
  const mpq_class c = cauchy_bound(p);
  std::vector<RealIso> out;
  std::deque<std::pair<mpq_class, mpq_class>> work;
  work.emplace_back(-c, c);
  while (!work.empty()) {
    auto [a, b] = work.front();
    work.pop_front();
    int n = count_roots(chain, a, b);
    if (n == 0) continue;
    if (n == 1) {
      // shrink until the sign change is visible at the endpoints
      mpq_class lo = a, hi = b;
      while (sgn(eval_q(p, lo)) == sgn(eval_q(p, hi))) {
        mpq_class mid = (lo + hi) / 2;
        if (count_roots(chain, lo, mid) == 1)
          hi = mid;
        else
          lo = mid;
      }
      out.push_back({lo, hi});
      continue;
    }
    mpq_class mid = (a + b) / 2;
    work.emplace_back(a, mid);
    work.emplace_back(mid, b);
  }
  std::sort(out.begin(), out.end(),
            [](const RealIso& x, const RealIso& y) { return x.lo < y.lo; });
  return out;
}

void bisect_real(const ZPoly& p, RealIso* r) {
  mpq_class mid = (r->lo + r->hi) / 2;
  int sm = sgn(eval_q(p, mid));
  if (sm == 0) fail(Errc::internal, "bisection hit an unexpected rational root");
  if (sm == sgn(eval_q(p, r->lo)))
    r->lo = mid;
  else
    r->hi = mid;
}

void refine_real_to(const ZPoly& p, RealIso* r, const mpq_class& width) {
  while (r->hi - r->lo > width) bisect_real(p, r);
}

// ---------------------------------------------------------- complex roots

std::optional<Box> newton_contract(const ZPoly& p, const ZPoly& dp, const Box& x) {
  Box dpx = eval_box(dp, x);
  if (mag2(dpx).sign() <= 0) return std::nullopt;
  QC m{x.re.mid(), x.im.mid()};
  QC pm = eval_qc(p, m);
  Box n = Box::point(m.re, m.im) - divide(Box::point(pm.re, pm.im), dpx);
  if (!strictly_inside(n, x)) return std::nullopt;
  Box out;
  if (!intersect(n, x, &out)) return std::nullopt;
  return out;
}

// pre: x is Newton-certified (contains exactly one simple root)
void newton_refine(const ZPoly& p, const ZPoly& dp, Box* x, const mpq_class& width) {
  int guard = 0;
  while (x->width() > width) {
    Box dpx = eval_box(dp, *x);
    if (mag2(dpx).sign() > 0) {
      QC m{x->re.mid(), x->im.mid()};
      QC pm = eval_qc(p, m);
      Box n = Box::point(m.re, m.im) - divide(Box::point(pm.re, pm.im), dpx);
      Box cut;
      if (intersect(n, *x, &cut)) {
        *x = cut;
        if (++guard > 512) fail(Errc::internal, "Newton refinement stalled");
        continue;
      }
    }
    fail(Errc::internal, "Newton refinement lost its root");
  }
}

Box inflate(const Box& x) {
  mpq_class pad = std::max(x.re.width(), x.im.width()) / 2;
  return Box(Interval(x.re.lo - pad, x.re.hi + pad), Interval(x.im.lo - pad, x.im.hi + pad));
}

Box symmetrize(const Box& x) {
  mpq_class m = std::max(abs_q(x.im.lo), abs_q(x.im.hi));
  return Box(x.re, Interval(-m, m));
}

// Mahler-type lower bound on the distance between distinct roots.
mpq_class separation_lower_bound(const ZPoly& p) {
  int d = degree(p);
  if (d < 2) return 1;
  mpz_class norm2 = 0;
  for (const auto& c : p) norm2 += c * c;
  mpz_class n_up;
  mpz_sqrt(n_up.get_mpz_t(), norm2.get_mpz_t());
  n_up += 1;  // >= ||p||_2
  mpz_class dpow;
  mpz_ui_pow_ui(dpow.get_mpz_t(), static_cast<unsigned long>(d),
                static_cast<unsigned long>(d + 2));
  mpz_class d_up;
  mpz_sqrt(d_up.get_mpz_t(), dpow.get_mpz_t());
  d_up += 1;  // >= d^{(d+2)/2}
  mpz_class denom = 2 * d_up;
  mpz_class npow;
  mpz_pow_ui(npow.get_mpz_t(), n_up.get_mpz_t(), static_cast<unsigned long>(d - 1));
  denom *= npow;
  mpq_class sep(3, denom);  // sqrt(3) >= 3/2
  sep.canonicalize();
  return sep;
}

// Upper-half-plane roots of a squarefree polynomial with no rational roots;
// exactly `pairs` of them exist.
std::vector<Box> isolate_complex_upper(const ZPoly& p, int pairs) {
  std::vector<Box> found;
  if (pairs == 0) return found;
  const ZPoly dp = derivative(p);
  const mpq_class c = cauchy_bound(p);
  std::deque<std::pair<Box, int>> work;  // cell, depth
  work.emplace_back(Box(Interval(-c, c), Interval(mpq_class(0), c)), 0);
  while (!work.empty()) {
    auto [cell, depth] = work.front();
    work.pop_front();
    if (depth > 512) fail(Errc::internal, "complex subdivision depth exceeded");
    if (!eval_box(p, cell).contains_zero()) continue;  // no roots here
    Box test = inflate(cell);
    if (test.im.lo > 0) {
      if (auto n = newton_contract(p, dp, test)) {
        found.push_back(*n);
        continue;
      }
    } else {
      // the inflated box reaches the axis: a unique root in the
      // conjugate-symmetric box must be real
      if (newton_contract(p, dp, symmetrize(test))) continue;
    }
    mpq_class xm = cell.re.mid(), ym = cell.im.mid();
    work.emplace_back(Box(Interval(cell.re.lo, xm), Interval(cell.im.lo, ym)), depth + 1);
    work.emplace_back(Box(Interval(xm, cell.re.hi), Interval(cell.im.lo, ym)), depth + 1);
    work.emplace_back(Box(Interval(cell.re.lo, xm), Interval(ym, cell.im.hi)), depth + 1);
    work.emplace_back(Box(Interval(xm, cell.re.hi), Interval(ym, cell.im.hi)), depth + 1);
  }
  // boxes closer than the separation bound hold the same root
  mpq_class quarter_sep = separation_lower_bound(p) / 4;
  for (auto& b : found) newton_refine(p, dp, &b, quarter_sep);
  std::vector<Box> distinct;
  for (const auto& b : found) {
    bool dup = false;
    for (const auto& keep : distinct)
      if (overlap(b, keep)) {
        dup = true;
        break;
      }
    if (!dup) distinct.push_back(b);
  }
  if (static_cast<int>(distinct.size()) != pairs)
    fail(Errc::internal, "complex isolation found " + std::to_string(distinct.size()) +
                             " pairs, expected " + std::to_string(pairs));
  return distinct;
}

// ------------------------------------------------------- factor search

// Roots of a squarefree monic polynomial with no rational roots, refinable
// in lockstep for the subset-reconstruction factor search.
struct RootSystem {
  const ZPoly* p;
  ZPoly dp;
  std::vector<RealIso> reals;
  std::vector<Box> pairs;
  int bits = 8;

  explicit RootSystem(const ZPoly& poly) : p(&poly), dp(derivative(poly)) {
    const auto chain = sturm_chain(poly);
    const mpq_class c = cauchy_bound(poly);
    int n_real = count_roots(chain, -c, c);
    int d = degree(poly);
    if ((d - n_real) % 2 != 0) fail(Errc::internal, "inconsistent real root count");
    reals = isolate_real(poly);
    if (static_cast<int>(reals.size()) != n_real)
      fail(Errc::internal, "real isolation miscount");
    pairs = isolate_complex_upper(poly, (d - n_real) / 2);
  }

  void refine(int new_bits) {
    if (new_bits <= bits) return;
    bits = new_bits;
    mpq_class w = pow2_q(-new_bits);
    for (auto& r : reals) refine_real_to(*p, &r, w);
    for (auto& b : pairs) newton_refine(*p, dp, &b, w);
  }
};

// Interval polynomial for the product of the chosen linear/quadratic factors.
std::vector<Interval> subset_poly(const RootSystem& rs, const std::vector<int>& real_idx,
                                  const std::vector<int>& pair_idx) {
  std::vector<Interval> acc = {Interval::point(1)};
  auto mul_by = [&acc](const std::vector<Interval>& f) {
    std::vector<Interval> r(acc.size() + f.size() - 1, Interval::point(0));
    for (std::size_t i = 0; i < acc.size(); ++i)
      for (std::size_t j = 0; j < f.size(); ++j) r[i + j] = r[i + j] + acc[i] * f[j];
    acc = std::move(r);
  };
  for (int i : real_idx) {
    const auto& r = rs.reals[static_cast<std::size_t>(i)];
    mul_by({-Interval(r.lo, r.hi), Interval::point(1)});
  }
  for (int j : pair_idx) {
    const auto& b = rs.pairs[static_cast<std::size_t>(j)];
    mul_by({mag2(b), mpq_class(-2) * b.re, Interval::point(1)});
  }
  return acc;
}

enum class SubsetStatus { dead, pending, pinned };

SubsetStatus subset_candidate(const RootSystem& rs, const std::vector<int>& real_idx,
                              const std::vector<int>& pair_idx, ZPoly* candidate) {
  auto coeffs = subset_poly(rs, real_idx, pair_idx);
  ZPoly cand(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    mpz_class lo = -floor_q(-coeffs[i].lo);  // ceil
    mpz_class hi = floor_q(coeffs[i].hi);
    if (lo > hi) return SubsetStatus::dead;
    if (lo != hi) return SubsetStatus::pending;
    cand[i] = lo;
  }
  *candidate = cand;
  return SubsetStatus::pinned;
}

struct SubsetKey {
  std::vector<int> real_idx, pair_idx;
  int size() const {
    return static_cast<int>(real_idx.size()) + 2 * static_cast<int>(pair_idx.size());
  }
};

std::vector<SubsetKey> enumerate_subsets(int n_real, int n_pairs) {
  std::vector<SubsetKey> out;
  int total = n_real + n_pairs;
  for (unsigned long mask = 1; mask < (1ul << total); ++mask) {
    SubsetKey k;
    for (int i = 0; i < n_real; ++i)
      if (mask & (1ul << i)) k.real_idx.push_back(i);
    for (int j = 0; j < n_pairs; ++j)
      if (mask & (1ul << (n_real + j))) k.pair_idx.push_back(j);
    out.push_back(std::move(k));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const SubsetKey& a, const SubsetKey& b) { return a.size() < b.size(); });
  return out;
}

// First (by ascending degree) integer factor over the given subsets; the
// interval test is certified, the division check makes rounding safe.
std::optional<ZPoly> find_factor(const ZPoly& p, RootSystem* rs, std::vector<SubsetKey> subsets,
                                 int max_degree) {
  std::erase_if(subsets, [&](const SubsetKey& k) { return k.size() > max_degree; });
  std::vector<bool> dead(subsets.size(), false);
  for (int bits = 16; bits <= (1 << 16); bits *= 2) {
    rs->refine(bits);
    bool pending_left = false;
    for (std::size_t s = 0; s < subsets.size(); ++s) {
      if (dead[s]) continue;
      if (pending_left) break;  // resolve strictly in degree order
      ZPoly cand;
      switch (subset_candidate(*rs, subsets[s].real_idx, subsets[s].pair_idx, &cand)) {
        case SubsetStatus::dead:
          dead[s] = true;
          break;
        case SubsetStatus::pending:
          pending_left = true;
          break;
        case SubsetStatus::pinned:
          if (divide_exact(p, cand, nullptr)) return cand;
          dead[s] = true;  // a true integer product would have divided
          break;
      }
    }
    if (!pending_left) return std::nullopt;
  }
  fail(Errc::internal, "factor search did not converge");
}

}  // namespace

// ------------------------------------------------------------ NumberField

std::shared_ptr<const NumberField> NumberField::make(const ZPoly& poly, FieldOptions opt) {
  ZPoly p = poly;
  while (!p.empty() && p.back() == 0) p.pop_back();
  int d = degree(p);
  if (d < 1 || p[static_cast<std::size_t>(d)] != 1)
    fail(Errc::not_monic, "polynomial must be monic of degree >= 1");
  if (!is_squarefree(p)) fail(Errc::not_squarefree, "gcd(p, p') is nonconstant");
  if (d > opt.factor_degree_cap)
    fail(Errc::degree_cap_exceeded,
         "degree " + std::to_string(d) + " exceeds cap " + std::to_string(opt.factor_degree_cap));

  auto field = std::shared_ptr<NumberField>(new NumberField());
  field->poly_ = p;
  field->deriv_ = derivative(p);
  field->deg_ = d;
  field->opt_ = opt;

  // companion matrix: subdiagonal of ones, last column -g_0..-g_{d-1}
  field->companion_.assign(static_cast<std::size_t>(d),
                           std::vector<mpz_class>(static_cast<std::size_t>(d), mpz_class(0)));
  for (int i = 1; i < d; ++i) field->companion_[static_cast<std::size_t>(i)][static_cast<std::size_t>(i - 1)] = 1;
  for (int i = 0; i < d; ++i)
    field->companion_[static_cast<std::size_t>(i)][static_cast<std::size_t>(d - 1)] =
        -p[static_cast<std::size_t>(i)];

  if (d == 1) {
    mpq_class root(-p[0]);
    if (root <= 1) fail(Errc::no_perron_root, "no real root > 1");
    RootState st;
    st.box = Box::real_point(root);
    st.real = true;
    st.exact = true;
    field->roots_.push_back(std::move(st));
    return field;
  }

  auto int_roots = integer_roots(p);
  if (!int_roots.empty())
    fail(Errc::reducible, "rational root " + int_roots.front().get_str());

  RootSystem rs(p);
  if (auto factor = find_factor(p, &rs, enumerate_subsets(static_cast<int>(rs.reals.size()),
                                                          static_cast<int>(rs.pairs.size())),
                                d - 1)) {
    fail(Errc::reducible, "integer factor " + poly_string(*factor));
  }

  // designate beta: the largest real root certified > 1
  int beta_idx = -1;
  for (std::size_t i = 0; i < rs.reals.size(); ++i) {
    auto& r = rs.reals[i];
    // p(1) != 0 for an irreducible polynomial of degree >= 2
    while (r.lo < 1 && r.hi > 1) bisect_real(p, &r);
    if (r.lo >= 1) beta_idx = static_cast<int>(i);  // reals are in ascending order
  }
  if (beta_idx < 0) fail(Errc::no_perron_root, "no real root > 1");

  auto push_real = [&](std::size_t i) {
    RootState st;
    st.box = Box(Interval(rs.reals[i].lo, rs.reals[i].hi), Interval::point(0));
    st.real = true;
    field->roots_.push_back(std::move(st));
  };
  push_real(static_cast<std::size_t>(beta_idx));
  for (std::size_t i = 0; i < rs.reals.size(); ++i)
    if (static_cast<int>(i) != beta_idx) push_real(i);

  // complex pairs ascending by (re, im); boxes are separation-refined
  std::sort(rs.pairs.begin(), rs.pairs.end(), [&](const Box& a, const Box& b) {
    if (a.re.hi < b.re.lo) return true;
    if (b.re.hi < a.re.lo) return false;
    return a.im.hi < b.im.lo;  // equal real parts: order by imaginary part
  });
  for (const auto& b : rs.pairs) {
    int upper = static_cast<int>(field->roots_.size());
    RootState up;
    up.box = b;
    up.mirror = upper + 1;
    field->roots_.push_back(std::move(up));
    RootState down;
    down.box = b.conj();
    down.mirror = upper;
    field->roots_.push_back(std::move(down));
  }
  if (static_cast<int>(field->roots_.size()) != d)
    fail(Errc::internal, "root bookkeeping mismatch");
  return field;
}

bool NumberField::root_is_real(int i) const {
  if (i < 1 || i > deg_) fail(Errc::bad_index, "root index " + std::to_string(i));
  std::lock_guard<std::mutex> lock(mu_);
  return roots_[static_cast<std::size_t>(i - 1)].real;
}

void NumberField::refine_locked(int idx, int prec_bits) const {
  RootState& st = roots_[static_cast<std::size_t>(idx)];
  if (st.exact) return;
  mpq_class w = pow2_q(-prec_bits);
  if (st.real) {
    RealIso r{st.box.re.lo, st.box.re.hi};
    refine_real_to(poly_, &r, w);
    st.box.re = Interval(r.lo, r.hi);
    return;
  }
  if (st.mirror < idx) {
    refine_locked(st.mirror, prec_bits);
    st.box = roots_[static_cast<std::size_t>(st.mirror)].box.conj();
    return;
  }
  newton_refine(poly_, deriv_, &st.box, w);
}

Box NumberField::root_box(int i, int prec_bits) const {
  if (i < 1 || i > deg_) fail(Errc::bad_index, "root index " + std::to_string(i));
  std::lock_guard<std::mutex> lock(mu_);
  RootState& st = roots_[static_cast<std::size_t>(i - 1)];
  if (!st.exact && st.box.width() > pow2_q(-prec_bits)) refine_locked(i - 1, prec_bits);
  return st.box;
}

Box NumberField::root_box_cached(int i) const {
  if (i < 1 || i > deg_) fail(Errc::bad_index, "root index " + std::to_string(i));
  std::lock_guard<std::mutex> lock(mu_);
  return roots_[static_cast<std::size_t>(i - 1)].box;
}

PisotResult NumberField::classify_pisot() const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (pisot_) return *pisot_;
  }
  PisotResult res{PisotResult::Kind::pisot, 0};
  bool boundary = false;
  for (int i = 2; i <= deg_; ++i) {
    int verdict = 0;  // -1 inside, +1 outside, 0 undecided
    for (int bits = 32; bits <= opt_.boundary_cap_bits; bits *= 2) {
      Interval m2 = mag2(root_box(i, bits));
      if (m2.hi < 1) {
        verdict = -1;
        break;
      }
      if (m2.lo > 1) {
        verdict = 1;
        break;
      }
    }
    if (verdict == 1) {
      res = {PisotResult::Kind::non_pisot, i};
      break;
    }
    if (verdict == 0) boundary = true;
  }
  if (res.kind == PisotResult::Kind::pisot && boundary)
    res.kind = PisotResult::Kind::boundary;
  std::lock_guard<std::mutex> lock(mu_);
  pisot_ = res;
  return res;
}

std::vector<int> NumberField::expanding_conjugates() const {
  std::vector<int> out;
  for (int i = 2; i <= deg_; ++i) {
    bool mirror_of_earlier = false;
    {
      std::lock_guard<std::mutex> lock(mu_);
      const auto& st = roots_[static_cast<std::size_t>(i - 1)];
      mirror_of_earlier = !st.real && !st.exact && st.mirror < i - 1;
    }
    if (mirror_of_earlier) continue;  // test one member per conjugate pair
    for (int bits = 32; bits <= opt_.boundary_cap_bits; bits *= 2) {
      Interval m2 = mag2(root_box(i, bits));
      if (m2.lo > 1) {
        out.push_back(i);
        break;
      }
      if (m2.hi < 1) break;
    }
  }
  return out;
}

FieldPtr make_number_field(const ZPoly& poly, FieldOptions opt) {
  return NumberField::make(poly, opt);
}

PisotResult is_pisot(const NumberField& f) { return f.classify_pisot(); }

std::optional<PerronRoot> perron_root(const ZPoly& poly, FieldOptions opt) {
  ZPoly rad = squarefree_part(poly);
  auto int_roots = integer_roots(rad);
  ZPoly core = rad;
  for (const auto& r : int_roots) core = deflate(core, r);

  mpz_class best_int(0);
  for (const auto& r : int_roots)
    if (r > 1 && r > best_int) best_int = r;

  std::optional<Interval> best_core;
  int core_deg = degree(core);
  if (core_deg >= 1) {
    if (core_deg > opt.factor_degree_cap)
      fail(Errc::degree_cap_exceeded, "squarefree part degree " + std::to_string(core_deg) +
                                          " exceeds cap " +
                                          std::to_string(opt.factor_degree_cap));
    RootSystem rs(core);
    int best_idx = -1;
    for (std::size_t i = 0; i < rs.reals.size(); ++i) {
      auto& r = rs.reals[i];
      while (r.lo < 1 && r.hi > 1) bisect_real(core, &r);
      if (r.lo >= 1) best_idx = static_cast<int>(i);
    }
    if (best_idx >= 0) {
      auto& r = rs.reals[static_cast<std::size_t>(best_idx)];
      // compare against the integer candidate
      if (best_int != 0) {
        while (r.lo < best_int && r.hi > best_int) bisect_real(core, &r);
        if (r.hi <= best_int) best_idx = -1;  // the integer root wins
      }
    }
    if (best_idx >= 0) {
      // minimal polynomial: smallest root subset containing this root whose
      // product has integer coefficients
      auto subsets = enumerate_subsets(static_cast<int>(rs.reals.size()),
                                       static_cast<int>(rs.pairs.size()));
      std::erase_if(subsets, [&](const SubsetKey& k) {
        return std::find(k.real_idx.begin(), k.real_idx.end(), best_idx) == k.real_idx.end();
      });
      auto factor = find_factor(core, &rs, std::move(subsets), core_deg);
      if (!factor) fail(Errc::internal, "no minimal polynomial found");
      const auto& r = rs.reals[static_cast<std::size_t>(best_idx)];
      return PerronRoot{*factor, Interval(r.lo, r.hi)};
    }
  }
  if (best_int != 0) {
    ZPoly lin = {-best_int, mpz_class(1)};
    return PerronRoot{lin, Interval::point(mpq_class(best_int))};
  }
  return std::nullopt;
}

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::not_monic: return "NotMonic";
    case Errc::reducible: return "Reducible";
    case Errc::not_squarefree: return "NotSquarefree";
    case Errc::no_perron_root: return "NoPerronRoot";
    case Errc::degree_cap_exceeded: return "DegreeCapExceeded";
    case Errc::field_mismatch: return "FieldMismatch";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::bad_index: return "BadIndex";
    case Errc::empty_word: return "EmptyWord";
    case Errc::no_perron_eigenvalue: return "NoPerronEigenvalue";
    case Errc::alphabet_mismatch: return "AlphabetMismatch";
    case Errc::out_of_domain: return "OutOfDomain";
    case Errc::not_pisot: return "NotPisot";
    case Errc::not_expanding: return "NotExpanding";
    case Errc::incommensurate_segment: return "IncommensurateSegment";
    case Errc::invalid_rule: return "InvalidRule";
    case Errc::not_on_edge_interior: return "NotOnEdgeInterior";
    case Errc::parse_error: return "ParseError";
    case Errc::internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace tilebeta
