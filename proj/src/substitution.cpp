#include "tilebeta/substitution.hpp"

#include <algorithm>
#include <set>

#include "tilebeta/error.hpp"

namespace tilebeta {

int Substitution1D::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < alphabet.size(); ++i)
    if (alphabet[i] == name) return static_cast<int>(i);
  return -1;
}

AlgebraicNumber Substitution1D::total_height() const {
  AlgebraicNumber sum(field);
  for (const auto& h : heights) sum = sum + h;
  return sum;
}

namespace {

// Nullspace of (M - beta I) over Q(beta); returns a basis via Gaussian
// elimination with exact pivoting.
std::vector<std::vector<AlgebraicNumber>> eigen_nullspace(
    const std::vector<std::vector<mpz_class>>& m, const FieldPtr& field) {
  const int n = static_cast<int>(m.size());
  const AlgebraicNumber beta = AlgebraicNumber::beta(field);
  std::vector<std::vector<AlgebraicNumber>> a(
      static_cast<std::size_t>(n), std::vector<AlgebraicNumber>(static_cast<std::size_t>(n),
                                                                AlgebraicNumber(field)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          AlgebraicNumber(field, mpq_class(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
      if (i == j)
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] - beta;
    }

  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int p = -1;
    for (int r = row; r < n; ++r)
      if (!a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) {
        p = r;
        break;
      }
    if (p < 0) continue;
    std::swap(a[static_cast<std::size_t>(p)], a[static_cast<std::size_t>(row)]);
    AlgebraicNumber inv = a[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)].inverse();
    for (int c = 0; c < n; ++c)
      a[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)] =
          inv * a[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)];
    for (int r = 0; r < n; ++r) {
      if (r == row) continue;
      AlgebraicNumber factor = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
      if (factor.is_zero()) continue;
      for (int c = 0; c < n; ++c)
        a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
            a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -
            factor * a[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)];
    }
    pivot_col.push_back(col);
    ++row;
  }

  std::vector<std::vector<AlgebraicNumber>> basis;
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
  for (int free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[static_cast<std::size_t>(free_col)]) continue;
    std::vector<AlgebraicNumber> v(static_cast<std::size_t>(n), AlgebraicNumber(field));
    v[static_cast<std::size_t>(free_col)] = AlgebraicNumber(field, mpq_class(1));
    for (std::size_t r = 0; r < pivot_col.size(); ++r)
      v[static_cast<std::size_t>(pivot_col[r])] =
          -a[r][static_cast<std::size_t>(free_col)];
    basis.push_back(std::move(v));
  }
  return basis;
}

bool all_positive(const std::vector<AlgebraicNumber>& v) {
  return std::all_of(v.begin(), v.end(), [](const AlgebraicNumber& x) { return sign(x) > 0; });
}

}  // namespace

Substitution1D build_substitution(const std::vector<std::string>& alphabet,
                                  const std::vector<std::vector<std::string>>& words,
                                  FieldOptions opt) {
  const int m = static_cast<int>(alphabet.size());
  if (m == 0) fail(Errc::alphabet_mismatch, "empty alphabet");
  {
    std::set<std::string> names(alphabet.begin(), alphabet.end());
    if (static_cast<int>(names.size()) != m)
      fail(Errc::alphabet_mismatch, "duplicate alphabet symbols");
  }
  if (static_cast<int>(words.size()) != m)
    fail(Errc::alphabet_mismatch, "need one rule word per symbol");

  Substitution1D s;
  s.alphabet = alphabet;
  s.rule.resize(static_cast<std::size_t>(m));
  s.matrix.assign(static_cast<std::size_t>(m),
                  std::vector<mpz_class>(static_cast<std::size_t>(m), mpz_class(0)));
  for (int i = 0; i < m; ++i) {
    if (words[static_cast<std::size_t>(i)].empty())
      fail(Errc::empty_word, "rule for '" + alphabet[static_cast<std::size_t>(i)] + "' is empty");
    for (const auto& sym : words[static_cast<std::size_t>(i)]) {
      int j = s.index_of(sym);
      if (j < 0)
        fail(Errc::alphabet_mismatch,
             "symbol '" + sym + "' in rule for '" + alphabet[static_cast<std::size_t>(i)] + "'");
      s.rule[static_cast<std::size_t>(i)].push_back(j);
      s.matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += 1;
    }
  }

  auto pr = perron_root(char_poly(s.matrix), opt);
  if (!pr) fail(Errc::no_perron_eigenvalue, "no real eigenvalue > 1");
  s.field = make_number_field(pr->minimal_poly, opt);

  auto basis = eigen_nullspace(s.matrix, s.field);
  if (basis.empty()) fail(Errc::internal, "empty eigenspace for the Perron root");

  std::vector<AlgebraicNumber> h;
  bool got = false;
  std::vector<std::vector<AlgebraicNumber>> candidates = basis;
  {
    // also try the basis sum and all sign flips of single vectors
    std::vector<AlgebraicNumber> sum(static_cast<std::size_t>(m), AlgebraicNumber(s.field));
    for (const auto& v : basis)
      for (int i = 0; i < m; ++i) sum[static_cast<std::size_t>(i)] = sum[static_cast<std::size_t>(i)] + v[static_cast<std::size_t>(i)];
    candidates.push_back(std::move(sum));
  }
  for (const auto& v : candidates) {
    if (all_positive(v)) {
      h = v;
      got = true;
      break;
    }
    std::vector<AlgebraicNumber> neg;
    neg.reserve(v.size());
    for (const auto& x : v) neg.push_back(-x);
    if (all_positive(neg)) {
      h = neg;
      got = true;
      break;
    }
  }
  if (!got)
    fail(Errc::no_perron_eigenvalue, "largest eigenvalue > 1 has no positive eigenvector");

  // normalize: last symbol height 1, falling back to the first nonzero one
  int norm_idx = m - 1;
  if (h[static_cast<std::size_t>(norm_idx)].is_zero()) {
    norm_idx = 0;
    while (h[static_cast<std::size_t>(norm_idx)].is_zero()) ++norm_idx;
  }
  AlgebraicNumber inv = h[static_cast<std::size_t>(norm_idx)].inverse();
  for (auto& x : h) x = inv * x;
  s.heights = std::move(h);

  // M h = beta h must hold exactly
  const AlgebraicNumber beta = AlgebraicNumber::beta(s.field);
  for (int i = 0; i < m; ++i) {
    AlgebraicNumber lhs(s.field);
    for (int j = 0; j < m; ++j)
      lhs = lhs + mpq_class(s.matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) *
                      s.heights[static_cast<std::size_t>(j)];
    if (!(lhs == beta * s.heights[static_cast<std::size_t>(i)]))
      fail(Errc::internal, "eigenvector equation violated");
  }
  return s;
}

Substitution1D reverse_words(const Substitution1D& s) {
  Substitution1D r = s;
  for (auto& w : r.rule) std::reverse(w.begin(), w.end());
  return r;
}

MatrixClass classify_matrix(const Substitution1D& s) {
  const int m = s.symbols();
  std::vector<std::vector<bool>> adj(static_cast<std::size_t>(m),
                                     std::vector<bool>(static_cast<std::size_t>(m), false));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          s.matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] > 0;

  auto reaches = [&](int from) {
    std::vector<bool> seen(static_cast<std::size_t>(m), false);
    std::vector<int> stack = {from};
    seen[static_cast<std::size_t>(from)] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w = 0; w < m; ++w)
        if (adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] &&
            !seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          stack.push_back(w);
        }
    }
    return seen;
  };
  for (int i = 0; i < m; ++i) {
    auto seen = reaches(i);
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
      return MatrixClass::reducible;
  }

  // Wielandt bound: M primitive iff M^n > 0 for some n <= (m-1)^2 + 1
  const int bound = (m - 1) * (m - 1) + 1;
  std::vector<std::vector<bool>> power = adj;
  for (int n = 1; n <= bound; ++n) {
    bool all = true;
    for (int i = 0; i < m && all; ++i)
      for (int j = 0; j < m && all; ++j)
        if (!power[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) all = false;
    if (all) return MatrixClass::primitive;
    std::vector<std::vector<bool>> next(static_cast<std::size_t>(m),
                                        std::vector<bool>(static_cast<std::size_t>(m), false));
    for (int i = 0; i < m; ++i)
      for (int k = 0; k < m; ++k)
        if (power[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)])
          for (int j = 0; j < m; ++j)
            if (adj[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)])
              next[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
    power = std::move(next);
  }
  return MatrixClass::irreducible_not_primitive;
}

const char* matrix_class_name(MatrixClass c) {
  switch (c) {
    case MatrixClass::primitive: return "primitive";
    case MatrixClass::irreducible_not_primitive: return "irreducible_not_primitive";
    case MatrixClass::reducible: return "reducible";
  }
  return "unknown";
}

Patch1D make_patch(const Substitution1D& s, const AlgebraicNumber& left,
                   const std::vector<std::string>& word) {
  Patch1D p;
  p.left = left;
  p.alphabet = s.alphabet;
  for (const auto& sym : word) {
    int j = s.index_of(sym);
    if (j < 0) fail(Errc::alphabet_mismatch, "symbol '" + sym + "' not in alphabet");
    p.word.push_back(j);
  }
  if (p.word.empty()) fail(Errc::empty_word, "empty patch word");
  return p;
}

std::vector<AlgebraicNumber> tile_positions(const Substitution1D& s, const Patch1D& p) {
  std::vector<AlgebraicNumber> pos;
  AlgebraicNumber cur = p.left;
  for (int j : p.word) {
    pos.push_back(cur);
    cur = cur + s.heights[static_cast<std::size_t>(j)];
  }
  return pos;
}

AlgebraicNumber patch_right(const Substitution1D& s, const Patch1D& p) {
  AlgebraicNumber cur = p.left;
  for (int j : p.word) cur = cur + s.heights[static_cast<std::size_t>(j)];
  return cur;
}

Patch1D substitute_patch(const Substitution1D& s, const Patch1D& p) {
  if (p.alphabet != s.alphabet)
    fail(Errc::alphabet_mismatch, "patch alphabet does not match the substitution");
  Patch1D out;
  out.alphabet = s.alphabet;
  out.left = AlgebraicNumber::beta(s.field) * p.left;
  for (int j : p.word)
    for (int k : s.rule[static_cast<std::size_t>(j)]) out.word.push_back(k);
  return out;
}

}  // namespace tilebeta
