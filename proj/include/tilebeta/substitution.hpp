#pragma once

#include <string>
#include <vector>

#include "tilebeta/algebraic.hpp"

namespace tilebeta {

/// Symbolic substitution together with its structure matrix and Perron data.
/// heights solve M h = beta h exactly over Q(beta), normalized so the last
/// symbol has height 1 (or the first nonzero coordinate if that one is 0).
struct Substitution1D {
  std::vector<std::string> alphabet;
  std::vector<std::vector<int>> rule;           // words as symbol indices
  std::vector<std::vector<mpz_class>> matrix;   // M[i][j] = #occurrences of j in rule[i]
  FieldPtr field;
  std::vector<AlgebraicNumber> heights;

  int symbols() const { return static_cast<int>(alphabet.size()); }
  int index_of(const std::string& name) const;  // -1 when absent
  AlgebraicNumber expansion() const { return AlgebraicNumber::beta(field); }
  /// Sum of all heights (the length of the concatenated prototile patch).
  AlgebraicNumber total_height() const;
};

/// Build from named rule words. Errors: empty_word, alphabet_mismatch,
/// no_perron_eigenvalue, degree_cap_exceeded.
Substitution1D build_substitution(const std::vector<std::string>& alphabet,
                                  const std::vector<std::vector<std::string>>& words,
                                  FieldOptions opt = {});

/// Rule with every word reversed; shares alphabet, matrix and Perron data.
Substitution1D reverse_words(const Substitution1D& s);

enum class MatrixClass { primitive, irreducible_not_primitive, reducible };
MatrixClass classify_matrix(const Substitution1D& s);
const char* matrix_class_name(MatrixClass c);

/// Tiling patch: tiles laid end to end starting at `left`.
struct Patch1D {
  AlgebraicNumber left;
  std::vector<int> word;
  std::vector<std::string> alphabet;
};

Patch1D make_patch(const Substitution1D& s, const AlgebraicNumber& left,
                   const std::vector<std::string>& word);

/// Left endpoints of the tiles, and the tile symbols.
std::vector<AlgebraicNumber> tile_positions(const Substitution1D& s, const Patch1D& p);
/// Right endpoint of the support interval [left, right).
AlgebraicNumber patch_right(const Substitution1D& s, const Patch1D& p);

/// S(P_j + t) = patch(beta t, sigma(j)), extended over the patch word.
Patch1D substitute_patch(const Substitution1D& s, const Patch1D& p);

}  // namespace tilebeta
