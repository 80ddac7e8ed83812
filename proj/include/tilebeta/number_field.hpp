#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "tilebeta/polynomial.hpp"

namespace tilebeta {

struct FieldOptions {
  int boundary_cap_bits = 256;  // refinement cap before reporting Boundary
  int factor_degree_cap = 8;    // cap on the factor-search degree
};

struct PisotResult {
  enum class Kind { pisot, non_pisot, boundary } kind;
  int witness = 0;  // conjugate index with certified |beta_i| > 1 (non_pisot)
};

/// Q(beta) for beta the designated real root > 1 of a monic irreducible
/// integer polynomial. Holds certified enclosures of beta and all Galois
/// conjugates; enclosures only ever shrink and refinement is internally
/// synchronized, so a constructed field is safe for concurrent reads.
///
/// Root indexing is 1-based: root 1 is beta, roots 2..d are the conjugates
/// (real ones in ascending order, then complex pairs by ascending real part,
/// upper-half member first).
class NumberField {
 public:
  static std::shared_ptr<const NumberField> make(const ZPoly& poly, FieldOptions opt = {});

  int degree() const { return deg_; }
  const ZPoly& poly() const { return poly_; }
  const FieldOptions& options() const { return opt_; }
  /// Companion matrix of poly(): subdiagonal of ones, last column -g_0..-g_{d-1}.
  const std::vector<std::vector<mpz_class>>& companion() const { return companion_; }

  bool root_is_real(int i) const;
  /// Certified enclosure of root i with width <= 2^-prec_bits.
  Box root_box(int i, int prec_bits) const;
  /// Enclosure at whatever precision is currently cached.
  Box root_box_cached(int i) const;

  /// Pisot test across all conjugates; cached after the first call.
  PisotResult classify_pisot() const;
  /// Conjugate indices i with certified |beta_i| > 1.
  std::vector<int> expanding_conjugates() const;

  bool same_field(const NumberField& other) const {
    return this == &other || poly_ == other.poly_;
  }

 private:
  NumberField() = default;
  void refine_locked(int idx, int prec_bits) const;

  ZPoly poly_;
  ZPoly deriv_;
  int deg_ = 0;
  FieldOptions opt_;
  std::vector<std::vector<mpz_class>> companion_;

  struct RootState {
    Box box;
    bool real = false;
    bool exact = false;    // rational root, box is a point (degree 1 only)
    int mirror = 0;        // for complex roots: index of the conjugate partner
  };
  mutable std::mutex mu_;
  mutable std::vector<RootState> roots_;
  mutable std::optional<PisotResult> pisot_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

/// Construct Q(beta) from a monic integer polynomial (constant term first).
/// Errors: not_monic, not_squarefree, reducible, no_perron_root,
/// degree_cap_exceeded.
FieldPtr make_number_field(const ZPoly& poly, FieldOptions opt = {});

PisotResult is_pisot(const NumberField& f);

/// Largest real root > 1 of a monic integer polynomial (not necessarily
/// irreducible) together with its minimal polynomial, found by the
/// root-subset factor reconstruction. nullopt when no real root exceeds 1.
/// Errors: degree_cap_exceeded (squarefree part above the factor cap).
struct PerronRoot {
  ZPoly minimal_poly;
  Interval enclosure;
};
std::optional<PerronRoot> perron_root(const ZPoly& poly, FieldOptions opt = {});

}  // namespace tilebeta
