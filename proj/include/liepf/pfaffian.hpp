#pragma once

#include <optional>

#include "liepf/matrix.hpp"

namespace liepf {

/// Alternating matrix: A^T == -A exactly.  Any size is accepted here; the
/// pfaffian itself rejects odd sizes.
class SkewMatrix {
 public:
  SkewMatrix() = default;
  explicit SkewMatrix(RationalMatrix entries);

  std::size_t size() const { return entries_.rows(); }
  const RationalMatrix& matrix() const { return entries_; }

 private:
  RationalMatrix entries_;
};

/// pf(A) with pf(A)^2 == det(A); pf of the empty matrix is 1.
///
/// Congruence elimination: clear row k beyond the pivot (k, k+1) with
/// unimodular row/column operations, so pf(A) = a_{k,k+1} pf(A minus k, k+1).
Rational pfaffian(const SkewMatrix& a);

/// Z/2-graded line det_2(V) = (Lambda^max V, rank V mod 2).  Only the grading
/// and the underlying rank are tracked; sections are scalars against the
/// standard bases.
struct GradedLine {
  std::size_t rank = 0;
  int parity = 0;

  GradedLine tensor(const GradedLine& other) const { return {rank + other.rank, (parity + other.parity) % 2}; }
  GradedLine dual() const { return {rank, parity}; }
  friend bool operator==(const GradedLine&, const GradedLine&) = default;
};

/// Koszul symmetry sign (-1)^{ab} for swapping [L] (x) [M].
int koszul_sign(const GradedLine& a, const GradedLine& b);

/// 0 -> E --alpha--> E* -> 0 with alpha skew.
class SkewComplex {
 public:
  explicit SkewComplex(RationalMatrix alpha);
  static SkewComplex zero(std::size_t dim) { return SkewComplex(RationalMatrix(dim, dim)); }

  std::size_t dim() const { return alpha_.rows(); }
  const RationalMatrix& alpha() const { return alpha_; }

 private:
  RationalMatrix alpha_;
};

/// The pfaffian functor on objects: det_2(E).
GradedLine pfaffian_line(const SkewComplex& complex);

/// f = (f0 : E -> F, f1 : E* -> F*) with f1 alpha_E = alpha_F f0.  Matrices are
/// dim F x dim E.  `homotopy` (F* -> F) witnesses f0 f1^T - 1 = h alpha_F and
/// f1 f0^T - 1 = alpha_F h when present.
class SkewComplexMorphism {
 public:
  SkewComplexMorphism(SkewComplex source, SkewComplex target, RationalMatrix f0, RationalMatrix f1,
                      std::optional<RationalMatrix> homotopy = std::nullopt);

  static SkewComplexMorphism identity(const SkewComplex& complex);

  const SkewComplex& source() const { return source_; }
  const SkewComplex& target() const { return target_; }
  const RationalMatrix& f0() const { return f0_; }
  const RationalMatrix& f1() const { return f1_; }
  const std::optional<RationalMatrix>& homotopy() const { return homotopy_; }

  /// Both homotopy-inverse identities, when a witness is attached.
  bool homotopy_holds() const;

 private:
  SkewComplex source_;
  SkewComplex target_;
  RationalMatrix f0_;
  RationalMatrix f1_;
  std::optional<RationalMatrix> homotopy_;
};

/// g . f; the homotopy witness composes as h_g + g0 h_f g0^T when both exist.
SkewComplexMorphism compose(const SkewComplexMorphism& g, const SkewComplexMorphism& f);

/// gamma_{gf} = g0 gamma_f g0^T + gamma_g.
RationalMatrix compose_gamma(const SkewComplexMorphism& g, const RationalMatrix& gamma_f,
                             const RationalMatrix& gamma_g);

/// True when gamma is skew and (f0^T, gamma) is a section of (f1  alpha_F).
bool is_admissible_gamma(const SkewComplexMorphism& f, const RationalMatrix& gamma);

/// gamma_f = (h^T - h) / 2 from the homotopy witness.
RationalMatrix gamma_from_homotopy(const SkewComplexMorphism& f);

/// M(f, gamma) = [[alpha_E, f0^T], [-f0, gamma]].
RationalMatrix pfaffian_block_matrix(const SkewComplexMorphism& f, const RationalMatrix& gamma);

/// Pf(f) : det_2(E) -> det_2(F) as a scalar against the standard bases.
///
/// Lambda^{m+n}(E* (+) F) is identified with Lambda^m E* (x) Lambda^n F using
/// the sign (-1)^{n(n-1)/2}, n = dim F; this is the identification under which
/// pf(M(Id, 0)) = 1 and Pf is multiplicative.
Rational pfaffian_of_morphism(const SkewComplexMorphism& f, const RationalMatrix& gamma);

/// Det(f) from the acyclic cone: det [[alpha_E, u], [-f0, v]] for any section
/// (u, v) of (f1  alpha_F), here the one produced by exact elimination.
Rational determinant_of_morphism(const SkewComplexMorphism& f);

}  // namespace liepf
