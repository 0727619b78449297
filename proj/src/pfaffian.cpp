#include "liepf/pfaffian.hpp"

#include <utility>

namespace liepf {

SkewMatrix::SkewMatrix(RationalMatrix entries) : entries_(std::move(entries)) {
  if (!entries_.is_square()) throw DomainError("skew matrix must be square");
  if (!entries_.is_skew()) throw DomainError("matrix is not skew-symmetric");
}

Rational pfaffian(const SkewMatrix& input) {
  const std::size_t n = input.size();
  if (n % 2 != 0) throw DomainError("pfaffian of an odd-sized matrix (" + std::to_string(n) + ")");
  RationalMatrix a = input.matrix();
  Rational result = 1;
  for (std::size_t k = 0; k + 1 < n; k += 2) {
    std::size_t pivot = k + 1;
    while (pivot < n && a(k, pivot) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k + 1) {
      // Simultaneous row/column swap: congruence by a transposition, det = -1.
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k + 1, c), a(pivot, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(a(r, k + 1), a(r, pivot));
      result = -result;
    }
    const Rational p = a(k, k + 1);
    result *= p;
    for (std::size_t i = k + 2; i < n; ++i) {
      if (a(k, i) == 0) continue;
      const Rational factor = a(k, i) / p;
      // col_i -= factor col_{k+1}; row_i -= factor row_{k+1}.
      for (std::size_t r = 0; r < n; ++r) a(r, i) -= factor * a(r, k + 1);
      for (std::size_t c = 0; c < n; ++c) a(i, c) -= factor * a(k + 1, c);
    }
  }
  return result;
}

int koszul_sign(const GradedLine& a, const GradedLine& b) { return (a.parity * b.parity) % 2 == 0 ? 1 : -1; }

SkewComplex::SkewComplex(RationalMatrix alpha) : alpha_(std::move(alpha)) {
  if (!alpha_.is_square() || !alpha_.is_skew()) throw DomainError("complex differential must be skew-symmetric");
}

GradedLine pfaffian_line(const SkewComplex& complex) {
  return {complex.dim(), static_cast<int>(complex.dim() % 2)};
}

SkewComplexMorphism::SkewComplexMorphism(SkewComplex source, SkewComplex target, RationalMatrix f0, RationalMatrix f1,
                                         std::optional<RationalMatrix> homotopy)
    : source_(std::move(source)),
      target_(std::move(target)),
      f0_(std::move(f0)),
      f1_(std::move(f1)),
      homotopy_(std::move(homotopy)) {
  const std::size_t m = source_.dim(), n = target_.dim();
  if (f0_.rows() != n || f0_.cols() != m || f1_.rows() != n || f1_.cols() != m) {
    throw DomainError("morphism components must be " + std::to_string(n) + "x" + std::to_string(m));
  }
  if (homotopy_ && (homotopy_->rows() != n || homotopy_->cols() != n)) {
    throw DomainError("homotopy witness must be " + std::to_string(n) + "x" + std::to_string(n));
  }
  if (f1_ * source_.alpha() != target_.alpha() * f0_) {
    throw DomainError("not a morphism of complexes: f1 alpha_E != alpha_F f0");
  }
}

SkewComplexMorphism SkewComplexMorphism::identity(const SkewComplex& complex) {
  const auto n = complex.dim();
  return SkewComplexMorphism(complex, complex, RationalMatrix::identity(n), RationalMatrix::identity(n),
                             RationalMatrix(n, n));
}

bool SkewComplexMorphism::homotopy_holds() const {
  if (!homotopy_) return false;
  const auto one = RationalMatrix::identity(target_.dim());
  const auto& h = *homotopy_;
  return f0_ * f1_.transpose() - one == h * target_.alpha() && f1_ * f0_.transpose() - one == target_.alpha() * h;
}

SkewComplexMorphism compose(const SkewComplexMorphism& g, const SkewComplexMorphism& f) {
  if (!(f.target().alpha() == g.source().alpha())) throw DomainError("morphisms are not composable");
  std::optional<RationalMatrix> h;
  if (f.homotopy() && g.homotopy()) h = *g.homotopy() + g.f0() * *f.homotopy() * g.f0().transpose();
  return SkewComplexMorphism(f.source(), g.target(), g.f0() * f.f0(), g.f1() * f.f1(), std::move(h));
}

RationalMatrix compose_gamma(const SkewComplexMorphism& g, const RationalMatrix& gamma_f,
                             const RationalMatrix& gamma_g) {
  return g.f0() * gamma_f * g.f0().transpose() + gamma_g;
}

bool is_admissible_gamma(const SkewComplexMorphism& f, const RationalMatrix& gamma) {
  const auto n = f.target().dim();
  if (gamma.rows() != n || gamma.cols() != n || !gamma.is_skew()) return false;
  return f.f1() * f.f0().transpose() + f.target().alpha() * gamma == RationalMatrix::identity(n);
}

RationalMatrix gamma_from_homotopy(const SkewComplexMorphism& f) {
  if (!f.homotopy()) throw DomainError("morphism carries no homotopy witness");
  const auto& h = *f.homotopy();
  RationalMatrix gamma = (h.transpose() - h) * Rational(1, 2);
  if (!is_admissible_gamma(f, gamma)) {
    throw DomainError("(f0^T, gamma) is not a section of (f1 alpha_F): the homotopy witness is invalid");
  }
  return gamma;
}

RationalMatrix pfaffian_block_matrix(const SkewComplexMorphism& f, const RationalMatrix& gamma) {
  return RationalMatrix::block(f.source().alpha(), f.f0().transpose(), -f.f0(), gamma);
}

namespace {

void require_parity(const SkewComplexMorphism& f) {
  if ((f.source().dim() + f.target().dim()) % 2 != 0) {
    throw DomainError("rank(E) and rank(F) differ mod 2; det_2(E) and det_2(F) are not comparable");
  }
}

}  // namespace

Rational pfaffian_of_morphism(const SkewComplexMorphism& f, const RationalMatrix& gamma) {
  require_parity(f);
  if (!is_admissible_gamma(f, gamma)) throw DomainError("gamma is not skew or fails the section identity");
  const auto n = f.target().dim();
  Rational value = pfaffian(SkewMatrix(pfaffian_block_matrix(f, gamma)));
  if ((n * (n - 1) / 2) % 2 != 0) value = -value;  // n = 0 gives 0
  return value;
}

Rational determinant_of_morphism(const SkewComplexMorphism& f) {
  const auto n = f.target().dim();
  RationalMatrix boundary = RationalMatrix::hstack(f.f1(), f.target().alpha());
  auto section = solve(boundary, RationalMatrix::identity(n));
  if (!section) throw DomainError("cone is not acyclic: (f1 alpha_F) is not surjective");
  const auto m = f.source().dim();
  RationalMatrix u = section->slice(0, 0, m, n);
  RationalMatrix v = section->slice(m, 0, n, n);
  return determinant(RationalMatrix::block(f.source().alpha(), u, -f.f0(), v));
}

}  // namespace liepf
