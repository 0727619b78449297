#include "liepf/verlinde.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <numeric>
#include <unordered_map>

namespace liepf {

// ---- lattice indices -----------------------------------------------------

std::vector<std::int64_t> smith_invariants(std::vector<std::vector<std::int64_t>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<std::int64_t> diagonal;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Smallest non-zero entry of the trailing block becomes the pivot.
      std::size_t pr = rows, pc = cols;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c)
          if (a[r][c] != 0 && (pr == rows || std::llabs(a[r][c]) < std::llabs(a[pr][pc]))) {
            pr = r;
            pc = c;
          }
      if (pr == rows) return diagonal;
      std::swap(a[t], a[pr]);
      for (auto& row : a) std::swap(row[t], row[pc]);

      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        const std::int64_t q = a[r][t] / a[t][t];
        for (std::size_t c = t; c < cols; ++c) a[r][c] -= q * a[t][c];
        if (a[r][t] != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        const std::int64_t q = a[t][c] / a[t][t];
        for (std::size_t r = t; r < rows; ++r) a[r][c] -= q * a[r][t];
        if (a[t][c] != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold an offending row into row t and go again.
      bool divides = true;
      for (std::size_t r = t + 1; r < rows && divides; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (a[r][c] % a[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) a[t][k] += a[r][k];
            divides = false;
            break;
          }
      if (divides) break;
    }
    diagonal.push_back(std::llabs(a[t][t]));
  }
  return diagonal;
}

LatticeIndices lattice_indices(const SimpleLieAlgebra& alg) {
  LatticeIndices out;
  out.p_over_q = alg.cartan_determinant();
  std::vector<std::vector<std::int64_t>> long_roots;
  for (std::size_t r = 0; r < alg.positive_roots_simple().size(); ++r)
    if (alg.is_long_root(r)) long_roots.push_back(alg.positive_roots_simple()[r]);
  auto invariants = smith_invariants(long_roots);
  if (invariants.size() != static_cast<std::size_t>(alg.rank())) {
    throw InternalError("long roots do not span a full-rank lattice in " + alg.designator());
  }
  out.q_over_qlong = 1;
  for (auto d : invariants) out.q_over_qlong *= d;
  return out;
}

// ---- Weyl group ----------------------------------------------------------

WeylGroup::WeylGroup(const SimpleLieAlgebra& alg, std::size_t cap) : rank_(alg.rank()) {
  if (weyl_group_order(alg) > cap) {
    throw CapExceeded("|W(" + alg.designator() + ")| = " + to_string(weyl_group_order(alg)) +
                      " exceeds the Weyl cap of " + std::to_string(cap));
  }
  std::vector<Weight> identity;
  for (int i = 1; i <= rank_; ++i) identity.push_back(Weight::fundamental(rank_, i));
  // Elements are told apart by w(rho), which is regular.
  auto key = [&](const std::vector<Weight>& columns) {
    Weight sum(rank_);
    for (const auto& c : columns) sum += c;
    return sum;
  };
  std::unordered_map<Weight, bool, WeightHash> seen{{key(identity), true}};
  images_.push_back(identity);
  signs_.push_back(1);
  for (std::size_t head = 0; head < images_.size(); ++head) {
    for (int j = 1; j <= rank_; ++j) {
      std::vector<Weight> next;
      for (const auto& column : images_[head]) next.push_back(reflect(alg, column, j));
      if (seen.emplace(key(next), true).second) {
        images_.push_back(std::move(next));
        signs_.push_back(-signs_[head]);
      }
    }
  }
}

Weight WeylGroup::apply(std::size_t element, const Weight& x) const {
  Weight out(rank_);
  const auto& columns = images_[element];
  for (int i = 0; i < rank_; ++i) {
    if (x[i] == 0) continue;
    for (int k = 0; k < rank_; ++k) out[k] += x[i] * columns[i][k];
  }
  return out;
}

// ---- characters ----------------------------------------------------------

namespace {

ComplexReal unit_root(const Rational& turns, long bits) {
  // exp(2 pi i * turns), reducing turns mod 1 exactly first.
  BigInt num = numerator(turns), den = denominator(turns);
  num %= den;
  if (num < 0) num += den;
  Real angle = Real::pi(bits) * Real(2, bits) * Real(num, bits) / Real(den, bits);
  return ComplexReal(angle.cos(), angle.sin());
}

Rational pair_rational(const SimpleLieAlgebra& alg, const Weight& x, const std::vector<Rational>& xi) {
  Rational total = 0;
  const auto& g = alg.weight_form();
  for (int i = 0; i < alg.rank(); ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < alg.rank(); ++j) total += g[i][j] * x[i] * xi[j];
  }
  return total;
}

ComplexReal alternating_sum(const SimpleLieAlgebra& alg, const WeylGroup& weyl, const Weight& shifted,
                            const std::vector<Rational>& xi, long bits) {
  ComplexReal total(bits);
  for (std::size_t w = 0; w < weyl.size(); ++w) {
    ComplexReal term = unit_root(pair_rational(alg, weyl.apply(w, shifted), xi), bits);
    if (weyl.sign(w) > 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

Real singular_threshold(long bits) {
  Real two(2, bits);
  return two.pow(-bits / 2);
}

}  // namespace

ComplexReal character_value(const SimpleLieAlgebra& alg, const Weight& lambda, const std::vector<Rational>& xi,
                            long precision_bits, std::size_t weyl_cap) {
  alg.require_rank(lambda);
  if (!lambda.is_dominant()) throw DomainError("character of a non-dominant weight " + lambda.to_string());
  if (xi.size() != static_cast<std::size_t>(alg.rank())) throw DomainError("xi has the wrong length");
  WeylGroup weyl(alg, weyl_cap);
  ComplexReal denominator = alternating_sum(alg, weyl, alg.rho(), xi, precision_bits);
  if (denominator.norm_squared() < singular_threshold(precision_bits)) {
    throw DomainError("xi is singular: the Weyl denominator vanishes");
  }
  ComplexReal value = alternating_sum(alg, weyl, lambda + alg.rho(), xi, precision_bits);
  value /= denominator;
  return value;
}

// ---- Verlinde ------------------------------------------------------------

namespace {

struct VerlindeKernel {
  const SimpleLieAlgebra& alg;
  const std::vector<Weight>& alcove_points;
  std::int64_t modulus;  // form_scale * (level + h)
  std::int64_t genus;
  long bits;
  std::vector<ComplexReal> roots_of_unity;  // exp(2 pi i j / modulus)
  std::vector<Real> sine_squares;           // (2 sin(pi j / modulus))^2
  // Per label: (w(lambda + rho), sign) for every Weyl element.
  std::vector<std::vector<std::pair<Weight, int>>> label_orbits;
  std::vector<std::pair<Weight, int>> rho_orbit;

  ComplexReal alternating(const std::vector<std::pair<Weight, int>>& orbit, const Weight& shifted_mu) const {
    ComplexReal total(bits);
    for (const auto& [w, sign] : orbit) {
      std::int64_t j = alg.inner_scaled(w, shifted_mu) % modulus;
      if (j < 0) j += modulus;
      if (sign > 0)
        total += roots_of_unity[j];
      else
        total -= roots_of_unity[j];
    }
    return total;
  }

  ComplexReal term(std::size_t index) const {
    const Weight shifted = alcove_points[index] + alg.rho();
    ComplexReal value(Real(1, bits), Real(bits));
    if (!label_orbits.empty()) {
      ComplexReal denominator = alternating(rho_orbit, shifted);
      for (const auto& orbit : label_orbits) {
        ComplexReal trace = alternating(orbit, shifted);
        trace /= denominator;
        value *= trace;
      }
    }
    Real sines(1, bits);
    for (std::size_t r = 0; r < alg.positive_roots().size(); ++r) {
      std::int64_t j = alg.root_pairing_scaled(r, shifted) % modulus;
      sines *= sine_squares[j];
    }
    Real weight = sines.pow(1 - genus);
    value.re *= weight;
    value.im *= weight;
    return value;
  }
};

std::vector<ComplexReal> verlinde_terms(const VerlindeKernel& kernel, Execution execution) {
  const std::size_t n = kernel.alcove_points.size();
  std::vector<ComplexReal> terms(n, ComplexReal(kernel.bits));
  if (execution == Execution::serial) {
    for (std::size_t i = 0; i < n; ++i) terms[i] = kernel.term(i);
    return terms;
  }
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < n; ++i) {
    try {
      terms[i] = kernel.term(i);
    } catch (...) {
#pragma omp critical(liepf_verlinde_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return terms;
}

}  // namespace

VerlindeResult verlinde_dimension(const VerlindeQuery& query, const VerlindeOptions& options) {
  const auto& alg = query.algebra;
  if (query.level < 0) throw DomainError("level must be non-negative");
  if (query.genus < 0) throw DomainError("genus must be non-negative");
  if (query.genus > options.max_genus) {
    throw DomainError("genus " + std::to_string(query.genus) + " exceeds the guard of " +
                      std::to_string(options.max_genus));
  }
  if (query.precision_bits < 64) throw DomainError("precision must be at least 64 bits");
  bool all_trivial = true;
  for (const auto& label : query.labels) {
    alg.require_rank(label);
    if (!label.is_dominant() || alg.theta_coroot_pairing(label) > query.level) {
      throw DomainError("label " + label.to_string() + " is not in the level-" + std::to_string(query.level) +
                        " alcove of " + alg.designator());
    }
    all_trivial = all_trivial && label.is_zero();
  }

  const auto points = alcove(alg, query.level);
  if (points.size() > options.limits.weight_system_cap) {
    throw CapExceeded("level-" + std::to_string(query.level) + " alcove exceeds the weight cap");
  }

  VerlindeResult result;
  result.alcove_size = points.size();
  if (options.allow_fast_path && query.genus == 1 && all_trivial) {
    result.dimension = points.size();
    result.used_fast_path = true;
    return result;
  }

  const long bits = query.precision_bits;
  const std::int64_t shifted_level = query.level + alg.dual_coxeter();
  VerlindeKernel kernel{alg, points, alg.form_scale() * shifted_level, query.genus, bits, {}, {}, {}, {}};

  const Real two_pi = Real::pi(bits) * Real(2, bits);
  kernel.roots_of_unity.reserve(kernel.modulus);
  kernel.sine_squares.reserve(kernel.modulus);
  for (std::int64_t j = 0; j < kernel.modulus; ++j) {
    Real angle = two_pi * Real::ratio(j, kernel.modulus, bits);
    kernel.roots_of_unity.emplace_back(angle.cos(), angle.sin());
    Real twice_sine = Real(2, bits) * (Real::pi(bits) * Real::ratio(j, kernel.modulus, bits)).sin();
    kernel.sine_squares.push_back(twice_sine * twice_sine);
  }

  if (!query.labels.empty()) {
    WeylGroup weyl(alg, options.limits.weyl_cap);
    auto orbit_of = [&](const Weight& shifted) {
      std::vector<std::pair<Weight, int>> orbit;
      for (std::size_t w = 0; w < weyl.size(); ++w) orbit.emplace_back(weyl.apply(w, shifted), weyl.sign(w));
      return orbit;
    };
    kernel.rho_orbit = orbit_of(alg.rho());
    for (const auto& label : query.labels) kernel.label_orbits.push_back(orbit_of(label + alg.rho()));
  }

  auto terms = verlinde_terms(kernel, options.execution);
  ComplexReal sum(bits);
  for (const auto& t : terms) sum += t;

  const auto indices = lattice_indices(alg);
  BigInt torus_order = indices.p_over_q * indices.q_over_qlong;
  for (int i = 0; i < alg.rank(); ++i) torus_order *= shifted_level;
  Real prefactor = Real(torus_order, bits).pow(query.genus - 1);
  Real re = sum.re * prefactor;
  Real im = sum.im * prefactor;

  BigInt rounded = re.round_to_integer();
  Real residual_re = (re - Real(rounded, bits)).abs();
  Real residual = residual_re > im.abs() ? residual_re : im.abs();
  result.integrality_residual = residual.to_double();
  if (!(result.integrality_residual <= options.integrality_tolerance)) {
    throw IntegralityError("Verlinde sum " + re.to_string() + " is not within " +
                           std::to_string(options.integrality_tolerance) + " of an integer at " +
                           std::to_string(bits) + " bits; increase the precision");
  }
  if (rounded < 0) throw InternalError("Verlinde sum rounded to a negative dimension");
  result.dimension = rounded;
  return result;
}

}  // namespace liepf
