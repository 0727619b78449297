#include "liepf/dynkin.hpp"

#include <algorithm>
#include <exception>

namespace liepf {

std::string to_string(IndexMethod method) {
  return method == IndexMethod::character_sum ? "character_sum" : "casimir";
}

namespace {

std::int64_t orbit_theta_square_sum(const SimpleLieAlgebra& alg, const Weight& dominant, std::size_t cap) {
  std::int64_t sum = 0;
  for_each_in_orbit(alg, dominant, cap, [&](const Weight& w) {
    const std::int64_t p = alg.theta_coroot_pairing(w);
    sum += p * p;
  });
  return sum;
}

}  // namespace

BigInt theta_square_sum(const FormalCharacter& character, Execution execution, std::size_t orbit_cap) {
  const auto& alg = character.algebra();
  std::vector<const std::pair<const Weight, BigInt>*> items;
  for (const auto& entry : character.dominant_mults()) items.push_back(&entry);
  std::vector<BigInt> partial(items.size());

  if (execution == Execution::serial) {
    for (std::size_t i = 0; i < items.size(); ++i)
      partial[i] = items[i]->second * orbit_theta_square_sum(alg, items[i]->first, orbit_cap);
  } else {
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < items.size(); ++i) {
      try {
        partial[i] = items[i]->second * orbit_theta_square_sum(alg, items[i]->first, orbit_cap);
      } catch (...) {
#pragma omp critical(liepf_theta_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  }

  // Fixed-order reduction keeps the two paths identical.
  BigInt total = 0;
  for (const auto& p : partial) total += p;
  return total;
}

BigInt index_of_character(const FormalCharacter& character, Execution execution, std::size_t orbit_cap) {
  BigInt twice = theta_square_sum(character, execution, orbit_cap);
  if (twice % 2 != 0) throw InternalError("odd theta square sum: Dynkin index would not be integral");
  return twice / 2;
}

BigInt index_character_sum(const SimpleLieAlgebra& alg, const Weight& lambda, const Limits& limits,
                           Execution execution) {
  return index_of_character(dominant_character(alg, lambda, limits), execution, limits.orbit_cap);
}

BigInt index_casimir(const SimpleLieAlgebra& alg, const Weight& lambda) {
  alg.require_rank(lambda);
  if (!lambda.is_dominant()) throw DomainError("highest weight must be dominant, got " + lambda.to_string());
  const Weight shifted = lambda + 2 * alg.rho();
  Rational casimir = inner(alg, lambda, shifted);
  Rational value = Rational(weyl_dimension(alg, lambda)) * casimir / alg.dim_g();
  return to_integer(value, "Dynkin index of " + lambda.to_string() + " in " + alg.designator());
}

MinimalIndex minimal_index(const SimpleLieAlgebra& alg) {
  MinimalIndex out;
  for (int node = 1; node <= alg.rank(); ++node)
    out.fundamental_indices.push_back(index_casimir(alg, Weight::fundamental(alg.rank(), node)));
  out.d_g = *std::min_element(out.fundamental_indices.begin(), out.fundamental_indices.end());
  for (int node = 1; node <= alg.rank(); ++node)
    if (out.fundamental_indices[node - 1] == out.d_g) out.witnesses.push_back(Weight::fundamental(alg.rank(), node));
  return out;
}

IndexReport index_report(const SimpleLieAlgebra& alg, const Weight& lambda, IndexMethod method,
                         const Limits& limits) {
  IndexReport report;
  report.algebra = alg.designator();
  report.highest_weight = lambda;
  report.method = method;
  report.dimension = weyl_dimension(alg, lambda);
  report.index = method == IndexMethod::casimir ? index_casimir(alg, lambda)
                                                : index_character_sum(alg, lambda, limits);
  const auto minimal = minimal_index(alg);
  report.is_minimal_witness =
      std::find(minimal.witnesses.begin(), minimal.witnesses.end(), lambda) != minimal.witnesses.end();
  return report;
}

std::vector<FundamentalIndexEntry> e8_fundamental_table() {
  const auto e8 = build_algebra('E', 8);
  std::vector<FundamentalIndexEntry> table;
  for (int node = 1; node <= 8; ++node) {
    FundamentalIndexEntry entry;
    entry.node = node;
    entry.weight = Weight::fundamental(8, node);
    entry.dimension = weyl_dimension(e8, entry.weight);
    entry.index = index_casimir(e8, entry.weight);
    table.push_back(std::move(entry));
  }
  return table;
}

}  // namespace liepf
