#include "liepf/parabolic.hpp"

#include <algorithm>
#include <numeric>

namespace liepf {

ParabolicType::ParabolicType(const SimpleLieAlgebra& alg, std::vector<int> sigma)
    : algebra_(alg.designator()), rank_(alg.rank()), sigma_(std::move(sigma)) {
  std::sort(sigma_.begin(), sigma_.end());
  if (std::adjacent_find(sigma_.begin(), sigma_.end()) != sigma_.end()) {
    throw DomainError("parabolic type lists a simple root twice");
  }
  for (int node : sigma_)
    if (node < 1 || node > rank_) throw DomainError("simple root " + std::to_string(node) + " out of range");
  for (int node = 1; node <= rank_; ++node)
    if (!std::binary_search(sigma_.begin(), sigma_.end(), node)) gamma_.push_back(node);
}

ParabolicType ParabolicType::whole_group(const SimpleLieAlgebra& alg) {
  std::vector<int> all(alg.rank());
  std::iota(all.begin(), all.end(), 1);
  return {alg, std::move(all)};
}

std::pair<ParabolicType, std::vector<std::int64_t>> parabolic_from_weight(const SimpleLieAlgebra& alg,
                                                                         const Weight& lambda) {
  alg.require_rank(lambda);
  if (!lambda.is_dominant()) throw DomainError("label " + lambda.to_string() + " is not dominant");
  std::vector<int> sigma;
  std::vector<std::int64_t> character;
  for (int i = 0; i < alg.rank(); ++i) {
    if (lambda[i] == 0)
      sigma.push_back(i + 1);
    else
      character.push_back(lambda[i]);
  }
  return {ParabolicType(alg, std::move(sigma)), std::move(character)};
}

Weight weight_from_parabolic(const ParabolicType& type, const std::vector<std::int64_t>& character) {
  if (character.size() != type.gamma().size()) throw DomainError("character length does not match |Gamma|");
  Weight w(type.rank());
  for (std::size_t k = 0; k < character.size(); ++k) w[type.gamma()[k] - 1] = character[k];
  return w;
}

std::vector<Weight> character_group_basis(const ParabolicType& type) {
  std::vector<Weight> basis;
  for (int node : type.gamma()) basis.push_back(Weight::fundamental(type.rank(), node));
  return basis;
}

std::string to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::determinant: return "determinant";
    case GeneratorKind::pfaffian: return "pfaffian";
    case GeneratorKind::conjectural: return "conjectural";
  }
  return "unknown";
}

PicardDescription picard_of_parabolic_moduli(const SimpleLieAlgebra& alg, const std::vector<ParabolicType>& labels) {
  PicardDescription out;
  out.algebra = alg.designator();
  out.rank = 1;
  for (const auto& label : labels) {
    if (label.algebra() != out.algebra) throw DomainError("label belongs to " + label.algebra());
    out.rank += static_cast<int>(label.gamma().size());
    out.factors.push_back(character_group_basis(label));
  }
  switch (alg.type_tag()) {
    case 'A':
    case 'C':
      out.generator_kind = GeneratorKind::determinant;
      break;
    case 'B':
    case 'D':
    case 'G':
      out.generator_kind = GeneratorKind::pfaffian;
      break;
    case 'E':
      out.generator_kind = GeneratorKind::conjectural;
      out.conjectural_d = alg.rank() == 6 ? 6 : alg.rank() == 7 ? 12 : 60;
      out.conjectural_node = alg.rank();
      break;
    case 'F':
      out.generator_kind = GeneratorKind::conjectural;
      out.conjectural_d = 6;
      out.conjectural_node = 4;
      break;
    default:
      throw InternalError("unknown type tag");
  }
  return out;
}

std::vector<std::int64_t> line_bundle_coords(const SimpleLieAlgebra& alg, std::int64_t level,
                                             const std::vector<Weight>& labels) {
  if (level < 0) throw DomainError("level must be non-negative");
  std::vector<std::int64_t> coords{level};
  for (const auto& label : labels) {
    auto [type, character] = parabolic_from_weight(alg, label);
    coords.insert(coords.end(), character.begin(), character.end());
  }
  return coords;
}

}  // namespace liepf
