#include "liepf/json_io.hpp"

namespace liepf::json_io {

json weight_to_json(const Weight& w) { return json(w.coords()); }

json character_to_json(const FormalCharacter& character) {
  json out = json::array();
  for (const auto& [w, m] : character.dominant_mults()) out.push_back({{"weight", weight_to_json(w)}, {"mult", to_string(m)}});
  return out;
}

FormalCharacter character_from_json(const SimpleLieAlgebra& alg, const json& j) {
  if (!j.is_array()) throw DomainError("character JSON must be an array");
  std::map<Weight, BigInt> mults;
  for (const auto& entry : j) {
    Weight w(entry.at("weight").get<std::vector<std::int64_t>>());
    const auto& m = entry.at("mult");
    BigInt value = m.is_string() ? BigInt(m.get<std::string>()) : BigInt(m.get<std::int64_t>());
    mults[w] += value;
  }
  return FormalCharacter(std::make_shared<const SimpleLieAlgebra>(alg), std::move(mults));
}

json matrix_to_json(const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return {{"n", m.rows()}, {"entries", std::move(rows)}};
}

RationalMatrix matrix_from_json(const json& j) {
  try {
    const auto n = j.at("n").get<std::size_t>();
    const auto& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != n) throw DomainError("matrix JSON: expected " + std::to_string(n) + " rows");
    RationalMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      if (!entries[r].is_array() || entries[r].size() != n) {
        throw DomainError("matrix JSON: row " + std::to_string(r) + " must have " + std::to_string(n) + " entries");
      }
      for (std::size_t c = 0; c < n; ++c) {
        const auto& cell = entries[r][c];
        if (cell.is_string())
          m(r, c) = parse_rational(cell.get<std::string>());
        else if (cell.is_number_integer())
          m(r, c) = Rational(cell.get<std::int64_t>());
        else
          throw DomainError("matrix JSON: entries must be integers or \"p/q\" strings");
      }
    }
    return m;
  } catch (const json::exception& e) {
    throw DomainError(std::string("matrix JSON: ") + e.what());
  }
}

json algebra_to_json(const SimpleLieAlgebra& alg) {
  json roots = json::array();
  for (const auto& r : alg.positive_roots()) roots.push_back(weight_to_json(r));
  return {{"algebra", alg.designator()},
          {"rank", alg.rank()},
          {"cartan", alg.cartan()},
          {"comarks", alg.comarks()},
          {"dual_coxeter", alg.dual_coxeter()},
          {"dim", alg.dim_g()},
          {"theta", weight_to_json(alg.highest_root_theta())},
          {"positive_roots", std::move(roots)}};
}

json index_report_to_json(const IndexReport& report) {
  return {{"algebra", report.algebra},
          {"weight", weight_to_json(report.highest_weight)},
          {"dim", to_string(report.dimension)},
          {"index", to_string(report.index)},
          {"method", to_string(report.method)},
          {"is_minimal_witness", report.is_minimal_witness}};
}

json picard_to_json(const PicardDescription& picard) {
  json factors = json::array();
  for (const auto& basis : picard.factors) {
    json b = json::array();
    for (const auto& w : basis) b.push_back(weight_to_json(w));
    factors.push_back(std::move(b));
  }
  json out = {{"algebra", picard.algebra},
              {"rank", picard.rank},
              {"generator_kind", to_string(picard.generator_kind)},
              {"conjectural", picard.generator_kind == GeneratorKind::conjectural},
              {"factors", std::move(factors)}};
  out["conjectural_d"] = picard.conjectural_d ? json(*picard.conjectural_d) : json(nullptr);
  out["conjectural_node"] = picard.conjectural_node ? json(*picard.conjectural_node) : json(nullptr);
  return out;
}

}  // namespace liepf::json_io
