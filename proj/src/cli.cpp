#include "liepf/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "liepf/json_io.hpp"

namespace liepf {

namespace {

using json_io::json;

struct Emitter {
  const CliConfig& config;
  std::ostream& out;

  void emit(const json& payload, const std::function<void(std::ostream&)>& table) const {
    if (config.output_format == OutputFormat::json)
      out << payload.dump() << '\n';
    else
      table(out);
  }
};

std::vector<int> parse_node_list(const std::string& text, int rank) {
  std::vector<int> nodes;
  if (text.empty()) return nodes;
  const Weight parsed = parse_weight(text);
  for (auto c : parsed.coords()) {
    if (c < 1 || c > rank) throw DomainError("node " + std::to_string(c) + " out of range 1.." + std::to_string(rank));
    nodes.push_back(static_cast<int>(c));
  }
  return nodes;
}

Weight parse_label(const SimpleLieAlgebra& alg, const std::string& text) {
  Weight w = parse_weight(text);
  alg.require_rank(w);
  return w;
}

long default_precision() {
  if (const char* env = std::getenv(kPrecisionEnv)) {
    char* end = nullptr;
    long bits = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && bits >= 64) return bits;
  }
  return 128;
}

void print_weights(std::ostream& os, const std::vector<Weight>& weights) {
  for (const auto& w : weights) os << "  " << w.to_string() << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig config;
  config.precision_bits = default_precision();
  bool as_json = false;
  std::string format = "table";

  CLI::App app{"liepf: Dynkin indices, pfaffians, parabolic Picard groups and Verlinde dimensions"};
  app.name("liepf");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", as_json, "Emit JSON (same as --format json)");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--orbit-cap", config.limits.orbit_cap, "Largest Weyl orbit enumerated");
  app.add_option("--weight-cap", config.limits.weight_system_cap, "Largest dominant weight system / alcove");
  app.add_option("--weyl-cap", config.limits.weyl_cap, "Largest Weyl group enumerated for characters");

  std::string algebra_name;
  std::string coords;
  std::string method = "casimir";
  std::string matrix_file;
  std::string sigma;
  std::vector<std::string> labels;
  std::int64_t level = 0;
  std::int64_t genus = 0;
  long precision = 0;

  auto* roots = app.add_subcommand("roots", "Root datum of a simple Lie algebra");
  roots->add_option("algebra", algebra_name, "Designator such as A2, E8")->required();

  auto* index = app.add_subcommand("index", "Dynkin index of an irreducible representation");
  index->add_option("algebra", algebra_name)->required();
  index->add_option("weight", coords, "Comma-separated highest-weight coordinates")->required();
  index->add_option("--method", method)->check(CLI::IsMember({"sum", "casimir", "both"}));

  auto* min_index = app.add_subcommand("min-index", "Minimal Dynkin index and its fundamental witnesses");
  min_index->add_option("algebra", algebra_name)->required();

  auto* e8 = app.add_subcommand("e8-table", "Dynkin indices of the fundamental representations of E8");

  auto* alcove_cmd = app.add_subcommand("alcove", "Dominant weights of level at most L");
  alcove_cmd->add_option("algebra", algebra_name)->required();
  alcove_cmd->add_option("--level", level)->required();

  auto* pf = app.add_subcommand("pfaffian", "Pfaffian of a skew matrix read from JSON");
  pf->add_option("file", matrix_file, "Matrix file {\"n\":..,\"entries\":[[..]]}")->required();

  auto* picard = app.add_subcommand("picard", "Picard group of quasi-parabolic moduli");
  picard->add_option("algebra", algebra_name)->required();
  picard->add_option("--label", labels, "Weight whose zero coordinates define the parabolic (repeatable)");

  auto* char_group = app.add_subcommand("char-group", "Character group basis of a standard parabolic");
  char_group->add_option("algebra", algebra_name)->required();
  char_group->add_option("--sigma", sigma, "Comma-separated simple roots in the Levi");

  auto* verlinde = app.add_subcommand("verlinde", "Verlinde dimension of conformal blocks");
  verlinde->add_option("algebra", algebra_name)->required();
  verlinde->add_option("--level", level)->required();
  verlinde->add_option("--genus", genus)->required();
  verlinde->add_option("--label", labels, "Label weight (repeatable)");
  verlinde->add_option("--prec", precision, "Precision in bits (>= 64)");

  auto* line_bundle = app.add_subcommand("line-bundle", "Coordinates of L(level, chi) in the Picard basis");
  line_bundle->add_option("algebra", algebra_name)->required();
  line_bundle->add_option("--level", level)->required();
  line_bundle->add_option("--label", labels, "Label weight (repeatable)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  if (as_json || format == "json") config.output_format = OutputFormat::json;
  if (precision != 0) config.precision_bits = precision;
  Emitter emitter{config, out};

  try {
    if (config.precision_bits < 64) throw DomainError("precision must be at least 64 bits");

    if (*roots) {
      auto alg = build_algebra(algebra_name);
      emitter.emit(json_io::algebra_to_json(alg), [&](std::ostream& os) {
        os << alg.designator() << ": rank " << alg.rank() << ", dim " << alg.dim_g() << ", dual Coxeter "
           << alg.dual_coxeter() << ", theta " << alg.highest_root_theta().to_string() << '\n';
        os << "positive roots (" << alg.positive_roots().size() << "):\n";
        print_weights(os, alg.positive_roots());
      });
    } else if (*index) {
      auto alg = build_algebra(algebra_name);
      Weight lambda = parse_label(alg, coords);
      IndexReport report;
      if (method == "both") {
        report = index_report(alg, lambda, IndexMethod::casimir, config.limits);
        BigInt by_sum = index_character_sum(alg, lambda, config.limits);
        if (by_sum != report.index) {
          throw InternalError("character-sum index " + to_string(by_sum) + " disagrees with Casimir index " +
                              to_string(report.index));
        }
      } else {
        report = index_report(alg, lambda, method == "sum" ? IndexMethod::character_sum : IndexMethod::casimir,
                              config.limits);
      }
      json payload = json_io::index_report_to_json(report);
      if (method == "both") payload["method"] = "both";
      emitter.emit(payload, [&](std::ostream& os) { os << to_string(report.index) << '\n'; });
    } else if (*min_index) {
      auto alg = build_algebra(algebra_name);
      auto minimal = minimal_index(alg);
      json witnesses = json::array();
      for (const auto& w : minimal.witnesses) witnesses.push_back(json_io::weight_to_json(w));
      json payload = {{"algebra", alg.designator()}, {"d_g", static_cast<std::int64_t>(minimal.d_g)},
                      {"witnesses", witnesses}};
      emitter.emit(payload, [&](std::ostream& os) {
        os << alg.designator() << ": d_g = " << to_string(minimal.d_g) << ", witnesses:";
        for (const auto& w : minimal.witnesses) os << ' ' << w.to_string();
        os << '\n';
      });
    } else if (*e8) {
      auto table = e8_fundamental_table();
      json rows = json::array();
      std::vector<BigInt> values;
      for (const auto& entry : table) {
        rows.push_back({{"node", entry.node},
                        {"weight", json_io::weight_to_json(entry.weight)},
                        {"dim", to_string(entry.dimension)},
                        {"index", to_string(entry.index)}});
        values.push_back(entry.index);
      }
      std::sort(values.begin(), values.end());
      json multiset = json::array();
      for (const auto& v : values) multiset.push_back(to_string(v));
      emitter.emit({{"algebra", "E8"}, {"table", rows}, {"multiset", multiset}}, [&](std::ostream& os) {
        os << "node  dim           index\n";
        for (const auto& entry : table)
          os << entry.node << "     " << to_string(entry.dimension) << "  " << to_string(entry.index) << '\n';
      });
    } else if (*alcove_cmd) {
      auto alg = build_algebra(algebra_name);
      auto points = alcove(alg, level);
      if (points.size() > config.limits.weight_system_cap) throw CapExceeded("alcove exceeds the weight cap");
      json weights = json::array();
      for (const auto& w : points) weights.push_back(json_io::weight_to_json(w));
      emitter.emit({{"algebra", alg.designator()}, {"level", level}, {"size", points.size()}, {"weights", weights}},
                   [&](std::ostream& os) {
                     os << alg.designator() << " level " << level << ": " << points.size() << " weights\n";
                     print_weights(os, points);
                   });
    } else if (*pf) {
      std::ifstream file(matrix_file);
      if (!file) throw DomainError("cannot open " + matrix_file);
      json parsed;
      try {
        parsed = json::parse(file);
      } catch (const json::exception& e) {
        throw DomainError(std::string("invalid JSON: ") + e.what());
      }
      SkewMatrix matrix(json_io::matrix_from_json(parsed));
      Rational value = pfaffian(matrix);
      Rational det = determinant(matrix.matrix());
      emitter.emit({{"n", matrix.size()}, {"pfaffian", to_string(value)}, {"det", to_string(det)}},
                   [&](std::ostream& os) { os << to_string(value) << '\n'; });
    } else if (*picard) {
      auto alg = build_algebra(algebra_name);
      std::vector<ParabolicType> types;
      for (const auto& text : labels) types.push_back(parabolic_from_weight(alg, parse_label(alg, text)).first);
      auto description = picard_of_parabolic_moduli(alg, types);
      emitter.emit(json_io::picard_to_json(description), [&](std::ostream& os) {
        os << description.algebra << ": Pic rank " << description.rank << ", generator "
           << to_string(description.generator_kind);
        if (description.conjectural_d) {
          os << " (conjectural: L^" << *description.conjectural_d << " = D_varpi" << *description.conjectural_node
             << ")";
        }
        os << '\n';
      });
    } else if (*char_group) {
      auto alg = build_algebra(algebra_name);
      ParabolicType type(alg, parse_node_list(sigma, alg.rank()));
      auto basis = character_group_basis(type);
      json weights = json::array();
      for (const auto& w : basis) weights.push_back(json_io::weight_to_json(w));
      emitter.emit({{"algebra", alg.designator()}, {"sigma", type.sigma()}, {"gamma", type.gamma()}, {"basis", weights}},
                   [&](std::ostream& os) {
                     os << "X(P) has rank " << basis.size() << '\n';
                     print_weights(os, basis);
                   });
    } else if (*verlinde) {
      VerlindeQuery query{build_algebra(algebra_name), level, genus, {}, config.precision_bits};
      for (const auto& text : labels) query.labels.push_back(parse_label(query.algebra, text));
      VerlindeOptions options;
      options.limits = config.limits;
      auto result = verlinde_dimension(query, options);
      emitter.emit({{"dimension", to_string(result.dimension)},
                    {"alcove_size", result.alcove_size},
                    {"checks", {{"integrality_residual", result.integrality_residual}}}},
                   [&](std::ostream& os) { os << to_string(result.dimension) << '\n'; });
    } else if (*line_bundle) {
      auto alg = build_algebra(algebra_name);
      std::vector<Weight> weights;
      for (const auto& text : labels) weights.push_back(parse_label(alg, text));
      auto coords_out = line_bundle_coords(alg, level, weights);
      emitter.emit({{"algebra", alg.designator()}, {"coords", coords_out}}, [&](std::ostream& os) {
        for (std::size_t i = 0; i < coords_out.size(); ++i) os << (i ? " " : "") << coords_out[i];
        os << '\n';
      });
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace liepf
