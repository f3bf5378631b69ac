// Command-line front end: counting, sampling, ranking, bijections,
// validation, exhaustive enumeration and sampling statistics for the two
// ranked tree models.
//
// Exit codes: 0 success; 2 usage or malformed input; 3 rank out of range;
// 4 bijection class violation; 5 invalid tree (validate); 6 enumeration
// bound exceeded.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "schroeder/bijections.hpp"
#include "schroeder/distrows.hpp"
#include "schroeder/newick.hpp"
#include "schroeder/ranking.hpp"
#include "schroeder/samplers.hpp"
#include "schroeder/stats.hpp"
#include "schroeder/tables.hpp"
#include "schroeder/tree.hpp"
#include "schroeder/tree_json.hpp"
#include "schroeder/weak_mean.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitRankRange = 3;
constexpr int kExitBijection = 4;
constexpr int kExitInvalidTree = 5;
constexpr int kExitEnumBound = 6;

using schroeder::LabeledTree;
using schroeder::ModelKind;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot open output file: " + path);
  return file;
}

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

LabeledTree parse_tree(const std::string& text, const std::string& format) {
  std::string body = strip(text);
  if (format == "json" || (format == "auto" && !body.empty() && body[0] == '{'))
    return schroeder::from_json(body);
  return schroeder::parse_newick(body);
}

std::string render_tree(const LabeledTree& t, const std::string& format) {
  return format == "json" ? schroeder::to_json(t) : schroeder::to_newick(t);
}

ModelKind parse_model(const std::string& m) {
  if (m == "strong") return ModelKind::Strong;
  if (m == "weak") return ModelKind::Weak;
  throw CLI::ValidationError("--model", "must be 'strong' or 'weak'");
}

int cmd_count(const std::string& model_s, int64_t n, const std::string& param,
              const std::string& format, std::ostream& os) {
  ModelKind model = parse_model(model_s);
  if (param.empty()) {
    os << (model == ModelKind::Strong ? schroeder::strong_count(static_cast<int>(n))
                                      : schroeder::weak_count(static_cast<int>(n)))
              .to_string()
       << '\n';
    return 0;
  }
  auto kind = schroeder::parse_param(param, model);
  if (!kind) {
    std::cerr << "unknown parameter '" << param << "' for model " << model_s << '\n';
    return kExitUsage;
  }
  schroeder::DistRow row;
  switch (*kind) {
    case schroeder::ParamKind::InternalNodes:
      row = schroeder::strong_internal_nodes_dist(static_cast<int>(n));
      break;
    case schroeder::ParamKind::RootArity:
      row = schroeder::strong_root_arity_dist(static_cast<int>(n));
      break;
    case schroeder::ParamKind::RootLeaves:
      row = schroeder::strong_root_leaves_dist(static_cast<int>(n));
      break;
    case schroeder::ParamKind::BinaryNodes:
      row = schroeder::strong_binary_nodes_dist(static_cast<int>(n));
      break;
    case schroeder::ParamKind::Steps:
      row = schroeder::weak_steps_dist(static_cast<int>(n));
      break;
    case schroeder::ParamKind::WeakInternalNodes:
      row = schroeder::weak_internal_nodes_dist(static_cast<int>(n)).dist_row(static_cast<int>(n));
      break;
  }
  if (format == "json") {
    os << row.to_json() << '\n';
  } else {
    row.to_csv(os);
  }
  return 0;
}

int cmd_sample(const std::string& model_s, int64_t n, uint64_t count, uint64_t seed,
               const std::string& format, std::ostream& os) {
  ModelKind model = parse_model(model_s);
  if (model == ModelKind::Weak) schroeder::tables::warm_weak_g(static_cast<unsigned>(n));
  schroeder::RngHandle rng = schroeder::RngHandle::for_worker(seed, 0);
  bool json = format == "json";
  if (json) os << "[";
  for (uint64_t i = 0; i < count; i++) {
    LabeledTree t = model == ModelKind::Strong ? schroeder::sample_strong(n, rng)
                                               : schroeder::sample_weak(n, rng);
    if (json) {
      if (i) os << ",";
      os << render_tree(t, "json");
    } else {
      os << render_tree(t, format) << '\n';
    }
  }
  if (json) os << "]\n";
  return 0;
}

int cmd_unrank(int64_t n, const std::string& rank_s, const std::string& format,
               std::ostream& os) {
  schroeder::BigInt rank = schroeder::BigInt::from_decimal(rank_s);
  const schroeder::BigInt& bound = schroeder::tables::weak_g(static_cast<unsigned>(n));
  if (rank.sign() < 0 || !(rank < bound)) {
    std::cerr << "rank out of range: must be in [0, " << bound.to_string() << ")\n";
    return kExitRankRange;
  }
  os << render_tree(schroeder::unrank_weak(n, rank), format) << '\n';
  return 0;
}

int cmd_rank(const std::string& input, const std::string& format, std::ostream& os) {
  LabeledTree t = parse_tree(read_input(input), format);
  auto rep = schroeder::validate(t, ModelKind::Weak);
  if (!rep.valid) {
    std::cerr << "input is not a valid weakly increasing tree\n";
    return kExitInvalidTree;
  }
  os << schroeder::rank_weak(t).to_string() << '\n';
  return 0;
}

int cmd_bij(const std::string& direction, const std::string& perm_s,
            const std::string& partition_s, const std::string& input,
            const std::string& format, std::ostream& os) {
  try {
    if (direction == "perm-to-tree") {
      auto sigma = schroeder::Permutation::parse(perm_s);
      os << render_tree(schroeder::perm_to_tree(sigma), format) << '\n';
    } else if (direction == "tree-to-perm") {
      LabeledTree t = parse_tree(read_input(input), format);
      os << schroeder::tree_to_perm(t).to_string() << '\n';
    } else if (direction == "partition-to-tree") {
      auto p = schroeder::OrderedPartition::parse(partition_s);
      os << render_tree(schroeder::partition_to_tree(p), format) << '\n';
    } else if (direction == "tree-to-partition") {
      LabeledTree t = parse_tree(read_input(input), format);
      os << schroeder::tree_to_partition(t).to_string() << '\n';
    } else {
      std::cerr << "unknown direction '" << direction
                << "' (perm-to-tree, tree-to-perm, partition-to-tree, tree-to-partition)\n";
      return kExitUsage;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << '\n';
    return kExitBijection;
  }
  return 0;
}

int cmd_enumerate(const std::string& model_s, int64_t n, const std::string& format,
                  std::ostream& os) {
  ModelKind model = parse_model(model_s);
  int bound = model == ModelKind::Strong ? schroeder::kExhaustiveStrongBound
                                         : schroeder::kExhaustiveWeakBound;
  if (n > bound) {
    std::cerr << "enumeration refused: n = " << n << " exceeds bound " << bound << '\n';
    return kExitEnumBound;
  }
  bool json = format == "json";
  if (json) os << "[";
  bool first = true;
  auto emit = [&](const LabeledTree& t) {
    if (json) {
      if (!first) os << ",";
      os << render_tree(t, "json");
    } else {
      os << render_tree(t, format) << '\n';
    }
    first = false;
  };
  if (model == ModelKind::Strong) {
    schroeder::exhaustive_strong(static_cast<int>(n), emit);
  } else {
    schroeder::exhaustive_weak(static_cast<int>(n), emit);
  }
  if (json) os << "]\n";
  return 0;
}

int cmd_validate(const std::string& model_s, const std::string& input,
                 const std::string& format, std::ostream& os) {
  ModelKind model = parse_model(model_s);
  LabeledTree t = parse_tree(read_input(input), format);
  auto rep = schroeder::validate(t, model);
  nlohmann::ordered_json j;
  j["valid"] = rep.valid;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& v : rep.violations) {
    nlohmann::ordered_json vj;
    vj["node"] = v.node;
    vj["rule"] = v.rule;
    vj["message"] = v.message;
    arr.push_back(std::move(vj));
  }
  j["violations"] = std::move(arr);
  os << j.dump() << '\n';
  return rep.valid ? 0 : kExitInvalidTree;
}

int cmd_stats(const std::string& model_s, int64_t n, const std::string& param_s,
              uint64_t samples, uint64_t seed, uint32_t workers, bool with_ks,
              std::ostream& os) {
  ModelKind model = parse_model(model_s);
  auto param = schroeder::parse_param(param_s, model);
  if (!param) {
    std::cerr << "unknown parameter '" << param_s << "' for model " << model_s << '\n';
    return kExitUsage;
  }
  auto rep = schroeder::run_cohort(model, n, *param, samples, seed, workers);
  if (!with_ks) {
    os << rep.to_json() << '\n';
    return 0;
  }
  auto j = nlohmann::ordered_json::parse(rep.to_json());
  auto ks = schroeder::normality_check(rep);
  nlohmann::ordered_json kj;
  kj["test"] = ks.test;
  kj["statistic"] = ks.statistic;
  kj["samples"] = ks.df_or_n;
  kj["threshold"] = ks.threshold;
  kj["pass"] = ks.pass;
  j["normality"] = std::move(kj);
  os << j.dump() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ranked Schroeder tree toolkit: exact counting, uniform sampling,\n"
               "ranking/unranking, bijections and sampling statistics"};
  app.require_subcommand(1);

  std::string model = "strong", param, format, rank_s, input, output;
  std::string direction, perm_s, partition_s;
  int64_t n = 1;
  uint64_t count = 1, samples = 1, seed = 0;
  uint32_t workers = 1;
  bool with_ks = false;

  auto* count_cmd = app.add_subcommand("count", "exact totals or a distribution row");
  count_cmd->add_option("--model", model)->required();
  count_cmd->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  count_cmd->add_option("--param", param);
  count_cmd->add_option("--format", format)->default_val("csv");
  count_cmd->add_option("--output", output);

  auto* sample_cmd = app.add_subcommand("sample", "uniform random trees");
  sample_cmd->add_option("--model", model)->required();
  sample_cmd->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  sample_cmd->add_option("--count", count)->default_val(1);
  sample_cmd->add_option("--seed", seed)->default_val(0);
  sample_cmd->add_option("--format", format)->default_val("newick");
  sample_cmd->add_option("--output", output);

  auto* unrank_cmd = app.add_subcommand("unrank", "weak tree at a given rank");
  unrank_cmd->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  unrank_cmd->add_option("--rank", rank_s)->required();
  unrank_cmd->add_option("--format", format)->default_val("newick");
  unrank_cmd->add_option("--output", output);

  auto* rank_cmd = app.add_subcommand("rank", "rank of a weak tree");
  rank_cmd->add_option("--input", input)->default_val("-");
  rank_cmd->add_option("--format", format)->default_val("auto");
  rank_cmd->add_option("--output", output);

  auto* bij_cmd = app.add_subcommand("bij", "structure correspondences");
  bij_cmd->add_option("direction", direction)->required();
  bij_cmd->add_option("--perm", perm_s);
  bij_cmd->add_option("--partition", partition_s);
  bij_cmd->add_option("--input", input)->default_val("-");
  bij_cmd->add_option("--format", format)->default_val("auto");
  bij_cmd->add_option("--output", output);

  auto* enum_cmd = app.add_subcommand("enumerate", "every tree of a size, once");
  enum_cmd->add_option("--model", model)->required();
  enum_cmd->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  enum_cmd->add_option("--format", format)->default_val("newick");
  enum_cmd->add_option("--output", output);

  auto* validate_cmd = app.add_subcommand("validate", "check a tree against a model");
  validate_cmd->add_option("--model", model)->required();
  validate_cmd->add_option("--input", input)->default_val("-");
  validate_cmd->add_option("--format", format)->default_val("auto");
  validate_cmd->add_option("--output", output);

  auto* stats_cmd = app.add_subcommand("stats", "sampled cohort vs. theory");
  stats_cmd->add_option("--model", model)->required();
  stats_cmd->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  stats_cmd->add_option("--param", param)->required();
  stats_cmd->add_option("--samples", samples)->default_val(10000);
  stats_cmd->add_option("--seed", seed)->default_val(0);
  stats_cmd->add_option("--workers", workers)->default_val(1);
  stats_cmd->add_flag("--ks", with_ks, "attach a normality check");
  stats_cmd->add_option("--output", output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  }

  try {
    std::ofstream file;
    std::ostream& os = open_output(output, file);
    if (count_cmd->parsed()) return cmd_count(model, n, param, format, os);
    if (sample_cmd->parsed()) return cmd_sample(model, n, count, seed, format, os);
    if (unrank_cmd->parsed()) return cmd_unrank(n, rank_s, format, os);
    if (rank_cmd->parsed()) return cmd_rank(input, format, os);
    if (bij_cmd->parsed()) return cmd_bij(direction, perm_s, partition_s, input, format, os);
    if (enum_cmd->parsed()) return cmd_enumerate(model, n, format, os);
    if (validate_cmd->parsed()) return cmd_validate(model, input, format, os);
    if (stats_cmd->parsed()) return cmd_stats(model, n, param, samples, seed, workers, with_ks, os);
    return kExitUsage;
  } catch (const schroeder::ParseError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const schroeder::JsonSchemaError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  }
}
