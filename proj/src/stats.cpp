#include "schroeder/stats.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "schroeder/constants.hpp"
#include "schroeder/distrows.hpp"
#include "schroeder/ranking.hpp"
#include "schroeder/samplers.hpp"
#include "schroeder/tables.hpp"
#include "schroeder/weak_mean.hpp"

#include <json.hpp>

namespace schroeder {

const char* to_string(ParamKind p) {
  switch (p) {
    case ParamKind::InternalNodes: return "internal-nodes";
    case ParamKind::RootArity: return "root-arity";
    case ParamKind::RootLeaves: return "root-leaves";
    case ParamKind::BinaryNodes: return "binary-nodes";
    case ParamKind::Steps: return "steps";
    case ParamKind::WeakInternalNodes: return "internal-nodes";
  }
  return "?";
}

std::optional<ParamKind> parse_param(const std::string& name, ModelKind model) {
  if (model == ModelKind::Strong) {
    if (name == "internal-nodes") return ParamKind::InternalNodes;
    if (name == "root-arity") return ParamKind::RootArity;
    if (name == "root-leaves") return ParamKind::RootLeaves;
    if (name == "binary-nodes") return ParamKind::BinaryNodes;
    return std::nullopt;
  }
  if (name == "steps") return ParamKind::Steps;
  if (name == "internal-nodes") return ParamKind::WeakInternalNodes;
  return std::nullopt;
}

bool param_valid_for(ParamKind p, ModelKind model) {
  switch (p) {
    case ParamKind::Steps:
    case ParamKind::WeakInternalNodes:
      return model == ModelKind::Weak;
    default:
      return model == ModelKind::Strong;
  }
}

int64_t measure_param(const LabeledTree& t, ParamKind param) {
  switch (param) {
    case ParamKind::InternalNodes:
    case ParamKind::WeakInternalNodes:
      return num_internal(t);
    case ParamKind::RootArity:
      return static_cast<int64_t>(t.nodes[t.root].children.size());
    case ParamKind::RootLeaves: {
      int64_t c = 0;
      for (int32_t child : t.nodes[t.root].children)
        if (t.is_leaf(child)) c++;
      return c;
    }
    case ParamKind::BinaryNodes: {
      int64_t c = 0;
      for (const auto& node : t.nodes)
        if (node.children.size() == 2) c++;
      return c;
    }
    case ParamKind::Steps:
      return max_label(t);
  }
  return 0;
}

int64_t strong_param_streamed(int64_t n, RngHandle& rng, ParamKind param) {
  if (n == 1) return 0;
  int64_t internals = 1;
  int64_t binary = 0;
  int64_t cur_arity = 2;  // the node appends currently go to
  int64_t root_arity_final = 0;
  bool root_is_last = true;
  // Canonical positions of the root's current leaf children.
  std::vector<int64_t> root_leaf_pos{1, 2};
  int64_t run_k = 1;
  int64_t run_appends = 0;
  const bool track_root_leaves = param == ParamKind::RootLeaves;

  for (int64_t i = 3; i <= n; i++) {
    int64_t k = static_cast<int64_t>(rng.rand_int(1, i));
    if (k == i) {
      run_appends++;
      cur_arity++;
      if (track_root_leaves) {
        int64_t pos = run_k + 1 + run_appends;
        if (root_is_last) {
          root_leaf_pos.push_back(pos);  // pos == current size + 1
        } else {
          for (auto& p : root_leaf_pos)
            if (p >= pos) p++;
        }
      }
    } else {
      if (root_is_last) root_arity_final = cur_arity;
      binary += cur_arity == 2 ? 1 : 0;
      cur_arity = 2;
      internals++;
      root_is_last = false;
      run_k = k;
      run_appends = 0;
      if (track_root_leaves) {
        auto it = std::lower_bound(root_leaf_pos.begin(), root_leaf_pos.end(), k);
        if (it != root_leaf_pos.end() && *it == k) root_leaf_pos.erase(it);
        for (auto& p : root_leaf_pos)
          if (p > k) p++;
      }
    }
  }
  binary += cur_arity == 2 ? 1 : 0;
  if (root_is_last) root_arity_final = cur_arity;

  switch (param) {
    case ParamKind::InternalNodes:
      return internals;
    case ParamKind::BinaryNodes:
      return binary;
    case ParamKind::RootArity:
      return root_arity_final;
    case ParamKind::RootLeaves:
      return static_cast<int64_t>(root_leaf_pos.size());
    default:
      throw std::invalid_argument("strong_param_streamed: strong parameters only");
  }
}

namespace {

TheoryColumn make_theory(ModelKind model, int64_t n, ParamKind param) {
  TheoryColumn th;
  const double nd = static_cast<double>(n);
  if (model == ModelKind::Strong) {
    switch (param) {
      case ParamKind::InternalNodes:
        if (n >= 2) {
          th.exact_mean = strong_internal_mean(static_cast<int>(n));
          if (n <= kExactTheoryCap)
            th.exact_variance = strong_internal_variance(static_cast<int>(n));
        }
        th.asym_mean = strong_internal_mean_asymptotic(static_cast<int>(n));
        th.asym_variance = strong_internal_variance_asymptotic(static_cast<int>(n));
        break;
      case ParamKind::RootArity: {
        if (n >= 2 && n <= kExactTheoryCap) {
          DistRow row = strong_root_arity_dist(static_cast<int>(n));
          th.exact_mean = row.mean();
          th.exact_variance = row.variance();
        }
        break;
      }
      case ParamKind::RootLeaves:
        if (n >= 2 && n <= kExactTheoryCap) {
          DistRow row = strong_root_leaves_dist(static_cast<int>(n));
          th.exact_mean = row.mean();
          th.exact_variance = row.variance();
        }
        th.asym_mean = 2.0 * constants::kE / nd;
        th.asym_variance = 2.0 * constants::kE / nd;
        break;
      case ParamKind::BinaryNodes:
        if (n >= 3) th.exact_mean = strong_binary_mean_closed_form(static_cast<int>(n));
        if (n >= 2 && n <= kExactTheoryCap)
          th.exact_variance = strong_binary_nodes_dist(static_cast<int>(n)).variance();
        th.asym_mean = strong_binary_mean_asymptotic(static_cast<int>(n));
        th.asym_variance = strong_binary_variance_asymptotic(static_cast<int>(n));
        break;
      default:
        break;
    }
  } else {
    switch (param) {
      case ParamKind::Steps:
        if (n <= kExactWeakStepsCap) {
          DistRow row = weak_steps_dist(static_cast<int>(n));
          th.exact_mean = row.mean();
          th.exact_variance = row.variance();
        }
        th.asym_mean = nd / (2.0 * constants::kLn2);
        th.asym_variance =
            (1.0 - constants::kLn2) / (4.0 * constants::kLn2 * constants::kLn2) * nd;
        break;
      case ParamKind::WeakInternalNodes:
        if (n <= kExactWeakInternalCap) {
          auto wm = weak_internal_mean_exact(static_cast<int>(n));
          th.exact_mean = wm.mean;
        }
        th.asym_mean = nd - std::log(nd);
        break;
      default:
        break;
    }
  }
  return th;
}

nlohmann::ordered_json theory_json(const TheoryColumn& th) {
  nlohmann::ordered_json j;
  if (th.exact_mean) j["exact_mean"] = th.exact_mean->to_string();
  if (th.exact_variance) j["exact_variance"] = th.exact_variance->to_string();
  if (th.asym_mean) j["asymptotic_mean"] = *th.asym_mean;
  if (th.asym_variance) j["asymptotic_variance"] = *th.asym_variance;
  return j;
}

}  // namespace

std::string SampleReport::to_json() const {
  nlohmann::ordered_json j;
  j["model"] = model;
  j["n"] = n;
  j["param"] = param;
  j["samples"] = samples;
  j["seed"] = seed;
  j["mean"] = mean;
  j["variance"] = variance;
  j["skewness"] = skewness;
  j["rng_bits"] = rng_bits;
  j["theory"] = theory_json(theory);
  nlohmann::ordered_json h = nlohmann::ordered_json::object();
  for (const auto& [v, c] : histogram) h[std::to_string(v)] = c;
  j["histogram"] = std::move(h);
  return j.dump();
}

void SampleReport::histogram_csv(std::ostream& os) const {
  for (const auto& [v, c] : histogram) os << v << ',' << c << '\n';
}

SampleReport run_cohort(ModelKind model, int64_t n, ParamKind param, uint64_t samples,
                        uint64_t seed, uint32_t workers) {
  if (samples < 1) throw std::invalid_argument("run_cohort: samples >= 1");
  if (!param_valid_for(param, model))
    throw std::invalid_argument("run_cohort: parameter not defined for this model");
  if (workers < 1) workers = 1;
  if (model == ModelKind::Weak) tables::warm_weak_g(static_cast<unsigned>(n));

  struct WorkerOut {
    std::map<int64_t, uint64_t> hist;
    uint64_t bits = 0;
  };
  std::vector<WorkerOut> outs(workers);
  // Sample s has its own derived stream, so the merged result is independent
  // of the partition into workers.
  auto task = [&](uint32_t w) {
    uint64_t lo = samples * w / workers;
    uint64_t hi = samples * (w + 1) / workers;
    auto& out = outs[w];
    for (uint64_t s = lo; s < hi; s++) {
      RngHandle rng = RngHandle::for_worker(seed, s);
      int64_t value;
      if (model == ModelKind::Strong) {
        value = strong_param_streamed(n, rng, param);
      } else {
        BigInt rank = rng.rand_below(tables::weak_g(static_cast<unsigned>(n)));
        auto counts = peel_weak_rank(n, rank);
        value = param == ParamKind::Steps ? counts.steps : counts.internal_nodes;
      }
      out.hist[value]++;
      out.bits += rng.bits_consumed();
    }
  };
  if (workers == 1) {
    task(0);
  } else {
    std::vector<std::thread> threads;
    for (uint32_t w = 0; w < workers; w++) threads.emplace_back(task, w);
    for (auto& th : threads) th.join();
  }

  SampleReport rep;
  rep.model = to_string(model);
  rep.n = n;
  rep.param = to_string(param);
  rep.samples = samples;
  rep.seed = seed;
  for (const auto& o : outs) {
    rep.rng_bits += o.bits;
    for (const auto& [v, c] : o.hist) rep.histogram[v] += c;
  }

  // Moments from the merged histogram (order-independent).
  long double m1 = 0, m2 = 0, m3 = 0;
  for (const auto& [v, c] : rep.histogram) {
    long double x = static_cast<long double>(v);
    long double w = static_cast<long double>(c);
    m1 += w * x;
    m2 += w * x * x;
    m3 += w * x * x * x;
  }
  long double ns = static_cast<long double>(samples);
  long double mu = m1 / ns;
  long double var = m2 / ns - mu * mu;
  long double central3 = m3 / ns - 3 * mu * (m2 / ns) + 2 * mu * mu * mu;
  rep.mean = static_cast<double>(mu);
  rep.variance = static_cast<double>(var);
  rep.skewness = var > 0 ? static_cast<double>(central3 / std::pow(static_cast<double>(var), 1.5))
                         : 0.0;

  rep.theory = make_theory(model, n, param);
  return rep;
}

GofResult normality_check(const SampleReport& report) {
  if (report.samples < 10000)
    throw std::invalid_argument("normality_check: need at least 10^4 samples");
  if (report.n < 500) throw std::invalid_argument("normality_check: need n >= 500");
  return ks_lattice_test(report.histogram, report.mean, std::sqrt(report.variance));
}

std::vector<BitAccountingRow> bit_accounting(ModelKind model, const std::vector<int64_t>& ns,
                                             uint64_t samples, uint64_t seed) {
  if (ns.empty()) throw std::invalid_argument("bit_accounting: empty size list");
  std::vector<BitAccountingRow> rows;
  for (int64_t n : ns) {
    if (model == ModelKind::Weak) tables::warm_weak_g(static_cast<unsigned>(n));
    uint64_t bits = 0;
    for (uint64_t s = 0; s < samples; s++) {
      RngHandle rng = RngHandle::for_worker(seed, s);
      if (model == ModelKind::Strong) {
        (void)strong_param_streamed(n, rng, ParamKind::InternalNodes);
      } else {
        (void)rng.rand_below(tables::weak_g(static_cast<unsigned>(n)));
      }
      bits += rng.bits_consumed();
    }
    BitAccountingRow row;
    row.n = n;
    row.mean_bits_per_tree = static_cast<double>(bits) / static_cast<double>(samples);
    row.ratio_nlogn =
        row.mean_bits_per_tree / (static_cast<double>(n) * std::log2(static_cast<double>(n)));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace schroeder
