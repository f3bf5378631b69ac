#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "schroeder/bigint.hpp"
#include "schroeder/gof.hpp"
#include "schroeder/rng.hpp"
#include "schroeder/tree.hpp"

namespace schroeder {

enum class ParamKind {
  InternalNodes,
  RootArity,
  RootLeaves,
  BinaryNodes,
  Steps,
  WeakInternalNodes,
};

const char* to_string(ParamKind p);
// CLI spelling: internal-nodes, root-arity, root-leaves, binary-nodes, steps.
std::optional<ParamKind> parse_param(const std::string& name, ModelKind model);
bool param_valid_for(ParamKind p, ModelKind model);

int64_t measure_param(const LabeledTree& t, ParamKind param);

// Theory attached to a cohort: exact moments where a row or closed form is
// affordable, asymptotic predictions otherwise.
struct TheoryColumn {
  std::optional<Rational> exact_mean;
  std::optional<Rational> exact_variance;
  std::optional<double> asym_mean;
  std::optional<double> asym_variance;
};

struct SampleReport {
  std::string model;
  int64_t n = 0;
  std::string param;
  uint64_t samples = 0;
  uint64_t seed = 0;

  double mean = 0.0;
  double variance = 0.0;
  double skewness = 0.0;  // reported, never gated
  std::map<int64_t, uint64_t> histogram;
  uint64_t rng_bits = 0;

  TheoryColumn theory;

  // Deterministic byte-for-byte given (model, n, param, samples, seed).
  std::string to_json() const;
  void histogram_csv(std::ostream& os) const;
};

// Largest n for which exact rows are computed for the theory column.
inline constexpr int64_t kExactTheoryCap = 2048;
inline constexpr int64_t kExactWeakStepsCap = 512;
inline constexpr int64_t kExactWeakInternalCap = 16384;

// Samples `samples` trees of the given size, measures `param`, and attaches
// theory. Sample s draws from the stream derived from (seed, s) and the
// histograms merge associatively, so the report is byte-identical for every
// worker count. The parameter value of each sampled tree is computed from
// the draw sequence (strong) or the rank peel (weak) without materializing
// the tree; equivalence with tree-based measurement is covered by tests.
SampleReport run_cohort(ModelKind model, int64_t n, ParamKind param, uint64_t samples,
                        uint64_t seed, uint32_t workers = 1);

// Strong-model parameter of the tree the draw sequence defines, streamed.
int64_t strong_param_streamed(int64_t n, RngHandle& rng, ParamKind param);

// KS check of the standardized sample against N(0,1); requires >= 10^4
// samples and n >= 500 (the distributions are near-degenerate below that).
GofResult normality_check(const SampleReport& report);

struct BitAccountingRow {
  int64_t n = 0;
  double mean_bits_per_tree = 0.0;
  double ratio_nlogn = 0.0;  // mean bits / (n log2 n)
};

std::vector<BitAccountingRow> bit_accounting(ModelKind model, const std::vector<int64_t>& ns,
                                             uint64_t samples, uint64_t seed);

}  // namespace schroeder
