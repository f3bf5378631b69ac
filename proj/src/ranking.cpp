#include "schroeder/ranking.hpp"

#include <stdexcept>
#include <string>

#include "schroeder/bijections.hpp"
#include "schroeder/tables.hpp"

namespace schroeder {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw std::invalid_argument(what);
}

BigInt binom_big(int64_t n, int64_t k) {
  if (k < 0 || k > n) return BigInt(0);
  BigInt b;
  mpz_bin_uiui(b.raw(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

// The branch order of the composition recurrence coincides with colex order
// on the complements of the partial-sum sets: a composition (c_1..c_k) of n
// maps to S = {c_1, c_1+c_2, ...} inside {1..n-1}, and
//   rank = binom(n-1,k-1) - 1 - colexrank({1..n-1} \ S).
// Decoding the complement touches only n-k elements, which is what makes
// repeated unranking at large sizes affordable (most parts are 1).
//
// Complement elements, ascending. rem is consumed in place.
std::vector<int64_t> decode_complement_colex(int64_t n, int64_t m, BigInt rem) {
  std::vector<int64_t> c(static_cast<size_t>(m), 0);
  for (int64_t j = m; j >= 1; j--) {
    if (rem.is_zero()) {
      // Dense bottom: remaining elements are {1..j}.
      for (int64_t i = 1; i <= j; i++) c[static_cast<size_t>(i) - 1] = i;
      return c;
    }
    // Largest e with binom(e, j) <= rem, with e < next element above.
    int64_t lo = j - 1;  // binom(j-1, j) = 0 <= rem
    int64_t hi = (j == m ? n - 2 : c[static_cast<size_t>(j)] - 2);
    while (lo < hi) {
      int64_t mid = lo + (hi - lo + 1) / 2;
      if (binom_big(mid, j) <= rem) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    c[static_cast<size_t>(j) - 1] = lo + 1;
    rem -= binom_big(lo, j);
  }
  require(rem.is_zero(), "composition decode: rank residue");
  return c;
}

}  // namespace

int64_t Composition::sum() const {
  int64_t s = 0;
  for (int64_t p : parts) s += p;
  return s;
}

Composition unrank_composition(int64_t n, int64_t k, const BigInt& rank) {
  require(k >= 1 && k <= n, "unrank_composition: 1 <= k <= n");
  BigInt bound = binom_big(n - 1, k - 1);
  require(rank.sign() >= 0 && rank < bound,
          "unrank_composition: rank out of range, bound " + bound.to_string());

  BigInt rem = bound;
  rem -= BigInt(1);
  rem -= rank;
  std::vector<int64_t> comp = decode_complement_colex(n, n - k, std::move(rem));

  // Parts are 1 except across complement runs: a run {a..b} merges into one
  // part of size b-a+2 in place of the partial sum a-1 -> b+1.
  Composition out;
  out.parts.assign(static_cast<size_t>(k), 1);
  size_t i = 0;
  while (i < comp.size()) {
    size_t j = i;
    while (j + 1 < comp.size() && comp[j + 1] == comp[j] + 1) j++;
    int64_t a = comp[i];
    int64_t b = comp[j];
    // part index: number of partial sums below a = (a-1) - (#complement < a)
    int64_t part_index = (a - 1) - static_cast<int64_t>(i);
    out.parts[static_cast<size_t>(part_index)] = b - a + 2;
    i = j + 1;
  }
  return out;
}

BigInt rank_composition(const Composition& c) {
  require(!c.parts.empty(), "rank_composition: empty composition");
  for (int64_t p : c.parts) require(p >= 1, "rank_composition: parts must be positive");
  int64_t n = c.sum();
  int64_t k = static_cast<int64_t>(c.count());
  // colex rank of the complement of the partial-sum set.
  BigInt colex(0);
  int64_t partial = 0;
  int64_t j = 0;  // complement elements seen
  for (size_t i = 0; i < c.parts.size(); i++) {
    for (int64_t v = partial + 1; v < partial + c.parts[i]; v++) {
      j++;
      colex += binom_big(v - 1, j);
    }
    partial += c.parts[i];
  }
  BigInt out = binom_big(n - 1, k - 1);
  out -= BigInt(1);
  out -= colex;
  return out;
}

void apply_composition(LabeledTree& t, const Composition& c, int new_label) {
  auto leaves = leaves_in_order(t);
  require(leaves.size() == c.count(), "apply_composition: parts must match leaves");
  for (size_t i = 0; i < leaves.size(); i++) {
    int64_t part = c.parts[i];
    if (part > 1) expand_leaf(t, leaves[i], new_label, static_cast<int>(part));
  }
}

namespace {

// One block-scan step of the unranking order: given (n, r), find the
// predecessor size k and split r into (composition rank, predecessor rank).
struct PeelStep {
  int64_t k = 0;
  BigInt comp_rank;
  BigInt pred_rank;
};

PeelStep peel_one(int64_t n, const BigInt& rank) {
  PeelStep out;
  BigInt r = rank;
  int64_t k = n - 1;
  BigInt binom(static_cast<unsigned long>(n - 1));  // binom(n-1, n-2)
  while (true) {
    BigInt block = binom * tables::weak_g(static_cast<unsigned>(k));
    if (r < block) break;
    r -= block;
    binom *= static_cast<unsigned long>(k - 1);
    binom.divexact_ui(static_cast<unsigned long>(n - k + 1));
    k--;
    if (k < 1) throw std::logic_error("weak unranking: scan fell off the table");
  }
  out.k = k;
  BigInt::fdiv_qr(out.comp_rank, out.pred_rank, r, tables::weak_g(static_cast<unsigned>(k)));
  return out;
}

}  // namespace

LabeledTree unrank_weak(int64_t n, const BigInt& rank) {
  require(n >= 1, "unrank_weak: n >= 1");
  const BigInt& total = tables::weak_g(static_cast<unsigned>(n));
  require(rank.sign() >= 0 && rank < total,
          "unrank_weak: rank out of range, bound " + total.to_string());

  // Peel down to the single leaf recording each step's composition, then
  // rebuild bottom-up. Iterative: the chain is ~n/(2 ln 2) long.
  std::vector<Composition> steps;
  int64_t cur_n = n;
  BigInt r = rank;
  while (cur_n > 1) {
    PeelStep step = peel_one(cur_n, r);
    steps.push_back(unrank_composition(cur_n, step.k, step.comp_rank));
    r = std::move(step.pred_rank);
    cur_n = step.k;
  }

  LabeledTree t = LabeledTree::single_leaf();
  int label = 0;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) apply_composition(t, *it, ++label);
  return t;
}

WeakPeelCounts peel_weak_rank(int64_t n, const BigInt& rank) {
  require(n >= 1, "peel_weak_rank: n >= 1");
  const BigInt& total = tables::weak_g(static_cast<unsigned>(n));
  require(rank.sign() >= 0 && rank < total,
          "peel_weak_rank: rank out of range, bound " + total.to_string());
  WeakPeelCounts out;
  int64_t cur_n = n;
  BigInt r = rank;
  while (cur_n > 1) {
    PeelStep step = peel_one(cur_n, r);
    out.steps++;
    // Internal nodes created this step = number of complement runs.
    BigInt rem = binom_big(cur_n - 1, step.k - 1);
    rem -= BigInt(1);
    rem -= step.comp_rank;
    auto comp = decode_complement_colex(cur_n, cur_n - step.k, std::move(rem));
    int64_t runs = 0;
    for (size_t i = 0; i < comp.size(); i++)
      if (i == 0 || comp[i] != comp[i - 1] + 1) runs++;
    out.internal_nodes += runs;
    r = std::move(step.pred_rank);
    cur_n = step.k;
  }
  return out;
}

BigInt rank_weak(const LabeledTree& input) {
  auto report = validate(input, ModelKind::Weak);
  require(report.valid, "rank_weak: not a valid weakly increasing tree");
  // Peel by maximal label, recovering (predecessor size, composition) pairs.
  LabeledTree t = input;
  struct Step {
    int64_t n = 0;  // size after the step
    Composition comp;
  };
  std::vector<Step> steps;
  int level = max_label(t);
  int64_t cur_size = size(t);
  while (level >= 1) {
    Composition comp;
    // Collapse every node of the current maximal label (their children are
    // leaves by chronology); parts follow the predecessor's leaf order.
    LabeledTree after = t;
    int64_t removed = 0;
    for (auto& node : after.nodes) {
      if (!node.children.empty() && node.label == level) {
        removed += static_cast<int64_t>(node.children.size()) - 1;
        node.children.clear();
        node.label = 0;
      }
    }
    auto pred_leaves = leaves_in_order(after);
    for (int32_t leaf : pred_leaves) {
      const auto& orig = t.nodes[leaf];
      comp.parts.push_back(orig.children.empty() ? 1
                                                 : static_cast<int64_t>(orig.children.size()));
    }
    steps.push_back(Step{cur_size, std::move(comp)});
    t = std::move(after);
    cur_size -= removed;
    level--;
  }
  require(cur_size == 1, "rank_weak: peeling did not reach the single leaf");

  // Fold the chain from the leaf upward.
  BigInt r(0);
  int64_t k = 1;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    int64_t n = it->n;
    // Offset of the block for predecessor size k inside size n.
    BigInt offset(0);
    BigInt binom = binom_big(n - 1, n - 2);
    for (int64_t j = n - 1; j > k; j--) {
      offset.addmul(binom, tables::weak_g(static_cast<unsigned>(j)));
      binom *= static_cast<unsigned long>(j - 1);
      binom.divexact_ui(static_cast<unsigned long>(n - j + 1));
    }
    BigInt comp_rank = rank_composition(it->comp);
    BigInt inner = comp_rank * tables::weak_g(static_cast<unsigned>(k));
    inner += r;
    r = offset + inner;
    k = n;
  }
  return r;
}

LabeledTree sample_weak(int64_t n, RngHandle& rng) {
  require(n >= 1, "sample_weak: n >= 1");
  const BigInt& total = tables::weak_g(static_cast<unsigned>(n));
  BigInt r = rng.rand_below(total);
  return unrank_weak(n, r);
}

}  // namespace schroeder
