#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "schroeder/bijections.hpp"
#include "schroeder/distrows.hpp"
#include "schroeder/newick.hpp"
#include "schroeder/samplers.hpp"
#include "schroeder/tables.hpp"

using namespace schroeder;

namespace {

// All ordered set partitions of {1..m}: surjections onto {1..k} read as
// block assignments.
std::vector<OrderedPartition> all_ordered_partitions(int m) {
  std::vector<OrderedPartition> out;
  std::vector<int> f(m, 1);
  while (true) {
    int mx = 0;
    for (int v : f) mx = std::max(mx, v);
    bool surjective = true;
    std::vector<std::vector<int>> blocks(mx);
    for (int i = 0; i < m; i++) blocks[f[i] - 1].push_back(i + 1);
    for (const auto& b : blocks) surjective = surjective && !b.empty();
    if (surjective) {
      OrderedPartition p;
      p.blocks = blocks;
      out.push_back(std::move(p));
    }
    int at = m - 1;
    while (at >= 0 && f[at] == m) f[at--] = 1;
    if (at < 0) break;
    f[at]++;
  }
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("bijections");

TEST_CASE("runs") {
  auto r1 = runs({3, 4});
  REQUIRE(r1.size() == 1);
  CHECK(r1[0].first == 3);
  CHECK(r1[0].length == 2);
  auto r2 = runs({1, 5, 7});
  REQUIRE(r2.size() == 3);
  CHECK(r2[0].first == 1);
  CHECK(r2[1].first == 5);
  CHECK(r2[2].first == 7);
  auto r3 = runs({1, 2, 3});
  REQUIRE(r3.size() == 1);
  CHECK(r3[0].length == 3);
}

TEST_CASE("normalize") {
  OrderedPartition p = OrderedPartition::parse("3,4|1,5,7");
  CHECK(normalize(p).to_string() == "2,3|1,4,5");
  OrderedPartition complete = OrderedPartition::parse("1,3|2");
  CHECK(normalize(complete).to_string() == complete.to_string());
  CHECK(normalize(OrderedPartition::parse("10|2")).to_string() == "2|1");
}

TEST_CASE("permutation map on the worked example") {
  CHECK(to_newick(perm_to_tree(Permutation::parse("1,2"))) == "(x,x)1;");
  CHECK(to_newick(perm_to_tree(Permutation::parse("1,2,3"))) == "(x,x,x)1;");
  CHECK_THROWS_AS(perm_to_tree(Permutation::parse("2,1")), std::invalid_argument);

  // the size-8 construction, step by step
  CHECK(to_newick(perm_to_tree(Permutation::parse("4,1,2,3"))) == "((x,x)2,x,x)1;");
  CHECK(to_newick(perm_to_tree(Permutation::parse("4,1,2,5,3"))) == "((x,x)2,x,(x,x)3)1;");
  LabeledTree final8 = perm_to_tree(Permutation::parse("4,1,2,5,3,8,6,7"));
  CHECK(to_newick(final8) == "((x,x)2,x,(x,x,(x,x)4,x)3)1;");
  CHECK(tree_to_perm(final8).to_string() == "4,1,2,5,3,8,6,7");
}

TEST_CASE("permutation map is a bijection at small sizes") {
  for (int n = 2; n <= 6; n++) {
    std::vector<int> vals(n);
    for (int i = 0; i < n; i++) vals[i] = i + 1;
    std::set<std::string> images;
    int64_t class_size = 0;
    do {
      Permutation sigma{vals};
      if (!sigma.one_before_two()) continue;
      class_size++;
      LabeledTree t = perm_to_tree(sigma);
      CHECK(validate(t, ModelKind::Strong).valid);
      CHECK(size(t) == n);
      images.insert(to_newick(t));
      Permutation back = tree_to_perm(t);
      CHECK(back.values == sigma.values);
    } while (std::next_permutation(vals.begin(), vals.end()));
    CHECK(BigInt(class_size) == strong_count(n));
    CHECK(BigInt(static_cast<long>(images.size())) == strong_count(n));
    // image set == process output set
    std::set<std::string> oracle;
    for (const auto& t : exhaustive_strong_all(n)) oracle.insert(to_newick(t));
    CHECK(images == oracle);
  }
}

TEST_CASE("partition map on the worked example") {
  CHECK(to_newick(partition_to_tree(OrderedPartition::parse("1,2"))) == "(x,x,x)1;");
  CHECK(to_newick(partition_to_tree(OrderedPartition::parse("1"))) == "(x,x)1;");
  LabeledTree t = partition_to_tree(OrderedPartition::parse("3,4|1,5,7|2,6"));
  CHECK(size(t) == 8);
  CHECK(to_newick(t) == "((x,(x,x)3)2,x,(x,(x,x)3,x)2)1;");
  CHECK(tree_to_partition(t).to_string() == "3,4|1,5,7|2,6");
  CHECK(tree_to_partition(parse_newick("(x,x)1;")).to_string() == "1");
  // incomplete partitions are rejected by the forward map
  CHECK_THROWS_AS(partition_to_tree(OrderedPartition::parse("3,4")), std::invalid_argument);
}

TEST_CASE("partition map is a bijection at small sizes") {
  for (int m = 1; m <= 5; m++) {
    auto partitions = all_ordered_partitions(m);
    CHECK(BigInt(static_cast<long>(partitions.size())) == weak_count(m + 1));
    std::set<std::string> images;
    for (const auto& p : partitions) {
      LabeledTree t = partition_to_tree(p);
      CHECK(validate(t, ModelKind::Weak).valid);
      CHECK(size(t) == m + 1);
      images.insert(to_newick(t));
      CHECK(tree_to_partition(t).to_string() == p.to_string());
    }
    std::set<std::string> oracle;
    for (const auto& t : exhaustive_weak_all(m + 1)) oracle.insert(to_newick(t));
    CHECK(images == oracle);
  }
}

TEST_CASE("text formats") {
  CHECK(Permutation::parse("4,1,2,5,3").to_string() == "4,1,2,5,3");
  CHECK_THROWS_AS(Permutation::parse("4,1,1"), std::invalid_argument);
  CHECK(OrderedPartition::parse("3,4|1,5,7|2,6").to_string() == "3,4|1,5,7|2,6");
  CHECK_THROWS_AS(OrderedPartition::parse("1,1|2"), std::invalid_argument);
  CHECK_THROWS_AS(OrderedPartition::parse(""), std::invalid_argument);
}

TEST_SUITE_END();
