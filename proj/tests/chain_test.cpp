#include "doctest.h"

#include <atomic>
#include <map>
#include <vector>

#include "sphom/chain.hpp"
#include "sphom/lie.hpp"
#include "sphom/littlewood.hpp"

using namespace sphom;

namespace {

using DimMap = std::map<unsigned, Integer>;

DimMap to_dims(std::vector<long> values) {
  DimMap dims;
  for (std::size_t i = 0; i < values.size(); ++i) dims[static_cast<unsigned>(i) + 1] = values[i];
  return dims;
}

}  // namespace

TEST_CASE("weight partitions enumerate the summands in canonical order") {
  const auto two = weight_partitions(2);
  REQUIRE(two.size() == 2);
  CHECK(two[0].parts == Partition({2}));
  CHECK(two[1].parts == Partition({1, 1}));
  CHECK(two[0].homological_degree() == 1);
  CHECK(two[1].homological_degree() == 2);
  CHECK(two[0].sf_degree() == 4);
  CHECK(two[1].sf_degree() == 6);

  CHECK(weight_partitions(0).size() == 1);
  CHECK(weight_partitions(20).size() == 627);
  for (const WeightPartition& term : weight_partitions(9)) {
    CHECK(term.weight == 9);
    CHECK(term.parts.degree() == 9);
    CHECK(term.sf_degree() == 9 + 2 * term.homological_degree());
  }
}

TEST_CASE("weight zero is the empty product") {
  const ChainDimTable table = chain_dims(0);
  REQUIRE(table.dims.size() == 1);
  CHECK(table.dims.at(0) == 1);
  CHECK(table.total() == 1);
  CHECK(table.euler() == 1);
}

TEST_CASE("odd weights vanish identically") {
  for (unsigned w : {1u, 3u, 5u}) {
    const ChainDimTable table = chain_dims(w);
    CHECK(table.weight == w);
    REQUIRE(table.dims.size() == w);
    for (const auto& [i, dim] : table.dims) {
      CHECK(i >= 1);
      CHECK(i <= w);
      CHECK(dim == 0);
    }
    CHECK(table.total() == 0);
    CHECK(table.euler() == 0);
  }
}

TEST_CASE("dimension tables for weights 2 through 12") {
  const std::map<unsigned, DimMap> expected = {
      {2, to_dims({1, 2})},
      {4, to_dims({0, 0, 6, 8})},
      {6, to_dims({5, 10, 7, 16, 41, 31})},
      {8, to_dims({3, 66, 239, 342, 293, 287, 294, 140})},
      {10, to_dims({108, 580, 1928, 4946, 8375, 8887, 6536, 4175, 2353, 722})},
      {12, to_dims({650, 6621, 29219, 78443, 152310, 227058, 254063, 206753, 123990,
                    58302, 21368, 4439})},
  };
  const std::map<unsigned, long> euler = {{2, 1}, {4, 2}, {6, 4}, {8, 6}, {10, 10}, {12, 16}};
  for (const auto& [w, dims] : expected) {
    CAPTURE(w);
    const ChainDimTable table = chain_dims(w);
    CHECK(table.dims == dims);
    CHECK(table.euler() == euler.at(w));
  }
}

TEST_CASE("weight 14 dimension table and euler characteristic") {
  const ChainDimTable table = chain_dims(14);
  CHECK(table.dims == to_dims({8817, 84756, 424358, 1400274, 3289532, 5780112, 7885801,
                               8491679, 7160718, 4634679, 2269538, 836620, 221987, 32654}));
  CHECK(table.total() == 42521525);
  CHECK(table.euler() == 23);
}

TEST_CASE("degree-one summand is the derivation module itself") {
  for (unsigned w = 2; w <= 10; w += 2) {
    const ChainDimTable table = chain_dims(w);
    CHECK(table.dims.at(1) == sp_invariant_dim(derivation_character(w).character));
  }
}

TEST_CASE("fused, materialized and checked pairings agree") {
  PlethysmStore store;
  const InvariantWeights weights(3 * 8);
  for (const WeightPartition& term : weight_partitions(8)) {
    CAPTURE(term.parts.to_string());
    const Integer fused = chain_term_dim(term, store, weights, PairingMode::fused);
    const Integer materialized =
        chain_term_dim(term, store, weights, PairingMode::materialize);
    const Integer checked = chain_term_dim(term, store, weights, PairingMode::check);
    CHECK(fused == materialized);
    CHECK(fused == checked);
  }

  ChainOptions options;
  options.pairing = PairingMode::check;
  CHECK(chain_dims(8, options).dims == chain_dims(8).dims);
}

TEST_CASE("thread count does not change the table") {
  ChainOptions four;
  four.threads = 4;
  for (unsigned w : {7u, 10u, 12u}) {
    CAPTURE(w);
    CHECK(chain_dims(w, four).dims == chain_dims(w).dims);
  }
}

TEST_CASE("per-term callback fires once per summand") {
  std::atomic<unsigned> calls{0};
  ChainOptions options;
  options.threads = 2;
  options.on_term = [&](const WeightPartition& term, double seconds) {
    CHECK(term.weight == 10);
    CHECK(seconds >= 0.0);
    ++calls;
  };
  chain_dims(10, options);
  CHECK(calls.load() == weight_partitions(10).size());
}

TEST_CASE("a shared store is reused across weights") {
  PlethysmStore store;
  ChainOptions options;
  options.store = &store;
  chain_dims(6, options);
  const auto after_first = store.stats();
  CHECK(after_first.computed > 0);
  chain_dims(6, options);
  const auto after_second = store.stats();
  CHECK(after_second.computed == after_first.computed);
  CHECK(after_second.memory_hits > after_first.memory_hits);
}

TEST_CASE("euler characteristic helper matches the table") {
  for (unsigned w = 0; w <= 12; w += 2) {
    CHECK(euler_char(w) == chain_dims(w).euler());
  }
  CHECK(euler_char(9) == 0);
}
