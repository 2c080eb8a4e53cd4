#include "doctest.h"

#include <unordered_map>

#include "sphom/partition.hpp"

using namespace sphom;

TEST_CASE("construction validates weak decrease and positivity") {
  CHECK(Partition({4, 2, 2, 1}).degree() == 9);
  CHECK(Partition().empty());
  CHECK_THROWS_AS(Partition({2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({1, 0}), std::invalid_argument);
}

TEST_CASE("conjugate transposes the diagram") {
  CHECK(Partition({4, 2, 1}).conjugate() == Partition({3, 2, 1, 1}));
  CHECK(Partition().conjugate() == Partition());
  for (unsigned n = 0; n <= 8; ++n) {
    for (const Partition& p : partitions_of(n)) {
      CHECK(p.conjugate().conjugate() == p);
      CHECK(p.conjugate().degree() == n);
    }
  }
}

TEST_CASE("even-conjugate test agrees with the conjugate diagram") {
  CHECK(Partition({2, 2}).has_even_conjugate());
  CHECK(Partition({1, 1}).has_even_conjugate());
  CHECK_FALSE(Partition({2, 1}).has_even_conjugate());
  CHECK(Partition({3, 3, 1, 1}).has_even_conjugate());
  CHECK_FALSE(Partition({4, 4, 2, 1}).has_even_conjugate());
  for (unsigned n = 0; n <= 10; ++n) {
    for (const Partition& p : partitions_of(n)) {
      const Partition conj = p.conjugate();
      bool all_even = true;
      for (auto part : conj.parts()) all_even &= part % 2 == 0;
      CHECK(p.has_even_conjugate() == all_even);
    }
  }
}

TEST_CASE("scaled and merged") {
  CHECK(Partition({3, 1}).scaled(2) == Partition({6, 2}));
  CHECK(Partition::merged(Partition({3, 1}), Partition({2, 1})) == Partition({3, 2, 1, 1}));
  CHECK(Partition::merged(Partition(), Partition({2})) == Partition({2}));
}

TEST_CASE("multiplicities group equal parts, largest first") {
  auto mults = Partition({5, 3, 3, 3, 1, 1}).multiplicities();
  REQUIRE(mults.size() == 3);
  CHECK(mults[0] == std::pair<Partition::Part, unsigned>{5, 1});
  CHECK(mults[1] == std::pair<Partition::Part, unsigned>{3, 3});
  CHECK(mults[2] == std::pair<Partition::Part, unsigned>{1, 2});
}

TEST_CASE("text round trip") {
  CHECK(Partition({3, 1, 1}).to_string() == "3,1,1");
  CHECK(Partition().to_string() == "-");
  CHECK(Partition::from_string("3,1,1") == Partition({3, 1, 1}));
  CHECK(Partition::from_string("-") == Partition());
  CHECK_THROWS_AS(Partition::from_string("1,2"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::from_string("0"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::from_string("2,"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::from_string("x"), std::invalid_argument);
}

TEST_CASE("canonical order is degree, then descending lexicographic") {
  std::vector<Partition> fours = partitions_of(4);
  REQUIRE(fours.size() == 5);
  CHECK(fours[0] == Partition({4}));
  CHECK(fours[1] == Partition({3, 1}));
  CHECK(fours[2] == Partition({2, 2}));
  CHECK(fours[3] == Partition({2, 1, 1}));
  CHECK(fours[4] == Partition({1, 1, 1, 1}));
  for (std::size_t i = 0; i + 1 < fours.size(); ++i) {
    CHECK(canonical_less(fours[i], fours[i + 1]));
    CHECK_FALSE(canonical_less(fours[i + 1], fours[i]));
  }
  CHECK(canonical_less(Partition({3}), Partition({1, 1, 1, 1})));  // degree first
}

TEST_CASE("enumeration count matches the pentagonal recurrence") {
  for (unsigned n = 0; n <= 30; ++n) {
    CHECK(Integer(static_cast<unsigned long>(partitions_of(n).size())) == partition_count(n));
  }
  CHECK(partition_count(20) == 627);
  CHECK(partition_count(36) == 17977);
  CHECK(partition_count(60) == 966467);
}

TEST_CASE("max_part caps the enumeration") {
  std::vector<Partition> capped = partitions_of(8, 3);
  unsigned direct = 0;
  for (const Partition& p : partitions_of(8)) {
    if (p.empty() || p.parts().front() <= 3) ++direct;
  }
  CHECK(capped.size() == direct);
  for (const Partition& p : capped) {
    REQUIRE(!p.empty());
    CHECK(p.parts().front() <= 3);
  }
}

TEST_CASE("z factor") {
  CHECK(z_factor(Partition()) == 1);
  CHECK(z_factor(Partition({3})) == 3);
  CHECK(z_factor(Partition({1, 1, 1})) == 6);
  CHECK(z_factor(Partition({2, 2, 1})) == 8);  // 2^2 2! * 1 1!
  // Class equation of S_n: the class sizes n!/z_lambda sum to n!.
  for (unsigned n = 1; n <= 12; ++n) {
    Integer total = 0;
    for (const Partition& p : partitions_of(n)) total += factorial(n) / z_factor(p);
    CHECK(total == factorial(n));
  }
}

TEST_CASE("hash map supports heterogeneous span lookup") {
  std::unordered_map<Partition, int, PartitionHash, PartitionEq> map;
  map.emplace(Partition({3, 1}), 7);
  std::vector<Partition::Part> probe{3, 1};
  auto it = map.find(std::span<const Partition::Part>(probe));
  REQUIRE(it != map.end());
  CHECK(it->second == 7);
}
