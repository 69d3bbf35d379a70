#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "kfam/shuffle.hpp"
#include "support/brute_force.hpp"

using namespace kfam;

namespace {

std::uint64_t binomial(unsigned n, unsigned k) {
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<SubsetSpec> specs(unsigned n, std::initializer_list<std::vector<unsigned>> sets) {
  std::vector<SubsetSpec> out;
  for (const auto& s : sets) out.emplace_back(n, s);
  return out;
}

}  // namespace

TEST_CASE("string_form") {
  CHECK(string_form(SubsetSpec(5, {1, 4, 5}), {'X', 'Y'}) == "XYYXX");
  CHECK(string_form(SubsetSpec(4, {}), kLeftLetters) == "BBBB");
  CHECK(string_form(SubsetSpec(0, {}), kLeftLetters).empty());
  CHECK(string_form(SubsetSpec(3, {2, 3}), kRightLetters) == "DCC");
}

TEST_CASE("shuffles") {
  SUBCASE("({1} over [2]) with ({2,3} over [3])") {
    auto all = shuffles(SubsetSpec(2, {1}), SubsetSpec(3, {2, 3}));
    CHECK(all.size() == 10);
    CHECK(std::count(all.begin(), all.end(), "ABDCC") == 1);
    CHECK(std::count(all.begin(), all.end(), "DCACB") == 1);
    CHECK(std::set<std::string>(all.begin(), all.end()).size() == 10);
  }
  SUBCASE("empty left factor") {
    auto all = shuffles(SubsetSpec(0, {}), SubsetSpec(3, {2}));
    CHECK(all == std::vector<std::string>{"DCD"});
  }
  SUBCASE("one letter into five") {
    CHECK(shuffles(SubsetSpec(1, {}), SubsetSpec(5, {1, 2, 4})).size() == 6);
  }
}

TEST_CASE("property: shuffle counts and letter counts") {
  for (unsigned total = 0; total <= 8; ++total) {
    for (unsigned n = 0; n <= total; ++n) {
      const unsigned m = total - n;
      // Every subset of the smaller sides, sampled subsets of the larger ones.
      for (const auto& a : all_subsets(n)) {
        if (n > 4 && a.size() % 2 == 1) continue;
        for (const auto& b : all_subsets(m)) {
          if (m > 4 && b.size() % 2 == 1) continue;
          auto all = shuffles(a, b);
          CHECK(all.size() == binomial(total, n));
          for (const auto& s : all) {
            CHECK(s.size() == total);
            CHECK(std::count(s.begin(), s.end(), 'A') == static_cast<long>(a.size()));
            CHECK(std::count(s.begin(), s.end(), 'B') == static_cast<long>(n - a.size()));
            CHECK(std::count(s.begin(), s.end(), 'C') == static_cast<long>(b.size()));
            CHECK(std::count(s.begin(), s.end(), 'D') == static_cast<long>(m - b.size()));
          }
        }
      }
    }
  }
}

TEST_CASE("gp") {
  CHECK(gp("BCACDD") == SubsetSpec(6, {1, 3}));
  CHECK_FALSE(gp("BCACDD").contains(6));
  CHECK(gp("AAAA") == SubsetSpec::full(4));
  CHECK(gp("DDD").empty());
  CHECK(gp("") == SubsetSpec(0, {}));
  CHECK(gp("B") == SubsetSpec(1, {1}));
  CHECK(gp("CD") == SubsetSpec(2, {1}));
  CHECK_THROWS_AS(gp("ABE"), DomainError);
}

TEST_CASE("k1_product") {
  CHECK(k1_product(SubsetSpec(5, {1, 2, 4})) ==
        specs(6, {{2, 5}, {1, 2, 4}, {1, 2, 5}, {1, 3, 5}, {1, 3, 5}, {1, 2, 4, 6}}));
  CHECK(k1_product(SubsetSpec(0, {})) == specs(1, {{1}}));
  CHECK(k1_product(SubsetSpec(1, {})) == specs(2, {{1}, {2}}));

  auto mult = multiplicities(k1_product(SubsetSpec(5, {1, 2, 4})));
  REQUIRE(mult.size() == 5);
  CHECK(mult[3].first == SubsetSpec(6, {1, 3, 5}));
  CHECK(mult[3].second == 2);
  CHECK(multiset_to_json(specs(2, {{1}, {1}, {2}})).dump() ==
        R"([{"multiplicity":2,"set":[1]},{"multiplicity":1,"set":[2]}])");
}

TEST_CASE("property: the degree-one product formula") {
  for (unsigned m = 0; m <= 4; ++m) {
    const unsigned v = m + 1;
    for (const auto& omega : all_subsets(m)) {
      Series sum(m + 1, v);
      for (const auto& s : k1_product(omega)) sum += k_series(s, v);
      const auto right = k_series(omega, v);
      CAPTURE(omega.to_string());
      CHECK(sum == k_series(SubsetSpec(1, {}), v) * right);
      CHECK(sum == k_series(SubsetSpec(1, {1}), v) * right);
    }
  }
}

TEST_CASE("the m=5 product formula holds at V=6") {
  const SubsetSpec omega(5, {1, 2, 4});
  Series sum(6, 6);
  for (const auto& s : k1_product(omega)) sum += k_series(s, 6);
  CHECK(sum == k_series(SubsetSpec(1, {}), 6) * k_series(omega, 6));
}
