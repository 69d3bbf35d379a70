#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "kfam/families.hpp"
#include "support/brute_force.hpp"

using namespace kfam;

namespace {

Monomial mono(std::string_view s) { return Monomial::parse(s); }

Series series(unsigned degree, unsigned trunc, std::initializer_list<std::pair<const char*, long>> terms) {
  Series s(degree, trunc);
  for (const auto& [m, c] : terms) s.add_term(mono(m), c);
  return s;
}

}  // namespace

TEST_CASE("SubsetSpec parsing and validation") {
  auto s = SubsetSpec::parse(5, "1,2,4");
  CHECK(s.members() == std::vector<unsigned>{1, 2, 4});
  CHECK(s.size() == 3);
  CHECK(s.to_string() == "1,2,4");
  CHECK(SubsetSpec::parse(3, "").empty());
  CHECK_THROWS_AS(SubsetSpec::parse(3, "4"), DomainError);
  CHECK_THROWS_AS(SubsetSpec::parse(3, "0"), DomainError);
  CHECK_THROWS_AS(SubsetSpec::parse(3, "2,1"), DomainError);
  CHECK_THROWS_AS(SubsetSpec::parse(3, "1,"), DomainError);
  CHECK_THROWS_AS(SubsetSpec(3, {1, 5}), DomainError);
}

TEST_CASE("all_subsets is ordered by size then lexicographically") {
  auto subs = all_subsets(3);
  REQUIRE(subs.size() == 8);
  std::vector<std::string> text;
  for (const auto& s : subs) text.push_back(s.to_string());
  CHECK(text == std::vector<std::string>{"", "1", "2", "3", "1,2", "1,3", "2,3", "1,2,3"});
}

TEST_CASE("k_series (2,{1}) at V=2") {
  auto k = k_series(SubsetSpec(2, {1}), 2);
  // The eight listed terms.
  CHECK(k.coefficient(mono("x0*x1")) == 2);
  CHECK(k.coefficient(mono("x0*x2")) == 2);
  CHECK(k.coefficient(mono("x1*xinf")) == 2);
  CHECK(k.coefficient(mono("x2*xinf")) == 2);
  CHECK(k.coefficient(mono("x1^2")) == 2);
  CHECK(k.coefficient(mono("x2^2")) == 2);
  CHECK(k.coefficient(mono("x1*x2")) == 4);
  CHECK(k.coefficient(mono("xinf^2")) == 1);
  // The tuple (0, inf) never triples up at position 1, so it is admitted too.
  CHECK(k.coefficient(mono("x0*xinf")) == 1);
  CHECK(k.size() == 9);
  CHECK(k.coefficient(mono("x0^2")) == 0);
}

TEST_CASE("l_series (3,{1})") {
  CHECK(l_series(SubsetSpec(3, {1}), 1) ==
        series(3, 1, {{"x0^3", 1}, {"x0^2*x1", 2}, {"x0^2*xinf", 1}}));
  CHECK(l_series(SubsetSpec(3, {1}), 2) ==
        series(3, 2, {{"x0^3", 1}, {"x0^2*x1", 2}, {"x0^2*x2", 2}, {"x0^2*xinf", 1}}));
}

TEST_CASE("degenerate family members") {
  for (unsigned v = 1; v <= 3; ++v) {
    CHECK(l_series(SubsetSpec(0, {}), v) == Series::one(v));
    for (unsigned n = 1; n <= 5; ++n) {
      CAPTURE(n);
      CHECK(l_series(SubsetSpec::full(n), v).is_zero());
      CHECK(l_series(SubsetSpec(n, {}), v) == k_series(SubsetSpec(n, {}), v));
    }
    CHECK(k_series(SubsetSpec(1, {}), v) == k_series(SubsetSpec(1, {1}), v));
  }
}

TEST_CASE("k_series_q") {
  for (unsigned n = 0; n <= 4; ++n) {
    for (const auto& s : all_subsets(n)) CHECK(k_series_q(s, 4, 2) == k_series(s, 4));
  }
  for (long q : {-2L, 1L, 3L, 5L}) {
    CAPTURE(q);
    auto k = k_series_q(SubsetSpec(1, {}), 2, q);
    auto sq = k * k;
    CHECK(sq.coefficient(mono("x1^2")) == q * q);
    CHECK(sq.coefficient(mono("x0*x1")) == 2 * q);
  }
  CHECK_THROWS_AS(k_series_q(SubsetSpec(1, {}), 2, 0), DomainError);
}

TEST_CASE("is_l_special") {
  CHECK(is_l_special(mono("x0^3*x1^3*x4*x6^5*xinf^2")));
  CHECK_FALSE(is_l_special(mono("x0^2*x1^2*x2")));
  CHECK_FALSE(is_l_special(mono("x0*x2^3")));
  CHECK_FALSE(is_l_special(mono("x3*xinf")));
  CHECK(is_l_special(mono("1")));
}

TEST_CASE("m_generic_monomial") {
  auto w = m_generic_monomial(SubsetSpec(14, {1, 2, 5, 9, 11, 14}), 14);
  REQUIRE(w);
  CHECK(w->to_string() == "x0^3*x1^3*x2*x3^5*xinf^2");
  for (unsigned n = 1; n <= 6; ++n) CHECK_FALSE(m_generic_monomial(SubsetSpec::full(n), n));
  CHECK(m_generic_monomial(SubsetSpec(2, {}), 2) == mono("x1*x2"));
  CHECK(m_generic_monomial(SubsetSpec(2, {1}), 2) == mono("x0^2"));
  CHECK_THROWS_AS(m_generic_monomial(SubsetSpec(3, {}), 2), TruncationTooSmall);
}

TEST_CASE("m_membership") {
  const SubsetSpec big(14, {1, 2, 5, 9, 11, 14});
  CHECK(m_membership(mono("x0^3*x1^3*x2*x3^5*xinf^2"), big));
  CHECK(m_membership(mono("x0^3*x1^3*x4*x6^5*xinf^2"), big));
  // Adding 10 forces nothing new, so the generated sets coincide.
  CHECK(m_membership(mono("x0^3*x1^3*x4*x6^5*xinf^2"), SubsetSpec(14, {1, 2, 5, 9, 10, 11, 14})));
  CHECK_FALSE(m_membership(mono("x1*x2"), SubsetSpec(2, {1})));
  CHECK(m_membership(mono("x0^2"), SubsetSpec(2, {1})));
  CHECK_FALSE(m_membership(mono("x0^2"), SubsetSpec(2, {})));
}

TEST_CASE("property: coefficients are powers of two on the support") {
  for (unsigned n = 0; n <= 4; ++n) {
    const unsigned v = std::max(n, 1u);
    for (const auto& s : all_subsets(n)) {
      auto k = k_series(s, v);
      auto l = l_series(s, v);
      auto k3 = k_series_q(s, v, 3);
      for (const auto& m : all_monomials(n, v)) {
        CAPTURE(m.to_string());
        CHECK(k.coefficient(m) == testing::family_coefficient(m, s, 2, false));
        CHECK(l.coefficient(m) == testing::family_coefficient(m, s, 2, true));
        CHECK(k3.coefficient(m) == testing::family_coefficient(m, s, 3, false));
      }
    }
  }
}

TEST_CASE("property: family series are quasisymmetric in the natural variables") {
  for (unsigned n = 0; n <= 4; ++n) {
    for (const auto& s : all_subsets(n)) {
      CHECK(relabel_check(k_series(s, n + 1)));
      CHECK(relabel_check(l_series(s, n + 1)));
    }
  }
  CHECK(relabel_check(k_series(SubsetSpec(2, {1}), 4) * l_series(SubsetSpec(2, {}), 4)));
}

TEST_CASE("property: members of M are L-special") {
  for (unsigned n = 0; n <= 5; ++n) {
    const unsigned v = std::max(n, 1u);
    const auto monos = all_monomials(n, v);
    for (const auto& s : all_subsets(n)) {
      for (const auto& m : monos) {
        if (m_membership(m, s)) CHECK(is_l_special(m));
      }
      if (auto w = m_generic_monomial(s, v)) {
        CHECK(m_membership(*w, s));
        CHECK(is_l_special(*w));
      }
    }
  }
}

TEST_CASE("property: L-special monomials fall in exactly one M class") {
  for (unsigned n = 0; n <= 5; ++n) {
    const unsigned v = std::max(n, 1u);
    const auto subs = all_subsets(n);
    for (const auto& m : all_monomials(n, v)) {
      std::vector<SubsetSpec> owners;
      for (const auto& s : subs) {
        if (m_membership(m, s)) owners.push_back(s);
      }
      CAPTURE(m.to_string());
      if (!is_l_special(m)) {
        CHECK(owners.empty());
        continue;
      }
      REQUIRE_FALSE(owners.empty());
      const auto first = l_series(owners.front(), v);
      for (const auto& s : owners) CHECK(l_series(s, v) == first);
    }
  }
}

TEST_CASE("property: an empty M means a zero L series") {
  for (unsigned n = 0; n <= 6; ++n) {
    for (const auto& s : all_subsets(n)) {
      const bool empty = !m_generic_monomial(s, std::max(n, 1u));
      CHECK(empty == l_series(s, std::max(n, 1u)).is_zero());
    }
  }
}

TEST_CASE("property: L_S meets M_T exactly when T forces every equality S forces") {
  for (unsigned n = 0; n <= 4; ++n) {
    const unsigned v = std::max(n, 1u);
    const auto monos = all_monomials(n, v);
    for (const auto& lam : all_subsets(n)) {
      const auto l = l_series(lam, v);
      for (const auto& om : all_subsets(n)) {
        bool meets = false;
        for (const auto& m : monos) {
          if (m_membership(m, om) && l.coefficient(m) != 0) meets = true;
        }
        const auto fl = forced_equalities(lam);
        const auto fo = forced_equalities(om);
        const bool predicted = m_generic_monomial(om, v).has_value() && (fl & ~fo) == 0;
        CAPTURE(lam.to_string());
        CAPTURE(om.to_string());
        CHECK(meets == predicted);
        // Set inclusion is sufficient on its own.
        if (lam.is_subset_of(om) && m_generic_monomial(om, v)) CHECK(meets);
      }
    }
  }
}

TEST_CASE("plain set inclusion is not necessary for L_S to meet M_T") {
  // {2} forces g_1 = g_2 = g_3; {1,3} forces g_0 = ... = g_4 which includes it.
  const SubsetSpec lam(5, {2});
  const SubsetSpec om(5, {1, 3});
  auto w = m_generic_monomial(om, 5);
  REQUIRE(w);
  CHECK(l_series(lam, 5).coefficient(*w) != 0);
  CHECK_FALSE(lam.is_subset_of(om));
  CHECK(l_series(lam, 5) != l_series(om, 5));
}
