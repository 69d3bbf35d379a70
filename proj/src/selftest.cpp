#include <sstream>

#include "kfam/cli.hpp"
#include "kfam/oracle.hpp"
#include "kfam/shuffle.hpp"

namespace kfam {

namespace {

SelftestResult closure_suite(Basis basis, unsigned max_degree) {
  const std::string name = std::string("closure ") + (basis == Basis::K ? "K" : "L") + " n+m<=" +
                           std::to_string(max_degree);
  std::size_t count = 0;
  for (unsigned d = 0; d <= max_degree; ++d) {
    const unsigned v = std::max(d, 1u);
    for (unsigned n = 0; n <= d; ++n) {
      for (const auto& a : all_subsets(n)) {
        const auto fa = basis == Basis::K ? k_series(a, v) : l_series(a, v);
        for (const auto& b : all_subsets(d - n)) {
          const auto target = fa * (basis == Basis::K ? k_series(b, v) : l_series(b, v));
          try {
            const auto dec = basis == Basis::K ? decompose_k(target) : decompose_l(target);
            if (reconstruct(dec, v) != target) {
              return {name, false, "reconstruction mismatch for {" + a.to_string() + "} x {" + b.to_string() + "}"};
            }
          } catch (const DomainError& e) {
            return {name, false, e.what()};
          }
          ++count;
        }
      }
    }
  }
  return {name, true, std::to_string(count) + " products"};
}

SelftestResult mobius_suite(unsigned max_n) {
  std::size_t count = 0;
  for (unsigned n = 0; n <= max_n; ++n) {
    for (const auto& s : all_subsets(n)) {
      for (Basis b : {Basis::K, Basis::L}) {
        Decomposition single{n, b, {}};
        single.add(s, 1);
        if (change_basis(change_basis(single)) != single) {
          return {"mobius round trip", false, "failed at n=" + std::to_string(n) + " {" + s.to_string() + "}"};
        }
        ++count;
      }
    }
  }
  return {"mobius round trip n<=" + std::to_string(max_n), true, std::to_string(count) + " round trips"};
}

SelftestResult shuffle_formula_suite(unsigned max_m) {
  std::size_t count = 0;
  for (unsigned m = 0; m <= max_m; ++m) {
    const unsigned v = m + 1;
    for (const auto& omega : all_subsets(m)) {
      Series sum(m + 1, v);
      for (const auto& s : k1_product(omega)) sum += k_series(s, v);
      const auto rhs = k_series(omega, v);
      for (const auto& left : {SubsetSpec(1, {}), SubsetSpec(1, {1})}) {
        if (sum != k_series(left, v) * rhs) {
          return {"shuffle formula", false, "failed for m=" + std::to_string(m) + " {" + omega.to_string() + "}"};
        }
      }
      ++count;
    }
  }
  return {"shuffle formula m<=" + std::to_string(max_m), true, std::to_string(count) + " right factors"};
}

SelftestResult case_table_suite(unsigned max_m) {
  std::size_t count = 0;
  for (unsigned m = 0; m <= max_m; ++m) {
    const unsigned v = m + 1;
    for (const auto& omega : all_subsets(m)) {
      const auto prod = k_series(SubsetSpec(1, {}), v) * k_series(omega, v);
      for (const auto& mono : all_monomials(m + 1, v)) {
        if (case_table_coefficient(mono, omega) != prod.coefficient(mono)) {
          return {"case-table coefficients", false,
                  "mismatch at " + mono.to_string() + " for {" + omega.to_string() + "}"};
        }
        ++count;
      }
    }
  }
  return {"case-table coefficients m<=" + std::to_string(max_m), true, std::to_string(count) + " coefficients"};
}

SelftestResult q_suite() {
  const auto q3 = q_square_in_span(3);
  const auto q2 = q_square_in_span(2);
  const bool ok = !q3.solvable && q2.solvable;
  std::ostringstream detail;
  detail << "q=3 " << (q3.solvable ? "in span" : "outside span") << ", q=2 "
         << (q2.solvable ? "in span" : "outside span");
  return {"base-q rigidity", ok, detail.str()};
}

}  // namespace

std::vector<SelftestResult> run_selftest(const std::function<void(const SelftestResult&)>& on_result) {
  std::vector<SelftestResult> results;
  auto record = [&](SelftestResult r) {
    if (on_result) on_result(r);
    results.push_back(std::move(r));
  };
  record(closure_suite(Basis::L, 5));
  record(closure_suite(Basis::K, 5));
  record(mobius_suite(6));
  record(shuffle_formula_suite(4));
  record(case_table_suite(4));
  record(q_suite());
  return results;
}

}  // namespace kfam
