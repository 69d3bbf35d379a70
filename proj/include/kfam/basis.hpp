#pragma once

// Change of basis between the K and L families, and exact decomposition of a
// homogeneous series into an integer combination of L_{d,S} (or K_{d,S}).

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "kfam/core.hpp"
#include "kfam/families.hpp"

namespace kfam {

enum class Basis { K, L };

std::string to_string(Basis b);
Basis parse_basis(std::string_view text);

// target = sum over coeffs of coeff * basis_{degree, set}.
struct Decomposition {
  unsigned degree = 0;
  Basis basis = Basis::L;
  std::map<SubsetSpec, BigInt, SizeLexLess> coeffs;

  // Adds c to one coefficient, dropping it when the total becomes zero.
  void add(const SubsetSpec& spec, const BigInt& c);

  bool operator==(const Decomposition&) const = default;
};

// Coefficient c' read at the generic monomial w was not divisible by the
// coefficient of w in L_{d,set}.
class NotDivisible : public DomainError {
 public:
  NotDivisible(const SubsetSpec& set, const Monomial& witness, const BigInt& value);
  SubsetSpec set;
  Monomial witness;
};

// Elimination finished with a nonzero remainder.
class NonzeroResidual : public DomainError {
 public:
  NonzeroResidual(const Monomial& witness, const BigInt& value);
  Monomial witness;
};

// K_{n,S} = sum_{T subset S} (-1)^{|T|} L_{n,T}.
Decomposition k_from_l(const SubsetSpec& spec);
// L_{n,S} = sum_{T subset S} (-1)^{|T|} K_{n,T}.
Decomposition l_from_k(const SubsetSpec& spec);

// Rewrites every basis element of dec in the other basis and collects terms.
Decomposition change_basis(const Decomposition& dec);

// Order in which decompose_l visits the subsets of [d]: by the number of
// equalities g_j = g_{j+1} the subset forces, then by size, then
// lexicographically. A subset is never visited before one whose forced
// equalities are a strict subset of its own, so each elimination step leaves
// the generic coefficients of earlier subsets untouched.
std::vector<SubsetSpec> processing_order(unsigned d);

// Plain size-then-lex order. Elimination in this order still reaches a zero
// residual, but coefficients may land on several subsets with equal L series.
std::vector<SubsetSpec> size_lex_order(unsigned d);

Decomposition decompose_l(const Series& target);
// Same elimination with a caller-chosen visiting order (must list every
// subset of [degree] exactly once).
Decomposition decompose_l(const Series& target, const std::vector<SubsetSpec>& order);
Decomposition decompose_k(const Series& target);

Series reconstruct(const Decomposition& dec, unsigned trunc);

// {"degree": d, "basis": "K"|"L", "terms": [{"set": [...], "coeff": c}, ...]}
nlohmann::json to_json(const Decomposition& dec);
Decomposition decomposition_from_json(const nlohmann::json& j);

// Integer coefficients that fit in 64 bits become JSON numbers, larger ones
// decimal strings.
nlohmann::json bigint_to_json(const BigInt& v);
BigInt bigint_from_json(const nlohmann::json& j);

}  // namespace kfam
