#include "kfam/basis.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <set>

namespace kfam {

std::string to_string(Basis b) { return b == Basis::K ? "K" : "L"; }

Basis parse_basis(std::string_view text) {
  if (text == "K") return Basis::K;
  if (text == "L") return Basis::L;
  throw DomainError("unknown basis '" + std::string(text) + "', expected K or L");
}

void Decomposition::add(const SubsetSpec& spec, const BigInt& c) {
  if (spec.n() != degree) {
    throw InvariantViolation("basis element of degree " + std::to_string(spec.n()) +
                             " in a decomposition of degree " + std::to_string(degree));
  }
  if (c == 0) return;
  auto [it, inserted] = coeffs.try_emplace(spec, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs.erase(it);
  }
}

NotDivisible::NotDivisible(const SubsetSpec& s, const Monomial& w, const BigInt& value)
    : DomainError("coefficient " + value.str() + " of " + w.to_string() + " is not divisible by 2^" +
                  std::to_string(w.distinct_naturals()) + " while processing {" + s.to_string() +
                  "}; the target is outside the span"),
      set(s),
      witness(w) {}

NonzeroResidual::NonzeroResidual(const Monomial& w, const BigInt& value)
    : DomainError("residual keeps " + value.str() + "*" + w.to_string() +
                  " after elimination; the target is outside the span"),
      witness(w) {}

namespace {

Decomposition mobius(const SubsetSpec& spec, Basis target_basis) {
  Decomposition dec{spec.n(), target_basis, {}};
  // Walk the submasks of spec.mask().
  const std::uint32_t full = spec.mask();
  std::uint32_t sub = full;
  while (true) {
    auto t = SubsetSpec::from_mask(spec.n(), sub);
    dec.add(t, (t.size() % 2 == 0) ? BigInt(1) : BigInt(-1));
    if (sub == 0) break;
    sub = (sub - 1) & full;
  }
  return dec;
}

}  // namespace

Decomposition k_from_l(const SubsetSpec& spec) { return mobius(spec, Basis::L); }
Decomposition l_from_k(const SubsetSpec& spec) { return mobius(spec, Basis::K); }

Decomposition change_basis(const Decomposition& dec) {
  const Basis other = dec.basis == Basis::K ? Basis::L : Basis::K;
  Decomposition out{dec.degree, other, {}};
  for (const auto& [spec, c] : dec.coeffs) {
    auto expansion = dec.basis == Basis::K ? k_from_l(spec) : l_from_k(spec);
    for (const auto& [t, sign] : expansion.coeffs) out.add(t, c * sign);
  }
  return out;
}

std::vector<SubsetSpec> processing_order(unsigned d) {
  // all_subsets is already size-lex sorted; a stable sort on the number of
  // forced equalities makes the order extend inclusion of equality patterns.
  auto order = all_subsets(d);
  std::stable_sort(order.begin(), order.end(), [](const SubsetSpec& a, const SubsetSpec& b) {
    return std::popcount(forced_equalities(a)) < std::popcount(forced_equalities(b));
  });
  return order;
}

std::vector<SubsetSpec> size_lex_order(unsigned d) { return all_subsets(d); }

Decomposition decompose_l(const Series& target) { return decompose_l(target, processing_order(target.degree())); }

Decomposition decompose_l(const Series& target, const std::vector<SubsetSpec>& order) {
  const unsigned d = target.degree();
  const unsigned trunc = target.trunc();
  if (trunc < d) throw TruncationTooSmall(trunc, d);
  std::set<std::uint32_t> seen;
  for (const auto& s : order) {
    if (s.n() != d) throw InvariantViolation("processing order mixes degrees");
    seen.insert(s.mask());
  }
  if (order.size() != (std::size_t{1} << d) || seen.size() != order.size()) {
    throw InvariantViolation("processing order must list every subset of [" + std::to_string(d) + "] once");
  }

  Decomposition dec{d, Basis::L, {}};
  Series residual = target;
  for (const auto& xi : order) {
    auto w = m_generic_monomial(xi, trunc);
    if (!w) continue;
    BigInt value = residual.coefficient(*w);
    if (value == 0) continue;
    BigInt unit = BigInt(1) << w->distinct_naturals();
    if (value % unit != 0) throw NotDivisible(xi, *w, value);
    BigInt c = value / unit;
    residual -= l_series(xi, trunc) * c;
    dec.add(xi, c);
  }
  if (!residual.is_zero()) {
    const auto& [m, c] = *residual.terms().begin();
    throw NonzeroResidual(m, c);
  }
  return dec;
}

Decomposition decompose_k(const Series& target) { return change_basis(decompose_l(target)); }

Series reconstruct(const Decomposition& dec, unsigned trunc) {
  if (trunc < dec.degree) throw TruncationTooSmall(trunc, dec.degree);
  Series out(dec.degree, trunc);
  for (const auto& [spec, c] : dec.coeffs) {
    out += (dec.basis == Basis::K ? k_series(spec, trunc) : l_series(spec, trunc)) * c;
  }
  return out;
}

nlohmann::json bigint_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

BigInt bigint_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw DomainError("expected an integer, got " + j.dump());
}

nlohmann::json to_json(const Decomposition& dec) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [spec, c] : dec.coeffs) {
    terms.push_back({{"set", spec.members()}, {"coeff", bigint_to_json(c)}});
  }
  return {{"degree", dec.degree}, {"basis", to_string(dec.basis)}, {"terms", terms}};
}

Decomposition decomposition_from_json(const nlohmann::json& j) {
  try {
    Decomposition dec;
    dec.degree = j.at("degree").get<unsigned>();
    dec.basis = parse_basis(j.at("basis").get<std::string>());
    for (const auto& t : j.at("terms")) {
      dec.add(SubsetSpec(dec.degree, t.at("set").get<std::vector<unsigned>>()), bigint_from_json(t.at("coeff")));
    }
    return dec;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed decomposition JSON: ") + e.what());
  }
}

}  // namespace kfam
