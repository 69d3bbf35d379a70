#include "kfam/families.hpp"

#include <algorithm>
#include <bit>
#include <charconv>

namespace kfam {

SubsetSpec::SubsetSpec(unsigned n, std::vector<unsigned> members) : n_(n) {
  if (n > kMaxN) throw DomainError("n=" + std::to_string(n) + " exceeds the supported maximum");
  for (unsigned i : members) {
    if (i < 1 || i > n) {
      throw DomainError("set member " + std::to_string(i) + " is outside [1, " + std::to_string(n) + "]");
    }
    mask_ |= 1u << (i - 1);
  }
}

SubsetSpec SubsetSpec::from_mask(unsigned n, std::uint32_t mask) {
  if (n > kMaxN || (n < 32 && (mask >> n) != 0)) throw DomainError("mask does not fit [n]");
  SubsetSpec s;
  s.n_ = n;
  s.mask_ = mask;
  return s;
}

SubsetSpec SubsetSpec::full(unsigned n) { return from_mask(n, n == 0 ? 0u : (~0u >> (32 - n))); }

SubsetSpec SubsetSpec::parse(unsigned n, std::string_view text) {
  std::vector<unsigned> members;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    auto tok = text.substr(pos, end - pos);
    unsigned v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || p != tok.data() + tok.size()) {
      throw DomainError("bad set '" + std::string(text) + "'");
    }
    if (!members.empty() && v <= members.back()) {
      throw DomainError("set '" + std::string(text) + "' is not strictly ascending");
    }
    members.push_back(v);
    pos = end + 1;
    if (end + 1 == text.size()) throw DomainError("bad set '" + std::string(text) + "'");
  }
  return SubsetSpec(n, std::move(members));
}

unsigned SubsetSpec::size() const { return static_cast<unsigned>(std::popcount(mask_)); }

std::vector<unsigned> SubsetSpec::members() const {
  std::vector<unsigned> out;
  for (unsigned i = 1; i <= n_; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

std::string SubsetSpec::to_string() const {
  std::string s;
  for (unsigned i : members()) {
    if (!s.empty()) s += ',';
    s += std::to_string(i);
  }
  return s;
}

bool SizeLexLess::operator()(const SubsetSpec& a, const SubsetSpec& b) const {
  if (a.n() != b.n()) return a.n() < b.n();
  if (a.size() != b.size()) return a.size() < b.size();
  auto ma = a.members();
  auto mb = b.members();
  return ma < mb;
}

std::vector<SubsetSpec> all_subsets(unsigned n) {
  std::vector<SubsetSpec> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) out.push_back(SubsetSpec::from_mask(n, mask));
  std::sort(out.begin(), out.end(), SizeLexLess{});
  return out;
}

std::uint64_t forced_equalities(const SubsetSpec& spec) {
  std::uint64_t bits = 0;
  for (unsigned j = 0; j <= spec.n(); ++j) {
    if (spec.contains(j) || spec.contains(j + 1)) bits |= std::uint64_t{1} << j;
  }
  return bits;
}

namespace {

std::vector<ExtIndex> bordered(const Monomial& m) {
  std::vector<ExtIndex> g;
  g.reserve(m.degree() + 2);
  g.push_back(ExtIndex::zero());
  for (ExtIndex i : m.tuple()) g.push_back(i);
  g.push_back(ExtIndex::inf());
  return g;
}

// Shared tuple enumeration for the K and L definitions.
template <typename Keep>
Series family_series(const SubsetSpec& spec, unsigned trunc, const BigInt& base, Keep keep) {
  if (trunc < 1) throw DomainError("truncation V must be at least 1");
  const unsigned n = spec.n();
  Series out(n, trunc);
  std::vector<ExtIndex> g(n + 2);
  g.front() = ExtIndex::zero();
  g.back() = ExtIndex::inf();
  for_each_nondecreasing_tuple(n, trunc, [&](std::span<const ExtIndex> inner) {
    std::copy(inner.begin(), inner.end(), g.begin() + 1);
    if (!keep(g)) return;
    unsigned naturals = 0;
    for (unsigned i = 1; i <= n; ++i) {
      if (g[i].is_nat() && g[i] != g[i - 1]) ++naturals;
    }
    out.add_term(monomial_from_tuple(inner), boost::multiprecision::pow(base, naturals));
  });
  return out;
}

bool triple_equal(const std::vector<ExtIndex>& g, unsigned i) { return g[i - 1] == g[i] && g[i] == g[i + 1]; }

bool k_condition(const std::vector<ExtIndex>& g, const SubsetSpec& spec) {
  for (unsigned i : spec.members()) {
    if (triple_equal(g, i)) return false;
  }
  return true;
}

bool l_condition(const std::vector<ExtIndex>& g, const SubsetSpec& spec) {
  for (unsigned i : spec.members()) {
    if (!triple_equal(g, i)) return false;
  }
  return true;
}

}  // namespace

std::uint64_t equality_pattern(const Monomial& m) {
  auto g = bordered(m);
  std::uint64_t bits = 0;
  for (unsigned j = 0; j + 1 < g.size(); ++j) {
    if (g[j] == g[j + 1]) bits |= std::uint64_t{1} << j;
  }
  return bits;
}

std::optional<Monomial> pattern_monomial(unsigned n, std::uint64_t eq_bits) {
  // Block index of each position 0..n+1.
  std::vector<unsigned> block(n + 2, 0);
  for (unsigned j = 1; j <= n + 1; ++j) {
    block[j] = block[j - 1] + (((eq_bits >> (j - 1)) & 1u) ? 0 : 1);
  }
  const unsigned last = block[n + 1];
  if (last == 0) return std::nullopt;
  std::vector<ExtIndex> g;
  g.reserve(n);
  for (unsigned j = 1; j <= n; ++j) {
    if (block[j] == 0) {
      g.push_back(ExtIndex::zero());
    } else if (block[j] == last) {
      g.push_back(ExtIndex::inf());
    } else {
      g.push_back(ExtIndex::nat(block[j]));
    }
  }
  return monomial_from_tuple(g);
}

bool k_admits(const Monomial& m, const SubsetSpec& spec) {
  return m.degree() == spec.n() && k_condition(bordered(m), spec);
}

bool l_admits(const Monomial& m, const SubsetSpec& spec) {
  return m.degree() == spec.n() && l_condition(bordered(m), spec);
}

Series k_series(const SubsetSpec& spec, unsigned trunc) {
  return family_series(spec, trunc, BigInt(2), [&](const auto& g) { return k_condition(g, spec); });
}

Series l_series(const SubsetSpec& spec, unsigned trunc) {
  return family_series(spec, trunc, BigInt(2), [&](const auto& g) { return l_condition(g, spec); });
}

Series k_series_q(const SubsetSpec& spec, unsigned trunc, long q) {
  if (q == 0) throw DomainError("q must be nonzero");
  return family_series(spec, trunc, BigInt(q), [&](const auto& g) { return k_condition(g, spec); });
}

bool is_l_special(const Monomial& m) {
  for (const auto& [idx, e] : m.factors()) {
    if (idx.is_border() ? e == 1 : e == 2) return false;
  }
  return true;
}

std::optional<Monomial> m_generic_monomial(const SubsetSpec& spec, unsigned trunc) {
  if (trunc < spec.n()) throw TruncationTooSmall(trunc, spec.n());
  return pattern_monomial(spec.n(), forced_equalities(spec));
}

bool m_membership(const Monomial& m, const SubsetSpec& spec) {
  return m.degree() == spec.n() && equality_pattern(m) == forced_equalities(spec);
}

}  // namespace kfam
