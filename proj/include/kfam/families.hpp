#pragma once

// The series families K_{n,S} and L_{n,S}, their base-q variant, and the
// generic monomial sets M_{n,S} used by the L-basis elimination.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kfam/core.hpp"

namespace kfam {

// A subset of [n] = {1..n}, with n carried along. Members live in a bitmask,
// bit i-1 for member i.
class SubsetSpec {
 public:
  static constexpr unsigned kMaxN = 30;

  SubsetSpec() = default;
  SubsetSpec(unsigned n, std::vector<unsigned> members);

  static SubsetSpec from_mask(unsigned n, std::uint32_t mask);
  static SubsetSpec full(unsigned n);
  // "1,2,4"; the empty string is the empty set.
  static SubsetSpec parse(unsigned n, std::string_view text);

  unsigned n() const { return n_; }
  std::uint32_t mask() const { return mask_; }
  unsigned size() const;
  bool empty() const { return mask_ == 0; }
  bool contains(unsigned i) const { return i >= 1 && i <= n_ && ((mask_ >> (i - 1)) & 1u); }
  std::vector<unsigned> members() const;
  bool is_subset_of(const SubsetSpec& other) const { return (mask_ & ~other.mask_) == 0; }

  std::string to_string() const;

  bool operator==(const SubsetSpec&) const = default;

 private:
  unsigned n_ = 0;
  std::uint32_t mask_ = 0;
};

// Size first, then lexicographic on the sorted member list.
struct SizeLexLess {
  bool operator()(const SubsetSpec& a, const SubsetSpec& b) const;
};

// All subsets of [n] in SizeLexLess order.
std::vector<SubsetSpec> all_subsets(unsigned n);

// Bit j (0 <= j <= n) is set iff the spec forces g_j = g_{j+1}, i.e. j or j+1
// is a member. Positions 0 and n+1 carry the fixed values 0 and inf.
std::uint64_t forced_equalities(const SubsetSpec& spec);

// Bit j is set iff g_j = g_{j+1} in the bordered tuple 0, g_1..g_n, inf.
std::uint64_t equality_pattern(const Monomial& m);

// The minimal monomial realizing an equality pattern on positions 0..n+1:
// blocks of equal positions get 0 (block of position 0), inf (block of n+1)
// and 1, 2, 3, ... left to right. Empty when the pattern joins 0 to n+1.
std::optional<Monomial> pattern_monomial(unsigned n, std::uint64_t eq_bits);

// Tuple conditions of the two definitions, evaluated on a single monomial.
bool k_admits(const Monomial& m, const SubsetSpec& spec);
bool l_admits(const Monomial& m, const SubsetSpec& spec);

Series k_series(const SubsetSpec& spec, unsigned trunc);
Series l_series(const SubsetSpec& spec, unsigned trunc);
// K with coefficient q^{#distinct naturals} instead of 2^{...}. q != 0.
Series k_series_q(const SubsetSpec& spec, unsigned trunc, long q);

// No natural exponent equals 2 and no border exponent equals 1.
bool is_l_special(const Monomial& m);

// Canonical element of M_{n,S}, or nullopt when M_{n,S} is empty.
// Throws TruncationTooSmall when trunc < n.
std::optional<Monomial> m_generic_monomial(const SubsetSpec& spec, unsigned trunc);

bool m_membership(const Monomial& m, const SubsetSpec& spec);

}  // namespace kfam
