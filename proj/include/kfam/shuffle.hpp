#pragma once

// String forms of subsets, shuffles of two string forms, generalized peak
// sets, and the closed product formula for K_{1,{}} * K_{m,S}.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "kfam/families.hpp"

namespace kfam {

// Letters A > B > C > D, stored as plain uppercase characters.
using LetterString = std::string;

struct LetterPair {
  char member;
  char other;
};

inline constexpr LetterPair kLeftLetters{'A', 'B'};
inline constexpr LetterPair kRightLetters{'C', 'D'};

// Position i holds pair.member iff i is in spec.
LetterString string_form(const SubsetSpec& spec, LetterPair pair);

// Every interleaving of the (A,B) form of left with the (C,D) form of right,
// in lexicographic order of the positions taken by the left letters.
std::vector<LetterString> shuffles(const SubsetSpec& left, const SubsetSpec& right);

// Positions (1-based) whose letter is not D and is >= each existing neighbor.
SubsetSpec gp(std::string_view s);

// Multiset {Gp(s) : s a shuffle of ({},[1]) with right}, sorted by size then
// lexicographically, duplicates kept.
std::vector<SubsetSpec> k1_product(const SubsetSpec& right);

// Collapses a sorted multiset into (set, multiplicity) pairs.
std::vector<std::pair<SubsetSpec, unsigned>> multiplicities(const std::vector<SubsetSpec>& sets);

// [{"set": [...], "multiplicity": k}, ...]
nlohmann::json multiset_to_json(const std::vector<SubsetSpec>& sets);

}  // namespace kfam
