#include "kfam/shuffle.hpp"

#include <algorithm>

namespace kfam {

namespace {

int rank(char letter) {
  switch (letter) {
    case 'A': return 3;
    case 'B': return 2;
    case 'C': return 1;
    case 'D': return 0;
    default: throw DomainError(std::string("letter '") + letter + "' is not one of A, B, C, D");
  }
}

}  // namespace

LetterString string_form(const SubsetSpec& spec, LetterPair pair) {
  LetterString s(spec.n(), pair.other);
  for (unsigned i : spec.members()) s[i - 1] = pair.member;
  return s;
}

std::vector<LetterString> shuffles(const SubsetSpec& left, const SubsetSpec& right) {
  const auto a = string_form(left, kLeftLetters);
  const auto b = string_form(right, kRightLetters);
  const std::size_t total = a.size() + b.size();
  std::vector<LetterString> out;
  // take[k] says whether position k comes from the left word; iterate all
  // placements via prev_permutation starting from the lexicographically first.
  std::vector<bool> take(total, false);
  std::fill(take.begin(), take.begin() + static_cast<std::ptrdiff_t>(a.size()), true);
  do {
    LetterString s(total, ' ');
    std::size_t i = 0;
    std::size_t j = 0;
    for (std::size_t k = 0; k < total; ++k) s[k] = take[k] ? a[i++] : b[j++];
    out.push_back(std::move(s));
  } while (std::prev_permutation(take.begin(), take.end()));
  return out;
}

SubsetSpec gp(std::string_view s) {
  std::vector<int> r;
  r.reserve(s.size());
  for (char c : s) r.push_back(rank(c));
  std::vector<unsigned> peaks;
  for (std::size_t k = 0; k < r.size(); ++k) {
    if (r[k] == 0) continue;
    if (k > 0 && r[k - 1] > r[k]) continue;
    if (k + 1 < r.size() && r[k + 1] > r[k]) continue;
    peaks.push_back(static_cast<unsigned>(k + 1));
  }
  return SubsetSpec(static_cast<unsigned>(s.size()), std::move(peaks));
}

std::vector<SubsetSpec> k1_product(const SubsetSpec& right) {
  std::vector<SubsetSpec> out;
  for (const auto& s : shuffles(SubsetSpec(1, {}), right)) out.push_back(gp(s));
  std::sort(out.begin(), out.end(), SizeLexLess{});
  return out;
}

std::vector<std::pair<SubsetSpec, unsigned>> multiplicities(const std::vector<SubsetSpec>& sets) {
  std::vector<std::pair<SubsetSpec, unsigned>> out;
  for (const auto& s : sets) {
    if (!out.empty() && out.back().first == s) {
      ++out.back().second;
    } else {
      out.emplace_back(s, 1);
    }
  }
  return out;
}

nlohmann::json multiset_to_json(const std::vector<SubsetSpec>& sets) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [s, k] : multiplicities(sets)) out.push_back({{"set", s.members()}, {"multiplicity", k}});
  return out;
}

}  // namespace kfam
