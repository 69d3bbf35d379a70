#include "kfam/core.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace kfam {

TruncationTooSmall::TruncationTooSmall(unsigned trunc, unsigned required)
    : DomainError("truncation V=" + std::to_string(trunc) + " is too small, need V >= " +
                  std::to_string(required)) {}

ExtIndex ExtIndex::nat(std::uint32_t i) {
  if (i == 0 || i == kInfCode) {
    throw DomainError("natural subscript out of range: " + std::to_string(i));
  }
  return ExtIndex(i);
}

std::string ExtIndex::to_string() const {
  if (is_inf()) return "inf";
  return std::to_string(code_);
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  Monomial m;
  for (const auto& [idx, e] : factors) {
    if (e == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().first == idx) {
      m.factors_.back().second += e;
    } else {
      m.factors_.emplace_back(idx, e);
    }
    m.degree_ += e;
  }
  return m;
}

Monomial Monomial::parse(std::string_view text) {
  if (text == "1") return {};
  std::vector<Factor> factors;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('*', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(pos, end - pos);
    if (tok.size() < 2 || tok[0] != 'x') {
      throw DomainError("bad monomial factor '" + std::string(tok) + "'");
    }
    tok.remove_prefix(1);
    std::uint32_t e = 1;
    if (auto caret = tok.find('^'); caret != std::string_view::npos) {
      auto ex = tok.substr(caret + 1);
      auto [p, ec] = std::from_chars(ex.data(), ex.data() + ex.size(), e);
      if (ec != std::errc{} || p != ex.data() + ex.size() || e == 0) {
        throw DomainError("bad exponent in '" + std::string(text) + "'");
      }
      tok = tok.substr(0, caret);
    }
    ExtIndex idx;
    if (tok == "inf") {
      idx = ExtIndex::inf();
    } else {
      std::uint32_t v = 0;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc{} || p != tok.data() + tok.size()) {
        throw DomainError("bad subscript in '" + std::string(text) + "'");
      }
      idx = v == 0 ? ExtIndex::zero() : ExtIndex::nat(v);
    }
    factors.emplace_back(idx, e);
    pos = end + 1;
  }
  return from_factors(std::move(factors));
}

std::uint32_t Monomial::exponent(ExtIndex i) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), i,
                             [](const Factor& f, ExtIndex k) { return f.first < k; });
  return (it != factors_.end() && it->first == i) ? it->second : 0;
}

std::vector<ExtIndex> Monomial::tuple() const {
  std::vector<ExtIndex> g;
  g.reserve(degree_);
  for (const auto& [idx, e] : factors_) g.insert(g.end(), e, idx);
  return g;
}

unsigned Monomial::distinct_naturals() const {
  return static_cast<unsigned>(
      std::count_if(factors_.begin(), factors_.end(), [](const Factor& f) { return f.first.is_nat(); }));
}

std::uint32_t Monomial::max_natural() const {
  std::uint32_t best = 0;
  for (const auto& [idx, e] : factors_) {
    if (idx.is_nat()) best = std::max(best, idx.value());
  }
  return best;
}

std::optional<Monomial> Monomial::divided_by(ExtIndex i) const {
  auto it = std::find_if(factors_.begin(), factors_.end(), [&](const Factor& f) { return f.first == i; });
  if (it == factors_.end()) return std::nullopt;
  Monomial out = *this;
  auto& f = out.factors_[static_cast<std::size_t>(it - factors_.begin())];
  if (--f.second == 0) out.factors_.erase(out.factors_.begin() + (it - factors_.begin()));
  --out.degree_;
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      out.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->first < i->first) {
      out.factors_.push_back(*j++);
    } else {
      out.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  out.degree_ = a.degree_ + b.degree_;
  return out;
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (const auto& [idx, e] : factors_) {
    if (!s.empty()) s += '*';
    s += 'x';
    s += idx.to_string();
    if (e != 1) {
      s += '^';
      s += std::to_string(e);
    }
  }
  return s;
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
  return std::lexicographical_compare_three_way(
      factors_.begin(), factors_.end(), other.factors_.begin(), other.factors_.end(),
      [](const Factor& a, const Factor& b) {
        if (auto c = a.first <=> b.first; c != 0) return c;
        // Higher exponent first so that x0^2 sorts before x0*x1.
        return b.second <=> a.second;
      });
}

Monomial monomial_from_tuple(std::span<const ExtIndex> g) {
  if (!std::is_sorted(g.begin(), g.end())) {
    throw InvariantViolation("monomial_from_tuple: subscripts are not nondecreasing");
  }
  std::vector<Monomial::Factor> factors;
  for (ExtIndex idx : g) {
    if (!factors.empty() && factors.back().first == idx) {
      ++factors.back().second;
    } else {
      factors.emplace_back(idx, 1);
    }
  }
  return Monomial::from_factors(std::move(factors));
}

Series::Series(unsigned degree, unsigned trunc) : degree_(degree), trunc_(trunc) {}

Series Series::one(unsigned trunc) {
  Series s(0, trunc);
  s.terms_.emplace(Monomial{}, BigInt(1));
  return s;
}

void Series::add_term(const Monomial& m, const BigInt& c) {
  if (m.degree() != degree_) {
    throw InvariantViolation("term " + m.to_string() + " has degree " + std::to_string(m.degree()) +
                             " in a series of degree " + std::to_string(degree_));
  }
  if (m.max_natural() > trunc_) {
    throw InvariantViolation("term " + m.to_string() + " uses a natural variable beyond V=" +
                             std::to_string(trunc_));
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt Series::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

Series Series::restricted(unsigned new_trunc) const {
  Series out(degree_, std::min(trunc_, new_trunc));
  for (const auto& [m, c] : terms_) {
    if (m.max_natural() <= out.trunc_) out.terms_.emplace_hint(out.terms_.end(), m, c);
  }
  return out;
}

void Series::check_compatible(const Series& other, bool same_degree) const {
  if (trunc_ != other.trunc_) {
    throw DomainError("truncation mismatch: V=" + std::to_string(trunc_) + " vs V=" +
                      std::to_string(other.trunc_));
  }
  if (same_degree && degree_ != other.degree_) {
    throw DomainError("degree mismatch: " + std::to_string(degree_) + " vs " + std::to_string(other.degree_));
  }
}

Series& Series::operator+=(const Series& other) {
  check_compatible(other, true);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Series& Series::operator-=(const Series& other) {
  check_compatible(other, true);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Series& Series::operator*=(const BigInt& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [m, v] : terms_) v *= c;
  }
  return *this;
}

Series operator*(const Series& a, const Series& b) {
  a.check_compatible(b, false);
  Series out(a.degree_ + b.degree_, a.trunc_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      auto [it, inserted] = out.terms_.try_emplace(ma * mb, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  std::erase_if(out.terms_, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::string Series::to_string() const {
  std::ostringstream os;
  for (const auto& [m, c] : terms_) os << c << '*' << m.to_string() << '\n';
  return os.str();
}

Series series_add(const Series& a, const Series& b) { return a + b; }
Series series_scale(const Series& a, const BigInt& c) { return a * c; }
Series series_mul(const Series& a, const Series& b) { return a * b; }
BigInt coefficient(const Series& a, const Monomial& m) { return a.coefficient(m); }

void for_each_nondecreasing_tuple(unsigned n, unsigned trunc,
                                  const std::function<void(std::span<const ExtIndex>)>& fn) {
  // Alphabet positions 0..trunc+1, where trunc+1 stands for inf.
  const unsigned top = trunc + 1;
  auto symbol = [top](unsigned k) {
    if (k == 0) return ExtIndex::zero();
    if (k == top) return ExtIndex::inf();
    return ExtIndex::nat(k);
  };
  std::vector<unsigned> pos(n, 0);
  std::vector<ExtIndex> g(n, ExtIndex::zero());
  while (true) {
    for (unsigned i = 0; i < n; ++i) g[i] = symbol(pos[i]);
    fn(g);
    // Advance to the next nondecreasing sequence.
    int i = static_cast<int>(n) - 1;
    while (i >= 0 && pos[static_cast<unsigned>(i)] == top) --i;
    if (i < 0) return;
    unsigned v = pos[static_cast<unsigned>(i)] + 1;
    for (unsigned k = static_cast<unsigned>(i); k < n; ++k) pos[k] = v;
  }
}

std::vector<Monomial> all_monomials(unsigned degree, unsigned trunc) {
  std::vector<Monomial> out;
  for_each_nondecreasing_tuple(degree, trunc,
                               [&](std::span<const ExtIndex> g) { out.push_back(monomial_from_tuple(g)); });
  return out;
}

std::vector<Monomial> relabelings(const Monomial& m, unsigned trunc) {
  std::vector<Monomial::Factor> borders;
  std::vector<std::uint32_t> word;
  for (const auto& [idx, e] : m.factors()) {
    if (idx.is_border()) {
      borders.emplace_back(idx, e);
    } else {
      word.push_back(e);
    }
  }
  std::vector<Monomial> out;
  const std::size_t k = word.size();
  if (k > trunc) return out;
  // Iterate the k-subsets of 1..trunc in lexicographic order.
  std::vector<std::uint32_t> sel(k);
  for (std::size_t i = 0; i < k; ++i) sel[i] = static_cast<std::uint32_t>(i + 1);
  while (true) {
    auto factors = borders;
    for (std::size_t i = 0; i < k; ++i) factors.emplace_back(ExtIndex::nat(sel[i]), word[i]);
    out.push_back(Monomial::from_factors(std::move(factors)));
    std::size_t i = k;
    while (i > 0 && sel[i - 1] == trunc - (k - i)) --i;
    if (i == 0) break;
    ++sel[i - 1];
    for (std::size_t j = i; j < k; ++j) sel[j] = sel[j - 1] + 1;
  }
  return out;
}

bool relabel_check(const Series& a) {
  for (const auto& [m, c] : a.terms()) {
    for (const auto& other : relabelings(m, a.trunc())) {
      if (a.coefficient(other) != c) return false;
    }
  }
  return true;
}

}  // namespace kfam
