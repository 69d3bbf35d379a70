#include "kfam/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace kfam {

std::string ProblematicRelation::to_string() const {
  const std::string eq = "g" + std::to_string(position) + "=g" + std::to_string(position + 1);
  switch (kind) {
    case Kind::InteriorSquare: return "InteriorSquare(" + eq + ")";
    case Kind::BorderSingleZero: return "BorderSingleZero(" + eq + ")";
    case Kind::BorderSingleInf: return "BorderSingleInf(" + eq + ")";
  }
  return eq;
}

std::vector<ProblematicRelation> problematic_relations(const Monomial& m) {
  using Kind = ProblematicRelation::Kind;
  std::vector<ProblematicRelation> out;
  const unsigned n = m.degree();
  unsigned pos = 1;  // tuple position of the first occurrence of each factor
  for (const auto& [idx, e] : m.factors()) {
    if (idx.is_zero() && e == 1) {
      out.push_back({Kind::BorderSingleZero, 0});
    } else if (idx.is_inf() && e == 1) {
      out.push_back({Kind::BorderSingleInf, n});
    } else if (idx.is_nat() && e == 2) {
      out.push_back({Kind::InteriorSquare, pos});
    }
    pos += e;
  }
  return out;
}

namespace {

std::uint64_t resolved_pattern(const Monomial& m, const ProblematicRelation& r) {
  auto rels = problematic_relations(m);
  if (std::find(rels.begin(), rels.end(), r) == rels.end()) {
    throw DomainError(r.to_string() + " is not a problematic relation of " + m.to_string());
  }
  return equality_pattern(m) & ~(std::uint64_t{1} << r.position);
}

}  // namespace

Monomial resolve(const Monomial& m, const ProblematicRelation& r, unsigned trunc) {
  auto h = pattern_monomial(m.degree(), resolved_pattern(m, r));
  if (!h) throw InvariantViolation("resolving a relation joined 0 to inf");
  if (h->max_natural() > trunc) throw TruncationTooSmall(trunc, h->max_natural());
  return *h;
}

std::vector<Monomial> resolutions(const Monomial& m, const ProblematicRelation& r, unsigned trunc) {
  return relabelings(resolve(m, r, trunc), trunc);
}

Monomial resolve_all(const Monomial& m, unsigned trunc) {
  Monomial cur = m;
  while (true) {
    auto rels = problematic_relations(cur);
    if (rels.empty()) return cur;
    cur = resolve(cur, rels.front(), trunc);
  }
}

bool check_spreading(const Series& f) {
  if (f.trunc() < f.degree() + 1) throw TruncationTooSmall(f.trunc(), f.degree() + 1);
  for (const auto& g : all_monomials(f.degree(), f.trunc())) {
    const auto rels = problematic_relations(g);
    if (rels.empty()) continue;
    const BigInt twice = 2 * f.coefficient(g);
    for (const auto& r : rels) {
      for (const auto& h : resolutions(g, r, f.trunc())) {
        if (f.coefficient(h) != twice) return false;
      }
    }
  }
  return true;
}

BigInt case_table_coefficient(const Monomial& mono, const SubsetSpec& right) {
  if (mono.degree() != right.n() + 1) {
    throw DomainError("monomial " + mono.to_string() + " must have degree " + std::to_string(right.n() + 1));
  }
  const BigInt big_m = BigInt(1) << mono.distinct_naturals();
  BigInt total = 0;
  for (const auto& [idx, e] : mono.factors()) {
    // Variables absent from mono contribute nothing.
    auto rest = mono.divided_by(idx);
    if (!k_admits(*rest, right)) continue;
    if (idx.is_border() || e == 1) {
      total += big_m;
    } else {
      total += 2 * big_m;
    }
  }
  return total;
}

std::optional<std::vector<BigRational>> solve_exact(const std::vector<Series>& columns, const Series& target) {
  std::set<Monomial> support;
  for (const auto& c : columns) {
    for (const auto& [m, v] : c.terms()) support.insert(m);
  }
  for (const auto& [m, v] : target.terms()) support.insert(m);

  const std::size_t cols = columns.size();
  std::vector<std::vector<BigRational>> rows;
  rows.reserve(support.size());
  for (const auto& m : support) {
    std::vector<BigRational> row(cols + 1);
    for (std::size_t k = 0; k < cols; ++k) row[k] = BigRational(columns[k].coefficient(m));
    row[cols] = BigRational(target.coefficient(m));
    rows.push_back(std::move(row));
  }

  // Reduced row echelon form.
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const BigRational inv = 1 / rows[r][c];
    for (auto& v : rows[r]) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const BigRational factor = rows[i][c];
      for (std::size_t k = c; k <= cols; ++k) rows[i][k] -= factor * rows[r][k];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows.size(); ++i) {
    if (rows[i][cols] != 0) return std::nullopt;
  }
  std::vector<BigRational> x(cols);
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = rows[i][cols];
  return x;
}

QRigidityResult q_square_in_span(long q, unsigned trunc) {
  const auto single = k_series_q(SubsetSpec(1, {}), trunc, q);
  std::vector<Series> columns;
  for (const auto& s : all_subsets(2)) columns.push_back(k_series_q(s, trunc, q));
  auto sol = solve_exact(columns, single * single);
  QRigidityResult out{q, sol.has_value(), {}};
  if (sol) out.solution = std::move(*sol);
  return out;
}

}  // namespace kfam
