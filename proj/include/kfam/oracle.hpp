#pragma once

// Independent verifiers: problematic relations and their resolution, the
// spreading condition, the case-by-case coefficient of K_{1,{}} * K_{m,S},
// and an exact rational linear solver for span-membership questions.

#include <optional>
#include <string>
#include <vector>

#include "kfam/core.hpp"
#include "kfam/families.hpp"

namespace kfam {

using BigRational =
    boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

// One equality in the bordered tuple 0 = g_0 <= g_1 <= ... <= g_n <= g_{n+1} = inf
// that keeps a monomial from being L-special.
struct ProblematicRelation {
  enum class Kind {
    InteriorSquare,    // g_{i-1} < g_i = g_{i+1} < g_{i+2}, g_i natural
    BorderSingleZero,  // g_0 = g_1 < g_2
    BorderSingleInf,   // g_{n-1} < g_n = g_{n+1}
  };

  Kind kind;
  // j such that the relation is the equality g_j = g_{j+1}.
  unsigned position;

  bool operator==(const ProblematicRelation&) const = default;
  std::string to_string() const;
};

// Empty iff is_l_special(m).
std::vector<ProblematicRelation> problematic_relations(const Monomial& m);

// The minimal monomial with m's equality pattern except that r becomes strict.
// Throws DomainError if r is not a relation of m and TruncationTooSmall if
// the result needs more than trunc naturals.
Monomial resolve(const Monomial& m, const ProblematicRelation& r, unsigned trunc);

// Every monomial within trunc that has the resolved pattern (all choices of
// strictly increasing natural values).
std::vector<Monomial> resolutions(const Monomial& m, const ProblematicRelation& r, unsigned trunc);

// Resolves every problematic relation of m; an L-special monomial.
Monomial resolve_all(const Monomial& m, unsigned trunc);

// 2 [x_g](f) == [x_h](f) for every degree-d monomial x_g with a problematic
// relation and every resolution x_h. Needs f.trunc() >= f.degree() + 1.
bool check_spreading(const Series& f);

// Coefficient of mono in K_{1,{}} * K_{m,right}, summed case by case over the
// variable x_i taken from the degree-1 factor.
BigInt case_table_coefficient(const Monomial& mono, const SubsetSpec& right);

// Solves sum_k c_k columns[k] = target over the rationals. Returns one
// solution (free unknowns set to 0) or nullopt if the system is inconsistent.
std::optional<std::vector<BigRational>> solve_exact(const std::vector<Series>& columns, const Series& target);

struct QRigidityResult {
  long q;
  bool solvable;
  // Set when solvable.
  std::vector<BigRational> solution;
};

// Is (K^q_{1,{}})^2 a combination of the K^q_{2,S}, S subset [2], at the given
// truncation?
QRigidityResult q_square_in_span(long q, unsigned trunc = 2);

}  // namespace kfam
