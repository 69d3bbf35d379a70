#pragma once

// Exact sparse arithmetic for homogeneous formal power series in the
// variables x_0, x_1, x_2, ..., x_inf, truncated to finitely many natural
// variables x_1..x_V.

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace kfam {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

// Errors caused by bad input or by a target outside the span. The CLI maps
// these to exit status 1.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TruncationTooSmall : public DomainError {
 public:
  TruncationTooSmall(unsigned trunc, unsigned required);
};

// Broken internal contract (a bug rather than bad input). Exit status 2.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A variable subscript: 0 < 1 < 2 < ... < inf.
class ExtIndex {
 public:
  constexpr ExtIndex() = default;

  static constexpr ExtIndex zero() { return ExtIndex(0); }
  static constexpr ExtIndex inf() { return ExtIndex(kInfCode); }
  static ExtIndex nat(std::uint32_t i);

  constexpr bool is_zero() const { return code_ == 0; }
  constexpr bool is_inf() const { return code_ == kInfCode; }
  constexpr bool is_border() const { return is_zero() || is_inf(); }
  constexpr bool is_nat() const { return !is_border(); }

  // Natural subscript; only meaningful when is_nat().
  constexpr std::uint32_t value() const { return code_; }

  constexpr auto operator<=>(const ExtIndex&) const = default;

  // "0", "<i>" or "inf".
  std::string to_string() const;

 private:
  static constexpr std::uint32_t kInfCode = 0xffffffffu;
  constexpr explicit ExtIndex(std::uint32_t code) : code_(code) {}

  std::uint32_t code_ = 0;
};

// A monomial stored as its exponent map: factors sorted by subscript, no zero
// exponents.
class Monomial {
 public:
  using Factor = std::pair<ExtIndex, std::uint32_t>;

  Monomial() = default;

  // Canonicalizes an arbitrary factor list (merges repeats, drops zeros).
  static Monomial from_factors(std::vector<Factor> factors);

  // Parses the text encoding, e.g. "x0^2*x3*xinf^2"; "1" is the empty monomial.
  static Monomial parse(std::string_view text);

  unsigned degree() const { return degree_; }
  std::span<const Factor> factors() const { return factors_; }
  std::uint32_t exponent(ExtIndex i) const;

  // The nondecreasing subscript tuple (g_1, ..., g_d).
  std::vector<ExtIndex> tuple() const;

  unsigned distinct_naturals() const;
  // Largest natural subscript used, 0 when none.
  std::uint32_t max_natural() const;

  // This monomial with one factor of x_i removed, if x_i divides it.
  std::optional<Monomial> divided_by(ExtIndex i) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);

  std::string to_string() const;

  bool operator==(const Monomial&) const = default;
  std::strong_ordering operator<=>(const Monomial& other) const;

 private:
  std::vector<Factor> factors_;
  unsigned degree_ = 0;
};

// Throws InvariantViolation if g is not nondecreasing.
Monomial monomial_from_tuple(std::span<const ExtIndex> g);

// Homogeneous series of a tracked degree over x_0, x_1..x_trunc, x_inf.
class Series {
 public:
  using TermMap = std::map<Monomial, BigInt>;

  Series(unsigned degree, unsigned trunc);

  // The constant series 1.
  static Series one(unsigned trunc);

  unsigned degree() const { return degree_; }
  unsigned trunc() const { return trunc_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // Adds c to the coefficient of m. Rejects monomials of the wrong degree or
  // using naturals beyond trunc.
  void add_term(const Monomial& m, const BigInt& c);

  BigInt coefficient(const Monomial& m) const;

  // Sets every natural variable above new_trunc to zero.
  Series restricted(unsigned new_trunc) const;

  Series& operator+=(const Series& other);
  Series& operator-=(const Series& other);
  Series& operator*=(const BigInt& c);

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(Series a, const BigInt& c) { return a *= c; }
  friend Series operator*(const Series& a, const Series& b);

  bool operator==(const Series&) const = default;

  // One "coeff*monomial" term per line, in monomial order.
  std::string to_string() const;

 private:
  void check_compatible(const Series& other, bool same_degree) const;

  unsigned degree_;
  unsigned trunc_;
  TermMap terms_;
};

Series series_add(const Series& a, const Series& b);
Series series_scale(const Series& a, const BigInt& c);
Series series_mul(const Series& a, const Series& b);
BigInt coefficient(const Series& a, const Monomial& m);

// Calls fn on every nondecreasing tuple of length n over 0, 1..trunc, inf.
void for_each_nondecreasing_tuple(unsigned n, unsigned trunc,
                                  const std::function<void(std::span<const ExtIndex>)>& fn);

// Every monomial of the given degree over x_0, x_1..x_trunc, x_inf.
std::vector<Monomial> all_monomials(unsigned degree, unsigned trunc);

// Every monomial obtained from m by moving its natural support to another
// strictly increasing sequence in 1..trunc, borders untouched. Includes m
// itself when it fits.
std::vector<Monomial> relabelings(const Monomial& m, unsigned trunc);

// True iff a is quasisymmetric in the natural variables.
bool relabel_check(const Series& a);

}  // namespace kfam
