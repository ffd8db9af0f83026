#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace linkhom {

using Int = boost::multiprecision::cpp_int;

/// Largest supported strand count. Variables are indexed by unordered
/// strand pairs, so polynomials live in at most C(9,2) = 36 variables.
inline constexpr int kMaxStrands = 9;
inline constexpr int kMaxVars = kMaxStrands * (kMaxStrands - 1) / 2;

/// Unordered strand pair naming the linking-number variable l(i,j).
/// Stored canonically with i < j; l(i,j) and l(j,i) are the same variable.
struct PairVar {
  int i = 0;
  int j = 0;

  PairVar() = default;
  PairVar(int a, int b);  // normalizes order, rejects a == b or a < 1

  auto operator<=>(const PairVar&) const = default;
};

int pair_count(int k);                  // C(k,2)
int pair_rank(int k, PairVar v);        // lex rank: (1,2) < (1,3) < ... < (k-1,k)
PairVar pair_unrank(int k, int rank);
std::string to_string(PairVar v);       // "l(1,2)"

/// Exponent vector over the pair variables of a fixed strand count.
/// Ordered by graded lex: higher total degree first, ties broken by the
/// exponent of the earliest variable. The order is total and compatible
/// with monomial multiplication.
class Monomial {
 public:
  Monomial() = default;

  int exponent(int var) const { return exp_[static_cast<size_t>(var)]; }
  void set_exponent(int var, int e);
  int degree() const { return degree_; }
  bool is_constant() const { return degree_ == 0; }

  Monomial times(const Monomial& o) const;
  Monomial times_var(int var) const;
  bool divisible_by(const Monomial& o) const;
  Monomial divided_by(const Monomial& o) const;

  /// Three-way graded-lex comparison; negative when *this is the smaller
  /// monomial.
  static int compare(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& o) const { return exp_ == o.exp_; }

 private:
  std::array<uint8_t, kMaxVars> exp_{};
  uint16_t degree_ = 0;
};

struct MonomialGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return Monomial::compare(a, b) > 0;
  }
};

struct PolyMeasure {
  std::size_t term_count = 0;
  int total_degree = 0;     // 0 for the zero polynomial
  bool homogeneous = true;  // true for the zero polynomial
  Int content = 0;          // gcd of |coefficients|, 0 for the zero polynomial
};

/// Sparse multivariate polynomial with exact integer coefficients in the
/// variables l(i,j), 1 <= i < j <= k. Terms are kept in descending graded-lex
/// order with no zero coefficients, so equality is decidable term by term and
/// the text rendering is canonical.
///
/// Values are immutable in spirit: every operation returns a fresh
/// polynomial, so they are safe to share across threads.
class Poly {
 public:
  struct Term {
    Monomial mono;
    Int coeff;
  };

  /// Zero polynomial. k = 0 denotes the empty variable universe (constants
  /// only); such values mix freely with any other universe.
  Poly() = default;
  explicit Poly(int k);

  static Poly constant(int k, Int c);
  static Poly variable(int k, PairVar v);
  /// Builds the canonical form from an arbitrary term list: sorts, merges
  /// equal monomials, drops zeros.
  static Poly from_terms(int k, std::vector<Term> terms);

  int k() const { return k_; }
  int var_count() const { return pair_count(k_); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  bool operator==(const Poly& o) const { return terms_same(o); }

  Poly times_monomial(const Monomial& m, const Int& c) const;
  Poly times_var(PairVar v) const { return times_monomial(var_monomial(v), 1); }
  Poly scaled(const Int& c) const { return times_monomial(Monomial{}, c); }

  /// Exact division; throws std::domain_error when the divisor does not
  /// divide exactly over Z[l].
  Poly divexact(const Poly& divisor) const;

  /// Exact evaluation. Every variable occurring in the polynomial must be
  /// assigned; a missing one raises std::invalid_argument naming it. With a
  /// modulus the result is the residue in [0, modulus).
  Int eval(const std::map<PairVar, Int>& assignment,
           const std::optional<Int>& modulus = std::nullopt) const;

  /// Fast modular evaluation for the randomized rank path: values indexed by
  /// pair rank, all reduced mod prime (prime < 2^62).
  uint64_t eval_mod(const std::vector<uint64_t>& values_by_rank,
                    uint64_t prime) const;

  PolyMeasure measure() const;

  /// Canonical rendering: one term per line in descending monomial order,
  /// `<signed coefficient> <factors>` with factors `l(i,j)` or `l(i,j)^e`
  /// in ascending variable order. Bit-exact across platforms; the zero
  /// polynomial renders as the empty string.
  std::string canonical_text() const;
  static Poly parse_canonical_text(int k, std::string_view text);

  friend std::ostream& operator<<(std::ostream& os, const Poly& p);

 private:
  Monomial var_monomial(PairVar v) const;
  bool terms_same(const Poly& o) const;
  static int merged_k(const Poly& a, const Poly& b);

  int k_ = 0;
  std::vector<Term> terms_;
};

/// Evaluates several polynomials over one assignment, sharing the power
/// table. Same error contract as Poly::eval.
std::vector<Int> eval_all(const std::vector<Poly>& polys,
                          const std::map<PairVar, Int>& assignment);

}  // namespace linkhom
