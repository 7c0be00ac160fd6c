#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>

namespace knotpoly {

using Int = mpz_class;

/// Exact division failed: the dividend is not a multiple of the divisor.
class DivisibilityError : public std::domain_error {
 public:
  explicit DivisibilityError(const std::string& what) : std::domain_error(what) {}
};

/// An internal identity that must hold by construction failed (e.g. a Markov
/// trace that is not divisible by the loop weight). Signals a convention bug,
/// never bad input.
class ConsistencyError : public std::runtime_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

// Sparse Laurent polynomial in a single variable with arbitrary-precision
// integer coefficients. The variable is written A throughout; q and t^(1/2)
// readings are substitutions layered on top. Canonical form: no stored zero
// coefficients, so equality is structural.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT: implicit by design
  LaurentPoly(Int constant);   // NOLINT

  static LaurentPoly monomial(Int coeff, long exp);
  static LaurentPoly variable() { return monomial(1, 1); }
  /// The loop weight d = -A^2 - A^-2.
  static LaurentPoly loop_weight();
  static LaurentPoly loop_weight_pow(long k);  // d^k, k >= 0

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  long min_exp() const;  // throws std::domain_error on the zero polynomial
  long max_exp() const;
  Int coeff(long exp) const;
  Int leading_coeff() const;  // coefficient at max_exp
  const std::map<long, Int>& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  LaurentPoly pow(unsigned long e) const;
  /// Multiply by A^k.
  LaurentPoly shifted(long k) const;
  /// Substitute A -> A^-1 (the mirror substitution).
  LaurentPoly mirrored() const;

  bool operator==(const LaurentPoly& rhs) const { return terms_ == rhs.terms_; }
  bool operator!=(const LaurentPoly& rhs) const { return !(*this == rhs); }

 private:
  std::map<long, Int> terms_;
};

/// Exact quotient a / b; throws DivisibilityError if b does not divide a,
/// std::domain_error if b is zero.
LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b);

/// gcd in Z[A, A^-1], canonicalized: min exponent 0, primitive up to the
/// integer content gcd, positive leading coefficient.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Quantum integer [n] = (q^n - q^-n)/(q - q^-1) as a Laurent polynomial,
/// exponents read in units of q.
LaurentPoly quantum_int(long n);

/// Checks [2][n] = [n+1] + [n-1] at n = m, and [m-a] = [m][a+1] - [m+1][a]
/// (requires m >= a >= 0) as exact polynomial identities.
bool quantum_identities_check(long m, long a);

/// Substitute q = -A^2: an exponent-k q-term becomes (-1)^k A^(2k).
LaurentPoly subst_q_to_A(const LaurentPoly& p_in_q);

/// Reads an A-polynomial in units of t^(1/2) = A^-2: A-exponent k maps to
/// exponent -k/2 of t^(1/2). Throws std::domain_error on odd A-exponents.
LaurentPoly to_t_half(const LaurentPoly& p_in_A);

/// Text rendering, terms by descending exponent: "A^7 - A^3 - A^-5".
std::string to_string_A(const LaurentPoly& p);

/// Renders an A-polynomial in t^(1/2) units, terms by descending A-exponent:
/// "-t^-4 + t^-3 + t^-1", half powers as "t^-5/2".
std::string to_string_t(const LaurentPoly& p_in_A);

// Quotient field element num/den over the Laurent ring, held in canonical
// form: num/den reduced by their polynomial gcd over the rationals, the
// denominator's lowest exponent shifted to 0, denominator leading coefficient
// positive. Equality is structural.
class RationalFn {
 public:
  RationalFn() : num_(0), den_(1) {}
  RationalFn(long constant) : num_(constant), den_(1) {}  // NOLINT
  RationalFn(LaurentPoly num) : num_(std::move(num)), den_(1) {}  // NOLINT
  RationalFn(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  RationalFn operator-() const;
  RationalFn& operator+=(const RationalFn& rhs);
  RationalFn& operator-=(const RationalFn& rhs);
  RationalFn& operator*=(const RationalFn& rhs);
  RationalFn& operator/=(const RationalFn& rhs);  // throws on zero divisor
  friend RationalFn operator+(RationalFn a, const RationalFn& b) { return a += b; }
  friend RationalFn operator-(RationalFn a, const RationalFn& b) { return a -= b; }
  friend RationalFn operator*(RationalFn a, const RationalFn& b) { return a *= b; }
  friend RationalFn operator/(RationalFn a, const RationalFn& b) { return a /= b; }

  bool operator==(const RationalFn& rhs) const {
    return num_ == rhs.num_ && den_ == rhs.den_;
  }
  bool operator!=(const RationalFn& rhs) const { return !(*this == rhs); }

 private:
  void normalize();
  LaurentPoly num_, den_;
};

std::string to_string(const RationalFn& r);

}  // namespace knotpoly
