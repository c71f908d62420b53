#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace permstat {

/// Exact bivariate polynomials in q and t: a sparse map from exponent pairs
/// to 64-bit integer coefficients with overflow detection (std::overflow_error
/// on any overflowing add or multiply; never silent wraparound).  Terms are
/// kept in canonical order: by t-exponent, then q-exponent.
class BivariatePolynomial {
public:
  struct Term {
    int q_exp = 0;
    int t_exp = 0;
    std::int64_t coeff = 0;

    friend bool operator==(const Term&, const Term&) = default;
  };

  BivariatePolynomial() = default;  // zero

  static BivariatePolynomial constant(std::int64_t c);
  static BivariatePolynomial monomial(std::int64_t c, int q_exp, int t_exp);

  /// Adds c * q^q_exp * t^t_exp; drops the term if the total cancels.
  void add_term(int q_exp, int t_exp, std::int64_t c);

  BivariatePolynomial& operator+=(const BivariatePolynomial& rhs);
  friend BivariatePolynomial operator+(BivariatePolynomial lhs,
                                       const BivariatePolynomial& rhs);
  friend BivariatePolynomial operator*(const BivariatePolynomial& lhs,
                                       const BivariatePolynomial& rhs);

  /// The substitution t -> q^k t: each q^a t^b becomes q^(a+kb) t^b.
  BivariatePolynomial scale_t_argument(int k) const;

  std::int64_t coefficient(int q_exp, int t_exp) const;

  /// Value at q = 1, t = 1 (the coefficient mass), with checked summation.
  std::int64_t value_at_one() const;

  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }

  /// Terms in canonical order.
  std::vector<Term> terms() const;

  /// Canonical text, e.g. "1 + q*t + 2*q^2*t + q^3*t^2"; "0" for zero.
  std::string str() const;

  /// Canonically sorted array of {"q": a, "t": b, "c": coeff}.
  nlohmann::json to_json() const;

  /// CSV with header "q_exp,t_exp,coeff", canonical row order.
  std::string csv() const;

  friend bool operator==(const BivariatePolynomial&,
                         const BivariatePolynomial&) = default;

private:
  // key = (t_exp, q_exp) so map order is the canonical term order
  std::map<std::pair<int, int>, std::int64_t> terms_;
};

/// [n]_q = 1 + q + ... + q^(n-1); zero for n = 0.
BivariatePolynomial q_bracket(int n);

/// [n]_q! = [n]_q [n-1]_q ... [1]_q; 1 for n = 0.  Supported for n <= 20.
BivariatePolynomial q_factorial(int n);

/// M_n(q,t) = sum over S_n(213) of q^maj t^des, computed bottom-up from
/// M_0 = 1 by the first-letter block decomposition:
///
///     M_n(q,t) = M_{n-1}(q,qt)
///              + sum_{k=1}^{n-1} q^k t M_{k-1}(q,qt) M_{n-k}(q,q^k t).
///
/// Supported for n <= 20.
BivariatePolynomial mn_via_recurrence(int n);

/// The same family by the position-of-minimum block decomposition:
///
///     M_n(q,t) = M_{n-1}(q,qt)
///              + sum_{k=1}^{n-1} q^k t M_k(q,t) M_{n-k-1}(q,q^(k+1) t).
///
/// Supported for n <= 20; agrees with mn_via_recurrence everywhere.
BivariatePolynomial mn_via_alternate(int n);

}  // namespace permstat
