#include "permstat/qpoly.hpp"

#include <stdexcept>

#include "permstat/checked.hpp"

namespace permstat {

BivariatePolynomial BivariatePolynomial::constant(std::int64_t c) {
  return monomial(c, 0, 0);
}

BivariatePolynomial BivariatePolynomial::monomial(std::int64_t c, int q_exp,
                                                  int t_exp) {
  BivariatePolynomial p;
  p.add_term(q_exp, t_exp, c);
  return p;
}

void BivariatePolynomial::add_term(int q_exp, int t_exp, std::int64_t c) {
  if (c == 0) return;
  if (q_exp < 0 || t_exp < 0)
    throw std::domain_error("polynomial: negative exponent");
  const auto key = std::make_pair(t_exp, q_exp);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
    return;
  }
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

BivariatePolynomial& BivariatePolynomial::operator+=(
    const BivariatePolynomial& rhs) {
  for (const auto& [key, c] : rhs.terms_) add_term(key.second, key.first, c);
  return *this;
}

BivariatePolynomial operator+(BivariatePolynomial lhs,
                              const BivariatePolynomial& rhs) {
  lhs += rhs;
  return lhs;
}

BivariatePolynomial operator*(const BivariatePolynomial& lhs,
                              const BivariatePolynomial& rhs) {
  BivariatePolynomial out;
  for (const auto& [lk, lc] : lhs.terms_)
    for (const auto& [rk, rc] : rhs.terms_)
      out.add_term(lk.second + rk.second, lk.first + rk.first,
                   checked_mul(lc, rc));
  return out;
}

BivariatePolynomial BivariatePolynomial::scale_t_argument(int k) const {
  if (k < 0) throw std::domain_error("scale_t_argument: negative power");
  BivariatePolynomial out;
  for (const auto& [key, c] : terms_)
    out.add_term(key.second + k * key.first, key.first, c);
  return out;
}

std::int64_t BivariatePolynomial::coefficient(int q_exp, int t_exp) const {
  auto it = terms_.find(std::make_pair(t_exp, q_exp));
  return it == terms_.end() ? 0 : it->second;
}

std::int64_t BivariatePolynomial::value_at_one() const {
  std::int64_t sum = 0;
  for (const auto& [key, c] : terms_) sum = checked_add(sum, c);
  return sum;
}

std::vector<BivariatePolynomial::Term> BivariatePolynomial::terms() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [key, c] : terms_) out.push_back({key.second, key.first, c});
  return out;
}

namespace {

void append_power(std::string& out, const char* var, int exp) {
  if (exp == 0) return;
  if (!out.empty()) out += '*';
  out += var;
  if (exp > 1) out += '^' + std::to_string(exp);
}

std::string term_body(const BivariatePolynomial::Term& t,
                      std::int64_t abs_coeff) {
  std::string body;
  append_power(body, "q", t.q_exp);
  append_power(body, "t", t.t_exp);
  if (body.empty()) return std::to_string(abs_coeff);
  if (abs_coeff != 1) body = std::to_string(abs_coeff) + "*" + body;
  return body;
}

}  // namespace

std::string BivariatePolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const Term& t : terms()) {
    const bool negative = t.coeff < 0;
    const std::int64_t abs_coeff = negative ? -t.coeff : t.coeff;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    out += term_body(t, abs_coeff);
  }
  return out;
}

nlohmann::json BivariatePolynomial::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const Term& t : terms())
    arr.push_back({{"q", t.q_exp}, {"t", t.t_exp}, {"c", t.coeff}});
  return arr;
}

std::string BivariatePolynomial::csv() const {
  std::string out = "q_exp,t_exp,coeff\n";
  for (const Term& t : terms())
    out += std::to_string(t.q_exp) + ',' + std::to_string(t.t_exp) + ',' +
           std::to_string(t.coeff) + '\n';
  return out;
}

BivariatePolynomial q_bracket(int n) {
  BivariatePolynomial out;
  for (int a = 0; a < n; ++a) out.add_term(a, 0, 1);
  return out;
}

BivariatePolynomial q_factorial(int n) {
  if (n < 0 || n > 20)
    throw std::domain_error("q_factorial: n must be in [0, 20]");
  BivariatePolynomial out = BivariatePolynomial::constant(1);
  for (int k = 1; k <= n; ++k) out = out * q_bracket(k);
  return out;
}

namespace {

enum class MnKind { first_letter, minimum_position };

// Bottom-up table for M_n(q,t).  Both block decompositions share the
// empty-block term M_{n-1}(q,qt): dropping the front letter shifts every
// descent one place right, which multiplies each monomial by q^des.
BivariatePolynomial mn_table(int n, MnKind kind) {
  if (n < 0 || n > 20)
    throw std::domain_error("M_n recurrence: n must be in [0, 20]");
  std::vector<BivariatePolynomial> m(n + 1);
  m[0] = BivariatePolynomial::constant(1);
  for (int len = 1; len <= n; ++len) {
    BivariatePolynomial acc = m[len - 1].scale_t_argument(1);
    for (int k = 1; k <= len - 1; ++k) {
      const BivariatePolynomial qkt = BivariatePolynomial::monomial(1, k, 1);
      if (kind == MnKind::first_letter) {
        acc += qkt * m[k - 1].scale_t_argument(1) *
               m[len - k].scale_t_argument(k);
      } else {
        acc += qkt * m[k] * m[len - k - 1].scale_t_argument(k + 1);
      }
    }
    m[len] = std::move(acc);
  }
  return m[n];
}

}  // namespace

BivariatePolynomial mn_via_recurrence(int n) {
  return mn_table(n, MnKind::first_letter);
}

BivariatePolynomial mn_via_alternate(int n) {
  return mn_table(n, MnKind::minimum_position);
}

}  // namespace permstat
