#include "fockqha/qpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace fockqha {

QPoly QPoly::constant(const BigInt& c) { return monomial(c, 0, 0, 0); }

QPoly QPoly::monomial(const BigInt& c, int pu, int pv, int pw) {
  if (pu < 0 || pv < 0 || pw < 0) throw std::invalid_argument("negative exponent");
  QPoly q;
  q.add_term(c, {pu, pv, pw});
  return q;
}

BigInt QPoly::coefficient(int pu, int pv, int pw) const {
  const auto it = terms_.find({pu, pv, pw});
  return it == terms_.end() ? BigInt(0) : it->second;
}

void QPoly::add_term(const BigInt& c, const Exponents& e) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

QPoly QPoly::swap_uv() const {
  QPoly out;
  for (const auto& [e, c] : terms_) out.add_term(c, {e[1], e[0], e[2]});
  return out;
}

QPoly QPoly::substitute_u_by_w() const {
  QPoly out;
  for (const auto& [e, c] : terms_) out.add_term(c, {0, e[1], e[2] + e[0]});
  return out;
}

QPoly& QPoly::operator+=(const QPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(c, e);
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(-c, e);
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  QPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      out.add_term(ca * cb, {ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]});
  return out;
}

Matrix QPoly::evaluate(const Matrix& u, const Matrix& v, const Matrix& w) const {
  const std::size_t n = u.rows();
  Matrix out = Matrix::zero(n);
  for (const auto& [e, c] : terms_) {
    Matrix term = u.power(e[0]) * v.power(e[1]) * w.power(e[2]);
    out += Rational(c) * std::move(term);
  }
  return out;
}

std::string QPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Highest total degree first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    BigInt magnitude = c < 0 ? BigInt(-c) : c;
    if (first) out << (c < 0 ? "-" : "");
    else out << (c < 0 ? " - " : " + ");
    first = false;
    const bool bare = e[0] == 0 && e[1] == 0 && e[2] == 0;
    bool wrote = false;
    if (magnitude != 1 || bare) {
      out << magnitude;
      wrote = true;
    }
    const char names[3] = {'u', 'v', 'w'};
    for (int k = 0; k < 3; ++k) {
      if (e[k] == 0) continue;
      if (wrote) out << "*";
      out << names[k];
      if (e[k] > 1) out << "^" << e[k];
      wrote = true;
    }
  }
  return out.str();
}

QPoly divided_difference(const QPoly& q) {
  for (const auto& [e, c] : q.terms()) {
    if (e[2] != 0) throw std::invalid_argument("divided difference expects a polynomial in u, v");
  }
  QPoly rest = q - q.substitute_u_by_w();
  QPoly quotient;
  // Each step trades c u^a v^b w^k for c u^{a-1} v^b w^{k+1}, lowering the u-degree.
  while (true) {
    auto lead = rest.terms().end();
    for (auto it = rest.terms().begin(); it != rest.terms().end(); ++it) {
      if (it->first[0] > 0 && (lead == rest.terms().end() || it->first[0] > lead->first[0])) lead = it;
    }
    if (lead == rest.terms().end()) break;
    const auto e = lead->first;
    const BigInt c = lead->second;
    quotient.add_term(c, {e[0] - 1, e[1], e[2]});
    rest.add_term(-c, e);
    rest.add_term(c, {e[0] - 1, e[1], e[2] + 1});
  }
  if (!rest.is_zero()) {
    throw std::logic_error("divided difference left remainder " + rest.to_string());
  }
  return quotient;
}

}  // namespace fockqha
