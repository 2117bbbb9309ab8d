#include "fockqha/cartan.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fockqha {

CartanDatum::CartanDatum(int ell) : ell_(ell) {
  if (ell < 1) throw std::invalid_argument("ell must be at least 1");
  const int n = ell + 1;
  matrix_.assign(n * n, 0);
  symmetrizer_.assign(n, 2);
  auto at = [&](int i, int j) -> int& { return matrix_[i * n + j]; };
  for (int i = 0; i < n; ++i) at(i, i) = 2;
  if (ell == 1) {
    at(0, 1) = -4;
    at(1, 0) = -1;
  } else {
    for (int i = 0; i + 1 < n; ++i) {
      at(i, i + 1) = -1;
      at(i + 1, i) = -1;
    }
    at(0, 1) = -2;
    at(ell - 1, ell) = -2;
  }
  symmetrizer_.front() = 1;
  symmetrizer_.back() = 4;
}

void CartanDatum::check_index(int i) const {
  if (i < 0 || i > ell_) {
    throw std::out_of_range("index " + std::to_string(i) + " outside I = {0,...," +
                            std::to_string(ell_) + "}");
  }
}

int CartanDatum::a(int i, int j) const {
  check_index(i);
  check_index(j);
  return matrix_[i * rank() + j];
}

int CartanDatum::d(int i) const {
  check_index(i);
  return symmetrizer_[i];
}

RootElement RootElement::simple(int rank, int i) {
  RootElement r = zero(rank);
  r[i] = 1;
  return r;
}

RootElement::Coeff RootElement::height() const {
  return std::accumulate(k_.begin(), k_.end(), Coeff{0});
}

bool RootElement::is_positive() const {
  for (auto c : k_)
    if (c < 0) return false;
  return true;
}

RootElement& RootElement::operator+=(const RootElement& other) {
  if (other.size() != size()) throw std::invalid_argument("root elements of different rank");
  for (int i = 0; i < size(); ++i) k_[i] += other.k_[i];
  return *this;
}

RootElement& RootElement::operator-=(const RootElement& other) {
  if (other.size() != size()) throw std::invalid_argument("root elements of different rank");
  for (int i = 0; i < size(); ++i) k_[i] -= other.k_[i];
  return *this;
}

std::string RootElement::to_string() const {
  std::ostringstream out;
  for (int i = 0; i < size(); ++i) out << (i ? "," : "") << k_[i];
  return out.str();
}

std::string Weight::to_string() const {
  std::ostringstream out;
  out << "L0";
  for (int i = 0; i < c_.size(); ++i) {
    const auto c = c_[i];
    if (c == 0) continue;
    out << (c > 0 ? " - " : " + ");
    const auto m = c > 0 ? c : -c;
    if (m != 1) out << m;
    out << "a" << i;
  }
  return out.str();
}

std::int64_t pairing_h(const CartanDatum& datum, int i, const Weight& w) {
  datum.check_index(i);
  const auto& c = w.deficit();
  if (c.size() != datum.rank()) throw std::invalid_argument("weight rank does not match datum");
  std::int64_t value = i == 0 ? 1 : 0;
  for (int j = 0; j < datum.rank(); ++j) value -= c[j] * datum.a(i, j);
  return value;
}

std::int64_t pairing_d(const Weight& w) { return -w.deficit()[0]; }

std::int64_t bilinear(const CartanDatum& datum, const RootElement& x, const RootElement& y) {
  if (x.size() != datum.rank() || y.size() != datum.rank()) {
    throw std::invalid_argument("root element rank does not match datum");
  }
  std::int64_t value = 0;
  for (int i = 0; i < datum.rank(); ++i)
    for (int j = 0; j < datum.rank(); ++j) value += x[i] * y[j] * datum.form(i, j);
  return value;
}

Weight reflect(const CartanDatum& datum, int i, const Weight& w) {
  RootElement c = w.deficit();
  c[i] += pairing_h(datum, i, w);
  return Weight(std::move(c));
}

RootElement null_root(const CartanDatum& datum) {
  std::vector<RootElement::Coeff> k(datum.rank(), 2);
  k.back() = 1;
  return RootElement(std::move(k));
}

}  // namespace fockqha
