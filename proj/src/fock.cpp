#include "fockqha/fock.hpp"

#include <sstream>
#include <stdexcept>

namespace fockqha {

FockVector FockVector::basis(ShiftedDiagram lambda) {
  FockVector v;
  v.terms_.emplace(std::move(lambda), BigInt(1));
  return v;
}

BigInt FockVector::coefficient(const ShiftedDiagram& lambda) const {
  const auto it = terms_.find(lambda);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void FockVector::add(const ShiftedDiagram& lambda, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

FockVector& FockVector::operator+=(const FockVector& other) {
  for (const auto& [lambda, c] : other.terms_) add(lambda, c);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& other) {
  for (const auto& [lambda, c] : other.terms_) add(lambda, -c);
  return *this;
}

FockVector operator*(const BigInt& c, const FockVector& v) {
  FockVector out;
  for (const auto& [lambda, coeff] : v.terms_) out.add(lambda, c * coeff);
  return out;
}

std::string FockVector::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [lambda, c] : terms_) {
    BigInt magnitude = c;
    if (first) {
      if (c < 0) {
        out << "-";
        magnitude = -c;
      }
    } else {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) magnitude = -c;
    }
    if (magnitude != 1) out << magnitude << "*";
    out << "(" << lambda.to_string() << ")";
    first = false;
  }
  return out.str();
}

FockVector apply_f(const CartanDatum& datum, int i, const FockVector& v) {
  datum.check_index(i);
  FockVector out;
  for (const auto& [lambda, c] : v.terms()) {
    for (const Box& b : lambda.addable_boxes()) {
      if (residue(datum, b.row, b.col) == i) out.add(lambda.with_box(b), c);
    }
  }
  return out;
}

FockVector apply_e(const CartanDatum& datum, int i, const FockVector& v) {
  datum.check_index(i);
  FockVector out;
  for (const auto& [lambda, c] : v.terms()) {
    for (const Box& b : lambda.removable_boxes()) {
      if (residue(datum, b.row, b.col) != i) continue;
      const ShiftedDiagram mu = lambda.without_box(b);
      const bool doubled = i == 0 && mu.depth() == lambda.depth();
      out.add(mu, doubled ? BigInt(2 * c) : c);
    }
  }
  return out;
}

Weight weight(const CartanDatum& datum, const ShiftedDiagram& lambda) {
  return Weight(content(datum, lambda));
}

BigInt apply_e_word(const CartanDatum& datum, const ResidueSequence& nu,
                    const ShiftedDiagram& lambda) {
  if (nu.size() != lambda.size()) throw std::invalid_argument("|nu| must equal |lambda|");
  FockVector v = FockVector::basis(lambda);
  for (int k = nu.size() - 1; k >= 0 && !v.is_zero(); --k) v = apply_e(datum, nu[k], v);
  if (v.is_zero()) return 0;
  if (v.terms().size() != 1 || !v.terms().begin()->first.empty()) {
    throw std::logic_error("e-word result is not a multiple of the vacuum");
  }
  return v.terms().begin()->second;
}

FockVector apply_f_word(const CartanDatum& datum, const ResidueSequence& nu) {
  FockVector v = FockVector::vacuum();
  for (int label : nu) v = apply_f(datum, label, v);
  return v;
}

std::vector<CommutatorDefect> commutator_defects(const CartanDatum& datum,
                                                 const ShiftedDiagram& lambda) {
  std::vector<CommutatorDefect> defects;
  const FockVector v = FockVector::basis(lambda);
  const Weight wt = weight(datum, lambda);
  for (int i = 0; i < datum.rank(); ++i) {
    for (int j = 0; j < datum.rank(); ++j) {
      const FockVector lhs = apply_e(datum, i, apply_f(datum, j, v)) -
                             apply_f(datum, j, apply_e(datum, i, v));
      const FockVector rhs = i == j ? BigInt(pairing_h(datum, i, wt)) * v : FockVector{};
      if (lhs != rhs) defects.push_back({lambda, i, j});
    }
  }
  return defects;
}

std::vector<CommutatorDefect> sl2_sweep(const CartanDatum& datum, int max_n) {
  std::vector<CommutatorDefect> all;
  for (int n = 0; n <= max_n; ++n) {
    for (const auto& lambda : enumerate_diagrams(n)) {
      auto d = commutator_defects(datum, lambda);
      all.insert(all.end(), d.begin(), d.end());
    }
  }
  return all;
}

}  // namespace fockqha
