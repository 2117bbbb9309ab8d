#include "fockqha/qharep.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fockqha {

QPoly q_polynomial(const CartanDatum& datum, int i, int j) {
  datum.check_index(i);
  datum.check_index(j);
  if (i == j) return QPoly();
  if (datum.a(i, j) == 0) return QPoly::constant(1);
  return QPoly::monomial(1, -datum.a(i, j), 0) + QPoly::monomial(1, 0, -datum.a(j, i));
}

QTable::QTable(const CartanDatum& datum) : rank_(datum.rank()), table_(rank_ * rank_) {
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) table_[i * rank_ + j] = q_polynomial(datum, i, j);
}

const QPoly& QTable::operator()(int i, int j) const {
  if (i < 0 || j < 0 || i >= rank_ || j >= rank_) throw std::out_of_range("Q index outside I");
  return table_[i * rank_ + j];
}

void validate_q_table(const CartanDatum& datum, const QTable& table) {
  if (table.rank() != datum.rank()) throw std::invalid_argument("Q table rank mismatch");
  const auto pair_name = [](int i, int j) { return std::to_string(i) + "," + std::to_string(j); };
  for (int i = 0; i < datum.rank(); ++i) {
    for (int j = 0; j < datum.rank(); ++j) {
      const QPoly& q = table(i, j);
      if (i == j) {
        if (!q.is_zero()) throw std::invalid_argument("Q_{" + pair_name(i, i) + "} must vanish");
        continue;
      }
      for (const auto& [e, c] : q.terms()) {
        const int weight = e[0] * datum.form(i, i) + e[1] * datum.form(j, j) + 2 * datum.form(i, j);
        if (e[2] != 0 || weight != 0) {
          throw std::invalid_argument("Q_{" + pair_name(i, j) + "} term u^" + std::to_string(e[0]) +
                                      " v^" + std::to_string(e[1]) + " breaks homogeneity");
        }
      }
      if (q.coefficient(-datum.a(i, j), 0) == 0) {
        throw std::invalid_argument("Q_{" + pair_name(i, j) + "} has vanishing leading coefficient");
      }
      if (q != table(j, i).swap_uv()) {
        throw std::invalid_argument("Q_{" + pair_name(i, j) + "}(u,v) != Q_{" + pair_name(j, i) + "}(v,u)");
      }
    }
  }
}

QTable QTable::with_overrides(const CartanDatum& datum,
                              const std::map<std::pair<int, int>, std::vector<QTerm>>& overrides) {
  QTable table(datum);
  std::map<std::pair<int, int>, QPoly> given;
  for (const auto& [key, terms] : overrides) {
    const auto [i, j] = key;
    if (i < 0 || j < 0 || i >= datum.rank() || j >= datum.rank()) {
      throw std::invalid_argument("Q override index outside I");
    }
    QPoly q;
    for (const auto& term : terms) {
      if (term.p < 0 || term.q < 0) throw std::invalid_argument("negative exponent in Q override");
      q.add_term(term.t, {term.p, term.q, 0});
    }
    given[key] = q;
  }
  for (const auto& [key, q] : given) {
    const auto [i, j] = key;
    table.table_[i * table.rank_ + j] = q;
    const auto mirror = given.find({j, i});
    if (mirror == given.end()) {
      table.table_[j * table.rank_ + i] = q.swap_uv();
    } else if (mirror->second != q.swap_uv()) {
      throw std::invalid_argument("Q overrides for " + std::to_string(i) + "," + std::to_string(j) +
                                  " and its mirror disagree");
    }
  }
  validate_q_table(datum, table);
  return table;
}

namespace {

std::pair<int, int> parse_pair_key(const std::string& key) {
  const auto comma = key.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("Q key must be \"i,j\": " + key);
  try {
    std::size_t used_i = 0;
    std::size_t used_j = 0;
    const std::string left = key.substr(0, comma);
    const std::string right = key.substr(comma + 1);
    const int i = std::stoi(left, &used_i);
    const int j = std::stoi(right, &used_j);
    if (used_i != left.size() || used_j != right.size()) throw std::invalid_argument(key);
    return {i, j};
  } catch (const std::logic_error&) {
    throw std::invalid_argument("Q key must be \"i,j\": " + key);
  }
}

BigInt json_integer(const nlohmann::json& value) {
  if (value.is_number_integer()) return BigInt(value.get<long long>());
  if (value.is_string()) {
    const auto text = value.get<std::string>();
    const bool digits = !text.empty() &&
                        text.find_first_not_of("0123456789", text[0] == '-' ? 1 : 0) == std::string::npos &&
                        text != "-";
    if (digits) return BigInt(text);
  }
  throw std::invalid_argument("Q coefficient must be an integer or decimal string");
}

}  // namespace

QTable QTable::from_json(const CartanDatum& datum, const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw std::invalid_argument(std::string("Q table is not valid JSON: ") + err.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("Q table must be a JSON object");
  std::map<std::pair<int, int>, std::vector<QTerm>> overrides;
  for (const auto& [key, value] : doc.items()) {
    if (!value.is_array()) throw std::invalid_argument("Q entry " + key + " must be a list");
    std::vector<QTerm> terms;
    for (const auto& triple : value) {
      if (!triple.is_array() || triple.size() != 3 || !triple[0].is_number_integer() ||
          !triple[1].is_number_integer()) {
        throw std::invalid_argument("Q entry " + key + " must hold [p, q, t] triples");
      }
      terms.push_back({triple[0].get<int>(), triple[1].get<int>(), json_integer(triple[2])});
    }
    overrides[parse_pair_key(key)] = std::move(terms);
  }
  return with_overrides(datum, overrides);
}

QTable QTable::from_file(const CartanDatum& datum, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read Q table " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return from_json(datum, buffer.str());
}

Matrix MatrixRep::e(const ResidueSequence& nu) const {
  const auto it = idempotents.find(nu);
  return it == idempotents.end() ? Matrix::zero(dim) : it->second;
}

std::optional<ResidueSequence> MatrixRep::label(std::size_t b) const {
  for (const auto& [nu, m] : idempotents) {
    if (m(b, b) == 1) return nu;
  }
  return std::nullopt;
}

ShiftedDiagram homogeneous_shape(const CartanDatum& datum, int i) {
  if (i < 0 || i >= datum.ell()) throw std::out_of_range("homogeneous module index must lie in [0, l-1]");
  std::vector<int> parts{datum.period() - i - 1};
  if (i > 0) parts.push_back(i);
  return ShiftedDiagram(parts);
}

MatrixRep build_L(const CartanDatum& datum, int i) {
  const ShiftedDiagram shape = homogeneous_shape(datum, i);
  MatrixRep rep;
  rep.ell = datum.ell();
  rep.n = datum.period() - 1;
  rep.basis = enumerate_standard(shape);
  rep.dim = rep.basis.size();

  std::map<StandardTableau, std::size_t> index;
  for (std::size_t b = 0; b < rep.dim; ++b) index.emplace(rep.basis[b], b);

  for (std::size_t b = 0; b < rep.dim; ++b) {
    auto [it, inserted] = rep.idempotents.try_emplace(residue_sequence(datum, rep.basis[b]), Matrix::zero(rep.dim));
    it->second(b, b) = 1;
  }
  rep.x.assign(rep.n, Matrix::zero(rep.dim));
  for (int l = 1; l < rep.n; ++l) {
    Matrix m = Matrix::zero(rep.dim);
    for (std::size_t b = 0; b < rep.dim; ++b) {
      if (const auto swapped = rep.basis[b].swapped(l)) m(index.at(*swapped), b) = 1;
    }
    rep.psi.push_back(std::move(m));
  }
  return rep;
}

MatrixRep build_S(const CartanDatum& datum, int i) {
  MatrixRep rep = build_L(datum, i);
  std::map<ResidueSequence, Matrix> extended;
  for (auto& [nu, m] : rep.idempotents) extended.emplace(nu.appended(i), std::move(m));
  rep.idempotents = std::move(extended);
  rep.n += 1;
  rep.x.push_back(Matrix::zero(rep.dim));
  rep.psi.push_back(Matrix::zero(rep.dim));
  return rep;
}

MatrixRep restrict_last(const MatrixRep& rep, int j) {
  if (rep.n < 1) throw std::invalid_argument("restriction needs word length >= 1");
  for (const auto& [nu, m] : rep.idempotents) {
    if (!m.is_diagonal()) throw std::invalid_argument("restriction needs diagonal idempotents");
  }
  std::vector<std::size_t> kept;
  for (std::size_t b = 0; b < rep.dim; ++b) {
    const auto nu = rep.label(b);
    if (nu && !nu->empty() && (*nu)[nu->size() - 1] == j) kept.push_back(b);
  }
  MatrixRep out;
  out.ell = rep.ell;
  out.n = rep.n - 1;
  out.dim = kept.size();
  if (!rep.basis.empty()) {
    for (const auto b : kept) out.basis.push_back(rep.basis[b]);
  }
  for (const auto& [nu, m] : rep.idempotents) {
    if (nu.empty() || nu[nu.size() - 1] != j) continue;
    Matrix block = m.compress(kept);
    if (!block.is_zero()) out.idempotents.emplace(nu.without_last(), std::move(block));
  }
  for (int k = 0; k < out.n; ++k) out.x.push_back(rep.x.at(k).compress(kept));
  for (int l = 0; l + 1 < out.n; ++l) out.psi.push_back(rep.psi.at(l).compress(kept));
  return out;
}

std::string Violation::to_string() const {
  std::ostringstream out;
  out << relation << " nu=(" << nu.to_string() << ")";
  if (!where.empty()) out << " " << where;
  out << " max residual " << to_decimal(max_residual);
  return out.str();
}

namespace {

void check_shapes(const MatrixRep& rep) {
  const auto square = [&](const Matrix& m) { return m.rows() == rep.dim && m.cols() == rep.dim; };
  if (rep.n < 0) throw std::invalid_argument("negative word length");
  if (static_cast<int>(rep.x.size()) != rep.n) throw std::invalid_argument("need one x_k per position");
  if (static_cast<int>(rep.psi.size()) != (rep.n == 0 ? 0 : rep.n - 1)) {
    throw std::invalid_argument("need one psi_l per adjacent pair");
  }
  for (const auto& [nu, m] : rep.idempotents)
    if (!square(m)) throw std::invalid_argument("idempotent has the wrong size");
  for (const auto& m : rep.x)
    if (!square(m)) throw std::invalid_argument("x_k has the wrong size");
  for (const auto& m : rep.psi)
    if (!square(m)) throw std::invalid_argument("psi_l has the wrong size");
}

std::string indices(const char* a, int va, const char* b = nullptr, int vb = 0) {
  std::string s = std::string(a) + "=" + std::to_string(va);
  if (b != nullptr) s += std::string(" ") + b + "=" + std::to_string(vb);
  return s;
}

}  // namespace

std::vector<Violation> check_relations(const CartanDatum& datum, const MatrixRep& rep, const QTable& table) {
  check_shapes(rep);
  std::vector<Violation> out;
  const auto report = [&](const char* relation, const ResidueSequence& nu, std::string where, const Matrix& residual) {
    if (!residual.is_zero()) out.push_back({relation, nu, std::move(where), residual.max_abs_entry()});
  };
  const int n = rep.n;
  const std::size_t dim = rep.dim;
  const Matrix id = Matrix::identity(dim);

  std::vector<ResidueSequence> keys;
  for (const auto& [nu, m] : rep.idempotents) {
    bool valid = nu.size() == n;
    for (const int label : nu) valid = valid && label >= 0 && label < datum.rank();
    if (!valid) {
      report("idempotent-label", nu, "", m);
      continue;
    }
    if (!m.is_zero()) keys.push_back(nu);
  }

  // e(nu) e(nu') = delta e(nu), sum e(nu) = 1.
  Matrix total = Matrix::zero(dim);
  for (const auto& nu : keys) {
    const Matrix& e = rep.idempotents.at(nu);
    total += e;
    for (const auto& mu : keys) {
      Matrix residual = e * rep.idempotents.at(mu);
      if (nu == mu) residual -= e;
      report("e-orthogonality", nu, "with (" + mu.to_string() + ")", residual);
    }
  }
  report("e-completeness", ResidueSequence(), "", total - id);

  for (int k = 1; k <= n; ++k) {
    const Matrix& xk = rep.x[k - 1];
    for (const auto& nu : keys) {
      const Matrix& e = rep.idempotents.at(nu);
      report("x-e-commute", nu, indices("k", k), xk * e - e * xk);
    }
    for (int l = k + 1; l <= n; ++l) {
      report("x-commute", ResidueSequence(), indices("k", k, "l", l), xk * rep.x[l - 1] - rep.x[l - 1] * xk);
    }
  }

  for (int l = 1; l < n; ++l) {
    std::set<ResidueSequence> sequences(keys.begin(), keys.end());
    for (const auto& nu : keys) sequences.insert(nu.swapped(l));
    const Matrix& p = rep.psi[l - 1];
    for (const auto& nu : sequences) report("psi-e", nu, indices("l", l), p * rep.e(nu) - rep.e(nu.swapped(l)) * p);
    for (int k = l + 2; k < n; ++k) {
      report("psi-distant", ResidueSequence(), indices("k", l, "l", k), p * rep.psi[k - 1] - rep.psi[k - 1] * p);
    }
  }

  std::map<std::pair<int, int>, QPoly> deviation;
  for (const auto& nu : keys) {
    const Matrix& e = rep.idempotents.at(nu);
    for (int k = 1; k < n; ++k) {
      const Matrix& pk = rep.psi[k - 1];
      const Matrix& xk = rep.x[k - 1];
      const Matrix& xk1 = rep.x[k];
      const int a = nu[k - 1];
      const int b = nu[k];
      const QPoly& q = table(a, b);
      report("psi-square", nu, indices("k", k), pk * pk * e - q.evaluate(xk, xk1, xk1) * e);

      for (int l = 1; l <= n; ++l) {
        const int sl = l == k ? k + 1 : (l == k + 1 ? k : l);
        Matrix residual = (pk * rep.x[l - 1] - rep.x[sl - 1] * pk) * e;
        if (a == b && l == k) residual += e;
        if (a == b && l == k + 1) residual -= e;
        report("psi-x", nu, indices("k", k, "l", l), residual);
      }

      if (k + 1 < n) {
        const Matrix& pk1 = rep.psi[k];
        Matrix residual = (pk1 * pk * pk1 - pk * pk1 * pk) * e;
        if (a == nu[k + 1]) {
          auto it = deviation.find({a, b});
          if (it == deviation.end()) it = deviation.emplace(std::make_pair(a, b), divided_difference(q)).first;
          residual -= it->second.evaluate(xk, xk1, rep.x[k + 1]) * e;
        }
        report("braid", nu, indices("k", k), residual);
      }
    }
    if (n >= 1) {
      // <h_i, Lambda_0> = delta_{i,0}.
      const Matrix lhs = nu[0] == 0 ? Matrix(rep.x[0] * e) : e;
      report("cyclotomic", nu, "", lhs);
    }
  }
  return out;
}

std::vector<Violation> check_relations(const CartanDatum& datum, const MatrixRep& rep) {
  return check_relations(datum, rep, QTable(datum));
}

int generator_degree(const CartanDatum& datum, Generator gen, int index, const ResidueSequence& nu) {
  switch (gen) {
    case Generator::E:
      return 0;
    case Generator::X:
      if (index < 1 || index > nu.size()) throw std::out_of_range("x_k index outside the word");
      return datum.form(nu[index - 1], nu[index - 1]);
    case Generator::Psi:
      if (index < 1 || index >= nu.size()) throw std::out_of_range("psi_l index outside the word");
      return -datum.form(nu[index - 1], nu[index]);
  }
  throw std::logic_error("unknown generator");
}

std::vector<Violation> degree_defects(const CartanDatum& datum, const MatrixRep& rep) {
  std::vector<Violation> out;
  for (int l = 1; l < rep.n; ++l) {
    for (const auto& [nu, e] : rep.idempotents) {
      const Matrix block = rep.psi[l - 1] * e;
      if (!block.is_zero() && generator_degree(datum, Generator::Psi, l, nu) != 0) {
        out.push_back({"psi-degree", nu, "l=" + std::to_string(l), block.max_abs_entry()});
      }
    }
  }
  return out;
}

}  // namespace fockqha
