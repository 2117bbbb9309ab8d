#include "fockqha/render.hpp"

#include <iomanip>
#include <sstream>

namespace fockqha::render {

json to_json(const ShiftedDiagram& lambda) { return json(lambda.parts()); }

json to_json(const ResidueSequence& nu) { return json(nu.entries()); }

json to_json(const RootElement& beta) { return json(beta.coeffs()); }

json to_json(const DimTerm& term) {
  return {{"shape", to_json(term.shape)},
          {"exp", term.exponent},
          {"count", to_decimal(term.count)},
          {"contribution", to_decimal(term.contribution)}};
}

json to_json(const DimReport& report) {
  json terms = json::array();
  for (const auto& t : report.terms) terms.push_back(to_json(t));
  return {{"beta", to_json(report.beta)}, {"dim", to_decimal(report.dim)}, {"terms", std::move(terms)}};
}

json to_json(const FockVector& v) {
  json terms = json::array();
  for (const auto& [shape, c] : v.terms()) terms.push_back({{"shape", to_json(shape)}, {"coeff", to_decimal(c)}});
  return {{"terms", std::move(terms)}};
}

json to_json(const TypeVerdict& verdict) {
  json out{{"kind", std::string(to_string(verdict.kind))}, {"note", verdict.note}};
  out["defect"] = verdict.defect ? json(*verdict.defect) : json(nullptr);
  return out;
}

json to_json(const BrauerData& data) {
  json dims = json::array();
  for (const auto& d : data.simple_dims) dims.push_back(to_decimal(d));
  json proj = json::array();
  for (const auto& d : data.projective_dims()) proj.push_back(to_decimal(d));
  return {{"ell", data.ell},
          {"edges", data.edges},
          {"exceptional_multiplicity", data.exceptional_multiplicity},
          {"simple_dims", std::move(dims)},
          {"cartan", data.cartan},
          {"projective_dims", std::move(proj)}};
}

json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& x = m(r, c);
      const BigInt num = numerator(x);
      const bool small = denominator(x) == 1 && num >= std::numeric_limits<long long>::min() &&
                         num <= std::numeric_limits<long long>::max();
      if (small) row.push_back(static_cast<long long>(num));
      else row.push_back(to_decimal(x));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const Violation& v) {
  return {{"relation", v.relation},
          {"nu", to_json(v.nu)},
          {"where", v.where},
          {"max_residual", to_decimal(v.max_residual)}};
}

json to_json(const GalleryEntry& entry) {
  return {{"name", entry.name},
          {"partition", json(entry.partition.parts())},
          {"strict", entry.strict},
          {"restricted", entry.restricted},
          {"weight", entry.weight.to_string()}};
}

json generators_json(const MatrixRep& rep) {
  json gens = json::object();
  for (const auto& [nu, m] : rep.idempotents) gens["e(" + nu.to_string() + ")"] = to_json(m);
  for (std::size_t k = 0; k < rep.x.size(); ++k) gens["x_" + std::to_string(k + 1)] = to_json(rep.x[k]);
  for (std::size_t l = 0; l < rep.psi.size(); ++l) gens["psi_" + std::to_string(l + 1)] = to_json(rep.psi[l]);
  return gens;
}

std::string text(const DimReport& report) {
  std::ostringstream out;
  out << "dim = " << report.dim << "\n";
  for (const auto& t : report.terms) {
    out << "  (" << t.shape.to_string() << ")  exp " << t.exponent << "  count " << t.count << "  -> "
        << t.contribution << "\n";
  }
  return out.str();
}

std::string text(const TypeVerdict& verdict, const std::optional<BrauerData>& brauer) {
  std::ostringstream out;
  out << "type: " << to_string(verdict.kind) << "\n";
  out << "defect: " << (verdict.defect ? std::to_string(*verdict.defect) : std::string("none")) << "\n";
  out << "note: " << verdict.note << "\n";
  if (brauer) {
    out << "Brauer line: (e=" << brauer->exceptional_multiplicity << ")";
    for (const auto& edge : brauer->edges) out << " --" << edge << "-- o";
    out << "\n";
    out << "simple dims:";
    for (const auto& d : brauer->simple_dims) out << " " << d;
    out << "\nprojective dims:";
    for (const auto& d : brauer->projective_dims()) out << " " << d;
    out << "\n";
  }
  return out.str();
}

std::string text(const Matrix& m) {
  std::ostringstream out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << "[";
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << std::setw(2) << to_decimal(m(r, c));
    out << " ]\n";
  }
  return out.str();
}

std::string hook_grid(const ShiftedDiagram& lambda) {
  std::ostringstream out;
  for (int row = 1; row <= lambda.depth(); ++row) {
    out << std::string(static_cast<std::size_t>(3 * (row - 1)), ' ');
    for (int k = 0; k < lambda.parts()[row - 1]; ++k) out << std::setw(3) << hook_length(lambda, row, row + k);
    out << "\n";
  }
  return out.str();
}

}  // namespace fockqha::render
