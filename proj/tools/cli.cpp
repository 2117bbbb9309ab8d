#include "cli.hpp"

#include "fockqha/crystal.hpp"
#include "fockqha/dimension.hpp"
#include "fockqha/fock.hpp"
#include "fockqha/qharep.hpp"
#include "fockqha/render.hpp"
#include "fockqha/reptype.hpp"
#include "fockqha/shifted.hpp"
#include "fockqha/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace fockqha::cli {

namespace {

using render::json;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::vector<long long> parse_int_list(const std::string& text, const char* what) {
  std::vector<long long> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const std::string piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    long long value = 0;
    const auto* first = piece.data();
    const auto* last = piece.data() + piece.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (piece.empty() || ec != std::errc() || ptr != last) {
      throw UsageError(std::string("malformed ") + what + ": \"" + text + "\"");
    }
    out.push_back(value);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

RootElement parse_beta(const CartanDatum& datum, const std::string& text) {
  const auto values = parse_int_list(text, "--beta");
  if (static_cast<int>(values.size()) != datum.rank()) {
    throw UsageError("--beta needs " + std::to_string(datum.rank()) + " coefficients for l=" +
                     std::to_string(datum.ell()));
  }
  for (const auto v : values) {
    if (v < 0) throw UsageError("--beta coefficients must be non-negative");
  }
  return RootElement(std::vector<RootElement::Coeff>(values.begin(), values.end()));
}

ResidueSequence parse_nu(const CartanDatum& datum, const std::string& text, const char* flag) {
  const auto values = parse_int_list(text, flag);
  std::vector<int> labels;
  for (const auto v : values) {
    if (v < 0 || v >= datum.rank()) throw UsageError(std::string(flag) + " label outside 0.." + std::to_string(datum.ell()));
    labels.push_back(static_cast<int>(v));
  }
  return ResidueSequence(labels);
}

ShiftedDiagram parse_shape(const std::string& text) {
  const auto values = parse_int_list(text, "--shape");
  std::vector<int> parts(values.begin(), values.end());
  try {
    return ShiftedDiagram(parts);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--shape: ") + e.what());
  }
}

QTable load_q_table(const CartanDatum& datum) {
  const char* path = std::getenv("FOCKQHA_QTABLE");
  if (path == nullptr || *path == '\0') return QTable(datum);
  try {
    return QTable::from_file(datum, path);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("FOCKQHA_QTABLE: ") + e.what());
  }
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << "\n"; }

// ---------------------------------------------------------------- tableaux

struct TableauxArgs {
  std::string shape;
  std::optional<int> ell;
  bool residues = false;
};

int cmd_tableaux(const TableauxArgs& a, bool as_json, std::ostream& out) {
  const ShiftedDiagram lambda = parse_shape(a.shape);
  if (a.residues && !a.ell) throw UsageError("--residues needs --ell");
  std::optional<CartanDatum> datum;
  if (a.ell) datum.emplace(*a.ell);
  const auto tableaux = enumerate_standard(lambda);
  const BigInt hooks = hook_count(lambda);

  if (as_json) {
    json list = json::array();
    for (const auto& t : tableaux) {
      json entry{{"rows", t.filling()}};
      if (a.residues) entry["residues"] = render::to_json(residue_sequence(*datum, t));
      list.push_back(std::move(entry));
    }
    json grid = json::array();
    for (int row = 1; row <= lambda.depth(); ++row) {
      json r = json::array();
      for (int k = 0; k < lambda.parts()[row - 1]; ++k) r.push_back(hook_length(lambda, row, row + k));
      grid.push_back(std::move(r));
    }
    emit(out, {{"shape", render::to_json(lambda)},
               {"count", to_decimal(BigInt(tableaux.size()))},
               {"hook_count", to_decimal(hooks)},
               {"hooks", std::move(grid)},
               {"tableaux", std::move(list)}});
    return kOk;
  }
  out << "shape (" << lambda.to_string() << "): " << tableaux.size() << " standard tableaux\n";
  out << "hook lengths:\n" << render::hook_grid(lambda);
  out << "hook count: " << hooks << "\n";
  for (const auto& t : tableaux) {
    out << "  " << t.to_string();
    if (a.residues) out << "    res " << residue_sequence(*datum, t).to_string();
    out << "\n";
  }
  return kOk;
}

// --------------------------------------------------------------------- dim

struct DimArgs {
  int ell = 0;
  std::optional<std::string> beta;
  std::optional<int> n;
  std::optional<std::string> nu;
  std::optional<std::string> nu2;
};

int cmd_dim(const DimArgs& a, bool as_json, std::ostream& out) {
  const CartanDatum datum(a.ell);
  const int modes = (a.beta ? 1 : 0) + (a.n ? 1 : 0) + ((a.nu || a.nu2) ? 1 : 0);
  if (modes != 1) throw UsageError("give exactly one of --beta, --n, or --nu with --nu2");
  if (a.nu.has_value() != a.nu2.has_value()) throw UsageError("--nu and --nu2 go together");

  if (a.n) {
    if (*a.n < 0) throw UsageError("--n must be non-negative");
    DimReport report{RootElement(), 0, {}};
    for (auto& lambda : enumerate_diagrams(*a.n)) {
      const int e = dim_exponent(datum, lambda);
      BigInt st = hook_count(lambda);
      BigInt contribution = pow2(e) * st * st;
      report.dim += contribution;
      report.terms.push_back({std::move(lambda), e, std::move(st), std::move(contribution)});
    }
    if (as_json) {
      json doc = render::to_json(report);
      doc.erase("beta");
      doc["n"] = *a.n;
      emit(out, doc);
    } else {
      out << "n = " << *a.n << "\n" << render::text(report);
    }
    return kOk;
  }
  if (a.beta) {
    const DimReport report = dim_block(datum, parse_beta(datum, *a.beta));
    if (as_json) emit(out, render::to_json(report));
    else out << "beta = (" << report.beta.to_string() << ")\n" << render::text(report);
    return kOk;
  }
  const ResidueSequence left = parse_nu(datum, *a.nu, "--nu");
  const ResidueSequence right = parse_nu(datum, *a.nu2, "--nu2");
  if (left.size() != right.size()) throw UsageError("--nu and --nu2 must have equal length");
  const DimReport report = dim_pair_report(datum, left, right);
  if (as_json) {
    json doc = render::to_json(report);
    doc["nu"] = render::to_json(left);
    doc["nu2"] = render::to_json(right);
    emit(out, doc);
  } else {
    out << "nu = (" << left.to_string() << "), nu2 = (" << right.to_string() << ")\n" << render::text(report);
  }
  return kOk;
}

// -------------------------------------------------------------------- type

struct TypeArgs {
  int ell = 0;
  std::string beta;
};

int cmd_type(const TypeArgs& a, bool as_json, std::ostream& out) {
  const CartanDatum datum(a.ell);
  const RootElement beta = parse_beta(datum, a.beta);
  const TypeVerdict verdict = classify(datum, beta);
  std::optional<BrauerData> brauer;
  if (verdict.defect == 1) brauer = brauer_data(datum);
  if (as_json) {
    json doc = render::to_json(verdict);
    doc["ell"] = a.ell;
    doc["beta"] = render::to_json(beta);
    if (brauer) doc["brauer"] = render::to_json(*brauer);
    emit(out, doc);
  } else {
    out << "beta = (" << beta.to_string() << ")\n" << render::text(verdict, brauer);
  }
  return kOk;
}

// ------------------------------------------------------------------ verify

struct VerifyArgs {
  int ell = 0;
  int max_n = 8;
  bool inject_fault = false;
};

int cmd_verify(const VerifyArgs& a, bool as_json, std::ostream& out) {
  if (a.max_n < 0) throw UsageError("--max-n must be non-negative");
  const CartanDatum datum(a.ell);
  const QTable table = load_q_table(datum);
  const auto results = run_verification(datum, {a.max_n, a.inject_fault}, table);
  const bool ok = std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
  if (as_json) {
    json checks = json::array();
    for (const auto& r : results) {
      checks.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"seconds", r.seconds}});
    }
    emit(out, {{"ell", a.ell}, {"max_n", a.max_n}, {"passed", ok}, {"checks", std::move(checks)}});
  } else {
    for (const auto& r : results) {
      out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.seconds << " s)";
      if (!r.passed) out << ": " << r.detail;
      out << "\n";
    }
    out << (ok ? "all checks passed" : "verification FAILED") << "\n";
  }
  return ok ? kOk : kVerificationFailure;
}

// --------------------------------------------------------------------- rep

struct RepArgs {
  int ell = 0;
  std::string module;
  std::string emit = "summary";
};

int cmd_rep(const RepArgs& a, bool as_json, std::ostream& out) {
  const CartanDatum datum(a.ell);
  if (a.module.size() < 3 || (a.module[0] != 'L' && a.module[0] != 'S') || a.module[1] != '_') {
    throw UsageError("--module must be L_i or S_i");
  }
  const auto index = parse_int_list(a.module.substr(2), "--module index");
  if (index.size() != 1) throw UsageError("--module must be L_i or S_i");
  const int i = static_cast<int>(index[0]);
  if (i < 0 || i >= datum.ell()) throw UsageError("--module index must lie in 0.." + std::to_string(datum.ell() - 1));
  const MatrixRep rep = a.module[0] == 'L' ? build_L(datum, i) : build_S(datum, i);
  const auto violations = check_relations(datum, rep, load_q_table(datum));
  const bool matrices = a.emit == "matrices";

  if (as_json || matrices) {
    json basis = json::array();
    for (const auto& t : rep.basis) basis.push_back(t.filling());
    json bad = json::array();
    for (const auto& v : violations) bad.push_back(render::to_json(v));
    json doc{{"module", a.module}, {"ell", a.ell}, {"n", rep.n}, {"dim", to_decimal(BigInt(rep.dim))},
             {"basis", std::move(basis)}, {"violations", std::move(bad)}};
    if (matrices) doc["generators"] = render::generators_json(rep);
    emit(out, doc);
  } else {
    out << a.module << " for l=" << a.ell << ": n=" << rep.n << ", dim=" << rep.dim << "\n";
    for (std::size_t b = 0; b < rep.dim; ++b) {
      out << "  " << rep.basis[b].to_string() << "    e(" << rep.label(b)->to_string() << ")\n";
    }
    for (const auto& v : violations) out << "violation: " << v.to_string() << "\n";
    out << (violations.empty() ? "all defining relations hold" : "relations FAILED") << "\n";
  }
  return violations.empty() ? kOk : kVerificationFailure;
}

// ----------------------------------------------------------------- gallery

int cmd_gallery(int ell, bool as_json, std::ostream& out) {
  const CartanDatum datum(ell);
  std::vector<GalleryEntry> entries;
  try {
    entries = wall_gallery(datum);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (as_json) {
    json list = json::array();
    for (const auto& e : entries) list.push_back(render::to_json(e));
    emit(out, {{"ell", ell}, {"walls", std::move(list)}});
    return kOk;
  }
  for (const auto& e : entries) {
    out << e.name << "  (" << e.partition.to_string() << ")  " << (e.strict ? "strict" : "not strict") << ", "
        << (e.restricted ? "restricted" : "not restricted") << "  wt = " << e.weight.to_string() << "\n";
  }
  return kOk;
}

// ---------------------------------------------------------------------- rp

struct RpArgs {
  int ell = 0;
  std::string beta;
};

int cmd_rp(const RpArgs& a, bool as_json, std::ostream& out) {
  const CartanDatum datum(a.ell);
  const RootElement beta = parse_beta(datum, a.beta);
  const auto list = enumerate_rp(datum, beta);
  if (as_json) {
    json parts = json::array();
    for (const auto& rp : list) parts.push_back(rp.partition().parts());
    emit(out, {{"beta", render::to_json(beta)}, {"count", to_decimal(BigInt(list.size()))},
               {"partitions", std::move(parts)}});
    return kOk;
  }
  out << "RP_" << datum.period() << "(" << beta.to_string() << "): " << list.size() << "\n";
  for (const auto& rp : list) out << "  (" << rp.partition().to_string() << ")\n";
  return kOk;
}

// -------------------------------------------------------------------- fock

struct FockArgs {
  int ell = 0;
  std::string shape;
  std::optional<std::string> ops;
  std::optional<std::string> e_word;
  std::optional<std::string> f_word;
};

int cmd_fock(const FockArgs& a, bool as_json, std::ostream& out) {
  const CartanDatum datum(a.ell);
  const int modes = (a.ops ? 1 : 0) + (a.e_word ? 1 : 0) + (a.f_word ? 1 : 0);
  if (modes > 1) throw UsageError("give at most one of --ops, --e-word, --f-word");
  const ShiftedDiagram lambda = parse_shape(a.shape);

  if (a.e_word) {
    const ResidueSequence nu = parse_nu(datum, *a.e_word, "--e-word");
    if (nu.size() != lambda.size()) throw UsageError("--e-word length must equal |shape|");
    const BigInt c = apply_e_word(datum, nu, lambda);
    if (as_json) emit(out, {{"shape", render::to_json(lambda)}, {"nu", render::to_json(nu)}, {"coeff", to_decimal(c)}});
    else out << c << "\n";
    return kOk;
  }

  FockVector v;
  if (a.f_word) {
    if (!lambda.empty()) throw UsageError("--f-word acts on the vacuum; omit --shape");
    v = apply_f_word(datum, parse_nu(datum, *a.f_word, "--f-word"));
  } else {
    v = FockVector::basis(lambda);
    if (a.ops) {
      std::istringstream ops(*a.ops);
      std::string op;
      while (std::getline(ops, op, ',')) {
        if (op.size() < 2 || (op[0] != 'e' && op[0] != 'f')) throw UsageError("--ops entries look like e0 or f2");
        const auto label = parse_int_list(op.substr(1), "--ops label");
        if (label.size() != 1 || label[0] < 0 || label[0] >= datum.rank()) throw UsageError("--ops label outside I");
        const int i = static_cast<int>(label[0]);
        v = op[0] == 'e' ? apply_e(datum, i, v) : apply_f(datum, i, v);
      }
    }
  }
  if (as_json) {
    json doc = render::to_json(v);
    if (!a.f_word && !a.ops) doc["weight"] = weight(datum, lambda).to_string();
    emit(out, doc);
  } else {
    out << v.to_string() << "\n";
    if (!a.f_word && !a.ops) out << "wt = " << weight(datum, lambda).to_string() << "\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact dimensions, representation types and homogeneous modules of finite quiver Hecke algebras "
               "of type A^(2)_{2l}"};
  app.name("fockqha");
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit JSON instead of text");

  const auto positive = CLI::PositiveNumber;

  TableauxArgs tableaux;
  auto* tab = app.add_subcommand("tableaux", "List standard shifted tableaux of a shape");
  tab->add_option("--shape", tableaux.shape, "Strict partition, e.g. 4,1")->required();
  tab->add_option("--ell", tableaux.ell, "Rank l, needed for residues")->check(positive);
  tab->add_flag("--residues", tableaux.residues, "Print residue sequences");

  DimArgs dim;
  auto* dim_cmd = app.add_subcommand("dim", "Dimension of R(beta), R(n) or e(nu2) R e(nu)");
  dim_cmd->add_option("--ell", dim.ell, "Rank l")->required()->check(positive);
  dim_cmd->add_option("--beta", dim.beta, "Coefficients k0,...,kl");
  dim_cmd->add_option("--n", dim.n, "Total size n");
  dim_cmd->add_option("--nu", dim.nu, "Residue sequence nu");
  dim_cmd->add_option("--nu2", dim.nu2, "Residue sequence nu'");

  TypeArgs type;
  auto* type_cmd = app.add_subcommand("type", "Representation type of R(beta)");
  type_cmd->add_option("--ell", type.ell, "Rank l")->required()->check(positive);
  type_cmd->add_option("--beta", type.beta, "Coefficients k0,...,kl")->required();

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run the consistency battery");
  verify_cmd->add_option("--ell", verify.ell, "Rank l")->required()->check(positive);
  verify_cmd->add_option("--max-n", verify.max_n, "Size bound for the sweeps")->capture_default_str();
  verify_cmd->add_flag("--inject-fault", verify.inject_fault, "Corrupt one matrix entry (harness self-test)");

  RepArgs rep;
  auto* rep_cmd = app.add_subcommand("rep", "Matrices of the homogeneous module L_i or S_i");
  rep_cmd->add_option("--ell", rep.ell, "Rank l")->required()->check(positive);
  rep_cmd->add_option("--module", rep.module, "L_i or S_i")->required();
  rep_cmd->add_option("--emit", rep.emit, "summary or matrices")
      ->check(CLI::IsMember({"summary", "matrices"}))
      ->capture_default_str();

  int gallery_ell = 0;
  auto* gallery_cmd = app.add_subcommand("gallery", "Young wall gallery Y1..Y5");
  gallery_cmd->add_option("--ell", gallery_ell, "Rank l (gallery exists for l=2)")->required()->check(positive);

  RpArgs rp;
  auto* rp_cmd = app.add_subcommand("rp", "h-restricted h-strict partitions of content beta");
  rp_cmd->add_option("--ell", rp.ell, "Rank l")->required()->check(positive);
  rp_cmd->add_option("--beta", rp.beta, "Coefficients k0,...,kl")->required();

  FockArgs fock;
  auto* fock_cmd = app.add_subcommand("fock", "Chevalley action on the Fock space");
  fock_cmd->add_option("--ell", fock.ell, "Rank l")->required()->check(positive);
  fock_cmd->add_option("--shape", fock.shape, "Starting diagram (empty for the vacuum)");
  fock_cmd->add_option("--ops", fock.ops, "Operators applied left to right, e.g. f0,f1,e1");
  fock_cmd->add_option("--e-word", fock.e_word, "Coefficient of |0> in e_{nu_1}...e_{nu_n}|shape>");
  fock_cmd->add_option("--f-word", fock.f_word, "f_{nu_n}...f_{nu_1}|0>");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (tab->parsed()) return cmd_tableaux(tableaux, as_json, out);
    if (dim_cmd->parsed()) return cmd_dim(dim, as_json, out);
    if (type_cmd->parsed()) return cmd_type(type, as_json, out);
    if (verify_cmd->parsed()) return cmd_verify(verify, as_json, out);
    if (rep_cmd->parsed()) return cmd_rep(rep, as_json, out);
    if (gallery_cmd->parsed()) return cmd_gallery(gallery_ell, as_json, out);
    if (rp_cmd->parsed()) return cmd_rp(rp, as_json, out);
    if (fock_cmd->parsed()) return cmd_fock(fock, as_json, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kVerificationFailure;
  }
  err << "error: no subcommand\n";
  return kUsageError;
}

}  // namespace fockqha::cli
