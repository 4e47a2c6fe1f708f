#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fpltri/bracket.hpp"
#include "fpltri/combinat.hpp"
#include "fpltri/fpl.hpp"
#include "fpltri/harness.hpp"
#include "fpltri/numbers.hpp"
#include "fpltri/opalgebra.hpp"
#include "fpltri/tlmodel.hpp"

using json = nlohmann::ordered_json;
using namespace fpltri;

namespace {

enum class TMode { kInt, kRat, kSym };

struct TChoice {
  TMode mode = TMode::kInt;
  Int int_value = 1;
  Rat rat_value = 1;
  std::string label = "1";
};

TChoice parse_t(const std::string& text) {
  TChoice t;
  if (text == "symbolic") {
    t.mode = TMode::kSym;
    t.label = text;
    return t;
  }
  t.rat_value = parse_rat(text);
  t.label = to_string(t.rat_value);
  if (denominator(t.rat_value) == 1) {
    t.mode = TMode::kInt;
    t.int_value = numerator(t.rat_value);
  } else {
    t.mode = TMode::kRat;
  }
  return t;
}

// Runs f with the scalar ring selected by t. f must be callable with Int,
// Rat and TPoly arguments.
template <class F>
int with_ring(const TChoice& t, F&& f) {
  switch (t.mode) {
    case TMode::kInt: return f(t.int_value);
    case TMode::kRat: return f(t.rat_value);
    case TMode::kSym: return f(TPoly::t());
  }
  return 2;
}

void emit(const json& doc, const std::string& path) {
  if (path.empty()) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << doc.dump(2) << "\n";
  }
}

int refuse(const std::string& what, const std::string& estimate) {
  std::cerr << what << " needs --force; " << estimate << "\n";
  return 2;
}

std::vector<std::string> seq_labels(int n) {
  std::vector<std::string> out;
  for (const auto& d : enumerate_basis(n)) out.push_back(d.str());
  return out;
}

std::vector<std::string> pattern_labels(int n) {
  std::vector<std::string> out;
  auto basis = enumerate_basis(n);
  for (const auto& p : basis_patterns(basis)) out.push_back(p.str());
  return out;
}

int run_bij(int n, const std::string& json_path) {
  auto basis = enumerate_basis(n);
  auto pats = basis_patterns(basis);
  json rows = json::array();
  for (size_t i = 0; i < basis.size(); ++i) {
    const Diagram& d = basis[i];
    json row;
    row["index"] = i;
    row["seq"] = d.str();
    row["partition"] = d.partition();
    row["boxes"] = d.boxes();
    row["pattern"] = pats[i].str();
    row["transpose"] = d.transpose().str();
    row["mirror_pattern"] = pats[i].mirror().str();
    row["rotated_pattern"] = pats[i].rotate(1).str();
    row["embedded_seq"] = d.embed(1).str();
    row["embedded_pattern"] = pats[i].embed(1).str();
    rows.push_back(std::move(row));
  }
  json doc;
  doc["n"] = n;
  doc["basis"] = seq_labels(n);
  doc["data"] = std::move(rows);
  emit(doc, json_path);
  return 0;
}

int run_compute_a(int n, const TChoice& t, bool force, const std::string& json_path) {
  if (n > 5 && !force)
    return refuse("compute a beyond n=5",
                  "the tensor has Catalan(n)^3 entries and n=5 already takes minutes");
  return with_ring(t, [&](auto tv) {
    BracketContext<decltype(tv)> br(n, tv);
    auto tensor = br.a_tensor();
    json data = json::array();
    for (const auto& per_sigma : tensor) {
      json block = json::array();
      for (const auto& row : per_sigma) {
        json jrow = json::array();
        for (const auto& v : row) jrow.push_back(scalar_str(v));
        block.push_back(std::move(jrow));
      }
      data.push_back(std::move(block));
    }
    json doc;
    doc["n"] = n;
    doc["t"] = t.label;
    doc["basis"] = seq_labels(n);
    doc["indices"] = "data[sigma][tau][alpha]";
    doc["data"] = std::move(data);
    emit(doc, json_path);
    return 0;
  });
}

int run_compute_psi(int n, int m, const TChoice& t, const std::string& json_path) {
  return with_ring(t, [&](auto tv) {
    BracketContext<decltype(tv)> br(n, tv);
    auto vec = br.psi_shifted(m);
    json data = json::array();
    for (const auto& v : vec) data.push_back(scalar_str(v));
    json doc;
    doc["n"] = n;
    doc["t"] = t.label;
    doc["m"] = m;
    doc["basis"] = seq_labels(n);
    doc["data"] = std::move(data);
    emit(doc, json_path);
    return 0;
  });
}

int run_tl(int n, const std::string& json_path) {
  auto psi = ground_state(n);
  json data = json::array();
  Int total = 0;
  for (const auto& v : psi) {
    data.push_back(scalar_str(v));
    total += v;
  }
  json doc;
  doc["n"] = n;
  doc["t"] = "1";
  doc["basis"] = pattern_labels(n);
  doc["data"] = std::move(data);
  doc["total"] = scalar_str(total);
  emit(doc, json_path);
  return 0;
}

int run_fpl_square(int n, bool force, const std::string& json_path) {
  if (n > 5 && !force)
    return refuse("fpl square beyond n=5",
                  "n=5 finishes in well under a second, n=7 in minutes, n=8 beyond that");
  auto counts = fpl::enumerate_square(n);
  json data = json::object();
  Int total = 0;
  for (const auto& [pat, c] : counts) {
    data[pat.str()] = scalar_str(c);
    total += c;
  }
  json doc;
  doc["n"] = n;
  doc["t"] = "1";
  doc["basis"] = pattern_labels(n);
  doc["data"] = std::move(data);
  doc["total"] = scalar_str(total);
  emit(doc, json_path);
  return 0;
}

int run_fpl_triangle(int n, bool force, const std::string& json_path) {
  if (n > 4 && !force)
    return refuse("fpl triangle beyond n=4",
                  "n=4 enumerates 10046 admitted configurations in about half a minute; "
                  "n=5 is projected far beyond an hour");
  auto counts = fpl::enumerate_triangle(n);
  json data = json::object();
  Int total = 0;
  for (const auto& [key, c] : counts) {
    data[key.sigma.str() + "|" + key.pi.str() + "|" + key.tau.str()] = scalar_str(c);
    total += c;
  }
  json doc;
  doc["n"] = n;
  doc["t"] = "1";
  doc["basis"] = seq_labels(n);
  doc["keys"] = "sigma|pi|tau";
  doc["data"] = std::move(data);
  doc["total"] = scalar_str(total);
  emit(doc, json_path);
  return 0;
}

json matrix_json(int rows, int cols, const std::function<std::string(int, int)>& entry) {
  json data = json::array();
  for (int i = 0; i < rows; ++i) {
    json row = json::array();
    for (int j = 0; j < cols; ++j) row.push_back(entry(i, j));
    data.push_back(std::move(row));
  }
  return data;
}

int run_op(const std::string& which, int n, const TChoice& t, const std::string& lambda,
           const std::string& json_path) {
  return with_ring(t, [&](auto tv) {
    using R = decltype(tv);
    OpContext<R> ctx(n, tv);
    json doc;
    doc["n"] = n;
    doc["t"] = t.label;
    doc["op"] = which;
    doc["basis"] = seq_labels(n);
    if (!lambda.empty()) doc["lambda"] = lambda;

    auto put = [&](Mat<R> m) {
      doc["data"] =
          matrix_json(m.rows(), m.cols(), [&](int i, int j) { return scalar_str(m(i, j)); });
    };
    if (which == "p") {
      doc["rows"] = "patterns";
      doc["cols"] = "sequences";
      put(ctx.p_matrix());
    } else if (which == "c") {
      put(lambda.empty() ? ctx.big_c() : ctx.c_matrix(Diagram::parse(lambda).partition()));
    } else if (which == "r") {
      put(ctx.r_matrix());
    } else if (which == "lr") {
      if (lambda.empty()) throw std::runtime_error("op lr needs --lambda");
      put(ctx.lr_matrix(Diagram::parse(lambda)));
    } else if (which == "k") {
      if (lambda.empty()) {
        // On basis sequences K restricts to the identity; emit it as a matrix.
        put(Mat<R>::identity(ctx.size()));
      } else {
        // A general sequence, not necessarily increasing, e.g. "1,1".
        std::vector<int> gamma;
        std::istringstream in(lambda);
        for (std::string part; std::getline(in, part, ',');) gamma.push_back(std::stoi(part));
        json col = json::array();
        for (const auto& v : ctx.k_column(gamma)) col.push_back(scalar_str(v));
        doc["data"] = std::move(col);
      }
    }
    emit(doc, json_path);
    return 0;
  });
}

int run_verify(const std::string& suite, int n, bool force, bool has_krange, int k_lo, int k_hi,
               const std::string& json_path) {
  using namespace fpltri::harness;
  if (suite == "conjecture1" && n > 3 && !force)
    return refuse("verify conjecture1 beyond n=3",
                  "the n=4 triangle enumeration takes about half a minute and n=5 is "
                  "projected far beyond an hour");
  if (suite == "rs" && n > 5 && !force)
    return refuse("verify rs beyond n=5", "the square enumeration grows past desk scale");
  if (suite == "all" && n > 4 && !force)
    return refuse("verify all beyond n=4", "the bracket tensor at n=5 alone takes minutes");

  Report report;
  if (suite == "conjecture1") report = verify_conjecture1(n);
  else if (suite == "rs") report = verify_rs(n);
  else if (suite == "summation")
    report = has_krange ? verify_summation(n, k_lo, k_hi) : verify_summation(n);
  else if (suite == "lemmas") report = verify_lemmas(n);
  else if (suite == "matrices") report = verify_matrices(n);
  else if (suite == "recurrences") report = verify_recurrences(n);
  else report = verify_all(n);

  std::cout << render(report);
  if (report.all_pass())
    std::cout << "all " << report.checks.size() << " checks passed\n";
  else
    std::cout << report.failures() << " of " << report.checks.size() << " checks FAILED\n";
  if (!json_path.empty()) {
    json checks = json::array();
    for (const auto& c : report.checks) {
      json row;
      row["name"] = c.name;
      row["pass"] = c.pass;
      if (!c.detail.empty()) row["detail"] = c.detail;
      checks.push_back(std::move(row));
    }
    json doc;
    doc["suite"] = suite;
    doc["n"] = n;
    doc["failures"] = report.failures();
    doc["checks"] = std::move(checks);
    emit(doc, json_path);
  }
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for triangle FPL numbers, the loop-model ground state and "
               "their operator identities"};
  app.require_subcommand(1);

  int n = 3;
  int m = 0;
  std::string t_text = "1";
  std::string lambda;
  std::string json_path;
  std::string k_range;
  bool force = false;

  auto add_common = [&](CLI::App* cmd, bool with_t) {
    cmd->add_option("--n", n, "system size")->check(CLI::PositiveNumber);
    cmd->add_option("--json", json_path, "write the JSON document to this path");
    if (with_t) cmd->add_option("--t", t_text, "loop weight: integer, \"p/q\" or \"symbolic\"");
  };

  CLI::App* bij = app.add_subcommand("bij", "basis table with all the bijections");
  add_common(bij, false);

  CLI::App* compute = app.add_subcommand("compute", "bracket-side numbers");
  compute->require_subcommand(1);
  CLI::App* compute_a = compute->add_subcommand("a", "full tensor A_{sigma,alpha,tau}");
  add_common(compute_a, true);
  compute_a->add_flag("--force", force, "override the cost guard");
  CLI::App* compute_psi = compute->add_subcommand("psi", "vector Psi, optionally shifted");
  add_common(compute_psi, true);
  compute_psi->add_option("--m", m, "shift: Psi at the m-embedded sequences")
      ->check(CLI::NonNegativeNumber);

  CLI::App* tl = app.add_subcommand("tl", "loop model");
  tl->require_subcommand(1);
  CLI::App* tl_gs = tl->add_subcommand("ground-state", "stationary vector of the Hamiltonian");
  add_common(tl_gs, false);

  CLI::App* fpl_cmd = app.add_subcommand("fpl", "exhaustive enumeration");
  fpl_cmd->require_subcommand(1);
  CLI::App* fpl_square = fpl_cmd->add_subcommand("square", "n x n grid counts by link pattern");
  add_common(fpl_square, false);
  fpl_square->add_flag("--force", force, "override the cost guard");
  CLI::App* fpl_triangle =
      fpl_cmd->add_subcommand("triangle", "triangle counts by boundary words and pattern");
  add_common(fpl_triangle, false);
  fpl_triangle->add_flag("--force", force, "override the cost guard");

  CLI::App* op = app.add_subcommand("op", "operator matrices");
  op->require_subcommand(1);
  std::vector<std::string> op_names = {"p", "c", "k", "r", "lr"};
  std::vector<CLI::App*> op_subs;
  for (const auto& name : op_names) {
    CLI::App* sub = op->add_subcommand(name, "matrix " + name);
    add_common(sub, true);
    sub->add_option("--lambda", lambda, "diagram \"0,1,3\"; for k, any sequence");
    op_subs.push_back(sub);
  }

  CLI::App* verify = app.add_subcommand("verify", "verification suites");
  verify->require_subcommand(1);
  std::vector<std::string> suites = {"conjecture1", "rs",          "summation", "lemmas",
                                     "matrices",    "recurrences", "all"};
  std::vector<CLI::App*> verify_subs;
  for (const auto& name : suites) {
    CLI::App* sub = verify->add_subcommand(name, "suite " + name);
    add_common(sub, false);
    sub->add_flag("--force", force, "override the cost guards");
    if (name == "summation")
      sub->add_option("--k-range", k_range, "window \"LO:HI\" instead of [-3, n+3]");
    verify_subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (bij->parsed()) return run_bij(n, json_path);
    if (compute_a->parsed()) return run_compute_a(n, parse_t(t_text), force, json_path);
    if (compute_psi->parsed()) return run_compute_psi(n, m, parse_t(t_text), json_path);
    if (tl_gs->parsed()) return run_tl(n, json_path);
    if (fpl_square->parsed()) return run_fpl_square(n, force, json_path);
    if (fpl_triangle->parsed()) return run_fpl_triangle(n, force, json_path);
    for (size_t i = 0; i < op_subs.size(); ++i)
      if (op_subs[i]->parsed()) return run_op(op_names[i], n, parse_t(t_text), lambda, json_path);
    for (size_t i = 0; i < verify_subs.size(); ++i)
      if (verify_subs[i]->parsed()) {
        bool has_krange = !k_range.empty();
        int k_lo = 0, k_hi = 0;
        if (has_krange) {
          auto colon = k_range.find(':');
          if (colon == std::string::npos) throw std::runtime_error("--k-range wants \"LO:HI\"");
          k_lo = std::stoi(k_range.substr(0, colon));
          k_hi = std::stoi(k_range.substr(colon + 1));
        }
        return run_verify(suites[i], n, force, has_krange, k_lo, k_hi, json_path);
      }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
