#include "cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "evoalg/acceptance.hpp"
#include "evoalg/classify.hpp"
#include "evoalg/io.hpp"
#include "evoalg/tensor.hpp"

namespace evoalg::cli {

namespace {

using nlohmann::json;

struct Report {
  Report() = default;
  explicit Report(std::string name) : command(std::move(name)) {}

  std::string command;
  std::optional<std::string> field;
  std::optional<std::size_t> dim;
  json result = json::object();
  std::vector<std::string> diagnostics;
  std::string text;
  int status = 0;

  void set_algebra(const EvolutionAlgebra& a) {
    field = a.field().header();
    dim = a.dim();
  }
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string vertex_list(const std::vector<std::size_t>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i] + 1);
  return s + "}";
}

Report classify_cmd(const std::string& path) {
  const EvolutionAlgebra a = read_algebra_file(path);
  Report r("classify");
  r.set_algebra(a);
  const Classification c = classify_detailed(a);
  r.result = to_json(c.tag);
  json perm = json::array();
  for (auto v : c.change.perm) perm.push_back(v + 1);
  r.result["basis_change"] = {{"perm", perm}, {"scalars", to_json(c.change.scalars)}};
  r.text = c.tag.describe() + "\n";
  return r;
}

Report iso_cmd(const std::string& p1, const std::string& p2) {
  const EvolutionAlgebra a = read_algebra_file(p1), b = read_algebra_file(p2);
  Report r("iso");
  r.set_algebra(a);
  const IsoVerdict v = are_isomorphic(a, b, SearchOptions::from_environment());
  r.result = {{"isomorphic", v.isomorphic},
              {"exhaustive", v.exhaustive},
              {"family_a", v.family_a},
              {"family_b", v.family_b}};
  r.diagnostics = v.notes;
  r.text = std::string(v.isomorphic ? "isomorphic" : "NOT isomorphic") + "  (" + v.family_a + " vs " + v.family_b +
           ")\n";
  for (const auto& n : v.notes) r.text += "note: " + n + "\n";
  return r;
}

Report invariants_cmd(const std::string& path) {
  const EvolutionAlgebra a = read_algebra_file(path);
  Report r("invariants");
  r.set_algebra(a);
  const Invariants inv = invariants(a);
  const SimplicityReport s = simplicity(a);
  r.result = {{"l", inv.l}, {"e", inv.e}, {"diag_dim", inv.diag_dim}, {"simple", s.simple()}};
  r.text = "l=" + std::to_string(inv.l) + " e=" + std::to_string(inv.e) + " dim Diag=" + std::to_string(inv.diag_dim) +
           " simple=" + yes_no(s.simple()) + "\n";
  if (!s.simple()) r.text += "not simple: " + s.reason() + "\n";
  return r;
}

Report graph_cmd(const std::string& path, const std::string& dot_path) {
  const EvolutionAlgebra a = read_algebra_file(path);
  Report r("graph");
  r.set_algebra(a);
  const DiGraph g = graph_of(a);
  const auto comps = components(g);
  const bool strong = is_strongly_connected(g);
  r.result = to_json(g);
  r.result["strongly_connected"] = strong;
  json cj = json::array();
  for (const auto& c : comps) {
    json vs = json::array();
    for (auto v : c) vs.push_back(v + 1);
    cj.push_back(vs);
  }
  r.result["components"] = cj;

  std::ostringstream t;
  t << "vertices " << g.size() << ", edges " << g.edge_count() << ", loops " << g.loop_count() << "\n";
  for (auto [u, v] : g.edges()) t << "  " << u + 1 << " -> " << v + 1 << "\n";
  t << "strongly connected: " << yes_no(strong) << "\ncomponents:";
  for (const auto& c : comps) t << " " << vertex_list(c);
  t << "\n";
  if (strong && g.edge_count() > 0) {
    const std::size_t d = period(g);
    r.result["period"] = d;
    t << "period: " << d << "\n";
  }
  if (!dot_path.empty()) {
    const std::string dot = to_dot(g);
    if (dot_path == "-") {
      t << dot;
    } else {
      std::ofstream f(dot_path);
      if (!(f << dot)) throw DomainError("cannot write '" + dot_path + "'");
      t << "wrote " << dot_path << "\n";
    }
    r.result["dot"] = dot;
  }
  r.text = t.str();
  return r;
}

Report tensor_cmd(const std::string& p1, const std::string& p2, bool split) {
  const EvolutionAlgebra a = read_algebra_file(p1), b = read_algebra_file(p2);
  Report r("tensor");
  if (!split) {
    const EvolutionAlgebra t = tensor(a, b);
    r.set_algebra(t);
    const bool simple = is_simple(t);
    r.result = to_json(t);
    r.result["simple"] = simple;
    r.text = format_algebra(t) + "simple: " + yes_no(simple) + "\n";
    if (is_simple(a) && is_simple(b)) {
      const bool predicted = predict_tensor_simple(a, b);
      r.result["predicted_simple"] = predicted;
      r.text += "predicted from periods: " + yes_no(predicted) + "\n";
    }
    return r;
  }
  const DecompositionReport d = decompose(a, b);
  r.set_algebra(d.product);
  r.result = to_json(d);
  std::ostringstream t;
  t << "dim " << d.product.dim() << ", gcd of periods " << d.predicted << ", components " << d.components.size()
    << "\n";
  for (std::size_t i = 0; i < d.components.size(); ++i)
    t << "  " << vertex_list(d.components[i]) << " simple=" << yes_no(is_simple(d.parts[i])) << "\n";
  t << "simple: " << yes_no(d.simple) << ", semisimple: " << yes_no(d.semisimple) << "\n";
  if (d.components.size() != d.predicted)
    r.diagnostics.push_back("component count differs from the gcd of the periods");
  r.text = t.str();
  return r;
}

Report inflate_cmd(const std::string& p1, const std::string& p2) {
  const EvolutionAlgebra templ = read_algebra_file(p1), m = read_algebra_file(p2);
  Report r("inflate");
  const EvolutionAlgebra big = inflate(templ, m);
  r.set_algebra(big);
  const bool simple = is_simple(big);
  r.result = to_json(big);
  r.result["simple"] = simple;
  r.text = format_algebra(big) + "simple: " + yes_no(simple) + "\n";
  return r;
}

Report quotients_cmd(const std::string& path) {
  const EvolutionAlgebra a = read_algebra_file(path);
  Report r("quotients");
  r.set_algebra(a);
  QuotientReport q{a, {}};
  for (const Vector& u : line_ideals(a)) {
    const std::size_t pivot = support(u).front();
    EvolutionAlgebra quotient = quotient_by_line(a, u, pivot);
    const bool simple = is_simple(quotient);
    q.checks.push_back(QuotientCheck{u, pivot, std::move(quotient), simple});
  }
  r.result = to_json(q);
  std::ostringstream t;
  t << q.checks.size() << " line ideal(s)\n";
  for (const auto& c : q.checks)
    t << "  K" << format_vector(c.generator) << ": quotient simple=" << yes_no(c.simple) << "\n";
  r.text = t.str();
  return r;
}

Report census_cmd(const std::string& header, std::size_t dim, const CensusOptions& options) {
  const Field f = Field::parse(header);
  Report r("census");
  r.field = f.header();
  r.dim = dim;
  const CensusReport c = census(f, dim, options);
  r.result = to_json(c);
  r.diagnostics = c.failures;
  std::ostringstream t;
  t << "field " << c.field << ", dim " << c.dim << ": " << c.scanned << " matrices, " << c.simple << " simple\n";
  for (const auto& [id, n] : c.family_counts) t << "  " << id << ": " << n << "\n";
  t << "unclassified " << c.classify_failures << ", ambiguous " << c.ambiguous_matches << "\n";
  t << "pairs " << c.pairs_checked << " (" << c.isomorphic_pairs << " isomorphic), disagreements "
    << c.disagreements.size() << "\n";
  for (const auto& d : c.disagreements)
    t << "  disagreement: " << d.a << " vs " << d.b << " predicate=" << d.predicate << " oracle=" << d.oracle << "\n";
  for (const auto& f2 : c.failures) t << "  unclassified: " << f2 << "\n";
  t << "ok: " << yes_no(c.ok()) << " (" << c.seconds << " s)\n";
  r.text = t.str();
  r.status = c.ok() ? 0 : 1;
  return r;
}

Report selftest_cmd() {
  Report r("selftest");
  const auto results = acceptance::run_all();
  std::ostringstream t;
  const int failed = acceptance::report(results, t);
  json items = json::array();
  for (const auto& c : results)
    items.push_back({{"id", c.id}, {"title", c.title}, {"pass", c.pass}, {"detail", c.detail}, {"seconds", c.seconds}});
  r.result = {{"criteria", items}, {"failed", failed}};
  r.text = t.str();
  r.status = failed == 0 ? 0 : 1;
  return r;
}

void emit(const Report& r, bool as_json, std::ostream& out) {
  if (!as_json) {
    out << r.text;
    return;
  }
  json env = {{"command", r.command},
              {"field", r.field ? json(*r.field) : json(nullptr)},
              {"dim", r.dim ? json(*r.dim) : json(nullptr)},
              {"result", r.result},
              {"diagnostics", r.diagnostics}};
  out << env.dump(2) << "\n";
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Evolution algebra toolkit: classification, isomorphism and tensor constructions", "evoalg"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Structured output");

  std::string file1, file2, dot_path, field_spec;
  bool split = false;
  std::size_t dim = 0;
  CensusOptions census_options;

  auto* classify_sc = app.add_subcommand("classify", "Type tag of a simple algebra of dimension 2 or 3");
  classify_sc->add_option("file", file1)->required();
  auto* iso_sc = app.add_subcommand("iso", "Decide whether two algebras are isomorphic");
  iso_sc->add_option("a", file1)->required();
  iso_sc->add_option("b", file2)->required();
  auto* inv_sc = app.add_subcommand("invariants", "l-number, e-number and diagonal dimension");
  inv_sc->add_option("file", file1)->required();
  auto* graph_sc = app.add_subcommand("graph", "Associated directed graph");
  graph_sc->add_option("file", file1)->required();
  graph_sc->add_option("--dot", dot_path, "Write DOT to PATH ('-' for standard output)");
  auto* tensor_sc = app.add_subcommand("tensor", "Tensor product of two algebras");
  tensor_sc->add_option("a", file1)->required();
  tensor_sc->add_option("b", file2)->required();
  tensor_sc->add_flag("--decompose", split, "Split along strongly connected components");
  auto* inflate_sc = app.add_subcommand("inflate", "Replace each entry w of TEMPLATE by the block w*M");
  inflate_sc->add_option("template", file1)->required();
  inflate_sc->add_option("block", file2)->required();
  auto* quot_sc = app.add_subcommand("quotients", "Line ideals and simplicity of the quotients");
  quot_sc->add_option("file", file1)->required();
  auto* census_sc = app.add_subcommand("census", "Classify every structure matrix over a finite field");
  census_sc->add_option("--field", field_spec, "Field header, e.g. 'F 3'")->required();
  census_sc->add_option("--dim", dim, "Dimension (2 or 3)")->required();
  census_sc->add_option("--pairs", census_options.pairs, "Same-family pairs checked against brute force");
  census_sc->add_option("--seed", census_options.seed, "Pair sampling seed");
  census_sc->add_option("--workers", census_options.workers, "Worker threads (0 = all cores)");
  auto* selftest_sc = app.add_subcommand("selftest", "Run the acceptance criteria");

  std::vector<std::string> argv_store{"evoalg"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Report r;
    if (classify_sc->parsed()) r = classify_cmd(file1);
    else if (iso_sc->parsed()) r = iso_cmd(file1, file2);
    else if (inv_sc->parsed()) r = invariants_cmd(file1);
    else if (graph_sc->parsed()) r = graph_cmd(file1, dot_path);
    else if (tensor_sc->parsed()) r = tensor_cmd(file1, file2, split);
    else if (inflate_sc->parsed()) r = inflate_cmd(file1, file2);
    else if (quot_sc->parsed()) r = quotients_cmd(file1);
    else if (census_sc->parsed()) r = census_cmd(field_spec, dim, census_options);
    else if (selftest_sc->parsed()) r = selftest_cmd();
    emit(r, as_json, out);
    return r.status;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
}

} // namespace evoalg::cli
