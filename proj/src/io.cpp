#include "evoalg/io.hpp"

#include <fstream>
#include <sstream>

namespace evoalg {

using nlohmann::json;

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> tokens(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

} // namespace

EvolutionAlgebra parse_algebra(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = strip(text.substr(0, nl));
    if (!line.empty()) lines.push_back(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  if (lines.size() < 2) throw ParseError("expected a field header and a dimension");
  const Field field = Field::parse(lines[0]);

  std::size_t n = 0;
  {
    const std::string dim(lines[1]);
    std::size_t used = 0;
    long long v = -1;
    try {
      v = std::stoll(dim, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != dim.size() || v < 1 || v > 64) throw ParseError("invalid dimension '" + dim + "'");
    n = static_cast<std::size_t>(v);
  }
  if (lines.size() != n + 2)
    throw ParseError("expected " + std::to_string(n) + " matrix rows, got " + std::to_string(lines.size() - 2));
  std::vector<Scalar> entries;
  entries.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto row = tokens(lines[r + 2]);
    if (row.size() != n)
      throw ParseError("row " + std::to_string(r + 1) + " has " + std::to_string(row.size()) + " entries, expected " +
                       std::to_string(n));
    for (const auto& tok : row) entries.push_back(field.parse_scalar(tok));
  }
  return EvolutionAlgebra(field, n, std::move(entries));
}

EvolutionAlgebra read_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_algebra(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string format_algebra(const EvolutionAlgebra& a) {
  std::string out = a.field().header() + "\n" + std::to_string(a.dim()) + "\n";
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t c = 0; c < a.dim(); ++c) out += (c ? " " : "") + a.entry(r, c).to_string();
    out += "\n";
  }
  return out;
}

json to_json(const EvolutionAlgebra& a) {
  json rows = json::array();
  for (std::size_t r = 0; r < a.dim(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < a.dim(); ++c) row.push_back(a.entry(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return {{"field", a.field().header()}, {"dim", a.dim()}, {"matrix", std::move(rows)}};
}

json to_json(const Vector& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(s.to_string());
  return out;
}

json to_json(const TypeTag& tag) {
  json params = json::object();
  for (std::size_t i = 0; i < tag.params.size(); ++i) params[tag.family->param_names[i]] = tag.params[i].to_string();
  return {{"family", tag.family->id}, {"tag", tag.to_string()}, {"parameters", std::move(params)}};
}

json to_json(const DiGraph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u + 1, v + 1});
  return {{"vertices", g.size()}, {"edges", std::move(edges)}};
}

json to_json(const CensusReport& r) {
  json dis = json::array();
  for (const auto& d : r.disagreements)
    dis.push_back({{"a", d.a}, {"b", d.b}, {"predicate", d.predicate}, {"oracle", d.oracle}});
  return {{"field", r.field},
          {"dim", r.dim},
          {"scanned", r.scanned},
          {"simple", r.simple},
          {"classify_failures", r.classify_failures},
          {"ambiguous_matches", r.ambiguous_matches},
          {"family_counts", r.family_counts},
          {"pairs_checked", r.pairs_checked},
          {"isomorphic_pairs", r.isomorphic_pairs},
          {"disagreements", std::move(dis)},
          {"failures", r.failures},
          {"seconds", r.seconds},
          {"ok", r.ok()}};
}

json to_json(const DecompositionReport& r) {
  json comps = json::array();
  for (std::size_t i = 0; i < r.components.size(); ++i) {
    json verts = json::array();
    for (auto v : r.components[i]) verts.push_back(v + 1);
    comps.push_back({{"vertices", std::move(verts)}, {"simple", is_simple(r.parts[i])}, {"algebra", to_json(r.parts[i])}});
  }
  return {{"dim", r.product.dim()},
          {"predicted_components", r.predicted},
          {"components", std::move(comps)},
          {"simple", r.simple},
          {"semisimple", r.semisimple}};
}

json to_json(const QuotientReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"generator", to_json(c.generator)},
                      {"pivot", c.pivot + 1},
                      {"quotient_simple", c.simple},
                      {"quotient", to_json(c.quotient)}});
  return {{"dim", r.product.dim()}, {"line_ideals", std::move(checks)}, {"theorem_holds", r.holds()}};
}

} // namespace evoalg
