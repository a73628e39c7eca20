#include "evoalg/tensor.hpp"

#include <algorithm>
#include <numeric>

namespace evoalg {

EvolutionAlgebra tensor(const EvolutionAlgebra& a, const EvolutionAlgebra& b) {
  if (!(a.field() == b.field())) throw DomainError("tensor factors over different fields");
  const std::size_t n = a.dim(), m = b.dim(), N = n * m;
  std::vector<Scalar> entries;
  entries.reserve(N * N);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t q = 0; q < m; ++q)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t p = 0; p < m; ++p) entries.push_back(a.entry(j, i) * b.entry(q, p));
  EvolutionAlgebra t(a.field(), N, std::move(entries));
  if (!(graph_of(t) == categorical_product(graph_of(a), graph_of(b))))
    throw Error("internal: tensor graph differs from the categorical product");
  return t;
}

bool predict_tensor_simple(const EvolutionAlgebra& a, const EvolutionAlgebra& b) {
  if (!is_simple(a) || !is_simple(b)) throw DomainError("simplicity prediction needs simple factors");
  return std::gcd(period(graph_of(a)), period(graph_of(b))) == 1;
}

EvolutionAlgebra subalgebra(const EvolutionAlgebra& a, const std::vector<std::size_t>& basis) {
  std::vector<char> inside(a.dim(), 0);
  for (auto v : basis) inside.at(v) = 1;
  for (auto i : basis)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (!inside[j] && !a.entry(j, i).is_zero())
        throw DomainError("basis vectors do not span a subalgebra: e_" + std::to_string(i + 1) +
                          "^2 leaves the span");
  std::vector<Scalar> entries;
  entries.reserve(basis.size() * basis.size());
  for (auto r : basis)
    for (auto c : basis) entries.push_back(a.entry(r, c));
  return EvolutionAlgebra(a.field(), basis.size(), std::move(entries));
}

DecompositionReport decompose(const EvolutionAlgebra& a, const EvolutionAlgebra& b) {
  if (!is_simple(a) || !is_simple(b)) throw DomainError("decomposition needs simple factors");
  DecompositionReport r{tensor(a, b), {}, {}, 0, false, false};
  r.predicted = std::gcd(period(graph_of(a)), period(graph_of(b)));
  r.components = components(graph_of(r.product));
  bool all_simple = true;
  for (const auto& comp : r.components) {
    r.parts.push_back(subalgebra(r.product, comp));
    all_simple = all_simple && is_simple(r.parts.back());
  }
  r.semisimple = all_simple;
  r.simple = all_simple && r.components.size() == 1;
  return r;
}

EvolutionAlgebra inflate(const EvolutionAlgebra& templ, const EvolutionAlgebra& m) {
  if (!(templ.field() == m.field())) throw DomainError("inflation over different fields");
  const std::size_t n = templ.dim(), k = m.dim(), N = n * k;
  std::vector<Scalar> entries(N * N, templ.field().zero());
  for (std::size_t br = 0; br < n; ++br)
    for (std::size_t bc = 0; bc < n; ++bc) {
      const Scalar& w = templ.entry(br, bc);
      if (w.is_zero()) continue;
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c) entries[(br * k + r) * N + bc * k + c] = w * m.entry(r, c);
    }
  return EvolutionAlgebra(templ.field(), N, std::move(entries));
}

bool QuotientReport::holds() const {
  return std::none_of(checks.begin(), checks.end(), [](const QuotientCheck& c) { return c.simple; });
}

QuotientReport quotient_theorem_check(const EvolutionAlgebra& a1, const EvolutionAlgebra& a2) {
  QuotientReport report{tensor(a1, a2), {}};
  for (const Vector& u : line_ideals(report.product)) {
    const std::size_t pivot = support(u).front();
    EvolutionAlgebra q = quotient_by_line(report.product, u, pivot);
    const bool simple = is_simple(q);
    report.checks.push_back(QuotientCheck{u, pivot, std::move(q), simple});
  }
  return report;
}

EvolutionAlgebra unit_weight_algebra(const DiGraph& g, const Field& field,
                                     std::optional<std::pair<std::size_t, std::size_t>> chord) {
  const std::size_t n = g.size();
  if (n == 0) throw DomainError("graph has no vertices");
  const auto edges = g.edges();
  if (edges.empty()) throw DomainError("graph has no edges");
  const auto [from, to] = chord.value_or(edges.front());
  if (!g.has_edge(from, to)) throw DomainError("chord is not an edge of the graph");

  std::vector<Scalar> entries(n * n, field.zero());
  for (auto [i, j] : edges) entries[j * n + i] = field.one();
  EvolutionAlgebra a(field, n, entries);
  if (is_perfect(a)) return a;

  auto try_weight = [&](const Scalar& w) -> std::optional<EvolutionAlgebra> {
    entries[to * n + from] = w;
    EvolutionAlgebra b(field, n, entries);
    if (is_perfect(b)) return b;
    return std::nullopt;
  };
  if (field.is_finite()) {
    for (std::uint64_t idx = 2; idx < field.order(); ++idx)
      if (auto b = try_weight(field.element(idx))) return *b;
  } else {
    // det is affine in one entry, so at most one weight fails
    for (long long w = 2; w <= 3; ++w)
      if (auto b = try_weight(field.integer(w))) return *b;
  }
  throw DomainError("no weight on the chord makes the algebra perfect");
}

DiGraph period_two_graph() {
  return DiGraph(6, {{0, 1}, {1, 2}, {1, 4}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
}

DiGraph period_three_graph() {
  return DiGraph(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 2}, {7, 8}, {8, 0}});
}

} // namespace evoalg
