#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace evoalg {

class EvolutionAlgebra;

using Permutation = std::vector<std::size_t>;

/// Simple directed graph on vertices 0..n-1 (printed as 1..n). Loops allowed,
/// at most one edge per ordered pair.
class DiGraph {
public:
  explicit DiGraph(std::size_t n = 0);
  DiGraph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  std::size_t size() const { return n_; }
  bool has_edge(std::size_t from, std::size_t to) const { return adj_[from * n_ + to]; }
  /// Adding an existing edge is a no-op.
  void add_edge(std::size_t from, std::size_t to);
  const std::vector<std::size_t>& out(std::size_t v) const { return out_[v]; }
  std::size_t out_degree(std::size_t v) const { return out_[v].size(); }
  std::size_t in_degree(std::size_t v) const { return in_deg_[v]; }
  std::size_t edge_count() const { return edges_; }
  std::size_t loop_count() const;
  /// Sorted lexicographically.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  friend bool operator==(const DiGraph& a, const DiGraph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

private:
  std::size_t n_;
  std::vector<char> adj_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::size_t> in_deg_;
  std::size_t edges_ = 0;
};

/// Edge i -> j iff w(j, i) != 0.
DiGraph graph_of(const EvolutionAlgebra& a);

/// Strongly connected components (Tarjan), each sorted, listed by smallest
/// vertex.
std::vector<std::vector<std::size_t>> components(const DiGraph& g);
bool is_strongly_connected(const DiGraph& g);
std::vector<std::size_t> reachable(const DiGraph& g, const std::vector<std::size_t>& seeds);

/// gcd of all closed-path lengths; throws DomainError unless g is strongly
/// connected with at least one edge.
std::size_t period(const DiGraph& g);

/// Vertex (i, p) is flattened to i * F.size() + p.
DiGraph categorical_product(const DiGraph& e, const DiGraph& f);

/// Bijections sigma with  i -> j in `from`  <=>  sigma(i) -> sigma(j) in `to`,
/// in lexicographic order of (sigma(0), sigma(1), ...).
std::vector<Permutation> isomorphisms(const DiGraph& from, const DiGraph& to);
/// The lexicographically smallest isomorphism, if any.
std::optional<Permutation> graphs_isomorphic(const DiGraph& from, const DiGraph& to);
std::vector<Permutation> automorphisms(const DiGraph& g);

/// Every simple cycle as a vertex sequence starting at its smallest vertex.
/// Exponential; intended for small test graphs.
std::vector<std::vector<std::size_t>> simple_cycles(const DiGraph& g);

std::string to_dot(const DiGraph& g, const std::string& name = "G");

} // namespace evoalg
