#include "evoalg/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <tuple>

#include "evoalg/algebra.hpp"

namespace evoalg {

DiGraph::DiGraph(std::size_t n) : n_(n), adj_(n * n, 0), out_(n), in_deg_(n, 0) {}

DiGraph::DiGraph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges)
    : DiGraph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void DiGraph::add_edge(std::size_t from, std::size_t to) {
  if (from >= n_ || to >= n_) throw DomainError("edge endpoint out of range");
  char& slot = adj_[from * n_ + to];
  if (slot) return;
  slot = 1;
  auto& o = out_[from];
  o.insert(std::upper_bound(o.begin(), o.end(), to), to);
  ++in_deg_[to];
  ++edges_;
}

std::size_t DiGraph::loop_count() const {
  std::size_t c = 0;
  for (std::size_t v = 0; v < n_; ++v) c += has_edge(v, v);
  return c;
}

std::vector<std::pair<std::size_t, std::size_t>> DiGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(edges_);
  for (std::size_t u = 0; u < n_; ++u)
    for (auto v : out_[u]) out.emplace_back(u, v);
  return out;
}

DiGraph graph_of(const EvolutionAlgebra& a) {
  const std::size_t n = a.dim();
  DiGraph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!a.entry(j, i).is_zero()) g.add_edge(i, j);
  return g;
}

std::vector<std::vector<std::size_t>> components(const DiGraph& g) {
  // Iterative Tarjan.
  const std::size_t n = g.size();
  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, unvisited), low(n, 0), stack;
  std::vector<char> on_stack(n, 0);
  std::vector<std::vector<std::size_t>> comps;
  std::size_t counter = 0;
  std::vector<std::pair<std::size_t, std::size_t>> call; // (vertex, next out-edge position)

  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != unvisited) continue;
    call.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      auto& [v, pos] = call.back();
      const auto& out = g.out(v);
      if (pos < out.size()) {
        const std::size_t w = out[pos++];
        if (index[w] == unvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const std::size_t done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
      if (low[done] == index[done]) {
        std::vector<std::size_t> comp;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp.push_back(w);
        } while (w != done);
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
      }
    }
  }
  std::sort(comps.begin(), comps.end());
  return comps;
}

bool is_strongly_connected(const DiGraph& g) {
  if (g.size() == 0) return false;
  const auto all = reachable(g, {0});
  if (all.size() != g.size()) return false;
  // reverse reachability
  DiGraph rev(g.size());
  for (auto [u, v] : g.edges()) rev.add_edge(v, u);
  return reachable(rev, {0}).size() == g.size();
}

std::vector<std::size_t> reachable(const DiGraph& g, const std::vector<std::size_t>& seeds) {
  std::vector<char> seen(g.size(), 0);
  std::vector<std::size_t> todo;
  for (auto s : seeds) {
    if (s >= g.size()) throw DomainError("vertex out of range");
    if (!seen[s]) {
      seen[s] = 1;
      todo.push_back(s);
    }
  }
  while (!todo.empty()) {
    std::size_t v = todo.back();
    todo.pop_back();
    for (auto w : g.out(v))
      if (!seen[w]) {
        seen[w] = 1;
        todo.push_back(w);
      }
  }
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < g.size(); ++v)
    if (seen[v]) out.push_back(v);
  return out;
}

std::size_t period(const DiGraph& g) {
  if (!is_strongly_connected(g) || g.edge_count() == 0)
    throw DomainError("period needs a strongly connected graph with at least one edge");
  // BFS levels from vertex 0; the period is the gcd of level(u) + 1 - level(v)
  // over all edges u -> v.
  std::vector<long> level(g.size(), -1);
  std::vector<std::size_t> queue{0};
  level[0] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::size_t v = queue[head];
    for (auto w : g.out(v))
      if (level[w] < 0) {
        level[w] = level[v] + 1;
        queue.push_back(w);
      }
  }
  std::size_t d = 0;
  for (auto [u, v] : g.edges()) {
    long diff = level[u] + 1 - level[v];
    d = std::gcd(d, static_cast<std::size_t>(diff < 0 ? -diff : diff));
  }
  return d;
}

DiGraph categorical_product(const DiGraph& e, const DiGraph& f) {
  const std::size_t m = f.size();
  DiGraph g(e.size() * m);
  for (auto [i, j] : e.edges())
    for (auto [p, q] : f.edges()) g.add_edge(i * m + p, j * m + q);
  return g;
}

namespace {

void search_isomorphisms(const DiGraph& from, const DiGraph& to, bool first_only,
                         std::vector<Permutation>& found) {
  const std::size_t n = from.size();
  if (n != to.size() || from.edge_count() != to.edge_count() || from.loop_count() != to.loop_count())
    return;
  auto signature = [](const DiGraph& g, std::size_t v) {
    return std::tuple(g.out_degree(v), g.in_degree(v), g.has_edge(v, v));
  };
  Permutation sigma(n);
  std::vector<char> used(n, 0);
  std::function<bool(std::size_t)> extend = [&](std::size_t i) -> bool {
    if (i == n) {
      found.push_back(sigma);
      return first_only;
    }
    for (std::size_t cand = 0; cand < n; ++cand) {
      if (used[cand] || signature(from, i) != signature(to, cand)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        ok = from.has_edge(i, j) == to.has_edge(cand, sigma[j]) &&
             from.has_edge(j, i) == to.has_edge(sigma[j], cand);
      }
      if (!ok) continue;
      sigma[i] = cand;
      used[cand] = 1;
      if (extend(i + 1)) return true;
      used[cand] = 0;
    }
    return false;
  };
  extend(0);
}

} // namespace

std::vector<Permutation> isomorphisms(const DiGraph& from, const DiGraph& to) {
  std::vector<Permutation> found;
  search_isomorphisms(from, to, false, found);
  return found;
}

std::optional<Permutation> graphs_isomorphic(const DiGraph& from, const DiGraph& to) {
  std::vector<Permutation> found;
  search_isomorphisms(from, to, true, found);
  if (found.empty()) return std::nullopt;
  return found.front();
}

std::vector<Permutation> automorphisms(const DiGraph& g) { return isomorphisms(g, g); }

std::vector<std::vector<std::size_t>> simple_cycles(const DiGraph& g) {
  std::vector<std::vector<std::size_t>> cycles;
  std::vector<std::size_t> path;
  std::vector<char> on_path(g.size(), 0);
  for (std::size_t start = 0; start < g.size(); ++start) {
    std::function<void(std::size_t)> walk = [&](std::size_t v) {
      for (auto w : g.out(v)) {
        if (w == start) {
          cycles.push_back(path);
        } else if (w > start && !on_path[w]) {
          on_path[w] = 1;
          path.push_back(w);
          walk(w);
          path.pop_back();
          on_path[w] = 0;
        }
      }
    };
    path = {start};
    on_path[start] = 1;
    walk(start);
    on_path[start] = 0;
  }
  return cycles;
}

std::string to_dot(const DiGraph& g, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (std::size_t v = 0; v < g.size(); ++v) out << "  " << v + 1 << ";\n";
  for (auto [u, v] : g.edges()) out << "  " << u + 1 << " -> " << v + 1 << ";\n";
  out << "}\n";
  return out.str();
}

} // namespace evoalg
