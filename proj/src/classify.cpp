#include "evoalg/classify.hpp"

#include <algorithm>
#include <numeric>

namespace evoalg {

std::string TypeTag::to_string() const {
  std::string s = family->id + "(";
  for (std::size_t i = 0; i < params.size(); ++i) s += (i ? "," : "") + params[i].to_string();
  return s + ")";
}

std::string TypeTag::describe() const {
  std::string s = family->id + " ";
  for (std::size_t i = 0; i < params.size(); ++i)
    s += " " + family->param_names[i] + "=" + params[i].to_string();
  return s;
}

const FamilySpec* match_family(const DiGraph& g, std::vector<Permutation>* sigmas) {
  for (const auto& f : families()) {
    if (f.dim != g.size() || f.e != g.edge_count() || f.l != g.loop_count()) continue;
    auto isos = isomorphisms(f.graph, g);
    if (isos.empty()) continue;
    if (sigmas) *sigmas = std::move(isos);
    return &f;
  }
  return nullptr;
}

std::size_t matching_family_count(const DiGraph& g) {
  return static_cast<std::size_t>(std::count_if(families().begin(), families().end(), [&](const FamilySpec& f) {
    return f.dim == g.size() && graphs_isomorphic(f.graph, g).has_value();
  }));
}

Classification canonical_form(const EvolutionAlgebra& a, const FamilySpec& f, const Permutation& sigma) {
  const std::size_t n = f.dim;
  if (a.dim() != n || sigma.size() != n) throw DomainError("dimension does not match family " + f.id);
  auto w = [&](std::size_t k, std::size_t i) -> const Scalar& { return a.entry(sigma[k], sigma[i]); };

  // New basis u_i = c_i e_{sigma(i)} has w'(k, i) = c_i^2 c_k^{-1} w(sigma k, sigma i).
  // A One cell at (i, i) fixes c_i = 1 / w(sigma i, sigma i); one at (k, i),
  // k != i, fixes c_k = c_i^2 w(sigma k, sigma i). Rows without a One cell
  // keep c = 1.
  std::vector<std::optional<Scalar>> c(n);
  std::vector<std::optional<std::size_t>> one_source(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (f.pattern[k * n + i].kind == Cell::Kind::one && !one_source[k]) one_source[k] = i;
  for (std::size_t k = 0; k < n; ++k)
    if (!one_source[k]) c[k] = a.field().one();
  for (bool progress = true; progress;) {
    progress = false;
    for (std::size_t k = 0; k < n; ++k) {
      if (c[k]) continue;
      const std::size_t i = *one_source[k];
      if (w(k, i).is_zero()) throw DomainError("permutation is not a graph isomorphism onto " + f.id);
      if (i == k) {
        c[k] = w(k, k).inv();
      } else if (c[i]) {
        c[k] = *c[i] * *c[i] * w(k, i);
      } else {
        continue;
      }
      progress = true;
    }
  }
  Classification out;
  out.sigma = sigma;
  out.change.perm = sigma;
  for (std::size_t k = 0; k < n; ++k) {
    if (!c[k]) throw Error("family table: unresolved normalisation in " + f.id);
    out.change.scalars.push_back(*c[k]);
  }
  const EvolutionAlgebra canon = change_basis(a, out.change);
  out.tag.family = &f;
  out.tag.params = Tuple(f.arity(), a.field().zero());
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      const Cell& cell = f.pattern[k * n + i];
      const Scalar& x = canon.entry(k, i);
      switch (cell.kind) {
      case Cell::Kind::zero:
        if (!x.is_zero()) throw DomainError("permutation is not a graph isomorphism onto " + f.id);
        break;
      case Cell::Kind::one:
        if (!x.is_one()) throw Error("family table: normalisation failed in " + f.id);
        break;
      case Cell::Kind::param:
        if (x.is_zero()) throw DomainError("permutation is not a graph isomorphism onto " + f.id);
        out.tag.params[cell.param] = x;
        break;
      }
    }
  }
  return out;
}

Classification classify_detailed(const EvolutionAlgebra& a) {
  if (a.dim() != 2 && a.dim() != 3)
    throw DomainError("classification covers dimensions 2 and 3, got " + std::to_string(a.dim()));
  const SimplicityReport s = simplicity(a);
  if (!s.simple()) throw DomainError("algebra is not simple: " + s.reason());
  std::vector<Permutation> sigmas;
  const FamilySpec* f = match_family(graph_of(a), &sigmas);
  if (!f) {
    std::string edges;
    for (auto [u, v] : graph_of(a).edges()) edges += " " + std::to_string(u + 1) + "->" + std::to_string(v + 1);
    throw Error("internal: no canonical family matches the graph of a simple algebra (edges" + edges + ")");
  }
  return canonical_form(a, *f, sigmas.front());
}

TypeTag classify(const EvolutionAlgebra& a) { return classify_detailed(a).tag; }

EvolutionAlgebra canonical_algebra(const TypeTag& tag, const Field& field) {
  if (!tag.family) throw DomainError("type tag without a family");
  const FamilySpec& f = *tag.family;
  if (tag.params.size() != f.arity())
    throw DomainError(f.id + " takes " + std::to_string(f.arity()) + " parameters");
  for (std::size_t i = 0; i < tag.params.size(); ++i) {
    if (!(tag.params[i].field() == field)) throw DomainError("parameter from another field");
    if (tag.params[i].is_zero()) throw DomainError("parameter " + f.param_names[i] + " must be nonzero");
  }
  if (f.constraint && f.constraint->eval(tag.params).is_zero())
    throw DomainError(f.id + " requires " + f.constraint->text + " != 0");
  std::vector<Scalar> entries;
  entries.reserve(f.dim * f.dim);
  for (const Cell& c : f.pattern) {
    switch (c.kind) {
    case Cell::Kind::zero: entries.push_back(field.zero()); break;
    case Cell::Kind::one: entries.push_back(field.one()); break;
    case Cell::Kind::param: entries.push_back(tag.params[c.param]); break;
    }
  }
  return EvolutionAlgebra(field, f.dim, std::move(entries));
}

IsoVerdict are_isomorphic(const EvolutionAlgebra& a, const EvolutionAlgebra& b, const SearchOptions& options) {
  if (!(a.field() == b.field())) throw DomainError("algebras over different fields");
  const Classification ca = classify_detailed(a);
  const Classification cb = classify_detailed(b);
  IsoVerdict v;
  v.family_a = ca.tag.family->id;
  v.family_b = cb.tag.family->id;
  if (ca.tag.family != cb.tag.family) return v;
  // Each graph isomorphism onto b yields a canonical parameter tuple for b;
  // a is isomorphic to b iff its tuple lies in the orbit of one of them.
  std::vector<Permutation> sigmas;
  match_family(graph_of(b), &sigmas);
  const FamilySpec& f = *cb.tag.family;
  for (const auto& sigma : sigmas) {
    const Tuple pb = canonical_form(b, f, sigma).tag.params;
    OrbitVerdict o = orbit_decide(f.rule, ca.tag.params, pb, options);
    if (!o.exhaustive) v.exhaustive = false;
    if (!o.note.empty() && std::find(v.notes.begin(), v.notes.end(), o.note) == v.notes.end())
      v.notes.push_back(o.note);
    if (o.equal) {
      v.isomorphic = true;
      v.exhaustive = true;
      return v;
    }
  }
  return v;
}

std::optional<BasisChange> brute_force_isomorphic(const EvolutionAlgebra& a, const EvolutionAlgebra& b) {
  if (!(a.field() == b.field())) throw DomainError("algebras over different fields");
  const Field& field = a.field();
  if (!field.is_finite()) throw DomainError("brute-force isomorphism search needs a finite field");
  const std::size_t n = a.dim();
  if (b.dim() != n) return std::nullopt;
  if (n > 4) throw DomainError("brute-force isomorphism search is limited to dimension 4");
  if (!is_perfect(a) || !is_perfect(b)) throw DomainError("brute-force isomorphism search needs perfect algebras");

  const auto us = units(field);
  const std::size_t q1 = us.size();
  std::vector<Scalar> sq, inv;
  for (const auto& u : us) {
    sq.push_back(u * u);
    inv.push_back(u.inv());
  }
  // Every permutation and every scaling; a mismatch in the zero pattern
  // rejects a permutation before any scaling is tried.
  Permutation perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool pattern_ok = true;
    for (std::size_t k = 0; k < n && pattern_ok; ++k)
      for (std::size_t i = 0; i < n && pattern_ok; ++i)
        pattern_ok = a.entry(perm[k], perm[i]).is_zero() == b.entry(k, i).is_zero();
    if (!pattern_ok) continue;
    std::vector<std::size_t> idx(n, 0); // scalar index per basis vector
    for (;;) {
      bool ok = true;
      for (std::size_t k = 0; k < n && ok; ++k)
        for (std::size_t i = 0; i < n && ok; ++i)
          ok = sq[idx[i]] * inv[idx[k]] * a.entry(perm[k], perm[i]) == b.entry(k, i);
      if (ok) {
        BasisChange w;
        w.perm = perm;
        for (auto j : idx) w.scalars.push_back(us[j]);
        return w;
      }
      std::size_t pos = 0;
      while (pos < n && ++idx[pos] == q1) idx[pos++] = 0;
      if (pos == n) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

} // namespace evoalg
