#include "evoalg/algebra.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <optional>

#include "evoalg/graph.hpp"

namespace evoalg {

Vector zero_vector(const Field& field, std::size_t n) { return Vector(n, field.zero()); }

Vector basis_vector(const Field& field, std::size_t n, std::size_t i) {
  Vector v = zero_vector(field, n);
  v.at(i) = field.one();
  return v;
}

std::vector<std::size_t> support(const Vector& v) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.push_back(i);
  return out;
}

Vector normalized(const Vector& v) {
  auto it = std::find_if(v.begin(), v.end(), [](const Scalar& s) { return !s.is_zero(); });
  if (it == v.end()) throw DomainError("cannot normalize the zero vector");
  const Scalar inv = it->inv();
  Vector out;
  out.reserve(v.size());
  for (const auto& s : v) out.push_back(s * inv);
  return out;
}

std::string format_vector(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].to_string();
  }
  return out + ")";
}

// ---------------------------------------------------------------------------

struct EvolutionAlgebra::DetCache {
  std::once_flag once;
  std::optional<Scalar> value;
};

EvolutionAlgebra::EvolutionAlgebra(Field field, std::size_t n, std::vector<Scalar> entries)
    : field_(std::move(field)), n_(n), entries_(std::move(entries)),
      det_(std::make_shared<DetCache>()) {
  if (n_ == 0) throw DomainError("dimension must be positive");
  if (entries_.size() != n_ * n_)
    throw DomainError("structure matrix needs " + std::to_string(n_ * n_) + " entries, got " +
                      std::to_string(entries_.size()));
  for (const auto& s : entries_)
    if (!(s.field() == field_)) throw DomainError("structure matrix entry from another field");
}

EvolutionAlgebra EvolutionAlgebra::from_integers(const Field& field, std::size_t n,
                                                 const std::vector<long long>& entries) {
  std::vector<Scalar> s;
  s.reserve(entries.size());
  for (auto v : entries) s.push_back(field.integer(v));
  return EvolutionAlgebra(field, n, std::move(s));
}

Vector EvolutionAlgebra::square(std::size_t i) const {
  if (i >= n_) throw DomainError("basis index out of range");
  Vector v;
  v.reserve(n_);
  for (std::size_t j = 0; j < n_; ++j) v.push_back(entry(j, i));
  return v;
}

const Scalar& EvolutionAlgebra::determinant() const {
  std::call_once(det_->once, [this] {
    // Gaussian elimination on a copy.
    std::vector<Scalar> m = entries_;
    Scalar det = field_.one();
    for (std::size_t col = 0; col < n_; ++col) {
      std::size_t pivot = col;
      while (pivot < n_ && m[pivot * n_ + col].is_zero()) ++pivot;
      if (pivot == n_) {
        det = field_.zero();
        break;
      }
      if (pivot != col) {
        for (std::size_t c = 0; c < n_; ++c) std::swap(m[pivot * n_ + c], m[col * n_ + c]);
        det = -det;
      }
      const Scalar p = m[col * n_ + col];
      det *= p;
      const Scalar p_inv = p.inv();
      for (std::size_t r = col + 1; r < n_; ++r) {
        if (m[r * n_ + col].is_zero()) continue;
        const Scalar factor = m[r * n_ + col] * p_inv;
        for (std::size_t c = col; c < n_; ++c) m[r * n_ + c] -= factor * m[col * n_ + c];
      }
    }
    det_->value = det;
  });
  return *det_->value;
}

bool operator==(const EvolutionAlgebra& a, const EvolutionAlgebra& b) {
  return a.field_ == b.field_ && a.n_ == b.n_ && a.entries_ == b.entries_;
}

// ---------------------------------------------------------------------------

BasisChange BasisChange::identity(const Field& field, std::size_t n) {
  BasisChange b;
  b.perm.resize(n);
  std::iota(b.perm.begin(), b.perm.end(), 0);
  b.scalars.assign(n, field.one());
  return b;
}

void BasisChange::validate(std::size_t n) const {
  if (perm.size() != n || scalars.size() != n) throw DomainError("basis change has the wrong size");
  std::vector<char> seen(n, 0);
  for (auto p : perm) {
    if (p >= n || seen[p]) throw DomainError("basis change permutation is not a bijection");
    seen[p] = 1;
  }
  for (const auto& c : scalars)
    if (c.is_zero()) throw DomainError("basis change scalar is zero");
}

BasisChange BasisChange::inverse() const {
  validate(perm.size());
  // u_i = c_i e_{s(i)}  gives  e_{s(i)} = c_i^{-1} u_i.
  BasisChange b;
  b.perm.assign(perm.size(), 0);
  b.scalars = scalars;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    b.perm[perm[i]] = i;
    b.scalars[perm[i]] = scalars[i].inv();
  }
  return b;
}

Vector multiply(const EvolutionAlgebra& a, const Vector& x, const Vector& y) {
  const std::size_t n = a.dim();
  if (x.size() != n || y.size() != n) throw DomainError("vector dimension does not match the algebra");
  Vector out = zero_vector(a.field(), n);
  for (std::size_t i = 0; i < n; ++i) {
    const Scalar xy = x[i] * y[i];
    if (xy.is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) out[j] += xy * a.entry(j, i);
  }
  return out;
}

bool is_perfect(const EvolutionAlgebra& a) { return !a.determinant().is_zero(); }

EvolutionAlgebra change_basis(const EvolutionAlgebra& a, const BasisChange& b) {
  const std::size_t n = a.dim();
  b.validate(n);
  std::vector<Scalar> inv;
  std::vector<Scalar> sq;
  for (const auto& c : b.scalars) {
    inv.push_back(c.inv());
    sq.push_back(c * c);
  }
  std::vector<Scalar> out;
  out.reserve(n * n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) out.push_back(sq[i] * inv[k] * a.entry(b.perm[k], b.perm[i]));
  return EvolutionAlgebra(a.field(), n, std::move(out));
}

Invariants invariants(const EvolutionAlgebra& a) {
  if (!is_perfect(a)) throw DomainError("invariants are only basis-independent for perfect algebras");
  Invariants inv;
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t c = 0; c < a.dim(); ++c) {
      if (a.entry(r, c).is_zero()) continue;
      ++inv.e;
      if (r == c) ++inv.l;
    }
  }
  inv.diag_dim = inv.l;
  return inv;
}

std::vector<std::size_t> tree_ideal(const EvolutionAlgebra& a, const std::vector<std::size_t>& seeds) {
  for (auto s : seeds)
    if (s >= a.dim()) throw DomainError("vertex " + std::to_string(s + 1) + " out of range");
  return reachable(graph_of(a), seeds);
}

std::string SimplicityReport::reason() const {
  if (!perfect && !strongly_connected) return "not perfect (singular structure matrix) and graph not strongly connected";
  if (!perfect) return "not perfect (singular structure matrix)";
  if (!strongly_connected) return "graph not strongly connected";
  return {};
}

SimplicityReport simplicity(const EvolutionAlgebra& a) {
  SimplicityReport r;
  r.perfect = is_perfect(a);
  r.strongly_connected = is_strongly_connected(graph_of(a));
  return r;
}

bool is_simple(const EvolutionAlgebra& a) { return simplicity(a).simple(); }

namespace {

// Whether v is a scalar multiple of nonzero u.
bool is_multiple(const Vector& v, const Vector& u) {
  std::size_t p = 0;
  while (u[p].is_zero()) ++p;
  const Scalar ratio = v[p] / u[p];
  for (std::size_t i = 0; i < u.size(); ++i)
    if (!(v[i] == ratio * u[i])) return false;
  return true;
}

} // namespace

bool spans_ideal(const EvolutionAlgebra& a, const Vector& u) {
  if (u.size() != a.dim()) throw DomainError("vector dimension does not match the algebra");
  const auto supp = support(u);
  if (supp.empty()) return false;
  return std::all_of(supp.begin(), supp.end(), [&](std::size_t i) { return is_multiple(a.square(i), u); });
}

std::vector<Vector> line_ideals(const EvolutionAlgebra& a) {
  // If K*u is an ideal and e_i^2 != 0 for some i in supp(u), then u is a
  // multiple of e_i^2; otherwise every e_i^2 with i in supp(u) vanishes.
  // Candidates are therefore nonzero columns and basis vectors with zero
  // square. (With two or more zero squares, further lines exist inside their
  // span; only the basis vectors are reported for those.)
  std::vector<Vector> out;
  auto consider = [&](const Vector& candidate) {
    const Vector u = normalized(candidate);
    if (!spans_ideal(a, u)) return;
    if (std::find(out.begin(), out.end(), u) == out.end()) out.push_back(u);
  };
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Vector sq = a.square(i);
    if (support(sq).empty())
      consider(basis_vector(a.field(), a.dim(), i));
    else
      consider(sq);
  }
  return out;
}

EvolutionAlgebra quotient_by_line(const EvolutionAlgebra& a, const Vector& u, std::size_t pivot) {
  const std::size_t n = a.dim();
  if (n < 2) throw DomainError("quotient of a one-dimensional algebra by a line is zero");
  if (!spans_ideal(a, u)) throw DomainError("vector does not span an ideal");
  if (pivot >= n || u[pivot].is_zero()) throw DomainError("pivot outside the support of the generator");
  const Scalar up_inv = u[pivot].inv();
  std::vector<Scalar> out;
  out.reserve((n - 1) * (n - 1));
  for (std::size_t k = 0; k < n; ++k) {
    if (k == pivot) continue;
    const Scalar ratio = u[k] * up_inv;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == pivot) continue;
      out.push_back(a.entry(k, j) - a.entry(pivot, j) * ratio);
    }
  }
  return EvolutionAlgebra(a.field(), n - 1, std::move(out));
}

} // namespace evoalg
