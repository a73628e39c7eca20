#pragma once

// Finite-dimensional evolution algebras given by a structure matrix relative
// to a natural basis e_1..e_n.
//
// Convention: column i holds the coordinates of e_i^2, i.e.
//   e_i^2 = sum_j w(j, i) e_j.
// Indices are 0-based in the API and 1-based in every text rendering.

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "evoalg/field.hpp"

namespace evoalg {

using Vector = std::vector<Scalar>;

Vector zero_vector(const Field& field, std::size_t n);
Vector basis_vector(const Field& field, std::size_t n, std::size_t i);
std::vector<std::size_t> support(const Vector& v);
/// Scales v so that its first nonzero coordinate is 1 (v must be nonzero).
Vector normalized(const Vector& v);

class EvolutionAlgebra {
public:
  /// `entries` is the structure matrix in row-major order (n*n scalars).
  EvolutionAlgebra(Field field, std::size_t n, std::vector<Scalar> entries);
  static EvolutionAlgebra from_integers(const Field& field, std::size_t n,
                                        const std::vector<long long>& entries);

  const Field& field() const { return field_; }
  std::size_t dim() const { return n_; }
  const Scalar& entry(std::size_t row, std::size_t col) const { return entries_[row * n_ + col]; }
  const std::vector<Scalar>& entries() const { return entries_; }
  /// Coordinates of e_i^2 (column i).
  Vector square(std::size_t i) const;

  /// Computed on first use and shared between copies.
  const Scalar& determinant() const;

  friend bool operator==(const EvolutionAlgebra& a, const EvolutionAlgebra& b);

private:
  struct DetCache;

  Field field_;
  std::size_t n_;
  std::vector<Scalar> entries_;
  std::shared_ptr<DetCache> det_;
};

/// New basis u_i = scalars[i] * e_{perm[i]}.
struct BasisChange {
  std::vector<std::size_t> perm;
  std::vector<Scalar> scalars;

  static BasisChange identity(const Field& field, std::size_t n);
  BasisChange inverse() const;
  /// Throws DomainError unless perm is a bijection and every scalar nonzero.
  void validate(std::size_t n) const;
};

Vector multiply(const EvolutionAlgebra& a, const Vector& x, const Vector& y);

bool is_perfect(const EvolutionAlgebra& a);

/// Structure matrix relative to the basis described by `b`:
///   w'(k, i) = c_i^2 c_k^{-1} w(perm[k], perm[i]).
EvolutionAlgebra change_basis(const EvolutionAlgebra& a, const BasisChange& b);

struct Invariants {
  std::size_t l = 0;        // nonzero diagonal entries
  std::size_t e = 0;        // nonzero entries
  std::size_t diag_dim = 0; // dimension of the diagonal subspace, equal to l
};

/// Throws DomainError for non-perfect algebras, where the counts depend on
/// the chosen natural basis.
Invariants invariants(const EvolutionAlgebra& a);

/// Vertices reachable from `seeds` in the associated graph (seeds included),
/// ascending. The span of the corresponding basis vectors is an ideal.
std::vector<std::size_t> tree_ideal(const EvolutionAlgebra& a, const std::vector<std::size_t>& seeds);

struct SimplicityReport {
  bool perfect = false;
  bool strongly_connected = false;
  bool simple() const { return perfect && strongly_connected; }
  /// Names the failed test, empty when simple.
  std::string reason() const;
};

SimplicityReport simplicity(const EvolutionAlgebra& a);
bool is_simple(const EvolutionAlgebra& a);

/// True iff K*u is an ideal: e_i^2 is a multiple of u for every i in supp(u).
bool spans_ideal(const EvolutionAlgebra& a, const Vector& u);

/// Every one-dimensional ideal, each represented by a normalized generator,
/// without projective duplicates.
std::vector<Vector> line_ideals(const EvolutionAlgebra& a);

/// A / K*u on the images of e_j, j != pivot, with
///   e_pivot = -u_pivot^{-1} sum_{j != pivot} u_j e_j.
EvolutionAlgebra quotient_by_line(const EvolutionAlgebra& a, const Vector& u, std::size_t pivot);

std::string format_vector(const Vector& v);

} // namespace evoalg
