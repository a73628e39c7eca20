#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "evoalg/algebra.hpp"
#include "evoalg/graph.hpp"

namespace evoalg {

/// Kronecker product of structure matrices; basis vector a_i (x) b_p has
/// index i * B.dim() + p, matching categorical_product.
EvolutionAlgebra tensor(const EvolutionAlgebra& a, const EvolutionAlgebra& b);

/// gcd(period(A), period(B)) == 1; both factors must be simple.
bool predict_tensor_simple(const EvolutionAlgebra& a, const EvolutionAlgebra& b);

struct DecompositionReport {
  EvolutionAlgebra product;
  std::vector<std::vector<std::size_t>> components;
  std::vector<EvolutionAlgebra> parts; // one per component, on its basis vectors
  std::size_t predicted = 0;           // gcd of the factor periods
  bool simple = false;
  bool semisimple = false;
};

/// Splits A (x) B along the strongly connected components of its graph.
/// Throws DomainError if a factor is not simple or a component is not closed
/// under multiplication.
DecompositionReport decompose(const EvolutionAlgebra& a, const EvolutionAlgebra& b);

/// Restriction of A to the span of the given basis vectors, which must be
/// closed under squaring.
EvolutionAlgebra subalgebra(const EvolutionAlgebra& a, const std::vector<std::size_t>& basis);

/// Block matrix whose (k, i) block is w(k, i) * M.
EvolutionAlgebra inflate(const EvolutionAlgebra& templ, const EvolutionAlgebra& m);

struct QuotientCheck {
  Vector generator;
  std::size_t pivot = 0;
  EvolutionAlgebra quotient;
  bool simple = false;
};

struct QuotientReport {
  EvolutionAlgebra product;
  std::vector<QuotientCheck> checks;
  /// True when no quotient by a line ideal is simple (vacuous without ideals).
  bool holds() const;
};

QuotientReport quotient_theorem_check(const EvolutionAlgebra& a1, const EvolutionAlgebra& a2);

/// Algebra with weight 1 on every edge of g (w(j, i) = 1 for i -> j). If that
/// matrix is singular, the weight of `chord` (default: the first edge) is
/// raised through the units in index order (2, 3, ... over Q) until the
/// matrix is nonsingular; throws DomainError if none works.
EvolutionAlgebra unit_weight_algebra(const DiGraph& g, const Field& field,
                                     std::optional<std::pair<std::size_t, std::size_t>> chord = std::nullopt);

/// Six vertices with closed paths of lengths 4 and 6 (period 2).
DiGraph period_two_graph();
/// Nine vertices with closed paths of lengths 6 and 9 (period 3).
DiGraph period_three_graph();

} // namespace evoalg
