#pragma once

// Canonical families of simple evolution algebras of dimension 2 and 3,
// classification into them, and isomorphism testing.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "evoalg/algebra.hpp"
#include "evoalg/graph.hpp"
#include "evoalg/moduli.hpp"

namespace evoalg {

struct Cell {
  enum class Kind { zero, one, param };
  Kind kind = Kind::zero;
  std::size_t param = 0; // index into FamilySpec::param_names when kind == param
};

/// Polynomial in the family parameters that must not vanish. For every family
/// it agrees with the determinant of the canonical matrix up to a factor that
/// is a product of parameters.
struct Constraint {
  std::string text; // e.g. "lambda*mu - 1"
  std::function<Scalar(const Tuple&)> eval;
};

struct FamilySpec {
  std::string id; // "II^{0,2}", "_4III^{2,6}", ...
  std::size_t dim = 0;
  std::size_t l = 0;
  std::size_t e = 0;
  std::vector<Cell> pattern; // row-major dim x dim
  std::vector<std::string> param_names;
  std::optional<Constraint> constraint;
  OrbitRule rule;
  DiGraph graph; // canonical graph

  std::size_t arity() const { return param_names.size(); }
};

/// The 3 two-dimensional and 27 three-dimensional families.
const std::vector<FamilySpec>& families();
/// Throws DomainError for unknown ids.
const FamilySpec& family(std::string_view id);

struct TypeTag {
  const FamilySpec* family = nullptr;
  Tuple params;

  /// `_4III^{2,6}(1,2,3)`.
  std::string to_string() const;
  /// `_4III^{2,6}  lambda=1 mu=2 delta=3`.
  std::string describe() const;
};

struct Classification {
  TypeTag tag;
  /// Canonical graph vertex i is sent to vertex sigma[i] of the input.
  Permutation sigma;
  /// change_basis(input, change) equals canonical_algebra(tag).
  BasisChange change;
};

/// Throws DomainError when the input is not simple or its dimension is not
/// 2 or 3.
Classification classify_detailed(const EvolutionAlgebra& a);
TypeTag classify(const EvolutionAlgebra& a);

/// The family whose canonical graph is isomorphic to the algebra's graph,
/// together with every such isomorphism (lexicographic order). Does not check
/// simplicity. Returns nullptr when nothing matches.
const FamilySpec* match_family(const DiGraph& g, std::vector<Permutation>* sigmas = nullptr);
/// Number of families whose canonical graph is isomorphic to g.
std::size_t matching_family_count(const DiGraph& g);

/// Parameters read off after moving the input onto the canonical pattern via
/// sigma; throws DomainError if sigma is not a graph isomorphism.
Classification canonical_form(const EvolutionAlgebra& a, const FamilySpec& family, const Permutation& sigma);

/// Throws DomainError for wrong arity, zero parameters or a vanishing
/// constraint.
EvolutionAlgebra canonical_algebra(const TypeTag& tag, const Field& field);

struct IsoVerdict {
  bool isomorphic = false;
  bool exhaustive = true;
  std::string family_a;
  std::string family_b;
  std::vector<std::string> notes;
};

IsoVerdict are_isomorphic(const EvolutionAlgebra& a, const EvolutionAlgebra& b,
                          const SearchOptions& options = {});

/// Exhaustive search over permutations and scalings for a basis change b
/// with change_basis(a, b) == b_alg. Finite fields, dimension <= 4, perfect
/// inputs only.
std::optional<BasisChange> brute_force_isomorphic(const EvolutionAlgebra& a, const EvolutionAlgebra& b_alg);

struct CensusOptions {
  std::size_t pairs = 200;
  unsigned seed = 1;
  /// 0 means hardware concurrency.
  unsigned workers = 0;
};

struct CensusDisagreement {
  std::string a;
  std::string b;
  bool predicate = false;
  bool oracle = false;
};

struct CensusReport {
  std::string field;
  std::size_t dim = 0;
  std::size_t scanned = 0;
  std::size_t simple = 0;
  std::size_t classify_failures = 0;
  std::size_t ambiguous_matches = 0;
  std::map<std::string, std::size_t> family_counts;
  std::size_t pairs_checked = 0;
  std::size_t isomorphic_pairs = 0;
  std::vector<CensusDisagreement> disagreements;
  std::vector<std::string> failures;
  double seconds = 0;

  bool ok() const { return classify_failures == 0 && ambiguous_matches == 0 && disagreements.empty(); }
};

/// Enumerates every structure matrix over a finite field (q^(n^2) <= 10^7),
/// classifies the simple ones and cross-checks are_isomorphic against the
/// brute-force search on random same-family pairs.
CensusReport census(const Field& field, std::size_t dim, const CensusOptions& options = {});

} // namespace evoalg
