#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "evoalg/classify.hpp"

namespace testing {

using namespace evoalg;

inline Scalar sample(const Field& f, std::mt19937& rng) {
  if (!f.is_finite()) return f.integer(std::uniform_int_distribution<long long>(-3, 3)(rng));
  return f.element(std::uniform_int_distribution<std::uint64_t>(0, f.order() - 1)(rng));
}

inline Scalar sample_unit(const Field& f, std::mt19937& rng) {
  if (!f.is_finite()) {
    const long long num = std::uniform_int_distribution<long long>(1, 12)(rng);
    const long long den = std::uniform_int_distribution<long long>(1, 4)(rng);
    return f.integer(rng() % 2 ? num : -num) / f.integer(den);
  }
  return f.element(std::uniform_int_distribution<std::uint64_t>(1, f.order() - 1)(rng));
}

inline EvolutionAlgebra random_algebra(const Field& f, std::size_t n, std::mt19937& rng) {
  std::vector<Scalar> e;
  for (std::size_t i = 0; i < n * n; ++i) e.push_back(sample(f, rng));
  return EvolutionAlgebra(f, n, std::move(e));
}

inline EvolutionAlgebra random_perfect(const Field& f, std::size_t n, std::mt19937& rng) {
  for (;;) {
    auto a = random_algebra(f, n, rng);
    if (is_perfect(a)) return a;
  }
}

inline EvolutionAlgebra random_simple(const Field& f, std::size_t n, std::mt19937& rng) {
  for (;;) {
    auto a = random_algebra(f, n, rng);
    if (is_simple(a)) return a;
  }
}

inline BasisChange random_change(const Field& f, std::size_t n, std::mt19937& rng) {
  BasisChange b{std::vector<std::size_t>(n), {}};
  std::iota(b.perm.begin(), b.perm.end(), 0);
  std::shuffle(b.perm.begin(), b.perm.end(), rng);
  for (std::size_t i = 0; i < n; ++i) b.scalars.push_back(sample_unit(f, rng));
  return b;
}

inline EvolutionAlgebra tagged(const std::string& id, const std::vector<long long>& params, const Field& f) {
  TypeTag t{&family(id), {}};
  for (auto p : params) t.params.push_back(f.integer(p));
  return canonical_algebra(t, f);
}

/// Random parameters satisfying the family constraint.
inline TypeTag random_tag(const FamilySpec& fam, const Field& f, std::mt19937& rng) {
  for (;;) {
    TypeTag t{&fam, {}};
    for (std::size_t i = 0; i < fam.arity(); ++i) t.params.push_back(sample_unit(f, rng));
    if (!fam.constraint || !fam.constraint->eval(t.params).is_zero()) return t;
  }
}

/// Families with at least one valid parameter tuple over f.
inline bool realisable(const FamilySpec& fam, const Field& f, std::mt19937& rng) {
  for (int k = 0; k < 200; ++k) {
    TypeTag t{&fam, {}};
    for (std::size_t i = 0; i < fam.arity(); ++i) t.params.push_back(sample_unit(f, rng));
    if (!fam.constraint || !fam.constraint->eval(t.params).is_zero()) return true;
  }
  return false;
}

} // namespace testing
