#pragma once

// Orbit deciders for the group actions on parameter tuples over K^x:
// scalings by Delta_{n_1..n_q}, equality in the inductive limit of G_n(K),
// and integer exponent-matrix groups.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "evoalg/field.hpp"

namespace evoalg {

using Tuple = std::vector<Scalar>;

/// Square integer matrix acting on unit tuples by v'_i = prod_j v_j^{M(i,j)}.
class ExponentMatrix {
public:
  ExponentMatrix() = default;
  /// Rows of the matrix; all of equal length k.
  ExponentMatrix(std::initializer_list<std::initializer_list<long long>> rows);
  ExponentMatrix(std::size_t k, std::vector<long long> entries);
  static ExponentMatrix identity(std::size_t k);

  std::size_t size() const { return k_; }
  long long operator()(std::size_t i, std::size_t j) const { return a_[i * k_ + j]; }
  const std::vector<long long>& entries() const { return a_; }

  /// Throws DomainError on 64-bit overflow.
  ExponentMatrix operator*(const ExponentMatrix& other) const;
  long long determinant() const;
  /// Requires determinant +-1.
  ExponentMatrix inverse() const;
  /// Any integer power (negative powers need determinant +-1).
  ExponentMatrix power(long long e) const;
  /// Entries reduced into [0, m).
  ExponentMatrix mod(long long m) const;
  std::string to_string() const;

  friend bool operator==(const ExponentMatrix&, const ExponentMatrix&) = default;
  friend bool operator<(const ExponentMatrix& a, const ExponentMatrix& b) {
    return a.k_ != b.k_ ? a.k_ < b.k_ : a.a_ < b.a_;
  }

private:
  std::size_t k_ = 0;
  std::vector<long long> a_;
};

/// Static exponent matrices of the classification.
namespace matrices {
/// Parameter map of the nontrivial automorphism of the III^{1,7} graph.
const ExponentMatrix& m1();
/// Variant of M_1 with first row (0, 1, 2, 5). It has infinite order and does
/// not describe the automorphism action; used to exercise the bounded search.
const ExponentMatrix& m1_as_printed();
const ExponentMatrix& m2();
const ExponentMatrix& m3();
const ExponentMatrix& m4();
const ExponentMatrix& m5();
const ExponentMatrix& m6();
const ExponentMatrix& m7();
/// Cyclic shift (a, b, c) -> (b, c, a) from the Frobenius chart of III^{3,6}.
const ExponentMatrix& f4();
/// (a, b) -> (b, a).
const ExponentMatrix& swap2();
} // namespace matrices

Tuple apply_matrix(const ExponentMatrix& m, const Tuple& v);

struct EqualityRule {};
/// w ~ v iff w_i = k^{exponents[i]} v_i for some k in K^x.
struct ScalingRule {
  std::vector<long long> exponents;
};
/// One parameter; l ~ u iff l^{m^r} = k^n u^{m^s} for some r, s >= 0, k in K^x.
struct InductiveLimitRule {
  long long m = 2;
  long long n = 1;
};
struct MatrixGroupRule {
  std::vector<ExponentMatrix> generators;
  /// Known order of the generated group; closure stops past this size.
  std::size_t order_bound = 1;
};

using OrbitRule = std::variant<EqualityRule, ScalingRule, InductiveLimitRule, MatrixGroupRule>;

std::string describe(const OrbitRule& rule);

struct OrbitVerdict {
  bool equal = false;
  /// False when the answer came from a bounded search that found nothing.
  bool exhaustive = true;
  std::string note;
};

struct SearchOptions {
  /// Word length bound for groups that do not close (characteristic 0).
  long long power_bound = 8;
  /// Reads EVOALG_S1_BOUND when set.
  static SearchOptions from_environment();
};

bool scaling_orbit_contains(const ScalingRule& rule, const Tuple& v, const Tuple& w);
bool inductive_limit_equal(const Scalar& lambda, const Scalar& mu, long long m, long long n);

/// All group elements when the closure has at most `limit` elements.
std::optional<std::vector<ExponentMatrix>> group_closure(const std::vector<ExponentMatrix>& generators,
                                                         std::size_t limit);

OrbitVerdict matrix_orbit_equal(const MatrixGroupRule& rule, const Tuple& v, const Tuple& w,
                                const SearchOptions& options = {});

OrbitVerdict orbit_decide(const OrbitRule& rule, const Tuple& v, const Tuple& w,
                          const SearchOptions& options = {});

/// Orbits of the rule on (K^x)^arity over a small finite field, each sorted
/// by element index, listed by first element.
std::vector<std::vector<Tuple>> orbit_partition(const Field& field, const OrbitRule& rule,
                                                std::size_t arity);

} // namespace evoalg
