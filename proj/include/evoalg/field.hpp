#pragma once

// Exact ground fields: the rationals, prime fields F_p and small extension
// fields F_{p^k} = F_p[t]/(f) with k <= 4.

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "evoalg/error.hpp"

namespace evoalg {

class Scalar;

enum class FieldKind { rationals, prime, extension };

/// Immutable field descriptor. Copies share the same underlying data.
///
/// Finite fields are limited to p < 2^31 and q = p^k < 2^62 so that residues
/// multiply in 64 bits and the unit group order fits a machine word.
class Field {
public:
  static constexpr unsigned max_degree = 4;

  static Field rationals();
  static Field prime(std::uint64_t p);
  /// `modulus` holds the coefficients of a monic irreducible polynomial of
  /// the given degree, lowest degree first (size degree + 1).
  static Field extension(std::uint64_t p, unsigned degree,
                         std::vector<std::uint64_t> modulus);
  /// Header syntax: `Q`, `F 5`, `F 2^2 t^2+t+1`.
  static Field parse(std::string_view header);

  FieldKind kind() const;
  bool is_finite() const { return kind() != FieldKind::rationals; }
  /// 0 for the rationals.
  std::uint64_t characteristic() const;
  /// Extension degree over the prime field (1 for F_p and Q).
  unsigned degree() const;
  /// Number of elements q; throws for Q.
  std::uint64_t order() const;
  /// q - 1; throws for Q.
  std::uint64_t unit_order() const;
  /// Prime divisors of q - 1, ascending.
  const std::vector<std::uint64_t>& unit_order_primes() const;
  /// Defining polynomial for extension fields, lowest degree first.
  const std::vector<std::uint64_t>& modulus() const;

  std::string header() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar integer(long long value) const;
  /// Rationals only.
  Scalar rational(const mpq_class& value) const;
  /// Finite fields only: the element whose base-p digits are its
  /// polynomial coefficients (index 0 is zero, index 1 is one).
  Scalar element(std::uint64_t index) const;
  /// A fixed primitive element of a finite field.
  Scalar generator() const;
  Scalar parse_scalar(std::string_view text) const;

  friend bool operator==(const Field& a, const Field& b);

private:
  struct Data;
  explicit Field(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;

  friend class Scalar;
  friend std::uint64_t discrete_log(const Scalar& a);
};

/// Exact field element. Rationals are kept in lowest terms with a positive
/// denominator; finite-field elements as canonical coefficient vectors.
class Scalar {
public:
  using Coeffs = std::array<std::uint64_t, Field::max_degree>;

  Scalar() = delete;

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& other) const;
  Scalar operator-(const Scalar& other) const;
  Scalar operator*(const Scalar& other) const;
  Scalar operator/(const Scalar& other) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other) { return *this = *this + other; }
  Scalar& operator-=(const Scalar& other) { return *this = *this - other; }
  Scalar& operator*=(const Scalar& other) { return *this = *this * other; }

  Scalar inv() const;
  /// Integer power of either sign; 0 to a negative power throws.
  Scalar pow(long long e) const;

  /// Rationals only.
  const mpq_class& rational() const;
  /// Finite fields only; see Field::element.
  std::uint64_t index() const;

  std::string to_string() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  /// Total order on canonical representations (for containers; it has no
  /// algebraic meaning for finite fields).
  friend bool operator<(const Scalar& a, const Scalar& b);

private:
  Scalar(Field field, mpq_class value);
  Scalar(Field field, Coeffs value);
  void require_same_field(const Scalar& other) const;

  Field field_;
  std::variant<mpq_class, Coeffs> value_;

  friend class Field;
  friend std::uint64_t discrete_log(const Scalar& a);
};

/// Signed prime factorization of a nonzero rational.
struct ExponentVector {
  int sign = 1;
  /// prime -> exponent; never holds a zero exponent.
  std::map<mpz_class, long> primes;

  mpq_class value() const;
  ExponentVector operator*(const ExponentVector& other) const;
  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
};

/// Some x with x^n == a, or nothing when a is not an n-th power.
std::optional<Scalar> nth_root(const Scalar& a, long long n);

ExponentVector exponent_vector(const Scalar& a);

/// All q - 1 nonzero elements of a finite field, in index order.
std::vector<Scalar> units(const Field& field);

/// Logarithm of a nonzero finite-field element to the base
/// field.generator(), in [0, q - 1).
std::uint64_t discrete_log(const Scalar& a);

} // namespace evoalg
