#include <doctest.h>

#include <numeric>
#include <set>

#include "evoalg/error.hpp"
#include "evoalg/field.hpp"
#include "support.hpp"

using namespace evoalg;

namespace {

Scalar q(long long num, long long den = 1) {
  const Field f = Field::rationals();
  return f.integer(num) / f.integer(den);
}

} // namespace

TEST_SUITE("field") {

TEST_CASE("modular and rational arithmetic") {
  const Field f5 = Field::prime(5);
  CHECK(f5.integer(3) + f5.integer(4) == f5.integer(2));
  CHECK(f5.integer(2).inv() == f5.integer(3));
  CHECK(q(2, 3) * q(9, 4) == q(3, 2));
  CHECK(q(2, 3) * q(9, 4) == q(6, 4));
  CHECK((q(3, 2)).to_string() == "3/2");
  CHECK(f5.integer(-1) == f5.integer(4));
  CHECK(f5.integer(7).to_string() == "2");
  CHECK_THROWS_AS(f5.zero().inv(), DomainError);
}

TEST_CASE("powers") {
  const Field f5 = Field::prime(5);
  CHECK(q(2).pow(-2) == q(1, 4));
  CHECK(f5.integer(2).pow(4) == f5.one());
  CHECK(q(2).pow(7) == q(128));
  CHECK(q(0).pow(0) == q(1));
  CHECK_THROWS(q(0).pow(-1));
}

TEST_CASE("nth roots") {
  const Field f5 = Field::prime(5);
  auto r = nth_root(q(128), 7);
  REQUIRE(r);
  CHECK(*r == q(2));
  r = nth_root(q(-8), 3);
  REQUIRE(r);
  CHECK(*r == q(-2));
  CHECK_FALSE(nth_root(q(-4), 2));
  CHECK_FALSE(nth_root(q(2, 9), 2));

  // squares of F_5 by enumeration
  std::set<std::uint64_t> squares;
  for (const auto& u : units(f5)) squares.insert((u * u).index());
  CHECK(squares == std::set<std::uint64_t>{1, 4});
  CHECK_FALSE(nth_root(f5.integer(2), 2));
  CHECK(nth_root(f5.integer(4), 2));
}

TEST_CASE("exponent vectors") {
  const auto v12 = exponent_vector(q(12));
  CHECK(v12.sign == 1);
  CHECK(v12.primes == std::map<mpz_class, long>{{2, 2}, {3, 1}});
  const auto v = exponent_vector(q(-8, 9));
  CHECK(v.sign == -1);
  CHECK(v.primes == std::map<mpz_class, long>{{2, 3}, {3, -2}});
  CHECK(exponent_vector(q(1)).primes.empty());
  CHECK(exponent_vector(q(1)).sign == 1);
  CHECK(v.value() == mpq_class(-8, 9));
  CHECK_THROWS(exponent_vector(q(0)));
}

TEST_CASE("unit groups") {
  const auto u3 = units(Field::prime(3));
  REQUIRE(u3.size() == 2);
  CHECK(u3[0].to_string() == "1");
  CHECK(u3[1].to_string() == "2");

  const Field f4 = Field::parse("F 2^2 t^2+t+1");
  std::vector<std::string> names;
  for (const auto& u : units(f4)) names.push_back(u.to_string());
  CHECK(names == std::vector<std::string>{"1", "t", "t+1"});
  CHECK(units(Field::prime(5)).size() == 4);
  const Scalar a = f4.parse_scalar("t");
  CHECK(a * a == a + f4.one());
  CHECK(a.pow(3) == f4.one());
}

TEST_CASE("field headers and scalar literals") {
  CHECK(Field::parse("Q").header() == "Q");
  CHECK(Field::parse("F 7").header() == "F 7");
  CHECK(Field::parse("F 3^2 t^2+1").order() == 9);
  CHECK(Field::parse("F 2^3 t^3+t+1").order() == 8);
  CHECK_THROWS_AS(Field::parse("F 6"), ParseError);
  CHECK_THROWS_AS(Field::parse("F 2^2 t^2+1"), ParseError);
  CHECK_THROWS_AS(Field::parse("R"), ParseError);
  CHECK_THROWS_AS(Field::rationals().parse_scalar("1/0"), ParseError);
  CHECK_THROWS_AS(Field::prime(5).parse_scalar("5"), ParseError);
  CHECK_THROWS_AS(Field::prime(5).parse_scalar("x"), ParseError);
  CHECK(Field::rationals().parse_scalar("-6/4") == q(-3, 2));
  CHECK(Field::prime(5).parse_scalar("-1") == Field::prime(5).integer(4));
  for (const auto& s : units(Field::parse("F 3^2 t^2+1")))
    CHECK(s.field().parse_scalar(s.to_string()) == s);
}

TEST_CASE("discrete logarithms") {
  for (const char* h : {"F 7", "F 2^2 t^2+t+1", "F 3^2 t^2+1", "F 1000003"}) {
    const Field f = Field::parse(h);
    std::mt19937 rng(7);
    for (int k = 0; k < 50; ++k) {
      const Scalar a = testing::sample_unit(f, rng);
      CHECK(f.generator().pow(static_cast<long long>(discrete_log(a))) == a);
    }
  }
}

TEST_CASE("property: nth_root output is a root") {
  std::mt19937 rng(11);
  for (const char* h : {"Q", "F 7", "F 3^2 t^2+1", "F 2^3 t^3+t+1"}) {
    const Field f = Field::parse(h);
    for (int k = 0; k < 300; ++k) {
      const Scalar base = testing::sample_unit(f, rng);
      const long long n = std::uniform_int_distribution<long long>(1, 12)(rng);
      // half the samples are n-th powers by construction
      const Scalar a = k % 2 ? base : base.pow(n);
      const auto r = nth_root(a, n);
      if (k % 2 == 0) REQUIRE(r);
      if (r) CHECK(r->pow(n) == a);
    }
  }
}

TEST_CASE("property: exponent_vector is multiplicative") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<long long> num(-3000, 3000), den(1, 3000);
  for (int k = 0; k < 1000; ++k) {
    long long a = num(rng), b = num(rng);
    if (a == 0) a = 1;
    if (b == 0) b = -1;
    const Scalar x = q(a, den(rng)), y = q(b, den(rng));
    const auto vx = exponent_vector(x), vy = exponent_vector(y);
    CHECK(exponent_vector(x * y) == vx * vy);
    CHECK((vx * vy).value() == (x * y).rational());
  }
}

TEST_CASE("property: number of n-th powers is (q-1)/gcd(n,q-1)") {
  for (const char* h : {"F 3", "F 2^2 t^2+t+1", "F 5", "F 7", "F 2^3 t^3+t+1", "F 3^2 t^2+1"}) {
    const Field f = Field::parse(h);
    const std::uint64_t m = f.unit_order();
    for (long long n = 1; n <= 12; ++n) {
      std::set<std::uint64_t> powers;
      for (const auto& u : units(f)) powers.insert(u.pow(n).index());
      CHECK(powers.size() == m / std::gcd<std::uint64_t>(n, m));
      std::size_t roots = 0;
      for (const auto& u : units(f)) roots += nth_root(u, n).has_value();
      CHECK(roots == powers.size());
    }
  }
}

}
