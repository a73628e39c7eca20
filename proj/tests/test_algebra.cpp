#include <doctest.h>

#include "evoalg/algebra.hpp"
#include "evoalg/classify.hpp"
#include "evoalg/graph.hpp"
#include "support.hpp"

using namespace evoalg;
using testing::tagged;

namespace {

const Field Q = Field::rationals();
const Field F3 = Field::prime(3);
const Field F5 = Field::prime(5);

EvolutionAlgebra ints(const Field& f, std::size_t n, std::vector<long long> e) {
  return EvolutionAlgebra::from_integers(f, n, e);
}

Vector vec(const Field& f, std::vector<long long> v) {
  Vector out;
  for (auto x : v) out.push_back(f.integer(x));
  return out;
}

} // namespace

TEST_SUITE("core") {

TEST_CASE("multiplication in the natural basis") {
  const auto a = ints(Q, 2, {0, 5, 1, 0});
  const auto e1 = basis_vector(Q, 2, 0), e2 = basis_vector(Q, 2, 1);
  CHECK(multiply(a, e1, e1) == e2);
  CHECK(multiply(a, e1, e2) == zero_vector(Q, 2));
  CHECK(multiply(a, vec(Q, {1, 1}), vec(Q, {1, 1})) == vec(Q, {5, 1}));
  CHECK(a.square(1) == vec(Q, {5, 0}));
}

TEST_CASE("perfect algebras") {
  CHECK(is_perfect(ints(Q, 2, {0, 5, 1, 0})));
  CHECK(ints(Q, 2, {0, 5, 1, 0}).determinant() == Q.integer(-5));
  CHECK_FALSE(is_perfect(ints(Q, 2, {1, 1, 1, 1})));

  // III^{0,6} pattern (0 l m; 1 0 g; d 1 0) has det m + l*d*g
  auto iii06 = [](long long l, long long m, long long g, long long d, const Field& f) {
    return ints(f, 3, {0, l, m, 1, 0, g, d, 1, 0});
  };
  CHECK_FALSE(is_perfect(iii06(2, -2 * 3 * 5, 5, 3, Q)));
  CHECK(is_perfect(iii06(2, 2 * 3 * 5, 5, 3, Q)));
  CHECK_FALSE(is_perfect(iii06(1, 4, 2, 3, F5))); // 4 = -(1*3*2) mod 5
}

TEST_CASE("change of natural basis") {
  const long long lambda = 3;
  for (long long k : {2, -1, 5}) {
    const auto a = tagged("II^{0,2}", {lambda}, Q);
    const BasisChange scale{{0, 1}, {Q.integer(k), Q.integer(k * k)}};
    CHECK(change_basis(a, scale) == ints(Q, 2, {0, k * k * k * lambda, 1, 0}));
    const BasisChange swap{{1, 0}, {Q.integer(k), Q.integer(k * k * lambda)}};
    CHECK(change_basis(a, swap) == ints(Q, 2, {0, k * k * k * lambda * lambda, 1, 0}));
  }
  std::mt19937 rng(3);
  const auto a = testing::random_algebra(F5, 3, rng);
  CHECK(change_basis(a, BasisChange::identity(F5, 3)) == a);
  CHECK_THROWS_AS(change_basis(a, BasisChange{{0, 0, 1}, {F5.one(), F5.one(), F5.one()}}), DomainError);
  CHECK_THROWS_AS(change_basis(a, BasisChange{{0, 1, 2}, {F5.one(), F5.zero(), F5.one()}}), DomainError);
}

TEST_CASE("l- and e-numbers") {
  auto inv = invariants(tagged("II^{1,3}", {7}, Q));
  CHECK(inv.l == 1);
  CHECK(inv.e == 3);
  inv = invariants(tagged("III^{3,9}", {2, 3, 5, 7, 11, 13}, Q));
  CHECK(inv.l == 3);
  CHECK(inv.e == 9);
  inv = invariants(tagged("III^{0,3}", {1}, Q));
  CHECK(inv.l == 0);
  CHECK(inv.e == 3);
  CHECK(inv.diag_dim == 0);
  CHECK_THROWS_AS(invariants(ints(Q, 2, {1, 1, 1, 1})), DomainError);
}

TEST_CASE("tree ideals") {
  const auto cycle = ints(Q, 3, {0, 0, 1, 1, 0, 0, 0, 1, 0});
  CHECK(tree_ideal(cycle, {0}) == std::vector<std::size_t>{0, 1, 2});
  // e_1 -> e_2 -> e_3 with loops; e_3 is a sink
  const auto chain = ints(Q, 3, {1, 0, 0, 1, 1, 0, 0, 1, 1});
  CHECK(tree_ideal(chain, {2}) == std::vector<std::size_t>{2});
  CHECK(tree_ideal(chain, {1}) == std::vector<std::size_t>{1, 2});
  CHECK(tree_ideal(chain, {}).empty());
}

TEST_CASE("simplicity") {
  CHECK(is_simple(tagged("III^{0,3}", {1}, Q)));
  const auto id3 = ints(Q, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1});
  CHECK_FALSE(is_simple(id3));
  CHECK(simplicity(id3).perfect);
  CHECK_FALSE(simplicity(id3).strongly_connected);
  const auto singular = ints(Q, 2, {1, 1, 1, 1});
  CHECK_FALSE(is_simple(singular));
  CHECK(simplicity(singular).reason().find("not perfect") != std::string::npos);
}

TEST_CASE("line ideals") {
  // b_1^2 = 2 b_1, b_2^2 = b_3, b_3^2 = b_1 + b_2
  const auto a2 = ints(F5, 3, {2, 0, 1, 0, 0, 1, 0, 1, 0});
  auto lines = line_ideals(a2);
  REQUIRE(lines.size() == 1);
  CHECK(lines[0] == basis_vector(F5, 3, 0));
  CHECK(spans_ideal(a2, basis_vector(F5, 3, 0)));
  CHECK_FALSE(spans_ideal(a2, basis_vector(F5, 3, 1)));

  CHECK(line_ideals(tagged("III^{1,7}", {1, 2, 1, 3}, F5)).empty());

  const auto zero_col = ints(Q, 3, {0, 1, 0, 0, 0, 1, 0, 1, 0});
  lines = line_ideals(zero_col);
  CHECK(std::find(lines.begin(), lines.end(), basis_vector(Q, 3, 0)) != lines.end());
}

TEST_CASE("quotients by line ideals") {
  const auto two = ints(Q, 2, {1, 0, 0, 1});
  const auto one = quotient_by_line(two, basis_vector(Q, 2, 0), 0);
  CHECK(one == ints(Q, 1, {1}));

  // e_1^2 = 0: quotient deletes row and column 1
  const auto a = ints(F5, 3, {0, 1, 2, 0, 3, 4, 0, 1, 1});
  const auto quot = quotient_by_line(a, basis_vector(F5, 3, 0), 0);
  CHECK(quot == ints(F5, 2, {3, 4, 1, 1}));
  CHECK_THROWS_AS(quotient_by_line(a, basis_vector(F5, 3, 1), 1), DomainError);
  CHECK_THROWS_AS(quotient_by_line(a, basis_vector(F5, 3, 0), 2), DomainError);
}

TEST_CASE("property: invariants and simplicity survive basis changes") {
  std::mt19937 rng(17);
  for (int k = 0; k < 500; ++k) {
    const std::size_t n = 1 + k % 4;
    const auto a = testing::random_perfect(F5, n, rng);
    const auto b = change_basis(a, testing::random_change(F5, n, rng));
    const auto ia = invariants(a), ib = invariants(b);
    CHECK(ia.l == ib.l);
    CHECK(ia.e == ib.e);
    CHECK(ia.diag_dim == ib.diag_dim);
    CHECK(is_simple(a) == is_simple(b));
  }
}

TEST_CASE("property: tree ideals are closed under squaring") {
  std::mt19937 rng(19);
  for (int k = 0; k < 300; ++k) {
    const std::size_t n = 1 + k % 5;
    const auto a = testing::random_algebra(F3, n, rng);
    std::vector<std::size_t> seeds;
    for (std::size_t i = 0; i < n; ++i)
      if (rng() % 3 == 0) seeds.push_back(i);
    const auto t = tree_ideal(a, seeds);
    for (auto s : seeds) CHECK(std::binary_search(t.begin(), t.end(), s));
    for (auto i : t)
      for (auto j : support(a.square(i))) CHECK(std::binary_search(t.begin(), t.end(), j));
  }
}

TEST_CASE("property: inverse basis change round trip") {
  std::mt19937 rng(23);
  for (const Field& f : {F5, Q}) {
    for (int k = 0; k < 200; ++k) {
      const std::size_t n = 1 + k % 4;
      const auto a = testing::random_algebra(f, n, rng);
      const auto b = testing::random_change(f, n, rng);
      CHECK(change_basis(change_basis(a, b), b.inverse()) == a);
      CHECK(change_basis(change_basis(a, b.inverse()), b) == a);
    }
  }
}

TEST_CASE("property: quotient does not depend on the pivot") {
  // Coordinates of x + K*u in the basis that drops pivot p.
  auto coords = [](const Vector& x, const Vector& u, std::size_t p) {
    const Scalar t = x[p] / u[p];
    Vector out;
    for (std::size_t k = 0; k < x.size(); ++k)
      if (k != p) out.push_back(x[k] - t * u[k]);
    return out;
  };
  auto lift = [](const Vector& y, std::size_t p, const Field& f) {
    Vector out(y.begin(), y.end());
    out.insert(out.begin() + static_cast<long>(p), f.zero());
    return out;
  };
  std::mt19937 rng(29);
  int compared = 0;
  for (int k = 0; k < 4000 && compared < 150; ++k) {
    const std::size_t n = 3 + k % 2;
    const auto a = testing::random_algebra(F3, n, rng);
    for (const auto& u : line_ideals(a)) {
      const auto supp = support(u);
      if (supp.size() < 2) continue;
      const std::size_t p = supp[0];
      const auto q0 = quotient_by_line(a, u, p);
      // the projection A -> q0 is multiplicative
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          const auto ei = basis_vector(F3, n, i), ej = basis_vector(F3, n, j);
          CHECK(coords(multiply(a, ei, ej), u, p) == multiply(q0, coords(ei, u, p), coords(ej, u, p)));
        }
      for (std::size_t t = 1; t < supp.size(); ++t) {
        const std::size_t r = supp[t];
        const auto q1 = quotient_by_line(a, u, r);
        // change of coordinates q0 -> q1 preserves products
        auto T = [&](const Vector& y) { return coords(lift(y, p, F3), u, r); };
        for (int s = 0; s < 6; ++s) {
          Vector x, y;
          for (std::size_t i = 0; i + 1 < n; ++i) {
            x.push_back(testing::sample(F3, rng));
            y.push_back(testing::sample(F3, rng));
          }
          CHECK(T(multiply(q0, x, y)) == multiply(q1, T(x), T(y)));
        }
        CHECK(q0.determinant().is_zero() == q1.determinant().is_zero());
        ++compared;
      }
    }
  }
  CHECK(compared > 20);
}

}
