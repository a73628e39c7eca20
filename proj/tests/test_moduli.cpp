#include <doctest.h>

#include <set>

#include "evoalg/classify.hpp"
#include "evoalg/moduli.hpp"
#include "support.hpp"

using namespace evoalg;
namespace mx = evoalg::matrices;

namespace {

const Field Q = Field::rationals();
const Field F5 = Field::prime(5);
const Field F7 = Field::prime(7);

Tuple tup(const Field& f, std::vector<long long> v) {
  Tuple out;
  for (auto x : v) out.push_back(f.integer(x));
  return out;
}

Tuple random_tuple(const Field& f, std::size_t k, std::mt19937& rng) {
  Tuple t;
  for (std::size_t i = 0; i < k; ++i) t.push_back(testing::sample_unit(f, rng));
  return t;
}

Tuple scale(const std::vector<long long>& ex, const Scalar& k, const Tuple& v) {
  Tuple w;
  for (std::size_t i = 0; i < v.size(); ++i) w.push_back(k.pow(ex[i]) * v[i]);
  return w;
}

bool scaling_by_enumeration(const std::vector<long long>& ex, const Tuple& v, const Tuple& w) {
  for (const auto& k : units(v.front().field()))
    if (scale(ex, k, v) == w) return true;
  return false;
}

// lambda^(m^r) / mu^(m^s) an n-th power for some small r, s
bool inductive_limit_oracle(const Scalar& lambda, const Scalar& mu, long long m, long long n) {
  // m^r mod n repeats within n steps
  for (long long r = 0; r <= n; ++r)
    for (long long s = 0; s <= n; ++s) {
      long long mr = 1, ms = 1;
      for (long long i = 0; i < r; ++i) mr *= m;
      for (long long i = 0; i < s; ++i) ms *= m;
      if (nth_root(lambda.pow(mr) / mu.pow(ms), n)) return true;
    }
  return false;
}

std::set<Tuple> group_orbit(const std::vector<ExponentMatrix>& gens, const Tuple& v) {
  std::set<Tuple> seen{v};
  std::vector<Tuple> todo{v};
  while (!todo.empty()) {
    const Tuple t = todo.back();
    todo.pop_back();
    for (const auto& g : gens) {
      Tuple u = apply_matrix(g, t);
      if (seen.insert(u).second) todo.push_back(std::move(u));
    }
  }
  return seen;
}

ExponentMatrix random_matrix(std::size_t k, std::mt19937& rng) {
  std::vector<long long> e;
  for (std::size_t i = 0; i < k * k; ++i) e.push_back(static_cast<long long>(rng() % 7) - 3);
  return ExponentMatrix(k, e);
}

} // namespace

TEST_SUITE("moduli") {

TEST_CASE("exponent-matrix action") {
  const Tuple v = tup(Q, {2, 3, 5}); // lambda, mu, delta
  CHECK(apply_matrix(mx::m2(), v) == Tuple{Q.integer(1) / Q.integer(2), Q.integer(4 * 5), Q.integer(4 * 3)});
  CHECK(apply_matrix(mx::f4(), v) == tup(Q, {3, 5, 2}));
  CHECK(apply_matrix(ExponentMatrix::identity(3), v) == v);
  CHECK_THROWS_AS(apply_matrix(mx::m2(), tup(Q, {2, 0, 5})), DomainError);
  CHECK_THROWS_AS(apply_matrix(mx::m2(), tup(Q, {2, 3})), DomainError);
}

TEST_CASE("the static matrices") {
  for (const auto* m : {&mx::m1(), &mx::m2(), &mx::m3(), &mx::m4(), &mx::m5(), &mx::m6(), &mx::m7()})
    CHECK((m->determinant() == 1 || m->determinant() == -1));
  CHECK(mx::m2().power(2) == ExponentMatrix::identity(3));
  CHECK(mx::m3().power(2) == ExponentMatrix::identity(5));
  CHECK(mx::m4().power(3) == ExponentMatrix::identity(3));
  CHECK(mx::m5().power(2) == ExponentMatrix::identity(4));
  CHECK(mx::m1().power(2) == ExponentMatrix::identity(4));
  CHECK(mx::m6() * mx::m7() == mx::m7() * mx::m7() * mx::m6());
  const auto s3 = group_closure({mx::m6(), mx::m7()}, 64);
  REQUIRE(s3);
  CHECK(s3->size() == 6);
  CHECK(mx::f4().power(3) == ExponentMatrix::identity(3));
  CHECK(mx::m4().inverse() * mx::m4() == ExponentMatrix::identity(3));
}

TEST_CASE("printed III^{1,7} matrix generates an infinite group") {
  const auto& p = mx::m1_as_printed();
  CHECK(p(0, 0) == 0);
  CHECK(p(0, 1) == 1);
  CHECK(p(0, 2) == 2);
  CHECK(p(0, 3) == 5);
  CHECK_FALSE(group_closure({p}, 256));
  CHECK_FALSE(p.power(2) == ExponentMatrix::identity(4));
  // over Q the bounded word search gives a non-exhaustive answer
  const MatrixGroupRule rule{{p}, 2};
  const auto v = tup(Q, {2, 3, 5, 7});
  const auto w = apply_matrix(p.power(3), v);
  CHECK(matrix_orbit_equal(rule, v, w).equal);
  const auto far = matrix_orbit_equal(rule, v, tup(Q, {11, 3, 5, 7}), SearchOptions{4});
  CHECK_FALSE(far.equal);
  CHECK_FALSE(far.exhaustive);
  CHECK_FALSE(far.note.empty());
  // over a finite field the orbit is finite and walked completely
  const auto vf = tup(F7, {2, 3, 5, 6});
  const auto exact = matrix_orbit_equal(rule, vf, apply_matrix(p.power(5), vf));
  CHECK(exact.equal);
  CHECK(exact.exhaustive);
}

TEST_CASE("scaling orbits") {
  const ScalingRule d37{{3, 7}};
  CHECK(scaling_orbit_contains(d37, tup(Q, {1, 1}), tup(Q, {8, 128})));
  CHECK_FALSE(scaling_orbit_contains(d37, tup(Q, {1, 1}), tup(Q, {8, 1})));
  CHECK(scaling_orbit_contains(d37, tup(Q, {1, 1}), tup(Q, {-8, -128})));
  CHECK_FALSE(scaling_orbit_contains(ScalingRule{{2}}, tup(Q, {1}), tup(Q, {-4})));
  const ScalingRule d_2367{{-2, 3, 6, 7}};
  std::mt19937 rng(43);
  for (int k = 0; k < 20; ++k) {
    const Tuple v = random_tuple(F5, 4, rng);
    CHECK(scaling_orbit_contains(d_2367, v, scale(d_2367.exponents, F5.integer(2), v)));
  }
  CHECK_THROWS_AS(scaling_orbit_contains(d37, tup(Q, {1, 0}), tup(Q, {1, 1})), DomainError);
}

TEST_CASE("inductive limit equality") {
  CHECK(inductive_limit_equal(Q.integer(1), Q.integer(8), 2, 3));
  CHECK_FALSE(inductive_limit_equal(Q.integer(2), Q.integer(3), 2, 7));
  CHECK(inductive_limit_equal(Q.integer(1), Q.integer(128), 2, 7));
  CHECK(inductive_limit_equal(Q.integer(2), Q.integer(4), 2, 3));
  const Field f4 = Field::parse("F 2^2 t^2+t+1");
  CHECK(inductive_limit_equal(f4.parse_scalar("t"), f4.parse_scalar("t+1"), 2, 3));
  CHECK_FALSE(inductive_limit_equal(f4.one(), f4.parse_scalar("t"), 2, 3));
  CHECK_THROWS_AS(inductive_limit_equal(Q.zero(), Q.one(), 2, 3), DomainError);
}

TEST_CASE("matrix group orbits") {
  const MatrixGroupRule s4{{mx::m4()}, 3};
  const auto v = tup(Q, {2, 3, 5});
  CHECK(matrix_orbit_equal(s4, v, apply_matrix(mx::m4(), v)).equal);
  CHECK(matrix_orbit_equal(s4, v, apply_matrix(mx::m4().power(2), v)).equal);
  const MatrixGroupRule s2{{mx::m2()}, 2};
  const auto ones = tup(Q, {1, 1, 1});
  CHECK(apply_matrix(mx::m2(), ones) == ones);
  CHECK(matrix_orbit_equal(s2, ones, ones).equal);
  CHECK_FALSE(matrix_orbit_equal(s2, ones, tup(Q, {1, 2, 1})).equal);
}

TEST_CASE("orbit_decide dispatch") {
  CHECK(orbit_decide(EqualityRule{}, tup(Q, {2, 3}), tup(Q, {2, 3})).equal);
  CHECK_FALSE(orbit_decide(EqualityRule{}, tup(Q, {2, 3}), tup(Q, {3, 2})).equal);
  const ScalingRule d376{{3, 7, 6}};
  const auto v = tup(Q, {2, 3, 5});
  CHECK(orbit_decide(d376, v, scale(d376.exponents, Q.integer(-3), v)).equal);
  CHECK(orbit_decide(InductiveLimitRule{2, 3}, tup(Q, {2}), tup(Q, {4})).equal);
  CHECK(describe(InductiveLimitRule{2, 3}).find('2') != std::string::npos);
}

TEST_CASE("F_4 orbits of G_3 under squaring") {
  const Field f4 = Field::parse("F 2^2 t^2+t+1");
  const auto orbits = orbit_partition(f4, InductiveLimitRule{2, 3}, 1);
  REQUIRE(orbits.size() == 2);
  CHECK(orbits[0].size() == 1);
  CHECK(orbits[0][0][0].is_one());
  REQUIRE(orbits[1].size() == 2);
  CHECK(orbits[1][0][0].to_string() == "t");
  CHECK(orbits[1][1][0].to_string() == "t+1");
}

TEST_CASE("property: every decider is an equivalence relation") {
  std::mt19937 rng(47);
  std::vector<std::pair<OrbitRule, std::size_t>> rules;
  for (const auto& f : families()) rules.emplace_back(f.rule, f.arity());
  rules.emplace_back(MatrixGroupRule{{mx::m1_as_printed()}, 2}, 4);
  for (const auto& [rule, arity] : rules) {
    for (int k = 0; k < 300; ++k) {
      const Tuple a = random_tuple(F7, arity, rng);
      // b and c drawn near a's orbit half of the time
      Tuple b = random_tuple(F7, arity, rng), c = random_tuple(F7, arity, rng);
      if (k % 2 == 0) {
        if (auto* s = std::get_if<ScalingRule>(&rule)) {
          b = scale(s->exponents, testing::sample_unit(F7, rng), a);
          c = scale(s->exponents, testing::sample_unit(F7, rng), b);
        } else if (auto* g = std::get_if<MatrixGroupRule>(&rule)) {
          b = apply_matrix(g->generators[rng() % g->generators.size()], a);
          c = apply_matrix(g->generators[rng() % g->generators.size()], b);
        } else if (std::holds_alternative<InductiveLimitRule>(rule)) {
          b = Tuple{a[0].pow(2)};
          c = Tuple{b[0] * testing::sample_unit(F7, rng).pow(std::get<InductiveLimitRule>(rule).n)};
        } else {
          b = c = a;
        }
      }
      const bool ab = orbit_decide(rule, a, b).equal, ba = orbit_decide(rule, b, a).equal;
      const bool bc = orbit_decide(rule, b, c).equal, ac = orbit_decide(rule, a, c).equal;
      CHECK(orbit_decide(rule, a, a).equal);
      CHECK(ab == ba);
      if (ab && bc) CHECK(ac);
      if (k % 2 == 0) CHECK(ab);
    }
  }
}

TEST_CASE("property: apply_matrix is a group action") {
  std::mt19937 rng(53);
  for (int k = 0; k < 300; ++k) {
    const std::size_t n = 1 + k % 4;
    const auto m = random_matrix(n, rng), nn = random_matrix(n, rng);
    const Field& f = k % 2 ? Q : F7;
    const Tuple v = random_tuple(f, n, rng);
    CHECK(apply_matrix(m * nn, v) == apply_matrix(m, apply_matrix(nn, v)));
  }
}

TEST_CASE("property: finite-field scaling agrees with enumeration") {
  std::mt19937 rng(59);
  const std::vector<std::vector<long long>> exps = {{3, 7}, {3, 7, 6}, {-2, 3, 6, 7}, {2}, {4, 6}};
  for (const char* h : {"F 3", "F 2^2 t^2+t+1", "F 5", "F 7", "F 2^3 t^3+t+1", "F 3^2 t^2+1"}) {
    const Field f = Field::parse(h);
    for (const auto& ex : exps) {
      const ScalingRule rule{ex};
      for (int k = 0; k < 60; ++k) {
        const Tuple v = random_tuple(f, ex.size(), rng);
        const Tuple w = k % 3 ? random_tuple(f, ex.size(), rng) : scale(ex, testing::sample_unit(f, rng), v);
        CHECK(scaling_orbit_contains(rule, v, w) == scaling_by_enumeration(ex, v, w));
      }
    }
  }
}

TEST_CASE("property: rational scaling is compatible with reduction mod p") {
  std::mt19937 rng(61);
  const std::vector<std::vector<long long>> exps = {{3, 7}, {3, 7, 6}, {-2, 3, 6, 7}};
  for (const auto& ex : exps) {
    for (int k = 0; k < 100; ++k) {
      std::vector<long long> v, kw;
      const long long kk = 1 + static_cast<long long>(rng() % 3);
      for (std::size_t i = 0; i < ex.size(); ++i) v.push_back(1 + 2 * static_cast<long long>(rng() % 5));
      Tuple vq = tup(Q, v);
      // true instances scale by kk, false ones perturb one coordinate
      Tuple wq = scale(ex, Q.integer(kk), vq);
      if (k % 2) wq[0] = wq[0] * Q.integer(2);
      const bool over_q = scaling_orbit_contains(ScalingRule{ex}, vq, wq);
      if (k % 2 == 0) CHECK(over_q);
      for (std::uint64_t p : {5, 7, 11, 13}) {
        const Field fp = Field::prime(p);
        Tuple vp, wp;
        bool ok = true;
        for (std::size_t i = 0; i < ex.size(); ++i) {
          const auto& a = vq[i].rational();
          const auto& b = wq[i].rational();
          const Scalar x = fp.integer(a.get_num().get_si()) / fp.integer(a.get_den().get_si());
          const Scalar y = fp.integer(b.get_num().get_si()) / fp.integer(b.get_den().get_si());
          ok = ok && !x.is_zero() && !y.is_zero();
          vp.push_back(x);
          wp.push_back(y);
        }
        if (ok && over_q) CHECK(scaling_orbit_contains(ScalingRule{ex}, vp, wp));
      }
    }
  }
}

TEST_CASE("property: rational inductive limits agree with root search") {
  std::mt19937 rng(67);
  for (long long n : {3, 7}) {
    for (int k = 0; k < 150; ++k) {
      const long long a = 1 + static_cast<long long>(rng() % 12), b = 1 + static_cast<long long>(rng() % 12);
      const Scalar l = Q.integer(rng() % 2 ? a : -a), m = Q.integer(b);
      CHECK(inductive_limit_equal(l, m, 2, n) == inductive_limit_oracle(l, m, 2, n));
    }
  }
}

TEST_CASE("property: matrix orbits agree with orbit walk") {
  std::mt19937 rng(71);
  for (const auto& f : families()) {
    const auto* g = std::get_if<MatrixGroupRule>(&f.rule);
    if (!g) continue;
    for (int k = 0; k < 60; ++k) {
      const Tuple v = random_tuple(F7, f.arity(), rng);
      const auto orbit = group_orbit(g->generators, v);
      const Tuple w = k % 2 ? *std::next(orbit.begin(), static_cast<long>(rng() % orbit.size()))
                            : random_tuple(F7, f.arity(), rng);
      CHECK(matrix_orbit_equal(*g, v, w).equal == (orbit.count(w) > 0));
    }
  }
}

TEST_CASE("group rules are the parameter maps of graph automorphisms") {
  // Relabel a canonical algebra by each automorphism of its graph and read
  // the parameters back; the results must be exactly the group orbit.
  std::mt19937 rng(73);
  for (const auto& fam : families()) {
    const auto* g = std::get_if<MatrixGroupRule>(&fam.rule);
    if (!g) continue;
    const auto elements = group_closure(g->generators, 64);
    REQUIRE(elements);
    CHECK(elements->size() == g->order_bound);
    for (const Field& f : {F7, Q}) {
      for (int k = 0; k < 10; ++k) {
        const TypeTag tag = testing::random_tag(fam, f, rng);
        const auto a = canonical_algebra(tag, f);
        std::set<Tuple> from_graph, from_group;
        for (const auto& sigma : automorphisms(fam.graph))
          from_graph.insert(canonical_form(a, fam, sigma).tag.params);
        for (const auto& m : *elements) from_group.insert(apply_matrix(m, tag.params));
        CHECK_MESSAGE(from_graph == from_group, fam.id);
      }
    }
  }
}

}
