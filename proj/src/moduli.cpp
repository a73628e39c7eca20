#include "evoalg/moduli.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "number_theory.hpp"

namespace evoalg {

namespace {

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw DomainError("exponent matrix entries overflow");
  return r;
}

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw DomainError("exponent matrix entries overflow");
  return r;
}

template <class... F> struct overloaded : F... {
  using F::operator()...;
};
template <class... F> overloaded(F...) -> overloaded<F...>;

} // namespace

ExponentMatrix::ExponentMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : k_(rows.size()) {
  for (const auto& row : rows) {
    if (row.size() != k_) throw DomainError("exponent matrix must be square");
    a_.insert(a_.end(), row.begin(), row.end());
  }
}

ExponentMatrix::ExponentMatrix(std::size_t k, std::vector<long long> entries)
    : k_(k), a_(std::move(entries)) {
  if (a_.size() != k_ * k_) throw DomainError("exponent matrix must be square");
}

ExponentMatrix ExponentMatrix::identity(std::size_t k) {
  std::vector<long long> e(k * k, 0);
  for (std::size_t i = 0; i < k; ++i) e[i * k + i] = 1;
  return ExponentMatrix(k, std::move(e));
}

ExponentMatrix ExponentMatrix::operator*(const ExponentMatrix& other) const {
  if (k_ != other.k_) throw DomainError("exponent matrix size mismatch");
  std::vector<long long> out(k_ * k_, 0);
  for (std::size_t i = 0; i < k_; ++i)
    for (std::size_t l = 0; l < k_; ++l) {
      const long long a = a_[i * k_ + l];
      if (a == 0) continue;
      for (std::size_t j = 0; j < k_; ++j)
        out[i * k_ + j] = checked_add(out[i * k_ + j], checked_mul(a, other.a_[l * k_ + j]));
    }
  return ExponentMatrix(k_, std::move(out));
}

long long ExponentMatrix::determinant() const {
  // Bareiss fraction-free elimination.
  std::vector<mpz_class> m;
  for (long long x : a_) m.emplace_back(static_cast<long>(x));
  const std::size_t k = k_;
  if (k == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t c = 0; c + 1 < k; ++c) {
    if (m[c * k + c] == 0) {
      std::size_t r = c + 1;
      while (r < k && m[r * k + c] == 0) ++r;
      if (r == k) return 0;
      for (std::size_t j = 0; j < k; ++j) std::swap(m[r * k + j], m[c * k + j]);
      sign = -sign;
    }
    for (std::size_t r = c + 1; r < k; ++r) {
      for (std::size_t j = c + 1; j < k; ++j)
        m[r * k + j] = (m[r * k + j] * m[c * k + c] - m[r * k + c] * m[c * k + j]) / prev;
    }
    prev = m[c * k + c];
  }
  mpz_class det = sign * m[k * k - 1];
  if (!det.fits_slong_p()) throw DomainError("determinant overflow");
  return det.get_si();
}

ExponentMatrix ExponentMatrix::inverse() const {
  const long long det = determinant();
  if (det != 1 && det != -1) throw DomainError("exponent matrix is not invertible over the integers");
  // Gauss-Jordan over Q on [M | I]; the result is integral since det = +-1.
  const std::size_t k = k_;
  std::vector<mpq_class> m(k * 2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i * 2 * k + j] = static_cast<long>(a_[i * k + j]);
    m[i * 2 * k + k + i] = 1;
  }
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = c;
    while (m[p * 2 * k + c] == 0) ++p;
    for (std::size_t j = 0; j < 2 * k; ++j) std::swap(m[p * 2 * k + j], m[c * 2 * k + j]);
    const mpq_class piv = m[c * 2 * k + c];
    for (std::size_t j = 0; j < 2 * k; ++j) m[c * 2 * k + j] /= piv;
    for (std::size_t r = 0; r < k; ++r) {
      if (r == c || m[r * 2 * k + c] == 0) continue;
      const mpq_class f = m[r * 2 * k + c];
      for (std::size_t j = 0; j < 2 * k; ++j) m[r * 2 * k + j] -= f * m[c * 2 * k + j];
    }
  }
  std::vector<long long> out(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const mpq_class& v = m[i * 2 * k + k + j];
      if (v.get_den() != 1 || !v.get_num().fits_slong_p()) throw DomainError("inverse overflow");
      out[i * k + j] = v.get_num().get_si();
    }
  return ExponentMatrix(k, std::move(out));
}

ExponentMatrix ExponentMatrix::power(long long e) const {
  ExponentMatrix base = e < 0 ? inverse() : *this;
  unsigned long long ue = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  ExponentMatrix result = identity(k_);
  while (ue) {
    if (ue & 1) result = result * base;
    ue >>= 1;
    if (ue) base = base * base;
  }
  return result;
}

ExponentMatrix ExponentMatrix::mod(long long m) const {
  std::vector<long long> out(a_);
  for (auto& x : out) x = ((x % m) + m) % m;
  return ExponentMatrix(k_, std::move(out));
}

std::string ExponentMatrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < k_; ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < k_; ++j) out << (j ? ", " : "") << a_[i * k_ + j];
    out << ']';
  }
  out << ']';
  return out.str();
}

namespace matrices {

const ExponentMatrix& m1() {
  static const ExponentMatrix m{{0, 1, 0, 2}, {1, 0, 2, 4}, {0, 0, 2, 3}, {0, 0, -1, -2}};
  return m;
}
const ExponentMatrix& m1_as_printed() {
  static const ExponentMatrix m{{0, 1, 2, 5}, {1, 0, 2, 4}, {0, 0, 2, 3}, {0, 0, -1, -2}};
  return m;
}
const ExponentMatrix& m2() {
  static const ExponentMatrix m{{-1, 0, 0}, {2, 0, 1}, {2, 1, 0}};
  return m;
}
const ExponentMatrix& m3() {
  static const ExponentMatrix m{
      {0, 0, 1, 0, 0}, {0, -1, 0, 0, 0}, {1, 0, 0, 0, 0}, {0, 2, 0, 0, 1}, {0, 2, 0, 1, 0}};
  return m;
}
const ExponentMatrix& m4() {
  static const ExponentMatrix m{{0, 1, -2}, {2, 0, 1}, {1, 0, 0}};
  return m;
}
const ExponentMatrix& m5() {
  static const ExponentMatrix m{{0, 0, 1, -2}, {0, 0, 0, 1}, {1, 2, 0, 0}, {0, 1, 0, 0}};
  return m;
}
const ExponentMatrix& m6() {
  static const ExponentMatrix m{{0, 0, 1, 0, 0, 0}, {0, -1, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0},
                                {0, 2, 0, 0, 1, 0}, {0, 2, 0, 1, 0, 0}, {0, 1, 0, 0, 0, 1}};
  return m;
}
const ExponentMatrix& m7() {
  static const ExponentMatrix m{{0, 0, 0, 1, 0, -2}, {-1, 0, 0, 0, 1, -2}, {0, 1, 0, 0, 0, 1},
                                {2, 0, 0, 0, 0, 1},  {2, 0, 1, 0, 0, 0},   {1, 0, 0, 0, 0, 0}};
  return m;
}
const ExponentMatrix& f4() {
  static const ExponentMatrix m{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
  return m;
}
const ExponentMatrix& swap2() {
  static const ExponentMatrix m{{0, 1}, {1, 0}};
  return m;
}

} // namespace matrices

namespace {

void require_units(const Tuple& v) {
  for (const auto& x : v)
    if (x.is_zero()) throw DomainError("parameter tuples must consist of nonzero scalars");
}

void require_shape(const Tuple& v, const Tuple& w, std::size_t k) {
  if (v.size() != k || w.size() != k) throw DomainError("parameter tuple has the wrong length");
  require_units(v);
  require_units(w);
  if (k > 0 && !(v[0].field() == w[0].field())) throw DomainError("field mismatch");
}

} // namespace

Tuple apply_matrix(const ExponentMatrix& m, const Tuple& v) {
  if (v.size() != m.size()) throw DomainError("matrix and tuple sizes differ");
  require_units(v);
  Tuple out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Scalar x = v[0].field().one();
    for (std::size_t j = 0; j < v.size(); ++j)
      if (m(i, j) != 0) x *= v[j].pow(m(i, j));
    out.push_back(std::move(x));
  }
  return out;
}

std::string describe(const OrbitRule& rule) {
  return std::visit(
      overloaded{
          [](const EqualityRule&) { return std::string("equality"); },
          [](const ScalingRule& r) {
            std::string s = "scaling Delta_{";
            for (std::size_t i = 0; i < r.exponents.size(); ++i)
              s += (i ? "," : "") + std::to_string(r.exponents[i]);
            return s + "}";
          },
          [](const InductiveLimitRule& r) {
            return "inductive limit of G_" + std::to_string(r.n) + " under x -> x^" + std::to_string(r.m);
          },
          [](const MatrixGroupRule& r) {
            return "exponent-matrix group with " + std::to_string(r.generators.size()) +
                   " generator(s), order " + std::to_string(r.order_bound);
          },
      },
      rule);
}

SearchOptions SearchOptions::from_environment() {
  SearchOptions o;
  if (const char* env = std::getenv("EVOALG_S1_BOUND")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end == env || *end != '\0' || v < 0) throw ParseError("EVOALG_S1_BOUND must be a nonnegative integer");
    o.power_bound = v;
  }
  return o;
}

// ---------------------------------------------------------------------------

bool scaling_orbit_contains(const ScalingRule& rule, const Tuple& v, const Tuple& w) {
  const std::size_t k = rule.exponents.size();
  if (k == 0) throw DomainError("scaling rule needs at least one exponent");
  require_shape(v, w, k);
  const Field& field = v[0].field();
  Tuple ratio;
  for (std::size_t i = 0; i < k; ++i) ratio.push_back(w[i] / v[i]);

  if (field.is_finite()) {
    // n_i x == log(r_i) (mod q - 1) for all i.
    const std::uint64_t N = field.unit_order();
    std::uint64_t res = 0, mod = 1;
    for (std::size_t i = 0; i < k; ++i) {
      const long long sn = static_cast<long long>(N);
      const auto a = static_cast<std::uint64_t>(((rule.exponents[i] % sn) + sn) % sn);
      auto sol = nt::solve_linear_congruence(a, discrete_log(ratio[i]), N);
      if (!sol) return false;
      auto merged = nt::crt(res, mod, sol->first, sol->second);
      if (!merged) return false;
      std::tie(res, mod) = *merged;
    }
    return true;
  }

  // Over Q: one exponent vector t with n_i t = vec(r_i), and a sign for k.
  std::vector<ExponentVector> vecs;
  std::set<mpz_class> primes;
  for (const auto& r : ratio) {
    vecs.push_back(exponent_vector(r));
    for (const auto& [p, e] : vecs.back().primes) primes.insert(p);
  }
  for (const auto& p : primes) {
    std::optional<long> t;
    for (std::size_t i = 0; i < k; ++i) {
      auto it = vecs[i].primes.find(p);
      const long e = it == vecs[i].primes.end() ? 0 : it->second;
      const long long n = rule.exponents[i];
      if (n == 0) {
        if (e != 0) return false;
        continue;
      }
      if (e % n != 0) return false;
      const long q = static_cast<long>(e / n);
      if (t && *t != q) return false;
      t = q;
    }
  }
  for (int s : {1, -1}) {
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) {
      const int expected = (s == -1 && rule.exponents[i] % 2 != 0) ? -1 : 1;
      ok = vecs[i].sign == expected;
    }
    if (ok) return true;
  }
  return false;
}

bool inductive_limit_equal(const Scalar& lambda, const Scalar& mu, long long m, long long n) {
  if (lambda.is_zero() || mu.is_zero()) throw DomainError("inductive limit comparison of zero");
  if (m < 2 || n < 1) throw DomainError("inductive limit needs m >= 2 and n >= 1");
  if (!(lambda.field() == mu.field())) throw DomainError("field mismatch");
  const Field& field = lambda.field();

  if (field.is_finite()) {
    // k^n ranges over the subgroup of index g = gcd(n, q - 1).
    const std::uint64_t N = field.unit_order();
    const std::uint64_t g = nt::gcd(static_cast<std::uint64_t>(n) % N, N);
    if (g == 1) return true;
    const std::uint64_t a = discrete_log(lambda) % g, b = discrete_log(mu) % g;
    const std::uint64_t mm = static_cast<std::uint64_t>(m) % g;
    const long long window = 2 * static_cast<long long>(g) + 2;
    std::vector<std::uint64_t> pw(window + 1);
    pw[0] = 1 % g;
    for (long long r = 1; r <= window; ++r) pw[r] = nt::mulmod(pw[r - 1], mm, g);
    for (long long r = 0; r <= window; ++r)
      for (long long s = 0; s <= window; ++s)
        if (nt::mulmod(a, pw[r], g) == nt::mulmod(b, pw[s], g)) return true;
    return false;
  }

  // Over Q: exponents reduced mod n; signs matter only for even n.
  const ExponentVector vl = exponent_vector(lambda), vm = exponent_vector(mu);
  std::set<mpz_class> primes;
  for (const auto& [p, e] : vl.primes) primes.insert(p);
  for (const auto& [p, e] : vm.primes) primes.insert(p);
  auto exp_of = [](const ExponentVector& v, const mpz_class& p) -> long long {
    auto it = v.primes.find(p);
    return it == v.primes.end() ? 0 : it->second;
  };
  const long long window = 2 * n + 2;
  std::vector<long long> pw(window + 1);
  pw[0] = 1 % n;
  for (long long r = 1; r <= window; ++r) pw[r] = static_cast<long long>((static_cast<__int128>(pw[r - 1]) * m) % n);
  auto sign_of_power = [&](int sign, long long r) {
    // sign^(m^r); m^r is odd iff m is odd or r == 0
    return (sign < 0 && (r == 0 || m % 2 != 0)) ? -1 : 1;
  };
  for (long long r = 0; r <= window; ++r) {
    for (long long s = 0; s <= window; ++s) {
      bool ok = true;
      for (const auto& p : primes) {
        const __int128 d = static_cast<__int128>(exp_of(vl, p) % n) * pw[r] -
                           static_cast<__int128>(exp_of(vm, p) % n) * pw[s];
        if (d % n != 0) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      if (n % 2 == 0 && sign_of_power(vl.sign, r) != sign_of_power(vm.sign, s)) continue;
      return true;
    }
  }
  return false;
}

std::optional<std::vector<ExponentMatrix>> group_closure(const std::vector<ExponentMatrix>& generators,
                                                         std::size_t limit) {
  if (generators.empty()) throw DomainError("group needs at least one generator");
  const std::size_t k = generators[0].size();
  std::set<ExponentMatrix> seen{ExponentMatrix::identity(k)};
  std::deque<ExponentMatrix> todo{ExponentMatrix::identity(k)};
  while (!todo.empty()) {
    ExponentMatrix g = todo.front();
    todo.pop_front();
    for (const auto& s : generators) {
      ExponentMatrix h = g * s;
      if (seen.insert(h).second) {
        if (seen.size() > limit) return std::nullopt;
        todo.push_back(std::move(h));
      }
    }
  }
  // Every element of a finite monoid of invertible matrices has its inverse
  // among its positive powers, so `seen` is the group.
  return std::vector<ExponentMatrix>(seen.begin(), seen.end());
}

OrbitVerdict matrix_orbit_equal(const MatrixGroupRule& rule, const Tuple& v, const Tuple& w,
                                const SearchOptions& options) {
  if (rule.generators.empty()) throw DomainError("group needs at least one generator");
  const std::size_t k = rule.generators[0].size();
  require_shape(v, w, k);
  const Field& field = v[0].field();
  OrbitVerdict verdict;

  if (auto group = group_closure(rule.generators, rule.order_bound)) {
    verdict.equal = std::any_of(group->begin(), group->end(),
                                [&](const ExponentMatrix& g) { return apply_matrix(g, v) == w; });
    return verdict;
  }

  if (field.is_finite()) {
    // The group acts on the finite set (K^x)^k; walk the orbit of v.
    constexpr std::size_t max_states = 1u << 22;
    std::set<Tuple> seen{v};
    std::deque<Tuple> todo{v};
    while (!todo.empty()) {
      Tuple t = todo.front();
      todo.pop_front();
      if (t == w) {
        verdict.equal = true;
        return verdict;
      }
      for (const auto& g : rule.generators) {
        Tuple u = apply_matrix(g, t);
        if (seen.insert(u).second) {
          if (seen.size() > max_states) throw DomainError("orbit too large to enumerate");
          todo.push_back(std::move(u));
        }
      }
    }
    verdict.note = "group of unbounded order reduced to its finite action on (K^x)^" + std::to_string(k);
    return verdict;
  }

  // Characteristic 0 and no finite closure: words of bounded length.
  std::vector<ExponentMatrix> steps = rule.generators;
  for (const auto& g : rule.generators) steps.push_back(g.inverse());
  std::set<ExponentMatrix> seen{ExponentMatrix::identity(k)};
  std::vector<ExponentMatrix> frontier{ExponentMatrix::identity(k)};
  bool overflow = false;
  for (long long depth = 0; depth <= options.power_bound; ++depth) {
    for (const auto& g : frontier) {
      Tuple image;
      try {
        image = apply_matrix(g, v);
      } catch (const DomainError&) {
        overflow = true;
        continue;
      }
      if (image == w) {
        verdict.equal = true;
        verdict.note = "found within word length " + std::to_string(depth);
        return verdict;
      }
    }
    if (depth == options.power_bound) break;
    std::vector<ExponentMatrix> next;
    for (const auto& g : frontier)
      for (const auto& s : steps) {
        try {
          ExponentMatrix h = g * s;
          if (seen.insert(h).second) next.push_back(std::move(h));
        } catch (const DomainError&) {
          overflow = true;
        }
      }
    frontier = std::move(next);
  }
  verdict.exhaustive = false;
  verdict.note = "bounded search over group words of length <= " + std::to_string(options.power_bound) +
                 (overflow ? " (some words overflowed)" : "") + " found no match; unknown treated as not equal";
  return verdict;
}

OrbitVerdict orbit_decide(const OrbitRule& rule, const Tuple& v, const Tuple& w, const SearchOptions& options) {
  return std::visit(
      overloaded{
          [&](const EqualityRule&) {
            if (v.size() != w.size()) throw DomainError("parameter tuple has the wrong length");
            return OrbitVerdict{v == w, true, {}};
          },
          [&](const ScalingRule& r) { return OrbitVerdict{scaling_orbit_contains(r, v, w), true, {}}; },
          [&](const InductiveLimitRule& r) {
            require_shape(v, w, 1);
            return OrbitVerdict{inductive_limit_equal(v[0], w[0], r.m, r.n), true, {}};
          },
          [&](const MatrixGroupRule& r) { return matrix_orbit_equal(r, v, w, options); },
      },
      rule);
}

std::vector<std::vector<Tuple>> orbit_partition(const Field& field, const OrbitRule& rule, std::size_t arity) {
  if (!field.is_finite()) throw DomainError("orbit partition needs a finite field");
  const auto us = units(field);
  std::size_t total = 1;
  for (std::size_t i = 0; i < arity; ++i) {
    total *= us.size();
    if (total > 4096) throw DomainError("too many tuples to partition");
  }
  std::vector<Tuple> tuples;
  for (std::size_t idx = 0; idx < total; ++idx) {
    Tuple t;
    std::size_t x = idx;
    for (std::size_t i = 0; i < arity; ++i) {
      t.push_back(us[x % us.size()]);
      x /= us.size();
    }
    std::reverse(t.begin(), t.end());
    tuples.push_back(std::move(t));
  }
  std::sort(tuples.begin(), tuples.end());
  std::vector<std::vector<Tuple>> orbits;
  for (const auto& t : tuples) {
    auto it = std::find_if(orbits.begin(), orbits.end(),
                           [&](const std::vector<Tuple>& o) { return orbit_decide(rule, o.front(), t).equal; });
    if (it == orbits.end())
      orbits.push_back({t});
    else
      it->push_back(t);
  }
  return orbits;
}

} // namespace evoalg
