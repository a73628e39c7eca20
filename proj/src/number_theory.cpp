#include "number_theory.hpp"

#include <array>
#include <vector>

namespace evoalg::nt {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) result = mulmod(result, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return result;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::optional<std::uint64_t> invmod(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 0;
  __int128 old_r = a % m, r = m, old_s = 1, s = 0;
  while (r != 0) {
    __int128 q = old_r / r;
    __int128 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) return std::nullopt;
  __int128 mm = m;
  return static_cast<std::uint64_t>(((old_s % mm) + mm) % mm);
}

std::optional<std::pair<std::uint64_t, std::uint64_t>>
solve_linear_congruence(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  a %= m;
  b %= m;
  std::uint64_t g = gcd(a, m); // gcd(0, m) == m
  if (b % g != 0) return std::nullopt;
  std::uint64_t mod = m / g;
  if (mod == 1) return std::pair<std::uint64_t, std::uint64_t>{0, 1};
  auto inv = invmod((a / g) % mod, mod);
  return std::pair<std::uint64_t, std::uint64_t>{mulmod((b / g) % mod, *inv, mod), mod};
}

std::optional<std::pair<std::uint64_t, std::uint64_t>>
crt(std::uint64_t r1, std::uint64_t m1, std::uint64_t r2, std::uint64_t m2) {
  // t = r1 + m1*x with m1*x == r2 - r1 (mod m2)
  std::uint64_t diff = (r2 % m2 + m2 - r1 % m2) % m2;
  auto sol = solve_linear_congruence(m1 % m2, diff, m2);
  if (!sol) return std::nullopt;
  unsigned __int128 lcm = static_cast<unsigned __int128>(m1) * sol->second;
  unsigned __int128 t = r1 + static_cast<unsigned __int128>(m1) * sol->first;
  return std::pair<std::uint64_t, std::uint64_t>{static_cast<std::uint64_t>(t % lcm),
                                                 static_cast<std::uint64_t>(lcm)};
}

namespace {

constexpr std::array<unsigned, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

// Miller-Rabin with the first twelve primes as bases; deterministic below
// 3.3e24, well beyond any input this library factors in practice.
bool miller_rabin(const mpz_class& n) {
  mpz_class d = n - 1;
  unsigned long s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d /= 2;
    ++s;
  }
  mpz_class x;
  const mpz_class n_minus_1 = n - 1;
  for (unsigned a : kWitnesses) {
    if (n == a) return true;
    mpz_class base = a;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n_minus_1) continue;
    bool composite = true;
    for (unsigned long r = 1; r < s; ++r) {
      x = x * x % n;
      if (x == n_minus_1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

mpz_class pollard_brent(const mpz_class& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    mpz_class y = 2, x, g = 1, q = 1, ys;
    unsigned long r = 1;
    const unsigned long m = 128;
    auto f = [&](const mpz_class& v) { return (v * v + c) % n; };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          mpz_class diff = x - y;
          q = q * abs(diff) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        mpz_class diff = x - ys;
        diff = abs(diff);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const mpz_class& n, std::map<mpz_class, long>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  mpz_class d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

} // namespace

bool is_prime(const mpz_class& n) {
  if (n < 2) return false;
  for (unsigned p : kWitnesses) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  return miller_rabin(n);
}

bool is_prime(std::uint64_t n) { return is_prime(mpz_class(static_cast<unsigned long>(n))); }

std::map<mpz_class, long> factorize(const mpz_class& n) {
  std::map<mpz_class, long> out;
  mpz_class rest = n;
  for (unsigned long p = 2; p <= 1000000; p += (p == 2 ? 1 : 2)) {
    if (mpz_class(p) * p > rest) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      ++out[mpz_class(p)];
      rest /= p;
    }
  }
  if (rest > 1) {
    if (rest <= mpz_class(1000000) * 1000000) {
      ++out[rest]; // no factor below its square root
    } else {
      factor_into(rest, out);
    }
  }
  return out;
}

} // namespace evoalg::nt
