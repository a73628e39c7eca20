#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>

#include <gmpxx.h>

namespace evoalg::nt {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
/// Inverse of a modulo m, if gcd(a, m) == 1.
std::optional<std::uint64_t> invmod(std::uint64_t a, std::uint64_t m);

/// Solutions of a*t == b (mod m) as the residue class t == r (mod m'),
/// returned as (r, m'); nothing when unsolvable.
std::optional<std::pair<std::uint64_t, std::uint64_t>>
solve_linear_congruence(std::uint64_t a, std::uint64_t b, std::uint64_t m);

/// Intersection of t == r1 (mod m1) and t == r2 (mod m2), moduli not
/// necessarily coprime.
std::optional<std::pair<std::uint64_t, std::uint64_t>>
crt(std::uint64_t r1, std::uint64_t m1, std::uint64_t r2, std::uint64_t m2);

bool is_prime(const mpz_class& n);
bool is_prime(std::uint64_t n);

/// n >= 1; trial division to 10^6, then Miller-Rabin and Pollard-Brent rho.
std::map<mpz_class, long> factorize(const mpz_class& n);

} // namespace evoalg::nt
