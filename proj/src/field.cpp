#include "evoalg/field.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "number_theory.hpp"

namespace evoalg {

namespace {

using Coeffs = Scalar::Coeffs;
using Poly = std::vector<std::uint64_t>; // lowest degree first

constexpr std::uint64_t kMaxPrime = std::uint64_t{1} << 31;
constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 62;
constexpr std::uint64_t kLogTableLimit = 4096;
constexpr std::uint64_t kMaxBabySteps = std::uint64_t{1} << 20;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, std::uint64_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = *nt::invmod(m.back(), p);
  while (a.size() > dm) {
    const std::uint64_t factor = nt::mulmod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = (a[shift + i] + p - nt::mulmod(factor, m[i], p)) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = (out[i + j] + nt::mulmod(a[i], b[j], p)) % p;
  return poly_mod(std::move(out), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p) {
  Poly result{1};
  base = poly_mod(std::move(base), m, p);
  while (e) {
    if (e & 1) result = poly_mulmod(result, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Rabin's test: f of degree k is irreducible over F_p iff t^(p^k) == t mod f
// and gcd(t^(p^(k/r)) - t, f) == 1 for every prime r dividing k.
bool is_irreducible(const Poly& f, std::uint64_t p) {
  const unsigned k = static_cast<unsigned>(f.size() - 1);
  auto frobenius_power = [&](unsigned j) {
    Poly x{0, 1};
    for (unsigned i = 0; i < j; ++i) x = poly_powmod(x, p, f, p);
    return x;
  };
  auto minus_t = [&](Poly x) {
    if (x.size() < 2) x.resize(2, 0);
    x[1] = (x[1] + p - 1) % p;
    trim(x);
    return x;
  };
  if (!minus_t(frobenius_power(k)).empty()) return false;
  for (unsigned r = 2; r <= k; ++r) {
    if (k % r != 0 || !nt::is_prime(std::uint64_t{r})) continue;
    Poly g = poly_gcd(f, minus_t(frobenius_power(k / r)), p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::uint64_t parse_u64(std::string_view s, std::string_view what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("malformed " + std::string(what) + ": '" + std::string(s) + "'");
  return v;
}

// Polynomial in `t` with nonnegative integer coefficients, e.g. `2t^2+t+1`.
Poly parse_poly(std::string_view text, std::uint64_t p) {
  if (text.empty()) throw ParseError("empty polynomial literal");
  Poly out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t plus = text.find('+', start);
    std::string_view term =
        text.substr(start, plus == std::string_view::npos ? std::string_view::npos : plus - start);
    if (term.empty()) throw ParseError("malformed polynomial '" + std::string(text) + "'");
    std::uint64_t coeff = 1;
    unsigned degree = 0;
    std::size_t tpos = term.find('t');
    if (tpos == std::string_view::npos) {
      coeff = parse_u64(term, "polynomial coefficient");
    } else {
      if (tpos > 0) coeff = parse_u64(term.substr(0, tpos), "polynomial coefficient");
      std::string_view rest = term.substr(tpos + 1);
      if (rest.empty()) {
        degree = 1;
      } else {
        if (rest[0] != '^') throw ParseError("malformed polynomial term '" + std::string(term) + "'");
        degree = static_cast<unsigned>(parse_u64(rest.substr(1), "polynomial exponent"));
      }
    }
    if (coeff >= p)
      throw ParseError("coefficient " + std::to_string(coeff) + " is not reduced modulo " +
                       std::to_string(p));
    if (degree > 64) throw ParseError("polynomial degree too large");
    if (out.size() <= degree) out.resize(degree + 1, 0);
    if (out[degree] != 0) throw ParseError("repeated degree in polynomial '" + std::string(text) + "'");
    out[degree] = coeff;
    if (plus == std::string_view::npos) break;
    start = plus + 1;
  }
  trim(out);
  return out;
}

std::string format_poly(const Poly& f) {
  std::string out;
  for (std::size_t i = f.size(); i-- > 0;) {
    if (f[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(f[i]);
    } else {
      if (f[i] != 1) out += std::to_string(f[i]);
      out += 't';
      if (i > 1) out += '^' + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

} // namespace

struct Field::Data {
  FieldKind kind = FieldKind::rationals;
  std::uint64_t p = 0;
  unsigned k = 1;
  Poly modulus;
  std::uint64_t q = 0;
  std::uint64_t unit_order = 0;
  std::vector<std::uint64_t> unit_primes;
  Coeffs generator{};
  // For small fields: index -> log and log -> index.
  std::vector<std::uint64_t> log_table;
  std::vector<std::uint64_t> exp_table;

  Coeffs add(const Coeffs& a, const Coeffs& b) const {
    Coeffs r{};
    for (unsigned i = 0; i < k; ++i) r[i] = (a[i] + b[i]) % p;
    return r;
  }
  Coeffs sub(const Coeffs& a, const Coeffs& b) const {
    Coeffs r{};
    for (unsigned i = 0; i < k; ++i) r[i] = (a[i] + p - b[i]) % p;
    return r;
  }
  Coeffs mul(const Coeffs& a, const Coeffs& b) const {
    if (k == 1) return Coeffs{a[0] * b[0] % p};
    std::array<std::uint64_t, 2 * Field::max_degree> prod{};
    for (unsigned i = 0; i < k; ++i) {
      if (a[i] == 0) continue;
      for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j] % p) % p;
    }
    // reduce by the monic modulus from the top
    for (unsigned d = 2 * k - 2; d >= k; --d) {
      const std::uint64_t c = prod[d];
      if (c == 0) continue;
      prod[d] = 0;
      for (unsigned i = 0; i < k; ++i)
        prod[d - k + i] = (prod[d - k + i] + p - c * modulus[i] % p) % p;
    }
    Coeffs r{};
    for (unsigned i = 0; i < k; ++i) r[i] = prod[i];
    return r;
  }
  Coeffs pow(Coeffs base, std::uint64_t e) const {
    Coeffs r{1};
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }
  bool is_zero(const Coeffs& a) const {
    return std::all_of(a.begin(), a.begin() + k, [](auto c) { return c == 0; });
  }
  std::uint64_t index(const Coeffs& a) const {
    std::uint64_t idx = 0;
    for (unsigned i = k; i-- > 0;) idx = idx * p + a[i];
    return idx;
  }
  Coeffs from_index(std::uint64_t idx) const {
    Coeffs r{};
    for (unsigned i = 0; i < k; ++i) {
      r[i] = idx % p;
      idx /= p;
    }
    return r;
  }

  // Order of the unit group element `a` divides unit_order; it is a
  // generator iff a^((q-1)/r) != 1 for every prime r | q-1.
  bool is_primitive(const Coeffs& a) const {
    if (is_zero(a)) return false;
    for (auto r : unit_primes)
      if (pow(a, unit_order / r) == Coeffs{1}) return false;
    return true;
  }

  void finish_finite() {
    q = 1;
    for (unsigned i = 0; i < k; ++i) q *= p;
    unit_order = q - 1;
    for (const auto& [prime, e] : nt::factorize(mpz_class(static_cast<unsigned long>(unit_order))))
      unit_primes.push_back(prime.get_ui());
    for (std::uint64_t idx = 1; idx < q; ++idx) {
      Coeffs c = from_index(idx);
      if (is_primitive(c)) {
        generator = c;
        break;
      }
    }
    if (q <= kLogTableLimit) {
      log_table.assign(q, 0);
      exp_table.assign(unit_order, 0);
      Coeffs x{1};
      for (std::uint64_t e = 0; e < unit_order; ++e) {
        exp_table[e] = index(x);
        log_table[index(x)] = e;
        x = mul(x, generator);
      }
    }
  }

  // Logarithm of h to the base gamma, where gamma has prime order r
  // (baby-step giant-step).
  std::uint64_t bsgs(const Coeffs& gamma, const Coeffs& h, std::uint64_t r) const {
    const Data& d = *this;
    std::uint64_t m = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(r))));
    if (m > kMaxBabySteps)
      throw DomainError("discrete logarithm infeasible: unit group has a prime factor " +
                        std::to_string(r));
    std::unordered_map<std::uint64_t, std::uint64_t> baby;
    baby.reserve(m * 2);
    Coeffs x{1};
    for (std::uint64_t j = 0; j < m; ++j) {
      baby.emplace(d.index(x), j);
      x = d.mul(x, gamma);
    }
    const Coeffs giant = d.pow(gamma, (r - (m % r)) % r); // gamma^(-m)
    Coeffs y = h;
    for (std::uint64_t i = 0; i <= m; ++i) {
      auto it = baby.find(d.index(y));
      if (it != baby.end()) return (i * m + it->second) % r;
      y = d.mul(y, giant);
    }
    throw DomainError("discrete logarithm not found (element outside the subgroup)");
  }
};

Field Field::rationals() {
  static const auto data = std::make_shared<const Data>();
  return Field(data);
}

Field Field::prime(std::uint64_t p) {
  if (p >= kMaxPrime) throw DomainError("prime modulus must be below 2^31");
  if (!nt::is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  auto data = std::make_shared<Data>();
  data->kind = FieldKind::prime;
  data->p = p;
  data->k = 1;
  data->modulus = {0, 1};
  data->finish_finite();
  return Field(std::move(data));
}

Field Field::extension(std::uint64_t p, unsigned degree, std::vector<std::uint64_t> modulus) {
  if (degree == 1) return prime(p);
  if (p >= kMaxPrime) throw DomainError("prime modulus must be below 2^31");
  if (!nt::is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (degree < 1 || degree > max_degree) throw DomainError("extension degree must be between 1 and 4");
  if (std::pow(static_cast<double>(p), degree) >= static_cast<double>(kMaxOrder))
    throw DomainError("field order must be below 2^62");
  if (modulus.size() != degree + 1 || modulus.back() != 1)
    throw DomainError("defining polynomial must be monic of degree " + std::to_string(degree));
  for (auto c : modulus)
    if (c >= p) throw DomainError("defining polynomial coefficients must be reduced modulo p");
  if (!is_irreducible(modulus, p))
    throw DomainError("defining polynomial " + format_poly(modulus) + " is reducible over F_" +
                      std::to_string(p));
  auto data = std::make_shared<Data>();
  data->kind = FieldKind::extension;
  data->p = p;
  data->k = degree;
  data->modulus = std::move(modulus);
  data->finish_finite();
  return Field(std::move(data));
}

Field Field::parse(std::string_view header) {
  std::istringstream in{std::string(header)};
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  if (tokens.size() == 1 && tokens[0] == "Q") return rationals();
  // construction failures (p composite, reducible modulus) are header errors here
  auto build = [](auto&& make) -> Field {
    try {
      return make();
    } catch (const DomainError& e) {
      throw ParseError(std::string("unsupported field: ") + e.what());
    }
  };
  if (tokens.size() == 2 && tokens[0] == "F") {
    const std::uint64_t p = parse_u64(tokens[1], "field characteristic");
    return build([&] { return prime(p); });
  }
  if (tokens.size() == 3 && tokens[0] == "F") {
    const std::string& pk = tokens[1];
    auto caret = pk.find('^');
    if (caret == std::string::npos) throw ParseError("extension field header needs p^k: '" + pk + "'");
    std::uint64_t p = parse_u64(std::string_view(pk).substr(0, caret), "field characteristic");
    std::uint64_t k = parse_u64(std::string_view(pk).substr(caret + 1), "extension degree");
    if (p < 2 || p >= kMaxPrime) throw ParseError("unsupported characteristic " + std::to_string(p));
    Poly f = parse_poly(tokens[2], p);
    if (k < 1 || k > max_degree) throw ParseError("unsupported extension degree " + std::to_string(k));
    return build([&] { return extension(p, static_cast<unsigned>(k), std::move(f)); });
  }
  throw ParseError("unrecognised field header '" + std::string(header) + "'");
}

FieldKind Field::kind() const { return data_->kind; }
std::uint64_t Field::characteristic() const { return data_->p; }
unsigned Field::degree() const { return data_->k; }

std::uint64_t Field::order() const {
  if (!is_finite()) throw DomainError("the rationals are infinite");
  return data_->q;
}
std::uint64_t Field::unit_order() const {
  if (!is_finite()) throw DomainError("the rationals are infinite");
  return data_->unit_order;
}
const std::vector<std::uint64_t>& Field::unit_order_primes() const {
  if (!is_finite()) throw DomainError("the rationals are infinite");
  return data_->unit_primes;
}
const std::vector<std::uint64_t>& Field::modulus() const { return data_->modulus; }

std::string Field::header() const {
  switch (kind()) {
  case FieldKind::rationals: return "Q";
  case FieldKind::prime: return "F " + std::to_string(data_->p);
  case FieldKind::extension:
    return "F " + std::to_string(data_->p) + "^" + std::to_string(data_->k) + " " +
           format_poly(data_->modulus);
  }
  return {};
}

Scalar Field::zero() const { return integer(0); }
Scalar Field::one() const { return integer(1); }

Scalar Field::integer(long long value) const {
  if (!is_finite()) return Scalar(*this, mpq_class(mpz_class(static_cast<long>(value))));
  const auto p = static_cast<long long>(data_->p);
  long long r = value % p;
  if (r < 0) r += p;
  return Scalar(*this, Coeffs{static_cast<std::uint64_t>(r)});
}

Scalar Field::rational(const mpq_class& value) const {
  if (is_finite()) throw DomainError("rational literal in a finite field");
  mpq_class v = value;
  v.canonicalize();
  return Scalar(*this, std::move(v));
}

Scalar Field::element(std::uint64_t index) const {
  if (!is_finite()) throw DomainError("element index requires a finite field");
  if (index >= data_->q) throw DomainError("element index out of range");
  return Scalar(*this, data_->from_index(index));
}

Scalar Field::generator() const {
  if (!is_finite()) throw DomainError("the rationals have no primitive element");
  return Scalar(*this, data_->generator);
}

Scalar Field::parse_scalar(std::string_view text) const {
  if (text.empty()) throw ParseError("empty scalar literal");
  switch (kind()) {
  case FieldKind::rationals: {
    std::string s(text);
    auto slash = s.find('/');
    mpz_class num, den = 1;
    auto parse_int = [&](const std::string& part) {
      mpz_class v;
      bool ok = !part.empty() && v.set_str(part, 10) == 0;
      // mpz accepts surrounding whitespace and a leading '+'; we do not
      ok = ok && std::all_of(part.begin() + (part[0] == '-' ? 1 : 0), part.end(),
                             [](unsigned char c) { return std::isdigit(c); }) &&
           part != "-";
      if (!ok) throw ParseError("malformed rational literal '" + s + "'");
      return v;
    };
    if (slash == std::string::npos) {
      num = parse_int(s);
    } else {
      num = parse_int(s.substr(0, slash));
      den = parse_int(s.substr(slash + 1));
      if (den == 0) throw ParseError("zero denominator in '" + s + "'");
    }
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(*this, std::move(q));
  }
  case FieldKind::prime: {
    const bool negative = text.size() > 1 && text[0] == '-';
    std::uint64_t r = parse_u64(negative ? text.substr(1) : text, "residue");
    if (r >= data_->p)
      throw ParseError("residue " + std::string(text) + " is not below " + std::to_string(data_->p));
    if (negative && r != 0) r = data_->p - r;
    return Scalar(*this, Coeffs{r});
  }
  case FieldKind::extension: {
    Poly f = parse_poly(text, data_->p);
    if (f.size() > data_->k)
      throw ParseError("element '" + std::string(text) + "' has degree >= " + std::to_string(data_->k));
    Coeffs c{};
    std::copy(f.begin(), f.end(), c.begin());
    return Scalar(*this, c);
  }
  }
  throw ParseError("unsupported field");
}

bool operator==(const Field& a, const Field& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->kind == b.data_->kind && a.data_->p == b.data_->p && a.data_->k == b.data_->k &&
         a.data_->modulus == b.data_->modulus;
}

// ---------------------------------------------------------------------------

Scalar::Scalar(Field field, mpq_class value) : field_(std::move(field)), value_(std::move(value)) {}
Scalar::Scalar(Field field, Coeffs value) : field_(std::move(field)), value_(value) {}

void Scalar::require_same_field(const Scalar& other) const {
  if (!(field_ == other.field_))
    throw DomainError("field mismatch: " + field_.header() + " vs " + other.field_.header());
}

bool Scalar::is_zero() const {
  if (auto q = std::get_if<mpq_class>(&value_)) return sgn(*q) == 0;
  return field_.data_->is_zero(std::get<Coeffs>(value_));
}

bool Scalar::is_one() const {
  if (auto q = std::get_if<mpq_class>(&value_)) return *q == 1;
  return std::get<Coeffs>(value_) == Coeffs{1};
}

Scalar Scalar::operator+(const Scalar& other) const {
  require_same_field(other);
  if (auto q = std::get_if<mpq_class>(&value_))
    return Scalar(field_, mpq_class(*q + std::get<mpq_class>(other.value_)));
  return Scalar(field_, field_.data_->add(std::get<Coeffs>(value_), std::get<Coeffs>(other.value_)));
}

Scalar Scalar::operator-(const Scalar& other) const {
  require_same_field(other);
  if (auto q = std::get_if<mpq_class>(&value_))
    return Scalar(field_, mpq_class(*q - std::get<mpq_class>(other.value_)));
  return Scalar(field_, field_.data_->sub(std::get<Coeffs>(value_), std::get<Coeffs>(other.value_)));
}

Scalar Scalar::operator*(const Scalar& other) const {
  require_same_field(other);
  if (auto q = std::get_if<mpq_class>(&value_))
    return Scalar(field_, mpq_class(*q * std::get<mpq_class>(other.value_)));
  return Scalar(field_, field_.data_->mul(std::get<Coeffs>(value_), std::get<Coeffs>(other.value_)));
}

Scalar Scalar::operator/(const Scalar& other) const {
  require_same_field(other);
  return *this * other.inv();
}

Scalar Scalar::operator-() const { return field_.zero() - *this; }

Scalar Scalar::inv() const {
  if (is_zero()) throw DomainError("division by zero");
  if (auto q = std::get_if<mpq_class>(&value_)) return Scalar(field_, mpq_class(1 / *q));
  const auto& d = *field_.data_;
  const Coeffs& c = std::get<Coeffs>(value_);
  if (!d.log_table.empty()) {
    std::uint64_t lg = d.log_table[d.index(c)];
    return Scalar(field_, d.from_index(d.exp_table[(d.unit_order - lg) % d.unit_order]));
  }
  return Scalar(field_, d.pow(c, d.unit_order - 1));
}

Scalar Scalar::pow(long long e) const {
  if (is_zero()) {
    if (e < 0) throw DomainError("zero raised to a negative power");
    return e == 0 ? field_.one() : *this;
  }
  if (auto q = std::get_if<mpq_class>(&value_)) {
    unsigned long ue = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), q->get_num_mpz_t(), ue);
    mpz_pow_ui(den.get_mpz_t(), q->get_den_mpz_t(), ue);
    mpq_class r = e < 0 ? mpq_class(den, num) : mpq_class(num, den);
    r.canonicalize();
    return Scalar(field_, std::move(r));
  }
  const auto& d = *field_.data_;
  const auto n = static_cast<long long>(d.unit_order);
  long long r = e % n;
  if (r < 0) r += n;
  return Scalar(field_, d.pow(std::get<Coeffs>(value_), static_cast<std::uint64_t>(r)));
}

const mpq_class& Scalar::rational() const {
  if (auto q = std::get_if<mpq_class>(&value_)) return *q;
  throw DomainError("not a rational scalar");
}

std::uint64_t Scalar::index() const {
  if (auto c = std::get_if<Coeffs>(&value_)) return field_.data_->index(*c);
  throw DomainError("element index requires a finite field");
}

std::string Scalar::to_string() const {
  if (auto q = std::get_if<mpq_class>(&value_)) return q->get_str();
  const auto& d = *field_.data_;
  const Coeffs& c = std::get<Coeffs>(value_);
  if (d.kind == FieldKind::prime) return std::to_string(c[0]);
  return format_poly(Poly(c.begin(), c.begin() + d.k));
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

bool operator<(const Scalar& a, const Scalar& b) {
  a.require_same_field(b);
  if (auto q = std::get_if<mpq_class>(&a.value_)) return *q < std::get<mpq_class>(b.value_);
  return a.index() < b.index();
}

// ---------------------------------------------------------------------------

mpq_class ExponentVector::value() const {
  mpz_class num = 1, den = 1, pw;
  for (const auto& [prime, e] : primes) {
    mpz_pow_ui(pw.get_mpz_t(), prime.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    (e > 0 ? num : den) *= pw;
  }
  mpq_class r(sign * num, den);
  r.canonicalize();
  return r;
}

ExponentVector ExponentVector::operator*(const ExponentVector& other) const {
  ExponentVector r = *this;
  r.sign *= other.sign;
  for (const auto& [prime, e] : other.primes) {
    long& slot = r.primes[prime];
    slot += e;
    if (slot == 0) r.primes.erase(prime);
  }
  return r;
}

ExponentVector exponent_vector(const Scalar& a) {
  if (a.field().is_finite()) throw DomainError("exponent vectors are defined over Q only");
  if (a.is_zero()) throw DomainError("exponent vector of zero");
  const mpq_class& q = a.rational();
  ExponentVector v;
  v.sign = sgn(q) < 0 ? -1 : 1;
  for (const auto& [prime, e] : nt::factorize(abs(q.get_num()))) v.primes[prime] += e;
  for (const auto& [prime, e] : nt::factorize(q.get_den())) v.primes[prime] -= e;
  return v;
}

std::uint64_t discrete_log(const Scalar& a) {
  const Field& f = a.field();
  if (!f.is_finite()) throw DomainError("discrete logarithm requires a finite field");
  if (a.is_zero()) throw DomainError("discrete logarithm of zero");
  const auto& d = *f.data_;
  const Coeffs& beta = std::get<Coeffs>(a.value_);
  if (!d.log_table.empty()) return d.log_table[d.index(beta)];

  // Pohlig-Hellman over the prime-power parts of q - 1.
  const std::uint64_t n = d.unit_order;
  std::uint64_t result = 0, modulus = 1;
  for (std::uint64_t r : d.unit_primes) {
    std::uint64_t re = 1;
    unsigned e = 0;
    while (n % (re * r) == 0) {
      re *= r;
      ++e;
    }
    const Coeffs gamma = d.pow(d.generator, n / r); // order r
    const Coeffs g_part = d.pow(d.generator, n / re);
    const Coeffs g_part_inv = d.pow(g_part, re - 1);
    const Coeffs beta_part = d.pow(beta, n / re);
    std::uint64_t x = 0, rk = 1;
    for (unsigned k = 0; k < e; ++k) {
      // strip the digits found so far, then project to the order-r subgroup
      Coeffs h = d.mul(beta_part, d.pow(g_part_inv, x));
      h = d.pow(h, re / (rk * r));
      x += d.bsgs(gamma, h, r) * rk;
      rk *= r;
    }
    auto combined = nt::crt(result, modulus, x, re);
    result = combined->first;
    modulus = combined->second;
  }
  return result;
}


std::optional<Scalar> nth_root(const Scalar& a, long long n) {
  if (n <= 0) throw DomainError("root index must be positive");
  if (a.is_zero()) throw DomainError("nth_root of zero");
  const Field& f = a.field();
  if (!f.is_finite()) {
    ExponentVector v = exponent_vector(a);
    if (v.sign < 0 && n % 2 == 0) return std::nullopt;
    ExponentVector root;
    root.sign = v.sign;
    for (const auto& [prime, e] : v.primes) {
      if (e % n != 0) return std::nullopt;
      root.primes[prime] = e / n;
    }
    return f.rational(root.value());
  }
  const std::uint64_t order = f.unit_order();
  const std::uint64_t nn = static_cast<std::uint64_t>(n) % order;
  const std::uint64_t g = nt::gcd(nn, order);
  if (!a.pow(static_cast<long long>(order / g)).is_one()) return std::nullopt;
  std::uint64_t lg = discrete_log(a);
  auto sol = nt::solve_linear_congruence(nn, lg, order);
  if (!sol) return std::nullopt;
  return f.generator().pow(static_cast<long long>(sol->first));
}

std::vector<Scalar> units(const Field& field) {
  if (!field.is_finite()) throw DomainError("the rationals have infinitely many units");
  if (field.order() > (std::uint64_t{1} << 24)) throw DomainError("field too large to enumerate");
  std::vector<Scalar> out;
  out.reserve(field.unit_order());
  for (std::uint64_t i = 1; i < field.order(); ++i) out.push_back(field.element(i));
  return out;
}

} // namespace evoalg
