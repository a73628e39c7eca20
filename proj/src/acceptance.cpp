#include "evoalg/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "evoalg/classify.hpp"
#include "evoalg/tensor.hpp"

namespace evoalg::acceptance {

namespace {

using Clock = std::chrono::steady_clock;

// Pinned runtime limits, seconds.
constexpr double kDim2CensusLimit = 1.0;
constexpr double kDim3CensusLimit = 120.0;
constexpr double kSpotCheckLimit = 1.0;
constexpr double kTensorLimit = 5.0;

constexpr std::size_t kCensusPairs = 200;
constexpr int kRandomGraphPairs = 200;
constexpr int kQuotientConstructions = 50;
constexpr int kInflationBlocks = 20;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string seconds_text(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

EvolutionAlgebra tagged(const std::string& id, const std::vector<long long>& params, const Field& f) {
  TypeTag tag{&family(id), {}};
  for (long long p : params) tag.params.push_back(f.integer(p));
  return canonical_algebra(tag, f);
}

Scalar random_element(const Field& f, std::mt19937& rng) {
  return f.element(std::uniform_int_distribution<std::uint64_t>(0, f.order() - 1)(rng));
}

Scalar random_unit(const Field& f, std::mt19937& rng) {
  return f.element(std::uniform_int_distribution<std::uint64_t>(1, f.order() - 1)(rng));
}

EvolutionAlgebra random_algebra(const Field& f, std::size_t n, std::mt19937& rng) {
  std::vector<Scalar> entries;
  for (std::size_t i = 0; i < n * n; ++i) entries.push_back(random_element(f, rng));
  return EvolutionAlgebra(f, n, std::move(entries));
}

EvolutionAlgebra random_simple(const Field& f, std::size_t n, std::mt19937& rng) {
  for (;;) {
    EvolutionAlgebra a = random_algebra(f, n, rng);
    if (is_simple(a)) return a;
  }
}

// Vertices get levels mod d and edges only go from level l to l+1 (mod d),
// so periods that are multiples of 2 and 3 show up often.
DiGraph random_strong_graph(std::mt19937& rng, std::size_t want_layers = 0) {
  std::uniform_int_distribution<std::size_t> size(1, 6), layers(1, 3);
  std::uniform_real_distribution<double> coin(0, 1);
  for (;;) {
    const std::size_t n = size(rng);
    const std::size_t d = std::min(n, want_layers ? want_layers : layers(rng));
    std::vector<std::size_t> level(n);
    for (std::size_t v = 0; v < n; ++v) level[v] = v < d ? v : std::uniform_int_distribution<std::size_t>(0, d - 1)(rng);
    const double p = 0.25 + 0.5 * coin(rng);
    DiGraph g(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if ((level[i] + 1) % d == level[j] && coin(rng) < p) g.add_edge(i, j);
    if (g.edge_count() > 0 && is_strongly_connected(g)) return g;
  }
}

std::string census_summary(const CensusReport& r) {
  std::ostringstream s;
  s << r.field << ": " << r.scanned << " matrices, " << r.simple << " simple, " << r.classify_failures
    << " unclassified, " << r.ambiguous_matches << " ambiguous, " << r.family_counts.size() << " families hit, "
    << r.pairs_checked << " pairs / " << r.disagreements.size() << " disagreements, " << seconds_text(r.seconds);
  return s.str();
}

Outcome dim2_census() {
  const CensusReport r = census(Field::prime(3), 2, {kCensusPairs, 1, 0});
  bool only_dim2 = true;
  for (const auto& [id, count] : r.family_counts) only_dim2 = only_dim2 && family(id).dim == 2;
  const bool pass = r.scanned == 81 && r.ok() && only_dim2 && r.seconds < kDim2CensusLimit;
  return {pass, census_summary(r)};
}

Outcome dim3_census() {
  bool pass = true;
  double total = 0;
  std::string detail;
  for (std::uint64_t p : {2, 3}) {
    const CensusReport r = census(Field::prime(p), 3, {kCensusPairs, static_cast<unsigned>(p), 0});
    total += r.seconds;
    const std::size_t expected = p == 2 ? 512 : 19683;
    pass = pass && r.scanned == expected && r.ok() && r.pairs_checked >= kCensusPairs;
    if (!detail.empty()) detail += "; ";
    detail += census_summary(r);
    if (!r.failures.empty()) detail += "; first unclassified: " + r.failures.front();
  }
  pass = pass && total < kDim3CensusLimit;
  return {pass, detail};
}

Outcome rational_spot_checks() {
  const Field q = Field::rationals();
  struct Check {
    std::string id;
    std::vector<long long> a, b;
    bool expected;
  };
  const std::vector<Check> checks = {
      {"III^{0,3}", {2}, {3}, false},         {"III^{0,3}", {1}, {128}, true},
      {"II^{0,2}", {2}, {4}, true},           {"III^{0,4}", {1, 1}, {8, 128}, true},
      {"III^{0,4}", {1, 1}, {8, 1}, false},
  };
  const auto start = Clock::now();
  int wrong = 0;
  std::string detail;
  for (const auto& c : checks) {
    const IsoVerdict v = are_isomorphic(tagged(c.id, c.a, q), tagged(c.id, c.b, q));
    const bool ok = v.isomorphic == c.expected && v.exhaustive;
    wrong += !ok;
    if (!ok) detail += c.id + " mismatch; ";
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  detail += std::to_string(checks.size() - wrong) + "/" + std::to_string(checks.size()) + " verdicts as expected";
  return {wrong == 0 && secs < kSpotCheckLimit, detail};
}

Outcome f4_orbits() {
  const Field f4 = Field::parse("F 2^2 t^2+t+1");
  const auto orbits = orbit_partition(f4, InductiveLimitRule{2, 3}, 1);
  std::string shown;
  std::set<std::set<std::string>> got;
  for (const auto& orbit : orbits) {
    std::set<std::string> names;
    shown += "{";
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      names.insert(orbit[i].front().to_string());
      shown += (i ? ", " : "") + orbit[i].front().to_string();
    }
    shown += "} ";
    got.insert(names);
  }
  const std::set<std::set<std::string>> want = {{"1"}, {"t", "t+1"}};
  return {got == want, std::to_string(orbits.size()) + " orbits: " + shown};
}

Outcome period_tensor() {
  const auto start = Clock::now();
  const Field f5 = Field::prime(5);
  const EvolutionAlgebra e = unit_weight_algebra(period_two_graph(), f5);
  const EvolutionAlgebra f = unit_weight_algebra(period_three_graph(), f5);
  const std::size_t d1 = period(graph_of(e)), d2 = period(graph_of(f));
  const bool predicted = predict_tensor_simple(e, f);
  const EvolutionAlgebra t = tensor(e, f);
  const bool simple = is_simple(t);
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  std::ostringstream s;
  s << "d1=" << d1 << " d2=" << d2 << " predicted simple=" << predicted << " dim=" << t.dim()
    << " is_simple=" << simple << ", " << seconds_text(secs);
  const bool pass = is_simple(e) && is_simple(f) && d1 == 2 && d2 == 3 && predicted && t.dim() == 54 && simple &&
                    secs < kTensorLimit;
  return {pass, s.str()};
}

Outcome mcandrew_counts(std::mt19937& rng) {
  int exceptions = 0;
  std::size_t multi = 0;
  for (int k = 0; k < kRandomGraphPairs; ++k) {
    // every other pair shares a layer count
    const std::size_t shared = k % 2 ? 0 : 2 + k % 4 / 2;
    const DiGraph g = random_strong_graph(rng, shared), h = random_strong_graph(rng, shared);
    const std::size_t d = std::gcd(period(g), period(h));
    const std::size_t count = components(categorical_product(g, h)).size();
    exceptions += count != d;
    multi += d > 1;
  }
  return {exceptions == 0, std::to_string(kRandomGraphPairs) + " pairs, " + std::to_string(multi) +
                               " with gcd > 1, " + std::to_string(exceptions) + " exceptions"};
}

Outcome quotient_theorem(std::mt19937& rng) {
  const Field f5 = Field::prime(5);
  std::uniform_int_distribution<std::size_t> dim(2, 3);
  int exceptions = 0, without_ideal = 0;
  std::size_t quotients = 0;
  for (int k = 0; k < kQuotientConstructions; ++k) {
    const bool idempotent = k % 2 == 0;
    const std::size_t n1 = dim(rng), n2 = dim(rng);
    std::vector<Scalar> w1 = random_algebra(f5, n1, rng).entries();
    std::vector<Scalar> w2 = random_algebra(f5, n2, rng).entries();
    // b_1^2 = sigma b_1 (or 0) in A2, a_1^2 = omega a_1 in A1
    for (std::size_t r = 0; r < n1; ++r) w1[r * n1] = r == 0 ? random_unit(f5, rng) : f5.zero();
    for (std::size_t r = 0; r < n2; ++r) w2[r * n2] = (r == 0 && idempotent) ? random_unit(f5, rng) : f5.zero();
    const QuotientReport report =
        quotient_theorem_check(EvolutionAlgebra(f5, n1, w1), EvolutionAlgebra(f5, n2, w2));
    without_ideal += report.checks.empty();
    quotients += report.checks.size();
    exceptions += !report.holds();
  }
  return {exceptions == 0 && without_ideal == 0,
          std::to_string(kQuotientConstructions) + " algebras, " + std::to_string(quotients) + " quotients, " +
              std::to_string(exceptions) + " simple quotients, " + std::to_string(without_ideal) +
              " without a line ideal"};
}

Outcome inflation(std::mt19937& rng) {
  const Field f5 = Field::prime(5);
  int bad = 0;
  for (int k = 0; k < kInflationBlocks; ++k) {
    const std::size_t n = k % 2 == 0 ? 2 : 3;
    const EvolutionAlgebra m = random_simple(f5, n, rng);
    const Scalar lambda = random_unit(f5, rng);
    const EvolutionAlgebra templ = canonical_algebra(TypeTag{&family("III^{1,4}"), {lambda}}, f5);
    const EvolutionAlgebra big = inflate(templ, m);

    // (M 0 lambda*M; M 0 0; 0 M 0), written out block by block
    const std::size_t N = 3 * n;
    std::vector<Scalar> expected(N * N, f5.zero());
    auto put = [&](std::size_t br, std::size_t bc, const Scalar& c) {
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) expected[(br * n + r) * N + bc * n + s] = c * m.entry(r, s);
    };
    put(0, 0, f5.one());
    put(0, 2, lambda);
    put(1, 0, f5.one());
    put(2, 1, f5.one());
    bad += !(big == EvolutionAlgebra(f5, N, expected)) || !is_simple(big);
  }
  return {bad == 0, std::to_string(kInflationBlocks) + " blocks, " + std::to_string(bad) + " failures"};
}

Outcome group_structure() {
  using namespace matrices;
  const auto i3 = ExponentMatrix::identity(3);
  const auto closure = group_closure({m6(), m7()}, 64);
  const bool six = closure && closure->size() == 6;
  const bool relation = m6() * m7() == m7() * m7() * m6();
  const auto id_of = [](const ExponentMatrix& m) { return ExponentMatrix::identity(m.size()); };
  const bool m2sq = m2().power(2) == id_of(m2()), m3sq = m3().power(2) == id_of(m3()),
             m5sq = m5().power(2) == id_of(m5()), m4cube = m4().power(3) == id_of(m4());
  const bool nontrivial = !(m2() == id_of(m2())) && !(m4() == id_of(m4())) && !(m6() == i3);
  std::ostringstream s;
  s << "<M6,M7> order " << (closure ? std::to_string(closure->size()) : std::string("> 64"))
    << ", M6M7=M7^2M6 " << relation << ", M2^2=I " << m2sq << ", M3^2=I " << m3sq << ", M5^2=I " << m5sq
    << ", M4^3=I " << m4cube;
  return {six && relation && m2sq && m3sq && m5sq && m4cube && nontrivial, s.str()};
}

} // namespace

std::vector<CriterionResult> run_all(unsigned seed) {
  std::mt19937 rng(seed);
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"dim-2 census over F_3", dim2_census},
      {"dim-3 census over F_2 and F_3", dim3_census},
      {"rational spot checks", rational_spot_checks},
      {"F_4 orbits of G_3", f4_orbits},
      {"period-2 x period-3 tensor over F_5", period_tensor},
      {"McAndrew component counts", [&] { return mcandrew_counts(rng); }},
      {"quotients by line ideals", [&] { return quotient_theorem(rng); }},
      {"inflation of III^{1,4}", [&] { return inflation(rng); }},
      {"exponent-matrix group structure", group_structure},
  };
  std::vector<CriterionResult> out;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    CriterionResult r{static_cast<int>(i + 1), criteria[i].first, false, "", 0};
    const auto start = Clock::now();
    try {
      Outcome o = criteria[i].second();
      r.pass = o.pass;
      r.detail = std::move(o.detail);
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    out.push_back(std::move(r));
  }
  return out;
}

std::string format(const CriterionResult& r) {
  return std::string(r.pass ? "[PASS] " : "[FAIL] ") + std::to_string(r.id) + " " + r.title + ": " + r.detail +
         " (" + seconds_text(r.seconds) + ")";
}

int report(const std::vector<CriterionResult>& results, std::ostream& out) {
  int failed = 0;
  for (const auto& r : results) {
    out << format(r) << "\n";
    failed += !r.pass;
  }
  out << results.size() - failed << "/" << results.size() << " criteria passed\n";
  return failed;
}

} // namespace evoalg::acceptance
