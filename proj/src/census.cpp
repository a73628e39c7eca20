#include <algorithm>
#include <chrono>
#include <cmath>
#include <mutex>
#include <random>
#include <thread>

#include "evoalg/classify.hpp"

namespace evoalg {

namespace {

constexpr double kMaxMatrices = 1e7;

struct ShardResult {
  std::size_t simple = 0;
  std::size_t classify_failures = 0;
  std::size_t ambiguous = 0;
  std::vector<std::string> failures;
  // (matrix index, family position) for each classified simple algebra
  std::vector<std::pair<std::uint64_t, std::size_t>> members;
};

EvolutionAlgebra algebra_at(const Field& field, std::size_t dim, const std::vector<Scalar>& elements,
                            std::uint64_t index) {
  const std::size_t cells = dim * dim;
  const std::uint64_t q = elements.size();
  std::vector<Scalar> entries;
  entries.reserve(cells);
  for (std::size_t c = 0; c < cells; ++c) {
    entries.push_back(elements[index % q]);
    index /= q;
  }
  return EvolutionAlgebra(field, dim, std::move(entries));
}

std::string render(const EvolutionAlgebra& a) {
  std::string s = "[";
  for (std::size_t r = 0; r < a.dim(); ++r) {
    s += r ? "; " : "";
    for (std::size_t c = 0; c < a.dim(); ++c) s += (c ? " " : "") + a.entry(r, c).to_string();
  }
  return s + "]";
}

} // namespace

CensusReport census(const Field& field, std::size_t dim, const CensusOptions& options) {
  if (!field.is_finite()) throw DomainError("census needs a finite field");
  if (dim != 2 && dim != 3) throw DomainError("census covers dimensions 2 and 3");
  const double total_d = std::pow(static_cast<double>(field.order()), static_cast<double>(dim * dim));
  if (total_d > kMaxMatrices) throw DomainError("census size q^(n^2) exceeds 10^7");
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t total = static_cast<std::uint64_t>(std::llround(total_d));

  std::vector<Scalar> elements;
  for (std::uint64_t i = 0; i < field.order(); ++i) elements.push_back(field.element(i));
  const auto& fams = families();

  unsigned workers = options.workers ? options.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(1, total / 1024)));
  std::vector<ShardResult> shards(workers);
  auto run_shard = [&](unsigned w) {
    ShardResult& out = shards[w];
    const std::uint64_t lo = total * w / workers, hi = total * (w + 1) / workers;
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      const EvolutionAlgebra a = algebra_at(field, dim, elements, idx);
      if (!is_simple(a)) continue;
      ++out.simple;
      const DiGraph g = graph_of(a);
      if (matching_family_count(g) > 1) ++out.ambiguous;
      try {
        const Classification c = classify_detailed(a);
        if (!(change_basis(a, c.change) == canonical_algebra(c.tag, field)))
          throw Error("canonical basis change does not reproduce the canonical algebra");
        out.members.emplace_back(idx, static_cast<std::size_t>(c.tag.family - fams.data()));
      } catch (const std::exception& e) {
        ++out.classify_failures;
        if (out.failures.size() < 20) out.failures.push_back(render(a) + ": " + e.what());
      }
    }
  };
  if (workers == 1) {
    run_shard(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run_shard, w);
    for (auto& t : threads) t.join();
  }

  CensusReport report;
  report.field = field.header();
  report.dim = dim;
  report.scanned = total;
  for (const auto& f : fams)
    if (f.dim == dim) report.family_counts[f.id] = 0;
  std::vector<std::vector<std::uint64_t>> by_family(fams.size());
  for (const auto& s : shards) {
    report.simple += s.simple;
    report.classify_failures += s.classify_failures;
    report.ambiguous_matches += s.ambiguous;
    for (const auto& f : s.failures)
      if (report.failures.size() < 20) report.failures.push_back(f);
    for (auto [idx, fam] : s.members) {
      ++report.family_counts[fams[fam].id];
      by_family[fam].push_back(idx);
    }
  }

  // Same-family pairs: the first algebra uniformly from all classified ones,
  // the second uniformly from its family.
  std::vector<std::size_t> family_of_member;
  for (std::size_t f = 0; f < by_family.size(); ++f)
    for (std::size_t i = 0; i < by_family[f].size(); ++i) family_of_member.push_back(f);
  std::vector<std::uint64_t> flat;
  for (const auto& members : by_family) flat.insert(flat.end(), members.begin(), members.end());
  if (!flat.empty()) {
    std::mt19937 rng(options.seed);
    std::uniform_int_distribution<std::size_t> pick(0, flat.size() - 1);
    for (std::size_t p = 0; p < options.pairs; ++p) {
      const std::size_t i = pick(rng);
      const auto& members = by_family[family_of_member[i]];
      std::uniform_int_distribution<std::size_t> pick2(0, members.size() - 1);
      const EvolutionAlgebra a = algebra_at(field, dim, elements, flat[i]);
      const EvolutionAlgebra b = algebra_at(field, dim, elements, members[pick2(rng)]);
      const bool predicate = are_isomorphic(a, b).isomorphic;
      const bool oracle = brute_force_isomorphic(a, b).has_value();
      ++report.pairs_checked;
      report.isomorphic_pairs += oracle;
      if (predicate != oracle) report.disagreements.push_back({render(a), render(b), predicate, oracle});
    }
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

} // namespace evoalg
