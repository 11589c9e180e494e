#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "ctxalg/context_function.hpp"
#include "ctxalg/diag_operator.hpp"
#include "ctxalg/error.hpp"
#include "ctxalg/rng.hpp"
#include "ctxalg/semantics.hpp"
#include "ctxalg/universe.hpp"

namespace ctxalg {

/// A probability distribution over the members of a universe.
class Distribution {
public:
  Distribution(UniversePtr universe, std::vector<double> probs)
      : universe_(std::move(universe)), probs_(std::move(probs)) {
    if (!universe_) throw InputError("distribution requires a universe");
    if (probs_.size() != universe_->size())
      throw InputError("distribution length does not match universe size");
    double sum = 0.0;
    for (double p : probs_) {
      if (p < 0.0) throw InputError("distribution has a negative entry");
      sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9)
      throw InputError("distribution mass sums to " + std::to_string(sum) + ", expected 1");
  }

  static Distribution uniform(const UniversePtr& universe) {
    if (universe->size() == 0) throw InputError("cannot build a distribution over an empty universe");
    return Distribution(universe,
                        std::vector<double>(universe->size(), 1.0 / double(universe->size())));
  }

  const UniversePtr& universe() const { return universe_; }
  const std::vector<double>& probs() const { return probs_; }
  double prob(std::size_t i) const { return probs_[i]; }

private:
  UniversePtr universe_;
  std::vector<double> probs_;
};

namespace detail {

inline void require_distribution_universe(const DiagOperator& op, const Distribution& dist) {
  if (op.universe()->hash() != dist.universe()->hash())
    throw InputError("operator and distribution live over different universes");
}

}  // namespace detail

/// The linear functional φ: every context except (ε, ε) is ignored; the
/// (ε, ε) operator contributes Σ_l P(l) · |diag_l|.
inline double phi(const ContextFunction<OperatorSpace>& f, const Distribution& dist) {
  if (f.space().universe->hash() != dist.universe()->hash())
    throw InputError("context function and distribution live over different universes");
  const auto& values = f.support();
  auto it = values.find(Context{});
  if (it == values.end()) return 0.0;
  const DiagOperator& op = it->second;
  double total = 0.0;
  for (std::size_t l = 0; l < op.dim(); ++l) total += dist.prob(l) * std::abs(op[l]);
  return total;
}

enum class DegreeMode { Exact, MonteCarlo };

inline std::string to_string(DegreeMode mode) {
  return mode == DegreeMode::Exact ? "exact" : "mc";
}

/// The graded entailment score φ(x̃ ∧ ỹ) / φ(x̃) with its ingredients.
struct DegreeResult {
  double degree = 0.0;
  double numerator = 0.0;
  double denominator = 0.0;
  DegreeMode mode = DegreeMode::Exact;
  std::optional<std::uint64_t> samples;
  std::optional<std::uint64_t> seed;
  std::optional<double> stderr_estimate;  // jackknife, MC only
  std::vector<std::string> warnings;
};

/// Exact degree to which the word sequence x entails the word sequence y.
inline DegreeResult degree_exact(const std::vector<std::string>& x,
                                 const std::vector<std::string>& y, const Lexicon& lexicon,
                                 const LanguagePtr<OperatorSpace>& language,
                                 const Distribution& dist) {
  DegreeResult result;
  result.mode = DegreeMode::Exact;
  if (!lexicon.nonnegative())
    result.warnings.push_back(
        "lexicon has negative weights; the degree may fall outside [0, 1]");

  const auto x_tilde = sentence_vector(x, lexicon, language);
  const auto y_tilde = sentence_vector(y, lexicon, language);
  const auto meet = cf_meet(x_tilde.context_function(), y_tilde.context_function());

  result.denominator = phi(x_tilde.context_function(), dist);
  if (result.denominator <= 0.0)
    throw DomainError("x has no logical content under L (phi(x) = 0)");
  result.numerator = phi(meet, dist);
  result.degree = result.numerator / result.denominator;
  return result;
}

namespace detail {

/// Sample counts per universe member, drawn by inverting the cumulative
/// distribution at counter-indexed uniforms. Counts are integers, so any
/// partition of the counter range merges to the identical tally.
inline std::vector<std::uint64_t> sample_dimension_counts(const Distribution& dist,
                                                          std::uint64_t samples,
                                                          std::uint64_t seed,
                                                          unsigned threads) {
  const std::size_t n = dist.probs().size();
  std::vector<double> cdf(n);
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += dist.prob(i);
    cdf[i] = acc;
  }
  cdf[n - 1] = 1.0;  // guard against accumulated rounding

  auto count_range = [&](std::uint64_t begin, std::uint64_t end,
                         std::vector<std::uint64_t>& counts) {
    for (std::uint64_t i = begin; i < end; ++i) {
      const double u = counter_uniform01(seed, i);
      const std::size_t idx =
          std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin();
      ++counts[std::min(idx, n - 1)];
    }
  };

  if (threads <= 1) {
    std::vector<std::uint64_t> counts(n, 0);
    count_range(0, samples, counts);
    return counts;
  }

  const unsigned worker_count = std::min<std::uint64_t>(threads, samples);
  std::vector<std::vector<std::uint64_t>> partial(worker_count,
                                                  std::vector<std::uint64_t>(n, 0));
  std::vector<std::thread> workers;
  const std::uint64_t chunk = (samples + worker_count - 1) / worker_count;
  for (unsigned t = 0; t < worker_count; ++t) {
    const std::uint64_t begin = t * chunk;
    const std::uint64_t end = std::min<std::uint64_t>(samples, begin + chunk);
    workers.emplace_back([&, begin, end, t] { count_range(begin, end, partial[t]); });
  }
  for (auto& w : workers) w.join();
  std::vector<std::uint64_t> counts(n, 0);
  for (const auto& p : partial)
    for (std::size_t i = 0; i < n; ++i) counts[i] += p[i];
  return counts;
}

}  // namespace detail

/// Monte-Carlo estimate of the degree: dimensions l are sampled from the
/// distribution and both |diag_l| values are evaluated exactly per draw.
/// Deterministic for a fixed seed, regardless of the thread count.
inline DegreeResult degree_mc(const std::vector<std::string>& x,
                              const std::vector<std::string>& y, const Lexicon& lexicon,
                              const LanguagePtr<OperatorSpace>& language,
                              const Distribution& dist, std::uint64_t samples,
                              std::uint64_t seed, unsigned threads = 1) {
  if (samples < 1) throw InputError("sample count must be at least 1");
  if (!lexicon.nonnegative())
    throw InputError("Monte-Carlo estimation requires a nonnegative lexicon");

  const auto x_tilde = sentence_vector(x, lexicon, language);
  const auto y_tilde = sentence_vector(y, lexicon, language);
  const auto meet = cf_meet(x_tilde.context_function(), y_tilde.context_function());
  const DiagOperator x_op = x_tilde.context_function().at(Context{});
  const DiagOperator m_op = meet.at(Context{});
  detail::require_distribution_universe(x_op, dist);

  const std::vector<std::uint64_t> counts =
      detail::sample_dimension_counts(dist, samples, seed, threads);

  const std::size_t n = counts.size();
  double sum_x = 0.0, sum_m = 0.0;
  for (std::size_t l = 0; l < n; ++l) {
    if (!counts[l]) continue;
    sum_x += double(counts[l]) * std::abs(x_op[l]);
    sum_m += double(counts[l]) * std::abs(m_op[l]);
  }
  if (sum_x <= 0.0)
    throw DomainError("estimation failed: every sampled dimension had zero denominator");

  DegreeResult result;
  result.mode = DegreeMode::MonteCarlo;
  result.samples = samples;
  result.seed = seed;
  result.degree = sum_m / sum_x;
  const double count = double(samples);
  result.numerator = sum_m / count;
  result.denominator = sum_x / count;

  // Jackknife over samples; leave-one-out estimates group by dimension.
  if (samples >= 2) {
    double mean = 0.0;
    std::vector<double> loo(n, 0.0);
    bool degenerate = false;
    for (std::size_t l = 0; l < n; ++l) {
      if (!counts[l]) continue;
      const double dx = sum_x - std::abs(x_op[l]);
      if (dx <= 0.0) {
        degenerate = true;
        break;
      }
      loo[l] = (sum_m - std::abs(m_op[l])) / dx;
      mean += double(counts[l]) * loo[l];
    }
    if (!degenerate) {
      mean /= count;
      double ss = 0.0;
      for (std::size_t l = 0; l < n; ++l) {
        if (!counts[l]) continue;
        const double d = loo[l] - mean;
        ss += double(counts[l]) * d * d;
      }
      result.stderr_estimate = std::sqrt((count - 1.0) / count * ss);
    }
  }
  return result;
}

}  // namespace ctxalg
