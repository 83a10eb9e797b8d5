#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "eightconic/eightpoint.hpp"

namespace eightconic {

/// splitmix64 finalizer: z += 0x9E3779B97F4A7C15;
/// z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9; z = (z ^ (z >> 27)) * 0x94D049BB133111EB;
/// return z ^ (z >> 31).
std::uint64_t splitmix64(std::uint64_t z);

/// Per-trial seed: splitmix64(master ^ splitmix64(index)).
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index);

/// xorshift64* generator:
///   x ^= x >> 12; x ^= x << 25; x ^= x >> 27; return x * 0x2545F4914F6CDD1D.
/// A zero state is replaced by 0x9E3779B97F4A7C15.
class Xorshift64Star {
 public:
  explicit Xorshift64Star(std::uint64_t seed);

  std::uint64_t next();

  /// Uniform integer in [lo, hi] by rejection: draws r = next() until
  /// r < 2^64 − (2^64 mod span), then returns lo + r mod span.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::uint64_t state_;
};

struct GeneratorOptions {
  std::int64_t t_bound = 50;       // |num| <= t_bound, 1 <= den <= t_bound
  std::int64_t lambda_bound = 20;  // |num|, den <= lambda_bound
  std::optional<EulerSpec> fixed_parameter;
  /// Random λ restricted to [lo, hi] (den drawn first, then num).
  std::optional<std::pair<Rational, Rational>> lambda_range;
};

/// Draws four distinct circle parameters num/den and a parameter λ
/// (num ∈ [−B, B], den ∈ [0, B], not both zero) unless one is fixed.
/// Draw order: t_A, t_B, t_C, t_D (num then den each, redrawing duplicates),
/// then λ num, λ den.
CyclicConfig random_configuration(Xorshift64Star& rng, const GeneratorOptions& options);

Rational random_rational(Xorshift64Star& rng, std::int64_t num_bound, std::int64_t den_bound);

/// Four distinct circle points with parameters t = 2s/(1 − s²) for random
/// rational s. All half-angles are then doubled angles, so the line through
/// O toward the isogonal conjugate of D meets Ω in rational points.
std::array<CirclePoint, 4> rational_chord_quadrilateral(Xorshift64Star& rng, std::int64_t bound);

/// Runs fn(i) for i in [0, count) on up to `jobs` threads. Results are
/// stored by index, so the output does not depend on completion order.
template <typename T>
std::vector<T> run_indexed(std::size_t count, unsigned jobs,
                           const std::function<T(std::size_t)>& fn);

enum class TrialOutcome { Passed, Failed, Skipped };

std::string_view to_string(TrialOutcome o);

struct TrialResult {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  TrialOutcome outcome = TrialOutcome::Skipped;
  std::string reason;  // error code for skipped trials
  std::optional<CyclicConfig> config;
  std::optional<VerificationReport> report;
};

/// Seeded eight-point campaign; trial i uses trial_seed(seed, i).
std::vector<TrialResult> run_campaign(std::size_t trials, std::uint64_t seed,
                                      const GeneratorOptions& options, unsigned jobs = 1);

}  // namespace eightconic

#include "eightconic/campaign_impl.hpp"
