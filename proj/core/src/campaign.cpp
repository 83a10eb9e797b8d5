#include "eightconic/campaign.hpp"

#include "eightconic/errors.hpp"

namespace eightconic {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master ^ splitmix64(index));
}

Xorshift64Star::Xorshift64Star(std::uint64_t seed)
    : state_(seed == 0 ? 0x9E3779B97F4A7C15ULL : seed) {}

std::uint64_t Xorshift64Star::next() {
  state_ ^= state_ >> 12;
  state_ ^= state_ << 25;
  state_ ^= state_ >> 27;
  return state_ * 0x2545F4914F6CDD1DULL;
}

std::int64_t Xorshift64Star::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw GeometryError(ErrorCode::InvalidArgument, "empty uniform range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  const std::uint64_t rem = (0 - span) % span;  // 2^64 mod span
  std::uint64_t r = next();
  while (rem != 0 && r >= 0 - rem) r = next();
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + r % span);
}

Rational random_rational(Xorshift64Star& rng, std::int64_t num_bound, std::int64_t den_bound) {
  const std::int64_t num = rng.uniform(-num_bound, num_bound);
  const std::int64_t den = rng.uniform(1, den_bound);
  return Rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
}

namespace {

Integer floor_div(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.numerator().get_mpz_t(), r.denominator().get_mpz_t());
  return q;
}

Integer ceil_div(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.numerator().get_mpz_t(), r.denominator().get_mpz_t());
  return q;
}

EulerParameter random_lambda(Xorshift64Star& rng, const GeneratorOptions& o) {
  const std::int64_t b = o.lambda_bound;
  if (o.lambda_range) {
    const auto& [lo, hi] = *o.lambda_range;
    for (int attempt = 0; attempt < 1024; ++attempt) {
      const std::int64_t den = rng.uniform(1, b);
      const Integer lo_n = ceil_div(lo * Rational(den));
      const Integer hi_n = floor_div(hi * Rational(den));
      if (lo_n > hi_n || !lo_n.fits_slong_p() || !hi_n.fits_slong_p()) continue;
      const std::int64_t num = rng.uniform(lo_n.get_si(), hi_n.get_si());
      return EulerParameter(Rational(num), Rational(den));
    }
    throw GeometryError(ErrorCode::InvalidArgument, "lambda range admits no rational with that bound");
  }
  for (;;) {
    const std::int64_t num = rng.uniform(-b, b);
    const std::int64_t den = rng.uniform(0, b);
    if (num != 0 || den != 0) return EulerParameter(Rational(num), Rational(den));
  }
}

}  // namespace

std::array<CirclePoint, 4> rational_chord_quadrilateral(Xorshift64Star& rng, std::int64_t bound) {
  std::array<Rational, 4> t;
  for (std::size_t i = 0; i < 4; ++i) {
    bool fresh = false;
    while (!fresh) {
      const Rational s = random_rational(rng, bound, bound);
      if (s * s == Rational(1)) continue;
      t[i] = Rational(2) * s / (Rational(1) - s * s);
      fresh = true;
      for (std::size_t j = 0; j < i; ++j) fresh = fresh && t[j] != t[i];
    }
  }
  return {CirclePoint::from_parameter(t[0]), CirclePoint::from_parameter(t[1]),
          CirclePoint::from_parameter(t[2]), CirclePoint::from_parameter(t[3])};
}

CyclicConfig random_configuration(Xorshift64Star& rng, const GeneratorOptions& options) {
  std::array<Rational, 4> t;
  for (std::size_t i = 0; i < 4; ++i) {
    bool fresh = false;
    while (!fresh) {
      t[i] = random_rational(rng, options.t_bound, options.t_bound);
      fresh = true;
      for (std::size_t j = 0; j < i; ++j) fresh = fresh && t[j] != t[i];
    }
  }
  EulerSpec parameter = options.fixed_parameter ? *options.fixed_parameter : EulerSpec(random_lambda(rng, options));
  return CyclicConfig{{CirclePoint::from_parameter(t[0]), CirclePoint::from_parameter(t[1]),
                       CirclePoint::from_parameter(t[2]), CirclePoint::from_parameter(t[3])},
                      parameter};
}

std::string_view to_string(TrialOutcome o) {
  switch (o) {
    case TrialOutcome::Passed: return "passed";
    case TrialOutcome::Failed: return "failed";
    case TrialOutcome::Skipped: return "skipped";
  }
  return "unknown";
}

std::vector<TrialResult> run_campaign(std::size_t trials, std::uint64_t seed,
                                      const GeneratorOptions& options, unsigned jobs) {
  const std::function<TrialResult(std::size_t)> trial = [&](std::size_t i) {
    TrialResult r;
    r.index = i;
    r.seed = trial_seed(seed, i);
    Xorshift64Star rng(r.seed);
    r.config = random_configuration(rng, options);
    try {
      r.report = eight_point_conic(*r.config);
      r.outcome = r.report->ok ? TrialOutcome::Passed : TrialOutcome::Failed;
    } catch (const GeometryError& e) {
      switch (e.code()) {
        case ErrorCode::IsogonalUndefined:
        case ErrorCode::EquilateralSubtriangle:
        case ErrorCode::DegenerateQuadrilateral:
          r.outcome = TrialOutcome::Skipped;
          break;
        default:
          r.outcome = TrialOutcome::Failed;
      }
      r.reason = std::string(to_string(e.code()));
    }
    return r;
  };
  return run_indexed<TrialResult>(trials, jobs, trial);
}

}  // namespace eightconic
