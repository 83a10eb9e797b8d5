#include "eightconic/cli/report.hpp"

#include <iomanip>
#include <sstream>

#include "eightconic/errors.hpp"
#include "eightconic/lemmas.hpp"

namespace eightconic::cli {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Ok: return "ok";
    case Verdict::Skipped: return "skipped";
    case Verdict::Failed: return "fail";
  }
  return "unknown";
}

Verdict combine(Verdict a, Verdict b) { return static_cast<int>(a) > static_cast<int>(b) ? a : b; }

namespace {

constexpr std::array<const char*, 4> kSuffix = {"_A", "_B", "_C", "_D"};

bool skippable(ErrorCode code) {
  return code == ErrorCode::IsogonalUndefined || code == ErrorCode::EquilateralSubtriangle;
}

Json derived_points_json(const DerivedConfig& d) {
  Json pts = Json::object();
  pts["O"] = point_json(d.circumcenter);
  for (std::size_t i = 0; i < 4; ++i) pts[kVertexNames[i]] = point_json(d.vertices[i]);
  for (std::size_t i = 0; i < 4; ++i) pts[std::string("H") + kSuffix[i]] = point_json(d.orthocenters[i]);
  for (std::size_t i = 0; i < 4; ++i) pts[std::string("P") + kSuffix[i]] = point_json(d.euler_points[i]);
  for (std::size_t i = 0; i < 4; ++i) {
    pts[std::string("Q") + kSuffix[i]] = d.conjugates[i] ? point_json(*d.conjugates[i]) : Json("undefined");
  }
  return pts;
}

Json eight_point_json(const VerificationReport& r) {
  Json fit = Json::array();
  for (std::size_t i : r.fit_points) fit.push_back(kPointNames[i]);
  Json residuals = Json::object();
  for (std::size_t i = 0; i < 8; ++i) residuals[kPointNames[i]] = r.residuals[i].str();
  return Json{
      {"conic",
       {{"cartesian", matrix_json(r.conic.display().matrix())},
        {"barycentric_abc", matrix_json(conic_change_frame(r.conic, r.derived.abc().frame()).display().matrix())}}},
      {"classification", to_string(r.classification)},
      {"fit_points", fit},
      {"residuals", residuals},
      {"conjugates_collapsed", r.conjugates_collapsed},
      {"conic_equals_circumcircle", conics_equal(r.conic, unit_circle())},
  };
}

Json error_json(const GeometryError& e, Verdict v) {
  return Json{{"status", to_string(v)}, {"reason", std::string(to_string(e.code()))}};
}

std::pair<Json, Verdict> lemma_th4_json(const DerivedConfig& d) {
  try {
    const Th4Report r = check_lemma_th4(d.vertices[0], d.vertices[1], d.vertices[2], d.vertices[3]);
    const bool ok = r.ok && r.fourth_point == d.vertices[3];
    const Verdict v = ok ? Verdict::Ok : Verdict::Failed;
    return {Json{{"status", to_string(v)},
                 {"classification", to_string(r.classification)},
                 {"orthocenter", point_json(r.orthocenter)},
                 {"fourth_point", point_json(r.fourth_point)},
                 {"center", point_json(r.center)},
                 {"midpoint", point_json(r.midpoint)},
                 {"degenerate", r.degenerate}},
            v};
  } catch (const GeometryError& e) {
    return {error_json(e, Verdict::Skipped), Verdict::Skipped};
  }
}

std::pair<Json, Verdict> lemma1_json(const DerivedConfig& d) {
  try {
    const Lemma1Report r = check_lemma1(d.vertices);
    const Verdict v = r.ok() ? Verdict::Ok : r.status == Lemma1Status::Failed ? Verdict::Failed : Verdict::Skipped;
    Json j{{"status", to_string(v)}, {"outcome", std::string(to_string(r.status))},
           {"midpoint_bc", point_json(r.midpoint_bc)}};
    if (r.h1_class) j["h1_classification"] = to_string(*r.h1_class);
    if (r.h1_center) j["h1_center"] = point_json(*r.h1_center);
    if (r.h2_class) j["h2_classification"] = to_string(*r.h2_class);
    if (r.h2_center) j["h2_center"] = point_json(*r.h2_center);
    return {j, v};
  } catch (const GeometryError& e) {
    return {error_json(e, Verdict::Skipped), Verdict::Skipped};
  }
}

std::pair<Json, Verdict> harmonic_json(const DerivedConfig& d) {
  try {
    const HarmonicReport r = check_harmonic(d.vertices);
    if (!r.rational_chord) {
      return {Json{{"status", "skipped"}, {"reason", "irrational_chord"}}, Verdict::Skipped};
    }
    const Verdict v = r.ok ? Verdict::Ok : Verdict::Failed;
    Json j{{"status", to_string(v)}};
    if (r.infinity_d) j["infinity_d"] = point_json(*r.infinity_d);
    if (r.k) j["k"] = point_json(*r.k);
    if (r.l) j["l"] = point_json(*r.l);
    if (r.value) j["cross_ratio"] = extended_json(*r.value);
    return {j, v};
  } catch (const GeometryError& e) {
    return {error_json(e, Verdict::Skipped), Verdict::Skipped};
  }
}

/// Shared by the single-config and campaign paths. `full` adds all derived
/// points and conic matrices.
VerifyResult verify_one(const ParsedConfig& cfg, bool full) {
  VerifyResult out;
  Json& rep = out.report;
  rep["status"] = "ok";
  rep["config"] = config_to_json(cfg);
  const EulerParameter lam = cfg.config.lambda();
  rep["lambda"] = lam.str();
  const ShinagawaPair pair = lambda_to_shinagawa(lam);
  rep["shinagawa"] = Json::array({pair.u.str(), pair.v.str()});

  std::optional<DerivedConfig> built;
  try {
    built = build_configuration(cfg.config);
  } catch (const GeometryError& e) {
    if (!skippable(e.code())) throw;
    rep["status"] = "skipped";
    rep["reason"] = std::string(to_string(e.code()));
    out.verdict = Verdict::Skipped;
    return out;
  }
  const DerivedConfig& derived = *built;
  if (full) rep["points"] = derived_points_json(derived);

  Json checks = Json::object();
  try {
    const VerificationReport r = eight_point_conic(derived);
    Json ep = eight_point_json(r);
    if (!full) ep.erase("conic");
    const Verdict v = r.ok ? Verdict::Ok : Verdict::Failed;
    rep.update(ep);
    checks["eight_point"] = Json{{"status", to_string(v)}};
    out.verdict = combine(out.verdict, v);
  } catch (const GeometryError& e) {
    const Verdict v = skippable(e.code()) ? Verdict::Skipped : Verdict::Failed;
    checks["eight_point"] = error_json(e, v);
    if (v == Verdict::Skipped) rep["reason"] = std::string(to_string(e.code()));
    out.verdict = combine(out.verdict, v);
  }

  for (const auto& name : cfg.checks) {
    std::pair<Json, Verdict> res;
    if (name == "lemma_th4") res = lemma_th4_json(derived);
    else if (name == "lemma1") res = lemma1_json(derived);
    else if (name == "harmonic") res = harmonic_json(derived);
    else continue;
    checks[name] = res.first;
    // Lemma checks speak about the quadrilateral, not the parameter, so a
    // skipped lemma leaves the overall status alone.
    if (res.second == Verdict::Failed) out.verdict = Verdict::Failed;
  }
  rep["checks"] = checks;
  rep["status"] = to_string(out.verdict);
  return out;
}

std::string hex64(std::uint64_t v) {
  std::ostringstream os;
  os << "0x" << std::hex << std::setw(16) << std::setfill('0') << v;
  return os.str();
}

}  // namespace

VerifyResult verify_config(const ParsedConfig& cfg) { return verify_one(cfg, true); }

VerifyResult verify_campaign(const CampaignSpec& spec) {
  const std::function<VerifyResult(std::size_t)> trial = [&](std::size_t i) {
    Xorshift64Star rng(trial_seed(spec.seed, i));
    ParsedConfig cfg{random_configuration(rng, spec.options), spec.checks};
    VerifyResult r;
    try {
      r = verify_one(cfg, false);
    } catch (const GeometryError& e) {
      r.report = Json{{"status", "fail"}, {"reason", std::string(to_string(e.code()))},
                      {"config", config_to_json(cfg)}};
      r.verdict = Verdict::Failed;
    }
    Json head{{"index", i}, {"seed", hex64(trial_seed(spec.seed, i))}};
    head.update(r.report);
    r.report = std::move(head);
    return r;
  };
  const auto results = run_indexed<VerifyResult>(spec.trials, spec.jobs, trial);

  std::size_t passed = 0, failed = 0, skipped = 0;
  Verdict verdict = Verdict::Ok;
  Json trials = Json::array();
  for (const auto& r : results) {
    switch (r.verdict) {
      case Verdict::Ok: ++passed; break;
      case Verdict::Skipped: ++skipped; break;
      case Verdict::Failed: ++failed; break;
    }
    if (r.verdict == Verdict::Failed) verdict = Verdict::Failed;
    trials.push_back(r.report);
  }

  Json generator{{"prng", "xorshift64*"},
                 {"trial_seed", "splitmix64(seed ^ splitmix64(index))"},
                 {"t_bound", spec.options.t_bound},
                 {"lambda_bound", spec.options.lambda_bound}};
  if (spec.options.fixed_parameter) generator["parameter"] = parameter_json(*spec.options.fixed_parameter);
  if (spec.options.lambda_range) {
    generator["lambda_range"] =
        Json::array({spec.options.lambda_range->first.str(), spec.options.lambda_range->second.str()});
  }

  VerifyResult out;
  out.verdict = verdict;
  out.report = Json{{"status", verdict == Verdict::Failed ? "fail" : "ok"},
                    {"mode", "random"},
                    {"trials", spec.trials},
                    {"seed", spec.seed},
                    {"generator", generator},
                    {"checks", spec.checks},
                    {"passed", passed},
                    {"failed", failed},
                    {"skipped", skipped},
                    {"results", trials}};
  return out;
}

Json conic_equation(const ParsedConfig& cfg) {
  const ShinagawaPair pair = std::holds_alternative<ShinagawaPair>(cfg.config.parameter)
                                 ? std::get<ShinagawaPair>(cfg.config.parameter)
                                 : lambda_to_shinagawa(std::get<EulerParameter>(cfg.config.parameter));
  const DerivedConfig d = build_configuration(CyclicConfig{cfg.config.points, pair, cfg.config.strict_order});
  const TriangleFrame& abc = d.abc();
  const ConicCoefficients c = phi_uv(abc, to_barycentric(abc, d.vertices[3]), pair).coefficients();
  const std::vector<Rational> k = primitive(std::vector<Rational>(c.begin(), c.end()));
  return Json{{"config", config_to_json(cfg)},
              {"shinagawa", Json::array({pair.u.str(), pair.v.str()})},
              {"frame", "barycentric ABC"},
              {"coefficients",
               {{"x2", k[0].str()},
                {"y2", k[1].str()},
                {"z2", k[2].str()},
                {"yz", k[3].str()},
                {"zx", k[4].str()},
                {"xy", k[5].str()}}},
              {"circumcircle", {{"a2", abc.a2().str()}, {"b2", abc.b2().str()}, {"c2", abc.c2().str()}}}};
}

CatalogRun run_catalog(const std::vector<CatalogEntry>& entries, std::size_t trials,
                       std::uint64_t seed, unsigned jobs) {
  struct Row {
    std::string reference;
    std::size_t passed = 0, failed = 0, skipped = 0;
  };
  const std::function<Row(std::size_t)> check = [&](std::size_t e) {
    Row row;
    const CatalogReport ref = catalog_check(reference_quadrilateral(), entries[e]);
    row.reference = ref.status;
    if (!ref.ok) ++row.failed;
    for (std::size_t i = 0; i < trials; ++i) {
      Xorshift64Star rng(trial_seed(seed, i));
      const CyclicConfig cfg = random_configuration(rng, GeneratorOptions{});
      const CatalogReport r = catalog_check(cfg.points, entries[e]);
      if (r.ok) ++row.passed;
      else if (r.eight_point || r.status == "NoGeneralPositionFive") ++row.failed;
      else ++row.skipped;
    }
    return row;
  };
  const auto rows = run_indexed<Row>(entries.size(), jobs, check);

  CatalogRun out;
  std::ostringstream os;
  os << std::left << std::setw(10) << "center" << std::setw(14) << "(u,v)" << std::setw(10) << "lambda"
     << std::setw(12) << "reference";
  if (trials > 0) os << "random (pass/fail/skip)";
  os << "  result\n";
  for (std::size_t e = 0; e < entries.size(); ++e) {
    const auto& entry = entries[e];
    const Row& row = rows[e];
    const bool ok = row.failed == 0;
    if (!ok) out.verdict = Verdict::Failed;
    os << std::setw(10) << entry.name << std::setw(14) << entry.pair.normalized().str() << std::setw(10)
       << shinagawa_to_lambda(entry.pair).str() << std::setw(12) << row.reference;
    if (trials > 0) {
      std::ostringstream counts;
      counts << row.passed << "/" << row.failed << "/" << row.skipped;
      os << std::setw(23) << counts.str();
    }
    os << "  " << (ok ? "PASS" : "FAIL") << "\n";
  }
  out.table = os.str();
  return out;
}

}  // namespace eightconic::cli
