#include "eightconic/cli/svg.hpp"

#include <optional>
#include <sstream>
#include <vector>

#include "eightconic/errors.hpp"

namespace eightconic::cli {

std::string svg_number(const Rational& r) {
  std::string s = to_decimal(r, 6);
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s;
}

namespace {

const Rational kHalfWindow(Integer(5), Integer(2));

struct Pixel {
  Rational x, y;
};

Pixel to_pixel(const Point2& p) {
  const Rational half(kCanvasSize / 2);
  return {half + Rational(kPixelsPerUnit) * p.x, half - Rational(kPixelsPerUnit) * p.y};
}

std::string coord(const Point2& p) {
  const Pixel px = to_pixel(p);
  return svg_number(px.x) + "," + svg_number(px.y);
}

bool in_window(const Point2& p) {
  return -kHalfWindow <= p.x && p.x <= kHalfWindow && -kHalfWindow <= p.y && p.y <= kHalfWindow;
}

/// Liang–Barsky clip of segment pq to the world window, exact.
std::optional<std::pair<Point2, Point2>> clip(const Point2& p, const Point2& q) {
  Rational lo = 0, hi = 1;
  const Rational dx = q.x - p.x, dy = q.y - p.y;
  const std::array<std::pair<Rational, Rational>, 4> edges = {{
      {-dx, p.x + kHalfWindow},
      {dx, kHalfWindow - p.x},
      {-dy, p.y + kHalfWindow},
      {dy, kHalfWindow - p.y},
  }};
  for (const auto& [step, room] : edges) {
    if (step.is_zero()) {
      if (room.sign() < 0) return std::nullopt;
      continue;
    }
    const Rational t = room / step;
    if (step.sign() < 0) {
      if (t > lo) lo = t;
    } else if (t < hi) {
      hi = t;
    }
    if (lo > hi) return std::nullopt;
  }
  return std::make_pair(Point2{p.x + lo * dx, p.y + lo * dy}, Point2{p.x + hi * dx, p.y + hi * dy});
}

/// Directions along the upper half of the square [-1,1]², counterclockwise
/// from (1, 0); one per pencil line.
Vec3 pencil_direction(int i) {
  const Rational s(Integer(i), Integer(kPencilLines / 4));
  if (s < Rational(1)) return {1, s, 0};
  if (s < Rational(3)) return {Rational(2) - s, 1, 0};
  return {-1, Rational(4) - s, 0};
}

struct Sample {
  std::optional<Point2> point;
  int branch = 0;  // sign of the quadratic form on the direction
};

std::vector<std::vector<Point2>> trace_conic(const Conic& c, const HPoint& base) {
  std::vector<Sample> samples;
  for (int i = 0; i < kPencilLines; ++i) {
    const Vec3 d = pencil_direction(i);
    Sample s;
    s.branch = dot(d, multiply(c.matrix(), d)).sign();
    if (s.branch != 0) {
      const HPoint p = second_intersection(c, line_through(base, HPoint(d)), base);
      if (!p.is_at_infinity()) s.point = p.affine();
    }
    samples.push_back(s);
  }

  std::vector<std::vector<Point2>> runs;
  auto extend = [&runs](const Point2& a, const Point2& b) {
    const auto seg = clip(a, b);
    if (!seg) return;
    if (runs.empty() || !(runs.back().back() == seg->first)) runs.push_back({seg->first});
    runs.back().push_back(seg->second);
  };
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const Sample& a = samples[i];
    const Sample& b = samples[(i + 1) % samples.size()];
    if (a.point && b.point && a.branch == b.branch) extend(*a.point, *b.point);
  }
  return runs;
}

void emit_point(std::ostringstream& os, const std::string& name, const HPoint& p, const char* color,
                std::vector<std::string>& hidden) {
  if (p.is_at_infinity() || !in_window(p.affine())) {
    hidden.push_back(name);
    return;
  }
  const Pixel px = to_pixel(p.affine());
  os << "<circle cx=\"" << svg_number(px.x) << "\" cy=\"" << svg_number(px.y) << "\" r=\"4\" fill=\"" << color
     << "\"/>\n";
  os << "<text x=\"" << svg_number(px.x + Rational(6)) << "\" y=\"" << svg_number(px.y - Rational(6))
     << "\" fill=\"" << color << "\">" << name << "</text>\n";
}

}  // namespace

std::string render_figure(const CyclicConfig& cfg) {
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kCanvasSize << "\" height=\""
     << kCanvasSize << "\" viewBox=\"0 0 " << kCanvasSize << " " << kCanvasSize << "\">\n"
     << "<rect width=\"" << kCanvasSize << "\" height=\"" << kCanvasSize << "\" fill=\"white\"/>\n"
     << "<g font-family=\"sans-serif\" font-size=\"14\">\n";

  const EulerParameter lam = cfg.lambda();
  const ShinagawaPair pair = lambda_to_shinagawa(lam);
  os << "<text x=\"12\" y=\"24\" fill=\"black\">lambda = " << lam.str() << ", (u,v) = " << pair.str()
     << "</text>\n";
  os << "<circle cx=\"" << kCanvasSize / 2 << "\" cy=\"" << kCanvasSize / 2 << "\" r=\"" << kPixelsPerUnit
     << "\" fill=\"none\" stroke=\"#888888\" stroke-width=\"1.5\"/>\n";

  std::array<HPoint, 4> vertices = {cfg.vertex(0), cfg.vertex(1), cfg.vertex(2), cfg.vertex(3)};
  os << "<polygon points=\"";
  for (std::size_t i = 0; i < 4; ++i) os << (i ? " " : "") << coord(vertices[i].affine());
  os << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";

  std::optional<std::string> warning;
  std::optional<DerivedConfig> derived;
  try {
    derived = build_configuration(cfg);
    const VerificationReport report = eight_point_conic(*derived);
    if (report.conic.is_degenerate()) {
      warning = "degenerate conic (" + std::string(to_string(report.classification)) + "), points only";
    } else {
      os << "<text x=\"12\" y=\"44\" fill=\"black\">" << to_string(report.classification)
         << (report.ok ? ", all eight residuals 0" : ", nonzero residuals") << "</text>\n";
      os << "<g fill=\"none\" stroke=\"#1f5fbf\" stroke-width=\"2\">\n";
      for (const auto& run : trace_conic(report.conic, vertices[0])) {
        os << "<polyline points=\"";
        for (std::size_t i = 0; i < run.size(); ++i) os << (i ? " " : "") << coord(run[i]);
        os << "\"/>\n";
      }
      os << "</g>\n";
    }
  } catch (const GeometryError& e) {
    warning = std::string(to_string(e.code())) + ", points only";
  }

  std::vector<std::string> hidden;
  os << "<g>\n";
  emit_point(os, "O", HPoint::affine(0, 0), "black", hidden);
  for (std::size_t i = 0; i < 4; ++i) emit_point(os, kVertexNames[i], vertices[i], "black", hidden);
  if (derived) {
    const std::array<const char*, 4> suffix = {"_A", "_B", "_C", "_D"};
    for (std::size_t i = 0; i < 4; ++i) {
      emit_point(os, std::string("P") + suffix[i], derived->euler_points[i], "#c0392b", hidden);
    }
    for (std::size_t i = 0; i < 4; ++i) {
      if (derived->conjugates[i]) {
        emit_point(os, std::string("Q") + suffix[i], *derived->conjugates[i], "#1e8449", hidden);
      }
    }
  }
  os << "</g>\n";
  if (!hidden.empty()) {
    os << "<text x=\"12\" y=\"770\" fill=\"#555555\">outside window:";
    for (const auto& h : hidden) os << " " << h;
    os << "</text>\n";
  }
  if (warning) os << "<text x=\"12\" y=\"790\" fill=\"#b00000\">warning: " << *warning << "</text>\n";
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace eightconic::cli
