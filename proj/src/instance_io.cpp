#include "bst/instance_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <utility>

#include "bst/error.hpp"

namespace bst {
namespace {

[[noreturn]] void fail(std::string_view source, std::size_t line, const std::string& what) {
  throw Error(ErrorCode::Parse, std::string(source) + ":" + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> fields(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  auto is_sep = [](char c) { return c == ' ' || c == '\t' || c == ',' || c == '\r'; };
  while (i < text.size()) {
    while (i < text.size() && is_sep(text[i])) ++i;
    const std::size_t start = i;
    while (i < text.size() && !is_sep(text[i])) ++i;
    if (i > start) out.push_back(text.substr(start, i - start));
  }
  return out;
}

double parse_double(std::string_view field, std::string_view source, std::size_t line) {
  const std::string s(field);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || s.empty()) fail(source, line, "bad coordinate '" + s + "'");
  if (!std::isfinite(v)) fail(source, line, "coordinate '" + s + "' is not finite");
  return v;
}

int parse_color(std::string_view field, std::string_view source, std::size_t line) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    fail(source, line, "bad color '" + std::string(field) + "'");
  }
  if (v < 0) fail(source, line, "negative color " + std::string(field));
  if (v > std::numeric_limits<int>::max()) fail(source, line, "color " + std::string(field) + " too large");
  return static_cast<int>(v);
}

// Uniform double in [0, 1) from the top 53 bits, identical on every platform.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

ColoredInstance parse_instance(std::istream& in, std::string_view source) {
  std::vector<Point> points;
  std::vector<int> colors;
  std::map<std::pair<double, double>, std::size_t> seen;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    const auto f = fields(text);
    if (f.empty() || f[0].front() == '#') continue;
    if (f.size() != 3) fail(source, line, "expected 'x y color', got " + std::to_string(f.size()) + " fields");
    const Point p{parse_double(f[0], source, line), parse_double(f[1], source, line)};
    const int c = parse_color(f[2], source, line);
    const auto [it, inserted] = seen.emplace(std::make_pair(p.x, p.y), line);
    if (!inserted) fail(source, line, "duplicate point (same coordinates as line " + std::to_string(it->second) + ")");
    points.push_back(p);
    colors.push_back(c);
  }
  if (in.bad()) throw Error(ErrorCode::Parse, std::string(source) + ": read error");
  return ColoredInstance(std::move(points), std::move(colors));
}

ColoredInstance read_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + path);
  return parse_instance(in, path);
}

void write_instance(std::ostream& out, const ColoredInstance& instance) {
  char buf[96];
  for (std::size_t i = 0; i < instance.size(); ++i) {
    const Point& p = instance.points()[i];
    std::snprintf(buf, sizeof buf, "%.17g %.17g %d\n", p.x, p.y, instance.colors()[i]);
    out << buf;
  }
}

std::string_view to_string(Distribution distribution) {
  return distribution == Distribution::Uniform ? "uniform" : "clustered";
}

std::optional<Distribution> parse_distribution(std::string_view name) {
  if (name == "uniform") return Distribution::Uniform;
  if (name == "clustered") return Distribution::Clustered;
  return std::nullopt;
}

ColoredInstance generate_instance(std::size_t n, std::size_t k, std::uint64_t seed, Distribution distribution) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "n must be at least 2");
  if (k < 2 || k > n) throw Error(ErrorCode::InvalidArgument, "k must satisfy 2 <= k <= n");
  std::mt19937_64 rng(seed);

  std::vector<Point> centers;
  if (distribution == Distribution::Clustered) {
    const auto count = std::max<std::size_t>(1, static_cast<std::size_t>(std::sqrt(static_cast<double>(n)) / 2));
    for (std::size_t c = 0; c < count; ++c) centers.push_back({0.1 + 0.8 * unit(rng), 0.1 + 0.8 * unit(rng)});
  }
  constexpr double kSigma = 0.04;
  constexpr double kTwoPi = 6.283185307179586;

  auto draw = [&]() -> Point {
    if (centers.empty()) return {unit(rng), unit(rng)};
    const Point& c = centers[static_cast<std::size_t>(rng() % centers.size())];
    const double r = std::sqrt(-2.0 * std::log1p(-unit(rng)));
    const double a = kTwoPi * unit(rng);
    const double x = std::clamp(c.x + kSigma * r * std::cos(a), 0.0, 1.0);
    const double y = std::clamp(c.y + kSigma * r * std::sin(a), 0.0, 1.0);
    return {x, y};
  };

  std::set<std::pair<double, double>> used;
  std::vector<Point> points;
  std::vector<int> colors;
  points.reserve(n);
  colors.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Point p = draw();
    while (!used.emplace(p.x, p.y).second) p = draw();
    points.push_back(p);
    colors.push_back(static_cast<int>(i % k));
  }
  return ColoredInstance(std::move(points), std::move(colors));
}

}  // namespace bst
