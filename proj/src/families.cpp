#include "ins/families.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "ins/errors.hpp"
#include "ins/random.hpp"

namespace ins {

namespace {

double distance(std::span<const double> x, const Point& center) {
  double sum = 0.0;
  for (std::size_t d = 0; d < x.size(); ++d) {
    const double delta = x[d] - center[d];
    sum += delta * delta;
  }
  return std::sqrt(sum);
}

double squared_distance(std::span<const double> x, const Point& center) {
  double sum = 0.0;
  for (std::size_t d = 0; d < x.size(); ++d) {
    const double delta = x[d] - center[d];
    sum += delta * delta;
  }
  return sum;
}

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

void check_shape(const Shape& s) {
  auto in01 = [](double v) { return v >= 0.0 && v <= 1.0; };
  if (!in01(s.truth_floor) || !in01(s.indeterminacy_floor) || !in01(s.falsity_floor) ||
      !(s.falsity_power > 0.0))
    throw UnknownFamily("shape floors must lie in [0,1] and the power must be positive");
}

std::string describe(std::string_view name, std::initializer_list<double> params) {
  std::ostringstream os;
  os << name << '(';
  bool first = true;
  for (double p : params) {
    if (!first) os << ',';
    os << p;
    first = false;
  }
  os << ')';
  return os.str();
}

template <class Profile>
FunctionalINS profile_set(std::size_t dimension, Profile profile, const Shape& shape,
                          std::string description) {
  check_shape(shape);
  return FunctionalINS(
      dimension,
      [profile, shape](std::span<const double> x) { return shaped_value(profile(x), shape); },
      std::move(description));
}

double tri(std::span<const double> x, const Point& center, double width) {
  return std::max(0.0, 1.0 - distance(x, center) / width);
}

}  // namespace

NeutrosophicValue shaped_value(double m, const Shape& shape) {
  const double rest = 1.0 - m;
  const double falsity = std::pow(rest, shape.falsity_power);
  return {UnitInterval::make(shape.truth_floor * m, m),
          UnitInterval::make(shape.indeterminacy_floor * rest, rest),
          UnitInterval::make(shape.falsity_floor * falsity, falsity)};
}

FunctionalINS triangular_set(Point center, double width, const Shape& shape) {
  if (!(width > 0.0)) throw UnknownFamily("triangular width must be positive");
  const std::size_t n = center.size();
  const std::string desc = describe("triangular", {center.empty() ? 0.0 : center[0], width});
  return profile_set(
      n, [center = std::move(center), width](std::span<const double> x) { return tri(x, center, width); },
      shape, desc);
}

FunctionalINS trapezoid_set(Point center, double width, double plateau, const Shape& shape) {
  if (!(width > 0.0) || !(plateau >= 0.0) || !(plateau < width))
    throw UnknownFamily("trapezoid needs 0 <= plateau < width");
  const std::size_t n = center.size();
  const std::string desc =
      describe("trapezoid", {center.empty() ? 0.0 : center[0], width, plateau});
  return profile_set(
      n,
      [center = std::move(center), width, plateau](std::span<const double> x) {
        return clamp01((width - distance(x, center)) / (width - plateau));
      },
      shape, desc);
}

FunctionalINS gaussian_set(Point center, double sigma, const Shape& shape) {
  if (!(sigma > 0.0)) throw UnknownFamily("gaussian sigma must be positive");
  const std::size_t n = center.size();
  const std::string desc = describe("gaussian", {center.empty() ? 0.0 : center[0], sigma});
  return profile_set(
      n,
      [center = std::move(center), sigma](std::span<const double> x) {
        return std::exp(-squared_distance(x, center) / (sigma * sigma));
      },
      shape, desc);
}

FunctionalINS bimodal_set(std::size_t dimension, double separation) {
  if (!(separation >= 0.0)) throw UnknownFamily("bimodal separation must be non-negative");
  Point left(dimension, 0.0), right(dimension, 0.0);
  left[0] = -separation / 2.0;
  right[0] = separation / 2.0;
  return FunctionalINS(
      dimension,
      [left, right](std::span<const double> x) {
        const double m = std::min(1.0, tri(x, left, 1.0) + tri(x, right, 1.0));
        return NeutrosophicValue{UnitInterval::point(m), UnitInterval(), UnitInterval()};
      },
      describe("bimodal", {separation}));
}

FunctionalINS constant_set(std::size_t dimension, const NeutrosophicValue& v) {
  return FunctionalINS(
      dimension, [v](std::span<const double>) { return v; }, "constant " + to_string(v));
}

FamilySpec parse_family_spec(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  const std::size_t open = text.find('(');
  if (open == std::string_view::npos || text.back() != ')')
    throw UnknownFamily("family spec '" + std::string(text) + "' is not NAME(PARAMS)");
  FamilySpec spec;
  spec.name = std::string(trim(text.substr(0, open)));
  if (spec.name.empty()) throw UnknownFamily("family spec '" + std::string(text) + "' has no name");
  std::string_view args = trim(text.substr(open + 1, text.size() - open - 2));
  while (!args.empty()) {
    const std::size_t comma = args.find(',');
    std::string_view part = trim(args.substr(0, comma));
    double v = 0.0;
    const char* first = part.data();
    if (!part.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, part.data() + part.size(), v);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size() || !std::isfinite(v))
      throw UnknownFamily("bad family parameter '" + std::string(part) + "'");
    spec.params.push_back(v);
    if (comma == std::string_view::npos) break;
    args.remove_prefix(comma + 1);
    if (trim(args).empty()) throw UnknownFamily("trailing comma in family parameters");
  }
  return spec;
}

std::vector<std::string> family_names() {
  return {"triangular", "trapezoid", "gaussian", "bimodal", "constant"};
}

FunctionalINS make_family(const FamilySpec& spec, std::size_t dimension) {
  if (dimension == 0) throw InvalidDomain("family needs dimension >= 1");
  auto arity = [&](std::size_t n) {
    if (spec.params.size() != n)
      throw UnknownFamily(spec.name + " takes " + std::to_string(n) + " parameters, got " +
                          std::to_string(spec.params.size()));
  };
  const auto& p = spec.params;
  if (spec.name == "triangular") {
    arity(2);
    return triangular_set(Point(dimension, p[0]), p[1]);
  }
  if (spec.name == "trapezoid") {
    arity(3);
    return trapezoid_set(Point(dimension, p[0]), p[1], p[2]);
  }
  if (spec.name == "gaussian") {
    arity(2);
    return gaussian_set(Point(dimension, p[0]), p[1]);
  }
  if (spec.name == "bimodal") {
    arity(1);
    return bimodal_set(dimension, p[0]);
  }
  if (spec.name == "constant") {
    arity(3);
    for (double v : p)
      if (!(v >= 0.0 && v <= 1.0)) throw UnknownFamily("constant levels must lie in [0,1]");
    return constant_set(dimension, NeutrosophicValue{UnitInterval::point(p[0]),
                                                     UnitInterval::point(p[1]),
                                                     UnitInterval::point(p[2])});
  }
  throw UnknownFamily("unknown family '" + spec.name + "'");
}

FunctionalINS random_convex_family(Rng& rng, const Box& domain) {
  Point center(domain.dimension());
  double extent = 0.0;
  for (std::size_t d = 0; d < center.size(); ++d) {
    center[d] = rng.uniform(domain.lo(d), domain.hi(d));
    extent = std::max(extent, domain.hi(d) - domain.lo(d));
  }
  if (extent == 0.0) extent = 1.0;
  const Shape shape{rng.uniform(0.0, 1.0), rng.uniform(0.0, 1.0), rng.uniform(0.0, 1.0),
                    rng.uniform(0.5, 2.0)};
  const double width = rng.uniform(0.2, 1.0) * extent;
  if (rng.coin()) return triangular_set(std::move(center), width, shape);
  return trapezoid_set(std::move(center), width, rng.uniform(0.0, 0.9) * width, shape);
}

FunctionalINS random_strongly_convex_family(Rng& rng, const Box& domain) {
  Point center(domain.dimension());
  double extent = 0.0;
  for (std::size_t d = 0; d < center.size(); ++d) {
    const double mid = 0.5 * (domain.lo(d) + domain.hi(d));
    const double half = 0.5 * (domain.hi(d) - domain.lo(d));
    center[d] = rng.uniform(mid - 0.5 * half, mid + 0.5 * half);
    extent = std::max(extent, domain.hi(d) - domain.lo(d));
  }
  if (extent == 0.0) extent = 1.0;
  const Shape shape{rng.uniform(0.5, 0.95), rng.uniform(0.2, 0.8), rng.uniform(0.2, 0.8),
                    rng.uniform(1.0, 1.5)};
  const double sigma = rng.uniform(0.4, 0.75) * extent;
  return gaussian_set(std::move(center), sigma, shape);
}

}  // namespace ins
