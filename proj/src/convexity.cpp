#include "ins/convexity.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "ins/errors.hpp"
#include "ins/random.hpp"

namespace ins {

namespace {

bool is_truth(Endpoint e) { return e == Endpoint::kInfT || e == Endpoint::kSupT; }

double parse_bound(std::string_view text) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last)
    throw InvalidDomain("malformed box bound '" + std::string(text) + "'");
  return v;
}

Point draw_point(Rng& rng, const Box& box) {
  Point p(box.dimension());
  for (std::size_t d = 0; d < p.size(); ++d) p[d] = rng.uniform(box.lo(d), box.hi(d));
  return p;
}

void validate(const FunctionalINS& set, const Box& domain, const CheckOptions& options) {
  if (domain.dimension() != set.dimension())
    throw InvalidDomain("box has " + std::to_string(domain.dimension()) +
                        " dimensions but the set lives in R^" + std::to_string(set.dimension()));
  if (options.trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (options.lambda_grid < 2) throw std::invalid_argument("lambda grid needs at least 2 points");
  if (!(options.tol >= 0.0)) throw std::invalid_argument("tolerance must be non-negative");
}

ConvexityReport run_check(const FunctionalINS& set, const Box& domain, const CheckOptions& options,
                          bool strict) {
  validate(set, domain, options);
  if (strict && domain.degenerate())
    throw InvalidDomain("strong convexity needs a box with two distinct points");

  const std::vector<double> lambdas = lambda_values(options.lambda_grid, strict);
  Rng rng(options.seed);
  ConvexityReport report;
  for (std::size_t trial = 0; trial < options.trials; ++trial) {
    Point x1 = draw_point(rng, domain);
    Point x2 = draw_point(rng, domain);
    while (strict && x1 == x2) x2 = draw_point(rng, domain);

    const auto at1 = set(x1).endpoints();
    const auto at2 = set(x2).endpoints();
    for (double lambda : lambdas) {
      ++report.samples_checked;
      const auto mid = set(segment_point(x1, x2, lambda)).endpoints();
      for (Endpoint e : kAllEndpoints) {
        const auto k = static_cast<std::size_t>(e);
        const double rhs = is_truth(e) ? std::min(at1[k], at2[k]) : std::max(at1[k], at2[k]);
        if (breaks_inequality(e, mid[k], rhs, options.tol, strict)) {
          report.verdict = Verdict::kViolated;
          report.witness = Witness{x1, x2, lambda, e, mid[k], rhs};
          return report;
        }
      }
    }
  }
  return report;
}

}  // namespace

Box Box::make(std::vector<std::pair<double, double>> bounds) {
  if (bounds.empty()) throw InvalidDomain("box needs at least one dimension");
  for (const auto& [lo, hi] : bounds) {
    if (!std::isfinite(lo) || !std::isfinite(hi))
      throw InvalidDomain("box bounds must be finite");
    if (lo > hi) throw InvalidDomain("box bound has lo > hi");
  }
  return Box(std::move(bounds));
}

Box Box::parse(std::string_view text) {
  std::vector<std::pair<double, double>> bounds;
  while (true) {
    const std::size_t comma = text.find(',');
    const std::string_view part = text.substr(0, comma);
    const std::size_t colon = part.find(':');
    if (colon == std::string_view::npos)
      throw InvalidDomain("box range '" + std::string(part) + "' is not LO:HI");
    bounds.emplace_back(parse_bound(part.substr(0, colon)), parse_bound(part.substr(colon + 1)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return make(std::move(bounds));
}

bool Box::degenerate() const {
  return std::all_of(bounds_.begin(), bounds_.end(),
                     [](const auto& b) { return b.first == b.second; });
}

FunctionalINS::FunctionalINS(std::size_t dimension, Membership membership, std::string description)
    : dimension_(dimension), membership_(std::move(membership)), description_(std::move(description)) {
  if (dimension_ == 0) throw DimensionMismatch("a functional set needs dimension >= 1");
}

NeutrosophicValue FunctionalINS::operator()(std::span<const double> point) const {
  if (point.size() != dimension_)
    throw DimensionMismatch("point has " + std::to_string(point.size()) + " coordinates, set is in R^" +
                            std::to_string(dimension_));
  return membership_(point);
}

FunctionalINS intersect_functional(const FunctionalINS& a, const FunctionalINS& b) {
  if (a.dimension() != b.dimension())
    throw DimensionMismatch("cannot intersect sets in R^" + std::to_string(a.dimension()) +
                            " and R^" + std::to_string(b.dimension()));
  std::string description = a.description().empty() || b.description().empty()
                                ? std::string()
                                : a.description() + " & " + b.description();
  return FunctionalINS(
      a.dimension(),
      [a, b](std::span<const double> p) { return value::intersect(a(p), b(p)); },
      std::move(description));
}

std::string_view verdict_name(Verdict v) {
  return v == Verdict::kViolated ? "violated" : "no-violation-found";
}

Point segment_point(std::span<const double> x1, std::span<const double> x2, double lambda) {
  Point p(x1.size());
  for (std::size_t d = 0; d < p.size(); ++d) p[d] = lambda * x1[d] + (1.0 - lambda) * x2[d];
  return p;
}

bool breaks_inequality(Endpoint e, double lhs, double rhs, double tol, bool strict) {
  if (is_truth(e)) return strict ? !(lhs > rhs + tol) : lhs < rhs - tol;
  return strict ? !(lhs < rhs - tol) : lhs > rhs + tol;
}

std::vector<double> lambda_values(std::size_t lambda_grid, bool strict) {
  std::vector<double> out;
  out.reserve(lambda_grid);
  if (strict) {
    for (std::size_t k = 1; k <= lambda_grid; ++k)
      out.push_back(static_cast<double>(k) / static_cast<double>(lambda_grid + 1));
  } else {
    for (std::size_t k = 0; k < lambda_grid; ++k)
      out.push_back(static_cast<double>(k) / static_cast<double>(lambda_grid - 1));
  }
  return out;
}

ConvexityReport check_convex(const FunctionalINS& set, const Box& domain,
                             const CheckOptions& options) {
  return run_check(set, domain, options, false);
}

ConvexityReport check_strongly_convex(const FunctionalINS& set, const Box& domain,
                                      const CheckOptions& options) {
  return run_check(set, domain, options, true);
}

}  // namespace ins
