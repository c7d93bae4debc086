#include "ins/interval.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "ins/errors.hpp"

namespace ins {

namespace {

std::string shortest(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

}  // namespace

UnitInterval UnitInterval::make(double lo, double hi) {
  if (std::isnan(lo) || std::isnan(hi))
    throw InvalidInterval("interval endpoint is NaN");
  if (!(lo >= 0.0 && hi <= 1.0))
    throw InvalidInterval("interval [" + shortest(lo) + "," + shortest(hi) +
                          "] is not inside [0,1]");
  if (!(lo <= hi))
    throw InvalidInterval("interval [" + shortest(lo) + "," + shortest(hi) +
                          "] has lo > hi");
  // -0.0 + 0.0 == +0.0
  return UnitInterval(lo + 0.0, hi + 0.0);
}

std::string_view endpoint_name(Endpoint e) {
  switch (e) {
    case Endpoint::kInfT: return "infT";
    case Endpoint::kSupT: return "supT";
    case Endpoint::kInfI: return "infI";
    case Endpoint::kSupI: return "supI";
    case Endpoint::kInfF: return "infF";
    case Endpoint::kSupF: return "supF";
  }
  return "?";
}

NeutrosophicValue NeutrosophicValue::make(double t_lo, double t_hi, double i_lo, double i_hi,
                                          double f_lo, double f_hi) {
  return {UnitInterval::make(t_lo, t_hi), UnitInterval::make(i_lo, i_hi),
          UnitInterval::make(f_lo, f_hi)};
}

NeutrosophicValue NeutrosophicValue::from_endpoints(const std::array<double, kEndpointCount>& e) {
  return make(e[0], e[1], e[2], e[3], e[4], e[5]);
}

std::array<double, kEndpointCount> NeutrosophicValue::endpoints() const {
  return {t.lo(), t.hi(), i.lo(), i.hi(), f.lo(), f.hi()};
}

NeutrosophicValue empty_value() { return NeutrosophicValue::make(0, 0, 1, 1, 1, 1); }
NeutrosophicValue universal_value() { return NeutrosophicValue::make(1, 1, 0, 0, 0, 0); }

std::string to_string(const NeutrosophicValue& v) {
  auto iv = [](const UnitInterval& u) {
    return "[" + shortest(u.lo()) + "," + shortest(u.hi()) + "]";
  };
  return "<" + iv(v.t) + "," + iv(v.i) + "," + iv(v.f) + ">";
}

namespace value {

NeutrosophicValue complement(const NeutrosophicValue& a) {
  return {a.f, UnitInterval::make(1.0 - a.i.hi(), 1.0 - a.i.lo()), a.t};
}

NeutrosophicValue unite(const NeutrosophicValue& a, const NeutrosophicValue& b) {
  auto up = [](double x, double y) { return x > y ? x : y; };
  auto down = [](double x, double y) { return x < y ? x : y; };
  return {UnitInterval::make(up(a.t.lo(), b.t.lo()), up(a.t.hi(), b.t.hi())),
          UnitInterval::make(down(a.i.lo(), b.i.lo()), down(a.i.hi(), b.i.hi())),
          UnitInterval::make(down(a.f.lo(), b.f.lo()), down(a.f.hi(), b.f.hi()))};
}

NeutrosophicValue intersect(const NeutrosophicValue& a, const NeutrosophicValue& b) {
  auto up = [](double x, double y) { return x > y ? x : y; };
  auto down = [](double x, double y) { return x < y ? x : y; };
  return {UnitInterval::make(down(a.t.lo(), b.t.lo()), down(a.t.hi(), b.t.hi())),
          UnitInterval::make(up(a.i.lo(), b.i.lo()), up(a.i.hi(), b.i.hi())),
          UnitInterval::make(up(a.f.lo(), b.f.lo()), up(a.f.hi(), b.f.hi()))};
}

bool is_contained(const NeutrosophicValue& a, const NeutrosophicValue& b) {
  return a.t.lo() <= b.t.lo() && a.t.hi() <= b.t.hi() &&
         a.i.lo() >= b.i.lo() && a.i.hi() >= b.i.hi() &&
         a.f.lo() >= b.f.lo() && a.f.hi() >= b.f.hi();
}

}  // namespace value

}  // namespace ins
