#include "ins/dsl/set_file.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "ins/dsl/source_error.hpp"
#include "ins/errors.hpp"

namespace ins::dsl {

namespace {

bool space(char c) { return c == ' ' || c == '\t' || c == '\r'; }
bool label_char(char c) {
  return !space(c) && c != '\n' && c != ':' && c != '[' && c != ']' && c != '#';
}

/// Cursor over one line of a set file.
class LineReader {
 public:
  LineReader(std::string_view line, std::size_t line_no) : line_(line), line_no_(line_no) {}

  void skip_space() {
    while (at_ < line_.size() && space(line_[at_])) ++at_;
  }
  bool done() {
    skip_space();
    return at_ >= line_.size();
  }
  SourcePos pos() const { return {line_no_, at_ + 1}; }
  char peek() const { return at_ < line_.size() ? line_[at_] : '\0'; }

  std::string_view word() {
    skip_space();
    const std::size_t start = at_;
    while (at_ < line_.size() && label_char(line_[at_])) ++at_;
    return line_.substr(start, at_ - start);
  }

  void expect(char c, std::string_view what) {
    skip_space();
    if (peek() != c) fail(ErrorKind::kParseError, "expected " + std::string(what));
    ++at_;
  }

  /// Plain decimal: optional '-', digits, optional '.' digits.
  double number() {
    skip_space();
    const SourcePos start = pos();
    const std::size_t begin = at_;
    if (peek() == '-') ++at_;
    const std::size_t int_digits = digits();
    if (int_digits == 0)
      throw SourceError(ErrorKind::kLexError, start, "expected a decimal number");
    if (peek() == '.') {
      ++at_;
      if (digits() == 0)
        throw SourceError(ErrorKind::kLexError, start, "expected digits after '.'");
    }
    if (at_ < line_.size() && (std::isalpha(static_cast<unsigned char>(line_[at_])) || line_[at_] == '.'))
      throw SourceError(ErrorKind::kLexError, start, "malformed number");
    double v = 0.0;
    std::from_chars(line_.data() + begin, line_.data() + at_, v);
    return v;
  }

  /// "[lo,hi]" validated as a unit interval; errors point at the '['.
  UnitInterval interval() {
    skip_space();
    const SourcePos start = pos();
    expect('[', "'[' starting an interval");
    const double lo = number();
    expect(',', "',' between interval endpoints");
    const double hi = number();
    expect(']', "']' closing the interval");
    try {
      return UnitInterval::make(lo, hi);
    } catch (const InvalidInterval& e) {
      throw SourceError(ErrorKind::kParseError, start, e.what());
    }
  }

  [[noreturn]] void fail(ErrorKind kind, std::string message) const {
    throw SourceError(kind, pos(), std::move(message));
  }

 private:
  std::size_t digits() {
    std::size_t n = 0;
    while (at_ < line_.size() && line_[at_] >= '0' && line_[at_] <= '9') {
      ++at_;
      ++n;
    }
    return n;
  }

  std::string_view line_;
  std::size_t line_no_;
  std::size_t at_ = 0;
};

struct OpenSet {
  std::string name;
  SourcePos pos;
  std::vector<std::string> labels;
  std::vector<NeutrosophicValue> values;
};

void check_precision(int precision) {
  if (precision < 1 || precision > 17)
    throw std::invalid_argument("precision must be between 1 and 17");
}

template <class Set, class LabelFn>
std::string format_block(std::string_view name, const Set& set, int precision, LabelFn label) {
  check_precision(precision);
  std::string out = "set " + std::string(name) + "\n";
  for (std::size_t row = 0; row < set.size(); ++row) {
    out += "  " + label(set.label(row)) + " :";
    const auto e = set.value(row).endpoints();
    for (std::size_t k = 0; k < kEndpointCount; k += 2)
      out += " [" + format_endpoint(e[k], precision) + "," + format_endpoint(e[k + 1], precision) + "]";
    out += "\n";
  }
  out += "end\n";
  return out;
}

template <class Set, class LabelFn>
nlohmann::json json_block(std::string_view name, const Set& set, int precision, LabelFn label) {
  check_precision(precision);
  auto rounded = [precision](double v) {
    const std::string text = format_endpoint(v, precision);
    double r = 0.0;
    std::from_chars(text.data(), text.data() + text.size(), r);
    return r;
  };
  nlohmann::json elements = nlohmann::json::array();
  for (std::size_t row = 0; row < set.size(); ++row) {
    const auto e = set.value(row).endpoints();
    elements.push_back({{"label", label(set.label(row))},
                        {"T", {rounded(e[0]), rounded(e[1])}},
                        {"I", {rounded(e[2]), rounded(e[3])}},
                        {"F", {rounded(e[4]), rounded(e[5])}}});
  }
  return {{"name", std::string(name)}, {"elements", std::move(elements)}};
}

std::string plain(const std::string& l) { return l; }

}  // namespace

Environment parse_sets(std::string_view text) {
  Environment env;
  std::optional<OpenSet> open;
  std::size_t line_no = 0;
  std::size_t line_len = 0;
  while (!text.empty() || line_no == 0) {
    ++line_no;
    const std::size_t nl = text.find('\n');
    const std::string_view line = text.substr(0, nl);
    line_len = line.size();
    text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);

    LineReader r(line, line_no);
    if (r.done() || r.peek() == '#') {
      if (text.empty()) break;
      continue;
    }
    const SourcePos start = r.pos();
    const std::string_view head = r.word();
    if (head.empty()) r.fail(ErrorKind::kParseError, "expected 'set', 'end' or an element");

    if (head == "set" && (r.done() || r.peek() != ':')) {
      if (open)
        throw SourceError(ErrorKind::kParseError, start,
                          "'set' inside set '" + open->name + "' (missing 'end')");
      const SourcePos name_pos = (r.skip_space(), r.pos());
      const std::string name(r.word());
      if (!is_valid_name(name))
        throw SourceError(ErrorKind::kParseError, name_pos, "expected a set name");
      if (env.contains(name))
        throw SourceError(ErrorKind::kParseError, name_pos, "duplicate set '" + name + "'");
      if (!r.done()) r.fail(ErrorKind::kParseError, "unexpected text after set name");
      open = OpenSet{name, start, {}, {}};
    } else if (head == "end" && r.done()) {
      if (!open) throw SourceError(ErrorKind::kParseError, start, "'end' without 'set'");
      env.bind(open->name, DiscreteINS(std::move(open->labels), open->values));
      open.reset();
    } else {
      if (!open)
        throw SourceError(ErrorKind::kParseError, start, "element outside a 'set ... end' block");
      const std::string label(head);
      for (const auto& l : open->labels)
        if (l == label)
          throw SourceError(ErrorKind::kParseError, start, "duplicate element '" + label + "'");
      r.expect(':', "':' after the element label");
      const UnitInterval t = r.interval();
      const UnitInterval i = r.interval();
      const UnitInterval f = r.interval();
      if (!r.done()) r.fail(ErrorKind::kParseError, "unexpected text after the F interval");
      open->labels.push_back(label);
      open->values.push_back({t, i, f});
    }
    if (text.empty()) break;
  }
  if (open)
    throw SourceError(ErrorKind::kParseError, {line_no, line_len + 1},
                      "set '" + open->name + "' is missing 'end'");
  return env;
}

std::string format_endpoint(double v, int precision) {
  check_precision(precision);
  if (v == 0.0) return "0.0";
  char buf[64];
  auto [end, ec] =
      std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific, precision - 1);
  const std::string_view sci(buf, static_cast<std::size_t>(end - buf));
  const std::size_t e_at = sci.find('e');
  std::string_view mantissa = sci.substr(0, e_at);
  int exponent = 0;
  std::from_chars(sci.data() + e_at + 1 + (sci[e_at + 1] == '+'), sci.data() + sci.size(), exponent);

  std::string sign;
  if (!mantissa.empty() && mantissa.front() == '-') {
    sign = "-";
    mantissa.remove_prefix(1);
  }
  std::string digits;
  for (char c : mantissa)
    if (c != '.') digits += c;
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();

  std::string whole, frac;
  if (exponent >= 0) {
    const std::size_t int_len = static_cast<std::size_t>(exponent) + 1;
    if (digits.size() <= int_len) {
      whole = digits + std::string(int_len - digits.size(), '0');
    } else {
      whole = digits.substr(0, int_len);
      frac = digits.substr(int_len);
    }
  } else {
    whole = "0";
    frac = std::string(static_cast<std::size_t>(-exponent - 1), '0') + digits;
  }
  if (frac.empty()) frac = "0";
  return sign + whole + "." + frac;
}

std::string format_set(std::string_view name, const DiscreteINS& set, int precision) {
  return format_block(name, set, precision, plain);
}

std::string format_set(std::string_view name, const PairedINS& set, int precision) {
  return format_block(name, set, precision, pair_label);
}

std::string format_sets(const Environment& env, int precision) {
  std::string out;
  for (const auto& [name, set] : env.entries()) {
    if (!out.empty()) out += "\n";
    out += format_set(name, set, precision);
  }
  return out;
}

nlohmann::json to_json(std::string_view name, const DiscreteINS& set, int precision) {
  return json_block(name, set, precision, plain);
}

nlohmann::json to_json(std::string_view name, const PairedINS& set, int precision) {
  return json_block(name, set, precision, pair_label);
}

}  // namespace ins::dsl
