#include "ins/laws.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "ins/errors.hpp"
#include "ins/operators.hpp"
#include "ins/random.hpp"

namespace ins {

namespace {

constexpr LawInfo kCatalog[] = {
    {"closure", "every operator returns valid intervals"},
    {"lub", "A | B is the least set containing A and B"},
    {"glb", "A & B is the greatest set contained in A and B"},
    {"containment-complement", "A <= B iff ~B <= ~A"},
    {"favorite-inclusions", "tf/ff distribute over | and & as inclusions"},
    {"commutativity", "|, &, +, prod and cart are symmetric"},
    {"associativity", "|, &, +, prod associate"},
    {"distributivity", "| and & distribute over each other"},
    {"idempotency", "A | A = A & A = A, tf tf = tf, ff ff = ff"},
    {"identity-absorber", "empty and universal sets absorb and act as identities"},
    {"favorite-additivity", "tf and ff distribute over +"},
    {"absorption", "A | (A & B) = A & (A | B) = A"},
    {"demorgan", "~(A | B) = ~A & ~B and ~(A & B) = ~A | ~B"},
    {"involution", "~~A = A"},
    {"partial-order", "containment is reflexive, antisymmetric and transitive"},
    {"excluded-middle-fails", "some A has A | ~A != universal"},
    {"favorite-annihilation", "tf and ff zero the indeterminacy"},
};

std::string number(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

std::string endpoints_line(const NeutrosophicValue& v) {
  std::string out;
  for (Endpoint e : kAllEndpoints) {
    if (!out.empty()) out += ' ';
    out += std::string(endpoint_name(e)) + "=" + number(v.endpoint(e));
  }
  return out;
}

struct Operand {
  std::string name;
  const DiscreteINS* set;
};

/// Evaluation state of one trial: records the first failing check.
class Trial {
 public:
  Trial(std::size_t index, double tol, std::size_t& checks)
      : index_(index), tol_(tol), checks_(checks) {}

  void operands(std::vector<Operand> ops) { operands_ = std::move(ops); }

  /// lhs == rhs endpointwise, exactly or within the law tolerance.
  void equal(std::string_view check, const DiscreteINS& lhs, const DiscreteINS& rhs,
             bool approximate = false) {
    ++checks_;
    if (failure_) return;
    const double tol = approximate ? tol_ : 0.0;
    const Columns r = rhs.columns_in_order(lhs.labels());
    for (std::size_t row = 0; row < lhs.size(); ++row) {
      for (std::size_t k = 0; k < kEndpointCount; ++k) {
        if (!(std::abs(lhs.columns()[k][row] - r[k][row]) <= tol)) {
          fail(check, lhs, row, lhs.value(row), rhs.at(lhs.label(row)));
          return;
        }
      }
    }
  }

  void contained(std::string_view check, const DiscreteINS& sub, const DiscreteINS& sup) {
    ++checks_;
    if (failure_) return;
    if (is_contained(sub, sup)) return;
    for (std::size_t row = 0; row < sub.size(); ++row) {
      const NeutrosophicValue s = sub.value(row);
      const NeutrosophicValue t = sup.at(sub.label(row));
      if (!value::is_contained(s, t)) {
        fail(check, sub, row, s, t);
        return;
      }
    }
  }

  void holds(std::string_view check, bool condition, std::string note = {}) {
    ++checks_;
    if (failure_ || condition) return;
    Counterexample c;
    c.trial = index_;
    c.check = std::string(check);
    c.note = std::move(note);
    for (const auto& op : operands_)
      if (!op.set->empty_universe()) c.operands.emplace_back(op.name, op.set->value(0));
    failure_ = std::move(c);
  }

  std::optional<Counterexample>& failure() { return failure_; }

 private:
  void fail(std::string_view check, const DiscreteINS& frame, std::size_t row,
            const NeutrosophicValue& lhs, const NeutrosophicValue& rhs) {
    Counterexample c;
    c.trial = index_;
    c.check = std::string(check);
    c.label = frame.label(row);
    c.lhs = lhs;
    c.rhs = rhs;
    for (const auto& op : operands_) {
      if (auto r = op.set->index_of(c.label)) c.operands.emplace_back(op.name, op.set->value(*r));
    }
    failure_ = std::move(c);
  }

  std::size_t index_;
  double tol_;
  std::size_t& checks_;
  std::vector<Operand> operands_;
  std::optional<Counterexample> failure_;
};

struct Inputs {
  Rng& rng;
  const DiscreteINS& a;
  const DiscreteINS& b;
  const DiscreteINS& c;
};

using LawBody = std::function<void(Inputs&, Trial&)>;

DiscreteINS phi_like(const DiscreteINS& a) { return DiscreteINS::uniform(a.labels(), empty_value()); }
DiscreteINS universal_like(const DiscreteINS& a) {
  return DiscreteINS::uniform(a.labels(), universal_value());
}

void law_closure(Inputs& in, Trial& t) {
  const auto& [rng, a, b, c] = in;
  const double k = rng.uniform(0.0, 4.0) + 1e-3;
  // Any invalid interval is rejected by the set constructor; reaching the
  // end of this block means every result validated.
  try {
    (void)complement(a);
    (void)unite(a, b);
    (void)intersect(a, b);
    const DiscreteINS diff = difference(a, b);
    for (std::size_t row = 0; row < diff.size(); ++row) {
      const double lo = std::max(a.columns()[2][row], 1.0 - b.at(a.label(row)).i.hi());
      const double hi = std::max(a.columns()[3][row], 1.0 - b.at(a.label(row)).i.lo());
      t.holds("difference I: max(inf Ia, 1 - sup Ib) <= max(sup Ia, 1 - inf Ib)", lo <= hi);
    }
    (void)add(a, b);
    (void)pointwise_product(a, b);
    (void)cartesian_product(a, b);
    (void)scalar_mul(k, a);
    (void)scalar_div(a, k);
    (void)truth_favorite(a);
    (void)false_favorite(a);
    t.holds("all operator results are valid", true);
  } catch (const InvalidInterval& e) {
    t.holds("all operator results are valid", false, e.what());
  }
}

void law_lub(Inputs& in, Trial& t) {
  const auto& [rng, a, b, c] = in;
  const DiscreteINS u = unite(a, b);
  t.contained("A <= A | B", a, u);
  t.contained("B <= A | B", b, u);
  const DiscreteINS bound = random_upper_bound(rng, a, b);
  t.contained("A | B <= D for an upper bound D", u, bound);
  // Unconstrained D: the implication is usually vacuous but stays honest.
  const DiscreteINS d = random_set(rng, a.labels());
  if (is_contained(a, d) && is_contained(b, d)) t.contained("A | B <= D", u, d);
  t.contained("A | B <= D for D >= A | B", u, random_superset(rng, bound));
}

void law_glb(Inputs& in, Trial& t) {
  const auto& [rng, a, b, c] = in;
  const DiscreteINS n = intersect(a, b);
  t.contained("A & B <= A", n, a);
  t.contained("A & B <= B", n, b);
  const DiscreteINS bound = random_lower_bound(rng, a, b);
  t.contained("D <= A & B for a lower bound D", bound, n);
  const DiscreteINS d = random_set(rng, a.labels());
  if (is_contained(d, a) && is_contained(d, b)) t.contained("D <= A & B", d, n);
}

void law_containment_complement(Inputs& in, Trial& t) {
  const auto& [rng, a, b, c] = in;
  auto iff = [&](const DiscreteINS& x, const DiscreteINS& y, std::string_view what) {
    const bool forward = is_contained(x, y);
    const bool backward = is_contained(complement(y), complement(x));
    t.holds(what, forward == backward,
            std::string("X <= Y is ") + (forward ? "true" : "false") + ", ~Y <= ~X is " +
                (backward ? "true" : "false"));
  };
  iff(a, b, "A <= B iff ~B <= ~A");
  iff(a, random_superset(rng, a), "A <= S iff ~S <= ~A (S a superset)");
  iff(random_subset(rng, a), a, "S <= A iff ~A <= ~S (S a subset)");
}

void law_favorite_inclusions(Inputs& in, Trial& t) {
  const auto& [rng, a, b, c] = in;
  const DiscreteINS ta = truth_favorite(a), tb = truth_favorite(b);
  const DiscreteINS fa = false_favorite(a), fb = false_favorite(b);
  t.contained("tf(A | B) <= tf(A) | tf(B)", truth_favorite(unite(a, b)), unite(ta, tb));
  t.contained("tf(A) & tf(B) <= tf(A & B)", intersect(ta, tb), truth_favorite(intersect(a, b)));
  t.contained("ff(A) | ff(B) <= ff(A | B)", unite(fa, fb), false_favorite(unite(a, b)));
  t.contained("ff(A & B) <= ff(A) & ff(B)", false_favorite(intersect(a, b)), intersect(fa, fb));
}

void law_commutativity(Inputs& in, Trial& t) {
  const auto& [rng, a, b, c] = in;
  t.equal("A | B = B | A", unite(a, b), unite(b, a));
  t.equal("A & B = B & A", intersect(a, b), intersect(b, a));
  t.equal("A + B = B + A", add(a, b), add(b, a));
  t.equal("prod(A, B) = prod(B, A)", pointwise_product(a, b), pointwise_product(b, a));
  const PairedINS ab = cartesian_product(a, b);
  const PairedINS ba = transpose(cartesian_product(b, a));
  const bool same = equals(ab, ba);
  t.holds("cart(A, B) = cart(B, A) with pair keys swapped", same);
}

void law_associativity(Inputs& in, Trial& t) {
  const auto& [rng, a, b, c] = in;
  t.equal("A | (B | C) = (A | B) | C", unite(a, unite(b, c)), unite(unite(a, b), c));
  t.equal("A & (B & C) = (A & B) & C", intersect(a, intersect(b, c)),
          intersect(intersect(a, b), c));
  t.equal("A + (B + C) = (A + B) + C", add(a, add(b, c)), add(add(a, b), c), true);
  t.equal("prod(A, prod(B, C)) = prod(prod(A, B), C)",
          pointwise_product(a, pointwise_product(b, c)),
          pointwise_product(pointwise_product(a, b), c), true);
}

void law_distributivity(Inputs& in, Trial& t) {
  const auto& [rng, a, b, c] = in;
  t.equal("A | (B & C) = (A | B) & (A | C)", unite(a, intersect(b, c)),
          intersect(unite(a, b), unite(a, c)));
  t.equal("A & (B | C) = (A & B) | (A & C)", intersect(a, unite(b, c)),
          unite(intersect(a, b), intersect(a, c)));
}

void law_idempotency(Inputs& in, Trial& t) {
  const auto& a = in.a;
  t.equal("A | A = A", unite(a, a), a);
  t.equal("A & A = A", intersect(a, a), a);
  t.equal("tf(tf(A)) = tf(A)", truth_favorite(truth_favorite(a)), truth_favorite(a));
  t.equal("ff(ff(A)) = ff(A)", false_favorite(false_favorite(a)), false_favorite(a));
}

void law_identity_absorber(Inputs& in, Trial& t) {
  const auto& a = in.a;
  const DiscreteINS phi = phi_like(a);
  const DiscreteINS all = universal_like(a);
  t.equal("A & Phi = Phi", intersect(a, phi), phi);
  t.equal("A | X = X", unite(a, all), all);
  t.equal("A | Phi = A", unite(a, phi), a);
  t.equal("A & X = A", intersect(a, all), a);
}

void law_favorite_additivity(Inputs& in, Trial& t) {
  const auto& [rng, a, b, c] = in;
  t.equal("tf(A + B) = tf(A) + tf(B)", truth_favorite(add(a, b)),
          add(truth_favorite(a), truth_favorite(b)), true);
  t.equal("ff(A + B) = ff(A) + ff(B)", false_favorite(add(a, b)),
          add(false_favorite(a), false_favorite(b)), true);
}

void law_absorption(Inputs& in, Trial& t) {
  const auto& [rng, a, b, c] = in;
  t.equal("A | (A & B) = A", unite(a, intersect(a, b)), a);
  t.equal("A & (A | B) = A", intersect(a, unite(a, b)), a);
}

void law_demorgan(Inputs& in, Trial& t) {
  const auto& [rng, a, b, c] = in;
  t.equal("~(A | B) = ~A & ~B", complement(unite(a, b)), intersect(complement(a), complement(b)));
  t.equal("~(A & B) = ~A | ~B", complement(intersect(a, b)), unite(complement(a), complement(b)));
}

void law_involution(Inputs& in, Trial& t) {
  // 1 - (1 - x) need not round back to x.
  t.equal("~~A = A", complement(complement(in.a)), in.a, true);
}

void law_partial_order(Inputs& in, Trial& t) {
  const auto& [rng, a, b, c] = in;
  t.holds("A <= A", is_contained(a, a));
  const DiscreteINS copy(a.labels(), [&] {
    std::vector<NeutrosophicValue> v;
    for (std::size_t r = 0; r < a.size(); ++r) v.push_back(a.value(r));
    return v;
  }());
  for (const DiscreteINS* other : {&b, &copy}) {
    if (is_contained(a, *other) && is_contained(*other, a)) {
      t.holds("A <= B and B <= A implies A = B", equals(a, *other));
      t.holds("A = B implies identical endpoints", a.columns() == other->columns_in_order(a.labels()));
    }
  }
  const DiscreteINS up = random_superset(rng, a);
  const DiscreteINS top = random_superset(rng, up);
  t.holds("A <= S, S <= T implies A <= T (chained supersets)",
          is_contained(a, up) && is_contained(up, top) && is_contained(a, top));
  if (is_contained(a, b) && is_contained(b, c)) t.holds("A <= B <= C implies A <= C", is_contained(a, c));
}

void law_favorite_annihilation(Inputs& in, Trial& t) {
  for (const DiscreteINS& s : {truth_favorite(in.a), false_favorite(in.a)}) {
    bool zero = true;
    for (std::size_t r = 0; r < s.size(); ++r) zero = zero && s.value(r).i == UnitInterval();
    t.holds("I of tf(A) and ff(A) is [0,0]", zero);
  }
}

const std::map<std::string_view, LawBody>& bodies() {
  static const std::map<std::string_view, LawBody> table = {
      {"closure", law_closure},
      {"lub", law_lub},
      {"glb", law_glb},
      {"containment-complement", law_containment_complement},
      {"favorite-inclusions", law_favorite_inclusions},
      {"commutativity", law_commutativity},
      {"associativity", law_associativity},
      {"distributivity", law_distributivity},
      {"idempotency", law_idempotency},
      {"identity-absorber", law_identity_absorber},
      {"favorite-additivity", law_favorite_additivity},
      {"absorption", law_absorption},
      {"demorgan", law_demorgan},
      {"involution", law_involution},
      {"partial-order", law_partial_order},
      {"favorite-annihilation", law_favorite_annihilation},
  };
  return table;
}

/// Universe and operands for one trial.
struct Draw {
  DiscreteINS a, b, c;
};

class TrialSource {
 public:
  explicit TrialSource(const LawOptions& options) : options_(options) {
    for (const auto& f : options.fixtures) {
      auto it = std::find_if(groups_.begin(), groups_.end(), [&](const auto& g) {
        return g.front().same_universe(f);
      });
      if (it == groups_.end())
        groups_.push_back({f});
      else
        it->push_back(f);
    }
  }

  Draw draw(Rng& rng, std::size_t trial) {
    if (trial < groups_.size()) {
      const auto& g = groups_[trial];
      return {g[0], g[1 % g.size()], g[2 % g.size()]};
    }
    std::vector<std::string> universe;
    if (!options_.universes.empty()) {
      universe = options_.universes[trial % options_.universes.size()];
    } else {
      universe = numbered_universe(1 + rng.below(8));
    }
    DiscreteINS a = random_set(rng, universe);
    DiscreteINS b = random_set(rng, universe);
    DiscreteINS c = random_set(rng, universe);
    return {std::move(a), std::move(b), std::move(c)};
  }

 private:
  const LawOptions& options_;
  std::vector<std::vector<DiscreteINS>> groups_;
};

LawResult run_excluded_middle(const LawOptions& options) {
  LawResult result{"excluded-middle-fails", true, 0, 0, std::nullopt};
  Rng rng(options.seed);
  TrialSource source(options);
  bool witnessed = false;
  for (std::size_t trial = 0; trial < options.trials && !witnessed; ++trial) {
    Draw d = source.draw(rng, trial);
    ++result.trials;
    ++result.checks;
    witnessed = !equals(unite(d.a, complement(d.a)), universal_like(d.a));
  }
  if (!witnessed) {
    result.passed = false;
    Counterexample c;
    c.check = "exists A with A | ~A != X";
    c.note = "no witness among the sampled sets";
    result.counterexample = std::move(c);
  }
  return result;
}

}  // namespace

std::span<const LawInfo> law_catalog() { return kCatalog; }

LawResult check_law(std::string_view name, const LawOptions& options) {
  if (name == "excluded-middle-fails") return run_excluded_middle(options);
  const auto& table = bodies();
  auto it = table.find(name);
  if (it == table.end()) throw UnknownLaw("unknown law '" + std::string(name) + "'");

  LawResult result{std::string(name), true, 0, 0, std::nullopt};
  Rng rng(options.seed);
  TrialSource source(options);
  for (std::size_t trial = 0; trial < options.trials; ++trial) {
    Draw d = source.draw(rng, trial);
    Trial t(trial, options.tol, result.checks);
    t.operands({{"A", &d.a}, {"B", &d.b}, {"C", &d.c}});
    Inputs in{rng, d.a, d.b, d.c};
    it->second(in, t);
    ++result.trials;
    if (t.failure()) {
      result.passed = false;
      result.counterexample = std::move(t.failure());
      break;
    }
  }
  return result;
}

std::vector<LawResult> check_all(const LawOptions& options) {
  std::vector<LawResult> out;
  for (const auto& law : kCatalog) out.push_back(check_law(law.name, options));
  return out;
}

std::string render(const LawResult& r) {
  std::ostringstream os;
  os << r.name << ": " << (r.passed ? "pass" : "FAIL") << " (" << r.trials << " trials, "
     << r.checks << " checks)\n";
  if (r.counterexample) {
    const Counterexample& c = *r.counterexample;
    os << "  trial: " << c.trial << "\n";
    os << "  check: " << c.check << "\n";
    if (!c.label.empty()) os << "  element: " << c.label << "\n";
    if (c.lhs) os << "  lhs: " << endpoints_line(*c.lhs) << "\n";
    if (c.rhs) os << "  rhs: " << endpoints_line(*c.rhs) << "\n";
    for (const auto& [name, v] : c.operands) os << "  " << name << ": " << endpoints_line(v) << "\n";
    if (!c.note.empty()) os << "  note: " << c.note << "\n";
  }
  return os.str();
}

}  // namespace ins
