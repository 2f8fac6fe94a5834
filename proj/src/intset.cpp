#include "banach/intset.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "banach/errors.hpp"

namespace banach {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Above this many elements a finite dilation stays symbolic.
constexpr std::size_t kMaxExpandedElements = std::size_t{1} << 24;

bool congruence_is_full(const Congruence& c) { return c.modulus == 1; }

// ---- unshifted generator primitives; arguments are >= 1 unless noted ----

BigInt gen_min(const GeneratorKind& kind) {
  return std::visit(Overloaded{
                        [](const PowRuns& g) { return BigInt(g.base); },
                        [](const PolyRuns&) { return BigInt(1); },
                        [](const Congruence& g) { return g.residue == 0 ? g.modulus : g.residue; },
                        [](const Full&) { return BigInt(1); },
                    },
                    kind);
}

std::optional<Span> gen_span(const GeneratorKind& kind, const BigInt& y) {
  if (y < 1) return std::nullopt;
  return std::visit(
      Overloaded{
          [&](const PowRuns& g) -> std::optional<Span> {
            if (y < g.base) return std::nullopt;
            const std::uint64_t i = ilog(y, g.base);
            const BigInt start = pow(BigInt(g.base), i);
            BigInt end = start + i - 1;
            if (y > end) return std::nullopt;
            return Span{start, std::move(end)};
          },
          [&](const PolyRuns& g) -> std::optional<Span> {
            const BigInt i = iroot(y, g.exponent);
            const BigInt start = boost::multiprecision::pow(i, g.exponent);
            BigInt end = start + i - 1;
            if (y > end) return std::nullopt;
            return Span{start, std::move(end)};
          },
          [&](const Congruence& g) -> std::optional<Span> {
            if (congruence_is_full(g)) return Span{1, std::nullopt};
            if (mod_floor(y, g.modulus) != g.residue) return std::nullopt;
            return Span{y, y};
          },
          [&](const Full&) -> std::optional<Span> { return Span{1, std::nullopt}; },
      },
      kind);
}

void check_digits(const BigInt& estimate_digits, const SearchLimits& limits) {
  if (estimate_digits > limits.digit_budget) {
    throw BudgetExceeded("run search needs integers of about " + estimate_digits.str() +
                         " digits, over the budget of " + std::to_string(limits.digit_budget));
  }
}

std::optional<Run> gen_next_run(const GeneratorKind& kind, const BigInt& min_len,
                                const BigInt& lower, const SearchLimits& limits) {
  const BigInt lo = std::max(lower, BigInt(1));
  return std::visit(
      Overloaded{
          [&](const PowRuns& g) -> std::optional<Run> {
            // Run i has length i, so only indices i >= min_len qualify.
            const double digits_per_index = std::log10(static_cast<double>(g.base));
            const auto max_index =
                static_cast<std::uint64_t>(static_cast<double>(limits.digit_budget) / digits_per_index);
            auto over_budget = [&](const BigInt& index) {
              return BudgetExceeded("pow_runs run " + index.str() + " needs more than " +
                                    std::to_string(limits.digit_budget) + " digits");
            };
            if (min_len > max_index) throw over_budget(min_len);
            std::uint64_t i = std::max<std::uint64_t>(min_len.convert_to<std::uint64_t>(),
                                                      lo >= g.base ? ilog(lo, g.base) : 1);
            for (BigInt start = pow(BigInt(g.base), i);; ++i, start *= g.base) {
              if (i > max_index) throw over_budget(i);
              const BigInt b = std::max(start, lo);
              if (b + min_len <= start + i) return Run(b, min_len);
            }
          },
          [&](const PolyRuns& g) -> std::optional<Run> {
            check_digits(BigInt(g.exponent) * (decimal_digits(min_len) - 1), limits);
            BigInt i = std::max({min_len, iroot(lo, g.exponent), BigInt(1)});
            for (;; ++i) {
              const BigInt start = boost::multiprecision::pow(i, g.exponent);
              const BigInt b = std::max(start, lo);
              if (b + min_len <= start + i) return Run(b, min_len);
            }
          },
          [&](const Congruence& g) -> std::optional<Run> {
            if (congruence_is_full(g)) return Run(lo, min_len);
            if (min_len >= 2) return std::nullopt;
            return Run(lo + mod_floor(g.residue - lo, g.modulus), 1);
          },
          [&](const Full&) -> std::optional<Run> { return Run(lo, min_len); },
      },
      kind);
}

void clipped_visit(const BigInt& start, const BigInt& end, const BigInt& lo, const BigInt& hi,
                   const std::function<void(const Run&)>& visit) {
  const BigInt s = std::max(start, lo);
  const BigInt e = std::min(end, hi);
  if (s <= e) visit(Run(s, e - s + 1));
}

void gen_for_each_run(const GeneratorKind& kind, const BigInt& lo, const BigInt& hi,
                      const std::function<void(const Run&)>& visit) {
  std::visit(Overloaded{
                 [&](const PowRuns& g) {
                   if (hi < g.base) return;
                   std::uint64_t i = lo >= g.base ? ilog(lo, g.base) : 1;
                   for (BigInt start = pow(BigInt(g.base), i); start <= hi; ++i, start *= g.base) {
                     clipped_visit(start, start + i - 1, lo, hi, visit);
                   }
                 },
                 [&](const PolyRuns& g) {
                   for (BigInt i = std::max(BigInt(1), iroot(lo, g.exponent));; ++i) {
                     const BigInt start = boost::multiprecision::pow(i, g.exponent);
                     if (start > hi) break;
                     clipped_visit(start, start + i - 1, lo, hi, visit);
                   }
                 },
                 [&](const Congruence& g) {
                   if (congruence_is_full(g)) {
                     clipped_visit(lo, hi, lo, hi, visit);
                     return;
                   }
                   for (BigInt x = lo + mod_floor(g.residue - lo, g.modulus); x <= hi; x += g.modulus) {
                     visit(Run(x, 1));
                   }
                 },
                 [&](const Full&) { clipped_visit(lo, hi, lo, hi, visit); },
             },
             kind);
}

void validate(const Generator& g) {
  std::visit(Overloaded{
                 [](const PowRuns& p) {
                   if (p.base < 2) throw std::invalid_argument("pow_runs base must be at least 2");
                 },
                 [](const PolyRuns& p) {
                   if (p.exponent < 2) throw std::invalid_argument("poly_runs exponent must be at least 2");
                 },
                 [](const Congruence& c) {
                   if (c.modulus < 1) throw std::invalid_argument("congruence modulus must be positive");
                   if (c.residue < 0 || c.residue >= c.modulus) {
                     throw std::invalid_argument("congruence residue must lie in [0, m-1]");
                   }
                 },
                 [](const Full&) {},
             },
             g.kind);
  if (gen_min(g.kind) + g.shift < 0) throw NegativeResult("generator shift makes elements negative");
}

std::size_t offset_in(const ExplicitWindow& w, const BigInt& x) { return to_size(x - w.base); }

}  // namespace

// ---------------------------------------------------------------- Run, Window

Run::Run(BigInt start, BigInt len) : start_(std::move(start)), len_(std::move(len)) {
  if (len_ < 1) throw std::invalid_argument("run length must be positive");
}

Window::Window(BigInt base_, std::size_t length_) : base(std::move(base_)), length(length_) {
  if (length == 0) throw BadLength("window length must be positive");
  if (base < 0) throw NegativeResult("window base must be non-negative");
}

bool ExplicitWindow::test(const BigInt& x) const {
  if (x < base) return false;
  const BigInt off = x - base;
  if (off >= bits.size()) return false;
  return bits.test(off.convert_to<std::size_t>());
}

void ExplicitWindow::set(const BigInt& x) { bits.set(offset_in(*this, x)); }

// ---------------------------------------------------------------- RunList

RunList::RunList(std::vector<Run> runs) {
  std::sort(runs.begin(), runs.end(),
            [](const Run& a, const Run& b) { return a.start() < b.start(); });
  for (auto& run : runs) {
    if (!runs_.empty()) {
      const Run& last = runs_.back();
      if (run.start() <= last.end()) {
        throw OverlapError("runs [" + last.start().str() + "," + last.end().str() + "] and [" +
                           run.start().str() + "," + run.end().str() + "] overlap");
      }
      if (run.start() == last.end() + 1) {
        runs_.back() = Run(last.start(), last.len() + run.len());
        continue;
      }
    }
    runs_.push_back(std::move(run));
  }
}

BigInt RunList::cardinality() const {
  BigInt total = 0;
  for (const auto& r : runs_) total += r.len();
  return total;
}

// ---------------------------------------------------------------- IntSet

bool operator==(const Dilation& a, const Dilation& b) {
  const bool same_inner = (a.inner && b.inner) ? (*a.inner == *b.inner) : (a.inner == b.inner);
  return same_inner && a.factor == b.factor && a.offset == b.offset;
}

IntSet::IntSet(Generator g) : rep_(std::move(g)) { validate(std::get<Generator>(rep_)); }

IntSet IntSet::pow_runs(std::uint64_t base) { return Generator{PowRuns{base}, 0}; }
IntSet IntSet::poly_runs(unsigned exponent) { return Generator{PolyRuns{exponent}, 0}; }
IntSet IntSet::congruence(BigInt modulus, BigInt residue) {
  return Generator{Congruence{std::move(modulus), std::move(residue)}, 0};
}
IntSet IntSet::full() { return Generator{Full{}, 0}; }

IntSet IntSet::from_elements(const std::vector<BigInt>& elements) {
  std::vector<BigInt> sorted = elements;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Run> runs;
  runs.reserve(sorted.size());
  for (auto& x : sorted) {
    if (x < 0) throw NegativeResult("negative element " + x.str());
    runs.emplace_back(std::move(x), 1);
  }
  return RunList(std::move(runs));
}

bool IntSet::is_finite() const {
  return std::visit(Overloaded{
                        [](const ExplicitWindow&) { return true; },
                        [](const RunList&) { return true; },
                        [](const Generator&) { return false; },
                        [](const Dilation& d) { return d.inner->is_finite(); },
                    },
                    rep_);
}

// ---------------------------------------------------------------- queries

bool membership(const IntSet& s, const BigInt& x) {
  if (x < 0) return false;
  return std::visit(Overloaded{
                        [&](const ExplicitWindow& w) { return w.test(x); },
                        [&](const RunList& r) {
                          const auto& runs = r.runs();
                          auto it = std::upper_bound(runs.begin(), runs.end(), x,
                                                     [](const BigInt& v, const Run& run) {
                                                       return v < run.start();
                                                     });
                          return it != runs.begin() && std::prev(it)->contains(x);
                        },
                        [&](const Generator& g) { return gen_span(g.kind, x - g.shift).has_value(); },
                        [&](const Dilation& d) {
                          const BigInt y = x - d.offset;
                          return y >= 0 && y % d.factor == 0 && membership(*d.inner, y / d.factor);
                        },
                    },
                    s.rep());
}

std::optional<Span> span_at(const IntSet& s, const BigInt& x) {
  if (!membership(s, x)) return std::nullopt;
  return std::visit(
      Overloaded{
          [&](const ExplicitWindow& w) -> std::optional<Span> {
            std::size_t lo = offset_in(w, x);
            std::size_t hi = lo;
            while (lo > 0 && w.bits.test(lo - 1)) --lo;
            while (hi + 1 < w.bits.size() && w.bits.test(hi + 1)) ++hi;
            return Span{w.base + lo, BigInt(w.base + hi)};
          },
          [&](const RunList& r) -> std::optional<Span> {
            const auto& runs = r.runs();
            auto it = std::upper_bound(runs.begin(), runs.end(), x,
                                       [](const BigInt& v, const Run& run) { return v < run.start(); });
            const Run& run = *std::prev(it);
            return Span{run.start(), run.end()};
          },
          [&](const Generator& g) -> std::optional<Span> {
            auto span = gen_span(g.kind, x - g.shift);
            span->start += g.shift;
            if (span->end) *span->end += g.shift;
            return span;
          },
          [&](const Dilation&) -> std::optional<Span> { return Span{x, x}; },
      },
      s.rep());
}

std::optional<BigInt> min_element(const IntSet& s) {
  return std::visit(Overloaded{
                        [](const ExplicitWindow& w) -> std::optional<BigInt> {
                          const auto first = w.bits.find_first();
                          if (first == boost::dynamic_bitset<>::npos) return std::nullopt;
                          return w.base + first;
                        },
                        [](const RunList& r) -> std::optional<BigInt> {
                          if (r.empty()) return std::nullopt;
                          return r.runs().front().start();
                        },
                        [](const Generator& g) -> std::optional<BigInt> {
                          return gen_min(g.kind) + g.shift;
                        },
                        [](const Dilation& d) -> std::optional<BigInt> {
                          auto inner = min_element(*d.inner);
                          if (!inner) return std::nullopt;
                          return d.factor * *inner + d.offset;
                        },
                    },
                    s.rep());
}

std::optional<std::pair<BigInt, BigInt>> decidable_range(const IntSet& s) {
  return std::visit(Overloaded{
                        [](const ExplicitWindow& w) -> std::optional<std::pair<BigInt, BigInt>> {
                          return std::pair<BigInt, BigInt>{w.base, w.base + w.length() - 1};
                        },
                        [](const Dilation& d) -> std::optional<std::pair<BigInt, BigInt>> {
                          auto inner = decidable_range(*d.inner);
                          if (!inner) return std::nullopt;
                          return std::pair<BigInt, BigInt>{d.factor * inner->first + d.offset,
                                                           d.factor * inner->second + d.offset};
                        },
                        [](const auto&) -> std::optional<std::pair<BigInt, BigInt>> { return std::nullopt; },
                    },
                    s.rep());
}

// ---------------------------------------------------------------- transforms

IntSet translate(const IntSet& s, const BigInt& t) {
  if (t == 0) return s;
  if (auto lowest = min_element(s); lowest && *lowest + t < 0) {
    throw NegativeResult("translating by " + t.str() + " moves element " + lowest->str() +
                         " below zero");
  }
  return std::visit(Overloaded{
                        [&](const ExplicitWindow& w) -> IntSet {
                          BigInt base = w.base + t;
                          if (base >= 0) return ExplicitWindow(std::move(base), w.bits);
                          // Leading bits below zero are known to be empty; drop them.
                          const std::size_t drop = to_size(-base);
                          boost::dynamic_bitset<> bits = w.bits >> drop;
                          bits.resize(w.bits.size() - drop);
                          return ExplicitWindow(0, std::move(bits));
                        },
                        [&](const RunList& r) -> IntSet {
                          std::vector<Run> runs;
                          runs.reserve(r.runs().size());
                          for (const auto& run : r.runs()) runs.emplace_back(run.start() + t, run.len());
                          return RunList(std::move(runs));
                        },
                        [&](const Generator& g) -> IntSet { return Generator{g.kind, g.shift + t}; },
                        [&](const Dilation& d) -> IntSet { return Dilation{d.inner, d.factor, d.offset + t}; },
                    },
                    s.rep());
}

IntSet dilate(const IntSet& s, const BigInt& m, const BigInt& r) {
  if (m < 1) throw PreconditionFailed("dilation factor must be positive");
  if (m == 1) return translate(s, r);
  if (auto lowest = min_element(s); lowest && m * *lowest + r < 0) {
    throw NegativeResult("dilation produces negative elements");
  }
  if (const auto* d = std::get_if<Dilation>(&s.rep())) {
    return Dilation{d->inner, m * d->factor, m * d->offset + r};
  }
  const bool expandable = std::visit(Overloaded{
                                         [](const ExplicitWindow&) { return true; },
                                         [](const RunList& list) {
                                           return list.cardinality() <= kMaxExpandedElements;
                                         },
                                         [](const auto&) { return false; },
                                     },
                                     s.rep());
  if (!expandable) return Dilation{std::make_shared<const IntSet>(s), m, r};

  std::vector<Run> runs;
  auto push = [&](const BigInt& x) { runs.emplace_back(m * x + r, 1); };
  if (const auto* w = std::get_if<ExplicitWindow>(&s.rep())) {
    for (auto k = w->bits.find_first(); k != boost::dynamic_bitset<>::npos; k = w->bits.find_next(k)) {
      push(w->base + k);
    }
  } else {
    for (const auto& run : std::get<RunList>(s.rep()).runs()) {
      for (BigInt x = run.start(); x <= run.end(); ++x) push(x);
    }
  }
  return RunList(std::move(runs));
}

// ---------------------------------------------------------------- run search

std::optional<Run> next_run(const IntSet& s, const BigInt& min_len, const BigInt& lower_bound,
                            const SearchLimits& limits) {
  if (min_len < 1) throw PreconditionFailed("min_len must be positive");
  const BigInt lower = std::max(lower_bound, BigInt(0));
  return std::visit(
      Overloaded{
          [&](const ExplicitWindow& w) -> std::optional<Run> {
            const std::size_t n = w.bits.size();
            const BigInt first = std::max(lower - w.base, BigInt(0));
            if (min_len <= n && first < n) {
              const std::size_t need = min_len.convert_to<std::size_t>();
              std::size_t count = 0;
              for (std::size_t k = first.convert_to<std::size_t>(); k < n; ++k) {
                count = w.bits.test(k) ? count + 1 : 0;
                if (count == need) return Run(w.base + (k + 1 - need), min_len);
              }
            }
            throw HorizonExceeded("no run of length " + min_len.str() + " at or after " + lower.str() +
                                  " inside the window");
          },
          [&](const RunList& r) -> std::optional<Run> {
            const auto& runs = r.runs();
            auto it = std::lower_bound(runs.begin(), runs.end(), lower,
                                       [](const Run& run, const BigInt& v) { return run.end() < v; });
            for (; it != runs.end(); ++it) {
              const BigInt b = std::max(it->start(), lower);
              if (b + min_len - 1 <= it->end()) return Run(b, min_len);
            }
            throw HorizonExceeded("no run of length " + min_len.str() + " at or after " + lower.str() +
                                  " in the finite run list");
          },
          [&](const Generator& g) -> std::optional<Run> {
            auto found = gen_next_run(g.kind, min_len, std::max(lower - g.shift, BigInt(0)), limits);
            if (!found) return std::nullopt;
            return Run(found->start() + g.shift, found->len());
          },
          [&](const Dilation& d) -> std::optional<Run> {
            // Members are at least `factor` apart, so only singletons exist.
            if (min_len >= 2) return std::nullopt;
            const BigInt inner_lower = std::max(ceil_div(lower - d.offset, d.factor), BigInt(0));
            auto found = next_run(*d.inner, 1, inner_lower, limits);
            if (!found) return std::nullopt;
            return Run(d.factor * found->start() + d.offset, 1);
          },
      },
      s.rep());
}

void for_each_run(const IntSet& s, const BigInt& lo_in, const BigInt& hi,
                  const std::function<void(const Run&)>& visit) {
  const BigInt lo = std::max(lo_in, BigInt(0));
  if (lo > hi) return;
  std::visit(
      Overloaded{
          [&](const ExplicitWindow& w) {
            if (w.bits.empty()) return;
            const BigInt from = std::max(lo, w.base);
            const BigInt to = std::min(hi, w.window().last());
            if (from > to) return;
            const std::size_t a = offset_in(w, from);
            const std::size_t b = offset_in(w, to);
            std::size_t k = a;
            while (k <= b) {
              if (!w.bits.test(k)) {
                ++k;
                continue;
              }
              const std::size_t start = k;
              while (k <= b && w.bits.test(k)) ++k;
              visit(Run(w.base + start, k - start));
            }
          },
          [&](const RunList& r) {
            const auto& runs = r.runs();
            auto it = std::lower_bound(runs.begin(), runs.end(), lo,
                                       [](const Run& run, const BigInt& v) { return run.end() < v; });
            for (; it != runs.end() && it->start() <= hi; ++it) clipped_visit(it->start(), it->end(), lo, hi, visit);
          },
          [&](const Generator& g) {
            const BigInt glo = std::max(lo - g.shift, BigInt(1));
            const BigInt ghi = hi - g.shift;
            if (glo > ghi) return;
            gen_for_each_run(g.kind, glo, ghi, [&](const Run& run) {
              visit(Run(run.start() + g.shift, run.len()));
            });
          },
          [&](const Dilation& d) {
            const BigInt ilo = std::max(ceil_div(lo - d.offset, d.factor), BigInt(0));
            const BigInt ihi = floor_div(hi - d.offset, d.factor);
            for_each_run(*d.inner, ilo, ihi, [&](const Run& run) {
              for (BigInt x = run.start(); x <= run.end(); ++x) visit(Run(d.factor * x + d.offset, 1));
            });
          },
      },
      s.rep());
}

ExplicitWindow materialize(const IntSet& s, const Window& w) {
  ExplicitWindow out(w);
  for_each_run(s, w.base, w.last(), [&](const Run& run) {
    const std::size_t from = offset_in(out, run.start());
    const std::size_t len = to_size(run.len());
    out.bits.set(from, len, true);
  });
  return out;
}

// ---------------------------------------------------------------- text format

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> tokens;
  std::istringstream in{std::string(line)};
  for (std::string tok; in >> tok;) tokens.push_back(std::move(tok));
  return tokens;
}

}  // namespace

IntSet parse_set(std::string_view text) {
  std::vector<Run> runs;
  std::optional<IntSet> built;
  bool have_gen = false;
  bool transformed = false;
  std::size_t line_no = 0;

  auto integer = [&](const std::string& tok) {
    try {
      return parse_bigint(tok);
    } catch (const std::invalid_argument&) {
      throw SyntaxError(line_no, "expected an integer, got '" + tok + "'");
    }
  };
  auto current = [&]() -> IntSet {
    if (!built) built = IntSet(RunList(std::move(runs)));
    return *built;
  };

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tok = tokenize(line);
    if (tok.empty()) continue;
    const std::string& op = tok[0];
    auto arity = [&](std::size_t n) {
      if (tok.size() != n + 1) {
        throw SyntaxError(line_no, "'" + op + "' takes " + std::to_string(n) + " argument(s)");
      }
    };

    if (op == "run" || op == "elem") {
      if (have_gen || transformed) throw SyntaxError(line_no, "'" + op + "' cannot follow gen/shift/dilate");
      arity(op == "run" ? 2 : 1);
      const BigInt start = integer(tok[1]);
      const BigInt len = op == "run" ? integer(tok[2]) : BigInt(1);
      if (start < 0) throw SyntaxError(line_no, "elements must be non-negative");
      if (len < 1) throw SyntaxError(line_no, "run length must be positive");
      runs.emplace_back(start, len);
    } else if (op == "gen") {
      if (have_gen || transformed || !runs.empty()) {
        throw SyntaxError(line_no, "a set description holds one gen and no explicit runs");
      }
      if (tok.size() < 2) throw SyntaxError(line_no, "gen needs a kind");
      const std::string& kind = tok[1];
      try {
        if (kind == "pow_runs") {
          arity(2);
          const BigInt c = integer(tok[2]);
          if (c < 2 || c > BigInt(std::numeric_limits<std::uint32_t>::max())) {
            throw SyntaxError(line_no, "pow_runs base must be in [2, 2^32)");
          }
          built = IntSet::pow_runs(c.convert_to<std::uint64_t>());
        } else if (kind == "poly_runs") {
          arity(2);
          const BigInt p = integer(tok[2]);
          if (p < 2 || p > 64) throw SyntaxError(line_no, "poly_runs exponent must be in [2, 64]");
          built = IntSet::poly_runs(p.convert_to<unsigned>());
        } else if (kind == "congruence") {
          arity(3);
          built = IntSet::congruence(integer(tok[2]), integer(tok[3]));
        } else if (kind == "full") {
          arity(1);
          built = IntSet::full();
        } else {
          throw SyntaxError(line_no, "unknown generator '" + kind + "'");
        }
      } catch (const std::invalid_argument& e) {
        throw SyntaxError(line_no, e.what());
      }
      have_gen = true;
    } else if (op == "shift" || op == "dilate") {
      arity(op == "shift" ? 1 : 2);
      IntSet base = current();
      try {
        if (op == "shift") {
          built = translate(base, integer(tok[1]));
        } else {
          const BigInt m = integer(tok[1]);
          if (m < 1) throw SyntaxError(line_no, "dilation factor must be positive");
          built = dilate(base, m, integer(tok[2]));
        }
      } catch (const NegativeResult& e) {
        throw SyntaxError(line_no, e.what());
      }
      transformed = true;
    } else {
      throw SyntaxError(line_no, "unknown directive '" + op + "'");
    }
  }
  return current();
}

std::string serialize_set(const IntSet& s) {
  std::ostringstream out;
  auto emit_run = [&](const Run& r) { out << "run " << r.start() << ' ' << r.len() << '\n'; };
  std::visit(Overloaded{
                 [&](const ExplicitWindow& w) {
                   if (!w.bits.empty()) for_each_run(s, w.base, w.window().last(), emit_run);
                 },
                 [&](const RunList& r) {
                   for (const auto& run : r.runs()) emit_run(run);
                 },
                 [&](const Generator& g) {
                   std::visit(Overloaded{
                                  [&](const PowRuns& p) { out << "gen pow_runs " << p.base << '\n'; },
                                  [&](const PolyRuns& p) { out << "gen poly_runs " << p.exponent << '\n'; },
                                  [&](const Congruence& c) {
                                    out << "gen congruence " << c.modulus << ' ' << c.residue << '\n';
                                  },
                                  [&](const Full&) { out << "gen full\n"; },
                              },
                              g.kind);
                   if (g.shift != 0) out << "shift " << g.shift << '\n';
                 },
                 [&](const Dilation& d) {
                   out << serialize_set(*d.inner);
                   out << "dilate " << d.factor << ' ' << d.offset << '\n';
                 },
             },
             s.rep());
  return out.str();
}

}  // namespace banach
