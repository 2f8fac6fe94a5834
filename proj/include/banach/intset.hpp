#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "banach/bigint.hpp"

namespace banach {

/// Default cap on the decimal size of integers produced while searching
/// generator runs.
inline constexpr std::size_t kDefaultDigitBudget = 100000;

/// The closed interval of integers [start, start + len - 1], len >= 1.
class Run {
 public:
  Run(BigInt start, BigInt len);

  const BigInt& start() const noexcept { return start_; }
  const BigInt& len() const noexcept { return len_; }
  BigInt end() const { return start_ + len_ - 1; }
  bool contains(const BigInt& x) const { return start_ <= x && x <= end(); }

  friend bool operator==(const Run&, const Run&) = default;

 private:
  BigInt start_;
  BigInt len_;
};

/// Finite evaluation region [base, base + length - 1].
struct Window {
  BigInt base;
  std::size_t length = 0;

  Window(BigInt base_, std::size_t length_);
  BigInt last() const { return base + length - 1; }

  friend bool operator==(const Window&, const Window&) = default;
};

/// Bitmap over a window. bits[k] is set iff base + k is a member. Outside the
/// window the set is unknown, not empty: searches that leave the window fail
/// with HorizonExceeded and containment checks report a partial verdict.
struct ExplicitWindow {
  BigInt base;
  boost::dynamic_bitset<> bits;

  ExplicitWindow() = default;
  ExplicitWindow(BigInt base_, boost::dynamic_bitset<> bits_)
      : base(std::move(base_)), bits(std::move(bits_)) {}
  /// Empty bitmap over the given window.
  explicit ExplicitWindow(const Window& w) : base(w.base), bits(w.length) {}

  std::size_t length() const noexcept { return bits.size(); }
  Window window() const { return Window(base, bits.size()); }
  bool test(const BigInt& x) const;
  void set(const BigInt& x);

  friend bool operator==(const ExplicitWindow&, const ExplicitWindow&) = default;
};

/// Finite set stored as sorted, disjoint, non-adjacent runs.
class RunList {
 public:
  RunList() = default;
  /// Sorts and merges adjacent runs; throws OverlapError on intersection.
  explicit RunList(std::vector<Run> runs);

  const std::vector<Run>& runs() const noexcept { return runs_; }
  bool empty() const noexcept { return runs_.empty(); }
  /// Total number of elements.
  BigInt cardinality() const;

  friend bool operator==(const RunList&, const RunList&) = default;

 private:
  std::vector<Run> runs_;
};

/// Run i (i >= 1) is [c^i, c^i + i - 1].
struct PowRuns {
  std::uint64_t base = 4;
  friend bool operator==(const PowRuns&, const PowRuns&) = default;
};

/// Run i (i >= 1) is [i^p, i^p + i - 1].
struct PolyRuns {
  unsigned exponent = 2;
  friend bool operator==(const PolyRuns&, const PolyRuns&) = default;
};

/// All x >= 1 with x = residue (mod modulus).
struct Congruence {
  BigInt modulus = 1;
  BigInt residue = 0;
  friend bool operator==(const Congruence&, const Congruence&) = default;
};

/// All positive integers.
struct Full {
  friend bool operator==(const Full&, const Full&) = default;
};

using GeneratorKind = std::variant<PowRuns, PolyRuns, Congruence, Full>;

/// Symbolic infinite set, translated by `shift`.
struct Generator {
  GeneratorKind kind;
  BigInt shift = 0;
  friend bool operator==(const Generator&, const Generator&) = default;
};

class IntSet;

/// {factor * s + offset : s in inner} with factor >= 2, kept symbolic because
/// the inner set may be infinite.
struct Dilation {
  std::shared_ptr<const IntSet> inner;
  BigInt factor;
  BigInt offset;
  friend bool operator==(const Dilation& a, const Dilation& b);
};

/// Immutable set of non-negative integers.
class IntSet {
 public:
  using Rep = std::variant<ExplicitWindow, RunList, Generator, Dilation>;

  IntSet() : rep_(RunList{}) {}
  IntSet(ExplicitWindow w) : rep_(std::move(w)) {}
  IntSet(RunList r) : rep_(std::move(r)) {}
  IntSet(Generator g);
  IntSet(Dilation d) : rep_(std::move(d)) {}

  static IntSet pow_runs(std::uint64_t base);
  static IntSet poly_runs(unsigned exponent);
  static IntSet congruence(BigInt modulus, BigInt residue);
  static IntSet full();
  static IntSet from_elements(const std::vector<BigInt>& elements);

  const Rep& rep() const noexcept { return rep_; }
  bool is_finite() const;
  bool is_generator() const { return std::holds_alternative<Generator>(rep_); }

  friend bool operator==(const IntSet&, const IntSet&) = default;

 private:
  Rep rep_;
};

/// Maximal block of consecutive members; `end` is empty when unbounded.
struct Span {
  BigInt start;
  std::optional<BigInt> end;
};

struct SearchLimits {
  std::size_t digit_budget = kDefaultDigitBudget;
};

bool membership(const IntSet& s, const BigInt& x);

/// X + t. Throws NegativeResult if some element would become negative.
IntSet translate(const IntSet& s, const BigInt& t);

/// {m * s + r : s in S}. m = 1 is a translation; finite sets are expanded
/// element-wise, infinite ones are wrapped in a Dilation.
IntSet dilate(const IntSet& s, const BigInt& m, const BigInt& r);

/// Smallest b >= lower_bound with [b, b + min_len - 1] contained in S.
/// Returns nullopt when S provably has no such block. Finite representations
/// throw HorizonExceeded when their stored range is exhausted.
std::optional<Run> next_run(const IntSet& s, const BigInt& min_len, const BigInt& lower_bound,
                            const SearchLimits& limits = {});

/// Exact bitmap of S restricted to w.
ExplicitWindow materialize(const IntSet& s, const Window& w);

/// Visits the runs of S clipped to [lo, hi], in increasing order.
void for_each_run(const IntSet& s, const BigInt& lo, const BigInt& hi,
                  const std::function<void(const Run&)>& visit);

/// Maximal run of S containing x, or nullopt when x is not a member. For an
/// ExplicitWindow the span is clipped to the window.
std::optional<Span> span_at(const IntSet& s, const BigInt& x);

/// Smallest element, nullopt for the empty set.
std::optional<BigInt> min_element(const IntSet& s);

/// The range on which membership is known. nullopt means everywhere.
std::optional<std::pair<BigInt, BigInt>> decidable_range(const IntSet& s);

/// Set-description text. Directives, one per line, '#' starts a comment:
///   run <start> <len> | elem <x> | gen pow_runs <c> | gen poly_runs <p>
///   gen congruence <m> <r> | gen full | shift <t> | dilate <m> <r>
/// shift and dilate apply to everything described above them.
IntSet parse_set(std::string_view text);
std::string serialize_set(const IntSet& s);

}  // namespace banach
