#include "banach/construct.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "banach/density.hpp"
#include "banach/errors.hpp"

namespace banach {

namespace {

void check_budget(const BigInt& value, const SearchLimits& limits) {
  if (decimal_digits(value) > limits.digit_budget) {
    throw BudgetExceeded("b-sequence values exceed " + std::to_string(limits.digit_budget) + " digits");
  }
}

std::optional<Run> search(const IntSet& a, const BigInt& len, const BigInt& lower, const SearchLimits& limits,
                          std::size_t step) {
  try {
    return next_run(a, len, lower, limits);
  } catch (const HorizonExceeded& e) {
    throw NoSuitableRun("step " + std::to_string(step) + ": " + e.what());
  }
}

// Element-wise sumset of explicit element lists; the independent route for
// small instances.
std::set<BigInt> elementwise_sum(const std::vector<std::vector<BigInt>>& parts) {
  std::set<BigInt> acc{0};
  for (const auto& part : parts) {
    std::set<BigInt> next;
    for (const auto& s : acc) {
      for (const auto& x : part) next.insert(s + x);
    }
    acc = std::move(next);
  }
  return acc;
}

std::vector<BigInt> elements_of(const Run& r) {
  std::vector<BigInt> out;
  for (BigInt x = r.start(); x <= r.end(); ++x) out.push_back(x);
  return out;
}

Verdict brute_verdict(const std::set<BigInt>& sums, const IntSet& a) {
  Verdict v;
  v.checked = 1;
  if (sums.empty()) return v;
  v.evaluable = Interval{*sums.begin(), *sums.rbegin()};
  for (const auto& x : sums) {
    if (!membership(a, x)) {
      v.status = Status::Fail;
      v.witness = x;
      break;
    }
  }
  return v;
}

bool runlists_meet(const RunList& x, const RunList& y) {
  const auto& a = x.runs();
  const auto& b = y.runs();
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].end() < b[j].start()) {
      ++i;
    } else if (b[j].end() < a[i].start()) {
      ++j;
    } else {
      return true;
    }
  }
  return false;
}

}  // namespace

BSequence build_b_sequence(const IntSet& a, std::span<const std::uint64_t> ells, std::size_t k,
                           const SearchLimits& limits) {
  if (k < 1) throw PreconditionFailed("k must be positive");
  if (ells.size() < k) {
    throw PreconditionFailed("need " + std::to_string(k) + " interval lengths, got " + std::to_string(ells.size()));
  }
  if (std::find(ells.begin(), ells.begin() + k, 0) != ells.begin() + k) {
    throw PreconditionFailed("interval lengths must be positive");
  }

  BSequence seq;
  seq.ells.assign(ells.begin(), ells.begin() + k);
  BigInt prefix = 0;  // sum_{j<=n} (b_j + ell_j)
  for (std::size_t n = 0; n < k; ++n) {
    const BigInt lower = n == 0 ? BigInt(1) : seq.bs.back() + seq.ells[n - 1];
    const BigInt need = n == 0 ? BigInt(seq.ells[0]) : seq.ells[n] + prefix;
    check_budget(need, limits);
    auto found = search(a, need, lower, limits, n + 1);
    if (!found) {
      throw NoSuitableRun("step " + std::to_string(n + 1) + ": the set has no run of length " + need.str() +
                          " at or after " + lower.str());
    }
    check_budget(found->start(), limits);
    seq.bs.push_back(found->start());
    seq.certificates.push_back(*found);
    prefix += found->start() + seq.ells[n];
  }
  return seq;
}

Verdict verify_b_sequence(const BSequence& seq, const IntSet& a, std::size_t k_limit, std::size_t brute_span) {
  if (k_limit < 1 || k_limit > seq.size()) {
    throw PreconditionFailed("k_limit must lie in [1, " + std::to_string(seq.size()) + "]");
  }
  if (k_limit > kMaxEnumeratedIndices) {
    throw BudgetExceeded("subset verification is limited to k <= " + std::to_string(kMaxEnumeratedIndices));
  }
  Verdict total;
  std::vector<Run> runs;
  // Masks in increasing order reproduce enumerate_subsets(k_limit) exactly.
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k_limit); ++mask) {
    const SubsetIndex subset = SubsetIndex::from_mask(mask);
    runs.clear();
    for (auto j : subset.members()) runs.push_back(seq.interval(j));
    const Run sum = run_sum(runs);

    Verdict part = verify_containment(sum, a);
    if (sum.len() <= brute_span) {
      std::vector<std::vector<BigInt>> parts;
      for (const auto& r : runs) parts.push_back(elements_of(r));
      Verdict brute = brute_verdict(elementwise_sum(parts), a);
      brute.checked = 0;
      absorb(part, brute);
    }
    part.subset = subset;
    absorb(total, part);
  }
  return total;
}

BFamily build_family(const BSequence& seq, PartitionScheme scheme, std::size_t k_sets) {
  const std::size_t k = seq.size();
  if (k_sets < 1 || k_sets > k) {
    throw PreconditionFailed("k_sets must lie in [1, " + std::to_string(k) + "]");
  }
  BFamily fam;
  fam.k_sets = k_sets;
  fam.index_sets.resize(k_sets);
  if (scheme == PartitionScheme::Residue) {
    for (std::uint32_t j = 1; j <= k; ++j) fam.index_sets[(j - 1) % k_sets].push_back(j);
  } else {
    const std::size_t base = k / k_sets;
    const std::size_t extra = k % k_sets;
    std::uint32_t j = 1;
    for (std::size_t i = 0; i < k_sets; ++i) {
      const std::size_t size = base + (i < extra ? 1 : 0);
      for (std::size_t c = 0; c < size; ++c) fam.index_sets[i].push_back(j++);
    }
  }
  for (const auto& xs : fam.index_sets) {
    std::vector<Run> runs;
    for (auto j : xs) runs.push_back(seq.interval(j));
    fam.sets.emplace_back(std::move(runs));
  }
  fam.source = seq;
  return fam;
}

Verdict verify_family(const BFamily& fam, const IntSet& a, std::size_t brute_span) {
  const std::size_t k = fam.k_sets;
  if (k < 1 || k > 20) throw PreconditionFailed("verify_family handles 1 <= k_sets <= 20");
  if (fam.sets.size() != k || fam.index_sets.size() != k) {
    throw PreconditionFailed("family holds " + std::to_string(fam.sets.size()) + " sets, expected " +
                             std::to_string(k));
  }
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = x + 1; y < k; ++y) {
      if (runlists_meet(fam.sets[x], fam.sets[y])) {
        throw DisjointnessViolation("B_" + std::to_string(x + 1) + " and B_" + std::to_string(y + 1) + " intersect");
      }
    }
  }

  Verdict total;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    const SubsetIndex subset = SubsetIndex::from_mask(mask);
    const auto& members = subset.members();
    Verdict part;

    // One interval from each selected B_i; the j indices are distinct
    // because the X_i are disjoint, so each tuple is a b-sequence sum.
    std::vector<std::size_t> pick(members.size(), 0);
    std::vector<Run> runs;
    bool empty_factor = false;
    for (auto i : members) empty_factor = empty_factor || fam.index_sets[i - 1].empty();
    while (!empty_factor) {
      runs.clear();
      for (std::size_t s = 0; s < members.size(); ++s) {
        runs.push_back(fam.source.interval(fam.index_sets[members[s] - 1][pick[s]]));
      }
      absorb(part, verify_containment(run_sum(runs), a));
      std::size_t s = 0;
      for (; s < members.size(); ++s) {
        if (++pick[s] < fam.index_sets[members[s] - 1].size()) break;
        pick[s] = 0;
      }
      if (s == members.size()) break;
    }

    BigInt tuples = 1;
    for (auto i : members) tuples *= fam.sets[i - 1].cardinality();
    if (tuples <= brute_span) {
      std::vector<std::vector<BigInt>> parts;
      for (auto i : members) {
        std::vector<BigInt> elems;
        for (const auto& r : fam.sets[i - 1].runs()) {
          auto e = elements_of(r);
          elems.insert(elems.end(), e.begin(), e.end());
        }
        parts.push_back(std::move(elems));
      }
      Verdict brute = brute_verdict(elementwise_sum(parts), a);
      brute.checked = 0;
      absorb(part, brute);
    }
    part.subset = subset;
    absorb(total, part);
  }
  return total;
}

APReduction ap_reduce(const ExplicitWindow& w, std::size_t m0) {
  if (m0 < 1) throw PreconditionFailed("m0 must be positive");
  const std::size_t n = w.length();
  if (n == 0) throw BadLength("empty window");

  APReduction best;
  std::vector<std::size_t> best_per_residue;
  std::vector<std::uint32_t> len(n);
  for (std::size_t m = 1; m <= m0; ++m) {
    const std::size_t base_mod = mod_floor(w.base, m).convert_to<std::size_t>();
    std::vector<std::size_t> per_residue(m, 0);
    std::size_t longest = 0;
    for (std::size_t x = 0; x < n; ++x) {
      if (!w.bits.test(x)) {
        len[x] = 0;
        continue;
      }
      len[x] = (x >= m && w.bits.test(x - m)) ? len[x - m] + 1 : 1;
      auto& slot = per_residue[(base_mod + x) % m];
      slot = std::max<std::size_t>(slot, len[x]);
      longest = std::max<std::size_t>(longest, len[x]);
    }
    if (m == 1 || longest > best.evidence_len) {
      best.m = m;
      best.evidence_len = longest;
      best_per_residue = std::move(per_residue);
    }
  }
  const auto it = std::find(best_per_residue.begin(), best_per_residue.end(), best.evidence_len);
  best.r = static_cast<std::uint64_t>(it - best_per_residue.begin());

  const BigInt m(best.m);
  const BigInt r(best.r);
  const BigInt lo = std::max(ceil_div(w.base - r, m), BigInt(0));
  const BigInt hi = floor_div(w.base + n - 1 - r, m);
  best.derived.base = lo;
  if (hi >= lo) {
    best.derived.bits.resize(to_size(hi - lo + 1));
    for (BigInt y = lo; y <= hi; ++y) {
      if (w.test(m * y + r)) best.derived.bits.set(to_size(y - lo));
    }
  }
  best.derived_longest_run = longest_run(best.derived);
  return best;
}

std::uint64_t escape_i0(const BigInt& t) {
  if (t < 0) throw PreconditionFailed("t must be non-negative");
  // 4^i - i > t forces 4^i > t, i.e. 2i > msb(t).
  std::uint64_t i = t == 0 ? 1 : msb(t) / 2 + 1;
  BigInt power = pow(BigInt(4), i);
  while (power - i <= t) {
    ++i;
    power *= 4;
  }
  return i;
}

EscapeReport verify_escape(const BigInt& t, std::uint64_t i_max) {
  EscapeReport report;
  report.t = t;
  report.i0 = escape_i0(t);
  report.i_max = i_max;
  if (i_max < report.i0) {
    throw PreconditionFailed("i_max = " + std::to_string(i_max) + " is below i0(" + t.str() +
                             ") = " + std::to_string(report.i0));
  }
  const IntSet a = IntSet::pow_runs(4);
  report.all_escaped = true;
  for (std::uint64_t i = report.i0; i <= i_max; ++i) {
    const BigInt p = pow(BigInt(4), i);
    const BigInt next = p * 4;
    EscapeStep step{i, true, true};
    for (BigInt b = p; b <= p + i - 1; ++b) {
      const BigInt twice = 2 * b;
      step.chain = step.chain && (p + i + t < 2 * p) && (2 * p <= twice) && (twice < 2 * p + 2 * i) &&
                   (2 * p + 2 * i < next - 2 * t) && (next - 2 * t <= next - t);
      step.escaped = step.escaped && !membership(a, twice - t) && !membership(a, twice + t);
    }
    report.all_escaped = report.all_escaped && step.chain && step.escaped;
    report.steps.push_back(step);
  }
  return report;
}

}  // namespace banach
