#include "banach/sumset.hpp"

#include <algorithm>
#include <string>

#include "banach/errors.hpp"

namespace banach {

SubsetIndex::SubsetIndex(std::vector<std::uint32_t> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (members_.empty()) throw EmptySelection("index sets must be nonempty");
  if (members_.front() < 1) throw PreconditionFailed("indices start at 1");
}

SubsetIndex SubsetIndex::from_mask(std::uint64_t mask) {
  std::vector<std::uint32_t> members;
  for (std::uint32_t j = 1; mask != 0; ++j, mask >>= 1) {
    if (mask & 1U) members.push_back(j);
  }
  return SubsetIndex(std::move(members));
}

std::uint64_t SubsetIndex::mask() const {
  std::uint64_t m = 0;
  for (auto j : members_) m |= std::uint64_t{1} << (j - 1);
  return m;
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "Pass";
    case Status::Fail:
      return "Fail";
    case Status::PartialWindow:
      return "PartialWindow";
  }
  return "?";
}

void absorb(Verdict& acc, const Verdict& part) {
  acc.checked += part.checked;
  if (part.evaluable) {
    if (!acc.evaluable) {
      acc.evaluable = part.evaluable;
    } else {
      acc.evaluable->first = std::min(acc.evaluable->first, part.evaluable->first);
      acc.evaluable->second = std::max(acc.evaluable->second, part.evaluable->second);
    }
  }
  if (part.status == Status::Fail) {
    if (acc.status != Status::Fail || *part.witness < *acc.witness) {
      acc.status = Status::Fail;
      acc.witness = part.witness;
      acc.subset = part.subset;
    }
  } else if (part.status == Status::PartialWindow && acc.status == Status::Pass) {
    acc.status = Status::PartialWindow;
  }
}

SumsetWindow pairwise_sumset(const ExplicitWindow& b, const ExplicitWindow& c, const BigInt& cap) {
  const BigInt base = b.base + c.base;
  SumsetWindow out;
  out.sums.base = base;
  if (b.length() == 0 || c.length() == 0 || cap < base) {
    out.truncated = b.bits.any() && c.bits.any() && cap < base;
    return out;
  }
  const BigInt full = BigInt(b.length()) + c.length() - 1;
  const std::size_t len = to_size(std::min(full, cap - base + 1));
  out.sums.bits.resize(len);

  boost::dynamic_bitset<> shifted = c.bits;
  shifted.resize(len);
  for (auto k = b.bits.find_first(); k != boost::dynamic_bitset<>::npos && k < len; k = b.bits.find_next(k)) {
    out.sums.bits |= shifted << k;
  }
  // Truncation happened iff the largest true sum lies beyond the stored range.
  std::size_t max_b = 0, max_c = 0;
  for (auto k = b.bits.find_first(); k != boost::dynamic_bitset<>::npos; k = b.bits.find_next(k)) max_b = k;
  for (auto k = c.bits.find_first(); k != boost::dynamic_bitset<>::npos; k = c.bits.find_next(k)) max_c = k;
  out.truncated = b.bits.any() && c.bits.any() && max_b + max_c >= len;
  return out;
}

SumsetWindow family_sumset(std::span<const ExplicitWindow> family, const std::vector<std::uint32_t>& selection,
                           const BigInt& cap) {
  if (selection.empty()) throw EmptySelection("the selection of summands is empty");
  for (auto i : selection) {
    if (i < 1 || i > family.size()) {
      throw PreconditionFailed("summand index " + std::to_string(i) + " outside [1, " +
                               std::to_string(family.size()) + "]");
    }
  }
  SumsetWindow acc{family[selection.front() - 1], false};
  for (std::size_t k = 1; k < selection.size(); ++k) {
    SumsetWindow next = pairwise_sumset(acc.sums, family[selection[k] - 1], cap);
    next.truncated = next.truncated || acc.truncated;
    acc = std::move(next);
  }
  return acc;
}

Run run_sum(std::span<const Run> runs) {
  if (runs.empty()) throw EmptySelection("run_sum of an empty list");
  BigInt start = 0;
  BigInt len = 1;
  for (const auto& r : runs) {
    start += r.start();
    len += r.len() - 1;
  }
  return Run(std::move(start), std::move(len));
}

std::vector<SubsetIndex> enumerate_subsets(std::size_t k) {
  if (k > kMaxEnumeratedIndices) {
    throw BudgetExceeded("subset enumeration is limited to k <= " + std::to_string(kMaxEnumeratedIndices));
  }
  std::vector<SubsetIndex> out;
  out.reserve((std::size_t{1} << k) - 1);
  for (std::uint32_t next = 1; next <= k; ++next) {
    const std::size_t previous = out.size();
    out.emplace_back(std::vector<std::uint32_t>{next});
    for (std::size_t j = 0; j < previous; ++j) {
      std::vector<std::uint32_t> members = out[j].members();
      members.push_back(next);
      out.emplace_back(std::move(members));
    }
  }
  return out;
}

namespace {

std::optional<Interval> intersect(const Interval& a, const std::optional<Interval>& b) {
  if (!b) return a;
  Interval out{std::max(a.first, b->first), std::min(a.second, b->second)};
  if (out.first > out.second) return std::nullopt;
  return out;
}

}  // namespace

Verdict verify_containment(const Run& s, const IntSet& a, const std::optional<Interval>& range) {
  Verdict v;
  v.checked = 1;
  const auto wanted = intersect({s.start(), s.end()}, range);
  if (!wanted) return v;
  const auto eval = intersect(*wanted, decidable_range(a));
  if (!eval || *eval != *wanted) v.status = Status::PartialWindow;
  if (!eval) return v;
  v.evaluable = eval;

  BigInt x = eval->first;
  while (x <= eval->second) {
    const auto span = span_at(a, x);
    if (!span) {
      v.status = Status::Fail;
      v.witness = x;
      return v;
    }
    if (!span->end) break;
    x = *span->end + 1;
  }
  return v;
}

Verdict verify_containment(const ExplicitWindow& s, const IntSet& a, const std::optional<Interval>& range) {
  Verdict v;
  v.checked = 1;
  if (s.length() == 0) return v;
  const auto wanted = intersect({s.base, s.window().last()}, range);
  if (!wanted) return v;
  const auto decidable = decidable_range(a);
  const auto eval = intersect(*wanted, decidable);
  v.evaluable = eval;

  const std::size_t from = to_size(wanted->first - s.base);
  const std::size_t to = to_size(wanted->second - s.base);
  for (auto k = from == 0 ? s.bits.find_first() : s.bits.find_next(from - 1);
       k != boost::dynamic_bitset<>::npos && k <= to; k = s.bits.find_next(k)) {
    const BigInt x = s.base + k;
    if (!eval || x < eval->first || x > eval->second) {
      v.status = Status::PartialWindow;
      continue;
    }
    if (!membership(a, x)) {
      v.status = Status::Fail;
      v.witness = x;
      return v;
    }
  }
  return v;
}

}  // namespace banach
