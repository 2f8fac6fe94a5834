#include "banach/density.hpp"

#include <algorithm>
#include <string>

#include "banach/errors.hpp"

namespace banach {

WindowProfile::WindowProfile(Window window, std::vector<std::size_t> counts_from_one)
    : window_(std::move(window)) {
  f_.reserve(counts_from_one.size() + 1);
  f_.push_back(0);
  f_.insert(f_.end(), counts_from_one.begin(), counts_from_one.end());
}

std::size_t f_naive(const ExplicitWindow& w, std::size_t n) {
  const std::size_t len = w.length();
  if (n < 1 || n > len) {
    throw BadLength("interval length " + std::to_string(n) + " outside [1, " + std::to_string(len) + "]");
  }
  std::size_t count = 0;
  for (std::size_t k = 0; k < n; ++k) count += w.bits.test(k);
  std::size_t best = count;
  for (std::size_t u = 1; u + n <= len; ++u) {
    count += w.bits.test(u + n - 1);
    count -= w.bits.test(u - 1);
    best = std::max(best, count);
  }
  return best;
}

WindowProfile f_profile(const ExplicitWindow& w) {
  const std::size_t len = w.length();
  std::vector<std::size_t> prefix(len + 1, 0);
  for (std::size_t k = 0; k < len; ++k) prefix[k + 1] = prefix[k] + w.bits.test(k);

  std::vector<std::size_t> f(len, 0);
  for (std::size_t n = 1; n <= len; ++n) {
    std::size_t best = 0;
    for (std::size_t u = 0; u + n <= len; ++u) best = std::max(best, prefix[u + n] - prefix[u]);
    f[n - 1] = best;
  }
  return WindowProfile(w.window(), std::move(f));
}

DensityEstimate density_estimate(const WindowProfile& p) {
  if (p.max_length() == 0) throw BadLength("empty profile");
  DensityEstimate est{Ratio(static_cast<std::int64_t>(p[1]), 1), 1, true};
  for (std::size_t n = 2; n <= p.max_length(); ++n) {
    const Ratio r(static_cast<std::int64_t>(p[n]), static_cast<std::int64_t>(n));
    if (r < est.value) {
      est.value = r;
      est.argmin = n;
    }
  }
  return est;
}

std::vector<SubadditivityViolation> check_subadditivity(const WindowProfile& p) {
  std::vector<SubadditivityViolation> out;
  const std::size_t len = p.max_length();
  for (std::size_t n1 = 1; 2 * n1 <= len; ++n1) {
    for (std::size_t n2 = n1; n1 + n2 <= len; ++n2) {
      const std::size_t bound = p[n1] + p[n2];
      if (p[n1 + n2] > bound) out.push_back({n1, n2, p[n1 + n2] - bound});
    }
  }
  return out;
}

bool fekete_qd_check(const WindowProfile& p, std::size_t d) {
  const std::size_t len = p.max_length();
  if (d < 1 || d > len) throw BadLength("d must lie in [1, " + std::to_string(len) + "]");
  for (std::size_t q = 1; q * d <= len; ++q) {
    for (std::size_t r = 0; r < d && q * d + r <= len; ++r) {
      if (p[q * d + r] > q * p[d] + p[r]) return false;
    }
  }
  return true;
}

std::size_t longest_run(const ExplicitWindow& w) {
  std::size_t best = 0;
  std::size_t current = 0;
  for (std::size_t k = 0; k < w.length(); ++k) {
    current = w.bits.test(k) ? current + 1 : 0;
    best = std::max(best, current);
  }
  return best;
}

RunBoundReport check_run_bound(const ExplicitWindow& w, std::size_t d) {
  if (d < 1) throw PreconditionFailed("d must be positive");
  const std::size_t run = longest_run(w);
  if (run >= d) {
    throw PreconditionFailed("window contains a run of length " + std::to_string(run) +
                             ", not below d = " + std::to_string(d));
  }
  const WindowProfile profile = f_profile(w);
  RunBoundReport report{d, profile.max_length(), {}};
  const Ratio slope = Ratio(1) - Ratio(1, static_cast<std::int64_t>(d));
  for (std::size_t n = 1; n <= profile.max_length(); ++n) {
    const Ratio bound = slope * Ratio(static_cast<std::int64_t>(n)) + Ratio(1);
    if (!(Ratio(static_cast<std::int64_t>(profile[n])) < bound)) report.failures.push_back(n);
  }
  return report;
}

std::optional<BigRational> forced_density(const IntSet& s) {
  const auto* g = std::get_if<Generator>(&s.rep());
  if (g == nullptr) return std::nullopt;
  if (const auto* c = std::get_if<Congruence>(&g->kind)) return BigRational(BigInt(1), c->modulus);
  return BigRational(1);
}

}  // namespace banach
