#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include "banach/intset.hpp"

namespace banach {

/// Ratios of counts to lengths inside one window; both fit a machine word.
using Ratio = boost::rational<std::int64_t>;
using BigRational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

/// f[n] = max over intervals [u, u+n-1] inside the window of |A ∩ [u, u+n-1]|,
/// for n = 1..N, with f[0] = 0.
class WindowProfile {
 public:
  WindowProfile(Window window, std::vector<std::size_t> counts_from_one);

  const Window& window() const noexcept { return window_; }
  std::size_t max_length() const noexcept { return f_.size() - 1; }
  /// f(n) for 0 <= n <= max_length().
  std::size_t operator[](std::size_t n) const { return f_[n]; }
  /// f(1), ..., f(N).
  std::vector<std::size_t> counts() const { return {f_.begin() + 1, f_.end()}; }

 private:
  Window window_;
  std::vector<std::size_t> f_;
};

struct DensityEstimate {
  Ratio value;
  std::size_t argmin = 0;
  /// Always true for windowed input: the minimum only bounds the density of
  /// the part of the set seen through the window.
  bool window_relative = true;
};

struct SubadditivityViolation {
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  std::size_t excess = 0;
  friend bool operator==(const SubadditivityViolation&, const SubadditivityViolation&) = default;
};

struct RunBoundReport {
  std::size_t d = 0;
  std::size_t checked = 0;
  /// Lengths n with f(n) >= (1 - 1/d) n + 1.
  std::vector<std::size_t> failures;
  bool passed() const { return failures.empty(); }
};

/// Direct scan for a single n: slides a length-n counter across the window.
std::size_t f_naive(const ExplicitWindow& w, std::size_t n);

/// All of f(1..N) from one prefix-sum table.
WindowProfile f_profile(const ExplicitWindow& w);

/// min over n of f(n)/n, smallest n on ties.
DensityEstimate density_estimate(const WindowProfile& p);

/// Every pair n1 <= n2 with n1 + n2 <= N and f(n1+n2) > f(n1) + f(n2).
std::vector<SubadditivityViolation> check_subadditivity(const WindowProfile& p);

/// f(qd + r) <= q f(d) + f(r) for all q >= 1, 0 <= r < d, qd + r <= N.
bool fekete_qd_check(const WindowProfile& p, std::size_t d);

std::size_t longest_run(const ExplicitWindow& w);

/// Checks f(n) < (1 - 1/d) n + 1 for every n in the window. Requires that the
/// window holds no run of length d.
RunBoundReport check_run_bound(const ExplicitWindow& w, std::size_t d);

/// Density forced by the structure of a generator: 1 for pow_runs, poly_runs
/// and full, 1/m for a congruence class. nullopt for every other set.
std::optional<BigRational> forced_density(const IntSet& s);

}  // namespace banach
