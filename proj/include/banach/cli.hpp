#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "banach/bigint.hpp"
#include "banach/errors.hpp"

namespace banach::cli {

enum ExitCode : int { kOk = 0, kFailed = 1, kUsage = 2, kResource = 3 };

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Command {
  std::string subcommand;
  std::optional<std::string> set_text;
  std::optional<std::string> set_file;
  BigInt window_base = 0;
  std::size_t window_length = 4096;
  std::string ells = "j";
  std::size_t k = 8;
  std::size_t k_sets = 2;
  std::string scheme = "residue";
  std::size_t m0 = 10;
  std::optional<BigInt> t;
  std::optional<std::uint64_t> i_max;
  std::string format = "json";
  std::size_t digit_budget = 100000;
  std::size_t brute_span = 10000;
  std::optional<std::string> input;
  std::optional<BigInt> min_len;
  BigInt from = 0;
  std::optional<std::size_t> d;
  bool window_given = false;
};

/// argv excludes the program name. Throws UsageError naming the bad flag.
/// `--help` is reported through the returned help text instead.
Command parse_args(const std::vector<std::string>& args, std::string* help = nullptr);

/// Runs a validated command; the report goes to `out`, diagnostics to `err`.
int execute(const Command& cmd, std::ostream& out, std::ostream& err);

/// parse_args + execute with every error mapped onto an exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Interval lengths for k steps: "j" (ell_j = j), a single integer (constant),
/// or a comma-separated list with at least k entries.
std::vector<std::uint64_t> expand_ells(const std::string& text, std::size_t k);

}  // namespace banach::cli
