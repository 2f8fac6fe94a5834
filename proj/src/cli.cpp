#include "banach/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "banach/construct.hpp"
#include "banach/density.hpp"
#include "banach/intset.hpp"
#include "banach/report.hpp"

namespace banach::cli {

namespace {

const std::vector<std::string> kSetCommands = {"profile", "runs", "construct-b", "family", "verify", "ap-reduce", "gen"};

BigInt parse_int_flag(const std::string& flag, const std::string& text) {
  try {
    return parse_bigint(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(flag + ": expected an integer, got '" + text + "'");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

IntSet load_set(const Command& cmd) {
  if (cmd.set_file) return parse_set(read_file(*cmd.set_file));
  std::string text = *cmd.set_text;
  std::replace(text.begin(), text.end(), ';', '\n');
  return parse_set(text);
}

Window command_window(const Command& cmd) { return Window(cmd.window_base, cmd.window_length); }

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

PartitionScheme scheme_of(const std::string& name) {
  return name == "blocks" ? PartitionScheme::Blocks : PartitionScheme::Residue;
}

}  // namespace

std::vector<std::uint64_t> expand_ells(const std::string& text, std::size_t k) {
  std::vector<std::uint64_t> out;
  if (text == "j") {
    for (std::size_t j = 1; j <= k; ++j) out.push_back(j);
    return out;
  }
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    const BigInt v = parse_int_flag("--ells", item);
    if (v < 1 || v > std::numeric_limits<std::uint32_t>::max()) {
      throw UsageError("--ells: lengths must lie in [1, 2^32), got '" + item + "'");
    }
    out.push_back(v.convert_to<std::uint64_t>());
  }
  if (out.size() == 1) out.assign(k, out.front());
  if (out.size() < k) {
    throw UsageError("--ells: need at least " + std::to_string(k) + " lengths, got " + std::to_string(out.size()));
  }
  out.resize(k);
  return out;
}

Command parse_args(const std::vector<std::string>& args, std::string* help) {
  Command cmd;
  CLI::App app{"Upper Banach density and sumset constructions", "banach"};
  app.require_subcommand(1);

  std::string set_text, set_file, window, t_text, from_text = "0", min_len_text, input;
  std::size_t d = 0;
  std::uint64_t i_max = 0;

  auto add_set = [&](CLI::App* sub) {
    sub->add_option("--set", set_text, "Inline set description (';' separates directives)");
    sub->add_option("--set-file", set_file, "Path to a set-description file");
  };
  auto add_window = [&](CLI::App* sub) {
    sub->add_option("--window", window, "Evaluation window base:length (default 0:4096)");
  };
  auto add_construction = [&](CLI::App* sub) {
    sub->add_option("--ells", cmd.ells, "Interval lengths: j, a constant, or a comma list");
    sub->add_option("--k", cmd.k, "Number of b-sequence terms")->check(CLI::Range(1, 4096));
    sub->add_option("--digit-budget", cmd.digit_budget, "Largest allowed decimal size of b_j")
        ->check(CLI::PositiveNumber);
  };

  auto* profile = app.add_subcommand("profile", "Window profile f(n) and density estimate");
  add_set(profile);
  add_window(profile);
  profile->add_option("--format", cmd.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* runs = app.add_subcommand("runs", "Longest run, next run, and the run-length density bound");
  add_set(runs);
  add_window(runs);
  runs->add_option("--min-len", min_len_text, "Find the next run of at least this length");
  runs->add_option("--from", from_text, "Lower bound for --min-len searches");
  runs->add_option("--d", d, "Check f(n) < (1 - 1/d) n + 1")->check(CLI::PositiveNumber);
  runs->add_option("--digit-budget", cmd.digit_budget, "Largest allowed decimal size")->check(CLI::PositiveNumber);

  auto* construct = app.add_subcommand("construct-b", "Greedy b-sequence inside a set");
  add_set(construct);
  add_construction(construct);

  auto* family = app.add_subcommand("family", "Disjoint family B_i built from a b-sequence, then verified");
  add_set(family);
  add_construction(family);
  family->add_option("--input", input, "Read the b-sequence from this JSON file instead of building it");
  family->add_option("--k-sets", cmd.k_sets, "Number of sets B_i")->check(CLI::Range(1, 20));
  family->add_option("--scheme", cmd.scheme, "residue or blocks")->check(CLI::IsMember({"residue", "blocks"}));
  family->add_option("--brute-span", cmd.brute_span, "Element-wise check limit");

  auto* verify = app.add_subcommand("verify", "Verify a b-sequence JSON file against a set");
  add_set(verify);
  verify->add_option("--input", input, "b-sequence JSON file")->required();
  verify->add_option("--k", cmd.k, "Check subsets of [1, k] (capped at the sequence length)")
      ->check(CLI::Range(1, 24));
  verify->add_option("--brute-span", cmd.brute_span, "Element-wise check limit");

  auto* ap = app.add_subcommand("ap-reduce", "Reduce a windowed set along its longest progression");
  add_set(ap);
  add_window(ap);
  ap->add_option("--m0", cmd.m0, "Largest difference considered")->check(CLI::Range(1, 1 << 16));

  auto* escape = app.add_subcommand("escape", "Doubling analysis of the runs [4^i, 4^i + i - 1]");
  escape->add_option("--t", t_text, "Translation t >= 0")->required();
  escape->add_option("--i-max", i_max, "Largest run index checked")->required()->check(CLI::PositiveNumber);

  auto* gen = app.add_subcommand("gen", "Print a set description in canonical form");
  add_set(gen);
  add_window(gen);

  std::vector<const char*> argv{"banach"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    if (help) *help = app.help();
    cmd.subcommand = "help";
    return cmd;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  const CLI::App* chosen = app.get_subcommands().front();
  cmd.subcommand = chosen->get_name();
  const auto given = [chosen](const std::string& name) {
    const CLI::Option* opt = chosen->get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
  };

  const bool wants_set = std::find(kSetCommands.begin(), kSetCommands.end(), cmd.subcommand) != kSetCommands.end();
  const bool has_text = given("--set");
  const bool has_file = given("--set-file");
  if (wants_set) {
    if (has_text == has_file) throw UsageError("--set/--set-file: give exactly one set description");
    if (has_text) cmd.set_text = set_text;
    if (has_file) cmd.set_file = set_file;
  }
  if (!window.empty()) {
    const auto colon = window.find(':');
    if (colon == std::string::npos) throw UsageError("--window: expected base:length, got '" + window + "'");
    cmd.window_base = parse_int_flag("--window", window.substr(0, colon));
    const BigInt len = parse_int_flag("--window", window.substr(colon + 1));
    if (cmd.window_base < 0) throw UsageError("--window: base must be non-negative");
    if (len < 1 || len > (BigInt(1) << 32)) throw UsageError("--window: length must lie in [1, 2^32]");
    cmd.window_length = len.convert_to<std::size_t>();
    cmd.window_given = true;
  }
  if (given("--t")) {
    cmd.t = parse_int_flag("--t", t_text);
    if (*cmd.t < 0) throw UsageError("--t: must be non-negative");
  }
  if (given("--i-max")) cmd.i_max = i_max;
  if (given("--min-len")) {
    cmd.min_len = parse_int_flag("--min-len", min_len_text);
    if (*cmd.min_len < 1) throw UsageError("--min-len: must be positive");
  }
  if (given("--from")) cmd.from = parse_int_flag("--from", from_text);
  if (given("--d")) cmd.d = d;
  if (given("--input")) cmd.input = input;
  if (cmd.subcommand == "construct-b" || cmd.subcommand == "family") expand_ells(cmd.ells, cmd.k);
  return cmd;
}

int execute(const Command& cmd, std::ostream& out, std::ostream& err) {
  const std::string& sub = cmd.subcommand;
  SearchLimits limits{cmd.digit_budget};

  if (sub == "escape") {
    const EscapeReport rep = verify_escape(*cmd.t, *cmd.i_max);
    emit(out, to_json(rep));
    return rep.all_escaped ? kOk : kFailed;
  }

  const IntSet set = load_set(cmd);

  if (sub == "gen") {
    out << serialize_set(cmd.window_given ? IntSet(materialize(set, command_window(cmd))) : set);
    return kOk;
  }
  if (sub == "profile") {
    const WindowProfile p = f_profile(materialize(set, command_window(cmd)));
    if (cmd.format == "csv") {
      out << profile_csv(p);
    } else {
      emit(out, profile_json(p, density_estimate(p), forced_density(set)));
    }
    return kOk;
  }
  if (sub == "runs") {
    const ExplicitWindow w = materialize(set, command_window(cmd));
    Json j;
    j["window"] = to_json(w.window());
    j["longest_run"] = longest_run(w);
    if (cmd.min_len) {
      const auto found = next_run(set, *cmd.min_len, cmd.from, limits);
      j["next_run"] = found ? to_json(*found) : Json(nullptr);
    }
    if (cmd.d) j["run_bound"] = to_json(check_run_bound(w, *cmd.d));
    emit(out, j);
    return kOk;
  }
  if (sub == "construct-b") {
    const auto ells = expand_ells(cmd.ells, cmd.k);
    emit(out, to_json(build_b_sequence(set, ells, cmd.k, limits)));
    return kOk;
  }
  if (sub == "verify" || sub == "family") {
    BSequence seq;
    if (cmd.input) {
      try {
        seq = bsequence_from_json(nlohmann::json::parse(read_file(*cmd.input)));
      } catch (const nlohmann::json::parse_error& e) {
        throw UsageError(*cmd.input + ": " + e.what());
      }
    } else {
      seq = build_b_sequence(set, expand_ells(cmd.ells, cmd.k), cmd.k, limits);
    }
    if (seq.size() == 0) throw UsageError("the b-sequence is empty");

    if (sub == "verify") {
      const Verdict v = verify_b_sequence(seq, set, std::min(cmd.k, seq.size()), cmd.brute_span);
      emit(out, to_json(v));
      return v.status == Status::Fail ? kFailed : kOk;
    }
    const BFamily fam = build_family(seq, scheme_of(cmd.scheme), cmd.k_sets);
    Json j = to_json(fam);
    j["scheme"] = cmd.scheme;
    j["bsequence"] = to_json(seq);
    try {
      const Verdict v = verify_family(fam, set, cmd.brute_span);
      j["verdict"] = to_json(v);
      emit(out, j);
      return v.status == Status::Fail ? kFailed : kOk;
    } catch (const DisjointnessViolation& e) {
      j["verdict"] = Json{{"status", "DisjointnessViolation"}, {"message", e.what()}};
      emit(out, j);
      err << "error: " << e.what() << '\n';
      return kFailed;
    }
  }
  if (sub == "ap-reduce") {
    emit(out, to_json(ap_reduce(materialize(set, command_window(cmd)), cmd.m0)));
    return kOk;
  }
  throw UsageError("unknown subcommand '" + sub + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    std::string help;
    const Command cmd = parse_args(args, &help);
    if (cmd.subcommand == "help") {
      out << help;
      return kOk;
    }
    return execute(cmd, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const DisjointnessViolation& e) {
    err << "error: " << e.what() << '\n';
    return kFailed;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kResource;
  } catch (const HorizonExceeded& e) {
    err << "horizon exceeded: " << e.what() << '\n';
    return kResource;
  } catch (const NoSuitableRun& e) {
    err << "no suitable run: " << e.what() << '\n';
    return kResource;
  } catch (const Error& e) {
    // Syntax, overlap, precondition, and other input errors.
    err << "invalid input: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
    return kUsage;
  } catch (const std::overflow_error& e) {
    err << "too large: " << e.what() << '\n';
    return kResource;
  }
}

}  // namespace banach::cli
