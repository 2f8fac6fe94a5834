#include "banach/report.hpp"

#include <sstream>
#include <stdexcept>

namespace banach {

namespace {

std::string dec(const BigInt& x) { return to_decimal(x); }

Json interval_json(const std::optional<Interval>& iv) {
  if (!iv) return nullptr;
  return Json::array({dec(iv->first), dec(iv->second)});
}

BigInt bigint_field(const nlohmann::json& j) {
  if (j.is_string()) return parse_bigint(j.get<std::string>());
  if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  throw std::invalid_argument("expected a decimal string or an integer");
}

}  // namespace

Json to_json(const Run& r) { return Json{{"start", dec(r.start())}, {"len", dec(r.len())}}; }

Json to_json(const Window& w) { return Json{{"base", dec(w.base)}, {"length", w.length}}; }

Json to_json(const Verdict& v) {
  Json j;
  j["status"] = std::string(to_string(v.status));
  j["witness"] = v.witness ? Json(dec(*v.witness)) : Json(nullptr);
  j["evaluable"] = interval_json(v.evaluable);
  j["subset"] = v.subset ? Json(v.subset->members()) : Json(nullptr);
  j["checked"] = v.checked;
  return j;
}

Json to_json(const BSequence& seq) {
  Json bs = Json::array();
  for (const auto& b : seq.bs) bs.push_back(dec(b));
  Json certs = Json::array();
  for (const auto& c : seq.certificates) certs.push_back(to_json(c));
  return Json{{"ells", seq.ells}, {"bs", std::move(bs)}, {"certificates", std::move(certs)}};
}

Json to_json(const BFamily& fam) {
  Json sets = Json::array();
  for (const auto& s : fam.sets) {
    Json runs = Json::array();
    for (const auto& r : s.runs()) runs.push_back(to_json(r));
    sets.push_back(std::move(runs));
  }
  return Json{{"k_sets", fam.k_sets}, {"index_sets", fam.index_sets}, {"sets", std::move(sets)}};
}

Json to_json(const APReduction& red) {
  return Json{{"m", red.m},
              {"r", red.r},
              {"evidence_len", red.evidence_len},
              {"derived_set", serialize_set(IntSet(red.derived))},
              {"derived_window", red.derived.length() == 0 ? Json(nullptr) : to_json(red.derived.window())},
              {"derived_longest_run", red.derived_longest_run},
              {"window_relative", true}};
}

Json to_json(const EscapeReport& rep) {
  Json steps = Json::array();
  for (const auto& s : rep.steps) steps.push_back(Json{{"i", s.i}, {"chain", s.chain}, {"escaped", s.escaped}});
  return Json{{"t", dec(rep.t)},
              {"i0", rep.i0},
              {"checked_range", Json::array({rep.i0, rep.i_max})},
              {"all_escaped", rep.all_escaped},
              {"chain_checks", std::move(steps)}};
}

Json to_json(const RunBoundReport& rep) {
  return Json{{"d", rep.d}, {"checked", rep.checked}, {"passed", rep.passed()}, {"failures", rep.failures}};
}

Json profile_json(const WindowProfile& p, const DensityEstimate& est, const std::optional<BigRational>& forced) {
  Json j;
  j["window"] = to_json(p.window());
  j["f"] = p.counts();
  j["density"] = Json{{"num", est.value.numerator()}, {"den", est.value.denominator()}, {"argmin", est.argmin}};
  j["window_relative"] = est.window_relative;
  if (forced) {
    j["forced_density"] = Json{{"num", dec(boost::multiprecision::numerator(*forced))},
                               {"den", dec(boost::multiprecision::denominator(*forced))}};
  }
  return j;
}

std::string profile_csv(const WindowProfile& p) {
  std::ostringstream out;
  out << "n,f,fn_over_n\n";
  for (std::size_t n = 1; n <= p.max_length(); ++n) {
    const Ratio r(static_cast<std::int64_t>(p[n]), static_cast<std::int64_t>(n));
    out << n << ',' << p[n] << ',' << r.numerator() << '/' << r.denominator() << '\n';
  }
  return out.str();
}

BSequence bsequence_from_json(const nlohmann::json& j) {
  try {
    BSequence seq;
    for (const auto& e : j.at("ells")) {
      const auto v = e.get<std::int64_t>();
      if (v < 1) throw std::invalid_argument("interval lengths must be positive");
      seq.ells.push_back(static_cast<std::uint64_t>(v));
    }
    for (const auto& b : j.at("bs")) seq.bs.push_back(bigint_field(b));
    if (seq.ells.size() != seq.bs.size()) throw std::invalid_argument("'ells' and 'bs' differ in length");
    if (j.contains("certificates")) {
      for (const auto& c : j.at("certificates")) {
        seq.certificates.emplace_back(bigint_field(c.at("start")), bigint_field(c.at("len")));
      }
    }
    return seq;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed b-sequence JSON: ") + e.what());
  }
}

}  // namespace banach
