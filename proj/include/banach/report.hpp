#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "banach/construct.hpp"
#include "banach/density.hpp"
#include "banach/sumset.hpp"

namespace banach {

/// Insertion-ordered so that reports are byte-stable.
using Json = nlohmann::ordered_json;

Json to_json(const Run& r);
Json to_json(const Window& w);
Json to_json(const Verdict& v);
Json to_json(const BSequence& seq);
Json to_json(const BFamily& fam);
Json to_json(const APReduction& red);
Json to_json(const EscapeReport& rep);
Json to_json(const RunBoundReport& rep);

Json profile_json(const WindowProfile& p, const DensityEstimate& est,
                  const std::optional<BigRational>& forced = std::nullopt);

/// Columns n,f,fn_over_n with the ratio written as an exact reduced fraction.
std::string profile_csv(const WindowProfile& p);

/// Reads the JSON written by to_json(const BSequence&). Certificates are
/// optional. Throws std::invalid_argument on malformed input.
BSequence bsequence_from_json(const nlohmann::json& j);

}  // namespace banach
