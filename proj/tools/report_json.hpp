#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "ripcert/graph.hpp"
#include "ripcert/pipeline.hpp"
#include "ripcert/rip.hpp"
#include "ripcert/spectral.hpp"
#include "ripcert/rounding.hpp"

namespace ripcert::cli {

using ordered_json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

// Every command emits the same envelope:
// command / params / inputs / results / verdict / seed / version.
ordered_json report_envelope(const std::string& command, ordered_json params,
                             ordered_json inputs, ordered_json results, bool verdict,
                             std::optional<std::uint64_t> seed);

ordered_json to_json(const graph::CutReport& report);
ordered_json to_json(const spectral::SparseRayleighResult& result);
ordered_json to_json(const rip::RicEstimate& estimate);
ordered_json to_json(const rounding::SweepResult& result);
ordered_json to_json(const pipeline::ReductionParams& params);
ordered_json to_json(const pipeline::Case1Report& report);
ordered_json to_json(const pipeline::Case2Report& report);
ordered_json to_json(const pipeline::SuiteCheck& check);
ordered_json to_json(const pipeline::SuiteSummary& summary);

}  // namespace ripcert::cli
