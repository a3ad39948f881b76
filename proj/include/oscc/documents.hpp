#pragma once

// JSON documents written by the command-line tool.

#include <json.hpp>

#include "oscc/count.hpp"

#include "oscc/equiv.hpp"
#include "oscc/oscillator.hpp"
#include "oscc/synth.hpp"
#include "oscc/tm.hpp"

namespace oscc::doc {

using nlohmann::json;

/// {"m", "k", "mu", "gamma0"}
/// A number when finite, "unbounded" otherwise.
json to_document(const Count& count);

json to_document(const osc::OscillatorParams& params);

/// {"A0", "peaks": [{"i", "t", "A"}]}
json to_document(const osc::PeakList& peaks);

/// {"states", "alphabet", "blank", "rules": ["<q1,1,q1,_,->", ...]}
json to_document(const tm::MachineSpec& machine);

json to_document(const synth::LagrangianDescription& lagrangian);

/// params, lagrangian, tape length, machine rules, loop pattern, diagnostics.
json to_document(const synth::CompilationResult& result);

/// {"source", "events": ["ConsumeOne", ..., "Stop"]}
json to_document(const equiv::EventTrace& trace);

/// {"equal", "summary", "machine_iterations", "physical_oscillations",
///  "mismatch": {"index", "machine", "physics"} | null}
json to_document(const equiv::Verdict& verdict);

osc::OscillatorParams params_from_document(const json& doc);

}  // namespace oscc::doc
