#include "oscc/documents.hpp"

namespace oscc::doc {

json to_document(const Count& count) {
  if (count.is_unbounded()) return "unbounded";
  return count.value();
}

json to_document(const osc::OscillatorParams& params) {
  return {{"m", params.m},
          {"k", params.k},
          {"mu", params.mu},
          {"gamma0", params.gamma0}};
}

osc::OscillatorParams params_from_document(const json& doc) {
  osc::OscillatorParams p;
  p.m = doc.at("m").get<double>();
  p.k = doc.at("k").get<double>();
  p.mu = doc.at("mu").get<double>();
  p.gamma0 = doc.at("gamma0").get<double>();
  osc::validate(p);
  return p;
}

json to_document(const osc::PeakList& peaks) {
  json list = json::array();
  for (const auto& p : peaks.peaks) {
    list.push_back({{"i", p.i}, {"t", p.t}, {"A", p.amplitude}});
  }
  return {{"A0", peaks.A0}, {"peaks", std::move(list)}};
}

json to_document(const tm::MachineSpec& machine) {
  json states = json::array();
  for (const auto& q : machine.states()) states.push_back(q.token());
  json alphabet = json::array();
  for (const auto& s : machine.alphabet()) alphabet.push_back(s.token());
  json rules = json::array();
  for (const auto& r : machine.rules()) rules.push_back(tm::to_string(r));
  return {{"states", std::move(states)},
          {"alphabet", std::move(alphabet)},
          {"blank", "_"},
          {"rules", std::move(rules)}};
}

json to_document(const synth::LagrangianDescription& lagrangian) {
  return {{"kinetic_coefficient", lagrangian.kinetic_coefficient},
          {"potential_coefficient", lagrangian.potential_coefficient},
          {"dissipation_coefficient", lagrangian.dissipation_coefficient},
          {"text", lagrangian.rendered}};
}

json to_document(const synth::CompilationResult& result) {
  const Count ones = result.tape.tape.count_ones();
  return {
      {"pattern",
       {{"counter", result.pattern.counter},
        {"count", result.pattern.count},
        {"body_lines", result.pattern.body_lines}}},
      {"machine", to_document(result.machine)},
      {"tape_length", ones.is_finite() ? json(ones.value()) : json("unbounded")},
      {"params", to_document(result.params)},
      {"mu", result.params.mu},
      {"predicted_oscillations", to_document(osc::oscillation_count(result.params))},
      {"lagrangian", to_document(result.lagrangian)},
      {"diagnostics", result.diagnostics},
  };
}

json to_document(const equiv::EventTrace& trace) {
  json events = json::array();
  for (auto e : trace.events) events.push_back(equiv::to_string(e));
  return {{"source", equiv::to_string(trace.source)}, {"events", std::move(events)}};
}

json to_document(const equiv::Verdict& verdict) {
  json mismatch = nullptr;
  if (verdict.detail) {
    const auto name = [](const std::optional<equiv::Event>& e) -> json {
      return e ? json(equiv::to_string(*e)) : json(nullptr);
    };
    mismatch = {{"index", verdict.detail->index},
                {"machine", name(verdict.detail->expected)},
                {"physics", name(verdict.detail->found)}};
  }
  return {{"equal", verdict.equal},
          {"summary", verdict.summary()},
          {"machine_iterations", verdict.consume_a},
          {"physical_oscillations", verdict.consume_b},
          {"machine_stopped", verdict.stop_a},
          {"physics_stopped", verdict.stop_b},
          {"mismatch", std::move(mismatch)}};
}

}  // namespace oscc::doc
