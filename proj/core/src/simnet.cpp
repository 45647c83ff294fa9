#include "titan/simnet.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace titan {

void TopkPayload::validate() const {
  if (k < 0 || lanes < 0) throw ProtocolError("malformed ranked-list payload: negative shape");
  if (static_cast<std::int64_t>(counts.size()) != lanes ||
      static_cast<std::int64_t>(values.size()) != static_cast<std::int64_t>(lanes) * k ||
      values.size() != ids.size())
    throw ProtocolError("malformed ranked-list payload: value/id lists disagree");
  for (std::uint16_t c : counts)
    if (c > k) throw ProtocolError("malformed ranked-list payload: count exceeds k");
}

std::int64_t Message::payload_units() const {
  if (const auto* noise = std::get_if<NoisePayload>(&payload))
    return static_cast<std::int64_t>(noise->values.size());
  const auto& lists = std::get<TopkPayload>(payload);
  return 2ll * lists.k * lists.lanes;
}

const char* Message::payload_kind() const {
  return std::holds_alternative<NoisePayload>(payload) ? "edge-noise" : "topk-lists";
}

std::string RoundTrace::to_csv() const {
  std::ostringstream out;
  out << "round,sender,receiver,payload_kind,payload_units\n";
  for (const TraceRow& r : rows) {
    out << r.round << ',' << r.sender << ',' << r.receiver << ','
        << (r.kind == 0 ? "edge-noise" : "topk-lists") << ',' << r.units << '\n';
  }
  return out.str();
}

CostReport cost_report(const RoundTrace& trace) {
  if (!trace.completed) throw DomainError("cost report needs a completed trace");
  CostReport report;
  report.message_units.assign(trace.peak_memory_units.size(), 0);
  report.peak_memory_units = trace.peak_memory_units;
  for (const TraceRow& r : trace.rows)
    report.message_units[r.sender - 1] += r.units;
  return report;
}

RunResult run_protocol(const RunConfig& config,
                       std::vector<std::unique_ptr<NodeProgram>>& programs,
                       const std::vector<std::vector<double>>& inputs) {
  const DirectedGraph& g = config.graph;
  const int m = g.node_count();
  if (static_cast<int>(programs.size()) != m)
    throw DomainError("one program per node expected");
  if (static_cast<int>(inputs.size()) != m)
    throw DomainError("one input vector per node expected");
  for (int i = 0; i < m; ++i)
    if (programs[i]->id() != i + 1)
      throw DomainError("programs must be ordered by node id");

  std::vector<char> is_corrupted(m + 1, 0);
  for (int c : config.corrupted) {
    if (c < 1 || c > m) throw DomainError("corrupted node id out of range");
    is_corrupted[c] = 1;
  }

  RunResult result;
  AdversaryView& view = result.view;
  view.corrupted = config.corrupted;
  std::sort(view.corrupted.begin(), view.corrupted.end());
  view.corrupted.erase(std::unique(view.corrupted.begin(), view.corrupted.end()),
                       view.corrupted.end());
  for (int c : view.corrupted) {
    view.private_inputs[c] = inputs[c - 1];
    view.internal[c] = {};
  }

  RoundTrace& trace = result.trace;
  trace.peak_memory_units.assign(m, 0);

  int budget = 0;
  for (const auto& p : programs) budget = std::max(budget, p->round_budget());

  std::vector<std::vector<Message>> inbox(m);
  std::vector<Message> wire;

  int round = 0;
  for (; round < budget; ++round) {
    bool all_halted = true;
    for (const auto& p : programs)
      if (!p->halted()) { all_halted = false; break; }
    if (all_halted) break;

    for (auto& p : programs) p->on_round_start(round);

    wire.clear();
    std::int64_t sent_this_round = 0;
    for (int i = 1; i <= m; ++i) {
      std::vector<Message> out = programs[i - 1]->outbox(round);
      for (Message& msg : out) {
        if (msg.sender != i) throw ProtocolError("node forged a sender id");
        if (!g.has_edge(msg.sender, msg.receiver))
          throw ProtocolError("message emitted on a non-edge");
        if (msg.round != round)
          throw ProtocolError("message tagged with a foreign round");
        TraceRow row;
        row.round = round;
        row.sender = msg.sender;
        row.receiver = msg.receiver;
        row.kind = std::holds_alternative<NoisePayload>(msg.payload) ? 0 : 1;
        row.units = msg.payload_units();
        trace.rows.push_back(row);
        ++sent_this_round;
        if (is_corrupted[msg.receiver]) view.inbound.push_back(msg);
        if (is_corrupted[msg.sender]) view.outbound.push_back(msg);
        wire.push_back(std::move(msg));
      }
    }
    trace.per_round_messages.push_back(sent_this_round);

    for (Message& msg : wire) inbox[msg.receiver - 1].push_back(std::move(msg));
    for (int i = 1; i <= m; ++i) {
      programs[i - 1]->on_deliver(round, inbox[i - 1]);
      inbox[i - 1].clear();
    }

    for (int i = 1; i <= m; ++i)
      trace.peak_memory_units[i - 1] =
          std::max(trace.peak_memory_units[i - 1], programs[i - 1]->memory_units());
    for (int c : view.corrupted)
      view.internal[c].push_back(programs[c - 1]->state_snapshot());
  }

  for (const auto& p : programs)
    if (!p->halted())
      throw BudgetError("node " + std::to_string(p->id()) +
                        " did not halt within the round budget");

  trace.rounds = round;
  trace.completed = true;
  result.outputs.reserve(m);
  for (const auto& p : programs) result.outputs.push_back(p->output());
  return result;
}

}  // namespace titan
