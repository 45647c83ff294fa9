#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "titan/graph.hpp"
#include "titan/modular.hpp"

namespace titan {

/// One reduced value per lane (coordinate of a vector-valued input).
struct NoisePayload {
  std::vector<double> values;
};

/// Ranked lists for every lane, packed lane-major: lane l occupies slots
/// [l*k, (l+1)*k). Each list holds counts[l] filled entries, sorted by
/// value descending with ties by descending id; the remaining slots are
/// empty. Emptiness is positional (counts), never a sentinel value.
struct TopkPayload {
  std::int32_t k = 0;
  std::int32_t lanes = 0;
  std::vector<std::uint16_t> counts;   // lanes
  std::vector<double> values;          // lanes * k
  std::vector<std::int32_t> ids;       // lanes * k

  void validate() const;
  std::optional<std::pair<double, std::int32_t>> entry(int lane, int slot) const {
    if (slot >= counts[lane]) return std::nullopt;
    const std::size_t at = static_cast<std::size_t>(lane) * k + slot;
    return std::make_pair(values[at], ids[at]);
  }
};

using Payload = std::variant<NoisePayload, TopkPayload>;

struct Message {
  std::int32_t sender = 0;
  std::int32_t receiver = 0;
  std::int32_t round = 0;
  Payload payload;

  /// Scalar units carried: d for a noise message, 2*k*d for ranked lists
  /// (both vectors count, empty slots included).
  std::int64_t payload_units() const;
  const char* payload_kind() const;
};

/// Ordered field -> values dump of one node's state at the end of a round.
using StateSnapshot = std::vector<std::pair<std::string, std::vector<double>>>;

/// Everything the corrupted nodes observe in a run: their own inputs,
/// every message they send or receive, and their full per-round state
/// traces. Never contains a message between two honest nodes.
struct AdversaryView {
  std::vector<int> corrupted;  // sorted
  std::map<int, std::vector<double>> private_inputs;
  std::vector<Message> inbound;
  std::vector<Message> outbound;
  std::map<int, std::vector<StateSnapshot>> internal;  // per node, per round
};

struct TraceRow {
  std::int32_t round = 0;
  std::int32_t sender = 0;
  std::int32_t receiver = 0;
  std::int8_t kind = 0;  // 0 = edge-noise, 1 = topk-lists
  std::int64_t units = 0;
};

/// Metadata record of a run: every message (without payloads), per-round
/// message counts, and per-node peak protocol-state sizes.
struct RoundTrace {
  std::vector<TraceRow> rows;
  std::vector<std::int64_t> per_round_messages;
  std::vector<std::int64_t> peak_memory_units;  // index node-1
  int rounds = 0;
  bool completed = false;

  std::string to_csv() const;
};

struct CostReport {
  std::vector<std::int64_t> message_units;      // per node, sent
  std::vector<std::int64_t> peak_memory_units;  // per node
};

/// Per-node totals from a completed trace.
CostReport cost_report(const RoundTrace& trace);

/// A synchronous node state machine. The engine drives each round as
/// on_round_start -> outbox -> (global delivery) -> on_deliver; a node's
/// round-r messages are all delivered before any node starts round r+1.
class NodeProgram {
 public:
  virtual ~NodeProgram() = default;

  virtual int id() const = 0;
  virtual int round_budget() const = 0;
  virtual bool halted() const = 0;

  virtual void on_round_start(int round) = 0;
  virtual std::vector<Message> outbox(int round) = 0;
  virtual void on_deliver(int round, std::span<const Message> inbox) = 0;

  virtual std::vector<double> output() const = 0;

  /// Scalars held in the persistent protocol state (ranked lists plus the
  /// recovered-inputs buffer); transient message workspace is not counted.
  virtual std::int64_t memory_units() const { return 0; }
  virtual StateSnapshot state_snapshot() const { return {}; }
};

struct RunConfig {
  DirectedGraph graph;
  int T = 1;
  int k = 1;
  ModContext ctx = ModContext::exact(1.0);
  std::uint64_t master_seed = 0;
  std::vector<int> corrupted;
};

struct RunResult {
  std::vector<std::vector<double>> outputs;  // per node
  AdversaryView view;
  RoundTrace trace;
};

/// Runs the programs in lockstep rounds until all halt. Deterministic:
/// identical config, programs and inputs reproduce every message.
/// Throws ProtocolError for non-edge or forged messages and BudgetError
/// if a node has not halted once the round budget is exhausted.
RunResult run_protocol(const RunConfig& config,
                       std::vector<std::unique_ptr<NodeProgram>>& programs,
                       const std::vector<std::vector<double>>& inputs);

}  // namespace titan
