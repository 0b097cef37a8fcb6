#pragma once

#include <cstdint>
#include <deque>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bqsm/quantum.hpp"

namespace bqsm {

/// PV: from the prover, committer or sender; VP: the other way.
enum class Direction { kPV, kVP };
enum class EventKind { kQuantum, kClassical, kBound };

struct TranscriptEvent {
  Direction dir = Direction::kPV;
  EventKind kind = EventKind::kClassical;
  std::vector<std::uint8_t> payload;

  bool operator==(const TranscriptEvent&) const = default;
};

struct Transcript {
  std::string protocol;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, std::string>> params;  // in insertion order
  std::vector<TranscriptEvent> events;

  bool operator==(const Transcript&) const = default;

  std::size_t count(EventKind kind) const;
};

std::string_view to_string(Direction d);
std::string_view to_string(EventKind k);

/// Header lines (`bqsm-transcript 1`, `protocol`, `seed`, `param key value`),
/// then one `dir kind len hex` line per event; an empty payload is `-`.
std::string serialize_transcript(const Transcript& t);
/// Throws ParseError carrying the 1-based line number.
Transcript parse_transcript(std::string_view text);

/// Sender-side record of a symbolic message: prepared bits, then bases.
std::vector<std::uint8_t> encode_quantum(const QuantumMessage& msg);
QuantumMessage decode_quantum(std::span<const std::uint8_t> bytes);

/// Ordered delivery with memory-bound markers. Every push is logged to the
/// transcript. The receiver must pop events in order and must cross each
/// bound marker explicitly, declaring how many qubits it keeps.
class SessionChannel {
 public:
  explicit SessionChannel(Transcript& log, std::size_t q = 0) : log_(log), q_(q) {}

  void push_quantum(Direction d, QuantumMessage msg);
  void push_classical(Direction d, std::vector<std::uint8_t> bytes);
  void push_bound(Direction d);

  /// Throws ProtocolViolation unless the next event is quantum.
  QuantumMessage pop_quantum();
  /// Throws ProtocolViolation unless the next event is classical.
  std::vector<std::uint8_t> pop_classical();
  /// Next event must be a bound marker; throws BoundViolation above q.
  void cross_bound(std::size_t retained_qubits);

  bool drained() const { return pending_.empty(); }

 private:
  struct Pending {
    EventKind kind;
    QuantumMessage quantum;
    std::vector<std::uint8_t> bytes;
  };
  const Pending& head(EventKind want, const char* what) const;

  Transcript& log_;
  std::size_t q_;
  std::deque<Pending> pending_;
};

}  // namespace bqsm
