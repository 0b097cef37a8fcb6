#include "bqsm/transcript.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

#include "bqsm/errors.hpp"

namespace bqsm {

std::size_t Transcript::count(EventKind kind) const {
  std::size_t c = 0;
  for (const auto& e : events) c += e.kind == kind;
  return c;
}

std::string_view to_string(Direction d) { return d == Direction::kPV ? "PV" : "VP"; }

std::string_view to_string(EventKind k) {
  switch (k) {
    case EventKind::kQuantum: return "quantum";
    case EventKind::kClassical: return "classical";
    case EventKind::kBound: return "bound";
  }
  return "?";
}

namespace {

constexpr std::string_view kMagic = "bqsm-transcript 1";
constexpr char kHex[] = "0123456789abcdef";

bool plain_token(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') return false;
  }
  return true;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && line[i] == ' ') ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

template <class T>
bool parse_uint(std::string_view s, T& out) {
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

}  // namespace

std::string serialize_transcript(const Transcript& t) {
  if (!plain_token(t.protocol)) throw std::invalid_argument("serialize_transcript: protocol id must be one token");
  std::ostringstream os;
  os << kMagic << '\n' << "protocol " << t.protocol << '\n' << "seed " << t.seed << '\n';
  for (const auto& [k, v] : t.params) {
    if (!plain_token(k) || !plain_token(v)) throw std::invalid_argument("serialize_transcript: bad parameter " + k);
    os << "param " << k << ' ' << v << '\n';
  }
  for (const auto& e : t.events) {
    os << to_string(e.dir) << ' ' << to_string(e.kind) << ' ' << e.payload.size() << ' ';
    if (e.payload.empty()) {
      os << '-';
    } else {
      for (auto b : e.payload) os << kHex[b >> 4] << kHex[b & 15];
    }
    os << '\n';
  }
  return os.str();
}

Transcript parse_transcript(std::string_view text) {
  Transcript t;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool seen_protocol = false, seen_seed = false, in_events = false;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line_no == 1) {
      if (line != kMagic) throw ParseError(line_no, "expected '" + std::string(kMagic) + "'");
      continue;
    }
    if (line.empty()) throw ParseError(line_no, "empty line");
    const auto tok = split_ws(line);
    if (!in_events && tok[0] == "protocol") {
      if (tok.size() != 2 || seen_protocol) throw ParseError(line_no, "malformed protocol line");
      t.protocol = std::string(tok[1]);
      seen_protocol = true;
      continue;
    }
    if (!in_events && tok[0] == "seed") {
      if (tok.size() != 2 || seen_seed || !parse_uint(tok[1], t.seed)) throw ParseError(line_no, "malformed seed line");
      seen_seed = true;
      continue;
    }
    if (!in_events && tok[0] == "param") {
      if (tok.size() != 3) throw ParseError(line_no, "param needs a key and a value");
      t.params.emplace_back(std::string(tok[1]), std::string(tok[2]));
      continue;
    }
    if (!seen_protocol || !seen_seed) throw ParseError(line_no, "event before protocol and seed headers");
    in_events = true;
    if (tok.size() != 4) throw ParseError(line_no, "event needs 4 fields: dir kind len hex");
    TranscriptEvent e;
    if (tok[0] == "PV") {
      e.dir = Direction::kPV;
    } else if (tok[0] == "VP") {
      e.dir = Direction::kVP;
    } else {
      throw ParseError(line_no, "unknown direction '" + std::string(tok[0]) + "'");
    }
    if (tok[1] == "quantum") {
      e.kind = EventKind::kQuantum;
    } else if (tok[1] == "classical") {
      e.kind = EventKind::kClassical;
    } else if (tok[1] == "bound") {
      e.kind = EventKind::kBound;
    } else {
      throw ParseError(line_no, "unknown event kind '" + std::string(tok[1]) + "'");
    }
    std::size_t len = 0;
    if (!parse_uint(tok[2], len)) throw ParseError(line_no, "bad length");
    const std::string_view hex = tok[3];
    if (len == 0) {
      if (hex != "-") throw ParseError(line_no, "empty payload must be '-'");
    } else {
      if (hex.size() != 2 * len) throw ParseError(line_no, "payload length does not match len");
      e.payload.resize(len);
      for (std::size_t i = 0; i < len; ++i) {
        const int hi = hex_value(hex[2 * i]), lo = hex_value(hex[2 * i + 1]);
        if (hi < 0 || lo < 0) throw ParseError(line_no, "invalid hex digit");
        e.payload[i] = static_cast<std::uint8_t>(hi * 16 + lo);
      }
    }
    t.events.push_back(std::move(e));
  }
  if (line_no == 0) throw ParseError(1, "empty transcript");
  if (!seen_protocol || !seen_seed) throw ParseError(line_no, "missing protocol or seed header");
  return t;
}

std::vector<std::uint8_t> encode_quantum(const QuantumMessage& msg) {
  if (!msg.is_symbolic()) throw std::invalid_argument("encode_quantum: dense states have no preparation record");
  Bits x;
  BasisString theta;
  for (const auto& q : msg.qubits()) {
    x.push_back(q.bit);
    theta.push_back(q.basis);
  }
  ByteWriter w;
  w.bits(x);
  w.bases(theta);
  return std::move(w).bytes();
}

QuantumMessage decode_quantum(std::span<const std::uint8_t> bytes) {
  ByteReader r(bytes);
  const Bits x = r.bits();
  const BasisString theta = r.bases();
  if (!r.done() || x.size() != theta.size()) throw std::invalid_argument("decode_quantum: inconsistent payload");
  return prepare_bb84(x, theta);
}

void SessionChannel::push_quantum(Direction d, QuantumMessage msg) {
  log_.events.push_back({d, EventKind::kQuantum, encode_quantum(msg)});
  pending_.push_back({EventKind::kQuantum, std::move(msg), {}});
}

void SessionChannel::push_classical(Direction d, std::vector<std::uint8_t> bytes) {
  log_.events.push_back({d, EventKind::kClassical, bytes});
  pending_.push_back({EventKind::kClassical, {}, std::move(bytes)});
}

void SessionChannel::push_bound(Direction d) {
  ByteWriter w;
  w.u32(static_cast<std::uint32_t>(q_));
  log_.events.push_back({d, EventKind::kBound, std::move(w).bytes()});
  pending_.push_back({EventKind::kBound, {}, {}});
}

const SessionChannel::Pending& SessionChannel::head(EventKind want, const char* what) const {
  if (pending_.empty()) throw ProtocolViolation(std::string(what) + ": nothing delivered");
  const auto& h = pending_.front();
  if (h.kind != want) {
    if (h.kind == EventKind::kBound) throw ProtocolViolation(std::string(what) + ": memory bound not crossed yet");
    throw ProtocolViolation(std::string(what) + ": next delivery is " + std::string(to_string(h.kind)));
  }
  return h;
}

QuantumMessage SessionChannel::pop_quantum() {
  head(EventKind::kQuantum, "pop_quantum");
  QuantumMessage m = std::move(pending_.front().quantum);
  pending_.pop_front();
  return m;
}

std::vector<std::uint8_t> SessionChannel::pop_classical() {
  head(EventKind::kClassical, "pop_classical");
  auto b = std::move(pending_.front().bytes);
  pending_.pop_front();
  return b;
}

void SessionChannel::cross_bound(std::size_t retained_qubits) {
  head(EventKind::kBound, "cross_bound");
  if (retained_qubits > q_) {
    throw BoundViolation("retained " + std::to_string(retained_qubits) + " qubits with bound " + std::to_string(q_));
  }
  pending_.pop_front();
}

}  // namespace bqsm
