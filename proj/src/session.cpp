#include "bqsm/session.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iomanip>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "bqsm/commitments.hpp"
#include "bqsm/errors.hpp"
#include "bqsm/nip.hpp"
#include "bqsm/ot.hpp"
#include "bqsm/pi_ham.hpp"
#include "bqsm/rr.hpp"
#include "bqsm/sumcheck_proof.hpp"
#include "bqsm/three_coloring.hpp"

namespace bqsm {

using json = nlohmann::ordered_json;

NamedGraph named_graph(const std::string& name) {
  if (name == "triangle") return {name, cycle_graph(3), HamCycle{0, 1, 2}, std::nullopt, std::vector<std::uint8_t>{0, 1, 2}};
  if (name == "c5") return {name, cycle_graph(5), HamCycle{0, 1, 2, 3, 4}, std::nullopt, std::vector<std::uint8_t>{0, 1, 0, 1, 2}};
  if (name == "wi5") {
    Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 2}, {1, 3}});
    return {name, g, HamCycle{0, 1, 2, 3, 4}, HamCycle{0, 2, 1, 3, 4}, std::vector<std::uint8_t>{0, 1, 2, 0, 1}};
  }
  if (name == "star4") return {name, Graph(4, {{0, 1}, {0, 2}, {0, 3}}), std::nullopt, std::nullopt, std::vector<std::uint8_t>{0, 1, 1, 1}};
  if (name == "k4") return {name, complete_graph(4), HamCycle{0, 1, 2, 3}, std::nullopt, std::nullopt};
  throw ConfigError("unknown graph '" + name + "' (triangle, c5, wi5, star4, k4)");
}

const std::vector<std::string>& session_protocols() {
  static const std::vector<std::string> ids = {"commit-dfss", "commit-weak", "commit-abo", "ot",
                                               "nip-ham",     "rr-sumcheck", "rr-3col"};
  return ids;
}

const std::vector<std::string>& game_ids() {
  static const std::vector<std::string> ids = {"binding", "ot-privacy", "rr-binding", "sum-binding-oracle"};
  return ids;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("BQSM_SEED")) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used, 0);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

// Configuration.

namespace {

template <class T>
T get_unsigned(const json& v, const std::string& key) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    throw ConfigError("'" + key + "' must be a non-negative integer");
  }
  const auto x = v.get<unsigned long long>();
  if (x > std::numeric_limits<T>::max()) throw ConfigError("'" + key + "' is out of range");
  return static_cast<T>(x);
}

std::string get_string(const json& v, const std::string& key) {
  if (!v.is_string()) throw ConfigError("'" + key + "' must be a string");
  return v.get<std::string>();
}

bool is_session(const std::string& p) {
  const auto& s = session_protocols();
  return std::find(s.begin(), s.end(), p) != s.end();
}

bool is_game(const std::string& p) {
  if (p.rfind("game-", 0) != 0) return false;
  const auto& g = game_ids();
  return std::find(g.begin(), g.end(), p.substr(5)) != g.end();
}

bool has_space(const std::string& s) { return s.find_first_of(" \t\r\n") != std::string::npos; }

std::string fmt_double(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

}  // namespace

void validate(const ExperimentConfig& c) {
  if (c.protocol.empty()) throw ConfigError("'protocol' is required");
  if (!is_session(c.protocol) && !is_game(c.protocol)) throw ConfigError("unknown protocol '" + c.protocol + "'");
  if (!(c.delta >= 0.0 && c.delta <= 1.0)) throw ConfigError("'delta' must lie in [0, 1]");
  if (c.field_bits != 0 && (c.field_bits < kMinFieldBits || c.field_bits > kMaxFieldBits)) {
    throw ConfigError("'field_bits' must be 0 or in [" + std::to_string(kMinFieldBits) + ", " +
                      std::to_string(kMaxFieldBits) + "]");
  }
  if (c.choice < -1 || c.choice > 1) throw ConfigError("'choice' must be -1, 0 or 1");
  if (c.jobs == 0) throw ConfigError("'jobs' must be positive");
  if (c.n > 1u << 20) throw ConfigError("'n' is too large");
  if (c.k > 4096) throw ConfigError("'k' is too large");
  if (c.ell > 4096) throw ConfigError("'ell' is too large");
  for (const auto* s : {&c.strategy, &c.graph, &c.code, &c.poly}) {
    if (has_space(*s)) throw ConfigError("string parameters may not contain whitespace");
  }
}

ExperimentConfig config_from_json(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  ExperimentConfig c;
  c.seed = default_seed();
  for (const auto& [key, v] : j.items()) {
    if (key == "protocol") c.protocol = get_string(v, key);
    else if (key == "seed") c.seed = get_unsigned<std::uint64_t>(v, key);
    else if (key == "n") c.n = get_unsigned<std::size_t>(v, key);
    else if (key == "k") c.k = get_unsigned<std::size_t>(v, key);
    else if (key == "ell") c.ell = get_unsigned<std::size_t>(v, key);
    else if (key == "field_bits") c.field_bits = get_unsigned<unsigned>(v, key);
    else if (key == "delta") {
      if (!v.is_number()) throw ConfigError("'delta' must be a number");
      c.delta = v.get<double>();
    } else if (key == "q") c.q = get_unsigned<std::size_t>(v, key);
    else if (key == "trials") c.trials = get_unsigned<std::size_t>(v, key);
    else if (key == "strategy") c.strategy = get_string(v, key);
    else if (key == "graph") c.graph = get_string(v, key);
    else if (key == "degree") c.degree = get_unsigned<std::size_t>(v, key);
    else if (key == "code") c.code = get_string(v, key);
    else if (key == "choice") {
      if (!v.is_number_integer()) throw ConfigError("'choice' must be an integer");
      c.choice = v.get<int>();
    } else if (key == "randomize_order") {
      if (!v.is_boolean()) throw ConfigError("'randomize_order' must be a boolean");
      c.randomize_order = v.get<bool>();
    } else if (key == "poly") c.poly = get_string(v, key);
    else if (key == "out") c.out = get_string(v, key);
    else if (key == "jobs") c.jobs = get_unsigned<std::size_t>(v, key);
    else throw ConfigError("unknown config key '" + key + "'");
  }
  validate(c);
  return c;
}

std::string config_to_json(const ExperimentConfig& c) {
  json j;
  j["protocol"] = c.protocol;
  j["seed"] = c.seed;
  j["n"] = c.n;
  j["k"] = c.k;
  j["ell"] = c.ell;
  j["field_bits"] = c.field_bits;
  j["delta"] = c.delta;
  j["q"] = c.q;
  j["trials"] = c.trials;
  j["strategy"] = c.strategy;
  j["graph"] = c.graph;
  j["degree"] = c.degree;
  j["code"] = c.code;
  j["choice"] = c.choice;
  j["randomize_order"] = c.randomize_order;
  j["poly"] = c.poly;
  j["out"] = c.out;
  j["jobs"] = c.jobs;
  return j.dump(2);
}

std::vector<std::pair<std::string, std::string>> config_params(const ExperimentConfig& c) {
  auto str = [](const std::string& s) { return s.empty() ? std::string("-") : s; };
  return {{"n", std::to_string(c.n)},
          {"k", std::to_string(c.k)},
          {"ell", std::to_string(c.ell)},
          {"field_bits", std::to_string(c.field_bits)},
          {"delta", fmt_double(c.delta)},
          {"q", std::to_string(c.q)},
          {"trials", std::to_string(c.trials)},
          {"strategy", str(c.strategy)},
          {"graph", str(c.graph)},
          {"degree", std::to_string(c.degree)},
          {"code", str(c.code)},
          {"choice", std::to_string(c.choice)},
          {"randomize_order", c.randomize_order ? "1" : "0"},
          {"poly", str(c.poly)}};
}

ExperimentConfig config_from_transcript(const Transcript& t) {
  ExperimentConfig c;
  c.protocol = t.protocol;
  c.seed = t.seed;
  auto str = [](const std::string& s) { return s == "-" ? std::string() : s; };
  try {
    for (const auto& [k, v] : t.params) {
      if (k == "n") c.n = std::stoull(v);
      else if (k == "k") c.k = std::stoull(v);
      else if (k == "ell") c.ell = std::stoull(v);
      else if (k == "field_bits") c.field_bits = static_cast<unsigned>(std::stoul(v));
      else if (k == "delta") c.delta = std::stod(v);
      else if (k == "q") c.q = std::stoull(v);
      else if (k == "trials") c.trials = std::stoull(v);
      else if (k == "strategy") c.strategy = str(v);
      else if (k == "graph") c.graph = str(v);
      else if (k == "degree") c.degree = std::stoull(v);
      else if (k == "code") c.code = str(v);
      else if (k == "choice") c.choice = std::stoi(v);
      else if (k == "randomize_order") c.randomize_order = v == "1";
      else if (k == "poly") c.poly = str(v);
      else throw ConfigError("unknown transcript parameter '" + k + "'");
    }
  } catch (const std::logic_error& e) {
    throw ConfigError(std::string("bad transcript parameter: ") + e.what());
  }
  validate(c);
  return c;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kAccept: return "accept";
    case Verdict::kReject: return "reject";
    case Verdict::kProtocolViolation: return "protocol-violation";
  }
  return "?";
}

// Sessions.

namespace {

std::size_t or_default(std::size_t v, std::size_t d) { return v ? v : d; }

std::uint8_t pick_bit(int choice, RandomSource& rng) { return choice >= 0 ? static_cast<std::uint8_t>(choice) : (rng.bit() ? 1 : 0); }

Verdict verdict_of(bool ok) { return ok ? Verdict::kAccept : Verdict::kReject; }

QuantumMessage concat(std::span<const QuantumMessage> parts) {
  std::vector<SymbolicQubit> all;
  for (const auto& p : parts) {
    const auto& q = p.qubits();
    all.insert(all.end(), q.begin(), q.end());
  }
  return QuantumMessage(std::move(all));
}

std::vector<std::uint8_t> encode_prover_message(const RrProverMessage& m) {
  ByteWriter w;
  w.u32(static_cast<std::uint32_t>(m.revealed.size()));
  for (std::size_t i = 0; i < m.revealed.size(); ++i) {
    w.bits(m.revealed[i]);
    w.u32(static_cast<std::uint32_t>(m.openings[i].size()));
    for (const auto& z : m.openings[i]) w.bits(z);
  }
  w.bits(m.final_message);
  return std::move(w).bytes();
}

RrProverMessage decode_prover_message(std::span<const std::uint8_t> bytes) {
  ByteReader r(bytes);
  RrProverMessage m;
  const std::size_t k = r.u32();
  if (k > 4096) throw std::invalid_argument("prover message: too many rounds");
  for (std::size_t i = 0; i < k; ++i) {
    m.revealed.push_back(r.bits());
    const std::size_t cnt = r.u32();
    if (cnt > (1u << 20)) throw std::invalid_argument("prover message: too many openings");
    std::vector<Bits> zs;
    for (std::size_t j = 0; j < cnt; ++j) zs.push_back(r.bits());
    m.openings.push_back(std::move(zs));
  }
  m.final_message = r.bits();
  if (!r.done()) throw std::invalid_argument("prover message: trailing bytes");
  return m;
}

void session_commit_dfss(const ExperimentConfig& c, SessionResult& res, Rng& rng) {
  const std::size_t n = or_default(c.n, 32);
  SessionChannel ch(res.transcript, 0);
  const std::uint8_t b = pick_bit(c.choice, rng);
  auto [msg, receipt] = dfss_prepare(n, rng);
  ch.push_quantum(Direction::kVP, std::move(msg));
  ch.push_bound(Direction::kVP);
  const Bits x = dfss_commit(b, ch.pop_quantum(), rng);
  ch.cross_bound(0);
  ByteWriter w;
  w.u8(b);
  w.bits(x);
  ch.push_classical(Direction::kPV, std::move(w).bytes());
  const auto bytes = ch.pop_classical();
  ByteReader r(bytes);
  DfssOpening op;
  op.b = r.u8();
  op.x_prime = r.bits();
  res.verdict = verdict_of(r.done() && dfss_verify(receipt, op));
  res.detail = "committed bit " + std::to_string(b);
}

void session_commit_weak(const ExperimentConfig& c, SessionResult& res, Rng& rng) {
  const std::size_t n = or_default(c.n, 32);
  SessionChannel ch(res.transcript, 0);
  const std::uint8_t b = pick_bit(c.choice, rng);
  auto [msg, opening] = weak_bc_commit(b, n, rng);
  ch.push_quantum(Direction::kPV, std::move(msg));
  ch.push_bound(Direction::kPV);
  const WeakBcReceipt receipt = weak_bc_receive(ch.pop_quantum(), rng);
  ch.cross_bound(0);
  ByteWriter w;
  w.u8(opening.b);
  w.bits(opening.x);
  ch.push_classical(Direction::kPV, std::move(w).bytes());
  const auto bytes = ch.pop_classical();
  ByteReader r(bytes);
  WeakBcOpening op;
  op.b = r.u8();
  op.x = r.bits();
  res.verdict = verdict_of(r.done() && weak_bc_verify(receipt, op));
  res.detail = "committed bit " + std::to_string(b);
}

void session_commit_abo(const ExperimentConfig& c, SessionResult& res, Rng& rng) {
  GeneratorMatrix G = [&] {
    try {
      return GeneratorMatrix::by_name(c.code);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }();
  SessionChannel ch(res.transcript, 0);
  const Bits a = random_bits(G.n(), rng);
  auto [msg, receipt] = abo_prepare(G, rng);
  ch.push_quantum(Direction::kVP, std::move(msg));
  ch.push_bound(Direction::kVP);
  const Bits z = abo_commit(G, a, ch.pop_quantum(), rng);
  ch.cross_bound(0);
  ByteWriter w;
  w.bits(a);
  w.bits(z);
  ch.push_classical(Direction::kPV, std::move(w).bytes());
  const auto bytes = ch.pop_classical();
  ByteReader r(bytes);
  AboOpening op;
  op.a = r.bits();
  op.z = r.bits();
  res.verdict = verdict_of(r.done() && abo_verify(G, receipt, op));
  res.detail = "code " + G.name() + ", message " + to_string(a);
}

void session_ot(const ExperimentConfig& c, SessionResult& res, Rng& rng) {
  const std::size_t ell = or_default(c.ell, 8);
  const std::size_t n = or_default(c.n, default_ot_qubits(ell, c.q));
  const std::size_t k = or_default(c.k, 1);
  SessionChannel ch(res.transcript, 0);
  std::vector<std::pair<Bits, Bits>> secrets;
  std::vector<std::uint8_t> choices;
  for (std::size_t i = 0; i < k; ++i) {
    secrets.emplace_back(random_bits(ell, rng), random_bits(ell, rng));
    choices.push_back(pick_bit(c.choice, rng));
  }
  auto sent = ot_parallel_send(secrets, n, rng);
  for (auto& s : sent) ch.push_quantum(Direction::kPV, s.qubits);
  ch.push_bound(Direction::kPV);
  for (auto& s : sent) ch.push_classical(Direction::kPV, encode_ot_classical(s.classical));

  std::vector<Bits> measured;
  for (std::size_t i = 0; i < k; ++i) measured.push_back(ot_receive_measure(choices[i], ch.pop_quantum(), rng));
  ch.cross_bound(0);
  bool ok = true;
  std::string detail;
  for (std::size_t i = 0; i < k; ++i) {
    const auto cp = decode_ot_classical(ch.pop_classical());
    const auto got = ot_receive_classical(choices[i], measured[i], cp);
    const Bits& want = choices[i] ? secrets[i].second : secrets[i].first;
    ok = ok && got && *got == want;
    if (i < 4) detail += "c=" + std::to_string(choices[i]) + " s_c=" + to_string(want) + (got && *got == want ? " ok; " : " wrong; ");
  }
  res.verdict = verdict_of(ok);
  res.detail = detail + "bound " + fmt_double(ot_security_bound(n, ell, c.q, k));
}

void session_nip_ham(const ExperimentConfig& c, SessionResult& res, Rng& rng) {
  const bool honest = c.strategy == "honest";
  if (!honest && c.strategy != "guessing") throw ConfigError("nip-ham strategy must be honest or guessing");
  const NamedGraph ng = named_graph(c.graph.empty() ? (honest ? "triangle" : "star4") : c.graph);
  const PiHam pi(ng.graph, or_default(c.n, 8));
  NipOptions opts;
  opts.k = or_default(c.k, 8);
  opts.randomize_order = c.randomize_order;
  NipMessage msg;
  if (honest) {
    if (!ng.cycle) throw ConfigError("graph '" + ng.name + "' has no Hamiltonian cycle; use strategy guessing");
    PiHamProver prover(pi, *ng.cycle);
    msg = nip_prove(pi, prover, opts, rng);
  } else {
    PiHamGuessingProver prover(pi);
    msg = nip_prove(pi, prover, opts, rng);
  }
  SessionChannel ch(res.transcript, 0);
  for (const auto& rep : msg.reps) {
    ch.push_quantum(Direction::kPV, rep.phi);
    ch.push_quantum(Direction::kPV, rep.ot_qubits);
  }
  ch.push_bound(Direction::kPV);
  for (const auto& rep : msg.reps) {
    ByteWriter w;
    w.bits(rep.a);
    w.u8(rep.swap);
    auto bytes = std::move(w).bytes();
    const auto ot = encode_ot_classical(rep.ot);
    bytes.insert(bytes.end(), ot.begin(), ot.end());
    ch.push_classical(Direction::kPV, std::move(bytes));
  }
  // The verifier rebuilds the message from what the channel delivers.
  NipMessage got;
  got.randomized = msg.randomized;
  got.reps.resize(msg.reps.size());
  for (auto& rep : got.reps) {
    rep.phi = ch.pop_quantum();
    rep.ot_qubits = ch.pop_quantum();
  }
  NipVerification v;
  {
    // Quantum parts are measured before the bound; nip_verify_detailed does
    // so before it looks at any classical part.
    ch.cross_bound(0);
    for (auto& rep : got.reps) {
      const auto bytes = ch.pop_classical();
      ByteReader r(bytes);
      rep.a = r.bits();
      rep.swap = r.u8();
      const std::size_t used = r.position();
      rep.ot = decode_ot_classical(std::span<const std::uint8_t>(bytes).subspan(used));
    }
    v = nip_verify_detailed(pi, got, rng);
  }
  res.verdict = verdict_of(v.accepted);
  std::size_t ok = 0;
  for (const auto& view : v.views) ok += view.accepted;
  res.detail = "graph " + ng.name + ", " + std::to_string(ok) + "/" + std::to_string(v.views.size()) +
               " repetitions verified";
}

void rr_transcript(const RrChannel& ch, const RrVerifierMessage& vmsg, Transcript& t, std::size_t q) {
  for (const auto& e : ch.log()) {
    switch (e.event) {
      case RrChannel::Event::kRegister:
        t.events.push_back({Direction::kVP, EventKind::kQuantum, encode_quantum(concat(vmsg.registers[e.round]))});
        break;
      case RrChannel::Event::kBound: {
        ByteWriter w;
        w.u32(static_cast<std::uint32_t>(q));
        t.events.push_back({Direction::kVP, EventKind::kBound, std::move(w).bytes()});
        break;
      }
      case RrChannel::Event::kChallenge: {
        ByteWriter w;
        w.bits(vmsg.challenges[e.round]);
        t.events.push_back({Direction::kVP, EventKind::kClassical, std::move(w).bytes()});
        break;
      }
    }
  }
}

template <class Respond>
void run_rr(const InteractiveProof& pi, std::size_t n, SessionResult& res, Rng& rng, Respond&& respond) {
  auto [vmsg, secrets] = rr_verifier_message(pi, n, rng);
  RrChannel ch(vmsg, 0);
  std::optional<RrProverMessage> pm;
  try {
    pm = respond(ch);
  } catch (...) {
    rr_transcript(ch, vmsg, res.transcript, 0);
    throw;
  }
  rr_transcript(ch, vmsg, res.transcript, 0);
  const auto bytes = encode_prover_message(*pm);
  res.transcript.events.push_back({Direction::kPV, EventKind::kClassical, bytes});
  res.verdict = verdict_of(rr_verify(pi, secrets, decode_prover_message(bytes)));
}

void session_rr_sumcheck(const ExperimentConfig& c, SessionResult& res, Rng& rng) {
  const unsigned m = c.field_bits ? c.field_bits : kDefaultFieldBits;
  const GF2m field(m);
  std::optional<MultivariatePolynomial> f;
  if (!c.poly.empty()) {
    std::ifstream in(c.poly);
    if (!in) throw ConfigError("cannot read polynomial file '" + c.poly + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    f = MultivariatePolynomial::parse(ss.str(), m);
  } else {
    f = random_polynomial(field, or_default(c.k, 3), c.degree, 0.5, rng);
  }
  const std::size_t degree = std::max<std::size_t>(f->degree(), 1);
  SumcheckInstance inst{*f, sumcheck_claim(*f), degree, false};
  const bool honest = c.strategy == "honest";
  RrCheater cheater = RrCheater::kHonest;
  if (c.strategy == "adaptive") {
    cheater = RrCheater::kAdaptive;
  } else if (c.strategy == "ignore") {
    cheater = RrCheater::kIgnoreCommitments;
  } else if (!honest) {
    throw ConfigError("rr-sumcheck strategy must be honest, adaptive or ignore");
  }
  if (!honest) inst.claim ^= 1;  // cheaters argue a false claim
  const SumcheckProof pi(inst);
  const std::size_t n = or_default(c.n, 32);
  run_rr(pi, n, res, rng, [&](RrChannel& ch) {
    if (honest) {
      HonestSumcheckProver prover(inst.f, inst.degree);
      SumcheckProverAdapter adapter(pi, prover);
      return rr_prover_respond(pi, adapter, ch, rng);
    }
    return rr_sumcheck_cheater_respond(pi, cheater, ch, n, 2, rng);
  });
  res.detail = std::to_string(pi.rounds()) + " variables over GF(2^" + std::to_string(m) + "), degree " +
               std::to_string(degree) + (honest ? ", true claim" : ", false claim");
}

void session_rr_3col(const ExperimentConfig& c, SessionResult& res, Rng& rng) {
  const bool honest = c.strategy == "honest";
  if (!honest && c.strategy != "cheat") throw ConfigError("rr-3col strategy must be honest or cheat");
  const NamedGraph ng = named_graph(c.graph.empty() ? (honest ? "triangle" : "k4") : c.graph);
  std::vector<std::uint8_t> colors;
  if (honest) {
    if (!ng.coloring) throw ConfigError("graph '" + ng.name + "' has no 3-coloring; use strategy cheat");
    colors = *ng.coloring;
  } else {
    colors.resize(ng.graph.vertices());
    // Two vertices share color 0, the rest take 1 and 2 in turn.
    for (std::size_t v = 1; v < colors.size(); ++v) colors[v] = static_cast<std::uint8_t>(v == 1 ? 0 : 1 + (v % 2));
  }
  const ThreeColoring pi(ng.graph);
  run_rr(pi, or_default(c.n, 32), res, rng, [&](RrChannel& ch) {
    ThreeColoringProver prover(colors, rng);
    return rr_prover_respond(pi, prover, ch, rng);
  });
  res.detail = "graph " + ng.name;
}

}  // namespace

SessionResult run_session(const ExperimentConfig& config) {
  validate(config);
  if (!is_session(config.protocol)) throw ConfigError("'" + config.protocol + "' is not a session protocol");
  SessionResult res;
  res.transcript.protocol = config.protocol;
  res.transcript.seed = config.seed;
  res.transcript.params = config_params(config);
  Rng rng(config.seed);
  try {
    const auto& p = config.protocol;
    if (p == "commit-dfss") session_commit_dfss(config, res, rng);
    else if (p == "commit-weak") session_commit_weak(config, res, rng);
    else if (p == "commit-abo") session_commit_abo(config, res, rng);
    else if (p == "ot") session_ot(config, res, rng);
    else if (p == "nip-ham") session_nip_ham(config, res, rng);
    else if (p == "rr-sumcheck") session_rr_sumcheck(config, res, rng);
    else if (p == "rr-3col") session_rr_3col(config, res, rng);
  } catch (const ProtocolViolation& e) {
    res.verdict = Verdict::kProtocolViolation;
    res.detail = e.what();
  } catch (const BoundViolation& e) {
    res.verdict = Verdict::kProtocolViolation;
    res.detail = e.what();
  } catch (const std::out_of_range& e) {
    res.verdict = Verdict::kReject;
    res.detail = std::string("malformed message: ") + e.what();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return res;
}

TranscriptCheck verify_transcript(const Transcript& t) {
  const ExperimentConfig c = config_from_transcript(t);
  const SessionResult res = run_session(c);
  TranscriptCheck out;
  out.replay_matches = res.transcript == t;
  out.verdict = res.verdict;
  out.detail = out.replay_matches ? res.detail : "transcript differs from the replayed session";
  if (out.replay_matches) return out;
  const std::size_t common = std::min(res.transcript.events.size(), t.events.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (!(res.transcript.events[i] == t.events[i])) {
      out.detail += " (first difference at event " + std::to_string(i + 1) + ")";
      return out;
    }
  }
  out.detail += " (event count " + std::to_string(t.events.size()) + " vs " +
                std::to_string(res.transcript.events.size()) + ")";
  return out;
}

// Games.

GameReport run_chunked(std::size_t trials, std::uint64_t seed, std::size_t jobs,
                       const std::function<GameReport(std::size_t, RandomSource&)>& chunk) {
  const std::size_t chunks = std::max<std::size_t>(1, (trials + kChunkTrials - 1) / kChunkTrials);
  std::vector<std::optional<GameReport>> parts(chunks);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= chunks) return;
      const std::size_t lo = i * kChunkTrials;
      const std::size_t count = trials == 0 ? 0 : std::min(kChunkTrials, trials - lo);
      try {
        Rng rng = Rng::substream(seed, i);
        parts[i] = chunk(count, rng);
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
        next.store(chunks);
      }
    }
  };
  const std::size_t threads = std::min(std::max<std::size_t>(jobs, 1), chunks);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
  GameReport out = *parts[0];
  for (std::size_t i = 1; i < chunks; ++i) {
    if (!parts[i]) throw std::logic_error("run_chunked: missing chunk");
    if (out.invalidated) break;
    merge_reports(out, *parts[i]);
  }
  return out;
}

namespace {

std::unique_ptr<DfssCommitter> make_committer(const std::string& s) {
  if (s == "honest" || s == "measure-all-+") return std::make_unique<MeasureAllCommitter>(Basis::kComputational);
  if (s == "measure-all-x") return std::make_unique<MeasureAllCommitter>(Basis::kHadamard);
  if (s == "random-basis") return std::make_unique<RandomBasisCommitter>();
  if (s == "store-everything") return std::make_unique<StoreEverythingCommitter>();
  throw ConfigError("binding strategy must be measure-all-+, measure-all-x, random-basis or store-everything");
}

}  // namespace

std::vector<GameReport> run_game(const std::string& game, const ExperimentConfig& c) {
  validate(c);
  const std::size_t jobs = c.jobs;
  if (game == "binding") {
    const std::size_t n = or_default(c.n, 8);
    const std::string s = c.strategy.empty() ? "measure-all-+" : c.strategy;
    make_committer(s);  // validates the name before any work
    GameReport r = run_chunked(or_default(c.trials, 10000), c.seed, jobs, [&](std::size_t t, RandomSource& rng) {
      auto adv = make_committer(s);
      return dfss_binding_game(*adv, n, c.q, t, rng);
    });
    return {r};
  }
  if (game == "ot-privacy") {
    const std::string s = c.strategy.empty() || c.strategy == "honest" ? "measure-all-0" : c.strategy;
    const auto strat = ot_strategy_from_string(s);
    if (!strat) throw ConfigError("ot-privacy strategy must be measure-all-0, measure-all-1, random-per-qubit or store-all-dense");
    const std::size_t n = or_default(c.n, 16);
    const std::size_t ell = or_default(c.ell, 1);
    if (n < 4 * ell) throw ConfigError("ot-privacy needs n >= 4 ell");
    if (*strat == OtStrategy::kStoreAllDense && n > kDefaultDenseCap) {
      throw ConfigError("store-all-dense needs n <= " + std::to_string(kDefaultDenseCap));
    }
    GameReport r = run_chunked(or_default(c.trials, 1000), c.seed, jobs, [&](std::size_t t, RandomSource& rng) {
      return ot_privacy_probe(*strat, n, ell, t, rng);
    });
    return {r};
  }
  if (game == "rr-binding") {
    RrCheater cheater = RrCheater::kAdaptive;
    if (c.strategy == "honest") cheater = RrCheater::kHonest;
    else if (c.strategy == "ignore") cheater = RrCheater::kIgnoreCommitments;
    else if (!c.strategy.empty() && c.strategy != "adaptive") throw ConfigError("rr-binding strategy must be adaptive, ignore or honest");
    const std::size_t n = or_default(c.n, 32);
    const std::size_t trials = or_default(c.trials, 10000);
    Rng inst_rng(c.seed);
    const GF2m field(c.field_bits ? c.field_bits : 8);
    const auto f = random_polynomial(field, or_default(c.k, 4), c.degree, 0.5, inst_rng);
    SumcheckInstance inst{f, sumcheck_claim(f), c.degree, false};
    if (cheater != RrCheater::kHonest) inst.claim ^= 1;
    GameReport flip = run_chunked(std::max<std::size_t>(trials, 100000), c.seed ^ 0x5eedf11bULL, jobs,
                                  [&](std::size_t t, RandomSource& rng) { return dfss_flip_game(n, t, rng); });
    const double delta_hat = flip.statistic;
    GameReport r = run_chunked(trials, c.seed, jobs, [&](std::size_t t, RandomSource& rng) {
      return rr_sumcheck_binding_game(inst, cheater, n, t, delta_hat, rng);
    });
    return {flip, r};
  }
  if (game == "sum-binding-oracle") {
    const std::size_t n = or_default(c.n, 6);
    if (n > 12) throw ConfigError("sum-binding-oracle enumerates all centre pairs; n must be at most 12");
    const auto radius = static_cast<std::size_t>(std::llround(c.delta * static_cast<double>(n)));
    GameReport o;
    o.game = "weak-bc-sum-binding-oracle";
    o.strategy = "all centre pairs, radius " + std::to_string(radius);
    o.stat = GameReport::Stat::kFirstArm;
    o.arms = {{"pairs-within-bound", 0, 0}};
    double worst = 0.0;
    SumBindingOracle last;
    const std::uint64_t dim = std::uint64_t{1} << n;
    for (std::uint64_t x0 = 0; x0 < dim; ++x0) {
      for (std::uint64_t x1 = 0; x1 < dim; ++x1) {
        last = weak_bc_sum_binding_oracle(n, radius, x0, x1);
        worst = std::max(worst, last.lhs());
        ++o.arms[0].trials;
        o.arms[0].successes += last.holds() ? 1 : 0;
      }
    }
    o.trials = o.arms[0].trials;
    o.statistic_name = "max 1 + ||L0 L1||";
    o.statistic = worst;
    o.statistic_radius = 1e-9;
    o.bound = last.chain_bound;
    o.bound_formula = "1 + 2^{2h(delta)n - n/2}; analytic bound " + fmt_double(last.analytic_bound);
    o.vacuous = last.vacuous;
    o.note = last.vacuous ? "the analytic bound is at least 2 at this n (vacuous); the chain bound is checked" : "";
    std::vector<GameReport> out{o};
    const std::size_t attack_n = std::min<std::size_t>(n, kDefaultDenseCap / 2);
    Rng rng(c.seed);
    for (auto& r : weak_bc_purification_attack(attack_n, or_default(c.trials, 2000), rng)) out.push_back(std::move(r));
    return out;
  }
  throw ConfigError("unknown game '" + game + "'");
}

// Reports.

namespace {

json arm_json(const GameArm& a) {
  json j;
  j["name"] = a.name;
  j["trials"] = a.trials;
  j["successes"] = a.successes;
  j["rate"] = a.rate();
  j["radius_3sigma"] = a.radius();
  return j;
}

json game_json(const GameReport& r) {
  json j;
  j["game"] = r.game;
  j["strategy"] = r.strategy;
  j["trials"] = r.trials;
  j["arms"] = json::array();
  for (const auto& a : r.arms) j["arms"].push_back(arm_json(a));
  j["statistic_name"] = r.statistic_name;
  j["empirical"] = r.statistic;
  j["radius_3sigma"] = r.statistic_radius;
  if (std::isnan(r.bound)) {
    j["analytic_bound"] = nullptr;
  } else if (std::isinf(r.bound)) {
    j["analytic_bound"] = "inf";
  } else {
    j["analytic_bound"] = r.bound;
  }
  j["bound_formula"] = r.bound_formula;
  j["vacuous"] = r.vacuous;
  j["invalidated"] = r.invalidated;
  j["broken"] = r.broken;
  j["within_bound"] = r.within_bound();
  j["note"] = r.note;
  return j;
}

}  // namespace

std::string game_report_json(const GameReport& r) { return game_json(r).dump(2); }

std::string report_json(const std::vector<GameReport>& games, const std::vector<CriterionResult>& criteria) {
  json j;
  j["games"] = json::array();
  for (const auto& g : games) j["games"].push_back(game_json(g));
  j["criteria"] = json::array();
  bool all = true;
  for (const auto& c : criteria) {
    json e;
    e["id"] = c.id;
    e["name"] = c.name;
    e["passed"] = c.passed;
    e["empirical"] = c.empirical;
    e["analytic_bound"] = c.bound;
    e["detail"] = c.detail;
    j["criteria"].push_back(e);
    all = all && c.passed;
  }
  j["all_pass"] = all;
  return j.dump(2);
}

std::string report_summary(const std::vector<GameReport>& games, const std::vector<CriterionResult>& criteria) {
  std::ostringstream os;
  os << std::setprecision(6);
  for (const auto& g : games) {
    os << g.game << " [" << g.strategy << "] trials=" << g.trials;
    for (const auto& a : g.arms) os << ' ' << a.name << '=' << a.rate();
    os << " | " << g.statistic_name << " = " << g.statistic << " +- " << g.statistic_radius;
    if (!std::isnan(g.bound)) os << " | bound " << g.bound << (g.vacuous ? " (vacuous)" : "");
    if (g.invalidated) os << " | INVALIDATED";
    else os << (g.within_bound() ? " | within bound" : " | EXCEEDS BOUND");
    if (!g.note.empty()) os << "\n  " << g.note;
    os << '\n';
  }
  std::size_t passed = 0;
  for (const auto& c : criteria) {
    os << (c.passed ? "PASS" : "FAIL") << ' ' << c.id << ' ' << c.name << ": " << c.empirical;
    if (!c.bound.empty()) os << " (bound " << c.bound << ')';
    if (!c.detail.empty()) os << " - " << c.detail;
    os << '\n';
    passed += c.passed;
  }
  if (!criteria.empty()) {
    os << (passed == criteria.size() ? "all pass" : "failures") << ": " << passed << '/' << criteria.size() << '\n';
  }
  return os.str();
}

}  // namespace bqsm
