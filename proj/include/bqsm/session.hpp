#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bqsm/adversary.hpp"
#include "bqsm/graph.hpp"
#include "bqsm/transcript.hpp"

namespace bqsm {

/// Graphs used by the sessions and tests, with whatever witnesses they have.
struct NamedGraph {
  std::string name;
  Graph graph;
  std::optional<HamCycle> cycle;
  std::optional<HamCycle> second_cycle;
  std::optional<std::vector<std::uint8_t>> coloring;
};

/// "triangle", "c5", "wi5" (two Hamiltonian cycles), "star4" (none), "k4"
/// (not 3-colorable). Throws ConfigError otherwise.
NamedGraph named_graph(const std::string& name);

/// Session and game parameters. Zero means "protocol default" for the sizes.
struct ExperimentConfig {
  std::string protocol;
  std::uint64_t seed = 1;
  std::size_t n = 0;        // qubits per committed bit, or OT qubits for `ot` / `ot-privacy`
  std::size_t k = 0;        // repetitions, instances, or sum-check variables
  std::size_t ell = 0;      // OT secret length
  unsigned field_bits = 0;  // sum-check field GF(2^m)
  double delta = 0.0;       // sum-binding radius as a fraction of n
  std::size_t q = 0;        // memory bound in qubits
  std::size_t trials = 0;
  std::string strategy = "honest";
  std::string graph;
  std::size_t degree = 2;
  std::string code = "ehamming8";
  int choice = -1;          // OT choice bit or committed bit; -1 draws it
  bool randomize_order = false;
  std::string poly;         // polynomial file for rr-sumcheck
  std::string out;
  std::size_t jobs = 1;

  bool operator==(const ExperimentConfig&) const = default;
};

/// Protocol ids accepted by run_session.
const std::vector<std::string>& session_protocols();
/// Game ids accepted by run_game.
const std::vector<std::string>& game_ids();

/// Default seed: BQSM_SEED if set and numeric, otherwise 1.
std::uint64_t default_seed();

/// Throws ConfigError on unknown keys, wrong types or bad values.
ExperimentConfig config_from_json(const std::string& json_text);
std::string config_to_json(const ExperimentConfig& c);
/// Checks the protocol id and parameter ranges; throws ConfigError.
void validate(const ExperimentConfig& c);

/// The parameters written into a transcript header, and back.
std::vector<std::pair<std::string, std::string>> config_params(const ExperimentConfig& c);
ExperimentConfig config_from_transcript(const Transcript& t);

enum class Verdict { kAccept, kReject, kProtocolViolation };
std::string to_string(Verdict v);

struct SessionResult {
  Transcript transcript;
  Verdict verdict = Verdict::kReject;
  std::string detail;
};

/// Runs one session. Deterministic in (config, seed).
SessionResult run_session(const ExperimentConfig& config);

struct TranscriptCheck {
  bool replay_matches = false;
  Verdict verdict = Verdict::kReject;
  std::string detail;
};

/// Replays the session named in the transcript header and compares bytes.
TranscriptCheck verify_transcript(const Transcript& t);

/// Runs a game; trials are cut into fixed chunks with their own substreams,
/// so the result does not depend on `jobs`.
std::vector<GameReport> run_game(const std::string& game, const ExperimentConfig& config);

/// Trials per chunk in run_game.
inline constexpr std::size_t kChunkTrials = 1000;

/// Runs `trials` trials as chunks on up to `jobs` threads and merges.
GameReport run_chunked(std::size_t trials, std::uint64_t seed, std::size_t jobs,
                       const std::function<GameReport(std::size_t chunk_trials, RandomSource& rng)>& chunk);

// Reports.

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string empirical;
  std::string bound;
  std::string detail;
};

std::string report_json(const std::vector<GameReport>& games, const std::vector<CriterionResult>& criteria);
std::string report_summary(const std::vector<GameReport>& games, const std::vector<CriterionResult>& criteria);
std::string game_report_json(const GameReport& r);

}  // namespace bqsm
