#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bqsm/errors.hpp"
#include "bqsm/session.hpp"
#include "bqsm/transcript.hpp"

namespace {

constexpr int kExitAccept = 0;
constexpr int kExitReject = 1;
constexpr int kExitViolation = 2;
constexpr int kExitUsage = 3;

int exit_code(bqsm::Verdict v) {
  switch (v) {
    case bqsm::Verdict::kAccept: return kExitAccept;
    case bqsm::Verdict::kReject: return kExitReject;
    case bqsm::Verdict::kProtocolViolation: return kExitViolation;
  }
  return kExitReject;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw bqsm::ConfigError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw bqsm::ConfigError("cannot write '" + path + "'");
}

struct Flags {
  bqsm::ExperimentConfig cfg;
  std::string config_file;
  bool print_transcript = false;
  bool json = false;
};

int run_protocol(const std::string& protocol, Flags& f) {
  f.cfg.protocol = protocol;
  const auto res = bqsm::run_session(f.cfg);
  const std::string text = bqsm::serialize_transcript(res.transcript);
  if (!f.cfg.out.empty()) write_file(f.cfg.out, text);
  if (f.print_transcript) std::cout << text;
  std::cout << protocol << ": " << bqsm::to_string(res.verdict) << " (" << res.transcript.events.size() << " events";
  if (!res.detail.empty()) std::cout << "; " << res.detail;
  std::cout << ")\n";
  return exit_code(res.verdict);
}

int run_game(const std::string& game, Flags& f) {
  f.cfg.protocol = "game-" + game;
  const auto reports = bqsm::run_game(game, f.cfg);
  if (!f.cfg.out.empty()) write_file(f.cfg.out, bqsm::report_json(reports, {}) + "\n");
  if (f.json) {
    std::cout << bqsm::report_json(reports, {}) << '\n';
  } else {
    std::cout << bqsm::report_summary(reports, {});
  }
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.within_bound() && !r.broken;
  return ok ? kExitAccept : kExitReject;
}

int run_verify(const std::string& path) {
  const std::string text = read_file(path);
  bqsm::Transcript t;
  try {
    t = bqsm::parse_transcript(text);
  } catch (const bqsm::ParseError& e) {
    std::cerr << path << ": " << e.what() << '\n';
    return kExitReject;
  }
  const auto check = bqsm::verify_transcript(t);
  if (!check.replay_matches) {
    std::cout << path << ": reject (" << check.detail << ")\n";
    return kExitReject;
  }
  std::cout << path << ": replay matches; verdict " << bqsm::to_string(check.verdict);
  if (!check.detail.empty()) std::cout << " (" << check.detail << ')';
  std::cout << '\n';
  return exit_code(check.verdict);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounded-quantum-storage protocol engine"};
  app.require_subcommand(1);
  app.fallthrough();

  Flags f;
  f.cfg.seed = bqsm::default_seed();
  auto& c = f.cfg;
  app.add_option("--config", f.config_file, "JSON experiment config; explicit flags override it");
  app.add_option("--seed", c.seed, "RNG seed (default: BQSM_SEED or 1)");
  app.add_option("--n", c.n, "qubits per committed bit, or OT qubits");
  app.add_option("--k", c.k, "repetitions, instances, or sum-check variables");
  app.add_option("--ell", c.ell, "OT secret length");
  app.add_option("--q", c.q, "memory bound in qubits");
  app.add_option("--trials", c.trials, "game trials");
  app.add_option("--field-bits", c.field_bits, "sum-check field GF(2^m)");
  app.add_option("--delta", c.delta, "sum-binding radius as a fraction of n");
  app.add_option("--strategy", c.strategy, "prover or adversary strategy");
  app.add_option("--graph", c.graph, "triangle, c5, wi5, star4 or k4");
  app.add_option("--degree", c.degree, "sum-check degree for random polynomials");
  app.add_option("--code", c.code, "ABO code name");
  app.add_option("--choice", c.choice, "committed bit or OT choice; -1 draws it");
  app.add_flag("--randomize-order", c.randomize_order, "NIP: randomize the order of the OT slots");
  app.add_option("--poly", c.poly, "polynomial file for rr-sumcheck");
  app.add_option("--out", c.out, "transcript file (sessions) or JSON report (games)");
  app.add_option("--jobs", c.jobs, "worker threads for game trials");
  app.add_flag("--print-transcript", f.print_transcript, "print the session transcript");
  app.add_flag("--json", f.json, "print game reports as JSON");

  std::string run_name;
  std::string transcript_path;

  auto* commit = app.add_subcommand("commit", "run one bit or string commitment session");
  commit->require_subcommand(1);
  for (const char* scheme : {"dfss", "weak", "abo"}) {
    commit->add_subcommand(scheme, std::string("commitment scheme ") + scheme)
        ->callback([&run_name, scheme] { run_name = std::string("commit-") + scheme; });
  }
  for (const char* p : {"ot", "nip-ham", "rr-sumcheck", "rr-3col"}) {
    app.add_subcommand(p, std::string("run one ") + p + " session")->callback([&run_name, p] { run_name = p; });
  }
  auto* game = app.add_subcommand("game", "run an adversary game and report against the bound");
  game->require_subcommand(1);
  for (const auto& g : bqsm::game_ids()) {
    game->add_subcommand(g, "game " + g)->callback([&run_name, g] { run_name = "game-" + g; });
  }
  auto* verify = app.add_subcommand("verify-transcript", "replay a transcript file and check it");
  verify->add_option("file", transcript_path, "transcript file")->required();
  verify->callback([&run_name] { run_name = "verify"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (!f.config_file.empty()) {
      bqsm::ExperimentConfig base = bqsm::config_from_json(read_file(f.config_file));
      // Flags given on the command line win over the file.
      auto given = [&](const char* name) { return app.count(name) > 0; };
      if (!given("--seed")) c.seed = base.seed;
      if (!given("--n")) c.n = base.n;
      if (!given("--k")) c.k = base.k;
      if (!given("--ell")) c.ell = base.ell;
      if (!given("--q")) c.q = base.q;
      if (!given("--trials")) c.trials = base.trials;
      if (!given("--field-bits")) c.field_bits = base.field_bits;
      if (!given("--delta")) c.delta = base.delta;
      if (!given("--strategy")) c.strategy = base.strategy;
      if (!given("--graph")) c.graph = base.graph;
      if (!given("--degree")) c.degree = base.degree;
      if (!given("--code")) c.code = base.code;
      if (!given("--choice")) c.choice = base.choice;
      if (!given("--randomize-order")) c.randomize_order = base.randomize_order;
      if (!given("--poly")) c.poly = base.poly;
      if (!given("--out")) c.out = base.out;
      if (!given("--jobs")) c.jobs = base.jobs;
    }
    // Games pick their own default adversary.
    if (run_name.rfind("game-", 0) == 0 && app.count("--strategy") == 0 && f.config_file.empty()) c.strategy.clear();
    if (run_name == "verify") return run_verify(transcript_path);
    if (run_name.rfind("game-", 0) == 0) return run_game(run_name.substr(5), f);
    return run_protocol(run_name, f);
  } catch (const bqsm::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const bqsm::CapacityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
