#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bqsm/adversary.hpp"
#include "bqsm/entropy.hpp"
#include "bqsm/errors.hpp"
#include "bqsm/gf2m.hpp"
#include "bqsm/hashing.hpp"
#include "bqsm/ot.hpp"
#include "bqsm/polynomial.hpp"
#include "bqsm/rr.hpp"
#include "bqsm/session.hpp"
#include "bqsm/sumcheck.hpp"
#include "bqsm/transcript.hpp"

namespace py = pybind11;
using namespace bqsm;

PYBIND11_MODULE(_bqsm, m) {
  m.doc() = "Bounded-quantum-storage protocol engine";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<ProtocolViolation>(m, "ProtocolViolation", PyExc_RuntimeError);
  py::register_exception<BoundViolation>(m, "BoundViolation", PyExc_RuntimeError);
  py::register_exception<CapacityError>(m, "CapacityError", PyExc_MemoryError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<ExperimentConfig>(m, "ExperimentConfig")
      .def(py::init<>())
      .def_readwrite("protocol", &ExperimentConfig::protocol)
      .def_readwrite("seed", &ExperimentConfig::seed)
      .def_readwrite("n", &ExperimentConfig::n)
      .def_readwrite("k", &ExperimentConfig::k)
      .def_readwrite("ell", &ExperimentConfig::ell)
      .def_readwrite("field_bits", &ExperimentConfig::field_bits)
      .def_readwrite("delta", &ExperimentConfig::delta)
      .def_readwrite("q", &ExperimentConfig::q)
      .def_readwrite("trials", &ExperimentConfig::trials)
      .def_readwrite("strategy", &ExperimentConfig::strategy)
      .def_readwrite("graph", &ExperimentConfig::graph)
      .def_readwrite("degree", &ExperimentConfig::degree)
      .def_readwrite("code", &ExperimentConfig::code)
      .def_readwrite("choice", &ExperimentConfig::choice)
      .def_readwrite("randomize_order", &ExperimentConfig::randomize_order)
      .def_readwrite("poly", &ExperimentConfig::poly)
      .def_readwrite("out", &ExperimentConfig::out)
      .def_readwrite("jobs", &ExperimentConfig::jobs)
      .def("to_json", [](const ExperimentConfig& c) { return config_to_json(c); })
      .def_static("from_json", &config_from_json)
      .def("validate", [](const ExperimentConfig& c) { validate(c); })
      .def(py::self == py::self);

  m.def("session_protocols", &session_protocols);
  m.def("game_ids", &game_ids);
  m.def("default_seed", &default_seed);

  m.def(
      "run_session",
      [](const ExperimentConfig& c) {
        SessionResult r;
        {
          py::gil_scoped_release release;
          r = run_session(c);
        }
        return py::make_tuple(to_string(r.verdict), serialize_transcript(r.transcript), r.detail);
      },
      "Runs one session; returns (verdict, transcript text, detail).");

  m.def(
      "verify_transcript",
      [](const std::string& text) {
        const Transcript t = parse_transcript(text);
        TranscriptCheck r;
        {
          py::gil_scoped_release release;
          r = verify_transcript(t);
        }
        return py::make_tuple(r.replay_matches, to_string(r.verdict), r.detail);
      },
      "Replays a transcript; returns (replay matches, verdict, detail).");

  m.def(
      "run_game",
      [](const std::string& game, const ExperimentConfig& c) {
        std::vector<GameReport> reports;
        {
          py::gil_scoped_release release;
          reports = run_game(game, c);
        }
        return report_json(reports, {});
      },
      "Runs a game; returns the JSON report.");

  m.def("binary_entropy", &binary_entropy);
  m.def("ball_size_bound", &ball_size_bound);
  m.def("hamming_ball_size", &hamming_ball_size);
  m.def("ot_security_bound", &ot_security_bound, py::arg("n"), py::arg("ell"), py::arg("q"), py::arg("k"));
  m.def("default_ot_qubits", &default_ot_qubits, py::arg("ell"), py::arg("q") = 0);
  m.def("sumcheck_soundness_bound", &sumcheck_soundness_bound);
  m.def("rr_soundness_bound", &rr_soundness_bound);
  m.def("weak_bc_best_analytic_bound", &weak_bc_best_analytic_bound);

  m.def(
      "sum_binding_oracle",
      [](std::size_t n, std::size_t radius, std::uint64_t x0, std::uint64_t x1, bool full) {
        const auto r = weak_bc_sum_binding_oracle(n, radius, x0, x1, full);
        py::dict d;
        d["norm"] = r.norm;
        d["chain_bound"] = r.chain_bound;
        d["analytic_bound"] = r.analytic_bound;
        d["vacuous"] = r.vacuous;
        return d;
      },
      py::arg("n"), py::arg("radius"), py::arg("x0"), py::arg("x1"), py::arg("full_matrices") = false);

  m.def(
      "toeplitz_apply",
      [](std::size_t in_len, std::size_t out_len, const Bits& seed, const Bits& x) {
        return ToeplitzHash(in_len, out_len, seed).apply(x);
      },
      py::arg("in_len"), py::arg("out_len"), py::arg("seed"), py::arg("x"));

  m.def("irreducible_poly", &irreducible_poly);
  m.def("gf_mul", [](unsigned bits, std::uint64_t a, std::uint64_t b) { return GF2m(bits).mul(a, b); });
  m.def("gf_inv", [](unsigned bits, std::uint64_t a) { return GF2m(bits).inv(a); });
  m.def(
      "sumcheck_claim", [](const std::string& text) { return sumcheck_claim(MultivariatePolynomial::parse(text)); },
      "Sum over the Boolean cube of a polynomial in the text format.");
}
