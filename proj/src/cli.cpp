#include "nlfsr/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nlfsr/analysis.hpp"
#include "nlfsr/equivalence.hpp"
#include "nlfsr/spec_format.hpp"
#include "nlfsr/transform.hpp"

namespace nlfsr {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json functions_json(const Nlfsr& r) {
  json out = json::array();
  for (unsigned i = r.length(); i-- > 0;) {
    if (r.g(i).is_zero()) continue;
    out.push_back({{"bit", i}, {"anf", r.feedback(i).to_string()}});
  }
  return out;
}

json metrics_json(const RegisterMetrics& m) {
  return {{"feedback_variables", m.feedback_variables},
          {"feedback_variable_count", m.feedback_variable_count},
          {"max_terms_per_function", m.max_terms_per_function},
          {"max_fanin", m.max_fanin},
          {"nonpure_bits", m.nonpure_bits}};
}

json register_json(const Nlfsr& r) {
  UniformityReport u = uniformity(r);
  FullyShiftedReport fs = fully_shifted_status(r);
  json out = {{"n", r.length()},
              {"tau", u.terminal},
              {"uniform", u.uniform},
              {"fully_shifted", fs.fully_shifted},
              {"functions", functions_json(r)},
              {"metrics", metrics_json(metrics(r))}};
  if (fs.witness) out["shift_witness"] = fs.witness->to_string();
  if (!u.uniform) {
    out["uniformity_violation"] = {{"bit", *u.violating_bit},
                                   {"variable", *u.violating_var}};
  }
  return out;
}

int cmd_check(const Nlfsr& r, bool as_json, std::ostream& out) {
  UniformityReport u = uniformity(r);
  FullyShiftedReport fs = fully_shifted_status(r);
  if (as_json) {
    out << register_json(r).dump(2) << "\n";
  } else {
    out << "n: " << r.length() << "\n";
    out << "terminal bit: " << u.terminal << "\n";
    if (u.uniform) {
      out << "uniform: yes\n";
    } else {
      out << "uniform: no (g" << *u.violating_bit << " reads x"
          << *u.violating_var << ", above terminal bit " << u.terminal
          << ")\n";
    }
    if (fs.fully_shifted) {
      out << "fully shifted: yes\n";
    } else {
      out << "fully shifted: no (" << fs.witness->to_string()
          << " stays uniform)\n";
    }
  }
  return u.uniform && fs.fully_shifted ? 0 : 1;
}

int cmd_simulate(const Nlfsr& r, const std::string& init, std::uint64_t steps,
                 bool as_json, std::ostream& out) {
  State s0 = State::parse(init, r.length());
  BitSequence seq = output_sequence(r, s0, steps);
  if (as_json) {
    json j = {{"n", r.length()},
              {"init", s0.to_string()},
              {"steps", steps},
              {"output", seq.to_string()}};
    out << j.dump(2) << "\n";
  } else {
    out << seq.to_string() << "\n";
  }
  return 0;
}

int cmd_recurrence(const Nlfsr& r, unsigned bit, bool as_json,
                   std::ostream& out) {
  Recurrence rec = derive_recurrence(r, bit);
  if (as_json) {
    json j = {{"n", r.length()},
              {"bit", rec.bit},
              {"recurrence", rec.to_string()}};
    out << j.dump(2) << "\n";
  } else {
    out << rec.to_string() << "\n";
  }
  return 0;
}

void emit_register(const Nlfsr& r, const std::string& header,
                   std::ostream& out) {
  out << "# " << header << "\n" << format_spec(r);
}

int cmd_transform(const Nlfsr& r, bool as_json, std::ostream& out) {
  auto [result, report] = fully_shift(r);
  if (as_json) {
    json j = register_json(result);
    j["algorithm_tau"] = report.algorithm_tau;
    json moves = json::array();
    for (const ShiftMove& m : report.moves) moves.push_back(m.to_string());
    j["moves"] = moves;
    out << j.dump(2) << "\n";
  } else {
    emit_register(result,
                  "fully shifted Galois form (tau = " +
                      std::to_string(report.tau_after) + ")",
                  out);
  }
  return 0;
}

int cmd_shift(const Nlfsr& r, unsigned from, unsigned to,
              const std::string& term, const std::string& guard_name,
              bool as_json, std::ostream& out) {
  ShiftGuard guard = ShiftGuard::raw;
  if (guard_name == "theorem2") {
    guard = ShiftGuard::theorem2;
  } else if (guard_name == "lemma3") {
    guard = ShiftGuard::lemma3;
  } else if (guard_name != "raw") {
    throw std::invalid_argument("unknown guard: " + guard_name);
  }
  ShiftMove move{from, to, parse_monomial(term, r.length())};
  Nlfsr result = apply_shift(r, move, guard);
  if (as_json) {
    json j = register_json(result);
    j["move"] = move.to_string();
    j["guard"] = guard_name;
    out << j.dump(2) << "\n";
  } else {
    emit_register(result,
                  "after " + move.to_string() + " (guard: " + guard_name + ")",
                  out);
  }
  return 0;
}

int cmd_verify(const Nlfsr& r, const Nlfsr& other, const std::string& method,
               const std::string& init, std::uint64_t window,
               std::uint64_t horizon, bool as_json, std::ostream& out) {
  EquivalenceVerdict verdict;
  if (method == "recurrence") {
    verdict = prove_equivalent_uniform(r, other);
  } else if (method == "exhaustive") {
    verdict = search_equivalent_exhaustive(r, other, horizon);
  } else if (method == "window") {
    State s2 = init.empty() ? State{1, other.length()}
                            : State::parse(init, other.length());
    verdict = window_check(r, other, s2, window);
  } else {
    throw std::invalid_argument("unknown method: " + method);
  }

  bool positive = verdict.status == EqStatus::proven_equivalent ||
                  verdict.status == EqStatus::witness_found;
  if (as_json) {
    json j = {{"n", r.length()},
              {"method", to_string(verdict.method)},
              {"verdict", to_string(verdict.status)},
              {"detail", verdict.detail}};
    if (verdict.witness) {
      j["witness"] = {{"left", verdict.witness->first.to_string()},
                      {"right", verdict.witness->second.to_string()}};
    }
    if (verdict.recurrence_left)
      j["recurrence_left"] = verdict.recurrence_left->to_string();
    if (verdict.recurrence_right)
      j["recurrence_right"] = verdict.recurrence_right->to_string();
    if (verdict.mismatch_at) j["mismatch_at"] = *verdict.mismatch_at;
    out << j.dump(2) << "\n";
  } else {
    out << "method: " << to_string(verdict.method) << "\n";
    out << "verdict: " << to_string(verdict.status) << "\n";
    if (!verdict.detail.empty()) out << verdict.detail << "\n";
  }
  return positive ? 0 : 1;
}

int cmd_analyze(const Nlfsr& r, const std::string& init, bool as_json,
                std::ostream& out) {
  RegisterMetrics m = metrics(r);
  std::optional<PeriodCycleReport> periods;
  std::optional<GolombReport> golomb;
  if (!init.empty()) {
    State s0 = State::parse(init, r.length());
    periods = period_cycle_diagnostic(r, s0);
    BitSequence seq = output_sequence(r, s0, periods->state_period);
    seq.period = periods->output_period;
    golomb = golomb_check(seq);
  }

  if (as_json) {
    json j = register_json(r);
    if (periods) {
      j["state_period"] = periods->state_period;
      j["output_period"] = periods->output_period;
      j["periods_diverge"] = periods->diverged;
    }
    if (golomb) {
      j["golomb"] = {{"ones", golomb->ones},
                     {"zeros", golomb->zeros},
                     {"total_runs", golomb->total_runs},
                     {"postulate1", golomb->postulate1_ok},
                     {"postulate2", golomb->postulate2_ok}};
    }
    out << j.dump(2) << "\n";
  } else {
    out << "n: " << r.length() << "\n";
    out << "feedback variables (" << m.feedback_variable_count << "):";
    for (unsigned v : m.feedback_variables) out << " x" << v;
    out << "\n";
    out << "max terms per function: " << m.max_terms_per_function << "\n";
    out << "max fan-in: " << m.max_fanin << "\n";
    out << "non-pure bits: " << m.nonpure_bits << "\n";
    if (periods) {
      out << "state period: " << periods->state_period << "\n";
      out << "output period: " << periods->output_period << "\n";
      out << "periods diverge: " << (periods->diverged ? "yes" : "no") << "\n";
    }
    if (golomb) {
      out << "golomb: ones=" << golomb->ones << " zeros=" << golomb->zeros
          << " runs=" << golomb->total_runs << " postulate1="
          << (golomb->postulate1_ok ? "yes" : "no") << " postulate2="
          << (golomb->postulate2_ok ? "yes" : "no") << "\n";
    }
  }
  return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"NLFSR modeling, transformation and verification tool"};
  app.require_subcommand(1);

  std::string spec_path;
  std::string init;
  std::string term;
  std::string guard = "raw";
  std::string method = "recurrence";
  std::string other_path;
  std::uint64_t steps = 1;
  std::uint64_t window = 0;
  std::uint64_t horizon = 0;
  unsigned bit = 0;
  unsigned from = 0;
  unsigned to = 0;
  bool full = false;
  bool as_json = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("spec", spec_path, "register spec file")->required();
    cmd->add_flag("--json", as_json, "structured report");
  };

  CLI::App* check = app.add_subcommand(
      "check", "report terminal bit, uniformity and fully-shifted status");
  add_common(check);

  CLI::App* simulate =
      app.add_subcommand("simulate", "emit the output sequence");
  add_common(simulate);
  simulate->add_option("--init", init, "initial state (binary or 0x hex)")
      ->required();
  simulate->add_option("--steps", steps, "number of output bits")->required();

  CLI::App* recurrence =
      app.add_subcommand("recurrence", "derive the recurrence of one bit");
  add_common(recurrence);
  recurrence->add_option("--bit", bit, "bit index")->required();

  CLI::App* transform =
      app.add_subcommand("transform", "rewrite into the fully shifted form");
  add_common(transform);
  transform->add_flag("--full", full, "compute the fully shifted register");

  CLI::App* shift = app.add_subcommand("shift", "move one product-term");
  add_common(shift);
  shift->add_option("--from", from, "source function index")->required();
  shift->add_option("--to", to, "destination function index")->required();
  shift->add_option("--term", term, "product-term, e.g. x1*x3")->required();
  shift->add_option("--guard", guard, "raw|theorem2|lemma3");

  CLI::App* verify =
      app.add_subcommand("verify", "compare against another register");
  add_common(verify);
  verify->add_option("--other", other_path, "second register spec file")
      ->required();
  verify->add_option("--method", method, "recurrence|exhaustive|window")
      ->required();
  verify->add_option("--init", init, "initial state for the window method");
  verify->add_option("--window", window, "window length (default 8n)");
  verify->add_option("--horizon", horizon,
                     "exhaustive horizon (default 2^n + 2n)");

  CLI::App* analyze =
      app.add_subcommand("analyze", "structural and sequence statistics");
  add_common(analyze);
  analyze->add_option("--init", init,
                      "initial state for period and run statistics");

  std::vector<const char*> argv;
  argv.push_back("nlfsr");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Nlfsr r = parse_spec(read_file(spec_path));
    if (app.got_subcommand(check)) return cmd_check(r, as_json, out);
    if (app.got_subcommand(simulate))
      return cmd_simulate(r, init, steps, as_json, out);
    if (app.got_subcommand(recurrence))
      return cmd_recurrence(r, bit, as_json, out);
    if (app.got_subcommand(transform)) {
      if (!full) throw std::invalid_argument("transform requires --full");
      return cmd_transform(r, as_json, out);
    }
    if (app.got_subcommand(shift))
      return cmd_shift(r, from, to, term, guard, as_json, out);
    if (app.got_subcommand(verify)) {
      Nlfsr other = parse_spec(read_file(other_path));
      if (window == 0) window = 8 * std::max(r.length(), other.length());
      return cmd_verify(r, other, method, init, window, horizon, as_json, out);
    }
    if (app.got_subcommand(analyze)) return cmd_analyze(r, init, as_json, out);
    err << "error: no command\n";
    return 2;
  } catch (const NotDerivableError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const ShiftRejectedError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace nlfsr
