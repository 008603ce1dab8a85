#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "yb/braid.hpp"
#include "yb/classifier.hpp"
#include "yb/entanglement.hpp"
#include "yb/families.hpp"
#include "yb/json_io.hpp"
#include "yb/oracle.hpp"

namespace yb::cli {

namespace {

using nlohmann::json;

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) throw InputError("cannot open " + path);
  buffer << file.rdbuf();
  return buffer.str();
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

int cmd_verify(const std::string& path, double tol, std::istream& in, std::ostream& out) {
  const SquareMatrix m = parse_matrix_document(read_input(path, in));
  if (m.rows() != 4) throw InputError("verify expects a 4x4 matrix");

  json report;
  const bool eight_vertex = eight_vertex_violations(m, tol).empty();
  const double braided = braided_ybe_residual(m);
  report["is_eight_vertex"] = eight_vertex;
  report["tol"] = tol;
  report["oracle"] = {{"braided", braided}, {"algebraic_swap_composed", algebraic_ybe_residual(swap_compose(m))}};

  bool satisfies_ybe = braided <= tol;
  if (eight_vertex) {
    const ConditionReport c = condition_report(from_matrix(m, tol));
    report["ybe_residuals"] = c.ybe_residuals;
    report["unitarity_residuals"] = c.unitarity_residuals;
    report["max_ybe_residual"] = c.max_ybe();
    report["max_unitarity_residual"] = c.max_unitarity();
    satisfies_ybe = c.max_ybe() <= tol;
  } else {
    report["ybe_residuals"] = nullptr;
    report["unitarity_residuals"] = nullptr;
  }
  const bool unitary = is_unitary(m, tol);
  report["satisfies_ybe"] = satisfies_ybe;
  report["is_unitary"] = unitary;
  report["pass"] = satisfies_ybe && unitary;
  emit(out, report);
  return satisfies_ybe && unitary ? kPass : kVerdictFalse;
}

int cmd_classify(const std::string& path, double tol, std::istream& in, std::ostream& out) {
  const SquareMatrix m = parse_matrix_document(read_input(path, in));
  if (m.rows() != 4) throw InputError("classify expects a 4x4 matrix");
  out << report_to_json(classify(m, tol)) << '\n';
  return kPass;
}

struct GenerateArgs {
  std::string family;
  std::vector<double> phases;
  std::optional<double> alpha;
  std::optional<double> beta;
  std::optional<std::string> sign;
  std::uint64_t seed = 0;
  int restarts = 50;
};

int parse_sign(const std::string& s) {
  if (s == "+" || s == "+1" || s == "1") return 1;
  if (s == "-" || s == "-1") return -1;
  throw InputError("--sign must be + or -");
}

int cmd_generate(const GenerateArgs& args, std::ostream& out, std::ostream& err) {
  std::mt19937_64 rng(args.seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  const auto phases = [&](std::size_t count) {
    if (args.phases.empty()) {
      std::vector<double> p(count);
      for (double& x : p) x = angle(rng);
      return p;
    }
    if (args.phases.size() != count) {
      throw InputError("--phases expects " + std::to_string(count) + " values for " + args.family);
    }
    return args.phases;
  };

  EightVertexGate gate;
  json doc;
  if (args.family == "case1") {
    const auto p = phases(4);
    gate = gen_case1(p[0], p[1], p[2], p[3]);
  } else if (args.family == "case2") {
    const auto p = phases(3);
    gate = gen_case2(p[0], p[1], p[2]);
  } else if (args.family == "case3") {
    const double alpha = args.alpha ? *args.alpha : angle(rng);
    const double beta = args.beta ? *args.beta : angle(rng);
    const int sign = args.sign ? parse_sign(*args.sign) : (rng() & 1 ? 1 : -1);
    gate = gen_case3(alpha, beta, sign);
  } else if (args.family == "case4") {
    const auto result = solve_case4(args.seed, args.restarts);
    if (const auto* failure = std::get_if<Infeasible>(&result)) {
      err << "case4 solver found no solution: best residual " << failure->best_residual
          << " after " << failure->restarts << " restarts\n";
      emit(out, json{{"family", "case4"},
                     {"infeasible", {{"best_residual", failure->best_residual},
                                     {"restarts", failure->restarts}}}});
      return kInfeasible;
    }
    gate = std::get<EightVertexGate>(result);
  } else {
    throw InputError("unknown family '" + args.family + "'");
  }
  doc["family"] = args.family;
  doc["gate"] = gate_to_json(gate);
  emit(out, doc);
  return kPass;
}

int cmd_braid(const std::string& path, const std::string& word_text, int strands, double tol,
              std::istream& in, std::ostream& out) {
  const SquareMatrix m = parse_matrix_document(read_input(path, in));
  if (m.rows() != 4) throw InputError("braid expects a 4x4 matrix");
  const BraidWord word = parse_braid_word(word_text, strands);
  const SquareMatrix result = evaluate(word, m);
  json doc;
  doc["strands"] = strands;
  doc["word"] = to_string(word);
  doc["dim"] = result.rows();
  doc["matrix"] = matrix_to_json(result);
  doc["is_unitary"] = is_unitary(result, tol);
  doc["braid_relation_residual"] = strands >= 3 ? braid_relation_residual(m, 3) : braided_ybe_residual(m);
  emit(out, doc);
  return kPass;
}

std::vector<double> parse_numbers(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("bad number '" + item + "' in --state");
    }
  }
  return values;
}

TwoQubitState parse_state(const std::string& text) {
  const auto semi = text.find(';');
  const auto re = parse_numbers(text.substr(0, semi));
  const auto im = semi == std::string::npos ? std::vector<double>(4, 0.0)
                                            : parse_numbers(text.substr(semi + 1));
  if (re.size() != 4 || im.size() != 4) {
    throw InputError("--state expects \"re0,re1,re2,re3[;im0,im1,im2,im3]\"");
  }
  return {{re[0], im[0]}, {re[1], im[1]}, {re[2], im[2]}, {re[3], im[3]}};
}

int cmd_concurrence(const std::string& state_text, const std::string& apply_path, std::istream& in,
                    std::ostream& out) {
  TwoQubitState s = parse_state(state_text);
  json doc;
  if (!apply_path.empty()) {
    const SquareMatrix m = parse_matrix_document(read_input(apply_path, in));
    if (m.rows() != 4) throw InputError("--apply expects a 4x4 matrix");
    s = apply_gate(m, s);
    doc["state"] = json::array({complex_to_json(s.x), complex_to_json(s.y), complex_to_json(s.z),
                                complex_to_json(s.w)});
  }
  doc["concurrence"] = concurrence(s);
  emit(out, doc);
  return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Eight-vertex Yang-Baxter gate toolkit", "ybgate"};
  app.require_subcommand(1);
  double tol = kDefaultTol;
  app.add_option("--tol", tol, "absolute tolerance for verdicts")->check(CLI::NonNegativeNumber);

  std::string input;
  auto* verify = app.add_subcommand("verify", "check Yang-Baxter and unitarity conditions");
  verify->add_option("input", input, "matrix or gate JSON (- for stdin)")->required();
  verify->add_option("--tol", tol)->check(CLI::NonNegativeNumber);

  auto* classify_cmd = app.add_subcommand("classify", "classify a 4x4 matrix");
  classify_cmd->add_option("input", input, "matrix or gate JSON (- for stdin)")->required();
  classify_cmd->add_option("--tol", tol)->check(CLI::NonNegativeNumber);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "emit a gate from one of the four families");
  generate->add_option("--family", gen.family)->required()->check(
      CLI::IsMember({"case1", "case2", "case3", "case4"}));
  generate->add_option("--phases", gen.phases, "case1: a,d,e,h; case2: b,c,g (radians)")
      ->delimiter(',');
  generate->add_option("--alpha", gen.alpha, "case3 diagonal phase");
  generate->add_option("--beta", gen.beta, "case3 phase of b");
  generate->add_option("--sign", gen.sign, "case3 sign of d: + or -");
  generate->add_option("--seed", gen.seed, "seed for random parameters and the case4 solver");
  generate->add_option("--restarts", gen.restarts, "case4 solver restarts")->check(CLI::PositiveNumber);

  std::string word;
  int strands = 3;
  auto* braid = app.add_subcommand("braid", "evaluate a braid word on a gate");
  braid->add_option("input", input, "matrix or gate JSON (- for stdin)")->required();
  braid->add_option("word", word, "letters like \"s1 s2 S1\" (upper case = inverse)")->required();
  braid->add_option("--n", strands, "strand count");
  braid->add_option("--tol", tol)->check(CLI::NonNegativeNumber);

  std::string state;
  std::string apply_path;
  auto* conc = app.add_subcommand("concurrence", "concurrence of a two-qubit state");
  conc->add_option("--state", state, "\"re0,re1,re2,re3[;im0,im1,im2,im3]\"")->required();
  conc->add_option("--apply", apply_path, "gate applied to the state first");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (*verify) return cmd_verify(input, tol, in, out);
    if (*classify_cmd) return cmd_classify(input, tol, in, out);
    if (*generate) return cmd_generate(gen, out, err);
    if (*braid) return cmd_braid(input, word, strands, tol, in, out);
    if (*conc) return cmd_concurrence(state, apply_path, in, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const BraidRangeError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const ZeroState& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace yb::cli
