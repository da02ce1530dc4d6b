#include "gstlab/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>

#include <CLI11.hpp>

#include "gstlab/bisim.hpp"
#include "gstlab/dot.hpp"
#include "gstlab/generators.hpp"
#include "gstlab/hm.hpp"
#include "gstlab/lazy.hpp"
#include "gstlab/model_check.hpp"
#include "gstlab/model_file.hpp"
#include "gstlab/surrogate.hpp"

namespace gstlab {

namespace {

// Carries the final exit status out of a command handler.
struct CliError {
  int code;
  std::string message;
};

[[noreturn]] void usage_error(const std::string& message) { throw CliError{2, message}; }

ModelFile load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) usage_error(path + ": cannot open");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_model(buf.str());
  } catch (const ModelError& e) {
    usage_error(path + ":" + std::to_string(e.line) + ": " + e.what());
  }
}

SymbolicGst load_gst(const std::string& path) {
  ModelFile m = load_model(path);
  auto* g = std::get_if<SymbolicGst>(&m);
  if (!g) usage_error(path + ": expected a gst model");
  ValidationReport report = validate(*g);
  if (!report.ok) {
    std::string msg = path + ": invalid model";
    for (const auto& v : report.violations) msg += "\n  " + v;
    usage_error(msg);
  }
  return std::move(*g);
}

KripkeStructure load_kripke(const std::string& path) {
  ModelFile m = load_model(path);
  auto* k = std::get_if<KripkeStructure>(&m);
  if (!k) usage_error(path + ": expected a kripke model");
  return std::move(*k);
}

int state_of(const KripkeStructure& k, const std::string& id, const std::string& path) {
  int idx = k.state_index(id);
  if (idx < 0) usage_error(path + ": no state '" + id + "'");
  return idx;
}

int initial_of(const KripkeStructure& k, const std::string& path) {
  if (!k.initial) usage_error(path + ": no initial state; pass --states");
  return *k.initial;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) usage_error(path + ": cannot write");
  out << content;
}

FormulaPtr parse_formula_arg(const std::string& text) {
  try {
    return parse_formula(text);
  } catch (const ParseError& e) {
    usage_error("formula: " + std::string(e.what()));
  }
}

void report_warnings(const CheckResult& r, std::ostream& err) {
  for (const auto& w : r.warnings) err << "warning: " << w << "\n";
}

int cmd_surrogate(const std::string& file, const std::string& out_path,
                  const std::string& dot_path, std::ostream& out) {
  SymbolicGst g = load_gst(file);
  KripkeStructure sur = build_surrogate(g);
  out << sur.name << ": " << sur.states.size() << " states, " << sur.transitions.size()
      << " transitions\n";
  if (!out_path.empty()) write_file(out_path, format_kripke(sur));
  if (!dot_path.empty()) write_file(dot_path, to_dot(sur));
  return 0;
}

int cmd_minimize(const std::string& file, std::ostream& out) {
  KripkeStructure k = load_kripke(file);
  MinimizeResult min = minimize(k);
  out << "blocks: " << min.blocks.size() << "\n";
  for (std::size_t b = 0; b < min.blocks.size(); ++b) {
    out << "block " << b << ":";
    for (int s : min.blocks[b]) out << " " << k.states[static_cast<std::size_t>(s)];
    out << "\n";
  }
  out << "rounds:";
  for (int r : min.rounds) out << " " << r;
  out << "\n";
  return 0;
}

int cmd_bisim(const std::string& file1, const std::string& file2, const std::string& states,
              std::ostream& out) {
  KripkeStructure k1 = load_kripke(file1);
  KripkeStructure k2 = load_kripke(file2);
  int s1, s2;
  if (states.empty()) {
    s1 = initial_of(k1, file1);
    s2 = initial_of(k2, file2);
  } else {
    auto comma = states.find(',');
    if (comma == std::string::npos) usage_error("--states expects 'STATE,STATE'");
    s1 = state_of(k1, states.substr(0, comma), file1);
    s2 = state_of(k2, states.substr(comma + 1), file2);
  }
  if (bisim(k1, s1, k2, s2)) {
    out << "bisimilar\n";
    return 0;
  }
  auto f = distinguishing_formula(k1, s1, k2, s2);
  out << format_formula(*f) << "\n";
  return 1;
}

int gst_pair_verdict(const SymbolicGst& g1, const SymbolicGst& g2, bool related,
                     const char* yes, std::ostream& out) {
  if (related) {
    out << yes << "\n";
    return 0;
  }
  KripkeStructure sur1 = build_surrogate(g1);
  KripkeStructure sur2 = build_surrogate(g2);
  auto f = distinguishing_formula(sur1, *sur1.initial, sur2, *sur2.initial);
  out << format_formula(*f) << "\n";
  return 1;
}

int cmd_weakbisim(const std::string& file1, const std::string& file2, std::ostream& out) {
  SymbolicGst g1 = load_gst(file1);
  SymbolicGst g2 = load_gst(file2);
  return gst_pair_verdict(g1, g2, weak_bisim_gst(g1, g2), "weakly bisimilar", out);
}

int cmd_strongbisim(const std::string& file1, const std::string& file2, std::ostream& out) {
  SymbolicGst g1 = load_gst(file1);
  SymbolicGst g2 = load_gst(file2);
  bool related;
  try {
    related = strong_bisim_discrete(g1, g2);
  } catch (const std::invalid_argument& e) {
    usage_error(e.what());
  }
  return gst_pair_verdict(g1, g2, related, "strongly bisimilar", out);
}

int cmd_check(const std::string& file, const std::string& formula_text, const std::string& state,
              std::ostream& out, std::ostream& err) {
  FormulaPtr f = parse_formula_arg(formula_text);
  ModelFile m = load_model(file);
  CheckResult result;
  if (auto* g = std::get_if<SymbolicGst>(&m)) {
    if (!state.empty()) usage_error("--state applies only to kripke models");
    ValidationReport report = validate(*g);
    if (!report.ok) usage_error(file + ": invalid model");
    result = mc_gst(*g, f);
  } else {
    auto& k = std::get<KripkeStructure>(m);
    int s = state.empty() ? initial_of(k, file) : state_of(k, state, file);
    result = mc_kripke(k, s, f);
  }
  report_warnings(result, err);
  out << (result.holds ? "true" : "false") << "\n";
  return result.holds ? 0 : 1;
}

int cmd_distinguish(const std::string& file1, const std::string& s1, const std::string& file2,
                    const std::string& s2, std::ostream& out) {
  KripkeStructure k1 = load_kripke(file1);
  KripkeStructure k2 = load_kripke(file2);
  auto f = distinguishing_formula(k1, state_of(k1, s1, file1), k2, state_of(k2, s2, file2));
  if (!f) usage_error("states are bisimilar; nothing distinguishes them");
  out << format_formula(*f) << "\n";
  return 0;
}

int cmd_schemata(const std::string& file, std::ostream& out) {
  KripkeStructure k = load_kripke(file);
  SchemataReport report = schemata_check(k);
  auto name = [&k](int s) { return k.states[static_cast<std::size_t>(s)]; };
  out << "transitivity: " << (report.transitivity_ok ? "pass" : "fail") << "\n";
  if (report.transitivity_break) {
    const auto& b = *report.transitivity_break;
    out << "  missing " << name(b.src) << " -[" << format_word(concat(b.w1, b.w2)) << "]-> "
        << name(b.dst) << " (via " << name(b.mid) << ")\n";
  }
  out << "weak density: " << (report.weak_density_ok ? "pass" : "fail") << "\n";
  if (report.density_break) {
    const auto& b = *report.density_break;
    out << "  no intermediate for " << name(b.src) << " -[" << format_word(b.word) << "]-> "
        << name(b.dst) << " at split [" << format_word(b.left) << " | " << format_word(b.right)
        << "]\n";
  }
  return report.ok() ? 0 : 1;
}

int cmd_imagefinite(const std::string& file, std::ostream& out) {
  SymbolicGst g = load_gst(file);
  ImageFiniteReport report = image_finite(g);
  out << "image-finite: " << report.blocks << " classes\n";
  for (const auto& s : report.witness.states) out << "  " << s << "\n";
  return 0;
}

int cmd_stratified(const std::string& input, const std::string& s, const std::string& t, int depth,
                   std::optional<int> width, std::ostream& out) {
  if (depth < 0) usage_error("--depth must be nonnegative");
  int agree;
  if (input.rfind("gen:", 0) == 0) {
    LazyKripke lz;
    try {
      lz = generator(input.substr(4));
    } catch (const std::invalid_argument& e) {
      usage_error(e.what());
    }
    if (width) {
      KripkeStructure snap = truncate(lz, depth, *width);
      agree = stratified(snap, state_of(snap, s, input), state_of(snap, t, input), depth);
    } else {
      agree = stratified(lz, s, t, depth);
    }
  } else {
    if (width) usage_error("--width applies only to gen: inputs");
    KripkeStructure k = load_kripke(input);
    agree = stratified(k, state_of(k, s, input), state_of(k, t, input), depth);
  }
  out << "agree to depth " << agree << " of " << depth << "\n";
  return agree == depth ? 0 : 1;
}

int cmd_export_dot(const std::string& file, bool blocks, std::ostream& out) {
  KripkeStructure k = load_kripke(file);
  if (blocks) {
    MinimizeResult min = minimize(k);
    out << to_dot(k, min.block_of);
  } else {
    out << to_dot(k);
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Trees with continuous branches: surrogates, bisimulation, model checking"};
  app.name("gstlab");
  app.require_subcommand(1);
  int code = 0;

  std::string file1, file2, state1, state2, states, formula_text, out_path, dot_path, input;
  int depth = 0;
  std::optional<int> width;
  bool blocks = false;

  auto* sur = app.add_subcommand("surrogate", "Build the class quotient of a tree");
  sur->add_option("gst", file1, "tree model file")->required();
  sur->add_option("--out", out_path, "write the quotient as a kripke model");
  sur->add_option("--dot", dot_path, "write the quotient as a DOT digraph");
  sur->callback([&] { code = cmd_surrogate(file1, out_path, dot_path, out); });

  auto* mini = app.add_subcommand("minimize", "Coarsest bisimulation partition");
  mini->add_option("kf", file1, "kripke model file")->required();
  mini->callback([&] { code = cmd_minimize(file1, out); });

  auto* bis = app.add_subcommand("bisim", "Compare two kripke states");
  bis->add_option("kf1", file1, "first kripke model")->required();
  bis->add_option("kf2", file2, "second kripke model")->required();
  bis->add_option("--states", states, "pair 'STATE,STATE' (default: the initial states)");
  bis->callback([&] { code = cmd_bisim(file1, file2, states, out); });

  auto* weak = app.add_subcommand("weakbisim", "Compare two trees by trajectory matching");
  weak->add_option("gst1", file1, "first tree model")->required();
  weak->add_option("gst2", file2, "second tree model")->required();
  weak->callback([&] { code = cmd_weakbisim(file1, file2, out); });

  auto* strong = app.add_subcommand("strongbisim", "Compare two discrete trees step for step");
  strong->add_option("gst1", file1, "first tree model")->required();
  strong->add_option("gst2", file2, "second tree model")->required();
  strong->callback([&] { code = cmd_strongbisim(file1, file2, out); });

  auto* chk = app.add_subcommand("check", "Evaluate a modal formula");
  chk->add_option("file", file1, "tree or kripke model file")->required();
  chk->add_option("formula", formula_text, "formula text")->required();
  chk->add_option("--state", state1, "kripke state to check at (default: initial)");
  chk->callback([&] { code = cmd_check(file1, formula_text, state1, out, err); });

  auto* dis = app.add_subcommand("distinguish", "Formula separating two kripke states");
  dis->add_option("kf1", file1, "first kripke model")->required();
  dis->add_option("s", state1, "state of the first model")->required();
  dis->add_option("kf2", file2, "second kripke model")->required();
  dis->add_option("t", state2, "state of the second model")->required();
  dis->callback([&] { code = cmd_distinguish(file1, state1, file2, state2, out); });

  auto* sch = app.add_subcommand("schemata", "Composite-closure and split-density checks");
  sch->add_option("kf", file1, "kripke model file")->required();
  sch->callback([&] { code = cmd_schemata(file1, out); });

  auto* imf = app.add_subcommand("imagefinite", "Class quotient size of a tree");
  imf->add_option("gst", file1, "tree model file")->required();
  imf->callback([&] { code = cmd_imagefinite(file1, out); });

  auto* str = app.add_subcommand("stratified", "Depth-bounded equivalence of two states");
  str->add_option("input", input, "kripke model file or gen:NAME")->required();
  str->add_option("s", state1, "first state")->required();
  str->add_option("t", state2, "second state")->required();
  str->add_option("--depth", depth, "matching depth")->required();
  str->add_option("--width", width, "snapshot family width (gen: inputs only)");
  str->callback([&] { code = cmd_stratified(input, state1, state2, depth, width, out); });

  auto* dot = app.add_subcommand("export-dot", "DOT digraph of a kripke model");
  dot->add_option("kf", file1, "kripke model file")->required();
  dot->add_flag("--blocks", blocks, "annotate states with their bisimulation block");
  dot->callback([&] { code = cmd_export_dot(file1, blocks, out); });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int cli_code = app.exit(e, out, err);
    return cli_code == 0 ? 0 : 2;
  } catch (const CliError& e) {
    err << e.message << "\n";
    return e.code;
  }
  return code;
}

}  // namespace gstlab
