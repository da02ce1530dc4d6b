#include "gstlab/model_file.hpp"

#include <cctype>
#include <memory>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace gstlab {

namespace {

// Inside attach blocks `@` parses to this vertex id, so child files never
// need to name their own root.
const std::string kChildRoot = "root";

struct Tok {
  std::string text;
  int line;
};

bool structural(char c) {
  return c == '{' || c == '}' || c == ';' || c == ',' || c == '[' || c == ']';
}

// Identifiers are maximal runs of non-space, non-structural characters, so
// state ids like "v:r" or "e1:0/v:leaf" survive as single tokens.  A single
// trailing colon splits off ("e1:" is the id "e1" followed by ':'), which is
// how edge and prop headers are delimited.
std::vector<Tok> lex(const std::string& text) {
  std::vector<Tok> toks;
  int line = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (structural(c)) {
      toks.push_back({std::string(1, c), line});
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
           !structural(text[i]) && text[i] != '#') {
      ++i;
    }
    std::string word = text.substr(start, i - start);
    if (word.size() > 1 && word.back() == ':') {
      toks.push_back({word.substr(0, word.size() - 1), line});
      toks.push_back({":", line});
    } else {
      toks.push_back({std::move(word), line});
    }
  }
  return toks;
}

struct Cursor {
  std::vector<Tok> toks;
  std::size_t pos = 0;

  int line() const {
    if (pos < toks.size()) return toks[pos].line;
    return toks.empty() ? 1 : toks.back().line;
  }

  [[noreturn]] void fail(const std::string& message) const { throw ModelError(line(), message); }

  bool done() const { return pos >= toks.size(); }

  const std::string& peek() const {
    static const std::string empty;
    return pos < toks.size() ? toks[pos].text : empty;
  }

  std::string next(const std::string& what) {
    if (done()) fail("unexpected end of input, expected " + what);
    return toks[pos++].text;
  }

  void expect(const std::string& text) {
    std::string got = next("'" + text + "'");
    if (got != text) fail("expected '" + text + "', got '" + got + "'");
  }

  bool accept(const std::string& text) {
    if (!done() && toks[pos].text == text) {
      ++pos;
      return true;
    }
    return false;
  }

  std::string ident(const std::string& what) {
    std::string t = next(what);
    if (t.size() == 1 && structural(t[0])) fail("expected " + what + ", got '" + t + "'");
    return t;
  }
};

std::vector<std::string> ident_list(Cursor& cur, const std::string& what) {
  std::vector<std::string> out;
  out.push_back(cur.ident(what));
  while (cur.accept(",")) out.push_back(cur.ident(what));
  cur.expect(";");
  return out;
}

// Shared by top-level and attach-block edges; the `edge` keyword is already
// consumed.  Label use is checked here so the error lands on the right line.
GstEdge parse_edge(Cursor& cur, const std::set<std::string>& labels) {
  int at = cur.line();
  GstEdge e;
  e.id = cur.ident("edge id");
  cur.expect(":");
  e.source = cur.ident("source vertex");
  cur.expect("->");
  e.target = cur.ident("target vertex");
  cur.expect("[");
  std::string shape = cur.ident("'dense' or 'point'");
  std::string label = cur.ident("label");
  cur.expect("]");
  cur.expect(";");
  if (shape == "dense") {
    e.segment = dense(label);
  } else if (shape == "point") {
    e.segment = point(label);
  } else {
    throw ModelError(at, "expected 'dense' or 'point', got '" + shape + "'");
  }
  if (!labels.count(label)) throw ModelError(at, "undeclared label '" + label + "'");
  return e;
}

void finish_vertices(SymbolicGst& g) {
  std::set<std::string> seen{g.root};
  g.vertices.push_back(g.root);
  for (const auto& e : g.edges) {
    if (seen.insert(e.source).second) g.vertices.push_back(e.source);
    if (seen.insert(e.target).second) g.vertices.push_back(e.target);
  }
}

SymbolicGst parse_attach_body(Cursor& cur, const std::vector<Label>& labels,
                              const std::set<std::string>& label_set, std::string child_name);

// Statements valid in both gst bodies and attach blocks.  Top-level-only
// statements (labels, root) are handled by the caller.
bool parse_tree_stmt(Cursor& cur, const std::string& keyword, SymbolicGst& g,
                     const std::vector<Label>& labels, const std::set<std::string>& label_set,
                     bool in_child) {
  if (keyword == "edge") {
    int at = cur.line();
    GstEdge e = parse_edge(cur, label_set);
    if (in_child) {
      if (e.source == "@") e.source = kChildRoot;
      if (e.target == "@") throw ModelError(at, "'@' cannot be an edge target");
      if (e.target == kChildRoot)
        throw ModelError(at, "'" + kChildRoot + "' is reserved for '@' inside attach blocks");
    } else if (e.source == "@" || e.target == "@") {
      throw ModelError(at, "'@' is only meaningful inside attach blocks");
    }
    g.edges.push_back(std::move(e));
    return true;
  }
  if (keyword == "attach") {
    int at = cur.line();
    std::string host = cur.ident("edge id");
    if (!g.edge_by_id(host)) throw ModelError(at, "attach references unknown edge '" + host + "'");
    auto& slot = g.attachments[host];
    std::string child_name = host + ":" + std::to_string(slot.size());
    SymbolicGst child = parse_attach_body(cur, labels, label_set, std::move(child_name));
    slot.push_back({std::make_shared<const SymbolicGst>(std::move(child))});
    return true;
  }
  return false;
}

SymbolicGst parse_attach_body(Cursor& cur, const std::vector<Label>& labels,
                              const std::set<std::string>& label_set, std::string child_name) {
  SymbolicGst child;
  child.name = std::move(child_name);
  child.root = kChildRoot;
  child.labels = labels;
  cur.expect("{");
  while (!cur.accept("}")) {
    int at = cur.line();
    std::string keyword = cur.ident("statement");
    if (!parse_tree_stmt(cur, keyword, child, labels, label_set, /*in_child=*/true)) {
      throw ModelError(at, "unknown statement '" + keyword + "' in attach block");
    }
  }
  finish_vertices(child);
  return child;
}

SymbolicGst parse_gst_body(Cursor& cur, std::string name) {
  SymbolicGst g;
  g.name = std::move(name);
  std::set<std::string> label_set;
  std::optional<std::string> root;
  cur.expect("{");
  while (!cur.accept("}")) {
    int at = cur.line();
    std::string keyword = cur.ident("statement");
    if (keyword == "labels") {
      for (auto& l : ident_list(cur, "label")) {
        if (!label_set.insert(l).second) throw ModelError(at, "duplicate label '" + l + "'");
        g.labels.push_back({std::move(l)});
      }
    } else if (keyword == "root") {
      if (root) throw ModelError(at, "duplicate root declaration");
      root = cur.ident("root vertex");
      cur.expect(";");
    } else if (!parse_tree_stmt(cur, keyword, g, g.labels, label_set, /*in_child=*/false)) {
      throw ModelError(at, "unknown statement '" + keyword + "'");
    }
  }
  if (!root) cur.fail("missing root declaration");
  g.root = *root;
  finish_vertices(g);
  return g;
}

ExecWord parse_bracket_word(Cursor& cur) {
  int at = cur.line();
  cur.expect("[");
  std::string text;
  while (!cur.accept("]")) {
    std::string t = cur.next("']'");
    if (t == ",") {
      text += ",";
    } else {
      if (!text.empty()) text += " ";
      text += t;
    }
  }
  try {
    return parse_word(text);
  } catch (const ParseError& e) {
    throw ModelError(at, "bad execution word '" + text + "': " + e.msg);
  }
}

KripkeStructure parse_kripke_body(Cursor& cur, std::string name) {
  KripkeStructure k;
  k.name = std::move(name);
  std::set<std::string> label_set;
  std::set<std::string> prop_set;
  cur.expect("{");
  while (!cur.accept("}")) {
    int at = cur.line();
    std::string keyword = cur.ident("statement");
    if (keyword == "labels") {
      for (auto& l : ident_list(cur, "label")) {
        if (!label_set.insert(l).second) throw ModelError(at, "duplicate label '" + l + "'");
        k.declared_labels.push_back(std::move(l));
      }
    } else if (keyword == "props") {
      for (auto& p : ident_list(cur, "prop")) {
        if (!prop_set.insert(p).second) throw ModelError(at, "duplicate prop '" + p + "'");
        k.declared_props.push_back(std::move(p));
      }
    } else if (keyword == "state") {
      std::string id = cur.ident("state id");
      if (k.state_index(id) >= 0) throw ModelError(at, "duplicate state '" + id + "'");
      int idx = k.add_state(id);
      if (cur.accept("init")) {
        if (k.initial) throw ModelError(at, "multiple initial states");
        k.initial = idx;
      }
      cur.expect(";");
    } else if (keyword == "prop") {
      std::string p = cur.ident("prop name");
      if (!prop_set.count(p)) throw ModelError(at, "undeclared prop '" + p + "'");
      cur.expect(":");
      for (const auto& s : ident_list(cur, "state id")) {
        int idx = k.state_index(s);
        if (idx < 0) throw ModelError(at, "undeclared state '" + s + "'");
        k.valuation[p].insert(idx);
      }
    } else if (keyword == "trans") {
      std::string src = cur.ident("state id");
      cur.expect("->");
      std::string dst = cur.ident("state id");
      int si = k.state_index(src);
      if (si < 0) throw ModelError(at, "undeclared state '" + src + "'");
      int di = k.state_index(dst);
      if (di < 0) throw ModelError(at, "undeclared state '" + dst + "'");
      ExecWord w = parse_bracket_word(cur);
      for (const auto& seg : w.segments()) {
        if (!label_set.count(seg.label.name)) {
          throw ModelError(at, "undeclared label '" + seg.label.name + "'");
        }
      }
      cur.expect(";");
      k.add_transition(si, w, di);
    } else {
      throw ModelError(at, "unknown statement '" + keyword + "'");
    }
  }
  return k;
}

std::string segment_spec(const Segment& s) {
  return (s.shape == Shape::Dense ? "dense " : "point ") + s.label.name;
}

void format_tree_body(std::string& out, const SymbolicGst& g, int depth, bool as_child) {
  std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  for (const auto& e : g.edges) {
    std::string src = (as_child && e.source == g.root) ? "@" : e.source;
    out += pad + "edge " + e.id + ": " + src + " -> " + e.target + " [" +
           segment_spec(e.segment) + "];\n";
  }
  for (const auto& e : g.edges) {
    auto it = g.attachments.find(e.id);
    if (it == g.attachments.end()) continue;
    for (const auto& att : it->second) {
      out += pad + "attach " + e.id + " {\n";
      format_tree_body(out, *att.child, depth + 1, /*as_child=*/true);
      out += pad + "}\n";
    }
  }
}

}  // namespace

ModelFile parse_model(const std::string& text) {
  Cursor cur{lex(text)};
  std::string kind = cur.ident("'gst' or 'kripke'");
  ModelFile out = [&]() -> ModelFile {
    std::string name = cur.ident("model name");
    if (kind == "gst") return parse_gst_body(cur, std::move(name));
    if (kind == "kripke") return parse_kripke_body(cur, std::move(name));
    throw ModelError(cur.line(), "expected 'gst' or 'kripke', got '" + kind + "'");
  }();
  if (!cur.done()) cur.fail("trailing input after model");
  return out;
}

std::string format_gst(const SymbolicGst& g) {
  std::string out = "gst " + g.name + " {\n";
  if (!g.labels.empty()) {
    out += "  labels ";
    for (std::size_t i = 0; i < g.labels.size(); ++i) {
      if (i) out += ", ";
      out += g.labels[i].name;
    }
    out += ";\n";
  }
  out += "  root " + g.root + ";\n";
  format_tree_body(out, g, 1, /*as_child=*/false);
  out += "}\n";
  return out;
}

std::string format_kripke(const KripkeStructure& k) {
  std::string out = "kripke " + k.name + " {\n";
  auto list_line = [&out](const std::string& head, const std::vector<std::string>& items) {
    if (items.empty()) return;
    out += "  " + head + " ";
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i) out += ", ";
      out += items[i];
    }
    out += ";\n";
  };
  list_line("labels", k.declared_labels);
  list_line("props", k.declared_props);
  for (std::size_t i = 0; i < k.states.size(); ++i) {
    out += "  state " + k.states[i];
    if (k.initial && *k.initial == static_cast<int>(i)) out += " init";
    out += ";\n";
  }
  for (const auto& p : k.declared_props) {
    auto it = k.valuation.find(p);
    if (it == k.valuation.end() || it->second.empty()) continue;
    out += "  prop " + p + ": ";
    bool first = true;
    for (int idx : it->second) {
      if (!first) out += ", ";
      first = false;
      out += k.states[static_cast<std::size_t>(idx)];
    }
    out += ";\n";
  }
  for (const auto& t : k.transitions) {
    out += "  trans " + k.states[static_cast<std::size_t>(t.src)] + " -> " +
           k.states[static_cast<std::size_t>(t.dst)] + " [" + format_word(t.word) + "];\n";
  }
  out += "}\n";
  return out;
}

std::string format_model(const ModelFile& m) {
  if (const auto* g = std::get_if<SymbolicGst>(&m)) return format_gst(*g);
  return format_kripke(std::get<KripkeStructure>(m));
}

}  // namespace gstlab
