#include "gstlab/dot.hpp"

#include <cstddef>
#include <stdexcept>

namespace gstlab {

namespace {

// Escapes quotes only; label text may carry intentional \n escapes.
std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '\\';
    out += c;
  }
  out += "\"";
  return out;
}

std::string render(const KripkeStructure& k, const std::vector<int>* block_of) {
  std::string out = "digraph " + quoted(k.name) + " {\n";
  out += "  rankdir=LR;\n";
  out += "  node [shape=ellipse];\n";
  for (std::size_t i = 0; i < k.states.size(); ++i) {
    std::string label = k.states[i];
    auto props = k.props_of(static_cast<int>(i));
    if (!props.empty()) {
      label += "\\n{";
      bool first = true;
      for (const auto& p : props) {
        if (!first) label += ",";
        first = false;
        label += p;
      }
      label += "}";
    }
    if (block_of) label += "\\nblock " + std::to_string((*block_of)[i]);
    out += "  " + std::to_string(i) + " [label=" + quoted(label);
    if (k.initial && *k.initial == static_cast<int>(i)) out += ", peripheries=2";
    out += "];\n";
  }
  for (const auto& t : k.transitions) {
    out += "  " + std::to_string(t.src) + " -> " + std::to_string(t.dst) +
           " [label=" + quoted(format_word(t.word)) + "];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace

std::string to_dot(const KripkeStructure& k) { return render(k, nullptr); }

std::string to_dot(const KripkeStructure& k, const std::vector<int>& block_of) {
  if (block_of.size() != k.states.size()) {
    throw std::invalid_argument("block annotation size does not match state count");
  }
  return render(k, &block_of);
}

}  // namespace gstlab
