#include "gstlab/kripke.hpp"

#include <algorithm>
#include <stdexcept>

namespace gstlab {

int KripkeStructure::state_index(const std::string& id) const {
  for (std::size_t i = 0; i < states.size(); ++i)
    if (states[i] == id) return static_cast<int>(i);
  return -1;
}

int KripkeStructure::require_state(const std::string& id) const {
  int i = state_index(id);
  if (i < 0) throw std::runtime_error("unknown state id: " + id);
  return i;
}

int KripkeStructure::add_state(const std::string& id) {
  int i = state_index(id);
  if (i >= 0) return i;
  states.push_back(id);
  return static_cast<int>(states.size()) - 1;
}

void KripkeStructure::add_transition(int src, const ExecWord& w, int dst) {
  Transition t{src, w, dst};
  auto it = std::lower_bound(transitions.begin(), transitions.end(), t);
  if (it != transitions.end() && *it == t) return;
  transitions.insert(it, std::move(t));
}

bool KripkeStructure::has_transition(int src, const ExecWord& w, int dst) const {
  Transition t{src, w, dst};
  return std::binary_search(transitions.begin(), transitions.end(), t);
}

std::vector<std::pair<ExecWord, int>> KripkeStructure::post(int src) const {
  std::vector<std::pair<ExecWord, int>> out;
  auto lo = std::lower_bound(transitions.begin(), transitions.end(), src,
                             [](const Transition& t, int s) { return t.src < s; });
  for (auto it = lo; it != transitions.end() && it->src == src; ++it)
    out.emplace_back(it->word, it->dst);
  return out;
}

std::set<std::string> KripkeStructure::props_of(int state) const {
  std::set<std::string> out;
  for (const auto& [prop, holders] : valuation)
    if (holders.count(state)) out.insert(prop);
  return out;
}

std::vector<ExecWord> KripkeStructure::word_alphabet() const {
  std::set<ExecWord> words;
  for (const Transition& t : transitions) words.insert(t.word);
  return {words.begin(), words.end()};
}

KripkeStructure disjoint_union(const KripkeStructure& a, const KripkeStructure& b,
                               const std::string& prefix_a, const std::string& prefix_b) {
  KripkeStructure u;
  u.name = a.name + "+" + b.name;
  for (const std::string& s : a.states) u.add_state(prefix_a + s);
  int offset = static_cast<int>(a.states.size());
  for (const std::string& s : b.states) u.add_state(prefix_b + s);
  for (const Transition& t : a.transitions) u.add_transition(t.src, t.word, t.dst);
  for (const Transition& t : b.transitions)
    u.add_transition(offset + t.src, t.word, offset + t.dst);
  for (const auto& [prop, holders] : a.valuation)
    for (int s : holders) u.valuation[prop].insert(s);
  for (const auto& [prop, holders] : b.valuation)
    for (int s : holders) u.valuation[prop].insert(offset + s);
  return u;
}

}  // namespace gstlab
