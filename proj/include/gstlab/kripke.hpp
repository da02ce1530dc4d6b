#ifndef GSTLAB_KRIPKE_HPP
#define GSTLAB_KRIPKE_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gstlab/exec_word.hpp"

namespace gstlab {

// Finite Kripke structure whose transitions are labeled by execution words.
// States are kept in first-seen order; that order is the tiebreaker for
// every deterministic output (block numbering, printing, DOT export).
// Transition triples are unique and kept sorted by (src, word, dst).

struct Transition {
  int src;
  ExecWord word;
  int dst;
  auto operator<=>(const Transition&) const = default;
};

struct KripkeStructure {
  std::string name;
  std::vector<std::string> states;
  std::vector<Transition> transitions;
  std::map<std::string, std::set<int>> valuation;  // prop -> satisfying states
  std::optional<int> initial;
  std::vector<std::string> declared_labels;
  std::vector<std::string> declared_props;

  int state_index(const std::string& id) const;    // -1 when absent
  int require_state(const std::string& id) const;  // throws on unknown id
  int add_state(const std::string& id);            // idempotent
  void add_transition(int src, const ExecWord& w, int dst);
  bool has_transition(int src, const ExecWord& w, int dst) const;

  // Outgoing transitions of one state, in (word, dst) order.
  std::vector<std::pair<ExecWord, int>> post(int src) const;
  // Props holding at one state, sorted.
  std::set<std::string> props_of(int state) const;
  // Sorted set of words appearing on any transition.
  std::vector<ExecWord> word_alphabet() const;
};

// Side-by-side union for comparing two structures; state i of `a` keeps its
// index, state j of `b` becomes |a| + j.  Valuations merge per prop name.
KripkeStructure disjoint_union(const KripkeStructure& a, const KripkeStructure& b,
                               const std::string& prefix_a, const std::string& prefix_b);

}  // namespace gstlab

#endif
