#ifndef GSTLAB_TESTS_RANDOM_MODELS_HPP
#define GSTLAB_TESTS_RANDOM_MODELS_HPP

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "gstlab/formula.hpp"
#include "gstlab/gst.hpp"
#include "gstlab/kripke.hpp"

namespace gstlab::testgen {

// Seeded model builders shared by the property tests and the acceptance
// suite.  Everything is a pure function of the generator state, so a fixed
// seed reproduces the exact instance.

inline SymbolicGst random_gst(std::mt19937& rng, int max_edges = 6, int attach_budget = 2) {
  static const char* labels[] = {"a", "b", "c"};
  std::uniform_int_distribution<int> edge_count(1, max_edges);
  std::uniform_int_distribution<int> lbl(0, 2);
  std::uniform_int_distribution<int> coin(0, 1);

  SymbolicGst g;
  g.name = "rnd";
  g.labels = {{"a"}, {"b"}, {"c"}};
  g.vertices = {"v0"};
  g.root = "v0";
  int edges = edge_count(rng);
  for (int i = 0; i < edges; ++i) {
    std::uniform_int_distribution<int> src(0, static_cast<int>(g.vertices.size()) - 1);
    std::string source = g.vertices[static_cast<std::size_t>(src(rng))];
    std::string target = "v" + std::to_string(g.vertices.size());
    g.vertices.push_back(target);
    Segment seg = coin(rng) ? dense(labels[lbl(rng)]) : point(labels[lbl(rng)]);
    g.edges.push_back({"e" + std::to_string(i), source, target, seg});
  }
  if (attach_budget > 0) {
    for (const auto& e : g.edges) {
      if (e.segment.shape != Shape::Dense || coin(rng)) continue;
      SymbolicGst child = random_gst(rng, 2, attach_budget - 1);
      child.name = g.name + "." + e.id;
      g.attachments[e.id].push_back({std::make_shared<const SymbolicGst>(std::move(child))});
      if (--attach_budget == 0) break;
    }
  }
  return g;
}

inline KripkeStructure random_kripke(std::mt19937& rng, int max_states = 6) {
  static const std::vector<ExecWord> words = {
      parse_word("P a"), parse_word("P b"), parse_word("D a"), parse_word("D a, P b")};
  std::uniform_int_distribution<int> state_count(1, max_states);
  std::uniform_int_distribution<int> word_at(0, static_cast<int>(words.size()) - 1);
  std::uniform_int_distribution<int> coin(0, 1);

  KripkeStructure k;
  k.name = "rnd";
  k.declared_labels = {"a", "b"};
  k.declared_props = {"p", "q"};
  int n = state_count(rng);
  for (int i = 0; i < n; ++i) k.add_state("s" + std::to_string(i));
  k.initial = 0;
  std::uniform_int_distribution<int> st(0, n - 1);
  int m = 2 * n;
  for (int i = 0; i < m; ++i) {
    k.add_transition(st(rng), words[static_cast<std::size_t>(word_at(rng))], st(rng));
  }
  for (const auto& p : k.declared_props) {
    for (int s = 0; s < n; ++s) {
      if (coin(rng)) k.valuation[p].insert(s);
    }
  }
  return k;
}

// Formula over the shared word pool; props only when asked for, since tree
// models carry no valuation.
inline FormulaPtr random_formula(std::mt19937& rng, int depth, bool with_props) {
  static const std::vector<ExecWord> words = {
      parse_word("P a"), parse_word("P b"), parse_word("D a"), parse_word("D a, P b")};
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? (with_props ? 1 : 0) : 5);
  std::uniform_int_distribution<int> word_at(0, static_cast<int>(words.size()) - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  switch (pick(rng)) {
    case 0: return truth();
    case 1: return with_props ? prop(coin(rng) ? "p" : "q") : truth();
    case 2: return neg(random_formula(rng, depth - 1, with_props));
    case 3:
      return conj(random_formula(rng, depth - 1, with_props),
                  random_formula(rng, depth - 1, with_props));
    default:
      return diamond(words[static_cast<std::size_t>(word_at(rng))],
                     random_formula(rng, depth - 1, with_props));
  }
}

}  // namespace gstlab::testgen

#endif
