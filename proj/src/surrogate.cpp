#include "gstlab/surrogate.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace gstlab {

KripkeStructure build_surrogate(const SymbolicGst& g) {
  KripkeStructure k;
  k.name = g.name + ":surrogate";
  for (const Label& l : g.labels) k.declared_labels.push_back(l.name);

  std::vector<CutClass> classes = cut_classes(g);
  for (const CutClass& c : classes) k.add_state(c.str());
  k.initial = 0;

  std::set<std::tuple<int, ExecWord, int>> rel;
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = 0; j < classes.size(); ++j)
      if (auto w = exec_between(g, classes[i], classes[j]))
        rel.insert({static_cast<int>(i), *w, static_cast<int>(j)});

  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::tuple<int, ExecWord, int>> found;
    for (const auto& [a, w1, b] : rel)
      for (const auto& [b2, w2, c] : rel)
        if (b == b2) {
          auto composed = std::make_tuple(a, concat(w1, w2), c);
          if (!rel.count(composed)) found.push_back(composed);
        }
    for (auto& t : found)
      if (rel.insert(t).second) grew = true;
  }

  for (const auto& [src, w, dst] : rel) k.add_transition(src, w, dst);
  return k;
}

namespace {

// Discrete skeleton of the tree: one node per sampled point, each non-root
// node keyed by the word piece covering the stretch from its parent.
// Consecutive samples of a dense edge are joined by that edge's dense
// piece, so normalizing the piece chain between two nodes yields the word
// of the underlying interval exactly.
struct Expansion {
  std::vector<std::string> names;
  std::vector<CutClass> regions;
  std::vector<int> parent;       // -1 at the root
  std::vector<Segment> pieces;   // pieces[i] joins parent[i] to i

  int add(std::string name, CutClass region, int par, Segment piece) {
    names.push_back(std::move(name));
    regions.push_back(std::move(region));
    parent.push_back(par);
    pieces.push_back(piece);
    return static_cast<int>(names.size()) - 1;
  }
};

void expand_from(const SymbolicGst& ctx, int k, Expansion& e,
                 const std::vector<std::pair<std::string, int>>& region_prefix,
                 const std::string& name_prefix, const std::string& vertex,
                 std::map<std::string, int>& vertex_nodes) {
  for (const GstEdge* edge : ctx.outgoing(vertex)) {
    int cur = vertex_nodes.at(vertex);
    CutClass target_region{region_prefix, CutClass::Kind::Vertex, edge->target, -1};
    if (edge->segment.shape == Shape::Point) {
      int t = e.add(name_prefix + edge->target, target_region, cur, edge->segment);
      vertex_nodes[edge->target] = t;
      expand_from(ctx, k, e, region_prefix, name_prefix, edge->target, vertex_nodes);
      continue;
    }

    Segment dense_piece{Shape::Dense, edge->segment.label};
    const std::vector<Attachment>* atts = nullptr;
    if (auto it = ctx.attachments.find(edge->id);
        it != ctx.attachments.end() && !it->second.empty())
      atts = &it->second;
    int natt = atts ? static_cast<int>(atts->size()) : 0;

    std::vector<std::pair<int, int>> samples;  // (attachment index or -1, round)
    for (int round = 0; round < k; ++round) {
      samples.emplace_back(-1, round);
      for (int a = 0; a < natt; ++a) samples.emplace_back(a, round);
    }

    for (const auto& [a, round] : samples) {
      if (a < 0) {
        CutClass region{region_prefix, CutClass::Kind::Interior, edge->id, -1};
        cur = e.add(name_prefix + edge->id + "%" + std::to_string(round), region, cur,
                    dense_piece);
        continue;
      }
      CutClass region{region_prefix, CutClass::Kind::AttachPoint, edge->id, a};
      std::string instance =
          name_prefix + edge->id + ":" + std::to_string(a) + "@" + std::to_string(round);
      cur = e.add(instance, region, cur, dense_piece);

      const SymbolicGst& child = *(*atts)[a].child;
      auto child_prefix = region_prefix;
      child_prefix.emplace_back(edge->id, a);
      std::map<std::string, int> child_vertex_nodes{{child.root, cur}};
      expand_from(child, k, e, child_prefix, instance + "/", child.root,
                  child_vertex_nodes);
    }

    int t = e.add(name_prefix + edge->target, target_region, cur, dense_piece);
    vertex_nodes[edge->target] = t;
    expand_from(ctx, k, e, region_prefix, name_prefix, edge->target, vertex_nodes);
  }
}

Expansion expand(const SymbolicGst& g, int k) {
  Expansion e;
  int root = e.add(g.root, CutClass{{}, CutClass::Kind::Vertex, g.root, -1}, -1,
                   Segment{Shape::Point, Label{""}});
  std::map<std::string, int> vertex_nodes{{g.root, root}};
  expand_from(g, k, e, {}, "", g.root, vertex_nodes);
  return e;
}

}  // namespace

KripkeStructure sampled_surrogate(const SymbolicGst& g, int samples_per_region) {
  if (samples_per_region < 1)
    throw std::invalid_argument("samples_per_region must be at least 1");

  Expansion out_exp = expand(g, samples_per_region);
  Expansion word_exp =
      samples_per_region >= 2 ? out_exp : expand(g, 2);

  // Walk up from every node, accumulating pieces from the node toward the
  // root; each ancestor met yields the word of (ancestor, node].
  std::map<std::pair<std::string, std::string>, std::set<ExecWord>> words;
  for (std::size_t node = 0; node < word_exp.names.size(); ++node) {
    std::vector<Segment> reversed;
    int cur = static_cast<int>(node);
    while (word_exp.parent[cur] >= 0) {
      reversed.push_back(word_exp.pieces[cur]);
      cur = word_exp.parent[cur];
      std::vector<Segment> pieces(reversed.rbegin(), reversed.rend());
      ExecWord w = ExecWord::normalize(pieces);
      words[{word_exp.regions[cur].str(), word_exp.regions[node].str()}].insert(w);
    }
  }

  KripkeStructure k;
  k.name = g.name + ":sampled";
  for (const Label& l : g.labels) k.declared_labels.push_back(l.name);
  for (const std::string& n : out_exp.names) k.add_state(n);
  k.initial = 0;

  for (std::size_t p = 0; p < out_exp.names.size(); ++p) {
    for (std::size_t q = 0; q < out_exp.names.size(); ++q) {
      auto it = words.find({out_exp.regions[p].str(), out_exp.regions[q].str()});
      if (it == words.end()) continue;
      for (const ExecWord& w : it->second)
        k.add_transition(static_cast<int>(p), w, static_cast<int>(q));
    }
  }
  return k;
}

}  // namespace gstlab
