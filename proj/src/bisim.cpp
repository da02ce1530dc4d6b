#include "gstlab/bisim.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "gstlab/model_check.hpp"
#include "gstlab/surrogate.hpp"

namespace gstlab {

namespace {

std::vector<int> initial_partition(const KripkeStructure& k) {
  int n = static_cast<int>(k.states.size());
  std::vector<int> block_of(n, -1);
  std::map<std::set<std::string>, int> seen;
  for (int s = 0; s < n; ++s) {
    std::set<std::string> props = k.props_of(s);
    auto [it, fresh] = seen.emplace(std::move(props), static_cast<int>(seen.size()));
    (void)fresh;
    block_of[s] = it->second;
  }
  return block_of;
}

std::vector<int> refine_once(const KripkeStructure& k, const std::vector<int>& block_of) {
  int n = static_cast<int>(k.states.size());
  std::vector<int> next(n, -1);
  std::map<std::pair<int, std::set<std::pair<ExecWord, int>>>, int> seen;
  for (int s = 0; s < n; ++s) {
    std::set<std::pair<ExecWord, int>> sig;
    for (const auto& [w, t] : k.post(s)) sig.emplace(w, block_of[t]);
    auto [it, fresh] =
        seen.emplace(std::make_pair(block_of[s], std::move(sig)), static_cast<int>(seen.size()));
    (void)fresh;
    next[s] = it->second;
  }
  return next;
}

int block_count(const std::vector<int>& block_of) {
  int m = -1;
  for (int b : block_of) m = std::max(m, b);
  return m + 1;
}

// Partition after every refinement round, ending with the stable one.
// Round d equates states indistinguishable by d rounds of moves.
std::vector<std::vector<int>> refinement_rounds(const KripkeStructure& k) {
  std::vector<std::vector<int>> rounds{initial_partition(k)};
  while (true) {
    std::vector<int> next = refine_once(k, rounds.back());
    if (block_count(next) == block_count(rounds.back())) return rounds;
    rounds.push_back(std::move(next));
  }
}

}  // namespace

MinimizeResult minimize(const KripkeStructure& k) {
  MinimizeResult result;
  std::vector<std::vector<int>> history = refinement_rounds(k);
  for (const std::vector<int>& r : history) result.rounds.push_back(block_count(r));
  result.block_of = history.back();

  int nblocks = block_count(result.block_of);
  result.blocks.assign(nblocks, {});
  for (int s = 0; s < static_cast<int>(k.states.size()); ++s)
    result.blocks[result.block_of[s]].push_back(s);

  KripkeStructure& q = result.quotient;
  q.name = k.name + ":min";
  q.declared_labels = k.declared_labels;
  q.declared_props = k.declared_props;
  for (int b = 0; b < nblocks; ++b) q.add_state(k.states[result.blocks[b][0]]);
  for (const Transition& t : k.transitions)
    q.add_transition(result.block_of[t.src], t.word, result.block_of[t.dst]);
  for (const auto& [p, states] : k.valuation) {
    std::set<int> mapped;
    for (int s : states) mapped.insert(result.block_of[s]);
    if (!mapped.empty()) q.valuation[p] = std::move(mapped);
  }
  if (k.initial) q.initial = result.block_of[*k.initial];
  return result;
}

namespace {

struct UnionIndex {
  KripkeStructure u;
  int offset;  // index shift applied to the second structure's states
};

UnionIndex make_union(const KripkeStructure& k1, const KripkeStructure& k2) {
  return UnionIndex{disjoint_union(k1, k2, "l.", "r."),
                    static_cast<int>(k1.states.size())};
}

void check_state(const KripkeStructure& k, int s) {
  if (s < 0 || s >= static_cast<int>(k.states.size()))
    throw std::invalid_argument("state index out of range");
}

}  // namespace

bool bisim(const KripkeStructure& k1, int s1, const KripkeStructure& k2, int s2) {
  check_state(k1, s1);
  check_state(k2, s2);
  UnionIndex ui = make_union(k1, k2);
  std::vector<int> block_of = refinement_rounds(ui.u).back();
  return block_of[s1] == block_of[ui.offset + s2];
}

bool simulate(const KripkeStructure& k1, int s1, const KripkeStructure& k2, int s2) {
  check_state(k1, s1);
  check_state(k2, s2);
  UnionIndex ui = make_union(k1, k2);
  const KripkeStructure& u = ui.u;
  int n = static_cast<int>(u.states.size());

  // Valuation implication: whatever holds at the simulated state must hold
  // at the simulating one.
  std::vector<std::vector<bool>> sim(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::set<std::string> pa = u.props_of(a), pb = u.props_of(b);
      sim[a][b] = std::includes(pb.begin(), pb.end(), pa.begin(), pa.end());
    }

  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (!sim[a][b]) continue;
        bool ok = true;
        for (const auto& [w, a2] : u.post(a)) {
          bool matched = false;
          for (const auto& [w2, b2] : u.post(b))
            if (w2 == w && sim[a2][b2]) {
              matched = true;
              break;
            }
          if (!matched) {
            ok = false;
            break;
          }
        }
        if (!ok) {
          sim[a][b] = false;
          changed = true;
        }
      }
  }
  return sim[s1][ui.offset + s2];
}

namespace {

struct Distinguisher {
  const KripkeStructure& u;
  const std::vector<std::vector<int>>& rounds;

  int separating_round(int a, int b) const {
    for (std::size_t d = 0; d < rounds.size(); ++d)
      if (rounds[d][a] != rounds[d][b]) return static_cast<int>(d);
    return -1;
  }

  // Formula true at a, false at b, for states separated at round d.
  FormulaPtr build(int a, int b, int d) {
    if (d == 0) {
      for (const std::string& p : u.props_of(a))
        if (!u.props_of(b).count(p)) return prop(p);
      for (const std::string& p : u.props_of(b))
        if (!u.props_of(a).count(p)) return neg(prop(p));
      throw std::logic_error("round 0 separation without differing propositions");
    }
    // A move of a that b cannot answer at round d-1 gives a diamond; if
    // every a-move is answerable the separation must come from b's side,
    // and the symmetric diamond is negated.
    for (const auto& [w, a2] : u.post(a)) {
      std::vector<int> unmatched;
      bool answerable = false;
      for (const auto& [w2, b2] : u.post(b)) {
        if (!(w2 == w)) continue;
        if (rounds[d - 1][a2] == rounds[d - 1][b2]) {
          answerable = true;
          break;
        }
        unmatched.push_back(b2);
      }
      if (answerable) continue;
      FormulaPtr f = truth();
      for (int b2 : unmatched)
        f = conj(std::move(f), build(a2, b2, separating_round(a2, b2)));
      return diamond(w, std::move(f));
    }
    for (const auto& [w, b2] : u.post(b)) {
      std::vector<int> unmatched;
      bool answerable = false;
      for (const auto& [w2, a2] : u.post(a)) {
        if (!(w2 == w)) continue;
        if (rounds[d - 1][a2] == rounds[d - 1][b2]) {
          answerable = true;
          break;
        }
        unmatched.push_back(a2);
      }
      if (answerable) continue;
      FormulaPtr f = truth();
      for (int a2 : unmatched)
        f = conj(std::move(f), build(b2, a2, separating_round(b2, a2)));
      return neg(diamond(w, std::move(f)));
    }
    throw std::logic_error("separated states with all moves answerable");
  }
};

}  // namespace

std::optional<FormulaPtr> distinguishing_formula(const KripkeStructure& k1, int s1,
                                                 const KripkeStructure& k2, int s2) {
  check_state(k1, s1);
  check_state(k2, s2);
  UnionIndex ui = make_union(k1, k2);
  std::vector<std::vector<int>> rounds = refinement_rounds(ui.u);
  Distinguisher dist{ui.u, rounds};
  int a = s1, b = ui.offset + s2;
  int d = dist.separating_round(a, b);
  if (d < 0) return std::nullopt;

  FormulaPtr f = dist.build(a, b, d);
  if (!mc_kripke(k1, s1, f).holds || mc_kripke(k2, s2, f).holds)
    throw std::logic_error("distinguishing formula failed validation");
  return f;
}

bool weak_bisim_gst(const SymbolicGst& g1, const SymbolicGst& g2) {
  KripkeStructure a = build_surrogate(g1);
  KripkeStructure b = build_surrogate(g2);
  return bisim(a, *a.initial, b, *b.initial);
}

namespace {

bool is_discrete(const SymbolicGst& g) {
  for (const GstEdge& e : g.edges)
    if (e.segment.shape != Shape::Point) return false;
  return g.attachments.empty();
}

}  // namespace

bool strong_bisim_discrete(const SymbolicGst& g1, const SymbolicGst& g2) {
  if (!is_discrete(g1) || !is_discrete(g2))
    throw std::invalid_argument("strong bisimulation supported only for discrete GSTs");
  return weak_bisim_gst(g1, g2);
}

}  // namespace gstlab
