#include "gstlab/hm.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "gstlab/surrogate.hpp"

namespace gstlab {

SchemataReport schemata_check(const KripkeStructure& ks) {
  SchemataReport rep;
  for (const Transition& t1 : ks.transitions) {
    if (!rep.transitivity_ok) break;
    for (const auto& [w2, dst] : ks.post(t1.dst)) {
      if (!ks.has_transition(t1.src, concat(t1.word, w2), dst)) {
        rep.transitivity_ok = false;
        rep.transitivity_break =
            TransitivityBreak{t1.src, t1.dst, dst, t1.word, w2};
        break;
      }
    }
  }
  for (const Transition& t : ks.transitions) {
    if (!rep.weak_density_ok) break;
    for (const auto& [left, right] : splits(t.word)) {
      bool found = false;
      for (int mid = 0; mid < static_cast<int>(ks.states.size()) && !found; ++mid)
        found = ks.has_transition(t.src, left, mid) &&
                ks.has_transition(mid, right, t.dst);
      if (!found) {
        rep.weak_density_ok = false;
        rep.density_break = DensityBreak{t.src, t.dst, t.word, left, right};
        break;
      }
    }
  }
  return rep;
}

ImageFiniteReport image_finite(const SymbolicGst& g) {
  MinimizeResult min = minimize(build_surrogate(g));
  return ImageFiniteReport{min.quotient, static_cast<int>(min.blocks.size())};
}

ImageFiniteBoundedReport image_finite_bounded(const LazyKripke& lz,
                                              const std::string& state, int k) {
  if (k < 1) throw std::invalid_argument("depth bound must be >= 1");
  if (auto bad = validate_hints(lz, std::min(k, 6), 16))
    throw std::invalid_argument("invalid collapse hint: " + *bad);

  StratifiedClassifier cls(lz);
  std::vector<SuccessorGroup> groups = lz.successors(state);
  std::map<ExecWord, std::vector<const SuccessorGroup*>> by_word;
  for (const SuccessorGroup& g : groups) by_word[g.word].push_back(&g);

  ImageFiniteBoundedReport rep;
  for (const auto& [w, gs] : by_word) {
    std::vector<int> counts;
    for (int j = 1; j <= k; ++j) {
      std::set<int> classes;
      for (const SuccessorGroup* g : gs)
        for (const auto& t : cls.bounded_targets(*g, j - 1))
          classes.insert(cls.class_id(t, j - 1));
      counts.push_back(static_cast<int>(classes.size()));
    }
    bool growing = counts.size() >= 2;
    for (std::size_t j = 1; j < counts.size(); ++j)
      if (counts[j] <= counts[j - 1]) {
        growing = false;
        break;
      }
    if (growing && !rep.witness) {
      rep.consistent = false;
      rep.witness = w;
    }
    rep.class_counts[w] = std::move(counts);
  }
  return rep;
}

namespace {

KripkeStructure union_all(const std::vector<KripkeStructure>& structures) {
  if (structures.size() == 1) return structures[0];
  KripkeStructure u;
  u.name = "union";
  std::set<std::string> labels;
  std::set<std::string> props;
  for (std::size_t i = 0; i < structures.size(); ++i) {
    const KripkeStructure& ks = structures[i];
    std::string prefix = "s" + std::to_string(i) + ".";
    int base = static_cast<int>(u.states.size());
    for (const auto& s : ks.states) u.add_state(prefix + s);
    for (const Transition& t : ks.transitions)
      u.add_transition(base + t.src, t.word, base + t.dst);
    for (const auto& [p, holders] : ks.valuation)
      for (int s : holders) u.valuation[p].insert(base + s);
    labels.insert(ks.declared_labels.begin(), ks.declared_labels.end());
    props.insert(ks.declared_props.begin(), ks.declared_props.end());
  }
  u.declared_labels.assign(labels.begin(), labels.end());
  u.declared_props.assign(props.begin(), props.end());
  if (!u.states.empty()) u.initial = 0;
  return u;
}

}  // namespace

VhhmReport vhhm_check(const std::vector<KripkeStructure>& structures, int k) {
  if (structures.empty())
    throw std::invalid_argument("vhhm_check needs at least one structure");
  if (k < 0) throw std::invalid_argument("depth must be >= 0");

  KripkeStructure u = union_all(structures);
  MinimizeResult min = minimize(u);
  int stable = std::max(k, static_cast<int>(min.rounds.size()) - 1);
  LazyKripke lz = from_kripke(u);
  StratifiedClassifier cls(lz);

  VhhmReport rep;
  int n = static_cast<int>(u.states.size());
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      ++rep.pairs;
      bool bis = min.block_of[a] == min.block_of[b];
      bool agree_k = cls.class_id(u.states[a], k) == cls.class_id(u.states[b], k);
      bool agree_stable =
          cls.class_id(u.states[a], stable) == cls.class_id(u.states[b], stable);
      if (bis != (agree_k && agree_stable)) {
        rep.pass = false;
        rep.mismatches.emplace_back(u.states[a], u.states[b]);
      }
      if (agree_k && !bis)
        rep.notes.push_back("'" + u.states[a] + "' and '" + u.states[b] +
                            "' agree at depth " + std::to_string(k) +
                            " but are not bisimilar; inconclusive at depth " +
                            std::to_string(k));
    }
  }
  return rep;
}

bool rank_certificate_check(
    const LazyKripke& lz, const std::string& root,
    const std::function<std::optional<long long>(const std::string&)>& rank,
    const ExecWord& word, int bound) {
  if (bound < 1) throw std::invalid_argument("bound must be >= 1");

  auto rank_of = [&](const std::string& s) {
    std::optional<long long> r = rank(s);
    if (!r) throw std::invalid_argument("rank undefined on state '" + s + "'");
    return *r;
  };

  StratifiedClassifier cls(lz);  // for bounded family members only
  std::set<std::string> seen{root};
  std::deque<std::pair<std::string, int>> frontier{{root, 0}};
  rank_of(root);
  while (!frontier.empty()) {
    auto [s, level] = frontier.front();
    frontier.pop_front();
    if (level >= bound) continue;
    for (const SuccessorGroup& g : lz.successors(s)) {
      for (const auto& t : cls.bounded_targets(g, bound - level)) {
        long long rt = rank_of(t);
        if (seen.insert(t).second) frontier.emplace_back(t, level + 1);
        if (g.word != word) continue;
        if (t == root) return false;  // a way back up defeats the argument
        if (s != root && rt >= rank_of(s)) return false;
      }
    }
  }
  return true;
}

int follow_unranked_chain(const LazyKripke& lz, const std::string& start,
                          const ExecWord& word, int steps) {
  if (steps < 0) throw std::invalid_argument("steps must be >= 0");
  StratifiedClassifier cls(lz);
  std::string cur = start;
  for (int done = 0; done < steps; ++done) {
    std::optional<std::string> next;
    for (const SuccessorGroup& g : lz.successors(cur)) {
      if (g.word != word) continue;
      for (const auto& t : cls.bounded_targets(g, 0)) {
        if (!lz.rank(t)) {
          next = t;
          break;
        }
      }
      if (next) break;
    }
    if (!next) return done;
    cur = *next;
  }
  return steps;
}

}  // namespace gstlab
