#include <doctest.h>

#include <random>
#include <set>
#include <utility>

#include "gstlab/bisim.hpp"
#include "gstlab/model_check.hpp"
#include "gstlab/surrogate.hpp"
#include "gstlab/generators.hpp"
#include "random_models.hpp"

using namespace gstlab;

namespace {

using Rel = std::set<std::pair<int, int>>;

bool matched(const KripkeStructure& k, int s, int t, const Rel& r) {
  for (const auto& [w, s2] : k.post(s)) {
    bool found = false;
    for (const auto& [w2, t2] : k.post(t)) {
      if (w2 == w && r.count({s2, t2})) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

// Plain greatest-fixpoint computation of the bisimulation relation, kept
// deliberately naive so it shares nothing with the partition refinement it
// checks.
Rel greatest_bisim(const KripkeStructure& k) {
  int n = static_cast<int>(k.states.size());
  Rel r;
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      if (k.props_of(s) == k.props_of(t)) r.insert({s, t});
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = r.begin(); it != r.end();) {
      auto [s, t] = *it;
      if (matched(k, s, t, r) && matched(k, t, s, r)) {
        ++it;
      } else {
        it = r.erase(it);
        changed = true;
      }
    }
  }
  return r;
}

Rel greatest_sim(const KripkeStructure& k) {
  int n = static_cast<int>(k.states.size());
  Rel r;
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      auto ps = k.props_of(s), pt = k.props_of(t);
      if (std::includes(pt.begin(), pt.end(), ps.begin(), ps.end())) r.insert({s, t});
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = r.begin(); it != r.end();) {
      if (matched(k, it->first, it->second, r)) {
        ++it;
      } else {
        it = r.erase(it);
        changed = true;
      }
    }
  }
  return r;
}

bool is_bisimulation(const KripkeStructure& k, const Rel& r) {
  for (const auto& [s, t] : r) {
    if (k.props_of(s) != k.props_of(t)) return false;
    if (!matched(k, s, t, r) || !matched(k, t, s, r)) return false;
  }
  return true;
}

// Ground truth by brute force over every relation; usable only for tiny
// structures, where it certifies the fixpoint oracle above.
bool some_bisimulation_contains(const KripkeStructure& k, int s, int t) {
  int n = static_cast<int>(k.states.size());
  int cells = n * n;
  REQUIRE(cells <= 9);
  for (unsigned mask = 0; mask < (1u << cells); ++mask) {
    Rel r;
    for (int c = 0; c < cells; ++c) {
      if (mask & (1u << c)) r.insert({c / n, c % n});
    }
    if (r.count({s, t}) && is_bisimulation(k, r)) return true;
  }
  return false;
}

// Pair query across two structures through their side-by-side union.
KripkeStructure glue(const KripkeStructure& a, const KripkeStructure& b) {
  return disjoint_union(a, b, "l.", "r.");
}

}  // namespace

TEST_CASE("the fixpoint oracle matches brute-force relation search") {
  std::mt19937 rng(4001);
  for (int i = 0; i < 30; ++i) {
    KripkeStructure k = testgen::random_kripke(rng, 3);
    Rel r = greatest_bisim(k);
    int n = static_cast<int>(k.states.size());
    for (int s = 0; s < n; ++s) {
      for (int t = 0; t < n; ++t) {
        CHECK(r.count({s, t}) == static_cast<std::size_t>(some_bisimulation_contains(k, s, t)));
      }
    }
  }
}

TEST_CASE("partition refinement agrees with the fixpoint oracle") {
  std::mt19937 rng(4002);
  for (int i = 0; i < 60; ++i) {
    KripkeStructure k = testgen::random_kripke(rng);
    Rel r = greatest_bisim(k);
    int n = static_cast<int>(k.states.size());
    for (int s = 0; s < n; ++s) {
      for (int t = 0; t < n; ++t) {
        CHECK(bisim(k, s, k, t) == static_cast<bool>(r.count({s, t})));
      }
    }
  }
}

TEST_CASE("cross-structure queries go through the union unchanged") {
  std::mt19937 rng(4003);
  for (int i = 0; i < 30; ++i) {
    KripkeStructure k1 = testgen::random_kripke(rng);
    KripkeStructure k2 = testgen::random_kripke(rng);
    KripkeStructure u = glue(k1, k2);
    Rel r = greatest_bisim(u);
    int off = static_cast<int>(k1.states.size());
    for (int s = 0; s < off; ++s) {
      for (std::size_t t = 0; t < k2.states.size(); ++t) {
        CHECK(bisim(k1, s, k2, static_cast<int>(t)) ==
              static_cast<bool>(r.count({s, off + static_cast<int>(t)})));
      }
    }
  }
}

TEST_CASE("minimization blocks are exactly the bisimilarity classes") {
  std::mt19937 rng(4004);
  for (int i = 0; i < 40; ++i) {
    KripkeStructure k = testgen::random_kripke(rng);
    MinimizeResult min = minimize(k);
    int n = static_cast<int>(k.states.size());
    for (int s = 0; s < n; ++s) {
      CHECK(bisim(k, s, min.quotient, min.block_of[static_cast<std::size_t>(s)]));
      for (int t = 0; t < n; ++t) {
        CHECK((min.block_of[static_cast<std::size_t>(s)] ==
               min.block_of[static_cast<std::size_t>(t)]) == bisim(k, s, k, t));
      }
    }
    int q = static_cast<int>(min.quotient.states.size());
    for (int s = 0; s < q; ++s) {
      for (int t = s + 1; t < q; ++t) CHECK_FALSE(bisim(min.quotient, s, min.quotient, t));
    }
    for (std::size_t j = 1; j < min.rounds.size(); ++j) {
      CHECK(min.rounds[j] >= min.rounds[j - 1]);
    }
    CHECK(min.rounds.back() == static_cast<int>(min.blocks.size()));
  }
}

TEST_CASE("the simulation preorder matches its fixpoint oracle") {
  std::mt19937 rng(4005);
  for (int i = 0; i < 40; ++i) {
    KripkeStructure k = testgen::random_kripke(rng);
    Rel r = greatest_sim(k);
    int n = static_cast<int>(k.states.size());
    for (int s = 0; s < n; ++s) {
      for (int t = 0; t < n; ++t) {
        CHECK(simulate(k, s, k, t) == static_cast<bool>(r.count({s, t})));
        if (bisim(k, s, k, t)) {
          CHECK(simulate(k, s, k, t));
          CHECK(simulate(k, t, k, s));
        }
      }
    }
  }
}

TEST_CASE("mutual simulation does not imply bisimilarity") {
  // One side may stop right after the first step, the other may not; each
  // still simulates the other.
  KripkeStructure p;
  p.name = "p";
  p.declared_labels = {"a", "b"};
  p.add_state("p0");
  p.add_state("p1");
  p.add_state("p2");
  p.add_state("p3");
  p.initial = 0;
  p.add_transition(0, parse_word("P a"), 1);
  p.add_transition(1, parse_word("P b"), 2);
  p.add_transition(0, parse_word("P a"), 3);

  KripkeStructure q;
  q.name = "q";
  q.declared_labels = {"a", "b"};
  q.add_state("q0");
  q.add_state("q1");
  q.add_state("q2");
  q.initial = 0;
  q.add_transition(0, parse_word("P a"), 1);
  q.add_transition(1, parse_word("P b"), 2);

  CHECK(simulate(p, 0, q, 0));
  CHECK(simulate(q, 0, p, 0));
  CHECK_FALSE(bisim(p, 0, q, 0));

  // Empty behaviour is simulated by anything, never the other way around
  // once a move exists.
  CHECK(simulate(q, 2, q, 0));
  CHECK_FALSE(simulate(q, 0, q, 2));
}

TEST_CASE("distinguishing formulas hold on one side and fail on the other") {
  std::mt19937 rng(4006);
  int produced = 0;
  for (int i = 0; i < 60; ++i) {
    KripkeStructure k1 = testgen::random_kripke(rng);
    KripkeStructure k2 = testgen::random_kripke(rng);
    int s1 = *k1.initial, s2 = *k2.initial;
    auto f = distinguishing_formula(k1, s1, k2, s2);
    if (bisim(k1, s1, k2, s2)) {
      CHECK(!f.has_value());
      continue;
    }
    REQUIRE(f.has_value());
    ++produced;
    CHECK(mc_kripke(k1, s1, *f).holds);
    CHECK_FALSE(mc_kripke(k2, s2, *f).holds);
  }
  CHECK(produced > 10);
}

TEST_CASE("distinguishing deadlock from choice") {
  KripkeStructure m;
  m.name = "m";
  m.declared_labels = {"a"};
  m.add_state("s0");
  m.add_state("s1");
  m.initial = 0;
  m.add_transition(0, parse_word("D a"), 0);
  m.add_transition(0, parse_word("D a"), 1);
  KripkeStructure d;
  d.name = "d";
  d.add_state("d");
  d.initial = 0;
  auto f = distinguishing_formula(m, 0, d, 0);
  REQUIRE(f.has_value());
  CHECK(format_formula(*f) == "<D a> true");
}

TEST_CASE("both presentations of each tree are weakly bisimilar") {
  CHECK(weak_bisim_gst(unit_interval_gst(), unit_interval_split_gst()));
  CHECK(weak_bisim_gst(dense_attachment_gst(), dense_attachment_pair_gst()));
  CHECK_FALSE(weak_bisim_gst(unit_interval_gst(), dense_attachment_gst()));

  SymbolicGst pt;
  pt.name = "pt";
  pt.vertices = {"r", "t"};
  pt.root = "r";
  pt.labels = {{"a"}};
  pt.edges = {{"e1", "r", "t", point("a")}};
  CHECK_FALSE(weak_bisim_gst(unit_interval_gst(), pt));
  CHECK(weak_bisim_gst(pt, pt));
}

TEST_CASE("trajectory matching agrees with sampled-quotient matching") {
  std::mt19937 rng(4007);
  for (int i = 0; i < 30; ++i) {
    SymbolicGst g1 = testgen::random_gst(rng);
    SymbolicGst g2 = testgen::random_gst(rng);
    KripkeStructure s1 = sampled_surrogate(g1, 2);
    KripkeStructure s2 = sampled_surrogate(g2, 2);
    CHECK(weak_bisim_gst(g1, g2) == bisim(s1, *s1.initial, s2, *s2.initial));
  }
}

TEST_CASE("a stretch's endpoints-to-interior states are bisimilar") {
  KripkeStructure sur = build_surrogate(unit_interval_gst());
  CHECK(bisim(sur, sur.require_state("v:r"), sur, sur.require_state("i:e1")));
  CHECK_FALSE(bisim(sur, sur.require_state("v:r"), sur, sur.require_state("v:t")));
}

TEST_CASE("step matching implies trajectory matching on discrete trees") {
  std::mt19937 rng(4008);
  auto random_discrete = [&rng]() {
    static const char* labels[] = {"a", "b"};
    std::uniform_int_distribution<int> edge_count(1, 5);
    std::uniform_int_distribution<int> lbl(0, 1);
    DiscreteTree t;
    t.name = "rd";
    t.vertices = {"v0"};
    t.root = "v0";
    int n = edge_count(rng);
    for (int i = 0; i < n; ++i) {
      std::uniform_int_distribution<int> src(0, static_cast<int>(t.vertices.size()) - 1);
      std::string source = t.vertices[static_cast<std::size_t>(src(rng))];
      std::string target = "v" + std::to_string(t.vertices.size());
      t.vertices.push_back(target);
      t.edges.push_back({"e" + std::to_string(i), source, target, {labels[lbl(rng)]}});
    }
    return from_discrete_st(t);
  };
  for (int i = 0; i < 40; ++i) {
    SymbolicGst g1 = random_discrete();
    SymbolicGst g2 = random_discrete();
    if (strong_bisim_discrete(g1, g2)) CHECK(weak_bisim_gst(g1, g2));
  }
}

TEST_CASE("step matching is defined only for point-only trees") {
  CHECK_THROWS_AS(strong_bisim_discrete(unit_interval_gst(), unit_interval_gst()),
                  std::invalid_argument);

  DiscreteTree one;
  one.name = "one";
  one.vertices = {"r", "x"};
  one.root = "r";
  one.edges = {{"e1", "r", "x", {"a"}}};
  DiscreteTree twin = one;
  twin.name = "twin";
  twin.vertices.push_back("y");
  twin.edges.push_back({"e2", "r", "y", {"a"}});
  DiscreteTree other = one;
  other.name = "other";
  other.edges[0].label = {"b"};

  CHECK(strong_bisim_discrete(from_discrete_st(one), from_discrete_st(twin)));
  CHECK_FALSE(strong_bisim_discrete(from_discrete_st(one), from_discrete_st(other)));
}
