#include <doctest.h>

#include <random>

#include "gstlab/bisim.hpp"
#include "gstlab/generators.hpp"
#include "gstlab/lazy.hpp"
#include "gstlab/model_check.hpp"
#include "gstlab/surrogate.hpp"
#include "random_models.hpp"

using namespace gstlab;

namespace {

KripkeStructure two_state_loop() {
  KripkeStructure k;
  k.name = "m";
  k.declared_labels = {"a"};
  k.add_state("s0");
  k.add_state("s1");
  k.initial = 0;
  k.add_transition(0, parse_word("D a"), 0);
  k.add_transition(0, parse_word("D a"), 1);
  return k;
}

}  // namespace

TEST_CASE("formula syntax round-trips through its core form") {
  for (const char* text : {"true", "@p", "~@p", "@p & @q", "<D a> true", "<D a, P b> ~@p"}) {
    CHECK(format_formula(parse_formula(text)) == text);
  }
  CHECK(equal(parse_formula("(@p & @q)"), parse_formula("@p & @q")));
  CHECK(format_formula(parse_formula("(@p & @q)")) == "@p & @q");
}

TEST_CASE("sugared connectives desugar structurally") {
  CHECK(equal(parse_formula("false"), neg(truth())));
  CHECK(equal(parse_formula("@p | @q"), disj(prop("p"), prop("q"))));
  CHECK(equal(parse_formula("@p -> @q"), implies(prop("p"), prop("q"))));
  CHECK(equal(parse_formula("[D a] @p"), box(parse_word("D a"), prop("p"))));
  CHECK(equal(parse_formula("[D a] @p"), neg(diamond(parse_word("D a"), neg(prop("p"))))));
}

TEST_CASE("precedence: modalities, then conjunction, then disjunction, then implication") {
  CHECK(equal(parse_formula("~@p & @q"), conj(neg(prop("p")), prop("q"))));
  CHECK(equal(parse_formula("@p & @q | @r"), disj(conj(prop("p"), prop("q")), prop("r"))));
  CHECK(equal(parse_formula("@p | @q -> @r"), implies(disj(prop("p"), prop("q")), prop("r"))));
  CHECK(equal(parse_formula("@p -> @q -> @r"),
              implies(prop("p"), implies(prop("q"), prop("r")))));
  CHECK(equal(parse_formula("<D a> @p & @q"), conj(diamond(parse_word("D a"), prop("p")), prop("q"))));
  CHECK(equal(parse_formula("<D a> (@p & @q)"),
              diamond(parse_word("D a"), conj(prop("p"), prop("q")))));
}

TEST_CASE("parse errors carry their offset") {
  auto offset_of = [](const char* text) {
    try {
      parse_formula(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.pos);
    }
    return -1L;
  };
  CHECK(offset_of("") >= 0);
  CHECK(offset_of("<D a true") >= 0);
  CHECK(offset_of("(@p & @q") >= 0);
  CHECK(offset_of("@1bad") >= 0);
  CHECK(offset_of("@p @q") >= 0);
  CHECK(offset_of("& @p") >= 0);
}

TEST_CASE("modal depth counts nested modalities") {
  CHECK(modal_depth(parse_formula("@p & ~@q")) == 0);
  CHECK(modal_depth(parse_formula("<D a> true")) == 1);
  CHECK(modal_depth(parse_formula("[D a] <P b> <D a> true")) == 3);
  CHECK(modal_depth(parse_formula("<D a> true & <P b> <P b> true")) == 2);
}

TEST_CASE("satisfaction on the two-state loop") {
  KripkeStructure m = two_state_loop();
  auto holds = [&](int s, const char* f) { return mc_kripke(m, s, parse_formula(f)).holds; };
  CHECK(holds(0, "<D a> true"));
  CHECK(holds(0, "<D a> ~<D a> true"));
  CHECK(holds(0, "<D a> <D a> true"));
  CHECK_FALSE(holds(1, "<D a> true"));
  CHECK(holds(1, "[D a] false"));
  CHECK_FALSE(holds(0, "[D a] <D a> true"));
}

TEST_CASE("unknown props and unused words evaluate false with a warning") {
  KripkeStructure m = two_state_loop();
  auto r1 = mc_kripke(m, 0, parse_formula("@ghost"));
  CHECK_FALSE(r1.holds);
  REQUIRE(r1.warnings.size() == 1);
  CHECK(r1.warnings[0].find("ghost") != std::string::npos);

  auto r2 = mc_kripke(m, 0, parse_formula("<P c> true"));
  CHECK_FALSE(r2.holds);
  REQUIRE(r2.warnings.size() == 1);
  CHECK(r2.warnings[0].find("P c") != std::string::npos);
}

TEST_CASE("tree-level satisfaction through the quotient") {
  SymbolicGst unit = unit_interval_gst();
  auto holds = [](const SymbolicGst& g, const char* f) {
    return mc_gst(g, parse_formula(f)).holds;
  };
  CHECK(holds(unit, "<D a> true"));
  CHECK_FALSE(holds(unit, "<P a> true"));
  CHECK_FALSE(holds(unit, "[D a] <D a> true"));
  CHECK(holds(unit, "<D a> ~<D a> true"));

  SymbolicGst den = dense_attachment_gst();
  CHECK(holds(den, "<D a, P b> true"));
  CHECK(holds(den, "<D a> (<P b> true & <D a> true)"));
  CHECK_FALSE(holds(den, "[D a, P b] false"));
  CHECK_FALSE(holds(den, "<P b> true"));
}

TEST_CASE("quotient, explicit surrogate and sampled readings agree") {
  std::mt19937 rng(3001);
  for (int i = 0; i < 40; ++i) {
    SymbolicGst g = testgen::random_gst(rng);
    FormulaPtr f = testgen::random_formula(rng, 4, /*with_props=*/false);
    bool via_quotient = mc_gst(g, f).holds;
    KripkeStructure sur = build_surrogate(g);
    bool via_surrogate = mc_kripke(sur, *sur.initial, to_hml(f)).holds;
    bool via_samples = mc_gst_direct(g, f, 2).holds;
    CHECK(via_quotient == via_surrogate);
    CHECK(via_quotient == via_samples);
  }
}

TEST_CASE("depth-d characteristic formulas capture depth-d matching") {
  std::mt19937 rng(3002);
  std::vector<KripkeStructure> structures = {two_state_loop(),
                                             build_surrogate(dense_attachment_gst())};
  for (int i = 0; i < 6; ++i) structures.push_back(testgen::random_kripke(rng));
  for (const auto& k : structures) {
    int n = static_cast<int>(k.states.size());
    for (int d = 0; d <= 3; ++d) {
      for (int s = 0; s < n; ++s) {
        FormulaPtr chi = characteristic_formula(k, s, d);
        for (int t = 0; t < n; ++t) {
          CHECK(mc_kripke(k, t, chi).holds == (stratified(k, s, t, d) == d));
        }
      }
    }
  }
}

TEST_CASE("characteristic formulas at full depth pin the bisimulation class") {
  std::mt19937 rng(3003);
  for (int i = 0; i < 10; ++i) {
    KripkeStructure k = testgen::random_kripke(rng);
    int n = static_cast<int>(k.states.size());
    for (int s = 0; s < n; ++s) {
      FormulaPtr chi = characteristic_formula(k, s, n);
      for (int t = 0; t < n; ++t) {
        CHECK(mc_kripke(k, t, chi).holds == bisim(k, s, k, t));
      }
    }
  }
}
