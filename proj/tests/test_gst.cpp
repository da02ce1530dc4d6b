#include <doctest.h>

#include <memory>
#include <optional>

#include "gstlab/bisim.hpp"
#include "gstlab/generators.hpp"
#include "gstlab/gst.hpp"

using namespace gstlab;

namespace {

SymbolicGst chain(std::string name, Segment s1) {
  SymbolicGst g;
  g.name = std::move(name);
  g.vertices = {"r", "t"};
  g.root = "r";
  g.edges = {{"e1", "r", "t", s1}};
  g.labels = {{"a"}, {"b"}};
  return g;
}

// Dense a-stretch whose interior positions carry a child that is itself a
// dense b-stretch with a point-c branch everywhere; exercises class paths
// two attachments deep.
SymbolicGst two_level() {
  SymbolicGst inner;
  inner.name = "inner";
  inner.vertices = {"p", "q"};
  inner.root = "p";
  inner.edges = {{"g1", "p", "q", dense("b")}};
  inner.labels = {{"a"}, {"b"}, {"c"}};
  SymbolicGst leafy;
  leafy.name = "leafy";
  leafy.vertices = {"x", "y"};
  leafy.root = "x";
  leafy.edges = {{"h1", "x", "y", point("c")}};
  leafy.labels = inner.labels;
  inner.attachments["g1"].push_back({std::make_shared<const SymbolicGst>(leafy)});

  SymbolicGst g = chain("twolevel", dense("a"));
  g.labels = inner.labels;
  g.attachments["e1"].push_back({std::make_shared<const SymbolicGst>(inner)});
  return g;
}

}  // namespace

TEST_CASE("builders produce valid trees") {
  for (const auto& g : {unit_interval_gst(), unit_interval_split_gst(), dense_attachment_gst(),
                        dense_attachment_pair_gst(), two_level()}) {
    auto report = validate(g);
    CHECK(report.ok);
    CHECK(report.violations.empty());
  }
}

TEST_CASE("validation rejects malformed trees") {
  auto violations = [](SymbolicGst g) { return validate(g).violations; };

  SymbolicGst dup = chain("dup", dense("a"));
  dup.vertices.push_back("t");
  CHECK(!violations(dup).empty());

  SymbolicGst island = chain("island", dense("a"));
  island.vertices.push_back("z");
  CHECK(!violations(island).empty());

  SymbolicGst diamond = chain("diamond", dense("a"));
  diamond.vertices.push_back("u");
  diamond.edges.push_back({"e2", "r", "u", dense("a")});
  diamond.edges.push_back({"e3", "u", "t", dense("a")});
  CHECK(!violations(diamond).empty());

  SymbolicGst nolabel = chain("nolabel", dense("z"));
  CHECK(!violations(nolabel).empty());

  SymbolicGst badroot = chain("badroot", dense("a"));
  badroot.root = "nope";
  CHECK(!violations(badroot).empty());

  SymbolicGst onpoint = chain("onpoint", point("a"));
  SymbolicGst child = chain("child", point("b"));
  onpoint.attachments["e1"].push_back({std::make_shared<const SymbolicGst>(child)});
  CHECK(!violations(onpoint).empty());
}

TEST_CASE("cut classes come out in declaration order") {
  auto unit = cut_classes(unit_interval_gst());
  REQUIRE(unit.size() == 3);
  CHECK(unit[0].str() == "v:r");
  CHECK(unit[1].str() == "v:t");
  CHECK(unit[2].str() == "i:e1");

  auto den = cut_classes(dense_attachment_gst());
  REQUIRE(den.size() == 5);
  CHECK(den[0].str() == "v:r");
  CHECK(den[1].str() == "v:t");
  CHECK(den[2].str() == "i:e1");
  CHECK(den[3].str() == "a:e1:0");
  CHECK(den[4].str() == "e1:0/v:leaf");
}

TEST_CASE("a two-deep attachment yields nested class paths") {
  auto classes = cut_classes(two_level());
  std::vector<std::string> names;
  for (const auto& c : classes) names.push_back(c.str());
  CHECK(names == std::vector<std::string>{"v:r", "v:t", "i:e1", "a:e1:0", "e1:0/v:q",
                                          "e1:0/i:g1", "e1:0/a:g1:0", "e1:0/g1:0/v:y"});
}

TEST_CASE("words between unit classes") {
  SymbolicGst g = unit_interval_gst();
  ExecWord da = parse_word("D a");
  auto w = [&](const CutClass& c1, const CutClass& c2) { return exec_between(g, c1, c2); };
  CutClass r = vertex_class("r"), t = vertex_class("t"), in = interior_class("e1");

  CHECK(w(r, t) == da);
  CHECK(w(r, in) == da);
  CHECK(w(in, in) == da);
  CHECK(w(in, t) == da);
  CHECK(w(t, r) == std::nullopt);
  CHECK(w(r, r) == std::nullopt);
}

TEST_CASE("words between dense-attachment classes") {
  SymbolicGst g = dense_attachment_gst();
  auto w = [&](const CutClass& c1, const CutClass& c2) { return exec_between(g, c1, c2); };
  CutClass r = vertex_class("r");
  CutClass ap = attach_class("e1", 0);
  CutClass leaf = vertex_class("leaf");
  leaf.path = {{"e1", 0}};

  CHECK(w(r, ap) == parse_word("D a"));
  CHECK(w(ap, leaf) == parse_word("P b"));
  CHECK(w(r, leaf) == parse_word("D a, P b"));
  CHECK(w(ap, ap) == parse_word("D a"));
  CHECK(w(leaf, ap) == std::nullopt);
  CHECK(w(leaf, r) == std::nullopt);
}

TEST_CASE("words across two attachment levels") {
  SymbolicGst g = two_level();
  auto cls = cut_classes(g);
  auto by_name = [&](const std::string& s) {
    for (const auto& c : cls) {
      if (c.str() == s) return c;
    }
    FAIL("no class ", s);
    return cls[0];
  };
  CHECK(exec_between(g, by_name("v:r"), by_name("e1:0/v:q")) == parse_word("D a, D b"));
  CHECK(exec_between(g, by_name("v:r"), by_name("e1:0/a:g1:0")) == parse_word("D a, D b"));
  CHECK(exec_between(g, by_name("v:r"), by_name("e1:0/g1:0/v:y")) == parse_word("D a, D b, P c"));
  CHECK(exec_between(g, by_name("a:e1:0"), by_name("e1:0/g1:0/v:y")) == parse_word("D b, P c"));
  CHECK(exec_between(g, by_name("e1:0/i:g1"), by_name("e1:0/v:q")) == parse_word("D b"));
  CHECK(exec_between(g, by_name("e1:0/v:q"), by_name("v:t")) == std::nullopt);
}

TEST_CASE("subtrees at classes are valid and behave like their position") {
  SymbolicGst unit = unit_interval_gst();
  for (const auto& c : cut_classes(unit)) {
    SymbolicGst sub = sub_gst(unit, c);
    CHECK(validate(sub).ok);
  }
  // The tail of a dense stretch is again a dense stretch.
  CHECK(weak_bisim_gst(sub_gst(unit, interior_class("e1")), unit));
  CHECK(weak_bisim_gst(sub_gst(unit, vertex_class("r")), unit));

  SymbolicGst den = dense_attachment_gst();
  for (const auto& c : cut_classes(den)) {
    CHECK(validate(sub_gst(den, c)).ok);
  }
  CHECK(weak_bisim_gst(sub_gst(den, vertex_class("r")), den));
  CHECK(weak_bisim_gst(sub_gst(den, interior_class("e1")), den));
  // At an attachment point the grafted branch is available at once.
  SymbolicGst at = sub_gst(den, attach_class("e1", 0));
  bool has_point_root_edge = false;
  for (const auto* e : at.outgoing(at.root)) {
    if (e->segment.shape == Shape::Point) has_point_root_edge = true;
  }
  CHECK(has_point_root_edge);
  CHECK_FALSE(weak_bisim_gst(at, den));
}

TEST_CASE("discrete trees embed as point-only trees") {
  DiscreteTree t;
  t.name = "steps";
  t.vertices = {"r", "x", "y"};
  t.root = "r";
  t.edges = {{"e1", "r", "x", {"a"}}, {"e2", "x", "y", {"b"}}};
  SymbolicGst g = from_discrete_st(t);
  CHECK(validate(g).ok);
  for (const auto& e : g.edges) CHECK(e.segment.shape == Shape::Point);
  CHECK(strong_bisim_discrete(g, g));
}

TEST_CASE("structural equality follows attachment children by value") {
  SymbolicGst a = dense_attachment_gst();
  SymbolicGst b = dense_attachment_gst();
  CHECK(same_structure(a, b));
  CHECK_FALSE(same_structure(a, unit_interval_gst()));

  // Same shape, renamed child vertex: structurally different.
  SymbolicGst c = dense_attachment_gst();
  auto child = *c.attachments["e1"][0].child;
  child.vertices.back() = "other";
  child.edges[0].target = "other";
  c.attachments["e1"][0].child = std::make_shared<const SymbolicGst>(child);
  CHECK_FALSE(same_structure(a, c));
  CHECK(weak_bisim_gst(a, c));
}
