#include "gstlab/generators.hpp"

#include <stdexcept>
#include <vector>

#include "gstlab/surrogate.hpp"

namespace gstlab {

SymbolicGst unit_interval_gst() {
  SymbolicGst g;
  g.name = "unit";
  g.vertices = {"r", "t"};
  g.root = "r";
  g.labels = {Label{"a"}};
  g.edges = {GstEdge{"e1", "r", "t", dense("a")}};
  return g;
}

SymbolicGst unit_interval_split_gst() {
  SymbolicGst g;
  g.name = "unit2";
  g.vertices = {"r", "m", "t"};
  g.root = "r";
  g.labels = {Label{"a"}};
  g.edges = {GstEdge{"e1", "r", "m", dense("a")},
             GstEdge{"e2", "m", "t", dense("a")}};
  return g;
}

namespace {

std::shared_ptr<const SymbolicGst> point_branch(const std::string& name,
                                                const std::string& mid,
                                                const std::string& leaf,
                                                const std::string& edge) {
  auto child = std::make_shared<SymbolicGst>();
  child->name = name;
  child->vertices = {mid, leaf};
  child->root = mid;
  child->labels = {Label{"a"}, Label{"b"}};
  child->edges = {GstEdge{edge, mid, leaf, point("b")}};
  return child;
}

}  // namespace

SymbolicGst dense_attachment_gst() {
  SymbolicGst g;
  g.name = "dense";
  g.vertices = {"r", "t"};
  g.root = "r";
  g.labels = {Label{"a"}, Label{"b"}};
  g.edges = {GstEdge{"e1", "r", "t", dense("a")}};
  g.attachments["e1"] = {Attachment{point_branch("branch", "p", "leaf", "f1")}};
  return g;
}

SymbolicGst dense_attachment_pair_gst() {
  SymbolicGst g;
  g.name = "dense2";
  g.vertices = {"r", "t"};
  g.root = "r";
  g.labels = {Label{"a"}, Label{"b"}};
  g.edges = {GstEdge{"e1", "r", "t", dense("a")}};
  g.attachments["e1"] = {Attachment{point_branch("left", "p", "pl", "f1")},
                         Attachment{point_branch("right", "q", "ql", "g1")}};
  return g;
}

namespace {

std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

long long number(const std::string& s) {
  try {
    return std::stoll(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed state id component '" + s + "'");
  }
}

}  // namespace

LazyKripke gen_fig3() {
  ExecWord a = ExecWord::normalize({point("a")});
  ExecWord b = ExecWord::normalize({point("b")});
  ExecWord ab = ExecWord::normalize({point("a"), point("b")});

  // Chain heads d:n:1 for n = 1, 2, ...; at depth d the heads of chains
  // longer than d are all in one class, so the first d+1 chains represent
  // every class the family meets.
  SuccessorFamily chains{
      [](long long m) { return "d:" + std::to_string(m + 1) + ":1"; },
      std::nullopt,
      [](int d) {
        std::vector<long long> reps;
        for (long long i = 0; i <= d; ++i) reps.push_back(i);
        return reps;
      }};

  LazyKripke lz;
  lz.name = "fig3";
  lz.initial = {"u", "v"};
  lz.designated = {{"u", "v"}};
  lz.props = [](const std::string&) { return std::set<std::string>{}; };
  lz.rank = [](const std::string& s) -> std::optional<long long> {
    if (s == "u" || s == "E") return 0;
    std::vector<std::string> parts = split_on(s, ':');
    if (parts.size() == 3 && parts[0] == "d")
      return number(parts[1]) - number(parts[2]);
    return std::nullopt;
  };
  lz.successors = [=](const std::string& s) -> std::vector<SuccessorGroup> {
    if (s == "u") return {indexed_family(a, chains), single_target(ab, "E")};
    if (s == "v")
      return {indexed_family(a, chains), single_target(a, "x:1"),
              single_target(ab, "E")};
    if (s == "E") return {};
    std::vector<std::string> parts = split_on(s, ':');
    if (parts.size() == 2 && parts[0] == "x") {
      long long i = number(parts[1]);
      return {single_target(a, "x:" + std::to_string(i + 1)),
              single_target(b, "E"), single_target(ab, "E")};
    }
    if (parts.size() == 3 && parts[0] == "d") {
      long long n = number(parts[1]);
      long long j = number(parts[2]);
      if (j < n)
        return {single_target(
                    a, "d:" + std::to_string(n) + ":" + std::to_string(j + 1)),
                single_target(b, "E"), single_target(ab, "E")};
      return {single_target(b, "E")};
    }
    throw std::invalid_argument("unknown state '" + s + "'");
  };
  return lz;
}

LazyKripke gen_gx() {
  ExecWord da = ExecWord::normalize({dense("a")});
  ExecWord pb = ExecWord::normalize({point("b")});
  ExecWord dapb = ExecWord::normalize({dense("a"), point("b")});

  auto inter = [](long long k) { return "I:" + std::to_string(k); };
  auto branch = [](long long k) { return "A:" + std::to_string(k); };
  // Classes of I:k and A:k stop refining once k passes the depth, so the
  // lowest d+2 indices cover every depth-d class of either family.
  auto low_reps = [](int d) {
    std::vector<long long> reps;
    for (long long i = 0; i <= d + 1; ++i) reps.push_back(i);
    return reps;
  };

  LazyKripke lz;
  lz.name = "gx";
  lz.initial = {"R"};
  lz.props = [](const std::string&) { return std::set<std::string>{}; };
  lz.rank = [](const std::string&) { return std::optional<long long>{}; };
  lz.successors = [=](const std::string& s) -> std::vector<SuccessorGroup> {
    if (s == "R")
      return {single_target(da, "R"),
              indexed_family(da, SuccessorFamily{inter, std::nullopt, low_reps}),
              indexed_family(da, SuccessorFamily{branch, std::nullopt, low_reps}),
              single_target(dapb, "F")};
    if (s == "F") return {};
    std::vector<std::string> parts = split_on(s, ':');
    if (parts.size() == 2 && parts[0] == "I") {
      long long k = number(parts[1]);
      return {indexed_family(da, SuccessorFamily{inter, k + 1, {}}),
              indexed_family(da, SuccessorFamily{branch, k + 1, {}}),
              single_target(dapb, "F")};
    }
    if (parts.size() == 2 && parts[0] == "A") {
      long long k = number(parts[1]);
      if (k == 0) return {single_target(pb, "F")};
      return {single_target(pb, "F"),
              indexed_family(da, SuccessorFamily{inter, k, {}}),
              indexed_family(da, SuccessorFamily{branch, k, {}}),
              single_target(dapb, "F")};
    }
    throw std::invalid_argument("unknown state '" + s + "'");
  };
  return lz;
}

LazyKripke generator(const std::string& name) {
  if (name == "fig3") return gen_fig3();
  if (name == "gx") return gen_gx();
  if (name == "unit") return from_kripke(build_surrogate(unit_interval_gst()));
  if (name == "denseattach")
    return from_kripke(build_surrogate(dense_attachment_gst()));
  throw std::invalid_argument("unknown generator '" + name + "'");
}

}  // namespace gstlab
