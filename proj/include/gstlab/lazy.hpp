#ifndef GSTLAB_LAZY_HPP
#define GSTLAB_LAZY_HPP

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gstlab/exec_word.hpp"
#include "gstlab/kripke.hpp"

namespace gstlab {

// Indexed successor family {member(0), member(1), ...}.  An absent count
// means the family is infinite; it must then carry a collapse hint: hint(d)
// lists indices, ascending, whose members jointly realize every depth-d
// equivalence class the family reaches.  Bounded analyses inspect only those
// representatives, so a wrong hint silently changes verdicts; validate_hints
// exists to sample-check the claim.
struct SuccessorFamily {
  std::function<std::string(long long)> member;
  std::optional<long long> count;
  std::function<std::vector<long long>(int)> hint;
};

// One labeled move of a state: exactly one of target / family is set.
struct SuccessorGroup {
  ExecWord word;
  std::optional<std::string> target;
  std::optional<SuccessorFamily> family;
};

SuccessorGroup single_target(ExecWord w, std::string target);
SuccessorGroup indexed_family(ExecWord w, SuccessorFamily f);

// A Kripke structure given by functions instead of tables, so the state
// space may be infinite.  States are identified by strings; successors and
// props must be pure functions of the id.
struct LazyKripke {
  std::string name;
  std::vector<std::string> initial;
  std::function<std::vector<SuccessorGroup>(const std::string&)> successors;
  std::function<std::set<std::string>(const std::string&)> props;
  // Partial: nullopt on states outside the ranked component.
  std::function<std::optional<long long>(const std::string&)> rank;
  // A state pair the structure was built to exhibit, when there is one.
  std::optional<std::pair<std::string, std::string>> designated;
};

// Wraps a finite structure; state ids are the state names, which must be
// unique.
LazyKripke from_kripke(const KripkeStructure& ks);

// Breadth-first expansion to the given depth.  States first reached at the
// depth limit are kept but not expanded, so they contribute no transitions.
// Every family is cut to at most `width` members: hint representatives for
// the remaining depth first, then lowest indices.
KripkeStructure truncate(const LazyKripke& lz, int depth, int width = 8);

// Depth-indexed equivalence classes.  class_id(s, 0) is determined by the
// valuation alone, class_id(s, d) additionally by the set of (word, depth
// d-1 class of successor) pairs over the bounded successors.  Ids are
// interned per depth and comparable only at equal depth.
class StratifiedClassifier {
 public:
  explicit StratifiedClassifier(const LazyKripke& lz) : lz_(&lz) {}

  int class_id(const std::string& state, int depth);

  // The successors a depth-bounded analysis may inspect: the single target,
  // all members of a finite family, or the hint representatives of an
  // infinite one.
  std::vector<std::string> bounded_targets(const SuccessorGroup& g, int depth) const;

 private:
  using Signature =
      std::pair<std::set<std::string>, std::set<std::pair<ExecWord, int>>>;

  const LazyKripke* lz_;
  std::vector<std::map<Signature, int>> interner_;
  std::vector<std::map<std::string, int>> memo_;
};

// Largest j <= k at which s and t fall into the same depth-j class, or -1
// when already their valuations differ.
int stratified(const LazyKripke& lz, const std::string& s, const std::string& t,
               int k);
int stratified(const KripkeStructure& ks, int s, int t, int k);

// Samples members of every hinted family reachable within max_depth levels
// and checks each against the family's representatives at every depth up to
// max_depth.  Returns a description of the first violation, or nullopt when
// all samples collapse as claimed.
std::optional<std::string> validate_hints(const LazyKripke& lz, int max_depth,
                                          int samples);

}  // namespace gstlab

#endif
