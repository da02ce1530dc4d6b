#ifndef GSTLAB_BISIM_HPP
#define GSTLAB_BISIM_HPP

#include <optional>
#include <vector>

#include "gstlab/formula.hpp"
#include "gstlab/gst.hpp"
#include "gstlab/kripke.hpp"

namespace gstlab {

// Coarsest bisimulation partition via signature refinement: states start
// grouped by their propositions and split whenever their sets of
// (word, target block) pairs diverge.  Block numbering is first-seen in
// state order, so the quotient is deterministic.
struct MinimizeResult {
  KripkeStructure quotient;
  std::vector<int> block_of;             // state index -> block index
  std::vector<std::vector<int>> blocks;  // block index -> member states
  std::vector<int> rounds;               // block count after each round
};

MinimizeResult minimize(const KripkeStructure& k);

bool bisim(const KripkeStructure& k1, int s1, const KripkeStructure& k2, int s2);

// Greatest simulation preorder: does s2 match every move of s1, carrying at
// least s1's propositions along the way?
bool simulate(const KripkeStructure& k1, int s1, const KripkeStructure& k2, int s2);

// For non-bisimilar states, a formula holding at s1 and failing at s2,
// found by descending the refinement rounds: the first round separating
// the two states yields either a move of s1 no s2-move can answer at the
// previous round, or symmetrically.  The result is re-checked against both
// states before being returned.  Bisimilar states yield nullopt.
std::optional<FormulaPtr> distinguishing_formula(const KripkeStructure& k1, int s1,
                                                 const KripkeStructure& k2, int s2);

// Trees are compared through their class quotients: matching trajectories
// word for word is the same as matching quotient transitions.
bool weak_bisim_gst(const SymbolicGst& g1, const SymbolicGst& g2);

// Step-for-step comparison makes sense only when every transition is a
// single point; dense stretches have no notion of one step.  Throws
// std::invalid_argument on trees with a dense edge.
bool strong_bisim_discrete(const SymbolicGst& g1, const SymbolicGst& g2);

}  // namespace gstlab

#endif
