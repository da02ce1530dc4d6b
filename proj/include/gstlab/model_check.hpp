#ifndef GSTLAB_MODEL_CHECK_HPP
#define GSTLAB_MODEL_CHECK_HPP

#include <vector>

#include "gstlab/formula.hpp"
#include "gstlab/gst.hpp"
#include "gstlab/kripke.hpp"
#include "gstlab/surrogate.hpp"

namespace gstlab {

struct CheckResult {
  bool holds = false;
  std::vector<std::string> warnings;
};

// Standard semantics over a word-labelled Kripke structure.  Warnings flag
// propositions the valuation never mentions and diamond words labelling no
// transition anywhere in the structure; both evaluate as false/empty rather
// than erroring, since such formulas are still well-formed.
CheckResult mc_kripke(const KripkeStructure& k, int state, const FormulaPtr& f);

// Truth of f at the root of g.  mc_gst asks the class quotient built by
// build_surrogate; mc_gst_direct instead asks the sampled expansion, which
// never consults exec_between, so agreement between the two exercises both
// constructions.  samples is the per-class sampling density, at least 2 so
// same-class and sibling-copy words are present.
CheckResult mc_gst(const SymbolicGst& g, const FormulaPtr& f);
CheckResult mc_gst_direct(const SymbolicGst& g, const FormulaPtr& f, int samples);

// chi[d][s] family: state t satisfies the depth-d formula for state s
// exactly when s and t cannot be told apart by d rounds of transition
// matching.  With d at least the state count, satisfaction pins down the
// bisimulation class.  Subformulas are shared, so the result is compact as
// a dag even though printing it would not be.
std::vector<FormulaPtr> characteristic_formulas(const KripkeStructure& k, int depth);
FormulaPtr characteristic_formula(const KripkeStructure& k, int state, int depth);

}  // namespace gstlab

#endif
