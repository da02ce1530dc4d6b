#ifndef GSTLAB_SURROGATE_HPP
#define GSTLAB_SURROGATE_HPP

#include "gstlab/gst.hpp"
#include "gstlab/kripke.hpp"

namespace gstlab {

// Kripke structure over the cut classes of g.  States are the classes in
// cut_classes order (root class first, which becomes the initial state) and
// there is a transition c1 -w-> c2 for every word w labelling some execution
// from a node of c1 to a node of c2.  Structural words come from
// exec_between; compositions through an intermediate class are added by a
// concatenation closure, which terminates because non-loop transitions move
// strictly down the tree and dense self-loop words absorb into their
// neighbours.
KripkeStructure build_surrogate(const SymbolicGst& g);

// Finite approximation of the same quotient built from concrete geometry,
// with no use of exec_between: the tree is expanded by sampling
// samples_per_region nodes from every class (interior and attachment-point
// samples interleave along their edge; every attachment instance is
// expanded recursively).  Words between two sampled nodes fall out of the
// expansion itself, as the normalized chain of interval pieces between
// them.  Each transition found between two samples is then attached to
// every state pair drawn from the same two classes, so the result only
// fattens the class quotient and minimizes to the same structure.  Word
// collection internally uses at least two samples per class; one sample
// would miss the words that need a second node of the same class, such as
// dense self-loops and hops into a sibling copy of an attachment.
KripkeStructure sampled_surrogate(const SymbolicGst& g, int samples_per_region);

}  // namespace gstlab

#endif
