#ifndef GSTLAB_GENERATORS_HPP
#define GSTLAB_GENERATORS_HPP

#include <string>

#include "gstlab/gst.hpp"
#include "gstlab/lazy.hpp"

namespace gstlab {

// The one-edge continuum tree: a single dense stretch of a from the root.
SymbolicGst unit_interval_gst();

// Same behavior with the stretch written as two consecutive dense a edges.
SymbolicGst unit_interval_split_gst();

// Dense a stretch with a point-b branch attached along its interior.
SymbolicGst dense_attachment_gst();

// Behaviorally the same tree, independently specified with two copies of
// the branch occupying disjoint attachment slots.
SymbolicGst dense_attachment_pair_gst();

// Two roots that satisfy the same finite-depth formulas yet head different
// components: u fans out to an a-chain of every finite length, v offers all
// of u's chains plus one endless a-chain.  A b exit to the terminal state is
// available from every chain state, which is what keeps the two roots in the
// same depth-k class for every k.  u's component carries the built-in rank
// (remaining chain length) that certifies it well-founded; v's endless chain
// lies outside the rank's domain.  The designated pair is (u, v).
LazyKripke gen_fig3();

// Lazy class quotient of a tree with infinitely many branch points piling up
// toward a limit: below the root region R sit interleaving regions I:k and
// branch vertices A:k, where larger k lies deeper, so the index of a branch
// vertex bounds how many descents remain.  The depth-j class of A:k keeps
// refining as j grows, which image_finite_bounded detects from R.
LazyKripke gen_gx();

// Built-in structures by name: "fig3", "gx", "unit" and "denseattach" (the
// latter two wrap the finite class structures of the trees above).  Unknown
// names throw std::invalid_argument.
LazyKripke generator(const std::string& name);

}  // namespace gstlab

#endif
