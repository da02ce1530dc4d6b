#ifndef GSTLAB_DOT_HPP
#define GSTLAB_DOT_HPP

#include <string>
#include <vector>

#include "gstlab/kripke.hpp"

namespace gstlab {

// Graphviz digraph with one node per state and transition words as edge
// labels.  The initial state gets a doubled border.  When `block_of` is
// given (one entry per state, as produced by minimize), each node label
// carries its block id on a second line.  Output is deterministic: nodes in
// state order, edges in transition order.
std::string to_dot(const KripkeStructure& k);
std::string to_dot(const KripkeStructure& k, const std::vector<int>& block_of);

}  // namespace gstlab

#endif
