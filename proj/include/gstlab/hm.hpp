#ifndef GSTLAB_HM_HPP
#define GSTLAB_HM_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gstlab/bisim.hpp"
#include "gstlab/gst.hpp"
#include "gstlab/kripke.hpp"
#include "gstlab/lazy.hpp"

namespace gstlab {

// Counterexample to the composite-transition schema: (src,w1,mid) and
// (mid,w2,dst) are transitions but (src, concat(w1,w2), dst) is not.
struct TransitivityBreak {
  int src = -1;
  int mid = -1;
  int dst = -1;
  ExecWord w1;
  ExecWord w2;
};

// Counterexample to the splitting schema: (src,word,dst) is a transition but
// no intermediate state carries the (left, right) split of its word.
struct DensityBreak {
  int src = -1;
  int dst = -1;
  ExecWord word;
  ExecWord left;
  ExecWord right;
};

struct SchemataReport {
  bool transitivity_ok = true;
  bool weak_density_ok = true;
  std::optional<TransitivityBreak> transitivity_break;
  std::optional<DensityBreak> density_break;
  bool ok() const { return transitivity_ok && weak_density_ok; }
};

// Checks the two frame properties every class-quotient structure built from a
// tree satisfies: composites of adjacent transitions exist, and every split
// of a transition word passes through some intermediate state.  The first
// failure of each kind is recorded.
SchemataReport schemata_check(const KripkeStructure& ks);

struct ImageFiniteReport {
  KripkeStructure witness;  // finite quotient, image-finite by inspection
  int blocks = 0;
};

// Every symbolic tree has a finite class quotient, so the verdict is always
// positive; the value of the operation is the witness it returns.
ImageFiniteReport image_finite(const SymbolicGst& g);

struct ImageFiniteBoundedReport {
  bool consistent = true;
  std::optional<ExecWord> witness;
  // For each word on the state's menu, the number of distinct depth-(j-1)
  // classes met by its successors, for j = 1..k.
  std::map<ExecWord, std::vector<int>> class_counts;
};

// Semi-decision on a possibly infinite structure: a word whose successor
// class count grows strictly all the way to depth k is evidence of an
// image-infinite state and becomes the witness (smallest such word).  A
// plateau anywhere reads as consistent; the verdict is relative to k.
// Family hints are sample-checked first; a violation throws
// std::invalid_argument("invalid collapse hint: ...").
ImageFiniteBoundedReport image_finite_bounded(const LazyKripke& lz,
                                              const std::string& state, int k);

struct VhhmReport {
  bool pass = true;
  int pairs = 0;
  std::vector<std::pair<std::string, std::string>> mismatches;
  std::vector<std::string> notes;
};

// Modal equivalence against bisimilarity over every state pair of the given
// structures (their disjoint union; names get an "s<i>." prefix when more
// than one structure is passed).  Finite structures always pass; the notes
// call out pairs whose depth-k agreement outruns their bisimilarity verdict,
// which can only happen when k is below the refinement fixpoint.
VhhmReport vhhm_check(const std::vector<KripkeStructure>& structures, int k);

// Certifies that no endless run of `word` transitions lives in the component
// rooted at `root`: every such transition between non-root states must
// strictly decrease the rank.  The root is exempt on the outgoing side so it
// may fan out to chains of every length, but a word transition back into the
// root would defeat the argument and fails the check.  The component is
// explored `bound` levels deep, families through their hints; a reached
// state without a rank throws std::invalid_argument.
bool rank_certificate_check(
    const LazyKripke& lz, const std::string& root,
    const std::function<std::optional<long long>(const std::string&)>& rank,
    const ExecWord& word, int bound);

// Walks `word` transitions from `start`, always stepping to a successor the
// rank function does not cover, and returns how many steps that sustains,
// up to `steps`.  Reaching `steps` witnesses a run the rank argument cannot
// bound.
int follow_unranked_chain(const LazyKripke& lz, const std::string& start,
                          const ExecWord& word, int steps);

}  // namespace gstlab

#endif
