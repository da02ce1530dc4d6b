#ifndef GSTLAB_GST_HPP
#define GSTLAB_GST_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gstlab/exec_word.hpp"

namespace gstlab {

// Finite symbolic presentation of a tree whose branches may be continuous.
// An edge carries one segment: a Point edge is an ordinary discrete step,
// a Dense edge stands for a half-open continuum of nodes (no first node,
// a last one) all carrying the edge's label.
//
// A Dense edge may host attachments.  An attachment names a child pattern
// and means: at every point of a dense, co-dense subset of the host edge's
// interior, a copy of the child branches off.  The child's root is the
// attachment point itself, so the child's root carries the host label and
// only the child's edges add new nodes.  Distinct attachments of one edge
// occupy disjoint dense subsets.

struct SymbolicGst;

struct Attachment {
  std::shared_ptr<const SymbolicGst> child;  // root = the attachment point
};

struct GstEdge {
  std::string id;
  std::string source;
  std::string target;
  Segment segment;

  bool operator==(const GstEdge&) const = default;
};

struct SymbolicGst {
  std::string name;
  std::vector<std::string> vertices;  // declaration order, root first
  std::string root;
  std::vector<GstEdge> edges;  // declaration order
  std::map<std::string, std::vector<Attachment>> attachments;  // host edge id -> children
  std::vector<Label> labels;  // declared label set

  const GstEdge* edge_by_id(const std::string& id) const;
  std::vector<const GstEdge*> outgoing(const std::string& vertex) const;
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
};

// Tree shape (every non-root vertex has exactly one incoming edge, all
// vertices reachable from the root), attachments only on Dense edges,
// label and id well-formedness, attachment children recursively valid.
ValidationReport validate(const SymbolicGst& g);

// Field-by-field equality, following attachment children by value rather
// than by pointer.  Names participate; use a bisimulation check instead
// when only behaviour matters.
bool same_structure(const SymbolicGst& a, const SymbolicGst& b);

// One node of the finite quotient of a symbolic tree by "same position in
// the pattern".  A vertex is its own class; all non-attachment interior
// points of a Dense edge form one class; all attachment points of one
// attachment form one class.  Classes of an attachment child live under a
// path of (host edge id, attachment index) descents; the child's root is
// identified with the attachment-point class and contributes no extra one.
struct CutClass {
  enum class Kind { Vertex, Interior, AttachPoint };
  std::vector<std::pair<std::string, int>> path;  // attachment descents from top level
  Kind kind = Kind::Vertex;
  std::string id;        // vertex id, or edge id for Interior/AttachPoint
  int attach_index = -1; // only for AttachPoint

  std::string str() const;  // "v:r", "i:e1", "a:e1:0", "e1:0/v:u"
  auto operator<=>(const CutClass&) const = default;
};

CutClass vertex_class(std::string vertex);
CutClass interior_class(std::string edge);
CutClass attach_class(std::string edge, int index);

// All cut classes, in a fixed order: local vertices first (declaration
// order), then per edge its interior class, attachment-point classes, and
// the recursively collected classes of each attachment child.
std::vector<CutClass> cut_classes(const SymbolicGst& g);

// Canonical word of the trajectory from a node of c1 down to a node of c2
// along the structural path between the two classes, absent when no
// representative of c2 lies strictly below a representative of c1.
// Same-class queries on Interior/AttachPoint classes yield the edge's dense
// word (two distinct representatives always exist); a vertex class has a
// single representative, so the same-vertex query is absent.
std::optional<ExecWord> exec_between(const SymbolicGst& g, const CutClass& c1,
                                     const CutClass& c2);

// The symbolic tree rooted at a representative of c.  Cutting at an
// Interior class keeps the remaining stretch of the host edge together with
// all its attachments; cutting at an AttachPoint class additionally grafts
// the attachment child's edges onto the new root.
SymbolicGst sub_gst(const SymbolicGst& g, const CutClass& c);

// Edge-labeled discrete tree and its embedding as a Point-only symbolic GST.
struct DiscreteTree {
  std::string name;
  std::vector<std::string> vertices;
  std::string root;
  struct Edge { std::string id, source, target; Label label; };
  std::vector<Edge> edges;
};

SymbolicGst from_discrete_st(const DiscreteTree& t);

}  // namespace gstlab

#endif
