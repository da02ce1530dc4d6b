#include "gstlab/gst.hpp"

#include <algorithm>
#include <set>

namespace gstlab {

const GstEdge* SymbolicGst::edge_by_id(const std::string& id) const {
  for (const GstEdge& e : edges)
    if (e.id == id) return &e;
  return nullptr;
}

std::vector<const GstEdge*> SymbolicGst::outgoing(const std::string& vertex) const {
  std::vector<const GstEdge*> out;
  for (const GstEdge& e : edges)
    if (e.source == vertex) out.push_back(&e);
  return out;
}

namespace {

const GstEdge* incoming_edge(const SymbolicGst& g, const std::string& vertex) {
  for (const GstEdge& e : g.edges)
    if (e.target == vertex) return &e;
  return nullptr;
}

const std::vector<Attachment>* attachments_of(const SymbolicGst& g, const std::string& edge_id) {
  auto it = g.attachments.find(edge_id);
  if (it == g.attachments.end() || it->second.empty()) return nullptr;
  return &it->second;
}

const SymbolicGst* descend(const SymbolicGst* g,
                           const std::vector<std::pair<std::string, int>>& path) {
  for (const auto& [edge_id, index] : path) {
    const std::vector<Attachment>* atts = attachments_of(*g, edge_id);
    if (!atts || index < 0 || index >= static_cast<int>(atts->size())) return nullptr;
    g = (*atts)[index].child.get();
    if (!g) return nullptr;
  }
  return g;
}

void validate_into(const SymbolicGst& g, const std::string& where,
                   std::vector<std::string>& violations) {
  auto bad = [&](const std::string& what) { violations.push_back(where + what); };

  std::set<std::string> vertex_set;
  for (const std::string& v : g.vertices) {
    if (!valid_label_name(v)) bad("malformed vertex id '" + v + "'");
    if (!vertex_set.insert(v).second) bad("duplicate vertex id '" + v + "'");
  }
  if (g.root.empty() || !vertex_set.count(g.root)) {
    bad("root '" + g.root + "' is not a declared vertex");
    return;
  }

  std::set<std::string> label_set;
  for (const Label& l : g.labels) {
    if (!valid_label_name(l.name)) bad("malformed label '" + l.name + "'");
    label_set.insert(l.name);
  }

  std::set<std::string> edge_ids;
  std::map<std::string, int> incoming_count;
  for (const GstEdge& e : g.edges) {
    if (!edge_ids.insert(e.id).second) bad("duplicate edge id '" + e.id + "'");
    if (!vertex_set.count(e.source)) bad("edge " + e.id + " has undeclared source '" + e.source + "'");
    if (!vertex_set.count(e.target)) bad("edge " + e.id + " has undeclared target '" + e.target + "'");
    if (!label_set.count(e.segment.label.name))
      bad("edge " + e.id + " uses undeclared label '" + e.segment.label.name + "'");
    incoming_count[e.target] += 1;
  }

  // Tree shape: the root has no incoming edge, everyone else exactly one,
  // and every vertex is reachable from the root.  A cycle in the edge list
  // shows up as an unreachable vertex or a double incoming edge.
  bool shape_ok = true;
  if (incoming_count.count(g.root)) {
    bad("not a tree: root '" + g.root + "' has an incoming edge");
    shape_ok = false;
  }
  for (const std::string& v : g.vertices) {
    if (v == g.root) continue;
    int n = incoming_count.count(v) ? incoming_count.at(v) : 0;
    if (n != 1) {
      bad("not a tree: vertex '" + v + "' has " + std::to_string(n) + " incoming edges");
      shape_ok = false;
    }
  }
  if (shape_ok) {
    std::set<std::string> seen{g.root};
    std::vector<std::string> work{g.root};
    while (!work.empty()) {
      std::string v = work.back();
      work.pop_back();
      for (const GstEdge* e : g.outgoing(v))
        if (vertex_set.count(e->target) && seen.insert(e->target).second) work.push_back(e->target);
    }
    for (const std::string& v : g.vertices)
      if (!seen.count(v)) bad("not a tree: vertex '" + v + "' unreachable from root");
  }

  for (const auto& [edge_id, atts] : g.attachments) {
    const GstEdge* host = g.edge_by_id(edge_id);
    if (!host) {
      bad("attachment on unknown edge '" + edge_id + "'");
      continue;
    }
    if (host->segment.shape != Shape::Dense) {
      bad("attachment on Point edge '" + edge_id + "' invalid");
      continue;
    }
    for (std::size_t i = 0; i < atts.size(); ++i) {
      if (!atts[i].child) {
        bad("attachment " + edge_id + "#" + std::to_string(i) + " has no child");
        continue;
      }
      validate_into(*atts[i].child, where + edge_id + ":" + std::to_string(i) + "/", violations);
    }
  }
}

}  // namespace

ValidationReport validate(const SymbolicGst& g) {
  ValidationReport report;
  validate_into(g, "", report.violations);
  report.ok = report.violations.empty();
  return report;
}

bool same_structure(const SymbolicGst& a, const SymbolicGst& b) {
  if (a.name != b.name || a.vertices != b.vertices || a.root != b.root ||
      a.edges != b.edges || a.labels != b.labels) {
    return false;
  }
  if (a.attachments.size() != b.attachments.size()) return false;
  for (auto ita = a.attachments.begin(), itb = b.attachments.begin();
       ita != a.attachments.end(); ++ita, ++itb) {
    if (ita->first != itb->first) return false;
    if (ita->second.size() != itb->second.size()) return false;
    for (std::size_t i = 0; i < ita->second.size(); ++i) {
      if (!same_structure(*ita->second[i].child, *itb->second[i].child)) return false;
    }
  }
  return true;
}

std::string CutClass::str() const {
  std::string out;
  for (const auto& [edge_id, index] : path) out += edge_id + ":" + std::to_string(index) + "/";
  switch (kind) {
    case Kind::Vertex: out += "v:" + id; break;
    case Kind::Interior: out += "i:" + id; break;
    case Kind::AttachPoint: out += "a:" + id + ":" + std::to_string(attach_index); break;
  }
  return out;
}

CutClass vertex_class(std::string vertex) {
  return CutClass{{}, CutClass::Kind::Vertex, std::move(vertex), -1};
}
CutClass interior_class(std::string edge) {
  return CutClass{{}, CutClass::Kind::Interior, std::move(edge), -1};
}
CutClass attach_class(std::string edge, int index) {
  return CutClass{{}, CutClass::Kind::AttachPoint, std::move(edge), index};
}

namespace {

void collect_classes(const SymbolicGst& g, bool is_attachment_child,
                     std::vector<std::pair<std::string, int>>& prefix,
                     std::vector<CutClass>& out) {
  out.push_back(CutClass{prefix, CutClass::Kind::Vertex, g.root, -1});
  if (is_attachment_child) out.pop_back();  // the child root is the attachment point
  for (const std::string& v : g.vertices)
    if (v != g.root) out.push_back(CutClass{prefix, CutClass::Kind::Vertex, v, -1});
  for (const GstEdge& e : g.edges) {
    if (e.segment.shape != Shape::Dense) continue;
    out.push_back(CutClass{prefix, CutClass::Kind::Interior, e.id, -1});
    const std::vector<Attachment>* atts = attachments_of(g, e.id);
    if (!atts) continue;
    for (int i = 0; i < static_cast<int>(atts->size()); ++i)
      out.push_back(CutClass{prefix, CutClass::Kind::AttachPoint, e.id, i});
    for (int i = 0; i < static_cast<int>(atts->size()); ++i) {
      prefix.emplace_back(e.id, i);
      collect_classes(*(*atts)[i].child, true, prefix, out);
      prefix.pop_back();
    }
  }
}

// One step of the descent from the top-level root to a target class: the
// edge being crossed, the word piece it contributes, and the class landed
// on.  Crossing a dense edge partially or fully contributes the same
// single dense segment, which is what makes words representative-choice
// independent.
struct ChainStep {
  std::vector<std::pair<std::string, int>> edge_path;
  std::string edge_id;
  Segment piece;
  CutClass landing;
};

bool append_vertex_walk(const SymbolicGst& ctx,
                        const std::vector<std::pair<std::string, int>>& prefix,
                        const std::string& vertex, std::vector<ChainStep>& chain) {
  std::vector<const GstEdge*> up;
  std::string cur = vertex;
  while (cur != ctx.root) {
    const GstEdge* in = incoming_edge(ctx, cur);
    if (!in) return false;
    up.push_back(in);
    cur = in->source;
  }
  for (auto it = up.rbegin(); it != up.rend(); ++it) {
    const GstEdge* e = *it;
    chain.push_back(ChainStep{prefix, e->id, e->segment,
                              CutClass{prefix, CutClass::Kind::Vertex, e->target, -1}});
  }
  return true;
}

std::optional<std::vector<ChainStep>> build_chain(const SymbolicGst& g, const CutClass& c) {
  std::vector<ChainStep> chain;
  const SymbolicGst* ctx = &g;
  std::vector<std::pair<std::string, int>> prefix;
  for (const auto& [edge_id, index] : c.path) {
    const GstEdge* e = ctx->edge_by_id(edge_id);
    if (!e || e->segment.shape != Shape::Dense) return std::nullopt;
    const std::vector<Attachment>* atts = attachments_of(*ctx, edge_id);
    if (!atts || index < 0 || index >= static_cast<int>(atts->size())) return std::nullopt;
    if (!append_vertex_walk(*ctx, prefix, e->source, chain)) return std::nullopt;
    chain.push_back(ChainStep{prefix, e->id, Segment{Shape::Dense, e->segment.label},
                              CutClass{prefix, CutClass::Kind::AttachPoint, e->id, index}});
    prefix.emplace_back(edge_id, index);
    ctx = (*atts)[index].child.get();
    if (!ctx) return std::nullopt;
  }
  if (c.kind == CutClass::Kind::Vertex) {
    if (!c.path.empty() && c.id == ctx->root) return std::nullopt;  // that class is the attach point
    if (!append_vertex_walk(*ctx, prefix, c.id, chain)) return std::nullopt;
    return chain;
  }
  const GstEdge* e = ctx->edge_by_id(c.id);
  if (!e || e->segment.shape != Shape::Dense) return std::nullopt;
  if (c.kind == CutClass::Kind::AttachPoint) {
    const std::vector<Attachment>* atts = attachments_of(*ctx, c.id);
    if (!atts || c.attach_index < 0 || c.attach_index >= static_cast<int>(atts->size()))
      return std::nullopt;
  }
  if (!append_vertex_walk(*ctx, prefix, e->source, chain)) return std::nullopt;
  chain.push_back(ChainStep{prefix, e->id, Segment{Shape::Dense, e->segment.label}, c});
  return chain;
}

std::optional<ExecWord> word_of_suffix(const std::vector<ChainStep>& chain, std::size_t from) {
  if (from >= chain.size()) return std::nullopt;
  std::vector<Segment> pieces;
  for (std::size_t i = from; i < chain.size(); ++i) pieces.push_back(chain[i].piece);
  return ExecWord::normalize(pieces);
}

}  // namespace

std::vector<CutClass> cut_classes(const SymbolicGst& g) {
  std::vector<CutClass> out;
  std::vector<std::pair<std::string, int>> prefix;
  collect_classes(g, false, prefix, out);
  return out;
}

std::optional<ExecWord> exec_between(const SymbolicGst& g, const CutClass& c1,
                                     const CutClass& c2) {
  // Interior-kind classes of one edge are dense in each other, so any two of
  // them (the same one included) are joined by a stretch of the edge alone.
  if (c1.kind != CutClass::Kind::Vertex && c2.kind != CutClass::Kind::Vertex &&
      c1.path == c2.path && c1.id == c2.id) {
    const SymbolicGst* ctx = descend(&g, c1.path);
    if (!ctx) return std::nullopt;
    const GstEdge* e = ctx->edge_by_id(c1.id);
    if (!e || e->segment.shape != Shape::Dense) return std::nullopt;
    return ExecWord::normalize({Segment{Shape::Dense, e->segment.label}});
  }
  if (c1 == c2) return std::nullopt;  // a vertex class has a single node

  auto chain_opt = build_chain(g, c2);
  if (!chain_opt) return std::nullopt;
  const std::vector<ChainStep>& chain = *chain_opt;

  // Start below an exact landing of the descent: the remaining pieces spell
  // the word.  The top-level root is the implicit landing before step 0.
  if (c1.kind == CutClass::Kind::Vertex && c1.path.empty() && c1.id == g.root)
    return word_of_suffix(chain, 0);
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    if (chain[i].landing == c1) return word_of_suffix(chain, i + 1);

  // Start inside a dense edge the descent crosses: the partial stretch from
  // an interior node to the crossing's end is the same dense segment, so the
  // suffix starting at the crossing step is unchanged.
  if (c1.kind != CutClass::Kind::Vertex) {
    for (std::size_t i = 0; i < chain.size(); ++i)
      if (chain[i].edge_path == c1.path && chain[i].edge_id == c1.id)
        return word_of_suffix(chain, i);
  }
  return std::nullopt;
}

SymbolicGst sub_gst(const SymbolicGst& g, const CutClass& c) {
  const SymbolicGst* ctx = descend(&g, c.path);
  if (!ctx) throw std::runtime_error("sub_gst: invalid cut class " + c.str());

  SymbolicGst out;
  out.name = g.name + "@" + c.str();
  out.labels = g.labels;

  auto copy_subtree = [&](const std::string& top) {
    std::vector<std::string> work{top};
    while (!work.empty()) {
      std::string v = work.back();
      work.pop_back();
      for (const GstEdge* e : ctx->outgoing(v)) {
        out.vertices.push_back(e->target);
        out.edges.push_back(*e);
        if (const std::vector<Attachment>* atts = attachments_of(*ctx, e->id))
          out.attachments[e->id] = *atts;
        work.push_back(e->target);
      }
    }
  };

  if (c.kind == CutClass::Kind::Vertex) {
    out.root = c.id;
    out.vertices.push_back(c.id);
    copy_subtree(c.id);
    return out;
  }

  const GstEdge* e = ctx->edge_by_id(c.id);
  if (!e || e->segment.shape != Shape::Dense)
    throw std::runtime_error("sub_gst: invalid cut class " + c.str());

  // The tree below an interior node: the rest of the host edge (attachments
  // are dense in every remaining stretch, so they are kept) plus everything
  // below the host target.
  std::string root_id = "cut";
  while (std::find(g.vertices.begin(), g.vertices.end(), root_id) != g.vertices.end() ||
         std::find(ctx->vertices.begin(), ctx->vertices.end(), root_id) != ctx->vertices.end())
    root_id += "_";
  out.root = root_id;
  out.vertices.push_back(root_id);
  out.vertices.push_back(e->target);
  out.edges.push_back(GstEdge{e->id, root_id, e->target, e->segment});
  if (const std::vector<Attachment>* atts = attachments_of(*ctx, e->id))
    out.attachments[e->id] = *atts;
  copy_subtree(e->target);

  // Cutting at an attachment point also hangs that attachment's child off
  // the new root, since the point roots its own copy of the child.
  if (c.kind == CutClass::Kind::AttachPoint) {
    const std::vector<Attachment>* atts = attachments_of(*ctx, c.id);
    if (!atts || c.attach_index < 0 || c.attach_index >= static_cast<int>(atts->size()))
      throw std::runtime_error("sub_gst: invalid cut class " + c.str());
    const SymbolicGst& child = *(*atts)[c.attach_index].child;
    std::string pfx = "x" + std::to_string(c.attach_index) + ".";
    for (const std::string& v : child.vertices)
      if (v != child.root) out.vertices.push_back(pfx + v);
    for (const GstEdge& f : child.edges) {
      std::string src = (f.source == child.root) ? root_id : pfx + f.source;
      out.edges.push_back(GstEdge{pfx + f.id, src, pfx + f.target, f.segment});
      if (const std::vector<Attachment>* child_atts = attachments_of(child, f.id))
        out.attachments[pfx + f.id] = *child_atts;
    }
  }
  return out;
}

SymbolicGst from_discrete_st(const DiscreteTree& t) {
  SymbolicGst g;
  g.name = t.name;
  g.vertices = t.vertices;
  g.root = t.root;
  std::set<std::string> labels;
  for (const DiscreteTree::Edge& e : t.edges) {
    g.edges.push_back(GstEdge{e.id, e.source, e.target, Segment{Shape::Point, e.label}});
    labels.insert(e.label.name);
  }
  for (const std::string& l : labels) g.labels.push_back(Label{l});
  return g;
}

}  // namespace gstlab
