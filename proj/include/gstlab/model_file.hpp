#ifndef GSTLAB_MODEL_FILE_HPP
#define GSTLAB_MODEL_FILE_HPP

#include <stdexcept>
#include <string>
#include <variant>

#include "gstlab/gst.hpp"
#include "gstlab/kripke.hpp"

namespace gstlab {

// Text format for the two model kinds.  A file holds one model:
//
//   gst unit {
//     labels a, b;
//     root r;
//     edge e1: r -> t [dense a];
//     attach e1 {
//       edge f1: @ -> u [point b];
//     }
//   }
//
//   kripke m {
//     labels a;
//     props p;
//     state s0 init;
//     state s1;
//     prop p: s0, s1;
//     trans s0 -> s1 [D a];
//   }
//
// `#` starts a comment running to end of line.  Vertices are implied by the
// root declaration and edge endpoints, in declaration order.  Inside an
// attach block `@` names the attachment point; it parses as a child vertex
// called "root", so that name is reserved there.  Labels must be declared
// before the first edge or transition that uses them; structural rules
// beyond that (tree shape, dense hosts for attachments) are validate()'s
// job, not the parser's.

struct ModelError : std::runtime_error {
  ModelError(int line, const std::string& message)
      : std::runtime_error(message), line(line) {}
  int line;  // 1-based source line the problem was detected on
};

using ModelFile = std::variant<SymbolicGst, KripkeStructure>;

ModelFile parse_model(const std::string& text);

// Canonical layout: two-space indent, labels then root/states, then edges
// or transitions in declaration order, attach blocks after the edges they
// extend.  parse_model(format_model(m)) reproduces any parsed m exactly.
std::string format_model(const ModelFile& m);

std::string format_gst(const SymbolicGst& g);
std::string format_kripke(const KripkeStructure& k);

}  // namespace gstlab

#endif
