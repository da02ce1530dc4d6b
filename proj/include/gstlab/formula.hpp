#ifndef GSTLAB_FORMULA_HPP
#define GSTLAB_FORMULA_HPP

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "gstlab/exec_word.hpp"

namespace gstlab {

// Modal formulas whose diamonds are indexed by execution words.  Over a
// word-labelled Kripke structure this is ordinary Hennessy-Milner logic
// with words as the action alphabet; over a tree, <w>phi asks for an
// execution spelling w whose endpoint satisfies phi.
//
// Core connectives are True, propositions, negation, conjunction and the
// diamond.  The parser also accepts false, |, -> and the box [w]phi, all of
// which desugar into the core, so two formulas compare equal exactly when
// their cores coincide.
struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  enum class Kind { True, Prop, Not, And, Diamond };
  Kind kind = Kind::True;
  std::string prop;              // Prop
  FormulaPtr left;               // Not, Diamond, And
  FormulaPtr right;              // And
  std::optional<ExecWord> word;  // Diamond
};

FormulaPtr truth();
FormulaPtr falsity();
FormulaPtr prop(std::string name);
FormulaPtr neg(FormulaPtr f);
FormulaPtr conj(FormulaPtr a, FormulaPtr b);
FormulaPtr disj(FormulaPtr a, FormulaPtr b);
FormulaPtr implies(FormulaPtr a, FormulaPtr b);
FormulaPtr diamond(ExecWord w, FormulaPtr f);
FormulaPtr box(ExecWord w, FormulaPtr f);

bool equal(const FormulaPtr& a, const FormulaPtr& b);
int modal_depth(const FormulaPtr& f);

// Concrete syntax: atoms are `true`, `false`, variables `@name` and
// parenthesized formulas; `~`, `<word>` and `[word]` bind tightest, then
// `&`, then `|`, then right-associative `->`.  Words between the brackets
// use the execution word syntax.
FormulaPtr parse_formula(std::string_view text);
std::string format_formula(const FormulaPtr& f);

// Reading of a tree-level formula over the quotient structure.  The
// modalities are already canonical words on both sides, so the translation
// is a structural identity; it exists so call sites can mark the change of
// interpretation.
FormulaPtr to_hml(const FormulaPtr& f);

}  // namespace gstlab

#endif
