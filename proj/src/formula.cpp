#include "gstlab/formula.hpp"

#include <algorithm>

namespace gstlab {

FormulaPtr truth() {
  static const FormulaPtr t = std::make_shared<Formula>();
  return t;
}

FormulaPtr falsity() { return neg(truth()); }

FormulaPtr prop(std::string name) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::Prop;
  f->prop = std::move(name);
  return f;
}

FormulaPtr neg(FormulaPtr sub) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::Not;
  f->left = std::move(sub);
  return f;
}

FormulaPtr conj(FormulaPtr a, FormulaPtr b) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::And;
  f->left = std::move(a);
  f->right = std::move(b);
  return f;
}

FormulaPtr disj(FormulaPtr a, FormulaPtr b) {
  return neg(conj(neg(std::move(a)), neg(std::move(b))));
}

FormulaPtr implies(FormulaPtr a, FormulaPtr b) {
  return disj(neg(std::move(a)), std::move(b));
}

FormulaPtr diamond(ExecWord w, FormulaPtr sub) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::Diamond;
  f->word = std::move(w);
  f->left = std::move(sub);
  return f;
}

FormulaPtr box(ExecWord w, FormulaPtr sub) {
  return neg(diamond(std::move(w), neg(std::move(sub))));
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case Formula::Kind::True: return true;
    case Formula::Kind::Prop: return a->prop == b->prop;
    case Formula::Kind::Not: return equal(a->left, b->left);
    case Formula::Kind::And: return equal(a->left, b->left) && equal(a->right, b->right);
    case Formula::Kind::Diamond:
      return *a->word == *b->word && equal(a->left, b->left);
  }
  return false;
}

int modal_depth(const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::True:
    case Formula::Kind::Prop: return 0;
    case Formula::Kind::Not: return modal_depth(f->left);
    case Formula::Kind::And: return std::max(modal_depth(f->left), modal_depth(f->right));
    case Formula::Kind::Diamond: return 1 + modal_depth(f->left);
  }
  return 0;
}

namespace {

bool ident_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
         c == '_' || c == '.';
}

struct FormulaParser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(pos, msg); }

  bool try_eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  bool try_eat_arrow() {
    skip_ws();
    if (pos + 1 < text.size() && text[pos] == '-' && text[pos + 1] == '>') {
      pos += 2;
      return true;
    }
    return false;
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && ident_char(text[pos])) ++pos;
    if (pos == start) fail("expected a formula");
    return std::string(text.substr(start, pos - start));
  }

  ExecWord bracketed_word(char close) {
    std::size_t start = pos;
    std::size_t end = text.find(close, pos);
    if (end == std::string_view::npos) fail(std::string("missing '") + close + "'");
    std::string_view inner = text.substr(start, end - start);
    try {
      ExecWord w = parse_word(inner);
      pos = end + 1;
      return w;
    } catch (const ParseError& e) {
      throw ParseError(start + e.pos, e.msg);
    }
  }

  FormulaPtr parse_implies() {
    FormulaPtr left = parse_or();
    if (try_eat_arrow()) return implies(std::move(left), parse_implies());
    return left;
  }

  FormulaPtr parse_or() {
    FormulaPtr f = parse_and();
    while (try_eat('|')) f = disj(std::move(f), parse_and());
    return f;
  }

  FormulaPtr parse_and() {
    FormulaPtr f = parse_unary();
    while (true) {
      skip_ws();
      // '&' only; "->" starts with '-' so no lookahead clash
      if (!try_eat('&')) return f;
      f = conj(std::move(f), parse_unary());
    }
  }

  FormulaPtr parse_unary() {
    if (try_eat('~')) return neg(parse_unary());
    if (try_eat('<')) {
      ExecWord w = bracketed_word('>');
      return diamond(std::move(w), parse_unary());
    }
    if (try_eat('[')) {
      ExecWord w = bracketed_word(']');
      return box(std::move(w), parse_unary());
    }
    if (try_eat('(')) {
      FormulaPtr f = parse_implies();
      if (!try_eat(')')) fail("expected ')'");
      return f;
    }
    if (try_eat('@')) {
      std::string name = ident();
      if (!valid_label_name(name)) fail("malformed variable '" + name + "'");
      return prop(std::move(name));
    }
    std::string name = ident();
    if (name == "true") return truth();
    if (name == "false") return falsity();
    fail("expected a formula");
  }

  FormulaPtr run() {
    FormulaPtr f = parse_implies();
    skip_ws();
    if (pos != text.size()) fail("unexpected trailing input");
    return f;
  }
};

std::string fmt(const Formula& f);

std::string fmt_tight(const Formula& f) {
  if (f.kind == Formula::Kind::And) return "(" + fmt(f) + ")";
  return fmt(f);
}

std::string fmt(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::True: return "true";
    case Formula::Kind::Prop: return "@" + f.prop;
    case Formula::Kind::Not: return "~" + fmt_tight(*f.left);
    case Formula::Kind::Diamond:
      return "<" + format_word(*f.word) + "> " + fmt_tight(*f.left);
    case Formula::Kind::And:
      return fmt(*f.left) + " & " + fmt_tight(*f.right);
  }
  return "";
}

}  // namespace

FormulaPtr parse_formula(std::string_view text) {
  FormulaParser p{text};
  return p.run();
}

std::string format_formula(const FormulaPtr& f) { return fmt(*f); }

FormulaPtr to_hml(const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::True: return truth();
    case Formula::Kind::Prop: return prop(f->prop);
    case Formula::Kind::Not: return neg(to_hml(f->left));
    case Formula::Kind::And: return conj(to_hml(f->left), to_hml(f->right));
    case Formula::Kind::Diamond: return diamond(*f->word, to_hml(f->left));
  }
  return truth();
}

}  // namespace gstlab
