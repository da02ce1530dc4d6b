#include "gstlab/model_check.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace gstlab {

namespace {

struct Evaluator {
  const KripkeStructure& k;
  std::set<ExecWord> alphabet;
  std::set<std::string> warnings;
  // Characteristic formulas share subterms heavily; keying the cache on the
  // node pointer keeps evaluation linear in dag size times state count.
  std::map<std::pair<const Formula*, int>, bool> cache;

  explicit Evaluator(const KripkeStructure& k_) : k(k_) {
    for (const Transition& t : k.transitions) alphabet.insert(t.word);
  }

  bool eval(const Formula* f, int state) {
    auto key = std::make_pair(f, state);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    bool value = false;
    switch (f->kind) {
      case Formula::Kind::True:
        value = true;
        break;
      case Formula::Kind::Prop: {
        auto it = k.valuation.find(f->prop);
        if (it == k.valuation.end()) {
          warnings.insert("unknown variable '@" + f->prop + "'");
          value = false;
        } else {
          value = it->second.count(state) > 0;
        }
        break;
      }
      case Formula::Kind::Not:
        value = !eval(f->left.get(), state);
        break;
      case Formula::Kind::And: {
        bool l = eval(f->left.get(), state);
        bool r = eval(f->right.get(), state);
        value = l && r;
        break;
      }
      case Formula::Kind::Diamond: {
        if (!alphabet.count(*f->word))
          warnings.insert("word '" + format_word(*f->word) + "' labels no transition");
        for (const auto& [w, dst] : k.post(state))
          if (w == *f->word && eval(f->left.get(), dst)) {
            value = true;
            break;
          }
        break;
      }
    }
    cache.emplace(key, value);
    return value;
  }
};

}  // namespace

CheckResult mc_kripke(const KripkeStructure& k, int state, const FormulaPtr& f) {
  if (state < 0 || state >= static_cast<int>(k.states.size()))
    throw std::invalid_argument("state index out of range");
  Evaluator ev(k);
  CheckResult result;
  result.holds = ev.eval(f.get(), state);
  result.warnings.assign(ev.warnings.begin(), ev.warnings.end());
  return result;
}

CheckResult mc_gst(const SymbolicGst& g, const FormulaPtr& f) {
  KripkeStructure k = build_surrogate(g);
  return mc_kripke(k, *k.initial, to_hml(f));
}

CheckResult mc_gst_direct(const SymbolicGst& g, const FormulaPtr& f, int samples) {
  if (samples < 2) throw std::invalid_argument("mc_gst_direct needs at least 2 samples");
  KripkeStructure k = sampled_surrogate(g, samples);
  return mc_kripke(k, *k.initial, f);
}

std::vector<FormulaPtr> characteristic_formulas(const KripkeStructure& k, int depth) {
  int n = static_cast<int>(k.states.size());
  std::vector<std::string> all_props;
  for (const auto& kv : k.valuation) all_props.push_back(kv.first);

  std::vector<FormulaPtr> base(n);
  for (int s = 0; s < n; ++s) {
    FormulaPtr f = truth();
    for (const std::string& p : all_props) {
      bool here = k.valuation.at(p).count(s) > 0;
      f = conj(std::move(f), here ? prop(p) : neg(prop(p)));
    }
    base[s] = f;
  }

  std::set<ExecWord> alphabet;
  for (const Transition& t : k.transitions) alphabet.insert(t.word);

  std::vector<FormulaPtr> chi = base;
  for (int d = 0; d < depth; ++d) {
    std::vector<FormulaPtr> next(n);
    for (int s = 0; s < n; ++s) {
      FormulaPtr f = base[s];
      for (const auto& [w, dst] : k.post(s)) f = conj(std::move(f), diamond(w, chi[dst]));
      for (const ExecWord& w : alphabet) {
        FormulaPtr any = falsity();
        for (const auto& [w2, dst] : k.post(s))
          if (w2 == w) any = disj(std::move(any), chi[dst]);
        f = conj(std::move(f), box(w, std::move(any)));
      }
      next[s] = f;
    }
    chi = std::move(next);
  }
  return chi;
}

FormulaPtr characteristic_formula(const KripkeStructure& k, int state, int depth) {
  if (state < 0 || state >= static_cast<int>(k.states.size()))
    throw std::invalid_argument("state index out of range");
  return characteristic_formulas(k, depth)[state];
}

}  // namespace gstlab
