#include "gstlab/lazy.hpp"

#include <algorithm>
#include <deque>
#include <memory>
#include <stdexcept>

namespace gstlab {

SuccessorGroup single_target(ExecWord w, std::string target) {
  return SuccessorGroup{std::move(w), std::move(target), std::nullopt};
}

SuccessorGroup indexed_family(ExecWord w, SuccessorFamily f) {
  return SuccessorGroup{std::move(w), std::nullopt, std::move(f)};
}

LazyKripke from_kripke(const KripkeStructure& ks) {
  auto copy = std::make_shared<KripkeStructure>(ks);
  auto index = std::make_shared<std::map<std::string, int>>();
  for (std::size_t i = 0; i < copy->states.size(); ++i)
    if (!index->emplace(copy->states[i], static_cast<int>(i)).second)
      throw std::invalid_argument("duplicate state name '" + copy->states[i] + "'");

  auto at = [copy, index](const std::string& s) {
    auto it = index->find(s);
    if (it == index->end()) throw std::invalid_argument("unknown state '" + s + "'");
    return it->second;
  };

  LazyKripke lz;
  lz.name = copy->name;
  if (copy->initial) lz.initial.push_back(copy->states[*copy->initial]);
  lz.successors = [copy, at](const std::string& s) {
    std::vector<SuccessorGroup> out;
    for (const auto& [w, dst] : copy->post(at(s)))
      out.push_back(single_target(w, copy->states[dst]));
    return out;
  };
  lz.props = [copy, at](const std::string& s) { return copy->props_of(at(s)); };
  lz.rank = [](const std::string&) { return std::optional<long long>{}; };
  return lz;
}

namespace {

// Members a width-bounded expansion takes from a family: hint representatives
// for the given depth first, then lowest indices, without duplicates.
std::vector<long long> family_members(const SuccessorFamily& fam, int hint_depth,
                                      int width) {
  std::vector<long long> chosen;
  auto take = [&](long long i) {
    if (static_cast<int>(chosen.size()) >= width) return;
    if (fam.count && i >= *fam.count) return;
    if (std::find(chosen.begin(), chosen.end(), i) == chosen.end())
      chosen.push_back(i);
  };
  if (fam.hint) {
    for (long long i : fam.hint(hint_depth)) take(i);
  } else if (!fam.count) {
    throw std::runtime_error("successor family without a collapse hint");
  }
  long long limit = fam.count ? *fam.count
                              : static_cast<long long>(width) + (fam.hint ? static_cast<long long>(fam.hint(hint_depth).size()) : 0);
  for (long long i = 0; i < limit && static_cast<int>(chosen.size()) < width; ++i)
    take(i);
  return chosen;
}

}  // namespace

KripkeStructure truncate(const LazyKripke& lz, int depth, int width) {
  if (depth < 0) throw std::invalid_argument("truncate needs depth >= 0");
  if (width < 1) throw std::invalid_argument("truncate needs width >= 1");

  KripkeStructure out;
  out.name = lz.name + ".trunc";
  std::map<std::string, int> index;
  std::set<std::string> props;
  std::set<std::string> labels;
  std::deque<std::pair<std::string, int>> frontier;

  auto visit = [&](const std::string& s, int level) {
    auto it = index.find(s);
    if (it != index.end()) return it->second;
    int id = out.add_state(s);
    index.emplace(s, id);
    for (const auto& p : lz.props(s)) {
      out.valuation[p].insert(id);
      props.insert(p);
    }
    frontier.emplace_back(s, level);
    return id;
  };

  for (const auto& s : lz.initial) visit(s, 0);
  if (!out.states.empty()) out.initial = 0;

  while (!frontier.empty()) {
    auto [s, level] = frontier.front();
    frontier.pop_front();
    if (level >= depth) continue;  // kept, not expanded
    int src = index.at(s);
    for (const auto& g : lz.successors(s)) {
      std::vector<std::string> targets;
      if (g.target) {
        targets.push_back(*g.target);
      } else {
        for (long long i : family_members(*g.family, depth - level, width))
          targets.push_back(g.family->member(i));
      }
      for (const auto& t : targets) {
        int dst = visit(t, level + 1);
        out.add_transition(src, g.word, dst);
        for (const auto& seg : g.word.segments()) labels.insert(seg.label.name);
      }
    }
  }

  out.declared_labels.assign(labels.begin(), labels.end());
  out.declared_props.assign(props.begin(), props.end());
  return out;
}

std::vector<std::string> StratifiedClassifier::bounded_targets(
    const SuccessorGroup& g, int depth) const {
  std::vector<std::string> out;
  if (g.target) {
    out.push_back(*g.target);
    return out;
  }
  const SuccessorFamily& fam = *g.family;
  if (fam.count) {
    for (long long i = 0; i < *fam.count; ++i) out.push_back(fam.member(i));
  } else {
    if (!fam.hint)
      throw std::runtime_error("unknown beyond depth " + std::to_string(depth) +
                               ": successor family has no collapse hint");
    for (long long i : fam.hint(depth)) out.push_back(fam.member(i));
  }
  return out;
}

int StratifiedClassifier::class_id(const std::string& state, int depth) {
  if (depth < 0) throw std::invalid_argument("class depth must be >= 0");
  if (static_cast<int>(memo_.size()) <= depth) {
    memo_.resize(depth + 1);
    interner_.resize(depth + 1);
  }
  if (auto it = memo_[depth].find(state); it != memo_[depth].end())
    return it->second;

  Signature sig;
  sig.first = lz_->props(state);
  if (depth > 0) {
    for (const auto& g : lz_->successors(state))
      for (const auto& t : bounded_targets(g, depth - 1))
        sig.second.emplace(g.word, class_id(t, depth - 1));
  }
  int next = static_cast<int>(interner_[depth].size());
  auto [it, inserted] = interner_[depth].try_emplace(std::move(sig), next);
  memo_[depth][state] = it->second;
  return it->second;
}

int stratified(const LazyKripke& lz, const std::string& s, const std::string& t,
               int k) {
  if (k < 0) throw std::invalid_argument("depth must be >= 0");
  StratifiedClassifier cls(lz);
  for (int j = 0; j <= k; ++j)
    if (cls.class_id(s, j) != cls.class_id(t, j)) return j - 1;
  return k;
}

int stratified(const KripkeStructure& ks, int s, int t, int k) {
  if (s < 0 || s >= static_cast<int>(ks.states.size()) || t < 0 ||
      t >= static_cast<int>(ks.states.size()))
    throw std::invalid_argument("state index out of range");
  return stratified(from_kripke(ks), ks.states[s], ks.states[t], k);
}

std::optional<std::string> validate_hints(const LazyKripke& lz, int max_depth,
                                          int samples) {
  if (max_depth < 0) throw std::invalid_argument("max_depth must be >= 0");
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");

  KripkeStructure reach = truncate(lz, max_depth, samples);
  StratifiedClassifier cls(lz);
  for (const auto& s : reach.states) {
    for (const auto& g : lz.successors(s)) {
      if (!g.family || !g.family->hint) continue;
      const SuccessorFamily& fam = *g.family;
      for (int d = 0; d <= max_depth; ++d) {
        std::set<int> rep_classes;
        for (long long r : fam.hint(d))
          rep_classes.insert(cls.class_id(fam.member(r), d));
        for (long long i = 0; i < samples; ++i) {
          if (fam.count && i >= *fam.count) break;
          if (!rep_classes.count(cls.class_id(fam.member(i), d)))
            return "family [" + format_word(g.word) + "] at state '" + s +
                   "': member " + std::to_string(i) +
                   " matches no representative at depth " + std::to_string(d);
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace gstlab
