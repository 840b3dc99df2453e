#include "relspace/knowledge.h"

#include <algorithm>

#include "relspace/contraction.h"
#include "relspace/error.h"

namespace relspace {

KnowledgeState::KnowledgeState(const Scene& scene)
    : scene_(&scene), names_(scene.inhabitant_names) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const Relation& prior = scene.inhabitants.at(names_[i]);
    if (prior.size() != scene.noun().cardinality()) {
      constraints_.push_back(Constraint{{i}, prior});
    }
  }
}

std::size_t KnowledgeState::inhabitant_index(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) {
    throw Error(ErrorCode::kUnknownName, "no inhabitant named '" + name + "'");
  }
  return static_cast<std::size_t>(it - names_.begin());
}

KnowledgeState KnowledgeState::update(const Meaning& m) const {
  KnowledgeState next = *this;
  std::vector<std::size_t> who;
  for (const auto& p : m.participants) who.push_back(inhabitant_index(p));
  next.constraints_.push_back(Constraint{std::move(who), m.about_participants()});
  return next;
}

KnowledgeState KnowledgeState::update(std::string_view sentence,
                                      const Lexicon& lexicon) const {
  return update(parse_and_evaluate(sentence, lexicon, *scene_,
                                   parse_type("s")));
}

Relation KnowledgeState::solve(std::span<const std::string> keep) const {
  const PortType noun = scene_->noun();
  const std::size_t width = noun.size();
  FactorGraph g;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    for (const auto& c : noun) g.add_variable(c);
  }
  auto var = [&](std::size_t inhabitant, std::size_t wire) {
    return inhabitant * width + wire;
  };
  for (const auto& c : constraints_) {
    std::vector<FactorGraph::Var> vars;
    for (std::size_t who : c.inhabitants) {
      for (std::size_t w = 0; w < width; ++w) vars.push_back(var(who, w));
    }
    if (vars.empty()) {
      if (c.rel.empty()) return Relation(PortType{}, repeat(noun, keep.size()));
      continue;
    }
    g.add_factor(std::move(vars), c.rel);
  }
  std::vector<FactorGraph::Var> kept;
  for (const auto& name : keep) {
    const std::size_t who = inhabitant_index(name);
    for (std::size_t w = 0; w < width; ++w) kept.push_back(var(who, w));
  }
  return g.solve(kept);
}

Relation KnowledgeState::marginalize(std::span<const std::string> keep) const {
  return solve(keep);
}

Relation KnowledgeState::joint() const { return solve(names_); }

bool KnowledgeState::consistent() const {
  return !solve(std::span<const std::string>()).empty();
}

bool KnowledgeState::entails(const Meaning& conclusion) const {
  const Relation q = marginalize(conclusion.participants);
  return infers(q, conclusion.about_participants());
}

bool KnowledgeState::entails(std::string_view sentence,
                             const Lexicon& lexicon) const {
  return entails(parse_and_evaluate(sentence, lexicon, *scene_,
                                    parse_type("s")));
}

bool infers(const Relation& q, const Relation& r) {
  if (q.is_scalar() && r.is_scalar()) return q.empty() || !r.empty();
  return and_states(q, r) == q;
}

std::vector<bool> derive_facts(const KnowledgeState& k,
                               const std::vector<std::string>& queries,
                               const Lexicon& lexicon) {
  std::vector<bool> out;
  for (const auto& q : queries) out.push_back(k.entails(q, lexicon));
  return out;
}

}  // namespace relspace
