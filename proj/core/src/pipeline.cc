#include "relspace/pipeline.h"

#include <numeric>

#include "relspace/error.h"

namespace relspace {
namespace {

PregroupType type_of_token(const Token& t) {
  return t.is_name() ? parse_type("n") : t.entry->type;
}

// Bundle type of every flat position.
std::vector<PortType> element_types(const Parse& p,
                                    const std::vector<Token>& tokens,
                                    const PortType& noun) {
  std::vector<PortType> out(p.flat.size());
  std::vector<bool> known(p.flat.size(), false);
  for (std::size_t i = 0; i < p.flat.size(); ++i) {
    const Token& tok = tokens[p.word_of[i]];
    if (p.flat[i].basic == Basic::kN) {
      out[i] = noun;
      known[i] = true;
    } else if (!tok.is_name() && tok.entry->wiring == WiringKind::kVerb) {
      out[i] = repeat(noun, tok.entry->verb_arity());
      known[i] = true;
    }
  }
  for (const auto& [a, b] : p.links) {
    if (known[a] && !known[b]) {
      out[b] = out[a];
      known[b] = true;
    } else if (known[b] && !known[a]) {
      out[a] = out[b];
      known[a] = true;
    }
  }
  for (std::size_t i = 0; i < p.flat.size(); ++i) {
    if (!known[i]) {
      throw Error(ErrorCode::kNoParse,
                  "sentence wire of '" + tokens[p.word_of[i]].text +
                      "' does not meet a clause");
    }
  }
  return out;
}

// Splits a flat bundle into consecutive pieces of the given widths.
std::vector<Bundle> split(const Bundle& b, const std::vector<std::size_t>& widths) {
  std::vector<Bundle> out;
  std::size_t at = 0;
  for (std::size_t w : widths) {
    out.emplace_back(b.begin() + at, b.begin() + at + w);
    at += w;
  }
  return out;
}

// Merges `source` with `copies` fresh copies of it.
std::vector<Bundle> copies_of(DiagramBuilder& b, const Bundle& source,
                              std::size_t copies) {
  std::vector<Bundle> legs = {source};
  return b.add_bundle_spider(legs, type_of(source), copies);
}

// Word meaning as one bundle per element of its type.
std::vector<Bundle> inline_word(DiagramBuilder& b, const Token& tok,
                                const Scene& scene,
                                const std::vector<PortType>& elems,
                                Bundle& participant) {
  const PortType noun = scene.noun();
  if (tok.is_name()) {
    auto [grammar, boundary] = b.add_bundle_cap(noun);
    participant = boundary;
    return {grammar};
  }
  const LexiconEntry& e = *tok.entry;
  switch (e.wiring) {
    case WiringKind::kNoun:
      return {b.add_state(e.word, scene.relation(e.relation))};
    case WiringKind::kAdjective: {
      if (e.relation.empty()) {
        auto [left, right] = b.add_bundle_cap(noun);
        return {left, right};
      }
      return copies_of(b, b.add_state(e.word, scene.relation(e.relation)), 2);
    }
    case WiringKind::kVerb: {
      const Relation& rel = scene.relation(e.relation);
      const std::size_t arity = e.verb_arity();
      Bundle v = b.add_state(e.word, rel.is_state() ? rel : rel.resplit(0));
      if (type_of(v).size() != arity * noun.size()) {
        throw Error(ErrorCode::kTypeMismatch,
                    "relation '" + e.relation + "' does not fit verb '" +
                        e.word + "'");
      }
      if (arity == 1) return copies_of(b, v, 2);
      auto halves = split(v, {noun.size(), noun.size()});
      auto subj = copies_of(b, halves[0], 2);
      auto obj = copies_of(b, halves[1], 2);
      return {subj[0], concat({&subj[1], &obj[0]}), obj[1]};
    }
    case WiringKind::kPreposition: {
      // Boxes run object -> head; bent, the object wires come first.
      Bundle r = b.add_state(e.word, scene.relation(e.relation).resplit(0));
      auto halves = split(r, {noun.size(), noun.size()});
      auto head = copies_of(b, halves[1], 2);
      return {head[0], head[1], halves[0]};
    }
    case WiringKind::kRelPron: {
      auto legs = b.add_bundle_spider({}, noun, 3);
      Bundle open;
      for (const auto& c : elems[3]) {
        open.push_back(b.add_spider(c, {}, 1)[0]);
      }
      return {legs[0], legs[1], legs[2], open};
    }
  }
  return {};
}

}  // namespace

Sentence build_sentence(std::vector<Token> tokens, const Scene& scene,
                        const PregroupType& target, WordStyle style) {
  std::vector<PregroupType> types;
  for (const auto& t : tokens) types.push_back(type_of_token(t));
  Parse parse = reduce(types, target);
  const PortType noun = scene.noun();
  const std::vector<PortType> elems = element_types(parse, tokens, noun);

  DiagramBuilder b;
  Bundle flat;
  std::vector<Bundle> participants;
  std::vector<std::string> names;
  std::size_t pos = 0;
  for (std::size_t w = 0; w < tokens.size(); ++w) {
    const Token& tok = tokens[w];
    const std::size_t n_elems = types[w].size();
    std::vector<PortType> mine(elems.begin() + pos,
                               elems.begin() + pos + n_elems);
    pos += n_elems;
    std::vector<Bundle> bundles;
    Bundle participant;
    if (style == WordStyle::kOpaque) {
      PortType out;
      std::vector<std::size_t> widths;
      for (const auto& t : mine) {
        out = out + t;
        widths.push_back(t.size());
      }
      if (tok.is_name()) {
        out = out + noun;
        widths.push_back(noun.size());
      }
      bundles = split(b.add_box("word:" + std::to_string(w) + ":" + tok.text,
                                out, {}),
                      widths);
      if (tok.is_name()) {
        participant = bundles.back();
        bundles.pop_back();
      }
    } else {
      bundles = inline_word(b, tok, scene, mine, participant);
    }
    for (const auto& bundle : bundles) flat.insert(flat.end(), bundle.begin(), bundle.end());
    if (tok.is_name()) {
      participants.push_back(participant);
      names.push_back(tok.name);
    }
  }

  Bundle residual = b.add_diagram(grammar_diagram(parse, elems), flat);
  Bundle out;
  for (const auto& p : participants) out.insert(out.end(), p.begin(), p.end());
  out.insert(out.end(), residual.begin(), residual.end());
  Diagram d = std::move(b).finish(out);
  return Sentence{std::move(tokens), std::move(parse), std::move(d),
                  std::move(names), noun, residual.size()};
}

Relation Meaning::residual() const {
  std::vector<std::size_t> cols(residual_wires);
  std::iota(cols.begin(), cols.end(), state.cod().size() - residual_wires);
  return project(state, cols);
}

Relation Meaning::about_participants() const {
  std::vector<std::size_t> cols(state.cod().size() - residual_wires);
  std::iota(cols.begin(), cols.end(), 0);
  return project(state, cols);
}

Meaning evaluate_sentence(const Sentence& s) {
  return Meaning{evaluate(s.diagram, Environment{}), s.participants, s.noun,
                 s.residual_wires};
}

Meaning parse_and_evaluate(std::string_view phrase, const Lexicon& lexicon,
                           const Scene& scene, const PregroupType& target) {
  return evaluate_sentence(build_sentence(
      tokenize(phrase, lexicon, scene.inhabitant_names), scene, target));
}

Meaning parse_and_evaluate(std::string_view phrase, const Lexicon& lexicon,
                           const Scene& scene) {
  auto tokens = tokenize(phrase, lexicon, scene.inhabitant_names);
  try {
    return evaluate_sentence(build_sentence(tokens, scene, parse_type("n")));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNoParse) throw;
  }
  return evaluate_sentence(build_sentence(tokens, scene, parse_type("s")));
}

}  // namespace relspace
