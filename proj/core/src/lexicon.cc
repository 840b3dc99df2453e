#include "relspace/lexicon.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "relspace/error.h"

namespace relspace {
namespace {

std::vector<std::string> words_of(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

std::string normalize(std::string_view text) {
  std::string out;
  for (const auto& w : words_of(text)) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

WiringKind wiring_from_name(const std::string& s) {
  for (auto k : {WiringKind::kNoun, WiringKind::kAdjective, WiringKind::kVerb,
                 WiringKind::kPreposition, WiringKind::kRelPron}) {
    if (s == wiring_kind_name(k)) return k;
  }
  throw Error(ErrorCode::kLexicon, "unknown wiring '" + s + "'");
}

void validate(const LexiconEntry& e) {
  const std::string t = to_string(e.type);
  bool ok = false;
  switch (e.wiring) {
    case WiringKind::kNoun: ok = t == "n"; break;
    case WiringKind::kAdjective: ok = t == "n.n-1"; break;
    case WiringKind::kVerb: ok = t == "-1n.s" || t == "-1n.s.n-1"; break;
    case WiringKind::kPreposition: ok = t == "-1n.n.n-1"; break;
    case WiringKind::kRelPron: ok = t == "-1n.n.n-1-1.s-1"; break;
  }
  if (!ok) {
    throw Error(ErrorCode::kLexicon, "entry '" + e.word + "': type " + t +
                                         " does not fit wiring " +
                                         wiring_kind_name(e.wiring));
  }
  const bool needs_relation =
      e.wiring == WiringKind::kNoun || e.wiring == WiringKind::kVerb ||
      e.wiring == WiringKind::kPreposition;
  if (needs_relation && e.relation.empty()) {
    throw Error(ErrorCode::kLexicon,
                "entry '" + e.word + "' needs a relation");
  }
  if (normalize(e.word).empty()) {
    throw Error(ErrorCode::kLexicon, "empty lexicon word");
  }
}

}  // namespace

const char* wiring_kind_name(WiringKind kind) {
  switch (kind) {
    case WiringKind::kNoun: return "noun";
    case WiringKind::kAdjective: return "adjective";
    case WiringKind::kVerb: return "verb";
    case WiringKind::kPreposition: return "preposition";
    case WiringKind::kRelPron: return "relpron";
  }
  return "?";
}

std::size_t LexiconEntry::verb_arity() const {
  return type.size() == 3 ? 2 : 1;
}

Lexicon::Lexicon(std::vector<LexiconEntry> entries) {
  for (auto& e : entries) add(std::move(e));
}

void Lexicon::add(LexiconEntry entry) {
  validate(entry);
  if (find(entry.word)) {
    throw Error(ErrorCode::kLexicon, "duplicate entry '" + entry.word + "'");
  }
  entries_.push_back(std::move(entry));
}

const LexiconEntry* Lexicon::find(std::string_view word) const {
  const std::string key = normalize(word);
  for (const auto& e : entries_) {
    if (normalize(e.word) == key) return &e;
  }
  return nullptr;
}

Lexicon Lexicon::from_json(const std::string& text) {
  using nlohmann::json;
  Lexicon lex;
  try {
    json j = json::parse(text);
    if (!j.is_array()) throw Error(ErrorCode::kLexicon, "lexicon must be an array");
    for (const auto& je : j) {
      LexiconEntry e;
      e.word = je.at("word").get<std::string>();
      e.type = parse_type(je.at("type").get<std::string>());
      if (je.contains("relation") && !je["relation"].is_null()) {
        e.relation = je["relation"].get<std::string>();
      }
      e.wiring = wiring_from_name(je.at("wiring").get<std::string>());
      lex.add(std::move(e));
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kLexicon, std::string("lexicon json: ") + e.what());
  }
  return lex;
}

Lexicon Lexicon::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kLexicon, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

std::vector<Token> tokenize(std::string_view phrase, const Lexicon& lexicon,
                            const std::vector<std::string>& names) {
  struct Candidate {
    std::vector<std::string> words;
    const LexiconEntry* entry;
    std::string name;
  };
  std::vector<Candidate> candidates;
  for (const auto& n : names) candidates.push_back({words_of(n), nullptr, n});
  for (const auto& e : lexicon.entries()) {
    candidates.push_back({words_of(e.word), &e, ""});
  }
  // Longest first; names before lexicon words of the same length.
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) {
                     return a.words.size() > b.words.size();
                   });

  const std::vector<std::string> words = words_of(phrase);
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < words.size()) {
    const Candidate* hit = nullptr;
    for (const auto& c : candidates) {
      if (c.words.empty() || i + c.words.size() > words.size()) continue;
      if (std::equal(c.words.begin(), c.words.end(), words.begin() + i)) {
        hit = &c;
        break;
      }
    }
    if (!hit) {
      throw Error(ErrorCode::kUnknownWord, "unknown word '" + words[i] + "'");
    }
    Token t;
    for (std::size_t k = 0; k < hit->words.size(); ++k) {
      if (k > 0) t.text += ' ';
      t.text += words[i + k];
    }
    t.entry = hit->entry;
    t.name = hit->name;
    out.push_back(std::move(t));
    i += hit->words.size();
  }
  return out;
}

}  // namespace relspace
