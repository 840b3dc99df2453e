#ifndef RELSPACE_LEXICON_H_
#define RELSPACE_LEXICON_H_

#include <string>
#include <string_view>
#include <vector>

#include "relspace/pregroup.h"

namespace relspace {

enum class WiringKind { kNoun, kAdjective, kVerb, kPreposition, kRelPron };

const char* wiring_kind_name(WiringKind kind);

struct LexiconEntry {
  std::string word;      // may span several words, e.g. "next to"
  PregroupType type;
  std::string relation;  // registry name; empty for determiners and "that"
  WiringKind wiring;

  // Number of participants of a verb: 1 for -1n.s, 2 for -1n.s.n-1.
  std::size_t verb_arity() const;
};

// Allowed types: noun n; adjective n.n-1; verb -1n.s or -1n.s.n-1;
// preposition -1n.n.n-1; relpron -1n.n.n-1-1.s-1.
class Lexicon {
 public:
  Lexicon() = default;
  explicit Lexicon(std::vector<LexiconEntry> entries);

  // JSON array of {word, type, relation, wiring}.  Throws kLexicon.
  static Lexicon from_json(const std::string& text);
  static Lexicon load(const std::string& path);

  void add(LexiconEntry entry);
  const std::vector<LexiconEntry>& entries() const { return entries_; }
  // Case-insensitive; nullptr when absent.
  const LexiconEntry* find(std::string_view word) const;

 private:
  std::vector<LexiconEntry> entries_;
};

struct Token {
  std::string text;
  const LexiconEntry* entry = nullptr;  // null for inhabitant names
  std::string name;                     // inhabitant name, as declared

  bool is_name() const { return entry == nullptr; }
};

// Greedy longest match over lexicon words and inhabitant names, ignoring
// case and repeated whitespace.  Names win ties.  Throws kUnknownWord.
std::vector<Token> tokenize(std::string_view phrase, const Lexicon& lexicon,
                            const std::vector<std::string>& names);

}  // namespace relspace

#endif  // RELSPACE_LEXICON_H_
