#ifndef RELSPACE_PIPELINE_H_
#define RELSPACE_PIPELINE_H_

#include <string>
#include <string_view>
#include <vector>

#include "relspace/diagram.h"
#include "relspace/lexicon.h"
#include "relspace/pregroup.h"
#include "relspace/space.h"

namespace relspace {

// How word meanings appear in a sentence diagram.  Inlined words are
// expanded into states and spiders and evaluate directly; opaque words are
// single boxes named "word:<position>:<text>", showing the grammar alone.
enum class WordStyle { kInlined, kOpaque };

// A parsed phrase wired into one diagram.  The diagram is a state whose
// outputs are one noun bundle per inhabitant name (in order of mention)
// followed by the residual of the parse.
//
// The sentence type s of a verb is the tensor of its participants' noun
// bundles, and the s-1 of "that" takes the width of the clause it meets.
struct Sentence {
  std::vector<Token> tokens;
  Parse parse;
  Diagram diagram;
  std::vector<std::string> participants;
  PortType noun;
  std::size_t residual_wires = 0;
};

Sentence build_sentence(std::vector<Token> tokens, const Scene& scene,
                        const PregroupType& target,
                        WordStyle style = WordStyle::kInlined);

struct Meaning {
  Relation state;  // participants then residual
  std::vector<std::string> participants;
  PortType noun;
  std::size_t residual_wires = 0;

  // The residual alone, participants deleted.
  Relation residual() const;
  // The participants alone, residual deleted.
  Relation about_participants() const;
};

Meaning evaluate_sentence(const Sentence& s);

// Tokenizes against the scene's inhabitants and parses to `target`.
Meaning parse_and_evaluate(std::string_view phrase, const Lexicon& lexicon,
                           const Scene& scene, const PregroupType& target);
// Tries a noun phrase first, then a sentence.
Meaning parse_and_evaluate(std::string_view phrase, const Lexicon& lexicon,
                           const Scene& scene);

}  // namespace relspace

#endif  // RELSPACE_PIPELINE_H_
