#ifndef RELSPACE_KNOWLEDGE_H_
#define RELSPACE_KNOWLEDGE_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "relspace/lexicon.h"
#include "relspace/pipeline.h"
#include "relspace/relation.h"
#include "relspace/space.h"

namespace relspace {

// What is known about a scene's inhabitants after a text.  Each inhabitant
// owns one noun bundle; the joint state over all of them is the
// conjunction of the stored constraints and is only materialized on
// request.
class KnowledgeState {
 public:
  explicit KnowledgeState(const Scene& scene);

  const Scene& scene() const { return *scene_; }
  const std::vector<std::string>& inhabitants() const { return names_; }

  // Conjoins the meaning of a sentence on its participants' bundles.
  // Throws kUnknownName for participants that are not inhabitants.
  KnowledgeState update(const Meaning& m) const;
  KnowledgeState update(std::string_view sentence,
                        const Lexicon& lexicon) const;

  // State over the bundles of `keep`, in order; names may repeat.
  Relation marginalize(std::span<const std::string> keep) const;
  // The whole joint over all inhabitants in declaration order.
  Relation joint() const;
  bool consistent() const;

  // Whether the participants' marginal lies within the sentence meaning.
  bool entails(const Meaning& conclusion) const;
  bool entails(std::string_view sentence, const Lexicon& lexicon) const;

 private:
  struct Constraint {
    std::vector<std::size_t> inhabitants;  // one per bundle of `rel`
    Relation rel;
  };

  std::size_t inhabitant_index(const std::string& name) const;
  Relation solve(std::span<const std::string> keep) const;

  const Scene* scene_;
  std::vector<std::string> names_;
  std::vector<Constraint> constraints_;
};

// From q we infer r: and(q, r) = q.
bool infers(const Relation& q, const Relation& r);

// One infers() verdict per query sentence.
std::vector<bool> derive_facts(const KnowledgeState& k,
                               const std::vector<std::string>& queries,
                               const Lexicon& lexicon);

}  // namespace relspace

#endif  // RELSPACE_KNOWLEDGE_H_
