#include "render.h"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace relspace::cli {
namespace {

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += sep;
    out += v[i];
  }
  return out;
}

// Labels of the participant `i` columns of an about_participants() state.
std::vector<std::string> participant_labels(const Scene& scene,
                                            const Relation& about,
                                            std::size_t i) {
  const std::size_t width = scene.noun().size();
  std::vector<std::size_t> cols(width);
  for (std::size_t w = 0; w < width; ++w) cols[w] = i * width + w;
  return scene.element_labels(project(about, cols));
}

}  // namespace

std::string render_board(const Scene& scene,
                         const std::vector<std::string>& marked) {
  std::ostringstream out;
  for (char rank = '8'; rank >= '1'; --rank) {
    out << rank << ' ';
    for (char file = 'a'; file <= 'h'; ++file) {
      const std::string sq{file, rank};
      auto it = scene.board.find(sq);
      out << (contains(marked, sq) ? '*' : ' ')
          << (it == scene.board.end() ? '.' : it->second);
    }
    out << '\n';
  }
  out << "   a b c d e f g h\n";
  return out.str();
}

std::string render_line(const Scene& scene,
                        const std::vector<std::string>& marked) {
  std::vector<std::string> parts;
  for (const auto& station : scene.noun()[0]->labels()) {
    parts.push_back((contains(marked, station) ? "*" : "") + station);
  }
  return join(parts, " - ") + "\n";
}

std::string render_meaning(const Scene& scene, const std::string& phrase,
                           const Meaning& m, RenderFormat format) {
  const std::size_t width = scene.noun().size();
  const bool noun_phrase = m.residual_wires == width;
  std::vector<std::string> elements;
  if (noun_phrase) elements = scene.element_labels(m.residual());
  const Relation about = m.about_participants();

  if (format == RenderFormat::kJson) {
    nlohmann::json j;
    j["phrase"] = phrase;
    j["kind"] = noun_phrase ? "noun phrase" : "sentence";
    j["elements"] = elements;
    j["satisfiable"] = !m.state.empty();
    nlohmann::json parts = nlohmann::json::array();
    for (std::size_t i = 0; i < m.participants.size(); ++i) {
      parts.push_back({{"name", m.participants[i]},
                       {"elements", participant_labels(scene, about, i)}});
    }
    j["participants"] = parts;
    return j.dump(2) + "\n";
  }

  std::ostringstream out;
  if (noun_phrase) {
    out << "{" << join(elements, ", ") << "}\n";
    if (scene.kind == "chess") out << render_board(scene, elements);
    if (scene.kind == "subway") out << render_line(scene, elements);
  } else {
    out << (m.state.empty() ? "false" : "true") << "\n";
  }
  for (std::size_t i = 0; i < m.participants.size(); ++i) {
    auto labels = participant_labels(scene, about, i);
    out << m.participants[i] << ": " << labels.size() << " possible "
        << (labels.size() == 1 ? "place" : "places");
    if (labels.size() <= 12) out << " {" << join(labels, ", ") << "}";
    out << "\n";
  }
  return out.str();
}

}  // namespace relspace::cli
