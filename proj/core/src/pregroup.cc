#include "relspace/pregroup.h"

#include <map>
#include <optional>

#include "relspace/error.h"

namespace relspace {
namespace {

[[noreturn]] void bad_type(std::string_view text, const std::string& why) {
  throw Error(ErrorCode::kLexicon,
              "bad pregroup type '" + std::string(text) + "': " + why);
}

SimpleType parse_element(std::string_view whole, std::string_view e) {
  int left = 0, right = 0;
  while (e.starts_with("-1")) {
    ++left;
    e.remove_prefix(2);
  }
  if (e.empty()) bad_type(whole, "missing basic type");
  SimpleType t;
  if (e[0] == 'n') {
    t.basic = Basic::kN;
  } else if (e[0] == 's') {
    t.basic = Basic::kS;
  } else {
    bad_type(whole, "unknown basic type '" + std::string(1, e[0]) + "'");
  }
  e.remove_prefix(1);
  while (e.starts_with("-1")) {
    ++right;
    e.remove_prefix(2);
  }
  if (!e.empty()) bad_type(whole, "trailing characters");
  if (left > 0 && right > 0) bad_type(whole, "marks on both sides");
  t.order = right - left;
  return t;
}

// Interval search over flat positions.  full(i, j) asks whether [i, j)
// cancels completely; memoized.
class Reducer {
 public:
  explicit Reducer(const PregroupType& flat) : flat_(flat) {}

  bool full(std::size_t i, std::size_t j) {
    if (i >= j) return true;
    if ((j - i) % 2 != 0) return false;
    auto key = std::make_pair(i, j);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool ok = false;
    for (std::size_t k = i + 1; k < j && !ok; k += 2) {
      ok = cancels(flat_[i], flat_[k]) && full(i + 1, k) && full(k + 1, j);
    }
    memo_[key] = ok;
    return ok;
  }

  // Links for a fully cancelling [i, j), choosing the nearest partner first.
  void links(std::size_t i, std::size_t j,
             std::vector<std::pair<std::size_t, std::size_t>>& out) {
    while (i < j) {
      for (std::size_t k = i + 1; k < j; k += 2) {
        if (cancels(flat_[i], flat_[k]) && full(i + 1, k) && full(k + 1, j)) {
          links(i + 1, k, out);
          out.emplace_back(i, k);
          i = k + 1;
          break;
        }
      }
    }
  }

  // Residual search: [i, end) must reduce to target[t..].
  bool residual(std::size_t i, const PregroupType& target, std::size_t t,
                std::vector<std::size_t>& kept,
                std::vector<std::pair<std::size_t, std::size_t>>& out) {
    const std::size_t end = flat_.size();
    if (t == target.size()) {
      if (!full(i, end)) return false;
      links(i, end, out);
      return true;
    }
    // The next residual element sits at some r >= i with [i, r) cancelling.
    for (std::size_t r = i; r < end; ++r) {
      if (!(flat_[r] == target[t]) || !full(i, r)) continue;
      const std::size_t mark = out.size();
      links(i, r, out);
      kept.push_back(r);
      if (residual(r + 1, target, t + 1, kept, out)) return true;
      kept.pop_back();
      out.resize(mark);
    }
    return false;
  }

 private:
  const PregroupType& flat_;
  std::map<std::pair<std::size_t, std::size_t>, bool> memo_;
};

}  // namespace

PregroupType parse_type(std::string_view text) {
  PregroupType out;
  std::size_t start = 0;
  while (true) {
    std::size_t dot = text.find('.', start);
    std::string_view e = text.substr(
        start, dot == std::string_view::npos ? std::string_view::npos
                                             : dot - start);
    out.push_back(parse_element(text, e));
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return out;
}

std::string to_string(const SimpleType& t) {
  std::string marks;
  for (int k = 0; k < (t.order < 0 ? -t.order : t.order); ++k) marks += "-1";
  const char* basic = t.basic == Basic::kN ? "n" : "s";
  return t.order < 0 ? marks + basic : basic + marks;
}

std::string to_string(const PregroupType& t) {
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i > 0) out += '.';
    out += to_string(t[i]);
  }
  return out;
}

bool cancels(const SimpleType& left, const SimpleType& right) {
  return left.basic == right.basic && left.order == right.order + 1;
}

Parse reduce(const std::vector<PregroupType>& types,
             const PregroupType& target) {
  Parse p;
  for (std::size_t w = 0; w < types.size(); ++w) {
    for (const auto& e : types[w]) {
      p.flat.push_back(e);
      p.word_of.push_back(w);
    }
  }
  Reducer r(p.flat);
  if (!r.residual(0, target, 0, p.residual, p.links)) {
    throw Error(ErrorCode::kNoParse, "no reduction of " + to_string(p.flat) +
                                         " to " + to_string(target));
  }
  std::sort(p.links.begin(), p.links.end());
  return p;
}

bool is_valid_parse(const Parse& p) {
  std::vector<int> seen(p.flat.size(), 0);
  for (const auto& [a, b] : p.links) {
    if (a >= b || b >= p.flat.size() || !cancels(p.flat[a], p.flat[b])) {
      return false;
    }
    ++seen[a];
    ++seen[b];
  }
  for (std::size_t r : p.residual) {
    if (r >= p.flat.size()) return false;
    ++seen[r];
  }
  for (int s : seen) {
    if (s != 1) return false;
  }
  for (const auto& [a, b] : p.links) {
    for (const auto& [c, d] : p.links) {
      if (a < c && c < b && b < d) return false;
    }
    for (std::size_t r : p.residual) {
      if (a < r && r < b) return false;  // residual wires must stay open
    }
  }
  return true;
}

Diagram grammar_diagram(const Parse& p,
                        const std::vector<PortType>& element_types) {
  if (element_types.size() != p.flat.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "grammar_diagram: one bundle type per position expected");
  }
  PortType dom;
  for (const auto& t : element_types) dom = dom + t;
  DiagramBuilder b(dom);
  Bundle in = b.inputs();
  std::vector<Bundle> bundles;
  std::size_t at = 0;
  for (const auto& t : element_types) {
    bundles.emplace_back(in.begin() + at, in.begin() + at + t.size());
    at += t.size();
  }
  for (const auto& [a, c] : p.links) b.add_bundle_cup(bundles[a], bundles[c]);
  Bundle out;
  for (std::size_t r : p.residual) {
    out.insert(out.end(), bundles[r].begin(), bundles[r].end());
  }
  return std::move(b).finish(out);
}

}  // namespace relspace
