#include "relspace/space.h"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "relspace/error.h"

namespace relspace {

std::size_t max_space_size() {
  if (const char* env = std::getenv("RELSPACE_MAX_SPACE")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultMaxSpace;
}

void check_space_size(std::size_t n, const std::string& what) {
  if (n > max_space_size()) {
    throw Error(ErrorCode::kSizeBound,
                what + " has " + std::to_string(n) +
                    " elements, above the bound of " +
                    std::to_string(max_space_size()));
  }
}

std::size_t Space::factor_index(const std::string& carrier_name) const {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i]->name() == carrier_name) return i;
  }
  throw Error(ErrorCode::kScene,
              "space '" + name + "' has no factor '" + carrier_name + "'");
}

Space augment(const Space& space, const CarrierPtr& feature) {
  Space out{space.name, space.factors + PortType{feature}};
  check_space_size(out.size(), "augmented space " + space.name);
  return out;
}

namespace {

// Splits the bundle into the leading factors covered by `k` wires and the
// rest; returns the rest.
PortType trailing(const Space& space, std::size_t k) {
  if (k > space.factors.size()) {
    throw Error(ErrorCode::kTypeMismatch, "widen: relation wider than space");
  }
  return space.factors.slice(k, space.factors.size());
}

}  // namespace

Relation widen(const Relation& r, const Space& space) {
  const std::size_t k = r.dom().size();
  if (!(r.dom() == space.factors.slice(0, k)) || !(r.cod() == r.dom())) {
    throw Error(ErrorCode::kTypeMismatch,
                "widen: relation does not act on the leading factors");
  }
  const PortType rest = trailing(space, k);
  if (rest.empty()) return r;
  // r ⊗ (all pairs on the rest), then interleave into bundle order.
  Relation t = tensor(r, bend(unknown(rest + rest), rest.size()));
  const std::size_t m = rest.size();
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < k; ++i) order.push_back(i);
  for (std::size_t i = 0; i < m; ++i) order.push_back(k + i);
  for (std::size_t i = 0; i < k; ++i) order.push_back(k + m + i);
  for (std::size_t i = 0; i < m; ++i) order.push_back(2 * k + m + i);
  return permute_columns(t, order, k + m);
}

Relation widen_state(const Relation& state, const Space& space) {
  const std::size_t k = state.cod().size();
  if (!state.is_state() || !(state.cod() == space.factors.slice(0, k))) {
    throw Error(ErrorCode::kTypeMismatch,
                "widen_state: state does not cover the leading factors");
  }
  const PortType rest = trailing(space, k);
  if (rest.empty()) return state;
  return tensor(state, unknown(rest));
}

const Relation& Scene::relation(const std::string& name) const {
  auto it = relations.find(name);
  if (it == relations.end()) {
    throw Error(ErrorCode::kUnboundRelation,
                "scene has no relation '" + name + "'");
  }
  return it->second;
}

bool Scene::has_inhabitant(const std::string& name) const {
  return inhabitants.count(name) > 0;
}

void Scene::add_inhabitant(const std::string& name) {
  add_inhabitant(name, unknown(noun()));
}

void Scene::add_inhabitant(const std::string& name, Relation state) {
  if (!state.is_state() || !(state.cod() == noun())) {
    throw Error(ErrorCode::kScene,
                "inhabitant '" + name + "' is not a state over the space");
  }
  if (!has_inhabitant(name)) inhabitant_names.push_back(name);
  inhabitants.insert_or_assign(name, std::move(state));
}

Environment Scene::environment() const {
  Environment env;
  for (const auto& [name, rel] : relations) env.bind(name, rel);
  for (const auto& [name, rel] : inhabitants) env.bind(name, rel);
  return env;
}

std::string Scene::element_label(std::span<const Index> tuple) const {
  std::string out;
  for (std::size_t i = 0; i < label_factors.size(); ++i) {
    if (i > 0) out += ' ';
    const std::size_t f = label_factors[i];
    out += space.factors[f]->label(tuple[f]);
  }
  return out;
}

std::vector<std::string> Scene::element_labels(const Relation& state) const {
  std::vector<std::string> out;
  std::set<std::string> seen;
  // Order by the projected tuples so the listing follows carrier order.
  std::vector<std::size_t> cols(label_factors.begin(), label_factors.end());
  const Relation projected = project(state, cols);
  std::vector<Index> full(noun().size(), 0);
  for (std::size_t r = 0; r < projected.size(); ++r) {
    auto row = projected.row(r);
    for (std::size_t i = 0; i < cols.size(); ++i) full[cols[i]] = row[i];
    std::string label = element_label(full);
    if (seen.insert(label).second) out.push_back(std::move(label));
  }
  return out;
}

}  // namespace relspace
