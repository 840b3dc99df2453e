#include "relspace/wiring.h"

#include <algorithm>

#include "relspace/error.h"

namespace relspace {
namespace {

Diagram update_wiring(const Relation& state, const PortType& bundle,
                      std::size_t arity) {
  const PortType dom = repeat(bundle, arity);
  if (!(state.cod() == dom)) {
    throw Error(ErrorCode::kTypeMismatch,
                "wiring: relation type " + state.cod().to_string() +
                    " does not fit " + std::to_string(arity) +
                    " participants of " + bundle.to_string());
  }
  DiagramBuilder b(dom);
  Bundle in = b.inputs();
  Bundle v = b.add_state("v", state);
  Bundle out;
  for (std::size_t w = 0; w < dom.size(); ++w) {
    Wire legs[] = {in[w], v[w]};
    Bundle merged = b.add_spider(dom[w], legs, 1);
    out.push_back(merged[0]);
  }
  return std::move(b).finish(out);
}

}  // namespace

Diagram verb_wiring(const Relation& v, std::size_t arity) {
  if (arity != 1 && arity != 2) {
    throw Error(ErrorCode::kInvalidArgument, "verb arity must be 1 or 2");
  }
  Relation state = v.is_state() ? v : v.resplit(0);
  if (state.cod().size() % arity != 0) {
    throw Error(ErrorCode::kTypeMismatch, "verb relation arity mismatch");
  }
  PortType bundle = state.cod().slice(0, state.cod().size() / arity);
  return update_wiring(state, bundle, arity);
}

Diagram adjective_wiring(const Relation& a) {
  if (!a.is_state()) {
    throw Error(ErrorCode::kTypeMismatch, "adjective must be a state");
  }
  return update_wiring(a, a.cod(), 1);
}

Diagram preposition_wiring(const Relation& r) {
  if (!(r.dom() == r.cod())) {
    throw Error(ErrorCode::kTypeMismatch,
                "preposition must relate a bundle to itself");
  }
  const PortType& bundle = r.dom();
  DiagramBuilder b(bundle + bundle);
  Bundle in = b.inputs();
  // Bent box: object wires first, then head wires.
  Bundle rel = b.add_state("r", r.resplit(0));
  const std::size_t k = bundle.size();
  Bundle out;
  for (std::size_t w = 0; w < k; ++w) {
    Wire head[] = {in[w], rel[k + w]};
    out.push_back(b.add_spider(bundle[w], head, 1)[0]);
    Wire object[] = {in[k + w], rel[w]};
    b.add_spider(bundle[w], object, 0);
  }
  return std::move(b).finish(out);
}

Diagram relpron_wiring(const Relation& head, const Diagram& clause) {
  if (!head.is_state() || !(head.cod() == clause.dom())) {
    throw Error(ErrorCode::kTypeMismatch,
                "relative clause gap " + clause.dom().to_string() +
                    " does not match head " + head.cod().to_string());
  }
  DiagramBuilder b;
  Bundle h = b.add_state("head", head);
  Bundle out, gap;
  for (std::size_t w = 0; w < h.size(); ++w) {
    Wire leg[] = {h[w]};
    Bundle copies = b.add_spider(h[w].carrier, leg, 2);
    out.push_back(copies[0]);
    gap.push_back(copies[1]);
  }
  Bundle rest = b.add_diagram(clause, gap);
  for (const Wire& w : rest) {
    Wire leg[] = {w};
    b.add_spider(w.carrier, leg, 0);
  }
  return std::move(b).finish(out);
}

Relation lift(const Relation& r, const Layout& layout) {
  const std::size_t nd = layout.dom.size(), nc = layout.cod.size();
  auto check_slots = [](const std::vector<std::size_t>& slots,
                        const PortType& inner, const PortType& outer) {
    if (slots.size() != inner.size()) {
      throw Error(ErrorCode::kTypeMismatch, "lift: slot count mismatch");
    }
    std::vector<bool> used(outer.size(), false);
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (slots[i] >= outer.size() || used[slots[i]] ||
          !same_carrier(outer[slots[i]], inner[i])) {
        throw Error(ErrorCode::kTypeMismatch, "lift: bad slot placement");
      }
      used[slots[i]] = true;
    }
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < outer.size(); ++i) {
      if (!used[i]) free.push_back(i);
    }
    return free;
  };
  const auto free_dom = check_slots(layout.dom_slots, r.dom(), layout.dom);
  const auto free_cod = check_slots(layout.cod_slots, r.cod(), layout.cod);
  if (free_dom.size() != free_cod.size()) {
    throw Error(ErrorCode::kTypeMismatch, "lift: pass-through wires unpaired");
  }
  PortType pass;
  for (std::size_t i = 0; i < free_dom.size(); ++i) {
    if (!same_carrier(layout.dom[free_dom[i]], layout.cod[free_cod[i]])) {
      throw Error(ErrorCode::kTypeMismatch, "lift: pass-through carriers differ");
    }
    pass.push_back(layout.dom[free_dom[i]]);
  }
  // Columns of t: r.dom, pass (dom side), r.cod, pass (cod side).
  const Relation t = tensor(r, identity(pass));
  const std::size_t rd = r.dom().size(), rc = r.cod().size(),
                    np = pass.size();
  std::vector<std::size_t> order(nd + nc);
  for (std::size_t i = 0; i < rd; ++i) order[layout.dom_slots[i]] = i;
  for (std::size_t i = 0; i < np; ++i) order[free_dom[i]] = rd + i;
  for (std::size_t j = 0; j < rc; ++j) {
    order[nd + layout.cod_slots[j]] = rd + np + j;
  }
  for (std::size_t i = 0; i < np; ++i) {
    order[nd + free_cod[i]] = rd + np + rc + i;
  }
  return permute_columns(t, order, nd);
}

}  // namespace relspace
