#include "relspace/diagram.h"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>

#include "relspace/contraction.h"
#include "relspace/error.h"

namespace relspace {
namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::kMalformedDiagram, what);
}

const CarrierPtr& spider_carrier(const Node& n) {
  return n.inputs.empty() ? n.outputs[0] : n.inputs[0];
}

bool is_spider_like(const Node& n) {
  return n.kind == GeneratorKind::kSpider || n.kind == GeneratorKind::kCap ||
         n.kind == GeneratorKind::kCup;
}

// Edge lookup tables for a diagram.
struct PortIndex {
  std::vector<std::vector<std::size_t>> in;   // node -> input port -> edge
  std::vector<std::vector<std::size_t>> out;  // node -> output port -> edge
  std::vector<std::size_t> dom;               // dom port -> edge
  std::vector<std::size_t> cod;               // cod port -> edge
};

PortIndex index_ports(const PortType& dom, const PortType& cod,
                      const std::vector<Node>& nodes,
                      const std::vector<Edge>& edges) {
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  PortIndex ix;
  ix.in.resize(nodes.size());
  ix.out.resize(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    ix.in[i].assign(nodes[i].inputs.size(), kUnset);
    ix.out[i].assign(nodes[i].outputs.size(), kUnset);
  }
  ix.dom.assign(dom.size(), kUnset);
  ix.cod.assign(cod.size(), kUnset);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const Edge& edge = edges[e];
    CarrierPtr from_c, to_c;
    std::size_t* slot;
    if (edge.from.is_boundary()) {
      if (edge.from.port >= dom.size()) malformed("edge from missing dom port");
      slot = &ix.dom[edge.from.port];
      from_c = dom[edge.from.port];
    } else {
      if (edge.from.node < 0 ||
          static_cast<std::size_t>(edge.from.node) >= nodes.size() ||
          edge.from.port >= nodes[edge.from.node].outputs.size()) {
        malformed("edge from missing node output");
      }
      slot = &ix.out[edge.from.node][edge.from.port];
      from_c = nodes[edge.from.node].outputs[edge.from.port];
    }
    if (*slot != kUnset) malformed("output used by two edges");
    *slot = e;
    if (edge.to.is_boundary()) {
      if (edge.to.port >= cod.size()) malformed("edge to missing cod port");
      slot = &ix.cod[edge.to.port];
      to_c = cod[edge.to.port];
    } else {
      if (edge.to.node < 0 ||
          static_cast<std::size_t>(edge.to.node) >= nodes.size() ||
          edge.to.port >= nodes[edge.to.node].inputs.size()) {
        malformed("edge to missing node input");
      }
      slot = &ix.in[edge.to.node][edge.to.port];
      to_c = nodes[edge.to.node].inputs[edge.to.port];
    }
    if (*slot != kUnset) malformed("input fed by two edges");
    *slot = e;
    if (!same_carrier(from_c, to_c)) {
      malformed("edge joins carriers '" + from_c->name() + "' and '" +
                to_c->name() + "'");
    }
  }
  auto all_set = [&](const std::vector<std::size_t>& v) {
    return std::find(v.begin(), v.end(), kUnset) == v.end();
  };
  if (!all_set(ix.dom)) malformed("dangling dom port");
  if (!all_set(ix.cod)) malformed("dangling cod port");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!all_set(ix.in[i]) || !all_set(ix.out[i])) {
      malformed("dangling port on node " + std::to_string(i));
    }
  }
  return ix;
}

void check_node(const Node& n, std::size_t i) {
  const std::string where = "node " + std::to_string(i) + ": ";
  switch (n.kind) {
    case GeneratorKind::kBox:
      if (n.name.empty()) malformed(where + "box without a name");
      break;
    case GeneratorKind::kState:
      if (!n.inputs.empty()) malformed(where + "state with inputs");
      if (!n.literal || !n.literal->is_state() ||
          !(n.literal->cod() == n.outputs)) {
        malformed(where + "state literal does not match its ports");
      }
      break;
    case GeneratorKind::kCap:
    case GeneratorKind::kCup:
    case GeneratorKind::kSpider: {
      if (n.kind == GeneratorKind::kCap &&
          (!n.inputs.empty() || n.outputs.size() != 2)) {
        malformed(where + "cap must be 0 -> 2");
      }
      if (n.kind == GeneratorKind::kCup &&
          (n.inputs.size() != 2 || !n.outputs.empty())) {
        malformed(where + "cup must be 2 -> 0");
      }
      if (n.inputs.size() + n.outputs.size() == 0) {
        malformed(where + "spider without legs");
      }
      const CarrierPtr& c = spider_carrier(n);
      for (const auto& p : n.inputs) {
        if (!same_carrier(p, c)) malformed(where + "spider legs differ");
      }
      for (const auto& p : n.outputs) {
        if (!same_carrier(p, c)) malformed(where + "spider legs differ");
      }
      break;
    }
  }
}

std::vector<std::vector<std::size_t>> successors(
    const std::vector<Node>& nodes, const std::vector<Edge>& edges,
    const std::vector<bool>* dead = nullptr) {
  std::vector<std::vector<std::size_t>> succ(nodes.size());
  for (const auto& e : edges) {
    if (e.from.is_boundary() || e.to.is_boundary()) continue;
    if (dead && ((*dead)[e.from.node] || (*dead)[e.to.node])) continue;
    succ[e.from.node].push_back(e.to.node);
  }
  return succ;
}

bool reachable(const std::vector<std::vector<std::size_t>>& succ,
               std::vector<std::size_t> start, std::size_t target) {
  std::vector<bool> seen(succ.size(), false);
  while (!start.empty()) {
    std::size_t n = start.back();
    start.pop_back();
    if (n == target) return true;
    if (seen[n]) continue;
    seen[n] = true;
    for (std::size_t s : succ[n]) start.push_back(s);
  }
  return false;
}

Relation generator_relation(const Node& n, const Environment& env) {
  switch (n.kind) {
    case GeneratorKind::kBox: {
      const Relation& r = env.lookup(n.name);
      if (!(r.dom() == n.inputs) || !(r.cod() == n.outputs)) {
        throw Error(ErrorCode::kTypeMismatch,
                    "box '" + n.name + "' is bound to " + r.dom().to_string() +
                        " -> " + r.cod().to_string() + " but drawn as " +
                        n.inputs.to_string() + " -> " + n.outputs.to_string());
      }
      return r;
    }
    case GeneratorKind::kState:
      return *n.literal;
    case GeneratorKind::kSpider:
    case GeneratorKind::kCap:
    case GeneratorKind::kCup:
      return spider(spider_carrier(n), n.inputs.size(), n.outputs.size());
  }
  return Relation::scalar(false);
}

// Drops dead nodes and renumbers edges.
Diagram compact(const PortType& dom, const PortType& cod,
                const std::vector<Node>& nodes, const std::vector<bool>& dead,
                const std::vector<Edge>& edges) {
  std::vector<int> remap(nodes.size(), -1);
  std::vector<Node> kept;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (dead[i]) continue;
    remap[i] = static_cast<int>(kept.size());
    kept.push_back(nodes[i]);
  }
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (Edge e : edges) {
    if (!e.from.is_boundary()) e.from.node = remap[e.from.node];
    if (!e.to.is_boundary()) e.to.node = remap[e.to.node];
    out.push_back(e);
  }
  return Diagram(dom, cod, std::move(kept), std::move(out));
}

}  // namespace

const char* generator_kind_name(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::kBox: return "box";
    case GeneratorKind::kState: return "state";
    case GeneratorKind::kSpider: return "spider";
    case GeneratorKind::kCap: return "cap";
    case GeneratorKind::kCup: return "cup";
  }
  return "?";
}

Diagram::Diagram(PortType dom, PortType cod, std::vector<Node> nodes,
                 std::vector<Edge> edges)
    : dom_(std::move(dom)), cod_(std::move(cod)), nodes_(std::move(nodes)),
      edges_(std::move(edges)) {
  for (std::size_t i = 0; i < nodes_.size(); ++i) check_node(nodes_[i], i);
  index_ports(dom_, cod_, nodes_, edges_);
  if (topological_order().size() != nodes_.size()) {
    malformed("diagram contains a cycle");
  }
}

std::size_t Diagram::count(GeneratorKind kind) const {
  return std::count_if(nodes_.begin(), nodes_.end(),
                       [&](const Node& n) { return n.kind == kind; });
}

std::vector<std::size_t> Diagram::topological_order() const {
  std::vector<std::size_t> indegree(nodes_.size(), 0);
  auto succ = successors(nodes_, edges_);
  for (const auto& s : succ) {
    for (std::size_t t : s) ++indegree[t];
  }
  std::deque<std::size_t> ready;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (indegree[i] == 0) ready.push_back(i);
  }
  std::vector<std::size_t> order;
  while (!ready.empty()) {
    std::size_t n = ready.front();
    ready.pop_front();
    order.push_back(n);
    for (std::size_t t : succ[n]) {
      if (--indegree[t] == 0) ready.push_back(t);
    }
  }
  return order;
}

void Environment::bind(std::string name, Relation rel) {
  boxes_.insert_or_assign(std::move(name), std::move(rel));
}

bool Environment::contains(const std::string& name) const {
  return boxes_.count(name) > 0;
}

const Relation& Environment::lookup(const std::string& name) const {
  auto it = boxes_.find(name);
  if (it == boxes_.end()) {
    throw Error(ErrorCode::kUnboundBox, "unbound box '" + name + "'");
  }
  return it->second;
}

// ---------------------------------------------------------------------------

DiagramBuilder::DiagramBuilder(PortType dom) : dom_(std::move(dom)) {}

Bundle DiagramBuilder::inputs() const {
  Bundle out;
  for (std::size_t i = 0; i < dom_.size(); ++i) {
    out.push_back(Wire{Endpoint{Endpoint::kBoundary, i}, dom_[i]});
  }
  return out;
}

Bundle DiagramBuilder::add_node(Node node, std::span<const Wire> args) {
  if (args.size() != node.inputs.size()) {
    throw Error(ErrorCode::kTypeMismatch, "wrong number of wires into '" +
                                              node.name + "'");
  }
  const int id = static_cast<int>(nodes_.size());
  for (std::size_t k = 0; k < args.size(); ++k) {
    if (!same_carrier(args[k].carrier, node.inputs[k])) {
      throw Error(ErrorCode::kTypeMismatch,
                  "wire of carrier '" + args[k].carrier->name() +
                      "' plugged into port of carrier '" +
                      node.inputs[k]->name() + "'");
    }
    edges_.push_back(Edge{args[k].source, Endpoint{id, k}});
  }
  Bundle out;
  for (std::size_t j = 0; j < node.outputs.size(); ++j) {
    out.push_back(Wire{Endpoint{id, j}, node.outputs[j]});
  }
  nodes_.push_back(std::move(node));
  return out;
}

Bundle DiagramBuilder::add_box(std::string name, PortType outputs,
                               std::span<const Wire> args) {
  Node n;
  n.kind = GeneratorKind::kBox;
  n.name = std::move(name);
  n.inputs = type_of(args);
  n.outputs = std::move(outputs);
  return add_node(std::move(n), args);
}

Bundle DiagramBuilder::add_state(std::string label, Relation state) {
  if (!state.is_state()) {
    throw Error(ErrorCode::kTypeMismatch, "add_state: not a state");
  }
  Node n;
  n.kind = GeneratorKind::kState;
  n.name = std::move(label);
  n.outputs = state.cod();
  n.literal = std::make_shared<const Relation>(std::move(state));
  return add_node(std::move(n), {});
}

Bundle DiagramBuilder::add_spider(const CarrierPtr& carrier,
                                  std::span<const Wire> args,
                                  std::size_t outputs) {
  Node n;
  n.kind = GeneratorKind::kSpider;
  n.inputs = repeat(PortType{carrier}, args.size());
  n.outputs = repeat(PortType{carrier}, outputs);
  return add_node(std::move(n), args);
}

Bundle DiagramBuilder::add_cap(const CarrierPtr& carrier) {
  Node n;
  n.kind = GeneratorKind::kCap;
  n.outputs = PortType{carrier, carrier};
  return add_node(std::move(n), {});
}

void DiagramBuilder::add_cup(const Wire& a, const Wire& b) {
  Node n;
  n.kind = GeneratorKind::kCup;
  n.inputs = PortType{a.carrier, a.carrier};
  Wire args[] = {a, b};
  add_node(std::move(n), args);
}

std::vector<Bundle> DiagramBuilder::add_bundle_spider(
    std::span<const Bundle> args, const PortType& type, std::size_t outputs) {
  for (const auto& b : args) {
    if (!(type_of(b) == type)) {
      throw Error(ErrorCode::kTypeMismatch, "bundle spider leg has type " +
                                                type_of(b).to_string() +
                                                ", expected " +
                                                type.to_string());
    }
  }
  std::vector<Bundle> out(outputs);
  for (std::size_t w = 0; w < type.size(); ++w) {
    Bundle legs;
    for (const auto& b : args) legs.push_back(b[w]);
    Bundle produced = add_spider(type[w], legs, outputs);
    for (std::size_t k = 0; k < outputs; ++k) out[k].push_back(produced[k]);
  }
  return out;
}

std::pair<Bundle, Bundle> DiagramBuilder::add_bundle_cap(const PortType& type) {
  Bundle a, b;
  for (const auto& c : type) {
    Bundle legs = add_cap(c);
    a.push_back(legs[0]);
    b.push_back(legs[1]);
  }
  return {a, b};
}

void DiagramBuilder::add_bundle_cup(const Bundle& a, const Bundle& b) {
  if (!(type_of(a) == type_of(b))) {
    throw Error(ErrorCode::kTypeMismatch,
                "cup joins " + type_of(a).to_string() + " and " +
                    type_of(b).to_string());
  }
  for (std::size_t w = 0; w < a.size(); ++w) add_cup(a[w], b[w]);
}

Bundle DiagramBuilder::add_diagram(const Diagram& d,
                                   std::span<const Wire> args) {
  if (!(type_of(args) == d.dom())) {
    throw Error(ErrorCode::kTypeMismatch, "add_diagram: input type mismatch");
  }
  const int offset = static_cast<int>(nodes_.size());
  for (const auto& n : d.nodes()) nodes_.push_back(n);
  Bundle out(d.cod().size());
  for (const auto& e : d.edges()) {
    Endpoint from = e.from.is_boundary()
                        ? args[e.from.port].source
                        : Endpoint{e.from.node + offset, e.from.port};
    if (e.to.is_boundary()) {
      out[e.to.port] = Wire{from, d.cod()[e.to.port]};
    } else {
      edges_.push_back(Edge{from, Endpoint{e.to.node + offset, e.to.port}});
    }
  }
  return out;
}

Diagram DiagramBuilder::finish(std::span<const Wire> outputs) && {
  for (std::size_t j = 0; j < outputs.size(); ++j) {
    edges_.push_back(Edge{outputs[j].source, Endpoint{Endpoint::kBoundary, j}});
  }
  return Diagram(std::move(dom_), type_of(outputs), std::move(nodes_),
                 std::move(edges_));
}

PortType type_of(std::span<const Wire> wires) {
  PortType t;
  for (const auto& w : wires) t.push_back(w.carrier);
  return t;
}

Bundle concat(std::initializer_list<const Bundle*> parts) {
  Bundle out;
  for (const Bundle* p : parts) out.insert(out.end(), p->begin(), p->end());
  return out;
}

// ---------------------------------------------------------------------------

Relation evaluate(const Diagram& d, const Environment& env) {
  const PortIndex ix =
      index_ports(d.dom(), d.cod(), d.nodes(), d.edges());
  FactorGraph g;
  std::vector<FactorGraph::Var> wire(d.edges().size());
  for (std::size_t e = 0; e < d.edges().size(); ++e) {
    const Edge& edge = d.edges()[e];
    wire[e] = g.add_variable(edge.from.is_boundary()
                                 ? d.dom()[edge.from.port]
                                 : d.nodes()[edge.from.node]
                                       .outputs[edge.from.port]);
  }
  for (std::size_t i = 0; i < d.nodes().size(); ++i) {
    const Node& n = d.nodes()[i];
    std::vector<FactorGraph::Var> legs;
    for (std::size_t e : ix.in[i]) legs.push_back(wire[e]);
    for (std::size_t e : ix.out[i]) legs.push_back(wire[e]);
    if (is_spider_like(n)) {
      for (std::size_t k = 1; k < legs.size(); ++k) g.merge(legs[0], legs[k]);
    } else {
      g.add_factor(std::move(legs), generator_relation(n, env));
    }
  }
  std::vector<FactorGraph::Var> keep;
  for (std::size_t e : ix.dom) keep.push_back(wire[e]);
  for (std::size_t e : ix.cod) keep.push_back(wire[e]);
  Relation state = g.solve(keep);
  if (keep.empty()) return state;
  return state.resplit(d.dom().size());
}

Relation evaluate_layered(const Diagram& d, const Environment& env,
                          std::uint64_t seed) {
  const PortIndex ix =
      index_ports(d.dom(), d.cod(), d.nodes(), d.edges());
  std::mt19937_64 rng(seed);

  // The frontier lists the edges currently dangling, in wire order.
  std::vector<std::size_t> frontier = ix.dom;
  PortType frontier_type = d.dom();
  Relation acc = identity(d.dom());

  std::vector<bool> done(d.nodes().size(), false);
  std::size_t remaining = d.nodes().size();
  auto position = [&](std::size_t edge) {
    return static_cast<std::size_t>(
        std::find(frontier.begin(), frontier.end(), edge) - frontier.begin());
  };

  while (remaining > 0) {
    std::vector<std::size_t> ready;
    for (std::size_t i = 0; i < d.nodes().size(); ++i) {
      if (done[i]) continue;
      bool ok = true;
      for (std::size_t e : ix.in[i]) {
        if (position(e) == frontier.size()) { ok = false; break; }
      }
      if (ok) ready.push_back(i);
    }
    if (ready.empty()) malformed("layering stalled");
    std::shuffle(ready.begin(), ready.end(), rng);
    const std::size_t take =
        1 + std::uniform_int_distribution<std::size_t>(
                0, std::min<std::size_t>(ready.size(), 3) - 1)(rng);
    ready.resize(take);

    std::vector<bool> consumed(frontier.size(), false);
    for (std::size_t n : ready) {
      for (std::size_t e : ix.in[n]) consumed[position(e)] = true;
    }
    std::vector<std::size_t> perm;
    std::vector<std::size_t> next;
    for (std::size_t p = 0; p < frontier.size(); ++p) {
      if (!consumed[p]) {
        perm.push_back(p);
        next.push_back(frontier[p]);
      }
    }
    PortType rest_type;
    for (std::size_t p : perm) rest_type.push_back(frontier_type[p]);
    Relation layer = identity(rest_type);
    PortType next_type = rest_type;
    for (std::size_t n : ready) {
      for (std::size_t e : ix.in[n]) perm.push_back(position(e));
      layer = tensor(layer, generator_relation(d.nodes()[n], env));
      for (std::size_t e : ix.out[n]) next.push_back(e);
      for (const auto& c : d.nodes()[n].outputs) next_type.push_back(c);
      done[n] = true;
      --remaining;
    }
    acc = compose(acc, permutation(frontier_type, perm));
    acc = compose(acc, layer);
    frontier = std::move(next);
    frontier_type = std::move(next_type);
  }
  std::vector<std::size_t> perm;
  for (std::size_t e : ix.cod) perm.push_back(position(e));
  return compose(acc, permutation(frontier_type, perm));
}

// ---------------------------------------------------------------------------

Diagram fuse_spiders(const Diagram& d) {
  std::vector<Node> nodes = d.nodes();
  std::vector<Edge> edges = d.edges();
  std::vector<bool> dead(nodes.size(), false);
  auto is_spider = [&](int i) {
    return i >= 0 && !dead[i] && nodes[i].kind == GeneratorKind::kSpider;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (const Edge& link : edges) {
      const int a = link.from.node, b = link.to.node;
      if (!is_spider(a) || !is_spider(b) || a == b) continue;
      const CarrierPtr carrier = spider_carrier(nodes[a]);
      if (!same_carrier(carrier, spider_carrier(nodes[b]))) continue;
      // Merging must not close a cycle through some other node.
      auto succ = successors(nodes, edges, &dead);
      std::vector<std::size_t> start;
      for (std::size_t s : succ[a]) {
        if (s != static_cast<std::size_t>(b)) start.push_back(s);
      }
      if (reachable(succ, start, b)) continue;

      std::size_t a_in = nodes[a].inputs.size();
      std::size_t b_in = 0;
      std::vector<std::size_t> b_in_rank(nodes[b].inputs.size(), 0);
      std::vector<std::size_t> a_out_rank(nodes[a].outputs.size(), 0);
      std::vector<bool> b_in_from_a(nodes[b].inputs.size(), false);
      std::vector<bool> a_out_to_b(nodes[a].outputs.size(), false);
      for (const Edge& e : edges) {
        if (e.from.node == a && e.to.node == b) {
          a_out_to_b[e.from.port] = true;
          b_in_from_a[e.to.port] = true;
        }
      }
      for (std::size_t q = 0; q < b_in_rank.size(); ++q) {
        if (!b_in_from_a[q]) b_in_rank[q] = a_in + b_in++;
      }
      std::size_t a_out = 0;
      for (std::size_t p = 0; p < a_out_rank.size(); ++p) {
        if (!a_out_to_b[p]) a_out_rank[p] = a_out++;
      }
      const std::size_t m = a_in + b_in;
      const std::size_t n = a_out + nodes[b].outputs.size();
      if (m + n == 0 && carrier->empty()) continue;

      std::vector<Edge> rewired;
      for (Edge e : edges) {
        if (e.from.node == a && e.to.node == b) continue;
        if (e.to.node == b) e.to = Endpoint{a, b_in_rank[e.to.port]};
        if (e.from.node == a) e.from.port = a_out_rank[e.from.port];
        if (e.from.node == b) e.from = Endpoint{a, a_out + e.from.port};
        rewired.push_back(e);
      }
      edges = std::move(rewired);
      dead[b] = true;
      if (m + n == 0) {
        dead[a] = true;  // closed network over a non-empty carrier
      } else {
        nodes[a].inputs = repeat(PortType{carrier}, m);
        nodes[a].outputs = repeat(PortType{carrier}, n);
      }
      changed = true;
      break;
    }
  }

  // 1 -> 1 spiders are plain wires.
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!is_spider(static_cast<int>(i)) || nodes[i].inputs.size() != 1 ||
        nodes[i].outputs.size() != 1) {
      continue;
    }
    const int id = static_cast<int>(i);
    auto in = std::find_if(edges.begin(), edges.end(),
                           [&](const Edge& e) { return e.to.node == id; });
    auto out = std::find_if(edges.begin(), edges.end(),
                            [&](const Edge& e) { return e.from.node == id; });
    Edge merged{in->from, out->to};
    const auto in_pos = in - edges.begin();
    const auto out_pos = out - edges.begin();
    edges[in_pos] = merged;
    edges.erase(edges.begin() + out_pos);
    dead[i] = true;
  }
  return compact(d.dom(), d.cod(), nodes, dead, edges);
}

Diagram yank(const Diagram& d) {
  std::vector<Node> nodes = d.nodes();
  std::vector<Edge> edges = d.edges();
  std::vector<bool> dead(nodes.size(), false);

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t li = 0; li < edges.size() && !changed; ++li) {
      const Edge link = edges[li];
      const int c = link.from.node, u = link.to.node;
      if (c < 0 || u < 0 || dead[c] || dead[u]) continue;
      if (nodes[c].kind != GeneratorKind::kCap ||
          nodes[u].kind != GeneratorKind::kCup) {
        continue;
      }
      const std::size_t other_out = 1 - link.from.port;
      const std::size_t other_in = 1 - link.to.port;
      std::size_t e_out = 0, e_in = 0;
      for (std::size_t k = 0; k < edges.size(); ++k) {
        if (edges[k].from.node == c && edges[k].from.port == other_out) e_out = k;
        if (edges[k].to.node == u && edges[k].to.port == other_in) e_in = k;
      }
      if (e_out == e_in) {
        // Closed loop: the scalar "carrier is non-empty".
        if (spider_carrier(nodes[c])->empty()) continue;
        std::vector<Edge> rest;
        for (std::size_t k = 0; k < edges.size(); ++k) {
          if (k != li && k != e_out) rest.push_back(edges[k]);
        }
        edges = std::move(rest);
      } else {
        const Endpoint target = edges[e_out].to;
        const Endpoint source = edges[e_in].from;
        if (!target.is_boundary() && !source.is_boundary()) {
          auto succ = successors(nodes, edges, &dead);
          if (reachable(succ, {static_cast<std::size_t>(target.node)},
                        source.node)) {
            continue;
          }
        }
        std::vector<Edge> rest;
        for (std::size_t k = 0; k < edges.size(); ++k) {
          if (k != li && k != e_out && k != e_in) rest.push_back(edges[k]);
        }
        rest.push_back(Edge{source, target});
        edges = std::move(rest);
      }
      dead[c] = true;
      dead[u] = true;
      changed = true;
    }
  }
  return compact(d.dom(), d.cod(), nodes, dead, edges);
}

}  // namespace relspace
