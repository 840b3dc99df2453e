#ifndef RELSPACE_DIAGRAM_H_
#define RELSPACE_DIAGRAM_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "relspace/carrier.h"
#include "relspace/relation.h"

namespace relspace {

enum class GeneratorKind {
  kBox,     // named relation, bound through an Environment
  kState,   // literal relation carried by the node, no inputs
  kSpider,  // all legs equal; inputs/outputs on a single carrier
  kCap,     // spider 0 -> 2
  kCup,     // spider 2 -> 0
};

const char* generator_kind_name(GeneratorKind kind);

struct Node {
  GeneratorKind kind = GeneratorKind::kBox;
  std::string name;  // box name or state label; empty for spiders
  PortType inputs;
  PortType outputs;
  std::shared_ptr<const Relation> literal;  // kState only
};

// A port of a node, or of the diagram boundary when node == kBoundary.  As
// the source of an edge a boundary endpoint is a dom port; as the target it
// is a cod port.
struct Endpoint {
  static constexpr int kBoundary = -1;
  int node = kBoundary;
  std::size_t port = 0;

  bool is_boundary() const { return node == kBoundary; }
  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

struct Edge {
  Endpoint from;  // node output or dom port
  Endpoint to;    // node input or cod port
};

// An open string diagram read top to bottom.  Every node output and every
// dom port feeds exactly one edge; every node input and every cod port is fed
// by exactly one edge; edges join equal carriers; the graph is acyclic.
class Diagram {
 public:
  // Validates all invariants; throws kMalformedDiagram.
  Diagram(PortType dom, PortType cod, std::vector<Node> nodes,
          std::vector<Edge> edges);

  const PortType& dom() const { return dom_; }
  const PortType& cod() const { return cod_; }
  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::size_t count(GeneratorKind kind) const;
  // Nodes in an order where every node follows its predecessors.
  std::vector<std::size_t> topological_order() const;

 private:
  PortType dom_;
  PortType cod_;
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
};

// Box name -> relation.
class Environment {
 public:
  void bind(std::string name, Relation rel);
  bool contains(const std::string& name) const;
  // Throws kUnboundBox.
  const Relation& lookup(const std::string& name) const;
  const std::map<std::string, Relation>& bindings() const { return boxes_; }

 private:
  std::map<std::string, Relation> boxes_;
};

// A dangling wire inside a DiagramBuilder: the endpoint that produces it and
// the carrier it transports.
struct Wire {
  Endpoint source;
  CarrierPtr carrier;
};
using Bundle = std::vector<Wire>;

// Builds diagrams in dataflow style.  Each wire returned by the builder must
// be consumed exactly once, either by a later node or as a final output.
class DiagramBuilder {
 public:
  explicit DiagramBuilder(PortType dom = {});

  Bundle inputs() const;

  Bundle add_box(std::string name, PortType outputs,
                 std::span<const Wire> args);
  Bundle add_state(std::string label, Relation state);
  Bundle add_spider(const CarrierPtr& carrier, std::span<const Wire> args,
                    std::size_t outputs);
  Bundle add_cap(const CarrierPtr& carrier);
  void add_cup(const Wire& a, const Wire& b);

  // Per-carrier spiders across bundles: every leg is a whole bundle.  The
  // result holds `outputs` bundles laid out one after the other.
  std::vector<Bundle> add_bundle_spider(std::span<const Bundle> args,
                                        const PortType& type,
                                        std::size_t outputs);
  // Bundle-wise cap (two bundles) and cup.
  std::pair<Bundle, Bundle> add_bundle_cap(const PortType& type);
  void add_bundle_cup(const Bundle& a, const Bundle& b);

  // Inlines a whole diagram fed by `args`; returns its cod wires.
  Bundle add_diagram(const Diagram& d, std::span<const Wire> args);

  Diagram finish(std::span<const Wire> outputs) &&;

 private:
  Bundle add_node(Node node, std::span<const Wire> args);

  PortType dom_;
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
};

PortType type_of(std::span<const Wire> wires);
Bundle concat(std::initializer_list<const Bundle*> parts);

// Evaluates by contraction: wires become variables, spiders identify them,
// boxes and states constrain them.  Throws kUnboundBox or kTypeMismatch.
Relation evaluate(const Diagram& d, const Environment& env);

// Evaluates by slicing the diagram into layers, each the tensor of a few
// generators and identity wires, glued with permutations and sequential
// composition.  `seed` picks the topological order and the layer grouping.
// Exponential in the widest layer; meant for small diagrams.
Relation evaluate_layered(const Diagram& d, const Environment& env,
                          std::uint64_t seed = 0);

// Merges every connected cluster of same-carrier spiders into one spider and
// removes the resulting 1->1 spiders.
Diagram fuse_spiders(const Diagram& d);

// Straightens cap/cup pairs joined by a wire and drops closed loops over
// non-empty carriers.
Diagram yank(const Diagram& d);

}  // namespace relspace

#endif  // RELSPACE_DIAGRAM_H_
