#include "relspace/diagram_json.h"

#include <map>

#include "json.hpp"
#include "relspace/error.h"

namespace relspace {
namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) {
  throw Error(ErrorCode::kMalformedDiagram, "diagram json: " + what);
}

class CarrierTable {
 public:
  const std::string& add(const CarrierPtr& c) {
    auto [it, inserted] = by_name_.emplace(c->name(), c);
    if (inserted) {
      order_.push_back(c);
    } else if (!same_carrier(it->second, c)) {
      bad("two different carriers named '" + c->name() + "'");
    }
    return c->name();
  }
  json names(const PortType& t) {
    json out = json::array();
    for (const auto& c : t) out.push_back(add(c));
    return out;
  }
  const std::vector<CarrierPtr>& order() const { return order_; }

 private:
  std::map<std::string, CarrierPtr> by_name_;
  std::vector<CarrierPtr> order_;
};

GeneratorKind kind_from_name(const std::string& s) {
  for (auto k : {GeneratorKind::kBox, GeneratorKind::kState,
                 GeneratorKind::kSpider, GeneratorKind::kCap,
                 GeneratorKind::kCup}) {
    if (s == generator_kind_name(k)) return k;
  }
  bad("unknown node kind '" + s + "'");
}

json endpoint_json(const Endpoint& e) {
  return json{{"node", e.node}, {"port", e.port}};
}

Endpoint endpoint_from(const json& j) {
  return Endpoint{j.at("node").get<int>(), j.at("port").get<std::size_t>()};
}

}  // namespace

std::string diagram_to_json(const Diagram& d, int indent) {
  CarrierTable table;
  json boundary = json::array();
  for (std::size_t i = 0; i < d.dom().size(); ++i) {
    boundary.push_back({{"side", "dom"}, {"port", i},
                        {"carrier", table.add(d.dom()[i])}});
  }
  for (std::size_t i = 0; i < d.cod().size(); ++i) {
    boundary.push_back({{"side", "cod"}, {"port", i},
                        {"carrier", table.add(d.cod()[i])}});
  }
  json nodes = json::array();
  for (const Node& n : d.nodes()) {
    json j{{"kind", generator_kind_name(n.kind)},
           {"name", n.name},
           {"inputs", table.names(n.inputs)},
           {"outputs", table.names(n.outputs)}};
    if (n.literal) {
      json rows = json::array();
      for (std::size_t r = 0; r < n.literal->size(); ++r) {
        auto row = n.literal->row(r);
        json labels = json::array();
        for (std::size_t c = 0; c < row.size(); ++c) {
          labels.push_back(n.outputs[c]->label(row[c]));
        }
        rows.push_back(std::move(labels));
      }
      j["rows"] = std::move(rows);
    }
    nodes.push_back(std::move(j));
  }
  json edges = json::array();
  for (const Edge& e : d.edges()) {
    edges.push_back({{"from", endpoint_json(e.from)},
                     {"to", endpoint_json(e.to)}});
  }
  json carriers = json::array();
  for (const auto& c : table.order()) {
    carriers.push_back({{"name", c->name()}, {"labels", c->labels()}});
  }
  json out{{"carriers", std::move(carriers)},
           {"boundary", std::move(boundary)},
           {"nodes", std::move(nodes)},
           {"edges", std::move(edges)}};
  return out.dump(indent);
}

Diagram diagram_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    bad(e.what());
  }
  try {
    std::map<std::string, CarrierPtr> carriers;
    for (const auto& c : j.at("carriers")) {
      auto name = c.at("name").get<std::string>();
      carriers[name] = make_carrier(
          name, c.at("labels").get<std::vector<std::string>>());
    }
    auto carrier = [&](const json& name) -> CarrierPtr {
      auto it = carriers.find(name.get<std::string>());
      if (it == carriers.end()) bad("undeclared carrier " + name.dump());
      return it->second;
    };
    auto port_type = [&](const json& arr) {
      PortType t;
      for (const auto& name : arr) t.push_back(carrier(name));
      return t;
    };

    std::map<std::size_t, CarrierPtr> dom_ports, cod_ports;
    for (const auto& b : j.at("boundary")) {
      auto side = b.at("side").get<std::string>();
      auto& target = side == "dom"   ? dom_ports
                     : side == "cod" ? cod_ports
                                     : (bad("bad boundary side"), dom_ports);
      if (!target.emplace(b.at("port").get<std::size_t>(),
                          carrier(b.at("carrier")))
               .second) {
        bad("duplicate boundary port");
      }
    }
    auto dense = [&](const std::map<std::size_t, CarrierPtr>& m) {
      PortType t;
      std::size_t expect = 0;
      for (const auto& [port, c] : m) {
        if (port != expect++) bad("boundary ports are not contiguous");
        t.push_back(c);
      }
      return t;
    };

    std::vector<Node> nodes;
    for (const auto& jn : j.at("nodes")) {
      Node n;
      n.kind = kind_from_name(jn.at("kind").get<std::string>());
      n.name = jn.value("name", std::string());
      n.inputs = port_type(jn.at("inputs"));
      n.outputs = port_type(jn.at("outputs"));
      if (n.kind == GeneratorKind::kState) {
        RelationBuilder rb({}, n.outputs);
        std::vector<Index> row(n.outputs.size());
        for (const auto& jr : jn.at("rows")) {
          if (jr.size() != row.size()) bad("state row has wrong arity");
          for (std::size_t c = 0; c < row.size(); ++c) {
            row[c] = n.outputs[c]->index_of(jr[c].get<std::string>());
          }
          rb.add(row);
        }
        n.literal = std::make_shared<const Relation>(std::move(rb).build());
      }
      nodes.push_back(std::move(n));
    }
    std::vector<Edge> edges;
    for (const auto& je : j.at("edges")) {
      edges.push_back(Edge{endpoint_from(je.at("from")),
                           endpoint_from(je.at("to"))});
    }
    return Diagram(dense(dom_ports), dense(cod_ports), std::move(nodes),
                   std::move(edges));
  } catch (const json::exception& e) {
    bad(e.what());
  }
}

}  // namespace relspace
