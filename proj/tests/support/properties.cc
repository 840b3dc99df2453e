#include "properties.h"

#include <algorithm>
#include <functional>
#include <sstream>

#include "oracles.h"
#include "relspace/diagram.h"
#include "relspace/knowledge.h"
#include "relspace/relation.h"
#include "relspace/space.h"

namespace relspace::testing {
namespace {

// Runs `body` once per case; a false return or an exception counts as a
// failure, and the first one is kept for the report.
PropertyReport run(const std::string& name, std::uint64_t seed,
                   std::size_t cases,
                   const std::function<bool(Rng&, std::string&)>& body) {
  PropertyReport rep{name, cases, 0, ""};
  Rng rng(seed);
  for (std::size_t i = 0; i < cases; ++i) {
    std::string why;
    bool ok = false;
    try {
      ok = body(rng, why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    if (!ok) {
      if (rep.failures == 0) {
        rep.first_failure = "case " + std::to_string(i) + ": " + why;
      }
      ++rep.failures;
    }
  }
  return rep;
}

struct RandomDiagram {
  Diagram diagram;
  Environment env;
};

Wire take(Rng& rng, std::vector<Wire>& pool) {
  const std::size_t i = pick(rng, 0, pool.size() - 1);
  Wire w = pool[i];
  pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(i));
  return w;
}

// Spiders, caps, cups, states and bound boxes over carriers of one to four
// elements, at most five live wires at a time.
RandomDiagram random_diagram(Rng& rng) {
  PortType dom = random_type(rng, 0, 2);
  DiagramBuilder b(dom);
  Environment env;
  std::vector<Wire> pool = b.inputs();
  const std::size_t steps = pick(rng, 1, 7);
  std::size_t boxes = 0;
  for (std::size_t s = 0; s < steps; ++s) {
    const std::size_t op = pick(rng, 0, 4);
    if (op == 0 && !pool.empty()) {
      const CarrierPtr c = pool[pick(rng, 0, pool.size() - 1)].carrier;
      std::vector<Wire> args;
      const std::size_t want = pick(rng, 1, 3);
      for (std::size_t k = 0; k < want; ++k) {
        auto it = std::find_if(pool.begin(), pool.end(), [&](const Wire& w) {
          return same_carrier(w.carrier, c);
        });
        if (it == pool.end()) break;
        args.push_back(*it);
        pool.erase(it);
      }
      const std::size_t outs = pick(rng, 0, pool.size() < 4 ? 2 : 0);
      for (const Wire& w : b.add_spider(c, args, outs)) pool.push_back(w);
    } else if (op == 1 && pool.size() < 4) {
      const PortType t = random_type(rng, 1, 2, 3);
      for (const Wire& w : b.add_state("s" + std::to_string(s),
                                       random_state(rng, t, 0.5))) {
        pool.push_back(w);
      }
    } else if (op == 2 && !pool.empty() && boxes < 8) {
      std::vector<Wire> args;
      args.push_back(take(rng, pool));
      if (!pool.empty() && pick(rng, 0, 1)) args.push_back(take(rng, pool));
      const PortType in = type_of(args);
      const PortType out = random_type(rng, 1, pool.size() < 3 ? 2 : 1, 3);
      const std::string name = "f" + std::to_string(boxes++);
      env.bind(name, random_relation(rng, in, out, 0.5));
      for (const Wire& w : b.add_box(name, out, args)) pool.push_back(w);
    } else if (op == 3 && pool.size() < 4) {
      for (const Wire& w : b.add_cap(sized_carrier(pick(rng, 1, 4)))) {
        pool.push_back(w);
      }
    } else if (op == 4 && pool.size() >= 2) {
      const Wire a = take(rng, pool);
      auto it = std::find_if(pool.begin(), pool.end(), [&](const Wire& w) {
        return same_carrier(w.carrier, a.carrier);
      });
      if (it == pool.end()) {
        pool.push_back(a);
      } else {
        const Wire other = *it;
        pool.erase(it);
        b.add_cup(a, other);
      }
    }
  }
  std::shuffle(pool.begin(), pool.end(), rng);
  return {std::move(b).finish(pool), std::move(env)};
}

// A wire pushed through a random sequence of left and right zigzags, with
// states and boxes sprinkled between them.
RandomDiagram random_zigzags(Rng& rng) {
  const CarrierPtr c = sized_carrier(pick(rng, 1, 4));
  DiagramBuilder b(PortType{c});
  Environment env;
  Wire w = b.inputs()[0];
  const std::size_t steps = pick(rng, 1, 5);
  for (std::size_t s = 0; s < steps; ++s) {
    switch (pick(rng, 0, 2)) {
      case 0: {
        Bundle cap = b.add_cap(c);
        b.add_cup(w, cap[0]);
        w = cap[1];
        break;
      }
      case 1: {
        Bundle cap = b.add_cap(c);
        b.add_cup(cap[1], w);
        w = cap[0];
        break;
      }
      default: {
        const std::string name = "g" + std::to_string(s);
        env.bind(name, random_relation(rng, PortType{c}, PortType{c}, 0.5));
        std::vector<Wire> args{w};
        w = b.add_box(name, PortType{c}, args)[0];
      }
    }
  }
  std::vector<Wire> out{w};
  return {std::move(b).finish(out), std::move(env)};
}

Relation unknown_state(const PortType& t) { return unknown(t); }

}  // namespace

PropertyReport snake_equations(std::uint64_t seed, std::size_t cases) {
  return run("snake equations", seed, cases, [](Rng& rng, std::string& why) {
    const PortType t = random_type(rng, 1, 2);
    const Relation id = identity(t);
    const Relation left =
        compose(tensor(identity(t), cap(t)), tensor(cup(t), identity(t)));
    const Relation right =
        compose(tensor(cap(t), identity(t)), tensor(identity(t), cup(t)));
    DiagramBuilder b(t);
    Bundle in = b.inputs();
    auto [x, y] = b.add_bundle_cap(t);
    b.add_bundle_cup(in, x);
    const Diagram d = std::move(b).finish(y);
    const Relation drawn = evaluate(d, Environment{});
    const Relation straightened = evaluate(yank(d), Environment{});
    why = "type " + t.to_string();
    return left == id && right == id && drawn == id && straightened == id &&
           yank(d).count(GeneratorKind::kCap) == 0;
  });
}

PropertyReport spider_fusion(std::uint64_t seed, std::size_t cases) {
  return run("spider fusion preserves evaluation", seed, cases,
             [seed](Rng& rng, std::string& why) {
               RandomDiagram rd = random_diagram(rng);
               const Relation direct = evaluate(rd.diagram, rd.env);
               const Diagram fused = fuse_spiders(rd.diagram);
               const Relation after = evaluate(fused, rd.env);
               const Relation layered =
                   evaluate_layered(rd.diagram, rd.env, seed + rng());
               why = "direct " + direct.to_string() + " fused " +
                     after.to_string() + " layered " + layered.to_string();
               return direct == after && direct == layered &&
                      fused.nodes().size() <= rd.diagram.nodes().size();
             });
}

PropertyReport yanking(std::uint64_t seed, std::size_t cases) {
  return run("yank preserves evaluation", seed, cases,
             [](Rng& rng, std::string& why) {
               RandomDiagram rd =
                   pick(rng, 0, 1) ? random_zigzags(rng) : random_diagram(rng);
               const Relation before = evaluate(rd.diagram, rd.env);
               const Relation after = evaluate(yank(rd.diagram), rd.env);
               why = before.to_string() + " vs " + after.to_string();
               return before == after;
             });
}

PropertyReport compose_oracle(std::uint64_t seed, std::size_t cases) {
  return run("compose matches enumeration", seed, cases,
             [](Rng& rng, std::string& why) {
               const PortType x = random_type(rng, 0, 2);
               const PortType y = random_type(rng, 0, 2);
               const PortType z = random_type(rng, 0, 2);
               const Relation r = random_relation(rng, x, y);
               const Relation s = random_relation(rng, y, z);
               why = r.to_string() + " ; " + s.to_string();
               return compose(r, s) == oracle_compose(r, s);
             });
}

PropertyReport tensor_oracle(std::uint64_t seed, std::size_t cases) {
  return run("tensor matches enumeration", seed, cases,
             [](Rng& rng, std::string& why) {
               const Relation r = random_relation(
                   rng, random_type(rng, 0, 1), random_type(rng, 0, 2));
               const Relation s = random_relation(
                   rng, random_type(rng, 0, 1), random_type(rng, 0, 2));
               const Relation t = tensor(r, s);
               why = r.to_string() + " x " + s.to_string();
               return t == oracle_tensor(r, s) && t.size() == r.size() * s.size();
             });
}

PropertyReport apply_state_oracle(std::uint64_t seed, std::size_t cases) {
  return run("apply_state matches pointwise images", seed, cases,
             [](Rng& rng, std::string& why) {
               const PortType x = random_type(rng, 0, 2);
               const Relation box =
                   random_relation(rng, x, random_type(rng, 0, 2));
               const Relation st = random_state(rng, x);
               why = box.to_string() + " on " + st.to_string();
               return apply_state(box, st) == oracle_apply(box, st);
             });
}

PropertyReport and_is_intersection(std::uint64_t seed, std::size_t cases) {
  return run("AND equals set intersection", seed, cases,
             [](Rng& rng, std::string& why) {
               const PortType t = random_type(rng, 0, 3);
               const Relation q = random_state(rng, t, 0.6);
               const Relation r = random_state(rng, t, 0.6);
               const Relation both = and_states(q, r);
               why = q.to_string() + " & " + r.to_string();
               return both == oracle_intersection(q, r) &&
                      both == and_states(r, q) && and_states(q, q) == q &&
                      and_states(q, unknown_state(t)) == q;
             });
}

PropertyReport update_laws(std::uint64_t seed, std::size_t cases) {
  return run(
      "update is monotone, commutative and idempotent", seed, cases,
      [](Rng& rng, std::string& why) {
        Scene scene;
        scene.kind = "toy";
        scene.space = Space{"toy", random_type(rng, 1, 2, 3)};
        const std::vector<std::string> names = {"A", "B", "C"};
        for (const auto& n : names) scene.add_inhabitant(n);
        const PortType noun = scene.noun();

        auto random_meaning = [&] {
          std::vector<std::string> who = names;
          std::shuffle(who.begin(), who.end(), rng);
          who.resize(pick(rng, 1, 2));
          return Meaning{random_state(rng, repeat(noun, who.size()), 0.6), who,
                         noun, 0};
        };
        const KnowledgeState k0 =
            KnowledgeState(scene).update(random_meaning());
        const Meaning a = random_meaning(), b = random_meaning();
        const Relation j0 = k0.joint();
        const Relation ja = k0.update(a).joint();
        const Relation jab = k0.update(a).update(b).joint();
        const Relation jba = k0.update(b).update(a).joint();
        const Relation jaa = k0.update(a).update(a).joint();

        // Brute force: keep the joint tuples whose participant slices lie
        // in the meaning.
        const std::size_t w = noun.size();
        std::set<Tuple> expect;
        for (const auto& t : all_tuples(repeat(noun, names.size()))) {
          if (!j0.contains(t)) continue;
          Tuple slice;
          for (const auto& p : a.participants) {
            const std::size_t i = static_cast<std::size_t>(
                std::find(names.begin(), names.end(), p) - names.begin());
            slice.insert(slice.end(), t.begin() + i * w,
                         t.begin() + (i + 1) * w);
          }
          if (a.state.contains(slice)) expect.insert(t);
        }
        why = "noun " + noun.to_string();
        return is_subset(ja, j0) && jab == jba && jaa == ja &&
               ja == from_rows({}, j0.cod(), expect);
      });
}

PropertyReport infers_preorder(std::uint64_t seed, std::size_t cases) {
  return run("infers is a preorder", seed, cases,
             [](Rng& rng, std::string& why) {
               const PortType t = random_type(rng, 1, 2);
               const Relation a = random_state(rng, t, 0.3);
               // b and c grow from a by adding rows.
               auto grow = [&](const Relation& base) {
                 auto rows = row_set(base);
                 for (const auto& row : all_tuples(t)) {
                   if (pick(rng, 0, 2) == 0) rows.insert(row);
                 }
                 return from_rows({}, t, rows);
               };
               const Relation b = grow(a);
               const Relation c = grow(b);
               const Relation other = random_state(rng, t, 0.5);
               const Relation empty(PortType{}, t);
               why = a.to_string() + " / " + other.to_string();
               return infers(a, a) && infers(a, b) && infers(b, c) &&
                      infers(a, c) && infers(a, unknown(t)) &&
                      infers(empty, a) &&
                      infers(a, other) == is_subset(a, other) &&
                      infers(other, a) == is_subset(other, a);
             });
}

PropertyReport bend_round_trip(std::uint64_t seed, std::size_t cases) {
  return run("bend round trips", seed, cases, [](Rng& rng, std::string& why) {
    const Relation r = random_relation(rng, random_type(rng, 0, 2),
                                       random_type(rng, 0, 2));
    const std::size_t k = pick(rng, 0, r.arity());
    const Relation bent = bend(r, k);
    why = r.to_string() + " to split " + std::to_string(k);
    return bent == r.resplit(k) && bend(bent, r.dom().size()) == r &&
           bent.dom().size() == k;
  });
}

std::vector<PropertyReport> all_properties(std::uint64_t seed,
                                           std::size_t cases) {
  return {snake_equations(seed, cases),   spider_fusion(seed + 1, cases),
          yanking(seed + 2, cases),       compose_oracle(seed + 3, cases),
          tensor_oracle(seed + 4, cases), apply_state_oracle(seed + 5, cases),
          and_is_intersection(seed + 6, cases), update_laws(seed + 7, cases),
          infers_preorder(seed + 8, cases),     bend_round_trip(seed + 9, cases)};
}

}  // namespace relspace::testing
