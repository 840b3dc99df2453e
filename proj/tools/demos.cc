#include "demos.h"

#include <concepts>
#include <functional>
#include <map>

#include "embedded_data.h"
#include "relspace/error.h"
#include "relspace/knowledge.h"
#include "relspace/lexicon.h"
#include "relspace/penrose.h"
#include "relspace/pipeline.h"
#include "relspace/scene_io.h"
#include "render.h"

namespace relspace::cli {
namespace {

std::string braces(const std::vector<std::string>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ", ";
    out += v[i];
  }
  return out + "}";
}

class Report {
 public:
  explicit Report(std::ostream& out) : out_(out) {}

  void check(const std::string& what, const std::string& expected,
             const std::string& computed) {
    const bool ok = expected == computed;
    all_ok_ = all_ok_ && ok;
    out_ << (ok ? "  ok        " : "  MISMATCH  ") << what << "\n"
         << "            expected " << expected << "\n"
         << "            computed " << computed << "\n";
  }
  void check(const std::string& what, std::same_as<bool> auto expected,
             std::same_as<bool> auto computed) {
    check(what, std::string(expected ? "true" : "false"),
          std::string(computed ? "true" : "false"));
  }
  std::ostream& out() { return out_; }
  bool ok() const { return all_ok_; }

 private:
  std::ostream& out_;
  bool all_ok_ = true;
};

Scene scene_of(const std::string& file) { return load_scene(embedded(file)); }
Lexicon lexicon_of(const std::string& file) {
  return Lexicon::from_json(embedded(file));
}

std::vector<std::string> phrase(const std::string& text, const Lexicon& lex,
                                const Scene& scene) {
  return scene.element_labels(
      parse_and_evaluate(text, lex, scene, parse_type("n")).residual());
}

bool demo_chess(Report& r) {
  const Scene scene = scene_of("chess.json");
  const Lexicon lex = lexicon_of("chess_lexicon.json");
  r.out() << render_board(scene, {});
  r.check("pawn", "{a6, b4, c3, e6, f5, g6}", braces(phrase("pawn", lex, scene)));
  r.check("pawn next to a king", "{c3, e6, g6}",
          braces(phrase("pawn next to a king", lex, scene)));
  r.check("pawn that a knight can capture", "{a6, f5, g6}",
          braces(phrase("pawn that a knight can capture", lex, scene)));
  const auto final_answer = phrase(
      "pawn that a knight can capture next to a king", lex, scene);
  r.check("pawn that a knight can capture next to a king", "{g6}",
          braces(final_answer));
  r.out() << render_board(scene, final_answer);
  return r.ok();
}

bool demo_subway(Report& r) {
  const Scene scene = scene_of("subway.json");
  const Lexicon lex = lexicon_of("subway_lexicon.json");
  const Relation& next = scene.relation("next_stop");
  const CarrierPtr st = scene.noun()[0];
  const Relation two = power(next, 2);
  r.check("next stop twice contains (Kai Tak, Hin Keng)", true,
          two.contains({st->index_of("Kai Tak"), st->index_of("Hin Keng")}));
  r.check("next stop twelve times is empty", true, power(next, 12).empty());
  r.check("Diamond Hill is in between Kai Tak and Hin Keng", true,
          scene.relation("in_between")
              .contains({st->index_of("Kai Tak"), st->index_of("Diamond Hill"),
                         st->index_of("Hin Keng")}));
  const auto after = phrase("station one stop after my station", lex, scene);
  r.check("the station one stop after my station", "{Che Kung Temple}",
          braces(after));
  r.out() << render_line(scene, after);
  return r.ok();
}

bool demo_penrose(Report& r) {
  for (int n : {1, 2, 5}) {
    const Scene stairs = build_penrose(n);
    const Relation& up = stairs.relation("move_up");
    r.check("move up " + std::to_string(4 * n) + " times with n = " +
                std::to_string(n),
            "identity",
            power(up, 4 * n) == identity(up.dom()) ? "identity" : "other");
  }
  const Scene scene = scene_of("penrose_circuit.json");
  const Lexicon lex = lexicon_of("above_lexicon.json");
  KnowledgeState k(scene);
  for (const char* s : {"II is above I", "III is above II", "IV is above III",
                        "I is above IV"}) {
    k = k.update(s, lex);
    r.out() << "  asserted: " << s << "\n";
  }
  r.check("the four-flight circuit", "INCONSISTENT (empty joint)",
          k.consistent() ? "CONSISTENT" : "INCONSISTENT (empty joint)");
  return r.ok();
}

bool demo_savannah(Report& r) {
  const Scene scene = scene_of("savannah.json");
  const Lexicon lex = lexicon_of("savannah_lexicon.json");
  r.out() << "  cheetah: 120 km/h for 60 s; ostrich: 100 km/h for 1800 s\n"
          << "  the cheetah next to grass stands at x = 0 m; ostriches next "
             "to trees at 200 m and 500 m\n";
  const auto hunted = phrase(
      "ostrich next to a tree that a cheetah next to grass can capture", lex,
      scene);
  r.check("ostrich next to a tree that a cheetah next to grass can capture",
          "{(20,1,0)}", braces(hunted));
  const Relation& capture = scene.relation("can_capture");
  const CarrierPtr pt = scene.noun()[0], en = scene.noun()[1],
                   sp = scene.noun()[2];
  auto can = [&](const char* hunter, const char* prey) {
    return capture.contains({pt->index_of(hunter), en->index_of("60"),
                             sp->index_of("120"), pt->index_of(prey),
                             en->index_of("1800"), sp->index_of("100")});
  };
  r.check("head start 0.2 km is caught", true, can("(0,1,0)", "(20,1,0)"));
  r.check("head start 0.5 km escapes", false, can("(0,1,0)", "(50,1,0)"));
  return r.ok();
}

bool demo_cheese(Report& r) {
  const Scene scene = scene_of("cheese.json");
  const Lexicon lex = lexicon_of("cheese_lexicon.json");
  const KnowledgeState k =
      KnowledgeState(scene).update("the cheese inside the suitcase stinks", lex);
  r.out() << "  asserted: the cheese inside the suitcase stinks\n";
  const auto facts = derive_facts(
      k, {"the cheese is inside the suitcase", "the cheese stinks",
          "the suitcase stinks"},
      lex);
  r.check("the cheese is inside the suitcase", true, facts[0]);
  r.check("the cheese stinks", true, facts[1]);
  r.check("the suitcase stinks", false, facts[2]);
  return r.ok();
}

bool demo_paris(Report& r) {
  const Scene scene = scene_of("paris.json");
  const Lexicon lex = lexicon_of("paris_lexicon.json");
  KnowledgeState k(scene);
  for (const char* s : {"Alice chases Bob", "Alice is in Paris"}) {
    k = k.update(s, lex);
    r.out() << "  asserted: " << s << "\n";
  }
  r.check("Bob is in Paris", true, k.entails("Bob is in Paris", lex));
  return r.ok();
}

bool demo_above(Report& r) {
  const Scene scene = scene_of("above.json");
  const Lexicon lex = lexicon_of("above_lexicon.json");
  KnowledgeState k(scene);
  for (const char* s :
       {"the painting is above the chest", "the light is above the painting"}) {
    k = k.update(s, lex);
    r.out() << "  asserted: " << s << "\n";
  }
  r.check("the light is above the chest", true,
          k.entails("the light is above the chest", lex));
  r.check("the chest is above the light", false,
          k.entails("the chest is above the light", lex));
  return r.ok();
}

const std::map<std::string, std::function<bool(Report&)>>& demos() {
  static const std::map<std::string, std::function<bool(Report&)>> kDemos = {
      {"above", demo_above},     {"cheese", demo_cheese},
      {"chess", demo_chess},     {"paris", demo_paris},
      {"penrose", demo_penrose}, {"savannah", demo_savannah},
      {"subway", demo_subway}};
  return kDemos;
}

}  // namespace

std::vector<std::string> demo_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : demos()) out.push_back(name);
  return out;
}

bool run_demo(const std::string& name, std::ostream& out) {
  auto it = demos().find(name);
  if (it == demos().end()) {
    throw Error(ErrorCode::kInvalidArgument, "unknown demo '" + name + "'");
  }
  out << "demo " << name << "\n";
  Report report(out);
  const bool ok = it->second(report);
  out << (ok ? "all checks passed" : "some checks FAILED") << "\n";
  return ok;
}

}  // namespace relspace::cli
