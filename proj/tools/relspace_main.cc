#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "demos.h"
#include "json.hpp"
#include "relspace/diagram_json.h"
#include "relspace/error.h"
#include "relspace/knowledge.h"
#include "relspace/lexicon.h"
#include "relspace/pipeline.h"
#include "relspace/scene_io.h"
#include "render.h"

namespace {

using namespace relspace;

// Exit codes are part of the interface.
constexpr int kExitOk = 0;
constexpr int kExitNotEntailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitUnknownWord = 3;
constexpr int kExitScene = 4;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNoParse:
    case ErrorCode::kLexicon:
      return kExitParse;
    case ErrorCode::kUnknownWord:
      return kExitUnknownWord;
    default:
      return kExitScene;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kScene, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

cli::RenderFormat render_format(const std::string& s) {
  return s == "json" ? cli::RenderFormat::kJson : cli::RenderFormat::kText;
}

// Scene used for grammar-only dumps when no scene is given.  Capitalised
// words missing from the lexicon become its inhabitants.
Scene placeholder_scene(const std::string& phrase, const Lexicon& lex) {
  Scene s;
  s.kind = "none";
  s.space = Space{"entity", {make_carrier("entity", {"e"})}};
  std::istringstream words(phrase);
  std::string w;
  while (words >> w) {
    if (std::isupper(static_cast<unsigned char>(w[0])) && !lex.find(w) &&
        !s.has_inhabitant(w)) {
      s.add_inhabitant(w);
    }
  }
  return s;
}

nlohmann::json diagram_summary(const Diagram& d) {
  return nlohmann::json::parse(diagram_to_json(d, -1));
}

nlohmann::json dump(const std::string& phrase, const Lexicon& lex,
                    const Scene* scene) {
  const Scene fallback = placeholder_scene(phrase, lex);
  const Scene& sc = scene ? *scene : fallback;
  const auto tokens = tokenize(phrase, lex, sc.inhabitant_names);
  PregroupType target = parse_type("n");
  const Sentence words = [&] {
    try {
      return build_sentence(tokens, sc, target, WordStyle::kOpaque);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNoParse) throw;
    }
    target = parse_type("s");
    return build_sentence(tokens, sc, target, WordStyle::kOpaque);
  }();
  nlohmann::json j;
  j["phrase"] = phrase;
  nlohmann::json types = nlohmann::json::array();
  for (const auto& t : tokens) {
    types.push_back({{"token", t.text},
                     {"type", t.is_name() ? "n" : to_string(t.entry->type)}});
  }
  j["parse"] = {{"target", to_string(target)},
                {"words", types},
                {"links", words.parse.links},
                {"residual", words.parse.residual}};
  j["words"] = diagram_summary(words.diagram);
  j["node_counts"]["words"] = words.diagram.nodes().size();
  if (scene) {
    const Sentence inlined = build_sentence(tokens, sc, target);
    const Diagram rewritten = yank(fuse_spiders(inlined.diagram));
    j["inlined"] = diagram_summary(inlined.diagram);
    j["rewritten"] = diagram_summary(rewritten);
    j["node_counts"]["inlined"] = inlined.diagram.nodes().size();
    j["node_counts"]["rewritten"] = rewritten.nodes().size();
  }
  return j;
}

int run(int argc, char** argv) {
  CLI::App app{"relspace: spatial phrases as string diagrams over finite relations"};
  app.require_subcommand(1);

  std::string scene_path, lexicon_path, phrase, render = "text", conclusion,
              diagram_path, demo_name;
  std::vector<std::string> premises;
  bool dump_diagram = false;

  auto* eval = app.add_subcommand("eval", "Evaluate a phrase in a scene");
  eval->add_option("--scene", scene_path, "Scene JSON or FEN file")->required();
  eval->add_option("--lexicon", lexicon_path, "Lexicon JSON file")->required();
  eval->add_option("--phrase", phrase, "Phrase to evaluate")->required();
  eval->add_option("--render", render, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  eval->add_flag("--dump-diagram", dump_diagram,
                 "Also print the phrase diagram as JSON");

  auto* infer = app.add_subcommand("infer", "Check an entailment");
  infer->add_option("--scene", scene_path, "Scene JSON file")->required();
  infer->add_option("--lexicon", lexicon_path, "Lexicon JSON file")->required();
  infer->add_option("--premise", premises, "Premise sentence (repeatable)");
  infer->add_option("--conclusion", conclusion, "Conclusion sentence")
      ->required();

  auto* demo = app.add_subcommand("demo", "Run a built-in scenario");
  demo->add_option("name", demo_name, "Scenario name or 'all'")
      ->required()
      ->check(CLI::IsMember([] {
        auto names = cli::demo_names();
        names.push_back("all");
        return names;
      }()));

  auto* dump_cmd =
      app.add_subcommand("dump-diagram", "Print a phrase diagram as JSON");
  dump_cmd->add_option("--lexicon", lexicon_path, "Lexicon JSON file")
      ->required();
  dump_cmd->add_option("--phrase", phrase, "Phrase")->required();
  dump_cmd->add_option("--scene", scene_path,
                       "Scene; adds the expanded and rewritten diagrams");

  auto* eval_diagram =
      app.add_subcommand("eval-diagram", "Evaluate a diagram JSON file");
  eval_diagram->add_option("--diagram", diagram_path, "Diagram JSON file")
      ->required();
  eval_diagram->add_option("--scene", scene_path,
                           "Scene whose relations bind the boxes");
  eval_diagram->add_option("--render", render, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*eval) {
      const Scene scene = load_scene_file(scene_path);
      const Lexicon lex = Lexicon::load(lexicon_path);
      const Meaning m = parse_and_evaluate(phrase, lex, scene);
      std::cout << cli::render_meaning(scene, phrase, m, render_format(render));
      if (dump_diagram) std::cout << dump(phrase, lex, &scene).dump(2) << "\n";
      return kExitOk;
    }
    if (*infer) {
      const Scene scene = load_scene_file(scene_path);
      const Lexicon lex = Lexicon::load(lexicon_path);
      KnowledgeState k(scene);
      for (const auto& p : premises) k = k.update(p, lex);
      const bool entailed = k.entails(conclusion, lex);
      std::cout << (entailed ? "ENTAILED" : "NOT-ENTAILED") << "\n";
      return entailed ? kExitOk : kExitNotEntailed;
    }
    if (*demo) {
      bool ok = true;
      if (demo_name == "all") {
        for (const auto& name : cli::demo_names()) {
          ok = cli::run_demo(name, std::cout) && ok;
        }
      } else {
        ok = cli::run_demo(demo_name, std::cout);
      }
      return ok ? kExitOk : 1;
    }
    if (*dump_cmd) {
      const Lexicon lex = Lexicon::load(lexicon_path);
      std::optional<Scene> scene;
      if (!scene_path.empty()) scene = load_scene_file(scene_path);
      std::cout << dump(phrase, lex, scene ? &*scene : nullptr).dump(2) << "\n";
      return kExitOk;
    }
    if (*eval_diagram) {
      const Diagram d = diagram_from_json(read_file(diagram_path));
      Environment env;
      if (!scene_path.empty()) env = load_scene_file(scene_path).environment();
      const Relation r = evaluate(d, env);
      if (render_format(render) == cli::RenderFormat::kJson) {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t i = 0; i < r.size(); ++i) {
          nlohmann::json row = nlohmann::json::array();
          auto cells = r.row(i);
          for (std::size_t c = 0; c < cells.size(); ++c) {
            const auto& carrier =
                c < r.dom().size() ? r.dom()[c] : r.cod()[c - r.dom().size()];
            row.push_back(carrier->label(cells[c]));
          }
          rows.push_back(row);
        }
        std::cout << nlohmann::json{{"dom", r.dom().to_string()},
                                    {"cod", r.cod().to_string()},
                                    {"rows", rows}}
                         .dump(2)
                  << "\n";
      } else {
        std::cout << r.to_string() << "\n";
      }
      return kExitOk;
    }
  } catch (const Error& e) {
    std::cerr << "relspace: " << error_code_name(e.code()) << ": " << e.what()
              << "\n";
    return exit_code_for(e.code());
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
