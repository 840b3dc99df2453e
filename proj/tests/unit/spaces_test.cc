#include <cstdlib>
#include <map>
#include <set>

#include "doctest.h"
#include "oracles.h"
#include "relspace/chess.h"
#include "relspace/error.h"
#include "relspace/grid.h"
#include "relspace/penrose.h"
#include "relspace/scene_io.h"
#include "relspace/space.h"
#include "relspace/subway.h"

using namespace relspace;
using relspace::testing::all_tuples;
using relspace::testing::from_rows;
using relspace::testing::labels_of;
using relspace::testing::sized_carrier;
using relspace::testing::Tuple;

namespace {

using Labels = std::vector<std::string>;

const char* kFen = "4r3/2n2k2/P3p1p1/5p2/1P1K3N/2PQ4/r4B2/8";

Relation squares_state(std::initializer_list<const char*> squares) {
  RelationBuilder b({}, {chess_squares()});
  for (const char* s : squares) b.add({chess_squares()->index_of(s)});
  return std::move(b).build();
}

int file_of(Index sq) { return static_cast<int>(sq) / 8; }
int rank_of(Index sq) { return static_cast<int>(sq) % 8; }

Grid small_grid(int x, int y, int z) {
  return Grid(GridSpec{{{"x", 0, x}, {"y", 0, y}, {"z", 0, z}}, Rational(1),
                       Rational(1), {}});
}

}  // namespace

TEST_SUITE("space") {

TEST_CASE("augment multiplies sizes") {
  const Space board{"board", {chess_squares()}};
  const Space aug = augment(board, chess_kinds());
  CHECK(aug.size() == 64 * 6);
  CHECK(aug.factor_index("kind") == 1);
  const Space same = augment(board, make_carrier("one", {"*"}));
  CHECK(same.size() == board.size());
}

TEST_CASE("size bound") {
  CHECK(max_space_size() >= 1);
  CHECK_NOTHROW(check_space_size(10, "tiny"));
  CHECK_THROWS_AS(check_space_size(max_space_size() + 1, "huge"), Error);
  ::setenv("RELSPACE_MAX_SPACE", "100", 1);
  CHECK(max_space_size() == 100);
  CHECK_THROWS_AS(small_grid(9, 9, 9), Error);
  ::unsetenv("RELSPACE_MAX_SPACE");
  CHECK(max_space_size() == kDefaultMaxSpace);
}

TEST_CASE("widen leaves trailing factors free") {
  const auto x = sized_carrier(3), f = sized_carrier(2);
  const Space s{"s", {x, f}};
  RelationBuilder b({x}, {x});
  b.add({0, 1});
  const Relation r = std::move(b).build();
  const Relation w = widen(r, s);
  CHECK(w.size() == 4);
  CHECK(w.contains({0, 0, 1, 1}));
  CHECK(w.contains({0, 1, 1, 0}));
  const Relation st = widen_state(Relation::from_cells({}, {x}, {2}), s);
  CHECK(st.size() == 2);
  CHECK_THROWS_AS(widen(identity({f}), s), Error);
}

}  // TEST_SUITE

TEST_SUITE("chess") {

TEST_CASE("FEN parsing") {
  const auto pieces = parse_fen(kFen);
  CHECK(pieces.size() == 14);
  CHECK_THROWS_AS(parse_fen("9/8/8/8/8/8/8/8"), Error);
  CHECK_THROWS_AS(parse_fen("8/8/8"), Error);
  CHECK_THROWS_AS(parse_fen("x7/8/8/8/8/8/8/8"), Error);
}

TEST_CASE("nouns of the worked scene") {
  const Scene scene = build_chess(parse_fen(kFen));
  CHECK(scene.element_labels(scene.relation("pawn")) ==
        Labels{"a6", "b4", "c3", "e6", "f5", "g6"});
  CHECK(scene.element_labels(scene.relation("king")) == Labels{"d4", "f7"});
  CHECK(scene.element_labels(scene.relation("knight")) == Labels{"c7", "h4"});
  CHECK(scene.relation("piece").size() == 14);
  CHECK(scene.board.at("d4") == 'K');
  CHECK_THROWS_AS(scene.relation("unicorn"), Error);
}

TEST_CASE("empty board") {
  const Scene scene = build_chess({});
  for (const char* noun : {"pawn", "rook", "bishop", "knight", "queen", "king"}) {
    CHECK(scene.relation(noun).empty());
  }
  CHECK_THROWS_AS(build_chess({{"a1", PieceKind::kPawn, Colour::kWhite},
                               {"a1", PieceKind::kKing, Colour::kBlack}}),
                  Error);
}

TEST_CASE("king's moves from c3") {
  CHECK(labels_of(apply_state(kings_moves(), squares_state({"c3"}))) ==
        Labels{"b2", "b3", "b4", "c2", "c4", "d2", "d3", "d4"});
}

TEST_CASE("next to is king adjacency") {
  const Relation nt = next_to_squares();
  std::set<Tuple> rows;
  for (Index a = 0; a < 64; ++a) {
    for (Index b = 0; b < 64; ++b) {
      const int df = std::abs(file_of(a) - file_of(b));
      const int dr = std::abs(rank_of(a) - rank_of(b));
      if (df <= 1 && dr <= 1 && (df || dr)) rows.insert({a, b});
    }
  }
  CHECK(nt == from_rows({chess_squares()}, {chess_squares()}, rows));
  CHECK(nt == kings_moves());
  CHECK(nt == converse(nt));
  auto degree = [&](const char* sq) {
    return apply_state(nt, squares_state({sq})).size();
  };
  CHECK(degree("a1") == 3);
  CHECK(degree("h8") == 3);
  CHECK(degree("a4") == 5);
  CHECK(degree("e1") == 5);
  CHECK(degree("d4") == 8);
}

TEST_CASE("next to a king") {
  const Scene scene = build_chess(parse_fen(kFen));
  const Relation image =
      apply_state(scene.relation("next_to"), scene.relation("king"));
  CHECK(scene.element_labels(image) ==
        Labels{"c3", "c4", "c5", "d3", "d5", "e3", "e4", "e5", "e6", "e7",
               "e8", "f6", "f8", "g6", "g7", "g8"});
}

TEST_CASE("knight capture image") {
  const Scene scene = build_chess(parse_fen(kFen));
  const Relation image =
      apply_state(scene.relation("can_capture"), scene.relation("knight"));
  CHECK(scene.element_labels(image) == Labels{"a6", "f5", "g6"});
}

TEST_CASE("move patterns") {
  CHECK(labels_of(apply_state(move_right(), squares_state({"c3"}))) ==
        Labels{"d3"});
  CHECK(labels_of(apply_state(knights_moves(), squares_state({"a1"}))) ==
        Labels{"b3", "c2"});
  CHECK(apply_state(move_pattern(PieceKind::kRook), squares_state({"d4"})).size() == 14);
  CHECK(apply_state(move_pattern(PieceKind::kBishop), squares_state({"d4"})).size() == 13);
  CHECK(apply_state(move_pattern(PieceKind::kQueen), squares_state({"d4"})).size() == 27);
  CHECK(labels_of(apply_state(move_pattern(PieceKind::kPawn), squares_state({"d4"}))) ==
        Labels{"c3", "c5", "e3", "e5"});
}

TEST_CASE("both capture encodings agree") {
  CHECK(evaluate(can_capture_moves_diagram(), moves_environment()) ==
        can_capture_pattern());
}

}  // TEST_SUITE

TEST_SUITE("subway") {

TEST_CASE("Tuen Ma line") {
  const auto line = tuen_ma_line();
  REQUIRE(line.size() == 12);
  CHECK(line.front() == "Kai Tak");
  CHECK(line.back() == "Wu Kai Sha");
  const Scene scene = build_subway(line, "Tai Wai");
  const CarrierPtr st = scene.noun()[0];
  auto at = [&](const char* s) { return st->index_of(s); };
  const Relation& next = scene.relation("next_stop");
  CHECK(next.size() == 11);
  CHECK(next.contains({at("Kai Tak"), at("Diamond Hill")}));
  CHECK(power(next, 2).contains({at("Kai Tak"), at("Hin Keng")}));
  CHECK(power(next, 11).size() == 1);
  CHECK(power(next, 12).empty());
  const Relation& between = scene.relation("in_between");
  CHECK(between.contains({at("Kai Tak"), at("Diamond Hill"), at("Hin Keng")}));
  CHECK_FALSE(between.contains({at("Kai Tak"), at("Hin Keng"), at("Diamond Hill")}));
  CHECK(scene.element_labels(scene.relation("my_station")) == Labels{"Tai Wai"});
  CHECK(scene.relation("station").size() == 12);
}

TEST_CASE("in between matches ordering") {
  const Scene scene = build_subway({"A", "B", "C", "D", "E"});
  std::set<Tuple> rows;
  for (Index a = 0; a < 5; ++a)
    for (Index b = 0; b < 5; ++b)
      for (Index c = 0; c < 5; ++c)
        if ((a < b && b < c) || (c < b && b < a)) rows.insert({a, b, c});
  CHECK(scene.relation("in_between") ==
        from_rows({}, repeat(scene.noun(), 3), rows));
}

TEST_CASE("bad lines") {
  CHECK_THROWS_AS(build_subway({"A"}), Error);
  CHECK_THROWS_AS(build_subway({"A", "B", "A"}), Error);
}

}  // TEST_SUITE

TEST_SUITE("penrose") {

TEST_CASE("moves") {
  for (int n : {1, 2, 3, 5}) {
    const Scene s = build_penrose(n);
    const CarrierPtr steps = s.noun()[0];
    CHECK(steps->size() == static_cast<std::size_t>(4 * n));
    const Relation& up = s.relation("move_up");
    const std::string last = std::to_string(n);
    CHECK(up.contains({steps->index_of("I" + last), steps->index_of("II1")}));
    CHECK(up.contains({steps->index_of("IV" + last), steps->index_of("I1")}));
    CHECK(s.relation("move_down") == converse(up));
    CHECK(compose(up, s.relation("move_down")) == identity(up.dom()));
    CHECK(power(up, 4 * n) == identity(up.dom()));
    // A single orbit: no shorter power returns a step to itself.
    for (int k = 1; k < 4 * n; ++k) {
      CHECK(and_states(power(up, k).resplit(0), identity(up.dom()).resplit(0)).empty());
    }
  }
  CHECK_THROWS_AS(build_penrose(0), Error);
}

}  // TEST_SUITE

TEST_SUITE("grid") {

TEST_CASE("point labels and lookup") {
  const Grid g = small_grid(2, 1, 1);
  CHECK(g.points()->size() == 12);
  const std::vector<int> c = {1, 0, 1};
  CHECK(g.point_label(c) == "(1,0,1)");
  CHECK(g.coords(g.point(c)) == c);
  CHECK(g.points()->label(0) == "(0,0,0)");
}

TEST_CASE("higher than and above") {
  const Grid g = small_grid(2, 2, 2);
  const std::vector<int> origin = {0, 0, 0};
  const Relation o = Relation::from_cells({}, {g.points()}, {g.point(origin)});
  const Relation higher = apply_state(g.higher_than(), o);
  CHECK(higher.size() == 18);
  for (std::size_t i = 0; i < higher.size(); ++i) {
    CHECK(g.coords(higher.row(i)[0])[2] > 0);
  }
  std::set<Tuple> rows;
  const Index n = static_cast<Index>(g.points()->size());
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      const auto& p = g.coords(a);
      const auto& q = g.coords(b);
      if (p[0] == q[0] && p[1] == q[1] && q[2] > p[2]) rows.insert({a, b});
    }
  }
  const Relation above = g.above();
  CHECK(above == from_rows({g.points()}, {g.points()}, rows));
  CHECK(is_subset(above, g.higher_than()));
  CHECK(is_subset(compose(above, above), above));
  CHECK(and_states(above.resplit(0), identity({g.points()}).resplit(0)).empty());
}

TEST_CASE("close to") {
  const Grid g(GridSpec{{{"x", 0, 4}, {"y", 0, 4}, {"z", 0, 1}}, Rational(10),
                        Rational(1), {}});
  const Relation near = g.close_to(Rational(15));
  const Index n = static_cast<Index>(g.points()->size());
  std::set<Tuple> rows;
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      const auto& p = g.coords(a);
      const auto& q = g.coords(b);
      const int dx = p[0] - q[0], dy = p[1] - q[1];
      if (p[2] == q[2] && 100 * (dx * dx + dy * dy) <= 225) rows.insert({a, b});
    }
  }
  CHECK(near == from_rows({g.points()}, {g.points()}, rows));
}

TEST_CASE("in between on a line") {
  const Grid g = small_grid(4, 0, 0);
  std::set<Tuple> rows;
  for (Index a = 0; a < 5; ++a)
    for (Index b = 0; b < 5; ++b)
      for (Index c = 0; c < 5; ++c)
        if ((a < b && b < c) || (c < b && b < a)) rows.insert({a, b, c});
  CHECK(g.in_between() == from_rows({}, {g.points(), g.points(), g.points()}, rows));

  const Grid plane = small_grid(2, 2, 0);
  const std::vector<int> a = {0, 0, 0}, m = {1, 1, 0}, c = {2, 2, 0}, off = {1, 0, 0};
  CHECK(plane.in_between().contains({plane.point(a), plane.point(m), plane.point(c)}));
  CHECK_FALSE(plane.in_between().contains({plane.point(a), plane.point(off), plane.point(c)}));
}

TEST_CASE("chases composes along time") {
  const Grid g(GridSpec{{{"x", 0, 1}, {"y", 0, 0}, {"z", 0, 0}, {"t", 0, 5}},
                        Rational(1), Rational(60), {}});
  CHECK(compose(g.chases(Rational(60)), g.chases(Rational(120))) ==
        g.chases(Rational(180)));
  CHECK(compose(g.chases(Rational(120)), g.chases(Rational(180))) ==
        g.chases(Rational(300)));
  CHECK(g.chases(Rational(360)).empty());
  CHECK_THROWS_AS(g.chases(Rational(90)), Error);
  CHECK(is_subset(g.chases(Rational(60)), g.chases_any()));
  CHECK_THROWS_AS(small_grid(1, 1, 1).chases_any(), Error);
}

TEST_CASE("regions and features") {
  GridSpec spec{{{"x", 0, 2}, {"y", 0, 2}, {"z", 0, 0}}, Rational(1), Rational(1),
                {{"radius", {"1", "2"}, {Rational(1), Rational(2)}},
                 {"fragrance", {"none", "stinky"}, {}}}};
  const Grid g(spec);
  CHECK(g.space().factors.size() == 3);
  const Relation r = g.region(std::map<std::string, std::pair<int, int>>{{"x", {0, 1}}});
  CHECK(r.size() == 6 * 2 * 2);
  const Relation stinky = g.feature_state("fragrance", {"stinky"});
  CHECK(stinky.size() == 9 * 2);
  CHECK(g.region(std::vector<std::string>{"(2,2,0)"}).size() == 4);
  CHECK_THROWS_AS(g.region(std::map<std::string, std::pair<int, int>>{{"w", {0, 1}}}), Error);
}

TEST_CASE("inside needs room for the contained radius") {
  GridSpec spec{{{"x", 0, 3}, {"y", 0, 0}, {"z", 0, 0}}, Rational(1), Rational(1),
                {{"radius", {"1", "3"}, {Rational(1), Rational(3)}},
                 {"fragrance", {"none", "stinky"}, {}}}};
  const Grid g(spec);
  const Relation ext = g.inside_extent();
  // Container radius 3, contained radius 1: centres closer than 2.
  auto has = [&](int a, int ra, int b, int rb) {
    const std::vector<int> p = {a, 0, 0}, q = {b, 0, 0};
    return ext.contains({g.point(p), static_cast<Index>(ra), g.point(q),
                         static_cast<Index>(rb)});
  };
  CHECK(has(0, 1, 1, 0));
  CHECK(has(0, 1, 0, 0));
  CHECK_FALSE(has(0, 1, 2, 0));
  CHECK_FALSE(has(0, 0, 0, 1));
  CHECK_FALSE(has(0, 1, 0, 1));
  const Relation in = g.inside();
  CHECK(in.size() == ext.size() * 4);
}

TEST_CASE("hunting threshold is a third of a kilometre") {
  GridSpec spec{{{"x", 0, 40}, {"y", 0, 0}, {"z", 0, 0}}, Rational(10), Rational(1),
                {{"endurance", {"60", "1800"}, {Rational(60), Rational(1800)}},
                 {"speed", {"100", "120"}, {Rational(100), Rational(120)}}}};
  const Grid g(spec);
  const Relation hunt = g.can_capture_hunt();
  auto caught = [&](int metres) {
    const std::vector<int> h = {0, 0, 0}, p = {metres / 10, 0, 0};
    return hunt.contains({g.point(h), 0, 1, g.point(p), 1, 0});
  };
  CHECK(caught(0));
  CHECK(caught(330));
  CHECK_FALSE(caught(340));
  // Equal animals never close the gap.
  const std::vector<int> a = {0, 0, 0}, b = {1, 0, 0};
  CHECK_FALSE(hunt.contains({g.point(a), 0, 1, g.point(b), 0, 1}));
}

TEST_CASE("rationals") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-2") == Rational(-2));
  CHECK(parse_rational("1/3") == Rational(1, 3));
  CHECK(parse_rational("2.5") == Rational(5, 2));
  CHECK(to_string(Rational(5, 2)) == "5/2");
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
}

}  // TEST_SUITE

TEST_SUITE("scene_io") {

TEST_CASE("FEN text") {
  const Scene scene = load_scene(kFen);
  CHECK(scene.kind == "chess");
  CHECK(scene.element_labels(scene.relation("king")) == Labels{"d4", "f7"});
}

TEST_CASE("shipped scenes load") {
  for (const char* f : {"chess.json", "empty_board.json", "subway.json",
                        "penrose.json", "penrose_circuit.json", "above.json",
                        "paris.json", "cheese.json"}) {
    CAPTURE(f);
    CHECK_NOTHROW(load_scene_file(std::string(RELSPACE_DATA_DIR "/") + f));
  }
}

TEST_CASE("grid documents") {
  const Scene s = load_scene(R"js({
    "space": {"kind": "grid", "axes": [{"name": "x", "range": [0, 2]},
                                       {"name": "y", "range": [0, 0]},
                                       {"name": "z", "range": [0, 1]}]},
    "regions": [{"name": "left", "box": {"x": [0, 0]}},
                {"name": "spot", "members": ["(2,0,1)"]}],
    "relations": [{"name": "above", "builtin": "above"},
                  {"name": "below", "converse": "above"}],
    "nouns": [{"name": "lamp", "members": ["(1,0,1)"]}],
    "inhabitants": [{"name": "A"}, {"name": "B", "state": ["(0,0,0)", "(0,0,1)"]}]})js");
  CHECK(s.relation("left").size() == 2);
  CHECK(s.relation("spot").size() == 1);
  CHECK(s.relation("below") == converse(s.relation("above")));
  CHECK(s.element_labels(s.relation("lamp")) == Labels{"(1,0,1)"});
  CHECK(s.inhabitant_names == Labels{"A", "B"});
  CHECK(s.inhabitants.at("A").size() == 6);
  CHECK(s.inhabitants.at("B").size() == 2);
}

TEST_CASE("feature members") {
  const Scene s = load_scene_file(RELSPACE_DATA_DIR "/cheese.json");
  CHECK(s.inhabitants.at("suitcase").size() == 27 * 3);
  CHECK(s.inhabitants.at("cheese").size() == 27 * 3 * 3);
}

TEST_CASE("errors are scene errors") {
  auto code = [](const std::string& text) {
    try {
      load_scene(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInvalidArgument;
  };
  CHECK(code(R"({"space": {"kind": "moon"}})") == ErrorCode::kScene);
  CHECK(code(R"({"space": {"kind": "penrose", "n": 2},
                  "relations": [{"name": "x", "builtin": "warp"}]})") == ErrorCode::kScene);
  CHECK(code(R"({"space": {"kind": "grid", "axes": [{"name": "x", "range": [0, 999]},
                  {"name": "y", "range": [0, 999]}, {"name": "z", "range": [0, 9]}]}})") ==
        ErrorCode::kSizeBound);
  CHECK(code("{ nope") == ErrorCode::kScene);
}

}  // TEST_SUITE
