#include "relspace/chess.h"

#include <cctype>
#include <cstdlib>
#include <optional>
#include <set>

#include "relspace/error.h"

namespace relspace {
namespace {

constexpr char kLetters[] = {'P', 'R', 'B', 'N', 'Q', 'K'};

int file_of(Index s) { return static_cast<int>(s) / 8; }
int rank_of(Index s) { return static_cast<int>(s) % 8; }

template <typename Pred>
Relation square_relation(Pred pred) {
  const CarrierPtr sq = chess_squares();
  RelationBuilder b({sq}, {sq});
  for (Index a = 0; a < 64; ++a) {
    for (Index c = 0; c < 64; ++c) {
      if (pred(file_of(a), rank_of(a), file_of(c), rank_of(c))) b.add({a, c});
    }
  }
  return std::move(b).build();
}

bool pattern(PieceKind kind, int df, int dr) {
  const int af = std::abs(df), ar = std::abs(dr);
  if (af == 0 && ar == 0) return false;
  switch (kind) {
    case PieceKind::kPawn: return af == 1 && ar == 1;
    case PieceKind::kRook: return af == 0 || ar == 0;
    case PieceKind::kBishop: return af == ar;
    case PieceKind::kKnight: return (af == 1 && ar == 2) || (af == 2 && ar == 1);
    case PieceKind::kQueen: return af == 0 || ar == 0 || af == ar;
    case PieceKind::kKing: return af <= 1 && ar <= 1;
  }
  return false;
}

PieceKind kind_from_letter(char c) {
  switch (std::toupper(static_cast<unsigned char>(c))) {
    case 'P': return PieceKind::kPawn;
    case 'R': return PieceKind::kRook;
    case 'B': return PieceKind::kBishop;
    case 'N': return PieceKind::kKnight;
    case 'Q': return PieceKind::kQueen;
    case 'K': return PieceKind::kKing;
  }
  throw Error(ErrorCode::kScene, std::string("bad FEN piece '") + c + "'");
}

}  // namespace

const char* piece_kind_name(PieceKind kind) {
  static const char* const kNames[] = {"pawn",   "rook",  "bishop",
                                       "knight", "queen", "king"};
  return kNames[static_cast<int>(kind)];
}

char fen_letter(const Piece& p) {
  char c = kLetters[static_cast<int>(p.kind)];
  return p.colour == Colour::kWhite ? c : static_cast<char>(std::tolower(c));
}

CarrierPtr chess_squares() {
  static const CarrierPtr kSquares = [] {
    std::vector<std::string> labels;
    for (char f = 'a'; f <= 'h'; ++f) {
      for (char r = '1'; r <= '8'; ++r) labels.push_back({f, r});
    }
    return make_carrier("square", std::move(labels));
  }();
  return kSquares;
}

CarrierPtr chess_kinds() {
  static const CarrierPtr kKinds =
      make_carrier("kind", {"P", "R", "B", "N", "Q", "K"});
  return kKinds;
}

CarrierPtr chess_movesets() {
  static const CarrierPtr kSets = make_carrier(
      "moveset", {"pawn-moves", "rook-moves", "bishop-moves", "knight-moves",
                  "queen-moves", "king-moves"});
  return kSets;
}

std::vector<Piece> parse_fen(std::string_view placement) {
  if (auto space = placement.find(' '); space != std::string_view::npos) {
    placement = placement.substr(0, space);
  }
  std::vector<Piece> pieces;
  int rank = 7, file = 0;
  for (char c : placement) {
    if (c == '/') {
      if (file != 8) throw Error(ErrorCode::kScene, "FEN rank is not 8 wide");
      --rank;
      file = 0;
      if (rank < 0) throw Error(ErrorCode::kScene, "FEN has too many ranks");
    } else if (c >= '1' && c <= '8') {
      file += c - '0';
    } else {
      if (file >= 8) throw Error(ErrorCode::kScene, "FEN rank overflows");
      Colour colour = std::isupper(static_cast<unsigned char>(c))
                          ? Colour::kWhite
                          : Colour::kBlack;
      pieces.push_back(Piece{std::string{static_cast<char>('a' + file),
                                         static_cast<char>('1' + rank)},
                             kind_from_letter(c), colour});
      ++file;
    }
    if (file > 8) throw Error(ErrorCode::kScene, "FEN rank overflows");
  }
  if (rank != 0 || file != 8) {
    throw Error(ErrorCode::kScene, "FEN must describe 8 full ranks");
  }
  return pieces;
}

Relation move_right() {
  return square_relation(
      [](int f, int r, int f2, int r2) { return r == r2 && f2 == f + 1; });
}

Relation kings_moves() {
  return square_relation([](int f, int r, int f2, int r2) {
    return pattern(PieceKind::kKing, f2 - f, r2 - r);
  });
}

Relation knights_moves() { return move_pattern(PieceKind::kKnight); }

Relation next_to_squares() {
  return square_relation([](int f, int r, int f2, int r2) {
    return std::abs(f - f2) <= 1 && std::abs(r - r2) <= 1 &&
           !(f == f2 && r == r2);
  });
}

Relation move_pattern(PieceKind kind) {
  return square_relation([kind](int f, int r, int f2, int r2) {
    return pattern(kind, f2 - f, r2 - r);
  });
}

Relation can_capture_pattern() {
  const CarrierPtr sq = chess_squares(), kd = chess_kinds();
  RelationBuilder b({sq, kd}, {sq, kd});
  for (Index a = 0; a < 64; ++a) {
    for (Index k = 0; k < kPieceKinds; ++k) {
      for (Index c = 0; c < 64; ++c) {
        if (!pattern(static_cast<PieceKind>(k), file_of(c) - file_of(a),
                     rank_of(c) - rank_of(a))) {
          continue;
        }
        for (Index k2 = 0; k2 < kPieceKinds; ++k2) b.add({a, k, c, k2});
      }
    }
  }
  return std::move(b).build();
}

Relation moves_state() {
  const CarrierPtr ms = chess_movesets(), sq = chess_squares();
  RelationBuilder b({}, {ms, sq, sq});
  for (Index m = 0; m < kPieceKinds; ++m) {
    for (Index a = 0; a < 64; ++a) {
      for (Index c = 0; c < 64; ++c) {
        if (pattern(static_cast<PieceKind>(m), file_of(c) - file_of(a),
                    rank_of(c) - rank_of(a))) {
          b.add({m, a, c});
        }
      }
    }
  }
  return std::move(b).build();
}

Relation has_moves() {
  RelationBuilder b({chess_kinds()}, {chess_movesets()});
  for (Index k = 0; k < kPieceKinds; ++k) b.add({k, k});
  return std::move(b).build();
}

Diagram can_capture_moves_diagram() {
  const CarrierPtr sq = chess_squares(), kd = chess_kinds(),
                   ms = chess_movesets();
  DiagramBuilder b({sq, kd});
  Bundle in = b.inputs();
  Wire kind_in[] = {in[1]};
  Bundle moveset = b.add_box("has_moves", {ms}, kind_in);
  Bundle moves = b.add_state("moves", moves_state());
  Wire same_set[] = {moveset[0], moves[0]};
  b.add_spider(ms, same_set, 0);
  Wire same_from[] = {in[0], moves[1]};
  b.add_spider(sq, same_from, 0);
  Bundle target_kind = b.add_spider(kd, {}, 1);
  Bundle out = {moves[2], target_kind[0]};
  return std::move(b).finish(out);
}

Environment moves_environment() {
  Environment env;
  env.bind("has_moves", has_moves());
  return env;
}

Scene build_chess(const std::vector<Piece>& pieces) {
  const CarrierPtr sq = chess_squares(), kd = chess_kinds();
  Scene scene;
  scene.kind = "chess";
  scene.space = Space{"chessboard", {sq, kd}};
  scene.label_factors = {0};

  struct Occupant {
    PieceKind kind;
    Colour colour;
  };
  std::vector<std::optional<Occupant>> at(64);
  for (const Piece& p : pieces) {
    auto idx = sq->find(p.square);
    if (!idx) throw Error(ErrorCode::kScene, "bad square '" + p.square + "'");
    if (at[*idx]) {
      throw Error(ErrorCode::kScene, "two pieces on " + p.square);
    }
    at[*idx] = Occupant{p.kind, p.colour};
    scene.board[p.square] = fen_letter(p);
  }

  std::vector<RelationBuilder> nouns;
  for (int k = 0; k < kPieceKinds; ++k) nouns.emplace_back(PortType{}, scene.noun());
  RelationBuilder any_piece({}, scene.noun());
  for (Index s = 0; s < 64; ++s) {
    if (!at[s]) continue;
    const Index k = static_cast<Index>(at[s]->kind);
    nouns[k].add({s, k});
    any_piece.add({s, k});
  }
  for (int k = 0; k < kPieceKinds; ++k) {
    scene.relations.emplace(piece_kind_name(static_cast<PieceKind>(k)),
                            std::move(nouns[k]).build());
  }
  scene.relations.emplace("piece", std::move(any_piece).build());

  scene.relations.emplace("next_to", widen(next_to_squares(), scene.space));
  scene.relations.emplace("kings_moves", widen(kings_moves(), scene.space));
  scene.relations.emplace("knights_moves", widen(knights_moves(), scene.space));
  scene.relations.emplace("move_right", widen(move_right(), scene.space));

  const Relation pattern_rel = can_capture_pattern();
  RelationBuilder capture(scene.noun(), scene.noun());
  for (std::size_t r = 0; r < pattern_rel.size(); ++r) {
    auto row = pattern_rel.row(r);
    const auto& from = at[row[0]];
    const auto& to = at[row[2]];
    if (!from || !to || static_cast<Index>(from->kind) != row[1] ||
        from->colour == to->colour) {
      continue;
    }
    if (from->kind == PieceKind::kPawn) {
      const int forward = from->colour == Colour::kWhite ? 1 : -1;
      if (rank_of(row[2]) - rank_of(row[0]) != forward) continue;
    }
    capture.add(row);
  }
  scene.relations.emplace("can_capture", std::move(capture).build());
  return scene;
}

}  // namespace relspace
