#ifndef RELSPACE_CHESS_H_
#define RELSPACE_CHESS_H_

#include <string>
#include <string_view>
#include <vector>

#include "relspace/diagram.h"
#include "relspace/space.h"

namespace relspace {

enum class PieceKind { kPawn, kRook, kBishop, kKnight, kQueen, kKing };
enum class Colour { kWhite, kBlack };

struct Piece {
  std::string square;  // "a1" .. "h8"
  PieceKind kind;
  Colour colour;
};

constexpr int kPieceKinds = 6;
const char* piece_kind_name(PieceKind kind);  // "pawn", "rook", ...
char fen_letter(const Piece& p);

// Squares in file-major order: a1, a2, ..., a8, b1, ..., h8.
CarrierPtr chess_squares();
// Piece kinds labelled P R B N Q K.
CarrierPtr chess_kinds();
// Move sets, one per kind, for the moves-in-piece encoding.
CarrierPtr chess_movesets();

// FEN piece placement (first field only).  Throws kScene.
std::vector<Piece> parse_fen(std::string_view placement);

// Square relations, as boxes square -> square.
Relation move_right();
Relation kings_moves();
Relation knights_moves();
// Adjacency: both coordinates within one, not both equal.
Relation next_to_squares();
// Colourless capture pattern of a kind; pawns capture one step diagonally
// in either direction.
Relation move_pattern(PieceKind kind);

// (square, kind) -> (square, kind): the capturer's pattern decides, the
// target kind is free.  Kind labels select the pattern.
Relation can_capture_pattern();

// Second encoding: pieces carry their move set.  `moves` is the state
// (moveset, from, to); `has_moves` maps each kind to its move set.
Relation moves_state();
Relation has_moves();
// The (square, kind) -> (square, kind) capture diagram of the second
// encoding; its single box "has_moves" is bound by moves_environment().
Diagram can_capture_moves_diagram();
Environment moves_environment();

// A scene over squares x kinds with nouns per kind (pawn, rook, ...,
// piece) and relations next_to, kings_moves, knights_moves, move_right
// and can_capture.  The scene's can_capture additionally needs a piece of
// the capturer's kind and colour on the source square, an enemy piece on
// the target square, and a forward direction for pawns.
Scene build_chess(const std::vector<Piece>& pieces);

}  // namespace relspace

#endif  // RELSPACE_CHESS_H_
