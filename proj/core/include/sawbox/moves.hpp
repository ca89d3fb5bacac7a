// Endpoint-relocation moves and the spanning-walk extension map: the
// combinatorial constructions behind the growth-constant equalities, in
// executable form so their claims can be property-tested exhaustively.
#pragma once

#include <optional>
#include <set>
#include <vector>

#include "sawbox/lattice.hpp"

namespace sawbox {

enum class MoveKind { Lengthen, Shorten, EndAttack, BackbiteUp, BackbiteDown };

std::string to_string(MoveKind k);

struct MoveStep {
  MoveKind kind;
  Point endpoint_before;
  Point endpoint_after;
  int column_delta;  // 1, or 2 when the far horizontal edge is cut
};

struct MoveTrace {
  std::vector<MoveStep> steps;
};

/// The move that relocates `endpoint` of w one site toward the right boundary
/// of b, dictated by the local configuration to its immediate right:
/// Lengthen when the right site is unoccupied, Shorten when the right edge is
/// a walk step, otherwise the join move named by the edge that gets cut at the
/// right neighbour (EndAttack for its far horizontal edge, BackbiteUp/Down for
/// its upper/lower vertical edge). Returns nullopt when the endpoint already
/// sits on the right boundary. Throws walk_error when `endpoint` is not an
/// endpoint of w or the configuration admits no rightward move (possible only
/// when the other endpoint lies to the right).
std::optional<MoveKind> select_move(const Walk& w, Point endpoint, const Box& b);

struct MoveResult {
  Walk walk;
  Point endpoint;  // relocated endpoint in the new walk
};

/// Applies m, which must equal select_move(w, endpoint, b).
MoveResult apply_move(const Walk& w, Point endpoint, MoveKind m, const Box& b);

struct PushResult {
  Walk walk;
  MoveTrace trace;
};

/// Moves the endpoints of a walk spanning the square box b onto the left and
/// right boundaries (bottom/top when the walk spans only vertically), using at
/// most side-length many endpoint moves. The result is in the opposite-sides
/// class. Throws walk_error for non-spanning input.
PushResult push_to_sides(const Walk& w, const Box& b,
                         SpanVariant variant = kDefaultSpanVariant);

/// The injective map from walks spanning their l-square into walks spanning
/// the (l+1)-square: the first boundary site of the walk clockwise from the
/// corner either gains an outward step (endpoint) or has its boundary step
/// rerouted around the outside plaquette. The result is re-anchored at the
/// origin of the enlarged square.
Walk extend_spanning_walk(const Walk& w, SpanVariant variant = kDefaultSpanVariant);

/// All walks v such that one application of the selected move at the
/// corresponding endpoint of v yields w with `endpoint` as the new endpoint.
/// The construction guarantees at most three.
std::set<Walk> antecedents(const Walk& w, Point endpoint, const Box& b);

}  // namespace sawbox
