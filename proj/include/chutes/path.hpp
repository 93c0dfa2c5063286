#pragma once

#include "chutes/bigint.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chutes {

/// An instance (d, e, r): the up-edge is x -> (x+d)^e, the down-edge takes
/// exact e-th roots, and the triangle is seeded with r. Putnam 2017 A1 is (5, 2, 2).
struct ProblemParams {
  std::uint64_t d = 5;
  unsigned e = 2;
  std::uint64_t r = 2;

  /// Throws std::invalid_argument unless d, e, r >= 2.
  void validate() const;
  bool is_putnam_shape() const { return d == 5 && e == 2; }

  friend bool operator==(const ProblemParams&, const ProblemParams&) = default;
};

enum class Label : char { Up = 'U', Down = 'D' };

enum class SegmentKind { Belt, Ladder, Chute };

std::string_view to_string(SegmentKind kind);

/// Belt = (UD)^repeat, Ladder = U^repeat, Chute = D^repeat.
struct Segment {
  SegmentKind kind;
  std::uint64_t repeat;

  std::uint64_t edge_count() const { return kind == SegmentKind::Belt ? 2 * repeat : repeat; }
  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Splits a U/D label string into belts, ladders and chutes. Every U that is
/// immediately followed by D is paired into a belt, scanning left to right;
/// adjacent runs of the same kind merge. Throws std::invalid_argument on any
/// character other than 'U' or 'D'.
std::vector<Segment> decompose(std::string_view labels);

/// Edge labels of a path, held as its belt/ladder/chute decomposition so that
/// belts with trillions of steps stay small. Appending keeps the segment list
/// identical to decompose() of the expanded string.
class Labels {
 public:
  Labels() = default;
  static Labels parse(std::string_view text);

  void append(Label label);
  void append(Segment segment);
  void append_ladder(std::uint64_t n) { append(Segment{SegmentKind::Ladder, n}); }
  void append_belt(std::uint64_t n) { append(Segment{SegmentKind::Belt, n}); }
  void append_chute(std::uint64_t n) { append(Segment{SegmentKind::Chute, n}); }

  const std::vector<Segment>& segments() const { return segments_; }
  std::uint64_t edge_count() const { return edges_; }
  bool empty() const { return edges_ == 0; }

  /// Expanded U/D string; throws ResourceLimitError past `max_edges`.
  std::string str(std::uint64_t max_edges = 10'000'000) const;

  friend bool operator==(const Labels&, const Labels&) = default;

 private:
  std::vector<Segment> segments_;
  std::uint64_t edges_ = 0;
};

struct PathWitness {
  BigInt start;
  Labels labels;

  friend bool operator==(const PathWitness&, const PathWitness&) = default;
};

BigInt apply_up(const BigInt& x, const ProblemParams& params);
std::optional<BigInt> apply_down(const BigInt& x, const ProblemParams& params);

/// Every vertex of the path, step by step. Throws InvalidDownStep on the first
/// D applied to a non-e-th-power, ResourceLimitError past `max_vertices`.
std::vector<BigInt> evaluate_path(const PathWitness& witness, const ProblemParams& params,
                                  std::uint64_t max_vertices = 10'000'000);

struct PathSummary {
  BigInt end;
  BigInt max_vertex;
  std::uint64_t edge_count = 0;
};

/// Validates a path without materializing it. A belt step x -> (x+d)^e -> x+d is
/// always valid, so belts are advanced in one step; every chute step is checked.
PathSummary walk_path(const PathWitness& witness, const ProblemParams& params);

/// Vertex residues mod d along the path.
std::vector<std::uint64_t> project_residues(const PathWitness& witness,
                                            const ProblemParams& params);

/// True iff no x in [2, x_max] admits y with y^e - (x+d)^e = d, the only way a
/// UUDD subpath could exist.
bool check_uudd_infeasible(const ProblemParams& params, std::uint64_t x_max);

/// Ladder-belt-chute path from x to y in the (5, 2) graph: climb two rungs to
/// w = ((x+5)^2+5)^2, ride a belt to the least z = y^(2^k) with z = 1 (mod 5)
/// and z >= w, then take k down-steps. Rejects x, y < 2 and multiples of 5.
PathWitness connecting_path(const BigInt& x, const BigInt& y, const ProblemParams& params);

}  // namespace chutes
