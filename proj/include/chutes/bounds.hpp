#pragma once

#include "chutes/bigint.hpp"
#include "chutes/path.hpp"

#include <array>
#include <cstdint>
#include <optional>

// Upper bounds on the largest vertex of a length-limited path. All bounds are
// rounded up to integers, so using one as a row cutoff never discards a vertex
// that a qualifying path could visit.
namespace chutes::bounds {

/// A path from x to y with at most 2 * half_length edges.
struct BoundQuery {
  BigInt x;
  BigInt y;
  std::uint64_t half_length = 1;
  ProblemParams params;
};

/// One family of adjacent-square belts (m^2 -> n^2, n - m = gap) in the (5, 2) graph.
struct BeltFamily {
  unsigned n_residue;       // n mod 5
  unsigned gap;             // n - m
  unsigned endpoint_class;  // n^2 mod 5, either 1 or 4
  std::optional<std::uint64_t> n;  // largest admissible n, if any
  std::optional<std::uint64_t> steps;
};

struct BeltEndpointBound {
  std::array<BeltFamily, 4> families;
  std::optional<std::uint64_t> class1;  // largest endpoint n^2 = 1 (mod 5)
  std::optional<std::uint64_t> class4;  // largest endpoint n^2 = 4 (mod 5)
};

/// Largest endpoints of square-to-square belts with fewer than `step_budget`
/// steps in the (5, 2) graph, per residue class of the endpoint.
BeltEndpointBound belt_endpoint_bound(std::uint64_t step_budget);

/// ceil((5l + 1)^4 / 16) with l = max(half_length, 3): the largest vertex a
/// (5, 2) path of length <= 2l can visit with two vertices on either side.
BigInt howmax_bound(std::uint64_t half_length);

struct PathMaxBound {
  BigInt belt_with_power;                    // interior maximum (general: belt holds a lesser power)
  std::optional<BigInt> belt_without_power;  // general bound only
  BigInt start_branch;                       // (x + d)^e
  BigInt end_branch;                         // y^e
  BigInt max;
};

/// max{howmax_bound(l), (x+5)^2, y^2}. Requires d = 5, e = 2.
PathMaxBound path_max_bound(const BoundQuery& query);

/// The bound for arbitrary (d, e):
///   max{(1 + t)^(e^2), ceil((d l 2^(e-1) / (2^(e-1) - 1))^e), (x+d)^e, y^e}
/// where t is the least integer with t^(e-1) >= ceil(d l / e).
PathMaxBound general_path_max_bound(const BoundQuery& query);

/// Half-length covering every path that reaches row `max_rows`.
std::uint64_t half_length_for_rows(std::uint64_t max_rows);

/// Smallest cutoff under which first appearances of targets up to `max_target`
/// within `max_rows` rows are certified: the (5, 2) bound for that shape, the
/// general bound otherwise.
BigInt certified_cutoff(const ProblemParams& params, const BigInt& max_target,
                        std::uint64_t max_rows);

}  // namespace chutes::bounds
