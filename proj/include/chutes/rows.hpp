#pragma once

#include "chutes/bigint.hpp"
#include "chutes/path.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace chutes::rows {

/// Row R_i of the triangle: entries deduplicated and ascending.
struct Row {
  std::uint64_t index = 1;
  std::vector<BigInt> entries;

  friend bool operator==(const Row&, const Row&) = default;
};

struct RowLimits {
  std::uint64_t uncapped_rows = 8;  // entries grow like 2^(2^i) without a cutoff
  std::uint64_t max_entries = 1'000'000;
};

/// Applies both rules once: (x+d)^e for every entry (dropped above `cutoff`)
/// and exact e-th roots of every entry (never dropped).
Row next_row(const Row& current, const ProblemParams& params,
             const std::optional<BigInt>& cutoff = std::nullopt);

/// Rows 1..count, starting from [r]. Throws ResourceLimitError when an
/// uncapped request exceeds `limits.uncapped_rows` or a row outgrows
/// `limits.max_entries`.
std::vector<Row> generate_rows(const ProblemParams& params, std::uint64_t count,
                               const std::optional<BigInt>& cutoff = std::nullopt,
                               const RowLimits& limits = {});

/// Rows concatenated in order, each ascending.
std::vector<BigInt> emit_triangle(const ProblemParams& params, std::uint64_t count,
                                  const std::optional<BigInt>& cutoff = std::nullopt,
                                  const RowLimits& limits = {});

struct FirstAppearance {
  BigInt target;
  std::uint64_t row_index = 0;  // a(target)
  PathWitness witness;          // from r to target, row_index - 1 edges
};

struct FirstAppearanceReport {
  std::map<BigInt, FirstAppearance> found;
  std::vector<BigInt> absent;  // not reached within max_rows
  BigInt cutoff;
  std::uint64_t rows_explored = 0;
  std::uint64_t vertices_seen = 0;
};

/// Breadth-first search over the rows with every up-step above `cutoff`
/// discarded. Throws CertificationError when `cutoff` is below
/// bounds::certified_cutoff for (r, max target, max_rows), since the reported
/// rows would then only be upper bounds.
FirstAppearanceReport first_appearances(const ProblemParams& params,
                                        const std::set<BigInt>& targets,
                                        std::uint64_t max_rows, const BigInt& cutoff);

/// `i: v1 v2 ...`
std::string format_row(const Row& row);

}  // namespace chutes::rows
