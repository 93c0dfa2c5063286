#include "chutes/rows.hpp"

#include "chutes/arith.hpp"
#include "chutes/bounds.hpp"
#include "chutes/error.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace chutes::rows {

namespace {

void sort_unique(std::vector<BigInt>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Up-step limited by a cutoff, for the two integer representations the search
// runs on. An empty result means the step is discarded.
std::optional<u128> capped_up(u128 x, const ProblemParams& params, u128 cutoff) {
  if (x > cutoff) return std::nullopt;
  return arith::checked_pow(x + params.d, params.e, cutoff);
}

std::optional<BigInt> capped_up(const BigInt& x, const ProblemParams& params,
                                const BigInt& cutoff) {
  if (x > cutoff) return std::nullopt;
  BigInt up = apply_up(x, params);
  if (up > cutoff) return std::nullopt;
  return up;
}

struct U128Hash {
  std::size_t operator()(u128 v) const noexcept {
    const auto lo = static_cast<std::uint64_t>(v);
    const auto hi = static_cast<std::uint64_t>(v >> 64);
    return std::hash<std::uint64_t>{}(lo ^ (hi * 0x9E3779B97F4A7C15ULL));
  }
};

template <class Int>
using HashFor = std::conditional_t<std::is_same_v<Int, u128>, U128Hash, std::hash<Int>>;

template <class Int>
BigInt widen(const Int& v) {
  return BigInt(v);
}

template <class Int>
Int narrow(const BigInt& v) {
  return static_cast<Int>(v);
}

template <class Int>
FirstAppearanceReport search(const ProblemParams& params, const std::set<BigInt>& targets,
                             std::uint64_t max_rows, const BigInt& cutoff_big) {
  struct Parent {
    Int from;
    Label label;
  };
  const Int cutoff = narrow<Int>(cutoff_big);
  const Int root = narrow<Int>(BigInt(params.r));

  FirstAppearanceReport report;
  report.cutoff = cutoff_big;

  std::unordered_map<Int, Parent, HashFor<Int>> parent;
  std::unordered_map<Int, std::uint64_t, HashFor<Int>> first_row;
  first_row.emplace(root, 1);

  std::size_t remaining = targets.size();
  auto wanted = [&](const Int& v) { return targets.count(widen(v)) > 0; };

  std::vector<Int> frontier{root};
  for (std::uint64_t row = 1; row <= max_rows && !frontier.empty(); ++row) {
    report.rows_explored = row;
    for (const Int& v : frontier) {
      if (wanted(v)) --remaining;
    }
    if (remaining == 0 || row == max_rows) break;

    // Down-steps first, so a value reached both ways in the same row keeps
    // its down-parent.
    std::vector<Int> next;
    for (const Int& v : frontier) {
      if (auto m = arith::exact_eth_root(v, params.e)) {
        if (first_row.emplace(*m, row + 1).second) {
          parent.emplace(*m, Parent{v, Label::Down});
          next.push_back(*m);
        }
      }
    }
    for (const Int& v : frontier) {
      if (auto u = capped_up(v, params, cutoff)) {
        if (first_row.emplace(*u, row + 1).second) {
          parent.emplace(*u, Parent{v, Label::Up});
          next.push_back(*u);
        }
      }
    }
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
  }
  report.vertices_seen = first_row.size();

  for (const BigInt& target : targets) {
    bool representable = true;
    if constexpr (std::is_same_v<Int, u128>) representable = target <= widen(~u128{0});
    auto it = representable ? first_row.find(narrow<Int>(target)) : first_row.end();
    if (it == first_row.end() || it->second > report.rows_explored) {
      report.absent.push_back(target);
      continue;
    }
    std::string reversed;
    Int v = it->first;
    while (v != root) {
      const Parent& p = parent.at(v);
      reversed.push_back(static_cast<char>(p.label));
      v = p.from;
    }
    std::reverse(reversed.begin(), reversed.end());
    FirstAppearance fa;
    fa.target = target;
    fa.row_index = it->second;
    fa.witness = PathWitness{BigInt(params.r), Labels::parse(reversed)};
    report.found.emplace(target, std::move(fa));
  }
  return report;
}

}  // namespace

Row next_row(const Row& current, const ProblemParams& params, const std::optional<BigInt>& cutoff) {
  params.validate();
  Row out;
  out.index = current.index + 1;
  for (const BigInt& x : current.entries) {
    BigInt up = apply_up(x, params);
    if (!cutoff || up <= *cutoff) out.entries.push_back(std::move(up));
    if (auto root = apply_down(x, params)) out.entries.push_back(std::move(*root));
  }
  sort_unique(out.entries);
  return out;
}

std::vector<Row> generate_rows(const ProblemParams& params, std::uint64_t count,
                               const std::optional<BigInt>& cutoff, const RowLimits& limits) {
  params.validate();
  if (count < 1) throw std::invalid_argument("row count must be >= 1");
  if (!cutoff && count > limits.uncapped_rows) {
    throw ResourceLimitError("refusing to generate " + std::to_string(count) +
                             " uncapped rows (limit " + std::to_string(limits.uncapped_rows) +
                             "); entries grow doubly exponentially, supply a cutoff");
  }
  std::vector<Row> out;
  out.push_back(Row{1, {BigInt(params.r)}});
  while (out.size() < count) {
    Row next = next_row(out.back(), params, cutoff);
    if (next.entries.size() > limits.max_entries) {
      throw ResourceLimitError("row " + std::to_string(next.index) + " has " +
                               std::to_string(next.entries.size()) + " entries (limit " +
                               std::to_string(limits.max_entries) + ")");
    }
    out.push_back(std::move(next));
  }
  return out;
}

std::vector<BigInt> emit_triangle(const ProblemParams& params, std::uint64_t count,
                                  const std::optional<BigInt>& cutoff, const RowLimits& limits) {
  std::vector<BigInt> out;
  for (auto& row : generate_rows(params, count, cutoff, limits)) {
    for (auto& v : row.entries) out.push_back(std::move(v));
  }
  return out;
}

FirstAppearanceReport first_appearances(const ProblemParams& params,
                                        const std::set<BigInt>& targets,
                                        std::uint64_t max_rows, const BigInt& cutoff) {
  params.validate();
  if (max_rows < 1) throw std::invalid_argument("max_rows must be >= 1");
  for (const auto& t : targets) {
    if (t < 1) throw std::invalid_argument("targets must be positive");
  }
  const BigInt max_target = targets.empty() ? BigInt(params.r) : *targets.rbegin();
  const BigInt required = bounds::certified_cutoff(params, max_target, max_rows);
  if (cutoff < required) {
    throw CertificationError("cutoff " + cutoff.str() + " is below the certified bound " +
                             required.str() + " for " + std::to_string(max_rows) +
                             " rows and targets up to " + max_target.str());
  }
  // 128-bit search is exact while every retained vertex and every up-step
  // candidate compared against the cutoff fits below 2^127.
  const BigInt u128_ceiling = BigInt(1) << 126;
  if (cutoff < u128_ceiling && BigInt(params.r) < u128_ceiling &&
      BigInt(params.d) < u128_ceiling) {
    return search<u128>(params, targets, max_rows, cutoff);
  }
  return search<BigInt>(params, targets, max_rows, cutoff);
}

std::string format_row(const Row& row) {
  std::string out = std::to_string(row.index) + ":";
  for (const auto& v : row.entries) {
    out += ' ';
    out += v.str();
  }
  return out;
}

}  // namespace chutes::rows
