#include "chutes/bounds.hpp"

#include "chutes/arith.hpp"

#include <algorithm>
#include <stdexcept>

namespace chutes::bounds {

namespace {

constexpr std::array<std::array<unsigned, 3>, 4> kBeltFamilies{{
    // n mod 5, n - m, n^2 mod 5
    {1, 2, 1},
    {4, 3, 1},
    {3, 1, 4},
    {2, 4, 4},
}};

void require_query(const BoundQuery& q) {
  q.params.validate();
  if (q.half_length < 1) throw std::invalid_argument("half_length must be >= 1");
  if (q.x < 1 || q.y < 1) throw std::invalid_argument("path endpoints must be positive");
}

BigInt ceil_div(const BigInt& a, const BigInt& b) { return (a + b - 1) / b; }

}  // namespace

BeltEndpointBound belt_endpoint_bound(std::uint64_t step_budget) {
  if (step_budget < 2) throw std::invalid_argument("step_budget must be >= 2");
  BeltEndpointBound out{};
  for (std::size_t i = 0; i < kBeltFamilies.size(); ++i) {
    const auto [res, gap, cls] = kBeltFamilies[i];
    BeltFamily& fam = out.families[i];
    fam = {res, gap, cls, std::nullopt, std::nullopt};
    // Steps for m^2 -> n^2 are 2(n^2 - m^2)/5 = 2 gap (2n - gap)/5 < budget.
    const u128 limit = u128{5} * step_budget;
    auto steps_times5 = [gap = u128{gap}](u128 n) { return 2 * gap * (2 * n - gap); };
    u128 n = limit / (4 * gap) + gap + 1;
    while (n > gap && steps_times5(n) >= limit) --n;
    while (n > gap && n % 5 != res) --n;
    if (n < gap + 2 || steps_times5(n) >= limit) continue;  // start square must be >= 2^2
    fam.n = static_cast<std::uint64_t>(n);
    fam.steps = static_cast<std::uint64_t>(steps_times5(n) / 5);
    const std::uint64_t endpoint = *fam.n * *fam.n;
    auto& slot = cls == 1 ? out.class1 : out.class4;
    if (!slot || endpoint > *slot) slot = endpoint;
  }
  return out;
}

BigInt howmax_bound(std::uint64_t half_length) {
  const std::uint64_t l = std::max<std::uint64_t>(half_length, 3);
  return ceil_div(pow(BigInt(5) * l + 1, 4), 16);
}

PathMaxBound path_max_bound(const BoundQuery& query) {
  require_query(query);
  if (!query.params.is_putnam_shape()) {
    throw std::invalid_argument("path_max_bound is specific to d = 5, e = 2");
  }
  PathMaxBound out;
  out.belt_with_power = howmax_bound(query.half_length);
  out.start_branch = pow(BigInt(query.x + 5), 2);
  out.end_branch = pow(query.y, 2);
  out.max = std::max({out.belt_with_power, out.start_branch, out.end_branch});
  return out;
}

PathMaxBound general_path_max_bound(const BoundQuery& query) {
  require_query(query);
  const std::uint64_t d = query.params.d;
  const unsigned e = query.params.e;
  const BigInt dl = BigInt(d) * query.half_length;

  // Case 1: the belt into the maximum contains a lesser e-th power.
  const BigInt q = ceil_div(dl, e);
  BigInt t = e == 2 ? q : arith::integer_root(q, e - 1);
  if (pow(t, e - 1) < q) ++t;

  // Case 2: it does not; uses z^e - z >= (1 - 2^(1-e)) z^e.
  const BigInt half_power = BigInt(1) << (e - 1);

  PathMaxBound out;
  out.belt_with_power = pow(BigInt(1 + t), e * e);
  out.belt_without_power = ceil_div(pow(dl * half_power, e), pow(BigInt(half_power - 1), e));
  out.start_branch = pow(BigInt(query.x + d), e);
  out.end_branch = pow(query.y, e);
  out.max = std::max({out.belt_with_power, *out.belt_without_power, out.start_branch,
                      out.end_branch});
  return out;
}

std::uint64_t half_length_for_rows(std::uint64_t max_rows) {
  // Row i is reached by i - 1 edges.
  const std::uint64_t edges = max_rows > 0 ? max_rows - 1 : 0;
  return std::max<std::uint64_t>(1, (edges + 1) / 2);
}

BigInt certified_cutoff(const ProblemParams& params, const BigInt& max_target,
                        std::uint64_t max_rows) {
  const BoundQuery query{BigInt(params.r), max_target, half_length_for_rows(max_rows), params};
  return params.is_putnam_shape() ? path_max_bound(query).max
                                  : general_path_max_bound(query).max;
}

}  // namespace chutes::bounds
