#include "chutes/modgraph.hpp"

#include "chutes/arith.hpp"
#include "chutes/disjoint_set.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

namespace chutes::modgraph {

namespace {

void require_prime(std::uint64_t p) {
  if (!arith::is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

void require_exponent(unsigned e) {
  if (e < 2) throw std::invalid_argument("exponent must be >= 2");
}

// Residue graph is tiny; a plain trial loop keeps the oracle free of the
// Miller-Rabin path.
bool naive_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t k = 2; k * k <= n; ++k) {
    if (n % k == 0) return false;
  }
  return true;
}

}  // namespace

PowerGraph build_power_graph(std::uint64_t p, unsigned e) {
  require_prime(p);
  require_exponent(e);
  PowerGraph g;
  g.p = p;
  g.e = e;
  g.image.assign(p, 0);
  for (std::uint64_t x = 1; x < p; ++x) g.image[x] = arith::pow_mod(x, e, p);
  return g;
}

std::vector<std::uint64_t> component_labels(const PowerGraph& graph) {
  DisjointSet sets(graph.p);
  for (std::uint64_t x = 1; x < graph.p; ++x) sets.unite(x, graph.image[x]);
  std::vector<std::uint64_t> label(graph.p, 0);
  std::vector<std::uint64_t> root_label(graph.p, 0);
  std::uint64_t next = 0;
  for (std::uint64_t x = 1; x < graph.p; ++x) {
    const std::size_t root = sets.find(x);
    if (root_label[root] == 0) root_label[root] = ++next;
    label[x] = root_label[root] - 1;
  }
  return label;
}

std::uint64_t count_components_traversal(const PowerGraph& graph) {
  DisjointSet sets(graph.p);
  for (std::uint64_t x = 1; x < graph.p; ++x) sets.unite(x, graph.image[x]);
  return sets.set_count() - 1;  // residue 0 is not a vertex and stays a singleton
}

ComponentFormula count_components_formula(std::uint64_t p, unsigned e) {
  require_prime(p);
  require_exponent(e);
  ComponentFormula out;
  out.rho = p - 1;
  for (const auto& f : arith::factorize(e).factors) {
    while (out.rho % f.prime == 0) out.rho /= f.prime;
  }
  for (auto k : arith::divisors(out.rho)) {
    FormulaTerm term{k, arith::euler_phi(k), arith::mult_order(e, k)};
    if (term.phi % term.order != 0) {
      throw std::logic_error("component formula term phi(" + std::to_string(k) + ")/ord is not integral");
    }
    out.count += term.phi / term.order;
    out.terms.push_back(term);
  }
  return out;
}

Verdict is_maximal(const ProblemParams& params) {
  params.validate();
  const std::uint64_t d = params.d;
  if (!arith::is_prime(d)) return {false, "d = " + std::to_string(d) + " is not prime"};
  if (params.r % d == 0) return {false, "r ≡ 0 (mod d)"};
  const std::uint64_t rad = arith::radical(d - 1);
  if (params.e % rad != 0) {
    return {false, "radical(" + std::to_string(d - 1) + ")=" + std::to_string(rad) + " ∤ " +
                       std::to_string(params.e)};
  }
  return {true, {}};
}

bool is_maximal_bruteforce(const ProblemParams& params) {
  params.validate();
  const std::uint64_t d = params.d;
  if (d > 2000) throw std::invalid_argument("is_maximal_bruteforce needs d <= 2000");
  if (!naive_prime(d) || arith::gcd(params.r, d) != 1) return false;

  std::vector<std::vector<std::uint64_t>> adjacent(d);
  for (std::uint64_t x = 0; x < d; ++x) {
    std::uint64_t y = 1;
    for (unsigned i = 0; i < params.e; ++i) y = y * x % d;
    adjacent[x].push_back(y);
    adjacent[y].push_back(x);
  }
  std::vector<bool> reached(d, false);
  std::vector<std::uint64_t> stack{params.r % d};
  reached[params.r % d] = true;
  std::uint64_t count = 1;
  while (!stack.empty()) {
    const auto x = stack.back();
    stack.pop_back();
    for (auto y : adjacent[x]) {
      if (!reached[y]) {
        reached[y] = true;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return !reached[0] && count == d - 1;
}

bool is_star(std::uint64_t p, unsigned e) {
  require_prime(p);
  require_exponent(e);
  return e % (p - 1) == 0;
}

std::optional<std::uint64_t> exists_interesting_exponent(std::uint64_t p) {
  require_prime(p);
  if (p < 3) throw std::invalid_argument("exists_interesting_exponent needs p >= 3");
  for (const auto& f : arith::factorize(p - 1).factors) {
    if (f.exponent >= 2) return (p - 1) / f.prime;
  }
  return std::nullopt;
}

PrimeClass classify_prime(std::uint64_t p) {
  require_prime(p);
  PrimeClass out;
  out.p = p;
  if (p == 2) {
    out.p_minus_1_squarefree = true;
    return out;
  }
  const auto f = arith::factorize(p - 1);
  if (f.factors.size() == 1) {
    out.fermat_like_base = f.factors.front().prime;
    out.base_exponent = f.factors.front().exponent;
  }
  out.p_minus_1_squarefree = arith::is_squarefree(p - 1);
  return out;
}

PowerMapAnalysis analyze(std::uint64_t p, unsigned e) {
  const auto formula = count_components_formula(p, e);
  PowerMapAnalysis out;
  out.p = p;
  out.e = e;
  out.rho = formula.rho;
  out.formula_count = formula.count;
  out.traversal_count = count_components_traversal(build_power_graph(p, e));
  out.is_connected = out.traversal_count == 1;
  out.is_star = is_star(p, e);
  return out;
}

std::string to_dot(const PowerGraph& graph) {
  static constexpr std::array<const char*, 12> kPalette{
      "lightblue", "lightsalmon", "palegreen", "khaki",     "plum",      "lightpink",
      "lightcyan", "wheat",       "thistle",   "lightgray", "aquamarine", "peachpuff"};
  const auto label = component_labels(graph);
  std::ostringstream out;
  out << "digraph power_map_" << graph.p << "_" << graph.e << " {\n";
  out << "  label=\"x -> x^" << graph.e << " mod " << graph.p << "\";\n";
  out << "  node [style=filled];\n";
  for (std::uint64_t x = 1; x < graph.p; ++x) {
    out << "  " << x << " [label=\"" << x << "\", color=\"" << kPalette[label[x] % kPalette.size()]
        << "\", comment=\"component " << label[x] << "\"];\n";
  }
  for (std::uint64_t x = 1; x < graph.p; ++x) {
    out << "  " << x << " -> " << graph.image[x] << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace chutes::modgraph
