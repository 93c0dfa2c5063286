#pragma once

#include "chutes/path.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

// The e-th power map on the units modulo a prime p, read as an undirected
// graph: the quotient of the up/down graph by residues mod p.
namespace chutes::modgraph {

struct PowerGraph {
  std::uint64_t p = 0;
  unsigned e = 0;
  std::vector<std::uint64_t> image;  // image[x] = x^e mod p for x in 1..p-1; image[0] unused

  std::uint64_t vertex_count() const { return p - 1; }
};

/// Throws std::invalid_argument unless p is prime and e >= 2.
PowerGraph build_power_graph(std::uint64_t p, unsigned e);

/// Component id per vertex (index x, entry 0 unused), numbered in order of
/// each component's smallest vertex.
std::vector<std::uint64_t> component_labels(const PowerGraph& graph);
std::uint64_t count_components_traversal(const PowerGraph& graph);

struct FormulaTerm {
  std::uint64_t divisor;
  std::uint64_t phi;
  std::uint64_t order;
};

struct ComponentFormula {
  std::uint64_t rho = 1;  // largest divisor of p-1 coprime to e
  std::uint64_t count = 0;
  std::vector<FormulaTerm> terms;
};

/// Sum over divisors k of rho of phi(k) / ord_k(e).
ComponentFormula count_components_formula(std::uint64_t p, unsigned e);

struct Verdict {
  bool maximal = false;
  std::string reason;  // empty when maximal, else the first failed condition
};

/// d prime, r a unit mod d, and radical(d - 1) | e.
Verdict is_maximal(const ProblemParams& params);

/// Independent check by closing {r mod d} under x -> x^e and its inverse on the
/// residues mod d. Requires d <= 2000.
bool is_maximal_bruteforce(const ProblemParams& params);

/// Every unit maps to 1 in one step, i.e. (p - 1) | e.
bool is_star(std::uint64_t p, unsigned e);

/// (p-1)/q for the least prime q with q^2 | p-1, or empty when p-1 is squarefree.
std::optional<std::uint64_t> exists_interesting_exponent(std::uint64_t p);

struct PrimeClass {
  std::uint64_t p = 0;
  std::optional<std::uint64_t> fermat_like_base;  // q with p = q^k + 1
  unsigned base_exponent = 0;                     // that k, 0 when there is no base
  bool p_minus_1_squarefree = false;
};

PrimeClass classify_prime(std::uint64_t p);

struct PowerMapAnalysis {
  std::uint64_t p = 0;
  unsigned e = 0;
  std::uint64_t rho = 1;
  std::uint64_t formula_count = 0;
  std::uint64_t traversal_count = 0;
  bool is_connected = false;
  bool is_star = false;
};

PowerMapAnalysis analyze(std::uint64_t p, unsigned e);

/// Directed edges x -> x^e mod p, vertices colored by component.
std::string to_dot(const PowerGraph& graph);

}  // namespace chutes::modgraph
