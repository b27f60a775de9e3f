#include "qclique/graph.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>

#include "qclique/errors.hpp"

namespace qclique {

namespace {

std::uint64_t low_mask(std::size_t n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

void require_same_length(const Graph& g, const CliqueBits& x) {
  if (x.size() != g.vertex_count()) {
    throw std::invalid_argument("clique bit string has length " + std::to_string(x.size()) +
                                " but graph has " + std::to_string(g.vertex_count()) +
                                " vertices");
  }
}

// Counts cliques of exactly `remaining` more vertices drawn from `candidates`,
// each candidate adjacent to every vertex chosen so far.
std::uint64_t count_extensions(const Graph& g, std::uint64_t candidates, std::size_t remaining) {
  if (remaining == 0) return 1;
  if (static_cast<std::size_t>(std::popcount(candidates)) < remaining) return 0;
  const std::size_t n = g.vertex_count();
  std::uint64_t total = 0;
  while (candidates != 0) {
    const int bit = std::countr_zero(candidates);
    candidates &= candidates - 1;
    const std::size_t v = n - static_cast<std::size_t>(bit);
    // Only later-indexed bits remain in `candidates`, so each set is counted once.
    total += count_extensions(g, candidates & g.neighbourhood(v), remaining - 1);
  }
  return total;
}

}  // namespace

CliqueBits::CliqueBits(std::size_t n, std::uint64_t mask) : n_(n), mask_(mask) {
  if (n > kMaxVertices) throw DomainError("clique bit string longer than 64");
  if ((mask & ~low_mask(n)) != 0) throw DomainError("clique mask has bits beyond length n");
}

CliqueBits CliqueBits::from_string(std::string_view bits) {
  if (bits.size() > kMaxVertices) throw DomainError("clique bit string longer than 64");
  std::uint64_t mask = 0;
  for (char ch : bits) {
    if (ch != '0' && ch != '1') throw DomainError("clique bit string must be 0/1 characters");
    mask = (mask << 1) | static_cast<std::uint64_t>(ch == '1');
  }
  return CliqueBits(bits.size(), mask);
}

std::size_t CliqueBits::weight() const noexcept {
  return static_cast<std::size_t>(std::popcount(mask_));
}

bool CliqueBits::contains(std::size_t v) const {
  if (v < 1 || v > n_) throw std::out_of_range("vertex out of range");
  return (mask_ & vertex_bit(n_, v)) != 0;
}

std::string CliqueBits::to_string() const {
  std::string out(n_, '0');
  for (std::size_t v = 1; v <= n_; ++v) {
    if (mask_ & vertex_bit(n_, v)) out[v - 1] = '1';
  }
  return out;
}

Graph::Graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges)
    : n_(n), adjacency_(n, 0) {
  if (n > kMaxVertices) throw DomainError("graphs are limited to 64 vertices");
  edges_.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a < 1 || a > n || b < 1 || b > n) {
      throw DomainError("edge (" + std::to_string(a) + "," + std::to_string(b) +
                        ") has an endpoint outside 1.." + std::to_string(n));
    }
    if (a == b) throw DomainError("self-loop on vertex " + std::to_string(a));
    edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const Edge& e : edges_) {
    adjacency_[e.first - 1] |= vertex_bit(n, e.second);
    adjacency_[e.second - 1] |= vertex_bit(n, e.first);
  }
}

Graph Graph::complete(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
  return Graph(n, edges);
}

Graph Graph::random(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  return Graph(n, edges);
}

bool Graph::adjacent(std::size_t u, std::size_t v) const {
  if (u < 1 || u > n_ || v < 1 || v > n_) throw std::out_of_range("vertex out of range");
  return (adjacency_[u - 1] & vertex_bit(n_, v)) != 0;
}

std::uint64_t Graph::neighbourhood(std::size_t v) const {
  if (v < 1 || v > n_) throw std::out_of_range("vertex out of range");
  return adjacency_[v - 1];
}

Graph complement(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::pair<std::size_t, std::size_t>> missing;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      if (!g.adjacent(i, j)) missing.emplace_back(i, j);
  return Graph(n, missing);
}

bool is_legal_clique(const Graph& g, const CliqueBits& x) {
  require_same_length(g, x);
  const std::size_t n = g.vertex_count();
  // Walk the complement pairs: one selected pair of non-neighbours is enough.
  for (std::size_t i = 1; i <= n; ++i) {
    if (!x.contains(i)) continue;
    for (std::size_t j = i + 1; j <= n; ++j) {
      if (x.contains(j) && !g.adjacent(i, j)) return false;
    }
  }
  return true;
}

MaxCliques max_cliques_bruteforce(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw DomainError("maximum clique of the empty graph is undefined");
  if (n > kBruteForceMaxVertices) {
    throw ResourceError("brute-force enumeration refused for n = " + std::to_string(n) +
                        " (limit " + std::to_string(kBruteForceMaxVertices) + ")");
  }
  // Pairwise adjacency over the edge list, independent of the complement.
  const auto& edges = g.edges();
  auto is_clique = [&](std::uint64_t x) {
    const std::size_t want = static_cast<std::size_t>(std::popcount(x));
    std::size_t present = 0;
    for (const Edge& e : edges) {
      if ((x & vertex_bit(n, e.first)) && (x & vertex_bit(n, e.second))) ++present;
    }
    return present == want * (want - (want > 0 ? 1 : 0)) / 2;
  };

  MaxCliques best;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t x = 1; x < limit; ++x) {
    const std::size_t w = static_cast<std::size_t>(std::popcount(x));
    if (w < best.size || !is_clique(x)) continue;
    if (w > best.size) {
      best.size = w;
      best.witnesses.clear();
    }
    best.witnesses.emplace_back(n, x);
  }
  return best;
}

std::uint64_t count_solutions(const Graph& g, std::size_t weight) {
  const std::size_t n = g.vertex_count();
  if (weight > n) {
    throw DomainError("weight " + std::to_string(weight) + " outside 0.." + std::to_string(n));
  }
  return count_extensions(g, low_mask(n), weight);
}

std::vector<std::uint8_t> legal_clique_table(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > 26) throw ResourceError("legal-clique table limited to n <= 26");
  std::vector<std::uint64_t> forbidden(n);
  for (std::size_t v = 1; v <= n; ++v) {
    forbidden[v - 1] = low_mask(n) & ~g.neighbourhood(v) & ~vertex_bit(n, v);
  }
  const std::int64_t size = std::int64_t{1} << n;
  std::vector<std::uint8_t> table(static_cast<std::size_t>(size));
#pragma omp parallel for schedule(static) if (size > 4096)
  for (std::int64_t i = 0; i < size; ++i) {
    const auto x = static_cast<std::uint64_t>(i);
    bool legal = true;
    for (std::size_t v = 1; v <= n && legal; ++v) {
      if ((x & vertex_bit(n, v)) && (x & forbidden[v - 1])) legal = false;
    }
    table[static_cast<std::size_t>(i)] = legal ? 1 : 0;
  }
  return table;
}

}  // namespace qclique
