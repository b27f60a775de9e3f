#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qclique {

/// Largest vertex count a Graph can hold; vertex sets are 64-bit masks.
inline constexpr std::size_t kMaxVertices = 64;

/// Enumeration guard for the brute-force clique oracle.
inline constexpr std::size_t kBruteForceMaxVertices = 25;

/// An unordered vertex pair with 1-based labels, stored with first < second.
struct Edge {
  std::size_t first;
  std::size_t second;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Candidate vertex subset x_1 ... x_n.
///
/// The mask uses the same bit order as a data-register basis index: vertex 1
/// is the most significant of the n bits, vertex n the least significant. So
/// `mask` is directly the basis index of |x_1 x_2 ... x_n>, and `to_string()`
/// prints the ket label left to right.
class CliqueBits {
 public:
  CliqueBits() = default;
  CliqueBits(std::size_t n, std::uint64_t mask);

  /// Parses a string of '0'/'1' characters, x_1 first.
  static CliqueBits from_string(std::string_view bits);

  std::size_t size() const noexcept { return n_; }
  std::uint64_t mask() const noexcept { return mask_; }
  std::size_t weight() const noexcept;
  /// Membership of 1-based vertex v.
  bool contains(std::size_t v) const;
  std::string to_string() const;

  friend bool operator==(const CliqueBits&, const CliqueBits&) = default;
  friend auto operator<=>(const CliqueBits&, const CliqueBits&) = default;

 private:
  std::size_t n_ = 0;
  std::uint64_t mask_ = 0;
};

/// Bit of 1-based vertex v inside an n-bit data-register index.
constexpr std::uint64_t vertex_bit(std::size_t n, std::size_t v) {
  return std::uint64_t{1} << (n - v);
}

/// Undirected simple graph on vertices 1..n.
///
/// Edges are kept canonical (i < j), deduplicated and sorted. Internally each
/// vertex also carries its neighbourhood as a data-register mask so that
/// clique tests are a handful of bit operations.
class Graph {
 public:
  Graph() = default;
  /// Throws DomainError on self-loops or out-of-range endpoints. Pairs may be
  /// given in either orientation; duplicates collapse.
  Graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  static Graph complete(std::size_t n);
  /// Erdos-Renyi G(n, p) with a seeded generator.
  static Graph random(std::size_t n, double p, std::uint64_t seed);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  bool adjacent(std::size_t u, std::size_t v) const;
  /// Neighbours of 1-based vertex v as a data-register mask.
  std::uint64_t neighbourhood(std::size_t v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> adjacency_;
};

/// Parses DIMACS edge format (`c`, `p edge n m`, `e i j`).
///
/// Vertices are 1-based in the file and stay 1-based in Graph's public API;
/// only the adjacency masks are 0-based. The header edge count must equal
/// either the number of `e` lines or the number of distinct edges, so files
/// listing an edge twice are accepted. `p col` headers are accepted as well.
Graph parse_dimacs(std::string_view text);
Graph read_dimacs_file(const std::string& path);
std::string to_dimacs(const Graph& g);

/// Same vertex set, exactly the pairs absent from g.
Graph complement(const Graph& g);

/// True iff no edge of the complement has both endpoints selected.
/// Throws std::invalid_argument on a length mismatch.
bool is_legal_clique(const Graph& g, const CliqueBits& x);

struct MaxCliques {
  std::size_t size = 0;
  std::vector<CliqueBits> witnesses;  // ascending by mask
};

/// Exhaustive search over all 2^n subsets. Size is never 0 for n >= 1.
MaxCliques max_cliques_bruteforce(const Graph& g);

/// Number of legal cliques of Hamming weight exactly `weight`.
std::uint64_t count_solutions(const Graph& g, std::size_t weight);

/// Legal-clique predicate for every data-register index, computed once.
/// Entry x is 1 iff x is a legal clique of g. Requires n <= 26.
std::vector<std::uint8_t> legal_clique_table(const Graph& g);

}  // namespace qclique
