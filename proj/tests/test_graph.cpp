#include <gtest/gtest.h>

#include <random>

#include "qclique/errors.hpp"
#include "qclique/graph.hpp"
#include "test_support.hpp"

using namespace qclique;
using qclique::testing::path3;
using qclique::testing::six_vertex;

TEST(Dimacs, single_edge) {
  const Graph g = parse_dimacs("p edge 2 1\ne 1 2\n");
  EXPECT_EQ(g.vertex_count(), 2u);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{1, 2}}));
}

TEST(Dimacs, edgeless_singleton) {
  const Graph g = parse_dimacs("p edge 1 0\n");
  EXPECT_EQ(g.vertex_count(), 1u);
  EXPECT_TRUE(g.edges().empty());
}

TEST(Dimacs, path_with_comments_and_reversed_pair) {
  const Graph g = parse_dimacs("c a comment\n\np edge 3 2\ne 2 1\ne 2 3\n");
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{1, 2}, {2, 3}}));
  EXPECT_EQ(g, path3());
}

TEST(Dimacs, duplicates_collapse) {
  // Header may count either the lines or the distinct edges.
  EXPECT_EQ(parse_dimacs("p edge 3 3\ne 1 2\ne 2 1\ne 2 3\n"), path3());
  EXPECT_EQ(parse_dimacs("p edge 3 2\ne 1 2\ne 2 1\ne 2 3\n"), path3());
}

TEST(Dimacs, errors_name_the_line) {
  auto line_of = [](const char* text) {
    try {
      parse_dimacs(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  EXPECT_EQ(line_of("p edge x 1\n"), 1u);
  EXPECT_EQ(line_of("p edge 2 1\ne 1 3\n"), 2u);
  EXPECT_EQ(line_of("p edge 2 1\ne 2 2\n"), 2u);
  EXPECT_EQ(line_of("c\np edge 2 1\ne 1 0\n"), 3u);
  EXPECT_EQ(line_of("e 1 2\n"), 1u);
  EXPECT_EQ(line_of("p edge 3 1\nx\n"), 2u);
  EXPECT_THROW(parse_dimacs(""), ParseError);
  EXPECT_THROW(parse_dimacs("p edge 3 5\ne 1 2\n"), ParseError);
}

TEST(Dimacs, writer_round_trips) {
  const Graph g = six_vertex();
  EXPECT_EQ(parse_dimacs(to_dimacs(g)), g);
}

TEST(Complement, path) {
  const Graph c = complement(path3());
  EXPECT_EQ(c.vertex_count(), 3u);
  EXPECT_EQ(c.edges(), (std::vector<Edge>{{1, 3}}));
}

TEST(Complement, complete_becomes_edgeless) {
  const Graph c = complement(Graph::complete(4));
  EXPECT_EQ(c.vertex_count(), 4u);
  EXPECT_EQ(c.edge_count(), 0u);
}

TEST(Complement, involution_and_edge_count) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::size_t n = 1 + seed % 10;
    const Graph g = Graph::random(n, 0.4, seed);
    const Graph c = complement(g);
    EXPECT_EQ(c.edge_count(), n * (n - 1) / 2 - g.edge_count());
    EXPECT_EQ(complement(c), g);
  }
}

TEST(LegalClique, examples) {
  EXPECT_FALSE(is_legal_clique(path3(), CliqueBits::from_string("101")));
  EXPECT_TRUE(is_legal_clique(path3(), CliqueBits::from_string("000")));
  EXPECT_TRUE(is_legal_clique(six_vertex(), CliqueBits::from_string("111100")));
  EXPECT_THROW(is_legal_clique(path3(), CliqueBits::from_string("10")), std::invalid_argument);
}

TEST(LegalClique, agrees_with_complement_formulation) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t n = 1 + seed % 12;
    const Graph g = Graph::random(n, 0.6, 100 + seed);
    const Graph c = complement(g);
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
      const CliqueBits bits(n, x);
      bool no_complement_edge = true;
      for (const Edge& e : c.edges()) {
        if (bits.contains(e.first) && bits.contains(e.second)) no_complement_edge = false;
      }
      ASSERT_EQ(is_legal_clique(g, bits), no_complement_edge) << bits.to_string();
    }
  }
}

TEST(CliqueBits, string_and_mask_agree) {
  const CliqueBits x = CliqueBits::from_string("110");
  EXPECT_EQ(x.mask(), 0b110u);
  EXPECT_TRUE(x.contains(1));
  EXPECT_FALSE(x.contains(3));
  EXPECT_EQ(x.weight(), 2u);
  EXPECT_EQ(x.to_string(), "110");
  EXPECT_THROW(CliqueBits(2, 0b100), DomainError);
}

TEST(BruteForce, examples) {
  const MaxCliques p = max_cliques_bruteforce(path3());
  EXPECT_EQ(p.size, 2u);
  EXPECT_EQ(p.witnesses,
            (std::vector<CliqueBits>{CliqueBits::from_string("011"), CliqueBits::from_string("110")}));

  const MaxCliques f = max_cliques_bruteforce(six_vertex());
  EXPECT_EQ(f.size, 4u);
  EXPECT_EQ(f.witnesses, (std::vector<CliqueBits>{CliqueBits::from_string("111100")}));

  const MaxCliques k3 = max_cliques_bruteforce(Graph::complete(3));
  EXPECT_EQ(k3.size, 3u);
  EXPECT_EQ(k3.witnesses, (std::vector<CliqueBits>{CliqueBits::from_string("111")}));
}

TEST(BruteForce, edgeless_has_size_one) {
  const MaxCliques e = max_cliques_bruteforce(Graph(4, {}));
  EXPECT_EQ(e.size, 1u);
  EXPECT_EQ(e.witnesses.size(), 4u);
}

TEST(BruteForce, guards) {
  EXPECT_THROW(max_cliques_bruteforce(Graph(0, {})), DomainError);
  EXPECT_THROW(max_cliques_bruteforce(Graph(26, {})), ResourceError);
}

TEST(BruteForce, monotone_under_edge_addition) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 3 + trial % 7;
    Graph g = Graph::random(n, 0.3, 500 + trial);
    std::size_t previous = max_cliques_bruteforce(g).size;
    const Graph c = complement(g);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const Edge& e : g.edges()) edges.emplace_back(e.first, e.second);
    for (const Edge& e : c.edges()) {
      edges.emplace_back(e.first, e.second);
      const std::size_t now = max_cliques_bruteforce(Graph(n, edges)).size;
      EXPECT_GE(now, previous);
      previous = now;
    }
    EXPECT_EQ(previous, n);
  }
}

TEST(CountSolutions, examples) {
  EXPECT_EQ(count_solutions(path3(), 2), 2u);
  EXPECT_EQ(count_solutions(path3(), 3), 0u);
  EXPECT_EQ(count_solutions(six_vertex(), 0), 1u);
  EXPECT_EQ(count_solutions(six_vertex(), 4), 1u);
  EXPECT_THROW(count_solutions(path3(), 4), DomainError);
}

TEST(CountSolutions, sums_to_all_legal_cliques) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const std::size_t n = 1 + seed % 11;
    const Graph g = Graph::random(n, 0.5, 900 + seed);
    std::uint64_t by_level = 0;
    for (std::size_t i = 0; i <= n; ++i) by_level += count_solutions(g, i);
    std::uint64_t legal = 0;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x)
      legal += is_legal_clique(g, CliqueBits(n, x));
    EXPECT_EQ(by_level, legal);
    const auto table = legal_clique_table(g);
    EXPECT_EQ(std::uint64_t(std::count(table.begin(), table.end(), 1)), legal);
  }
}
