#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qclique/graph.hpp"

namespace qclique::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kParse = 2, kResource = 3 };

/// One row of the exclusion + classifier truth table: the data bits, every
/// ebar value, then z_{i,i} .. z_{i,0} for i = 1..n.
struct TruthRow {
  std::string x;
  std::vector<int> ancillas;
};

struct TruthTable {
  std::vector<std::string> columns;  // ancilla column names
  std::vector<TruthRow> rows;        // x = 0..0 to 1..1
};

/// Classical evaluation of exclusion then classifier on every basis input.
TruthTable classifier_truth_table(const Graph& g);

/// The three-vertex path 1-2-3 used for the worked example.
Graph worked_example_graph();

/// Entry point shared by the binary and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qclique::cli
