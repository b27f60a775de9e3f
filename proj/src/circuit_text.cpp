#include <charconv>
#include <sstream>

#include "qclique/circuit.hpp"
#include "qclique/errors.hpp"

namespace qclique {

namespace {

std::string qubit_token(Qubit q) { return "q" + std::to_string(q); }

Qubit parse_qubit(std::size_t line, std::string_view token) {
  if (token.size() < 2 || token.front() != 'q') {
    throw ParseError(line, "expected qubit token like `q3`, got `" + std::string(token) + "`");
  }
  Qubit q = 0;
  const char* first = token.data() + 1;
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, q);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError(line, "bad qubit index in `" + std::string(token) + "`");
  }
  return q;
}

std::vector<std::string> split(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

}  // namespace

std::string to_text(const Circuit& c) {
  std::ostringstream out;
  out << "qubits " << c.qubit_count << '\n';
  out << "init ";
  for (auto bit : c.initial_bits) out << static_cast<char>('0' + bit);
  out << '\n';
  for (const auto& [name, q] : c.registers) out << "reg " << name << ' ' << qubit_token(q) << '\n';
  for (const Gate& g : c.gates) {
    out << gate_name(g.kind);
    for (const Control& ctl : g.controls) out << ' ' << (ctl.negated ? "!" : "") << qubit_token(ctl.qubit);
    for (Qubit q : g.targets) out << ' ' << qubit_token(q);
    out << '\n';
  }
  return out.str();
}

Circuit parse_circuit(std::string_view text) {
  std::istringstream in{std::string(text)};
  Circuit c;
  bool have_count = false, have_init = false;
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const auto tokens = split(line);
    if (tokens.empty() || tokens.front().starts_with('#')) continue;
    const std::string& head = tokens.front();

    if (head == "qubits") {
      if (have_count || tokens.size() != 2) throw ParseError(line_no, "bad `qubits` line");
      auto [ptr, ec] = std::from_chars(tokens[1].data(), tokens[1].data() + tokens[1].size(),
                                       c.qubit_count);
      if (ec != std::errc{} || ptr != tokens[1].data() + tokens[1].size()) {
        throw ParseError(line_no, "bad qubit count");
      }
      have_count = true;
      continue;
    }
    if (!have_count) throw ParseError(line_no, "`qubits` header must come first");

    if (head == "init") {
      const std::string bits = tokens.size() == 2 ? tokens[1] : std::string();
      if (have_init || (tokens.size() != 2 && c.qubit_count != 0) || bits.size() != c.qubit_count) {
        throw ParseError(line_no, "`init` must list one bit per qubit");
      }
      for (char ch : bits) {
        if (ch != '0' && ch != '1') throw ParseError(line_no, "initial bits must be 0/1");
        c.initial_bits.push_back(static_cast<std::uint8_t>(ch - '0'));
      }
      have_init = true;
      continue;
    }
    if (head == "reg") {
      if (tokens.size() != 3) throw ParseError(line_no, "expected `reg <name> q<index>`");
      c.registers.emplace_back(tokens[1], parse_qubit(line_no, tokens[2]));
      continue;
    }

    Gate g;
    std::size_t controls = 0;
    if (head == "H") {
      g.kind = GateKind::kH;
    } else if (head == "X") {
      g.kind = GateKind::kX;
    } else if (head == "CNOT") {
      g.kind = GateKind::kCnot;
      controls = 1;
    } else if (head == "TOFFOLI") {
      g.kind = GateKind::kToffoli;
      controls = 2;
    } else if (head == "PSG") {
      g.kind = GateKind::kPsg;
    } else {
      throw ParseError(line_no, "unknown gate `" + head + "`");
    }
    const std::size_t operands = tokens.size() - 1;
    if (g.kind == GateKind::kPsg ? operands == 0 : operands != controls + 1) {
      throw ParseError(line_no, "wrong operand count for " + head);
    }
    for (std::size_t t = 1; t < tokens.size(); ++t) {
      std::string_view tok = tokens[t];
      const bool negated = tok.starts_with('!');
      if (negated) tok.remove_prefix(1);
      const Qubit q = parse_qubit(line_no, tok);
      if (t <= controls) {
        g.controls.push_back(Control{q, negated});
      } else {
        if (negated) throw ParseError(line_no, "targets cannot be negated");
        g.targets.push_back(q);
      }
    }
    c.gates.push_back(std::move(g));
  }
  if (!have_count) throw ParseError(line_no, "missing `qubits` header");
  if (!have_init) c.initial_bits.assign(c.qubit_count, 0);
  try {
    c.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return c;
}

}  // namespace qclique
