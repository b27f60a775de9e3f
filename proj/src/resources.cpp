#include "qclique/resources.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "qclique/errors.hpp"

namespace qclique {

namespace {

void check_nm(std::size_t n, std::size_t m) {
  if (n == 0) throw DomainError("n must be >= 1");
  if (m > n * (n - 1) / 2) {
    throw DomainError("m = " + std::to_string(m) + " exceeds n(n-1)/2 for n = " +
                      std::to_string(n));
  }
}

GateCounts tally(const Circuit& c) {
  GateCounts counts;
  for (const Gate& g : lower_negated_controls(c).gates) ++counts[g.kind];
  return counts;
}

AsymptoticTerm scaled(AsymptoticTerm t, double factor) {
  return {t.coefficient * factor, t.constant * factor};
}

std::string kind_key(GateKind k) {
  std::string out(gate_name(k));
  for (char& ch : out) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return out;
}

}  // namespace

GateCounts& GateCounts::operator+=(const GateCounts& o) {
  for (std::size_t i = 0; i < by_kind.size(); ++i) by_kind[i] += o.by_kind[i];
  return *this;
}

GateCounts GateCounts::scaled(std::uint64_t factor) const {
  GateCounts out = *this;
  for (auto& v : out.by_kind) v *= factor;
  return out;
}

GateCounts ResourceReport::stage_sum() const {
  GateCounts sum;
  for (const StageCounts& s : stages) sum += s.counts;
  return sum;
}

ResourceReport count_gates(const Circuit& c) {
  ResourceReport r;
  r.totals = tally(c);
  r.qubit_total = c.qubit_count;
  return r;
}

ResourceReport grover_resources(const Graph& g, std::size_t level, std::size_t iterations) {
  if (level > g.vertex_count()) throw DomainError("level outside 0..n");
  const RegisterLayout regs = layout(g);
  const Circuit exclusion = build_exclusion(g, regs);
  const Circuit classifier = build_classifier(regs);

  GateCounts superposition = tally(build_superposition(regs));
  superposition[GateKind::kH] += 1;  // H(O)
  GateCounts kickback;
  kickback[GateKind::kCnot] = 1;
  GateCounts uncompute = tally(reverse(classifier));
  uncompute += tally(reverse(exclusion));
  GateCounts readout;
  readout[GateKind::kH] = 1;

  ResourceReport r;
  r.qubit_total = regs.total();
  r.measurements = 1;
  r.stages = {
      {"superposition", superposition},
      {"exclusion", tally(exclusion).scaled(iterations)},
      {"classifier", tally(classifier).scaled(iterations)},
      {"kickback", kickback.scaled(iterations)},
      {"uncompute", uncompute.scaled(iterations)},
      {"diffusion", tally(build_diffusion(regs)).scaled(iterations)},
      {"readout", readout},
  };
  r.totals = r.stage_sum();
  return r;
}

GateCounts grover_closed_form(std::size_t n, std::size_t m, std::size_t iterations) {
  check_nm(n, m);
  const std::uint64_t k = iterations;
  const std::uint64_t tri = n * (n + 1);
  GateCounts c;
  c[GateKind::kH] = n + 2 + 2 * n * k;
  c[GateKind::kX] = 2 * tri * k;
  c[GateKind::kPsg] = k;
  if (m >= 1) {
    c[GateKind::kToffoli] = k * (4 * m + 2 * tri);
    c[GateKind::kCnot] = k;
  } else {
    // No exclusion; the classifier's base row is two CNOTs instead of two
    // Toffolis, computed and uncomputed.
    c[GateKind::kToffoli] = k * 2 * (tri - 2);
    c[GateKind::kCnot] = 5 * k;
  }
  return c;
}

std::size_t qubit_count(std::size_t n, std::size_t m) {
  check_nm(n, m);
  const std::size_t z = n * (n + 3) / 2;
  return m >= 1 ? 2 * m + n + 2 + z : n + 1 + z;
}

double AsymptoticTerm::evaluate(std::size_t n) const {
  return coefficient * std::pow(2.0, static_cast<double>(n) / 2.0) + constant;
}

AsymptoticEstimate asymptotic_estimate(std::size_t n, std::size_t m, EstimateCase which) {
  check_nm(n, m);
  const double nd = static_cast<double>(n);
  const double md = static_cast<double>(m);
  AsymptoticEstimate single{
      .hadamard = {2.0 * nd, nd + 1.0},
      .not_gate = {2.0 * (nd * nd + nd), 0.0},
      .cnot = {1.0, 0.0},
      .toffoli = {4.0 * md + 2.0 * (nd * nd + nd), 0.0},
      .psg = {1.0, 0.0},
      .measurement = {0.0, 1.0},
  };
  double factor = 1.0;
  switch (which) {
    case EstimateCase::kSingle: return single;
    case EstimateCase::kWorst: factor = nd; break;
    case EstimateCase::kAverage: factor = (nd + 1.0) / 2.0; break;
  }
  return AsymptoticEstimate{
      scaled(single.hadamard, factor), scaled(single.not_gate, factor),
      scaled(single.cnot, factor),     scaled(single.toffoli, factor),
      scaled(single.psg, factor),      scaled(single.measurement, factor),
  };
}

std::pair<std::uint64_t, std::uint64_t> sat_reduction_size(long long nvars, long long nclauses) {
  if (nvars < 1 || nclauses < 1) throw DomainError("3-SAT sizes must be positive");
  const auto v = static_cast<std::uint64_t>(nvars);
  const auto c = static_cast<std::uint64_t>(nclauses);
  const std::uint64_t vertices = 2 * v + 3 * c;
  return {vertices, vertices * (vertices - 1) / 2 - (v + 6 * c)};
}

std::string format_resource_table(const ResourceReport& r) {
  std::ostringstream out;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-14s", "stage");
  out << buf;
  for (GateKind k : kAllGateKinds) {
    std::snprintf(buf, sizeof buf, "%10s", std::string(gate_name(k)).c_str());
    out << buf;
  }
  out << '\n';
  auto row = [&](const std::string& name, const GateCounts& c) {
    std::snprintf(buf, sizeof buf, "%-14s", name.c_str());
    out << buf;
    for (GateKind k : kAllGateKinds) {
      std::snprintf(buf, sizeof buf, "%10llu", static_cast<unsigned long long>(c[k]));
      out << buf;
    }
    out << '\n';
  };
  for (const StageCounts& s : r.stages) row(s.name, s.counts);
  row("total", r.totals);
  out << "qubits " << r.qubit_total << '\n';
  out << "measurements " << r.measurements << '\n';
  return out.str();
}

std::string format_resource_kv(const ResourceReport& r) {
  std::ostringstream out;
  out << "qubits=" << r.qubit_total << '\n';
  out << "measurements=" << r.measurements << '\n';
  for (GateKind k : kAllGateKinds) out << "total." << kind_key(k) << '=' << r.totals[k] << '\n';
  for (const StageCounts& s : r.stages) {
    for (GateKind k : kAllGateKinds) {
      out << "stage." << s.name << '.' << kind_key(k) << '=' << s.counts[k] << '\n';
    }
  }
  return out.str();
}

ResourceReport parse_resource_kv(std::string_view text) {
  ResourceReport r;
  std::istringstream in{std::string(text)};
  std::size_t line_no = 0;
  auto kind_of = [&](const std::string& key) {
    for (GateKind k : kAllGateKinds) {
      if (kind_key(k) == key) return k;
    }
    throw ParseError(line_no, "unknown gate kind `" + key + "`");
  };
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(line_no, "expected key=value");
    const std::string key = line.substr(0, eq);
    if (key.starts_with("estimate.")) continue;
    std::uint64_t value = 0;
    try {
      std::size_t used = 0;
      value = std::stoull(line.substr(eq + 1), &used);
      if (used != line.size() - eq - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ParseError(line_no, "bad value for " + key);
    }
    if (key == "qubits") {
      r.qubit_total = value;
    } else if (key == "measurements") {
      r.measurements = value;
    } else if (key.starts_with("total.")) {
      r.totals[kind_of(key.substr(6))] = value;
    } else if (key.starts_with("stage.")) {
      const auto dot = key.rfind('.');
      if (dot <= 6) throw ParseError(line_no, "malformed stage key");
      const std::string stage = key.substr(6, dot - 6);
      if (r.stages.empty() || r.stages.back().name != stage) r.stages.push_back({stage, {}});
      r.stages.back().counts[kind_of(key.substr(dot + 1))] = value;
    } else {
      throw ParseError(line_no, "unknown key " + key);
    }
  }
  return r;
}

}  // namespace qclique
