#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "witnesslab/circuits.hpp"
#include "witnesslab/errors.hpp"
#include "witnesslab/optim.hpp"
#include "witnesslab/readout.hpp"
#include "witnesslab/relax.hpp"
#include "witnesslab/witness.hpp"

namespace witnesslab::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";

/// Bad flags or a malformed state spec.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Text, Csv, Json };

struct Globals {
  Format format = Format::Text;
  std::string output;
  std::uint64_t seed = 0;
  Tolerances tol;
};

// --- number formatting ----------------------------------------------------

/// Six significant digits for reports.
std::string fmt6(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << v;
  return os.str();
}

/// Shortest round-trip representation for CSV data.
std::string fmt_exact(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

// --- argument parsing helpers ---------------------------------------------

std::vector<double> parse_doubles(const std::string& text, std::size_t count, const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    double v = 0.0;
    const char* first = item.data();
    const char* last = item.data() + item.size();
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc() || res.ptr != last) throw UsageError(what + ": '" + item + "' is not a number");
    out.push_back(v);
  }
  if (out.size() != count)
    throw UsageError(what + ": expected " + std::to_string(count) + " comma-separated values, got '" + text + "'");
  return out;
}

BellKind parse_kind(const std::string& text) {
  try {
    return parse_bell_kind(text);
  } catch (const DomainError&) {
    throw UsageError("unknown Bell state '" + text + "' (use phi+, phi-, psi+ or psi-)");
  }
}

DensityMatrix read_matrix_file(const std::string& path, const Tolerances& tol) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open state file '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError("state file '" + path + "' is not JSON: " + e.what());
  }
  const Json& entries = doc.is_object() && doc.contains("matrix") ? doc["matrix"] : doc;
  if (!entries.is_array() || entries.size() != 16)
    throw UsageError("state file '" + path + "' must hold 16 {\"re\", \"im\"} entries in row-major order");
  ComplexMatrix m(4);
  for (int k = 0; k < 16; ++k) {
    const Json& e = entries[k];
    if (!e.is_object() || !e.contains("re") || !e.contains("im") || !e["re"].is_number() || !e["im"].is_number())
      throw UsageError("state file '" + path + "': entry " + std::to_string(k) + " needs numeric re and im");
    m(k / 4, k % 4) = Complex(e["re"].get<double>(), e["im"].get<double>());
  }
  return DensityMatrix(m, tol);
}

/// bell:<kind> | bd:<c1,c2,c3> | identity | file:<path>
DensityMatrix parse_state(const std::string& spec, const Tolerances& tol) {
  if (spec == "identity") return DensityMatrix::maximally_mixed();
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw UsageError("malformed state spec '" + spec + "'");
  const std::string head = spec.substr(0, colon);
  const std::string body = spec.substr(colon + 1);
  if (head == "bell") return bell_state(parse_kind(body));
  if (head == "bd") {
    const auto c = parse_doubles(body, 3, "bd state");
    return bell_diagonal({c[0], c[1], c[2]});
  }
  if (head == "file") return read_matrix_file(body, tol);
  throw UsageError("malformed state spec '" + spec + "' (use bell:, bd:, identity or file:)");
}

Json matrix_json(const ComplexMatrix& m) {
  Json arr = Json::array();
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c) arr.push_back({{"re", m(r, c).real()}, {"im", m(r, c).imag()}});
  return arr;
}

Json envelope(const std::string& command) { return Json{{"command", command}, {"version", kVersion}}; }

void text_line(std::ostream& os, const std::string& key, const std::string& value) {
  os << std::left << std::setw(22) << key << value << '\n';
}

// --- subcommands ----------------------------------------------------------

struct WitnessArgs {
  std::string state;
  std::vector<std::string> table1;
  std::vector<std::string> coeffs;
};

int cmd_witness(const WitnessArgs& a, const Globals& g, std::ostream& os) {
  const DensityMatrix rho = parse_state(a.state, g.tol);
  const double xx = expectation(rho, pauli_string(Pauli::X, Pauli::X));
  const double yy = expectation(rho, pauli_string(Pauli::Y, Pauli::Y));
  const double zz = expectation(rho, pauli_string(Pauli::Z, Pauli::Z));
  const double f = f_witness({xx, zz});

  struct Row {
    std::string label;
    PauliWitness w;
    double value;
    bool valid;
  };
  std::vector<Row> rows;
  for (const std::string& k : a.table1) {
    const BellKind kind = parse_kind(k);
    const PauliWitness w = table1_witness(kind);
    rows.push_back({"W[" + std::string(to_string(kind)) + "]", w, eval_witness(w, rho), is_valid_witness(w, g.tol)});
  }
  for (const std::string& text : a.coeffs) {
    const auto c = parse_doubles(text, 4, "--coeffs");
    const PauliWitness w{c[0], c[1], c[2], c[3]};
    rows.push_back({"W[" + text + "]", w, eval_witness(w, rho), is_valid_witness(w, g.tol)});
  }
  // An operator that is not a valid witness cannot certify anything.
  const auto row_verdict = [](const Row& r) {
    return r.valid ? std::string(to_string(verdict(r.value))) : std::string("not a valid witness");
  };

  switch (g.format) {
    case Format::Json: {
      Json j = envelope("witness");
      j["state"] = a.state;
      j["correlations"] = {{"xx", xx}, {"yy", yy}, {"zz", zz}};
      j["f"] = {{"value", f}, {"verdict", std::string(to_string(verdict(f)))}};
      Json ws = Json::array();
      for (const Row& r : rows)
        ws.push_back({{"label", r.label},
                      {"coefficients", {r.w.c_I, r.w.c_x, r.w.c_y, r.w.c_z}},
                      {"valid", r.valid},
                      {"value", r.value},
                      {"verdict", row_verdict(r)}});
      j["witnesses"] = ws;
      os << j.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      os << "quantity,value,verdict\n";
      os << "XX," << fmt_exact(xx) << ",\n";
      os << "YY," << fmt_exact(yy) << ",\n";
      os << "ZZ," << fmt_exact(zz) << ",\n";
      os << "F," << fmt_exact(f) << ',' << to_string(verdict(f)) << '\n';
      for (const Row& r : rows) os << '"' << r.label << "\"," << fmt_exact(r.value) << ',' << row_verdict(r) << '\n';
      break;
    case Format::Text:
      text_line(os, "state", a.state);
      text_line(os, "<XX>", fmt6(xx));
      text_line(os, "<YY>", fmt6(yy));
      text_line(os, "<ZZ>", fmt6(zz));
      text_line(os, "F", fmt6(f) + "  " + std::string(to_string(verdict(f))));
      for (const Row& r : rows) text_line(os, r.label, fmt6(r.value) + "  " + row_verdict(r));
      break;
  }
  return kExitOk;
}

struct OptimalArgs {
  std::string kind;
  bool all = false;
};

int cmd_optimal_witness(const OptimalArgs& a, const Globals& g, std::ostream& os) {
  std::vector<BellKind> kinds;
  if (a.all) {
    kinds.assign(kAllBellKinds.begin(), kAllBellKinds.end());
  } else {
    if (a.kind.empty()) throw UsageError("give a Bell state (phi+, phi-, psi+, psi-) or --all");
    kinds.push_back(parse_kind(a.kind));
  }

  std::vector<OptimalWitness> results;
  for (BellKind k : kinds) results.push_back(optimal_witness(k));

  switch (g.format) {
    case Format::Json: {
      Json j = envelope("optimal-witness");
      Json rows = Json::array();
      for (std::size_t i = 0; i < kinds.size(); ++i) {
        const PauliWitness& w = results[i].witness;
        rows.push_back({{"kind", std::string(to_string(kinds[i]))},
                        {"c_I", w.c_I},
                        {"c_x", w.c_x},
                        {"c_y", w.c_y},
                        {"c_z", w.c_z},
                        {"objective", results[i].objective},
                        {"valid", is_valid_witness(w, g.tol)}});
      }
      j["rows"] = rows;
      os << j.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      os << "kind,c_I,c_x,c_y,c_z,objective\n";
      for (std::size_t i = 0; i < kinds.size(); ++i) {
        const PauliWitness& w = results[i].witness;
        os << to_string(kinds[i]) << ',' << fmt_exact(w.c_I) << ',' << fmt_exact(w.c_x) << ',' << fmt_exact(w.c_y)
           << ',' << fmt_exact(w.c_z) << ',' << fmt_exact(results[i].objective) << '\n';
      }
      break;
    case Format::Text:
      os << std::left << std::setw(6) << "state" << std::right;
      for (const char* h : {"c_I", "c_x", "c_y", "c_z", "objective"}) os << std::setw(11) << h;
      os << '\n';
      for (std::size_t i = 0; i < kinds.size(); ++i) {
        const PauliWitness& w = results[i].witness;
        os << std::left << std::setw(6) << to_string(kinds[i]) << std::right;
        for (double v : {w.c_I, w.c_x, w.c_y, w.c_z, results[i].objective}) os << std::setw(11) << fmt6(v);
        os << '\n';
      }
      break;
  }
  return kExitOk;
}

struct RobustnessArgs {
  std::string state;
};

int cmd_robustness(const RobustnessArgs& a, const Globals& g, std::ostream& os) {
  const DensityMatrix rho = parse_state(a.state, g.tol);
  RobustnessOptions opts;
  opts.tol = g.tol;
  const RobustnessResult r = generalized_robustness(rho, opts);
  const double residual = r.certificate_residual(rho);
  const std::string status = r.value > 0.0 ? "entangled" : "separable (PPT)";

  switch (g.format) {
    case Format::Json: {
      Json j = envelope("robustness");
      j["state"] = a.state;
      j["value"] = r.value;
      j["lower_bound"] = r.lower_bound;
      j["iterations"] = r.iterations;
      j["certificate_residual"] = residual;
      j["status"] = status;
      os << j.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      os << "value,lower_bound,iterations,certificate_residual\n";
      os << fmt_exact(r.value) << ',' << fmt_exact(r.lower_bound) << ',' << r.iterations << ','
         << fmt_exact(residual) << '\n';
      break;
    case Format::Text:
      text_line(os, "state", a.state);
      text_line(os, "robustness", fmt6(r.value) + "  " + status);
      text_line(os, "lower bound", fmt6(r.lower_bound));
      text_line(os, "iterations", std::to_string(r.iterations));
      text_line(os, "certificate PT min", fmt6(residual));
      break;
  }
  return kExitOk;
}

struct SweepArgs {
  std::string state = "bell:phi-";
  std::string witness = "phi-";
  double t2_I = 0.31;
  double t2_S = 0.11;
  double t1_I = RelaxationParams::kDefaultT1;
  double t1_S = RelaxationParams::kDefaultT1;
  double t_max = 1.0;
  int steps = 200;
};

int cmd_relax_sweep(const SweepArgs& a, const Globals& g, std::ostream& os) {
  const DensityMatrix rho = parse_state(a.state, g.tol);
  const RelaxationParams p(a.t1_I, a.t2_I, a.t1_S, a.t2_S);
  const BellKind kind = parse_kind(a.witness);
  RobustnessOptions opts;
  opts.tol = g.tol;
  const SweepSeries s = sweep(rho, p, table1_witness(kind), a.t_max, a.steps, opts);
  const auto tau_gr = crossing_time(s, SweepQuantity::GR);

  if (g.format == Format::Json) {
    Json j = envelope("relax-sweep");
    j["state"] = a.state;
    j["witness"] = std::string(to_string(kind));
    j["params"] = {{"t1_I", a.t1_I}, {"t2_I", a.t2_I}, {"t1_S", a.t1_S},
                   {"t2_S", a.t2_S}, {"t_max", a.t_max}, {"steps", a.steps}};
    j["tau_c"] = optional_number(s.tau_c);
    j["tau_R"] = optional_number(s.tau_R);
    j["tau_W"] = optional_number(s.tau_W);
    j["gr_vanishes_at"] = optional_number(tau_gr);
    Json rows = Json::array();
    for (std::size_t k = 0; k < s.times.size(); ++k)
      rows.push_back({{"time", s.times[k]}, {"f", s.f_values[k]}, {"w", s.w_values[k]}, {"gr", s.gr_values[k]}});
    j["rows"] = rows;
    os << j.dump(2) << '\n';
    return kExitOk;
  }

  const auto meta = [&](const char* key, const std::optional<double>& v) {
    os << "# " << key << '=' << (v ? fmt_exact(*v) : std::string("none")) << '\n';
  };
  meta("tau_c", s.tau_c);
  meta("tau_R", s.tau_R);
  meta("tau_W", s.tau_W);
  meta("gr_vanishes_at", tau_gr);
  os << "time,f,w,gr\n";
  for (std::size_t k = 0; k < s.times.size(); ++k)
    os << fmt_exact(s.times[k]) << ',' << fmt_exact(s.f_values[k]) << ',' << fmt_exact(s.w_values[k]) << ','
       << fmt_exact(s.gr_values[k]) << '\n';
  return kExitOk;
}

struct RegionArgs {
  int resolution = 21;
};

int cmd_detect_region(const RegionArgs& a, const Globals& g, std::ostream& os) {
  const auto grid = detection_region_grid(a.resolution);
  if (g.format == Format::Json) {
    std::map<std::string, int> counts;
    for (BDClass c : {BDClass::Unphysical, BDClass::Separable, BDClass::EntangledDetectedByF,
                      BDClass::EntangledUndetectedByF})
      counts[std::string(to_string(c))] = 0;
    Json points = Json::array();
    for (const GridPoint& p : grid) {
      ++counts[std::string(to_string(p.cls))];
      points.push_back({{"c1", p.c.c1}, {"c2", p.c.c2}, {"c3", p.c.c3}, {"class", std::string(to_string(p.cls))}});
    }
    Json j = envelope("detect-region");
    j["resolution"] = a.resolution;
    j["counts"] = counts;
    j["points"] = points;
    os << j.dump(2) << '\n';
    return kExitOk;
  }
  os << "c1,c2,c3,class\n";
  for (const GridPoint& p : grid)
    os << fmt_exact(p.c.c1) << ',' << fmt_exact(p.c.c2) << ',' << fmt_exact(p.c.c3) << ',' << to_string(p.cls)
       << '\n';
  return kExitOk;
}

struct SdcArgs {
  std::string eps;
  std::string msg;
};

int cmd_sdc(const SdcArgs& a, const Globals& g, std::ostream& os) {
  const auto eps = parse_doubles(a.eps, 2, "--eps");
  const auto bits = parse_doubles(a.msg, 2, "--msg");
  for (double b : bits)
    if (b != 0.0 && b != 1.0) throw UsageError("--msg bits must be 0 or 1");
  const Message m{static_cast<int>(bits[0]), static_cast<int>(bits[1])};
  const SuperdenseRun r = superdense_run({eps[0], eps[1]}, m);
  const auto decoded = decode_message(r.mz_I, r.mz_S);
  const bool success = decoded && decoded->x == m.x && decoded->z == m.z;

  switch (g.format) {
    case Format::Json: {
      Json j = envelope("sdc");
      j["eps_I"] = eps[0];
      j["eps_S"] = eps[1];
      j["message"] = {{"x", m.x}, {"z", m.z}};
      j["mz_I"] = r.mz_I;
      j["mz_S"] = r.mz_S;
      j["decoded"] = decoded ? Json{{"x", decoded->x}, {"z", decoded->z}} : Json(nullptr);
      j["success"] = success;
      os << j.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      os << "eps_I,eps_S,x,z,mz_I,mz_S,decoded_x,decoded_z,success\n";
      os << fmt_exact(eps[0]) << ',' << fmt_exact(eps[1]) << ',' << m.x << ',' << m.z << ',' << fmt_exact(r.mz_I)
         << ',' << fmt_exact(r.mz_S) << ',' << (decoded ? std::to_string(decoded->x) : "") << ','
         << (decoded ? std::to_string(decoded->z) : "") << ',' << (success ? "true" : "false") << '\n';
      break;
    case Format::Text:
      text_line(os, "message (x,z)", "(" + std::to_string(m.x) + "," + std::to_string(m.z) + ")");
      text_line(os, "<Z_I>", fmt6(r.mz_I));
      text_line(os, "<Z_S>", fmt6(r.mz_S));
      text_line(os, "decoded (x,z)",
                decoded ? "(" + std::to_string(decoded->x) + "," + std::to_string(decoded->z) + ")"
                        : std::string("inconclusive (zero magnetization)"));
      text_line(os, "result", success ? "success" : "failure");
      break;
  }
  return kExitOk;
}

struct TomographyArgs {
  std::string state;
  double sigma = 0.0;
};

int cmd_tomography(const TomographyArgs& a, const Globals& g, std::ostream& os) {
  if (!(a.sigma >= 0.0)) throw UsageError("--sigma must be non-negative");
  const DensityMatrix rho = parse_state(a.state, g.tol);
  const PauliVector measured = add_noise(pauli_vector(rho), a.sigma, g.seed);
  const TomographyResult r = pauli_tomography(measured, g.tol);
  const double f = fidelity(r.state, rho);

  switch (g.format) {
    case Format::Json: {
      Json j = envelope("tomography");
      j["state"] = a.state;
      j["sigma"] = a.sigma;
      j["seed"] = g.seed;
      j["fidelity"] = f;
      j["projection_distance"] = r.projection_distance;
      Json exp = Json::object();
      for (int k = 0; k < 15; ++k) exp[pauli_vector_label(k)] = measured[k];
      j["expectations"] = exp;
      j["matrix"] = matrix_json(r.state.matrix());
      os << j.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      os << "row,col,re,im\n";
      for (int rr = 0; rr < 4; ++rr)
        for (int cc = 0; cc < 4; ++cc)
          os << rr << ',' << cc << ',' << fmt_exact(r.state(rr, cc).real()) << ','
             << fmt_exact(r.state(rr, cc).imag()) << '\n';
      break;
    case Format::Text:
      text_line(os, "state", a.state);
      text_line(os, "sigma", fmt6(a.sigma));
      text_line(os, "seed", std::to_string(g.seed));
      text_line(os, "fidelity", fmt6(f));
      text_line(os, "projection distance", fmt6(r.projection_distance));
      os << "reconstructed state\n";
      for (int rr = 0; rr < 4; ++rr) {
        for (int cc = 0; cc < 4; ++cc) {
          const Complex z = r.state(rr, cc);
          std::ostringstream cell;
          cell << fmt6(z.real()) << (z.imag() < 0 ? "-" : "+") << fmt6(std::abs(z.imag())) << "i";
          os << "  " << std::setw(24) << cell.str();
        }
        os << '\n';
      }
      break;
  }
  return kExitOk;
}

std::optional<double> env_tolerance() {
  const char* raw = std::getenv("WITNESSLAB_TOL");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  const std::string text(raw);
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size() || !(v > 0.0))
    throw UsageError("WITNESSLAB_TOL must be a positive number, got '" + text + "'");
  return v;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entanglement witnesses, robustness and relaxation for two-spin NMR states", "witnesslab"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--output,-o", g.output, "Write to this file instead of standard output");
  app.add_option("--seed", g.seed, "Seed for noise generators")->capture_default_str();

  const std::string state_help = "State: bell:<phi+|phi-|psi+|psi->, bd:<c1,c2,c3>, identity or file:<path.json>";

  WitnessArgs wa;
  auto* witness = app.add_subcommand("witness", "Correlations, F and linear witness values for a state");
  witness->add_option("--state", wa.state, state_help)->required();
  witness->add_option("--table1", wa.table1, "Evaluate the optimal witness for this Bell state (repeatable)");
  witness->add_option("--coeffs", wa.coeffs, "Evaluate c_I,c_x,c_y,c_z (repeatable)");

  OptimalArgs oa;
  auto* optimal = app.add_subcommand("optimal-witness", "Solve the witness program for a Bell state");
  optimal->add_option("kind", oa.kind, "Bell state");
  optimal->add_flag("--all", oa.all, "All four Bell states");

  RobustnessArgs ra;
  auto* robustness = app.add_subcommand("robustness", "Generalized robustness of entanglement");
  robustness->add_option("--state", ra.state, state_help)->required();

  SweepArgs sa;
  auto* sweep_cmd = app.add_subcommand("relax-sweep", "F, W and robustness along T1/T2 relaxation");
  sweep_cmd->add_option("--state", sa.state, state_help)->capture_default_str();
  sweep_cmd->add_option("--witness", sa.witness, "Bell state whose optimal witness is tracked")->capture_default_str();
  sweep_cmd->add_option("--t2i", sa.t2_I, "T2 of spin I in seconds")->capture_default_str();
  sweep_cmd->add_option("--t2s", sa.t2_S, "T2 of spin S in seconds")->capture_default_str();
  sweep_cmd->add_option("--t1i", sa.t1_I, "T1 of spin I in seconds")->capture_default_str();
  sweep_cmd->add_option("--t1s", sa.t1_S, "T1 of spin S in seconds")->capture_default_str();
  sweep_cmd->add_option("--tmax", sa.t_max, "Sweep length in seconds")->capture_default_str();
  sweep_cmd->add_option("--steps", sa.steps, "Number of grid points")->capture_default_str();

  RegionArgs ga;
  auto* region = app.add_subcommand("detect-region", "Classify a grid of Bell-diagonal c-vectors");
  region->add_option("--resolution", ga.resolution, "Points per axis")->capture_default_str();

  SdcArgs da;
  auto* sdc = app.add_subcommand("sdc", "Superdense coding run on a thermal input");
  sdc->add_option("--eps", da.eps, "Polarizations eps_I,eps_S")->required();
  sdc->add_option("--msg", da.msg, "Message bits x,z")->required();

  TomographyArgs ta;
  auto* tomo = app.add_subcommand("tomography", "Pauli tomography from (optionally noisy) expectations");
  tomo->add_option("--state", ta.state, state_help)->required();
  tomo->add_option("--sigma", ta.sigma, "Gaussian noise on each expectation")->capture_default_str();

  const auto usage = [&](const std::string& message) {
    err << "error: " << message << "\n\n";
    const auto parsed = app.get_subcommands();
    err << (parsed.empty() ? app.help() : parsed.front()->help());
    return kExitUsage;
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    return usage(e.what());
  }

  g.format = format == "csv" ? Format::Csv : format == "json" ? Format::Json : Format::Text;

  std::ostringstream buffer;
  try {
    if (auto tol = env_tolerance()) g.tol.psd = *tol;
    int code = kExitOk;
    if (witness->parsed()) code = cmd_witness(wa, g, buffer);
    else if (optimal->parsed()) code = cmd_optimal_witness(oa, g, buffer);
    else if (robustness->parsed()) code = cmd_robustness(ra, g, buffer);
    else if (sweep_cmd->parsed()) code = cmd_relax_sweep(sa, g, buffer);
    else if (region->parsed()) code = cmd_detect_region(ga, g, buffer);
    else if (sdc->parsed()) code = cmd_sdc(da, g, buffer);
    else if (tomo->parsed()) code = cmd_tomography(ta, g, buffer);
    if (code != kExitOk) return code;
  } catch (const UsageError& e) {
    return usage(e.what());
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << "\n"
        << "bounds: [" << std::setprecision(17) << e.lower_bound() << ", " << e.upper_bound() << "]\n";
    return kExitConvergence;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }

  if (g.output.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(g.output, std::ios::binary);
    if (!file) return usage("cannot write '" + g.output + "'");
    file << buffer.str();
  }
  return kExitOk;
}

}  // namespace witnesslab::cli
