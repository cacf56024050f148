#include "cli_app.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "qphase/exact_states.hpp"
#include "qphase/version.hpp"

namespace qphase::cli {

namespace {

constexpr const char* kUsage =
    "usage: qphase pmf exact|approx|oracle|parity displaced|tpcs [flags]\n"
    "       qphase compare displaced|tpcs [flags]\n"
    "       qphase qgrid fock|displaced|tpcs|product [flags]\n"
    "       qphase phases displaced [flags]\n"
    "       qphase replay <out.meta.json> [--out path]\n"
    "flags: --n --beta --r --m --nmax --window xmin:xmax:ymin:ymax --res NXxNY\n"
    "       --prefactor amplitude|paper-final --x2 consistent|paper-literal\n"
    "       --seed --out --strict\n";

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class Enum, std::size_t N>
struct Names {
  std::array<std::pair<Enum, const char*>, N> table;

  const char* name(Enum e) const {
    for (const auto& [k, v] : table) {
      if (k == e) return v;
    }
    return "?";
  }
  Enum parse(const std::string& s, const char* what) const {
    for (const auto& [k, v] : table) {
      if (s == v) return k;
    }
    throw UsageError(std::string("unknown ") + what + " '" + s + "'");
  }
};

constexpr Names<Command, 4> kCommands{{{{Command::pmf, "pmf"},
                                        {Command::compare, "compare"},
                                        {Command::qgrid, "qgrid"},
                                        {Command::phases, "phases"}}}};
constexpr Names<Method, 4> kMethods{{{{Method::exact, "exact"},
                                      {Method::approx, "approx"},
                                      {Method::oracle, "oracle"},
                                      {Method::parity, "parity"}}}};
constexpr Names<Family, 4> kFamilies{{{{Family::displaced, "displaced"},
                                       {Family::tpcs, "tpcs"},
                                       {Family::fock, "fock"},
                                       {Family::product, "product"}}}};
constexpr Names<PrefactorMode, 2> kPrefactors{
    {{{PrefactorMode::amplitude, "amplitude"}, {PrefactorMode::paper_final, "paper-final"}}}};
constexpr Names<X2Mode, 2> kX2Modes{{{{X2Mode::consistent, "consistent"}, {X2Mode::paper_literal, "paper-literal"}}}};

double parse_real(const std::string& s, const char* what) {
  std::size_t used = 0;
  double v = 0.;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw UsageError(std::string("non-numeric value for ") + what + ": '" + s + "'");
  }
  if (used != s.size() || !std::isfinite(v)) {
    throw UsageError(std::string("invalid value for ") + what + ": '" + s + "'");
  }
  return v;
}

std::uint32_t parse_index(const std::string& s, const char* what) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw UsageError(std::string("non-numeric value for ") + what + ": '" + s + "'");
  }
  if (used != s.size()) throw UsageError(std::string("invalid value for ") + what + ": '" + s + "'");
  if (v < 0 || v > 100'000'000) throw UsageError(std::string(what) + " must be a non-negative integer");
  return static_cast<std::uint32_t>(v);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

struct Window {
  double x_min, x_max, y_min, y_max;
};

Window parse_window(const std::string& s) {
  const auto p = split(s, ':');
  if (p.size() != 4) throw UsageError("--window expects xmin:xmax:ymin:ymax");
  Window w{parse_real(p[0], "--window"), parse_real(p[1], "--window"), parse_real(p[2], "--window"),
           parse_real(p[3], "--window")};
  if (!(w.x_min < w.x_max) || !(w.y_min < w.y_max)) throw UsageError("--window needs xmin < xmax and ymin < ymax");
  return w;
}

std::pair<std::uint32_t, std::uint32_t> parse_res(const std::string& s) {
  const auto p = split(s, 'x');
  if (p.size() != 2) throw UsageError("--res expects NXxNY");
  const auto nx = parse_index(p[0], "--res");
  const auto ny = parse_index(p[1], "--res");
  if (nx < 2 || ny < 2) throw UsageError("--res needs at least 2 nodes per axis");
  return {nx, ny};
}

DisplacedNumberState displaced_of(const RunConfig& c) { return {*c.n, *c.beta}; }
TwoPhotonCoherentState tpcs_of(const RunConfig& c) { return {*c.beta, *c.r}; }

State state_of(const RunConfig& c) {
  if (c.family == Family::tpcs) return tpcs_of(c);
  return displaced_of(c);
}

QGridSelector selector_of(const RunConfig& c) {
  switch (c.family) {
    case Family::fock: return FockSelector{*c.m};
    case Family::displaced: return displaced_of(c);
    case Family::tpcs: return tpcs_of(c);
    case Family::product: return ProductSelector{*c.m, displaced_of(c)};
  }
  throw UsageError("unknown family");
}

bool uses_grid(const RunConfig& c) {
  return c.command == Command::qgrid || (c.command == Command::pmf && c.method == Method::oracle);
}

// Row range [lo, hi] of an index table.
std::pair<std::uint32_t, std::uint32_t> rows_of(const RunConfig& c) {
  if (c.m) return {*c.m, *c.m};
  return {0, *c.nmax};
}

std::string header_for(const RunConfig& c) {
  switch (c.command) {
    case Command::pmf: return "m,p";
    case Command::compare: return "m,p_exact,p_approx,area,phase";
    case Command::qgrid: return "x,y,q";
    case Command::phases: return "m,psi_shifted,psi_wkb_shifted";
  }
  return "";
}

template <class T>
nlohmann::json opt_json(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

template <class T>
std::optional<T> json_opt(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

// Single-index geometric quantity exists (for --strict).
bool overlap_exists(const RunConfig& c, std::uint32_t m) {
  if (c.family == Family::displaced) {
    return circle_intersection(m, *c.n, *c.beta).has_value() && band_overlap_area(m, *c.n, *c.beta) > 0.;
  }
  const auto st = tpcs_of(c);
  return tpcs_intersection(m, st, c.x2).has_value() && tpcs_overlap_area(m, st).area > 0.;
}

void write_pmf(const RunConfig& c, std::ostream& csv, std::ostream& diag) {
  const auto [lo, hi] = rows_of(c);
  const bool strict_single = c.strict && c.m.has_value();
  if (strict_single && (c.method == Method::approx || c.method == Method::parity) && !overlap_exists(c, lo)) {
    throw StrictDomainError("no phase-space overlap at m = " + std::to_string(lo));
  }

  std::vector<double> p;
  switch (c.method) {
    case Method::exact:
      p = pmf_table(state_of(c), hi).values;
      break;
    case Method::approx:
      if (c.family == Family::displaced) {
        p = approx_pmf_table(displaced_of(c), hi, c.prefactor).values;
      } else {
        if (*c.r < 2.) diag << "qphase: warning: r < 2 is outside the vertical-line regime\n";
        p = approx_pmf_table(tpcs_of(c), hi, {c.prefactor, c.x2, TpcsPhaseForm::full}).values;
      }
      break;
    case Method::parity:
      if (*c.r < 2.) diag << "qphase: warning: r < 2 is outside the vertical-line regime\n";
      p = parity_limit_table(tpcs_of(c), hi, c.x2).values;
      break;
    case Method::oracle: {
      const OracleResult res = overlap_amplitudes_oracle(hi, state_of(c), *c.grid);
      if (!res.window_adequate) {
        diag << "qphase: warning: quadrature window too small (boundary/peak = " << res.boundary_ratio << ")\n";
      }
      p.reserve(res.amplitudes.size());
      for (const auto& a : res.amplitudes) p.push_back(std::norm(a));
      break;
    }
  }
  csv << header_for(c) << '\n';
  for (std::uint32_t m = lo; m <= hi; ++m) csv << m << ',' << format_real(p[m]) << '\n';
}

void write_compare(const RunConfig& c, std::ostream& csv, std::ostream& diag) {
  const auto [lo, hi] = rows_of(c);
  if (c.strict && c.m && !overlap_exists(c, lo)) {
    throw StrictDomainError("no phase-space overlap at m = " + std::to_string(lo));
  }
  ComparisonReport rep;
  if (c.family == Family::displaced) {
    rep = compare_displaced(displaced_of(c), hi, c.prefactor);
  } else {
    if (*c.r < 2.) diag << "qphase: warning: r < 2 is outside the vertical-line regime\n";
    rep = compare_tpcs(tpcs_of(c), hi, {c.prefactor, c.x2, TpcsPhaseForm::full});
  }
  csv << header_for(c) << '\n';
  for (std::uint32_t m = lo; m <= hi; ++m) {
    const auto& row = rep.rows[m];
    csv << m << ',' << format_real(row.p_exact) << ',' << format_real(row.p_approx) << ','
        << format_real(row.area) << ',';
    if (row.phase) csv << format_real(*row.phase);
    csv << '\n';
  }
}

void write_phases(const RunConfig& c, std::ostream& csv) {
  const auto [lo, hi] = rows_of(c);
  const std::uint32_t n = *c.n;
  const double beta = *c.beta;
  const double shift = n * std::numbers::pi;
  csv << header_for(c) << '\n';
  for (std::uint32_t m = lo; m <= hi; ++m) {
    std::optional<double> psi, wkb;
    if (circle_intersection(m, n, beta)) psi = displaced_phase(m, n, beta);
    try {
      wkb = wkb_phase(m, n, beta);
    } catch (const std::domain_error&) {
    }
    if (c.strict && c.m && (!psi || !wkb)) {
      throw StrictDomainError(std::string(!psi ? "circles do not intersect" : "WKB turning point undefined") +
                              " at m = " + std::to_string(m));
    }
    csv << m << ',';
    if (psi) csv << format_real((*psi + shift) / std::numbers::pi);
    csv << ',';
    if (wkb) csv << format_real((*wkb + shift) / std::numbers::pi);
    csv << '\n';
  }
}

void write_qgrid(const RunConfig& c, std::ostream& csv) {
  const auto samples = q_grid(selector_of(c), *c.grid);
  csv << header_for(c) << '\n';
  for (const auto& s : samples) csv << format_real(s.x) << ',' << format_real(s.y) << ',' << format_real(s.q) << '\n';
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << content;
  f.flush();
  if (!f) throw IoError("failed writing '" + path + "'");
}

}  // namespace

std::string format_real(double v) {
  if (v == 0.) v = 0.;  // no "-0"
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.11e", v);
  return buf;
}

RunConfig parse_args(std::span<const std::string> args) {
  CLI::App app{"phase-space photon statistics", "qphase"};
  app.set_help_flag();
  std::vector<std::string> words;
  std::string n, m, beta, r, nmax, window, res, prefactor, x2, out;
  std::uint64_t seed = 0;
  bool strict = false;
  app.add_option("command", words);
  auto* o_n = app.add_option("--n", n);
  auto* o_m = app.add_option("--m", m);
  auto* o_beta = app.add_option("--beta", beta);
  auto* o_r = app.add_option("--r", r);
  auto* o_nmax = app.add_option("--nmax", nmax);
  auto* o_window = app.add_option("--window", window);
  auto* o_res = app.add_option("--res", res);
  auto* o_prefactor = app.add_option("--prefactor", prefactor);
  auto* o_x2 = app.add_option("--x2", x2);
  app.add_option("--seed", seed);
  app.add_option("--out", out);
  app.add_flag("--strict", strict);

  // CLI11 wants argv order reversed when given a vector.
  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (words.empty()) throw UsageError("missing command");
  RunConfig c;
  c.command = kCommands.parse(words[0], "command");
  std::size_t expected = 2;
  if (c.command == Command::pmf) {
    if (words.size() < 2) throw UsageError("pmf needs a method: exact|approx|oracle|parity");
    c.method = kMethods.parse(words[1], "pmf method");
    if (words.size() < 3) throw UsageError("pmf needs a state family: displaced|tpcs");
    c.family = kFamilies.parse(words[2], "state family");
    expected = 3;
  } else {
    if (words.size() < 2) throw UsageError(std::string(kCommands.name(c.command)) + " needs a family");
    c.family = kFamilies.parse(words[1], "family");
  }
  if (words.size() > expected) throw UsageError("unexpected argument '" + words[expected] + "'");

  if (o_n->count()) c.n = parse_index(n, "--n");
  if (o_m->count()) c.m = parse_index(m, "--m");
  if (o_beta->count()) c.beta = parse_real(beta, "--beta");
  if (o_r->count()) c.r = parse_real(r, "--r");
  if (o_nmax->count()) c.nmax = parse_index(nmax, "--nmax");
  if (o_prefactor->count()) c.prefactor = kPrefactors.parse(prefactor, "prefactor mode");
  if (o_x2->count()) c.x2 = kX2Modes.parse(x2, "x2 mode");
  c.seed = seed;
  c.out = out;
  c.strict = strict;

  if (o_window->count() || o_res->count()) {
    if (!uses_grid(c)) throw UsageError("--window/--res only apply to qgrid and pmf oracle");
    validate(c);
    GridSpec g = c.command == Command::qgrid ? default_q_grid(selector_of(c))
                                             : default_oracle_grid(c.m.value_or(c.nmax.value_or(0)), state_of(c));
    if (o_window->count()) {
      const Window w = parse_window(window);
      g = GridSpec::covering(w.x_min, w.x_max, w.y_min, w.y_max, 0.05);
    }
    if (o_res->count()) std::tie(g.nx, g.ny) = parse_res(res);
    c.grid = g;
  }
  validate(c);
  return c;
}

void validate(const RunConfig& c) {
  const auto need = [](bool ok, const char* msg) {
    if (!ok) throw UsageError(msg);
  };
  switch (c.command) {
    case Command::pmf:
      need(c.family == Family::displaced || c.family == Family::tpcs, "pmf supports displaced|tpcs");
      need(c.method != Method::parity || c.family == Family::tpcs, "pmf parity is only defined for tpcs");
      break;
    case Command::compare:
      need(c.family == Family::displaced || c.family == Family::tpcs, "compare supports displaced|tpcs");
      break;
    case Command::phases:
      need(c.family == Family::displaced, "phases supports displaced only");
      break;
    case Command::qgrid:
      break;
  }
  const bool displaced_like = c.family == Family::displaced || c.family == Family::product;
  if (displaced_like) {
    need(c.n.has_value(), "--n is required");
    need(c.beta.has_value(), "--beta is required");
  }
  if (c.family == Family::tpcs) {
    need(c.beta.has_value(), "--beta is required");
    need(c.r.has_value(), "--r is required");
    need(*c.r >= 0., "--r must be >= 0");
  }
  if (c.family == Family::fock || c.family == Family::product) need(c.m.has_value(), "--m is required");
  if (c.command == Command::qgrid && (c.family == Family::displaced || c.family == Family::tpcs)) {
    need(!c.m.has_value(), "--m does not apply to this grid");
  }
  const bool geometric = c.command == Command::compare || c.command == Command::phases ||
                         (c.command == Command::pmf && c.method == Method::approx);
  if (geometric && c.family == Family::displaced) need(*c.beta > 0., "--beta must be > 0 for the overlap picture");
  if (c.grid) c.grid->validate();
}

RunConfig resolve(RunConfig c) {
  validate(c);
  const bool indexed = c.command != Command::qgrid;
  if (indexed && !c.nmax) {
    c.nmax = default_truncation(state_of(c));
    if (c.m) c.nmax = std::max(*c.nmax, *c.m);
  }
  if (indexed && c.m && *c.m > *c.nmax) c.nmax = *c.m;
  if (uses_grid(c) && !c.grid) {
    c.grid = c.command == Command::qgrid ? default_q_grid(selector_of(c))
                                         : default_oracle_grid(*c.nmax, state_of(c));
  }
  return c;
}

nlohmann::json to_json(const RunConfig& c) {
  nlohmann::json j;
  j["tool"] = "qphase";
  j["version"] = kVersion;
  j["command"] = kCommands.name(c.command);
  j["method"] = c.command == Command::pmf ? nlohmann::json(kMethods.name(c.method)) : nlohmann::json(nullptr);
  j["family"] = kFamilies.name(c.family);
  j["n"] = opt_json(c.n);
  j["m"] = opt_json(c.m);
  j["beta"] = opt_json(c.beta);
  j["r"] = opt_json(c.r);
  j["nmax"] = opt_json(c.nmax);
  for (const char* k : {"x_min", "x_max", "y_min", "y_max", "nx", "ny"}) j[k] = nullptr;
  if (c.grid) {
    j["x_min"] = c.grid->x_min;
    j["x_max"] = c.grid->x_max;
    j["y_min"] = c.grid->y_min;
    j["y_max"] = c.grid->y_max;
    j["nx"] = c.grid->nx;
    j["ny"] = c.grid->ny;
  }
  j["prefactor"] = kPrefactors.name(c.prefactor);
  j["x2"] = kX2Modes.name(c.x2);
  j["seed"] = c.seed;
  j["out"] = c.out;
  j["strict"] = c.strict;
  return j;
}

RunConfig from_json(const nlohmann::json& j) {
  try {
    RunConfig c;
    c.command = kCommands.parse(j.at("command").get<std::string>(), "command");
    if (c.command == Command::pmf) c.method = kMethods.parse(j.at("method").get<std::string>(), "pmf method");
    c.family = kFamilies.parse(j.at("family").get<std::string>(), "family");
    c.n = json_opt<std::uint32_t>(j, "n");
    c.m = json_opt<std::uint32_t>(j, "m");
    c.beta = json_opt<double>(j, "beta");
    c.r = json_opt<double>(j, "r");
    c.nmax = json_opt<std::uint32_t>(j, "nmax");
    if (auto nx = json_opt<std::uint32_t>(j, "nx")) {
      GridSpec g;
      g.x_min = j.at("x_min").get<double>();
      g.x_max = j.at("x_max").get<double>();
      g.y_min = j.at("y_min").get<double>();
      g.y_max = j.at("y_max").get<double>();
      g.nx = *nx;
      g.ny = j.at("ny").get<std::uint32_t>();
      c.grid = g;
    }
    c.prefactor = kPrefactors.parse(j.value("prefactor", "amplitude"), "prefactor mode");
    c.x2 = kX2Modes.parse(j.value("x2", "consistent"), "x2 mode");
    c.seed = j.value("seed", std::uint64_t{0});
    c.out = j.value("out", std::string{});
    c.strict = j.value("strict", false);
    validate(c);
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed metadata: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("malformed metadata: ") + e.what());
  }
}

void write_table(const RunConfig& c, std::ostream& csv, std::ostream& diag) {
  switch (c.command) {
    case Command::pmf: return write_pmf(c, csv, diag);
    case Command::compare: return write_compare(c, csv, diag);
    case Command::qgrid: return write_qgrid(c, csv);
    case Command::phases: return write_phases(c, csv);
  }
}

int run(const RunConfig& cfg, std::ostream& stdout_stream, std::ostream& diag) {
  try {
    const RunConfig c = resolve(cfg);
    std::ostringstream csv;
    write_table(c, csv, diag);
    if (c.out.empty()) {
      stdout_stream << csv.str();
      stdout_stream.flush();
      if (!stdout_stream) throw IoError("failed writing to standard output");
      return 0;
    }
    write_file(c.out, csv.str());
    write_file(c.out + ".meta.json", to_json(c).dump(2) + "\n");
    return 0;
  } catch (const UsageError& e) {
    diag << "qphase: error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    diag << "qphase: error: " << e.what() << '\n';
    return 2;
  } catch (const StrictDomainError& e) {
    diag << "qphase: domain error: " << e.what() << '\n';
    return 3;
  } catch (const IoError& e) {
    diag << "qphase: i/o error: " << e.what() << '\n';
    return 1;
  }
}

int main_entry(std::span<const std::string> args, std::ostream& stdout_stream, std::ostream& diag) {
  for (const auto& a : args) {
    if (a == "-h" || a == "--help") {
      stdout_stream << kUsage;
      return 0;
    }
  }
  try {
    if (!args.empty() && args[0] == "replay") {
      if (args.size() != 2 && !(args.size() == 4 && args[2] == "--out")) {
        throw UsageError("replay expects <meta.json> [--out path]");
      }
      std::ifstream f(args[1]);
      if (!f) {
        diag << "qphase: i/o error: cannot read '" << args[1] << "'\n";
        return 1;
      }
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(f);
      } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("cannot parse metadata: ") + e.what());
      }
      RunConfig c = from_json(j);
      if (args.size() == 4) c.out = args[3];
      return run(c, stdout_stream, diag);
    }
    return run(parse_args(args), stdout_stream, diag);
  } catch (const UsageError& e) {
    diag << "qphase: error: " << e.what() << '\n' << kUsage;
    return 2;
  }
}

}  // namespace qphase::cli
