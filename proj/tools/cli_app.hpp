#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qphase/husimi.hpp"
#include "qphase/interference.hpp"
#include "qphase/phase_geometry.hpp"

namespace qphase::cli {

enum class Command { pmf, compare, qgrid, phases };
enum class Method { exact, approx, oracle, parity };
enum class Family { displaced, tpcs, fock, product };

/// Everything needed to reproduce one output table. Optional fields are
/// resolved (defaults filled in) before the table is written, and the
/// resolved form is what goes into the metadata sidecar.
struct RunConfig {
  Command command = Command::pmf;
  Method method = Method::exact;  // pmf only
  Family family = Family::displaced;

  std::optional<std::uint32_t> n;
  std::optional<std::uint32_t> m;
  std::optional<double> beta;
  std::optional<double> r;
  std::optional<std::uint32_t> nmax;
  std::optional<GridSpec> grid;

  PrefactorMode prefactor = PrefactorMode::amplitude;
  X2Mode x2 = X2Mode::consistent;
  std::uint64_t seed = 0;
  std::string out;  // empty: standard output, no sidecar
  bool strict = false;
};

/// Bad command line or inconsistent parameters (exit code 2).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Requested single-index geometric quantity does not exist under --strict (exit code 3).
class StrictDomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses the arguments after the program name. Throws UsageError.
RunConfig parse_args(std::span<const std::string> args);

/// Checks the per-command parameter requirements. Throws UsageError.
void validate(const RunConfig& cfg);

/// Fills in truncation and grid defaults.
RunConfig resolve(RunConfig cfg);

nlohmann::json to_json(const RunConfig& cfg);
RunConfig from_json(const nlohmann::json& j);

/// Writes the CSV table for a resolved config.
void write_table(const RunConfig& cfg, std::ostream& csv, std::ostream& diag);

/// Resolves, writes the CSV (to cfg.out or `stdout_stream`) and the
/// `<out>.meta.json` sidecar. Returns the process exit code.
int run(const RunConfig& cfg, std::ostream& stdout_stream, std::ostream& diag);

/// Full command-line entry point: parse, dispatch (including `replay`), map
/// errors onto exit codes 0/1/2/3.
int main_entry(std::span<const std::string> args, std::ostream& stdout_stream, std::ostream& diag);

/// 12 significant digits in scientific notation.
std::string format_real(double v);

}  // namespace qphase::cli
