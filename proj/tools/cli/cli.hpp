#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace clausen::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kNonConvergence = 3,
};

enum class Format { text, json };

struct CliConfig {
  int digits = 50;
  int workers = 1;
  Format format = Format::text;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> output_path;
};

/// Runs the command line `args` (without the program name).  Normal output
/// goes to `out` (or --output), diagnostics to `err`.  Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Individual commands, exposed for tests.  Each writes its result to `out`
// and returns an ExitCode; errors propagate as clausen exceptions.
int cmd_eval(const std::string& function, const std::vector<std::string>& args, const CliConfig& config,
             std::ostream& out);
int cmd_integrate(const std::string& target, const std::vector<std::string>& args, const CliConfig& config,
                  std::ostream& out);
int cmd_verify(const std::string& id, const CliConfig& config, std::ostream& out);
int cmd_discover(const CliConfig& config, double norm_bound, std::ostream& out);
int cmd_sample(int points, const CliConfig& config, std::ostream& out);
int cmd_constants(const CliConfig& config, std::ostream& out);

/// The I7 integrand ln|(tan t + sqrt 7)/(tan t - sqrt 7)| in double precision.
double i7_integrand(double theta);

/// Sample abscissas for the integrand plot: cell midpoints on (pi/3, pi/2),
/// moved out of the +-1e-6 band around phi7.
std::vector<double> sample_abscissas(int points);

inline constexpr double kSampleGuardBand = 1e-6;

}  // namespace clausen::cli
