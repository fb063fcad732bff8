#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "clausen/mpcontext.hpp"
#include "clausen/quadrature.hpp"
#include "clausen/real.hpp"

namespace clausen {

inline constexpr std::uint64_t kDefaultSeed = 7;

/// What an identity evaluator sees: precision, a shared quadrature engine,
/// and the seed for identities checked at sampled arguments.
struct EvalEnv {
  const PrecisionContext& ctx;
  const TanhSinh& quad;
  std::uint64_t seed;

  /// Generator for this identity; depends only on (seed, id).
  std::mt19937_64 rng(const std::string& id) const;
  /// Uniform value in [lo, hi) built from 53 random bits, exact in binary.
  Real uniform(std::mt19937_64& gen, const Real& lo, const Real& hi) const;
};

/// Both sides of an identity.  Sampled identities report the sample with
/// the largest discrepancy and describe it in `detail`.
struct Evaluation {
  Real lhs;
  Real rhs;
  std::string detail;
};

struct IdentitySpec {
  std::string id;
  std::string description;
  /// Short name of what is being compared.
  std::string topic;
  int default_digits = 50;
  bool sampled = false;
  std::function<Evaluation(const EvalEnv&)> evaluate;
};

struct IdentityReport {
  std::string id;
  Real lhs_value;
  Real rhs_value;
  int agree_digits = 0;
  int threshold = 0;
  bool passed = false;
  std::chrono::duration<double> elapsed{};
  int target_digits = 0;
  std::optional<std::uint64_t> seed;
  std::string detail;
  /// Set when an evaluator threw; the report is then failed.
  std::string error;
};

struct VerifyOptions {
  int workers = 1;
  std::uint64_t seed = kDefaultSeed;
  /// Defaults to target_digits - guard_digits / 2.
  std::optional<int> threshold;
  int guard_digits = kDefaultGuardDigits;
};

/// Every identity in the I7 = L_{-7}(2) proof chain, in a fixed order.
const std::vector<IdentitySpec>& registry();

/// Throws LookupError for an unknown id.
const IdentitySpec& find_identity(const std::string& id);

std::vector<std::string> identity_ids();

/// Evaluates both sides of `id` at `target_digits`.  Unknown ids throw
/// LookupError; evaluator failures produce a failed report.
IdentityReport verify(const std::string& id, int target_digits, const VerifyOptions& options = {});

/// Same, reusing an existing context and quadrature engine.
IdentityReport verify(const IdentitySpec& spec, const EvalEnv& env, std::optional<int> threshold = {});

/// Runs the whole registry in registry order; failures do not stop the sweep.
std::vector<IdentityReport> verify_all(int target_digits, const VerifyOptions& options = {});

struct VerificationSummary {
  int total = 0;
  int passed = 0;
  int failed = 0;
  std::chrono::duration<double> elapsed{};
  bool all_passed() const noexcept { return failed == 0; }
};

VerificationSummary summarize(const std::vector<IdentityReport>& reports);

/// Aligned text table, one row per report, followed by a summary line.
std::string format_text(const std::vector<IdentityReport>& reports);

/// JSON document {"reports": [...], "summary": {...}}.  Values are decimal
/// strings with `target_digits` places.
std::string format_json(const std::vector<IdentityReport>& reports);

}  // namespace clausen
