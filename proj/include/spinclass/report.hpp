#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "spinclass/exact.hpp"

namespace spinclass::report {

using Json = nlohmann::ordered_json;

struct Step {
  std::string claim;
  std::string citation;
  bool verdict = false;
  Json witness = Json::object();
};

struct Report {
  std::string command;
  Json inputs = Json::object();
  std::uint64_t seed = exact::kDefaultSeed;
  std::vector<Step> steps;

  /// Pass iff every step passes (and there is at least one).
  bool verdict() const;
};

/// Malformed command arguments; maps to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunOptions {
  std::uint64_t seed = exact::kDefaultSeed;
  int samples = 20;
  /// Inject the printed Spin6 weight list into the n = 6 lemma check.
  bool printed_spin6_weights = false;
  /// Run the embedding pipeline with the non-divisible candidate for E.
  bool tamper_other_candidate = false;
  bool swap_labels = false;
};

inline constexpr int kMaxCliffordN = 12;

Report cmd_clifford(int n, const RunOptions& options = {});
/// indices: comma-separated list drawn from 1..6, e.g. "1,2,6".
Report cmd_stabilizer(const std::string& indices, const RunOptions& options = {});
Report cmd_lemma_cohomo(int n, const RunOptions& options = {});
/// p1 is the coefficient of x^2; euler is the coefficient of x^2 (n = 4) or x^3 (n = 6).
Report cmd_classify(int n, long p1, std::optional<long> euler, const RunOptions& options = {});
Report cmd_embed(const RunOptions& options = {});
/// Sampled Kronecker lift checks.
Report cmd_tensor(const RunOptions& options = {});
/// Exact-arithmetic infrastructure checks on sampled instances.
Report cmd_infrastructure(const RunOptions& options = {});
Report cmd_all(const RunOptions& options = {});

/// Expected number of Spin(n)-bundles for admissible data, k the p1 parameter.
std::size_t expected_bundle_count(int n, long k);

Json to_json(const Report& r);
std::string to_text(const Report& r);

}  // namespace spinclass::report
