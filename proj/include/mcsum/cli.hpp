#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mcsum/summarize.hpp"

namespace mcsum {

struct CliConfig {
  enum class Command { Enumerate, Summarize, Verify, Bench };
  enum class OutputFormat { Text, JsonLines };

  Command command = Command::Enumerate;
  std::string input_path;
  double tau = 0.5;
  BoundKind bound = BoundKind::Truss;
  OrderKind order = OrderKind::Truss;
  SamplingKind sampling = SamplingKind::Opt;
  YEstimatorKind y_estimator = YEstimatorKind::DegreeFiltered;
  SamplingMode mode = SamplingMode::PerBranch;
  std::uint64_t seed = 1;
  std::uint32_t runs = 5;
  OutputFormat output = OutputFormat::Text;
  bool quiet = false;
  bool force_first = false;
  std::optional<std::uint64_t> max_vertices;  // enumerate size guard

  // Bench grid; empty lists fall back to the full default grid.
  std::vector<double> bench_taus;
  std::vector<BoundKind> bench_bounds;
  std::vector<OrderKind> bench_orders;
  std::vector<SamplingKind> bench_samplings;

  SummaryConfig summary_config() const;
};

// Subcommand entry points; each returns a process exit status. Results go
// to out, diagnostics to err.
int cmd_enumerate(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_summarize(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_bench(const CliConfig& cfg, std::ostream& out, std::ostream& err);

// Parses argv (including the subcommand) and dispatches.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace mcsum
