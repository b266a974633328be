#pragma once

// Sweep drivers behind the command-line tool. Each command returns a Table;
// `checks_passed` is false when any consistency column misses its tolerance.

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace sre {

struct RunConfig {
  std::string command;
  std::string model = "xx";  // xx | xxz | clock
  double delta = 0.0;
  std::optional<double> gamma;
  int p = 2;
  std::optional<double> central_charge;
  std::vector<int> n_values{1};
  std::vector<double> alpha_grid;  // empty: command default
  std::vector<int> sizes;
  std::vector<int> cuts;           // empty: command default
  std::string out;                 // empty: stdout
  std::uint64_t seed = 0x5eed5eedULL;
  double tolerance = 1e-9;
  int j_max = 3;  // order of the 1/K series
  bool json = false;
  int threads = 0;  // 0: hardware concurrency

  /// Rejects inconsistent settings before any computation.
  void validate() const;
  double luttinger_g() const;
  double effective_delta() const;
  double clock_central_charge() const;
};

struct Table {
  std::vector<std::string> metadata;  // written as '# ' lines
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  bool checks_passed = true;
  std::vector<std::string> failures;
};

/// %.17g, with nan/inf spelled out.
std::string format_double(double v);

/// Parses "a,b,c" or "lin:START:STOP:COUNT" (COUNT points, both ends included).
std::vector<double> parse_grid(const std::string& text);

Table cmd_charged_moments(const RunConfig& cfg);
Table cmd_resolved_entropy(const RunConfig& cfg);
Table cmd_prefactor(const RunConfig& cfg);
Table cmd_exact_xx(const RunConfig& cfg);
Table cmd_asymptotics(const RunConfig& cfg);
Table cmd_clock(const RunConfig& cfg);

Table run_command(const RunConfig& cfg);

void write_csv(const Table& t, std::ostream& os);
void write_json(const Table& t, std::ostream& os);

/// Runs task(i) for i in [0, count) on a pool; results come back in index order.
std::vector<std::vector<std::vector<std::string>>> run_ordered(
    std::size_t count, int threads,
    const std::function<std::vector<std::vector<std::string>>(std::size_t)>& task);

}  // namespace sre
