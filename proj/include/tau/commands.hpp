#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace tau::cli {

enum ExitCode : int {
  kOk = 0,
  kConfigError = 2,
  kNumericalFailure = 3,
  kIoError = 4,
};

/// Shortest round-trip-safe text for CSV cells: 17 significant digits.
std::string format_double(double v);

/// Writes text to path in one piece. Throws IoError.
void write_file(const std::string& path, const std::string& text);

// Each command writes its files, reports to `out`, and ends with a single
// status line on `err` ("status: ok" or "error: ...").

int cmd_solve(const std::string& config_path, const std::string& out_csv,
              std::ostream& out, std::ostream& err);

enum class Table { One, Two };

struct TableOptions {
  std::vector<std::size_t> degrees;  // empty: the published columns
  std::size_t reference_degree = 600;
};

int cmd_table(Table which, const std::string& out_csv, const TableOptions& options,
              std::ostream& out, std::ostream& err);

int cmd_bessel(unsigned m, const std::vector<std::size_t>& degrees,
               const std::string& out_dir, std::ostream& out, std::ostream& err);

int cmd_opmatrix(const std::string& basis_spec, const std::string& kind,
                 std::size_t size, double lower, const std::string& out_csv,
                 std::ostream& out, std::ostream& err);

int cmd_condition_demo(std::size_t degree, const std::string& out_csv,
                       std::ostream& out, std::ostream& err);

}  // namespace tau::cli
