#include "tau/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "tau/config.hpp"
#include "tau/errors.hpp"
#include "tau/experiments.hpp"
#include "tau/opmatrix.hpp"
#include "tau/problems.hpp"
#include "tau/solver.hpp"

namespace tau::cli {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open " + path + " for writing");
  f << text;
  f.close();
  if (!f) throw IoError("failed writing " + path);
}

namespace {

std::string short_double(double v) {
  std::ostringstream s;
  s.precision(3);
  s << std::scientific << v;
  return s.str();
}

// Runs body and maps library errors onto exit codes.
template <typename Body>
int run_command(std::ostream& err, Body body) {
  try {
    body();
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const SingularMatrixError& e) {
    err << "error: " << e.what() << " (cond estimate " << short_double(e.cond_estimate())
        << ")\n";
    return kNumericalFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kNumericalFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kNumericalFailure;
  }
  err << "status: ok\n";
  return kOk;
}

std::string table_csv(const experiments::ErrorTable& t) {
  std::string csv = "alpha,beta";
  for (std::size_t n : t.degrees) csv += ",n" + std::to_string(n);
  csv += ",reference\n";
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    csv += format_double(t.rows[r].alpha) + "," + format_double(t.rows[r].beta);
    for (std::size_t c = 0; c < t.degrees.size(); ++c)
      csv += "," + (t.failures[r][c].empty() ? format_double(t.cells[r][c]) : std::string("FAIL"));
    csv += "," + t.reference + "\n";
  }
  return csv;
}

}  // namespace

int cmd_solve(const std::string& config_path, const std::string& out_csv,
              std::ostream& out, std::ostream& err) {
  return run_command(err, [&] {
    const config::ProblemConfig cfg = config::load_problem(config_path);
    const TauResult r = solve_tau_with_tail(cfg.problem);
    const auto grid = uniform_grid(cfg.grid.start, cfg.grid.stop, cfg.grid.count);
    const auto y = r.solution.evaluate(grid);
    const auto ref = config::make_reference(cfg.reference);

    std::string csv = ref ? "x,y_n,reference,error\n" : "x,y_n\n";
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      csv += format_double(grid[i]) + "," + format_double(y[i]);
      if (ref) {
        const double yr = ref(grid[i]);
        const double e = std::abs(y[i] - yr);
        worst = std::max(worst, e);
        csv += "," + format_double(yr) + "," + format_double(e);
      }
      csv += "\n";
    }
    write_file(out_csv, csv);

    double tail = 0.0;
    for (double v : r.tail.values) tail = std::max(tail, std::abs(v));
    out << "basis " << cfg.problem.basis.name() << '\n'
        << "degree " << cfg.problem.degree << '\n'
        << "height " << r.solution.diagnostics.height << '\n'
        << "cond_estimate " << short_double(r.solution.diagnostics.cond_estimate) << '\n'
        << "growth " << short_double(r.solution.diagnostics.growth) << '\n'
        << "max_tail " << short_double(tail) << '\n';
    if (ref) out << "sup_error " << short_double(worst) << '\n';
  });
}

int cmd_table(Table which, const std::string& out_csv, const TableOptions& options,
              std::ostream& out, std::ostream& err) {
  return run_command(err, [&] {
    experiments::ErrorTable t;
    if (which == Table::One) {
      const auto degrees = options.degrees.empty() ? experiments::table1_degrees() : options.degrees;
      t = experiments::table1(experiments::table1_pairs(), degrees, options.reference_degree);
      out << "table1: turning-point problem, epsilon = 1e-5. No double-precision reference\n"
          << "exists at this epsilon; cells are sup distances to the Legendre-Tau solution\n"
          << "of degree " << options.reference_degree << " (consistency, not true errors).\n";
    } else {
      const auto degrees = options.degrees.empty() ? experiments::table2_degrees() : options.degrees;
      t = experiments::table2(experiments::table2_pairs(), degrees);
      out << "table2: Volterra problem, a = 1.25, sup error against the closed form.\n";
    }
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      out << t.rows[r].label;
      for (std::size_t c = 0; c < t.degrees.size(); ++c)
        out << "  n=" << t.degrees[c] << ": "
            << (t.failures[r][c].empty() ? short_double(t.cells[r][c]) : "FAIL");
      out << '\n';
    }
    write_file(out_csv, table_csv(t));
  });
}

int cmd_bessel(unsigned m, const std::vector<std::size_t>& degrees,
               const std::string& out_dir, std::ostream& out, std::ostream& err) {
  return run_command(err, [&] {
    if (!std::is_sorted(degrees.begin(), degrees.end()))
      throw ConfigError("bessel: degrees must be ascending");
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create directory " + out_dir + ": " + ec.message());
    for (std::size_t n : degrees) {
      const auto run = experiments::bessel_run(n, m, problems::kBesselRight,
                                               problems::kBesselGridPoints);
      std::string csv = "x,y_n,reference,error\n";
      for (std::size_t i = 0; i < run.x.size(); ++i) {
        csv += format_double(run.x[i]) + "," + format_double(run.y[i]) + "," +
               format_double(run.reference[i]) + "," +
               format_double(std::abs(run.y[i] - run.reference[i])) + "\n";
      }
      const auto path = std::filesystem::path(out_dir) /
                        ("bessel_m" + std::to_string(m) + "_n" + std::to_string(n) + ".csv");
      write_file(path.string(), csv);
      out << "n=" << n << "  sup_error " << short_double(run.sup_error) << "  y(0) "
          << short_double(run.value_at_left) << "  y(60)-1 "
          << short_double(run.value_at_right - 1.0) << "  cond " << short_double(run.cond_estimate)
          << "  -> " << path.string() << '\n';
    }
  });
}

int cmd_opmatrix(const std::string& basis_spec, const std::string& kind,
                 std::size_t size, double lower, const std::string& out_csv,
                 std::ostream& out, std::ostream& err) {
  return run_command(err, [&] {
    if (size == 0) throw ConfigError("opmatrix: size must be positive");
    DenseMatrix m;
    if (kind.rfind("power-", 0) == 0) {
      const PowerMatrices p = power_matrices(size);
      if (kind == "power-shift") m = p.shift;
      else if (kind == "power-derivative") m = p.derivative;
      else if (kind == "power-integral") m = p.integral;
      else if (kind == "power-volterra") m = power_volterra_matrix(size, lower);
      else throw ConfigError("opmatrix: unknown kind " + kind);
    } else {
      const RecurrenceBasis basis = config::parse_basis_spec(basis_spec);
      if (kind == "shift") {
        m = shift_matrix(basis, size).data;
      } else if (kind == "derivative") {
        m = derivative_matrix(basis, size).data;
      } else if (kind == "integral" || kind == "volterra") {
        if (size < 2) throw ConfigError("opmatrix: integral kinds need size >= 2");
        m = kind == "integral" ? integral_matrix(basis, size).data
                               : volterra_matrix(basis, size, lower).data;
      } else if (kind == "change-of-basis") {
        m = change_of_basis(basis, size - 1);
      } else {
        throw ConfigError("opmatrix: unknown kind " + kind);
      }
    }
    std::string csv = "row,col,value\n";
    std::size_t nnz = 0;
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (m(r, c) != 0.0) {
          csv += std::to_string(r) + "," + std::to_string(c) + "," + format_double(m(r, c)) + "\n";
          ++nnz;
        }
    write_file(out_csv, csv);
    out << kind << " " << size << "x" << size << ", " << nnz << " nonzeros -> " << out_csv << '\n';
  });
}

int cmd_condition_demo(std::size_t degree, const std::string& out_csv,
                       std::ostream& out, std::ostream& err) {
  return run_command(err, [&] {
    if (degree < 10) throw ConfigError("condition-demo: degree must be >= 10");
    const auto d = experiments::condition_demo(degree);
    out << "Volterra problem (a = 1.25), Legendre basis, degree " << degree << '\n'
        << "  sup error, recurrence-built matrices: " << short_double(d.recurrence_error) << '\n'
        << "  sup error, similarity-built matrices: " << short_double(d.similarity_error) << '\n'
        << "  cond_1(V) estimate:                   " << short_double(d.cond_v) << '\n'
        << "  sup |y_recurrence - y_similarity|:    " << short_double(d.path_difference) << '\n';
    if (!out_csv.empty()) {
      write_file(out_csv,
                 "degree,recurrence_error,similarity_error,cond_v,path_difference\n" +
                     std::to_string(degree) + "," + format_double(d.recurrence_error) + "," +
                     format_double(d.similarity_error) + "," + format_double(d.cond_v) + "," +
                     format_double(d.path_difference) + "\n");
    }
  });
}

}  // namespace tau::cli
