#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "zernike/interbasis.hpp"
#include "zernike/oracle.hpp"

namespace zernike::cli {

enum class Format { csv, json, ppm };

// exit codes shared by all subcommands
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerification = 2;
inline constexpr int kExitIntegrity = 3;

interbasis::Pair parse_pair(const std::string& s);
interbasis::Route parse_route(const std::string& s);
Format parse_format(const std::string& s);
bases::System parse_system(const std::string& s);

/// One serialized coefficient. The float columns are to_float of the exact
/// quadruple; big integers are emitted as digit strings so nothing is ever
/// re-derived from doubles.
struct OutputRecord {
  std::string pair;
  int n = 0;
  int row_a = 0, row_b = 0; // row k1,k2 (cartesian) or n,m (polar)
  int col_a = 0, col_b = 0;
  int phase = 0;
  std::string mag_num, mag_den, rad_num, rad_den;
  double re = 0.0, im = 0.0;
  std::string route;

  static OutputRecord from_entry(const interbasis::CoefficientMatrix& M, int r, int c);
};

inline const char* csv_header() {
  return "pair,n,row_k1_or_n,row_k2_or_m,col_k1_or_n,col_k2_or_m,"
         "phase,mag_num,mag_den,rad_num,rad_den,re,im,route";
}

std::string to_csv(const OutputRecord& rec);
/// Parses one CSV data line (the inverse of to_csv).
OutputRecord record_from_csv(const std::string& line);

/// Emits the (n+1)^2 coefficient records of one pair in row-major label
/// order. format must be csv or json.
int cmd_coeffs(std::ostream& out, interbasis::Pair pair, int n, interbasis::Route route,
               Format format, int threads = 1);

/// Emits a masked grid sample of one basis function: csv matrix (empty cells
/// outside the disk) or binary PPM (P6, white outside, symmetric diverging
/// map clipped at +-max|value|). System I renders the real part for m >= 0
/// and the imaginary part for m < 0.
int cmd_grid(std::ostream& out, bases::System system, const bases::MultipletLabel& label,
             int resolution, Format format, int threads = 1);

/// Runs one named verification suite and prints one line per check; returns
/// kExitOk or kExitVerification.
int cmd_verify(std::ostream& out, const std::string& suite, int n_max, double tolerance,
               int threads = 1);

} // namespace zernike::cli
