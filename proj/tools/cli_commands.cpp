#include "cli_commands.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "zernike/verify.hpp"

namespace zernike::cli {

using interbasis::Pair;
using interbasis::Route;

Pair parse_pair(const std::string& s) {
  if (s == "I-II") return Pair::I_II;
  if (s == "I-III") return Pair::I_III;
  if (s == "II-III") return Pair::II_III;
  throw domain_error("unknown pair '" + s + "' (expected I-II, I-III or II-III)");
}

Route parse_route(const std::string& s) {
  if (s == "3f2") return Route::Hyper3F2;
  if (s == "cg") return Route::ClebschGordan;
  if (s == "hahn") return Route::Hahn;
  if (s == "cgsum") return Route::CGSum;
  if (s == "4f3") return Route::Hyper4F3;
  if (s == "racah") return Route::Racah;
  throw domain_error("unknown route '" + s + "'");
}

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  if (s == "ppm") return Format::ppm;
  throw domain_error("unknown format '" + s + "'");
}

bases::System parse_system(const std::string& s) {
  if (s == "I") return bases::System::I;
  if (s == "II") return bases::System::II;
  if (s == "III") return bases::System::III;
  throw domain_error("unknown system '" + s + "' (expected I, II or III)");
}

namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void label_fields(const bases::MultipletLabel& l, int& a, int& b) {
  if (l.kind == bases::LabelKind::polar) {
    a = l.n;
    b = l.m;
  } else {
    a = l.k1;
    b = l.k2;
  }
}

} // namespace

OutputRecord OutputRecord::from_entry(const interbasis::CoefficientMatrix& M, int r,
                                      int c) {
  OutputRecord rec;
  rec.pair = interbasis::to_string(M.pair);
  rec.n = M.n;
  label_fields(M.row_labels[r], rec.row_a, rec.row_b);
  label_fields(M.col_labels[c], rec.col_a, rec.col_b);
  const ExactValue& e = M.at(r, c);
  rec.phase = e.phase();
  rec.mag_num = e.magnitude().num().get_str();
  rec.mag_den = e.magnitude().den().get_str();
  rec.rad_num = e.radicand().num().get_str();
  rec.rad_den = e.radicand().den().get_str();
  const auto f = e.to_float();
  rec.re = f.real();
  rec.im = f.imag();
  rec.route = interbasis::to_string(M.route);
  return rec;
}

std::string to_csv(const OutputRecord& r) {
  std::ostringstream os;
  os << r.pair << ',' << r.n << ',' << r.row_a << ',' << r.row_b << ',' << r.col_a << ','
     << r.col_b << ',' << r.phase << ',' << r.mag_num << ',' << r.mag_den << ','
     << r.rad_num << ',' << r.rad_den << ',' << fmt_double(r.re) << ','
     << fmt_double(r.im) << ',' << r.route;
  return os.str();
}

OutputRecord record_from_csv(const std::string& line) {
  std::vector<std::string> f;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      f.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  f.push_back(cur);
  if (f.size() != 14) throw domain_error("record_from_csv: expected 14 fields");
  OutputRecord r;
  r.pair = f[0];
  r.n = std::stoi(f[1]);
  r.row_a = std::stoi(f[2]);
  r.row_b = std::stoi(f[3]);
  r.col_a = std::stoi(f[4]);
  r.col_b = std::stoi(f[5]);
  r.phase = std::stoi(f[6]);
  r.mag_num = f[7];
  r.mag_den = f[8];
  r.rad_num = f[9];
  r.rad_den = f[10];
  r.re = std::stod(f[11]);
  r.im = std::stod(f[12]);
  r.route = f[13];
  return r;
}

int cmd_coeffs(std::ostream& out, Pair pair, int n, Route route, Format format,
               int threads) {
  if (format == Format::ppm)
    throw domain_error("coeffs: format must be csv or json");
  const auto M = interbasis::assemble_matrix(n, pair, route, threads);
  if (format == Format::csv) {
    out << csv_header() << '\n';
    for (int r = 0; r <= n; ++r)
      for (int c = 0; c <= n; ++c) out << to_csv(OutputRecord::from_entry(M, r, c)) << '\n';
    return kExitOk;
  }
  nlohmann::json arr = nlohmann::json::array();
  for (int r = 0; r <= n; ++r) {
    for (int c = 0; c <= n; ++c) {
      const auto rec = OutputRecord::from_entry(M, r, c);
      arr.push_back({{"pair", rec.pair},
                     {"n", rec.n},
                     {"row_k1_or_n", rec.row_a},
                     {"row_k2_or_m", rec.row_b},
                     {"col_k1_or_n", rec.col_a},
                     {"col_k2_or_m", rec.col_b},
                     {"phase", rec.phase},
                     {"mag_num", rec.mag_num},
                     {"mag_den", rec.mag_den},
                     {"rad_num", rec.rad_num},
                     {"rad_den", rec.rad_den},
                     {"re", rec.re},
                     {"im", rec.im},
                     {"route", rec.route}});
    }
  }
  out << arr.dump(2) << '\n';
  return kExitOk;
}

namespace {

// linear diverging map: t in [-1,1] -> blue-white-red, clipped
void diverging_rgb(double t, unsigned char rgb[3]) {
  t = std::max(-1.0, std::min(1.0, t));
  const double r = t >= 0 ? 1.0 : 1.0 + t;
  const double g = 1.0 - std::abs(t);
  const double b = t <= 0 ? 1.0 : 1.0 - t;
  rgb[0] = static_cast<unsigned char>(std::lround(255.0 * r));
  rgb[1] = static_cast<unsigned char>(std::lround(255.0 * g));
  rgb[2] = static_cast<unsigned char>(std::lround(255.0 * b));
}

double displayed_component(const bases::BasisId& basis, const std::complex<double>& v) {
  if (basis.system == bases::System::I && basis.label.m < 0) return v.imag();
  return v.real();
}

} // namespace

int cmd_grid(std::ostream& out, bases::System system, const bases::MultipletLabel& label,
             int resolution, Format format, int threads) {
  if (resolution < 32 || resolution > 4096)
    throw domain_error("grid: resolution must lie in [32, 4096]");
  if (format == Format::json) throw domain_error("grid: format must be csv or ppm");
  const bases::BasisId basis{system, label, bases::Domain::disk};
  basis.validate();
  const auto g = oracle::sample_grid(basis, resolution, threads);
  if (format == Format::csv) {
    for (int r = 0; r < resolution; ++r) {
      for (int c = 0; c < resolution; ++c) {
        if (c) out << ',';
        if (g.inside(r, c)) out << fmt_double(displayed_component(basis, g.at(r, c)));
      }
      out << '\n';
    }
    return kExitOk;
  }
  double vmax = 0.0;
  for (int r = 0; r < resolution; ++r)
    for (int c = 0; c < resolution; ++c)
      if (g.inside(r, c))
        vmax = std::max(vmax, std::abs(displayed_component(basis, g.at(r, c))));
  if (vmax == 0.0) vmax = 1.0;
  out << "P6\n" << resolution << ' ' << resolution << "\n255\n";
  for (int r = 0; r < resolution; ++r) {
    for (int c = 0; c < resolution; ++c) {
      unsigned char rgb[3] = {255, 255, 255};
      if (g.inside(r, c))
        diverging_rgb(displayed_component(basis, g.at(r, c)) / vmax, rgb);
      out.write(reinterpret_cast<const char*>(rgb), 3);
    }
  }
  return kExitOk;
}

int cmd_verify(std::ostream& out, const std::string& suite, int n_max, double tolerance,
               int threads) {
  const auto results = verify::run_suite(suite, n_max, tolerance, threads);
  bool all_pass = true;
  for (const auto& r : results) {
    all_pass = all_pass && r.pass;
    out << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
    if (r.tolerance > 0)
      out << "  (measured " << fmt_double(r.measured) << ", tolerance "
          << fmt_double(r.tolerance) << ")";
    else
      out << "  (" << static_cast<long>(r.measured) << " violations)";
    out << '\n';
  }
  return all_pass ? kExitOk : kExitVerification;
}

} // namespace zernike::cli
