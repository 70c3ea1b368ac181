// crystden: exact densities of torsion elements in crystallographic and
// almost-crystallographic groups, with word-metric ball censuses as the
// empirical cross-check.
//
// Subcommands:
//   density  exact point-group census (|F|, m, density, per-element table)
//   verify   BFS convergence of the empirical density toward the exact value
//   catalog  the 17 two-dimensional groups with their densities
//   growth   log-log growth degree fit against the predicted degree
//
// Exact values print as reduced fractions; every floating-point quantity is
// labeled an estimate. csv/json output is byte-stable across thread counts.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "crystden/ball_bfs.hpp"
#include "crystden/constructors.hpp"
#include "crystden/group_io.hpp"
#include "crystden/nilpotent.hpp"

namespace {

using crystden::Rat;
using Json = nlohmann::ordered_json;

std::string est4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

std::string rat_matrix_text(const crystden::RatMatrix& m) {
  std::string out = "[";
  for (int i = 0; i < m.rows; ++i) {
    out += i ? ",[" : "[";
    for (int j = 0; j < m.cols; ++j) {
      if (j) out += ',';
      out += crystden::format_rational(m.at(i, j));
    }
    out += ']';
  }
  out += ']';
  return out;
}

struct RunConfig {
  long long max_ball_elements = 5'000'000;
  std::vector<int> radii;
  int threads = 1;
  std::string format = "table";
  long long torsion_order_cap = crystden::kDefaultTorsionOrderCap;
  double tolerance = 0.0;

  crystden::CensusCaps caps() const {
    crystden::CensusCaps c;
    c.max_ball_elements = max_ball_elements;
    c.torsion_order_cap = torsion_order_cap;
    c.threads = threads;
    return c;
  }
};

struct SourceSpec {
  std::string catalog;
  std::string file;
  std::string algebra_file;
  std::string rational;
  long long cyclotomic = 0;
  long long zn = 0;
  long long heisenberg = 0;
  bool h2_example = false;
};

struct Source {
  std::string label;
  std::optional<crystden::CrystGroup> group;
  std::optional<crystden::NilAlgebra> algebra;
  std::optional<crystden::NilAutomorphism> automorphism;

  bool is_nil() const { return algebra.has_value(); }
};

void add_source_flags(CLI::App* sub, SourceSpec& s) {
  auto* grp = sub->add_option_group("source", "group or lattice to analyze");
  grp->add_option("--catalog", s.catalog,
                  "wallpaper group by name (see the catalog subcommand)");
  grp->add_option("--file", s.file, "group definition file (JSON)");
  grp->add_option("--cyclotomic", s.cyclotomic,
                  "the group Z^phi(m) with the order-m companion action");
  grp->add_option("--rational", s.rational,
                  "group of exact density p/q (0 <= p < q)");
  grp->add_option("--zn", s.zn, "free abelian group Z^n");
  grp->add_option("--heisenberg", s.heisenberg,
                  "Heisenberg lattice of dimension 2n+1");
  grp->add_flag("--heisenberg2-example", s.h2_example,
                "the 5-dimensional Heisenberg lattice with its order-4 "
                "automorphism adjoined");
  grp->add_option("--algebra-file", s.algebra_file,
                  "Lie algebra definition file (JSON)");
  grp->require_option(1);
}

// --rational keeps the typed numerator and denominator as written; the
// string is not reduced first, so density --rational 2/4 builds the 2/4
// witness, not the 1/2 one.
void parse_rational_pair(const std::string& text, long long& p, long long& q) {
  const size_t slash = text.find('/');
  if (slash == std::string::npos || slash == 0 || slash + 1 >= text.size()) {
    throw crystden::InvalidRational("expected p/q, got \"" + text + "\"");
  }
  try {
    size_t used = 0;
    p = std::stoll(text.substr(0, slash), &used);
    if (used != slash) throw std::invalid_argument(text);
    const std::string den = text.substr(slash + 1);
    q = std::stoll(den, &used);
    if (used != den.size()) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    throw crystden::InvalidRational("expected p/q, got \"" + text + "\"");
  }
}

Source resolve_source(const SourceSpec& s) {
  Source out;
  if (!s.catalog.empty()) {
    out.label = s.catalog;
    out.group = crystden::catalog_entry(s.catalog).group;
  } else if (!s.file.empty()) {
    out.label = s.file;
    out.group = crystden::load_group_file(s.file);
  } else if (s.cyclotomic != 0) {
    out.label = "cyclotomic-" + std::to_string(s.cyclotomic);
    out.group = crystden::gamma_m(s.cyclotomic);
  } else if (!s.rational.empty()) {
    long long p = 0, q = 0;
    parse_rational_pair(s.rational, p, q);
    out.label = "rational-" + std::to_string(p) + "/" + std::to_string(q);
    out.group = crystden::rational_density_group(p, q);
  } else if (s.zn != 0) {
    out.label = "zn-" + std::to_string(s.zn);
    out.group = crystden::zn_group(static_cast<int>(s.zn));
  } else if (s.heisenberg != 0) {
    out.label = "heisenberg-" + std::to_string(s.heisenberg);
    out.algebra = crystden::heisenberg(static_cast<int>(s.heisenberg));
  } else if (s.h2_example) {
    out.label = "heisenberg2-example";
    out.algebra = crystden::heisenberg(2);
    out.automorphism = crystden::h2_automorphism(*out.algebra);
  } else if (!s.algebra_file.empty()) {
    out.label = s.algebra_file;
    crystden::AlgebraFile f = crystden::load_algebra_file(s.algebra_file);
    out.algebra = std::move(f.algebra);
    out.automorphism = std::move(f.automorphism);
  }
  return out;
}

Rat exact_density(const Source& src) {
  if (src.group) return crystden::density_value(src.group->point_group).density;
  if (src.automorphism) {
    return crystden::nil_density_value(*src.automorphism).density;
  }
  return Rat(0);  // trivial point group: only the identity is torsion
}

int predicted_degree(const Source& src) {
  if (src.group) return src.group->dim;
  return crystden::lower_central_series(*src.algebra).degree;
}

struct DensityRow {
  std::string element;
  long long order = 0;
  bool has_eigenvalue_one = false;
};

struct DensityTable {
  long long group_order = 0;
  long long m = 0;
  Rat density;
  std::vector<DensityRow> rows;
};

DensityTable density_table(const Source& src, const RunConfig& cfg) {
  DensityTable out;
  if (src.group) {
    crystden::DensityReport rep =
        crystden::density_exact(src.group->point_group);
    out.group_order = rep.group_order;
    out.m = rep.m;
    out.density = rep.density;
    for (const auto& row : rep.per_element) {
      out.rows.push_back(DensityRow{crystden::matrix_text(row.element),
                                    row.order, row.has_eigenvalue_one});
    }
    return out;
  }
  const int n = src.algebra->dim();
  const long long ord =
      src.automorphism
          ? crystden::automorphism_order(*src.automorphism,
                                         cfg.torsion_order_cap)
          : 1;
  out.group_order = ord;
  crystden::RatMatrix power = crystden::RatMatrix::identity(n);
  for (long long j = 0; j < ord; ++j) {
    crystden::RatMatrix diff = power;
    for (int i = 0; i < n; ++i) diff.at(i, i) -= 1;
    const bool ev1 = crystden::rat_rank(diff) < n;
    if (!ev1) ++out.m;
    long long elt_order = 1;
    if (j != 0) elt_order = ord / std::gcd(ord, j);
    out.rows.push_back(DensityRow{rat_matrix_text(power), elt_order, ev1});
    if (src.automorphism) {
      power = crystden::rat_mul(power, src.automorphism->matrix);
    }
  }
  out.density = Rat(out.m, out.group_order);
  return out;
}

void print_density(const Source& src, const DensityTable& t,
                   const RunConfig& cfg) {
  const std::string density = crystden::format_rational(t.density);
  if (cfg.format == "csv") {
    std::cout << "source,density,element,order,has_eigenvalue_one\n";
    for (const auto& r : t.rows) {
      std::cout << src.label << ',' << density << ',' << csv_quote(r.element)
                << ',' << r.order << ','
                << (r.has_eigenvalue_one ? "yes" : "no") << '\n';
    }
    return;
  }
  if (cfg.format == "json") {
    Json doc;
    doc["source"] = src.label;
    doc["order"] = t.group_order;
    doc["m"] = t.m;
    doc["density"] = density;
    doc["elements"] = Json::array();
    for (const auto& r : t.rows) {
      doc["elements"].push_back({{"element", r.element},
                                 {"order", r.order},
                                 {"has_eigenvalue_one", r.has_eigenvalue_one}});
    }
    std::cout << doc.dump(2) << '\n';
    return;
  }
  std::cout << "source: " << src.label << '\n';
  std::cout << "|F|: " << t.group_order << '\n';
  std::cout << "m: " << t.m << '\n';
  std::cout << "density: " << density << '\n';
  std::cout << '\n';
  size_t width = 7;
  for (const auto& r : t.rows) width = std::max(width, r.element.size());
  std::cout << std::left << std::setw(static_cast<int>(width) + 2) << "element"
            << std::setw(7) << "order" << "eigenvalue-1\n";
  for (const auto& r : t.rows) {
    std::cout << std::left << std::setw(static_cast<int>(width) + 2)
              << r.element << std::setw(7) << r.order
              << (r.has_eigenvalue_one ? "yes" : "no") << '\n';
  }
}

std::vector<crystden::BallStats> run_census(const Source& src,
                                            const RunConfig& cfg) {
  if (src.group) return crystden::ball_census(*src.group, cfg.radii, cfg.caps());
  const crystden::NilAutomorphism* t =
      src.automorphism ? &*src.automorphism : nullptr;
  return crystden::nil_ball_census(*src.algebra, t, cfg.radii, cfg.caps());
}

std::string coset_cell(const crystden::BallStats& s) {
  std::string out;
  for (const auto& c : s.per_coset) {
    if (!out.empty()) out += "; ";
    out += c.label + "=" + std::to_string(c.count) + "/" +
           std::to_string(c.torsion);
  }
  return out;
}

int cmd_verify(const Source& src, const RunConfig& cfg) {
  const Rat exact = exact_density(src);
  const std::vector<crystden::BallStats> series = run_census(src, cfg);
  double final_gap = 0.0;
  std::vector<double> emp, gap;
  for (const auto& s : series) {
    const double e = crystden::to_double(crystden::empirical_density(s));
    const double g = std::abs(e - crystden::to_double(exact));
    emp.push_back(e);
    gap.push_back(g);
    final_gap = g;
  }
  const bool pass = final_gap <= cfg.tolerance;
  if (cfg.format == "csv") {
    std::cout << "source,exact,radius,total,torsion,empirical_est,gap_est,"
                 "cosets\n";
    for (size_t i = 0; i < series.size(); ++i) {
      const auto& s = series[i];
      std::cout << src.label << ',' << crystden::format_rational(exact) << ','
                << s.radius << ',' << s.total << ',' << s.torsion << ','
                << est4(emp[i]) << ',' << est4(gap[i]) << ','
                << csv_quote(coset_cell(s)) << '\n';
    }
    return pass ? 0 : 1;
  }
  if (cfg.format == "json") {
    Json doc;
    doc["source"] = src.label;
    doc["exact"] = crystden::format_rational(exact);
    doc["tolerance"] = est4(cfg.tolerance);
    doc["radii"] = Json::array();
    for (size_t i = 0; i < series.size(); ++i) {
      const auto& s = series[i];
      Json row;
      row["radius"] = s.radius;
      row["total"] = s.total;
      row["torsion"] = s.torsion;
      row["empirical_est"] = est4(emp[i]);
      row["gap_est"] = est4(gap[i]);
      row["cosets"] = Json::array();
      for (const auto& c : s.per_coset) {
        row["cosets"].push_back({{"label", c.label},
                                 {"count", c.count},
                                 {"torsion", c.torsion}});
      }
      doc["radii"].push_back(std::move(row));
    }
    doc["pass"] = pass;
    std::cout << doc.dump(2) << '\n';
    return pass ? 0 : 1;
  }
  std::cout << "source: " << src.label << '\n';
  std::cout << "exact density: " << crystden::format_rational(exact) << '\n';
  std::cout << '\n';
  std::cout << std::left << std::setw(8) << "radius" << std::setw(10)
            << "total" << std::setw(10) << "torsion" << std::setw(16)
            << "empirical(est)" << std::setw(12) << "gap(est)" << "cosets\n";
  for (size_t i = 0; i < series.size(); ++i) {
    const auto& s = series[i];
    std::cout << std::left << std::setw(8) << s.radius << std::setw(10)
              << s.total << std::setw(10) << s.torsion << std::setw(16)
              << est4(emp[i]) << std::setw(12) << est4(gap[i])
              << coset_cell(s) << '\n';
  }
  std::cout << '\n'
            << (pass ? "PASS" : "FAIL") << ": final gap " << est4(final_gap)
            << (pass ? " <= " : " > ") << "tolerance " << est4(cfg.tolerance)
            << '\n';
  return pass ? 0 : 1;
}

int cmd_catalog(const RunConfig& cfg) {
  const std::vector<crystden::CatalogEntry> entries = crystden::load_catalog();
  struct Row {
    std::string name;
    long long order, m;
    std::string density;
  };
  std::vector<Row> rows;
  for (const auto& e : entries) {
    const crystden::DensityValue v = crystden::density_value(e.group.point_group);
    rows.push_back(
        Row{e.name, v.group_order, v.m, crystden::format_rational(v.density)});
  }
  if (cfg.format == "csv") {
    std::cout << "name,order,m,density\n";
    for (const auto& r : rows) {
      std::cout << r.name << ',' << r.order << ',' << r.m << ',' << r.density
                << '\n';
    }
    return 0;
  }
  if (cfg.format == "json") {
    Json doc = Json::array();
    for (const auto& r : rows) {
      doc.push_back({{"name", r.name},
                     {"order", r.order},
                     {"m", r.m},
                     {"density", r.density}});
    }
    std::cout << doc.dump(2) << '\n';
    return 0;
  }
  std::cout << std::left << std::setw(7) << "name" << std::setw(6) << "|F|"
            << std::setw(4) << "m" << "density\n";
  for (const auto& r : rows) {
    std::cout << std::left << std::setw(7) << r.name << std::setw(6) << r.order
              << std::setw(4) << r.m << r.density << '\n';
  }
  return 0;
}

int cmd_growth(const Source& src, const RunConfig& cfg) {
  const std::vector<crystden::BallStats> series = run_census(src, cfg);
  const double slope = crystden::growth_degree_fit(series);
  const int degree = predicted_degree(src);
  const double gap = std::abs(slope - degree);
  const bool pass = gap <= cfg.tolerance;
  if (cfg.format == "csv") {
    std::cout << "source,slope_est,predicted_degree,gap_est,pass\n";
    std::cout << src.label << ',' << est4(slope) << ',' << degree << ','
              << est4(gap) << ',' << (pass ? "yes" : "no") << '\n';
    return pass ? 0 : 1;
  }
  if (cfg.format == "json") {
    Json doc;
    doc["source"] = src.label;
    doc["slope_est"] = est4(slope);
    doc["predicted_degree"] = degree;
    doc["gap_est"] = est4(gap);
    doc["pass"] = pass;
    std::cout << doc.dump(2) << '\n';
    return pass ? 0 : 1;
  }
  std::cout << "source: " << src.label << '\n';
  std::cout << "radii:";
  for (const auto& s : series) std::cout << ' ' << s.radius;
  std::cout << '\n';
  std::cout << "totals:";
  for (const auto& s : series) std::cout << ' ' << s.total;
  std::cout << '\n';
  std::cout << "slope: " << est4(slope) << " (est)\n";
  std::cout << "predicted degree: " << degree << '\n';
  std::cout << (pass ? "PASS" : "FAIL") << ": |slope - " << degree << "| = "
            << est4(gap) << (pass ? " <= " : " > ") << "tolerance "
            << est4(cfg.tolerance) << '\n';
  return pass ? 0 : 1;
}

int default_thread_count() {
  const char* env = std::getenv("CRYSTDEN_THREADS");
  if (env == nullptr) return 1;
  try {
    const int n = std::stoi(env);
    return n >= 1 ? n : 1;
  } catch (const std::exception&) {
    return 1;
  }
}

void add_run_flags(CLI::App* sub, RunConfig& cfg, bool with_radii) {
  sub->add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();
  if (with_radii) {
    sub->add_option("--radii", cfg.radii,
                    "strictly increasing census radii, comma separated")
        ->delimiter(',')
        ->capture_default_str();
    sub->add_option("--threads", cfg.threads,
                    "worker threads for torsion classification "
                    "(default: CRYSTDEN_THREADS or 1)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-ball", cfg.max_ball_elements,
                    "abort when a ball exceeds this many elements")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--torsion-cap", cfg.torsion_order_cap,
                    "cap for element order searches")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact torsion densities in crystallographic groups"};
  app.require_subcommand(1);

  RunConfig cfg;
  cfg.threads = default_thread_count();
  SourceSpec spec;

  auto* density = app.add_subcommand(
      "density", "exact point-group census and density");
  add_source_flags(density, spec);
  add_run_flags(density, cfg, false);

  auto* verify = app.add_subcommand(
      "verify", "empirical BFS densities against the exact value");
  add_source_flags(verify, spec);
  cfg.radii = {8, 16, 32};
  cfg.tolerance = 0.1;
  add_run_flags(verify, cfg, true);
  verify->add_option("--tolerance", cfg.tolerance,
                     "largest acceptable final gap")
      ->capture_default_str();

  auto* catalog = app.add_subcommand(
      "catalog", "the 17 two-dimensional groups with densities");
  add_run_flags(catalog, cfg, false);

  auto* growth = app.add_subcommand(
      "growth", "growth degree fit against the predicted degree");
  add_source_flags(growth, spec);
  add_run_flags(growth, cfg, true);
  growth->add_option("--tolerance", cfg.tolerance,
                     "largest acceptable |slope - degree|");

  CLI11_PARSE(app, argc, argv);

  try {
    if (catalog->parsed()) return cmd_catalog(cfg);
    const Source src = resolve_source(spec);
    if (density->parsed()) {
      print_density(src, density_table(src, cfg), cfg);
      return 0;
    }
    if (verify->parsed()) return cmd_verify(src, cfg);
    if (growth->parsed()) {
      if (growth->count("--tolerance") == 0) cfg.tolerance = 0.5;
      return cmd_growth(src, cfg);
    }
  } catch (const crystden::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
