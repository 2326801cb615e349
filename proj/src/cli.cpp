#include "valleyscape/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "valleyscape/errors.hpp"
#include "valleyscape/landscape.hpp"
#include "valleyscape/neighborhood_ratio.hpp"
#include "valleyscape/pca_valley.hpp"
#include "valleyscape/registry.hpp"
#include "valleyscape/report_render.hpp"
#include "valleyscape/run_config.hpp"

namespace valleyscape::cli {

namespace {

// Option bound to a RunConfig key; applied only when given on the command line.
struct ConfigFlag {
  CLI::Option* option;
  std::string key;
  std::string* value;
};

struct Invocation {
  std::string config_path;
  std::string out_path;
  std::string svg_path;
  std::string summary_path;
  std::string grid_path;
  std::string pca_path;
  std::string direction;
  std::string title;
  bool heatmap = false;
  std::map<std::string, std::string> values;
  std::vector<ConfigFlag> flags;

  void bind(CLI::App* app, const std::string& flag, const std::string& key, const std::string& help,
            const std::string& default_text) {
    std::string* slot = &values[flag + "|" + key];
    auto* opt = app->add_option(flag, *slot, help);
    if (!default_text.empty()) opt->default_str(default_text);
    flags.push_back({opt, key, slot});
  }
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error("cannot write '" + path + "'");
  f << content;
  if (!f) throw Error("failed writing '" + path + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

std::string hex64(std::uint64_t v) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

void echo_config(const std::string& command, const RunConfig& cfg, std::ostream& out) {
  out << "# valleyscape " << kVersion << " " << command << '\n';
  std::istringstream lines(cfg.serialize());
  for (std::string line; std::getline(lines, line);) out << "# " << line << '\n';
  out << "# config_hash=" << hex64(cfg.hash()) << '\n';
}

std::optional<std::size_t> dimension_hint(const RunConfig& cfg) {
  if (cfg.domain) return cfg.domain->dim();
  if (!cfg.points.empty()) return cfg.points.front().dim();
  return std::nullopt;
}

// Resolves the function and fills in a defaulted domain so the echoed config is complete.
ResolvedFunction resolve(RunConfig& cfg, const std::string& label) {
  auto fn = resolve_function(label, dimension_hint(cfg));
  if (!cfg.domain) cfg.domain = fn.default_domain;
  if (cfg.domain->dim() != fn.landscape.dim()) {
    throw ConfigError("domain has dimension " + std::to_string(cfg.domain->dim()) + " but '" + label +
                      "' has dimension " + std::to_string(fn.landscape.dim()));
  }
  for (const Point& p : cfg.points) {
    if (p.dim() != fn.landscape.dim()) throw ConfigError("point " + to_string(p.coords()) + " has the wrong dimension");
  }
  return fn;
}

void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty()) {
    out << content;
  } else {
    write_file(path, content);
  }
}

void require_points(const RunConfig& cfg, const char* flag) {
  if (cfg.points.empty()) throw ConfigError(std::string(flag) + " is required");
}

double single_delta(const RunConfig& cfg) {
  if (cfg.deltas.size() != 1) throw ConfigError("exactly one --delta value is expected");
  return cfg.deltas.front();
}

// --- commands ---------------------------------------------------------------

void cmd_eval_grid(Invocation& inv, RunConfig& cfg, std::ostream& out) {
  const auto fn = resolve(cfg, cfg.function);
  echo_config("eval-grid", cfg, out);
  const Grid grid = grid_evaluate(fn.landscape, *cfg.domain, cfg.resolution);
  emit(inv.out_path, grid_to_csv(grid), out);
  if (!inv.svg_path.empty()) {
    if (grid.dim() != 2) throw ConfigError("--svg contour export needs a 2-D domain");
    write_file(inv.svg_path, render_contour_svg(grid, cfg.levels, fn.landscape.label()));
  }
}

void cmd_ratio(Invocation& inv, RunConfig& cfg, std::ostream& out) {
  require_points(cfg, "--point");
  if (cfg.points.size() != 1) throw ConfigError("ratio takes exactly one --point");
  const double delta = single_delta(cfg);
  const auto fn = resolve(cfg, cfg.function);
  echo_config("ratio", cfg, out);
  const auto est = estimate_area_ratio(fn.landscape, cfg.points.front(), cfg.delta_sharp.value_or(delta), cfg.samples,
                                       substream(cfg.seed, cfg.stream));
  out << "lower=" << est.lower << " higher=" << est.higher << " ties=" << est.ties << " total=" << est.total << '\n';
  out << "ratio=" << format_ratio(est) << " se=" << (est.kind == RatioKind::kFinite ? format_shortest(est.se) : "nan")
      << '\n';
  if (!inv.out_path.empty()) {
    write_file(inv.out_path, ratio_scan_header(fn.landscape.dim()) + ratio_scan_row(cfg.points.front(), delta, est));
  }
}

void cmd_valley_test(Invocation& inv, RunConfig& cfg, std::ostream& out) {
  require_points(cfg, "--points");
  const auto fn = resolve(cfg, cfg.function);
  echo_config("valley-test", cfg, out);
  const auto results = valley_scan(fn.landscape, cfg.points, cfg.deltas, cfg.samples, cfg.seed, cfg.delta_sharp);
  std::string csv = ratio_scan_header(fn.landscape.dim());
  std::size_t passed = 0;
  for (const auto& r : results) {
    csv += ratio_scan_row(r);
    if (r.verdict) ++passed;
  }
  emit(inv.out_path, csv, out);
  out << "valley verdicts: " << passed << "/" << results.size() << " point-delta pairs below the sphere benchmark\n";
}

void cmd_beta(Invocation& inv, RunConfig& cfg, std::ostream& out) {
  require_points(cfg, "--points");
  const double delta = single_delta(cfg);
  const auto fn = resolve(cfg, cfg.function);
  echo_config("beta", cfg, out);
  const auto rep = narrowness_beta(fn.landscape, cfg.points, delta, cfg.samples, cfg.seed);
  std::string csv = ratio_scan_header(fn.landscape.dim());
  for (std::size_t i = 0; i < cfg.points.size(); ++i) csv += ratio_scan_row(cfg.points[i], delta, rep.per_point[i]);
  emit(inv.out_path, csv, out);
  out << "beta=" << (rep.kind == RatioKind::kInfinite ? std::string("inf") : format_shortest(rep.beta))
      << " argmax=" << to_string(cfg.points[rep.argmax].coords()) << '\n';
}

void cmd_alpha(Invocation& inv, RunConfig& cfg, std::ostream& out) {
  require_points(cfg, "--points");
  const auto fn = resolve(cfg, cfg.function);
  echo_config("alpha", cfg, out);
  const auto rep = width_alpha(fn.landscape, cfg.points, cfg.deltas, cfg.samples, cfg.seed);
  std::string csv = ratio_scan_header(fn.landscape.dim());
  for (const auto& t : rep.tests) csv += ratio_scan_row(t);
  emit(inv.out_path, csv, out);
  for (std::size_t k = 0; k < rep.candidates.size(); ++k) {
    out << "delta=" << format_shortest(rep.candidates[k]) << " " << (rep.passed[k] ? "pass" : "fail") << '\n';
  }
  out << "alpha=" << (rep.alpha ? format_shortest(*rep.alpha) : std::string("none")) << '\n';
}

void cmd_align(Invocation& inv, RunConfig& cfg, std::ostream& out) {
  require_points(cfg, "--points");
  const auto fn = resolve(cfg, cfg.function);
  Vector direction;
  if (!inv.direction.empty()) {
    direction = parse_real_list(inv.direction);
    const double n = norm2(direction);
    if (!(n > 0.0)) throw ConfigError("--direction must be nonzero");
    for (double& v : direction) v /= n;
  } else if (fn.valley_direction) {
    direction = *fn.valley_direction;
  } else {
    throw ConfigError("--direction is required: '" + cfg.function + "' has no reference valley axis");
  }
  if (direction.size() != fn.landscape.dim()) throw ConfigError("--direction has the wrong dimension");
  echo_config("align", cfg, out);
  out << "# direction=" << format_real_list(direction) << '\n';
  const auto rows = gradient_alignment(fn.landscape, direction, cfg.points, cfg.step);
  std::string csv;
  for (std::size_t i = 0; i < fn.landscape.dim(); ++i) csv += "x" + std::to_string(i + 1) + ",";
  for (std::size_t i = 0; i < fn.landscape.dim(); ++i) csv += "g" + std::to_string(i + 1) + ",";
  csv += "angle_deg,stationary\n";
  for (const auto& a : rows) {
    for (double v : a.point) csv += format_csv_number(v) + ",";
    for (double v : a.gradient) csv += format_csv_number(v) + ",";
    csv += format_csv_number(a.angle_deg) + "," + (a.stationary ? "1" : "0") + "\n";
  }
  emit(inv.out_path, csv, out);
}

PlotSpec pca_plot(const ValleyEstimate& e, const Domain& domain, const std::string& title) {
  PlotSpec spec;
  spec.title = title;
  spec.x = {domain.lower()[0], domain.upper()[0]};
  spec.y = {domain.lower()[1], domain.upper()[1]};
  spec.layers.push_back({"population", Marker::kCircle, "#7f7f7f", e.population});
  spec.layers.push_back({"selected", Marker::kCross, "#1f77b4", e.selected.points});
  spec.layers.push_back({"projected", Marker::kDot, "#d62728", e.projection.reconstructed});
  // Valley-line overlay: the principal axis through the mean, long enough to cross the box.
  const double reach = std::hypot(domain.width(0), domain.width(1));
  const auto& m = e.model.mean;
  const auto& v = e.direction;
  spec.lines.push_back({Point{m[0] - reach * v[0], m[1] - reach * v[1]}, Point{m[0] + reach * v[0], m[1] + reach * v[1]},
                        "#d62728"});
  return spec;
}

void cmd_pca(Invocation& inv, RunConfig& cfg, std::ostream& out) {
  const auto fn = resolve(cfg, cfg.function);
  echo_config("pca", cfg, out);
  const auto e = pca_projection(fn.landscape, *cfg.domain, cfg.population, cfg.selection, cfg.seed);
  const std::string summary = pca_summary(e);
  out << summary;
  if (fn.valley_direction) {
    out << "angle_to_reference_axis_deg: " << format_shortest(line_angle_deg(e.direction, *fn.valley_direction))
        << '\n';
  }
  if (inv.out_path.empty()) {
    out << pca_to_csv(e);
  } else {
    write_file(inv.out_path, pca_to_csv(e));
  }
  if (!inv.summary_path.empty()) write_file(inv.summary_path, summary);
  if (!inv.svg_path.empty()) {
    if (fn.landscape.dim() != 2) throw ConfigError("--svg needs a 2-D landscape");
    PlotSpec spec = pca_plot(e, *cfg.domain, fn.landscape.label() + " PCA projection");
    if (inv.heatmap) spec.heatmap = HeatmapLayer{grid_evaluate(fn.landscape, *cfg.domain, cfg.resolution), cfg.levels};
    write_file(inv.svg_path, render_scatter_svg(spec));
  }
}

void cmd_compare_pca(Invocation& inv, RunConfig& cfg, std::ostream& out) {
  const auto labels = split_function_list(cfg.function);
  if (labels.empty()) throw ConfigError("--functions is empty");
  std::vector<ResolvedFunction> fns;
  for (const auto& label : labels) fns.push_back(resolve_function(label, dimension_hint(cfg)));
  if (!cfg.domain) cfg.domain = fns.front().default_domain;
  for (std::size_t i = 0; i < fns.size(); ++i) {
    if (fns[i].landscape.dim() != cfg.domain->dim()) throw ConfigError("'" + labels[i] + "' does not match the domain");
  }
  echo_config("compare-pca", cfg, out);

  std::string table = "function,seeds,median_eigen_ratio,infinite_ratios,median_angle_deg\n";
  for (std::size_t i = 0; i < fns.size(); ++i) {
    std::vector<double> ratios;
    std::vector<double> angles;
    std::size_t infinite = 0;
    for (std::size_t s = 0; s < cfg.seeds; ++s) {
      const auto e = pca_projection(fns[i].landscape, *cfg.domain, cfg.population, cfg.selection, cfg.seed + s);
      const auto r = eigen_ratio_diagnostic(e);
      if (r.infinite) ++infinite;
      ratios.push_back(r.value);
      if (fns[i].valley_direction) angles.push_back(line_angle_deg(e.direction, *fns[i].valley_direction));
    }
    table += "\"" + labels[i] + "\"," + std::to_string(cfg.seeds) + "," + format_csv_number(median(ratios)) + "," +
             std::to_string(infinite) + "," + (angles.empty() ? std::string() : format_csv_number(median(angles))) +
             "\n";
  }
  out << table;
  if (!inv.out_path.empty()) write_file(inv.out_path, table);
}

// --- CSV readers for `render` -----------------------------------------------

std::vector<std::vector<std::string>> read_csv_rows(const std::string& text, std::string& header) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (!have_header) {
      header = line;
      have_header = true;
      continue;
    }
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(std::move(cells));
  }
  if (!have_header) throw InputError("CSV has no header");
  return rows;
}

Grid read_grid_csv(const std::string& text) {
  std::string header;
  const auto rows = read_csv_rows(text, header);
  if (header != "x1,x2,f") throw InputError("grid CSV must be 2-D with header x1,x2,f");
  if (rows.empty()) throw InputError("grid CSV is empty");
  Grid g;
  for (const auto& r : rows) {
    if (r.size() != 3) throw InputError("grid CSV row has the wrong number of fields");
    g.coords.push_back(parse_real(r[0]));
    g.coords.push_back(parse_real(r[1]));
    g.fitness.push_back(parse_real(r[2]));
  }
  std::size_t r2 = 1;
  while (r2 < g.fitness.size() && g.coords[2 * r2] == g.coords[0]) ++r2;
  if (g.fitness.size() % r2 != 0) throw InputError("grid CSV is not a rectangular lattice");
  g.resolution = {g.fitness.size() / r2, r2};
  for (std::size_t i = 0; i < g.resolution[0]; ++i) {
    for (std::size_t j = 0; j < r2; ++j) {
      const std::size_t k = i * r2 + j;
      if (g.coords[2 * k] != g.coords[2 * i * r2] || g.coords[2 * k + 1] != g.coords[2 * j + 1]) {
        throw InputError("grid CSV is not a rectangular lattice");
      }
    }
  }
  return g;
}

std::vector<PointLayer> read_pca_csv(const std::string& text) {
  std::string header;
  const auto rows = read_csv_rows(text, header);
  if (header != "role,x1,x2,f,y") throw InputError("pca CSV must be 2-D with header role,x1,x2,f,y");
  std::vector<PointLayer> layers = {{"population", Marker::kCircle, "#7f7f7f", {}},
                                    {"selected", Marker::kCross, "#1f77b4", {}},
                                    {"projected", Marker::kDot, "#d62728", {}}};
  for (const auto& r : rows) {
    if (r.size() < 3) throw InputError("pca CSV row is too short");
    Point p{parse_real(r[1]), parse_real(r[2])};
    if (r[0] == "population") {
      layers[0].points.push_back(p);
    } else if (r[0] == "selected") {
      layers[1].points.push_back(p);
    } else if (r[0] == "projected") {
      layers[2].points.push_back(p);
    } else {
      throw InputError("unknown pca CSV role '" + r[0] + "'");
    }
  }
  return layers;
}

void cmd_render(Invocation& inv, RunConfig& cfg, std::ostream& out) {
  if (inv.grid_path.empty() && inv.pca_path.empty()) throw ConfigError("render needs --grid and/or --pca");
  if (inv.out_path.empty()) throw ConfigError("render needs --out");
  echo_config("render", cfg, out);
  PlotSpec spec;
  spec.title = inv.title;
  if (!inv.grid_path.empty()) {
    Grid g = read_grid_csv(read_file(inv.grid_path));
    const auto [xr, yr] = grid_extent(g);
    spec.x = xr;
    spec.y = yr;
    spec.heatmap = HeatmapLayer{std::move(g), cfg.levels};
  }
  if (!inv.pca_path.empty()) {
    spec.layers = read_pca_csv(read_file(inv.pca_path));
    if (!spec.heatmap) {
      if (cfg.domain) {
        if (cfg.domain->dim() != 2) throw ConfigError("--domain must be 2-D for render");
        spec.x = {cfg.domain->lower()[0], cfg.domain->upper()[0]};
        spec.y = {cfg.domain->lower()[1], cfg.domain->upper()[1]};
      } else {
        double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
        for (const auto& layer : spec.layers) {
          for (const auto& p : layer.points) {
            x0 = std::min(x0, p[0]);
            x1 = std::max(x1, p[0]);
            y0 = std::min(y0, p[1]);
            y1 = std::max(y1, p[1]);
          }
        }
        if (!(x0 < x1) || !(y0 < y1)) throw InputError("pca CSV points do not span a 2-D box; pass --domain");
        const double px = 0.05 * (x1 - x0);
        const double py = 0.05 * (y1 - y0);
        spec.x = {x0 - px, x1 + px};
        spec.y = {y0 - py, y1 + py};
      }
    }
  }
  write_file(inv.out_path, render_scatter_svg(spec));
  out << "wrote " << inv.out_path << '\n';
}

// --- option wiring ------------------------------------------------------------

const RunConfig kDefaults{};

void add_common(Invocation& inv, CLI::App* app) {
  app->add_option("--config", inv.config_path, "key=value run config file; flags override its values")
      ->check(CLI::ExistingFile);
}

void add_function(Invocation& inv, CLI::App* app) {
  inv.bind(app, "--function", "function", "Landscape label (see list-functions)", kDefaults.function);
}

void add_domain(Invocation& inv, CLI::App* app) {
  inv.bind(app, "--domain", "domain", "Box as lo:hi[,lo:hi...]; dimension inferred from it",
           "[-10,10]^d; [-1,2]^2 for Rosenbrock labels");
}

void add_seed(Invocation& inv, CLI::App* app) {
  inv.bind(app, "--seed", "seed", "Random seed", std::to_string(kDefaults.seed));
}

void add_samples(Invocation& inv, CLI::App* app) {
  inv.bind(app, "--samples", "samples", "Monte-Carlo samples per cube", std::to_string(kDefaults.samples));
}

void add_points(Invocation& inv, CLI::App* app, bool single) {
  if (single) {
    inv.bind(app, "--point", "points", "Point as x1,x2,...", "");
  } else {
    inv.bind(app, "--points", "points", "Points as x1,x2;x1,x2;...", "");
    inv.bind(app, "--point", "points", "Single point (alias of --points with one entry)", "");
    const auto n = inv.flags.size();
    inv.flags[n - 1].option->excludes(inv.flags[n - 2].option);
  }
}

void add_out(Invocation& inv, CLI::App* app, const std::string& what) {
  app->add_option("--out", inv.out_path, what + " (stdout when omitted)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"valleyscape: valley and ridge analysis of continuous fitness landscapes", "valleyscape"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  Invocation inv;

  auto* list = app.add_subcommand("list-functions", "List landscape labels");
  add_common(inv, list);

  auto* eval_grid = app.add_subcommand("eval-grid", "Evaluate a landscape on a regular lattice (CSV x1,...,xd,f)");
  add_common(inv, eval_grid);
  add_function(inv, eval_grid);
  add_domain(inv, eval_grid);
  inv.bind(eval_grid, "--res", "res", "Lattice nodes per axis (>= 2)", std::to_string(kDefaults.resolution));
  inv.bind(eval_grid, "--levels", "levels", "Quantile colour bins for --svg", std::to_string(kDefaults.levels));
  add_out(inv, eval_grid, "Grid CSV path");
  eval_grid->add_option("--svg", inv.svg_path, "Also write a contour heatmap SVG (2-D only)");

  auto* ratio = app.add_subcommand("ratio", "Lower/higher area ratio in a delta-cube around one point");
  add_common(inv, ratio);
  add_function(inv, ratio);
  add_points(inv, ratio, true);
  inv.bind(ratio, "--delta", "deltas", "Cube half-width", "1");
  inv.bind(ratio, "--delta-sharp", "delta_sharp", "Override the half-width (tested side)", "same as --delta");
  add_samples(inv, ratio);
  add_seed(inv, ratio);
  inv.bind(ratio, "--stream", "stream", "Substream id", std::to_string(kDefaults.stream));
  ratio->add_option("--out", inv.out_path, "Optional ratio-scan CSV path");

  auto* valley = app.add_subcommand("valley-test", "Compare area ratios with the sphere benchmark (ratio-scan CSV)");
  add_common(inv, valley);
  add_function(inv, valley);
  add_points(inv, valley, false);
  inv.bind(valley, "--deltas", "deltas", "Cube half-widths", format_real_list(kDefaults.deltas));
  inv.bind(valley, "--delta-sharp", "delta_sharp", "Half-width for the tested landscape", "same as delta");
  add_samples(inv, valley);
  add_seed(inv, valley);
  add_out(inv, valley, "ratio-scan CSV path");

  auto* beta = app.add_subcommand("beta", "Valley narrowness: max area ratio over valley points");
  add_common(inv, beta);
  add_function(inv, beta);
  add_points(inv, beta, false);
  inv.bind(beta, "--delta", "deltas", "Cube half-width", "1");
  add_samples(inv, beta);
  add_seed(inv, beta);
  add_out(inv, beta, "Per-point ratio CSV path");

  auto* alpha = app.add_subcommand("alpha", "Valley width: largest delta passing the valley test at every point");
  add_common(inv, alpha);
  add_function(inv, alpha);
  add_points(inv, alpha, false);
  inv.bind(alpha, "--deltas", "deltas", "Ascending delta candidates", format_real_list(kDefaults.deltas));
  add_samples(inv, alpha);
  add_seed(inv, alpha);
  add_out(inv, alpha, "ratio-scan CSV path");

  auto* align = app.add_subcommand("align", "Angle between the gradient and a valley direction");
  add_common(inv, align);
  add_function(inv, align);
  add_points(inv, align, false);
  align->add_option("--direction", inv.direction, "Valley direction d1,d2,... (normalized; default: the label's axis)");
  inv.bind(align, "--step", "step", "Central-difference step", format_shortest(kDefaults.step));
  add_out(inv, align, "Alignment CSV path");

  auto* pca = app.add_subcommand("pca", "PCA projection of the best M of N sampled points");
  add_common(inv, pca);
  add_function(inv, pca);
  add_domain(inv, pca);
  inv.bind(pca, "--n", "n", "Population size N", std::to_string(kDefaults.population));
  inv.bind(pca, "--m", "m", "Selection size M", std::to_string(kDefaults.selection));
  add_seed(inv, pca);
  add_out(inv, pca, "CSV role,x1,...,xd,f,y");
  pca->add_option("--summary", inv.summary_path, "Also write the summary block to this file");
  pca->add_option("--svg", inv.svg_path, "Scatter SVG of population/selected/projected points (2-D only)");
  pca->add_flag("--heatmap", inv.heatmap, "Draw a contour heatmap under the --svg scatter");
  inv.bind(pca, "--res", "res", "Heatmap lattice nodes per axis", std::to_string(kDefaults.resolution));
  inv.bind(pca, "--levels", "levels", "Heatmap quantile bins", std::to_string(kDefaults.levels));

  auto* compare = app.add_subcommand("compare-pca", "Median lambda1/lambda2 per function over paired seeds");
  add_common(inv, compare);
  inv.bind(compare, "--functions", "function", "Comma-separated labels, e.g. elliptic:1,0.01,sphere",
           "elliptic:1,0.01,sphere");
  add_domain(inv, compare);
  inv.bind(compare, "--n", "n", "Population size N", std::to_string(kDefaults.population));
  inv.bind(compare, "--m", "m", "Selection size M", std::to_string(kDefaults.selection));
  inv.bind(compare, "--seed", "seed", "First seed; runs use seed, seed+1, ...", std::to_string(kDefaults.seed));
  inv.bind(compare, "--seeds", "seeds", "Number of seeds", std::to_string(kDefaults.seeds));
  add_out(inv, compare, "Table CSV path");

  auto* render = app.add_subcommand("render", "Render grid and/or pca CSV files to SVG");
  add_common(inv, render);
  render->add_option("--grid", inv.grid_path, "2-D grid CSV from eval-grid (heatmap layer)");
  render->add_option("--pca", inv.pca_path, "2-D CSV from pca (point layers)");
  inv.bind(render, "--levels", "levels", "Quantile colour bins", std::to_string(kDefaults.levels));
  inv.bind(render, "--domain", "domain", "Axis ranges when no grid is given", "bounding box of the points");
  render->add_option("--title", inv.title, "Figure title");
  render->add_option("--out", inv.out_path, "SVG output path")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  const CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  try {
    RunConfig cfg = inv.config_path.empty() ? RunConfig{} : load_run_config(inv.config_path);
    if (name == "compare-pca" && inv.config_path.empty()) cfg.function = "elliptic:1,0.01,sphere";
    if ((name == "ratio" || name == "beta") && inv.config_path.empty()) cfg.deltas = {1.0};
    for (const auto& flag : inv.flags) {
      if (flag.option->count() > 0) cfg.apply(flag.key, *flag.value);
    }
    cfg.validate();

    if (name == "list-functions") {
      out << function_catalog();
    } else if (name == "eval-grid") {
      cmd_eval_grid(inv, cfg, out);
    } else if (name == "ratio") {
      cmd_ratio(inv, cfg, out);
    } else if (name == "valley-test") {
      cmd_valley_test(inv, cfg, out);
    } else if (name == "beta") {
      cmd_beta(inv, cfg, out);
    } else if (name == "alpha") {
      cmd_alpha(inv, cfg, out);
    } else if (name == "align") {
      cmd_align(inv, cfg, out);
    } else if (name == "pca") {
      cmd_pca(inv, cfg, out);
    } else if (name == "compare-pca") {
      cmd_compare_pca(inv, cfg, out);
    } else if (name == "render") {
      cmd_render(inv, cfg, out);
    }
  } catch (const ConfigError& e) {
    err << "valleyscape " << name << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "valleyscape " << name << ": " << e.what() << '\n';
    return kExitRuntime;
  }
  out.flush();
  return kExitOk;
}

}  // namespace valleyscape::cli
