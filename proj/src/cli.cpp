#include "multipole/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <optional>
#include <set>
#include <sstream>
#include <variant>

#include "multipole/dipole.hpp"
#include "multipole/errors.hpp"
#include "multipole/hmd.hpp"
#include "multipole/polys.hpp"
#include "multipole/quadrature.hpp"
#include "multipole/tra.hpp"

namespace multipole::cli {

using nlohmann::ordered_json;

namespace {

// ---------------------------------------------------------------------------
// Report model, rendered as CSV (default) or JSON (--json)

enum class Format { Fixed9, Scientific, Integer, Text };

struct Column {
  std::string name;
  Format format;
};

using Cell = std::variant<std::monostate, double, long long, std::string>;

struct Report {
  explicit Report(std::string name = {}) : command(std::move(name)) {}

  std::string command;
  ordered_json metadata = ordered_json::object();
  std::vector<Column> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string format_double(double v, Format f) {
  char buf[64];
  if (f == Format::Scientific) {
    std::snprintf(buf, sizeof buf, "%.12e", v);
  } else {
    std::snprintf(buf, sizeof buf, "%.9f", v);
  }
  return buf;
}

std::string meta_text(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v.get<double>());
    return buf;
  }
  return v.dump();
}

std::string render_csv(const Report& report) {
  std::ostringstream os;
  os << "# command = " << report.command << '\n';
  for (const auto& [key, value] : report.metadata.items()) os << "# " << key << " = " << meta_text(value) << '\n';
  for (std::size_t c = 0; c < report.columns.size(); ++c) os << (c ? "," : "") << report.columns[c].name;
  os << '\n';
  for (const auto& row : report.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) os << ',';
      const Cell& cell = row[c];
      if (const auto* d = std::get_if<double>(&cell)) {
        os << format_double(*d, report.columns[c].format);
      } else if (const auto* i = std::get_if<long long>(&cell)) {
        os << *i;
      } else if (const auto* s = std::get_if<std::string>(&cell)) {
        os << *s;
      }
    }
    os << '\n';
  }
  return os.str();
}

std::string render_json(const Report& report) {
  ordered_json doc;
  doc["command"] = report.command;
  doc["metadata"] = report.metadata;
  ordered_json cols = ordered_json::array();
  for (const auto& c : report.columns) cols.push_back(c.name);
  doc["columns"] = cols;
  ordered_json rows = ordered_json::array();
  for (const auto& row : report.rows) {
    ordered_json r = ordered_json::array();
    for (const Cell& cell : row) {
      if (const auto* d = std::get_if<double>(&cell)) {
        r.push_back(*d);
      } else if (const auto* i = std::get_if<long long>(&cell)) {
        r.push_back(*i);
      } else if (const auto* s = std::get_if<std::string>(&cell)) {
        r.push_back(*s);
      } else {
        r.push_back(nullptr);
      }
    }
    rows.push_back(std::move(r));
  }
  doc["rows"] = rows;
  return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Option resolution: flag > config file > command default

const std::vector<std::string> kCommonKeys = {"Q",     "d",   "q",           "eta",  "p",      "m",
                                              "gamma", "l",   "basis",       "rho",  "quad_points",
                                              "kmax",  "channel"};
const std::vector<std::string> kCommandKeys = {"count", "size",    "k",       "r_min",    "r_max", "points",
                                               "rho_min", "rho_max", "rho_step", "track", "tol"};

std::string normalize_key(std::string key) {
  std::replace(key.begin(), key.end(), '-', '_');
  if (key == "basis_size") key = "basis";
  return key;
}

bool known_key(const std::string& key) {
  return std::find(kCommonKeys.begin(), kCommonKeys.end(), key) != kCommonKeys.end() ||
         std::find(kCommandKeys.begin(), kCommandKeys.end(), key) != kCommandKeys.end();
}

class Settings {
 public:
  Settings(std::map<std::string, std::string> flags, std::map<std::string, std::string> file)
      : flags_(std::move(flags)), file_(std::move(file)) {}

  bool has(const std::string& key) const { return lookup(key).has_value(); }

  double real(const std::string& key, double fallback) const {
    const auto raw = lookup(key);
    if (!raw) return fallback;
    try {
      std::size_t used = 0;
      const double v = std::stod(*raw, &used);
      if (used != raw->size()) throw std::invalid_argument(*raw);
      return v;
    } catch (const std::exception&) {
      throw DomainError("option " + key + ": not a number: '" + *raw + "'");
    }
  }

  int integer(const std::string& key, int fallback) const {
    const auto raw = lookup(key);
    if (!raw) return fallback;
    try {
      std::size_t used = 0;
      const int v = std::stoi(*raw, &used);
      if (used != raw->size()) throw std::invalid_argument(*raw);
      return v;
    } catch (const std::exception&) {
      throw DomainError("option " + key + ": not an integer: '" + *raw + "'");
    }
  }

 private:
  std::optional<std::string> lookup(const std::string& key) const {
    if (auto it = flags_.find(key); it != flags_.end()) return it->second;
    if (auto it = file_.find(key); it != file_.end()) return it->second;
    return std::nullopt;
  }

  std::map<std::string, std::string> flags_;
  std::map<std::string, std::string> file_;
};

struct PhysicalDefaults {
  double Q = 1.0;
  double d = 0.0;
  double p = 0.0;
  double gamma = 0.0;
};

PhysicalParams resolve_physical(const Settings& s, const PhysicalDefaults& def) {
  PhysicalParams params;
  params.Q = s.real("Q", def.Q);
  params.d = s.real("d", def.d);
  params.m = std::abs(s.integer("m", 0));
  params.eta = s.real("eta", 1.0);
  if (s.has("p")) {
    params.p = s.real("p", 0.0);
    params.q = s.has("q") ? s.real("q", 0.0) : (params.eta != 0.0 ? params.p / params.eta : 0.0);
  } else if (s.has("q")) {
    params.q = s.real("q", 0.0);
    params.p = params.eta * params.q;
  } else {
    params.p = def.p;
    params.q = params.eta != 0.0 ? params.p / params.eta : 0.0;
  }

  if (s.has("gamma")) {
    params.gamma_eff = s.real("gamma", 0.0);
  } else if (s.has("l")) {
    const int l = s.integer("l", 0);
    if (l < 0) throw DomainError("l must be >= 0");
    params.gamma_eff = l;
  } else if (params.d > 0.0) {
    const int channel = s.integer("channel", 0);
    if (channel < 0) throw DomainError("channel must be >= 0");
    const GammaSpectrum g = gamma_spectrum({params.d, params.m, kDefaultDipoleSize}, channel + 1);
    params.gamma_eff = channel_gamma(g, static_cast<std::size_t>(channel));
  } else {
    params.gamma_eff = def.gamma;
  }
  params.validate();
  return params;
}

HmdConfig resolve_numerics(const Settings& s) {
  HmdConfig cfg;
  cfg.basis_size = s.integer("basis", kDefaultBasisSize);
  cfg.rho = s.real("rho", kDefaultRho);
  cfg.quad_points = s.integer("quad_points", 0);
  cfg.validate();
  return cfg;
}

void put_physical(Report& r, const PhysicalParams& p) {
  r.metadata["Q"] = p.Q;
  r.metadata["d"] = p.d;
  r.metadata["m"] = p.m;
  r.metadata["eta"] = p.eta;
  r.metadata["q"] = p.q;
  r.metadata["p"] = p.p;
  r.metadata["gamma"] = p.gamma_eff;
}

void put_numerics(Report& r, const HmdConfig& c) {
  r.metadata["basis"] = c.basis_size;
  r.metadata["rho"] = c.rho;
  r.metadata["quad_points"] = c.effective_quad_points();
}

// ---------------------------------------------------------------------------
// Commands

Report cmd_gamma(const Settings& s) {
  DipoleSpec spec{s.real("d", 0.0), std::abs(s.integer("m", 0)), s.integer("size", kDefaultDipoleSize)};
  const int count = s.integer("count", 4);
  const GammaSpectrum g = gamma_spectrum(spec, count);
  Report r{"gamma"};
  r.metadata["d"] = spec.d;
  r.metadata["m"] = spec.m;
  r.metadata["size"] = spec.size;
  r.metadata["count"] = count;
  r.metadata["excluded_count"] = g.excluded_count;
  r.columns = {{"channel", Format::Integer}, {"t", Format::Fixed9}, {"gamma", Format::Fixed9}, {"status", Format::Text}};
  std::size_t gi = 0;
  for (std::size_t i = 0; i < g.t_values.size(); ++i) {
    const double t = g.t_values[i];
    if (t > 0.0) {
      r.rows.push_back({static_cast<long long>(i), t, g.gammas[gi++], std::string("ok")});
    } else {
      r.rows.push_back({static_cast<long long>(i), t, std::monostate{}, std::string("excluded")});
    }
  }
  return r;
}

Report cmd_spectrum(const Settings& s) {
  const PhysicalParams params = resolve_physical(s, {});
  const HmdConfig cfg = resolve_numerics(s);
  const EnergySpectrum spec = solve_spectrum(params, cfg);
  Report r{"spectrum"};
  put_physical(r, params);
  put_numerics(r, cfg);
  r.metadata["regularized"] = spec.regularized;
  r.metadata["bound_states"] = spec.energies.size();
  r.columns = {{"k", Format::Integer}, {"E", Format::Fixed9}, {"E_minus_coulomb", Format::Fixed9}};
  const int kmax = s.integer("kmax", static_cast<int>(spec.energies.size()) - 1);
  for (int k = 0; k <= kmax && k < static_cast<int>(spec.energies.size()); ++k) {
    const double e = spec.energies[static_cast<std::size_t>(k)];
    r.rows.push_back({static_cast<long long>(k), e, e - coulomb_baseline(params.Q, params.gamma_eff, k)});
  }
  return r;
}

Report cmd_table1(const Settings& s) {
  PhysicalParams base = resolve_physical(s, {2.0, 0.0, 5.0, 0.0});
  const HmdConfig cfg = resolve_numerics(s);
  const int kmax = s.integer("kmax", 7);
  if (kmax < 0) throw DomainError("kmax must be >= 0");
  Report r{"table1"};
  r.metadata["Q"] = base.Q;
  r.metadata["p"] = base.p;
  put_numerics(r, cfg);
  r.columns = {{"k", Format::Integer}};
  std::vector<EnergySpectrum> spectra;
  for (int l = 0; l <= 3; ++l) {
    PhysicalParams p = base;
    p.gamma_eff = l;
    spectra.push_back(solve_spectrum(p, cfg));
    r.columns.push_back({"l" + std::to_string(l), Format::Fixed9});
    r.metadata["regularized_l" + std::to_string(l)] = spectra.back().regularized;
  }
  for (int k = 0; k <= kmax; ++k) {
    std::vector<Cell> row{static_cast<long long>(k)};
    for (int l = 0; l <= 3; ++l) {
      const auto& e = spectra[static_cast<std::size_t>(l)].energies;
      if (k < static_cast<int>(e.size())) {
        row.emplace_back(e[static_cast<std::size_t>(k)] - coulomb_baseline(base.Q, l, k));
      } else {
        row.emplace_back(std::monostate{});
      }
    }
    r.rows.push_back(std::move(row));
  }
  return r;
}

Report cmd_table2(const Settings& s) {
  PhysicalParams base;
  base.Q = s.real("Q", 1.0);
  base.d = s.real("d", 5.0);
  base.eta = s.real("eta", 1.0);
  base.p = s.has("p") ? s.real("p", 0.0) : (s.has("q") ? base.eta * s.real("q", 0.0) : 3.0);
  base.q = base.eta != 0.0 ? base.p / base.eta : 0.0;
  const HmdConfig cfg = resolve_numerics(s);
  const int count = s.integer("count", 4);
  const int kmax = s.integer("kmax", 3);
  std::vector<int> ms{0, 1, 2};
  if (s.has("m")) ms = {std::abs(s.integer("m", 0))};

  Report r{"table2"};
  r.metadata["Q"] = base.Q;
  r.metadata["d"] = base.d;
  r.metadata["p"] = base.p;
  put_numerics(r, cfg);
  r.columns = {{"m", Format::Integer}, {"channel", Format::Integer}, {"t", Format::Fixed9},
               {"gamma", Format::Fixed9}, {"status", Format::Text}};
  for (int k = 0; k <= kmax; ++k) r.columns.push_back({"minus_E" + std::to_string(k), Format::Fixed9});

  int skipped = 0;
  for (int m : ms) {
    const GammaSpectrum g = gamma_spectrum({base.d, m, kDefaultDipoleSize}, count);
    for (std::size_t i = 0; i < g.t_values.size(); ++i) {
      std::vector<Cell> row{static_cast<long long>(m), static_cast<long long>(i), g.t_values[i]};
      double gamma = 0.0;
      try {
        gamma = channel_gamma(g, i);
      } catch (const SupercriticalChannelError&) {
        ++skipped;
        row.emplace_back(std::monostate{});
        row.emplace_back(std::string("skipped_supercritical"));
        for (int k = 0; k <= kmax; ++k) row.emplace_back(std::monostate{});
        r.rows.push_back(std::move(row));
        continue;
      }
      PhysicalParams p = base;
      p.m = m;
      p.gamma_eff = gamma;
      const EnergySpectrum spec = solve_spectrum(p, cfg);
      row.emplace_back(gamma);
      row.emplace_back(std::string("ok"));
      for (int k = 0; k <= kmax; ++k) {
        if (k < static_cast<int>(spec.energies.size())) {
          row.emplace_back(-spec.energies[static_cast<std::size_t>(k)]);
        } else {
          row.emplace_back(std::monostate{});
        }
      }
      r.rows.push_back(std::move(row));
    }
  }
  r.metadata["skipped_supercritical"] = skipped;
  return r;
}

Report cmd_wavefunction(const Settings& s) {
  const PhysicalParams params = resolve_physical(s, {2.0, 0.0, 5.0, 1.0});
  const HmdConfig cfg = resolve_numerics(s);
  const int k = s.integer("k", 0);
  const std::vector<double> grid =
      log_grid(s.real("r_min", 0.01), s.real("r_max", 80.0), s.integer("points", 600));

  const EnergySpectrum spec = solve_spectrum(params, cfg);
  if (k < 0 || k >= static_cast<int>(spec.energies.size())) {
    throw DomainError("state k = " + std::to_string(k) + " not in the bound spectrum (" +
                      std::to_string(spec.energies.size()) + " states)");
  }
  const auto ku = static_cast<std::size_t>(k);
  const double energy = spec.energies[ku];
  const TraState state = tra_solve(energy, params);
  const WavefunctionTable tra = tra_wavefunction(state, grid, k);
  const WavefunctionTable hmd = hmd_wavefunction(spec.coefficients[ku], params.gamma_eff, cfg.rho, grid, k);
  const OverlayResult overlay = overlay_compare(tra, hmd);

  Report r{"wavefunction"};
  put_physical(r, params);
  put_numerics(r, cfg);
  r.metadata["k"] = k;
  r.metadata["E"] = energy;
  r.metadata["mu"] = state.mu;
  r.metadata["lambda"] = state.lambda;
  r.metadata["sigma"] = state.sigma;
  r.metadata["z"] = state.z;
  r.metadata["N"] = state.n_max;
  r.metadata["tra_basis_size"] = state.basis_size();
  r.metadata["overlay_scale"] = overlay.scale;
  r.metadata["overlay_residual"] = overlay.residual;
  r.metadata["sign_changes_tra"] = count_sign_changes(tra);
  r.metadata["sign_changes_hmd"] = count_sign_changes(hmd);
  r.columns = {{"r", Format::Scientific}, {"psi_tra", Format::Scientific}, {"psi_hmd", Format::Scientific}};
  for (std::size_t i = 0; i < grid.size(); ++i) r.rows.push_back({grid[i], tra.values[i], hmd.values[i]});
  return r;
}

std::vector<double> rho_grid_from(const Settings& s) {
  const double lo = s.real("rho_min", 0.5);
  const double hi = s.real("rho_max", 8.0);
  const double step = s.real("rho_step", 0.25);
  if (!(lo > 0.0) || hi < lo) throw DomainError("rho grid: need 0 < rho_min <= rho_max");
  if (hi == lo) return {lo, lo, lo};
  if (!(step > 0.0)) throw DomainError("rho grid: rho_step must be > 0");
  const auto n = static_cast<int>(std::floor((hi - lo) / step + 1e-9)) + 1;
  std::vector<double> grid;
  for (int i = 0; i < n; ++i) grid.push_back(lo + i * step);
  return grid;
}

Report cmd_plateau(const Settings& s, bool& empty_plateau) {
  const PhysicalParams params = resolve_physical(s, {2.0, 0.0, 5.0, 1.0});
  const HmdConfig cfg = resolve_numerics(s);
  const int track = s.integer("track", 4);
  const double tol = s.real("tol", 1e-8);
  const PlateauReport rep = plateau_scan(params, cfg, rho_grid_from(s), track, tol);

  Report r{"plateau"};
  put_physical(r, params);
  r.metadata["basis"] = cfg.basis_size;
  r.metadata["track"] = track;
  r.metadata["tol"] = tol;
  if (const auto iv = rep.interval()) {
    r.metadata["plateau_min"] = iv->first;
    r.metadata["plateau_max"] = iv->second;
    r.metadata["chosen_rho"] = *rep.chosen_rho;
    empty_plateau = false;
  } else {
    r.metadata["plateau"] = "none";
    empty_plateau = true;
  }
  r.columns = {{"rho", Format::Fixed9}};
  for (int k = 0; k < track; ++k) r.columns.push_back({"E" + std::to_string(k), Format::Fixed9});
  for (std::size_t i = 0; i < rep.rho_grid.size(); ++i) {
    std::vector<Cell> row{rep.rho_grid[i]};
    for (double e : rep.traces[i]) {
      if (std::isnan(e)) {
        row.emplace_back(std::monostate{});
      } else {
        row.emplace_back(e);
      }
    }
    r.rows.push_back(std::move(row));
  }
  return r;
}

// Compact invariant suite over every module.
Report cmd_selfcheck(bool& all_passed) {
  Report r{"selfcheck"};
  r.columns = {{"check", Format::Text}, {"status", Format::Text}, {"value", Format::Scientific},
               {"tolerance", Format::Scientific}};
  all_passed = true;
  auto record = [&](const std::string& name, double value, double tol) {
    const bool ok = std::isfinite(value) && value <= tol;
    all_passed = all_passed && ok;
    r.rows.push_back({name, std::string(ok ? "pass" : "fail"), value, tol});
  };

  {  // Laguerre form of the Bessel polynomials
    double worst = 0.0;
    const double mu = -6.3;
    for (double x : {0.1, 0.7, 3.0, 10.0}) {
      const PolySequence y = bessel_eval(BesselFamily(mu, bessel_max_degree(mu)), x);
      for (int n = 0; n <= y.max_degree(); ++n) {
        const double lag = laguerre_eval(-(2.0 * n + 2.0 * mu + 1.0), 1.0 / x, n)[n];
        const double bridge = std::exp(log_gamma(n + 1.0)) * std::pow(-x, n) * lag;
        worst = std::max(worst, std::abs(bridge - y[n]) / std::max(1.0, std::abs(y[n])));
      }
    }
    record("bessel_laguerre_bridge", worst, 1e-10);
  }
  {  // Bessel orthogonality through u = 1/x and Gauss-Laguerre
    const double mu = -5.3;
    const int nmax = bessel_max_degree(mu);
    const auto mono = bessel_monomials(mu, nmax);
    double worst = 0.0;
    for (int n = 0; n <= nmax; ++n)
      for (int m = 0; m <= n; ++m) {
        // u^n Y_n(1/u) is the reversed coefficient polynomial
        const QuadratureRule rule = gauss_laguerre(-2.0 * mu - 2.0 - n - m, 12);
        const double val = rule.integrate([&](double u) {
          double pn = 0.0, pm = 0.0;
          for (int j = 0; j <= n; ++j) pn += mono[n][j] * std::pow(u, n - j);
          for (int j = 0; j <= m; ++j) pm += mono[m][j] * std::pow(u, m - j);
          return pn * pm;
        });
        const double norm = bessel_norm(mu, n);
        worst = std::max(worst, n == m ? std::abs(val / norm - 1.0) : std::abs(val) / norm);
      }
    record("bessel_orthogonality", worst, 1e-8);
  }
  {
    const SymDense m = inverse_square_elements(1.0, 2, 60);
    record("inverse_square_closed_form", std::max(std::abs(m(0, 0) - 1.0 / 6.0), std::abs(m(0, 1) - 1.0 / 6.0)),
           1e-11);
  }
  {
    const GammaSpectrum g = gamma_spectrum({0.0, 2, kDefaultDipoleSize}, 5);
    double worst = 0.0;
    for (std::size_t i = 0; i < g.gammas.size(); ++i) worst = std::max(worst, std::abs(g.gammas[i] - (i + 2.0)));
    record("dipole_free_limit", worst, 1e-12);
  }
  {
    PhysicalParams p;
    p.Q = 1.0;
    const EnergySpectrum s = solve_spectrum(p, HmdConfig{});
    double worst = s.energies.size() >= 6 ? 0.0 : 1.0;
    for (int k = 0; k <= 5 && k < static_cast<int>(s.energies.size()); ++k) {
      worst = std::max(worst, std::abs(s.energies[static_cast<std::size_t>(k)] - coulomb_baseline(1.0, 0.0, k)));
    }
    record("hydrogenic_spectrum", worst, 1e-8);
  }
  {
    const PhysicalParams p = PhysicalParams::with_quadrupole(2.0, 5.0, 1.0, 1.0);
    const EnergySpectrum s = solve_spectrum(p, HmdConfig{});
    double worst = 0.0;
    int bad_sizes = 0;
    for (int k = 0; k < 4 && k < static_cast<int>(s.energies.size()); ++k) {
      const TraState st = tra_solve(s.energies[static_cast<std::size_t>(k)], p);
      const auto alt = coefficients_from_b_polys(st);
      for (std::size_t n = 0; n < alt.size(); ++n) {
        worst = std::max(worst, std::abs(alt[n] - st.coefficients[n]) / std::abs(st.coefficients[n]));
      }
      if (st.n_max != k + 2) ++bad_sizes;
    }
    record("tra_dual_route", worst, 1e-12);
    record("tra_basis_growth", bad_sizes, 0.0);
  }
  return r;
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  auto cfg = parse_config(buf.str());
  for (const auto& [key, value] : cfg) {
    if (!known_key(key)) throw DomainError("config file: unknown key '" + key + "'");
  }
  return cfg;
}

}  // namespace

std::map<std::string, std::string> parse_config(std::string_view text) {
  std::map<std::string, std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return std::string();
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw DomainError("config line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string key = normalize_key(trim(line.substr(0, eq)));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw DomainError("config line " + std::to_string(line_no) + ": empty key or value");
    }
    out[key] = value;
  }
  return out;
}

CommandResult run(const std::vector<std::string>& args) {
  CLI::App app{"Bound states of an electron in a Coulomb + dipole + effective quadrupole field"};
  app.require_subcommand(1);
  app.fallthrough();

  std::map<std::string, std::string> raw;
  std::vector<std::pair<std::string, CLI::Option*>> opts;  // a key may live on several subcommands
  auto add = [&](CLI::App& target, const std::string& key, const std::string& help) {
    std::string flag = key;
    std::replace(flag.begin(), flag.end(), '_', '-');
    opts.emplace_back(key, target.add_option("--" + flag, raw[key], help));
  };
  add(app, "Q", "net positive charge");
  add(app, "d", "electric dipole moment");
  add(app, "q", "quadrupole moment (p = eta*q unless --p is given)");
  add(app, "eta", "angular parameter in [-1/2, 1]");
  add(app, "p", "effective quadrupole moment");
  add(app, "m", "azimuthal quantum number");
  add(app, "gamma", "effective angular number");
  add(app, "l", "orbital angular momentum (gamma = l)");
  add(app, "basis", "Laguerre basis size");
  add(app, "rho", "basis scale parameter");
  add(app, "quad_points", "Gauss-Laguerre points (default basis + 50)");
  add(app, "kmax", "highest state index reported");
  add(app, "channel", "dipole channel index used when gamma is derived from d, m");
  std::string config_path, out_path;
  bool json = false;
  app.add_option("--config", config_path, "key = value configuration file");
  app.add_option("--out", out_path, "write the payload to this file");
  app.add_flag("--json", json, "emit JSON instead of CSV");

  CLI::App* gamma = app.add_subcommand("gamma", "dipole channels gamma from the angular tridiagonal matrix");
  add(*gamma, "count", "number of positive channels");
  add(*gamma, "size", "truncation order");
  CLI::App* spectrum = app.add_subcommand("spectrum", "bound-state energies");
  CLI::App* table1 = app.add_subcommand("table1", "E_k - E_k^C for l = 0..3 (Q = 2, p = 5)");
  CLI::App* table2 = app.add_subcommand("table2", "valence-electron energies (Q = 1, d = 5, p = 3)");
  add(*table2, "count", "positive channels per m");
  CLI::App* wave = app.add_subcommand("wavefunction", "finite-basis and Laguerre-basis wavefunctions of state k");
  add(*wave, "k", "state index");
  add(*wave, "r_min", "smallest radius");
  add(*wave, "r_max", "largest radius");
  add(*wave, "points", "number of log-spaced radii");
  CLI::App* plateau = app.add_subcommand("plateau", "rho scan and plateau of stability");
  add(*plateau, "rho_min", "first rho");
  add(*plateau, "rho_max", "last rho");
  add(*plateau, "rho_step", "rho spacing");
  add(*plateau, "track", "number of lowest states tracked");
  add(*plateau, "tol", "allowed variation on the plateau");
  CLI::App* selfcheck = app.add_subcommand("selfcheck", "run the invariant suite");

  CommandResult result;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    result.out = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = kDomain;
    result.err = e.what();
    return result;
  }

  try {
    std::map<std::string, std::string> flags;
    for (const auto& [key, opt] : opts) {
      if (opt->count() > 0) flags[key] = raw[key];
    }
    const Settings settings(std::move(flags), config_path.empty() ? std::map<std::string, std::string>{}
                                                                  : read_config_file(config_path));
    Report report;
    int code = kOk;
    if (*gamma) {
      report = cmd_gamma(settings);
    } else if (*spectrum) {
      report = cmd_spectrum(settings);
    } else if (*table1) {
      report = cmd_table1(settings);
    } else if (*table2) {
      report = cmd_table2(settings);
    } else if (*wave) {
      report = cmd_wavefunction(settings);
    } else if (*plateau) {
      bool empty = false;
      report = cmd_plateau(settings, empty);
      if (empty) {
        code = kEmptyPlateau;
        result.err = "no plateau of stability on the requested grid";
      }
    } else if (*selfcheck) {
      bool passed = true;
      report = cmd_selfcheck(passed);
      if (!passed) code = kFailure;
    }
    const std::string payload = json ? render_json(report) : render_csv(report);
    if (out_path.empty()) {
      result.out = payload;
    } else {
      std::ofstream file(out_path);
      if (!file) throw DomainError("cannot write '" + out_path + "'");
      file << payload;
    }
    result.exit_code = code;
  } catch (const DomainError& e) {
    result.exit_code = kDomain;
    result.err = e.what();
  } catch (const ConvergenceError& e) {
    result.exit_code = kConvergence;
    result.err = e.what();
  }
  return result;
}

}  // namespace multipole::cli
