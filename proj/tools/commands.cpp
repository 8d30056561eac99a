#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "hermlag/approx.hpp"
#include "hermlag/errors.hpp"
#include "hermlag/experiments.hpp"
#include "hermlag/fit.hpp"
#include "hermlag/quad.hpp"
#include "hermlag/registry.hpp"
#include "hermlag/version.hpp"

namespace hermlag::cli {

using nlohmann::json;

namespace {

void flatten(const json& j, std::vector<std::string> parents, std::vector<CLI::ConfigItem>& out) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it->is_object()) {
      auto p = parents;
      p.push_back(it.key());
      flatten(*it, p, out);
      continue;
    }
    CLI::ConfigItem item;
    item.parents = parents;
    item.name = it.key();
    auto text = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    if (it->is_array()) {
      for (const auto& v : *it) item.inputs.push_back(text(v));
    } else {
      item.inputs.push_back(text(*it));
    }
    out.push_back(std::move(item));
  }
}

// "2/3" or "0.5"
double parse_fraction(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return std::stod(s);
    return std::stod(s.substr(0, slash)) / std::stod(s.substr(slash + 1));
  } catch (const std::exception&) {
    throw DomainError("cannot read a number from '" + s + "'");
  }
}

json cell_json(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return std::isfinite(*d) ? json(*d) : json(nullptr);
  if (const auto* i = std::get_if<long long>(&c)) return *i;
  return std::get<std::string>(c);
}

json fit_json(const FitResult& f) {
  return {{"model", to_string(f.model)}, {"power", f.power},     {"rate", f.rate},
          {"intercept", f.intercept},    {"r_squared", f.r_squared}, {"used", f.used},
          {"excluded", f.excluded}};
}

// Writes the CSV and a manifest holding everything needed to re-run.
void emit(const Globals& g, const std::string& command, json params, const Table& t,
          json extra = json::object(), const Expansion* expansion = nullptr) {
  auto write = [&](std::ostream& os) {
    if (expansion)
      write_expansion(os, *expansion);
    else
      write_csv(os, t);
  };
  if (g.out.empty()) {
    write(std::cout);
  } else {
    std::ofstream f(g.out, std::ios::binary);
    require(f.good(), "cannot open output file " + g.out);
    write(f);
  }
  params["serial"] = g.serial;
  if (g.bandwidth_constant > 0.0) params["bandwidth-constant"] = g.bandwidth_constant;
  json m;
  m["command"] = command;
  m["version"] = HERMLAG_VERSION;
  m["parameters"] = std::move(params);
  m["schema"] = t.header;
  json rows = json::array();
  for (const auto& r : t.rows) {
    json row = json::array();
    for (const auto& c : r) row.push_back(cell_json(c));
    rows.push_back(std::move(row));
  }
  m["rows"] = std::move(rows);
  for (auto it = extra.begin(); it != extra.end(); ++it) m[it.key()] = *it;
  const std::string path = !g.manifest.empty() ? g.manifest : (g.out.empty() ? "" : g.out + ".json");
  if (path.empty()) {
    std::cerr << m.dump(2) << "\n";
  } else {
    std::ofstream f(path, std::ios::binary);
    require(f.good(), "cannot open manifest file " + path);
    f << m.dump(2) << "\n";
  }
}

double bandwidth_constant(const Globals& g) {
  return g.bandwidth_constant > 0.0 ? g.bandwidth_constant : default_bandwidth_constant();
}

}  // namespace

std::string JsonConfig::to_config(const CLI::App* app, bool default_also, bool, std::string) const {
  json j;
  for (const CLI::Option* opt : app->get_options({})) {
    if (opt->get_lnames().empty() || !opt->get_configurable()) continue;
    const std::string name = opt->get_lnames()[0];
    if (opt->count() > 0) {
      j[name] = opt->as<std::string>();
    } else if (default_also && !opt->get_default_str().empty()) {
      j[name] = opt->get_default_str();
    }
  }
  return j.dump(2);
}

std::vector<CLI::ConfigItem> JsonConfig::from_config(std::istream& input) const {
  json j;
  try {
    input >> j;
  } catch (const json::exception& e) {
    throw CLI::ConversionError(std::string("config is not valid JSON: ") + e.what());
  }
  std::vector<CLI::ConfigItem> items;
  flatten(j, {}, items);
  return items;
}

void add_rule(CLI::App& app, Globals& g) {
  struct Args {
    std::string family, kind = "gauss";
    double param = 0.0, beta = 1.0;
    std::size_t n = 1;
  };
  auto a = std::make_shared<Args>();
  auto* sub = app.add_subcommand("rule", "Print a quadrature rule as node,weight_poly,weight_func");
  sub->add_option("family", a->family, "laguerre or hermite")->required();
  sub->add_option("param", a->param, "alpha (Laguerre) or mu (Hermite)")->required();
  sub->add_option("beta", a->beta, "Scaling factor")->required();
  sub->add_option("n_points", a->n, "Number of nodes")->required();
  sub->add_option("kind", a->kind, "gauss or radau")->capture_default_str();
  sub->callback([a, &g] {
    const Family fam = family_from_string(a->family);
    QuadratureRule r;
    if (a->kind == "gauss") {
      r = fam == Family::laguerre ? gauss_laguerre(a->param, a->beta, a->n)
                                  : gauss_hermite_generalized(a->param, a->beta, a->n);
    } else if (a->kind == "radau") {
      require(fam == Family::laguerre, "radau rules exist only for the Laguerre family");
      r = gauss_radau_laguerre(a->param, a->beta, a->n);
    } else {
      throw DomainError("rule kind must be gauss or radau");
    }
    json p = {{"family", to_string(fam)}, {"param", a->param}, {"beta", a->beta},
              {"n_points", a->n},         {"kind", a->kind}};
    emit(g, "rule", p, rule_table(r));
  });
}

void add_project(CLI::App& app, Globals& g) {
  struct Args {
    std::string id, family = "laguerre", method = "projection";
    double param = 0.0, beta = 1.0;
    std::size_t N = 16;
  };
  auto a = std::make_shared<Args>();
  auto* sub = app.add_subcommand("project", "Expand a registered function and report the weighted error");
  sub->add_option("u_id", a->id, "Registered function id")->required();
  sub->add_option("--family", a->family, "laguerre or hermite")->capture_default_str();
  sub->add_option("--param", a->param, "alpha or mu")->capture_default_str();
  sub->add_option("--beta", a->beta, "Scaling factor")->capture_default_str();
  sub->add_option("--N", a->N, "Highest degree")->capture_default_str();
  sub->add_option("--method", a->method, "projection, gauss, radau or hermite")->capture_default_str();
  sub->callback([a, &g] {
    const auto entry = lookup(a->id);
    const BasisSpec spec{family_from_string(a->family), a->param, a->beta, a->N};
    spec.validate();
    Expansion e;
    if (a->method == "projection") {
      e = project(entry.target(), spec);
    } else if (a->method == "gauss" || a->method == "radau" || a->method == "hermite") {
      const InterpKind k = a->method == "gauss"   ? InterpKind::gauss
                           : a->method == "radau" ? InterpKind::radau
                                                  : InterpKind::hermite;
      e = interpolate(entry.target(), spec, k);
    } else {
      throw DomainError("unknown method '" + a->method + "'");
    }
    const auto err = weighted_error(entry.target(), e);
    Table t;
    t.header = {"n", "coeff"};
    for (std::size_t n = 0; n < e.coeffs.size(); ++n) t.rows.push_back({static_cast<long long>(n), e.coeffs[n]});
    json p = {{"u_id", a->id}, {"family", a->family}, {"param", a->param},
              {"beta", a->beta}, {"N", a->N},        {"method", a->method}};
    json extra = {{"basis", {{"family", to_string(spec.family)}, {"param", spec.param},
                             {"beta", spec.scale}, {"N", spec.size}}},
                  {"weighted_error", err.refined},
                  {"refinement_ok", err.refinement_ok}};
    emit(g, "project", p, t, extra, &e);
  });
}

void add_sweep_galerkin(CLI::App& app, Globals& g) {
  struct Args {
    std::string id, range = "10:150:10", norm = "nodal", fit = "algebraic", power = "1";
    std::vector<std::string> betas{"1"};
    double gamma = 1.0;
  };
  auto a = std::make_shared<Args>();
  auto* sub = app.add_subcommand("sweep-galerkin", "Galerkin error sweep for -u'' + gamma u = f on the half line");
  sub->add_option("u_id", a->id, "Registered half-line function with analytic derivatives")->required();
  sub->add_option("--gamma", a->gamma, "Reaction coefficient")->capture_default_str()->check(CLI::PositiveNumber);
  sub->add_option("--beta", a->betas, "Scaling rule(s): c, c/N, c*N^p, N^p, c*ln(N)^2/N")
      ->capture_default_str();
  sub->add_option("--N", a->range, "a:b:s or comma list")->capture_default_str();
  sub->add_option("--norm", a->norm, "nodal or continuous")->capture_default_str();
  sub->add_option("--fit", a->fit, "algebraic, exp_pow or none")->capture_default_str();
  sub->add_option("--fit-power", a->power, "p in exp(-c N^p)")->capture_default_str();
  sub->callback([a, &g] {
    const auto entry = lookup(a->id);
    require(entry.has_derivatives(), "function " + a->id + " has no analytic derivatives");
    const auto Ns = parse_n_range(a->range);
    require(a->norm == "nodal" || a->norm == "continuous", "norm must be nodal or continuous");
    SweepOptions so;
    so.gamma = a->gamma;
    so.norm = a->norm == "nodal" ? ErrorNorm::nodal : ErrorNorm::continuous;
    so.serial = g.serial;
    Table t;
    t.header = {"beta_rule", "N", "sqrt_N", "beta", "err_L2", "err_H1"};
    json fits = json::array();
    for (const auto& b : a->betas) {
      const auto rule = parse_beta_rule(b);
      const auto rows = galerkin_sweep(entry, rule, Ns, so);
      std::vector<double> n, e;
      for (const auto& r : rows) {
        t.rows.push_back({rule.text, static_cast<long long>(r.N), std::sqrt(static_cast<double>(r.N)), r.beta,
                          r.err_L2, r.err_H1});
        n.push_back(static_cast<double>(r.N));
        e.push_back(r.err_L2);
      }
      if (a->fit == "none") continue;
      json fj = {{"beta_rule", rule.text}};
      try {
        fj["fit"] = fit_json(fit_rate(n, e, fit_model_from_string(a->fit), parse_fraction(a->power)));
      } catch (const DomainError& ex) {
        fj["fit_error"] = ex.what();
      }
      fits.push_back(fj);
    }
    json p = {{"u_id", a->id},   {"gamma", a->gamma}, {"beta", a->betas},
              {"N", a->range},   {"norm", a->norm},   {"fit", a->fit},
              {"fit-power", a->power}};
    emit(g, "sweep-galerkin", p, t, {{"fits", fits}});
  });
}

void add_balance(CLI::App& app, Globals& g) {
  struct Args {
    std::string id, family = "hermite", range = "16,32,64,128,256";
    double mu = 0.0, lo = 1e-3, hi = 1e3;
  };
  auto a = std::make_shared<Args>();
  auto* sub = app.add_subcommand("balance", "Scaling factors balancing spatial and frequency truncation");
  sub->add_option("u_id", a->id, "Registered function id")->required();
  sub->add_option("--mu", a->mu, "Hermite-side weight parameter")->capture_default_str();
  sub->add_option("--family", a->family, "hermite, or laguerre for v(x^2)")->capture_default_str();
  sub->add_option("--N", a->range, "a:b:s or comma list")->capture_default_str();
  sub->add_option("--beta-lo", a->lo, "Lower end of the scaling bracket")->capture_default_str();
  sub->add_option("--beta-hi", a->hi, "Upper end of the scaling bracket")->capture_default_str();
  sub->callback([a, &g] {
    const Family fam = family_from_string(a->family);
    const auto t = make_truncation_target(lookup(a->id), fam, a->mu);
    BalanceOptions bo;
    bo.beta_lo = a->lo;
    bo.beta_hi = a->hi;
    bo.c = bandwidth_constant(g);
    const auto reps = balance_sweep(t, fam, parse_n_range(a->range), bo, g.serial);
    Table tab;
    tab.header = {"N", "beta_star", "M", "B", "E_s", "E_f"};
    std::vector<double> ln, lb;
    for (const auto& r : reps) {
      tab.rows.push_back({static_cast<long long>(r.N), r.beta, r.M, r.B, r.E_s, r.E_f});
      ln.push_back(std::log(static_cast<double>(r.N)));
      lb.push_back(std::log(r.beta));
    }
    json extra = json::object();
    if (reps.size() >= 2) {
      const auto lf = fit_line(ln, lb);
      extra["log_log_slope"] = lf.slope;
      extra["r_squared"] = lf.r_squared;
    }
    json p = {{"u_id", a->id}, {"mu", a->mu}, {"family", a->family}, {"N", a->range},
              {"beta-lo", a->lo}, {"beta-hi", a->hi}};
    emit(g, "balance", p, tab, extra);
  });
}

void add_transition(CLI::App& app, Globals& g) {
  auto hs = std::make_shared<std::string>("3,3.5,4,4.5");
  auto* sub = app.add_subcommand("transition", "Transition points for x^2 (1+x^2)^{-h} with mu = 1/2");
  sub->add_option("--h-list", *hs, "Comma list of decay exponents")->capture_default_str();
  sub->callback([hs, &g] {
    const auto rows = transition_sweep(parse_real_list(*hs), g.serial);
    Table t;
    t.header = {"h", "p", "N_predicted", "status"};
    for (const auto& r : rows)
      t.rows.push_back({r.h, r.p, r.N_predicted, r.message.empty() ? std::string("ok") : r.message});
    emit(g, "transition", {{"h-list", *hs}}, t);
  });
}

void add_quad_compare(CLI::App& app, Globals& g) {
  struct Args {
    std::string odd = "11:211:10", osc = "20:200:10";
  };
  auto a = std::make_shared<Args>();
  auto* sub = app.add_subcommand("quad-compare", "Hermite against dual Laguerre quadrature, and Hermite scalings");
  sub->add_option("--N", a->odd, "Odd totals for e^{-x^2}/(1+16x^2)")->capture_default_str();
  sub->add_option("--N-osc", a->osc, "Point counts for e^{-x^2} cos(x^3)")->capture_default_str();
  sub->callback([a, &g] {
    const auto odd = parse_n_range(a->odd);
    for (auto n : odd) require(n % 2 == 1, "quad-compare needs odd N");
    const auto rat = quad_compare_rational(odd, g.serial);
    const auto osc = quad_compare_oscillatory(parse_n_range(a->osc), g.serial);
    Table t1, t2;
    t1.header = {"N", "beta_hermite", "beta_laguerre", "err_hermite", "err_dual_laguerre"};
    for (const auto& r : rat)
      t1.rows.push_back({static_cast<long long>(r.N), r.beta_hermite, r.beta_laguerre, r.err_hermite,
                         r.err_dual_laguerre});
    t2.header = {"N", "err_beta_1", "err_beta_N^(1/6)"};
    for (const auto& r : osc) t2.rows.push_back({static_cast<long long>(r.N), r.err_unit, r.err_scaled});
    json second = json::array();
    for (const auto& r : t2.rows) {
      json row = json::array();
      for (const auto& c : r) row.push_back(cell_json(c));
      second.push_back(row);
    }
    json extra = {{"reference_rational", kGaussRat16Integral},
                  {"reference_oscillatory", kGaussCos3Integral},
                  {"oscillatory", {{"schema", t2.header}, {"rows", second}}}};
    json p = {{"N", a->odd}, {"N-osc", a->osc}};
    emit(g, "quad-compare", p, t1, extra);
    if (g.out.empty()) {
      std::cout << "\n";
      write_csv(std::cout, t2);
    } else {
      const auto dot = g.out.rfind('.');
      const std::string path =
          (dot == std::string::npos ? g.out : g.out.substr(0, dot)) + "_oscillatory.csv";
      std::ofstream f(path, std::ios::binary);
      require(f.good(), "cannot open output file " + path);
      write_csv(f, t2);
    }
  });
}

void add_fit(CLI::App& app, Globals& g) {
  struct Args {
    std::string path, model = "algebraic", power = "1", x = "N", y = "err_L2", where;
    double floor = kFitFloor;
  };
  auto a = std::make_shared<Args>();
  auto* sub = app.add_subcommand("fit", "Fit a convergence rate to CSV columns");
  sub->add_option("csv", a->path, "Input CSV with a header row")->required();
  sub->add_option("--model", a->model, "algebraic or exp_pow")->capture_default_str();
  sub->add_option("--power", a->power, "p for exp_pow, e.g. 2/3")->capture_default_str();
  sub->add_option("--x", a->x, "Column holding N")->capture_default_str();
  sub->add_option("--y", a->y, "Column holding the error")->capture_default_str();
  sub->add_option("--where", a->where, "Keep rows with column=value");
  sub->add_option("--floor", a->floor, "Errors at or below this are excluded")->capture_default_str();
  sub->callback([a, &g] {
    std::ifstream f(a->path);
    require(f.good(), "cannot open " + a->path);
    std::vector<std::string> header;
    const auto rows = read_csv(f, &header);
    auto col = [&](const std::string& name) {
      for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return i;
      throw DomainError("column '" + name + "' not found");
    };
    const std::size_t ix = col(a->x), iy = col(a->y);
    std::size_t iw = 0;
    std::string wv;
    if (!a->where.empty()) {
      const auto eq = a->where.find('=');
      require(eq != std::string::npos, "--where expects column=value");
      iw = col(a->where.substr(0, eq));
      wv = a->where.substr(eq + 1);
    }
    std::vector<double> n, e;
    for (const auto& r : rows) {
      require(r.size() == header.size(), "ragged CSV row");
      if (!a->where.empty() && r[iw] != wv) continue;
      n.push_back(std::stod(r[ix]));
      e.push_back(std::stod(r[iy]));
    }
    const auto fr = fit_rate(n, e, fit_model_from_string(a->model), parse_fraction(a->power), a->floor);
    json out = fit_json(fr);
    out["input"] = a->path;
    out["x"] = a->x;
    out["y"] = a->y;
    if (!a->where.empty()) out["where"] = a->where;
    out["version"] = HERMLAG_VERSION;
    if (g.out.empty()) {
      std::cout << out.dump(2) << "\n";
    } else {
      std::ofstream o(g.out, std::ios::binary);
      require(o.good(), "cannot open output file " + g.out);
      o << out.dump(2) << "\n";
    }
  });
}

}  // namespace hermlag::cli
