// SPDX-License-Identifier: MIT
#pragma once

// Command implementations behind the oscirad executable. run() parses the
// arguments, writes the result to `out` (or --out) and returns the exit code:
// 0 success, 2 usage error, 3 numerical failure.

#include <oscirad/oscirad.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace oscirad::cli {

using json = nlohmann::ordered_json;

inline constexpr const char* schema = "oscirad/1";

enum class Format { Text, Csv, Json };

struct Common {
  int digits = 17;
  std::string format;  // empty: command default
  bool json_flag = false;
  std::string out;
};

class Writer {
 public:
  Writer(const Common& c, Format fallback) : digits_(std::clamp(c.digits, 1, 17)) {
    if (c.json_flag || c.format == "json")
      format_ = Format::Json;
    else if (c.format == "csv")
      format_ = Format::Csv;
    else if (c.format == "text")
      format_ = Format::Text;
    else if (c.format.empty())
      format_ = fallback;
    else
      throw Error(Errc::InvalidArgument, "unknown format '" + c.format + "'");
  }

  [[nodiscard]] Format format() const noexcept { return format_; }

  [[nodiscard]] std::string num(double v) const {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits_, v);
    return buf;
  }

  /// Value rounded to the requested digits, for JSON.
  [[nodiscard]] json jnum(double v) const {
    if (!std::isfinite(v)) return num(v);
    return std::strtod(num(v).c_str(), nullptr);
  }

  [[nodiscard]] json jcomplex(complex z) const { return json{{"re", jnum(z.real())}, {"im", jnum(z.imag())}}; }

 private:
  int digits_;
  Format format_ = Format::Text;
};

/// key=value pairs describing every effective parameter of a run.
class Params {
 public:
  Params& add(std::string key, std::string value) {
    items_.emplace_back(std::move(key), std::move(value));
    return *this;
  }

  [[nodiscard]] std::string comment(std::string_view command) const {
    std::string s = "# ";
    s += schema;
    s += ' ';
    s += command;
    for (const auto& [k, v] : items_) s += ' ' + k + '=' + v;
    return s + '\n';
  }

  [[nodiscard]] json to_json() const {
    json j = json::object();
    for (const auto& [k, v] : items_) j[k] = v;
    return j;
  }

 private:
  std::vector<std::pair<std::string, std::string>> items_;
};

inline json envelope(std::string_view command, const Params& p) {
  return json{{"schema", schema}, {"command", command}, {"parameters", p.to_json()}};
}

// ----------------------------------------------------------------------------
// Argument helpers
// ----------------------------------------------------------------------------

inline std::vector<double> read_numbers(std::string_view text) {
  std::vector<double> out;
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    line = line.substr(0, line.find('#'));
    for (auto& c : line)
      if (c == ',' || c == ';' || c == '\t' || c == '\r') c = ' ';
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) out.push_back(detail::parse_real(tok));
  }
  return out;
}

/// "equidistant" (with n), "none", a comma-separated list, or a file path.
inline NodeSet parse_nodes(const std::string& spec, std::optional<int> n, SpaceKind space) {
  if (spec == "equidistant") {
    if (!n) throw Error(Errc::InvalidArgument, "--nodes equidistant needs --n");
    return equidistant_nodes(*n, space, space == SpaceKind::H1);
  }
  if (spec == "none") return NodeSet({}, space);
  try {
    return NodeSet(read_numbers(spec), space);
  } catch (const Error& e) {
    if (e.code() != Errc::InvalidArgument) throw;
  }
  std::ifstream in(spec);
  if (!in) throw Error(Errc::InvalidArgument, "cannot read nodes from '" + spec + "'");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return NodeSet(read_numbers(text), space);
}

inline std::string join(std::span<const double> v, const Writer& w) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + w.num(v[i]);
  return s;
}

// ----------------------------------------------------------------------------
// Commands
// ----------------------------------------------------------------------------

struct InitialErrorArgs {
  double k = 0.0;
  std::string space = "h10";
};

inline void cmd_initial_error(const InitialErrorArgs& a, const Writer& w, std::ostream& os) {
  const Frequency k(a.k);
  const auto space = parse_space(a.space);
  const auto e = oscillatory::initial_error(k, space);
  Params p;
  p.add("k", w.num(a.k)).add("space", std::string(to_string(space)));
  if (w.format() == Format::Json) {
    auto j = envelope("initial-error", p);
    j["result"] = {{"initial_error", e.is_infinite() ? json("infinite") : w.jnum(e.value())}};
    os << j.dump(2) << '\n';
    return;
  }
  if (w.format() == Format::Csv) os << p.comment("initial-error") << "k,space,initial_error\n"
                                    << w.num(a.k) << ',' << to_string(space) << ',';
  os << (e.is_infinite() ? std::string("infinite") : w.num(e.value())) << '\n';
}

struct RadiusArgs {
  std::optional<double> k;
  std::string space = "h10";
  std::string nodes = "equidistant";
  std::optional<int> n;
  std::optional<std::string> density;
  double tol = 1e-12;
};

inline void cmd_radius(const RadiusArgs& a, const Writer& w, std::ostream& os) {
  const auto space = parse_space(a.space);
  const auto nodes = parse_nodes(a.nodes, a.n, space);
  Params p;
  if (a.k) p.add("k", w.num(*a.k));
  p.add("space", std::string(to_string(space))).add("nodes", a.nodes);
  if (a.n) p.add("n", std::to_string(*a.n));
  if (a.density) p.add("density", *a.density).add("tol", w.num(a.tol));

  struct Row {
    double a, b;
    IntervalErrorKind kind;
    double error_sq;
  };
  std::vector<Row> rows;
  std::optional<double> radius;
  std::string method;
  if (a.density) {
    const auto rho = parse_density(*a.density);
    const auto g = general::radius_general(rho, nodes, a.tol);
    for (const auto& s : g.intervals) rows.push_back({s.a, s.b, s.kind, s.error_sq});
    radius = g.radius;
    method = "quadrature";
  } else {
    if (!a.k) throw Error(Errc::InvalidArgument, "radius needs --k or --density");
    const Frequency k(*a.k);
    const auto r = oscillatory::radius(k, nodes);
    if (!r.is_infinite()) radius = r.value();
    if (!nodes.empty() || space == SpaceKind::H10) {
      const auto part = nodes.partition();
      const auto br = nodes.breakpoints();
      const auto sq = oscillatory::interval_errors_sq(k, part);
      for (std::size_t j = 0; j < part.size(); ++j) rows.push_back({br[j], br[j + 1], kind_of(part.roles[j]), sq[j]});
    }
    method = "closed-form";
  }

  if (w.format() == Format::Json) {
    auto j = envelope("radius", p);
    json iv = json::array();
    for (const auto& r : rows)
      iv.push_back({{"a", w.jnum(r.a)}, {"b", w.jnum(r.b)}, {"kind", to_string(r.kind)}, {"error_sq", w.jnum(r.error_sq)}});
    j["result"] = {{"method", method},
                   {"radius", radius ? w.jnum(*radius) : json("infinite")},
                   {"nodes", nodes.size()},
                   {"intervals", iv}};
    os << j.dump(2) << '\n';
    return;
  }
  if (w.format() == Format::Csv) {
    os << p.comment("radius") << "a,b,length,kind,error_sq\n";
    for (const auto& r : rows)
      os << w.num(r.a) << ',' << w.num(r.b) << ',' << w.num(r.b - r.a) << ',' << to_string(r.kind) << ','
         << w.num(r.error_sq) << '\n';
    os << "# radius=" << (radius ? w.num(*radius) : std::string("infinite")) << '\n';
    return;
  }
  os << (radius ? w.num(*radius) : std::string("infinite")) << '\n';
}

struct OptimalArgs {
  double k = 0.0;
  int budget = 0;
  std::string space = "h10";
  optimal::OptimizerConfig cfg;
};

inline void add_optimizer_params(Params& p, const optimal::OptimizerConfig& c, const Writer& w) {
  p.add("seed", std::to_string(c.seed))
      .add("starts", std::to_string(c.starts))
      .add("grid", w.num(c.grid))
      .add("max_distinct", std::to_string(c.max_distinct))
      .add("tol", w.num(c.tol))
      .add("max_iters", std::to_string(c.max_iters));
}

inline void cmd_optimal_nodes(const OptimalArgs& a, const Writer& w, std::ostream& os) {
  const Frequency k(a.k);
  const auto space = parse_space(a.space);
  const auto r = optimal::optimal_nodes(k, a.budget, space, a.cfg);
  const auto cp = optimal::critical_points(k);
  const long long count = space == SpaceKind::H10 ? a.budget + 1 : a.budget;
  const auto reg = optimal::regime(k, count, space);
  const auto nodes = r.nodes(space);
  const double rel_gap = (r.equidistant_radius - r.best_radius) / r.best_radius;

  Params p;
  p.add("k", w.num(a.k)).add("budget", std::to_string(a.budget)).add("space", std::string(to_string(space)));
  add_optimizer_params(p, a.cfg, w);

  if (w.format() == Format::Json) {
    auto j = envelope("optimal-nodes", p);
    json xs = json::array(), ls = json::array();
    for (double x : nodes.nodes()) xs.push_back(w.jnum(x));
    for (double L : r.partition.lengths) ls.push_back(w.jnum(L));
    j["result"] = {{"regime", to_string(reg)},
                   {"threshold", w.jnum(cp.threshold)},
                   {"threshold_rounded", w.jnum(2.7 * k.abs())},
                   {"status", to_string(r.status)},
                   {"strategy", r.strategy},
                   {"best_radius", w.jnum(r.best_radius)},
                   {"equidistant_radius", w.jnum(r.equidistant_radius)},
                   {"relative_gap", w.jnum(rel_gap)},
                   {"iterations", r.iterations},
                   {"evaluations", r.evaluations},
                   {"nodes", xs},
                   {"lengths", ls}};
    os << j.dump(2) << '\n';
    return;
  }
  if (w.format() == Format::Csv) {
    os << p.comment("optimal-nodes");
    os << "# status=" << to_string(r.status) << " best_radius=" << w.num(r.best_radius)
       << " equidistant_radius=" << w.num(r.equidistant_radius) << '\n';
    os << "j,x\n";
    for (std::size_t j = 0; j < nodes.size(); ++j) os << j + 1 << ',' << w.num(nodes[j]) << '\n';
    return;
  }
  os << "regime: " << to_string(reg) << " (threshold 1/x0* = " << w.num(cp.threshold)
     << ", rounded 2.7|k| = " << w.num(2.7 * k.abs()) << ")\n";
  os << "status: " << to_string(r.status) << '\n';
  os << "strategy: " << r.strategy << '\n';
  os << "best radius: " << w.num(r.best_radius) << '\n';
  os << "equidistant radius: " << w.num(r.equidistant_radius) << '\n';
  os << "relative gap: " << w.num(100.0 * rel_gap) << "%\n";
  if (space == SpaceKind::H1 && r.status == optimal::OptimalityStatus::ProvenEquidistant)
    os << "x*: " << w.num(nodes[0]) << '\n';
  os << "nodes: " << join(nodes.nodes(), w) << '\n';
}

struct SplineArgs {
  double k = 0.0;
  int n = 0;
};

inline int cmd_spline_weights(const SplineArgs& a, const Writer& w, std::ostream& os) {
  const Frequency k(a.k);
  const auto rule = spline::spline_weights_equidistant(k, a.n);
  const complex sum = rule.weight_sum();
  Params p;
  p.add("k", w.num(a.k)).add("n", std::to_string(a.n));
  auto qmc = [&](std::size_t j) {
    return rule.weights[j] * std::polar(1.0, 2.0 * pi * k.value() * static_cast<double>(j) / a.n) *
           static_cast<double>(a.n);
  };
  if (w.format() == Format::Json) {
    auto j = envelope("spline-weights", p);
    json rows = json::array();
    for (std::size_t i = 0; i < rule.weights.size(); ++i)
      rows.push_back({{"j", i}, {"x", w.jnum(rule.nodes[i])}, {"weight", w.jcomplex(rule.weights[i])},
                      {"qmc", w.jcomplex(qmc(i))}});
    j["result"] = {{"provenance", to_string(rule.provenance)}, {"weight_sum", w.jcomplex(sum)}, {"weights", rows}};
    os << j.dump(2) << '\n';
  } else {
    os << p.comment("spline-weights") << "j,x,re,im,qmc_re,qmc_im\n";
    for (std::size_t i = 0; i < rule.weights.size(); ++i) {
      const auto q = qmc(i);
      os << i << ',' << w.num(rule.nodes[i]) << ',' << w.num(rule.weights[i].real()) << ','
         << w.num(rule.weights[i].imag()) << ',' << w.num(q.real()) << ',' << w.num(q.imag()) << '\n';
    }
    os << "# weight_sum=" << w.num(sum.real()) << ',' << w.num(sum.imag()) << '\n';
  }
  return std::abs(sum) <= 1e-12 ? 0 : 3;
}

struct Table1Row {
  double ratio;
  int k, m;
  double published_equi, published_opt, published_gap_percent;
};

inline constexpr Table1Row table1_rows[] = {
    {2.0, 72, 144, 1.68133e-3, 1.60478e-3, 4.8},
    {2.5, 194, 485, 5.36217e-4, 5.34544e-4, 0.31},
    {2.6, 290, 754, 3.47616e-4, 3.47567e-4, 0.014},
};

inline void cmd_table1(const optimal::OptimizerConfig& cfg, const Writer& w, std::ostream& os) {
  Params p;
  add_optimizer_params(p, cfg, w);
  struct Out {
    Table1Row row;
    double equi, opt, gap, rel;
    std::string note;
  };
  std::vector<Out> rows;
  for (const auto& row : table1_rows) {
    const Frequency k(row.k);
    const auto r = optimal::small_n_optimizer(k, row.m, SpaceKind::H10, cfg);
    const double equi = oscillatory::equidistant_error_h10(k, row.m);
    Out o{row, equi, r.best_radius, equi - r.best_radius, (equi - r.best_radius) / r.best_radius, ""};
    if (std::fabs(equi - row.published_equi) > 1e-3 * row.published_equi)
      o.note = "closed form differs from the printed e_equi " + w.num(row.published_equi);
    rows.push_back(std::move(o));
  }
  if (w.format() == Format::Json) {
    auto j = envelope("table1", p);
    json arr = json::array();
    for (const auto& o : rows)
      arr.push_back({{"ratio", w.jnum(o.row.ratio)}, {"k", o.row.k}, {"intervals", o.row.m}, {"e_equi", w.jnum(o.equi)},
                     {"e_opt", w.jnum(o.opt)}, {"gap", w.jnum(o.gap)}, {"relative_gap", w.jnum(o.rel)},
                     {"published_e_equi", w.jnum(o.row.published_equi)}, {"published_e_opt", w.jnum(o.row.published_opt)},
                     {"note", o.note}});
    j["result"] = {{"rows", arr}};
    os << j.dump(2) << '\n';
    return;
  }
  os << p.comment("table1") << "ratio,k,intervals,e_equi,e_opt,gap,relative_gap_percent,published_e_equi,published_e_opt,"
                               "published_relative_gap_percent,note\n";
  for (const auto& o : rows)
    os << w.num(o.row.ratio) << ',' << o.row.k << ',' << o.row.m << ',' << w.num(o.equi) << ',' << w.num(o.opt) << ','
       << w.num(o.gap) << ',' << w.num(100.0 * o.rel) << ',' << w.num(o.row.published_equi) << ','
       << w.num(o.row.published_opt) << ',' << w.num(o.row.published_gap_percent) << ',' << o.note << '\n';
  for (const auto& o : rows)
    if (!o.note.empty())
      os << "# footnote: k=" << o.row.k << " intervals=" << o.row.m << ": " << o.note << " (closed form "
         << w.num(o.equi) << ")\n";
}

struct AsymptoticsArgs {
  std::string mode = "fixed-k";
  double k = 1.0;
  int n = 5;
  double from = 1.0;
  double to = 1e5;
  int points = 26;
};

inline void cmd_asymptotics(const AsymptoticsArgs& a, const Writer& w, std::ostream& os) {
  if (a.points < 1 || !(a.from > 0.0) || a.to < a.from)
    throw Error(Errc::InvalidArgument, "asymptotics needs 0 < from <= to and points >= 1");
  const bool fixed_k = a.mode == "fixed-k";
  if (!fixed_k && a.mode != "fixed-n") throw Error(Errc::InvalidArgument, "mode must be fixed-k or fixed-n");
  std::vector<double> params;
  for (int i = 0; i < a.points; ++i) {
    const double t = a.points == 1 ? 0.0 : static_cast<double>(i) / (a.points - 1);
    double v = a.from * std::pow(a.to / a.from, t);
    if (fixed_k) v = std::max(1.0, std::round(v));
    if (params.empty() || v != params.back()) params.push_back(v);
  }
  const auto rows = oscillatory::asymptotic_scan(fixed_k ? oscillatory::ScanMode::FixedK : oscillatory::ScanMode::FixedN,
                                                 fixed_k ? a.k : static_cast<double>(a.n), params);
  Params p;
  p.add("mode", a.mode);
  if (fixed_k)
    p.add("k", w.num(a.k));
  else
    p.add("n", std::to_string(a.n));
  p.add("from", w.num(a.from)).add("to", w.num(a.to)).add("points", std::to_string(a.points));
  if (w.format() == Format::Json) {
    auto j = envelope("asymptotics", p);
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back({{"parameter", w.jnum(r.parameter)}, {"error", w.jnum(r.error)}, {"normalized", w.jnum(r.normalized)},
                     {"limit", w.jnum(r.limit)}, {"residual", w.jnum(r.normalized - r.limit)}});
    j["result"] = {{"rows", arr}};
    os << j.dump(2) << '\n';
    return;
  }
  os << p.comment("asymptotics") << (fixed_k ? "n" : "k") << ",e,normalized,limit,residual\n";
  for (const auto& r : rows)
    os << w.num(r.parameter) << ',' << w.num(r.error) << ',' << w.num(r.normalized) << ',' << w.num(r.limit) << ','
       << w.num(r.normalized - r.limit) << '\n';
}

struct ScanArgs {
  double k = 6.0;
  long long from = 1;
  long long to = 50;
  std::string space = "h10";
};

inline void cmd_scan_n(const ScanArgs& a, const Writer& w, std::ostream& os) {
  const Frequency k(a.k);
  const auto space = parse_space(a.space);
  const auto rows = optimal::scan_radius_over_n(k, a.from, a.to, space);
  const auto e0 = oscillatory::initial_error(k, space);
  // interval count below ceil|k|: equidistant radii oscillate
  const auto region = [&](long long n) {
    const long long m = space == SpaceKind::H10 ? n + 1 : n;
    return static_cast<double>(m) < std::ceil(k.abs()) ? "oscillating" : "monotone";
  };
  Params p;
  p.add("k", w.num(a.k)).add("from", std::to_string(a.from)).add("to", std::to_string(a.to));
  p.add("space", std::string(to_string(space)));
  if (w.format() == Format::Json) {
    auto j = envelope("scan-n", p);
    json arr = json::array();
    for (const auto& r : rows) arr.push_back({{"n", r.n}, {"radius", w.jnum(r.radius)}, {"region", region(r.n)}});
    j["result"] = {{"initial_error", e0.is_infinite() ? json("infinite") : w.jnum(e0.value())}, {"rows", arr}};
    os << j.dump(2) << '\n';
    return;
  }
  os << p.comment("scan-n") << "n,radius,initial_error,region\n";
  for (const auto& r : rows)
    os << r.n << ',' << w.num(r.radius) << ',' << (e0.is_infinite() ? std::string("inf") : w.num(e0.value())) << ','
       << region(r.n) << '\n';
}

struct FigureArgs {
  double k = 6.0;
  int samples = 1000;
};

inline void cmd_figure1(const FigureArgs& a, const Writer& w, std::ostream& os) {
  if (a.samples < 1) throw Error(Errc::InvalidArgument, "samples must be positive");
  const Frequency k(a.k);
  Params p;
  p.add("k", w.num(a.k)).add("samples", std::to_string(a.samples));
  std::vector<std::array<double, 3>> rows;
  for (int i = 0; i <= a.samples; ++i) {
    const double x = static_cast<double>(i) / a.samples;
    rows.push_back({x, optimal::objective_f(k, x), x > 0.0 ? 1.0 / x : std::numeric_limits<double>::infinity()});
  }
  if (w.format() == Format::Json) {
    auto j = envelope("figure1", p);
    json arr = json::array();
    for (const auto& r : rows) arr.push_back({{"x", w.jnum(r[0])}, {"f", w.jnum(r[1])}, {"envelope", w.jnum(r[2])}});
    j["result"] = {{"rows", arr}};
    os << j.dump(2) << '\n';
    return;
  }
  os << p.comment("figure1") << "x,f,envelope\n";
  for (const auto& r : rows) os << w.num(r[0]) << ',' << w.num(r[1]) << ',' << w.num(r[2]) << '\n';
}

struct WorstCaseArgs {
  std::optional<double> k;
  std::string space = "h10";
  std::string nodes = "equidistant";
  std::optional<int> n;
  std::optional<std::string> density;
  int samples = 1001;
  double tol = 1e-12;
};

inline void cmd_worst_case(const WorstCaseArgs& a, const Writer& w, std::ostream& os) {
  if (a.samples < 2) throw Error(Errc::InvalidArgument, "samples must be at least 2");
  const auto space = parse_space(a.space);
  const auto nodes = parse_nodes(a.nodes, a.n, space);
  std::optional<DensityFunction> rho;
  std::optional<WorstCaseCertificate> cert;
  if (a.density) {
    rho = parse_density(*a.density);
    cert = general::radius_general(*rho, nodes, a.tol).certificate;
  } else {
    if (!a.k) throw Error(Errc::InvalidArgument, "worst-case needs --k or --density");
    rho = oscillatory_density(Frequency(*a.k));
    cert = oscillatory::worst_case_certificate(Frequency(*a.k), nodes);
  }
  const auto rep = general::certificate_checks(*cert, *rho, a.tol);
  Params p;
  if (a.k) p.add("k", w.num(*a.k));
  if (a.density) p.add("density", *a.density);
  p.add("space", std::string(to_string(space))).add("nodes", a.nodes);
  if (a.n) p.add("n", std::to_string(*a.n));
  p.add("samples", std::to_string(a.samples)).add("tol", w.num(a.tol));

  if (w.format() == Format::Json) {
    auto j = envelope("worst-case", p);
    json arr = json::array();
    for (int i = 0; i < a.samples; ++i) {
      const double t = static_cast<double>(i) / (a.samples - 1);
      arr.push_back({{"t", w.jnum(t)}, {"value", w.jcomplex((*cert)(t))}, {"derivative", w.jcomplex(cert->derivative(t))}});
    }
    j["result"] = {{"radius", w.jnum(cert->radius())},
                   {"report",
                    {{"norm", w.jnum(rep.norm)},
                     {"norm_residual", w.jnum(rep.norm_residual)},
                     {"integral", w.jcomplex(rep.integral)},
                     {"integral_residual", w.jnum(rep.integral_residual)},
                     {"node_residual", w.jnum(rep.node_residual)}}},
                   {"samples", arr}};
    os << j.dump(2) << '\n';
    return;
  }
  os << p.comment("worst-case");
  os << "# radius=" << w.num(cert->radius()) << " norm=" << w.num(rep.norm)
     << " norm_residual=" << w.num(rep.norm_residual) << " integral_residual=" << w.num(rep.integral_residual)
     << " node_residual=" << w.num(rep.node_residual) << '\n';
  os << "t,re,im,derivative_re,derivative_im\n";
  for (int i = 0; i < a.samples; ++i) {
    const double t = static_cast<double>(i) / (a.samples - 1);
    const complex v = (*cert)(t), d = cert->derivative(t);
    os << w.num(t) << ',' << w.num(v.real()) << ',' << w.num(v.imag()) << ',' << w.num(d.real()) << ','
       << w.num(d.imag()) << '\n';
  }
}

// ----------------------------------------------------------------------------
// Entry point
// ----------------------------------------------------------------------------

inline void add_optimizer_flags(CLI::App* sub, optimal::OptimizerConfig& cfg) {
  sub->add_option("--seed", cfg.seed, "RNG seed for multi-start perturbations")->capture_default_str();
  sub->add_option("--starts", cfg.starts, "number of projected-gradient starts")->capture_default_str();
  sub->add_option("--grid", cfg.grid, "lattice resolution for grid certification")->capture_default_str();
  sub->add_option("--max-distinct", cfg.max_distinct, "distinct lengths in the structured search")->capture_default_str();
  sub->add_option("--tol", cfg.tol, "relative stopping tolerance")->capture_default_str();
  sub->add_option("--max-iters", cfg.max_iters, "iteration cap per start")->capture_default_str();
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Worst-case errors and optimal nodes for oscillatory integrals", "oscirad"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--digits", common.digits, "significant digits for reals")->capture_default_str();
  app.add_option("--format", common.format, "text, csv or json");
  app.add_flag("--json", common.json_flag, "same as --format json");
  app.add_option("--out", common.out, "write output to this file");

  InitialErrorArgs ie;
  auto* s_ie = app.add_subcommand("initial-error", "initial error for rho_k");
  s_ie->add_option("--k", ie.k, "frequency")->required();
  s_ie->add_option("--space", ie.space, "h10 or h1")->capture_default_str();

  RadiusArgs ra;
  auto* s_ra = app.add_subcommand("radius", "radius of information for a node set");
  s_ra->add_option("--k", ra.k, "frequency");
  s_ra->add_option("--space", ra.space, "h10 or h1")->capture_default_str();
  s_ra->add_option("--nodes", ra.nodes, "equidistant, none, a comma-separated list or a file")->capture_default_str();
  s_ra->add_option("--n", ra.n, "node count for equidistant nodes");
  s_ra->add_option("--density", ra.density, "const, osc:k=K, poly:c0,c1,..., gauss:mu,sigma");
  s_ra->add_option("--tol", ra.tol, "quadrature tolerance")->capture_default_str();

  OptimalArgs op;
  auto* s_op = app.add_subcommand("optimal-nodes", "best node placement for a budget");
  s_op->add_option("--k", op.k, "frequency")->required();
  s_op->add_option("--budget", op.budget, "nodes (interior nodes in h10)")->required();
  s_op->add_option("--space", op.space, "h10 or h1")->capture_default_str();
  add_optimizer_flags(s_op, op.cfg);

  SplineArgs sw;
  auto* s_sw = app.add_subcommand("spline-weights", "closed-form spline weights for equidistant nodes");
  s_sw->add_option("--k", sw.k, "integer frequency")->required();
  s_sw->add_option("--n", sw.n, "intervals (nodes j/n, j = 0..n)")->required();

  optimal::OptimizerConfig t1cfg;
  auto* s_t1 = app.add_subcommand("table1", "equidistant versus optimized radii below the threshold");
  add_optimizer_flags(s_t1, t1cfg);

  AsymptoticsArgs as;
  auto* s_as = app.add_subcommand("asymptotics", "normalized equidistant errors");
  s_as->add_option("--mode", as.mode, "fixed-k or fixed-n")->capture_default_str();
  s_as->add_option("--k", as.k, "frequency for fixed-k")->capture_default_str();
  s_as->add_option("--n", as.n, "intervals for fixed-n")->capture_default_str();
  s_as->add_option("--from", as.from, "first parameter")->capture_default_str();
  s_as->add_option("--to", as.to, "last parameter")->capture_default_str();
  s_as->add_option("--points", as.points, "log-spaced samples")->capture_default_str();

  ScanArgs sc;
  auto* s_sc = app.add_subcommand("scan-n", "equidistant radius as the node count grows");
  s_sc->add_option("--k", sc.k, "frequency")->capture_default_str();
  s_sc->add_option("--from", sc.from, "first n")->capture_default_str();
  s_sc->add_option("--to", sc.to, "last n")->capture_default_str();
  s_sc->add_option("--space", sc.space, "h10 (n interior nodes) or h1 (n intervals)")->capture_default_str();

  FigureArgs fg;
  auto* s_fg = app.add_subcommand("figure1", "samples of sin^2(pi k x)/x and 1/x");
  s_fg->add_option("--k", fg.k, "frequency")->capture_default_str();
  s_fg->add_option("--samples", fg.samples, "intervals of the sampling grid")->capture_default_str();

  WorstCaseArgs wc;
  auto* s_wc = app.add_subcommand("worst-case", "sampled worst-case function and residual report");
  s_wc->add_option("--k", wc.k, "frequency");
  s_wc->add_option("--space", wc.space, "h10 or h1")->capture_default_str();
  s_wc->add_option("--nodes", wc.nodes, "equidistant, none, a comma-separated list or a file")->capture_default_str();
  s_wc->add_option("--n", wc.n, "node count for equidistant nodes");
  s_wc->add_option("--density", wc.density, "density instead of rho_k");
  s_wc->add_option("--samples", wc.samples, "sample points on [0,1]")->capture_default_str();
  s_wc->add_option("--tol", wc.tol, "quadrature tolerance")->capture_default_str();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  std::ostringstream buf;
  int code = 0;
  try {
    if (*s_ie) cmd_initial_error(ie, Writer(common, Format::Text), buf);
    if (*s_ra) cmd_radius(ra, Writer(common, Format::Text), buf);
    if (*s_op) cmd_optimal_nodes(op, Writer(common, Format::Text), buf);
    if (*s_sw) code = cmd_spline_weights(sw, Writer(common, Format::Csv), buf);
    if (*s_t1) cmd_table1(t1cfg, Writer(common, Format::Csv), buf);
    if (*s_as) cmd_asymptotics(as, Writer(common, Format::Csv), buf);
    if (*s_sc) cmd_scan_n(sc, Writer(common, Format::Csv), buf);
    if (*s_fg) cmd_figure1(fg, Writer(common, Format::Csv), buf);
    if (*s_wc) cmd_worst_case(wc, Writer(common, Format::Csv), buf);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.is_numerical() ? 3 : 2;
  }

  if (common.out.empty()) {
    out << buf.str();
  } else {
    std::ofstream f(common.out, std::ios::binary);
    if (!f) {
      err << "error: cannot open '" << common.out << "' for writing\n";
      return 2;
    }
    f << buf.str();
  }
  if (code == 3) err << "error: weight sum is not zero\n";
  return code;
}

}  // namespace oscirad::cli
