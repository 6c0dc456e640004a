#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cbend/cbend.hpp"
#include "json.hpp"

using namespace cbend;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kValidation = 2;
constexpr int kAudit = 3;

struct RunConfig {
  std::string command;
  int genus = 1, punctures = 1;
  std::string triangulation, decoration;
  std::optional<double> theta;
  double modulus = 1.0;
  std::optional<std::uint64_t> seed;
  double tol = 1e-8;
  int depth = 4;
  std::string grid = "0.25:4:5";
  bool degrees = false;
  std::string out;
  std::string format = "json";
};

json config_json(const RunConfig& c) {
  json j = {{"command", c.command}, {"tol", c.tol}, {"format", c.format}, {"degrees", c.degrees}};
  if (c.command == "generate") {
    j["genus"] = c.genus;
    j["punctures"] = c.punctures;
  } else if (c.command == "certify") {
    j["grid"] = c.grid;
  } else {
    j["triangulation"] = c.triangulation;
    if (!c.decoration.empty()) j["decoration"] = c.decoration;
    if (c.command != "holonomy") j["depth"] = c.depth;
  }
  if (c.theta) j["theta"] = *c.theta;
  if (c.command != "generate" && c.command != "certify" && c.decoration.empty() && !c.seed) j["modulus"] = c.modulus;
  if (c.seed) j["seed"] = *c.seed;
  return j;
}

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorKind::Schema, what); }

double to_radians(double a, bool degrees) { return degrees ? a * std::numbers::pi / 180.0 : a; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) invalid("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Temp file in the target directory, then rename over the destination.
void emit(const RunConfig& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  const std::filesystem::path dest(c.out);
  std::filesystem::path tmp = dest;
  tmp += ".tmp" + std::to_string(std::random_device{}());
  {
    std::ofstream o(tmp, std::ios::binary | std::ios::trunc);
    if (!o) invalid("cannot write " + tmp.string());
    o << text;
    if (!text.empty() && text.back() != '\n') o << '\n';
    o.close();
    if (!o) invalid("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, dest, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    invalid("cannot move output into place: " + ec.message());
  }
}

void require_format(const RunConfig& c, std::initializer_list<const char*> ok) {
  for (const char* f : ok)
    if (c.format == f) return;
  invalid("format '" + c.format + "' not supported by " + c.command);
}

Triangulation load_triangulation(const RunConfig& c) {
  const Triangulation t = triangulation_from_json(read_file(c.triangulation));
  const auto problems = validate(t);
  if (!problems.empty()) invalid("triangulation: " + problems.front());
  return t;
}

// Angles in a decoration file follow --degrees.
std::string decoration_in_radians(const std::string& text, bool degrees) {
  if (!degrees) return text;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    invalid(std::string("invalid JSON: ") + e.what());
  }
  if (j.is_object() && j.contains("theta") && j["theta"].is_number())
    j["theta"] = to_radians(j["theta"].get<double>(), true);
  if (j.is_object() && j.contains("edges") && j["edges"].is_object())
    for (auto& [k, v] : j["edges"].items())
      if (v.is_object() && v.contains("angle") && v["angle"].is_number())
        v["angle"] = to_radians(v["angle"].get<double>(), true);
  return j.dump();
}

Decoration load_decoration(const RunConfig& c, const Triangulation& t) {
  const int sources = !c.decoration.empty() + c.theta.has_value() + c.seed.has_value();
  if (sources > 1) invalid("give exactly one of --decoration, --theta, --seed");
  if (!c.decoration.empty()) return decoration_from_json(decoration_in_radians(read_file(c.decoration), c.degrees), t);
  if (c.theta) {
    Decoration d = make_regular(std::vector<double>(t.edges.size(), c.modulus), to_radians(*c.theta, c.degrees));
    check_decoration(t, d);
    return d;
  }
  if (c.seed) {
    std::mt19937_64 gen(*c.seed);
    std::uniform_real_distribution<double> logm(std::log(0.3), std::log(3.0)), arg(-std::numbers::pi, std::numbers::pi);
    Decoration d(t.edges.size());
    for (auto& z : d)
      do z = std::polar(std::exp(logm(gen)), arg(gen));
      while (std::abs(z + 1.0) < 0.1);
    return d;
  }
  invalid("no decoration: give --decoration, --theta or --seed");
}

json complex_json(cplx z) { return {z.real(), z.imag()}; }

json matrix_json(const GroupMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < 3; ++i) {
    json row = json::array();
    for (int j = 0; j < 3; ++j) row.push_back(complex_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json isometry_json(const Isometry& g) {
  json j = {{"antiholomorphic", g.antiholomorphic}};
  if (g.antiholomorphic) {
    j["matrix"] = matrix_json(g.matrix);
    return j;
  }
  j["matrix"] = matrix_json(su_normalize(g.matrix));
  j["trace"] = complex_json(canonical_trace(g.matrix));
  j["class"] = to_string(classify(g));
  return j;
}

std::vector<double> parse_grid(const std::string& text) {
  double lo = 0, hi = 0;
  int n = 0;
  char c1 = 0, c2 = 0, extra = 0;
  std::istringstream is(text);
  if (!(is >> lo >> c1 >> hi >> c2 >> n) || c1 != ':' || c2 != ':' || (is >> extra))
    invalid("grid must be min:max:steps, got '" + text + "'");
  return log_grid(lo, hi, n);
}

int cmd_generate(const RunConfig& c) {
  require_format(c, {"json"});
  emit(c, triangulation_to_json(generate_surface(c.genus, c.punctures)));
  return kOk;
}

int cmd_holonomy(const RunConfig& c) {
  require_format(c, {"json", "csv"});
  const Triangulation t = load_triangulation(c);
  const Representation rep(t, load_decoration(c, t));
  if (!rep.bipartite) throw Error(ErrorKind::NotBipartite, "holonomy output needs a bipartite triangulation");
  const SurfaceGroupHolonomy h = surface_group_holonomy(rep);

  json peripherals = json::array();
  std::ostringstream csv;
  csv << std::setprecision(17) << "puncture,class,balanced,crossing_product\n";
  for (int v = 0; v < t.punctures; ++v) {
    const IsometryClass cls = classify_peripheral(rep, v);
    const double prod = crossing_modulus_product(t, rep.decoration, v);
    const bool bal = is_balanced(t, rep.decoration, v);
    peripherals.push_back({{"puncture", v}, {"class", to_string(cls)}, {"balanced", bal}, {"crossing_product", prod}});
    csv << v << ',' << to_string(cls) << ',' << (bal ? "true" : "false") << ',' << prod << '\n';
  }
  if (c.format == "csv") {
    emit(c, csv.str());
  } else {
    auto list = [](const std::vector<Isometry>& v) {
      json a = json::array();
      for (const auto& g : v) a.push_back(isometry_json(g));
      return a;
    };
    const json report = {{"config", config_json(c)},
                         {"genus", t.genus},
                         {"punctures", t.punctures},
                         {"a", list(h.a)},
                         {"b", list(h.b)},
                         {"c", list(h.c)},
                         {"relator_residual", h.relator_residual},
                         {"direct_residual", h.direct_residual},
                         {"peripherals", peripherals}};
    emit(c, report.dump(2));
  }
  std::fprintf(stderr, "relator residual %.3g\n", h.relator_residual);
  return h.relator_residual < c.tol ? kOk : kAudit;
}

struct AuditSummary {
  double max_cartan = 0.0;
  double equivariance = 0.0;
  int equivariance_samples = 0;
  std::optional<double> toledo;
  bool all_balanced = true;
  bool ok = true;
  json to_json() const {
    json j = {{"max_abs_cartan", max_cartan},
              {"equivariance_residual", equivariance},
              {"equivariance_samples", equivariance_samples},
              {"all_balanced", all_balanced},
              {"ok", ok}};
    j["toledo"] = toledo ? json(*toledo) : json(nullptr);
    return j;
  }
};

AuditSummary audit_realization(const RunConfig& c, const Representation& rep, const BentRealization& rl) {
  AuditSummary s;
  s.max_cartan = max_abs_cartan(rl);
  const EquivarianceReport er = equivariance_audit(rl, rep, audit_loops(rep));
  s.equivariance = er.max_residual;
  s.equivariance_samples = er.samples;
  for (int v = 0; v < rep.tri->punctures; ++v) s.all_balanced = s.all_balanced && is_balanced(*rep.tri, rep.decoration, v);
  if (s.all_balanced) s.toledo = toledo(rl, rep).value;
  s.ok = s.max_cartan < c.tol && s.equivariance < c.tol && (!s.toledo || std::abs(*s.toledo) < c.tol);
  return s;
}

int cmd_develop(const RunConfig& c) {
  require_format(c, {"json", "csv"});
  const Triangulation t = load_triangulation(c);
  const Representation rep(t, load_decoration(c, t));
  const BentRealization rl = develop(rep, c.depth);
  const AuditSummary s = audit_realization(c, rep, rl);
  if (c.format == "csv") {
    emit(c, realization_to_csv(rl));
  } else {
    json report = json::parse(realization_to_json(rl));
    report["config"] = config_json(c);
    report["audits"] = s.to_json();
    report["audits"]["real_fuchsian"] = real_fuchsian_audit(rl);
    emit(c, report.dump(2));
  }
  std::fprintf(stderr, "%zu triangles, max |Cartan| %.3g, equivariance %.3g\n", rl.nodes.size(), s.max_cartan,
               s.equivariance);
  return s.ok ? kOk : kAudit;
}

int cmd_certify(const RunConfig& c) {
  require_format(c, {"json", "csv"});
  if (!c.theta) invalid("certify needs --theta");
  const double theta = to_radians(*c.theta, c.degrees);
  const std::vector<double> grid = parse_grid(c.grid);
  const CertificateReport r = certify(theta, grid, grid);
  if (c.format == "csv") {
    emit(c, certificate_to_csv(r));
  } else {
    json pts = json::array();
    for (const auto& p : r.points)
      pts.push_back({{"r2", p.r2}, {"r3", p.r3}, {"trace", complex_json(p.trace)}, {"margin", p.margin},
                     {"class", to_string(p.cls)}});
    emit(c, json{{"config", config_json(c)},
                 {"theta", theta},
                 {"angle_in_range", r.angle_in_range},
                 {"min_re", r.min_re},
                 {"min_margin", r.min_margin},
                 {"max_closed_form_gap", r.max_closed_form_gap},
                 {"loxodromic", r.loxodromic},
                 {"points", pts}}
                .dump(2));
  }
  std::fprintf(stderr, "theta %.6g: min Re trace %.17g (margin %.3g)%s\n", theta, r.min_re, r.min_margin,
               r.angle_in_range ? "" : ", outside |theta| <= pi/2, reported only");
  return r.angle_in_range && !r.all_above ? kAudit : kOk;
}

int cmd_audit(const RunConfig& c) {
  require_format(c, {"json"});
  const Triangulation t = load_triangulation(c);
  const Representation rep(t, load_decoration(c, t));
  json checks = json::object();
  bool ok = true;
  auto record = [&](const char* name, bool pass, json detail) {
    checks[name] = {{"pass", pass}, {"detail", std::move(detail)}};
    ok = ok && pass;
  };
  const auto problems = validate(t);
  record("triangulation", problems.empty(), problems);
  record("bipartite_holomorphic", rep.bipartite && holonomy_flag_check(rep), rep.bipartite);
  if (rep.bipartite) {
    const SurfaceGroupHolonomy h = surface_group_holonomy(rep);
    record("relator", h.relator_residual < c.tol, h.relator_residual);
    const AuditSummary s = audit_realization(c, rep, develop(rep, c.depth));
    record("realization", s.ok, s.to_json());
  }
  emit(c, json{{"config", config_json(c)}, {"pass", ok}, {"checks", checks}}.dump(2));
  std::fprintf(stderr, "audit %s\n", ok ? "passed" : "FAILED");
  return ok ? kOk : kAudit;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bent representations of punctured surface groups into PU(2,1)"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML/INI file with option values; unknown keys are errors");
  app.allow_config_extras(CLI::config_extras_mode::error);
  RunConfig c;

  auto common = [&](CLI::App* s) {
    s->add_option("--out", c.out, "Output path (stdout if omitted)");
    s->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    s->add_option("--tol", c.tol, "Audit tolerance")->check(CLI::PositiveNumber);
    s->add_flag("--degrees", c.degrees, "Angles are in degrees");
  };
  auto decorated = [&](CLI::App* s) {
    s->add_option("--triangulation,-t", c.triangulation, "Triangulation JSON")->required();
    s->add_option("--decoration,-d", c.decoration, "Decoration JSON");
    s->add_option("--theta", c.theta, "Regular decoration angle");
    s->add_option("--modulus", c.modulus, "Modulus on every edge with --theta")->check(CLI::PositiveNumber);
    s->add_option("--seed", c.seed, "Random decoration seed");
  };

  auto* gen = app.add_subcommand("generate", "Write a bipartite ideal triangulation");
  gen->add_option("--genus,-g", c.genus)->required();
  gen->add_option("--punctures,-n", c.punctures)->required();
  common(gen);

  auto* hol = app.add_subcommand("holonomy", "Generator images, relator residual, peripheral classes");
  decorated(hol);
  common(hol);

  auto* dev = app.add_subcommand("develop", "Develop the bent realization and audit it");
  decorated(dev);
  dev->add_option("--depth", c.depth)->check(CLI::NonNegativeNumber);
  common(dev);

  auto* cert = app.add_subcommand("certify", "Trace certificate over a logarithmic (r2, r3) grid");
  cert->add_option("--theta", c.theta)->required();
  cert->add_option("--grid", c.grid, "min:max:steps, used for both radii");
  common(cert);
  c.format = "json";

  auto* aud = app.add_subcommand("audit", "Run every numerical audit on one decorated triangulation");
  decorated(aud);
  aud->add_option("--depth", c.depth)->check(CLI::NonNegativeNumber);
  common(aud);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kValidation;
  }

  c.command = app.get_subcommands().front()->get_name();
  if (c.command == "certify" && app.get_subcommands().front()->count("--format") == 0) c.format = "csv";
  try {
    if (c.command == "generate") return cmd_generate(c);
    if (c.command == "holonomy") return cmd_holonomy(c);
    if (c.command == "develop") return cmd_develop(c);
    if (c.command == "certify") return cmd_certify(c);
    return cmd_audit(c);
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kValidation;
  }
}
