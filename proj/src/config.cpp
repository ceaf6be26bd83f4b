#include <quarttrace/config.hpp>

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace qt {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

using Section = std::map<std::string, std::string>;

std::map<std::string, Section> parse_ini(const std::string& text) {
  std::map<std::string, Section> out;
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find_first_of("#;");
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError("line " + std::to_string(lineno) + ": malformed section header");
      section = trim(line.substr(1, line.size() - 2));
      out[section];
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    if (section.empty())
      throw ConfigError("line " + std::to_string(lineno) + ": key outside any section");
    out[section][trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return out;
}

double to_double(const std::string& key, const std::string& v) {
  try {
    size_t pos = 0;
    const double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("bad number for " + key + ": '" + v + "'");
  }
}

int to_int(const std::string& key, const std::string& v) {
  const double x = to_double(key, v);
  if (x != std::floor(x)) throw ConfigError("expected integer for " + key + ": '" + v + "'");
  return int(x);
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError("expected boolean for " + key + ": '" + v + "'");
}

struct Reader {
  const Section& s;
  std::string name;

  bool has(const std::string& k) const { return s.count(k) > 0; }
  double num(const std::string& k, double dflt) const {
    return has(k) ? to_double(name + "." + k, s.at(k)) : dflt;
  }
  int integer(const std::string& k, int dflt) const {
    return has(k) ? to_int(name + "." + k, s.at(k)) : dflt;
  }
  bool flag(const std::string& k, bool dflt) const {
    return has(k) ? to_bool(name + "." + k, s.at(k)) : dflt;
  }
  std::string str(const std::string& k, const std::string& dflt) const {
    return has(k) ? s.at(k) : dflt;
  }
};

std::vector<double> parse_coeffs(const std::string& rule, int modes) {
  std::vector<double> c;
  if (rule.rfind("inverse_square", 0) == 0) {
    // c_k = 1/k^2
    for (int k = 1; k <= modes; ++k) c.push_back(1.0 / (double(k) * k));
    return c;
  }
  if (rule.rfind("list:", 0) == 0) {
    std::istringstream in(rule.substr(5));
    std::string tok;
    while (std::getline(in, tok, ',')) c.push_back(to_double("coefficients", trim(tok)));
    if (int(c.size()) < modes)
      throw ConfigError("coefficient list shorter than mode count");
    c.resize(size_t(modes));
    return c;
  }
  if (rule == "unit" || rule.empty()) {
    c.assign(size_t(modes), 1.0);
    return c;
  }
  throw ConfigError("unknown coefficient rule: '" + rule + "'");
}

}  // namespace

RunConfig parse_config_text(const std::string& text) {
  const auto ini = parse_ini(text);
  for (const auto& [name, _] : ini)
    if (name != "operator" && name != "potential" && name != "solver")
      throw ConfigError("unknown section [" + name + "]");

  RunConfig cfg;
  static const Section empty;

  {
    Reader op{ini.count("operator") ? ini.at("operator") : empty, "operator"};
    cfg.law.base = op.num("gamma_base", 1.0);
    cfg.law.scale = op.num("gamma_scale", 1.0);
    cfg.law.exponent = op.num("gamma_exponent", 4.0);
    cfg.alpha = op.num("alpha", 0.25);
    cfg.modes = op.integer("modes", 1);
  }
  {
    Reader po{ini.count("potential") ? ini.at("potential") : empty, "potential"};
    cfg.potential.profile_name = po.str("profile", "cos_m");
    const int order = po.integer("profile_order", 1);
    cfg.potential.profile = make_profile(cfg.potential.profile_name, order);
    cfg.potential.mean_tol = po.num("mean_tol", 1e-10);
    cfg.potential.coefficients = parse_coeffs(po.str("coefficients", "unit"), cfg.modes);
    for (double ck : cfg.potential.coefficients)
      if (!std::isfinite(ck)) throw ConfigError("non-finite potential coefficient");
  }
  {
    Reader so{ini.count("solver") ? ini.at("solver") : empty, "solver"};
    cfg.solver.modes = cfg.modes;
    cfg.solver.roots_per_mode = so.integer("roots_per_mode", 40);
    cfg.solver.grid_step = so.num("grid_step", 0.05);
    cfg.solver.root_tol = so.num("root_tol", 1e-12);
    cfg.solver.quad_panels = so.integer("quad_panels", 2000);
    cfg.solver.galerkin_dim = so.integer("galerkin_dim", 2 * cfg.solver.roots_per_mode);
    cfg.solver.rk4_steps = so.integer("rk4_steps", 4096);
    cfg.solver.chain_tol = so.num("chain_tol", 1e-2);
    cfg.solver.include_small_roots = so.flag("include_small_roots", false);
    cfg.solver.double_multiplicity = so.flag("double_multiplicity", false);
    if (so.has("ladder")) {
      cfg.solver.ladder.clear();
      std::istringstream in(so.s.at("ladder"));
      std::string tok;
      while (std::getline(in, tok, ','))
        cfg.solver.ladder.push_back(to_int("solver.ladder", trim(tok)));
    } else {
      cfg.solver.ladder.clear();
      for (int j : {10, 20, 40})
        if (j <= cfg.solver.roots_per_mode) cfg.solver.ladder.push_back(j);
      if (cfg.solver.ladder.empty() ||
          cfg.solver.ladder.back() != cfg.solver.roots_per_mode)
        cfg.solver.ladder.push_back(cfg.solver.roots_per_mode);
    }
  }

  if (!(cfg.alpha > 0.0 && cfg.alpha < 0.5)) throw ConfigError("alpha out of range (0, 1/2)");
  cfg.law.validate();
  cfg.solver.validate();
  return cfg;
}

RunConfig parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

}  // namespace qt
