#include "nehari/config.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace nehari {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

double parse_number(const std::string& key, const std::string& value) {
  if (value == "inf") return std::numeric_limits<double>::infinity();
  try {
    std::size_t used = 0;
    const double x = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return x;
  } catch (const std::exception&) {
    throw ConfigError(key + ": not a number: '" + value + "'");
  }
}

long parse_integer(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const long x = std::stol(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return x;
  } catch (const std::exception&) {
    throw ConfigError(key + ": not an integer: '" + value + "'");
  }
}

std::vector<std::pair<double, double>> parse_annuli(const std::string& key,
                                                    const std::string& value) {
  std::vector<std::pair<double, double>> annuli;
  std::istringstream items(value);
  std::string item;
  while (std::getline(items, item, ',')) {
    item = trim(item);
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      throw ConfigError(key + ": expected r:R, got '" + item + "'");
    }
    annuli.emplace_back(parse_number(key, trim(item.substr(0, colon))),
                        parse_number(key, trim(item.substr(colon + 1))));
  }
  return annuli;
}

std::string format_number(double x) {
  if (std::isinf(x)) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  // The nonlinearity is assembled at the end so the coefficient keys may
  // appear in any order.
  std::string f_kind;
  double a2 = 1e-2, a1 = 2.5e-3, a0 = 1.0, exponent = 2.0;
  bool f_touched = false;
  bool cone_set = false;

  // Collect pairs first so problem.operator can be applied before the keys
  // that override parts of the builtin problem, regardless of file order.
  std::vector<std::pair<std::string, std::string>> pairs;
  std::istringstream lines(text);
  std::string line;
  int lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(lineno) +
                        ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (value.empty()) throw ConfigError(key + ": empty value");
    if (key == "problem.operator") {
      pairs.insert(pairs.begin(), {key, value});
    } else {
      pairs.emplace_back(key, value);
    }
  }

  for (const auto& [key, value] : pairs) {
    if (key == "problem.operator") {
      if (value == "kernel" || value == "hammerstein-kernel") {
        cfg.problem = builtin_kernel_problem(cfg.problem.grid_n);
        if (!cone_set) cfg.cone = ConeSpec{ConeKind::Kernel};
      } else if (value == "plaplacian") {
        cfg.problem = builtin_plaplacian_problem(cfg.problem.grid_n);
        if (!cone_set) cfg.cone = ConeSpec{ConeKind::Plaplacian, cfg.problem.p};
      } else {
        throw ConfigError(key + ": unknown operator '" + value + "'");
      }
    } else if (key == "problem.p") {
      cfg.problem.p = parse_number(key, value);
      if (!(cfg.problem.p > 1.0)) throw ConfigError(key + ": requires p > 1");
      if (cfg.cone.kind == ConeKind::Plaplacian) cfg.cone.p = cfg.problem.p;
    } else if (key == "problem.f.kind") {
      if (value != "quadratic" && value != "power_rational") {
        throw ConfigError(key + ": unknown kind '" + value + "'");
      }
      f_kind = value;
      f_touched = true;
    } else if (key == "problem.f.a2") {
      a2 = parse_number(key, value);
      f_touched = true;
    } else if (key == "problem.f.a1") {
      a1 = parse_number(key, value);
      f_touched = true;
    } else if (key == "problem.f.a0") {
      a0 = parse_number(key, value);
      f_touched = true;
    } else if (key == "problem.f.exponent") {
      exponent = parse_number(key, value);
      f_touched = true;
    } else if (key == "problem.annulus.r") {
      cfg.problem.r = parse_number(key, value);
      if (cfg.problem.r < 0.0) throw ConfigError(key + ": requires r >= 0");
    } else if (key == "problem.annulus.R") {
      cfg.problem.R = parse_number(key, value);
    } else if (key == "problem.beta") {
      cfg.problem.beta = parse_number(key, value);
      if (!(cfg.problem.beta > 0.0 && cfg.problem.beta < 0.5)) {
        throw ConfigError(key + ": requires beta in (0, 1/2)");
      }
    } else if (key == "problem.mode") {
      if (value == "maximize") {
        cfg.problem.mode = RadialMode::Maximize;
      } else if (value == "minimize") {
        cfg.problem.mode = RadialMode::Minimize;
      } else {
        throw ConfigError(key + ": unknown mode '" + value + "'");
      }
    } else if (key == "problem.n") {
      const long n = parse_integer(key, value);
      if (n < 3 || n % 2 == 0) {
        throw ConfigError(key + ": requires an odd node count >= 3");
      }
      cfg.problem.grid_n = static_cast<int>(n);
    } else if (key == "problem.tol.residual") {
      cfg.problem.tol.residual = parse_number(key, value);
    } else if (key == "problem.tol.t_bracket") {
      cfg.problem.tol.t_bracket = parse_number(key, value);
    } else if (key == "problem.tol.census") {
      cfg.problem.tol.census = parse_number(key, value);
    } else if (key == "problem.tol.symmetry") {
      cfg.problem.tol.symmetry = parse_number(key, value);
    } else if (key == "problem.tol.direction") {
      cfg.problem.tol.direction = parse_number(key, value);
    } else if (key == "problem.tol.h2_threshold") {
      cfg.problem.tol.h2_threshold = parse_number(key, value);
    } else if (key == "cone.kind") {
      if (value == "kernel") {
        cfg.cone = ConeSpec{ConeKind::Kernel};
      } else if (value == "plaplacian") {
        cfg.cone = ConeSpec{ConeKind::Plaplacian, cfg.problem.p};
      } else {
        throw ConfigError(key + ": unknown cone '" + value + "'");
      }
      cone_set = true;
    } else if (key == "run.seed") {
      cfg.seed = static_cast<std::uint64_t>(parse_integer(key, value));
    } else if (key == "run.directions") {
      cfg.directions = static_cast<int>(parse_integer(key, value));
      if (cfg.directions < 1) throw ConfigError(key + ": requires >= 1");
    } else if (key == "run.samples") {
      cfg.samples = static_cast<int>(parse_integer(key, value));
      if (cfg.samples < 1) throw ConfigError(key + ": requires >= 1");
    } else if (key == "run.workers") {
      cfg.workers = static_cast<int>(parse_integer(key, value));
      if (cfg.workers < 1) throw ConfigError(key + ": requires >= 1");
    } else if (key == "run.omega") {
      cfg.omega = parse_number(key, value);
      if (!(cfg.omega > 0.0 && cfg.omega <= 1.0)) {
        throw ConfigError(key + ": requires omega in (0, 1]");
      }
    } else if (key == "run.max_iters") {
      cfg.max_iters = static_cast<int>(parse_integer(key, value));
      if (cfg.max_iters < 1) throw ConfigError(key + ": requires >= 1");
    } else if (key == "scan.annuli") {
      cfg.annuli = parse_annuli(key, value);
    } else {
      throw ConfigError("unknown key '" + key + "'");
    }
  }

  if (f_touched) {
    if (f_kind.empty()) {
      f_kind = cfg.problem.op == OperatorKind::HammersteinKernel
                   ? "quadratic"
                   : "power_rational";
    }
    cfg.problem.f = f_kind == "quadratic"
                        ? Nonlinearity::quadratic(a2, a1, a0)
                        : Nonlinearity::power_rational(exponent);
  }

  if (cfg.cone.kind == ConeKind::Plaplacian) cfg.cone.p = cfg.problem.p;
  if (!(cfg.problem.r < cfg.problem.R)) {
    throw ConfigError("problem.annulus: requires r < R");
  }
  for (const auto& [r, R] : cfg.annuli) {
    if (!(r >= 0.0 && r < R)) {
      throw ConfigError("scan.annuli: each pair requires 0 <= r < R");
    }
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string dump_config(const RunConfig& cfg) {
  std::ostringstream out;
  out << "problem.operator = "
      << (cfg.problem.op == OperatorKind::HammersteinKernel ? "kernel"
                                                            : "plaplacian")
      << "\n";
  out << "problem.p = " << format_number(cfg.problem.p) << "\n";
  if (cfg.problem.f.kind() == Nonlinearity::Kind::Quadratic) {
    out << "problem.f.kind = quadratic\n";
    out << "problem.f.a2 = " << format_number(cfg.problem.f.a2()) << "\n";
    out << "problem.f.a1 = " << format_number(cfg.problem.f.a1()) << "\n";
    out << "problem.f.a0 = " << format_number(cfg.problem.f.a0()) << "\n";
  } else if (cfg.problem.f.kind() == Nonlinearity::Kind::PowerRational) {
    out << "problem.f.kind = power_rational\n";
    out << "problem.f.exponent = " << format_number(cfg.problem.f.exponent())
        << "\n";
  }
  out << "problem.annulus.r = " << format_number(cfg.problem.r) << "\n";
  out << "problem.annulus.R = " << format_number(cfg.problem.R) << "\n";
  out << "problem.beta = " << format_number(cfg.problem.beta) << "\n";
  out << "problem.mode = "
      << (cfg.problem.mode == RadialMode::Minimize ? "minimize" : "maximize")
      << "\n";
  out << "problem.n = " << cfg.problem.grid_n << "\n";
  out << "problem.tol.residual = " << format_number(cfg.problem.tol.residual)
      << "\n";
  out << "problem.tol.t_bracket = " << format_number(cfg.problem.tol.t_bracket)
      << "\n";
  out << "problem.tol.census = " << format_number(cfg.problem.tol.census)
      << "\n";
  out << "problem.tol.symmetry = " << format_number(cfg.problem.tol.symmetry)
      << "\n";
  out << "problem.tol.direction = " << format_number(cfg.problem.tol.direction)
      << "\n";
  out << "problem.tol.h2_threshold = "
      << format_number(cfg.problem.tol.h2_threshold) << "\n";
  out << "cone.kind = "
      << (cfg.cone.kind == ConeKind::Kernel ? "kernel" : "plaplacian") << "\n";
  out << "run.seed = " << cfg.seed << "\n";
  out << "run.directions = " << cfg.directions << "\n";
  out << "run.samples = " << cfg.samples << "\n";
  out << "run.workers = " << cfg.workers << "\n";
  out << "run.omega = " << format_number(cfg.omega) << "\n";
  out << "run.max_iters = " << cfg.max_iters << "\n";
  if (!cfg.annuli.empty()) {
    out << "scan.annuli = ";
    for (std::size_t i = 0; i < cfg.annuli.size(); ++i) {
      if (i) out << ",";
      out << format_number(cfg.annuli[i].first) << ":"
          << format_number(cfg.annuli[i].second);
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace nehari
