#include "gevreych/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "gevreych/rng.hpp"

namespace gevreych {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) parts.push_back(trim(item));
  return parts;
}

Real parse_real(const std::string& v, const std::string& key) {
  try {
    std::size_t pos = 0;
    const Real x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("config: bad numeric value for " + key + ": '" + v + "'");
  }
}

long long parse_int(const std::string& v, const std::string& key) {
  try {
    std::size_t pos = 0;
    const long long x = std::stoll(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("config: bad integer value for " + key + ": '" + v + "'");
  }
}

std::vector<Real> parse_real_list(const std::string& v, const std::string& key) {
  std::vector<Real> out;
  for (const auto& tok : split(v, ',')) {
    if (!tok.empty()) out.push_back(parse_real(tok, key));
  }
  return out;
}

}  // namespace

void RunConfig::validate() const {
  if (resolution_k < 2 || resolution_k > 4096) {
    throw ConfigError("config: resolution_k must be in [2, 4096]");
  }
  if (!(period > 0.0)) throw ConfigError("config: period must be > 0");
  if (sigma_list.empty()) throw ConfigError("config: sigma_list must not be empty");
  for (Real sg : sigma_list) {
    if (!(sg >= 1.0)) throw ConfigError("config: every sigma must be >= 1");
  }
  if (!(s > 0.5)) throw ConfigError("config: s must be > 1/2");
  if (delta_list.empty()) throw ConfigError("config: delta_list must not be empty");
  for (Real d : delta_list) {
    if (!(d > 0.0)) throw ConfigError("config: every delta must be > 0");
  }
  if (samples < 1) throw ConfigError("config: samples must be >= 1");
  if (!(dt_model > 0.0)) throw ConfigError("config: dt_model must be > 0");
  if (t_end_model < 0.0) throw ConfigError("config: t_end_model must be >= 0");
  if (picard_iterations < 1) throw ConfigError("config: picard_iterations must be >= 1");
  if (contraction_trials < 1) throw ConfigError("config: contraction_trials must be >= 1");
  if (k_sign != 1 && k_sign != -1) throw ConfigError("config: k_sign must be +-1");
  if (fit_k_min < 1) throw ConfigError("config: fit_k_min must be >= 1");
  if (fit_k_max != 0 && fit_k_max <= fit_k_min) {
    throw ConfigError("config: fit_k_max must be 0 (auto) or > fit_k_min");
  }
  if (quadrature_points < 4) throw ConfigError("config: quadrature_points must be >= 4");
  if (!(ladder_delta_min > 0.0) || !(ladder_delta_max < 1.0) ||
      !(ladder_delta_min < ladder_delta_max)) {
    throw ConfigError("config: ladder delta range must satisfy 0 < min < max < 1");
  }
  if (ladder_delta_count < 2 || ladder_t_count < 2) {
    throw ConfigError("config: ladder grids need at least 2 points");
  }
  if (!(ladder_t_fraction_max > 0.0) || !(ladder_t_fraction_max < 1.0)) {
    throw ConfigError("config: ladder_t_fraction_max must be in (0,1)");
  }
  if (fault_injection != "none" && fault_injection != "p2_symbol") {
    throw ConfigError("config: fault_injection must be none or p2_symbol");
  }
  system_from_name(system);  // throws on unknown tag
}

LadderSpec RunConfig::ladder(Real a, Real sigma) const {
  LadderSpec spec;
  spec.a = a;
  spec.sigma = sigma;
  const int nd = ladder_delta_count;
  spec.delta_grid.resize(static_cast<std::size_t>(nd));
  for (int j = 0; j < nd; ++j) {
    const Real c = std::cos(M_PI * (2.0 * j + 1.0) / (2.0 * nd));
    spec.delta_grid[static_cast<std::size_t>(nd - 1 - j)] =
        0.5 * (ladder_delta_min + ladder_delta_max) +
        0.5 * (ladder_delta_max - ladder_delta_min) * c;
  }
  const int nt = ladder_t_count;
  spec.t_fraction_grid.resize(static_cast<std::size_t>(nt));
  for (int j = 0; j < nt; ++j) {
    spec.t_fraction_grid[static_cast<std::size_t>(j)] =
        ladder_t_fraction_max * static_cast<Real>(j) / (nt - 1);
  }
  spec.validate();
  return spec;
}

SpectralField make_field_from_spec(const std::string& spec, Index n_modes, Real period,
                                   Real sigma, Real s, std::uint64_t seed) {
  const auto parts = split(spec, ':');
  if (parts.empty()) throw ConfigError("initial data: empty spec");
  const std::string& kind = parts[0];
  auto arg = [&](std::size_t i, Real fallback) {
    return parts.size() > i ? parse_real(parts[i], "initial data") : fallback;
  };
  if (kind == "zero") return SpectralField::zero(n_modes, period);
  if (kind == "cos") {
    return cosine_field(arg(1, 1.0), static_cast<Index>(arg(2, 1.0)), n_modes, period);
  }
  if (kind == "sin") {
    return sine_field(arg(1, 1.0), static_cast<Index>(arg(2, 1.0)), n_modes, period);
  }
  if (kind == "decay") {
    return decay_field(arg(1, 0.1), arg(2, 1.5), arg(3, 1.0), n_modes, period);
  }
  if (kind == "peakon") return peakon_field(arg(1, 1.0), arg(2, 0.0), n_modes, period);
  if (kind == "random") {
    const GevreyParams p{sigma, arg(1, 1.0), s};
    return random_gevrey_field(p, arg(2, 0.5), n_modes, seed, period);
  }
  if (kind == "modes") {
    // modes:k:re:im[;k:re:im...]
    std::vector<std::pair<Index, Complex>> modes;
    const std::string rest = spec.substr(spec.find(':') + 1);
    for (const auto& tok : split(rest, ';')) {
      const auto f = split(tok, ':');
      if (f.size() != 3) throw ConfigError("initial data: modes entries need k:re:im");
      modes.emplace_back(static_cast<Index>(parse_int(f[0], "modes")),
                         Complex(parse_real(f[1], "modes"), parse_real(f[2], "modes")));
    }
    return synthesize(modes, n_modes, period);
  }
  throw ConfigError("initial data: unknown generator '" + kind + "'");
}

namespace {

SystemState build_state(const RunConfig& cfg, const std::string& u_spec,
                        const std::string& second_spec, const std::string& v_spec,
                        const std::string& w_spec, const char* label) {
  const SystemTag tag = system_from_name(cfg.system);
  const Real sigma = cfg.sigma_list.front();
  std::vector<SpectralField> comps;
  auto mk = [&](const std::string& spec, const char* comp) {
    return make_field_from_spec(spec, cfg.resolution_k, cfg.period, sigma, cfg.s,
                                split_seed(cfg.seed, std::string(label) + "_" + comp));
  };
  switch (tag) {
    case SystemTag::CH:
      comps = {mk(u_spec, "u")};
      break;
    case SystemTag::TwoCH:
      comps = {mk(u_spec, "u"), mk(second_spec, "rho")};
      break;
    case SystemTag::M2CH:
      comps = {mk(u_spec, "u"), mk(second_spec, "gamma")};
      break;
    case SystemTag::ThreeCH:
      comps = {mk(u_spec, "u"), mk(v_spec, "v"), mk(w_spec, "w")};
      break;
  }
  return make_state(tag, std::move(comps), cfg.s);
}

}  // namespace

SystemState RunConfig::initial_state() const {
  const SystemTag tag = system_from_name(system);
  const std::string& second = tag == SystemTag::M2CH ? initial_gamma : initial_rho;
  return build_state(*this, initial_u, second, initial_v, initial_w, "init");
}

SystemState RunConfig::perturbation_direction() const {
  const SystemTag tag = system_from_name(system);
  const std::string& second = tag == SystemTag::M2CH ? perturb_gamma : perturb_rho;
  return build_state(*this, perturb_u, second, perturb_v, perturb_w, "perturb");
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);

  RunConfig cfg;
  std::map<std::string, std::function<void(const std::string&)>> setters;
  auto real_setter = [](Real& field) {
    return [&field](const std::string& v) { field = parse_real(v, "value"); };
  };
  auto int_setter = [](auto& field) {
    return [&field](const std::string& v) {
      field = static_cast<std::decay_t<decltype(field)>>(parse_int(v, "value"));
    };
  };
  auto string_setter = [](std::string& field) {
    return [&field](const std::string& v) { field = v; };
  };
  auto list_setter = [](std::vector<Real>& field) {
    return [&field](const std::string& v) { field = parse_real_list(v, "list"); };
  };

  setters["resolution_k"] = int_setter(cfg.resolution_k);
  setters["period"] = real_setter(cfg.period);
  setters["sigma_list"] = list_setter(cfg.sigma_list);
  setters["s"] = real_setter(cfg.s);
  setters["delta_list"] = list_setter(cfg.delta_list);
  setters["samples"] = int_setter(cfg.samples);
  setters["seed"] = int_setter(cfg.seed);
  setters["system"] = string_setter(cfg.system);
  setters["k_sign"] = int_setter(cfg.k_sign);
  setters["initial_u"] = string_setter(cfg.initial_u);
  setters["initial_rho"] = string_setter(cfg.initial_rho);
  setters["initial_gamma"] = string_setter(cfg.initial_gamma);
  setters["initial_v"] = string_setter(cfg.initial_v);
  setters["initial_w"] = string_setter(cfg.initial_w);
  setters["perturb_u"] = string_setter(cfg.perturb_u);
  setters["perturb_rho"] = string_setter(cfg.perturb_rho);
  setters["perturb_gamma"] = string_setter(cfg.perturb_gamma);
  setters["perturb_v"] = string_setter(cfg.perturb_v);
  setters["perturb_w"] = string_setter(cfg.perturb_w);
  setters["dt_model"] = real_setter(cfg.dt_model);
  setters["t_end_model"] = real_setter(cfg.t_end_model);
  setters["picard_iterations"] = int_setter(cfg.picard_iterations);
  setters["contraction_trials"] = int_setter(cfg.contraction_trials);
  setters["epsilons"] = list_setter(cfg.epsilons);
  setters["fit_k_min"] = int_setter(cfg.fit_k_min);
  setters["fit_k_max"] = int_setter(cfg.fit_k_max);
  setters["quadrature_points"] = int_setter(cfg.quadrature_points);
  setters["constants_file"] = string_setter(cfg.constants_file);
  setters["out_dir"] = string_setter(cfg.out_dir);
  setters["fault_injection"] = string_setter(cfg.fault_injection);
  setters["ladder_delta_min"] = real_setter(cfg.ladder_delta_min);
  setters["ladder_delta_max"] = real_setter(cfg.ladder_delta_max);
  setters["ladder_delta_count"] = int_setter(cfg.ladder_delta_count);
  setters["ladder_t_fraction_max"] = real_setter(cfg.ladder_t_fraction_max);
  setters["ladder_t_count"] = int_setter(cfg.ladder_t_count);

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string stripped = trim(line.substr(0, line.find('#')));
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    const auto it = setters.find(key);
    if (it == setters.end()) {
      throw ConfigError("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
    it->second(value);
  }
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return cfg;
}

}  // namespace gevreych
