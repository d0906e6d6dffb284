#pragma once

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bimux/grid.hpp"
#include "bimux/multiplex.hpp"
#include "bimux/params.hpp"

// JSON run configuration. Omitted fields fall back to the library defaults
// (Rb-87 vapor at 300 K, +-400 Gamma3 window). Validation collects every
// problem instead of stopping at the first.

namespace bimux {

struct RunConfig {
  PhysicalParams physical;
  GeometrySpec geometry{GeometryFamily::AntiCorrelation, 0.0, 1, std::nullopt};
  FrequencyGrid grid;
  std::string evaluator = "closed";  // closed | quad
  int quad_nodes = 800;

  // Full resolved snapshot, defaults included; embedded in every output.
  nlohmann::json resolved() const {
    nlohmann::json j;
    j["physical_params"] = {{"lambda_s", physical.lambda_s},
                            {"lambda_i", physical.lambda_i},
                            {"gamma3", physical.gamma3},
                            {"gamma3n_ratio", physical.gamma3n_ratio},
                            {"tau_gamma", physical.tau_gamma},
                            {"temperature", physical.temperature},
                            {"atomic_mass", physical.atomic_mass}};
    j["geometry"] = {{"family", family_name(geometry.family)},
                     {"dq", geometry.dq},
                     {"n_mp", geometry.n_mp}};
    if (geometry.explicit_shifts) {
      auto arr = nlohmann::json::array();
      for (const auto& [s, i] : geometry.explicit_shifts->shifts)
        arr.push_back({s, i});
      j["geometry"]["explicit_shifts"] = arr;
    }
    j["grid"] = {{"half_width", grid.half_width},
                 {"n_points", grid.n_points}};
    j["evaluator"] = evaluator;
    j["quad_nodes"] = quad_nodes;
    j["units"] = "frequencies and shifts in Gamma3; times in 1/Gamma3";
    return j;
  }
};

struct ConfigError {
  std::string path;
  std::string reason;
};

struct ConfigParse {
  std::optional<RunConfig> config;
  std::vector<ConfigError> errors;
  bool ok() const { return errors.empty(); }
};

namespace detail {

inline void read_positive(const nlohmann::json& j, const char* block,
                          const char* key, double& out,
                          std::vector<ConfigError>& errors,
                          bool require_positive = true) {
  if (!j.contains(key)) return;
  const std::string path = std::string(block) + "." + key;
  if (!j[key].is_number()) {
    errors.push_back({path, "must be a number"});
    return;
  }
  const double v = j[key].get<double>();
  if (require_positive && !(v > 0.0)) {
    errors.push_back({path, "must be strictly positive"});
    return;
  }
  out = v;
}

}  // namespace detail

inline ConfigParse parse_config(const nlohmann::json& j) {
  ConfigParse out;
  RunConfig cfg;
  auto& errors = out.errors;

  if (j.contains("physical_params")) {
    const auto& p = j["physical_params"];
    if (!p.is_object()) {
      errors.push_back({"physical_params", "must be an object"});
    } else {
      detail::read_positive(p, "physical_params", "lambda_s",
                            cfg.physical.lambda_s, errors);
      detail::read_positive(p, "physical_params", "lambda_i",
                            cfg.physical.lambda_i, errors);
      detail::read_positive(p, "physical_params", "gamma3",
                            cfg.physical.gamma3, errors);
      detail::read_positive(p, "physical_params", "gamma3n_ratio",
                            cfg.physical.gamma3n_ratio, errors);
      detail::read_positive(p, "physical_params", "tau_gamma",
                            cfg.physical.tau_gamma, errors);
      detail::read_positive(p, "physical_params", "temperature",
                            cfg.physical.temperature, errors);
      detail::read_positive(p, "physical_params", "atomic_mass",
                            cfg.physical.atomic_mass, errors);
      if (cfg.physical.gamma3n_ratio < 1.0)
        errors.push_back({"physical_params.gamma3n_ratio",
                          "must be >= 1 (collective decay is never "
                          "sub-natural)"});
    }
  }

  if (j.contains("geometry")) {
    const auto& g = j["geometry"];
    if (!g.is_object()) {
      errors.push_back({"geometry", "must be an object"});
    } else {
      if (g.contains("family")) {
        if (!g["family"].is_string()) {
          errors.push_back({"geometry.family", "must be a string"});
        } else if (auto fam = family_from_name(g["family"].get<std::string>());
                   fam) {
          cfg.geometry.family = *fam;
        } else {
          errors.push_back({"geometry.family",
                            "unknown family '" +
                                g["family"].get<std::string>() + "'"});
        }
      }
      if (g.contains("dq")) {
        if (!g["dq"].is_number() || g["dq"].get<double>() < 0.0)
          errors.push_back({"geometry.dq", "must be a number >= 0"});
        else
          cfg.geometry.dq = g["dq"].get<double>();
      }
      if (g.contains("n_mp")) {
        if (!g["n_mp"].is_number_integer() || g["n_mp"].get<int>() < 1)
          errors.push_back({"geometry.n_mp", "must be an integer >= 1"});
        else
          cfg.geometry.n_mp = g["n_mp"].get<int>();
      }
      if (g.contains("explicit_shifts")) {
        ShiftSet ex;
        bool bad = false;
        if (!g["explicit_shifts"].is_array()) {
          bad = true;
        } else {
          for (const auto& pair : g["explicit_shifts"]) {
            if (!pair.is_array() || pair.size() != 2 ||
                !pair[0].is_number() || !pair[1].is_number()) {
              bad = true;
              break;
            }
            ex.shifts.emplace_back(pair[0].get<double>(),
                                   pair[1].get<double>());
          }
        }
        if (bad || ex.shifts.empty())
          errors.push_back({"geometry.explicit_shifts",
                            "must be a nonempty array of [ds, di] pairs"});
        else
          cfg.geometry.explicit_shifts = std::move(ex);
      }
      // family/count consistency
      const int n = cfg.geometry.n_mp;
      if (g.contains("n_mp")) {
        if ((cfg.geometry.family == GeometryFamily::PlusFour ||
             cfg.geometry.family == GeometryFamily::CrossFour) &&
            n != 4)
          errors.push_back({"geometry.n_mp",
                            "plus_four/cross_four place exactly 4 cells"});
        if (cfg.geometry.family == GeometryFamily::Octagon && n != 8)
          errors.push_back(
              {"geometry.n_mp", "octagon places exactly 8 cells"});
      }
      if (cfg.geometry.family == GeometryFamily::Explicit &&
          !cfg.geometry.explicit_shifts)
        errors.push_back({"geometry.explicit_shifts",
                          "required for the explicit family"});
    }
  }

  if (j.contains("grid")) {
    const auto& g = j["grid"];
    if (!g.is_object()) {
      errors.push_back({"grid", "must be an object"});
    } else {
      detail::read_positive(g, "grid", "half_width", cfg.grid.half_width,
                            errors);
      if (g.contains("n_points")) {
        if (!g["n_points"].is_number_integer() ||
            g["n_points"].get<int>() < 64)
          errors.push_back({"grid.n_points", "must be an integer >= 64"});
        else
          cfg.grid.n_points = g["n_points"].get<int>();
      }
    }
  }

  if (j.contains("evaluator")) {
    const std::string e =
        j["evaluator"].is_string() ? j["evaluator"].get<std::string>() : "";
    if (e != "closed" && e != "quad")
      errors.push_back({"evaluator", "must be \"closed\" or \"quad\""});
    else
      cfg.evaluator = e;
  }
  if (j.contains("quad_nodes")) {
    if (!j["quad_nodes"].is_number_integer() ||
        j["quad_nodes"].get<int>() < 16)
      errors.push_back({"quad_nodes", "must be an integer >= 16"});
    else
      cfg.quad_nodes = j["quad_nodes"].get<int>();
  }

  if (errors.empty()) out.config = std::move(cfg);
  return out;
}

inline ConfigParse validate_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) return {std::nullopt, {{path, "cannot open file"}}};
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    return {std::nullopt, {{path, std::string("JSON parse error: ") +
                                      e.what()}}};
  }
  return parse_config(j);
}

}  // namespace bimux
