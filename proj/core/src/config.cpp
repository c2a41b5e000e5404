// Copyright 2026 netcap authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "netcap/config.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "netcap/errors.hpp"

namespace netcap {

std::string to_string(ExperimentMode mode) {
  switch (mode) {
    case ExperimentMode::kBounds: return "bounds";
    case ExperimentMode::kSimulate: return "simulate";
    case ExperimentMode::kMiSweep: return "mi-sweep";
    case ExperimentMode::kVerify: return "verify";
    case ExperimentMode::kDistCheck: return "dist-check";
  }
  return "unknown";
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

double parse_double(int line, const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ConfigError(line, key + ": expected a real number, got '" + value + "'");
  }
}

std::uint64_t parse_u64(int line, const std::string& key, const std::string& value) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ConfigError(line, key + ": expected a nonnegative integer, got '" + value + "'");
  }
  return v;
}

std::vector<double> parse_double_list(int line, const std::string& key,
                                      const std::string& value) {
  std::vector<double> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const std::string token = trim(item);
    if (token.empty()) {
      throw ConfigError(line, key + ": empty list entry");
    }
    out.push_back(parse_double(line, key, token));
  }
  if (out.empty()) throw ConfigError(line, key + ": expected a comma-separated list");
  return out;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string format_list(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_double(values[i]);
  }
  return out;
}

using Handler = std::function<void(int line, const std::string& value, ExperimentConfig&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"mode",
       [](int line, const std::string& v, ExperimentConfig& c) {
         if (v == "bounds") c.mode = ExperimentMode::kBounds;
         else if (v == "simulate") c.mode = ExperimentMode::kSimulate;
         else if (v == "mi-sweep") c.mode = ExperimentMode::kMiSweep;
         else if (v == "verify") c.mode = ExperimentMode::kVerify;
         else if (v == "dist-check") c.mode = ExperimentMode::kDistCheck;
         else throw ConfigError(line, "mode: expected one of bounds|simulate|mi-sweep|verify|dist-check, got '" + v + "'");
       }},
      {"network.alpha_model",
       [](int line, const std::string& v, ExperimentConfig& c) {
         if (v == "exponential") c.alpha_model = AlphaModel::kExponential;
         else if (v == "polynomial") c.alpha_model = AlphaModel::kPolynomial;
         else if (v == "explicit") c.alpha_model = AlphaModel::kExplicit;
         else throw ConfigError(line, "network.alpha_model: expected exponential|polynomial|explicit, got '" + v + "'");
       }},
      {"network.rho",
       [](int line, const std::string& v, ExperimentConfig& c) {
         c.rho = parse_double(line, "network.rho", v);
         if (!(c.rho > 0.0 && c.rho < 1.0)) {
           throw ConfigError(line, "network.rho: expected a real in (0,1), got '" + v + "'");
         }
       }},
      {"network.beta",
       [](int line, const std::string& v, ExperimentConfig& c) {
         c.beta = parse_double(line, "network.beta", v);
         if (!(c.beta > 0.0)) {
           throw ConfigError(line, "network.beta: expected a positive real, got '" + v + "'");
         }
       }},
      {"network.alphas",
       [](int line, const std::string& v, ExperimentConfig& c) {
         c.alphas = parse_double_list(line, "network.alphas", v);
       }},
      {"network.alpha0",
       [](int line, const std::string& v, ExperimentConfig& c) {
         c.alpha0 = parse_double(line, "network.alpha0", v);
         if (!(c.alpha0 > 0.0)) {
           throw ConfigError(line, "network.alpha0: expected a positive real, got '" + v + "'");
         }
       }},
      {"network.sigma2",
       [](int line, const std::string& v, ExperimentConfig& c) {
         c.sigma2 = parse_double(line, "network.sigma2", v);
         if (!(c.sigma2 > 0.0)) {
           throw ConfigError(line, "network.sigma2: expected a positive real, got '" + v + "'");
         }
       }},
      {"network.power",
       [](int line, const std::string& v, ExperimentConfig& c) {
         c.power = parse_double(line, "network.power", v);
         if (!(c.power >= 0.0)) {
           throw ConfigError(line, "network.power: expected a nonnegative real, got '" + v + "'");
         }
       }},
      {"network.truncation_eps",
       [](int line, const std::string& v, ExperimentConfig& c) {
         c.truncation_eps = parse_double(line, "network.truncation_eps", v);
         if (!(c.truncation_eps > 0.0)) {
           throw ConfigError(line, "network.truncation_eps: expected a positive real, got '" + v + "'");
         }
       }},
      {"network.truncation_count",
       [](int line, const std::string& v, ExperimentConfig& c) {
         c.truncation_count = parse_u64(line, "network.truncation_count", v);
       }},
      {"network.seed",
       [](int line, const std::string& v, ExperimentConfig& c) {
         c.seed = parse_u64(line, "network.seed", v);
       }},
      {"input.family",
       [](int line, const std::string& v, ExperimentConfig& c) {
         using F = InputDistribution::Family;
         if (v == "gaussian") c.family = F::kCircularGaussian;
         else if (v == "constant-modulus") c.family = F::kConstantModulus;
         else if (v == "constellation") c.family = F::kConstellation;
         else if (v == "on-off") c.family = F::kOnOff;
         else throw ConfigError(line, "input.family: expected gaussian|constant-modulus|constellation|on-off, got '" + v + "'");
       }},
      {"input.delta",
       [](int line, const std::string& v, ExperimentConfig& c) {
         c.delta = parse_double(line, "input.delta", v);
         if (!(c.delta > 0.0 && c.delta <= 1.0)) {
           throw ConfigError(line, "input.delta: expected a real in (0,1], got '" + v + "'");
         }
       }},
      {"input.delta_rule",
       [](int line, const std::string& v, ExperimentConfig& c) {
         using R = InputDistribution::DeltaRule;
         if (v == "fixed") c.delta_rule = R::kFixed;
         else if (v == "inv-one-plus-snr") c.delta_rule = R::kInverseOnePlusSnr;
         else throw ConfigError(line, "input.delta_rule: expected fixed|inv-one-plus-snr, got '" + v + "'");
       }},
      {"input.constellation",
       [](int line, const std::string& v, ExperimentConfig& c) {
         if (v != "qam16") {
           throw ConfigError(line, "input.constellation: only the qam16 preset is available, got '" + v + "'");
         }
         c.constellation = v;
       }},
      {"input.block_mode",
       [](int line, const std::string& v, ExperimentConfig& c) {
         using B = InputDistribution::BlockMode;
         if (v == "iid") c.block_mode = B::kIid;
         else if (v == "repeated") c.block_mode = B::kRepeated;
         else throw ConfigError(line, "input.block_mode: expected iid|repeated, got '" + v + "'");
       }},
      {"sweep.snr_db",
       [](int line, const std::string& v, ExperimentConfig& c) {
         c.sweep_snr_db = parse_double_list(line, "sweep.snr_db", v);
       }},
      {"estimator.n",
       [](int line, const std::string& v, ExperimentConfig& c) {
         c.n = static_cast<int>(parse_u64(line, "estimator.n", v));
         if (c.n < 1) throw ConfigError(line, "estimator.n: expected >= 1");
       }},
      {"estimator.N",
       [](int line, const std::string& v, ExperimentConfig& c) {
         c.outer_samples = parse_u64(line, "estimator.N", v);
         if (c.outer_samples < 2) throw ConfigError(line, "estimator.N: expected >= 2");
       }},
      {"estimator.M",
       [](int line, const std::string& v, ExperimentConfig& c) {
         c.mixture_samples = parse_u64(line, "estimator.M", v);
         if (c.mixture_samples < 1) throw ConfigError(line, "estimator.M: expected >= 1");
       }},
      {"estimator.ci_cap",
       [](int line, const std::string& v, ExperimentConfig& c) {
         c.ci_cap = parse_double(line, "estimator.ci_cap", v);
         if (!(c.ci_cap > 0.0)) {
           throw ConfigError(line, "estimator.ci_cap: expected a positive real, got '" + v + "'");
         }
       }},
      {"estimator.max_doublings",
       [](int line, const std::string& v, ExperimentConfig& c) {
         c.max_doublings = static_cast<int>(parse_u64(line, "estimator.max_doublings", v));
       }},
      {"verify.lemma_trials",
       [](int line, const std::string& v, ExperimentConfig& c) {
         c.lemma_trials = parse_u64(line, "verify.lemma_trials", v);
         if (c.lemma_trials < 1) throw ConfigError(line, "verify.lemma_trials: expected >= 1");
       }},
      {"check.samples",
       [](int line, const std::string& v, ExperimentConfig& c) {
         c.check_samples = parse_u64(line, "check.samples", v);
         if (c.check_samples < 10) throw ConfigError(line, "check.samples: expected >= 10");
       }},
      {"output.csv",
       [](int, const std::string& v, ExperimentConfig& c) { c.out_csv = v; }},
  };
  return table;
}

}  // namespace

ExperimentConfig parse_config(const std::string& text) {
  ExperimentConfig config;
  std::stringstream ss(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(ss, raw)) {
    ++line_no;
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(line_no, "expected 'key = value', got '" + line + "'");
    }
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    if (key.empty()) throw ConfigError(line_no, "missing key before '='");
    if (value.empty()) throw ConfigError(line_no, key + ": missing value");
    const auto it = handlers().find(key);
    if (it == handlers().end()) {
      throw ConfigError(line_no, "unknown key '" + key + "'");
    }
    it->second(line_no, value, config);
  }
  return config;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(0, "cannot open config file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::string serialize_config(const ExperimentConfig& c) {
  std::string out;
  const auto kv = [&out](const std::string& key, const std::string& value) {
    out += key;
    out += " = ";
    out += value;
    out += "\n";
  };
  kv("mode", to_string(c.mode));
  kv("network.alpha_model", to_string(c.alpha_model));
  kv("network.rho", format_double(c.rho));
  kv("network.beta", format_double(c.beta));
  if (!c.alphas.empty()) kv("network.alphas", format_list(c.alphas));
  kv("network.alpha0", format_double(c.alpha0));
  kv("network.sigma2", format_double(c.sigma2));
  kv("network.power", format_double(c.power));
  kv("network.truncation_eps", format_double(c.truncation_eps));
  if (c.truncation_count) kv("network.truncation_count", std::to_string(*c.truncation_count));
  kv("network.seed", std::to_string(c.seed));
  switch (c.family) {
    case InputDistribution::Family::kCircularGaussian: kv("input.family", "gaussian"); break;
    case InputDistribution::Family::kConstantModulus: kv("input.family", "constant-modulus"); break;
    case InputDistribution::Family::kConstellation: kv("input.family", "constellation"); break;
    case InputDistribution::Family::kOnOff: kv("input.family", "on-off"); break;
  }
  kv("input.delta", format_double(c.delta));
  kv("input.delta_rule",
     c.delta_rule == InputDistribution::DeltaRule::kFixed ? "fixed" : "inv-one-plus-snr");
  kv("input.constellation", c.constellation);
  kv("input.block_mode",
     c.block_mode == InputDistribution::BlockMode::kIid ? "iid" : "repeated");
  if (!c.sweep_snr_db.empty()) kv("sweep.snr_db", format_list(c.sweep_snr_db));
  kv("estimator.n", std::to_string(c.n));
  kv("estimator.N", std::to_string(c.outer_samples));
  kv("estimator.M", std::to_string(c.mixture_samples));
  kv("estimator.ci_cap", format_double(c.ci_cap));
  kv("estimator.max_doublings", std::to_string(c.max_doublings));
  kv("verify.lemma_trials", std::to_string(c.lemma_trials));
  kv("check.samples", std::to_string(c.check_samples));
  if (!c.out_csv.empty()) kv("output.csv", c.out_csv);
  return out;
}

AlphaSequence ExperimentConfig::alpha_sequence() const {
  switch (alpha_model) {
    case AlphaModel::kExponential:
      return AlphaSequence::exponential(rho, alpha0);
    case AlphaModel::kPolynomial:
      return AlphaSequence::polynomial(beta, alpha0);
    case AlphaModel::kExplicit:
      if (alphas.empty()) {
        throw ConfigError(0, "network.alphas is required for the explicit alpha model");
      }
      return AlphaSequence::explicit_values(alphas, alpha0);
  }
  throw ConfigError(0, "invalid alpha model");
}

NetworkConfig ExperimentConfig::network() const {
  const Truncation trunc = truncation_count
                               ? Truncation::count(*truncation_count)
                               : Truncation::tail_eps(truncation_eps);
  return NetworkConfig(alpha_sequence(), sigma2, power, trunc, seed);
}

InputDistribution ExperimentConfig::input() const {
  InputDistribution dist = [&]() {
    switch (family) {
      case InputDistribution::Family::kCircularGaussian:
        return InputDistribution::circular_gaussian(power);
      case InputDistribution::Family::kConstantModulus:
        return InputDistribution::constant_modulus(power);
      case InputDistribution::Family::kConstellation:
        return InputDistribution::qam16(power);
      case InputDistribution::Family::kOnOff: {
        InputDistribution d = InputDistribution::on_off(delta, power);
        if (delta_rule == InputDistribution::DeltaRule::kInverseOnePlusSnr) {
          d = InputDistribution::on_off_snr_adaptive(power);
        }
        return d;
      }
    }
    throw ConfigError(0, "invalid input family");
  }();
  return dist.with_block_mode(block_mode);
}

}  // namespace netcap
