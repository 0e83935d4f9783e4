#include "eprgames/io.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace eprgames::io {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) throw ParseError("malformed JSON document");
  return doc;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

double finite_number(const json& j, const std::string& what) {
  if (!j.is_number()) throw ParseError(what + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ParseError(what + " must be finite");
  return v;
}

const char* kOutcomeKeys[8] = {"000", "001", "010", "011", "100", "101", "110", "111"};

// Angle given either directly or through its cosine; at most one of the two
// keys may be present.
double read_angle(const json& doc, const std::string& name, double fallback) {
  const std::string cos_name = "cos_" + name;
  const bool has_plain = doc.contains(name);
  const bool has_cos = doc.contains(cos_name);
  if (has_plain && has_cos)
    throw ParseError("give either '" + name + "' or '" + cos_name + "', not both");
  if (has_plain) return finite_number(doc[name], name);
  if (has_cos) {
    const double c = finite_number(doc[cos_name], cos_name);
    if (c < -1.0 - 1e-12 || c > 1.0 + 1e-12)
      throw ParseError(cos_name + " must lie in [-1, 1]");
    return std::acos(std::min(1.0, std::max(-1.0, c)));
  }
  return fallback;
}

std::string profile_label(const StrategyProfile& s, NEResult::Kind kind) {
  const auto near_int = [](double v) { return std::abs(v - std::round(v)) < 1e-9; };
  std::string out = "(";
  if (kind == NEResult::kPureCorner && near_int(s.x) && near_int(s.y) && near_int(s.z)) {
    out += std::to_string(int(std::lround(s.x))) + "," + std::to_string(int(std::lround(s.y))) +
           "," + std::to_string(int(std::lround(s.z)));
  } else {
    out += format_value(s.x) + "," + format_value(s.y) + "," + format_value(s.z);
  }
  return out + ")";
}

}  // namespace

GameMatrix parse_game(const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("game file must hold a JSON object");
  if (doc.contains("players")) {
    if (!doc["players"].is_number_integer() || doc["players"].get<int>() != 3)
      throw ParseError("'players' must be 3");
  }
  if (!doc.contains("payoffs") || !doc["payoffs"].is_object())
    throw ParseError("game file needs a 'payoffs' object");
  const json& payoffs = doc["payoffs"];
  if (payoffs.size() != 8) throw ParseError("'payoffs' must hold exactly 8 outcome keys");

  GameMatrix g;
  for (int oi = 0; oi < 8; ++oi) {
    const char* key = kOutcomeKeys[oi];
    if (!payoffs.contains(key))
      throw ParseError(std::string("missing payoff entry '") + key + "'");
    const json& row = payoffs[key];
    if (!row.is_array() || row.size() != 3)
      throw ParseError(std::string("payoff entry '") + key + "' must be an array of 3 numbers");
    for (int p = 0; p < 3; ++p)
      g.payoff[oi][p] = finite_number(row[p], std::string("payoff '") + key + "'");
  }
  return g;
}

GameMatrix load_game(const std::filesystem::path& path) { return parse_game(read_file(path)); }

StateSpec parse_state(const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("state file must hold a JSON object");
  if (!doc.contains("family") || !doc["family"].is_string())
    throw ParseError("state file needs a 'family' string");
  const std::string family = doc["family"].get<std::string>();

  StateSpec spec;
  const double gamma = read_angle(doc, "gamma", 0.0);
  const double phi = read_angle(doc, "phi", 0.0);
  const double delta = read_angle(doc, "delta", 0.0);
  if (family == "ghz") {
    spec.family = GhzFamily{gamma};
  } else if (family == "w") {
    spec.family = WFamily{};
  } else if (family == "wbar") {
    spec.family = InvertedWFamily{};
  } else if (family == "symmetric") {
    spec.family = SymmetricFamily{gamma, phi, delta};
  } else {
    throw ParseError("unknown state family '" + family + "'");
  }

  if (doc.contains("rotors")) {
    const json& rotors = doc["rotors"];
    if (!rotors.is_object()) throw ParseError("'rotors' must be an object");
    const char* names[3] = {"A", "B", "C"};
    for (int p = 0; p < 3; ++p) {
      if (!rotors.contains(names[p])) continue;
      const json& r = rotors[names[p]];
      if (!r.is_array() || r.size() != 3)
        throw ParseError(std::string("rotor '") + names[p] + "' must be an array of 3 angles");
      spec.rotors[p].theta1 = finite_number(r[0], "rotor angle");
      spec.rotors[p].theta2 = finite_number(r[1], "rotor angle");
      spec.rotors[p].theta3 = finite_number(r[2], "rotor angle");
    }
  }
  return spec;
}

StateSpec load_state(const std::filesystem::path& path) { return parse_state(read_file(path)); }

SweepAxis parse_axis(const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos) throw ParseError("axis spec must look like name=lo:hi:step");
  SweepAxis axis;
  axis.name = spec.substr(0, eq);
  if (axis.name != "cos_gamma" && axis.name != "gamma")
    throw ParseError("axis name must be cos_gamma or gamma");
  const std::string rest = spec.substr(eq + 1);
  double lo = 0, hi = 0, step = 0;
  char trailing = 0;
  if (std::sscanf(rest.c_str(), "%lf:%lf:%lf%c", &lo, &hi, &step, &trailing) != 3)
    throw ParseError("axis range must be lo:hi:step");
  if (!(step > 0)) throw ParseError("axis step must be positive");
  if (hi < lo) throw ParseError("axis range is empty");
  if (axis.name == "cos_gamma" && (lo < -1 - 1e-12 || hi > 1 + 1e-12))
    throw ParseError("cos_gamma range must lie in [-1, 1]");
  axis.lo = lo;
  axis.hi = hi;
  axis.step = step;
  return axis;
}

std::string format_value(double v, int digits) {
  if (v == 0.0) v = 0.0;  // collapse negative zero
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string coefficients_to_json(const PayoffCoefficients& pc) {
  std::ostringstream os;
  const char* names[3] = {"a", "b", "c"};
  os << "{\n";
  for (int p = 0; p < 3; ++p) {
    os << "  \"" << names[p] << "\": {";
    for (int ci = 0; ci < 8; ++ci)
      os << (ci ? ", " : "") << "\"" << kOutcomeKeys[ci] << "\": "
         << format_value(pc.player(p)[ci]);
    os << "}" << (p < 2 ? "," : "") << "\n";
  }
  os << "}\n";
  return os.str();
}

std::string equilibria_to_json(const std::vector<NEResult>& list, bool every_profile_ne) {
  std::ostringstream os;
  os << "{\n  \"equilibria\": [";
  for (size_t i = 0; i < list.size(); ++i) {
    const NEResult& ne = list[i];
    os << (i ? ",\n    " : "\n    ") << "{\"profile\": [" << format_value(ne.profile.x) << ", "
       << format_value(ne.profile.y) << ", " << format_value(ne.profile.z) << "], \"kind\": \""
       << (ne.kind == NEResult::kPureCorner ? "pure" : "mixed") << "\", \"payoffs\": ["
       << format_value(ne.payoffs[0]) << ", " << format_value(ne.payoffs[1]) << ", "
       << format_value(ne.payoffs[2]) << "]}";
  }
  os << "\n  ],\n  \"every_profile_ne\": " << (every_profile_ne ? "true" : "false") << "\n}\n";
  return os.str();
}

std::string phase_diagram_to_csv(const PhaseDiagram& diagram) {
  std::ostringstream os;
  os << diagram.axis.name;
  if (diagram.has_phi_delta) os << ",phi,delta";
  os << ",ne_set,pi_A,pi_B,pi_C\n";
  const double phi = std::acos(std::min(1.0, std::max(-1.0, diagram.fixed.cos_phi)));
  const double delta = std::acos(std::min(1.0, std::max(-1.0, diagram.fixed.cos_delta)));
  for (const auto& pt : diagram.points) {
    const auto prefix = [&](std::ostringstream& row) {
      row << format_value(pt.axis_value);
      if (diagram.has_phi_delta) row << "," << format_value(phi) << "," << format_value(delta);
    };
    for (const auto& ne : pt.equilibria) {
      std::ostringstream row;
      prefix(row);
      row << ",\"" << profile_label(ne.profile, ne.kind) << "\"," << format_value(ne.payoffs[0])
          << "," << format_value(ne.payoffs[1]) << "," << format_value(ne.payoffs[2]);
      os << row.str() << "\n";
    }
    if (pt.every_profile_ne) {
      std::ostringstream row;
      prefix(row);
      row << ",\"(any)\",,,";
      os << row.str() << "\n";
    }
  }
  return os.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path.string());
  out << content;
}

}  // namespace eprgames::io
