// Command-line front end: coefficient extraction, equilibrium analysis,
// phase-diagram sweeps and engine-vs-oracle verification.
//
// Exit codes: 0 success, 1 verification failure, 2 input error,
// 3 precondition violation.

#include "eprgames/equilibrium.hpp"
#include "eprgames/io.hpp"
#include "eprgames/oracle.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>

namespace {

using namespace eprgames;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitPrecondition = 3;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    io::write_file(out_path, text);
}

int cmd_coeffs(const std::string& game_path, const std::string& out_path) {
  const GameMatrix g = io::load_game(game_path);
  emit(io::coefficients_to_json(coefficients(g)), out_path);
  return 0;
}

int cmd_ne(const std::string& game_path, const std::string& state_path,
           const std::string& out_path) {
  const GameMatrix g = io::load_game(game_path);
  const StateSpec spec = io::load_state(state_path);

  if (!is_symmetric(g)) {
    std::cerr << "error: equilibrium analysis with a shared symmetric state requires a "
                 "player-symmetric game\n";
    return kExitPrecondition;
  }
  // The closed forms assume the canonical embedding; the state's local
  // rotors must keep it valid.
  EmbeddingConfig emb = canonical_embedding();
  emb.rotors = spec.rotors;
  if (!validate_embedding(emb)) {
    std::cerr << "error: state rotors break the classical embedding\n";
    return kExitPrecondition;
  }

  std::vector<NEResult> list = pure_ne_enumerate(g, spec.family);
  const MixedNeResult mixed = mixed_ne_symmetric_family(g, family_angles(spec.family));
  for (const auto& ne : mixed.points) {
    bool duplicate = false;
    for (const auto& existing : list)
      if (std::abs(existing.profile.x - ne.profile.x) < 1e-9 &&
          std::abs(existing.profile.y - ne.profile.y) < 1e-9 &&
          std::abs(existing.profile.z - ne.profile.z) < 1e-9)
        duplicate = true;
    if (!duplicate) list.push_back(ne);
  }
  std::sort(list.begin(), list.end(), [](const NEResult& a, const NEResult& b) {
    if (a.profile.x != b.profile.x) return a.profile.x < b.profile.x;
    if (a.profile.y != b.profile.y) return a.profile.y < b.profile.y;
    return a.profile.z < b.profile.z;
  });
  emit(io::equilibria_to_json(list, mixed.every_profile_ne), out_path);
  return 0;
}

int cmd_sweep(const std::string& game_path, const std::string& family_name,
              const std::string& axis_spec, std::optional<double> phi,
              std::optional<double> cos_phi, std::optional<double> delta,
              std::optional<double> cos_delta, const std::string& out_path) {
  const GameMatrix g = io::load_game(game_path);
  const SweepAxis axis = io::parse_axis(axis_spec);

  const auto pick_angle = [](std::optional<double> plain, std::optional<double> cosine,
                             const char* name) -> double {
    if (plain && cosine)
      throw io::ParseError(std::string("give either --") + name + " or --cos-" + name +
                           ", not both");
    if (cosine) {
      if (*cosine < -1 - 1e-12 || *cosine > 1 + 1e-12)
        throw io::ParseError(std::string("--cos-") + name + " must lie in [-1, 1]");
      return std::acos(std::min(1.0, std::max(-1.0, *cosine)));
    }
    return plain.value_or(0.0);
  };

  StateFamily family;
  if (family_name == "ghz") {
    family = GhzFamily{};
  } else if (family_name == "w") {
    family = WFamily{};
  } else if (family_name == "wbar") {
    family = InvertedWFamily{};
  } else if (family_name == "symmetric") {
    family = SymmetricFamily{0.0, pick_angle(phi, cos_phi, "phi"),
                             pick_angle(delta, cos_delta, "delta")};
  } else {
    throw io::ParseError("unknown family '" + family_name + "'");
  }

  PhaseDiagram diagram;
  try {
    diagram = sweep(g, family, axis);
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }
  emit(io::phase_diagram_to_csv(diagram), out_path);
  return 0;
}

int cmd_verify(int trials, std::uint64_t seed, bool inject_error) {
  const oracle::VerifyReport report =
      oracle::run_verification(trials, seed, inject_error ? 1e-6 : 0.0);
  std::cout << "trials: " << report.trials << "\n"
            << "max probability deviation: "
            << io::format_value(report.max_probability_deviation) << "\n"
            << "max normalization error: " << io::format_value(report.max_normalization_error)
            << "\n"
            << (report.ok ? "OK" : "FAILED") << "\n";
  if (!report.ok) {
    std::cerr << "worst config: " << report.worst_config << "\n";
    return kExitVerifyFailed;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Three-player quantum games in an EPR-type measurement setting"};
  app.require_subcommand(1);

  std::string game_path, state_path, out_path, axis_spec, family_name = "ghz";
  std::optional<double> phi, cos_phi, delta, cos_delta;
  int trials = 1000;
  std::uint64_t seed = 42;
  bool inject_error = false;

  CLI::App* coeffs = app.add_subcommand("coeffs", "Signed payoff-coefficient sums of a game");
  coeffs->add_option("--game", game_path, "game JSON file")->required();
  coeffs->add_option("--out", out_path, "output file (stdout when absent)");

  CLI::App* ne = app.add_subcommand("ne", "Nash equilibria of a game on a shared state");
  ne->add_option("--game", game_path, "game JSON file")->required();
  ne->add_option("--state", state_path, "state JSON file")->required();
  ne->add_option("--out", out_path, "output file (stdout when absent)");

  CLI::App* sw = app.add_subcommand("sweep", "Phase-diagram sweep over the entanglement axis");
  sw->add_option("--game", game_path, "game JSON file")->required();
  sw->add_option("--family", family_name, "ghz | w | wbar | symmetric");
  sw->add_option("--axis", axis_spec, "axis spec, e.g. cos_gamma=-1:1:0.01")->required();
  sw->add_option("--phi", phi, "phi in radians (symmetric family)");
  sw->add_option("--cos-phi", cos_phi, "cos(phi) alternative");
  sw->add_option("--delta", delta, "delta in radians (symmetric family)");
  sw->add_option("--cos-delta", cos_delta, "cos(delta) alternative");
  sw->add_option("--out", out_path, "output CSV file (stdout when absent)");

  CLI::App* verify = app.add_subcommand("verify", "Engine-vs-oracle randomized comparison");
  verify->add_option("--trials", trials, "number of random configurations")
      ->check(CLI::Range(1, 100000000));
  verify->add_option("--seed", seed, "random seed");
  verify->add_flag("--inject-error", inject_error,
                   "perturb one distribution (negative control for testing)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    if (coeffs->parsed()) return cmd_coeffs(game_path, out_path);
    if (ne->parsed()) return cmd_ne(game_path, state_path, out_path);
    if (sw->parsed())
      return cmd_sweep(game_path, family_name, axis_spec, phi, cos_phi, delta, cos_delta,
                       out_path);
    if (verify->parsed()) return cmd_verify(trials, seed, inject_error);
  } catch (const io::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
  return 0;
}
