#include "qcirc/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <vector>

#include "qcirc/bergman.hpp"
#include "qcirc/conjugation.hpp"
#include "qcirc/error.hpp"
#include "qcirc/resonant.hpp"
#include "qcirc/serialize.hpp"
#include "qcirc/text.hpp"
#include "qcirc/weights.hpp"

namespace qcirc::cli {

namespace {

// Input problems that are not domain errors: unreadable files, bad flags.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  if (text.empty()) return parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, ',')) parts.push_back(part);
  if (text.back() == ',') parts.emplace_back();
  return parts;
}

WeightVector parse_weights(const std::string& text) {
  std::vector<Integer> raw;
  for (const auto& part : split_commas(text)) {
    Integer v;
    if (part.empty() || v.set_str(part, 10) != 0) {
      throw UsageError("--weights: '" + part + "' is not an integer");
    }
    raw.push_back(v);
  }
  return WeightVector::create(std::move(raw));
}

std::vector<Rational> parse_pool(const std::string& text) {
  std::vector<Rational> pool;
  for (const auto& part : split_commas(text)) pool.push_back(parse_rational(part));
  return pool;
}

std::string read_source(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) throw UsageError("cannot open '" + path + "'");
  buf << file.rdbuf();
  return buf.str();
}

Json read_json(const std::string& path, std::istream& in) {
  try {
    return Json::parse(read_source(path, in));
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, "'" + path + "': " + e.what());
  }
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

Json sets_json(const std::vector<MultiIndex>& set) {
  Json arr = Json::array();
  for (const auto& alpha : set) arr.push_back(to_json(alpha));
  return arr;
}

Json poly_map_json(const PolyMap& f) {
  Json arr = Json::array();
  for (const auto& p : f) arr.push_back(format_polynomial(p));
  return arr;
}

struct Options {
  std::string weights;
  std::optional<std::size_t> index;
  std::uint64_t seed = 0;
  std::uint64_t trials = 1;
  std::optional<std::string> pool;
  std::string map_file;
  std::string sigma_file;
  std::string linear_file;
};

void cmd_resonance(const Options& o, std::ostream& out) {
  const WeightVector m = parse_weights(o.weights);
  const ResonanceProfile profile = resonance_profile(m);
  Json sets = Json::object();
  if (o.index) {
    sets[std::to_string(*o.index)] = sets_json(resonance_set(m, *o.index));
  } else {
    for (std::size_t i = 1; i <= m.size(); ++i) {
      sets[std::to_string(i)] = sets_json(profile.sets[i - 1]);
    }
  }
  Json j = Json::object();
  j["weights"] = to_json(m);
  j["resonance_sets"] = std::move(sets);
  j["orders"] = profile.orders;
  j["mu"] = profile.order;
  emit(out, j);
}

void cmd_partition(const Options& o, std::ostream& out) {
  const WeightVector m = parse_weights(o.weights);
  const BlockPartition p = block_partition(m);
  Json j = Json::object();
  j["weights"] = to_json(m);
  j["boundaries"] = p.boundaries();
  j["blocks"] = p.block_count();
  emit(out, j);
}

void cmd_sigma_random(const Options& o, std::ostream& out) {
  const WeightVector m = parse_weights(o.weights);
  const auto pool = o.pool ? parse_pool(*o.pool) : default_pool();
  emit(out, to_json(random_sigma(m, o.seed, pool)));
}

void cmd_sigma_invert(const Options& o, std::ostream& out, std::istream& in) {
  emit(out, to_json(invert_sigma(sigma_from_json(read_json(o.map_file, in)))));
}

void cmd_conjugate(const Options& o, std::ostream& out, std::istream& in) {
  const WeightVector m = parse_weights(o.weights);
  const auto sigma = sigma_from_json(read_json(o.sigma_file, in));
  const auto l = linear_map_from_json(read_json(o.linear_file, in));
  const ConjugationReport r = check_theorem_instance(m, sigma, l);
  Json j = Json::object();
  j["degree"] = r.degree;
  j["mu"] = r.bound_mu;
  j["within_bound"] = r.within_bound;
  j["block_diagonal"] = r.block_diagonal;
  j["component_resonant"] = r.component_resonant;
  j["result"] = poly_map_json(r.result);
  emit(out, j);
}

void cmd_violate(const Options& o, std::ostream& out, std::istream& in) {
  const WeightVector m = parse_weights(o.weights);
  const auto l = linear_map_from_json(read_json(o.linear_file, in));
  const auto witness = find_violation(m, l, o.trials, o.seed);
  Json j = Json::object();
  j["found"] = witness.has_value();
  if (witness) {
    j["trial"] = witness->trial;
    j["degree"] = witness->degree;
    j["mu"] = resonance_profile(m).order;
    j["sigma"] = to_json(witness->sigma);
  }
  emit(out, j);
}

void cmd_quasi_order(const Options& o, std::ostream& out) {
  const WeightVector m = parse_weights(o.weights);
  const QuasiOrderEstimate e = quasi_resonance_estimate(m, o.trials, o.seed);
  Json j = Json::object();
  j["observed_max"] = e.observed_max;
  j["cap"] = e.cap;
  j["trials"] = e.trials;
  emit(out, j);
}

void cmd_solve(const Options& o, std::ostream& out, std::istream& in) {
  const WeightVector m = parse_weights(o.weights);
  const PolyMap f = parse_poly_map(read_source(o.map_file, in), m.size());
  const ConjugacySolution s = solve_conjugacy(f, m);
  Json j = Json::object();
  j["sigma"] = to_json(s.sigma);
  j["linear"] = to_json(s.j);
  j["residual_zero"] = s.residual_zero;
  j["free_parameters"] = s.free_parameters;
  emit(out, j);
}

void cmd_bergman(const Options& o, std::ostream& out, std::istream& in) {
  const WeightVector m = parse_weights(o.weights);
  Json admissible = Json::array();
  for (const auto& row : admissibility_pattern(m)) {
    Json jr = Json::array();
    for (const auto& set : row) jr.push_back(sets_json(set));
    admissible.push_back(std::move(jr));
  }
  Json j = Json::object();
  j["weights"] = to_json(m);
  j["boundaries"] = block_partition(m).boundaries();
  j["admissible"] = std::move(admissible);
  Json pattern = Json::array();
  for (const auto& row : tensor_block_pattern(m)) {
    Json jr = Json::array();
    for (bool b : row) jr.push_back(b);
    pattern.push_back(std::move(jr));
  }
  j["block_pattern"] = std::move(pattern);
  if (!o.sigma_file.empty()) {
    const auto sigma = sigma_from_json(read_json(o.sigma_file, in));
    if (!(sigma.weights() == m)) {
      throw Error(ErrorCode::WeightMismatch, "sigma was built for a different weight vector");
    }
    const JacobianCheck check = check_sigma_jacobian_structure(sigma);
    Json jac = Json::array();
    for (const auto& row : check.jacobian) {
      Json jr = Json::array();
      for (const auto& p : row) jr.push_back(format_polynomial(p));
      jac.push_back(std::move(jr));
    }
    j["jacobian"] = std::move(jac);
    j["jacobian_ok"] = check.ok;
    j["violations"] = check.violations;
  }
  emit(out, j);
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Resonance combinatorics and triangular resonant maps for quasi-circular weights",
               "qcirc"};
  app.require_subcommand(1);
  Options o;

  auto* resonance = app.add_subcommand("resonance", "Resonance sets E_i and orders mu_i, mu");
  resonance->add_option("--weights", o.weights, "Comma-separated weights")->required();
  resonance->add_option("--index", o.index, "Only E_i for this 1-based index");

  auto* partition = app.add_subcommand("partition", "Equal-weight block boundaries");
  partition->add_option("--weights", o.weights)->required();

  auto* sigma = app.add_subcommand("sigma", "Triangular resonant maps");
  sigma->require_subcommand(1);
  auto* sigma_random = sigma->add_subcommand("random", "Sample a triangular resonant map");
  sigma_random->add_option("--weights", o.weights)->required();
  sigma_random->add_option("--seed", o.seed)->required();
  sigma_random->add_option("--pool", o.pool, "Comma-separated coefficient pool");
  auto* sigma_invert = sigma->add_subcommand("invert", "Invert a triangular resonant map");
  sigma_invert->add_option("--map", o.map_file, "Sigma JSON file, - for stdin")->required();

  auto* conj = app.add_subcommand("conjugate", "Report on sigma^-1 o L o sigma");
  conj->add_option("--weights", o.weights)->required();
  conj->add_option("--sigma", o.sigma_file, "Sigma JSON file")->required();
  conj->add_option("--linear", o.linear_file, "Linear map JSON file")->required();

  auto* violate = app.add_subcommand("violate", "Search for a degree-bound violation");
  violate->add_option("--weights", o.weights)->required();
  violate->add_option("--linear", o.linear_file)->required();
  violate->add_option("--trials", o.trials)->required()->check(CLI::PositiveNumber);
  violate->add_option("--seed", o.seed)->required();

  auto* quasi = app.add_subcommand("quasi-order", "Estimate the quasi-resonance order");
  quasi->add_option("--weights", o.weights)->required();
  quasi->add_option("--trials", o.trials)->required()->check(CLI::PositiveNumber);
  quasi->add_option("--seed", o.seed)->required();

  auto* solve = app.add_subcommand("solve", "Recover (sigma, J) with sigma o f = J o sigma");
  solve->add_option("--weights", o.weights)->required();
  solve->add_option("--map", o.map_file, "Polynomial map file, - for stdin")->required();

  auto* bergman = app.add_subcommand("bergman", "Bergman tensor support and block patterns");
  bergman->add_option("--weights", o.weights)->required();
  bergman->add_option("--sigma", o.sigma_file, "Also check the Jacobian of this sigma");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "qcirc: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (resonance->parsed()) {
      cmd_resonance(o, out);
    } else if (partition->parsed()) {
      cmd_partition(o, out);
    } else if (sigma_random->parsed()) {
      cmd_sigma_random(o, out);
    } else if (sigma_invert->parsed()) {
      cmd_sigma_invert(o, out, in);
    } else if (conj->parsed()) {
      cmd_conjugate(o, out, in);
    } else if (violate->parsed()) {
      cmd_violate(o, out, in);
    } else if (quasi->parsed()) {
      cmd_quasi_order(o, out);
    } else if (solve->parsed()) {
      cmd_solve(o, out, in);
    } else if (bergman->parsed()) {
      cmd_bergman(o, out, in);
    }
  } catch (const UsageError& e) {
    err << "qcirc: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    Json j = Json::object();
    j["error"] = std::string(e.name());
    emit(out, j);
    err << "qcirc: " << e.what() << '\n';
    return e.code() == ErrorCode::ParseError ? kUsageError : kDomainError;
  }
  return kOk;
}

}  // namespace qcirc::cli
