// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Every check is exact; runtime limits are wall-clock.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qcirc/bergman.hpp"
#include "qcirc/conjugation.hpp"
#include "qcirc/error.hpp"
#include "qcirc/resonant.hpp"
#include "qcirc/serialize.hpp"
#include "qcirc/text.hpp"
#include "qcirc/weights.hpp"
#include "support/cli_cases.hpp"
#include "support/oracles.hpp"

using namespace qcirc;
using qcirc::testing::box_enumeration;
using qcirc::testing::canonical_weight_tuples;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects the first failure message; later checks still run.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && outcome_.pass) {
      outcome_.pass = false;
      outcome_.detail = what;
    }
  }
  Outcome finish(const std::string& summary) {
    if (outcome_.pass) outcome_.detail = summary + " (" + std::to_string(checks_) + " checks)";
    return outcome_;
  }

 private:
  Outcome outcome_;
  std::size_t checks_ = 0;
};

WeightVector W(const std::vector<long>& raw) {
  return WeightVector::create(std::vector<Integer>(raw.begin(), raw.end()));
}

std::string show(const std::vector<long>& raw) {
  std::ostringstream os;
  os << W(raw);
  return os.str();
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Fixed test set: n <= 4, m_n <= 6.
const std::vector<std::vector<long>> kTestSet = {
    {1, 1}, {1, 2}, {1, 3}, {2, 3}, {1, 1, 1}, {1, 1, 2}, {1, 2, 2}, {1, 2, 3}, {1, 2, 4}, {1, 2, 2, 3}};

Outcome resonance_oracle() {
  Checker c;
  const auto t0 = Clock::now();
  const auto tuples = canonical_weight_tuples(4, 8);
  for (const auto& raw : tuples) {
    const auto m = W(raw);
    const auto profile = resonance_profile(m);
    for (std::size_t i = 1; i <= raw.size(); ++i) {
      const auto& set = profile.sets[i - 1];
      const std::set<MultiIndex> got(set.begin(), set.end());
      c.expect(got.size() == set.size() && got == box_enumeration(raw, raw[i - 1]),
               "E_" + std::to_string(i) + " differs from box oracle for " + show(raw));
      c.expect(profile.orders[i - 1] <= static_cast<std::uint64_t>(raw[i - 1]),
               "mu_i > m_i for " + show(raw));
    }
  }
  const double elapsed = seconds_since(t0);
  c.expect(elapsed < 10.0, "runtime " + std::to_string(elapsed) + " s >= 10 s");
  return c.finish(std::to_string(tuples.size()) + " weight vectors, " + std::to_string(elapsed) +
                  " s");
}

Outcome golden_resonance() {
  Checker c;
  const auto p12 = resonance_profile(W({1, 2}));
  c.expect(p12.order == 2, "mu(1,2) != 2");
  c.expect(p12.sets[1] == std::vector<MultiIndex>{{0, 1}, {2, 0}}, "E_2(1,2) mismatch");
  const auto p123 = resonance_profile(W({1, 2, 3}));
  c.expect(p123.order == 3, "mu(1,2,3) != 3");
  c.expect(p123.sets[2] == std::vector<MultiIndex>{{0, 0, 1}, {1, 1, 0}, {3, 0, 0}},
           "E_3(1,2,3) mismatch");
  c.expect(resonance_profile(W({2, 3})).order == 1, "mu(2,3) != 1");
  return c.finish("(1,2), (1,2,3), (2,3)");
}

Outcome inversion_round_trip() {
  Checker c;
  const auto t0 = Clock::now();
  const auto pool = default_pool();
  for (const auto& raw : kTestSet) {
    const auto m = W(raw);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const auto s = random_sigma(m, seed, pool);
      const auto t = invert_sigma(s);
      c.expect(testing::is_identity(compose(t.as_map(), s.as_map())),
               "tau o sigma != id for " + show(raw) + " seed " + std::to_string(seed));
      c.expect(invert_sigma(t) == s, "double inversion differs for " + show(raw));
    }
  }
  const double elapsed = seconds_since(t0);
  c.expect(elapsed < 30.0, "runtime " + std::to_string(elapsed) + " s >= 30 s");
  return c.finish("10 x 100 maps, " + std::to_string(elapsed) + " s");
}

Outcome theorem_forward() {
  Checker c;
  const auto pool = default_pool();
  std::size_t violations = 0;
  for (const auto& raw : kTestSet) {
    const auto m = W(raw);
    const auto part = block_partition(m);
    for (std::uint64_t t = 0; t < 200; ++t) {
      Engine e = make_engine(1001, t);
      const auto s = random_sigma(m, e(), pool);
      const auto l = random_block_diagonal(part, e, pool);
      const auto r = check_theorem_instance(m, s, l);
      bool ok = r.block_diagonal && r.degree <= r.bound_mu;
      for (bool b : r.component_resonant) ok = ok && b;
      if (!ok) ++violations;
      c.expect(ok, "violation for " + show(raw) + " trial " + std::to_string(t));
    }
  }
  return c.finish("10 x 200 pairs, " + std::to_string(violations) + " violations");
}

Outcome counterexample() {
  Checker c;
  const auto m = W({1, 2});
  const auto s = make_sigma(m, {{{2, MultiIndex{2, 0}}, Rational(1)}});
  const auto l = LinearMap::from_rows({{1, 1}, {0, 1}});
  const PolyMap f = conjugate(s, l);
  const Polynomial f1 = parse_polynomial("z1 + z2 + z1^2", 2);
  const PolyMap expected({f1, parse_polynomial("z2 + z1^2", 2) - f1 * f1});
  c.expect(f == expected, "conjugate differs from direct substitution");
  c.expect(f.total_degree() == 4, "degree != 4");
  c.expect(resonance_profile(m).order == 2, "mu != 2");
  c.expect(!is_block_diagonal(l, block_partition(m)), "shear classified block diagonal");
  return c.finish("degree " + std::to_string(f.total_degree()) + " > mu = 2");
}

Outcome conjugacy_solver() {
  Checker c;
  const auto t0 = Clock::now();
  const auto pool = default_pool();
  for (const auto& raw : kTestSet) {
    const auto m = W(raw);
    for (std::uint64_t t = 0; t < 50; ++t) {
      Engine e = make_engine(2002, t);
      const auto s = random_sigma(m, e(), pool);
      const auto l = random_invertible(m.size(), e, pool);
      const PolyMap f = conjugate(s, l);
      const auto sol = solve_conjugacy(f, m);
      c.expect(sol.residual_zero, "nonzero residual for " + show(raw));
      c.expect(conjugate(sol.sigma, sol.j) == f, "re-conjugation differs for " + show(raw));
    }
  }
  bool rejected = false;
  try {
    solve_conjugacy(parse_poly_map("z1\nz2 + z1^3\n", 2), W({1, 2}));
  } catch (const Error& e) {
    rejected = e.code() == ErrorCode::NoResonantConjugacy;
  }
  c.expect(rejected, "(z1, z2 + z1^3) not rejected with NoResonantConjugacy");
  return c.finish("10 x 50 maps + perturbed map, " + std::to_string(seconds_since(t0)) + " s");
}

Outcome bergman_duality() {
  Checker c;
  const auto pool = default_pool();
  const auto tuples = canonical_weight_tuples(4, 8);
  for (const auto& raw : tuples) {
    const auto m = W(raw);
    const std::size_t n = raw.size();
    for (std::size_t i = 1; i <= n; ++i) {
      const auto ei = resonance_set(m, i);
      const std::set<MultiIndex> e_set(ei.begin(), ei.end());
      for (std::size_t j = 1; j <= n; ++j) {
        const auto adm = admissible_exponents(m, i, j);
        const std::set<MultiIndex> adm_set(adm.begin(), adm.end());
        const auto ej = MultiIndex::unit(n, j - 1);
        // Forward: alpha admissible => alpha + e_j in E_i.
        for (const auto& alpha : adm_set) {
          c.expect(e_set.contains(alpha + ej), "admissible alpha outside E_i - e_j for " + show(raw));
        }
        // Backward: beta in E_i with beta_j >= 1 => beta - e_j admissible.
        for (const auto& beta : e_set) {
          if (beta[j - 1] == 0) continue;
          MultiIndex alpha = beta;
          alpha[j - 1] -= 1;
          c.expect(adm_set.contains(alpha), "missing admissible exponent for " + show(raw));
        }
        c.expect(adm_set == box_enumeration(raw, raw[i - 1] - raw[j - 1]),
                 "admissible set differs from box oracle for " + show(raw));
      }
    }
    const auto pattern = tensor_block_pattern(m);
    for (std::size_t p = 0; p < pattern.size(); ++p) {
      for (std::size_t q = p; q < pattern.size(); ++q) {
        c.expect(!pattern[p][q], "block pattern not strictly lower for " + show(raw));
      }
    }
    for (std::uint64_t seed = 0; seed < 2; ++seed) {
      c.expect(check_sigma_jacobian_structure(random_sigma(m, seed, pool)).ok,
               "Jacobian structure check failed for " + show(raw));
    }
  }
  return c.finish(std::to_string(tuples.size()) + " weight vectors");
}

Outcome estimator() {
  Checker c;
  const auto e12 = quasi_resonance_estimate(W({1, 2}), 32, 1);
  c.expect(e12.observed_max == 4 && e12.cap == 4, "(1,2): observed " +
                                                      std::to_string(e12.observed_max) + ", cap " +
                                                      std::to_string(e12.cap));
  const auto again = quasi_resonance_estimate(W({1, 2}), 32, 1);
  c.expect(again.observed_max == e12.observed_max, "not deterministic");
  c.expect(quasi_resonance_estimate(W({1, 1, 1}), 32, 1).observed_max == 1, "(1,1,1) != 1");
  c.expect(quasi_resonance_estimate(W({2, 3}), 32, 1).observed_max == 1, "(2,3) != 1");
  return c.finish("(1,2) -> 4 = cap, (1,1,1) -> 1, (2,3) -> 1");
}

Outcome cli_determinism() {
  Checker c;
  std::set<std::string> subcommands;
  std::set<std::string> errors;
  for (const auto& cs : testing::cli_cases()) {
    const auto first = testing::run_cli(cs.args);
    const auto second = testing::run_cli(cs.args);
    c.expect(first.exit_code == cs.exit_code, cs.name + ": exit " + std::to_string(first.exit_code));
    c.expect(first.out == second.out, cs.name + ": reruns differ");
    const auto golden = testing::read_file(testing::golden_path(cs.name));
    c.expect(golden.has_value() && *golden == first.out, cs.name + ": differs from golden file");
    std::string sub = cs.args.front();
    if (sub == "sigma") sub += " " + cs.args[1];
    if (cs.exit_code == 0) subcommands.insert(sub);
    if (cs.exit_code != 0) errors.insert(Json::parse(first.out).at("error").get<std::string>());
  }
  for (const char* sub : {"resonance", "partition", "sigma random", "sigma invert", "conjugate",
                          "violate", "quasi-order", "solve", "bergman"}) {
    c.expect(subcommands.contains(sub), std::string("no golden case for ") + sub);
  }
  for (int k = 0; k <= static_cast<int>(ErrorCode::ParseError); ++k) {
    const std::string name(error_name(static_cast<ErrorCode>(k)));
    c.expect(errors.contains(name), "error " + name + " not covered");
  }
  return c.finish(std::to_string(testing::cli_cases().size()) + " golden cases");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 resonance oracle equivalence", resonance_oracle},
      {"2 golden resonance fixtures", golden_resonance},
      {"3 inversion round trip", inversion_round_trip},
      {"4 theorem forward direction", theorem_forward},
      {"5 counterexample witness", counterexample},
      {"6 conjugacy solver round trip", conjugacy_solver},
      {"7 bergman pattern duality", bergman_duality},
      {"8 estimator sanity", estimator},
      {"9 cli determinism", cli_determinism},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << std::endl;
    if (!o.pass) ++failed;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
