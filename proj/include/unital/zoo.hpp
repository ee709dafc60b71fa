#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace unital::zoo {

struct CheckResult {
  std::string name;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  bool pass = false;
  std::vector<std::string> witnesses;
  std::uint64_t swept = 0; // elements, pairs or cases examined
  double elapsed_ms = 0;
};

/// {name, params, verdict, witnesses, swept, elapsed_ms}
nlohmann::ordered_json to_json(const CheckResult &r);

/// Root group of a point equals the commutators with its stabilizer, for
/// PSL(2,q) on the projective line, every point; q in {4,5,7,8,9,11,13}.
CheckResult check_commutator_rootgroups(int q);

/// Heisenberg(p) extended by the sharply transitive subgroup of SL(2,p),
/// p in {3,5,7,11}.
CheckResult check_central_extension(int p);

/// Trace equality against conjugacy for elements of SU(3, r^2|r) with
/// orders dividing r+1, r in {2,3}.
CheckResult check_su3_trace_conjugacy(int r);

/// jf_decompose on every non-central A with A^(r+1) = 1 plus the central
/// negative check, r in {2,4}.
CheckResult check_su3_root_decomposition(int r);

/// The two unipotent matrices with involutory product, r odd.
CheckResult check_su3_involution_product(int r);

CheckResult check_suzuki();
CheckResult check_ree3();
CheckResult check_counting_identities();

struct CheckSpec {
  std::string name;
  std::vector<int> params; // empty for parameterless checks
  std::function<CheckResult(int)> run;
};

const std::vector<CheckSpec> &registry();

/// Runs `name` at `param`, or at every default parameter when absent.
/// Throws DomainError for unknown names or parameters.
std::vector<CheckResult> run_check(const std::string &name,
                                   std::optional<int> param = std::nullopt);

} // namespace unital::zoo
