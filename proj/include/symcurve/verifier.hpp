#pragma once

// Named, exact property suites over the presentation, the module version,
// the invariant oracle and the correspondence calculus.

#include "symcurve/graded_module.hpp"
#include "symcurve/invariant.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace symcurve {

struct DimensionTable {
    std::string label;
    int genus = 0;
    int power = 0;
    std::vector<std::int64_t> dims;
};

enum class CheckStatus { Pass, Fail, Partial };

std::string to_string(CheckStatus s);

struct CheckReport {
    std::string name;
    std::vector<std::pair<std::string, std::int64_t>> params;
    CheckStatus status = CheckStatus::Pass;
    /// Failing assertions: degree, parameters and the offending element.
    std::vector<std::string> witnesses;
    std::vector<DimensionTable> tables;
    /// Informational lines, e.g. the sign convention a comparison used.
    std::vector<std::string> notes;
    std::size_t assertions = 0;

    [[nodiscard]] bool pass() const { return status == CheckStatus::Pass; }
    /// Records one assertion; a false one is a failure with this witness.
    void expect(bool ok, const std::string& witness);
    /// Marks the report as cut short by a resource budget.
    void mark_partial(const std::string& why);
};

struct VerifyOptions {
    std::uint64_t oracle_budget = default_oracle_budget();
    unsigned seed = 20240601;
};

/// Exactness dims, ideal kind per branch, nesting I_{n+1} in I_n,
/// zeta^i = pushforward(n-i,n,1) and zeta^{n+1} = 0, for n <= n_max.
CheckReport check_theorem_A(int genus, int n_max);
/// dim A^d = dim A^{2n-d} and full-rank pairing matrices.
CheckReport check_poincare_duality(int genus, int n_max);
/// sum (-1)^d dim A^d against (-1)^n C(2g-2, n) (n+1 when g = 0).
CheckReport check_euler_characteristic(int genus, int n_max);
/// Pullback/pushforward identities, projection formula on seeded random
/// classes, pushforward injectivity and pullback surjectivity per degree.
CheckReport check_maps(int genus, int n_max, const VerifyOptions& opts = {});
/// Projective-bundle decomposition for n >= 2g-1, kernel principality at
/// n = 2g-1, colon monotonicity and functoriality of pullback/pushforward.
CheckReport check_bundle_structure(int genus, int n_max);
/// u_i == (-1)^i pi_{(g-i)*}(1).
CheckReport check_mattuck(int genus);

/// Quotients M / N_n with N_n = I_n * M, for n <= n_max, over the degree
/// range of M.
CheckReport check_theorem_B(int n_max, const GradedModule& module, const std::string& label);
/// Ring, shifted ring and ring (+) ring against the presentation dims.
CheckReport check_module_laws(int genus, int n_max);

/// Presentation == invariant oracle == Macdonald, and the comparison map.
CheckReport check_oracles(int genus, int n_max, const VerifyOptions& opts = {});
/// Category laws, action identities and the Collino membership.
CheckReport check_correspondences(int genus, int n_max, const VerifyOptions& opts = {});

/// Suites: presentation, modules, oracles, correspondences, all.
std::vector<CheckReport> run_suite(const std::string& suite, int genus, int n_max, const VerifyOptions& opts = {});
bool is_known_suite(const std::string& suite);

std::string reports_to_json(const std::vector<CheckReport>& reports, const std::string& suite, int genus, int n_max);
std::string reports_to_text(const std::vector<CheckReport>& reports);

}  // namespace symcurve
