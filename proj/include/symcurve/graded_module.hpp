#pragma once

// Finite-range graded modules over Lambda(e_1..e_2g)[z], given by degreewise
// dimensions and action matrices, and the submodules N = I * M cut out by
// the ideals of ideal.hpp.

#include "symcurve/ideal.hpp"

#include <map>
#include <string>
#include <vector>

namespace symcurve {

class ModuleError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Degrees min_degree .. min_degree + dims.size() - 1. Generator index
/// 1..2g is e_i, 2g+1 is z. An action matrix keyed by source degree d has
/// rows = dim(d + deg) and cols = dim(d); absent entries are zero maps, and
/// maps leaving the degree range are truncated away.
class GradedModule {
public:
    GradedModule(int genus, int min_degree, std::vector<std::size_t> dims,
                 std::map<int, std::map<int, Matrix>> actions);

    [[nodiscard]] int genus() const { return genus_; }
    [[nodiscard]] int min_degree() const { return min_degree_; }
    [[nodiscard]] int max_degree() const { return min_degree_ + static_cast<int>(dims_.size()) - 1; }
    [[nodiscard]] std::size_t dim(int d) const;
    [[nodiscard]] bool in_range(int d) const { return d >= min_degree() && d <= max_degree(); }
    [[nodiscard]] const std::map<int, std::map<int, Matrix>>& actions() const { return actions_; }

    /// Action of a single generator from degree d (zero matrix when absent).
    [[nodiscard]] Matrix generator_action(int generator, int d) const;
    /// Action of a homogeneous ring element from degree d to d + deg(a).
    [[nodiscard]] Matrix element_action(const Element& a, int d) const;

    static int z_index(int genus) { return 2 * genus + 1; }

private:
    void validate() const;

    int genus_;
    int min_degree_;
    std::vector<std::size_t> dims_;
    std::map<int, std::map<int, Matrix>> actions_;
};

/// Lambda[z] acting on itself, degrees 0..max_degree.
GradedModule ring_module(int genus, int max_degree);
/// M with every degree raised by `shift`.
GradedModule shifted(const GradedModule& m, int shift);
GradedModule direct_sum(const GradedModule& a, const GradedModule& b);

/// Degree-d component of I * M: the span of a * m over a in the ideal and
/// m in M. The principal case uses the single generator directly.
Subspace submodule_degree_component(const GradedModule& m, const IdealSpec& spec, int d);

/// Module-theoretic colon {m in M_d : z^k m in generator * M}. Needs degree
/// d + 2k inside the module range; throws std::out_of_range otherwise.
Subspace module_colon_component(const GradedModule& m, const IdealSpec& spec, int d);

/// JSON ingestion, schema documented in docs/module_schema.md.
GradedModule module_from_json(const std::string& text);
std::string module_to_json(const GradedModule& m);

}  // namespace symcurve
