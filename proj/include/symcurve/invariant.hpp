#pragma once

// Independent ground truth for H*(Sym^n C): the S_n-invariants of the n-fold
// graded tensor power of H*(C), with Koszul signs, plus Macdonald's
// generating function and the comparison map from the presentation.

#include "symcurve/symmpow.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace symcurve {

class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Default word budget 3e5, overridable through SYMCURVE_ORACLE_BUDGET.
std::uint64_t default_oracle_budget();

/// H*(C): letter 0 = unit, 1..g = a_i, g+1..2g = b_i (degree 1),
/// 2g+1 = point. a_i b_i = point = -b_i a_i; all other positive-degree
/// products vanish.
struct CurveCohomology {
    int genus = 0;

    [[nodiscard]] int letter_count() const { return 2 * genus + 2; }
    [[nodiscard]] int point() const { return 2 * genus + 1; }
    [[nodiscard]] int degree(int letter) const;
    [[nodiscard]] bool odd(int letter) const { return degree(letter) == 1; }
    [[nodiscard]] std::string name(int letter) const;
    /// (sign, letter) with a * b = sign * letter, or sign 0 when the product
    /// vanishes.
    [[nodiscard]] std::pair<int, int> product(int a, int b) const;
};

using Word = std::vector<int>;
/// Sparse vector of the full tensor power, keyed by word.
using TensorVector = std::map<Word, Rational>;

/// Sorting sign of a word: (-1)^(odd-odd inversions), or 0 when an odd letter
/// repeats (the orbit sum then vanishes).
int sorting_sign(const CurveCohomology& h, const Word& w);
int word_degree(const CurveCohomology& h, const Word& w);

/// sigma . w, where letter i moves to slot perm[i], with its Koszul sign.
std::pair<int, Word> permute_word(const CurveCohomology& h, const std::vector<int>& perm, const Word& w);

/// Sum over all sigma in S_n of sigma . w.
TensorVector symmetrize(const CurveCohomology& h, const Word& w);
TensorVector symmetrize(const CurveCohomology& h, const TensorVector& v);
/// Slotwise product in the graded tensor power.
TensorVector tensor_product(const CurveCohomology& h, const TensorVector& x, const TensorVector& y);

/// Element of the invariant subalgebra in orbit-sum coordinates: the
/// coefficient of the canonical (sorted) word of each orbit.
using InvariantElement = std::map<Word, Rational>;

class InvariantModel {
public:
    /// Enumerates all (2g+2)^n words; throws ResourceError above `budget`.
    static InvariantModel build(int genus, int power, std::uint64_t budget = default_oracle_budget());

    [[nodiscard]] int genus() const { return h_.genus; }
    [[nodiscard]] int power() const { return power_; }
    [[nodiscard]] const CurveCohomology& curve() const { return h_; }
    [[nodiscard]] std::vector<std::size_t> betti() const;
    /// Canonical words with nonvanishing orbit sum, in degree d.
    [[nodiscard]] const std::vector<Word>& orbit_basis(int d) const;

    [[nodiscard]] InvariantElement unit() const;
    /// Coefficient of an arbitrary word in the invariant tensor.
    [[nodiscard]] Rational word_coefficient(const InvariantElement& v, const Word& w) const;
    [[nodiscard]] TensorVector expand(const InvariantElement& v) const;
    /// Reads orbit coordinates off an invariant tensor.
    [[nodiscard]] InvariantElement from_tensor(const TensorVector& t) const;
    [[nodiscard]] bool is_invariant(const TensorVector& t) const;

    /// (sum_j letter in slot j) * v.
    [[nodiscard]] InvariantElement one_slot_times(int letter, const InvariantElement& v) const;
    [[nodiscard]] InvariantElement product(const InvariantElement& x, const InvariantElement& y) const;

    [[nodiscard]] Vector coordinates(const InvariantElement& v, int d) const;
    [[nodiscard]] InvariantElement from_coordinates(int d, const Vector& coords) const;

    /// Transfer of x (tensor) 1^{n-m} for x in the invariants of a smaller
    /// model: sum over S_n of sigma . (x (x) 1 ... 1).
    [[nodiscard]] InvariantElement transfer_from(const InvariantModel& smaller, const InvariantElement& x) const;

private:
    CurveCohomology h_;
    int power_ = 0;
    std::vector<std::vector<Word>> basis_;  // per degree 0..2n
};

/// invariant_betti(g, n): dimensions per degree of the invariant subspace.
std::vector<std::size_t> invariant_betti(int genus, int power, std::uint64_t budget = default_oracle_budget());

/// Coefficient of t^n in (1+xt)^{2g} / ((1-t)(1-x^2 t)), as x-coefficients.
std::vector<std::int64_t> macdonald_poincare(int genus, int power);

struct ComparisonReport {
    int genus = 0;
    int power = 0;
    std::string convention;
    std::vector<int> generator_signs;  // sign applied to the image of e_1..e_2g
    bool kills_ideal = false;
    bool bijective = false;
    bool multiplicative = false;
    std::vector<std::size_t> presentation_dims;
    std::vector<std::size_t> invariant_dims;
    std::vector<std::string> witnesses;
    /// Per degree d: A_n^d (normal-form coordinates) -> invariant coordinates.
    std::vector<Matrix> transport;

    [[nodiscard]] bool pass() const { return kills_ideal && bijective && multiplicative; }
};

/// Image of a ring element under e_i -> one-slot a_i / b_i, z -> one-slot
/// point, with the given generator signs.
InvariantElement comparison_image(const InvariantModel& model, const std::vector<int>& signs, const Element& r);

/// Builds the algebra map R -> invariants, checks it kills I_n, induces a
/// degreewise bijection A_n -> invariants and respects products on a sample
/// of basis pairs. Searches generator sign conventions when the direct one
/// fails.
ComparisonReport comparison_map(const SymPowAlgebra& algebra, const InvariantModel& model);

}  // namespace symcurve
