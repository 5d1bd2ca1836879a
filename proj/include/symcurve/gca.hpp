#pragma once

// Exact arithmetic in the bigraded-commutative algebra
// Lambda(e_1, ..., e_2g) (x) Q[z], deg e_i = 1, deg z = 2.

#include "symcurve/matrix.hpp"
#include "symcurve/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace symcurve {

/// Raised when elements built over different numbers of exterior generators
/// are combined.
class AmbientMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr int kMaxGenus = 31;

/// e_{i_1} ... e_{i_k} z^p with i_1 < ... < i_k. Bit (i-1) of `exterior`
/// marks e_i.
struct Monomial {
    std::uint64_t exterior = 0;
    unsigned z_exponent = 0;

    [[nodiscard]] int exterior_degree() const;
    [[nodiscard]] int degree() const { return exterior_degree() + 2 * static_cast<int>(z_exponent); }
    /// 1-based generator indices in increasing order.
    [[nodiscard]] std::vector<int> indices() const;
    [[nodiscard]] bool is_one() const { return exterior == 0 && z_exponent == 0; }

    static Monomial from_indices(const std::vector<int>& indices, unsigned z_exponent = 0);

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// z-exponent major, then lexicographic on the increasing index list.
struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Product of two monomials: the sign of the sorting permutation, or
/// nullopt when an exterior index repeats.
std::optional<std::pair<int, Monomial>> multiply_monomials(const Monomial& a, const Monomial& b);

/// Sparse exact-rational combination of monomials. Immutable in spirit: every
/// operation returns a new value. No zero coefficients are stored.
class Element {
public:
    using Terms = std::map<Monomial, Rational, MonomialLess>;

    explicit Element(int genus = 0);
    Element(int genus, Terms terms);

    static Element constant(int genus, const Rational& c);
    static Element monomial(int genus, const Monomial& m, const Rational& c = Rational(1));
    /// e_i, 1-based, 1 <= i <= 2g.
    static Element generator(int genus, int i);
    static Element z(int genus, unsigned power = 1);

    [[nodiscard]] int genus() const { return genus_; }
    [[nodiscard]] int generator_count() const { return 2 * genus_; }
    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] Rational coefficient(const Monomial& m) const;

    [[nodiscard]] bool is_homogeneous() const;
    /// Degree of a nonzero homogeneous element; throws otherwise.
    [[nodiscard]] int degree() const;
    [[nodiscard]] int max_degree() const;
    [[nodiscard]] Element component(int degree) const;
    /// Degrees carrying at least one term, ascending.
    [[nodiscard]] std::vector<int> degrees() const;

    Element& operator+=(const Element& rhs);
    Element& operator-=(const Element& rhs);
    Element& operator*=(const Rational& s);

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator-(Element a) { return a *= Rational(-1); }
    friend Element operator*(Element a, const Rational& s) { return a *= s; }
    friend Element operator*(const Rational& s, Element a) { return a *= s; }
    friend Element operator*(const Element& a, const Element& b);
    friend bool operator==(const Element& a, const Element& b);

    [[nodiscard]] Element pow(unsigned k) const;

private:
    void add_term(const Monomial& m, const Rational& c);
    void check_same_ambient(const Element& other) const;

    int genus_ = 0;
    Terms terms_;
};

/// Bilinear graded-commutative product with the Koszul sign (-1)^{ij}.
Element multiply(const Element& x, const Element& y);

/// Debug rendering, e.g. "-2*e1*e2*e3*e4 + z".
std::string to_debug_string(const Element& x);

/// All monomials of one degree, z-exponent major then lexicographic.
struct DegreeBasis {
    int genus = 0;
    int degree = 0;
    std::vector<Monomial> monomials;

    [[nodiscard]] std::size_t size() const { return monomials.size(); }
    /// Position of `m`, or nullopt when not in the basis.
    [[nodiscard]] std::optional<std::size_t> index_of(const Monomial& m) const;
    /// Coordinates of a homogeneous element of this degree (zero allowed).
    [[nodiscard]] Vector coordinates(const Element& x) const;
    [[nodiscard]] Element element(const Vector& coords) const;

    friend bool operator==(const DegreeBasis&, const DegreeBasis&) = default;
};

DegreeBasis degree_basis(int genus, int degree);
/// Sum over j of C(2g, d - 2j).
std::size_t degree_dimension(int genus, int degree);

/// Linear map between two degree components, codomain rows x domain columns.
struct LinearMap {
    DegreeBasis domain;
    DegreeBasis codomain;
    Matrix matrix;
};

/// x -> a * x from degree d to degree d + deg(a). Throws on inhomogeneous a.
LinearMap multiplication_map(const Element& a, int d);

/// Row space held in reduced row-echelon form.
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim = 0);
    Subspace(std::size_t ambient_dim, const Matrix& spanning_rows);

    static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim); }
    static Subspace full(std::size_t ambient_dim);
    /// Column space of `m`.
    static Subspace column_space(const Matrix& m);

    [[nodiscard]] std::size_t ambient_dim() const { return ambient_; }
    [[nodiscard]] std::size_t dim() const { return rows_.rows(); }
    [[nodiscard]] const Matrix& rref_rows() const { return rows_; }
    [[nodiscard]] std::vector<Vector> basis() const { return rows_.row_vectors(); }

    [[nodiscard]] bool contains(const Vector& v) const;
    [[nodiscard]] bool contains(const Subspace& other) const;
    [[nodiscard]] Subspace sum(const Subspace& other) const;
    /// Rows spanning the annihilator: Q v = 0 iff v lies in this subspace.
    [[nodiscard]] Matrix annihilator() const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
    }

private:
    std::size_t ambient_;
    Matrix rows_;
};

struct ImagePreimage {
    Subspace image;
    Subspace preimage;
    Subspace kernel;
};

/// Image, preimage of `target` (nullopt means the zero subspace) and kernel
/// of the map given by `f` (codomain rows x domain columns).
ImagePreimage image_and_preimage(const Matrix& f, const std::optional<Subspace>& target);
ImagePreimage image_and_preimage(const LinearMap& f, const std::optional<Subspace>& target);

}  // namespace symcurve
