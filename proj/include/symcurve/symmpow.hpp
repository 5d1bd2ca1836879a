#pragma once

// The presented algebra A_n = H*(J)[z] / I_n, realizing the cohomology of
// the n-th symmetric power of a genus-g curve, with the maps between the
// members of the family {A_n}.

#include "symcurve/ideal.hpp"
#include "symcurve/jacobian.hpp"

#include <memory>
#include <string>
#include <vector>

namespace symcurve {

class OwnerMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A class of A_n, always stored as its normal form.
struct ClassRep {
    int genus = 0;
    int power = 0;
    Element value;

    friend bool operator==(const ClassRep&, const ClassRep&) = default;
};

class SymPowAlgebra {
public:
    /// Principal ideal (beta z^{n-2g+1}) when n >= 2g-1, otherwise the colon
    /// ideal ((beta) : z^{2g-1-n}). Below the bundle range the algebra keeps
    /// A_{2g-1} to normalize integration.
    static std::shared_ptr<const SymPowAlgebra> build(int genus, int power);

    [[nodiscard]] int genus() const { return genus_; }
    [[nodiscard]] int power() const { return power_; }
    [[nodiscard]] int top_degree() const { return 2 * power_; }
    [[nodiscard]] const IdealSpec& ideal() const { return presentation_.spec; }
    [[nodiscard]] const QuotientPresentation& presentation() const { return presentation_; }
    [[nodiscard]] const ChernData& chern() const { return chern_; }
    [[nodiscard]] const JacobianRing& jacobian() const { return jacobian_; }

    [[nodiscard]] std::vector<std::size_t> betti() const { return presentation_.dimensions(); }
    [[nodiscard]] std::size_t dim(int d) const;
    /// Normal-form monomials of degree d (empty outside 0..2n).
    [[nodiscard]] DegreeBasis basis(int d) const;
    [[nodiscard]] ClassRep basis_class(int d, std::size_t i) const;
    [[nodiscard]] Vector coordinates(const ClassRep& a, int d) const;
    [[nodiscard]] ClassRep from_coordinates(int d, const Vector& coords) const;

    /// psi_n: reduce r; terms above degree 2n map to zero.
    [[nodiscard]] ClassRep psi(const Element& r) const;
    [[nodiscard]] ClassRep unit() const { return psi(Element::constant(genus_, 1)); }
    /// Class of z, the first Chern class of O(1) on the bundle range.
    [[nodiscard]] ClassRep zeta() const { return psi(Element::z(genus_)); }
    [[nodiscard]] const ClassRep& fundamental_class() const { return fundamental_; }

    [[nodiscard]] ClassRep cup(const ClassRep& a, const ClassRep& b) const;
    [[nodiscard]] ClassRep add(const ClassRep& a, const ClassRep& b) const;
    [[nodiscard]] ClassRep scale(const ClassRep& a, const Rational& s) const;

    /// Linear functional with integrate(fundamental_class) = 1; only the
    /// degree-2n part contributes.
    [[nodiscard]] Rational integrate(const ClassRep& a) const;
    /// P[i][j] = integrate(b_i^(d) * b_j^(2n-d)).
    [[nodiscard]] Matrix pairing_matrix(int d) const;
    /// Adjoint of pi_n^* under the two pairings, normalized by
    /// integral over J of theta^g/g! = 1.
    [[nodiscard]] Element pi_pushforward(const ClassRep& a) const;

    void check_owner(const ClassRep& a) const;

private:
    SymPowAlgebra(int genus, int power, QuotientPresentation pres);
    [[nodiscard]] Rational integrate_top(const Element& top_component) const;

    int genus_;
    int power_;
    QuotientPresentation presentation_;
    JacobianRing jacobian_;
    ChernData chern_;
    std::shared_ptr<const SymPowAlgebra> stable_;
    Monomial top_monomial_;
    Rational top_scale_;
    ClassRep fundamental_;
};

using AlgebraPtr = std::shared_ptr<const SymPowAlgebra>;

/// The ideal defining A_n.
IdealSpec symmetric_power_ideal(int genus, int power);

/// iota_{m,n}^*: psi_n(r) -> psi_m(r), m <= n.
ClassRep pullback(const SymPowAlgebra& target_m, const SymPowAlgebra& source_n, const ClassRep& a);
/// iota_{m,n *}: psi_m(r) -> psi_n(r z^{n-m}), m <= n.
ClassRep pushforward(const SymPowAlgebra& source_m, const SymPowAlgebra& target_n, const ClassRep& a);

/// Degreewise matrices: pullback from A_n^d to A_m^d, pushforward from A_m^d
/// to A_n^{d+2(n-m)}.
Matrix pullback_matrix(const SymPowAlgebra& target_m, const SymPowAlgebra& source_n, int d);
Matrix pushforward_matrix(const SymPowAlgebra& source_m, const SymPowAlgebra& target_n, int d);

struct MattuckCheck {
    int index = 0;
    Element expected;  // u_i
    Element observed;  // (-1)^i pi_{(g-i)*}(1)
    bool pass = false;
};

struct MattuckReport {
    int genus = 0;
    std::vector<MattuckCheck> checks;
    [[nodiscard]] bool pass() const;
};

/// Compares u_i with (-1)^i pi_{(g-i)*}(1) for 1 <= i <= g.
MattuckReport verify_mattuck_chern(int genus);

}  // namespace symcurve
