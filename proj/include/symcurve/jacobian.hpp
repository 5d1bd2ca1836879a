#pragma once

// Rational cohomology model of the Jacobian: exterior algebra on 2g degree-1
// classes with the principal polarization theta = sum_i e_i e_{g+i}.

#include "symcurve/gca.hpp"

#include <vector>

namespace symcurve {

struct JacobianRing {
    int genus = 0;
    Element theta;

    [[nodiscard]] int generator_count() const { return 2 * genus; }
    /// theta^g / g!, the class integrating to 1.
    [[nodiscard]] Element point_class() const;
    /// Integral over J: the top exterior coefficient of x, normalized so that
    /// theta^g / g! integrates to 1. Non-top and z-carrying terms contribute 0.
    [[nodiscard]] Rational integrate(const Element& x) const;
};

JacobianRing build_jacobian(int genus);

/// Chern data of the bundles whose projectivizations are the symmetric powers
/// in the bundle range: u_i = (-1)^i theta^i / i!, beta = sum_i u_i z^{g-i}.
struct ChernData {
    int genus = 0;
    std::vector<Element> classes;  // u_0 .. u_g
    Element beta;

    /// u_i, zero outside 0 <= i <= g.
    [[nodiscard]] Element u(int i) const;
};

ChernData chern_classes(int genus);

/// beta * z^s.
Element beta_shifted(int genus, unsigned s);

/// Pure exterior basis of H^d(J), i.e. the z-free monomials of degree d.
DegreeBasis exterior_basis(int genus, int degree);

}  // namespace symcurve
