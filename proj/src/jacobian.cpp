#include "symcurve/jacobian.hpp"

namespace symcurve {

JacobianRing build_jacobian(int genus) {
    JacobianRing j{genus, Element(genus)};
    for (int i = 1; i <= genus; ++i)
        j.theta += multiply(Element::generator(genus, i), Element::generator(genus, genus + i));
    return j;
}

Element JacobianRing::point_class() const { return theta.pow(static_cast<unsigned>(genus)) * (Rational(1) / factorial(genus)); }

Rational JacobianRing::integrate(const Element& x) const {
    Monomial top{genus == 0 ? 0 : (~std::uint64_t{0} >> (64 - 2 * genus)), 0};
    Rational normalizer = point_class().coefficient(top);
    return x.coefficient(top) / normalizer;
}

Element ChernData::u(int i) const {
    if (i < 0 || i > genus)
        return Element(genus);
    return classes[static_cast<std::size_t>(i)];
}

ChernData chern_classes(int genus) {
    JacobianRing jac = build_jacobian(genus);
    ChernData data{genus, {}, Element(genus)};
    Element power = Element::constant(genus, 1);
    for (int i = 0; i <= genus; ++i) {
        Rational c = Rational(i % 2 == 0 ? 1 : -1) / factorial(static_cast<unsigned>(i));
        data.classes.push_back(power * c);
        power = multiply(power, jac.theta);
    }
    for (int i = 0; i <= genus; ++i)
        data.beta += multiply(data.classes[static_cast<std::size_t>(i)], Element::z(genus, static_cast<unsigned>(genus - i)));
    return data;
}

Element beta_shifted(int genus, unsigned s) { return multiply(chern_classes(genus).beta, Element::z(genus, s)); }

DegreeBasis exterior_basis(int genus, int degree) {
    DegreeBasis full = degree_basis(genus, degree);
    DegreeBasis b{genus, degree, {}};
    for (const auto& m : full.monomials)
        if (m.z_exponent == 0)
            b.monomials.push_back(m);
    return b;
}

}  // namespace symcurve
