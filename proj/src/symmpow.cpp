#include "symcurve/symmpow.hpp"

namespace symcurve {

IdealSpec symmetric_power_ideal(int genus, int power) {
    if (genus < 0 || power < 0)
        throw std::invalid_argument("genus and power must be nonnegative");
    Element beta = chern_classes(genus).beta;
    if (power >= 2 * genus - 1)
        return IdealSpec::principal(std::move(beta), static_cast<unsigned>(power - 2 * genus + 1));
    return IdealSpec::colon(std::move(beta), static_cast<unsigned>(2 * genus - 1 - power));
}

SymPowAlgebra::SymPowAlgebra(int genus, int power, QuotientPresentation pres)
    : genus_(genus),
      power_(power),
      presentation_(std::move(pres)),
      jacobian_(build_jacobian(genus)),
      chern_(chern_classes(genus)) {}

std::shared_ptr<const SymPowAlgebra> SymPowAlgebra::build(int genus, int power) {
    IdealSpec spec = symmetric_power_ideal(genus, power);
    auto alg = std::shared_ptr<SymPowAlgebra>(
        new SymPowAlgebra(genus, power, build_quotient(spec, 2 * power)));

    const int top = 2 * power;
    const DegreeBasis& top_basis = alg->presentation_.component(top).normal_form;
    if (top_basis.size() != 1)
        throw std::logic_error("top-degree component of A_n is not one-dimensional");
    alg->top_monomial_ = top_basis.monomials.front();

    if (power >= 2 * genus - 1) {
        // integrate(z^{n-g} theta^g / g!) = 1 fixes the scale.
        Element point = alg->jacobian_.point_class() * Element::z(genus, static_cast<unsigned>(power - genus));
        alg->top_scale_ = reduce(alg->presentation_, point).coefficient(alg->top_monomial_);
        if (alg->top_scale_.is_zero())
            throw std::logic_error("point class reduces to zero in the top degree");
    } else {
        alg->stable_ = build(genus, 2 * genus - 1);
    }
    Element m = Element::monomial(genus, alg->top_monomial_);
    Rational scale = alg->integrate_top(m);
    alg->fundamental_ = ClassRep{genus, power, m * (Rational(1) / scale)};
    return alg;
}

std::size_t SymPowAlgebra::dim(int d) const {
    if (d < 0 || d > top_degree())
        return 0;
    return presentation_.component(d).normal_form.size();
}

DegreeBasis SymPowAlgebra::basis(int d) const {
    if (d < 0 || d > top_degree())
        return DegreeBasis{genus_, d, {}};
    return presentation_.component(d).normal_form;
}

ClassRep SymPowAlgebra::basis_class(int d, std::size_t i) const {
    return ClassRep{genus_, power_, Element::monomial(genus_, basis(d).monomials.at(i))};
}

Vector SymPowAlgebra::coordinates(const ClassRep& a, int d) const {
    check_owner(a);
    return basis(d).coordinates(a.value.component(d));
}

ClassRep SymPowAlgebra::from_coordinates(int d, const Vector& coords) const {
    return ClassRep{genus_, power_, basis(d).element(coords)};
}

void SymPowAlgebra::check_owner(const ClassRep& a) const {
    if (a.genus != genus_ || a.power != power_)
        throw OwnerMismatch("class of (g=" + std::to_string(a.genus) + ", n=" + std::to_string(a.power) +
                            ") used with algebra (g=" + std::to_string(genus_) + ", n=" + std::to_string(power_) +
                            ")");
}

ClassRep SymPowAlgebra::psi(const Element& r) const {
    if (r.genus() != genus_)
        throw AmbientMismatch("psi: element genus differs from algebra genus");
    Element low(genus_);
    for (const auto& [m, c] : r.terms())
        if (m.degree() <= top_degree())
            low += Element::monomial(genus_, m, c);
    return ClassRep{genus_, power_, reduce(presentation_, low)};
}

ClassRep SymPowAlgebra::cup(const ClassRep& a, const ClassRep& b) const {
    check_owner(a);
    check_owner(b);
    return psi(multiply(a.value, b.value));
}

ClassRep SymPowAlgebra::add(const ClassRep& a, const ClassRep& b) const {
    check_owner(a);
    check_owner(b);
    return ClassRep{genus_, power_, a.value + b.value};
}

ClassRep SymPowAlgebra::scale(const ClassRep& a, const Rational& s) const {
    check_owner(a);
    return ClassRep{genus_, power_, a.value * s};
}

Rational SymPowAlgebra::integrate_top(const Element& top_component) const {
    if (stable_) {
        Element lifted = top_component * Element::z(genus_, static_cast<unsigned>(2 * genus_ - 1 - power_));
        return stable_->integrate(stable_->psi(lifted));
    }
    return reduce(presentation_, top_component).coefficient(top_monomial_) / top_scale_;
}

Rational SymPowAlgebra::integrate(const ClassRep& a) const {
    check_owner(a);
    Element top = a.value.component(top_degree());
    if (top.is_zero())
        return Rational(0);
    return integrate_top(top);
}

Matrix SymPowAlgebra::pairing_matrix(int d) const {
    DegreeBasis left = basis(d);
    DegreeBasis right = basis(top_degree() - d);
    Matrix p(left.size(), right.size());
    for (std::size_t i = 0; i < left.size(); ++i)
        for (std::size_t j = 0; j < right.size(); ++j) {
            Element prod = multiply(Element::monomial(genus_, left.monomials[i]),
                                    Element::monomial(genus_, right.monomials[j]));
            p(i, j) = integrate(psi(prod));
        }
    return p;
}

Element SymPowAlgebra::pi_pushforward(const ClassRep& a) const {
    check_owner(a);
    Element out(genus_);
    for (int d : a.value.degrees()) {
        const int q = 2 * genus_ - 2 * power_ + d;
        if (q < 0 || q > 2 * genus_)
            continue;
        DegreeBasis unknowns = exterior_basis(genus_, q);
        DegreeBasis tests = exterior_basis(genus_, 2 * power_ - d);
        ClassRep part{genus_, power_, a.value.component(d)};
        Matrix gram(tests.size(), unknowns.size());
        Vector rhs(tests.size());
        for (std::size_t j = 0; j < tests.size(); ++j) {
            Element b = Element::monomial(genus_, tests.monomials[j]);
            for (std::size_t i = 0; i < unknowns.size(); ++i)
                gram(j, i) = jacobian_.integrate(multiply(Element::monomial(genus_, unknowns.monomials[i]), b));
            rhs[j] = integrate(cup(part, psi(b)));
        }
        out += unknowns.element(gram.inverse().apply(rhs));
    }
    return out;
}

ClassRep pullback(const SymPowAlgebra& target_m, const SymPowAlgebra& source_n, const ClassRep& a) {
    if (target_m.genus() != source_n.genus())
        throw OwnerMismatch("pullback between algebras of different genus");
    if (target_m.power() > source_n.power())
        throw std::invalid_argument("pullback requires m <= n");
    source_n.check_owner(a);
    return target_m.psi(a.value);
}

ClassRep pushforward(const SymPowAlgebra& source_m, const SymPowAlgebra& target_n, const ClassRep& a) {
    if (source_m.genus() != target_n.genus())
        throw OwnerMismatch("pushforward between algebras of different genus");
    if (source_m.power() > target_n.power())
        throw std::invalid_argument("pushforward requires m <= n");
    source_m.check_owner(a);
    const auto k = static_cast<unsigned>(target_n.power() - source_m.power());
    return target_n.psi(a.value * Element::z(a.genus, k));
}

Matrix pullback_matrix(const SymPowAlgebra& target_m, const SymPowAlgebra& source_n, int d) {
    Matrix out(target_m.dim(d), source_n.dim(d));
    for (std::size_t j = 0; j < source_n.dim(d); ++j) {
        Vector col = target_m.coordinates(pullback(target_m, source_n, source_n.basis_class(d, j)), d);
        for (std::size_t i = 0; i < col.size(); ++i)
            out(i, j) = col[i];
    }
    return out;
}

Matrix pushforward_matrix(const SymPowAlgebra& source_m, const SymPowAlgebra& target_n, int d) {
    const int e = d + 2 * (target_n.power() - source_m.power());
    Matrix out(target_n.dim(e), source_m.dim(d));
    for (std::size_t j = 0; j < source_m.dim(d); ++j) {
        Vector col = target_n.coordinates(pushforward(source_m, target_n, source_m.basis_class(d, j)), e);
        for (std::size_t i = 0; i < col.size(); ++i)
            out(i, j) = col[i];
    }
    return out;
}

bool MattuckReport::pass() const {
    for (const auto& c : checks)
        if (!c.pass)
            return false;
    return true;
}

MattuckReport verify_mattuck_chern(int genus) {
    if (genus < 1)
        throw std::invalid_argument("verify_mattuck_chern needs genus >= 1");
    MattuckReport report{genus, {}};
    ChernData chern = chern_classes(genus);
    for (int i = 1; i <= genus; ++i) {
        auto alg = SymPowAlgebra::build(genus, genus - i);
        Element pushed = alg->pi_pushforward(alg->unit());
        Element observed = pushed * Rational(i % 2 == 0 ? 1 : -1);
        Element expected = chern.u(i);
        report.checks.push_back({i, expected, observed, expected == observed});
    }
    return report;
}

}  // namespace symcurve
