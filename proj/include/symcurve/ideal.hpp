#pragma once

// Degreewise ideals (alpha * z^s) and colon ideals ((alpha) : z^k) of
// Lambda[z], and the quotient presentations they cut out.

#include "symcurve/gca.hpp"

#include <string>
#include <vector>

namespace symcurve {

enum class IdealKind { Principal, Colon };

std::string to_string(IdealKind kind);

/// (generator * z^s) for Principal, ((generator) : z^k) for Colon.
struct IdealSpec {
    Element generator;
    IdealKind kind = IdealKind::Principal;
    unsigned parameter = 0;  // s or k

    static IdealSpec principal(Element generator, unsigned shift);
    /// Requires k >= 1.
    static IdealSpec colon(Element generator, unsigned exponent);

    [[nodiscard]] int genus() const { return generator.genus(); }
    [[nodiscard]] int generator_degree() const { return generator.degree(); }
};

/// Degree-d component of ((generator) : z^k) for any k >= 0; k = 0 gives the
/// principal ideal (generator).
Subspace colon_component(const Element& generator, unsigned k, int d);

/// Degree-d component of the ideal, as a subspace of R_d in canonical
/// coordinates.
Subspace ideal_degree_component(const IdealSpec& spec, int d);

/// Homogeneous generators of the ideal in degrees 0..max_degree: each one
/// is independent of the ideal generated by the earlier ones. Cached per
/// ideal.
std::vector<Element> ideal_generators(const IdealSpec& spec, int max_degree);

struct QuotientComponent {
    DegreeBasis ambient;
    Subspace ideal;
    /// Positions (into ambient) of the monomials chosen as complement.
    std::vector<std::size_t> normal_form_positions;
    DegreeBasis normal_form;
    /// ambient coordinates -> normal-form coordinates; kills `ideal`.
    Matrix reduce_map;
};

struct QuotientPresentation {
    IdealSpec spec;
    int max_degree = 0;
    std::vector<QuotientComponent> components;  // index = degree

    [[nodiscard]] int genus() const { return spec.genus(); }
    [[nodiscard]] const QuotientComponent& component(int d) const;
    /// Quotient dimension per degree, 0..max_degree.
    [[nodiscard]] std::vector<std::size_t> dimensions() const;
};

/// Ideal components up to max_degree with a greedy monomial complement in
/// canonical order.
QuotientPresentation build_quotient(const IdealSpec& spec, int max_degree);

/// Normal form of x modulo the ideal. Throws std::out_of_range when x has a
/// term of degree above max_degree.
Element reduce(const QuotientPresentation& pres, const Element& x);

}  // namespace symcurve
