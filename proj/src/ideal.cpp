#include "symcurve/ideal.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace symcurve {

std::string to_string(IdealKind kind) { return kind == IdealKind::Principal ? "principal" : "colon"; }

IdealSpec IdealSpec::principal(Element generator, unsigned shift) {
    if (generator.is_zero() || !generator.is_homogeneous())
        throw std::invalid_argument("ideal generator must be nonzero and homogeneous");
    return IdealSpec{std::move(generator), IdealKind::Principal, shift};
}

IdealSpec IdealSpec::colon(Element generator, unsigned exponent) {
    if (generator.is_zero() || !generator.is_homogeneous())
        throw std::invalid_argument("ideal generator must be nonzero and homogeneous");
    if (exponent < 1)
        throw std::invalid_argument("colon exponent must be at least 1");
    return IdealSpec{std::move(generator), IdealKind::Colon, exponent};
}

namespace {

Subspace principal_component(const Element& generator, int d) {
    const int g = generator.genus();
    const int source = d - generator.degree();
    if (source < 0)
        return Subspace::zero(degree_dimension(g, d));
    return image_and_preimage(multiplication_map(generator, source), std::nullopt).image;
}

}  // namespace

Subspace colon_component(const Element& generator, unsigned k, int d) {
    const int g = generator.genus();
    if (k == 0)
        return principal_component(generator, d);
    const int lifted = d + 2 * static_cast<int>(k);
    Subspace target = principal_component(generator, lifted);
    // x z^k lands in (generator) iff x lies in the preimage; z^k is injective.
    LinearMap shift = multiplication_map(Element::z(g, k), d);
    return image_and_preimage(shift, target).preimage;
}

Subspace ideal_degree_component(const IdealSpec& spec, int d) {
    if (d < 0)
        return Subspace::zero(0);
    if (spec.kind == IdealKind::Principal)
        return principal_component(spec.generator * Element::z(spec.genus(), spec.parameter), d);
    return colon_component(spec.generator, spec.parameter, d);
}

namespace {

std::vector<Element> compute_generators(const IdealSpec& spec, int max_degree) {
    const int g = spec.genus();
    std::vector<Element> gens;
    for (int j = 0; j <= max_degree; ++j) {
        Subspace ideal = ideal_degree_component(spec, j);
        if (ideal.dim() == 0)
            continue;
        DegreeBasis basis = degree_basis(g, j);
        std::vector<Vector> rows;
        for (const auto& x : gens) {
            const int rest = j - x.degree();
            if (rest < 0)
                continue;
            for (const auto& m : degree_basis(g, rest).monomials)
                rows.push_back(basis.coordinates(multiply(x, Element::monomial(g, m))));
        }
        Subspace generated(basis.size(), Matrix::from_rows(rows, basis.size()));
        for (const auto& v : ideal.basis()) {
            if (generated.contains(v))
                continue;
            gens.push_back(basis.element(v));
            generated = generated.sum(Subspace(basis.size(), Matrix::from_rows({v}, basis.size())));
        }
    }
    return gens;
}

}  // namespace

std::vector<Element> ideal_generators(const IdealSpec& spec, int max_degree) {
    using Key = std::tuple<int, int, unsigned, std::string>;
    static std::mutex mutex;
    static std::map<Key, std::pair<int, std::vector<Element>>> cache;
    Key key{spec.genus(), static_cast<int>(spec.kind), spec.parameter, to_debug_string(spec.generator)};
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end() && it->second.first >= max_degree) {
            std::vector<Element> out;
            for (const auto& x : it->second.second)
                if (x.degree() <= max_degree)
                    out.push_back(x);
            return out;
        }
    }
    std::vector<Element> gens = compute_generators(spec, max_degree);
    std::lock_guard<std::mutex> lock(mutex);
    cache[key] = {max_degree, gens};
    return gens;
}

const QuotientComponent& QuotientPresentation::component(int d) const {
    if (d < 0 || d > max_degree)
        throw std::out_of_range("degree " + std::to_string(d) + " outside presentation range 0.." +
                                std::to_string(max_degree));
    return components[static_cast<std::size_t>(d)];
}

std::vector<std::size_t> QuotientPresentation::dimensions() const {
    std::vector<std::size_t> dims;
    for (const auto& c : components)
        dims.push_back(c.normal_form.size());
    return dims;
}

QuotientPresentation build_quotient(const IdealSpec& spec, int max_degree) {
    if (max_degree < 0)
        throw std::invalid_argument("build_quotient: negative max degree");
    const int g = spec.genus();
    QuotientPresentation pres{spec, max_degree, {}};
    for (int d = 0; d <= max_degree; ++d) {
        QuotientComponent comp;
        comp.ambient = degree_basis(g, d);
        comp.ideal = ideal_degree_component(spec, d);
        comp.normal_form = DegreeBasis{g, d, {}};
        const std::size_t n = comp.ambient.size();

        // Greedy complement: keep a monomial when it is independent modulo
        // the ideal and the monomials kept so far.
        Subspace span = comp.ideal;
        for (std::size_t j = 0; j < n && span.dim() < n; ++j) {
            Vector unit(n);
            unit[j] = 1;
            if (span.contains(unit))
                continue;
            span = span.sum(Subspace(n, Matrix::from_rows({unit}, n)));
            comp.normal_form_positions.push_back(j);
            comp.normal_form.monomials.push_back(comp.ambient.monomials[j]);
        }

        // Columns of `basis` are the ideal basis followed by the chosen unit
        // vectors; its inverse gives coordinates in that decomposition.
        const std::size_t k = comp.ideal.dim();
        Matrix basis(n, n);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t r = 0; r < n; ++r)
                basis(r, i) = comp.ideal.rref_rows()(i, r);
        for (std::size_t i = 0; i < comp.normal_form_positions.size(); ++i)
            basis(comp.normal_form_positions[i], k + i) = 1;
        Matrix inv = basis.inverse();
        comp.reduce_map = Matrix(comp.normal_form_positions.size(), n);
        for (std::size_t i = 0; i < comp.normal_form_positions.size(); ++i)
            for (std::size_t c = 0; c < n; ++c)
                comp.reduce_map(i, c) = inv(k + i, c);
        pres.components.push_back(std::move(comp));
    }
    return pres;
}

Element reduce(const QuotientPresentation& pres, const Element& x) {
    if (x.genus() != pres.genus())
        throw AmbientMismatch("reduce: element genus differs from presentation genus");
    Element out(pres.genus());
    for (int d : x.degrees()) {
        const QuotientComponent& comp = pres.component(d);
        Vector coords = comp.ambient.coordinates(x.component(d));
        out += comp.normal_form.element(comp.reduce_map.apply(coords));
    }
    return out;
}

}  // namespace symcurve
