#include "symcurve/gca.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace symcurve {

int Monomial::exterior_degree() const { return std::popcount(exterior); }

std::vector<int> Monomial::indices() const {
    std::vector<int> out;
    for (std::uint64_t bits = exterior; bits != 0; bits &= bits - 1)
        out.push_back(std::countr_zero(bits) + 1);
    return out;
}

Monomial Monomial::from_indices(const std::vector<int>& indices, unsigned z_exponent) {
    Monomial m;
    m.z_exponent = z_exponent;
    for (int i : indices) {
        if (i < 1 || i > 64)
            throw std::out_of_range("exterior index out of range");
        std::uint64_t bit = std::uint64_t{1} << (i - 1);
        if (m.exterior & bit)
            throw std::invalid_argument("repeated exterior index");
        m.exterior |= bit;
    }
    return m;
}

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
    if (a.z_exponent != b.z_exponent)
        return a.z_exponent < b.z_exponent;
    std::uint64_t x = a.exterior;
    std::uint64_t y = b.exterior;
    while (x != 0 && y != 0) {
        int i = std::countr_zero(x);
        int j = std::countr_zero(y);
        if (i != j)
            return i < j;
        x &= x - 1;
        y &= y - 1;
    }
    return x == 0 && y != 0;
}

std::optional<std::pair<int, Monomial>> multiply_monomials(const Monomial& a, const Monomial& b) {
    if (a.exterior & b.exterior)
        return std::nullopt;
    // Each index of b passes every larger index of a.
    int swaps = 0;
    for (std::uint64_t bits = b.exterior; bits != 0; bits &= bits - 1) {
        int j = std::countr_zero(bits);
        std::uint64_t above = j == 63 ? 0 : (~std::uint64_t{0} << (j + 1));
        swaps += std::popcount(a.exterior & above);
    }
    Monomial m{a.exterior | b.exterior, a.z_exponent + b.z_exponent};
    return std::pair{(swaps % 2 == 0) ? 1 : -1, m};
}

Element::Element(int genus) : genus_(genus) {
    if (genus < 0 || genus > kMaxGenus)
        throw std::out_of_range("genus out of supported range");
}

Element::Element(int genus, Terms terms) : Element(genus) {
    for (auto& [m, c] : terms)
        add_term(m, c);
}

Element Element::constant(int genus, const Rational& c) { return monomial(genus, Monomial{}, c); }

Element Element::monomial(int genus, const Monomial& m, const Rational& c) {
    Element x(genus);
    if (m.exterior >> (2 * genus) != 0)
        throw std::out_of_range("monomial uses a generator beyond 2g");
    x.add_term(m, c);
    return x;
}

Element Element::generator(int genus, int i) {
    if (i < 1 || i > 2 * genus)
        throw std::out_of_range("generator index e" + std::to_string(i) + " out of range for genus " +
                                std::to_string(genus));
    return monomial(genus, Monomial::from_indices({i}));
}

Element Element::z(int genus, unsigned power) { return monomial(genus, Monomial{0, power}); }

Rational Element::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool Element::is_homogeneous() const {
    if (terms_.empty())
        return true;
    int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d)
            return false;
    return true;
}

int Element::degree() const {
    if (terms_.empty())
        throw std::domain_error("degree of the zero element");
    if (!is_homogeneous())
        throw std::domain_error("degree of an inhomogeneous element");
    return terms_.begin()->first.degree();
}

int Element::max_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_)
        d = std::max(d, m.degree());
    return d;
}

Element Element::component(int degree) const {
    Element out(genus_);
    for (const auto& [m, c] : terms_)
        if (m.degree() == degree)
            out.terms_.emplace(m, c);
    return out;
}

std::vector<int> Element::degrees() const {
    std::vector<int> ds;
    for (const auto& [m, c] : terms_)
        ds.push_back(m.degree());
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    return ds;
}

void Element::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

void Element::check_same_ambient(const Element& other) const {
    if (genus_ != other.genus_)
        throw AmbientMismatch("elements over different generator counts (2g = " + std::to_string(2 * genus_) +
                              " vs " + std::to_string(2 * other.genus_) + ")");
}

Element& Element::operator+=(const Element& rhs) {
    check_same_ambient(rhs);
    for (const auto& [m, c] : rhs.terms_)
        add_term(m, c);
    return *this;
}

Element& Element::operator-=(const Element& rhs) {
    check_same_ambient(rhs);
    for (const auto& [m, c] : rhs.terms_)
        add_term(m, -c);
    return *this;
}

Element& Element::operator*=(const Rational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_)
        c *= s;
    return *this;
}

Element operator*(const Element& a, const Element& b) { return multiply(a, b); }

bool operator==(const Element& a, const Element& b) { return a.genus_ == b.genus_ && a.terms_ == b.terms_; }

Element Element::pow(unsigned k) const {
    Element r = constant(genus_, 1);
    for (unsigned i = 0; i < k; ++i)
        r = multiply(r, *this);
    return r;
}

Element multiply(const Element& x, const Element& y) {
    if (x.genus() != y.genus())
        throw AmbientMismatch("multiply: elements over different generator counts (2g = " +
                              std::to_string(x.generator_count()) + " vs " + std::to_string(y.generator_count()) +
                              ")");
    Element::Terms out;
    for (const auto& [ma, ca] : x.terms())
        for (const auto& [mb, cb] : y.terms()) {
            auto prod = multiply_monomials(ma, mb);
            if (!prod)
                continue;
            Rational c = ca * cb;
            if (prod->first < 0)
                c = -c;
            auto [it, inserted] = out.try_emplace(prod->second, c);
            if (!inserted)
                it->second += c;
        }
    return Element(x.genus(), std::move(out));
}

std::string to_debug_string(const Element& x) {
    if (x.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
        os << (first ? "" : " + ") << it->second;
        for (int i : it->first.indices())
            os << "*e" << i;
        if (it->first.z_exponent > 0)
            os << "*z^" << it->first.z_exponent;
        first = false;
    }
    return os.str();
}

std::optional<std::size_t> DegreeBasis::index_of(const Monomial& m) const {
    auto it = std::lower_bound(monomials.begin(), monomials.end(), m, MonomialLess{});
    if (it == monomials.end() || !(*it == m))
        return std::nullopt;
    return static_cast<std::size_t>(it - monomials.begin());
}

Vector DegreeBasis::coordinates(const Element& x) const {
    if (x.genus() != genus)
        throw AmbientMismatch("coordinates: element genus differs from basis genus");
    Vector v(monomials.size());
    for (const auto& [m, c] : x.terms()) {
        auto idx = index_of(m);
        if (!idx)
            throw std::invalid_argument("coordinates: monomial of degree " + std::to_string(m.degree()) +
                                        " not in degree-" + std::to_string(degree) + " basis");
        v[*idx] = c;
    }
    return v;
}

Element DegreeBasis::element(const Vector& coords) const {
    if (coords.size() != monomials.size())
        throw std::invalid_argument("DegreeBasis::element: coordinate count mismatch");
    Element::Terms t;
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (!coords[i].is_zero())
            t.emplace(monomials[i], coords[i]);
    return Element(genus, std::move(t));
}

namespace {

// Subsets of {0..n-1} of size k as bitmasks, in lexicographic order of their
// increasing index lists.
void lex_subsets(int n, int k, int start, std::uint64_t acc, std::vector<std::uint64_t>& out) {
    if (k == 0) {
        out.push_back(acc);
        return;
    }
    for (int i = start; i <= n - k; ++i)
        lex_subsets(n, k - 1, i + 1, acc | (std::uint64_t{1} << i), out);
}

}  // namespace

DegreeBasis degree_basis(int genus, int degree) {
    if (genus < 0 || genus > kMaxGenus)
        throw std::out_of_range("genus out of supported range");
    DegreeBasis b{genus, degree, {}};
    if (degree < 0)
        return b;
    const int n = 2 * genus;
    for (int j = 0; 2 * j <= degree; ++j) {
        int k = degree - 2 * j;
        if (k > n)
            continue;
        std::vector<std::uint64_t> subsets;
        lex_subsets(n, k, 0, 0, subsets);
        for (auto s : subsets)
            b.monomials.push_back(Monomial{s, static_cast<unsigned>(j)});
    }
    return b;
}

std::size_t degree_dimension(int genus, int degree) {
    if (degree < 0)
        return 0;
    std::size_t total = 0;
    for (int j = 0; 2 * j <= degree; ++j) {
        Rational c = binomial(2 * genus, degree - 2 * j);
        total += static_cast<std::size_t>(std::stoul(c.numerator_string()));
    }
    return total;
}

LinearMap multiplication_map(const Element& a, int d) {
    if (!a.is_homogeneous())
        throw std::invalid_argument("multiplication_map: inhomogeneous multiplier");
    int k = a.is_zero() ? 0 : a.degree();
    LinearMap f{degree_basis(a.genus(), d), degree_basis(a.genus(), d + k), {}};
    f.matrix = Matrix(f.codomain.size(), f.domain.size());
    for (std::size_t j = 0; j < f.domain.size(); ++j) {
        Element image = multiply(a, Element::monomial(a.genus(), f.domain.monomials[j]));
        for (const auto& [m, c] : image.terms())
            f.matrix(*f.codomain.index_of(m), j) = c;
    }
    return f;
}

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), rows_(0, ambient_dim) {}

Subspace::Subspace(std::size_t ambient_dim, const Matrix& spanning_rows) : ambient_(ambient_dim) {
    if (spanning_rows.rows() == 0) {
        rows_ = Matrix(0, ambient_dim);
        return;
    }
    if (spanning_rows.cols() != ambient_dim)
        throw std::invalid_argument("Subspace: spanning rows have wrong length");
    rows_ = spanning_rows.rref();
}

Subspace Subspace::full(std::size_t ambient_dim) { return Subspace(ambient_dim, Matrix::identity(ambient_dim)); }

Subspace Subspace::column_space(const Matrix& m) { return Subspace(m.rows(), m.transpose()); }

bool Subspace::contains(const Vector& v) const {
    if (v.size() != ambient_)
        throw std::invalid_argument("Subspace::contains: dimension mismatch");
    // Reduce v against the pivots of the rref rows.
    Vector r = v;
    for (std::size_t i = 0; i < rows_.rows(); ++i) {
        std::size_t p = 0;
        while (rows_(i, p).is_zero())
            ++p;
        if (r[p].is_zero())
            continue;
        Rational f = r[p];
        for (std::size_t j = p; j < ambient_; ++j)
            if (!rows_(i, j).is_zero())
                r[j] -= f * rows_(i, j);
    }
    for (const auto& q : r)
        if (!q.is_zero())
            return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_)
        throw std::invalid_argument("Subspace::contains: ambient mismatch");
    for (std::size_t i = 0; i < other.rows_.rows(); ++i)
        if (!contains(other.rows_.row(i)))
            return false;
    return true;
}

Subspace Subspace::sum(const Subspace& other) const {
    if (other.ambient_ != ambient_)
        throw std::invalid_argument("Subspace::sum: ambient mismatch");
    return Subspace(ambient_, vstack(rows_, other.rows_));
}

Matrix Subspace::annihilator() const {
    if (rows_.rows() == 0)
        return Matrix::identity(ambient_);
    return rows_.nullspace();
}

ImagePreimage image_and_preimage(const Matrix& f, const std::optional<Subspace>& target) {
    if (target && target->ambient_dim() != f.rows())
        throw std::invalid_argument("image_and_preimage: target lives in a space of dimension " +
                                    std::to_string(target->ambient_dim()) + ", map codomain has dimension " +
                                    std::to_string(f.rows()));
    Subspace image = f.cols() == 0 ? Subspace::zero(f.rows()) : Subspace::column_space(f);
    Subspace kernel(f.cols(), f.rows() == 0 ? Matrix::identity(f.cols()) : f.nullspace());
    Subspace preimage = kernel;
    if (target && target->dim() > 0) {
        Matrix q = target->annihilator();
        if (q.rows() == 0)
            preimage = Subspace::full(f.cols());
        else
            preimage = Subspace(f.cols(), (q * f).nullspace());
    }
    return {std::move(image), std::move(preimage), std::move(kernel)};
}

ImagePreimage image_and_preimage(const LinearMap& f, const std::optional<Subspace>& target) {
    return image_and_preimage(f.matrix, target);
}

}  // namespace symcurve
