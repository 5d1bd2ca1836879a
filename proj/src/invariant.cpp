#include "symcurve/invariant.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>

namespace symcurve {

std::uint64_t default_oracle_budget() {
    if (const char* env = std::getenv("SYMCURVE_ORACLE_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return v;
    }
    return 300000;
}

int CurveCohomology::degree(int letter) const {
    if (letter == 0)
        return 0;
    if (letter == point())
        return 2;
    return 1;
}

std::string CurveCohomology::name(int letter) const {
    if (letter == 0)
        return "1";
    if (letter == point())
        return "p";
    if (letter <= genus)
        return "a" + std::to_string(letter);
    return "b" + std::to_string(letter - genus);
}

std::pair<int, int> CurveCohomology::product(int a, int b) const {
    if (a == 0)
        return {1, b};
    if (b == 0)
        return {1, a};
    if (a >= 1 && a <= genus && b == a + genus)
        return {1, point()};
    if (b >= 1 && b <= genus && a == b + genus)
        return {-1, point()};
    return {0, 0};
}

int sorting_sign(const CurveCohomology& h, const Word& w) {
    int inversions = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!h.odd(w[i]))
            continue;
        for (std::size_t j = i + 1; j < w.size(); ++j) {
            if (!h.odd(w[j]))
                continue;
            if (w[i] == w[j])
                return 0;
            if (w[i] > w[j])
                ++inversions;
        }
    }
    return inversions % 2 == 0 ? 1 : -1;
}

int word_degree(const CurveCohomology& h, const Word& w) {
    int d = 0;
    for (int l : w)
        d += h.degree(l);
    return d;
}

std::pair<int, Word> permute_word(const CurveCohomology& h, const std::vector<int>& perm, const Word& w) {
    Word out(w.size());
    int inversions = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        out[static_cast<std::size_t>(perm[i])] = w[i];
        if (!h.odd(w[i]))
            continue;
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (h.odd(w[j]) && perm[i] > perm[j])
                ++inversions;
    }
    return {inversions % 2 == 0 ? 1 : -1, std::move(out)};
}

namespace {

void add_to(TensorVector& t, const Word& w, const Rational& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = t.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            t.erase(it);
    }
}

void add_to(InvariantElement& t, Word&& w, const Rational& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = t.try_emplace(std::move(w), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            t.erase(it);
    }
}

bool is_all_zero(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q.is_zero(); });
}

std::vector<int> identity_perm(std::size_t n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

}  // namespace

TensorVector symmetrize(const CurveCohomology& h, const Word& w) {
    TensorVector out;
    std::vector<int> perm = identity_perm(w.size());
    do {
        auto [s, image] = permute_word(h, perm, w);
        add_to(out, image, Rational(s));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

TensorVector symmetrize(const CurveCohomology& h, const TensorVector& v) {
    TensorVector out;
    for (const auto& [w, c] : v)
        for (const auto& [image, s] : symmetrize(h, w))
            add_to(out, image, c * s);
    return out;
}

TensorVector tensor_product(const CurveCohomology& h, const TensorVector& x, const TensorVector& y) {
    TensorVector out;
    for (const auto& [u, cu] : x)
        for (const auto& [v, cv] : y) {
            if (u.size() != v.size())
                throw std::invalid_argument("tensor_product: words of different length");
            Word w(u.size());
            int sign = 1;
            int passed = 0;  // total degree of v_k for k < i
            for (std::size_t i = 0; i < u.size(); ++i) {
                auto [s, l] = h.product(u[i], v[i]);
                if (s == 0) {
                    sign = 0;
                    break;
                }
                sign *= s;
                if ((h.degree(u[i]) * passed) % 2 == 1)
                    sign = -sign;
                passed += h.degree(v[i]);
                w[i] = l;
            }
            if (sign != 0)
                add_to(out, w, cu * cv * Rational(sign));
        }
    return out;
}

InvariantModel InvariantModel::build(int genus, int power, std::uint64_t budget) {
    if (genus < 0 || power < 0)
        throw std::invalid_argument("invariant model needs g, n >= 0");
    InvariantModel m;
    m.h_ = CurveCohomology{genus};
    m.power_ = power;
    const auto base = static_cast<std::uint64_t>(m.h_.letter_count());
    std::uint64_t words = 1;
    for (int i = 0; i < power; ++i) {
        if (words > budget / base + 1) {
            words = budget + 1;
            break;
        }
        words *= base;
    }
    if (words > budget)
        throw ResourceError("invariant oracle: (2g+2)^n = " + std::to_string(base) + "^" + std::to_string(power) +
                            " words exceeds the budget of " + std::to_string(budget));

    std::vector<std::set<Word>> canon(static_cast<std::size_t>(2 * power + 1));
    Word w(static_cast<std::size_t>(power));
    for (std::uint64_t code = 0; code < words; ++code) {
        std::uint64_t c = code;
        for (int i = power - 1; i >= 0; --i) {
            w[static_cast<std::size_t>(i)] = static_cast<int>(c % base);
            c /= base;
        }
        if (sorting_sign(m.h_, w) == 0)
            continue;
        Word sorted = w;
        std::sort(sorted.begin(), sorted.end());
        canon[static_cast<std::size_t>(word_degree(m.h_, sorted))].insert(std::move(sorted));
    }
    for (auto& s : canon)
        m.basis_.emplace_back(s.begin(), s.end());
    return m;
}

std::vector<std::size_t> InvariantModel::betti() const {
    std::vector<std::size_t> b;
    for (const auto& v : basis_)
        b.push_back(v.size());
    return b;
}

const std::vector<Word>& InvariantModel::orbit_basis(int d) const {
    static const std::vector<Word> empty;
    if (d < 0 || d >= static_cast<int>(basis_.size()))
        return empty;
    return basis_[static_cast<std::size_t>(d)];
}

InvariantElement InvariantModel::unit() const {
    return InvariantElement{{Word(static_cast<std::size_t>(power_), 0), Rational(1)}};
}

Rational InvariantModel::word_coefficient(const InvariantElement& v, const Word& w) const {
    int s = sorting_sign(h_, w);
    if (s == 0)
        return Rational(0);
    Word sorted = w;
    std::sort(sorted.begin(), sorted.end());
    auto it = v.find(sorted);
    if (it == v.end())
        return Rational(0);
    return s > 0 ? it->second : -it->second;
}

TensorVector InvariantModel::expand(const InvariantElement& v) const {
    TensorVector out;
    for (const auto& [c, coeff] : v) {
        Word w = c;
        do {
            add_to(out, w, coeff * Rational(sorting_sign(h_, w)));
        } while (std::next_permutation(w.begin(), w.end()));
    }
    return out;
}

InvariantElement InvariantModel::from_tensor(const TensorVector& t) const {
    InvariantElement out;
    for (const auto& [w, c] : t)
        if (std::is_sorted(w.begin(), w.end()) && sorting_sign(h_, w) != 0) {
            Word key = w;
            add_to(out, std::move(key), c);
        }
    return out;
}

bool InvariantModel::is_invariant(const TensorVector& t) const {
    for (int i = 0; i + 1 < power_; ++i) {
        std::vector<int> swap = identity_perm(static_cast<std::size_t>(power_));
        std::swap(swap[static_cast<std::size_t>(i)], swap[static_cast<std::size_t>(i + 1)]);
        TensorVector moved;
        for (const auto& [w, c] : t) {
            auto [s, image] = permute_word(h_, swap, w);
            add_to(moved, image, c * Rational(s));
        }
        if (moved != t)
            return false;
    }
    return true;
}

InvariantElement InvariantModel::one_slot_times(int letter, const InvariantElement& v) const {
    std::set<int> degrees;
    for (const auto& [w, c] : v)
        degrees.insert(word_degree(h_, w) + h_.degree(letter));
    InvariantElement out;
    for (int d : degrees)
        for (const Word& target : orbit_basis(d)) {
            Rational total;
            int before = 0;  // degree of target letters left of slot j
            for (std::size_t j = 0; j < target.size(); ++j) {
                for (int l = 0; l < h_.letter_count(); ++l) {
                    auto [lambda, r] = h_.product(letter, l);
                    if (lambda == 0 || r != target[j])
                        continue;
                    Word source = target;
                    source[j] = l;
                    Rational c = word_coefficient(v, source);
                    if (c.is_zero())
                        continue;
                    int sign = lambda;
                    if ((h_.degree(letter) * before) % 2 == 1)
                        sign = -sign;
                    total += c * Rational(sign);
                }
                before += h_.degree(target[j]);
            }
            Word key = target;
            add_to(out, std::move(key), total);
        }
    return out;
}

namespace {

struct ProductSearch {
    const CurveCohomology& h;
    const InvariantModel& model;
    const InvariantElement& x;
    const InvariantElement& y;
    const Word& target;
    Word left;
    Word right;
    Rational total;

    void run(std::size_t slot, int left_degree_left, int right_passed, int sign) {
        if (slot == target.size()) {
            if (left_degree_left != 0)
                return;
            Rational cx = model.word_coefficient(x, left);
            if (cx.is_zero())
                return;
            Rational cy = model.word_coefficient(y, right);
            if (cy.is_zero())
                return;
            total += cx * cy * Rational(sign);
            return;
        }
        for (int l = 0; l < h.letter_count(); ++l) {
            const int dl = h.degree(l);
            if (dl > left_degree_left)
                continue;
            for (int r = 0; r < h.letter_count(); ++r) {
                auto [lambda, p] = h.product(l, r);
                if (lambda == 0 || p != target[slot])
                    continue;
                int s = sign * lambda;
                if ((dl * right_passed) % 2 == 1)
                    s = -s;
                left[slot] = l;
                right[slot] = r;
                run(slot + 1, left_degree_left - dl, right_passed + h.degree(r), s);
            }
        }
    }
};

std::map<int, InvariantElement> split_by_degree(const CurveCohomology& h, const InvariantElement& v) {
    std::map<int, InvariantElement> parts;
    for (const auto& [w, c] : v)
        parts[word_degree(h, w)].emplace(w, c);
    return parts;
}

}  // namespace

InvariantElement InvariantModel::product(const InvariantElement& x, const InvariantElement& y) const {
    InvariantElement out;
    auto xs = split_by_degree(h_, x);
    auto ys = split_by_degree(h_, y);
    for (const auto& [dx, px] : xs)
        for (const auto& [dy, py] : ys)
            for (const Word& target : orbit_basis(dx + dy)) {
                ProductSearch search{h_, *this, px, py, target, Word(target.size()), Word(target.size()), Rational(0)};
                search.run(0, dx, 0, 1);
                Word key = target;
                add_to(out, std::move(key), search.total);
            }
    return out;
}

Vector InvariantModel::coordinates(const InvariantElement& v, int d) const {
    const auto& basis = orbit_basis(d);
    Vector out(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        auto it = v.find(basis[i]);
        if (it != v.end())
            out[i] = it->second;
    }
    return out;
}

InvariantElement InvariantModel::from_coordinates(int d, const Vector& coords) const {
    const auto& basis = orbit_basis(d);
    if (coords.size() != basis.size())
        throw std::invalid_argument("InvariantModel::from_coordinates: size mismatch");
    InvariantElement out;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        Word key = basis[i];
        add_to(out, std::move(key), coords[i]);
    }
    return out;
}

InvariantElement InvariantModel::transfer_from(const InvariantModel& smaller, const InvariantElement& x) const {
    if (smaller.genus() != genus() || smaller.power() > power_)
        throw std::invalid_argument("transfer_from: incompatible models");
    const auto m = static_cast<std::size_t>(smaller.power());
    std::set<int> degrees;
    for (const auto& [w, c] : x)
        degrees.insert(word_degree(h_, w));
    InvariantElement out;
    for (int d : degrees)
        for (const Word& target : orbit_basis(d)) {
            Rational total;
            std::vector<int> perm = identity_perm(target.size());
            do {
                // sigma . u = +-target with u_i = target[sigma(i)].
                Word u(target.size());
                for (std::size_t i = 0; i < u.size(); ++i)
                    u[i] = target[static_cast<std::size_t>(perm[i])];
                bool padded = std::all_of(u.begin() + static_cast<std::ptrdiff_t>(m), u.end(), [](int l) { return l == 0; });
                if (!padded)
                    continue;
                Rational c = smaller.word_coefficient(x, Word(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(m)));
                if (c.is_zero())
                    continue;
                auto [s, image] = permute_word(h_, perm, u);
                total += c * Rational(s);
            } while (std::next_permutation(perm.begin(), perm.end()));
            Word key = target;
            add_to(out, std::move(key), total);
        }
    return out;
}

std::vector<std::size_t> invariant_betti(int genus, int power, std::uint64_t budget) {
    return InvariantModel::build(genus, power, budget).betti();
}

std::vector<std::int64_t> macdonald_poincare(int genus, int power) {
    if (genus < 0 || power < 0)
        throw std::invalid_argument("macdonald_poincare needs g, n >= 0");
    const auto n = static_cast<std::size_t>(power);
    const std::size_t width = 2 * n + 1;
    // series[k] is the x-polynomial multiplying t^k.
    std::vector<std::vector<std::int64_t>> series(n + 1, std::vector<std::int64_t>(width, 0));
    for (std::size_t k = 0; k <= n && k <= static_cast<std::size_t>(2 * genus); ++k)
        series[k][k] = std::stoll(binomial(2 * genus, static_cast<long>(k)).numerator_string());
    // Multiply by 1/(1-t): running sums in t.
    for (std::size_t k = 1; k <= n; ++k)
        for (std::size_t e = 0; e < width; ++e)
            series[k][e] += series[k - 1][e];
    // Multiply by 1/(1-x^2 t): s_k <- s_k + x^2 s_{k-1} (new).
    for (std::size_t k = 1; k <= n; ++k)
        for (std::size_t e = 2; e < width; ++e)
            series[k][e] += series[k - 1][e - 2];
    return series[n];
}

InvariantElement comparison_image(const InvariantModel& model, const std::vector<int>& signs, const Element& r) {
    if (r.genus() != model.genus())
        throw AmbientMismatch("comparison_image: genus mismatch");
    const int point = model.curve().point();
    InvariantElement out;
    for (const auto& [mono, coeff] : r.terms()) {
        InvariantElement v = model.unit();
        for (unsigned p = 0; p < mono.z_exponent; ++p)
            v = model.one_slot_times(point, v);
        auto idx = mono.indices();
        Rational c = coeff;
        for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
            v = model.one_slot_times(*it, v);
            if (signs[static_cast<std::size_t>(*it - 1)] < 0)
                c = -c;
        }
        for (auto& [w, q] : v) {
            Word key = w;
            add_to(out, std::move(key), q * c);
        }
    }
    return out;
}

namespace {

std::string convention_name(int genus, const std::vector<int>& signs) {
    std::ostringstream os;
    for (int i = 1; i <= 2 * genus; ++i) {
        if (i > 1)
            os << ", ";
        os << "e" << i << "->" << (signs[static_cast<std::size_t>(i - 1)] > 0 ? "+" : "-")
           << (i <= genus ? "a" + std::to_string(i) : "b" + std::to_string(i - genus));
    }
    os << (genus > 0 ? ", " : "") << "z->+p";
    return os.str();
}

std::vector<std::vector<int>> candidate_conventions(int genus) {
    const auto n = static_cast<std::size_t>(2 * genus);
    std::vector<std::vector<int>> out;
    for (int a : {1, -1})
        for (int b : {1, -1}) {
            std::vector<int> s(n);
            for (std::size_t i = 0; i < n; ++i)
                s[i] = static_cast<int>(i) < genus ? a : b;
            out.push_back(s);
        }
    if (genus <= 3) {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> s(n);
            for (std::size_t i = 0; i < n; ++i)
                s[i] = (mask >> i) & 1u ? -1 : 1;
            if (std::find(out.begin(), out.end(), s) == out.end())
                out.push_back(s);
        }
    }
    return out;
}

struct Attempt {
    bool kills_ideal = true;
    bool bijective = true;
    std::vector<std::string> witnesses;
    std::vector<Matrix> transport;
};

Attempt try_convention(const SymPowAlgebra& alg, const InvariantModel& model, const std::vector<int>& signs) {
    Attempt a;
    const int g = alg.genus();
    for (int d = 0; d <= alg.top_degree(); ++d) {
        DegreeBasis ambient = degree_basis(g, d);
        const auto& orbit = model.orbit_basis(d);
        Matrix phi(orbit.size(), ambient.size());
        for (std::size_t j = 0; j < ambient.size(); ++j) {
            Vector col = model.coordinates(comparison_image(model, signs, Element::monomial(g, ambient.monomials[j])), d);
            for (std::size_t i = 0; i < col.size(); ++i)
                phi(i, j) = col[i];
        }
        const QuotientComponent& comp = alg.presentation().component(d);
        for (const auto& row : comp.ideal.basis()) {
            if (!is_all_zero(phi.apply(row))) {
                a.kills_ideal = false;
                a.witnesses.push_back("degree " + std::to_string(d) + ": ideal element " +
                                      to_debug_string(ambient.element(row)) + " has nonzero image");
                break;
            }
        }
        Matrix transport(orbit.size(), comp.normal_form_positions.size());
        for (std::size_t j = 0; j < comp.normal_form_positions.size(); ++j)
            for (std::size_t i = 0; i < orbit.size(); ++i)
                transport(i, j) = phi(i, comp.normal_form_positions[j]);
        const bool square = transport.rows() == transport.cols();
        if (!square || transport.rank() != orbit.size()) {
            a.bijective = false;
            a.witnesses.push_back("degree " + std::to_string(d) + ": quotient dimension " +
                                  std::to_string(transport.cols()) + ", invariant dimension " +
                                  std::to_string(orbit.size()) + ", rank " + std::to_string(transport.rank()));
        }
        a.transport.push_back(std::move(transport));
    }
    return a;
}

}  // namespace

ComparisonReport comparison_map(const SymPowAlgebra& alg, const InvariantModel& model) {
    if (alg.genus() != model.genus() || alg.power() != model.power())
        throw std::invalid_argument("comparison_map: algebra and invariant model differ in (g, n)");
    ComparisonReport report;
    report.genus = alg.genus();
    report.power = alg.power();
    report.presentation_dims = alg.betti();
    report.invariant_dims = model.betti();

    Attempt chosen;
    bool found = false;
    for (const auto& signs : candidate_conventions(alg.genus())) {
        Attempt a = try_convention(alg, model, signs);
        if (!found && report.witnesses.empty())
            report.witnesses = a.witnesses;
        if (a.kills_ideal && a.bijective) {
            chosen = std::move(a);
            report.generator_signs = signs;
            report.convention = convention_name(alg.genus(), signs);
            found = true;
            break;
        }
    }
    if (!found) {
        report.convention = "none";
        return report;
    }
    report.kills_ideal = true;
    report.bijective = true;
    report.witnesses = chosen.witnesses;
    report.transport = std::move(chosen.transport);

    // Products of normal-form basis classes, sampled in low total degree.
    report.multiplicative = true;
    const int n = alg.power();
    const int g = alg.genus();
    std::size_t checked = 0;
    const std::size_t cap = 48;
    for (int d1 = 1; d1 <= 2 * n && checked < cap; ++d1)
        for (int d2 = d1; d1 + d2 <= std::min(2 * n, n + 2) && checked < cap; ++d2) {
            DegreeBasis b1 = alg.basis(d1);
            DegreeBasis b2 = alg.basis(d2);
            for (std::size_t i = 0; i < std::min<std::size_t>(b1.size(), 3) && checked < cap; ++i)
                for (std::size_t j = 0; j < std::min<std::size_t>(b2.size(), 3) && checked < cap; ++j) {
                    Element x = Element::monomial(g, b1.monomials[i]);
                    Element y = Element::monomial(g, b2.monomials[j]);
                    InvariantElement lhs = model.product(comparison_image(model, report.generator_signs, x),
                                                         comparison_image(model, report.generator_signs, y));
                    InvariantElement rhs = comparison_image(model, report.generator_signs, multiply(x, y));
                    ++checked;
                    if (lhs != rhs) {
                        report.multiplicative = false;
                        report.witnesses.push_back("product of " + to_debug_string(x) + " and " + to_debug_string(y) +
                                                   " not respected");
                    }
                }
        }
    return report;
}

}  // namespace symcurve
