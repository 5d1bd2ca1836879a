#pragma once

#include "symcurve/gca.hpp"

#include <random>
#include <vector>

namespace testutil {

using symcurve::Element;
using symcurve::Monomial;
using symcurve::Rational;

inline Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 4);
    return Rational(num(rng), den(rng));
}

/// Random homogeneous element of degree d with up to `terms` monomials.
inline Element random_homogeneous(std::mt19937& rng, int genus, int d, int terms = 4) {
    auto basis = symcurve::degree_basis(genus, d);
    Element x(genus);
    if (basis.size() == 0)
        return x;
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    for (int t = 0; t < terms; ++t)
        x += Element::monomial(genus, basis.monomials[pick(rng)], random_rational(rng));
    return x;
}

/// Random element mixing degrees 0..max_degree.
inline Element random_element(std::mt19937& rng, int genus, int max_degree, int terms = 5) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    Element x(genus);
    for (int t = 0; t < terms; ++t)
        x += random_homogeneous(rng, genus, deg(rng), 1);
    return x;
}

/// Sign of the permutation sorting `seq` by adjacent swaps; 0 on a repeat.
inline int bubble_sign(std::vector<int> seq) {
    int sign = 1;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = 0; j + 1 < seq.size() - i; ++j) {
            if (seq[j] == seq[j + 1])
                return 0;
            if (seq[j] > seq[j + 1]) {
                std::swap(seq[j], seq[j + 1]);
                sign = -sign;
            }
        }
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        if (seq[i] == seq[i + 1])
            return 0;
    return sign;
}

inline long long choose(long long n, long long k) {
    if (k < 0 || k > n)
        return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

}  // namespace testutil
