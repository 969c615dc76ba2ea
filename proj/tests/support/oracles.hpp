#pragma once

// Reference computations used only by the tests. Each one follows the
// definition directly and shares no code path with the library routine it
// is compared against.

#include "latticecf/graphs.hpp"
#include "latticecf/rational.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

using latticecf::Integer;
using latticecf::IntSeq;
using latticecf::Rational;

// Z^{+-} by the defining recursion on the front of the sequence.
inline Integer continuant(bool plus, const IntSeq& x, std::size_t from = 0) {
    if (from >= x.size())
        return 1;
    if (from + 1 == x.size())
        return x[from];
    const Integer head = x[from] * continuant(plus, x, from + 1);
    const Integer tail = continuant(plus, x, from + 2);
    return plus ? Integer(head + tail) : Integer(head - tail);
}

// Folds with Rational arithmetic; nullopt when a tail vanishes.
inline std::optional<Rational> eval(bool plus, const IntSeq& x) {
    Rational v = x.back();
    for (std::size_t k = x.size() - 1; k-- > 0;) {
        if (v == Rational(0))
            return std::nullopt;
        v = plus ? Rational(x[k]) + v.reciprocal() : Rational(x[k]) - v.reciprocal();
    }
    return v;
}

inline IntSeq expand(bool plus, Rational x) {
    IntSeq out;
    while (true) {
        const Integer a = plus ? x.floor() : x.ceil();
        out.push_back(a);
        const Rational rest = plus ? x - Rational(a) : Rational(a) - x;
        if (rest == Rational(0))
            return out;
        x = rest.reciprocal();
    }
}

// Negative definiteness by symmetric Gaussian elimination over the rationals:
// all pivots must be negative.
inline bool negative_definite(const latticecf::IntMatrix& m) {
    const std::size_t n = m.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = Rational(m[i][j]);
    for (std::size_t k = 0; k < n; ++k) {
        if (!(a[k][k] < Rational(0)))
            return false;
        for (std::size_t i = k + 1; i < n; ++i) {
            const Rational f = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j)
                a[i][j] = a[i][j] - f * a[k][j];
        }
    }
    return true;
}

// Smallest cycle with coefficients in [1, bound] and Z.E_k <= 0 for all k,
// found by exhaustive search; nullopt if none or no unique minimum.
inline std::optional<IntSeq> fundamental_cycle(const latticecf::WeightedDualGraph& g, int bound) {
    const latticecf::IntMatrix m = latticecf::intersection_matrix(g);
    const std::size_t n = g.size();
    std::vector<IntSeq> good;
    IntSeq z(n, Integer(1));
    while (true) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            Integer s = 0;
            for (std::size_t j = 0; j < n; ++j)
                s += z[j] * m[j][i];
            ok = s <= 0;
        }
        if (ok)
            good.push_back(z);
        std::size_t k = 0;
        while (k < n && z[k] == bound) {
            z[k] = 1;
            ++k;
        }
        if (k == n)
            break;
        ++z[k];
    }
    if (good.empty())
        return std::nullopt;
    IntSeq best = good.front();
    for (const auto& c : good)
        for (std::size_t i = 0; i < n; ++i)
            best[i] = std::min(best[i], c[i]);
    if (std::find(good.begin(), good.end(), best) == good.end())
        return std::nullopt;
    return best;
}

// Eventual period of the HJ expansion of a quadratic irrational given as a
// high-precision number: expands `terms` partial quotients and returns the
// last `period` of them.
using Real = boost::multiprecision::cpp_dec_float_100;

inline IntSeq hj_terms(Real x, std::size_t terms) {
    IntSeq out;
    for (std::size_t i = 0; i < terms; ++i) {
        const Real a = ceil(x);
        out.push_back(Integer(a.convert_to<long long>()));
        x = 1 / (a - x);
    }
    return out;
}

// Value of the purely periodic HJ continued fraction [c, c, c, ...]^-.
inline Real periodic_hj_value(const IntSeq& cycle) {
    Real x = 2;
    for (int it = 0; it < 400; ++it) {
        Real v = x;
        for (std::size_t k = cycle.size(); k-- > 0;)
            v = Real(cycle[k].convert_to<long long>()) - 1 / v;
        x = v;
    }
    return x;
}

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(20240531);
    return gen;
}

inline IntSeq random_sequence(std::size_t min_len, std::size_t max_len, int lo, int hi) {
    std::uniform_int_distribution<std::size_t> len(min_len, max_len);
    std::uniform_int_distribution<int> val(lo, hi);
    IntSeq out(len(rng()));
    for (auto& x : out)
        x = val(rng());
    return out;
}

} // namespace oracle
