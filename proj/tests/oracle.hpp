// Brute-force reference arithmetic for tests. Deliberately shares nothing with
// LaurentPoly beyond the scalar type: products are formed term by term in an
// ordered map and constant terms are read off the full expansion.
#ifndef MACQ_TESTS_ORACLE_HPP
#define MACQ_TESTS_ORACLE_HPP

#include <map>
#include <random>
#include <vector>

#include "macq/qfield.hpp"
#include "macq/symlaurent.hpp"

namespace oracle {

using macq::QRat;
using Mono = std::vector<int>;
using Poly = std::map<Mono, QRat>;

inline void add(Poly& p, const Mono& m, const QRat& c)
{
    QRat& slot = p[m];
    slot += c;
    if (slot.is_zero()) {
        p.erase(m);
    }
}

inline Poly mul(const Poly& a, const Poly& b)
{
    Poly out;
    for (const auto& [ma, ca] : a) {
        for (const auto& [mb, cb] : b) {
            Mono m(ma.size());
            for (std::size_t i = 0; i < m.size(); ++i) {
                m[i] = ma[i] + mb[i];
            }
            add(out, m, ca * cb);
        }
    }
    return out;
}

inline Poly from(const macq::LaurentPoly& f)
{
    Poly p;
    for (const auto& [e, c] : f.terms()) {
        p[e] = c;
    }
    return p;
}

inline Poly bar(const Poly& f)
{
    Poly p;
    for (const auto& [e, c] : f) {
        Mono m(e.size());
        for (std::size_t i = 0; i < m.size(); ++i) {
            m[i] = -e[i];
        }
        p[m] = c;
    }
    return p;
}

inline QRat constant_term(const Poly& f, std::size_t n)
{
    auto it = f.find(Mono(n, 0));
    return it == f.end() ? QRat() : it->second;
}

/// prod_{i != j} prod_{s < k} (1 - q^s x_i / x_j), multiplied out factor by factor.
inline Poly delta(int n, int k)
{
    const auto nv = static_cast<std::size_t>(n);
    Poly acc{{Mono(nv, 0), QRat(1)}};
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) {
                continue;
            }
            for (int s = 0; s < k; ++s) {
                Mono ratio(nv, 0);
                ratio[static_cast<std::size_t>(i)] = 1;
                ratio[static_cast<std::size_t>(j)] = -1;
                Poly factor{{Mono(nv, 0), QRat(1)}};
                add(factor, ratio, -QRat::q_power(s));
                acc = mul(acc, factor);
            }
        }
    }
    return acc;
}

inline QRat factorial(int n)
{
    QRat f(1);
    for (int i = 2; i <= n; ++i) {
        f *= QRat(i);
    }
    return f;
}

/// [f bar(g) Delta]_1 / n! by full expansion.
inline QRat inner(const macq::LaurentPoly& f, const macq::LaurentPoly& g, int n, int k)
{
    const Poly prod = mul(mul(from(f), bar(from(g))), delta(n, k));
    return constant_term(prod, static_cast<std::size_t>(n)) / factorial(n);
}

/// Random element of Q(q): ratio of small random polynomials, never zero.
inline QRat random_qrat(std::mt19937_64& rng, int max_degree = 3)
{
    auto poly = [&](bool nonzero) {
        std::vector<macq::BigRat> c;
        const int deg = static_cast<int>(rng() % static_cast<unsigned>(max_degree + 1));
        for (int i = 0; i <= deg; ++i) {
            const long num = static_cast<long>(rng() % 11) - 5;
            const long den = static_cast<long>(rng() % 4) + 1;
            c.emplace_back(num, den);
        }
        macq::QPoly p(c);
        if (nonzero && p.is_zero()) {
            p = macq::QPoly::constant(1);
        }
        return p;
    };
    macq::QPoly num = poly(true);
    macq::QPoly den = poly(true);
    return QRat(num, den);
}

/// Random Laurent polynomial with exponents in [lo, hi].
inline macq::LaurentPoly random_laurent(std::mt19937_64& rng, std::size_t n, int terms, int lo, int hi)
{
    macq::LaurentPoly f(n);
    for (int t = 0; t < terms; ++t) {
        macq::ExpVec e(n);
        for (auto& v : e) {
            v = lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
        }
        f.add_term(e, random_qrat(rng, 2));
    }
    return f;
}

} // namespace oracle

#endif
