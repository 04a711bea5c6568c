#include <doctest.h>

#include <random>

#include "macq/symlaurent.hpp"
#include "oracle.hpp"

using namespace macq;

namespace {

const QRat q = QRat::q_power(1);
const QRat one(1);

LaurentPoly x(std::size_t n, std::size_t i)
{
    return LaurentPoly::variable(n, i);
}

LaurentPoly mono(ExpVec e, const QRat& c = QRat(1))
{
    const auto n = e.size();
    return LaurentPoly::monomial(n, std::move(e), c);
}

LaurentPoly random_symmetric(std::mt19937_64& rng, int n)
{
    LaurentPoly f(static_cast<std::size_t>(n));
    for (int w = 0; w <= 2; ++w) {
        for (const auto& p : enumerate_partitions(w, n)) {
            if (rng() % 2 == 0) {
                f += monomial_symmetric(p, n) * oracle::random_qrat(rng, 2);
            }
        }
    }
    return f;
}

} // namespace

TEST_CASE("lp_arith examples")
{
    const auto x1 = x(2, 0);
    const auto x2 = x(2, 1);
    CHECK(lp_arith(x1 + x2, x1 - x2, LaurentOp::mul) == x1 * x1 - x2 * x2);
    const auto f = x1 * x1 + x2 * QRat(3);
    CHECK(lp_arith(f, LaurentPoly::constant(2, one), LaurentOp::mul) == f);
    const auto a = LaurentPoly::constant(2, one) - mono({1, -1});
    const auto b = LaurentPoly::constant(2, one) - mono({-1, 1});
    const auto expected = LaurentPoly::constant(2, QRat(2)) - mono({1, -1}) - mono({-1, 1});
    CHECK(lp_arith(a, b, LaurentOp::mul) == expected);
    CHECK(lp_scalar_mul(x1, QRat()).is_zero());
    CHECK_THROWS_AS(lp_arith(x(2, 0), x(3, 0), LaurentOp::add), std::invalid_argument);
    CHECK((x1 - x1).size() == 0);
}

TEST_CASE("bar examples")
{
    CHECK(bar(mono({2, 1})) == mono({-2, -1}));
    CHECK(bar(LaurentPoly::constant(2, q)) == LaurentPoly::constant(2, q));
}

TEST_CASE("bar is an involution, keeps the constant term, and is multiplicative")
{
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 25; ++trial) {
        const auto f = oracle::random_laurent(rng, 3, 6, -2, 2);
        const auto g = oracle::random_laurent(rng, 3, 6, -2, 2);
        CHECK(bar(bar(f)) == f);
        CHECK(constant_term(bar(f)) == constant_term(f));
        CHECK(bar(f * g) == bar(f) * bar(g));
    }
}

TEST_CASE("constant_term examples")
{
    const auto f = LaurentPoly::constant(2, QRat(2)) - mono({1, -1}) - mono({-1, 1});
    CHECK(constant_term(f) == QRat(2));
    CHECK(constant_term(mono({1, -1})).is_zero());
    CHECK(constant_term(LaurentPoly::constant(1, QRat(7))) == QRat(7));
}

TEST_CASE("monomial_symmetric examples")
{
    CHECK(monomial_symmetric(Partition({1}), 2) == x(2, 0) + x(2, 1));
    CHECK(monomial_symmetric(Partition({1, 1}), 2) == mono({1, 1}));
    CHECK(monomial_symmetric(Partition({2, 1}), 2) == mono({2, 1}) + mono({1, 2}));
    CHECK(monomial_symmetric(Partition({2, 1}), 3).size() == 6);
    CHECK(monomial_symmetric(Partition(), 3) == LaurentPoly::constant(3, one));
    CHECK_THROWS_AS(monomial_symmetric(Partition({1, 1, 1}), 2), std::invalid_argument);
}

TEST_CASE("delta_weight examples")
{
    const auto d21 = delta_weight(2, 1);
    CHECK(d21 == LaurentPoly::constant(2, QRat(2)) - mono({1, -1}) - mono({-1, 1}));
    for (int k = 1; k <= 3; ++k) {
        CHECK(delta_weight(1, k) == LaurentPoly::constant(1, one));
    }
    CHECK(constant_term(delta_weight(2, 2)) == QRat(2) + q * QRat(2) + q * q * QRat(2));
    CHECK_THROWS_AS(delta_weight(0, 1), std::invalid_argument);
}

TEST_CASE("delta_weight matches the ordered-map expansion")
{
    for (int n = 1; n <= 3; ++n) {
        for (int k = 1; k <= 2; ++k) {
            CHECK(oracle::from(delta_weight(n, k)) == oracle::delta(n, k));
        }
    }
}

TEST_CASE("delta is homogeneous of degree zero and bar-invariant")
{
    for (int n = 1; n <= 3; ++n) {
        for (int k = 1; k <= 3; ++k) {
            const auto d = delta_weight(n, k);
            for (const auto& [e, c] : d.terms()) {
                int sum = 0;
                for (int v : e) {
                    sum += v;
                }
                CHECK(sum == 0);
            }
            CHECK(bar(d) == d);
        }
    }
}

TEST_CASE("inner_product examples")
{
    CHECK(inner_product(LaurentPoly::constant(2, one), LaurentPoly::constant(2, one), 2, 1) == one);
    CHECK(inner_product(LaurentPoly::constant(2, one), LaurentPoly::constant(2, one), 2, 2) == one + q + q * q);
    const auto m1 = monomial_symmetric(Partition({1}), 2);
    CHECK(inner_product(m1, m1, 2, 1) == one);
}

TEST_CASE("inner_product agrees with the full expansion of f bar(g) Delta")
{
    std::mt19937_64 rng(3);
    for (int n = 2; n <= 3; ++n) {
        for (int k = 1; k <= 2; ++k) {
            const auto delta = delta_weight(n, k);
            for (int trial = 0; trial < 4; ++trial) {
                const auto f = oracle::random_laurent(rng, static_cast<std::size_t>(n), 4, -1, 2);
                const auto g = oracle::random_laurent(rng, static_cast<std::size_t>(n), 4, -1, 2);
                CHECK(inner_product(f, g, delta) == oracle::inner(f, g, n, k));
            }
        }
    }
}

TEST_CASE("inner_product is symmetric on symmetric polynomials")
{
    std::mt19937_64 rng(19);
    for (int n = 2; n <= 3; ++n) {
        const auto delta = delta_weight(n, 2);
        for (int trial = 0; trial < 6; ++trial) {
            const auto f = random_symmetric(rng, n);
            const auto g = random_symmetric(rng, n);
            CHECK(inner_product(f, g, delta) == inner_product(g, f, delta));
        }
    }
}

TEST_CASE("homogeneous inputs of different degree are orthogonal")
{
    const auto m2 = monomial_symmetric(Partition({2}), 3);
    const auto m1 = monomial_symmetric(Partition({1}), 3);
    CHECK(inner_product(m2, m1, 3, 2).is_zero());
    CHECK(oracle::inner(m2, m1, 3, 2).is_zero());
}

TEST_CASE("kernel_truncated examples")
{
    for (int k = 1; k <= 3; ++k) {
        const auto s = kernel_truncated(2, 3, k, 0);
        CHECK(s.poly == LaurentPoly::constant(5, one));
    }
    const auto geo = kernel_truncated(1, 1, 1, 2);
    CHECK(geo.poly == LaurentPoly::constant(2, one) + mono({1, 1}) + mono({2, 2}));
    const auto k2 = kernel_truncated(1, 1, 2, 1);
    CHECK(k2.poly == LaurentPoly::constant(2, one) + mono({1, 1}, one + q));
}

TEST_CASE("kernel series inverts the finite product up to the cap")
{
    CHECK(kernel_self_check(1, 1, 3, 5));
    CHECK(kernel_self_check(2, 2, 2, 3));
    CHECK(kernel_self_check(3, 2, 2, 2));
    const auto s = kernel_truncated(2, 2, 2, 3);
    for (const auto& [e, c] : s.poly.terms()) {
        CHECK(s.y_degree(e) <= 3);
    }
}

TEST_CASE("LaurentPoly JSON is sorted graded-lex and round-trips")
{
    const auto f = mono({1, -1}, q) + mono({2, 0}) + LaurentPoly::constant(2, QRat(3));
    const nlohmann::json j = f;
    CHECK(j["n"] == 2);
    CHECK(j["terms"][0]["e"] == nlohmann::json::array({2, 0}));
    CHECK(j["terms"][1]["e"] == nlohmann::json::array({1, -1}));
    CHECK(j["terms"][2]["e"] == nlohmann::json::array({0, 0}));
    CHECK(j.get<LaurentPoly>() == f);

    std::mt19937_64 rng(8);
    const auto g = oracle::random_laurent(rng, 3, 10, -3, 3);
    CHECK(nlohmann::json(g).get<LaurentPoly>() == g);
}

TEST_CASE("evaluation and embedding")
{
    const auto f = mono({2, -1}, q) + LaurentPoly::constant(2, one);
    CHECK(f.evaluate({QRat(2), QRat(4)}) == q + one);
    const auto e = f.embedded(3, {2, 0});
    CHECK(e == mono({-1, 0, 2}, q) + LaurentPoly::constant(3, one));
    CHECK(f.swapped(0, 1) == mono({-1, 2}, q) + LaurentPoly::constant(2, one));
}
