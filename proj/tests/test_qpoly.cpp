#include <doctest.h>

#include <limits>
#include <random>

#include "dqsym/qpoly.hpp"

using dqsym::FactoredCoeff;
using dqsym::QPoly;

namespace {

const QPoly q = QPoly::q_power(1);

QPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> len(0, 4), c(-5, 5);
    std::vector<std::int64_t> k(static_cast<std::size_t>(len(rng)));
    for (auto& x : k) x = c(rng);
    return QPoly::from_coeffs(k);
}

}  // namespace

TEST_CASE("canonical form drops trailing zeros") {
    CHECK(QPoly::from_coeffs({1, -1, 0, 0}).coeffs() == std::vector<std::int64_t>{1, -1});
    CHECK(QPoly::from_coeffs({0, 0}).is_zero());
    CHECK(QPoly(0).is_zero());
    CHECK(QPoly().degree() == -1);
    CHECK(QPoly::q_power(3, -2).coeffs() == std::vector<std::int64_t>{0, 0, 0, -2});
    CHECK(QPoly::q_power(2, 0).is_zero());
}

TEST_CASE("arithmetic") {
    CHECK((1 - q) * (1 - q) == QPoly::from_coeffs({1, -2, 1}));
    CHECK(q * (q - 1) == QPoly::from_coeffs({0, -1, 1}));
    CHECK((1 - q) + q == QPoly(1));
    CHECK(((1 - q) - (1 - q)).is_zero());
    CHECK(dqsym::pow(1 - q, 3) == QPoly::from_coeffs({1, -3, 3, -1}));
    CHECK(dqsym::pow(q, 0) == QPoly(1));
    CHECK(dqsym::scale(1 - q, -2) == QPoly::from_coeffs({-2, 2}));
    CHECK(dqsym::eval_int((1 - q) * (1 - q), 1) == 0);
    CHECK(dqsym::eval_int(QPoly::from_coeffs({1, 2, 3}), 2) == 17);
    CHECK(QPoly::from_coeffs({4, 0, -1}).coeff(2) == -1);
    CHECK(QPoly::from_coeffs({4, 0, -1}).coeff(7) == 0);
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(20240601);
    for (int trial = 0; trial < 500; ++trial) {
        const QPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == QPoly());
        CHECK(a * QPoly(1) == a);
        CHECK((a * QPoly()).is_zero());
        CHECK(dqsym::add(a, b) == a + b);
        CHECK(dqsym::mul(a, b) == a * b);
        CHECK(dqsym::neg(a) == -a);
    }
}

TEST_CASE("overflow is detected") {
    const QPoly big(std::numeric_limits<std::int64_t>::max());
    CHECK_THROWS_AS(big + QPoly(1), dqsym::OverflowError);
    CHECK_THROWS_AS(big * QPoly(2), dqsym::OverflowError);
    CHECK_THROWS_AS(-QPoly(std::numeric_limits<std::int64_t>::min()), dqsym::OverflowError);
    CHECK_THROWS_AS(dqsym::eval_int(big * q, 2), dqsym::OverflowError);
    CHECK_NOTHROW(big + QPoly(-1));
}

TEST_CASE("text rendering") {
    CHECK(QPoly().to_string() == "0");
    CHECK(QPoly(1).to_string() == "1");
    CHECK(QPoly(-1).to_string() == "-1");
    CHECK((1 - q).to_string() == "1-q");
    CHECK((q * q - q).to_string() == "-q+q^2");
    CHECK(QPoly::q_power(2).to_string() == "q^2");
    CHECK(QPoly::from_coeffs({3, 0, -2}).to_string() == "3-2q^2");
}

TEST_CASE("factored rendering") {
    CHECK(dqsym::to_factored_string(1 - q) == "1-q");
    CHECK(dqsym::to_factored_string(-q * (1 - q)) == "-q(1-q)");
    CHECK(dqsym::to_factored_string((1 - q) * (1 - q)) == "(1-q)^2");
    CHECK(dqsym::to_factored_string(q * q * (1 - q)) == "q^2(1-q)");
    CHECK(dqsym::to_factored_string(-q * (1 - q) * (1 - q)) == "-q(1-q)^2");
    CHECK(dqsym::to_factored_string(QPoly(-1)) == "-1");
    CHECK(dqsym::to_factored_string(-q) == "-q");
    CHECK(dqsym::to_factored_string(QPoly(1)) == "1");
    // Not of the form +-q^a (1-q)^b.
    CHECK(dqsym::to_factored_string(1 + q) == "1+q");
}

TEST_CASE("try_factor round trip") {
    for (int sign : {1, -1})
        for (int a = 0; a <= 6; ++a)
            for (int b = 0; b <= 6; ++b) {
                const FactoredCoeff f{sign, a, b};
                const QPoly p = dqsym::expand(f);
                CHECK(p == QPoly(sign) * dqsym::pow(-q, a) * dqsym::pow(1 - q, b));
                const auto back = dqsym::try_factor(p);
                REQUIRE(back.has_value());
                CHECK(*back == f);
            }
    CHECK_FALSE(dqsym::try_factor(QPoly()).has_value());
    CHECK_FALSE(dqsym::try_factor(1 + q).has_value());
    CHECK_FALSE(dqsym::try_factor(QPoly(2)).has_value());
    CHECK_FALSE(dqsym::try_factor(1 - 2 * q).has_value());
}
