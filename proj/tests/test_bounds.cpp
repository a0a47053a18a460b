#include <doctest.h>

#include <cmath>

#include "stepup/bigint.hpp"
#include "stepup/bounds.hpp"

using namespace stepup;

TEST_SUITE_BEGIN("bounds");

TEST_CASE("big integers render powers of two") {
    CHECK(BigUInt::pow2(0).to_decimal() == "1");
    CHECK(BigUInt::pow2(10).to_decimal() == "1024");
    CHECK(BigUInt::pow2(64).to_decimal() == "18446744073709551616");
    CHECK(BigUInt::from_u64(0).to_decimal() == "0");
    const std::string big = BigUInt::pow2(1024).to_decimal();
    CHECK(big.size() == 309);
    CHECK(big.substr(0, 17) == "17976931348623159");
}

TEST_CASE("tower rendering and parsing round-trip") {
    const TowerExpr t0{0, 10, true};
    CHECK(t0.render() == "10");
    const TowerExpr t1{1, 10, true};
    CHECK(t1.render() == "2^10");
    const TowerExpr t2{2, 10, true};
    CHECK(t2.render() == "2^(2^10)");
    const TowerExpr t3{3, 10, true};
    CHECK(t3.render() == "2^(2^(2^10))");
    const TowerExpr real{1, 2.5, false};
    CHECK(real.render() == "2^2.5");

    for (const TowerExpr& t : {t0, t1, t2, t3, real, TowerExpr{4, 2, true}})
        CHECK(TowerExpr::parse(t.render()) == t);

    CHECK_THROWS_AS(TowerExpr::parse(""), ParseError);
    CHECK_THROWS_AS(TowerExpr::parse("2^(2^10"), ParseError);
    CHECK_THROWS_AS(TowerExpr::parse("abc"), ParseError);
}

TEST_CASE("numeric evaluation respects the digit budget") {
    CHECK(TowerExpr{1, 10, true}.numeric_decimal() == "1024");
    CHECK(TowerExpr{0, 7, true}.numeric_decimal() == "7");
    const auto big = TowerExpr{2, 10, true}.numeric_decimal(); // 2^1024
    REQUIRE(big.has_value());
    CHECK(big->size() == 309);
    CHECK_FALSE(TowerExpr{2, 10, true}.numeric_decimal(100).has_value());
    CHECK_FALSE(TowerExpr{3, 10, true}.numeric_decimal().has_value()); // 2^2^1024
    CHECK_FALSE(TowerExpr{1, 1.5, false}.numeric_decimal().has_value());
}

TEST_CASE("one step-up application") {
    const RamseyStatement s = step_up(3, 4, TowerExpr{0, 10, true});
    CHECK(s.uniformity == 4);
    CHECK(s.colors == 2);
    CHECK(s.clique_size == 7);
    CHECK(s.lower_bound == TowerExpr{1, 10, true});
    CHECK(s.render() == "r_4(7) >= 2^10 = 1024");

    const RamseyStatement small = step_up(3, 3, TowerExpr{0, 1, true});
    CHECK(small.clique_size == 5);
    CHECK(small.render() == "r_4(5) >= 2^1 = 2");

    CHECK_THROWS_AS(step_up(2, 4, TowerExpr{0, 10, true}), BadUniformity);
}

TEST_CASE("three-colour base statement") {
    const RamseyStatement s = theorem1_bound(16, 1.0 / 80.0);
    CHECK(s.uniformity == 3);
    CHECK(s.colors == 3);
    CHECK(s.clique_size == 16);
    CHECK(s.lower_bound.height == 1);
    // 16^(c * log2 log2 16) = 16^(2/80) = 2^0.1
    CHECK(s.lower_bound.base_exponent == doctest::Approx(std::exp2(0.1)).epsilon(1e-12));

    CHECK_THROWS_AS(theorem1_bound(16, 0.0), DomainError);
    CHECK_THROWS_AS(theorem1_bound(16, 0.02), DomainError); // above 1/80
    CHECK_THROWS_AS(theorem1_bound(2, 1.0 / 80.0), DomainError);
}

TEST_CASE("iterated step-up height and clique-size bookkeeping") {
    const RamseyStatement base = theorem1_bound(16, 1.0 / 80.0);

    const RamseyStatement k3 = theorem3_bound(3, 16, 1.0 / 80.0);
    CHECK(k3.uniformity == base.uniformity);
    CHECK(k3.clique_size == base.clique_size);
    CHECK(k3.lower_bound == base.lower_bound);

    const RamseyStatement k4 = theorem3_bound(4, 16, 1.0 / 80.0);
    CHECK(k4.uniformity == 4);
    CHECK(k4.clique_size == 2 * 16 - 1);
    CHECK(k4.lower_bound.height == base.lower_bound.height + 1);

    const RamseyStatement k5 = theorem3_bound(5, 16, 1.0 / 80.0);
    CHECK(k5.uniformity == 5);
    CHECK(k5.clique_size == 4 * 16 - 2);
    CHECK(k5.lower_bound.height == base.lower_bound.height + 2);
    CHECK(k5.colors == 3);

    CHECK_THROWS_AS(theorem3_bound(2, 16, 1.0 / 80.0), BadUniformity);
}

TEST_SUITE_END();
