#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>

#include <forddisc/counting.hpp>

using namespace forddisc;

TEST_CASE("table reproduces the pinned small columns") {
    CountTable t2(2, 6);
    const long a2[] = {1, 2, 3, 5, 8, 13, 21};
    const long b2[] = {0, 0, -2, -5, -12, -25, -50};
    for (std::size_t n = 0; n <= 6; ++n) {
        CHECK(t2.a(n) == a2[n]);
        CHECK(t2.b(n) == b2[n]);
    }

    CountTable t3(3, 4);
    CHECK(t3.a(3) == 7);
    CHECK(t3.a(4) == 13);
    CHECK(t3.b(3) == -3);
    CHECK(t3.b(4) == -8);

    CountTable t4(4, 5);
    CHECK(t4.a(4) == 15);
    CHECK(t4.b(4) == -4);
    CHECK(t4.b(5) == -11);
}

TEST_CASE("table endpoint values") {
    for (unsigned k = 2; k <= 64; ++k) {
        CountTable t(k, k + 1);
        CHECK(t.a(k) == (BigInt(1) << k) - 1);
        CHECK(t.a(k + 1) == (BigInt(1) << (k + 1)) - 3);
        CHECK(t.b(k + 1) == 1 - 3 * static_cast<int>(k));
    }
}

TEST_CASE("table guards") {
    CHECK_THROWS_AS(CountTable(1, 10), std::invalid_argument);
    CHECK_THROWS_AS(CountTable(2, 100001), capacity_error);
    CountTable t(2, 0);
    CHECK(t.n_max() == 0);
    CHECK(t.a(0) == 1);
    CHECK_THROWS_AS(t.a(1), std::out_of_range);
}

TEST_CASE("dominant root against known constants") {
    auto r2 = dominant_root(2);
    HighFloat phi("1.61803398874989484820458683436563811772030917980576");
    CHECK(abs(r2.value - phi) < HighFloat("1e-18"));
    CHECK(r2.residual <= HighFloat("1e-20"));

    auto r3 = dominant_root(3);
    HighFloat trib("1.8392867552141611325518525646532866");
    CHECK(abs(r3.value - trib) < HighFloat("1e-18"));

    auto r10 = dominant_root(10);
    CHECK(r10.value > HighFloat("1.999"));
    CHECK(r10.value < 2);
}

TEST_CASE("dominant root internal consistency") {
    for (unsigned k : {2u, 3u, 8u, 16u, 32u}) {
        auto est = dominant_root(k);
        CHECK(est.k == k);
        CHECK(est.value > 1.5);
        CHECK(est.value < 2.0);
        CHECK(est.iterations <= 500);
        CHECK(abs(eval_f(k, est.value)) == est.residual);
        // g(z) = (z-1) f(z) and z-1 < 1 on the bracket
        CHECK(abs(eval_g(k, est.value)) <= est.residual + HighFloat("1e-30"));
        CHECK(abs(eval_g(k, est.value) - (est.value - 1) * eval_f(k, est.value)) < HighFloat("1e-30"));
    }
    CHECK_THROWS_AS(dominant_root(1), std::invalid_argument);
    CHECK_THROWS_AS(dominant_root(3, HighFloat(0)), std::invalid_argument);
    CHECK_THROWS_AS(dominant_root(3, HighFloat(-1)), std::invalid_argument);
}

TEST_CASE("partial-sum identity check") {
    for (unsigned k = 3; k <= 6; ++k) {
        auto rep = check_alpha_partial_sum_identity(k, 100);
        CHECK(rep.pass);
        CHECK(rep.scoped);
        CHECK_FALSE(rep.counterexample.has_value());
    }
    CHECK(check_alpha_partial_sum_identity(3, 100).range == "k=3, 4 <= n <= 100");
    CHECK_THROWS_AS(check_alpha_partial_sum_identity(2, 50), std::invalid_argument);
}

TEST_CASE("negativity check") {
    for (unsigned k = 3; k <= 8; ++k) {
        auto rep = check_beta_negative(k, 150);
        CHECK(rep.pass);
        CHECK(rep.scoped);
    }
    auto out_of_range = check_beta_negative(2, 50);
    CHECK_FALSE(out_of_range.scoped);
    CHECK(out_of_range.pass); // vacuous: nothing in range was checked
    REQUIRE(out_of_range.observations.size() == 1);
    CHECK(out_of_range.observations[0].find("outside the stated range") != std::string::npos);
}

TEST_CASE("closed-form check") {
    for (unsigned k = 3; k <= 6; ++k) CHECK(check_beta_closed_form(k, 100).pass);
    CHECK_THROWS_AS(check_beta_closed_form(2, 50), std::invalid_argument);
}

TEST_CASE("growth-ratio scan flags the small oscillations without failing") {
    auto r2 = check_growth_ratio(2, 40);
    CHECK(r2.pass);
    REQUIRE_FALSE(r2.observations.empty());
    CHECK(r2.observations[0].find("flagged n=2") != std::string::npos);

    auto r3 = check_growth_ratio(3, 40);
    CHECK(r3.pass);
    REQUIRE_FALSE(r3.observations.empty());
    CHECK(r3.observations[0].find("flagged n=3") != std::string::npos);
}

TEST_CASE("ratio bound check fails where the inequality actually breaks") {
    CHECK(check_beta_alpha_ratio_bound(4, 22).pass);
    auto r4 = check_beta_alpha_ratio_bound(4, 30);
    CHECK_FALSE(r4.pass);
    REQUIRE(r4.counterexample.has_value());
    CHECK(r4.counterexample->find("n=23") != std::string::npos);
    REQUIRE_FALSE(r4.observations.empty());

    CHECK(check_beta_alpha_ratio_bound(5, 47).pass);
    auto r5 = check_beta_alpha_ratio_bound(5, 60);
    CHECK_FALSE(r5.pass);
    REQUIRE(r5.counterexample.has_value());
    CHECK(r5.counterexample->find("n=48") != std::string::npos);

    CHECK_THROWS_AS(check_beta_alpha_ratio_bound(3, 50), std::invalid_argument);
}

TEST_CASE("tail estimates at pinned points") {
    CHECK_THAT(alpha_upper_tail(2, 2), Catch::Matchers::WithinRel(3.9175292, 1e-6));
    CHECK(alpha_lower_union(5, 5) == 31.0);
    CHECK(alpha_lower_union(3, 2) == 4.0); // window term clamps at zero below m = k
    CHECK(alpha_lower_union(1, 0) == 1.0);
    CHECK_THROWS_AS(alpha_upper_tail(1, 5), std::invalid_argument);
    CHECK_THROWS_AS(alpha_upper_tail(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(alpha_lower_union(0, 3), std::invalid_argument);
}

TEST_CASE("tail estimate grids") {
    auto up = check_alpha_upper_grid(2, 6, 24);
    CHECK(up.pass);
    CHECK(up.claim == "alpha_upper_tail");
    auto lo = check_alpha_lower_grid(2, 6, 24);
    CHECK(lo.pass);
    CHECK(lo.claim == "alpha_lower_union");
}
