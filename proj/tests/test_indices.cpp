#include "citemetrics/indices.hpp"

#include "citemetrics/errors.hpp"
#include "doctest.h"
#include "oracles.hpp"

#include <cmath>
#include <random>

using namespace citemetrics;
using testutil::profile_of;

namespace {

const CitationProfile kEmpty{};

CitationProfile worked_pi_profile() {
    ResearcherRecord record;
    record.researcher_id = "w";
    record.papers = {
        {"p1", 12, 4, 2}, {"p2", 9, 3, 3}, {"p3", 8, 4, 2}, {"p4", 4, 1, 1}, {"p5", 3, 1, 1},
    };
    return build_profile(record, CreditScheme::PerPI);
}

}  // namespace

TEST_CASE("h_index on fixtures") {
    CHECK(h_index(kEmpty) == 0);
    CHECK(h_index(profile_of({10, 8, 5, 4, 3})) == 4);
    CHECK(h_index(worked_pi_profile()) == 3);  // [6,4,4,3,3]
    CHECK(h_index(profile_of({3, 3, 3})) == 3);
}

TEST_CASE("h_q_index on fixtures") {
    const auto p = profile_of({10, 8, 5, 4, 3});
    CHECK(h_q_index(p, Rational(1)) == 4);
    CHECK(h_q_index(p, Rational(2)) == 2);
    CHECK(h_q_index(p, Rational(1, 2)) == 5);
    CHECK_THROWS_AS(h_q_index(p, Rational(0)), DomainError);
    CHECK_THROWS_AS(h_q_index(p, Rational(-1)), DomainError);
}

TEST_CASE("g_index on fixtures") {
    CHECK(g_index(kEmpty) == 0);
    CHECK(g_index(profile_of({10, 8, 5, 4, 3})) == 5);  // cumsum 30 >= 25, capped at N_p
    CHECK(g_index(profile_of({1, 1, 1})) == 1);
}

TEST_CASE("core and excess sums on fixtures") {
    CHECK(core_sum(kEmpty) == Rational(0));
    CHECK(core_sum(profile_of({10, 8, 5, 4, 3})) == Rational(27));
    CHECK(core_sum(profile_of({3, 3, 3})) == Rational(9));

    CHECK(excess_sum(profile_of({3, 3, 3})) == Rational(0));
    CHECK(excess_sum(profile_of({10, 8, 5, 4, 3})) == Rational(11));
    CHECK(excess_sum(worked_pi_profile()) == Rational(5));  // core 14, h = 3
}

TEST_CASE("e_index on fixtures") {
    CHECK(e_index(profile_of({3, 3, 3})) == 0.0);
    CHECK(e_index(profile_of({10, 8, 5, 4, 3})) ==
          doctest::Approx(std::sqrt(11.0)).epsilon(1e-12));
    CHECK(e_index(profile_of({4, 4, 4, 4})) == 0.0);  // core exactly h^2
}

TEST_CASE("h_x_index on fixtures") {
    CHECK(h_x_index(profile_of({10, 8, 5, 4, 3})) == Rational(11, 4));
    CHECK(h_x_index(profile_of({3, 3, 3})) == Rational(0));
    CHECK(h_x_index(kEmpty) == Rational(0));
}

TEST_CASE("the constructed sample curve reproduces h=19, h_x=26") {
    const auto curve = testutil::sample_curve_h19();
    const auto profile = profile_of(curve);

    // Validate the construction against the brute-force oracles before
    // asserting the library values.
    std::vector<Rational> values(curve.begin(), curve.end());
    REQUIRE(testutil::oracle_h(values) == 19);
    REQUIRE(testutil::oracle_h_q(values, Rational(2)) == 12);
    REQUIRE(testutil::oracle_h_q(values, Rational(4)) == 8);

    CHECK(h_index(profile) == 19);
    CHECK(h_q_index(profile, Rational(2)) == 12);
    CHECK(h_q_index(profile, Rational(4)) == 8);
    CHECK(core_sum(profile) == Rational(855));
    CHECK(h_x_index(profile) == Rational(26));
}

TEST_CASE("core_indices bundles consistently") {
    SUBCASE("worked raw profile") {
        const auto c = core_indices(profile_of({10, 8, 5, 4, 3}));
        CHECK(c.h == 4);
        CHECK(c.c_h == Rational(27));
        CHECK(c.c_hx == Rational(11));
        CHECK(c.e == doctest::Approx(std::sqrt(11.0)).epsilon(1e-12));
        CHECK(c.h_x == Rational(11, 4));
        CHECK(c.g == 5);
    }
    SUBCASE("empty profile") {
        const auto c = core_indices(kEmpty);
        CHECK(c.h == 0);
        CHECK(c.c_h == Rational(0));
        CHECK(c.c_hx == Rational(0));
        CHECK(c.e == 0.0);
        CHECK(c.h_x == Rational(0));
        CHECK(c.g == 0);
    }
    SUBCASE("flat profile") {
        const auto c = core_indices(profile_of({3, 3, 3}));
        CHECK(c.h == 3);
        CHECK(c.c_h == Rational(9));
        CHECK(c.c_hx == Rational(0));
        CHECK(c.e == 0.0);
        CHECK(c.h_x == Rational(0));
        CHECK(c.g == 3);
    }
}

TEST_CASE("randomized profiles agree with the brute-force oracles") {
    std::mt19937_64 rng(101);
    const std::vector<Rational> qs = {Rational(1, 2), Rational(1), Rational(2), Rational(4),
                                      Rational(10)};
    for (int i = 0; i < 2000; ++i) {
        const auto c = testutil::random_profile_case(rng, i % 2 == 0);
        CHECK(h_index(c.profile) == testutil::oracle_h(c.values));
        CHECK(g_index(c.profile) == testutil::oracle_g(c.values));
        for (const auto& q : qs)
            CHECK(h_q_index(c.profile, q) == testutil::oracle_h_q(c.values, q));
    }
}

TEST_CASE("algebraic identities hold exactly on randomized profiles") {
    std::mt19937_64 rng(202);
    for (int i = 0; i < 1000; ++i) {
        const auto c = testutil::random_profile_case(rng, i % 2 == 0);
        const auto idx = core_indices(c.profile);
        const Rational h_sq(static_cast<long long>(idx.h) * idx.h);

        CHECK(idx.c_h == h_sq + idx.c_hx);
        CHECK(idx.h_x * idx.h == idx.c_hx);
        if (idx.h > 0) CHECK((Rational(idx.h) + idx.h_x) * idx.h == idx.c_h);
        CHECK(idx.c_hx >= 0);
        CHECK(total_citations(c.profile) >= h_sq);
        CHECK(idx.g >= idx.h);
        CHECK(idx.g <= static_cast<int>(c.profile.entries.size()));

        const double e2 = idx.e * idx.e;
        const double expected = to_double(idx.c_hx);
        CHECK(std::abs(e2 - expected) <= 1e-9 * std::max(1.0, std::abs(expected)));
    }
}

TEST_CASE("adding a paper or citations never decreases h, g, C_h, C_tot") {
    std::mt19937_64 rng(303);
    for (int i = 0; i < 300; ++i) {
        auto c = testutil::random_profile_case(rng, false);
        const auto before = core_indices(c.profile);
        const Rational total_before = total_citations(c.profile);

        auto values = c.values;
        if (i % 2 == 0 || values.empty()) {
            values.push_back(Rational(testutil::uniform(rng, 0, 50)));
        } else {
            const std::size_t at = rng() % values.size();
            values[at] += testutil::uniform(rng, 1, 10);
        }
        std::vector<long long> ints;
        for (const auto& v : values) ints.push_back(numerator(v).convert_to<long long>());
        const auto after = core_indices(testutil::profile_of(ints));

        CHECK(after.h >= before.h);
        CHECK(after.g >= before.g);
        CHECK(after.c_h >= before.c_h);
        CHECK(total_citations(testutil::profile_of(ints)) >= total_before);
    }
}

TEST_CASE("h_q is monotone in q") {
    std::mt19937_64 rng(404);
    const std::vector<Rational> qs = {Rational(1, 2), Rational(1), Rational(2), Rational(4),
                                      Rational(10)};
    for (int i = 0; i < 300; ++i) {
        const auto c = testutil::random_profile_case(rng, true);
        for (std::size_t a = 1; a < qs.size(); ++a)
            CHECK(h_q_index(c.profile, qs[a - 1]) >= h_q_index(c.profile, qs[a]));
        CHECK(h_q_index(c.profile, Rational(1)) == h_index(c.profile));
    }
}
