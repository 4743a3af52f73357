#include "citemetrics/profile.hpp"

#include "citemetrics/errors.hpp"
#include "doctest.h"
#include "oracles.hpp"

#include <algorithm>
#include <random>

using namespace citemetrics;

namespace {

ResearcherRecord worked_record() {
    // The five-paper example used throughout: raw values [12,9,8,4,3],
    // per-PI values sorted [6,4,4,3,3].
    ResearcherRecord record;
    record.researcher_id = "w";
    record.papers = {
        {"p1", 12, 4, 2}, {"p2", 9, 3, 3}, {"p3", 8, 4, 2}, {"p4", 4, 1, 1}, {"p5", 3, 1, 1},
    };
    return record;
}

}  // namespace

TEST_CASE("per-PI credit divides citations by the PI count") {
    ResearcherRecord record;
    record.researcher_id = "a";
    record.papers = {{"p1", 10, 2, 2}};
    const auto profile = build_profile(record, CreditScheme::PerPI);
    REQUIRE(profile.entries.size() == 1);
    CHECK(profile.entries[0].rank == 1);
    CHECK(profile.entries[0].paper_id == "p1");
    CHECK(profile.entries[0].value == Rational(5));
}

TEST_CASE("single-PI papers keep their raw value under per-PI credit") {
    ResearcherRecord record;
    record.researcher_id = "a";
    record.papers = {{"p1", 7, 1, 1}};
    const auto profile = build_profile(record, CreditScheme::PerPI);
    CHECK(profile.entries[0].value == Rational(7));
}

TEST_CASE("per-PI values of the worked record sort to [6,4,4,3,3]") {
    const auto profile = build_profile(worked_record(), CreditScheme::PerPI);
    std::vector<Rational> values;
    for (const auto& e : profile.entries) values.push_back(e.value);
    CHECK(values == std::vector<Rational>{6, 4, 4, 3, 3});

    // Brute-force comparator check: every adjacent pair obeys the total
    // order (value desc, then paper_id asc).
    for (std::size_t i = 1; i < profile.entries.size(); ++i) {
        const auto& prev = profile.entries[i - 1];
        const auto& next = profile.entries[i];
        const bool ordered = prev.value > next.value ||
                             (prev.value == next.value && prev.paper_id < next.paper_id);
        CHECK(ordered);
        CHECK(next.rank == static_cast<int>(i) + 1);
    }
}

TEST_CASE("total_citations sums exactly") {
    CHECK(total_citations(CitationProfile{}) == Rational(0));
    CHECK(total_citations(testutil::profile_of({10, 8, 5, 4, 3})) == Rational(30));
    CHECK(total_citations(build_profile(worked_record(), CreditScheme::PerPI)) == Rational(20));
}

TEST_CASE("raw-scheme values are integers") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 200; ++i) {
        const auto record = testutil::random_record(rng);
        for (const auto& entry : build_profile(record, CreditScheme::Raw).entries)
            CHECK(denominator(entry.value) == 1);
    }
}

TEST_CASE("rebuilding a profile is deterministic and order-independent") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        auto record = testutil::random_record(rng);
        const auto first = build_profile(record, CreditScheme::PerPI);
        CHECK(build_profile(record, CreditScheme::PerPI) == first);

        std::shuffle(record.papers.begin(), record.papers.end(), rng);
        CHECK(build_profile(record, CreditScheme::PerPI) == first);
    }
}

TEST_CASE("per-PI curve is dominated by the raw curve pointwise") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        const auto record = testutil::random_record(rng);
        const auto raw = build_profile(record, CreditScheme::Raw);
        const auto pi = build_profile(record, CreditScheme::PerPI);
        REQUIRE(raw.entries.size() == pi.entries.size());
        for (std::size_t r = 0; r < raw.entries.size(); ++r)
            CHECK(pi.entries[r].value <= raw.entries[r].value);

        const Rational raw_total = total_citations(raw);
        const Rational pi_total = total_citations(pi);
        CHECK(pi_total <= raw_total);
        const bool all_single_pi = std::all_of(
            record.papers.begin(), record.papers.end(),
            [](const PaperRecord& p) { return p.n_pi == 1; });
        CHECK((pi_total == raw_total) == (all_single_pi || record.papers.empty()));
    }
}

TEST_CASE("ties break by paper_id ascending") {
    ResearcherRecord record;
    record.researcher_id = "t";
    record.papers = {{"pb", 5, 1, 1}, {"pa", 5, 1, 1}, {"pc", 5, 1, 1}};
    const auto profile = build_profile(record, CreditScheme::Raw);
    CHECK(profile.entries[0].paper_id == "pa");
    CHECK(profile.entries[1].paper_id == "pb");
    CHECK(profile.entries[2].paper_id == "pc");
}

TEST_CASE("invalid records are rejected with the offending paper named") {
    ResearcherRecord record;
    record.researcher_id = "bad";

    SUBCASE("n_pi exceeds n_authors") {
        record.papers = {{"p1", 10, 2, 3}};
        CHECK_THROWS_WITH_AS(build_profile(record, CreditScheme::PerPI),
                             doctest::Contains("p1"), ValidationError);
    }
    SUBCASE("n_pi of zero") {
        record.papers = {{"p9", 10, 2, 0}};
        CHECK_THROWS_WITH_AS(build_profile(record, CreditScheme::PerPI),
                             doctest::Contains("p9"), ValidationError);
    }
    SUBCASE("negative citations") {
        record.papers = {{"p2", -1, 1, 1}};
        CHECK_THROWS_AS(build_profile(record, CreditScheme::Raw), ValidationError);
    }
    SUBCASE("duplicate paper ids") {
        record.papers = {{"p1", 1, 1, 1}, {"p1", 2, 1, 1}};
        CHECK_THROWS_AS(build_profile(record, CreditScheme::Raw), ValidationError);
    }
}
