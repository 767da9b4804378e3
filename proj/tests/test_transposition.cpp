#include <doctest.h>

#include <map>
#include <random>

#include "brute.hpp"
#include "unitrail/oracle.hpp"
#include "unitrail/transposition.hpp"

using namespace unitrail;
using unitrail::testing::T;

namespace {

TranspositionSite to_site(const testing::BruteSite& s) {
    if (s.kind == 2) return TwoAnchors{s.idx[0], s.idx[1], s.idx[2], s.idx[3]};
    return OneAnchor{s.idx[0], s.idx[1], s.idx[2]};
}

}  // namespace

TEST_CASE("apply_transposition") {
    CHECK(apply_transposition(T("01020"), OneAnchor{0, 2, 4}) == T("02010"));
    CHECK(apply_transposition(T("010120"), TwoAnchors{1, 2, 3, 5}) == T("012010"));
    CHECK(apply_transposition(T("01010"), OneAnchor{0, 2, 4}) == T("01010"));

    // The worked example: x = ba, u = v = y = z = empty.
    CHECK(apply_transposition(T("010101"), TwoAnchors{0, 3, 4, 5}) == T("010101"));
}

TEST_CASE("invalid sites are rejected") {
    CHECK_THROWS_AS(apply_transposition(T("01020"), OneAnchor{0, 1, 4}), std::invalid_argument);
    CHECK_THROWS_AS(apply_transposition(T("01020"), OneAnchor{0, 2, 5}), std::invalid_argument);
    CHECK_NOTHROW(apply_transposition(T("0101"), TwoAnchors{0, 1, 2, 3}));
    CHECK_THROWS_AS(apply_transposition(T("0000"), TwoAnchors{0, 1, 2, 3}),
                    std::invalid_argument);
    CHECK_THROWS_AS(is_proper(T("0000"), TwoAnchors{2, 1, 0, 3}), std::invalid_argument);
    CHECK_FALSE(is_valid_site(T("010"), OneAnchor{0, 2, 3}));
}

TEST_CASE("is_proper") {
    CHECK(is_proper(T("01020"), OneAnchor{0, 2, 4}));
    CHECK_FALSE(is_proper(T("010101"), TwoAnchors{0, 3, 4, 5}));
    CHECK_FALSE(is_proper(T("010120"), OneAnchor{0, 2, 5}));
}

TEST_CASE("admits_proper_transposition") {
    CHECK(admits_proper_transposition(T("0010")));
    CHECK_FALSE(admits_proper_transposition(T("0011")));
    CHECK_FALSE(admits_proper_transposition(Trail{}));
    CHECK_FALSE(admits_proper_transposition(T("010101")));
    CHECK(admits_proper_transposition(T("01020")));
}

TEST_CASE("find_proper_site examples") {
    const auto site = find_proper_site(T("0010"));
    REQUIRE(site);
    CHECK(*site == TranspositionSite{OneAnchor{0, 1, 3}});
    CHECK(apply_transposition(T("0010"), *site) == T("0100"));

    CHECK_FALSE(find_proper_site(T("010101")));
    CHECK(find_proper_site(T("01020")) == TranspositionSite{OneAnchor{0, 2, 4}});
}

TEST_CASE("site calculus agrees with brute force on all short words") {
    for (std::size_t m = 1; m <= 3; ++m) {
        for_each_word(m, 0, 8, [&](std::span<const Symbol> t) {
            const auto brute = testing::brute_sites(t);
            const auto sites = all_sites(t);
            REQUIRE(sites.size() == brute.size());

            std::optional<TranspositionSite> least_proper;
            for (std::size_t k = 0; k < brute.size(); ++k) {
                const auto site = to_site(brute[k]);
                REQUIRE(sites[k] == site);
                const auto image = apply_transposition(t, site);
                REQUIRE(std::ranges::equal(image, testing::brute_apply(t, brute[k])));
                REQUIRE(is_proper(t, site) == testing::brute_proper(t, brute[k]));

                // Transpositions permute arc visits and keep the start.
                CHECK(induced_graph(image, m) == induced_graph(t, m));
                CHECK(image.front() == t.front());

                if (is_proper(t, site)) {
                    CHECK_FALSE(std::ranges::equal(image, t));
                    if (!least_proper) least_proper = site;
                }
            }
            CHECK(find_proper_site(t) == least_proper);
            CHECK(admits_proper_transposition(t) == least_proper.has_value());
            CHECK(admits_proper_transposition(t) == testing::pattern_by_definition(t));
        });
    }
}

TEST_CASE("find_proper_site on longer random words matches the scan") {
    std::mt19937 rng(3);
    for (int iter = 0; iter < 3000; ++iter) {
        const std::size_t m = 2 + rng() % 6;
        std::vector<Symbol> t(rng() % 30);
        for (auto& s : t) s = static_cast<Symbol>(rng() % m);
        const auto site = find_proper_site(t);
        REQUIRE(site.has_value() == admits_proper_transposition(t));
        REQUIRE(admits_proper_transposition(t) == testing::pattern_by_definition(t));
        if (site) {
            CHECK(is_proper(t, *site));
            CHECK_FALSE(std::ranges::equal(apply_transposition(t, *site), t));
        }
    }
}

TEST_CASE("properize examples") {
    const auto t = T("010120");
    const auto trace = properize_traced(t, OneAnchor{0, 2, 5});
    REQUIRE(trace.site);
    CHECK(*trace.site == TranspositionSite{TwoAnchors{1, 2, 3, 5}});
    CHECK(trace.shifts == std::vector<ShiftBranch>{ShiftBranch::OneBothNonEmpty});
    CHECK_FALSE(trace.used_fallback);
    CHECK(apply_transposition(t, *trace.site) == T("012010"));

    // Already proper: returned unchanged.
    CHECK(properize(T("01020"), OneAnchor{0, 2, 4}) == TranspositionSite{OneAnchor{0, 2, 4}});
    CHECK(properize_traced(T("01020"), OneAnchor{0, 2, 4}).shifts.empty());

    CHECK_THROWS_AS(properize(T("010101"), TwoAnchors{0, 3, 4, 5}), std::invalid_argument);
}

TEST_CASE("properize follows each shift branch") {
    // x empty in a two-anchor site: a b z a b y' b.
    auto trace = properize_traced(T("01201321"), TwoAnchors{0, 1, 3, 7});
    REQUIRE(trace.site);
    CHECK(trace.shifts == std::vector<ShiftBranch>{ShiftBranch::TwoLeadingEmpty});
    CHECK(*trace.site == TranspositionSite{OneAnchor{1, 4, 7}});

    // y empty in a two-anchor site.
    trace = properize_traced(T("01321201"), TwoAnchors{0, 4, 6, 7});
    REQUIRE(trace.site);
    CHECK(trace.shifts == std::vector<ShiftBranch>{ShiftBranch::TwoTrailingEmpty});

    // x empty / y empty in a one-anchor site.
    trace = properize_traced(T("000100"), OneAnchor{0, 1, 5});
    REQUIRE(trace.site);
    CHECK(trace.shifts.front() == ShiftBranch::OneLeadingEmpty);
    trace = properize_traced(T("001000"), OneAnchor{0, 4, 5});
    REQUIRE(trace.site);
    CHECK(trace.shifts.front() == ShiftBranch::OneTrailingEmpty);
}

TEST_CASE("properize reports sites with no proper equivalent") {
    // x and y both begin with b: the image is not reachable by one proper
    // transposition.
    const auto t = T("0110121");
    const TranspositionSite site = TwoAnchors{0, 2, 3, 6};
    REQUIRE(apply_transposition(t, site) == T("0121011"));
    const auto trace = properize_traced(t, site);
    CHECK_FALSE(trace.site);
    CHECK(trace.used_fallback);
    CHECK(trace.stuck_at == ShiftBranch::TwoBothNonEmpty);
    CHECK_THROWS_AS(properize(t, site), NoEquivalentProperSite);

    const auto one = T("0010020");
    CHECK_THROWS_AS(properize(one, OneAnchor{0, 3, 6}), NoEquivalentProperSite);
    CHECK(properize_traced(one, OneAnchor{0, 3, 6}).stuck_at == ShiftBranch::OneBothNonEmpty);
}

TEST_CASE("properize is sound wherever it answers") {
    // Whenever it returns, the site is proper and image-equal; whenever it
    // gives up, brute force confirms no proper site has that image.
    std::map<std::string, std::size_t> failures;
    for_each_word(3, 0, 8, [&](std::span<const Symbol> t) {
        const auto brute = testing::brute_sites(t);
        for (const auto& b : brute) {
            const auto image = testing::brute_apply(t, b);
            if (std::ranges::equal(image, t)) continue;
            const auto trace = properize_traced(t, to_site(b));
            if (trace.site) {
                REQUIRE(is_proper(t, *trace.site));
                REQUIRE(std::ranges::equal(apply_transposition(t, *trace.site), image));
                if (!trace.used_fallback) {
                    REQUIRE(std::ranges::equal(apply_transposition(t, *trace.site),
                                               apply_transposition(t, to_site(b))));
                }
            } else {
                ++failures[testing::str(t)];
                for (const auto& other : brute) {
                    REQUIRE_FALSE((testing::brute_proper(t, other) &&
                                   testing::brute_apply(t, other) == image));
                }
            }
        }
    });
    CHECK_FALSE(failures.empty());
}
