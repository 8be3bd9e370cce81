#include <doctest.h>

#include <random>

#include "pisen/phin.hpp"
#include "support.hpp"

using namespace pisen;

namespace {

RationalMatrix shift_chain(long d) {
    RationalMatrix n(d, d);
    for (long j = 0; j + 1 < d; ++j) n.at(j + 1, j) = 1;
    return n;
}

PhiNData make(long d, RationalMatrix n, std::vector<long> w, std::vector<long> t) {
    PhiNData data;
    data.dim = d;
    data.monodromy = std::move(n);
    data.weights = std::move(w);
    data.twists = std::move(t);
    return data;
}

bool has_issue(const ValidationReport& rep, const std::string& code) {
    for (const auto& issue : rep.issues)
        if (issue.code == code) return true;
    return false;
}

} // namespace

TEST_CASE("chains_of recognizes chain form") {
    const auto single = chains_of(shift_chain(3));
    REQUIRE(single.has_value());
    REQUIRE(single->size() == 1);
    CHECK((*single)[0] == std::vector<long>{0, 1, 2});

    RationalMatrix two(5, 5);
    two.at(1, 0) = 1;
    two.at(4, 3) = 1;
    const auto blocks = chains_of(two);
    REQUIRE(blocks.has_value());
    REQUIRE(blocks->size() == 3);
    CHECK((*blocks)[0] == std::vector<long>{0, 1});
    CHECK((*blocks)[1] == std::vector<long>{2});
    CHECK((*blocks)[2] == std::vector<long>{3, 4});

    RationalMatrix bad(2, 2);
    bad.at(1, 0) = 2; // not a unit arrow
    CHECK_FALSE(chains_of(bad).has_value());
    RationalMatrix up(2, 2);
    up.at(0, 1) = 1; // arrow points the wrong way
    CHECK_FALSE(chains_of(up).has_value());
}

TEST_CASE("validate accepts the standard shapes") {
    CHECK(validate(make(2, shift_chain(2), {0, 1}, {0, 0}), 5).ok());
    CHECK(validate(make(3, RationalMatrix(3, 3), {4, -1, 7}, {0, 0, 0}), 5).ok());
    CHECK(validate(make(2, shift_chain(2), {0, 3}, {0, -1}), 5).ok());
}

TEST_CASE("validate rejects inconsistent data with witnesses") {
    // equal twists with a weight gap
    const ValidationReport gap = validate(make(2, shift_chain(2), {0, 3}, {0, 0}), 5);
    CHECK_FALSE(gap.ok());
    CHECK(has_issue(gap, "chain_weights"));
    CHECK(gap.issues.front().indices == std::vector<long>{1, 2});

    // rising twists
    const ValidationReport rise = validate(make(2, shift_chain(2), {0, 1}, {0, 1}), 5);
    CHECK(has_issue(rise, "twist_monotone"));

    // non-nilpotent N
    CHECK(has_issue(validate(make(1, RationalMatrix::identity(1), {0}, {0}), 5),
                    "nilpotency"));

    // N not in chain form
    RationalMatrix scaled(2, 2);
    scaled.at(1, 0) = 3;
    CHECK(has_issue(validate(make(2, scaled, {0, 1}, {0, 0}), 5), "chain_shape"));

    // shape mismatch
    CHECK(has_issue(validate(make(2, shift_chain(2), {0}, {0, 0}), 5), "shape"));
}

TEST_CASE("validate checks the Frobenius relation exactly") {
    PhiNData data = make(2, shift_chain(2), {0, 1}, {0, 0});
    RationalMatrix phi(2, 2);
    phi.at(0, 0) = 5;
    phi.at(1, 1) = 1;
    data.frobenius = phi;
    CHECK(validate(data, 5).ok()); // N phi = 5 phi N holds

    phi.at(0, 0) = 3; // breaks the relation
    data.frobenius = phi;
    CHECK(has_issue(validate(data, 5), "frobenius"));
}

TEST_CASE("default twists") {
    CHECK(default_twists(2, shift_chain(2), {0, 1}) == std::vector<long>{0, 0});
    CHECK(default_twists(2, shift_chain(2), {0, 3}) == std::vector<long>{0, -1});
    CHECK(default_twists(3, RationalMatrix(3, 3), {5, 1, 2}) ==
          std::vector<long>{0, 0, 0});

    // mixed chain: steps +1, +1, gap, +1
    RationalMatrix n = shift_chain(5);
    CHECK(default_twists(5, n, {0, 1, 2, 0, 1}) ==
          std::vector<long>{0, 0, 0, -1, -1});
}

TEST_CASE("default_twists output always validates") {
    std::mt19937 rng(43);
    std::uniform_int_distribution<int> wd(-3, 3);
    for (int trial = 0; trial < 100; ++trial) {
        PhiNData data = support::random_phin(rng, 5, 6);
        // replace weights with arbitrary ones; defaults must still validate
        for (auto& w : data.weights) w = wd(rng);
        data.twists = default_twists(data.dim, data.monodromy, data.weights);
        CHECK(validate(data, 5).ok());
    }
}

TEST_CASE("random generator produces valid data") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 200; ++trial) {
        const PhiNData data = support::random_phin(rng, 5, 6);
        const ValidationReport rep = validate(data, 5);
        if (!rep.ok()) {
            CAPTURE(rep.issues.front().message);
            CHECK(rep.ok());
        }
    }
}
