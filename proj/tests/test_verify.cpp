#include <doctest.h>

#include <random>

#include "pisen/verify.hpp"
#include "support.hpp"

using namespace pisen;

namespace {

const PadicContext ctx{5, 24};

PhiNData make(long d, RationalMatrix n, std::vector<long> w, std::vector<long> t) {
    PhiNData data;
    data.dim = d;
    data.monodromy = std::move(n);
    data.weights = std::move(w);
    data.twists = std::move(t);
    return data;
}

RationalMatrix shift_chain(long d) {
    RationalMatrix n(d, d);
    for (long j = 0; j + 1 < d; ++j) n.at(j + 1, j) = 1;
    return n;
}

PhiNData tate_data() { return make(2, shift_chain(2), {0, 1}, {0, 0}); }

PiSenModule tate_module() { return build_from_phin(tate_data(), ctx); }

const PadicScalar kOne = PadicScalar::one(5, PadicScalar::kExact);

bool all_pass(const VerificationReport& rep) {
    for (const auto& rec : rep.checks)
        if (rec.status == CheckStatus::fail) return false;
    return true;
}

const CheckRecord& find_check(const VerificationReport& rep, const std::string& id) {
    for (const auto& rec : rep.checks)
        if (rec.id == id) return rec;
    throw std::runtime_error("check not found: " + id);
}

} // namespace

TEST_CASE("full report passes on built modules") {
    const PhiNData tate = tate_data();
    const PiSenModule mod = build_from_phin(tate, ctx);
    const VerificationReport rep = full_report(mod, &tate, 1, ctx);
    CHECK(rep.checks.size() == 8);
    CHECK(all_pass(rep));
    CHECK(find_check(rep, "crystalline").status == CheckStatus::skipped);

    const PhiNData cry = make(4, RationalMatrix(4, 4), {0, 1, 2, 3}, {0, 0, 0, 0});
    const VerificationReport crep =
        full_report(build_from_phin(cry, ctx), &cry, 3, ctx);
    CHECK(all_pass(crep));
    CHECK(find_check(crep, "crystalline").status == CheckStatus::pass);
}

TEST_CASE("full report passes on random valid inputs") {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 15; ++trial) {
        const PhiNData data = support::random_phin(rng, ctx.p, 6);
        const PiSenModule mod = build_from_phin(data, ctx);
        const VerificationReport rep =
            full_report(mod, &data, support::weight_span(data), ctx);
        if (!all_pass(rep)) {
            for (const auto& rec : rep.checks)
                if (rec.status == CheckStatus::fail) {
                    CAPTURE(rec.id);
                    CAPTURE(rec.witness);
                    CHECK(rec.status != CheckStatus::fail);
                }
        }
    }
}

TEST_CASE("negative control: bracket") {
    PiSenModule mod = tate_module();
    mod.nablaPi.at(0, 0) = mod.nablaPi.at(0, 0) + kOne; // weight-preserving entry
    const CheckRecord rec = check_bracket(mod, ctx, kDefaultSlack);
    CHECK(rec.status == CheckStatus::fail);
    CHECK(rec.witness.find("(1,1)") != std::string::npos);
}

TEST_CASE("negative control: nilpotency trace") {
    PiSenModule mod = tate_module();
    mod.nablaPi.at(1, 1) = mod.nablaPi.at(1, 1) + kOne;
    const CheckRecord rec = check_nilpotent(mod, ctx, kDefaultSlack);
    CHECK(rec.status == CheckStatus::fail);
    CHECK(rec.witness.find("tr") != std::string::npos);
}

TEST_CASE("negative control: weight shift") {
    PiSenModule mod = tate_module();
    // send the weight-0 vector to itself as well: image no longer pure weight 1
    mod.nablaPi.at(0, 0) = mod.nablaPi.at(0, 0) + kOne;
    const CheckRecord rec = check_weight_shift(mod, ctx, kDefaultSlack);
    CHECK(rec.status == CheckStatus::fail);
    CHECK_FALSE(rec.witness.empty());
}

TEST_CASE("negative control: crystalline") {
    const PhiNData cry = make(2, RationalMatrix(2, 2), {0, 1}, {0, 0});
    PiSenModule mod = build_from_phin(cry, ctx);
    mod.nablaPi.at(1, 0) = PadicScalar::from_parts(5, 23, 1, 24); // small but nonzero
    const CheckRecord rec = check_crystalline(mod, &cry, ctx, kDefaultSlack);
    CHECK(rec.status == CheckStatus::fail);
    CHECK(rec.witness.find("(2,1)") != std::string::npos);
}

TEST_CASE("negative control: decomposition") {
    PiSenModule mod = tate_module();
    // corrupt a stored eigenvector
    mod.weights.parts[0].basis[0][1] = kOne;
    const CheckRecord rec = check_decomposition(mod, ctx, kDefaultSlack);
    CHECK(rec.status == CheckStatus::fail);
    CHECK_FALSE(rec.witness.empty());
}

TEST_CASE("negative control: transversality") {
    const PhiNData data = make(3, shift_chain(3), {0, 1, 2}, {0, 0, 0});
    PiSenModule mod = build_from_phin(data, ctx);
    // route weight-2 vectors back to weight 0: image leaves the next piece
    mod.nablaPi.at(0, 2) = kOne;
    const CheckRecord rec = check_transversality(mod, 2, ctx, kDefaultSlack);
    CHECK(rec.status == CheckStatus::fail);
    CHECK_FALSE(rec.witness.empty());
}

TEST_CASE("negative control: local monodromy") {
    PiSenModule mod = tate_module();
    mod.nablaPi.at(0, 0) = kOne; // not nilpotent anymore
    const CheckRecord rec = check_local_monodromy(mod, 1, ctx, kDefaultSlack);
    CHECK(rec.status == CheckStatus::fail);
    CHECK_FALSE(rec.witness.empty());
}

TEST_CASE("negative control: limits") {
    PiSenModule mod = tate_module();
    mod.nabla0.at(0, 1) = mod.nabla0.at(0, 1) + kOne; // quotient no longer converges
    const CheckRecord rec = check_limits(mod, ctx, kDefaultSlack);
    CHECK(rec.status == CheckStatus::fail);
    CHECK(rec.witness.find("gamma") != std::string::npos);
}

TEST_CASE("local monodromy skips when weights exceed the total degree") {
    const PiSenModule mod =
        build_from_phin(make(2, shift_chain(2), {0, 3}, {0, -1}), ctx);
    const CheckRecord rec = check_local_monodromy(mod, 1, ctx, kDefaultSlack);
    CHECK(rec.status == CheckStatus::skipped);
}

TEST_CASE("sharp local monodromy bound on the gapped fixture") {
    const PiSenModule mod =
        build_from_phin(make(2, shift_chain(2), {0, 3}, {0, -1}), ctx);
    const BigradedDims dims = bigraded_dims(mod, 3);
    CHECK(monodromy_gap(dims) == 0); // sharp exponent 1, coarse exponent 4
    const CheckRecord rec = check_local_monodromy(mod, 3, ctx, kDefaultSlack);
    CHECK(rec.status == CheckStatus::pass);
    CHECK(mod.nablaPi.pow_int(1).is_zero_to(ctx.precision - kDefaultSlack));
}
