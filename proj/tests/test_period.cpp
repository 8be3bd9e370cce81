#include <doctest.h>

#include <random>

#include "pisen/period.hpp"

using namespace pisen;

namespace {

const PadicContext ctx{5, 24};

PadicScalar s(long long n, long long d = 1) {
    return PadicScalar::from_rational(BigInt(n), BigInt(d), ctx);
}

PeriodElement random_element(std::mt19937& rng, long dim,
                             const std::vector<long>& weights) {
    std::uniform_int_distribution<long> te(-2, 3);
    std::uniform_int_distribution<long> ue(0, 3);
    std::uniform_int_distribution<long> lab(0, dim - 1);
    std::uniform_int_distribution<long long> cf(-9, 9);
    PeriodElement x(dim, weights, ctx.p);
    for (int i = 0; i < 5; ++i) x.add_term({te(rng), ue(rng), lab(rng)}, s(cf(rng)));
    return x;
}

bool coeffs_match(const PeriodElement& a, const PeriodElement& b, long prec) {
    const PeriodElement d = a - b;
    for (const auto& [k, c] : d.terms())
        if (!c.is_zero_to(prec)) return false;
    return true;
}

} // namespace

TEST_CASE("gamma scales t, beta shears u") {
    const std::vector<long> w{0};
    PeriodElement t(1, w, ctx.p);
    t.add_term({1, 0, 0}, PadicScalar::one(ctx.p, 24));

    const GroupElement g = GroupElement::gamma(s(6));
    const PeriodElement gt = act(g, t);
    CHECK(gt.coeff({1, 0, 0}).equals_to(s(6), 24));
    CHECK(gt.terms().size() == 1);

    PeriodElement u(1, w, ctx.p);
    u.add_term({0, 1, 0}, PadicScalar::one(ctx.p, 24));
    const GroupElement b = GroupElement::beta(s(1));
    const PeriodElement bu = act(b, u);
    CHECK(bu.coeff({0, 1, 0}).equals_to(s(1), 24));
    CHECK(bu.coeff({1, 0, 0}).equals_to(s(1), 24)); // u + t

    // a pure symbol of weight 0 is fixed by a pure beta element
    PeriodElement f(1, w, ctx.p);
    f.add_term({0, 0, 0}, PadicScalar::one(ctx.p, 24));
    CHECK(coeffs_match(act(b, f), f, 24));
}

TEST_CASE("gamma twists labels by their weight") {
    const std::vector<long> w{2};
    PeriodElement f(1, w, ctx.p);
    f.add_term({0, 0, 0}, PadicScalar::one(ctx.p, 24));
    const PeriodElement gf = act(GroupElement::gamma(s(6)), f);
    CHECK(gf.coeff({0, 0, 0}).equals_to(s(36), 24)); // chi^2
}

TEST_CASE("compose is the normal-form product") {
    const GroupElement id = GroupElement::identity(ctx.p, 24);
    const GroupElement g = GroupElement::gamma(s(6));
    const GroupElement b = GroupElement::beta(s(3));

    const GroupElement ig = compose(id, g);
    CHECK(ig.chi.equals_to(g.chi, 24));
    CHECK(ig.c.is_zero());

    // gamma then beta: the c-value picks up a factor chi
    const GroupElement gb = compose(g, b);
    CHECK(gb.c.equals_to(s(18), 24));
    CHECK(gb.chi.equals_to(s(6), 24));
}

TEST_CASE("act respects compose on random triples") {
    std::mt19937 rng(29);
    std::uniform_int_distribution<long long> kc(-20, 20);
    const std::vector<long> w{0, 1, 3};
    for (int i = 0; i < 50; ++i) {
        const GroupElement g1{s(kc(rng)), s(1 + 5 * kc(rng))};
        const GroupElement g2{s(kc(rng)), s(1 + 5 * kc(rng))};
        const PeriodElement x = random_element(rng, 3, w);
        const PeriodElement lhs = act(compose(g1, g2), x);
        const PeriodElement rhs = act(g1, act(g2, x));
        CHECK(coeffs_match(lhs, rhs, 18));
    }
}

TEST_CASE("semidirect relation at group and action level") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<long long> kc(-20, 20);
    const std::vector<long> w{0, 2};
    for (int i = 0; i < 50; ++i) {
        const PadicScalar chi0 = s(1 + 5 * (1 + std::abs(kc(rng))));
        const PadicScalar c0 = s(kc(rng));
        const GroupElement g = GroupElement::gamma(chi0);
        const GroupElement b = GroupElement::beta(c0);

        const GroupElement lhs = compose(g, b);
        const GroupElement rhs = compose(b.pow(chi0), g);
        CHECK(lhs.c.equals_to(rhs.c, 20));
        CHECK(lhs.chi.equals_to(rhs.chi, 20));

        const PeriodElement x = random_element(rng, 2, w);
        CHECK(coeffs_match(act(lhs, x), act(rhs, x), 18));
    }
}

TEST_CASE("action degree compatibility") {
    std::mt19937 rng(37);
    const std::vector<long> w{0, 1};
    for (int i = 0; i < 30; ++i) {
        const PeriodElement x = random_element(rng, 2, w);

        // gamma preserves each (t, u) bidegree slot
        const PeriodElement gx = act(GroupElement::gamma(s(6)), x);
        for (const auto& [k, c] : gx.terms())
            CHECK_FALSE(x.coeff(k).is_zero());

        // beta preserves total degree i + k
        const PeriodElement bx = act(GroupElement::beta(s(2)), x);
        for (const auto& [k, c] : bx.terms()) {
            bool covered = false;
            for (const auto& [k0, c0] : x.terms())
                if (k0.label == k.label && k0.t_exp + k0.u_exp == k.t_exp + k.u_exp) {
                    covered = true;
                    break;
                }
            CHECK(covered);
        }
    }
}

TEST_CASE("theta extracts constant coefficients") {
    const std::vector<long> w{0, 1};
    PeriodElement x(2, w, ctx.p);
    x.add_term({0, 0, 1}, PadicScalar::one(ctx.p, 24));
    x.add_term({1, 0, 0}, s(7)); // t f_1 dies under theta
    const Vec v = theta(x);
    CHECK(v[0].is_zero());
    CHECK(v[1].equals_to(PadicScalar::one(ctx.p, 24), 24));

    PeriodElement pure(2, w, ctx.p);
    pure.add_term({0, 0, 0}, PadicScalar::one(ctx.p, 24));
    const Vec u = theta(pure);
    CHECK(u[0].equals_to(PadicScalar::one(ctx.p, 24), 24));
    CHECK(u[1].is_zero());

    PeriodElement pole(2, w, ctx.p);
    pole.add_term({-1, 0, 0}, PadicScalar::one(ctx.p, 24));
    CHECK_THROWS_AS(theta(pole), pole_error);

    // a negative t-power under at least as many u-powers is not a pole
    PeriodElement mixed(2, w, ctx.p);
    mixed.add_term({-1, 1, 0}, PadicScalar::one(ctx.p, 24));
    CHECK(theta(mixed)[0].is_zero());
}

TEST_CASE("theta kills multiples of t and u") {
    std::mt19937 rng(41);
    const std::vector<long> w{0, 1, 2};
    for (int i = 0; i < 20; ++i) {
        PeriodElement x = random_element(rng, 3, w);
        // shift so every term has t_exp + u_exp >= 0 before multiplying
        x = x.shift_monomial(3, 0);
        for (const auto& v : theta(x.shift_monomial(1, 0))) CHECK(v.is_zero());
        for (const auto& v : theta(x.shift_monomial(0, 1))) CHECK(v.is_zero());
    }
}

TEST_CASE("element construction guards") {
    const std::vector<long> w{0};
    PeriodElement x(1, w, ctx.p);
    CHECK_THROWS_AS(x.add_term({0, -1, 0}, s(1)), input_error);
    CHECK_THROWS_AS(x.add_term({0, 0, 1}, s(1)), input_error);
    CHECK_THROWS_AS(PeriodElement(2, w, ctx.p), input_error);

    x.add_term({0, 0, 0}, s(1));
    x.add_term({0, 0, 0}, s(-1));
    CHECK(x.is_zero());
}
