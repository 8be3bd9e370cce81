#include "pisen/period.hpp"

#include <string>

namespace pisen {

namespace {

BigInt binomial(long n, long k) {
    BigInt r = 1;
    for (long i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

} // namespace

PeriodElement::PeriodElement(long dim, std::vector<long> weights, long long p)
    : dim_(dim), weights_(std::move(weights)), p_(p) {
    if (static_cast<long>(weights_.size()) != dim_)
        throw input_error("PeriodElement: weight tags must match dimension");
}

void PeriodElement::add_term(const TermKey& key, const PadicScalar& c) {
    if (key.u_exp < 0) throw input_error("PeriodElement: negative u-exponent");
    if (key.label < 0 || key.label >= dim_)
        throw input_error("PeriodElement: basis label out of range");
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(key, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
}

PeriodElement PeriodElement::operator+(const PeriodElement& rhs) const {
    PeriodElement r = *this;
    for (const auto& [k, c] : rhs.terms_) r.add_term(k, c);
    return r;
}

PeriodElement PeriodElement::operator-(const PeriodElement& rhs) const {
    PeriodElement r = *this;
    for (const auto& [k, c] : rhs.terms_) r.add_term(k, -c);
    return r;
}

PeriodElement PeriodElement::scale(const PadicScalar& s) const {
    PeriodElement r(dim_, weights_, p_);
    for (const auto& [k, c] : terms_) r.add_term(k, c * s);
    return r;
}

PeriodElement PeriodElement::shift_monomial(long t_exp, long u_exp) const {
    PeriodElement r(dim_, weights_, p_);
    for (const auto& [k, c] : terms_)
        r.add_term({k.t_exp + t_exp, k.u_exp + u_exp, k.label}, c);
    return r;
}

PadicScalar PeriodElement::coeff(const TermKey& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? PadicScalar::exact_zero(p_) : it->second;
}

GroupElement GroupElement::identity(long long p, long prec) {
    return {PadicScalar::exact_zero(p), PadicScalar::one(p, prec)};
}

GroupElement GroupElement::gamma(const PadicScalar& chi0) {
    return {PadicScalar::exact_zero(chi0.prime()), chi0};
}

GroupElement GroupElement::beta(const PadicScalar& c0) {
    return {c0, PadicScalar::one(c0.prime(), PadicScalar::kExact)};
}

GroupElement GroupElement::pow(const PadicScalar& a) const {
    return {c * a, chi.pow_zp(a)};
}

GroupElement compose(const GroupElement& g1, const GroupElement& g2) {
    // (beta_{c1} gamma_{chi1})(beta_{c2} gamma_{chi2})
    //   = beta_{c1 + chi1 c2} gamma_{chi1 chi2}
    return {g1.c + g1.chi * g2.c, g1.chi * g2.chi};
}

PeriodElement act(const GroupElement& g, const PeriodElement& x) {
    PeriodElement r(x.dim(), x.weights(), x.prime());
    for (const auto& [key, coeff] : x.terms()) {
        // cyclotomic part: t -> chi t, f_j -> chi^{n_j} f_j, u fixed
        const long chi_exp = key.t_exp + x.weights()[key.label];
        const PadicScalar base = coeff * g.chi.pow_int(chi_exp);
        // Kummer part: u -> u + c t
        if (g.c.is_zero() || key.u_exp == 0) {
            r.add_term(key, base);
            continue;
        }
        PadicScalar cpow = PadicScalar::one(x.prime(), PadicScalar::kExact);
        for (long m = 0; m <= key.u_exp; ++m) {
            r.add_term({key.t_exp + m, key.u_exp - m, key.label},
                       base * cpow.mul_exact(binomial(key.u_exp, m)));
            cpow = cpow * g.c;
        }
    }
    return r;
}

Vec theta(const PeriodElement& x) {
    Vec out(x.dim(), PadicScalar::exact_zero(x.prime()));
    for (const auto& [key, coeff] : x.terms()) {
        // u sits in the maximal ideal with the same filtration weight as t,
        // so a monomial with t_exp + u_exp < 0 has no image.
        if (key.t_exp + key.u_exp < 0)
            throw pole_error("theta: pole at t^" + std::to_string(key.t_exp) +
                             " u^" + std::to_string(key.u_exp) + " f_" +
                             std::to_string(key.label + 1));
        if (key.t_exp == 0 && key.u_exp == 0)
            out[key.label] = out[key.label] + coeff;
    }
    return out;
}

} // namespace pisen
