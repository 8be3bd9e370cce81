#include "pisen/scalar.hpp"

#include <algorithm>
#include <utility>

namespace pisen {

namespace {

long clamp_prec(long prec) {
    return std::min(prec, PadicScalar::kExact);
}

bool prec_is_exact(long prec) { return prec >= PadicScalar::kExact; }

// relative precision of a unit*p^v known to absolute precision prec
long rel_prec(long prec, long v) {
    return prec_is_exact(prec) ? PadicScalar::kExact : prec - v;
}

// Valuation of a nonzero integer.
long vp_int(BigInt n, long long p) {
    long v = 0;
    BigInt q, r;
    for (;;) {
        boost::multiprecision::divide_qr(n, BigInt(p), q, r);
        if (r != 0) return v;
        n = std::move(q);
        ++v;
    }
}

BigInt pow_int_big(long long p, long e) {
    BigInt r = 1;
    BigInt base = p;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// Inverse of a mod m (m a power of p, a coprime to p), extended Euclid.
BigInt mod_inverse(BigInt a, const BigInt& m) {
    a %= m;
    if (a < 0) a += m;
    BigInt r0 = m, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
        BigInt q = r0 / r1;
        BigInt r2 = r0 - q * r1;
        BigInt s2 = s0 - q * s1;
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
    }
    if (r0 != 1) throw domain_error("mod_inverse: argument not a unit");
    s0 %= m;
    if (s0 < 0) s0 += m;
    return s0;
}

long floor_log_base(long long p, long k) {
    long e = 0;
    long long acc = 1;
    while (acc <= k / p) { acc *= p; ++e; }
    if (acc * p <= k) ++e;
    return e;
}

} // namespace

PadicContext::PadicContext(long long p, long precision) : p(p), precision(precision) {
    if (!is_prime(p)) throw input_error("p must be prime, got " + std::to_string(p));
    if (precision < 4) throw input_error("precision must be at least 4");
}

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PadicScalar PadicScalar::exact_zero(long long p) {
    return PadicScalar(p, kExact, 0, kExact);
}

PadicScalar PadicScalar::zero(long long p, long prec) {
    prec = clamp_prec(prec);
    return PadicScalar(p, prec, 0, prec);
}

PadicScalar PadicScalar::one(long long p, long prec) {
    return PadicScalar(p, 0, 1, clamp_prec(prec));
}

PadicScalar PadicScalar::from_integer(const BigInt& n, const PadicContext& ctx) {
    return from_rational(n, 1, ctx);
}

PadicScalar PadicScalar::from_rational(const BigInt& num, const BigInt& den,
                                       const PadicContext& ctx) {
    if (den == 0) throw domain_error("from_rational: zero denominator");
    if (num == 0) return exact_zero(ctx.p);
    const long a = vp_int(num, ctx.p);
    const long b = vp_int(den, ctx.p);
    const long v = a - b;
    const long rel = ctx.precision - v;
    if (rel <= 0) return zero(ctx.p, ctx.precision);
    const BigInt mod = pow_int_big(ctx.p, rel);
    BigInt nu = (num / pow_int_big(ctx.p, a)) % mod;
    if (nu < 0) nu += mod;
    BigInt du = (den / pow_int_big(ctx.p, b)) % mod;
    BigInt unit = (nu * mod_inverse(du, mod)) % mod;
    return PadicScalar(ctx.p, v, std::move(unit), ctx.precision);
}

PadicScalar PadicScalar::from_rational(const BigRational& q, const PadicContext& ctx) {
    return from_rational(boost::multiprecision::numerator(q),
                         boost::multiprecision::denominator(q), ctx);
}

PadicScalar PadicScalar::from_parts(long long p, long v, const BigInt& unit, long prec) {
    if (unit == 0) return prec >= kExact ? exact_zero(p) : zero(p, prec);
    if (unit % p == 0) throw input_error("from_parts: unit part divisible by p");
    if (prec <= v) throw input_error("from_parts: precision does not exceed valuation");
    return PadicScalar(p, v, unit, clamp_prec(prec));
}

BigInt PadicScalar::pow_p(long e) const { return pow_int_big(p_, e); }

PadicScalar PadicScalar::operator+(const PadicScalar& rhs) const {
    if (is_exact_zero()) return rhs;
    if (rhs.is_exact_zero()) return *this;
    const long w = std::min(prec_, rhs.prec_);
    const long v0 = std::min(v_, rhs.v_);
    if (v0 >= w) return zero(p_, w);
    BigInt s = unit_ * pow_p(v_ - v0) + rhs.unit_ * rhs.pow_p(rhs.v_ - v0);
    if (!prec_is_exact(w)) {
        const BigInt mod = pow_p(w - v0);
        s %= mod;
        if (s < 0) s += mod;
    }
    if (s == 0) return zero(p_, w);
    const long t = vp_int(s, p_);
    long v = v0 + t;
    if (v >= w) return zero(p_, w);
    return PadicScalar(p_, v, s / pow_p(t), w);
}

PadicScalar PadicScalar::operator-() const {
    if (is_zero()) return *this;
    if (prec_is_exact(prec_)) return PadicScalar(p_, v_, -unit_, prec_);
    return PadicScalar(p_, v_, pow_p(prec_ - v_) - unit_, prec_);
}

PadicScalar PadicScalar::operator-(const PadicScalar& rhs) const {
    return *this + (-rhs);
}

PadicScalar PadicScalar::operator*(const PadicScalar& rhs) const {
    if (is_exact_zero() || rhs.is_exact_zero()) return exact_zero(p_);
    if (is_zero() || rhs.is_zero()) {
        // zero at precision times unit*p^v is zero at precision + v
        const long v = clamp_prec(v_ + rhs.v_);
        return zero(p_, v);
    }
    const long rel = std::min(rel_prec(prec_, v_), rel_prec(rhs.prec_, rhs.v_));
    const long v = v_ + rhs.v_;
    BigInt u = unit_ * rhs.unit_;
    if (!prec_is_exact(rel)) {
        const BigInt mod = pow_p(rel);
        u %= mod;
        if (u < 0) u += mod;
    }
    return PadicScalar(p_, v, std::move(u), clamp_prec(v + rel));
}

PadicScalar PadicScalar::inv() const {
    if (is_zero()) throw domain_error("inv: zero is not invertible");
    const long rel = rel_prec(prec_, v_);
    if (prec_is_exact(rel)) {
        if (unit_ == 1 || unit_ == -1)
            return PadicScalar(p_, -v_, unit_, kExact);
        throw precision_error("inv: exact non-trivial unit has no finite expansion");
    }
    const BigInt mod = pow_p(rel);
    return PadicScalar(p_, -v_, mod_inverse(unit_, mod), prec_ - 2 * v_);
}

PadicScalar PadicScalar::mul_exact(const BigInt& n) const {
    if (n == 0) return exact_zero(p_);
    const long t = vp_int(n, p_);
    if (is_zero()) return zero(p_, clamp_prec(prec_ + t));
    const long rel = rel_prec(prec_, v_);
    BigInt u = unit_ * (n / pow_p(t));
    if (!prec_is_exact(rel)) {
        const BigInt mod = pow_p(rel);
        u %= mod;
        if (u < 0) u += mod;
    }
    return PadicScalar(p_, v_ + t, std::move(u), clamp_prec(prec_ + t));
}

PadicScalar PadicScalar::div_exact(const BigInt& n) const {
    if (n == 0) throw domain_error("div_exact: division by zero");
    const long t = vp_int(n, p_);
    if (is_exact_zero()) return *this;
    if (is_zero()) return zero(p_, prec_ - t);
    const long rel = rel_prec(prec_, v_);
    if (prec_is_exact(rel)) {
        const BigInt m = n / pow_p(t);
        if (unit_ % m == 0) return PadicScalar(p_, v_ - t, unit_ / m, kExact);
        throw precision_error("div_exact: exact value has no finite expansion");
    }
    const BigInt mod = pow_p(rel);
    BigInt u = (unit_ * mod_inverse(n / pow_p(t), mod)) % mod;
    return PadicScalar(p_, v_ - t, std::move(u), prec_ - t);
}

PadicScalar PadicScalar::shift(long e) const {
    if (is_exact_zero()) return *this;
    if (is_zero()) return zero(p_, prec_ + e);
    return PadicScalar(p_, v_ + e, unit_, clamp_prec(prec_ + e));
}

PadicScalar PadicScalar::pow_int(long e) const {
    if (e < 0) return inv().pow_int(-e);
    if (e == 0) return one(p_, is_zero() ? prec_ : rel_prec(prec_, v_));
    PadicScalar acc = one(p_, kExact);
    PadicScalar base = *this;
    for (;;) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e == 0) break;
        base = base * base;
    }
    return acc;
}

PadicScalar PadicScalar::truncate(long prec) const {
    if (prec >= kExact) prec = kExact;
    if (prec >= prec_) return *this;
    if (prec <= v_ || is_zero()) return zero(p_, prec);
    const BigInt mod = pow_p(prec - v_);
    BigInt u = unit_ % mod;
    if (u < 0) u += mod;
    return PadicScalar(p_, v_, std::move(u), prec);
}

bool PadicScalar::equals_to(const PadicScalar& rhs, long prec) const {
    return (*this - rhs).is_zero_to(prec);
}

bool PadicScalar::same_repr(const PadicScalar& rhs) const {
    return p_ == rhs.p_ && v_ == rhs.v_ && prec_ == rhs.prec_ && unit_ == rhs.unit_;
}

PadicScalar PadicScalar::log() const {
    const PadicScalar y = *this - one(p_, kExact);
    if (y.is_zero()) return y.is_exact_zero() ? exact_zero(p_) : zero(p_, y.precision());
    const long vmin = (p_ == 2) ? 2 : 1;
    if (y.valuation() < vmin)
        throw domain_error("log: v(x - 1) = " + std::to_string(y.valuation()) +
                           " below convergence bound " + std::to_string(vmin));
    const long target = y.precision();
    const long cutoff = log_series_cutoff(p_, y.valuation(), target);
    PadicScalar acc = zero(p_, target);
    PadicScalar ypow = y;
    for (long k = 1; k <= cutoff; ++k) {
        const PadicScalar term = ypow.div_exact(k);
        acc = (k % 2 == 1) ? acc + term : acc - term;
        if (k < cutoff) ypow = ypow * y;
    }
    return acc.truncate(target);
}

PadicScalar PadicScalar::exp() const {
    if (is_zero()) return one(p_, prec_);
    const long vmin = (p_ == 2) ? 2 : 1;
    if (v_ < vmin)
        throw domain_error("exp: v(x) = " + std::to_string(v_) +
                           " below convergence bound " + std::to_string(vmin));
    const long target = prec_;
    // v(x^k / k!) >= k*v - (k-1)/(p-1); sum until that bound clears target.
    long cutoff = 1;
    while (cutoff * v_ - (cutoff - 1) / (p_ - 1) < target) ++cutoff;
    PadicScalar acc = one(p_, target);
    PadicScalar term = *this;
    for (long k = 1; k <= cutoff; ++k) {
        acc = acc + term;
        if (k < cutoff) term = (term * *this).div_exact(k + 1);
    }
    return acc.truncate(target);
}

PadicScalar PadicScalar::pow_zp(const PadicScalar& a) const {
    if (!a.is_zero() && a.valuation() < 0)
        throw domain_error("pow_zp: exponent is not a p-adic integer");
    if (a.is_exact_zero()) return one(p_, is_zero() ? prec_ : rel_prec(prec_, v_));
    return (a * log()).exp();
}

BigRational PadicScalar::representative() const {
    if (is_zero()) return BigRational(0);
    BigRational r(unit_);
    if (v_ >= 0) return r * BigRational(pow_p(v_));
    return r / BigRational(pow_p(-v_));
}

std::string PadicScalar::to_string() const {
    const BigRational r = representative();
    std::string s = boost::multiprecision::numerator(r).str();
    if (boost::multiprecision::denominator(r) != 1)
        s += "/" + boost::multiprecision::denominator(r).str();
    return s;
}

long log_series_cutoff(long long p, long term_valuation, long target_prec) {
    // First K with k*v - floor(log_p k) >= target for all k >= K; the
    // bound is nondecreasing in k once v >= 1, so the first crossing works.
    long k = 1;
    while (k * term_valuation - floor_log_base(p, k) < target_prec) ++k;
    return k;
}

} // namespace pisen
