#include "pisen/module.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <utility>

namespace pisen {

namespace {

BigInt factorial(long k) {
    BigInt r = 1;
    for (long i = 2; i <= k; ++i) r *= i;
    return r;
}

BigInt binomial(long n, long k) {
    BigInt r = 1;
    for (long i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

BigRational rational_pow(const BigRational& x, long e) {
    if (e < 0) return BigRational(1) / rational_pow(x, -e);
    BigRational r = 1;
    for (long i = 0; i < e; ++i) r *= x;
    return r;
}

// ---- exact-rational execution of the chain construction ----------------

using MonoKey = std::pair<long, long>; // (t-exponent, u-exponent)
using PolyQ = std::map<MonoKey, BigRational>;

void poly_add(PolyQ& p, const MonoKey& key, const BigRational& c) {
    auto it = p.find(key);
    if (it == p.end()) {
        if (c != 0) p.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second == 0) p.erase(it);
}

BigRational theta_poly(const PolyQ& p) {
    BigRational out = 0;
    for (const auto& [key, c] : p) {
        if (key.first + key.second < 0)
            throw pole_error("theta: pole at t^" + std::to_string(key.first) + " u^" +
                             std::to_string(key.second));
        if (key.first == 0 && key.second == 0) out = c;
    }
    return out;
}

// One chain of the construction: element[pos] maps chain positions to the
// Laurent coordinates of the running expression in the f-basis.
struct ChainElement {
    std::vector<PolyQ> coords; // indexed by chain position
};

// X_pos = t^{m_j} F_j expanded over the f-basis of its chain.
ChainElement chain_basis_element(const std::vector<long>& chain,
                                 const std::vector<long>& twists, long pos) {
    const long len = static_cast<long>(chain.size());
    ChainElement x;
    x.coords.resize(len);
    const long mj = twists[chain[pos]];
    for (long k = 0; pos + k < len; ++k) {
        const long mk = twists[chain[pos + k]];
        poly_add(x.coords[pos + k], {mj - mk - k, k}, BigRational(1) / BigRational(factorial(k)));
    }
    return x;
}

// gamma action: t -> chi t, u fixed, f_l -> chi^{n_l} f_l.
ChainElement act_gamma(const ChainElement& x, const BigRational& chi,
                       const std::vector<long>& chain, const std::vector<long>& weights) {
    ChainElement r;
    r.coords.resize(x.coords.size());
    for (size_t pos = 0; pos < x.coords.size(); ++pos)
        for (const auto& [key, c] : x.coords[pos])
            poly_add(r.coords[pos], key,
                     c * rational_pow(chi, key.first + weights[chain[pos]]));
    return r;
}

// beta action: u -> u + c t, everything else fixed.
ChainElement act_beta(const ChainElement& x, const BigRational& cval) {
    ChainElement r;
    r.coords.resize(x.coords.size());
    for (size_t pos = 0; pos < x.coords.size(); ++pos)
        for (const auto& [key, c] : x.coords[pos]) {
            for (long m = 0; m <= key.second; ++m)
                poly_add(r.coords[pos], {key.first + m, key.second - m},
                         c * BigRational(binomial(key.second, m)) * rational_pow(cval, m));
        }
    return r;
}

// Coordinates of an element in the X-basis (unipotent back-substitution),
// theta-collapsed to scalars. Column of the action matrix for this chain.
std::vector<BigRational> collapse_to_h(ChainElement e, const std::vector<long>& chain,
                                       const std::vector<long>& twists) {
    const long len = static_cast<long>(chain.size());
    std::vector<BigRational> out(len, BigRational(0));
    for (long pos = 0; pos < len; ++pos) {
        const PolyQ x = e.coords[pos]; // coordinate on X_pos
        out[pos] = theta_poly(x);
        const ChainElement basis = chain_basis_element(chain, twists, pos);
        for (const auto& [key, c] : x)
            for (long q = pos; q < len; ++q)
                for (const auto& [bkey, bc] : basis.coords[q])
                    poly_add(e.coords[q],
                             {key.first + bkey.first, key.second + bkey.second}, -c * bc);
    }
    return out;
}

RationalMatrix action_matrix_q(const PhiNData& data,
                               const std::vector<std::vector<long>>& chains,
                               bool gamma_dir, const BigRational& value) {
    RationalMatrix m(data.dim, data.dim);
    for (const auto& chain : chains) {
        const long len = static_cast<long>(chain.size());
        for (long j = 0; j < len; ++j) {
            ChainElement x = chain_basis_element(chain, data.twists, j);
            x = gamma_dir ? act_gamma(x, value, chain, data.weights) : act_beta(x, value);
            const std::vector<BigRational> col = collapse_to_h(std::move(x), chain, data.twists);
            for (long i = 0; i < len; ++i) m.at(chain[i], chain[j]) = col[i];
        }
    }
    return m;
}

// Exact log of a unipotent rational matrix.
RationalMatrix unipotent_log(const RationalMatrix& a) {
    const long n = a.rows();
    const RationalMatrix b = RationalMatrix::identity(n) - a;
    RationalMatrix acc(n, n);
    RationalMatrix bpow = b;
    for (long k = 1; k < n; ++k) {
        acc = acc - bpow.scale(BigRational(1) / BigRational(k));
        if (k + 1 < n) bpow = bpow * b;
    }
    if (n == 1) return acc; // b must be zero, checked by caller
    return acc;
}

} // namespace

PadicMatrix to_padic(const RationalMatrix& m, const PadicContext& ctx) {
    PadicMatrix r(m.rows(), m.cols(), ctx.p);
    for (long i = 0; i < m.rows(); ++i)
        for (long j = 0; j < m.cols(); ++j)
            r.at(i, j) = PadicScalar::from_rational(m.at(i, j), ctx);
    return r;
}

PadicMatrix sandbox_action_matrix(const PhiNData& data, const GroupElement& g,
                                  const PadicContext& ctx) {
    const auto chains = chains_of(data.monodromy);
    if (!chains) throw input_error("sandbox_action_matrix: N is not in chain form");
    PadicMatrix m(data.dim, data.dim, ctx.p);

    for (const auto& chain : *chains) {
        const long len = static_cast<long>(chain.size());
        std::vector<PeriodElement> basis;
        for (long pos = 0; pos < len; ++pos) {
            PeriodElement x(data.dim, data.weights, ctx.p);
            const long mj = data.twists[chain[pos]];
            for (long k = 0; pos + k < len; ++k) {
                const long mk = data.twists[chain[pos + k]];
                x.add_term({mj - mk - k, k, chain[pos + k]},
                           PadicScalar::from_rational(1, factorial(k), ctx));
            }
            basis.push_back(std::move(x));
        }
        for (long j = 0; j < len; ++j) {
            PeriodElement e = act(g, basis[j]);
            // unipotent back-substitution against the X-basis, theta per step
            for (long pos = 0; pos < len; ++pos) {
                std::vector<std::pair<TermKey, PadicScalar>> coord;
                for (const auto& [key, c] : e.terms())
                    if (key.label == chain[pos]) coord.emplace_back(key, c);
                PadicScalar entry = PadicScalar::exact_zero(ctx.p);
                for (const auto& [key, c] : coord) {
                    if (key.t_exp + key.u_exp < 0)
                        throw pole_error("sandbox_action_matrix: pole in coordinate " +
                                         std::to_string(pos + 1));
                    if (key.t_exp == 0 && key.u_exp == 0) entry = entry + c;
                    e = e - basis[pos].shift_monomial(key.t_exp, key.u_exp).scale(c);
                }
                m.at(chain[pos], chain[j]) = entry;
            }
        }
    }
    return m;
}

PiSenModule build_from_phin(const PhiNData& data, const PadicContext& ctx) {
    const ValidationReport rep = validate(data, ctx.p);
    if (!rep.ok())
        throw input_error("build_from_phin: invalid input: " + rep.issues.front().message);
    const auto chains = *chains_of(data.monodromy);
    const long d = data.dim;

    const BigRational chi0_q = BigRational(1 + ctx.p);
    const BigRational c0_q = 1;
    const RationalMatrix a_gamma = action_matrix_q(data, chains, true, chi0_q);
    const RationalMatrix a_beta = action_matrix_q(data, chains, false, c0_q);

    // semidirect relation, exact over Q: gamma beta = beta^{1+p} gamma
    const RationalMatrix lhs = a_gamma * a_beta;
    RationalMatrix beta_pow = RationalMatrix::identity(d);
    for (long k = 0; k < 1 + ctx.p; ++k) beta_pow = beta_pow * a_beta;
    if (!(lhs - beta_pow * a_gamma).is_zero())
        throw consistency_error(
            "build_from_phin: assembled actions violate the semidirect relation");
    if (!(RationalMatrix::identity(d) - a_beta).pow_int(d).is_zero())
        throw consistency_error("build_from_phin: beta action is not unipotent");

    PiSenModule mod;
    mod.dim = d;
    mod.h_labels = chains;
    mod.route = BuildRoute::phin;
    mod.chi0 = PadicScalar::from_rational(chi0_q, ctx);
    mod.c0 = PadicScalar::from_rational(c0_q, ctx);
    mod.gamma_gen = to_padic(a_gamma, ctx);
    mod.beta_gen = to_padic(a_beta, ctx);

    // exact rational route for the Kummer derivation
    mod.nablaPi = to_padic(unipotent_log(a_beta).scale(BigRational(1) / c0_q), ctx);
    // p-adic route for the cyclotomic derivation
    mod.nabla0 = mat_log(mod.gamma_gen).scale(mod.chi0.log().inv());

    const auto [lo, hi] = std::minmax_element(data.weights.begin(), data.weights.end());
    mod.weights = weight_decomposition(mod.nabla0, *lo - 1, *hi + 1);
    return mod;
}

PiSenModule build_from_cocycle(const PadicMatrix& gamma0, const PadicMatrix& beta0,
                               const PadicScalar& chi0, const PadicScalar& c0,
                               const PadicContext& ctx) {
    const long d = gamma0.rows();
    if (gamma0.cols() != d || beta0.rows() != d || beta0.cols() != d)
        throw input_error("build_from_cocycle: square matrices of equal size required");
    const long vmin = (ctx.p == 2) ? 2 : 1;
    const PadicScalar chi_dev = chi0 - PadicScalar::one(ctx.p, PadicScalar::kExact);
    if (chi_dev.is_zero() || chi_dev.valuation() < vmin)
        throw input_error("build_from_cocycle: chi0 must be a 1-unit != 1 in the log domain");
    if (c0.is_zero() || c0.valuation() < 0)
        throw input_error("build_from_cocycle: c0 must be a nonzero p-adic integer");

    const long tol = ctx.precision - kDefaultSlack;
    const PadicMatrix dev = gamma0 * beta0 - mat_pow_zp(beta0, chi0) * gamma0;
    if (!dev.is_zero_to(tol))
        throw relation_error("build_from_cocycle: semidirect relation fails (deviation "
                             "valuation " + std::to_string(dev.min_valuation()) + ")",
                             dev.min_valuation());

    PiSenModule mod;
    mod.dim = d;
    mod.route = BuildRoute::cocycle;
    mod.chi0 = chi0;
    mod.c0 = c0;
    mod.gamma_gen = gamma0;
    mod.beta_gen = beta0;
    mod.nabla0 = mat_log(gamma0).scale(chi0.log().inv());
    mod.nablaPi = mat_log(beta0).scale(c0.inv());
    mod.weights = weight_decomposition(mod.nabla0, -48, 48);

    const auto chains = jordan_chains(mod.nablaPi);
    long next = 0;
    for (const auto& chain : chains) {
        std::vector<long> labels;
        for (size_t i = 0; i < chain.size(); ++i) labels.push_back(next++);
        mod.h_labels.push_back(std::move(labels));
    }
    return mod;
}

BigradedDims bigraded_dims(const PiSenModule& mod, long m) {
    BigradedDims dims;
    dims.m = m;
    dims.dim = mod.dim;
    for (const auto& part : mod.weights.parts)
        dims.by_t[part.weight] = static_cast<long>(part.basis.size());
    return dims;
}

long monodromy_gap(const BigradedDims& dims) {
    // contiguous runs in t are contiguous runs in s = m - t
    long best = 0;
    long run = 0;
    long prev_t = 0;
    bool in_run = false;
    for (const auto& [t, h] : dims.by_t) {
        if (h == 0) continue;
        if (in_run && t == prev_t + 1)
            ++run;
        else
            run = 0;
        in_run = true;
        prev_t = t;
        best = std::max(best, run);
    }
    return best;
}

std::optional<PadicMatrix> find_conjugator(const PiSenModule& a, const PiSenModule& b,
                                           long prec) {
    if (a.dim != b.dim) return std::nullopt;
    const long d = a.dim;
    const long long p = a.nabla0.prime();
    // unknowns P_{ij}; equations P*A - B*P = 0 for both operator pairs
    PadicMatrix sys(2 * d * d, d * d, p);
    const std::pair<const PadicMatrix*, const PadicMatrix*> pairs[2] = {
        {&a.nabla0, &b.nabla0}, {&a.nablaPi, &b.nablaPi}};
    for (long which = 0; which < 2; ++which) {
        const PadicMatrix& am = *pairs[which].first;
        const PadicMatrix& bm = *pairs[which].second;
        for (long r = 0; r < d; ++r)
            for (long c = 0; c < d; ++c) {
                const long row = which * d * d + r * d + c;
                for (long j = 0; j < d; ++j)
                    sys.at(row, r * d + j) = sys.at(row, r * d + j) + am.at(j, c);
                for (long i = 0; i < d; ++i)
                    sys.at(row, i * d + c) = sys.at(row, i * d + c) - bm.at(r, i);
            }
    }
    const std::vector<Vec> ker = kernel_basis(sys);
    if (ker.empty()) return std::nullopt;

    auto reshape = [&](const Vec& v) {
        PadicMatrix m(d, d, p);
        for (long i = 0; i < d; ++i)
            for (long j = 0; j < d; ++j) m.at(i, j) = v[i * d + j];
        return m;
    };
    auto invertible = [&](const PadicMatrix& m) {
        try {
            (void)m.inverse();
            return true;
        } catch (const singular_error&) {
            return false;
        }
    };
    for (const auto& v : ker) {
        PadicMatrix cand = reshape(v);
        if (invertible(cand)) return cand.truncate(prec);
    }
    // search small integer combinations of the kernel basis
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int attempt = 0; attempt < 200; ++attempt) {
        Vec v(d * d, PadicScalar::exact_zero(p));
        for (const auto& k : ker) {
            const int c = coef(rng);
            if (c == 0) continue;
            for (long i = 0; i < d * d; ++i) v[i] = v[i] + k[i].mul_exact(c);
        }
        PadicMatrix cand = reshape(v);
        if (invertible(cand)) return cand.truncate(prec);
    }
    return std::nullopt;
}

} // namespace pisen
