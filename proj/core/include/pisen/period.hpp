#pragma once

#include <compare>
#include <map>
#include <vector>

#include "pisen/matrix.hpp"
#include "pisen/scalar.hpp"

namespace pisen {

/// One monomial slot t^i u^k tensor basis symbol f_j.
struct TermKey {
    long t_exp;
    long u_exp;
    long label; // 0-based basis index

    auto operator<=>(const TermKey&) const = default;
};

/// Finite sum of coefficients times t^i u^k f_j, the truncated model of
/// the period ring tensored with a weight-tagged module. t scales under
/// the cyclotomic direction, u shears into t under the Kummer direction,
/// and f_j carries weight n_j.
class PeriodElement {
public:
    PeriodElement(long dim, std::vector<long> weights, long long p);

    long dim() const { return dim_; }
    long long prime() const { return p_; }
    const std::vector<long>& weights() const { return weights_; }
    const std::map<TermKey, PadicScalar>& terms() const { return terms_; }

    /// Adds c * t^i u^k f_j; terms that become zero at working precision
    /// are dropped.
    void add_term(const TermKey& key, const PadicScalar& c);
    PeriodElement operator+(const PeriodElement& rhs) const;
    PeriodElement operator-(const PeriodElement& rhs) const;
    PeriodElement scale(const PadicScalar& s) const;
    /// Multiplies every term by t^i u^k.
    PeriodElement shift_monomial(long t_exp, long u_exp) const;

    bool is_zero() const { return terms_.empty(); }
    PadicScalar coeff(const TermKey& key) const;

private:
    long dim_;
    std::vector<long> weights_;
    long long p_;
    std::map<TermKey, PadicScalar> terms_;
};

/// Element of the semidirect product in normal form (Kummer part then
/// cyclotomic part): g = beta_c * gamma_chi.
struct GroupElement {
    PadicScalar c;   // Z_p value of the Kummer character
    PadicScalar chi; // 1-unit value of the cyclotomic character

    static GroupElement identity(long long p, long prec);
    static GroupElement gamma(const PadicScalar& chi0);
    static GroupElement beta(const PadicScalar& c0);

    /// g^a for a p-adic integer a (powers both directions coherently).
    GroupElement pow(const PadicScalar& a) const;
};

/// Normal-form composition; moving gamma past beta scales the c-value
/// by chi, so act(compose(g1,g2), x) = act(g1, act(g2, x)).
GroupElement compose(const GroupElement& g1, const GroupElement& g2);

/// Group action: t -> chi t, u -> u + c t, f_j -> chi^{n_j} f_j.
PeriodElement act(const GroupElement& g, const PeriodElement& x);

/// theta specialization: extracts the constant (i=0, k=0) coefficient per
/// basis label; throws pole_error if a negative t-power survives.
Vec theta(const PeriodElement& x);

} // namespace pisen
