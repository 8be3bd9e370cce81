#pragma once

#include <map>
#include <optional>
#include <vector>

#include "pisen/matrix.hpp"
#include "pisen/period.hpp"
#include "pisen/phin.hpp"

namespace pisen {

inline constexpr long kDefaultSlack = 6;

enum class BuildRoute { phin, cocycle };

/// The differential module attached to a semi-stable input: the h-basis
/// with the two derivations, the cyclotomic one with integer spectrum and
/// the nilpotent Kummer one, plus the generator actions they came from.
struct PiSenModule {
    long dim = 0;
    std::vector<std::vector<long>> h_labels; // basis indices grouped by chain
    PadicMatrix nabla0{1, 1, 5};
    PadicMatrix nablaPi{1, 1, 5};
    WeightDecomposition weights;
    BuildRoute route = BuildRoute::phin;

    // generator data the operators were extracted from
    PadicMatrix gamma_gen{1, 1, 5};
    PadicMatrix beta_gen{1, 1, 5};
    PadicScalar chi0 = PadicScalar::exact_zero(5);
    PadicScalar c0 = PadicScalar::exact_zero(5);
};

/// Dimensions of the bigraded pieces in total degree m: (s, t) with
/// s + t = m, h^{m-t,t} = multiplicity of eigenvalue t.
struct BigradedDims {
    long m = 0;
    long dim = 0;
    std::map<long, long> by_t; // t -> h^{m-t,t}, nonzero entries only
};

/// Executes the twisted-basis construction for validated (phi, N, weights,
/// twists) data: per chain, expresses the h-basis through the period
/// sandbox, extracts the generator actions, and takes their logarithms.
PiSenModule build_from_phin(const PhiNData& data, const PadicContext& ctx);

/// Builds the module directly from generator images: checks the
/// semidirect relation gamma beta gamma^-1 = beta^chi, then
/// nabla0 = log(gamma0)/log(chi0) and nablaPi = log(beta0)/c0.
PiSenModule build_from_cocycle(const PadicMatrix& gamma0, const PadicMatrix& beta0,
                               const PadicScalar& chi0, const PadicScalar& c0,
                               const PadicContext& ctx);

BigradedDims bigraded_dims(const PiSenModule& mod, long m);

/// Longest contiguous run [a,b] of s-indices with nonzero h^{s,m-s},
/// returned as b - a (0 for singleton runs).
long monodromy_gap(const BigradedDims& dims);

/// Searches for an invertible P with P a.nabla0 = b.nabla0 P and
/// P a.nablaPi = b.nablaPi P, certified to the given precision.
std::optional<PadicMatrix> find_conjugator(const PiSenModule& a, const PiSenModule& b,
                                           long prec);

/// Entrywise conversion at the context precision.
PadicMatrix to_padic(const RationalMatrix& m, const PadicContext& ctx);

/// The generator action matrices computed through the p-adic period
/// sandbox (exposed for cross-route consistency checks and tests):
/// column j holds the coordinates of g(h_j) in the h-basis.
PadicMatrix sandbox_action_matrix(const PhiNData& data, const GroupElement& g,
                                  const PadicContext& ctx);

} // namespace pisen
