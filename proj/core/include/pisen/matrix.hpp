#pragma once

#include <optional>
#include <vector>

#include "pisen/scalar.hpp"

namespace pisen {

using Vec = std::vector<PadicScalar>;

/// Rectangular matrix over PadicScalar, all entries sharing one prime.
class PadicMatrix {
public:
    PadicMatrix(long rows, long cols, long long p);

    static PadicMatrix identity(long n, long long p);

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    long long prime() const { return p_; }

    PadicScalar& at(long i, long j) { return e_[i * cols_ + j]; }
    const PadicScalar& at(long i, long j) const { return e_[i * cols_ + j]; }

    PadicMatrix operator+(const PadicMatrix& rhs) const;
    PadicMatrix operator-(const PadicMatrix& rhs) const;
    PadicMatrix operator*(const PadicMatrix& rhs) const;
    PadicMatrix operator-() const;
    PadicMatrix scale(const PadicScalar& s) const;
    PadicMatrix div_exact(const BigInt& n) const;
    PadicMatrix pow_int(long e) const;
    PadicMatrix transpose() const;

    /// Gauss-Jordan inverse; pivots chosen by minimal valuation.
    PadicMatrix inverse() const;

    PadicScalar trace() const;
    Vec apply(const Vec& v) const;

    /// Least guaranteed absolute precision over all entries.
    long min_precision() const;
    /// Least entry valuation (zeros contribute their precision).
    long min_valuation() const;
    bool is_zero_to(long prec) const;
    /// No entry carries a certified nonzero digit.
    bool is_zero() const;
    bool equals_to(const PadicMatrix& rhs, long prec) const;
    PadicMatrix truncate(long prec) const;

private:
    long rows_, cols_;
    long long p_;
    std::vector<PadicScalar> e_;
};

PadicMatrix commutator(const PadicMatrix& a, const PadicMatrix& b);

/// log(A) = -sum (I-A)^k / k. Terminates exactly when I-A is nilpotent at
/// working precision; otherwise requires every entry of A-I to have
/// valuation >= 1 (>= 2 for p = 2).
PadicMatrix mat_log(const PadicMatrix& a);
/// exp(A); finite when A is nilpotent, else entrywise convergence domain.
PadicMatrix mat_exp(const PadicMatrix& a);
/// A^a = exp(a * log A) for a p-adic integer exponent.
PadicMatrix mat_pow_zp(const PadicMatrix& a, const PadicScalar& exponent);

/// Least r with N^r = 0 at working precision; nullopt if N^dim != 0.
std::optional<long> nilpotency_index(const PadicMatrix& n);

long rank(const PadicMatrix& a);
/// Kernel basis, each vector normalized so its first nonzero coordinate is 1.
std::vector<Vec> kernel_basis(const PadicMatrix& a);

struct WeightDecomposition {
    struct Part {
        long weight;
        std::vector<Vec> basis;
    };
    long dim = 0;
    std::vector<Part> parts; // sorted by weight

    long multiplicity(long weight) const;
};

/// Splits the space into integer eigenspaces of A with eigenvalues in
/// [lo, hi]; throws spectrum_error when dimensions fail to sum up.
WeightDecomposition weight_decomposition(const PadicMatrix& a, long lo, long hi);

/// Jordan chains of a nilpotent N: each chain [v, Nv, ..., N^{len-1}v]
/// with the last vector killed by N. Chains sorted by decreasing length.
std::vector<std::vector<Vec>> jordan_chains(const PadicMatrix& n);

/// Incremental row space with valuation-pivoted reduction.
class Span {
public:
    explicit Span(long long p) : p_(p) {}
    /// Reduces v against the span; inserts and returns true if independent.
    bool add(Vec v);
    bool contains(Vec v) const;
    long dim() const { return static_cast<long>(rows_.size()); }

private:
    Vec reduce(Vec v) const;
    long long p_;
    std::vector<Vec> rows_;
    std::vector<long> pivots_;
};

} // namespace pisen
