#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pisen/scalar.hpp"

namespace pisen {

/// Dense matrix over exact rationals (input-side arithmetic).
class RationalMatrix {
public:
    RationalMatrix(long rows, long cols);

    static RationalMatrix identity(long n);

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    BigRational& at(long i, long j) { return e_[i * cols_ + j]; }
    const BigRational& at(long i, long j) const { return e_[i * cols_ + j]; }

    RationalMatrix operator+(const RationalMatrix& rhs) const;
    RationalMatrix operator-(const RationalMatrix& rhs) const;
    RationalMatrix operator*(const RationalMatrix& rhs) const;
    RationalMatrix scale(const BigRational& s) const;
    RationalMatrix pow_int(long e) const;
    bool is_zero() const;

private:
    long rows_, cols_;
    std::vector<BigRational> e_;
};

/// Filtered (phi, N) description of a semi-stable representation: the
/// monodromy matrix in a chain basis, optional Frobenius, Hodge-Tate
/// weights n_j and twist exponents m_j per basis index.
struct PhiNData {
    long dim = 0;
    RationalMatrix monodromy{1, 1};
    std::optional<RationalMatrix> frobenius;
    std::vector<long> weights;
    std::vector<long> twists;
};

struct ValidationIssue {
    std::string code; // "nilpotency", "chain_shape", "frobenius", "chain_weights", "twist_monotone", "shape"
    std::string message;
    std::vector<long> indices; // 1-based witness indices
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
};

/// Maximal runs j, j+1, ... with N e_j = e_{j+1}; requires N to send each
/// basis vector to the next one or to zero. 0-based indices.
std::optional<std::vector<std::vector<long>>> chains_of(const RationalMatrix& n);

ValidationReport validate(const PhiNData& data, long long p);

/// Twists making every weight step that is not +1 kill its chain arrow:
/// m stays flat across +1 steps and drops by one elsewhere.
std::vector<long> default_twists(long dim, const RationalMatrix& n,
                                 const std::vector<long>& weights);

} // namespace pisen
