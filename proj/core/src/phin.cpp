#include "pisen/phin.hpp"

namespace pisen {

RationalMatrix::RationalMatrix(long rows, long cols)
    : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows * cols), BigRational(0)) {
    if (rows <= 0 || cols <= 0) throw input_error("matrix dimensions must be positive");
}

RationalMatrix RationalMatrix::identity(long n) {
    RationalMatrix m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& rhs) const {
    RationalMatrix r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + rhs.e_[i];
    return r;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& rhs) const {
    RationalMatrix r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - rhs.e_[i];
    return r;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw input_error("rational matrix product shape mismatch");
    RationalMatrix r(rows_, rhs.cols_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < rhs.cols_; ++j) {
            BigRational acc = 0;
            for (long k = 0; k < cols_; ++k) acc += at(i, k) * rhs.at(k, j);
            r.at(i, j) = acc;
        }
    return r;
}

RationalMatrix RationalMatrix::scale(const BigRational& s) const {
    RationalMatrix r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * s;
    return r;
}

RationalMatrix RationalMatrix::pow_int(long e) const {
    RationalMatrix acc = identity(rows_);
    for (long k = 0; k < e; ++k) acc = acc * *this;
    return acc;
}

bool RationalMatrix::is_zero() const {
    for (const auto& x : e_)
        if (x != 0) return false;
    return true;
}

std::optional<std::vector<std::vector<long>>> chains_of(const RationalMatrix& n) {
    const long d = n.rows();
    if (n.cols() != d) return std::nullopt;
    // Column j must be zero or the unit vector e_{j+1}.
    std::vector<bool> arrow(d, false);
    for (long j = 0; j < d; ++j) {
        bool zero_col = true;
        for (long i = 0; i < d; ++i)
            if (n.at(i, j) != 0) { zero_col = false; break; }
        if (zero_col) continue;
        if (j + 1 >= d) return std::nullopt;
        for (long i = 0; i < d; ++i) {
            const BigRational expected = (i == j + 1) ? 1 : 0;
            if (n.at(i, j) != expected) return std::nullopt;
        }
        arrow[j] = true;
    }
    std::vector<std::vector<long>> chains;
    long j = 0;
    while (j < d) {
        std::vector<long> chain{j};
        while (arrow[j]) chain.push_back(++j);
        chains.push_back(std::move(chain));
        ++j;
    }
    return chains;
}

ValidationReport validate(const PhiNData& data, long long p) {
    ValidationReport rep;
    const long d = data.dim;
    if (data.monodromy.rows() != d || data.monodromy.cols() != d ||
        static_cast<long>(data.weights.size()) != d ||
        static_cast<long>(data.twists.size()) != d) {
        rep.issues.push_back({"shape", "dimension mismatch between N, weights and twists", {}});
        return rep;
    }
    if (!data.monodromy.pow_int(d).is_zero())
        rep.issues.push_back({"nilpotency", "N^d != 0", {}});
    if (data.frobenius) {
        if (data.frobenius->rows() != d || data.frobenius->cols() != d) {
            rep.issues.push_back({"shape", "phi has wrong dimensions", {}});
            return rep;
        }
        const RationalMatrix diff = data.monodromy * *data.frobenius -
            (*data.frobenius * data.monodromy).scale(BigRational(p));
        if (!diff.is_zero())
            rep.issues.push_back({"frobenius", "N phi != p phi N", {}});
    }
    const auto chains = chains_of(data.monodromy);
    if (!chains) {
        rep.issues.push_back(
            {"chain_shape",
             "N is not in chain form (each column must be zero or the next unit vector)",
             {}});
        return rep;
    }
    for (const auto& chain : *chains) {
        const long len = static_cast<long>(chain.size());
        for (long a = 0; a < len; ++a)
            for (long b = a + 1; b < len; ++b) {
                const long j = chain[a], jk = chain[b];
                if (data.twists[jk] > data.twists[j] && b == a + 1)
                    rep.issues.push_back({"twist_monotone",
                                          "twists rise along a chain (m_" +
                                              std::to_string(jk + 1) + " > m_" +
                                              std::to_string(j + 1) + ")",
                                          {j + 1, jk + 1}});
                if (data.twists[jk] == data.twists[j] &&
                    data.weights[jk] != data.weights[j] + (b - a))
                    rep.issues.push_back(
                        {"chain_weights",
                         "equal twists force consecutive weights: expected n_" +
                             std::to_string(jk + 1) + " = " +
                             std::to_string(data.weights[j] + (b - a)) + ", got " +
                             std::to_string(data.weights[jk]),
                         {j + 1, jk + 1}});
            }
    }
    return rep;
}

std::vector<long> default_twists(long dim, const RationalMatrix& n,
                                 const std::vector<long>& weights) {
    const auto chains = chains_of(n);
    if (!chains) throw input_error("default_twists: N is not in chain form");
    std::vector<long> twists(dim, 0);
    for (const auto& chain : *chains) {
        long m = 0;
        for (size_t a = 0; a < chain.size(); ++a) {
            if (a > 0 && weights[chain[a]] != weights[chain[a - 1]] + 1) --m;
            twists[chain[a]] = m;
        }
    }
    return twists;
}

} // namespace pisen
