#include "pisen/matrix.hpp"

#include <algorithm>
#include <string>

namespace pisen {

namespace {

long floor_log_base(long long p, long k) {
    long e = 0;
    long long acc = 1;
    while (acc <= k / p) { acc *= p; ++e; }
    if (acc * p <= k) ++e;
    return e;
}

void check_same_shape(const PadicMatrix& a, const PadicMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || a.prime() != b.prime())
        throw input_error("matrix shape/prime mismatch");
}

void check_square(const PadicMatrix& a) {
    if (a.rows() != a.cols()) throw input_error("square matrix required");
}

} // namespace

PadicMatrix::PadicMatrix(long rows, long cols, long long p)
    : rows_(rows), cols_(cols), p_(p),
      e_(static_cast<size_t>(rows * cols), PadicScalar::exact_zero(p)) {
    if (rows <= 0 || cols <= 0) throw input_error("matrix dimensions must be positive");
}

PadicMatrix PadicMatrix::identity(long n, long long p) {
    PadicMatrix m(n, n, p);
    for (long i = 0; i < n; ++i) m.at(i, i) = PadicScalar::one(p, PadicScalar::kExact);
    return m;
}

PadicMatrix PadicMatrix::operator+(const PadicMatrix& rhs) const {
    check_same_shape(*this, rhs);
    PadicMatrix r(rows_, cols_, p_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + rhs.e_[i];
    return r;
}

PadicMatrix PadicMatrix::operator-(const PadicMatrix& rhs) const {
    check_same_shape(*this, rhs);
    PadicMatrix r(rows_, cols_, p_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - rhs.e_[i];
    return r;
}

PadicMatrix PadicMatrix::operator-() const {
    PadicMatrix r(rows_, cols_, p_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = -e_[i];
    return r;
}

PadicMatrix PadicMatrix::operator*(const PadicMatrix& rhs) const {
    if (cols_ != rhs.rows_ || p_ != rhs.p_)
        throw input_error("matrix product shape/prime mismatch");
    PadicMatrix r(rows_, rhs.cols_, p_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < rhs.cols_; ++j) {
            PadicScalar acc = PadicScalar::exact_zero(p_);
            for (long k = 0; k < cols_; ++k)
                acc = acc + at(i, k) * rhs.at(k, j);
            r.at(i, j) = acc;
        }
    return r;
}

PadicMatrix PadicMatrix::scale(const PadicScalar& s) const {
    PadicMatrix r(rows_, cols_, p_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * s;
    return r;
}

PadicMatrix PadicMatrix::div_exact(const BigInt& n) const {
    PadicMatrix r(rows_, cols_, p_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i].div_exact(n);
    return r;
}

PadicMatrix PadicMatrix::pow_int(long e) const {
    check_square(*this);
    PadicMatrix acc = identity(rows_, p_);
    for (long k = 0; k < e; ++k) acc = acc * *this;
    return acc;
}

PadicMatrix PadicMatrix::transpose() const {
    PadicMatrix r(cols_, rows_, p_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

PadicScalar PadicMatrix::trace() const {
    check_square(*this);
    PadicScalar acc = PadicScalar::exact_zero(p_);
    for (long i = 0; i < rows_; ++i) acc = acc + at(i, i);
    return acc;
}

Vec PadicMatrix::apply(const Vec& v) const {
    if (static_cast<long>(v.size()) != cols_)
        throw input_error("apply: vector length mismatch");
    Vec r;
    r.reserve(rows_);
    for (long i = 0; i < rows_; ++i) {
        PadicScalar acc = PadicScalar::exact_zero(p_);
        for (long j = 0; j < cols_; ++j) acc = acc + at(i, j) * v[j];
        r.push_back(acc);
    }
    return r;
}

long PadicMatrix::min_precision() const {
    long m = PadicScalar::kExact;
    for (const auto& x : e_) m = std::min(m, x.precision());
    return m;
}

long PadicMatrix::min_valuation() const {
    long m = PadicScalar::kExact;
    for (const auto& x : e_) m = std::min(m, x.valuation());
    return m;
}

bool PadicMatrix::is_zero_to(long prec) const {
    for (const auto& x : e_)
        if (!x.is_zero_to(prec)) return false;
    return true;
}

bool PadicMatrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

bool PadicMatrix::equals_to(const PadicMatrix& rhs, long prec) const {
    return (*this - rhs).is_zero_to(prec);
}

PadicMatrix PadicMatrix::truncate(long prec) const {
    PadicMatrix r(rows_, cols_, p_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i].truncate(prec);
    return r;
}

namespace {

// Exact units other than +-1 have no finite p-adic expansion, so pivot
// inversion on exact matrices works at a generous finite precision instead.
PadicScalar pivot_inv(const PadicScalar& x) {
    if (x.precision() >= PadicScalar::kExact && x.unit_part() != 1 &&
        x.unit_part() != -1)
        return x.truncate(64).inv();
    return x.inv();
}

} // namespace

PadicMatrix PadicMatrix::inverse() const {
    check_square(*this);
    const long n = rows_;
    PadicMatrix a = *this;
    PadicMatrix inv = identity(n, p_);
    std::vector<long> perm(n);
    for (long col = 0; col < n; ++col) {
        long best = -1;
        long best_v = PadicScalar::kExact;
        for (long i = col; i < n; ++i) {
            const PadicScalar& x = a.at(i, col);
            if (!x.is_zero() && x.valuation() < best_v) {
                best_v = x.valuation();
                best = i;
            }
        }
        if (best < 0)
            throw singular_error("inverse: no usable pivot in column " +
                                     std::to_string(col),
                                 a.at(col, col).precision());
        if (best != col)
            for (long j = 0; j < n; ++j) {
                std::swap(a.at(best, j), a.at(col, j));
                std::swap(inv.at(best, j), inv.at(col, j));
            }
        const PadicScalar piv_inv = pivot_inv(a.at(col, col));
        for (long j = 0; j < n; ++j) {
            a.at(col, j) = a.at(col, j) * piv_inv;
            inv.at(col, j) = inv.at(col, j) * piv_inv;
        }
        for (long i = 0; i < n; ++i) {
            if (i == col) continue;
            const PadicScalar f = a.at(i, col);
            if (f.is_zero()) continue;
            for (long j = 0; j < n; ++j) {
                a.at(i, j) = a.at(i, j) - f * a.at(col, j);
                inv.at(i, j) = inv.at(i, j) - f * inv.at(col, j);
            }
        }
    }
    return inv;
}

PadicMatrix commutator(const PadicMatrix& a, const PadicMatrix& b) {
    return a * b - b * a;
}

PadicMatrix mat_log(const PadicMatrix& a) {
    check_square(a);
    const long long p = a.prime();
    const long n = a.rows();
    const PadicMatrix b = PadicMatrix::identity(n, p) - a; // log(A) = -sum b^k/k
    const PadicMatrix bn = b.pow_int(n);
    if (bn.is_zero()) {
        // nilpotent at working precision: the series terminates at k = n-1
        PadicMatrix acc(n, n, p);
        PadicMatrix bpow = b;
        for (long k = 1; k < n; ++k) {
            acc = acc - bpow.div_exact(k);
            if (k + 1 < n) bpow = bpow * b;
        }
        long tail = bn.min_precision();
        if (tail < PadicScalar::kExact) tail -= floor_log_base(p, 2 * n + 1);
        return acc.truncate(std::min(a.min_precision(), tail));
    }
    const long vmin = (p == 2) ? 2 : 1;
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            if (!b.at(i, j).is_zero() && b.at(i, j).valuation() < vmin)
                throw domain_error("mat_log: entry (" + std::to_string(i) + "," +
                                   std::to_string(j) + ") of A - I has valuation " +
                                   std::to_string(b.at(i, j).valuation()) +
                                   " below convergence bound");
    const long target = a.min_precision();
    const long cutoff = log_series_cutoff(p, b.min_valuation(), target);
    PadicMatrix acc(n, n, p);
    PadicMatrix bpow = b;
    for (long k = 1; k <= cutoff; ++k) {
        acc = acc - bpow.div_exact(k);
        if (k < cutoff) bpow = bpow * b;
    }
    return acc.truncate(target);
}

PadicMatrix mat_exp(const PadicMatrix& a) {
    check_square(a);
    const long long p = a.prime();
    const long n = a.rows();
    const PadicMatrix an = a.pow_int(n);
    if (an.is_zero()) {
        PadicMatrix acc = PadicMatrix::identity(n, p);
        PadicMatrix term = a;
        BigInt kfact = 1;
        for (long k = 1; k < n; ++k) {
            kfact *= k;
            acc = acc + term.div_exact(kfact);
            if (k + 1 < n) term = term * a;
        }
        long tail = an.min_precision();
        if (tail < PadicScalar::kExact) tail -= 2 * (n + (long)p) / ((long)p - 1);
        return acc.truncate(std::min(a.min_precision(), tail));
    }
    const long vmin = (p == 2) ? 2 : 1;
    const long va = a.min_valuation();
    if (va < vmin)
        throw domain_error("mat_exp: minimal entry valuation " + std::to_string(va) +
                           " below convergence bound");
    const long target = a.min_precision();
    long cutoff = 1;
    while (cutoff * va - (cutoff - 1) / (p - 1) < target) ++cutoff;
    PadicMatrix acc = PadicMatrix::identity(n, p);
    PadicMatrix term = a;
    BigInt kfact = 1;
    for (long k = 1; k <= cutoff; ++k) {
        acc = acc + term;
        if (k < cutoff) term = (term * a).div_exact(k + 1);
    }
    return acc.truncate(target);
}

PadicMatrix mat_pow_zp(const PadicMatrix& a, const PadicScalar& exponent) {
    if (!exponent.is_zero() && exponent.valuation() < 0)
        throw domain_error("mat_pow_zp: exponent is not a p-adic integer");
    return mat_exp(mat_log(a).scale(exponent));
}

std::optional<long> nilpotency_index(const PadicMatrix& n) {
    check_square(n);
    PadicMatrix c = PadicMatrix::identity(n.rows(), n.prime());
    for (long r = 1; r <= n.rows(); ++r) {
        c = c * n;
        if (c.is_zero()) return r;
    }
    return std::nullopt;
}

namespace {

// Row echelon reduction in place; returns pivot column per reduced row.
std::vector<long> echelon(PadicMatrix& a) {
    std::vector<long> pivots;
    long row = 0;
    for (long col = 0; col < a.cols() && row < a.rows(); ++col) {
        long best = -1;
        long best_v = PadicScalar::kExact;
        for (long i = row; i < a.rows(); ++i) {
            const PadicScalar& x = a.at(i, col);
            if (!x.is_zero() && x.valuation() < best_v) {
                best_v = x.valuation();
                best = i;
            }
        }
        if (best < 0) continue;
        if (best != row)
            for (long j = 0; j < a.cols(); ++j) std::swap(a.at(best, j), a.at(row, j));
        const PadicScalar piv_inv = pivot_inv(a.at(row, col));
        for (long j = col; j < a.cols(); ++j) a.at(row, j) = a.at(row, j) * piv_inv;
        for (long i = 0; i < a.rows(); ++i) {
            if (i == row) continue;
            const PadicScalar f = a.at(i, col);
            if (f.is_zero()) continue;
            for (long j = col; j < a.cols(); ++j)
                a.at(i, j) = a.at(i, j) - f * a.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

Vec normalize_leading(Vec v) {
    for (const auto& x : v) {
        if (!x.is_zero()) {
            const PadicScalar s = pivot_inv(x);
            for (auto& y : v) y = y * s;
            break;
        }
    }
    return v;
}

} // namespace

long rank(const PadicMatrix& a) {
    PadicMatrix c = a;
    return static_cast<long>(echelon(c).size());
}

std::vector<Vec> kernel_basis(const PadicMatrix& a) {
    PadicMatrix c = a;
    const std::vector<long> pivots = echelon(c);
    std::vector<bool> is_pivot(a.cols(), false);
    for (long col : pivots) is_pivot[col] = true;
    const long prec = a.min_precision();
    std::vector<Vec> basis;
    for (long free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v(a.cols(), PadicScalar::exact_zero(a.prime()));
        v[free] = PadicScalar::one(a.prime(), prec);
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -c.at(static_cast<long>(r), free);
        basis.push_back(normalize_leading(std::move(v)));
    }
    return basis;
}

long WeightDecomposition::multiplicity(long weight) const {
    for (const auto& part : parts)
        if (part.weight == weight) return static_cast<long>(part.basis.size());
    return 0;
}

WeightDecomposition weight_decomposition(const PadicMatrix& a, long lo, long hi) {
    check_square(a);
    WeightDecomposition dec;
    dec.dim = a.rows();
    long total = 0;
    for (long w = lo; w <= hi; ++w) {
        PadicMatrix shifted = a;
        for (long i = 0; i < a.rows(); ++i)
            shifted.at(i, i) = shifted.at(i, i) -
                PadicScalar::one(a.prime(), PadicScalar::kExact).mul_exact(w);
        std::vector<Vec> ker = kernel_basis(shifted);
        if (!ker.empty()) {
            total += static_cast<long>(ker.size());
            dec.parts.push_back({w, std::move(ker)});
        }
    }
    if (total != a.rows())
        throw spectrum_error(
            "weight_decomposition: eigenspace dimensions sum to " +
            std::to_string(total) + " != " + std::to_string(a.rows()) +
            " (spectrum not integer in range at this precision)");
    return dec;
}

bool Span::add(Vec v) {
    v = reduce(std::move(v));
    long piv = -1;
    for (size_t j = 0; j < v.size(); ++j)
        if (!v[j].is_zero()) { piv = static_cast<long>(j); break; }
    if (piv < 0) return false;
    const PadicScalar s = pivot_inv(v[piv]);
    for (auto& x : v) x = x * s;
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
}

bool Span::contains(Vec v) const {
    v = reduce(std::move(v));
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vec Span::reduce(Vec v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
        const PadicScalar& c = v[pivots_[r]];
        if (c.is_zero()) continue;
        const PadicScalar f = c;
        for (size_t j = 0; j < v.size(); ++j)
            v[j] = v[j] - f * rows_[r][j];
    }
    return v;
}

std::vector<std::vector<Vec>> jordan_chains(const PadicMatrix& n) {
    check_square(n);
    const auto index = nilpotency_index(n);
    if (!index) throw domain_error("jordan_chains: matrix is not nilpotent");
    const long r = *index;
    const long dim = n.rows();
    std::vector<std::vector<Vec>> kernels(r + 1);
    for (long h = 1; h <= r; ++h) kernels[h] = kernel_basis(n.pow_int(h));

    // Chain tops of height h: extend ker N^{h-1} + N-images of taller chains
    // to all of ker N^h.
    std::vector<std::pair<Vec, long>> tops;
    for (long h = r; h >= 1; --h) {
        Span w(n.prime());
        if (h > 1)
            for (const auto& b : kernels[h - 1]) w.add(b);
        for (const auto& [v, a] : tops) {
            Vec img = v;
            for (long k = 0; k < a - h; ++k) img = n.apply(img);
            w.add(img);
        }
        for (const auto& cand : kernels[h])
            if (w.add(cand)) tops.emplace_back(cand, h);
    }
    std::vector<std::vector<Vec>> chains;
    for (const auto& [v, h] : tops) {
        std::vector<Vec> chain;
        Vec cur = v;
        for (long k = 0; k < h; ++k) {
            chain.push_back(cur);
            if (k + 1 < h) cur = n.apply(cur);
        }
        chains.push_back(std::move(chain));
    }
    std::stable_sort(chains.begin(), chains.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
    long covered = 0;
    for (const auto& c : chains) covered += static_cast<long>(c.size());
    if (covered != dim)
        throw precision_error("jordan_chains: chain lengths sum to " +
                              std::to_string(covered) + " != dimension");
    return chains;
}

} // namespace pisen
