#include "pisen/verify.hpp"

#include <algorithm>

namespace pisen {

namespace {

long long pow_ll(long long b, long e) {
    long long r = 1;
    for (long i = 0; i < e; ++i) r *= b;
    return r;
}

std::string entry_witness(const PadicMatrix& dev, long tol) {
    for (long i = 0; i < dev.rows(); ++i)
        for (long j = 0; j < dev.cols(); ++j)
            if (!dev.at(i, j).is_zero_to(tol))
                return "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                       ") = " + dev.at(i, j).to_string() + " (valuation " +
                       std::to_string(dev.at(i, j).valuation()) + ")";
    return "";
}

CheckRecord matrix_zero_check(std::string id, std::string statement,
                              const PadicMatrix& dev, long tol) {
    CheckRecord rec{std::move(id), std::move(statement)};
    rec.achieved_valuation = dev.min_valuation();
    if (dev.is_zero_to(tol)) {
        rec.status = CheckStatus::pass;
    } else {
        rec.status = CheckStatus::fail;
        rec.witness = entry_witness(dev, tol);
    }
    return rec;
}

} // namespace

bool VerificationReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& r) {
        return r.status != CheckStatus::fail;
    });
}

CheckRecord check_bracket(const PiSenModule& mod, const PadicContext& ctx, long slack) {
    const PadicMatrix dev = commutator(mod.nabla0, mod.nablaPi) - mod.nablaPi;
    return matrix_zero_check("bracket", "[nabla0, nablaPi] = nablaPi", dev,
                             ctx.precision - slack);
}

CheckRecord check_nilpotent(const PiSenModule& mod, const PadicContext& ctx, long slack) {
    const long tol = ctx.precision - slack;
    const long d = mod.dim;
    CheckRecord rec{"nilpotency", "nablaPi^d = 0 and tr(nablaPi^r) = 0 for r = 1..d"};
    rec.achieved_valuation = PadicScalar::kExact;
    PadicMatrix pw = mod.nablaPi;
    for (long r = 1; r <= d; ++r) {
        const PadicScalar tr = pw.trace();
        rec.achieved_valuation = std::min(rec.achieved_valuation, tr.valuation());
        if (!tr.is_zero_to(tol)) {
            rec.status = CheckStatus::fail;
            rec.witness = "tr(nablaPi^" + std::to_string(r) + ") = " + tr.to_string();
            return rec;
        }
        if (r < d) pw = pw * mod.nablaPi;
    }
    rec.achieved_valuation = std::min(rec.achieved_valuation, pw.min_valuation());
    if (!pw.is_zero_to(tol)) {
        rec.status = CheckStatus::fail;
        rec.witness = "nablaPi^" + std::to_string(d) + ": " + entry_witness(pw, tol);
        return rec;
    }
    rec.status = CheckStatus::pass;
    return rec;
}

CheckRecord check_weight_shift(const PiSenModule& mod, const PadicContext& ctx, long slack) {
    const long tol = ctx.precision - slack;
    CheckRecord rec{"weight_shift", "nabla0(nablaPi v) = (n+1) nablaPi v for weight-n v"};
    rec.status = CheckStatus::pass;
    rec.achieved_valuation = PadicScalar::kExact;
    for (const auto& part : mod.weights.parts)
        for (const auto& v : part.basis) {
            const Vec w = mod.nablaPi.apply(v);
            bool w_zero = true;
            for (const auto& x : w)
                if (!x.is_zero_to(tol)) { w_zero = false; break; }
            if (w_zero) continue;
            const Vec lhs = mod.nabla0.apply(w);
            for (size_t i = 0; i < w.size(); ++i) {
                const PadicScalar dev = lhs[i] - w[i].mul_exact(part.weight + 1);
                rec.achieved_valuation = std::min(rec.achieved_valuation, dev.valuation());
                if (!dev.is_zero_to(tol)) {
                    rec.status = CheckStatus::fail;
                    rec.witness = "weight " + std::to_string(part.weight) +
                                  " eigenvector: coordinate " + std::to_string(i + 1) +
                                  " of nabla0(nablaPi v) - (n+1) nablaPi v = " +
                                  dev.to_string();
                    return rec;
                }
            }
        }
    return rec;
}

CheckRecord check_crystalline(const PiSenModule& mod, const PhiNData* data,
                              const PadicContext&, long) {
    CheckRecord rec{"crystalline", "N = 0 implies nablaPi = 0 exactly"};
    if (data == nullptr || !data->monodromy.is_zero()) {
        rec.status = CheckStatus::skipped;
        return rec;
    }
    rec.achieved_valuation = mod.nablaPi.min_valuation();
    if (mod.nablaPi.is_zero()) {
        rec.status = CheckStatus::pass;
    } else {
        rec.status = CheckStatus::fail;
        const PadicMatrix& n = mod.nablaPi;
        for (long i = 0; i < n.rows() && rec.witness.empty(); ++i)
            for (long j = 0; j < n.cols(); ++j)
                if (!n.at(i, j).is_zero()) {
                    rec.witness = "entry (" + std::to_string(i + 1) + "," +
                                  std::to_string(j + 1) + ") = " +
                                  n.at(i, j).to_string() + " is not exactly zero";
                    break;
                }
    }
    return rec;
}

CheckRecord check_decomposition(const PiSenModule& mod, const PadicContext& ctx, long slack) {
    const long tol = ctx.precision - slack;
    CheckRecord rec{"decomposition", "nabla0 splits into integer eigenspaces of total dimension d"};
    rec.achieved_valuation = PadicScalar::kExact;
    long total = 0;
    for (const auto& part : mod.weights.parts) {
        total += static_cast<long>(part.basis.size());
        for (const auto& v : part.basis) {
            const Vec lhs = mod.nabla0.apply(v);
            for (size_t i = 0; i < v.size(); ++i) {
                const PadicScalar dev = lhs[i] - v[i].mul_exact(part.weight);
                rec.achieved_valuation = std::min(rec.achieved_valuation, dev.valuation());
                if (!dev.is_zero_to(tol)) {
                    rec.status = CheckStatus::fail;
                    rec.witness = "weight " + std::to_string(part.weight) +
                                  " basis vector fails at coordinate " + std::to_string(i + 1);
                    return rec;
                }
            }
        }
    }
    if (total != mod.dim) {
        rec.status = CheckStatus::fail;
        rec.witness = "eigenspace dimensions sum to " + std::to_string(total) + " != " +
                      std::to_string(mod.dim);
        return rec;
    }
    rec.status = CheckStatus::pass;
    return rec;
}

CheckRecord check_transversality(const PiSenModule& mod, long m, const PadicContext& ctx,
                                 long slack) {
    const long tol = ctx.precision - slack;
    CheckRecord rec{"transversality", "nablaPi maps D^{s,t} into D^{s-1,t+1}"};
    rec.status = CheckStatus::pass;
    rec.achieved_valuation = PadicScalar::kExact;
    for (const auto& part : mod.weights.parts)
        for (const auto& v : part.basis) {
            const Vec w = mod.nablaPi.apply(v);
            bool w_zero = true;
            for (const auto& x : w)
                if (!x.is_zero_to(tol)) { w_zero = false; break; }
            if (w_zero) continue;
            // image must be a weight-(t+1) eigenvector
            const Vec lhs = mod.nabla0.apply(w);
            for (size_t i = 0; i < w.size(); ++i) {
                const PadicScalar dev = lhs[i] - w[i].mul_exact(part.weight + 1);
                rec.achieved_valuation = std::min(rec.achieved_valuation, dev.valuation());
                if (!dev.is_zero_to(tol)) {
                    rec.status = CheckStatus::fail;
                    rec.witness = "image of D^{" + std::to_string(m - part.weight) + "," +
                                  std::to_string(part.weight) +
                                  "} leaves the next bigraded piece (coordinate " +
                                  std::to_string(i + 1) + ")";
                    return rec;
                }
            }
        }
    return rec;
}

CheckRecord check_local_monodromy(const PiSenModule& mod, long m, const PadicContext& ctx,
                                  long slack) {
    const long tol = ctx.precision - slack;
    CheckRecord rec{"local_monodromy", "nablaPi^{m+1} = 0 and nablaPi^{h_m+1} = 0"};
    if (mod.weights.parts.empty()) {
        rec.status = CheckStatus::skipped;
        return rec;
    }
    const long min_w = mod.weights.parts.front().weight;
    const long max_w = mod.weights.parts.back().weight;
    if (max_w - min_w > m) {
        rec.status = CheckStatus::skipped;
        rec.witness = "weights span " + std::to_string(max_w - min_w) +
                      " > m; no normalization into [0, m]";
        return rec;
    }
    const PadicMatrix coarse = mod.nablaPi.pow_int(m + 1);
    const BigradedDims dims = bigraded_dims(mod, m);
    const long hm = monodromy_gap(dims);
    const PadicMatrix sharp = mod.nablaPi.pow_int(hm + 1);
    rec.achieved_valuation = std::min(coarse.min_valuation(), sharp.min_valuation());
    const auto index = nilpotency_index(mod.nablaPi);
    rec.statement += " (h_m = " + std::to_string(hm) + ", minimal index " +
                     (index ? std::to_string(*index) : std::string("none")) + ")";
    if (!coarse.is_zero_to(tol)) {
        rec.status = CheckStatus::fail;
        rec.witness = "nablaPi^" + std::to_string(m + 1) + ": " + entry_witness(coarse, tol);
        return rec;
    }
    if (!sharp.is_zero_to(tol)) {
        rec.status = CheckStatus::fail;
        rec.witness = "nablaPi^" + std::to_string(hm + 1) + ": " + entry_witness(sharp, tol);
        return rec;
    }
    rec.status = CheckStatus::pass;
    return rec;
}

CheckRecord check_limits(const PiSenModule& mod, const PadicContext& ctx, long slack) {
    const long tol = ctx.precision - slack;
    CheckRecord rec{"limits",
                    "difference quotients at g^{p^n} approach the derivations, n = 1..3"};
    rec.achieved_valuation = PadicScalar::kExact;
    const PadicMatrix id = PadicMatrix::identity(mod.dim, ctx.p);
    const PadicScalar one = PadicScalar::one(ctx.p, PadicScalar::kExact);

    for (int dir = 0; dir < 2; ++dir) {
        long prev = 0;
        for (long n = 1; n <= 3; ++n) {
            const long e = pow_ll(ctx.p, n);
            PadicMatrix quot(mod.dim, mod.dim, ctx.p);
            if (dir == 0) {
                const PadicMatrix gn = mod.gamma_gen.pow_int(e);
                const PadicScalar den = mod.chi0.pow_int(e) - one;
                quot = (gn - id).scale(den.inv()) - mod.nabla0;
            } else {
                const PadicMatrix bn = mod.beta_gen.pow_int(e);
                const PadicScalar den = mod.c0.mul_exact(e);
                quot = (bn - id).scale(den.inv()) - mod.nablaPi;
            }
            const long err = quot.min_valuation();
            rec.achieved_valuation = std::min(rec.achieved_valuation, err);
            // monotone convergence: one extra digit per level, until the
            // error disappears below the working tolerance
            const long required = (n == 1) ? 0 : std::min(prev + 1, tol);
            if (err < required) {
                rec.status = CheckStatus::fail;
                rec.witness = std::string(dir == 0 ? "gamma" : "beta") +
                              " quotient at n = " + std::to_string(n) +
                              " has error valuation " + std::to_string(err) +
                              " < required " + std::to_string(required);
                return rec;
            }
            prev = err;
        }
    }
    rec.status = CheckStatus::pass;
    return rec;
}

VerificationReport full_report(const PiSenModule& mod, const PhiNData* data, long m,
                               const PadicContext& ctx, long slack) {
    VerificationReport rep;
    rep.p = ctx.p;
    rep.precision = ctx.precision;
    rep.slack = slack;
    rep.checks.push_back(check_bracket(mod, ctx, slack));
    rep.checks.push_back(check_nilpotent(mod, ctx, slack));
    rep.checks.push_back(check_weight_shift(mod, ctx, slack));
    rep.checks.push_back(check_crystalline(mod, data, ctx, slack));
    rep.checks.push_back(check_decomposition(mod, ctx, slack));
    rep.checks.push_back(check_transversality(mod, m, ctx, slack));
    rep.checks.push_back(check_local_monodromy(mod, m, ctx, slack));
    rep.checks.push_back(check_limits(mod, ctx, slack));
    return rep;
}

} // namespace pisen
