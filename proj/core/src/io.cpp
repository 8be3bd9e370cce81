#include "pisen/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <nlohmann/json.hpp>

namespace pisen {

using nlohmann::json;

BigRational parse_rational(const std::string& s) {
    const auto bad = [&](const std::string& why) {
        return input_error("bad rational \"" + s + "\": " + why);
    };
    if (s.empty()) throw bad("empty");
    const auto slash = s.find('/');
    const std::string num = s.substr(0, slash);
    const std::string den = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
    const auto check_int = [&](const std::string& t) {
        if (t.empty()) throw bad("empty component");
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) throw bad("sign without digits");
        for (; i < t.size(); ++i)
            if (!isdigit(static_cast<unsigned char>(t[i])))
                throw bad("non-digit character (decimals are not accepted)");
    };
    check_int(num);
    check_int(den);
    // cpp_int does not accept a leading '+'
    const auto strip = [](const std::string& t) {
        return t[0] == '+' ? t.substr(1) : t;
    };
    const BigInt d(strip(den));
    if (d == 0) throw bad("zero denominator");
    return BigRational(BigInt(strip(num)), d);
}

namespace {

std::string rational_to_string(const BigRational& q) {
    std::string s = boost::multiprecision::numerator(q).str();
    if (boost::multiprecision::denominator(q) != 1)
        s += "/" + boost::multiprecision::denominator(q).str();
    return s;
}

RationalMatrix grid_to_rational(const json& j, const std::string& field) {
    if (!j.is_array() || j.empty())
        throw input_error("field \"" + field + "\": expected a non-empty array of rows");
    const long rows = static_cast<long>(j.size());
    if (!j[0].is_array() || j[0].empty())
        throw input_error("field \"" + field + "\": rows must be non-empty arrays");
    const long cols = static_cast<long>(j[0].size());
    RationalMatrix m(rows, cols);
    for (long i = 0; i < rows; ++i) {
        if (!j[i].is_array() || static_cast<long>(j[i].size()) != cols)
            throw input_error("field \"" + field + "\": ragged rows");
        for (long c = 0; c < cols; ++c) {
            const json& cell = j[i][c];
            if (cell.is_number_integer())
                m.at(i, c) = BigRational(cell.get<long long>());
            else if (cell.is_string())
                m.at(i, c) = parse_rational(cell.get<std::string>());
            else
                throw input_error("field \"" + field + "\": cells must be integers or "
                                  "rational strings");
        }
    }
    return m;
}

json rational_grid_to_json(const RationalMatrix& m) {
    json rows = json::array();
    for (long i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (long j2 = 0; j2 < m.cols(); ++j2) row.push_back(rational_to_string(m.at(i, j2)));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<long> int_list(const json& j, const std::string& field) {
    if (!j.is_array()) throw input_error("field \"" + field + "\": expected an array");
    std::vector<long> out;
    for (const auto& x : j) {
        if (!x.is_number_integer())
            throw input_error("field \"" + field + "\": entries must be integers");
        out.push_back(x.get<long>());
    }
    return out;
}

BigRational field_rational(const json& j, const std::string& field) {
    if (!j.contains(field)) throw input_error("missing field \"" + field + "\"");
    const json& v = j.at(field);
    if (v.is_number_integer()) return BigRational(v.get<long long>());
    if (v.is_string()) return parse_rational(v.get<std::string>());
    throw input_error("field \"" + field + "\": expected integer or rational string");
}

} // namespace

InputDocument parse_input(const json& j) {
    if (!j.is_object()) throw input_error("input document must be a JSON object");
    if (j.contains("schema_version") && j.at("schema_version").get<int>() != kSchemaVersion)
        throw input_error("unsupported schema_version");
    InputDocument doc;
    if (j.contains("prime")) doc.prime = j.at("prime").get<long long>();
    if (j.contains("precision")) doc.precision = j.at("precision").get<long>();
    if (j.contains("total_degree")) doc.total_degree = j.at("total_degree").get<long>();
    const bool has_phin = j.contains("phin");
    const bool has_cocycle = j.contains("cocycle");
    if (has_phin == has_cocycle)
        throw input_error("exactly one of \"phin\" or \"cocycle\" is required");
    if (has_phin) {
        const json& pj = j.at("phin");
        PhiNData data;
        if (!pj.contains("dim")) throw input_error("missing field \"phin.dim\"");
        data.dim = pj.at("dim").get<long>();
        if (!pj.contains("monodromy")) throw input_error("missing field \"phin.monodromy\"");
        data.monodromy = grid_to_rational(pj.at("monodromy"), "phin.monodromy");
        if (pj.contains("frobenius"))
            data.frobenius = grid_to_rational(pj.at("frobenius"), "phin.frobenius");
        if (!pj.contains("weights")) throw input_error("missing field \"phin.weights\"");
        data.weights = int_list(pj.at("weights"), "phin.weights");
        if (pj.contains("twists")) data.twists = int_list(pj.at("twists"), "phin.twists");
        doc.phin = std::move(data);
    } else {
        const json& cj = j.at("cocycle");
        CocycleData data;
        if (!cj.contains("dim")) throw input_error("missing field \"cocycle.dim\"");
        data.dim = cj.at("dim").get<long>();
        data.chi0 = field_rational(cj, "chi0");
        data.c0 = field_rational(cj, "c0");
        if (!cj.contains("gamma0")) throw input_error("missing field \"cocycle.gamma0\"");
        data.gamma0 = grid_to_rational(cj.at("gamma0"), "cocycle.gamma0");
        if (!cj.contains("beta0")) throw input_error("missing field \"cocycle.beta0\"");
        data.beta0 = grid_to_rational(cj.at("beta0"), "cocycle.beta0");
        doc.cocycle = std::move(data);
    }
    return doc;
}

json input_to_json(const InputDocument& doc) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["prime"] = doc.prime;
    j["precision"] = doc.precision;
    if (doc.total_degree) j["total_degree"] = *doc.total_degree;
    if (doc.phin) {
        json pj;
        pj["dim"] = doc.phin->dim;
        pj["monodromy"] = rational_grid_to_json(doc.phin->monodromy);
        if (doc.phin->frobenius) pj["frobenius"] = rational_grid_to_json(*doc.phin->frobenius);
        pj["weights"] = doc.phin->weights;
        if (!doc.phin->twists.empty()) pj["twists"] = doc.phin->twists;
        j["phin"] = std::move(pj);
    }
    if (doc.cocycle) {
        json cj;
        cj["dim"] = doc.cocycle->dim;
        cj["chi0"] = rational_to_string(doc.cocycle->chi0);
        cj["c0"] = rational_to_string(doc.cocycle->c0);
        cj["gamma0"] = rational_grid_to_json(doc.cocycle->gamma0);
        cj["beta0"] = rational_grid_to_json(doc.cocycle->beta0);
        j["cocycle"] = std::move(cj);
    }
    return j;
}

BuildResult build_document(const InputDocument& doc) {
    BuildResult r{PadicContext(doc.prime, doc.precision), std::nullopt,
                  PiSenModule{}, 0};
    if (doc.phin) {
        PhiNData data = *doc.phin;
        if (data.twists.empty())
            data.twists = default_twists(data.dim, data.monodromy, data.weights);
        r.mod = build_from_phin(data, r.ctx);
        r.data = std::move(data);
    } else {
        const CocycleData& c = *doc.cocycle;
        r.mod = build_from_cocycle(to_padic(c.gamma0, r.ctx), to_padic(c.beta0, r.ctx),
                                   PadicScalar::from_rational(c.chi0, r.ctx),
                                   PadicScalar::from_rational(c.c0, r.ctx), r.ctx);
    }
    if (doc.total_degree) {
        r.m = *doc.total_degree;
    } else if (!r.mod.weights.parts.empty()) {
        r.m = r.mod.weights.parts.back().weight - r.mod.weights.parts.front().weight;
    }
    return r;
}

json matrix_to_json(const PadicMatrix& m) {
    json entries = json::array();
    json precisions = json::array();
    for (long i = 0; i < m.rows(); ++i) {
        json erow = json::array();
        json prow = json::array();
        for (long j = 0; j < m.cols(); ++j) {
            erow.push_back(m.at(i, j).to_string());
            const long prec = m.at(i, j).precision();
            prow.push_back(prec >= PadicScalar::kExact ? -1 : prec);
        }
        entries.push_back(std::move(erow));
        precisions.push_back(std::move(prow));
    }
    return json{{"entries", std::move(entries)}, {"precisions", std::move(precisions)}};
}

PadicMatrix matrix_from_json(const json& j, long long p) {
    const json& entries = j.at("entries");
    const json& precisions = j.at("precisions");
    const long rows = static_cast<long>(entries.size());
    const long cols = static_cast<long>(entries[0].size());
    PadicMatrix m(rows, cols, p);
    for (long i = 0; i < rows; ++i)
        for (long c = 0; c < cols; ++c) {
            const BigRational q = parse_rational(entries[i][c].get<std::string>());
            const long prec = precisions[i][c].get<long>();
            if (prec < 0) {
                if (q != 0)
                    throw input_error("matrix_from_json: exact nonzero entries are not "
                                      "representable");
                m.at(i, c) = PadicScalar::exact_zero(p);
            } else if (q == 0) {
                m.at(i, c) = PadicScalar::zero(p, prec);
            } else {
                m.at(i, c) = PadicScalar::from_rational(q, PadicContext(p, prec));
            }
        }
    return m;
}

json module_to_json(const BuildResult& r) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["prime"] = r.ctx.p;
    j["precision"] = r.ctx.precision;
    j["dim"] = r.mod.dim;
    j["route"] = (r.mod.route == BuildRoute::phin) ? "phin" : "cocycle";
    j["total_degree"] = r.m;
    j["chains"] = r.mod.h_labels;
    j["nabla0"] = matrix_to_json(r.mod.nabla0);
    j["nablaPi"] = matrix_to_json(r.mod.nablaPi);
    json weights = json::array();
    for (const auto& part : r.mod.weights.parts)
        weights.push_back(json{{"weight", part.weight},
                               {"multiplicity", static_cast<long>(part.basis.size())}});
    j["weights"] = std::move(weights);
    const BigradedDims dims = bigraded_dims(r.mod, r.m);
    json table = json::array();
    for (const auto& [t, h] : dims.by_t)
        table.push_back(json{{"s", r.m - t}, {"t", t}, {"dim", h}});
    j["bigraded"] = json{{"m", r.m}, {"table", std::move(table)}};
    j["monodromy_gap"] = monodromy_gap(dims);
    return j;
}

namespace {

std::string matrix_to_text(const PadicMatrix& m) {
    std::ostringstream os;
    for (long i = 0; i < m.rows(); ++i) {
        os << "  [";
        for (long j = 0; j < m.cols(); ++j) {
            if (j) os << ", ";
            os << m.at(i, j).to_string();
            const long prec = m.at(i, j).precision();
            if (prec < PadicScalar::kExact) os << " + O(p^" << prec << ")";
        }
        os << "]\n";
    }
    return os.str();
}

} // namespace

std::string module_to_text(const BuildResult& r) {
    std::ostringstream os;
    os << "p = " << r.ctx.p << ", precision = " << r.ctx.precision << ", dim = "
       << r.mod.dim << ", route = " << (r.mod.route == BuildRoute::phin ? "phin" : "cocycle")
       << "\n";
    os << "nabla0 (h-basis):\n" << matrix_to_text(r.mod.nabla0);
    os << "nablaPi (h-basis):\n" << matrix_to_text(r.mod.nablaPi);
    os << "weights:";
    for (const auto& part : r.mod.weights.parts)
        os << " " << part.weight << " (x" << part.basis.size() << ")";
    os << "\n";
    const BigradedDims dims = bigraded_dims(r.mod, r.m);
    os << "bigraded (m = " << r.m << "):";
    for (const auto& [t, h] : dims.by_t)
        os << " h^{" << (r.m - t) << "," << t << "} = " << h;
    os << "\nmonodromy gap h_m = " << monodromy_gap(dims) << "\n";
    return os.str();
}

json report_to_json(const VerificationReport& rep) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["prime"] = rep.p;
    j["precision"] = rep.precision;
    j["slack"] = rep.slack;
    j["input_digest"] = rep.input_digest;
    j["all_passed"] = rep.all_passed();
    json checks = json::array();
    for (const auto& rec : rep.checks) {
        json cj;
        cj["id"] = rec.id;
        cj["statement"] = rec.statement;
        cj["status"] = rec.status == CheckStatus::pass
                           ? "pass"
                           : (rec.status == CheckStatus::fail ? "fail" : "skipped");
        if (rec.status != CheckStatus::skipped)
            cj["achieved_valuation"] = rec.achieved_valuation >= PadicScalar::kExact
                                           ? -1
                                           : rec.achieved_valuation;
        if (!rec.witness.empty()) cj["witness"] = rec.witness;
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    return j;
}

std::string report_to_text(const VerificationReport& rep) {
    std::ostringstream os;
    os << "p = " << rep.p << ", precision = " << rep.precision << ", slack = " << rep.slack
       << ", input " << rep.input_digest << "\n";
    for (const auto& rec : rep.checks) {
        os << "[" << (rec.status == CheckStatus::pass
                          ? "PASS"
                          : (rec.status == CheckStatus::fail ? "FAIL" : "SKIP"))
           << "] " << rec.id << ": " << rec.statement;
        if (rec.status != CheckStatus::skipped) {
            os << " (certified valuation ";
            if (rec.achieved_valuation >= PadicScalar::kExact)
                os << "exact";
            else
                os << rec.achieved_valuation;
            os << ")";
        }
        if (!rec.witness.empty()) os << " -- " << rec.witness;
        os << "\n";
    }
    os << (rep.all_passed() ? "all checks passed" : "CHECK FAILURES PRESENT") << "\n";
    return os.str();
}

std::string input_digest(const InputDocument& doc) {
    const std::string s = input_to_json(doc).dump();
    unsigned long long h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

InputDocument example_document(const std::string& name) {
    InputDocument doc;
    auto make_phin = [&](long d, RationalMatrix n, std::vector<long> w,
                         std::vector<long> t) {
        PhiNData data;
        data.dim = d;
        data.monodromy = std::move(n);
        data.weights = std::move(w);
        data.twists = std::move(t);
        doc.phin = std::move(data);
    };
    auto shift_chain = [](long d) {
        RationalMatrix n(d, d);
        for (long j = 0; j + 1 < d; ++j) n.at(j + 1, j) = 1;
        return n;
    };
    if (name == "tate-curve") {
        make_phin(2, shift_chain(2), {0, 1}, {0, 0});
        doc.total_degree = 1;
        return doc;
    }
    if (name == "tate-curve-cocycle") {
        CocycleData c;
        c.dim = 2;
        c.chi0 = BigRational(1 + doc.prime);
        c.c0 = 1;
        c.gamma0 = RationalMatrix::identity(2);
        c.gamma0.at(1, 1) = BigRational(1 + doc.prime);
        c.beta0 = RationalMatrix::identity(2);
        c.beta0.at(1, 0) = 1;
        doc.cocycle = std::move(c);
        doc.total_degree = 1;
        return doc;
    }
    const auto colon = name.find(':');
    const std::string head = name.substr(0, colon);
    long d = 0;
    if (colon != std::string::npos) {
        try {
            d = std::stol(name.substr(colon + 1));
        } catch (const std::exception&) {
            throw input_error("bad example dimension in \"" + name + "\"");
        }
        if (d < 1 || d > 16) throw input_error("example dimension out of range [1,16]");
    }
    if (head == "crystalline") {
        if (d == 0) d = 3;
        std::vector<long> w, t(d, 0);
        for (long j = 0; j < d; ++j) w.push_back(j);
        make_phin(d, RationalMatrix(d, d), std::move(w), std::move(t));
        return doc;
    }
    if (head == "jordan") {
        if (d == 0) d = 3;
        std::vector<long> w, t(d, 0);
        for (long j = 0; j < d; ++j) w.push_back(j);
        make_phin(d, shift_chain(d), std::move(w), std::move(t));
        return doc;
    }
    if (name == "gapped") {
        // twist drop kills the chain arrow: h_m = 0 beats the coarse bound
        make_phin(2, shift_chain(2), {0, 3}, {0, -1});
        doc.total_degree = 3;
        return doc;
    }
    throw input_error("unknown example \"" + name +
                      "\" (try tate-curve, tate-curve-cocycle, crystalline:d, jordan:d, "
                      "gapped)");
}

} // namespace pisen
