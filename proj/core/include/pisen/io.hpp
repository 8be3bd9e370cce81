#pragma once

#include <optional>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "pisen/module.hpp"
#include "pisen/verify.hpp"

namespace pisen {

inline constexpr int kSchemaVersion = 1;

struct CocycleData {
    long dim = 0;
    BigRational chi0;
    BigRational c0;
    RationalMatrix gamma0{1, 1};
    RationalMatrix beta0{1, 1};
};

/// Parsed representation description: exactly one of the two routes.
struct InputDocument {
    long long prime = 5;
    long precision = 24;
    std::optional<PhiNData> phin;
    std::optional<CocycleData> cocycle;
    std::optional<long> total_degree;
};

struct BuildResult {
    PadicContext ctx;
    std::optional<PhiNData> data; // present for the phin route
    PiSenModule mod;
    long m = 0; // total degree used for the bigraded structure
};

/// "a" or "a/b" with optional sign, decimal-free.
BigRational parse_rational(const std::string& s);

InputDocument parse_input(const nlohmann::json& j);
nlohmann::json input_to_json(const InputDocument& doc);

/// Completes defaults (twists, total degree) and runs the right builder.
BuildResult build_document(const InputDocument& doc);

nlohmann::json matrix_to_json(const PadicMatrix& m);
PadicMatrix matrix_from_json(const nlohmann::json& j, long long p);

nlohmann::json module_to_json(const BuildResult& r);
std::string module_to_text(const BuildResult& r);

nlohmann::json report_to_json(const VerificationReport& rep);
std::string report_to_text(const VerificationReport& rep);

/// FNV-1a hash of the canonical input serialization.
std::string input_digest(const InputDocument& doc);

/// Built-in examples: tate-curve, tate-curve-cocycle, crystalline:d,
/// jordan:d, gapped.
InputDocument example_document(const std::string& name);

} // namespace pisen
