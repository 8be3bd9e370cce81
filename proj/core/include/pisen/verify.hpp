#pragma once

#include <string>
#include <vector>

#include "pisen/module.hpp"

namespace pisen {

enum class CheckStatus { pass, fail, skipped };

struct CheckRecord {
    std::string id;
    std::string statement;      // the identity being certified
    CheckStatus status = CheckStatus::skipped;
    long achieved_valuation = 0; // certified valuation of the deviation
    std::string witness;        // offending entry/vector on failure
};

struct VerificationReport {
    long long p = 0;
    long precision = 0;
    long slack = kDefaultSlack;
    std::string input_digest;
    std::vector<CheckRecord> checks;

    bool all_passed() const;
};

CheckRecord check_bracket(const PiSenModule& mod, const PadicContext& ctx, long slack);
CheckRecord check_nilpotent(const PiSenModule& mod, const PadicContext& ctx, long slack);
CheckRecord check_weight_shift(const PiSenModule& mod, const PadicContext& ctx, long slack);
CheckRecord check_crystalline(const PiSenModule& mod, const PhiNData* data,
                              const PadicContext& ctx, long slack);
CheckRecord check_decomposition(const PiSenModule& mod, const PadicContext& ctx, long slack);
CheckRecord check_transversality(const PiSenModule& mod, long m, const PadicContext& ctx,
                                 long slack);
CheckRecord check_local_monodromy(const PiSenModule& mod, long m, const PadicContext& ctx,
                                  long slack);
CheckRecord check_limits(const PiSenModule& mod, const PadicContext& ctx, long slack);

/// Runs every check in id order; data may be null (crystalline check is
/// then skipped).
VerificationReport full_report(const PiSenModule& mod, const PhiNData* data, long m,
                               const PadicContext& ctx, long slack = kDefaultSlack);

} // namespace pisen
