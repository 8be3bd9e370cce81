#pragma once

#include <stdexcept>
#include <string>

namespace pisen {

// Operand outside the convergence region of a p-adic series (log/exp).
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An operation would produce a value with no guaranteed digits.
class precision_error : public std::runtime_error {
public:
    explicit precision_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A negative t-power survived into a theta specialization.
class pole_error : public std::runtime_error {
public:
    explicit pole_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Assembled group actions violate the semidirect relation.
class consistency_error : public std::runtime_error {
public:
    explicit consistency_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Supplied cocycle matrices fail gamma*beta*gamma^-1 = beta^chi.
class relation_error : public std::runtime_error {
public:
    relation_error(const std::string& msg, long deviation_valuation)
        : std::runtime_error(msg), deviation_valuation(deviation_valuation) {}
    long deviation_valuation;
};

// Eigenvalue multiplicities of an expected Hodge-Tate-shape operator
// fail to sum to the ambient dimension.
class spectrum_error : public std::runtime_error {
public:
    explicit spectrum_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Matrix singular at the working precision.
class singular_error : public std::runtime_error {
public:
    singular_error(const std::string& msg, long pivot_valuation)
        : std::runtime_error(msg), pivot_valuation(pivot_valuation) {}
    long pivot_valuation;
};

// Malformed user input (CLI / JSON layer).
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace pisen
