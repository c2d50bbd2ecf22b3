#ifndef FLOWRES_ERRORS_HPP
#define FLOWRES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace flowres {

// Base of everything we throw on purpose.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or invalid user input (files, expressions, flags).  CLI exit 1.
struct input_error : error {
    explicit input_error(const std::string& msg) : error(msg) {}
};

// A mathematical precondition was violated.  CLI exit 2.
struct math_error : error {
    explicit math_error(const std::string& msg) : error(msg) {}
};

struct dimension_mismatch_error : math_error {
    explicit dimension_mismatch_error(const std::string& msg) : math_error(msg) {}
};

struct degeneracy_error : math_error {
    explicit degeneracy_error(const std::string& msg) : math_error(msg) {}
};

struct non_unit_error : math_error {
    explicit non_unit_error(const std::string& msg) : math_error(msg) {}
};

struct invalid_partition_error : math_error {
    explicit invalid_partition_error(const std::string& msg) : math_error(msg) {}
};

struct unsupported_dimension_error : math_error {
    explicit unsupported_dimension_error(const std::string& msg) : math_error(msg) {}
};

struct not_reducible_error : math_error {
    explicit not_reducible_error(const std::string& msg) : math_error(msg) {}
};

struct incomplete_oracle_error : math_error {
    explicit incomplete_oracle_error(const std::string& msg) : math_error(msg) {}
};

struct irrational_skeigen_error : math_error {
    explicit irrational_skeigen_error(const std::string& msg) : math_error(msg) {}
};

struct unsupported_stratum_error : math_error {
    explicit unsupported_stratum_error(const std::string& msg) : math_error(msg) {}
};

// Expression / file syntax problems, with a position when available.
struct parse_error : input_error {
    explicit parse_error(const std::string& msg) : input_error(msg) {}
    parse_error(const std::string& msg, std::size_t pos)
        : input_error(msg + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position = 0;
};

// An invariant-polynomial candidate failed validation (homogeneity,
// permutation symmetry, or even-sign-flip invariance).
struct invariant_violation_error : input_error {
    explicit invariant_violation_error(const std::string& msg) : input_error(msg) {}
};

}  // namespace flowres

#endif
