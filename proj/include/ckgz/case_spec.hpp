#pragma once

#include <optional>

#include "ckgz/json_io.hpp"

namespace ckgz {

/// Everything a CLI invocation needs to name a case: rank, parameter kinds,
/// label values, series, window, jet order, seed and tolerance.
struct CaseSpec {
    int n = 2;
    std::vector<std::string> j;  // "1" | "iota" | "i"
    std::optional<std::vector<int>> hw;
    std::optional<double> k, zeta, xi, r, a, b;
    std::optional<int> m23, mt12, mt22;
    std::string series = "auto";
    int window_lo = -20, window_hi = 20;
    int jet_order = 2;
    std::uint64_t seed = 1;
    double tol = 1e-9;
    bool su_constraint = false;

    static CaseSpec from_json(const Json& j);
    Json to_json() const;

    CkParameterVector params() const;
    /// Label set with validation; throws on inconsistent input.
    CkLabelSet to_labels() const;
    GenericOptions options() const;
};

struct CommandResult {
    int exit_code = 0;
    Json output;
};

CommandResult cmd_enumerate(const std::vector<int>& hw, bool count_only);
CommandResult cmd_build(const CaseSpec& spec);
CommandResult cmd_verify(const CaseSpec& spec, std::vector<std::string> checks);
CommandResult cmd_casimir(const CaseSpec& spec);
CommandResult cmd_variants(int n);

}  // namespace ckgz
