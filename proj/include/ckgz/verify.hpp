#pragma once

#include <cstdint>

#include "ckgz/build.hpp"
#include "ckgz/casimir.hpp"

namespace ckgz {

struct CheckReport {
    std::string name;
    std::string case_descriptor;
    double tolerance = 0.0;
    double max_deviation = 0.0;
    std::string worst;  // offending (generator pair, basis entry) when failing
    bool pass = false;
    int boundary_excluded = 0;
    std::uint64_t seed = 0;
    std::string detail;
};

enum class SweepMode { serial, parallel };

/// Commutation-relation sweep over every ordered generator pair and every
/// interior basis column. Runs on the exact side channel when the set
/// carries one, otherwise on the stored matrices.
CheckReport check_commutators(const GeneratorSet& g, double tol, SweepMode mode = SweepMode::parallel);

/// Diagonal generators real, off-diagonal pairs mutually adjoint.
CheckReport check_hermiticity(const GeneratorSet& g, double tol, SweepMode mode = SweepMode::parallel);

/// Casimir operator diagonality, constancy on the interior, and agreement
/// with the closed-form spectrum.
CheckReport check_casimir_diagonal(const GeneratorSet& g, const CasimirSpectrum& spectrum, double tol, int max_order = 2);

/// Evaluates the parametrized formulas at real contraction parameters from
/// `eps_list` (descending), compares against the dual-arithmetic real parts,
/// and asserts first-order convergence.
CheckReport check_contraction_limit(const CkLabelSet& labels, const std::vector<double>& eps_list, double ratio_slack = 5.0);

/// Formula-level comparison of the general coefficient route against the
/// transcribed closed forms over seeded random schemes, every parameter
/// combination of the rank.
CheckReport check_specialization(int n, std::uint64_t seed, int draws, double tol);

/// Real parts of all pairwise commutators within the tagged nilradical.
CheckReport check_nilradical(const GeneratorSet& g, double tol);

/// Test hook: copy with one entry additively perturbed.
GeneratorSet with_perturbed_entry(const GeneratorSet& g, int k, int r, int col, int row, double delta);

/// Work kernel shared by the checks and the benchmark: max commutator
/// deviation over (pair, interior column), serial or OpenMP.
double commutator_sweep_kernel(const GeneratorSet& g, SweepMode mode);

}  // namespace ckgz
