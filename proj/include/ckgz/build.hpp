#pragma once

#include "ckgz/generator.hpp"

namespace ckgz {

/// Finite-dimensional representation over the full pattern basis; real
/// matrix elements, Hermitian by construction. This is the textbook route,
/// kept independent of the parametrized builder for cross-checking.
GeneratorSet build_classical(const HighestWeight& hw);

struct GenericOptions {
    int window_halfwidth = 20;  // per unbounded discrete label
    int offset_halfwidth = 4;   // per contracted slot (exact lattice)
    int jet_order = 2;
    std::optional<std::pair<int, int>> explicit_box;  // overrides the box cut on unbounded labels
};

/// Parametrized builder: the general coefficient formulas evaluated in
/// Pimenov/contraction-parameter arithmetic over a finite window.
/// Cases with a dual interior row additionally carry the exact lattice
/// side channel; their canonical matrices live on the derivative-index
/// basis. Unsupported shapes throw UnsupportedCase.
GeneratorSet build_generic(const CkLabelSet& labels, const GenericOptions& opt = {});

/// Closed-form n=2 families: contracted, the analytic-continuation series
/// (continuous, additional continuous, discrete upper/lower), and the raw
/// continued labels. Matrices over an m11 window.
GeneratorSet build_u2_specialized(const CkLabelSet& labels, int m11_lo, int m11_hi);

enum class U3Route { first_contraction, second_contraction, double_contraction };

/// Closed-form n=3 contracted families. The second/double contractions act
/// on a derivative-index basis; coefficient derivatives follow the
/// central-difference rule on the real labels.
GeneratorSet build_u3_specialized(U3Route route, const CkLabelSet& labels, const GenericOptions& opt = {});

struct WeightActionReport {
    // Per raising/lowering generator: does it annihilate the extreme vector?
    std::map<std::pair<int, int>, bool> annihilates;
    bool finite_dimensional = false;
    std::string detail;
};

/// Zero/nonzero structure of raising on the top-weight vector and lowering
/// on the bottom-weight vector, evaluated on the parametrized coefficient
/// formulas with the extreme substitutions.
WeightActionReport weight_vector_action(const CkLabelSet& labels);

}  // namespace ckgz
