#pragma once

#include "ckgz/generator.hpp"

namespace ckgz {

/// n x n matrix of Pimenov scalars with the shifted-weight diagonal and the
/// strictly triangular -J tail; the closed-form spectrum generator.
class WeightMatrix {
  public:
    WeightMatrix(int n) : n_(n), a_(n * n) {}

    int n() const { return n_; }
    PimenovScalar& at(int p, int s) { return a_[(p - 1) * n_ + (s - 1)]; }  // 1-based
    const PimenovScalar& at(int p, int s) const { return a_[(p - 1) * n_ + (s - 1)]; }

    WeightMatrix multiply(const WeightMatrix& o) const;
    /// Grand sum of entries: Tr (this * all-ones).
    PimenovScalar grand_sum() const;

  private:
    int n_;
    std::vector<PimenovScalar> a_;
};

struct CasimirSpectrum {
    std::vector<PimenovScalar> values;  // C_1 .. C_n
    std::string provenance;

    double real(int q) const { return values.at(q - 1).real_part().real(); }
};

/// Closed-form spectrum from the top-row labels via the transformed weight
/// matrix; order q = 1..n. Even orders use the scaled matrix alone, odd
/// orders keep one unscaled factor, with the singular top-corner divisions
/// grouped so they stay determinate.
CasimirSpectrum spectrum_general(const CkLabelSet& labels);

/// Transcribed per-case closed forms (n = 2 families and the rank-3
/// contractions). Throws InvalidSeriesParameters when labels do not fit.
/// `su_constraint` imposes the traceless condition xi = -m23 on the rank-3
/// first contraction.
CasimirSpectrum spectrum_specialized(const CkLabelSet& labels, bool su_constraint = false);

/// For rank 3 at unit parameters the printed cubic-invariant transcription
/// disagrees with the generative rule; this reports both values.
struct CubicComparison {
    double from_weight_matrix = 0.0;
    double from_printed_form = 0.0;
    bool match = false;
};
CubicComparison compare_cubic_invariant(const CkLabelSet& labels);

struct CasimirUnsupported : std::runtime_error {
    explicit CasimirUnsupported(const std::string& what) : std::runtime_error(what) {}
};

/// Casimir operator as a generator polynomial on the window: q = 1 is the
/// diagonal sum, q = 2 the full quadratic sum (classical) or the contracted
/// quadratic combination (rank 2, any parameter). Throws CasimirUnsupported
/// outside those cases.
GeneratorMatrix operator_casimir(const GeneratorSet& g, int q);

}  // namespace ckgz
