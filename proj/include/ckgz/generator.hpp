#pragma once

#include <map>
#include <memory>
#include <utility>

#include "ckgz/series.hpp"
#include "ckgz/window.hpp"

namespace ckgz {

/// Sparse action of one generator A_{kr} over a basis window: for each basis
/// column, the list of (target row, coefficient). Columns whose emissions
/// left the window are tagged and excluded from interior assertions.
struct GeneratorMatrix {
    int k = 0, r = 0;
    std::vector<std::vector<std::pair<int, PimenovScalar>>> cols;
    std::vector<bool> boundary_loss;  // per column
    std::vector<bool> jet_overflow;   // per column

    GeneratorMatrix() = default;
    GeneratorMatrix(int k_, int r_, int ncols) : k(k_), r(r_), cols(ncols), boundary_loss(ncols), jet_overflow(ncols) {}

    void add(int col, int row, const PimenovScalar& v);
    PimenovScalar entry(int row, int col) const;
    /// Canonical complex value (empty-support part) of an entry.
    Complex entry_real(int row, int col) const { return entry(row, col).real_part(); }
    int ncols() const { return static_cast<int>(cols.size()); }
};

using State = std::map<int, PimenovScalar>;

struct ApplyResult {
    State state;
    bool boundary_loss = false;
    bool jet_overflow = false;
};

/// Linear extension of a generator action to a state vector.
ApplyResult apply(const GeneratorMatrix& g, const State& state);

/// ab - ba over the shared window. Column flags propagate through both
/// factors; entries are exact where both factors' entries are.
GeneratorMatrix commutator(const GeneratorMatrix& a, const GeneratorMatrix& b);

GeneratorMatrix matrix_sum(const GeneratorMatrix& a, const GeneratorMatrix& b, const PimenovScalar& ca,
                           const PimenovScalar& cb);
GeneratorMatrix matrix_scale(const GeneratorMatrix& a, const PimenovScalar& c);
GeneratorMatrix matrix_product(const GeneratorMatrix& a, const GeneratorMatrix& b);

/// Exact-channel matrix over the slot-offset lattice window, entries are
/// Laurent series in the formal contraction parameters.
struct SeriesMatrix {
    int k = 0, r = 0;
    std::vector<std::vector<std::pair<int, LaurentSeries>>> cols;
    std::vector<bool> boundary_loss;

    SeriesMatrix() = default;
    SeriesMatrix(int k_, int r_, int ncols) : k(k_), r(r_), cols(ncols), boundary_loss(ncols) {}

    void add(int col, int row, const LaurentSeries& v);
    LaurentSeries entry(int row, int col) const;
};

SeriesMatrix commutator(const SeriesMatrix& a, const SeriesMatrix& b);
SeriesMatrix matrix_sum(const SeriesMatrix& a, const SeriesMatrix& b, const LaurentSeries& ca,
                        const LaurentSeries& cb);

/// Exact side channel: the same generator set realized on an offset lattice
/// with exact contraction-parameter arithmetic; kept for cross-checks.
struct ExactChannel {
    BasisWindow window;
    std::vector<int> dims_to_slots;  // series dimension -> dual slot id
    std::map<std::pair<int, int>, SeriesMatrix> gens;
};

enum class GeneratorRole { cartan, nilradical, reductive };

/// Partition of the generators for contracted cases (semidirect structure).
struct SubalgebraStructure {
    std::map<std::pair<int, int>, GeneratorRole> roles;
    std::string summary;
};

struct GeneratorSet {
    CkLabelSet labels;
    BasisWindow window;
    std::map<std::pair<int, int>, GeneratorMatrix> gens;
    std::shared_ptr<ExactChannel> exact;  // present for dual interior-row cases
    SubalgebraStructure structure;
    std::string route;  // provenance: which construction produced the set

    int n() const { return labels.n(); }
    const GeneratorMatrix& at(int k, int r) const;
    bool has(int k, int r) const { return gens.count({k, r}) > 0; }
};

/// J_{kr}: product of slot values over (min(k,r), max(k,r)] in generator
/// index convention (slot l sits between generator indices l-1 and l).
PimenovScalar generator_parameter(const CkParameterVector& j, int k, int r);

}  // namespace ckgz
