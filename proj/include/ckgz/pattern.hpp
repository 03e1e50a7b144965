#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ckgz/pimenov.hpp"

namespace ckgz {

struct InvalidSeriesParameters : std::runtime_error {
    explicit InvalidSeriesParameters(const std::string& what) : std::runtime_error(what) {}
};

struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Top-row labels of a classical irrep, weakly decreasing integers.
struct HighestWeight {
    std::vector<int> m_top;

    explicit HighestWeight(std::vector<int> m);
    int n() const { return static_cast<int>(m_top.size()); }
};

/// Triangular integer scheme; row k (1-based) has k entries, betweenness
/// m(p,k) >= m(p,k-1) >= m(p+1,k) throughout.
class ClassicalPattern {
  public:
    explicit ClassicalPattern(std::vector<std::vector<int>> rows);

    int n() const { return static_cast<int>(rows_.size()); }
    int m(int p, int k) const;         // 1 <= p <= k <= n
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    bool satisfies_betweenness() const;

    bool operator==(const ClassicalPattern& o) const { return rows_ == o.rows_; }
    bool operator<(const ClassicalPattern& o) const;  // lexicographic on (row n-1,...,row 1)
    std::string to_string() const;

  private:
    std::vector<std::vector<int>> rows_;  // rows_[k-1] has k entries
};

/// All patterns under `hw`, ascending lexicographic on rows (n-1, ..., 1);
/// the count is the irrep dimension.
std::vector<ClassicalPattern> enumerate_classical(const HighestWeight& hw);

enum class SeriesTag {
    classical,
    contracted,
    continuous_series,
    additional_continuous,
    discrete_upper,
    discrete_lower,
    continued_general,  // raw analytic-continuation labels, no unitarity case imposed
};

std::string to_string(SeriesTag t);
SeriesTag series_tag_from_string(const std::string& s);

enum class RowKind { integer, dual, imag_continuous, imag_discrete };

/// Position (p,k) in a scheme, 1 <= p <= k.
struct Pos {
    int p = 1, k = 1;
    auto operator<=>(const Pos&) const = default;
};

std::string pos_name(Pos pos);  // "m<p><k>"

/// Mixed discrete/continuous label set for a (possibly contracted or
/// analytically continued) scheme. Outer components of non-integer rows are
/// reconstructed on demand from the named continuous labels; interior
/// components stay integer.
class CkLabelSet {
  public:
    CkLabelSet() = default;
    CkLabelSet(CkParameterVector j, SeriesTag tag);

    int n() const { return j_.n; }
    const CkParameterVector& params() const { return j_; }
    SeriesTag tag() const { return tag_; }

    RowKind row_kind(int row) const;

    // Discrete components. Unset positions are basis labels left free.
    void set_discrete(Pos pos, int value);
    std::optional<int> discrete(Pos pos) const;
    const std::map<Pos, int>& discrete_map() const { return discrete_; }

    // Continuous labels by name.
    void set_continuous(const std::string& name, double value);
    std::optional<double> continuous(const std::string& name) const;
    const std::map<std::string, double>& continuous_map() const { return continuous_; }

    /// Names of the amplitude/phase labels of a dual row: ("k","zeta") for
    /// the top row of n=2, ("k","xi") for the top row of n=3, ("r","zeta")
    /// for the middle row of n=3, ("k<row>","zeta<row>") otherwise.
    std::pair<std::string, std::string> dual_label_names(int row) const;

    double amp(int row) const;    // the k/r-type label of a dual row
    double phase(int row) const;  // the zeta/xi-type label

    /// Reconstructed component value at `pos` (PimenovScalar: integer rows
    /// give reals, dual rows k +- J zeta/2, continued rows complex).
    PimenovScalar component(Pos pos) const;
    /// Same, with the outer nilpotent displacement shifted by `offset` whole
    /// units of the row scale (used by the exact lattice engine's callers).
    PimenovScalar component_with_offset(Pos pos, int offset) const;

    std::string describe() const;

  private:
    CkParameterVector j_{2, {SlotKind::unit}};
    SeriesTag tag_ = SeriesTag::classical;
    std::map<Pos, int> discrete_;
    std::map<std::string, double> continuous_;
};

/// Marks outer positions of each row as scaled by the row parameter product;
/// rows whose scale is nilpotent or imaginary get continuous labels declared
/// (defaulted to zero), interior positions keep the pattern's integers.
CkLabelSet transform_components(const ClassicalPattern& p, const CkParameterVector& j);

/// Label set for a classical case directly from a highest weight.
CkLabelSet classical_labels(const HighestWeight& hw);

struct Violation {
    std::string inequality;
    std::string detail;
};

/// One side of a scheme inequality: a position divided by the product of
/// the named parameter slots.
struct IneqSide {
    Pos pos;
    std::vector<int> slots;
};

/// lhs/J_lhs >= rhs/J_rhs, before the interpretation rules are applied.
struct SchemeInequality {
    IneqSide lhs, rhs;
};

/// The full inequality list for rank n (the formal chains row by row).
std::vector<SchemeInequality> scheme_inequalities(const CkLabelSet& labels);

/// True when the inequality still binds after cancelling shared slots: a
/// non-unit parameter left on either side removes the bound, and rows under
/// analytic continuation are governed by the series conditions instead.
bool inequality_active(const CkLabelSet& labels, const SchemeInequality& iq);

/// Applies the scheme inequalities under the cancellation/unbounded-side
/// interpretation rules; continuous labels are compared through real parts.
/// Returns violations as data (empty means valid).
std::vector<Violation> validate(const CkLabelSet& labels);

struct ContinuedParams {
    double a = 0.0;
    double b = 0.0;
    double zeta = 0.0;
    int mt12 = 0;  // integer components of the discrete series
    int mt22 = 0;
    std::optional<int> m11;  // lowest/highest basis state, when known
};

/// u(1,1) label sets for the unitary series of the analytic continuation.
/// Throws InvalidSeriesParameters when the case conditions fail.
CkLabelSet make_continued_labels(SeriesTag series, const ContinuedParams& p);

struct TransitionVariantCount {
    int per_row = 0;
    int total = 0;
};

/// n(n-1)/2 transition variants for the top row; total over rows 2..n.
TransitionVariantCount count_transition_variants(int n);

}  // namespace ckgz
