#pragma once

#include <map>
#include <string>
#include <vector>

#include "ckgz/pattern.hpp"

namespace ckgz {

struct JetOverflow : std::runtime_error {
    explicit JetOverflow(const std::string& what) : std::runtime_error(what) {}
};

struct UnsupportedCase : std::runtime_error {
    explicit UnsupportedCase(const std::string& what) : std::runtime_error(what) {}
};

enum class AxisKind {
    discrete,  // an unbounded integer scheme label
    offset,    // whole-unit displacement of a contracted slot (exact lattice)
    jet,       // derivative order in one slot direction
};

struct Axis {
    std::string name;
    AxisKind kind = AxisKind::discrete;
    int lo = 0, hi = 0;             // inclusive coordinate bounds
    bool lo_natural = false;        // natural edge: coefficients vanish there,
    bool hi_natural = false;        //   no information is lost by truncation
    Pos pos{};                      // discrete axes: scheme position
    int row = 0;                    // offset/jet axes: contracted row
    bool u_side = true;             // offset/jet axes: first (u) or last (v) slot
};

/// Finite truncation of the basis: an ordered list of coordinate tuples over
/// the axes. Interior entries keep a safety distance from every artificial
/// bound so that two operator applications stay inside.
class BasisWindow {
  public:
    BasisWindow() = default;
    BasisWindow(std::vector<Axis> axes, std::vector<std::vector<int>> entries, int jet_order = 0);

    int size() const { return static_cast<int>(entries_.size()); }
    const std::vector<Axis>& axes() const { return axes_; }
    const std::vector<std::vector<int>>& entries() const { return entries_; }
    const std::vector<int>& coords(int idx) const { return entries_.at(idx); }
    int jet_order() const { return jet_order_; }

    int axis_index(const std::string& name) const;  // -1 when absent
    int coord(int idx, const std::string& axis_name) const;

    /// Index of the entry with the given coordinates, or -1.
    int find(const std::vector<int>& coords) const;

    /// Distance >= depth from every artificial bound; jet axes: total
    /// derivative order <= jet_order - depth (0 when no jet axes).
    bool interior(int idx, int depth = 2) const;
    int interior_count(int depth = 2) const;

    std::string describe_entry(int idx) const;

  private:
    std::vector<Axis> axes_;
    std::vector<std::vector<int>> entries_;
    std::map<std::vector<int>, int> index_;
    int jet_order_ = 0;
};

}  // namespace ckgz
