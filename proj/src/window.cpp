#include "ckgz/window.hpp"

#include <sstream>

namespace ckgz {

BasisWindow::BasisWindow(std::vector<Axis> axes, std::vector<std::vector<int>> entries, int jet_order)
    : axes_(std::move(axes)), entries_(std::move(entries)), jet_order_(jet_order) {
    for (int i = 0; i < static_cast<int>(entries_.size()); ++i) {
        if (entries_[i].size() != axes_.size()) throw std::invalid_argument("entry arity mismatch");
        index_[entries_[i]] = i;
    }
}

int BasisWindow::axis_index(const std::string& name) const {
    for (int a = 0; a < static_cast<int>(axes_.size()); ++a)
        if (axes_[a].name == name) return a;
    return -1;
}

int BasisWindow::coord(int idx, const std::string& axis_name) const {
    int a = axis_index(axis_name);
    if (a < 0) throw std::out_of_range("no axis " + axis_name);
    return entries_.at(idx).at(a);
}

int BasisWindow::find(const std::vector<int>& coords) const {
    auto it = index_.find(coords);
    return it == index_.end() ? -1 : it->second;
}

bool BasisWindow::interior(int idx, int depth) const {
    const auto& c = entries_.at(idx);
    int jet_total = 0;
    for (size_t a = 0; a < axes_.size(); ++a) {
        const Axis& ax = axes_[a];
        if (ax.kind == AxisKind::jet) {
            jet_total += c[a];
            continue;
        }
        if (!ax.lo_natural && c[a] < ax.lo + depth) return false;
        if (!ax.hi_natural && c[a] > ax.hi - depth) return false;
    }
    bool has_jets = false;
    for (const auto& ax : axes_)
        if (ax.kind == AxisKind::jet) has_jets = true;
    if (has_jets && jet_total > jet_order_ - depth) return false;
    return true;
}

int BasisWindow::interior_count(int depth) const {
    int n = 0;
    for (int i = 0; i < size(); ++i)
        if (interior(i, depth)) ++n;
    return n;
}

std::string BasisWindow::describe_entry(int idx) const {
    std::ostringstream os;
    const auto& c = entries_.at(idx);
    for (size_t a = 0; a < axes_.size(); ++a) os << (a ? " " : "") << axes_[a].name << "=" << c[a];
    return os.str();
}

}  // namespace ckgz
