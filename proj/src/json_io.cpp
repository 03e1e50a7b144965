#include "ckgz/json_io.hpp"

namespace ckgz {

Json to_json(const PimenovScalar& v) {
    Json out = Json::array();
    for (const auto& [s, c] : v.terms())
        out.push_back({{"support", s.indices()}, {"re", c.real()}, {"im", c.imag()}});
    return out;
}

PimenovScalar pimenov_from_json(const Json& j) {
    PimenovScalar out;
    for (const auto& t : j) {
        DualSupport s;
        for (int idx : t.at("support")) s = s.united(DualSupport::unit(idx));
        out.set_term(s, Complex(t.at("re").get<double>(), t.at("im").get<double>()));
    }
    return out;
}

Json to_json(const CkLabelSet& labels) {
    Json out;
    out["n"] = labels.n();
    Json jj = Json::array();
    for (int l = 1; l <= labels.n() - 1; ++l) jj.push_back(to_string(labels.params().slot(l)));
    out["j"] = jj;
    Json disc = Json::object();
    for (const auto& [pos, v] : labels.discrete_map()) disc[pos_name(pos)] = v;
    out["discrete"] = disc;
    Json cont = Json::object();
    for (const auto& [name, v] : labels.continuous_map()) cont[name] = v;
    out["continuous"] = cont;
    out["series"] = to_string(labels.tag());
    return out;
}

CkLabelSet labels_from_json(const Json& j) {
    int n = j.at("n").get<int>();
    std::vector<SlotKind> kinds;
    for (const auto& s : j.at("j")) kinds.push_back(slot_kind_from_string(s.get<std::string>()));
    CkParameterVector params(n, kinds);
    CkLabelSet out(params, series_tag_from_string(j.at("series").get<std::string>()));
    for (auto it = j.at("discrete").begin(); it != j.at("discrete").end(); ++it) {
        const std::string& key = it.key();
        if (key.size() != 3 || key[0] != 'm') throw std::invalid_argument("bad discrete key " + key);
        out.set_discrete({key[1] - '0', key[2] - '0'}, it.value().get<int>());
    }
    for (auto it = j.at("continuous").begin(); it != j.at("continuous").end(); ++it)
        out.set_continuous(it.key(), it.value().get<double>());
    return out;
}

Json to_json(const BasisWindow& w) {
    Json out;
    out["jet_order"] = w.jet_order();
    Json axes = Json::array();
    for (const auto& a : w.axes()) {
        Json ja;
        ja["name"] = a.name;
        ja["kind"] = a.kind == AxisKind::discrete ? "discrete" : (a.kind == AxisKind::offset ? "offset" : "jet");
        ja["lo"] = a.lo;
        ja["hi"] = a.hi;
        ja["lo_natural"] = a.lo_natural;
        ja["hi_natural"] = a.hi_natural;
        ja["p"] = a.pos.p;
        ja["k"] = a.pos.k;
        ja["row"] = a.row;
        ja["u_side"] = a.u_side;
        axes.push_back(ja);
    }
    out["axes"] = axes;
    out["entries"] = w.entries();
    return out;
}

BasisWindow window_from_json(const Json& j) {
    std::vector<Axis> axes;
    for (const auto& ja : j.at("axes")) {
        Axis a;
        a.name = ja.at("name").get<std::string>();
        std::string kind = ja.at("kind").get<std::string>();
        a.kind = kind == "discrete" ? AxisKind::discrete : (kind == "offset" ? AxisKind::offset : AxisKind::jet);
        a.lo = ja.at("lo").get<int>();
        a.hi = ja.at("hi").get<int>();
        a.lo_natural = ja.at("lo_natural").get<bool>();
        a.hi_natural = ja.at("hi_natural").get<bool>();
        a.pos = {ja.at("p").get<int>(), ja.at("k").get<int>()};
        a.row = ja.at("row").get<int>();
        a.u_side = ja.at("u_side").get<bool>();
        axes.push_back(a);
    }
    std::vector<std::vector<int>> entries = j.at("entries").get<std::vector<std::vector<int>>>();
    return BasisWindow(axes, entries, j.at("jet_order").get<int>());
}

Json to_json(const GeneratorSet& g) {
    Json out;
    out["format"] = "ckgz-generator-set-v1";
    out["labels"] = to_json(g.labels);
    out["window"] = to_json(g.window);
    out["route"] = g.route;
    Json gens = Json::array();
    for (const auto& [key, m] : g.gens) {
        Json jg;
        jg["k"] = key.first;
        jg["r"] = key.second;
        Json trip = Json::array();
        for (int col = 0; col < m.ncols(); ++col)
            for (const auto& [row, v] : m.cols[col]) trip.push_back({row, col, to_json(v)});
        jg["triplets"] = trip;
        Json lossy = Json::array(), overflow = Json::array();
        for (int col = 0; col < m.ncols(); ++col) {
            if (m.boundary_loss[col]) lossy.push_back(col);
            if (m.jet_overflow[col]) overflow.push_back(col);
        }
        jg["boundary_loss"] = lossy;
        jg["jet_overflow"] = overflow;
        gens.push_back(jg);
    }
    out["generators"] = gens;
    return out;
}

GeneratorSet generator_set_from_json(const Json& j) {
    if (j.at("format").get<std::string>() != "ckgz-generator-set-v1")
        throw std::invalid_argument("unknown generator set format");
    GeneratorSet out;
    out.labels = labels_from_json(j.at("labels"));
    out.window = window_from_json(j.at("window"));
    out.route = j.at("route").get<std::string>();
    for (const auto& jg : j.at("generators")) {
        int k = jg.at("k").get<int>(), r = jg.at("r").get<int>();
        GeneratorMatrix m(k, r, out.window.size());
        for (const auto& t : jg.at("triplets"))
            m.add(t.at(1).get<int>(), t.at(0).get<int>(), pimenov_from_json(t.at(2)));
        for (int col : jg.at("boundary_loss")) m.boundary_loss[col] = true;
        for (int col : jg.at("jet_overflow")) m.jet_overflow[col] = true;
        out.gens[{k, r}] = std::move(m);
    }
    return out;
}

Json to_json(const CheckReport& r) {
    Json out;
    out["name"] = r.name;
    out["case"] = r.case_descriptor;
    out["tolerance"] = r.tolerance;
    out["max_deviation"] = r.max_deviation;
    out["worst"] = r.worst;
    out["pass"] = r.pass;
    out["boundary_excluded"] = r.boundary_excluded;
    out["seed"] = r.seed;
    out["detail"] = r.detail;
    return out;
}

Json to_json(const CasimirSpectrum& s) {
    Json out;
    for (size_t q = 0; q < s.values.size(); ++q) {
        Complex c = s.values[q].real_part();
        std::string key = "C" + std::to_string(q + 1);
        if (c.imag() == 0.0)
            out[key] = c.real();
        else
            out[key] = {{"re", c.real()}, {"im", c.imag()}};
        out[key + "_full"] = to_json(s.values[q]);
    }
    out["provenance"] = s.provenance;
    return out;
}

}  // namespace ckgz
