#include "ckgz/case_spec.hpp"

#include <algorithm>

namespace ckgz {

CaseSpec CaseSpec::from_json(const Json& in) {
    CaseSpec s;
    s.n = in.at("n").get<int>();
    s.j = in.value("j", std::vector<std::string>(s.n - 1, "1"));
    if (in.contains("hw")) s.hw = in.at("hw").get<std::vector<int>>();
    auto opt = [&](const char* key) -> std::optional<double> {
        if (in.contains(key)) return in.at(key).get<double>();
        return std::nullopt;
    };
    s.k = opt("k");
    s.zeta = opt("zeta");
    s.xi = opt("xi");
    s.r = opt("r");
    s.a = opt("a");
    s.b = opt("b");
    if (in.contains("m23")) s.m23 = in.at("m23").get<int>();
    if (in.contains("mt12")) s.mt12 = in.at("mt12").get<int>();
    if (in.contains("mt22")) s.mt22 = in.at("mt22").get<int>();
    s.series = in.value("series", std::string("auto"));
    s.window_lo = in.value("window_lo", -20);
    s.window_hi = in.value("window_hi", 20);
    s.jet_order = in.value("jet_order", 2);
    s.seed = in.value("seed", std::uint64_t{1});
    s.tol = in.value("tol", 1e-9);
    s.su_constraint = in.value("su", false);
    return s;
}

Json CaseSpec::to_json() const {
    Json out;
    out["n"] = n;
    out["j"] = j;
    if (hw) out["hw"] = *hw;
    auto put = [&](const char* key, const std::optional<double>& v) {
        if (v) out[key] = *v;
    };
    put("k", k);
    put("zeta", zeta);
    put("xi", xi);
    put("r", r);
    put("a", a);
    put("b", b);
    if (m23) out["m23"] = *m23;
    if (mt12) out["mt12"] = *mt12;
    if (mt22) out["mt22"] = *mt22;
    out["series"] = series;
    out["window_lo"] = window_lo;
    out["window_hi"] = window_hi;
    out["jet_order"] = jet_order;
    out["seed"] = seed;
    out["tol"] = tol;
    out["su"] = su_constraint;
    return out;
}

CkParameterVector CaseSpec::params() const {
    std::vector<SlotKind> kinds;
    for (const auto& s : j) kinds.push_back(slot_kind_from_string(s));
    if (static_cast<int>(kinds.size()) != n - 1) throw std::invalid_argument("need n-1 parameter kinds");
    return CkParameterVector(n, kinds);
}

CkLabelSet CaseSpec::to_labels() const {
    CkParameterVector p = params();
    if (p.all_unit()) {
        if (!hw) throw std::invalid_argument("classical case needs a highest weight");
        if (static_cast<int>(hw->size()) != n) throw std::invalid_argument("highest weight needs n entries");
        return classical_labels(HighestWeight(*hw));
    }
    if (n == 2) {
        if (p.slot(1) == SlotKind::dual) {
            CkLabelSet out(p, SeriesTag::contracted);
            out.set_continuous("k", k.value_or(0.0));
            out.set_continuous("zeta", zeta.value_or(0.0));
            auto v = validate(out);
            if (!v.empty()) throw ValidationError("invalid labels: " + v.front().inequality);
            return out;
        }
        // analytic continuation
        SeriesTag tag = series == "auto" ? SeriesTag::continuous_series : series_tag_from_string(series);
        ContinuedParams cp;
        cp.a = a.value_or(0.0);
        cp.b = b.value_or(0.0);
        cp.zeta = zeta.value_or(0.0);
        cp.mt12 = mt12.value_or(0);
        cp.mt22 = mt22.value_or(0);
        return make_continued_labels(tag, cp);
    }
    if (n == 3) {
        CkLabelSet out(p, SeriesTag::contracted);
        if (!m23) throw std::invalid_argument("rank-3 contracted cases need m23");
        out.set_discrete({2, 3}, *m23);
        out.set_continuous("k", k.value_or(0.0));
        out.set_continuous(out.dual_label_names(3).second, xi.value_or(0.0));
        if (out.row_kind(2) == RowKind::dual) {
            out.set_continuous("r", r.value_or(0.0));
            out.set_continuous("zeta", zeta.value_or(0.0));
        }
        auto v = validate(out);
        if (!v.empty()) throw ValidationError("invalid labels: " + v.front().inequality + " (" + v.front().detail + ")");
        return out;
    }
    throw UnsupportedCase("case construction supports ranks 2 and 3 (plus classical any rank)");
}

GenericOptions CaseSpec::options() const {
    GenericOptions o;
    o.jet_order = jet_order;
    o.window_halfwidth = std::max(1, (window_hi - window_lo) / 2);
    o.explicit_box = std::make_pair(window_lo, window_hi);
    return o;
}

CommandResult cmd_enumerate(const std::vector<int>& hw, bool count_only) {
    CommandResult res;
    HighestWeight w(hw);  // throws on non-decreasing input
    auto patterns = enumerate_classical(w);
    res.output["hw"] = hw;
    res.output["count"] = patterns.size();
    if (!count_only) {
        Json rows = Json::array();
        for (const auto& p : patterns) rows.push_back(p.rows());
        res.output["patterns"] = rows;
    }
    return res;
}

CommandResult cmd_build(const CaseSpec& spec) {
    CommandResult res;
    CkLabelSet labels = spec.to_labels();
    GeneratorSet g;
    if (labels.params().all_unit() && spec.hw)
        g = build_generic(labels, spec.options());
    else
        g = build_generic(labels, spec.options());
    res.output = to_json(g);
    res.output["provenance"] = {{"route", g.route}, {"structure", g.structure.summary}};
    return res;
}

CommandResult cmd_verify(const CaseSpec& spec, std::vector<std::string> checks) {
    CommandResult res;
    CkLabelSet labels = spec.to_labels();

    bool has_dual = labels.params().has_dual();
    if (checks.empty()) {
        checks = {"commutators", "hermiticity"};
        bool casimir_ok = labels.params().all_unit() || labels.n() == 2;
        if (casimir_ok) checks.push_back("casimir");
        if (has_dual) checks.push_back("contraction");
        if (labels.n() <= 3) checks.push_back("specialization");
        if (has_dual && labels.n() == 3) checks.push_back("nilradical");
    }

    GeneratorSet g = build_generic(labels, spec.options());
    Json out = Json::array();
    bool all_pass = true;
    for (const auto& name : checks) {
        CheckReport rep;
        if (name == "commutators") {
            rep = check_commutators(g, spec.tol);
        } else if (name == "hermiticity") {
            rep = check_hermiticity(g, std::max(spec.tol, 1e-10));
        } else if (name == "casimir") {
            CasimirSpectrum s = spectrum_general(labels);
            rep = check_casimir_diagonal(g, s, spec.tol);
        } else if (name == "contraction") {
            rep = check_contraction_limit(labels, {1e-2, 1e-4, 1e-6});
        } else if (name == "specialization") {
            rep = check_specialization(labels.n(), spec.seed, 20, 1e-10);
        } else if (name == "nilradical") {
            rep = check_nilradical(g, spec.tol);
        } else {
            throw std::invalid_argument("unknown check: " + name);
        }
        all_pass = all_pass && rep.pass;
        out.push_back(to_json(rep));
    }
    res.output["checks"] = out;
    res.output["case"] = labels.describe();
    res.output["pass"] = all_pass;
    res.exit_code = all_pass ? 0 : 1;
    return res;
}

CommandResult cmd_casimir(const CaseSpec& spec) {
    CommandResult res;
    CkLabelSet labels = spec.to_labels();
    CasimirSpectrum s;
    if (spec.su_constraint)
        s = spectrum_specialized(labels, true);
    else
        s = spectrum_general(labels);
    res.output = to_json(s);
    try {
        CasimirSpectrum closed = spectrum_specialized(labels, spec.su_constraint);
        double dev = 0.0;
        for (size_t q = 0; q < std::min(closed.values.size(), s.values.size()); ++q)
            dev = std::max(dev, std::abs(closed.values[q].real_part() - s.values[q].real_part()));
        res.output["closed_form_agreement"] = dev;
    } catch (const InvalidSeriesParameters&) {
    }
    if (labels.n() == 3 && labels.params().all_unit()) {
        auto cubic = compare_cubic_invariant(labels);
        res.output["cubic_transcription"] = {{"weight_matrix", cubic.from_weight_matrix},
                                             {"printed_form", cubic.from_printed_form},
                                             {"match", cubic.match}};
    }
    return res;
}

CommandResult cmd_variants(int n) {
    CommandResult res;
    auto v = count_transition_variants(n);
    res.output["n"] = n;
    res.output["per_row"] = v.per_row;
    res.output["total"] = v.total;
    return res;
}

}  // namespace ckgz
