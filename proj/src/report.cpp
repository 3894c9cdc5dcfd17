#include "hsg/report.hpp"

namespace hsg {

std::string fnv1a_hex(const std::string& data) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Json json_of(const LengthValue& l) {
    if (!l.finite) return Json("inf");
    return Json(l.value);
}

Json json_of(const HilbertFunction& h) {
    Json values = Json::object();
    for (int64_t d = h.lo; d <= h.hi; ++d)
        if (h.at(d) != 0) values[std::to_string(d)] = h.at(d);
    return Json{{"lo", h.lo}, {"hi", h.hi}, {"values", values}};
}

Json json_of(const ThetaReport& r) {
    Json stab = Json::array();
    for (const auto& s : r.stability)
        stab.push_back({{"e", s.e}, {"len_tor_even", s.len_even}, {"len_tor_odd", s.len_odd}});
    return Json{{"value", r.value},
                {"e_used", r.e_used},
                {"f_index", r.f_index},
                {"stability_pairs", stab},
                {"bound", r.bound}};
}

Json json_of(const RigidityReport& r) {
    Json prop = Json::array();
    for (const auto& [j, l] : r.propagation) prop.push_back({{"i", j}, {"length", json_of(l)}});
    const char* kind = r.kind == RigidityReport::Kind::RigidWithinBound ? "rigid-within-bound"
                       : r.kind == RigidityReport::Kind::Counterexample ? "counterexample"
                                                                        : "no-vanishing-found";
    Json out{{"verdict_kind", kind},
             {"bound", r.bound},
             {"certified_all_indices", r.certified_all_indices},
             {"propagation", prop}};
    if (r.first_vanishing) out["first_vanishing"] = *r.first_vanishing;
    if (r.kind == RigidityReport::Kind::Counterexample)
        out["counterexample_index"] = r.counterexample_index;
    return out;
}

Json json_of(const BettiTable& b) {
    Json entries = Json::array();
    for (const auto& [key, rank] : b.entries)
        entries.push_back({{"i", key.first}, {"degree", key.second}, {"rank", rank}});
    return Json{{"totals", b.totals}, {"entries", entries}};
}

Json json_of(const PeriodicityCertificate& c) {
    return Json{{"onset", c.onset}, {"period", c.period}, {"verified_through", c.verified_through}};
}

Json json_of(const StableTable& t) {
    Json entries = Json::array();
    for (int i = t.lo; i <= t.hi; ++i)
        entries.push_back({{"i", i}, {"length", json_of(t.entries[static_cast<size_t>(i - t.lo)])}});
    return Json{{"kind", t.kind == StableTable::Kind::Tor ? "tor" : "ext"}, {"entries", entries}};
}

Json json_of(const StableIdentityReport& r) {
    Json items = Json::array();
    for (const auto& it : r.items)
        items.push_back(
            {{"identity", it.identity}, {"i", it.index}, {"twist", it.twist}, {"pass", it.pass}});
    return Json{{"verdict", to_string(r.verdict)},
                {"mcm", r.mcm},
                {"window", r.window},
                {"items", items}};
}

Json json_of(const LengthDualityReport& r) {
    Json pairs = Json::array();
    for (const auto& p : r.pairs)
        pairs.push_back({{"i", p.i},
                         {"j", p.j},
                         {"len_left", p.len_left},
                         {"len_right", p.len_right},
                         {"pass", p.pass}});
    return Json{{"verdict", to_string(r.verdict)},
                {"even_dimension", r.even_dimension},
                {"isolated_singularity", r.isolated},
                {"mcm_first", r.mcm_m},
                {"mcm_second", r.mcm_n},
                {"pairs", pairs}};
}

Json json_of(const DualThetaReport& r) {
    Json out{{"verdict", to_string(r.verdict)},
             {"even_dimension", r.even_dimension},
             {"isolated_singularity", r.isolated},
             {"bundle_proxy", r.bundle_proxy},
             {"free_case", r.free_case}};
    if (r.verdict != Verdict::NotApplicable || r.free_case) out["theta"] = r.theta_value;
    if (r.syzygy_transfer_checked) out["theta_first_syzygy"] = r.theta_syzygy;
    return out;
}

Json json_of(const DepthFormulaReport& r) {
    Json out{{"verdict", to_string(r.verdict)}, {"hypothesis_holds", r.hypothesis_holds}};
    if (r.hypothesis_holds) {
        out["depth_m"] = r.depth_m;
        out["depth_n"] = r.depth_n;
        out["depth_ring"] = r.depth_ring;
        out["depth_tensor"] = r.depth_tensor;
    }
    return out;
}

Json json_of(const DimensionInequalityReport& r) {
    return Json{{"verdict", to_string(r.verdict)},
                {"tensor_finite_length", r.tensor_finite},
                {"dim_m", r.dim_m},
                {"dim_n", r.dim_n},
                {"dim_ring", r.dim_ring}};
}

Json json_of(const PushforwardPropertyReport& r) {
    return Json{{"defined", r.defined},
                {"free_iff", to_string(r.free_iff)},
                {"mcm_propagates", to_string(r.mcm_propagates)},
                {"depth_drop", to_string(r.depth_drop)},
                {"depth_m", r.depth_m},
                {"depth_m1", r.depth_m1}};
}

Json json_of(const JothilingamReport& r) {
    Json out{{"n", r.n},
             {"over_ambient", r.over_ambient},
             {"ext_vanishes", r.ext_vanishes},
             {"biconditional_asserted", r.biconditional_asserted}};
    if (r.pd_less) out["pd_less_than_n"] = *r.pd_less;
    if (r.biconditional_asserted) out["verdict"] = to_string(r.verdict);
    else out["verdict"] = to_string(Verdict::NotApplicable);
    if (!r.over_ambient && !r.biconditional_asserted)
        out["caveat"] = "biconditional not asserted without the reduced-class hypothesis";
    return out;
}

Json json_of(const McmCriterionReport& r) {
    return Json{{"verdict", to_string(r.verdict)},
                {"is_mcm", r.is_mcm},
                {"depth", r.depth_m},
                {"dim_ring", r.dim_ring},
                {"parameter_forms", r.parameter_forms},
                {"seed", r.seed},
                {"retries", r.retries},
                {"tor1_zero", r.tor1_zero},
                {"higher_tor_zero", r.higher_tor_zero}};
}

Json json_of(const TensorDepthReport& r) {
    Json hyp = Json::array();
    for (const auto& h : r.hypotheses)
        hyp.push_back({{"name", h.name}, {"verified", h.verified}, {"note", h.note}});
    const char* which = r.which == TensorDepthCase::VanishingFromTheta ? "p31"
                        : r.which == TensorDepthCase::DepthBound       ? "t32"
                                                                       : "p33";
    Json out{{"case", which}, {"hypotheses", hyp}, {"all_hypotheses", r.all_hypotheses},
             {"verdict", to_string(r.verdict)}};
    if (r.conclusion_verified) out["conclusion_verified"] = *r.conclusion_verified;
    return out;
}

Json json_of(const BiadditivityReport& r) {
    return Json{{"sequence_certified", r.sequence_certified},
                {"theta_sub", r.theta_sub},
                {"theta_mid", r.theta_mid},
                {"theta_quot", r.theta_quot},
                {"holds", r.holds}};
}

Json module_summary(const GradedModule& m) {
    return Json{{"rank", m.rank()},
                {"generator_degrees", m.gen_degs},
                {"relations", m.rels.size()}};
}

ReportBuilder::ReportBuilder(std::string command, std::string config_digest, uint64_t seed) {
    j_["tool"] = "hsg";
    j_["version"] = "0.1.0";
    j_["command"] = std::move(command);
    j_["config_digest"] = std::move(config_digest);
    j_["seed"] = seed;
    j_["results"] = Json::array();
}

void ReportBuilder::add_result(Json result) { j_["results"].push_back(std::move(result)); }

void ReportBuilder::add_result(Json result, Verdict v) {
    result["verdict"] = to_string(v);
    j_["results"].push_back(std::move(result));
    if (v == Verdict::Violated) any_violated_ = true;
    if (v == Verdict::Holds) any_holds_ = true;
    overall_ = any_violated_ ? Verdict::Violated
               : any_holds_ ? Verdict::Holds
                            : Verdict::NotApplicable;
}

Json ReportBuilder::finish() const {
    Json out = j_;
    out["verdict"] = to_string(overall_);
    return out;
}

int exit_code_for(Verdict v) { return v == Verdict::Violated ? 1 : 0; }

} // namespace hsg
