#pragma once

#include <json.hpp>

#include "qalg/theorems.hpp"

namespace qalg {

using Json = nlohmann::ordered_json;

// FNV-1a over the raw input bytes; stable across runs and platforms.
inline std::string digest(const std::string& bytes) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

inline Json to_json(const Verdict& v) {
    Json j;
    switch (v.kind) {
        case Verdict::Kind::proven: j["kind"] = "Proven"; break;
        case Verdict::Kind::refuted:
            j["kind"] = "Refuted";
            j["witness_degree"] = v.degree;
            j["witness"] = v.witness;
            break;
        default:
            j["kind"] = "UnknownUpTo";
            j["cutoff"] = v.degree;
    }
    return j;
}

inline Json to_json(const PeriodCert& c) {
    return Json{{"lag", c.lag}, {"period", c.period}, {"note", "heuristic evidence, not a proof"}};
}

inline Json to_json(const DimVerdict& v) {
    Json j;
    if (v.kind == DimVerdict::Kind::exactly) {
        j["kind"] = "Exactly";
        j["value"] = v.value;
    } else {
        j["kind"] = "AtLeast";
        j["value"] = v.value;
        j["note"] = "not terminated by degree " + std::to_string(v.value - 1);
        if (v.cert) j["period_cert"] = to_json(*v.cert);
    }
    return j;
}

template <class F>
Json to_json(const Resolution<F>& res) {
    Json j;
    j["target_dim"] = res.target->dim;
    j["cutoff"] = res.cutoff;
    j["terminated"] = res.terminated;
    Json steps = Json::array();
    for (const auto& mult : res.step_multiplicities()) steps.push_back(mult);
    j["projective_multiplicities"] = steps;
    j["syzygy_dims"] = res.syzygy_dims;
    j["verdict"] = to_json(proj_dim(res));
    if (auto cert = detect_periodicity(res)) j["period_cert"] = to_json(*cert);
    return j;
}

inline Json to_json(const FdimCertificate& c) {
    Json j;
    j["algebra"] = c.algebra_desc;
    j["method"] = c.method_name();
    j["value"] = c.value;
    if (c.max_dim) j["max_dim"] = *c.max_dim;
    j["certified_upper_bound"] = c.certified_upper();
    if (c.method == FdimCertificate::Method::user_asserted) j["note"] = "unverified";
    Json w = Json::array();
    for (const auto& [name, pd] : c.witnesses) w.push_back(Json{{"module", name}, {"pd", pd}});
    j["witnesses"] = w;
    return j;
}

inline Json to_json(const PeReport& rep) {
    Json j;
    j["verdict"] = to_json(rep.verdict);
    j["degree_passes"] = rep.degree_passes;
    j["tor_dims"] = rep.tor_dims;
    j["terminated"] = rep.terminated;
    if (rep.cert) j["period_cert"] = to_json(*rep.cert);
    j["projective_multiplicities"] = rep.step_multiplicities;
    return j;
}

inline Json to_json(const CpsReport& rep) {
    Json j;
    j["verdict"] = to_json(rep.verdict);
    j["multiplication_map"] = Json{{"iso", rep.mult.iso},
                                   {"tensor_dim", rep.mult.tensor_dim},
                                   {"ideal_dim", rep.mult.ideal_dim}};
    j["tor_dims"] = rep.tor_dims;
    j["pd_B_eA"] = to_json(rep.pd_eA);
    return j;
}

template <class F>
Json context_summary(const IdealContext<F>& ctx) {
    Json j;
    Json e = Json::array();
    for (size_t v : ctx.E) e.push_back(ctx.A->vertex_labels[v]);
    j["E"] = e;
    j["dim_A"] = ctx.A->dim;
    j["dim_AeA"] = ctx.ideal_dim();
    j["dim_B"] = ctx.B->dim;
    j["dim_Abar"] = ctx.Abar->dim;
    if (ctx.quotient_is_zero) j["warning"] = "E covers every vertex; A/AeA = 0";
    return j;
}

inline Json to_json(const PdTransferReport& rep) {
    Json j;
    j["membership"] = to_json(rep.membership);
    j["status"] = rep.status_name();
    if (rep.status != PdTransferReport::Status::skipped) {
        j["pd_A"] = to_json(rep.pd_full);
        j["pd_B"] = to_json(rep.pd_corner);
    }
    return j;
}

inline Json to_json(const BoundReport& rep) {
    Json j;
    j["bound_id"] = rep.bound_id;
    j["statement"] = rep.statement;
    Json hyps = Json::array();
    for (const auto& h : rep.hypotheses)
        hyps.push_back(Json{{"name", h.name}, {"state", h.state_name()}, {"detail", h.detail}});
    j["hypotheses"] = hyps;
    j["applicable"] = rep.applicable();
    Json terms = Json::array();
    for (const auto& t : rep.rhs_terms)
        terms.push_back(Json{{"name", t.name}, {"value", t.value}, {"provenance", t.provenance}});
    j["rhs_terms"] = terms;
    if (rep.rhs_value) j["rhs_value"] = *rep.rhs_value;
    Json wit = Json::array();
    for (const auto& w : rep.witnesses) {
        Json wj{{"module", w.module_name},
                {"lhs", to_json(w.lhs)},
                {"holds", w.status_name()}};
        if (!w.caveat.empty()) wj["caveat"] = w.caveat;
        wit.push_back(wj);
    }
    j["witnesses"] = wit;
    j["caveats"] = rep.caveats;
    j["any_violation"] = rep.any_violation();
    return j;
}

inline Json to_json(const LemmaReport& rep) {
    Json j;
    j["status"] = implication_status_name(rep.status);
    j["hypothesis"] = to_json(rep.hypothesis);
    if (rep.conclusion) j["conclusion"] = to_json(*rep.conclusion);
    j["notes"] = rep.notes;
    return j;
}

inline Json to_json(const SyzygyTraceReport& rep) {
    Json j;
    j["status"] = implication_status_name(rep.status);
    j["strongly_idempotent"] = to_json(rep.strongly_idempotent);
    j["tor_hypothesis"] = to_json(rep.tor_hypothesis);
    if (rep.conclusion) j["conclusion"] = to_json(*rep.conclusion);
    if (rep.identity_mismatch_degree) j["identity_mismatch_degree"] = *rep.identity_mismatch_degree;
    j["notes"] = rep.notes;
    return j;
}

inline Json to_json(const StratResult& r) {
    Json j;
    j["found"] = r.found;
    j["orderings_tried"] = r.orderings_tried;
    Json chain = Json::array();
    for (const auto& s : r.chain)
        chain.push_back(Json{{"vertex", s.vertex},
                             {"layer_dim", s.layer_dim},
                             {"quotient_dim", s.quotient_dim},
                             {"layer_projective", true}});
    j["chain"] = chain;
    return j;
}

}  // namespace qalg
