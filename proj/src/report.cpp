#include "affinecodes/report.hpp"

namespace afc {

namespace {

Json exp_json(const Exp& e) {
    Json a = Json::array();
    for (uint32_t v : e) a.push_back(v);
    return a;
}

Json rows_json(const std::vector<Word>& rows) {
    Json a = Json::array();
    for (const auto& r : rows) a.push_back(word_to_string(r));
    return a;
}

Json cardinality_json(const Cardinality& c) {
    return Json{{"base", c.base}, {"exponent", c.exponent}};
}

Json block_json(const ModuleBlock& blk) {
    Json levels = Json::array();
    Json bs = Json::array();
    Json ferrers = Json::array();
    Json chi = Json::array();
    for (const auto& level : blk.cgs.levels) {
        bs.push_back(level.b);
        Json cells = Json::array();
        for (const auto& e : level.ferrers.cells) cells.push_back(exp_json(e));
        ferrers.push_back(cells);
        Json gens = Json::array();
        for (const auto& g : level.chi) {
            Json gj;
            gj["label"] = exp_json(g.label);
            gj["polynomial"] = g.value.to_string();
            gens.push_back(gj);
        }
        chi.push_back(gens);
    }
    Json out;
    out["position"] = blk.component + 1;
    out["b"] = bs;
    out["ferrers"] = ferrers;
    out["chi"] = chi;
    out["cardinality_log_q"] = blk.cgs.log_q_size;
    return out;
}

}  // namespace

std::string emit_json(const Json& j) { return j.dump(2) + "\n"; }

Json info_report(const SpecFile& sf) {
    Json j;
    j["ring"] = sf.ring->describe();
    j["p"] = sf.ring->p();
    j["t"] = sf.ring->t();
    j["d"] = sf.ring->d();
    j["q"] = sf.ring->q();
    j["algebra"] = sf.algebra->describe();
    j["order"] = sf.algebra->order().name();
    j["box"] = sf.algebra->box_size();
    j["index"] = sf.index;
    j["generators"] = rows_json(sf.generators);
    return j;
}

Json cgs_report(const CodeModule& code) {
    const ModuleCGS& cgs = code.cgs();
    Json blocks = Json::array();
    for (const auto& blk : cgs.blocks) blocks.push_back(block_json(blk));
    Json j;
    j["blocks"] = blocks;
    j["rows"] = rows_json(canonical_generator_matrix(code));
    j["cardinality_log_q"] = cgs.log_q_size;
    return j;
}

Json genmat_report(const CodeModule& code) {
    Json j;
    j["rows"] = rows_json(canonical_generator_matrix(code));
    return j;
}

Json card_report(const CodeModule& code) {
    Json j;
    j["cardinality"] = cardinality_json(cardinality(code));
    return j;
}

Json member_report(const Word& w, const CodeModule& code, MembershipMethod method) {
    Json j;
    j["element"] = word_to_string(w);
    j["member"] = membership(w, code, method);
    j["method"] = method == MembershipMethod::cgs ? "cgs" : "linear";
    return j;
}

Json rdual_report(const CodeModule& code) {
    RDualResult d = r_dual(code);
    Json j;
    j["dual_generators"] = rows_json(d.generators);
    j["cardinality_log_q"] = d.log_q_size;
    j["module"] = "R";
    return j;
}

namespace {

Json dual_report_common(const CodeModule& code, const CodeModule& dual) {
    const AlgebraSpec& spec = *code.spec();
    Json j;
    j["dual_generators"] =
        rows_json(minimize_rows(canonical_generator_matrix(dual), code.spec(), code.index()));
    j["cardinality_log_q"] = dual.howell().log_q_size();
    uint64_t total = spec.box_size() * code.index() * spec.ring()->t();
    j["verified"] = Json{
        {"orthogonal", true},
        {"index_product", code.howell().log_q_size() + dual.howell().log_q_size() == total}};
    return j;
}

}  // namespace

Json adual_report(const CodeModule& code) {
    CodeModule dual = a_dual(code);
    Json j = dual_report_common(code, dual);
    j["self_dual"] = dual.same_module(code);
    return j;
}

Json hdual_report(const CodeModule& code) {
    CodeModule dual = hermitian_dual(code);
    return dual_report_common(code, dual);
}

Json paritycheck_report(const CodeModule& code, const ParityCheckResult& pc) {
    Json j;
    j["H"] = rows_json(pc.h_rows);
    j["annihilator_rows"] = pc.annihilator_rows;
    j["reduced"] = rows_json(pc.reduced);
    j["dual_cardinality_log_q"] = pc.dual_log_q;
    j["verified"] = Json{{"orthogonal", pc.orthogonal},
                         {"index_product", pc.index_product},
                         {"lifts_solved", pc.lifts_solved}};
    return j;
}

Json weights_report(const CodeModule& code, const WeightDistribution& dist, WeightKind kind) {
    Json counts = Json::object();
    for (const auto& [w, c] : dist.counts) counts[std::to_string(w)] = c;
    Json j;
    j["weight"] = weight_name(kind);
    j["weights"] = counts;
    j["min_nonzero"] = dist.min_nonzero;
    j["cardinality"] = cardinality_json(cardinality(code));
    return j;
}

Json kerdock_report(const KerdockResult& kr) {
    const KerdockParams& kp = kr.params;
    Json j;
    j["d"] = kp.d;
    j["m"] = kp.m;
    j["tau"] = kp.tau;
    j["ring"] = kp.base->describe();
    j["algebra"] = kp.algebra->describe();
    j["H"] = kp.h.to_string();
    j["H_star"] = kp.h_star.to_string();
    j["H0"] = kp.h0.to_string();
    j["P"] = kp.p_poly.to_string();
    j["Q"] = kp.q_poly.to_string();
    Json etas = Json::array();
    for (const auto& e : kp.eta) etas.push_back(e.to_string());
    j["eta"] = etas;
    j["generator"] = word_to_string(kr.generator);
    CodeModule d(kp.algebra, 2, {kr.generator});
    j["cardinality"] = cardinality_json(cardinality(d));
    return j;
}

}  // namespace afc
