#include "qbx/report.hpp"

namespace qbx {

namespace {

Json verdict(bool ok, const std::string& witness) {
    Json j;
    j["holds"] = ok;
    if (!witness.empty()) j["witness"] = witness;
    return j;
}

Json names_of(const Enumeration& e, const Presentation& p) {
    Json a = Json::array();
    for (int r = 0; r < e.size(); ++r) a.push_back(p.names[e.gen_at_rank(r)]);
    return a;
}

Json axioms_json(const AxiomReport& ax) {
    Json j;
    j["a"] = verdict(ax.a.ok, ax.a.witness);
    j["b"] = verdict(ax.b.ok, ax.b.witness);
    j["c"] = verdict(ax.c.ok, ax.c.witness);
    j["d"] = verdict(ax.d.ok, ax.d.witness);
    j["all"] = ax.all();
    return j;
}

Json normal_form_json(const NormalForm& nf, const Presentation& p) {
    Json j;
    if (nf.zero) {
        j["zero"] = true;
    } else {
        j["word"] = nf.word.str(p.names);
        j["coeff"] = nf.coeff.str();
    }
    return j;
}

Json groebner_json(const GroebnerReport& gr, const Presentation& p) {
    Json j;
    j["skew_shaped"] = gr.skew_shaped;
    j["confluent"] = gr.ok;
    if (!gr.reason.empty()) j["reason"] = gr.reason;
    if (!gr.failing.empty()) {
        j["witness"] = gr.failing[0].str(p.names);
        j["witness_normal_forms"] =
            Json{{"from_left", normal_form_json(gr.witness_left, p)},
                 {"from_right", normal_form_json(gr.witness_right, p)}};
        Json f = Json::array();
        for (const Word& w : gr.failing) f.push_back(w.str(p.names));
        j["failing_ambiguities"] = f;
    }
    return j;
}

Json tensor_json(const Tensor& t, const std::vector<std::string>& names) {
    Json terms = Json::array();
    for (const auto& [w, c] : t)
        terms.push_back(Json{{"word", w.str(names)}, {"coeff", c.str()}});
    return terms;
}

Json frobenius_json(const FrobeniusReport& fr, const Presentation& p) {
    Json j;
    j["holds"] = fr.holds;
    j["dims"] = fr.dims;
    if (!fr.pair_ranks.empty()) {
        j["pair_ranks"] = fr.pair_ranks;
        j["socle"] = fr.socle.str(p.names);
    }
    if (!fr.failure.empty()) j["failure"] = fr.failure;
    return j;
}

Json ybe_set_json(const SetYbeReport& r, const Presentation& p) {
    Json j;
    j["holds"] = r.holds;
    if (!r.holds) {
        j["witness"] = r.witness.str(p.names);
        j["left"] = r.left_result.str(p.names);
        j["right"] = r.right_result.str(p.names);
    }
    return j;
}

Json ybe_linear_json(const LinearYbeReport& r, const Presentation& p) {
    Json j;
    j["holds"] = r.holds;
    if (!r.holds) {
        j["witness"] = r.witness.str(p.names);
        j["left"] = tensor_json(r.left_result, p.names);
        j["right"] = tensor_json(r.right_result, p.names);
    }
    return j;
}

} // namespace

Json run_check(const PresentationFile& pf) {
    const Presentation& p = pf.pres;
    Json doc;
    doc["n"] = p.n;
    AxiomReport ax = check_axioms(p);
    doc["axioms"] = axioms_json(ax);
    doc["quantum_binomial"] = ax.all();
    OreReport ore = check_ore(p);
    doc["ore"] = Json{{"left", verdict(ore.left, ore.left_witness)},
                      {"right", verdict(ore.right, ore.right_witness)}};
    WeakCyclicReport wc = check_weak_cyclic(p);
    doc["weak_cyclic"] = verdict(wc.holds, wc.witness);
    return doc;
}

Json run_order_search(const PresentationFile& pf) {
    const Presentation& p = pf.pres;
    Json doc;
    doc["n"] = p.n;
    std::vector<Enumeration> orders = find_skew_order(p);
    Json arr = Json::array();
    for (const auto& e : orders) arr.push_back(names_of(e, p));
    doc["count"] = orders.size();
    doc["orders"] = arr;
    return doc;
}

Json run_groebner(const PresentationFile& pf, const Enumeration& e) {
    const Presentation& p = pf.pres;
    Json doc;
    doc["order"] = names_of(e, p);
    SkewShapeReport shape = check_skew_shape(p, e);
    doc["skew_shape"] = verdict(shape.ok, shape.witness);
    if (shape.ok) {
        doc["groebner"] = groebner_json(check_groebner(RewriteSystem::orient(p, e)), p);
    } else {
        GroebnerReport gr;
        gr.reason = "not skew-shaped: " + shape.witness;
        doc["groebner"] = groebner_json(gr, p);
    }
    return doc;
}

Json run_ybe(const PresentationFile& pf, bool set_mode, bool linear_mode) {
    const Presentation& p = pf.pres;
    Json doc;
    if (!set_mode && !linear_mode) set_mode = linear_mode = true;
    if (set_mode) doc["set"] = ybe_set_json(check_set_ybe(p), p);
    if (linear_mode) doc["linear"] = ybe_linear_json(check_linear_ybe(p), p);
    return doc;
}

namespace {

Json dual_presentation_json(const DualPresentation& dp) {
    Json doc;
    doc["generators"] = dp.names;
    Json rels = Json::array();
    for (const auto& r : dp.binomials) {
        Json rel;
        rel["lhs"] = Json::array({dp.names[r.lhs.at(0)], dp.names[r.lhs.at(1)]});
        rel["coeff"] = r.coeff.str();
        rel["rhs"] = Json::array({dp.names[r.rhs.at(0)], dp.names[r.rhs.at(1)]});
        rels.push_back(rel);
    }
    doc["relations"] = rels;
    Json sq = Json::array();
    for (int i = 0; i < dp.n(); ++i) sq.push_back(dp.names[i] + dp.names[i]);
    doc["squares"] = sq;
    doc["relation_count"] = dp.relation_count();
    return doc;
}

} // namespace

Json run_dual(const PresentationFile& pf) {
    DualPresentation dp = koszul_dual(pf.pres);
    Json doc = dual_presentation_json(dp);
    std::vector<long> dims;
    for (int k = 0; k <= dp.n() + 1; ++k) dims.push_back(graded_dimension(dp, k));
    doc["dims"] = dims;
    return doc;
}

Json run_frobenius(const PresentationFile& pf) {
    DualPresentation dp = koszul_dual(pf.pres);
    Json doc;
    doc["dual_relation_count"] = dp.relation_count();
    doc["frobenius"] = frobenius_json(check_frobenius(dp), pf.pres);
    return doc;
}

Json run_socle(const PresentationFile& pf) {
    const Presentation& p = pf.pres;
    DualPresentation dp = koszul_dual(p);
    PrincipalReport pm = principal_monomial(dp);
    Json doc;
    doc["socle"] = pm.socle.str(p.names);
    doc["class_size"] = pm.cls.coeffs.size();
    Json heads = Json::array(), tails = Json::array();
    for (int g : pm.heads) heads.push_back(p.names[g]);
    for (int g : pm.tails) tails.push_back(p.names[g]);
    doc["heads"] = heads;
    doc["tails"] = tails;
    Json ml = Json::array();
    for (const Word& w : pm.multilinear) ml.push_back(w.str(p.names));
    doc["multilinear"] = ml;
    RegularSocleReport rs = check_regular_socle(dp);
    Json reg = Json::array();
    for (const Word& w : rs.regular) reg.push_back(w.str(p.names));
    doc["regular"] = reg;
    doc["regular_socle"] = rs.holds;
    return doc;
}

Json run_hilbert(const PresentationFile& pf, int max_degree) {
    const Presentation& p = pf.pres;
    if (max_degree < 0 || max_degree > 8) throw cap_error("hilbert degree cap (8) exceeded");
    Enumeration e = Enumeration::identity(p.n);
    bool have = false;
    if (pf.order) {
        e = *pf.order;
        have = true;
    } else {
        std::vector<Enumeration> orders = find_skew_order(p);
        if (!orders.empty()) {
            e = orders[0];
            have = true;
        }
    }
    if (!have) throw input_error("no certifying enumeration; declare an order in the input");
    RewriteSystem rs = RewriteSystem::orient(p, e);
    GroebnerReport gr = check_groebner(rs);
    if (!gr.ok)
        throw input_error("enumeration does not certify the presentation: " + gr.reason);
    Json doc;
    doc["order"] = names_of(e, p);
    std::vector<long> counts;
    for (int d = 0; d <= max_degree; ++d) counts.push_back(count_normal_words(rs, d));
    doc["normal_word_counts"] = counts;
    return doc;
}

TheoremBOutcome run_theorem_b(const PresentationFile& pf) {
    const Presentation& p = pf.pres;
    TheoremBOutcome out;
    Json& doc = out.doc;
    doc["n"] = p.n;
    AxiomReport ax = check_axioms(p);
    doc["axioms"] = axioms_json(ax);
    out.quantum_binomial = ax.all();
    doc["quantum_binomial"] = out.quantum_binomial;

    // condition 1: weak cyclicity, Frobenius dual, regular socle
    WeakCyclicReport wc = check_weak_cyclic(p);
    Json c1;
    c1["weak_cyclic"] = verdict(wc.holds, wc.witness);
    bool frob_ok = false, reg_ok = false;
    try {
        DualPresentation dp = koszul_dual(p);
        FrobeniusReport fr = check_frobenius(dp);
        c1["frobenius"] = frobenius_json(fr, p);
        frob_ok = fr.holds;
        if (fr.holds) {
            RegularSocleReport rs = check_regular_socle(dp);
            Json reg = Json::array();
            for (const Word& w : rs.regular) reg.push_back(w.str(p.names));
            c1["regular_socle"] = Json{{"holds", rs.holds}, {"regular", reg}};
            reg_ok = rs.holds;
        } else {
            c1["regular_socle"] = Json{{"holds", false}, {"skipped", "dual is not Frobenius"}};
        }
    } catch (const input_error& e) {
        c1["frobenius"] = Json{{"holds", false}, {"failure", e.what()}};
        c1["regular_socle"] = Json{{"holds", false}, {"skipped", "dual not constructed"}};
    }
    bool cond1 = wc.holds && frob_ok && reg_ok;
    c1["holds"] = cond1;
    doc["condition1"] = c1;

    // condition 2: a certifying skew order exists
    std::vector<Enumeration> orders = find_skew_order(p);
    Json c2;
    Json arr = Json::array();
    for (const auto& e : orders) arr.push_back(names_of(e, p));
    c2["orders"] = arr;
    bool cond2 = !orders.empty();
    c2["holds"] = cond2;
    doc["condition2"] = c2;

    // condition 3: the linear braid relation
    Json c3;
    bool cond3 = false;
    try {
        LinearYbeReport lin = check_linear_ybe(p);
        c3["linear_ybe"] = ybe_linear_json(lin, p);
        cond3 = lin.holds;
    } catch (const input_error& e) {
        c3["linear_ybe"] = Json{{"holds", false}, {"failure", e.what()}};
    }
    c3["holds"] = cond3;
    doc["condition3"] = c3;

    out.consistent = (cond1 == cond2) && (cond2 == cond3);
    doc["consistent"] = out.consistent;
    return out;
}

namespace {

bool inline_array(const Json& a) {
    for (const auto& v : a)
        if (v.is_object() || v.is_array()) return false;
    return true;
}

void render_rec(const Json& j, const std::string& key, int indent, std::string& out) {
    std::string pad(indent, ' ');
    if (j.is_object()) {
        out += pad + key + ":\n";
        for (auto it = j.begin(); it != j.end(); ++it)
            render_rec(it.value(), it.key(), indent + 2, out);
    } else if (j.is_array() && !inline_array(j)) {
        out += pad + key + ":\n";
        int i = 0;
        for (const auto& v : j) render_rec(v, "[" + std::to_string(i++) + "]", indent + 2, out);
    } else {
        out += pad + key + ": " + (j.is_string() ? j.get<std::string>() : j.dump()) + "\n";
    }
}

} // namespace

std::string render_text(const Json& doc) {
    std::string out;
    for (auto it = doc.begin(); it != doc.end(); ++it)
        render_rec(it.value(), it.key(), 0, out);
    return out;
}

} // namespace qbx
