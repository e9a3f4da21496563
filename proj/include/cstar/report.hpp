#pragma once

#include <cstar/embedding.hpp>
#include <cstar/gizatullin.hpp>

#include <json.hpp>

namespace cstar {

using json = nlohmann::ordered_json;

inline const char *yn(bool b) { return b ? "yes" : "no"; }

template <class Seq> inline std::string ambient_str(const Seq &w) {
    std::string s = "P(";
    bool first = true;
    for (long v : w) {
        if (!first) s += ",";
        s += std::to_string(v);
        first = false;
    }
    return s + ")";
}

inline std::string ambient_str(std::initializer_list<long> w) {
    return ambient_str<std::initializer_list<long>>(w);
}

inline std::string pair_str(const DPDPair &p) {
    return "(" + p.plus.str() + "; " + p.minus.str() + ")";
}

inline json weights_json(const WeightVector &w) { return json::array({w[0], w[1], w[2], w[3]}); }

inline json normal_form_json(const NormalForm &nf) {
    return json{{"d", nf.d},
                {"e_plus", nf.e_plus},
                {"e_minus", nf.e_minus},
                {"k", nf.k},
                {"Q", nf.Q.str()}};
}

inline std::string normal_form_line(const NormalForm &nf) {
    return "d=" + std::to_string(nf.d) + " e+=" + std::to_string(nf.e_plus) +
           " e-=" + std::to_string(nf.e_minus) + " k=" + std::to_string(nf.k) +
           " Q=" + nf.Q.str();
}

// ---------------------------------------------------------------- normalize

inline json normalize_json(const DPDPair &input, const NormalForm &nf, const Transcript &tr,
                           const SmoothnessReport &sm) {
    json j;
    j["input"] = pair_str(input);
    j["normal_form"] = normal_form_json(nf);
    j["pair"] = pair_str(reconstruct_pair(nf));
    j["interchanged"] = tr.interchanged;
    j["transport"] = json{{"alpha", tr.alpha.str()}, {"beta", tr.beta.str()}};
    j["witness"] = tr.witness.str();
    j["smooth"] = json{{"literal", sm.literal}, {"pointwise", sm.pointwise}};
    return j;
}

inline std::string normalize_text(const DPDPair &input, const NormalForm &nf,
                                  const Transcript &tr, const SmoothnessReport &sm) {
    std::string s;
    s += "input: " + pair_str(input) + "\n";
    s += "normal form: " + normal_form_line(nf) + "\n";
    s += "canonical pair: " + pair_str(reconstruct_pair(nf)) + "\n";
    s += "interchanged: " + std::string(yn(tr.interchanged)) + "\n";
    s += "transport: alpha=" + tr.alpha.str() + " beta=" + tr.beta.str() + "\n";
    s += "shift witness: " + tr.witness.str() + "\n";
    s += "smooth: literal " + std::string(yn(sm.literal)) + ", pointwise " +
         std::string(yn(sm.pointwise)) + "\n";
    return s;
}

// -------------------------------------------------------------------- embed

struct EmbedReport {
    NormalForm nf;
    Embedding base;
    Embedding positive;
    NormalityFlags normality;
    Covering covering;
    bool homogeneous = false;
    bool parametrization = false;
    bool character = false;
    std::optional<Embedding> replacement;
    std::optional<ReducedPresentation> reduced;
};

/** Everything the relation-building pipeline can say about one normal form. */
inline EmbedReport make_embed_report(const NormalForm &nf) {
    EmbedReport r;
    r.nf = nf;
    r.base = build_embedding(nf);
    r.positive = positive_weight_embedding(nf);
    r.normality = normality_flags(nf);
    r.covering = dehomogenize(r.base);
    WeightedDegree wd = weighted_degree_check(r.base.F, r.base.weights);
    r.homogeneous = wd.homogeneous && wd.degree == r.base.degree;
    r.parametrization = parametrization_check(nf);
    r.character = character_check(nf);
    r.replacement = toric_replacement(nf);
    r.reduced = eliminate_z(r.base);
    return r;
}

inline json embed_json(const EmbedReport &r) {
    json j;
    j["normal_form"] = normal_form_json(r.nf);
    j["F"] = r.base.F.str();
    j["weights"] = weights_json(r.base.weights);
    j["ambient"] = ambient_str(r.base.weights);
    j["degree"] = r.base.degree;
    j["flags"] = json{{"all_weights_positive", r.base.all_weights_positive},
                      {"normality_certified", r.base.normality_certified},
                      {"toric", r.base.toric},
                      {"alpha_used", r.base.alpha}};
    j["checks"] = json{{"homogeneous", r.homogeneous},
                       {"parametrization", r.parametrization},
                       {"character", r.character}};
    j["positive"] = json{{"F", r.positive.F.str()},
                         {"weights", weights_json(r.positive.weights)},
                         {"ambient", ambient_str(r.positive.weights)},
                         {"degree", r.positive.degree},
                         {"alpha", r.positive.alpha}};
    j["covering"] = json{
        {"relation", r.covering.relation.str()},
        {"action", json::array({r.covering.action[0], r.covering.action[1], r.covering.action[2]})},
        {"order", r.covering.order}};
    if (r.replacement) {
        j["toric_replacement"] = json{{"F", r.replacement->F.str()},
                                      {"weights", weights_json(r.replacement->weights)},
                                      {"ambient", ambient_str(r.replacement->weights)},
                                      {"degree", r.replacement->degree}};
    } else {
        j["toric_replacement"] = nullptr;
    }
    if (r.reduced) {
        j["eliminated"] = json{{"G", r.reduced->G.str()},
                               {"weights", json::array({r.reduced->weights[0],
                                                        r.reduced->weights[1],
                                                        r.reduced->weights[2]})},
                               {"ambient", ambient_str(r.reduced->weights)},
                               {"all_weights_positive", r.reduced->all_weights_positive}};
    } else {
        j["eliminated"] = nullptr;
    }
    return j;
}

inline std::string embed_text(const EmbedReport &r) {
    std::string s;
    s += "normal form: " + normal_form_line(r.nf) + "\n";
    s += "F = " + r.base.F.str() + "\n";
    s += "ambient: " + ambient_str(r.base.weights) + ", degree " +
         std::to_string(r.base.degree) + "\n";
    s += "flags: weights positive " + std::string(yn(r.base.all_weights_positive)) +
         ", toric " + std::string(yn(r.base.toric)) + ", normality certified " +
         std::string(yn(r.base.normality_certified)) + "\n";
    s += "checks: homogeneous " + std::string(yn(r.homogeneous)) + ", parametrization " +
         std::string(yn(r.parametrization)) + ", character " + std::string(yn(r.character)) +
         "\n";
    s += "positive model: F = " + r.positive.F.str() + " in " +
         ambient_str(r.positive.weights) + ", degree " + std::to_string(r.positive.degree) +
         ", alpha " + std::to_string(r.positive.alpha) + "\n";
    s += "covering: " + r.covering.relation.str() + " with action (" +
         std::to_string(r.covering.action[0]) + "," + std::to_string(r.covering.action[1]) +
         "," + std::to_string(r.covering.action[2]) + ") of order " +
         std::to_string(r.covering.order) + "\n";
    if (r.replacement)
        s += "toric replacement: " + r.replacement->F.str() + " in " +
             ambient_str(r.replacement->weights) + "\n";
    if (r.reduced)
        s += "eliminated: D_+(" + r.reduced->G.str() + ") in " +
             ambient_str(r.reduced->weights) + "\n";
    return s;
}

// -------------------------------------------------------------------- toric

inline json toric_json(const ToricQuotient &t) {
    return json{{"d", t.d},
                {"e", t.e},
                {"ambient", ambient_str(t.weights)},
                {"open_part", "D_+(z)"},
                {"action", json::array({t.action[0], t.action[1]})},
                {"order", t.d}};
}

inline std::string toric_text(const ToricQuotient &t) {
    return "V_{" + std::to_string(t.d) + "," + std::to_string(t.e) + "} = D_+(z) in " +
           ambient_str(t.weights) + "\naction: (x,y) -> (zeta*x, zeta^" +
           std::to_string(t.e) + "*y), order " + std::to_string(t.d) + "\n";
}

inline json toric_iso_json(long d, long e, long e2, bool iso) {
    return json{{"d", d}, {"e", e}, {"e2", e2}, {"isomorphic", iso}};
}

// --------------------------------------------------------------- gizatullin

inline json gizatullin_json(const GizatullinParams &gp, const PlaneEmbedding &pe,
                            bool generators, bool action) {
    json j;
    j["case"] = "nontoric";
    j["e"] = gp.e;
    j["m"] = gp.m;
    j["c"] = gp.c;
    j["p"] = gp.p.str();
    j["q"] = gp.q.str();
    j["pair"] = pair_str(hyperbolic_pair(gp));
    j["d"] = pe.d;
    j["gamma"] = pe.gamma;
    j["ambient"] = ambient_str({pe.a, pe.b, pe.c});
    j["equation"] = pe.equation.str();
    j["action"] = json::array({pe.action[0], pe.action[1], pe.action[2]});
    j["invariants"] = json{{"a_mod_m", mod_residue(pe.a, pe.m)},
                           {"b_mod_m", mod_residue(pe.b, pe.m)}};
    j["checks"] = json{{"generators", generators}, {"action", action}};
    return j;
}

inline std::string gizatullin_text(const GizatullinParams &gp, const PlaneEmbedding &pe,
                                   bool generators, bool action) {
    std::string s;
    s += "pair: " + pair_str(hyperbolic_pair(gp)) + "\n";
    s += "surface: D_+(" + pe.equation.str() + ") in " + ambient_str({pe.a, pe.b, pe.c}) +
         ", d = " + std::to_string(pe.d) + ", gamma = " + std::to_string(pe.gamma) + "\n";
    s += "action: (" + std::to_string(pe.action[0]) + "," + std::to_string(pe.action[1]) +
         "," + std::to_string(pe.action[2]) + ") mod " + std::to_string(pe.d) + "\n";
    s += "congruences: a=" + std::to_string(mod_residue(pe.a, pe.m)) +
         " b=" + std::to_string(mod_residue(pe.b, pe.m)) + " (mod " + std::to_string(pe.m) +
         ")\n";
    s += "checks: generators " + std::string(yn(generators)) + ", action " +
         std::string(yn(action)) + "\n";
    return s;
}

// ----------------------------------------------------------------- classify

inline json classify_json(const Classification &cls) {
    json j;
    switch (cls.kind) {
    case SurfaceClass::Toric:
        j["case"] = "toric";
        j["d"] = cls.d;
        j["e"] = cls.e;
        j["ambient"] = ambient_str({1, cls.e, cls.d});
        break;
    case SurfaceClass::NonToric:
        j["case"] = "nontoric";
        j["e"] = cls.params.e;
        j["m"] = cls.params.m;
        j["c"] = cls.params.c;
        j["p"] = cls.params.p.str();
        j["q"] = cls.params.q.str();
        break;
    default:
        j["case"] = "other";
        j["reason"] = cls.reason;
        break;
    }
    j["normal_form"] = normal_form_json(cls.nf);
    j["interchanged"] = cls.transcript.interchanged;
    j["witness"] = cls.transcript.witness.str();
    return j;
}

inline std::string classify_text(const Classification &cls) {
    std::string s;
    switch (cls.kind) {
    case SurfaceClass::Toric:
        s += "case: toric V_{" + std::to_string(cls.d) + "," + std::to_string(cls.e) +
             "} = D_+(z) in " + ambient_str({1, cls.e, cls.d}) + "\n";
        break;
    case SurfaceClass::NonToric:
        s += "case: nontoric with e=" + std::to_string(cls.params.e) +
             " m=" + std::to_string(cls.params.m) + " c=" + std::to_string(cls.params.c) +
             " p=" + cls.params.p.str() + " q=" + cls.params.q.str() + "\n";
        break;
    default:
        s += "case: other (" + cls.reason + ")\n";
        break;
    }
    s += "normal form: " + normal_form_line(cls.nf) + "\n";
    s += "interchanged: " + std::string(yn(cls.transcript.interchanged)) + "\n";
    return s;
}

// -------------------------------------------------------------------- cover

inline json cover_json(long e, long d, long k, const Covering &c) {
    return json{{"e", e},
                {"d", d},
                {"k", k},
                {"equation", c.relation.str()},
                {"action", json::array({c.action[0], c.action[1], c.action[2]})},
                {"order", c.order}};
}

inline std::string cover_text(long e, long d, long k, const Covering &c) {
    return "equation: " + c.relation.str() + " = 0\naction: (" + std::to_string(c.action[0]) +
           "," + std::to_string(c.action[1]) + "," + std::to_string(c.action[2]) +
           ") mod " + std::to_string(c.order) + "\n";
}

} // namespace cstar
