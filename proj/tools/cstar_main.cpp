#include <cstar/cstar.hpp>

#include <CLI11.hpp>

#include <iostream>

using namespace cstar;

namespace {

const char *kGrammar =
    "expression grammar:\n"
    "  pair    := '(' divisor ';' divisor ')'\n"
    "  divisor := '0' | ['-'] term (('+'|'-') term)*\n"
    "  term    := [rational '*'] atom\n"
    "  atom    := '[' rational ']' | 'div(' poly ')'\n"
    "  poly    := polynomial in t over Q, e.g. t^2-2 or 3/2*t+1\n"
    "  '[p]' abbreviates div(t-p); div arguments are squarefree-decomposed.\n"
    "\n"
    "exit codes:\n"
    "  0  success\n"
    "  1  construction error (invalid parameters or pair)\n"
    "  2  parse error (bad expression or command line)\n"
    "  3  verification failure (an oracle or grid reported a failure)\n";

void emit(const json &j, const std::string &text, bool as_json) {
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

int run_embed_like(const DPDPair &pair, bool as_json, const json &head) {
    auto [nf, tr] = to_normal_form(pair);
    EmbedReport r = make_embed_report(nf);
    json j = head;
    j["input"] = pair_str(pair);
    j.update(embed_json(r));
    emit(j, embed_text(r), as_json);
    return (r.homogeneous && r.parametrization && r.character) ? 0 : 3;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"DPD pairs, normal forms, and weighted projective models of C*-surfaces"};
    app.set_version_flag("--version", std::string("cstar 1.0.0"));
    app.footer(kGrammar);
    app.require_subcommand(1);

    std::string pair_text, p_text = "0", q_text = "1", grid = "default", golden_dir;
    long n = 0, d = 0, e = 0, e2 = 0, m = 0, c = 0, k = 0;
    bool as_json = false;

    auto add_json = [&](CLI::App *cmd) { cmd->add_flag("--json", as_json, "JSON report"); };

    auto *cmd_normalize = app.add_subcommand("normalize", "bring a pair to normal form");
    cmd_normalize->add_option("--pair", pair_text, "pair expression")->required();
    add_json(cmd_normalize);

    auto *cmd_embed =
        app.add_subcommand("embed", "hypersurface model of the surface of a pair");
    cmd_embed->add_option("--pair", pair_text, "pair expression")->required();
    add_json(cmd_embed);

    auto *cmd_dg = app.add_subcommand("dg", "hyperbolic family member V(n), chart d");
    cmd_dg->add_option("--n", n, "degree")->required();
    cmd_dg->add_option("--d", d, "chart parameter")->required();
    add_json(cmd_dg);

    auto *cmd_toric = app.add_subcommand("toric", "cyclic quotient V_{d,e} as an open part");
    cmd_toric->add_option("--d", d, "group order")->required();
    cmd_toric->add_option("--e", e, "action exponent")->required();
    add_json(cmd_toric);

    auto *cmd_iso = app.add_subcommand("toric-iso", "isomorphism test for V_{d,e}");
    cmd_iso->add_option("--d", d, "group order")->required();
    cmd_iso->add_option("--e", e, "first exponent")->required();
    cmd_iso->add_option("--e2", e2, "second exponent")->required();
    add_json(cmd_iso);

    auto *cmd_giz = app.add_subcommand("gizatullin", "weighted plane model of a nontoric case");
    cmd_giz->add_option("--e", e, "numerator")->required();
    cmd_giz->add_option("--m", m, "denominator")->required();
    cmd_giz->add_option("--c", c, "multiplicity")->required();
    cmd_giz->add_option("--p", p_text, "first support point (default 0)");
    cmd_giz->add_option("--q", q_text, "second support point (default 1)");
    add_json(cmd_giz);

    auto *cmd_classify = app.add_subcommand("classify", "toric / nontoric / other");
    cmd_classify->add_option("--pair", pair_text, "pair expression")->required();
    add_json(cmd_classify);

    auto *cmd_cover = app.add_subcommand("cover", "smooth affine model with cyclic action");
    cmd_cover->add_option("--e", e, "action exponent")->required();
    cmd_cover->add_option("--d", d, "group order")->required();
    cmd_cover->add_option("--k", k, "relation exponent")->required();
    add_json(cmd_cover);

    auto *cmd_elim = app.add_subcommand("eliminate", "open-subset model without z");
    cmd_elim->add_option("--pair", pair_text, "pair expression")->required();
    add_json(cmd_elim);

    auto *cmd_verify = app.add_subcommand("verify", "run a verification grid");
    cmd_verify->add_option("--grid", grid, "default or negative")
        ->check(CLI::IsMember({"default", "negative"}));
    cmd_verify->add_option("--golden-dir", golden_dir, "directory with golden files");
    add_json(cmd_verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &err) {
        return app.exit(err);
    } catch (const CLI::CallForVersion &err) {
        return app.exit(err);
    } catch (const CLI::ParseError &err) {
        app.exit(err);
        return 2;
    }

    try {
        if (cmd_normalize->parsed()) {
            DPDPair pair = parse_pair(pair_text);
            auto [nf, tr] = to_normal_form(pair);
            SmoothnessReport sm = smoothness_check(pair);
            emit(normalize_json(pair, nf, tr, sm), normalize_text(pair, nf, tr, sm), as_json);
            return 0;
        }
        if (cmd_embed->parsed())
            return run_embed_like(parse_pair(pair_text), as_json, json::object());
        if (cmd_dg->parsed()) {
            if (n < 2 || d < 1 || d >= n)
                throw std::domain_error("dg: need n >= 2 and 1 <= d < n");
            DPDPair pair;
            pair.plus = QDivisor::point(Rational(0), Rational(-1, d));
            pair.minus = QDivisor::point(Rational(1), Rational(-1, n - d));
            return run_embed_like(pair, as_json, json{{"n", n}, {"d", d}});
        }
        if (cmd_toric->parsed()) {
            ToricQuotient t = toric_embedding(d, e);
            emit(toric_json(t), toric_text(t), as_json);
            return 0;
        }
        if (cmd_iso->parsed()) {
            bool iso = toric_iso_check(d, e, e2);
            emit(toric_iso_json(d, e, e2, iso),
                 "V_{" + std::to_string(d) + "," + std::to_string(e) + "} ~ V_{" +
                     std::to_string(d) + "," + std::to_string(e2) + "}: " + yn(iso) + "\n",
                 as_json);
            return 0;
        }
        if (cmd_giz->parsed()) {
            GizatullinParams gp(e, m, c, parse_rational(p_text), parse_rational(q_text));
            PlaneEmbedding pe = plane_embedding(gp);
            bool gen = generator_relations_check(gp);
            bool act = action_consistency_check(pe, gp);
            emit(gizatullin_json(gp, pe, gen, act), gizatullin_text(gp, pe, gen, act),
                 as_json);
            return (gen && act) ? 0 : 3;
        }
        if (cmd_classify->parsed()) {
            Classification cls = classify(parse_pair(pair_text));
            emit(classify_json(cls), classify_text(cls), as_json);
            return 0;
        }
        if (cmd_cover->parsed()) {
            Covering cov = universal_cover_form(e, d, k);
            emit(cover_json(e, d, k, cov), cover_text(e, d, k, cov), as_json);
            return 0;
        }
        if (cmd_elim->parsed()) {
            DPDPair pair = parse_pair(pair_text);
            auto [nf, tr] = to_normal_form(pair);
            Embedding base = build_embedding(nf);
            auto red = eliminate_z(base);
            json j;
            j["input"] = pair_str(pair);
            j["normal_form"] = normal_form_json(nf);
            j["F"] = base.F.str();
            std::string text = "normal form: " + normal_form_line(nf) + "\nF = " +
                               base.F.str() + "\n";
            if (red) {
                j["eliminated"] = json{{"G", red->G.str()},
                                       {"weights", json::array({red->weights[0],
                                                                red->weights[1],
                                                                red->weights[2]})},
                                       {"ambient", ambient_str(red->weights)},
                                       {"all_weights_positive", red->all_weights_positive}};
                text += "eliminated: D_+(" + red->G.str() + ") in " +
                        ambient_str(red->weights) + "\n";
            } else {
                j["eliminated"] = nullptr;
                text += "eliminated: none (z does not occur linearly with constant "
                        "coefficient)\n";
            }
            emit(j, text, as_json);
            return 0;
        }
        if (cmd_verify->parsed()) {
            if (grid == "negative") {
                auto controls = run_negative_controls();
                emit(negative_json(controls), negative_text(controls), as_json);
                return 3;
            }
            VerifyOptions opt;
            opt.cli_path = argv[0];
            opt.golden_dir = golden_dir;
            auto rs = run_acceptance(opt);
            emit(verify_json(rs), verify_text(rs), as_json);
            return all_pass(rs) ? 0 : 3;
        }
    } catch (const cstar::ParseError &err) {
        std::cerr << "parse error: " << err.what() << "\n";
        return 2;
    } catch (const std::logic_error &err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    } catch (const std::runtime_error &err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 0;
}
