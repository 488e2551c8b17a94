// univoque: exact expansions in non-integer bases and their univoque sets.

#include <univoque/univoque.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace univoque;
using Json = nlohmann::ordered_json;

namespace {

struct CommonArgs {
    int M = 1;
    int depth = kDefaultDepth;
    int precision = 64;
    bool json = false;
    bool parallel = false;
    std::string q_spec;
    std::string x_text;
    std::string xseq_text;

    void attach(CLI::App* cmd, bool with_base = true, bool with_point = false) {
        cmd->add_option("--M", M, "alphabet bound (digits 0..M)")->capture_default_str();
        cmd->add_option("--depth", depth, "digit/depth budget")->capture_default_str();
        cmd->add_option("--precision", precision, "interval precision in bits")
            ->capture_default_str();
        cmd->add_flag("--json", json, "emit one structured JSON document");
        cmd->add_flag("--parallel", parallel, "parallel enumeration where supported");
        if (with_base) cmd->add_option("--q", q_spec, "base (p/q | poly:..@[lo,hi] | golden | kl | tribonacci)");
        if (with_point) {
            cmd->add_option("--x", x_text, "point as rational or decimal");
            cmd->add_option("--xseq", xseq_text, "point given by digits; x = pi_q of them");
        }
    }

    BaseValue base() const {
        if (q_spec.empty()) throw ParseError("--q is required");
        return parse_base_spec(q_spec, M);
    }

    FieldElement point(const BaseValue& q) const {
        if (!xseq_text.empty()) return pi_q(parse_sequence(xseq_text, M), q);
        if (x_text.empty()) throw ParseError("--x or --xseq is required");
        return FieldElement::from_rational(q, parse_rational(x_text));
    }
};

Json verdict_json(const Verdict& v) {
    Json j;
    j["status"] = v.is_in() ? "In" : v.is_out() ? "Out" : "UnknownAtDepth";
    if (v.witness) j["witness"] = *v.witness;
    j["depth"] = v.depth_checked;
    if (v.alpha_used) j["alpha"] = to_string(*v.alpha_used);
    return j;
}

Json interval_json(const DyadicInterval& iv) {
    Json j;
    j["lo"] = rat_to_string(iv.lo);
    j["hi"] = rat_to_string(iv.hi);
    j["lo_approx"] = to_double(iv.lo);
    j["hi_approx"] = to_double(iv.hi);
    j["precision_bits"] = iv.precision;
    return j;
}

Json expansion_json(const ExpansionResult& r) {
    Json j;
    if (r.exact()) j["digits"] = to_string(r.sequence());
    else j["prefix"] = to_string(r.prefix);
    j["exact"] = r.exact();
    return j;
}

std::string field_str(const FieldElement& e) {
    if (e.is_rational()) return rat_to_string(e.rational_part());
    return e.as_poly().to_string() + " at q";
}

struct Report {
    Json doc;
    bool unknown = false;
    std::vector<std::string> lines;

    Report(const std::string& command, const CommonArgs& args) {
        doc["command"] = command;
        doc["inputs"] = Json::object();
        if (!args.q_spec.empty()) doc["inputs"]["q"] = args.q_spec;
        if (!args.x_text.empty()) doc["inputs"]["x"] = args.x_text;
        if (!args.xseq_text.empty()) doc["inputs"]["xseq"] = args.xseq_text;
        doc["inputs"]["M"] = args.M;
        doc["inputs"]["depth"] = args.depth;
        doc["result"] = Json::object();
    }

    void line(const std::string& s) { lines.push_back(s); }

    int finish(bool as_json, std::chrono::steady_clock::time_point started) {
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - started)
                           .count();
        doc["timing_ms"] = elapsed;
        if (as_json) {
            std::cout << doc.dump(2) << "\n";
        } else {
            for (const auto& s : lines) std::cout << s << "\n";
        }
        return unknown ? 2 : 0;
    }
};

std::string tag_text(BaseTag t) { return to_text(t); }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact expansions in non-integer bases, univoque sets and landmarks"};
    app.require_subcommand(1);

    CommonArgs expand_args, pi_args, cb_args, cp_args, adm_args, lm_args, bow_args, nvb_args,
        sft_args, eone_args, epoint_args, tree_args, gap_args, approx_args, baker_args, dim_args;

    auto* cmd_expand = app.add_subcommand("expand", "greedy / quasi-greedy / lazy expansion");
    expand_args.attach(cmd_expand, true, true);
    std::string kind = "greedy";
    cmd_expand->add_option("--kind", kind, "greedy|quasi|lazy")->capture_default_str();

    auto* cmd_pi = app.add_subcommand("pi", "exact value of a digit sequence");
    pi_args.attach(cmd_pi);
    std::string pi_seq;
    cmd_pi->add_option("--seq", pi_seq, "eventually periodic digits")->required();

    auto* cmd_cb = app.add_subcommand("classify-base", "position of q in U / closure(U) / V");
    cb_args.attach(cmd_cb);

    auto* cmd_cp = app.add_subcommand("classify-point", "position of x in U_q / V_q");
    cp_args.attach(cmd_cp, true, true);

    auto* cmd_adm = app.add_subcommand("admissible", "realizability as beta(q) or alpha(q)");
    adm_args.attach(cmd_adm, false);
    std::string adm_seq, adm_mode = "beta";
    cmd_adm->add_option("--seq", adm_seq)->required();
    cmd_adm->add_option("--mode", adm_mode, "beta|alpha")->capture_default_str();

    auto* cmd_lm = app.add_subcommand("landmarks", "kl | golden | ladder");
    lm_args.attach(cmd_lm, false);
    std::string lm_which;
    size_t lm_n = 4;
    std::string lm_seed;
    cmd_lm->add_option("which", lm_which, "kl|golden|ladder")->required();
    cmd_lm->add_option("--n", lm_n, "ladder length / digit count")->capture_default_str();
    cmd_lm->add_option("--seed-beta", lm_seed, "finite beta word seeding the ladder");

    auto* cmd_bow = app.add_subcommand("base-of-word", "base with beta(q) = w 0^inf");
    bow_args.attach(cmd_bow, false);
    std::string bow_word;
    cmd_bow->add_option("--word", bow_word)->required();

    auto* cmd_nvb = app.add_subcommand("next-v-base", "right endpoint of the V-gap above q");
    nvb_args.attach(cmd_nvb);
    size_t nvb_period = 8;
    cmd_nvb->add_option("--max-period", nvb_period)->capture_default_str();

    auto* cmd_sft = app.add_subcommand("sft", "forbidden blocks of U'_q for q outside V");
    sft_args.attach(cmd_sft);
    size_t sft_period = 8;
    cmd_sft->add_option("--max-period", sft_period)->capture_default_str();

    auto* cmd_eone = app.add_subcommand("enumerate-one", "all expansions of 1 (q in V)");
    eone_args.attach(cmd_eone);

    auto* cmd_epoint = app.add_subcommand("enumerate-point", "all expansions of x in V_q \\ U_q");
    epoint_args.attach(cmd_epoint, true, true);

    auto* cmd_tree = app.add_subcommand("tree", "prefix tree E_q^n(x) with exact counts");
    tree_args.attach(cmd_tree, true, true);
    size_t tree_n = 8;
    size_t tree_cap = 10'000'000;
    cmd_tree->add_option("--n", tree_n, "depth")->capture_default_str();
    cmd_tree->add_option("--cap", tree_cap, "prefix budget")->capture_default_str();

    auto* cmd_gap = app.add_subcommand("gap", "right endpoint of the V_q-gap at x");
    gap_args.attach(cmd_gap, true, true);

    auto* cmd_approx = app.add_subcommand("approximants", "A_q approximants of a univoque point");
    approx_args.attach(cmd_approx, true, true);
    size_t approx_count = 5;
    cmd_approx->add_option("--count", approx_count)->capture_default_str();

    auto* cmd_baker = app.add_subcommand("baker-bound", "branching index and dimension bound");
    baker_args.attach(cmd_baker, true, true);

    auto* cmd_dim = app.add_subcommand("dim", "Hausdorff dimension of U_q for integer q");
    dim_args.attach(cmd_dim, false);
    int dim_q = 2;
    size_t dim_growth_n = 0;
    cmd_dim->add_option("--qint", dim_q, "integer base")->required();
    cmd_dim->add_option("--growth-n", dim_growth_n, "also report univoque prefix counts up to n");

    CLI11_PARSE(app, argc, argv);
    auto started = std::chrono::steady_clock::now();

    try {
        if (cmd_expand->parsed()) {
            Report rep("expand", expand_args);
            rep.doc["inputs"]["kind"] = kind;
            BaseValue q = expand_args.base();
            FieldElement x = expand_args.point(q);
            ExpansionResult r;
            if (kind == "greedy") r = greedy_expand(x, q, expand_args.depth);
            else if (kind == "quasi") r = quasi_greedy_expand(x, q, expand_args.depth);
            else if (kind == "lazy") r = lazy_expand(x, q, expand_args.depth);
            else throw ParseError("--kind must be greedy|quasi|lazy");
            rep.doc["result"] = expansion_json(r);
            rep.line("digits: " + r.to_text());
            if (!r.exact()) rep.unknown = true; // prefix-only: retry with larger --depth
            return rep.finish(expand_args.json, started);
        }

        if (cmd_pi->parsed()) {
            Report rep("pi", pi_args);
            rep.doc["inputs"]["seq"] = pi_seq;
            BaseValue q = pi_args.base();
            FieldElement v = pi_q(parse_sequence(pi_seq, pi_args.M), q);
            rep.doc["result"]["value"] = field_str(v);
            rep.doc["result"]["approx"] = v.approx();
            rep.line("pi_q = " + field_str(v) + "  (~" + std::to_string(v.approx()) + ")");
            return rep.finish(pi_args.json, started);
        }

        if (cmd_cb->parsed()) {
            Report rep("classify-base", cb_args);
            BaseClassification c = classify_base(cb_args.base(), cb_args.depth);
            rep.doc["result"]["tag"] = tag_text(c.tag);
            rep.doc["result"]["exact"] = c.exact;
            if (c.k) rep.doc["result"]["k"] = *c.k;
            rep.doc["certificates"]["u"] = verdict_json(c.u);
            rep.doc["certificates"]["closure_u"] = verdict_json(c.closure_u);
            rep.doc["certificates"]["v"] = verdict_json(c.v);
            rep.doc["certificates"]["alpha"] = expansion_json(c.alpha);
            rep.doc["certificates"]["beta"] = expansion_json(c.beta);
            rep.line(tag_text(c.tag) + (c.exact ? "" : "  [unknown at depth]"));
            if (c.k) rep.line("k = " + std::to_string(*c.k));
            rep.line("alpha = " + c.alpha.to_text() + ", beta = " + c.beta.to_text());
            rep.unknown = !c.exact;
            return rep.finish(cb_args.json, started);
        }

        if (cmd_cp->parsed()) {
            Report rep("classify-point", cp_args);
            BaseValue q = cp_args.base();
            PointClassification c = classify_point(cp_args.point(q), q, cp_args.depth);
            std::string tag = to_text(c.tag);
            if (c.part) tag += *c.part == PointPart::Aq ? " (A_q)" : " (B_q)";
            rep.doc["result"]["tag"] = to_text(c.tag);
            if (c.part) rep.doc["result"]["part"] = *c.part == PointPart::Aq ? "A_q" : "B_q";
            rep.doc["result"]["exact"] = c.exact;
            rep.doc["certificates"]["u_q"] = verdict_json(c.uq);
            rep.doc["certificates"]["v_q"] = verdict_json(c.vq);
            rep.doc["certificates"]["quasi_greedy"] = expansion_json(c.quasi);
            rep.doc["certificates"]["greedy"] = expansion_json(c.greedy);
            rep.line(tag + (c.exact ? "" : "  [unknown at depth]"));
            rep.line("a(x,q) = " + c.quasi.to_text() + ", b(x,q) = " + c.greedy.to_text());
            rep.unknown = !c.exact;
            return rep.finish(cp_args.json, started);
        }

        if (cmd_adm->parsed()) {
            Report rep("admissible", adm_args);
            rep.doc["inputs"]["seq"] = adm_seq;
            rep.doc["inputs"]["mode"] = adm_mode;
            AdmissibleMode mode;
            if (adm_mode == "beta") mode = AdmissibleMode::BetaOfOne;
            else if (adm_mode == "alpha") mode = AdmissibleMode::AlphaOfOne;
            else throw ParseError("--mode must be beta|alpha");
            Verdict v = is_admissible(parse_sequence(adm_seq, adm_args.M), mode, adm_args.depth);
            rep.doc["result"]["verdict"] = verdict_json(v);
            rep.line(v.to_text());
            rep.unknown = v.is_unknown();
            return rep.finish(adm_args.json, started);
        }

        if (cmd_lm->parsed()) {
            Report rep("landmarks " + lm_which, lm_args);
            if (lm_which == "kl") {
                KLResult kl = kl_constant(lm_args.M, lm_args.precision);
                rep.doc["result"]["interval"] = interval_json(kl.interval);
                rep.doc["result"]["alpha_digits"] =
                    to_string(thue_morse_alpha(lm_args.M, lm_n == 4 ? 32 : lm_n));
                rep.line("q_KL(" + std::to_string(lm_args.M) + ") in [" +
                         rat_to_string(kl.interval.lo) + ", " + rat_to_string(kl.interval.hi) +
                         "]  (~" + std::to_string(kl.interval.midpoint()) + ")");
                rep.line("alpha digits: " + to_string(thue_morse_alpha(lm_args.M, 32)));
            } else if (lm_which == "golden") {
                BaseValue g = generalized_golden(lm_args.M);
                rep.doc["result"]["base"] = g.describe();
                rep.doc["result"]["approx"] = g.approx();
                rep.line("q~(" + std::to_string(lm_args.M) + ") = " + g.describe() + "  (~" +
                         std::to_string(g.approx()) + ")");
            } else if (lm_which == "ladder") {
                LadderSeed seed = lm_seed.empty()
                                      ? LadderSeed::one()
                                      : LadderSeed::finite_beta(parse_word(lm_seed, lm_args.M));
                auto words = component_words(lm_args.M, seed, lm_n);
                Json arr = Json::array();
                for (size_t i = 0; i < words.size(); ++i) {
                    Json item;
                    item["s"] = to_string(words[i]);
                    if (i >= 1 || seed.kind == LadderSeed::Kind::FiniteBeta) {
                        try {
                            BaseValue q = base_of_word(words[i]);
                            item["base_approx"] = q.approx();
                        } catch (const Error&) {
                            item["base_approx"] = nullptr; // s_0 = 1 has companion root 1
                        }
                    }
                    arr.push_back(item);
                    rep.line("s_" + std::to_string(i) + " = " + to_string(words[i]));
                }
                rep.doc["result"]["words"] = arr;
            } else {
                throw ParseError("landmarks subcommand must be kl|golden|ladder");
            }
            return rep.finish(lm_args.json, started);
        }

        if (cmd_bow->parsed()) {
            Report rep("base-of-word", bow_args);
            rep.doc["inputs"]["word"] = bow_word;
            BaseValue q = base_of_word(parse_word(bow_word, bow_args.M));
            rep.doc["result"]["base"] = q.describe();
            rep.doc["result"]["approx"] = q.approx();
            rep.line(q.describe() + "  (~" + std::to_string(q.approx()) + ")");
            return rep.finish(bow_args.json, started);
        }

        if (cmd_nvb->parsed() || cmd_sft->parsed()) {
            CommonArgs& args = cmd_nvb->parsed() ? nvb_args : sft_args;
            size_t period = cmd_nvb->parsed() ? nvb_period : sft_period;
            Report rep(cmd_nvb->parsed() ? "next-v-base" : "sft", args);
            rep.doc["inputs"]["max_period"] = period;
            ComponentData c = find_next_V_base(args.base(), period, args.depth, args.parallel);
            rep.doc["result"]["q2"] = c.q2.describe();
            rep.doc["result"]["q2_approx"] = c.q2.approx();
            rep.doc["result"]["k"] = c.k;
            rep.doc["result"]["pattern"] = to_string(c.alpha_pattern);
            Json blocks = Json::array();
            std::string blocks_text;
            for (const auto& f : c.forbidden) {
                blocks.push_back(to_string(f));
                blocks.push_back(to_string(reflect(f)));
                blocks_text += (blocks_text.empty() ? "" : ", ") + to_string(f) + ", " +
                               to_string(reflect(f));
            }
            rep.doc["result"]["avoid_blocks"] = blocks;
            rep.line("q2 = " + c.q2.describe() + "  (~" + std::to_string(c.q2.approx()) + ")");
            rep.line("k = " + std::to_string(c.k) + ", pattern = " + to_string(c.alpha_pattern));
            rep.line("avoid blocks: {" + blocks_text + "}");
            return rep.finish(args.json, started);
        }

        if (cmd_eone->parsed()) {
            Report rep("enumerate-one", eone_args);
            ExpansionList list = expansions_of_one(eone_args.base(), eone_args.depth);
            Json arr = Json::array();
            for (const auto& s : list.schemas) {
                arr.push_back(s.to_text());
                rep.line(s.to_text());
            }
            rep.doc["result"]["schemas"] = arr;
            return rep.finish(eone_args.json, started);
        }

        if (cmd_epoint->parsed()) {
            Report rep("enumerate-point", epoint_args);
            BaseValue q = epoint_args.base();
            ExpansionList list = expansions_of_point(epoint_args.point(q), q, epoint_args.depth);
            Json arr = Json::array();
            for (const auto& s : list.schemas) {
                arr.push_back(s.to_text());
                rep.line(s.to_text());
            }
            rep.doc["result"]["schemas"] = arr;
            return rep.finish(epoint_args.json, started);
        }

        if (cmd_tree->parsed()) {
            Report rep("tree", tree_args);
            rep.doc["inputs"]["n"] = tree_n;
            BaseValue q = tree_args.base();
            TreeOptions opts;
            opts.node_cap = tree_cap;
            opts.parallel = tree_args.parallel;
            ExpansionTree t = expansion_tree(tree_args.point(q), q, tree_n, opts);
            rep.doc["result"]["counts"] = t.counts;
            Json arr = Json::array();
            for (const auto& w : t.prefixes) arr.push_back(to_string(w));
            rep.doc["result"]["prefixes"] = arr;
            std::string counts_text;
            for (size_t c : t.counts) counts_text += (counts_text.empty() ? "" : ", ") +
                                                     std::to_string(c);
            rep.line("N_1.." + std::to_string(tree_n) + " = " + counts_text);
            if (t.prefixes.size() <= 64) {
                std::string ptext;
                for (const auto& w : t.prefixes) ptext += (ptext.empty() ? "" : " ") + to_string(w);
                rep.line("prefixes: " + ptext);
            }
            return rep.finish(tree_args.json, started);
        }

        if (cmd_gap->parsed()) {
            Report rep("gap", gap_args);
            BaseValue q = gap_args.base();
            auto [xr, br] = gap_right_endpoint(gap_args.point(q), q, gap_args.depth);
            rep.doc["result"]["b_right"] = to_string(br);
            rep.doc["result"]["x_right"] = field_str(xr);
            rep.doc["result"]["x_right_approx"] = xr.approx();
            rep.line("b(x_R) digits = " + to_string(br));
            rep.line("x_R = " + field_str(xr) + "  (~" + std::to_string(xr.approx()) + ")");
            return rep.finish(gap_args.json, started);
        }

        if (cmd_approx->parsed()) {
            Report rep("approximants", approx_args);
            rep.doc["inputs"]["count"] = approx_count;
            BaseValue q = approx_args.base();
            auto xs = aq_approximants(approx_args.point(q), q, approx_count, approx_args.depth);
            Json arr = Json::array();
            for (const auto& v : xs) {
                arr.push_back(Json{{"value", field_str(v)}, {"approx", v.approx()}});
                rep.line(field_str(v) + "  (~" + std::to_string(v.approx()) + ")");
            }
            rep.doc["result"]["approximants"] = arr;
            return rep.finish(approx_args.json, started);
        }

        if (cmd_baker->parsed()) {
            Report rep("baker-bound", baker_args);
            BaseValue q = baker_args.base();
            auto [k, bound] = branching_dim_lower_bound(baker_args.point(q), q);
            rep.doc["result"]["k"] = k;
            rep.doc["result"]["bound"] = bound;
            rep.line("k = " + std::to_string(k) + ", dimension lower bound = " +
                     std::to_string(bound));
            return rep.finish(baker_args.json, started);
        }

        if (cmd_dim->parsed()) {
            Report rep("dim", dim_args);
            rep.doc["inputs"]["qint"] = dim_q;
            DimensionResult d = hausdorff_dim_integer_base(dim_q, dim_args.M);
            rep.doc["result"]["kind"] = d.kind == DimensionResult::Kind::Value ? "value"
                                        : d.kind == DimensionResult::Kind::TwoPointSet
                                            ? "two-point-set"
                                            : "full-measure";
            if (d.kind == DimensionResult::Kind::Value) rep.doc["result"]["dimension"] = d.value;
            rep.line(d.to_text());
            if (dim_growth_n > 0 && d.kind == DimensionResult::Kind::Value) {
                Json counts = Json::array();
                std::string text;
                for (size_t n = 1; n <= dim_growth_n; ++n) {
                    Int c = univoque_prefix_count(dim_q, dim_args.M, n);
                    counts.push_back(c.str());
                    text += (text.empty() ? "" : ", ") + c.str();
                }
                rep.doc["result"]["prefix_counts"] = counts;
                rep.line("univoque prefix counts: " + text);
            }
            return rep.finish(dim_args.json, started);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
