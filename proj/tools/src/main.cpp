#include <CLI11.hpp>
#include <iostream>

#include "stackyaut/json_io.hpp"
#include "stackyaut/weighted.hpp"

using namespace stackyaut;

namespace {

struct CommandResult {
    Json report;
    int exit_code = 0;
};

void emit(const Json& report, const std::string& format) {
    if (format == "json")
        std::cout << report.dump(2) << "\n";
    else
        std::cout << render_text(report);
}

Json violations_json(const ValidationReport& v) {
    Json out = Json::array();
    for (const auto& s : v.violations) out.push_back(s);
    return out;
}

Json sequences_json(const SequenceReport& seq) {
    Json out = Json::array();
    for (const auto& c : seq.checks) {
        Json entry;
        entry["position"] = c.position;
        entry["exact"] = c.ok();
        entry["homology"] = group_invariants_json(c.homology);
        out.push_back(std::move(entry));
    }
    return out;
}

Json gale_json(const GaleDualData& gd) {
    Json out;
    out["dg"] = group_invariants_json(gd.dg);
    // beta_vee written on the canonical generators of DG (free rows first)
    out["beta_vee"] = matrix_to_json(gd.dg.to_canonical_matrix() * gd.beta_vee.matrix());
    if (auto w = gale_weights(gd)) out["weights"] = vector_to_json(*w);
    out["mu"] = group_invariants_json(gd.mu);
    return out;
}

CommandResult cmd_validate(const InputDocument& doc) {
    if (doc.kind != DocumentKind::StackyFan)
        throw InputError("validate expects a stacky_fan file");
    ValidationReport v = validate_stacky_fan(*doc.stacky_fan);
    CommandResult r;
    r.report["results"]["violations"] = violations_json(v);
    r.report["status"] = v.ok() ? "ok" : "violations";
    r.exit_code = v.ok() ? 0 : 1;
    return r;
}

CommandResult cmd_gale_dual(const InputDocument& doc) {
    CommandResult r;
    std::optional<BetaMap> beta;
    try {
        if (doc.kind == DocumentKind::StackyFan) {
            ValidationReport v = validate_stacky_fan(*doc.stacky_fan);
            if (!v.ok()) {
                r.report["results"]["violations"] = violations_json(v);
                r.report["status"] = "violations";
                r.exit_code = 1;
                return r;
            }
            beta = beta_map(*doc.stacky_fan);
        } else if (doc.kind == DocumentKind::Matrix) {
            beta = BetaMap(FgAbelianGroup::free(doc.matrix->rows()), *doc.matrix);
        } else {
            throw InputError("gale-dual expects a stacky_fan or matrix file");
        }
    } catch (const std::invalid_argument& e) {
        r.report["results"]["violations"] = Json::array({e.what()});
        r.report["status"] = "violations";
        r.exit_code = 1;
        return r;
    }
    GaleDualData gd = gale_dual(*beta);
    r.report["results"] = gale_json(gd);
    SequenceReport seq = verify_sequences(*beta, gd);
    r.report["results"]["sequences"] = sequences_json(seq);
    r.report["status"] = seq.all_exact() ? "ok" : "violations";
    r.exit_code = seq.all_exact() ? 0 : 1;
    return r;
}

CommandResult cmd_wps(const IntVector& weights) {
    WpsReport w = verify_weighted_stack(weights);
    CommandResult r;
    Json& res = r.report["results"];
    res["d"] = w.reduced.d.convert_to<long long>();
    res["q_red"] = vector_to_json(w.reduced.q_red);
    res["dg"] = group_invariants_json(w.gale.dg);
    if (w.weights) res["weights"] = vector_to_json(*w.weights);
    res["mu"] = group_invariants_json(w.gale.mu);
    res["checks"]["stacky_fan_valid"] = w.stacky_validation.ok();
    res["checks"]["dg_is_z"] = w.dg_is_z;
    res["checks"]["weights_match"] = w.weights_match;
    res["checks"]["mu_matches_gcd"] = w.mu_matches_gcd;
    res["checks"]["fan_complete"] = w.fan_complete;
    res["checks"]["sequences_exact"] = w.sequences.all_exact();
    res["sequences"] = sequences_json(w.sequences);
    res["stacky_fan"] = stacky_fan_to_json(w.stacky_fan);
    r.report["status"] = w.ok() ? "ok" : "violations";
    r.exit_code = w.ok() ? 0 : 1;
    return r;
}

CommandResult cmd_aut2_weights(const IntVector& weights) {
    WeightedPglPresentation p = weighted_pgl(weights);
    CommandResult r;
    Json& res = r.report["results"];
    Json blocks = Json::array();
    for (const auto& [w, m] : p.blocks)
        blocks.push_back(Json::array({w.convert_to<long long>(), m}));
    res["blocks"] = std::move(blocks);
    res["normalizer"] = p.normalizer_description;
    res["phi"] = p.phi_description;
    res["pi2"] = group_invariants_json(p.pi2);
    r.report["status"] = "ok";
    return r;
}

CommandResult cmd_aut2_file(const InputDocument& doc) {
    if (doc.kind != DocumentKind::StackyFan)
        throw InputError("aut2 expects a stacky_fan file or --weights");
    CommandResult r;
    try {
        TheoremShadowReport shadow = theorem_shadow(*doc.stacky_fan);
        Json& res = r.report["results"];
        res["pi2_via_mu"] = group_invariants_json(shadow.pi2_via_mu);
        res["pi2_via_lattice"] = group_invariants_json(shadow.pi2_via_lattice);
        res["pi2_agree"] = shadow.pi2_agree;
        res["symmetry_order"] = shadow.symmetry_order;
        Json syms = Json::array();
        for (const auto& s : find_symmetries(*doc.stacky_fan)) {
            Json entry;
            entry["sigma"] = s.sigma;
            entry["tau"] = matrix_to_json(s.tau);
            syms.push_back(std::move(entry));
        }
        res["symmetries"] = std::move(syms);
        r.report["status"] = shadow.pi2_agree ? "ok" : "violations";
        r.exit_code = shadow.pi2_agree ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        r.report["results"]["violations"] = Json::array({e.what()});
        r.report["status"] = "violations";
        r.exit_code = 1;
    }
    return r;
}

CommandResult cmd_xmod_check(const InputDocument& doc) {
    if (doc.kind != DocumentKind::CrossedModule)
        throw InputError("xmod-check expects a crossed_module file");
    const FiniteCrossedModule& xm = *doc.crossed_module;
    ValidationReport v = verify_crossed_module(xm);
    CommandResult r;
    Json& res = r.report["results"];
    res["violations"] = violations_json(v);
    if (v.ok()) {
        FiniteGroup p1 = pi1(xm);
        FiniteGroup p2 = pi2(xm);
        res["pi1"]["order"] = p1.order();
        res["pi1"]["abelian"] = p1.is_abelian();
        if (p1.is_abelian()) res["pi1"]["torsion"] = vector_to_json(p1.abelian_invariants());
        res["pi2"]["order"] = p2.order();
        res["pi2"]["torsion"] = vector_to_json(p2.abelian_invariants());
    }
    r.report["status"] = v.ok() ? "ok" : "violations";
    r.exit_code = v.ok() ? 0 : 1;
    return r;
}

IntVector to_weights(const std::vector<long long>& raw) {
    IntVector w;
    for (long long x : raw) w.emplace_back(x);
    return w;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations on stacky fans and their automorphism 2-groups"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();

    std::string file;
    std::vector<long long> weight_args;

    auto* validate = app.add_subcommand("validate", "check the stacky fan conditions");
    validate->add_option("file", file)->required();

    auto* gale = app.add_subcommand("gale-dual", "compute DG(beta), beta_vee and mu");
    gale->add_option("file", file)->required();

    auto* wps = app.add_subcommand("wps", "weighted projective stack pipeline");
    wps->add_option("weights", weight_args, "positive weights q0 q1 ...");
    wps->add_option("--file", file, "weights file (kind: weights)");

    auto* aut2 = app.add_subcommand("aut2", "automorphism 2-group data");
    aut2->add_option("--weights", weight_args, "weights of a weighted projective stack");
    aut2->add_option("file", file, "stacky fan file");

    auto* xmod = app.add_subcommand("xmod-check", "verify crossed module axioms");
    xmod->add_option("file", file)->required();

    // allow `stackyaut <command> --format json file`: unmatched options in a
    // subcommand fall through to the top-level --format
    for (auto* sub : {validate, gale, wps, aut2, xmod}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        CommandResult result;
        std::string command;
        Json input_echo;

        if (validate->parsed() || gale->parsed() || xmod->parsed() ||
            (aut2->parsed() && weight_args.empty())) {
            if (file.empty()) throw InputError("an input file is required");
            InputDocument doc = parse_document_file(file);
            input_echo["file"] = file;
            if (validate->parsed()) { command = "validate"; result = cmd_validate(doc); }
            else if (gale->parsed()) { command = "gale-dual"; result = cmd_gale_dual(doc); }
            else if (xmod->parsed()) { command = "xmod-check"; result = cmd_xmod_check(doc); }
            else { command = "aut2"; result = cmd_aut2_file(doc); }
        } else if (wps->parsed()) {
            command = "wps";
            IntVector weights;
            if (!weight_args.empty()) {
                weights = to_weights(weight_args);
            } else if (!file.empty()) {
                InputDocument doc = parse_document_file(file);
                if (doc.kind != DocumentKind::Weights)
                    throw InputError("wps --file expects a weights file");
                weights = *doc.weights;
                input_echo["file"] = file;
            } else {
                throw InputError("wps needs weights");
            }
            for (const auto& w : weights)
                if (w <= 0) throw InputError("weights must be positive");
            input_echo["weights"] = vector_to_json(weights);
            result = cmd_wps(weights);
        } else {
            command = "aut2";
            IntVector weights = to_weights(weight_args);
            for (const auto& w : weights)
                if (w <= 0) throw InputError("weights must be positive");
            input_echo["weights"] = vector_to_json(weights);
            result = cmd_aut2_weights(weights);
        }

        Json report;
        report["command"] = command;
        report["input"] = input_echo;
        for (auto it = result.report.begin(); it != result.report.end(); ++it)
            report[it.key()] = it.value();
        emit(report, format);
        return result.exit_code;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
