#include "discrimlab/cli.hpp"

#include "discrimlab/svg.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace discrimlab::cli {

namespace {

using io::Json;

bool verbose() {
    const char* v = std::getenv("DISCRIMLAB_LOG");
    return v != nullptr && *v != '\0' && std::string(v) != "0" && std::string(v) != "quiet";
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("'" + path + "' is not valid JSON: " + e.what());
    }
}

struct Options {
    std::string arr;
    std::string T;
    std::string L;
    std::string Sl;
    std::string translate;
    std::string out;
    std::string example;
    std::size_t l = 0;
    std::size_t max_r = 4;
    std::size_t jobs = 1;
    std::size_t n = 6;
    std::size_t k = 2;
    std::uint64_t seed = 1;
    std::int64_t bound = 100;
    bool detail = false;
};

struct Outcome {
    Json result;
    int exit_code = kAffirmative;
    std::string summary;
};

TSet tset_for(const CentralArrangement& a, const std::string& text) {
    return TSet(a.n(), a.k(), io::parse_family(text));
}

Outcome cmd_gen(const Options& o) {
    auto draw = random_arrangement_draw(o.n, o.k, Seed{o.seed}, o.bound);
    if (verbose())
        std::clog << "gen: seed " << o.seed << " needed " << draw.resamples << " resample(s)\n";
    return {io::arrangement_json(draw.arrangement), kAffirmative,
            "random arrangement n=" + std::to_string(o.n) + " k=" + std::to_string(o.k) + " seed=" + std::to_string(o.seed)};
}

Outcome cmd_example(const Options& o) {
    Json j;
    if (o.example == "crapo") {
        auto ex = crapo();
        j = io::arrangement_json(ex.arrangement);
        j["T"] = io::family_json(ex.T.members());
    } else if (o.example == "falk") {
        auto ex = falk();
        j = io::arrangement_json(ex.arrangement);
        j["T"] = io::family_json(ex.T.members());
    } else if (o.example == "braid") {
        j = io::arrangement_json(braid(o.n));
    } else {
        throw PreconditionError("unknown example '" + o.example + "' (expected crapo, falk or braid)");
    }
    return {std::move(j), kAffirmative, "example " + o.example};
}

Outcome cmd_check_generic(const Options& o) {
    auto raw = io::raw_arrangement_from_json(read_json_file(o.arr));
    Json j;
    j["n"] = raw.normals.size();
    j["k"] = raw.k;
    try {
        CentralArrangement::create(raw.k, raw.normals);
        j["generic"] = true;
        j["offending"] = nullptr;
        return {std::move(j), kAffirmative, "arrangement is central generic"};
    } catch (const NotGeneric& e) {
        j["generic"] = false;
        j["offending"] = io::index_set_json(e.offending());
        return {std::move(j), kNegative, e.what()};
    } catch (const ZeroNormal& e) {
        j["generic"] = false;
        j["offending"] = io::index_set_json(IndexSet{e.index()});
        return {std::move(j), kNegative, e.what()};
    }
}

Outcome cmd_disc_normal(const Options& o) {
    auto a = io::arrangement_from_json(read_json_file(o.arr));
    auto dn = disc_normal(a, io::parse_index_list(o.L));
    Json j;
    j["L"] = io::index_set_json(dn.L);
    j["coeffs"] = io::vec_json(dn.coeffs);
    return {std::move(j), kAffirmative, "normal of D_" + dn.L.to_string()};
}

Outcome cmd_rank(const Options& o) {
    auto a = io::arrangement_from_json(read_json_file(o.arr));
    const Family T = io::parse_family(o.T);
    DiscriminantalArrangement d(a);
    const Flat flat = flat_of(d, T);
    Json j;
    j["T"] = io::family_json(T);
    j["multiplicity"] = T.size();
    j["rank"] = flat.rank;
    const bool all_hyperplanes = std::all_of(T.begin(), T.end(), [&](IndexSet s) { return s.size() == a.k() + 1; });
    if (all_hyperplanes && T.size() >= 2) {
        TSet ts(a.n(), a.k(), T);
        j["is_simple"] = is_simple(d, T);
        j["is_r_set"] = is_r_set(ts);
    } else {
        j["is_simple"] = nullptr;
        j["is_r_set"] = nullptr;
    }
    SetFamily sf(a.n(), a.k(), T);
    const bool cond = athanasiadis_condition(sf);
    j["athanasiadis"] = cond;
    if (cond)
        j["expected_rank"] = expected_rank(sf);
    else
        j["expected_rank"] = nullptr;
    j["flat_dim"] = flat.subspace.dim();
    return {std::move(j), kAffirmative,
            "multiplicity " + std::to_string(T.size()) + ", rank " + std::to_string(flat.rank)};
}

Outcome cmd_census(const Options& o) {
    auto a = io::arrangement_from_json(read_json_file(o.arr));
    auto census = rank2_census(a);
    return {io::census_json(census, o.detail), kAffirmative, std::to_string(census.size()) + " rank-2 flats"};
}

Outcome cmd_find_nvg(const Options& o) {
    auto a = io::arrangement_from_json(read_json_file(o.arr));
    const auto t0 = std::chrono::steady_clock::now();
    auto findings = find_simple_nvg(a, o.max_r, o.jobs);
    if (verbose()) {
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
        std::clog << "find-nvg: " << ms.count() << " ms with " << o.jobs << " job(s)\n";
    }
    Json j = Json::array();
    for (const auto& f : findings) j.push_back(io::finding_json(f));
    const bool any = !findings.empty();
    return {std::move(j), any ? kAffirmative : kNegative,
            any ? std::to_string(findings.size()) + " simple non-very-generic intersection(s)"
                : "no simple defect up to r = " + std::to_string(o.max_r)};
}

Outcome cmd_verdict(const Options& o) {
    auto a = io::arrangement_from_json(read_json_file(o.arr));
    auto v = very_generic_upto(a, o.max_r, o.jobs);
    return {io::verdict_json(v), v.defect_found() ? kAffirmative : kNegative,
            v.defect_found() ? "defect " + to_string(*v.witness) : "no simple defect up to r = " + std::to_string(o.max_r)};
}

Outcome cmd_certify(const Options& o) {
    auto a = io::arrangement_from_json(read_json_file(o.arr));
    const TSet T = tset_for(a, o.T);
    if (o.l == 0) throw ParseError("--l is 1-based");
    const Family S_l = io::parse_family(o.Sl);
    auto cert = certify_rs_dependency(a, T, o.l - 1, S_l);
    if (cert) {
        return {io::certificate_json(*cert), kAffirmative,
                "(" + std::to_string(cert->multiplicity()) + "," + std::to_string(cert->s) + ")-dependency certified"};
    }
    Json j;
    j["certified"] = false;
    j["T"] = io::family_json(T.members());
    j["l"] = o.l;
    j["S_l"] = io::family_json(S_l);
    return {std::move(j), kNegative, "not dependent at this (l, S_l)"};
}

Outcome cmd_witness(const Options& o) {
    auto a = io::arrangement_from_json(read_json_file(o.arr));
    const TSet T = tset_for(a, o.T);
    try {
        return {io::translate_json(witness_translate(a, T)), kAffirmative, "non-central witness translate"};
    } catch (const OnlyCentral& e) {
        Json j;
        j["t"] = nullptr;
        j["reason"] = "only-central";
        return {std::move(j), kNegative, e.what()};
    }
}

Outcome cmd_ls_check(const Options& o) {
    auto a = io::arrangement_from_json(read_json_file(o.arr));
    const bool dep = ls_dependency_check(a, tset_for(a, o.T));
    Json j;
    j["T"] = io::family_json(io::parse_family(o.T));
    j["dependent"] = dep;
    return {std::move(j), dep ? kAffirmative : kNegative, dep ? "dependent" : "not dependent"};
}

Outcome cmd_kt(const Options& o) {
    auto a = io::arrangement_from_json(read_json_file(o.arr));
    const Translate t = io::translate_from_json(read_json_file(o.translate));
    auto kt = kt_configuration(a, t, tset_for(a, o.T));
    const bool strict = kt.strict();
    return {io::kt_json(kt), strict ? kAffirmative : kNegative,
            strict ? "strict K_T configuration" : "vertices exist but the translate is not strictly K_T"};
}

}  // namespace

Report run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Report report;
    Options o;
    CLI::App app{"Discriminantal arrangements: ranks, simple intersections and dependency certificates", "discrimlab"};
    app.require_subcommand(1);

    std::map<CLI::App*, std::function<Outcome(const Options&)>> handlers;
    auto add = [&](const char* name, const char* help, std::function<Outcome(const Options&)> fn) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("--out", o.out, "write the JSON result to this file instead of stdout");
        handlers[sub] = std::move(fn);
        return sub;
    };
    auto need_arr = [&](CLI::App* sub) { sub->add_option("--arr", o.arr, "arrangement JSON file")->required(); };
    auto need_T = [&](CLI::App* sub) {
        sub->add_option("--T", o.T, "family, e.g. \"1,2,3;1,4,5\" (1-based)")->required();
    };

    auto* gen = add("gen", "seeded random central generic arrangement", cmd_gen);
    gen->add_option("--n", o.n, "number of hyperplanes")->required();
    gen->add_option("--k", o.k, "ambient dimension")->required();
    gen->add_option("--seed", o.seed, "64-bit seed");
    gen->add_option("--bound", o.bound, "coefficients are drawn from [-bound, bound]");

    auto* ex = add("example", "named example: crapo, falk or braid", cmd_example);
    ex->add_option("name", o.example, "crapo | falk | braid")->required();
    ex->add_option("--n", o.n, "number of hyperplanes for braid");

    need_arr(add("check-generic", "validate genericity of an arrangement file", cmd_check_generic));

    auto* dn = add("disc-normal", "normal vector of D_L", cmd_disc_normal);
    need_arr(dn);
    dn->add_option("--L", o.L, "(k+1)-subset, e.g. \"1,2,3\"")->required();

    auto* rk = add("rank", "rank, multiplicity and simplicity of an intersection", cmd_rank);
    need_arr(rk);
    need_T(rk);

    auto* cs = add("census", "rank-2 flats of the discriminantal arrangement", cmd_census);
    need_arr(cs);
    cs->add_flag("--detail", o.detail, "list every flat");

    auto* fn = add("find-nvg", "search simple intersections of deficient rank over r-sets", cmd_find_nvg);
    need_arr(fn);
    fn->add_option("--max-r", o.max_r, "largest multiplicity to scan");
    fn->add_option("--jobs", o.jobs, "worker threads");

    auto* vd = add("verdict", "scan all families of (k+1)-subsets for a simple defect", cmd_verdict);
    need_arr(vd);
    vd->add_option("--max-r", o.max_r, "largest multiplicity to scan");
    vd->add_option("--jobs", o.jobs, "worker threads");

    auto* ce = add("certify", "certify (r,s)-dependency at (l, S_l)", cmd_certify);
    need_arr(ce);
    need_T(ce);
    ce->add_option("--l", o.l, "1-based index of the moving hyperplane")->required();
    ce->add_option("--Sl", o.Sl, "subfamily S_l, e.g. \"1,4,5;3,5,6\"")->required();

    auto* wi = add("witness", "non-central translate in the intersection", cmd_witness);
    need_arr(wi);
    need_T(wi);

    auto* ls = add("ls-check", "block-shaped dependency test (n = 3s, k = 2s-1)", cmd_ls_check);
    need_arr(ls);
    need_T(ls);

    auto* kt = add("kt", "K_T configuration of a translate", cmd_kt);
    need_arr(kt);
    need_T(kt);
    kt->add_option("--translate", o.translate, "translate JSON file")->required();

    auto* sv = app.add_subcommand("svg", "draw a translated line arrangement (k = 2)");
    need_arr(sv);
    sv->add_option("--translate", o.translate, "translate JSON file")->required();
    sv->add_option("--T", o.T, "mark the vertices and edges of this T-set");
    sv->add_option("--out", o.out, "SVG output path")->required();

    auto fail = [&](const std::string& kind, const std::string& message) {
        report.exit_code = kError;
        report.result = Json::object();
        report.result["error"] = {{"kind", kind}, {"message", message}};
        out << report.result.dump(2) << '\n';
        err << "error: " << message << '\n';
        return report;
    };

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        report.exit_code = kAffirmative;
        return report;
    } catch (const CLI::ParseError& e) {
        return fail("usage", e.what());
    }

    CLI::App* chosen = app.get_subcommands().front();
    report.command = chosen->get_name();
    report.inputs = Json::object();
    for (const auto* opt : chosen->get_options()) {
        if (opt->count() == 0 || opt->get_name() == "--help") continue;
        auto name = opt->get_name();
        if (name.rfind("--", 0) == 0) name = name.substr(2);
        report.inputs[name] = opt->as<std::string>();
    }

    try {
        if (chosen == sv) {
            auto a = io::arrangement_from_json(read_json_file(o.arr));
            const Translate t = io::translate_from_json(read_json_file(o.translate));
            std::optional<TSet> T;
            if (!o.T.empty()) T = tset_for(a, o.T);
            std::ofstream file(o.out);
            if (!file) throw ParseError("cannot write '" + o.out + "'");
            emit_svg(a, t, T, file);
            report.result = {{"svg", o.out}, {"lines", a.n()}, {"vertices", T ? T->r() : 0}};
            report.exit_code = kAffirmative;
            out << report.result.dump(2) << '\n';
            err << "wrote " << o.out << '\n';
            return report;
        }

        Outcome outcome = handlers.at(chosen)(o);
        report.result = std::move(outcome.result);
        report.exit_code = outcome.exit_code;
        if (!o.out.empty()) {
            std::ofstream file(o.out);
            if (!file) throw ParseError("cannot write '" + o.out + "'");
            file << report.result.dump(2) << '\n';
        } else {
            out << report.result.dump(2) << '\n';
        }
        err << report.command << ": " << outcome.summary << '\n';
        return report;
    } catch (const NotGeneric& e) {
        return fail("not_generic", e.what());
    } catch (const ZeroNormal& e) {
        return fail("zero_normal", e.what());
    } catch (const ParseError& e) {
        return fail("parse", e.what());
    } catch (const DimensionError& e) {
        return fail("dimension", e.what());
    } catch (const PreconditionError& e) {
        return fail("precondition", e.what());
    } catch (const MissingVertex& e) {
        return fail("missing_vertex", e.what());
    } catch (const std::exception& e) {
        return fail("internal", e.what());
    }
}

}  // namespace discrimlab::cli
