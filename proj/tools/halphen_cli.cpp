// Command-line front end.  Every subcommand prints a self-describing report
// (JSON with sorted keys by default, TSV on request) and exits 0 on pass,
// 1 on usage errors, 2 on a validity or lemma failure, 3 when a Monte-Carlo
// answer is inconclusive.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "halphen/json_io.hpp"
#include "halphen/lemmas.hpp"
#include "halphen/planner.hpp"
#include "halphen/postulation.hpp"
#include "halphen/range_genus.hpp"
#include "halphen/sequence.hpp"

using namespace halphen;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0, kExitUsage = 1, kExitFail = 2, kExitInconclusive = 3;

struct RunConfig {
    std::uint64_t prime = kDefaultPrime;
    std::uint64_t seed = 0;
    std::string alpha = "202";
    std::string mode = "strict";
    std::string format = "json";
    int threads = 1;
};

json config_json(const RunConfig& rc, const std::string& command) {
    return {{"command", command},
            {"prime", std::to_string(rc.prime)},
            {"seed", rc.seed},
            {"alpha", rc.alpha},
            {"mode", rc.mode},
            {"format", rc.format},
            {"threads", rc.threads}};
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

Int parse_int(const std::string& s, const char* what) {
    try {
        return Int(s);
    } catch (const std::invalid_argument&) {
        throw CLI::ValidationError(std::string(what) + ": not an integer: " + s);
    }
}

Int ceil_rat(const Rat& q) { return -fdiv_q(-q.get_num(), q.get_den()); }

/* "t=4..20,k=4..t,steps=10" */
LemmaBudget parse_box(const std::string& box, const RunConfig& rc) {
    LemmaBudget b;
    b.seed = rc.seed;
    b.exhaustive = true;
    std::string rest = box;
    while (!rest.empty()) {
        auto comma = rest.find(',');
        std::string part = rest.substr(0, comma);
        rest = comma == std::string::npos ? "" : rest.substr(comma + 1);
        auto eq = part.find('=');
        if (eq == std::string::npos) throw CLI::ValidationError("box: expected key=value");
        std::string key = part.substr(0, eq), val = part.substr(eq + 1);
        auto dots = val.find("..");
        if (key == "t") {
            if (dots == std::string::npos) throw CLI::ValidationError("box: t needs lo..hi");
            b.box_t_lo = std::stol(val.substr(0, dots));
            b.box_t_hi = std::stol(val.substr(dots + 2));
        } else if (key == "k") {
            if (dots == std::string::npos) throw CLI::ValidationError("box: k needs lo..hi");
            b.box_k_lo = std::stol(val.substr(0, dots));
            /* the upper end is min(t, box_t_hi); "t" or a number are accepted */
        } else if (key == "steps") {
            b.box_steps = std::stol(val);
        } else {
            throw CLI::ValidationError("box: unknown key " + key);
        }
    }
    return b;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact range classification, construction planning and "
                 "finite-field postulation checks for space curves"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig rc;
    if (const char* p = std::getenv("HALPHEN_PRIME")) rc.prime = std::stoull(p);
    if (const char* t = std::getenv("HALPHEN_THREADS")) rc.threads = std::atoi(t);
    app.add_option("--prime", rc.prime, "modulus for field computations");
    app.add_option("--seed", rc.seed, "seed for randomized checks");
    app.add_option("--alpha", rc.alpha, "recursion offset (default 202)");
    app.add_option("--mode", rc.mode, "strict or exploratory")
        ->check(CLI::IsMember({"strict", "exploratory"}));
    app.add_option("--format", rc.format, "json or tsv")
        ->check(CLI::IsMember({"json", "tsv"}));
    app.add_option("--threads", rc.threads, "worker threads for sweeps");

    std::string arg_d, arg_m, arg_g, arg_range, arg_file;
    long arg_t = 0, arg_k = 0, arg_s = 0;

    auto* c_classify = app.add_subcommand("classify", "range of a (d, m) pair");
    c_classify->add_option("d", arg_d)->required();
    c_classify->add_option("m", arg_m)->required();

    auto* c_bound = app.add_subcommand("bound", "sharp genus bound in range A or C");
    c_bound->add_option("range", arg_range)->required()->check(CLI::IsMember({"A", "C"}));
    c_bound->add_option("d", arg_d)->required();
    c_bound->add_option("m", arg_m)->required();

    long smax = 0;
    auto* c_table = app.add_subcommand("table", "recursion rows for a base pair");
    c_table->add_option("t", arg_t)->required();
    c_table->add_option("k", arg_k)->required();
    c_table->add_option("--smax", smax, "last row (default t+k+21)");

    long xmin = 0, xmax = 0;
    auto* c_uv = app.add_subcommand("uv", "division rows u(x), v(x) at fixed genus");
    c_uv->add_option("t", arg_t)->required();
    c_uv->add_option("k", arg_k)->required();
    c_uv->add_option("g", arg_g)->required();
    c_uv->add_option("--xmin", xmin, "first level (default t+k+1)");
    c_uv->add_option("--xmax", xmax, "last level (default xmin+20)");

    auto* c_plan = app.add_subcommand("plan", "construction plan for (d, m, g)");
    c_plan->add_option("d", arg_d)->required();
    c_plan->add_option("m", arg_m)->required();
    c_plan->add_option("g", arg_g, "target genus (default: the range-A bound)");

    std::string lemma_id, box;
    long samples = 10000;
    auto* c_lemma = app.add_subcommand("verify-lemma", "sampled or exhaustive lemma check");
    c_lemma->add_option("id", lemma_id)->required();
    c_lemma->add_option("--samples", samples, "sample count (default 10000)");
    c_lemma->add_option("--box", box, "exhaustive box, e.g. t=4..20,k=4..t,steps=10");

    auto* c_post = app.add_subcommand("postulate", "h^0 of the degree-s ideal piece");
    c_post->add_option("schemespec", arg_file, "scheme JSON file")->required();
    c_post->add_option("s", arg_s)->required();

    auto* c_horace = app.add_subcommand("horace-demo", "one trace/residual step");
    c_horace->add_option("config", arg_file, "config JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        Int alpha = parse_int(rc.alpha, "alpha");
        if (c_classify->parsed()) {
            Int d = parse_int(arg_d, "d"), m = parse_int(arg_m, "m");
            RangeClass cls = classify(d, m);
            if (rc.format == "tsv") {
                std::cout << range_name(cls.tag) << "\t" << ceil_rat(cls.lower_a).get_str()
                          << "\t" << ceil_rat(cls.lower_b).get_str() << "\t"
                          << cls.lower_c.get_str() << "\n";
            } else {
                json j = to_json(cls, d, m);
                j["config"] = config_json(rc, "classify");
                emit(j);
            }
            return kExitOk;
        }
        if (c_bound->parsed()) {
            Int d = parse_int(arg_d, "d"), m = parse_int(arg_m, "m");
            json j{{"d", d.get_str()}, {"m", m.get_str()}, {"range", arg_range}};
            Int value;
            if (arg_range == "A") {
                value = genus_bound_A(d, m);
            } else {
                GenusBoundC bc = genus_bound_C(d, m);
                value = bc.genus;
                j["r"] = bc.r.get_str();
            }
            j["bound"] = value.get_str();
            if (rc.format == "tsv") {
                std::cout << arg_range << "\t" << d.get_str() << "\t" << m.get_str() << "\t"
                          << value.get_str() << "\n";
            } else {
                j["config"] = config_json(rc, "bound");
                emit(j);
            }
            return kExitOk;
        }
        if (c_table->parsed()) {
            BaseCurveParams p = BaseCurveParams::make(arg_t, arg_k);
            long last = smax ? smax : arg_t + arg_k + 21;
            SequenceTable tab(p, alpha);
            if (rc.format == "tsv") {
                std::cout << "s\ta\tb\tg\n";
                for (long s = tab.s_min(); s <= last; s += 2) {
                    const SeqRow& r = tab.row(s);
                    std::cout << s << "\t" << r.a.get_str() << "\t" << r.b.get_str() << "\t"
                              << r.g.get_str() << "\n";
                }
            } else {
                json rows = json::array();
                for (long s = tab.s_min(); s <= last; s += 2) {
                    const SeqRow& r = tab.row(s);
                    rows.push_back({{"s", s},
                                    {"a", r.a.get_str()},
                                    {"b", r.b.get_str()},
                                    {"g", r.g.get_str()},
                                    {"out_of_model", r.out_of_model}});
                }
                emit(json{{"config", config_json(rc, "table")},
                          {"t", arg_t},
                          {"k", arg_k},
                          {"rows", rows}});
            }
            return kExitOk;
        }
        if (c_uv->parsed()) {
            BaseCurveParams p = BaseCurveParams::make(arg_t, arg_k);
            Int g = parse_int(arg_g, "g");
            long lo = xmin ? xmin : arg_t + arg_k + 1;
            long hi = xmax ? xmax : lo + 20;
            if (rc.format == "tsv") {
                std::cout << "x\tu\tv\n";
                for (long x = lo; x <= hi; ++x) {
                    UVRow r = uv_row(p, g, x);
                    std::cout << x << "\t" << r.u.get_str() << "\t" << r.v.get_str() << "\n";
                }
            } else {
                json rows = json::array();
                for (long x = lo; x <= hi; ++x) {
                    UVRow r = uv_row(p, g, x);
                    rows.push_back({{"x", x}, {"u", r.u.get_str()}, {"v", r.v.get_str()}});
                }
                emit(json{{"config", config_json(rc, "uv")},
                          {"t", arg_t},
                          {"k", arg_k},
                          {"g", g.get_str()},
                          {"rows", rows}});
            }
            return kExitOk;
        }
        if (c_plan->parsed()) {
            Int d = parse_int(arg_d, "d"), m = parse_int(arg_m, "m");
            Int g = arg_g.empty() ? genus_bound_A(d, m) : parse_int(arg_g, "g");
            PlanMode mode = rc.mode == "strict" ? PlanMode::Strict : PlanMode::Exploratory;
            ConstructionPlan P = plan(d, m, g, mode, alpha);
            json j = to_json(P);
            j["config"] = config_json(rc, "plan");
            emit(j);
            return P.all_green() ? kExitOk : kExitFail;
        }
        if (c_lemma->parsed()) {
            LemmaBudget budget;
            if (!box.empty()) {
                budget = parse_box(box, rc);
            } else {
                budget.samples = samples;
                budget.seed = rc.seed;
            }
            LemmaReport rep = verify_lemma(lemma_id, budget);
            json j = to_json(rep);
            j["config"] = config_json(rc, "verify-lemma");
            emit(j);
            return rep.passed() ? kExitOk : kExitFail;
        }
        if (c_post->parsed()) {
            std::ifstream in(arg_file);
            if (!in) throw CLI::ValidationError("cannot open " + arg_file);
            json doc = json::parse(in);
            SchemeSpec spec = scheme_from_json(doc);
            long h0 = h0_ideal(spec, arg_s);
            emit(json{{"config", config_json(rc, "postulate")},
                      {"h0", h0},
                      {"inconclusive", false},
                      {"s", arg_s},
                      {"seed", rc.seed},
                      {"prime", std::to_string(spec.prime)}});
            return kExitOk;
        }
        if (c_horace->parsed()) {
            std::ifstream in(arg_file);
            if (!in) throw CLI::ValidationError("cannot open " + arg_file);
            json doc = json::parse(in);
            HoraceConfig cfg = horace_config_from_json(doc);
            HoraceReport rep = horace_check(cfg);
            json j = to_json(rep);
            j["config"] = config_json(rc, "horace-demo");
            emit(j);
            if (!rep.trace_matches || !rep.residual_matches) return kExitFail;
            return rep.additive ? kExitOk : kExitInconclusive;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const json::exception& e) {
        std::cerr << "error: malformed JSON: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
