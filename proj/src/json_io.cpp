#include "halphen/json_io.hpp"

#include <stdexcept>

namespace halphen {

namespace {

using nlohmann::json;

std::string str(const Int& v) { return v.get_str(); }
std::string str(const Rat& v) { return v.get_str(); }

std::uint64_t fe_from(const json& j) {
    if (j.is_number_unsigned()) return j.get<std::uint64_t>();
    if (j.is_string()) return std::stoull(j.get<std::string>());
    throw std::invalid_argument("field element must be a decimal string");
}

json fe(std::uint64_t v) { return std::to_string(v); }

json coord_json(const Coord& c) {
    return json::array({fe(c[0]), fe(c[1]), fe(c[2]), fe(c[3])});
}

json param_json(const Param& p) { return json::array({fe(p[0]), fe(p[1])}); }

Coord coord_from(const json& j) {
    if (!j.is_array() || j.size() != 4)
        throw std::invalid_argument("coordinate must be a 4-element array");
    return {fe_from(j[0]), fe_from(j[1]), fe_from(j[2]), fe_from(j[3])};
}

Param param_from(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("ruling parameter must be a 2-element array");
    return {fe_from(j[0]), fe_from(j[1])};
}

json grid_json(const GridSpec& g) {
    json params = json::array();
    for (const auto& p : g.fam1) params.push_back(json{{"family", 1}, {"param", param_json(p)}});
    for (const auto& p : g.fam2) params.push_back(json{{"family", 2}, {"param", param_json(p)}});
    return {{"e", g.fam1.size()}, {"f", g.fam2.size()}, {"params", params}};
}

GridSpec grid_from(const json& j) {
    GridSpec g;
    for (const auto& entry : j.at("params")) {
        int fam = entry.at("family").get<int>();
        Param p = param_from(entry.at("param"));
        if (fam == 1) g.fam1.push_back(p);
        else if (fam == 2) g.fam2.push_back(p);
        else throw std::invalid_argument("grid family must be 1 or 2");
    }
    if (j.contains("e") && j.at("e").get<std::size_t>() != g.fam1.size())
        throw std::invalid_argument("grid e does not match the family-1 count");
    if (j.contains("f") && j.at("f").get<std::size_t>() != g.fam2.size())
        throw std::invalid_argument("grid f does not match the family-2 count");
    return g;
}

json qpoint_json(const QuadricPoint& q) {
    return {{"a", param_json(q.a)}, {"b", param_json(q.b)}};
}

QuadricPoint qpoint_from(const json& j) {
    return {param_from(j.at("a")), param_from(j.at("b"))};
}

json component_json(const Component& comp) {
    json j;
    if (auto* p = std::get_if<PointSpec>(&comp)) {
        j["type"] = "point";
        j["c"] = coord_json(p->c);
    } else if (auto* dp = std::get_if<DoublePointSpec>(&comp)) {
        j["type"] = "double-point";
        j["c"] = coord_json(dp->c);
    } else if (auto* l = std::get_if<LineSpec>(&comp)) {
        j["type"] = "line";
        j["p"] = coord_json(l->p);
        j["q"] = coord_json(l->q);
    } else if (auto* rl = std::get_if<RulingLineSpec>(&comp)) {
        j["type"] = "ruling-line";
        j["family"] = rl->family;
        j["param"] = param_json(rl->param);
    } else if (auto* g = std::get_if<GridSpec>(&comp)) {
        j["type"] = "grid";
        j["grid"] = grid_json(*g);
    } else if (auto* cv = std::get_if<DetCurveSpec>(&comp)) {
        j["type"] = "det-curve";
        j["t"] = cv->t;
        json rows = json::array();
        for (const auto& row : cv->rows) {
            json r = json::array();
            for (const auto& entry : row) r.push_back(coord_json(entry));
            rows.push_back(r);
        }
        j["rows"] = rows;
    }
    return j;
}

Component component_from(const json& j) {
    std::string type = j.at("type").get<std::string>();
    if (type == "point") return PointSpec{coord_from(j.at("c"))};
    if (type == "double-point") return DoublePointSpec{coord_from(j.at("c"))};
    if (type == "line") return LineSpec{coord_from(j.at("p")), coord_from(j.at("q"))};
    if (type == "ruling-line")
        return RulingLineSpec{j.at("family").get<int>(), param_from(j.at("param"))};
    if (type == "grid") return grid_from(j.at("grid"));
    if (type == "det-curve") {
        DetCurveSpec cv;
        cv.t = j.at("t").get<long>();
        for (const auto& row : j.at("rows")) {
            std::vector<Coord> r;
            for (const auto& entry : row) r.push_back(coord_from(entry));
            cv.rows.push_back(std::move(r));
        }
        return cv;
    }
    throw std::invalid_argument("unknown component type: " + type);
}

json step_json(const PlanStep& st) {
    json j{{"s", st.s},
           {"kind", std::string(1, st.kind)},
           {"a", str(st.a)},
           {"b", str(st.b)},
           {"g", str(st.g)},
           {"delta", str(st.delta)}};
    if (st.e) j["e"] = *st.e;
    if (!st.case_tag.empty()) j["case"] = st.case_tag;
    return j;
}

}  // namespace

json to_json(const RangeClass& rc, const Int& d, const Int& m) {
    Int ca = -fdiv_q(-rc.lower_a.get_num(), rc.lower_a.get_den());
    Int cb = -fdiv_q(-rc.lower_b.get_num(), rc.lower_b.get_den());
    return {{"d", str(d)},
            {"m", str(m)},
            {"range", range_name(rc.tag)},
            {"boundaries",
             {{"a_lower", str(rc.lower_a)},
              {"a_lower_ceil", str(ca)},
              {"b_lower", str(rc.lower_b)},
              {"b_lower_ceil", str(cb)},
              {"c_lower", str(rc.lower_c)}}}};
}

json to_json(const ConstructionPlan& plan) {
    json steps = json::array();
    for (const auto& st : plan.a_steps) steps.push_back(step_json(st));
    for (const auto& st : plan.b_steps) steps.push_back(step_json(st));
    if (!plan.ctx.small_genus) steps.push_back(step_json(plan.final_step));
    json validity = json::array();
    for (const auto& c : plan.validity)
        validity.push_back({{"name", c.name},
                            {"pass", c.pass},
                            {"informational", c.informational},
                            {"witness", c.witness}});
    json ctx{{"d", str(plan.ctx.d)},
             {"m", str(plan.ctx.m)},
             {"g", str(plan.ctx.g)},
             {"g_max_a", str(plan.ctx.g_max_a)},
             {"alpha", str(plan.ctx.alpha)},
             {"small_genus", plan.ctx.small_genus},
             {"mode", plan.mode == PlanMode::Strict ? "strict" : "exploratory"}};
    json j{{"context", ctx},
           {"t", plan.t},
           {"k", plan.k},
           {"y", plan.y},
           {"steps", steps},
           {"validity", validity},
           {"all_green", plan.all_green()}};
    if (plan.attach_t_index) j["attach_t_index"] = *plan.attach_t_index;
    if (plan.attach_k_index) j["attach_k_index"] = *plan.attach_k_index;
    return j;
}

json to_json(const LemmaReport& rep) {
    return {{"id", rep.id},
            {"statement", rep.statement},
            {"notes", rep.notes},
            {"seed", rep.seed},
            {"tested", rep.tested},
            {"probed", rep.probed},
            {"failures", rep.failures},
            {"failure_count", rep.failure_count},
            {"informational", rep.informational},
            {"informational_count", rep.informational_count},
            {"self_test", rep.self_test},
            {"passed", rep.passed()}};
}

json to_json(const HoraceReport& rep) {
    return {{"h0_trace", rep.h0_trace},
            {"h0_residual", rep.h0_residual},
            {"h0_full", rep.h0_full},
            {"additive", rep.additive},
            {"trace_matches", rep.trace_matches},
            {"residual_matches", rep.residual_matches},
            {"notes", rep.notes}};
}

json to_json(const SchemeSpec& spec) {
    json comps = json::array();
    for (const auto& c : spec.components) comps.push_back(component_json(c));
    return {{"prime", std::to_string(spec.prime)}, {"components", comps}};
}

json to_json(const HoraceConfig& cfg) {
    json marked = json::array(), extra = json::array(), chi = json::array();
    for (const auto& q : cfg.marked) marked.push_back(qpoint_json(q));
    for (const auto& q : cfg.extra) extra.push_back(qpoint_json(q));
    for (const auto& n : cfg.chi) chi.push_back(json::array({n[0], n[1]}));
    return {{"off_quadric", to_json(cfg.off_quadric)},
            {"marked", marked},
            {"grid", grid_json(cfg.grid)},
            {"chi", chi},
            {"extra", extra},
            {"level", cfg.level}};
}

SchemeSpec scheme_from_json(const json& j) {
    SchemeSpec spec;
    if (j.contains("prime")) spec.prime = fe_from(j.at("prime"));
    for (const auto& c : j.at("components")) spec.components.push_back(component_from(c));
    return spec;
}

HoraceConfig horace_config_from_json(const json& j) {
    HoraceConfig cfg;
    if (j.contains("off_quadric")) cfg.off_quadric = scheme_from_json(j.at("off_quadric"));
    if (j.contains("marked"))
        for (const auto& q : j.at("marked")) cfg.marked.push_back(qpoint_from(q));
    if (j.contains("grid")) cfg.grid = grid_from(j.at("grid"));
    if (j.contains("chi"))
        for (const auto& n : j.at("chi"))
            cfg.chi.push_back({n.at(0).get<int>(), n.at(1).get<int>()});
    if (j.contains("extra"))
        for (const auto& q : j.at("extra")) cfg.extra.push_back(qpoint_from(q));
    cfg.level = j.value("level", 3);
    return cfg;
}

}  // namespace halphen
