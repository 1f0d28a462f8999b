#include "socdyn/report.hpp"

namespace socdyn {

Json to_json(const Params& p) {
    return Json{{"alpha", p.alpha}, {"beta", p.beta},       {"gamma", p.gamma},
                {"delta", p.delta}, {"epsilon", p.epsilon}, {"eta", p.eta}};
}

Json to_json(const ValidationReport& v) {
    return Json{
        {"positivity_ok", v.positivity_ok},
        {"nondominance_ok", v.nondominance_ok},
        {"branch", v.branch ? Json(std::string(to_string(*v.branch))) : Json(nullptr)},
        {"degenerate_quantities", v.degenerate_quantities},
        {"messages", v.messages},
    };
}

Json to_json(const StationaryState& s) {
    Json signs = Json::array();
    for (const auto& e : s.eigen_signs)
        signs.push_back({{"direction", e.direction}, {"sign", std::string(to_string(e.sign))}});
    const auto& x = s.location.coords();
    Json support = Json::array();
    for (Strategy st : s.support()) support.push_back(std::string(1, letter(st)));
    Json j{
        {"label", s.label},
        {"location", {x[0], x[1], x[2], x[3]}},
        {"kind", std::string(to_string(s.kind))},
        {"support", support},
        {"stability", std::string(to_string(s.stability))},
        {"payoff", s.payoff},
        {"eigen_signs", signs},
    };
    if (s.positive_eigenvalue) j["positive_eigenvalue"] = *s.positive_eigenvalue;
    return j;
}

Json to_json(const EdgeRegime& e) {
    Json attractors = Json::array();
    for (const auto& a : e.attractors) attractors.push_back(to_json(a));
    return Json{{"edge", std::string(to_string(e.edge))},
                {"pp", e.pp},
                {"figure", e.figure},
                {"attractors", attractors}};
}

Json to_json(const WelfareReport& w) {
    Json ordering = Json::array();
    for (const auto& e : w.ordering)
        ordering.push_back({{"label", e.label},
                            {"payoff", e.payoff},
                            {"tied_with_previous", e.tied_with_previous}});
    Json pairs = Json::array();
    for (const auto& [a, b] : w.incomparable_pairs) pairs.push_back({a, b});
    return Json{{"ordering", ordering},
                {"trap_dominated", w.trap_dominated},
                {"incomparable_pairs", pairs}};
}

Json to_json(const RegimeReport& r) {
    Json edges = Json::array();
    for (const auto& e : r.edges) edges.push_back(to_json(e));
    Json attractors = Json::array();
    for (const auto& a : r.global_attractors) attractors.push_back(to_json(a));
    std::string nash;
    try {
        nash = nash_vertices(r.params).letters();
    } catch (const DegenerateError&) {
        nash = "";
    }
    return Json{
        {"params", to_json(r.params)},
        {"validation", to_json(r.validation)},
        {"branch",
         r.validation.branch ? Json(std::string(to_string(*r.validation.branch))) : Json(nullptr)},
        {"nash", nash},
        {"degenerate", r.degenerate},
        {"edges", edges},
        {"global",
         {{"case", std::string(to_string(r.global_case))},
          {"attractors", attractors},
          {"welfare", to_json(r.welfare)}}},
    };
}

Json partial_report(const Params& p, const ValidationReport& v,
                    const std::vector<std::string>& degenerate_quantities) {
    return Json{
        {"params", to_json(p)},
        {"validation", to_json(v)},
        {"branch", v.branch ? Json(std::string(to_string(*v.branch))) : Json(nullptr)},
        {"degenerate", !degenerate_quantities.empty()},
        {"degenerate_quantities", degenerate_quantities},
    };
}

Json to_json(const BasinReport& b) {
    Json attractors = Json::array();
    for (const auto& e : b.attractors) {
        const auto& x = e.location.coords();
        attractors.push_back({{"label", e.label},
                              {"location", {x[0], x[1], x[2], x[3]}},
                              {"hits", e.hits},
                              {"fraction", e.fraction},
                              {"std_error", e.std_error}});
    }
    return Json{{"samples", b.samples},
                {"seed", b.seed},
                {"measure", b.measure},
                {"attractors", attractors},
                {"unresolved",
                 {{"hits", b.unresolved},
                  {"fraction", b.unresolved_fraction},
                  {"std_error", b.unresolved_std_error}}}};
}

std::string canonical_dump(const Json& j) {
    return j.dump(2) + "\n";
}

}  // namespace socdyn
