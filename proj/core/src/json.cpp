#include "rsperm/json.hpp"

namespace rsperm {

namespace {

nlohmann::json degree_json(const Degree& d) {
    if (d.is_neg_inf()) return nullptr;
    return d.value();
}

}  // namespace

nlohmann::json to_json(const GeneratorMatrix& M) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : M.rows()) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& x : row) r.push_back(x.to_string());
        rows.push_back(std::move(r));
    }
    return rows;
}

nlohmann::json to_json(const GroupReport& report) {
    nlohmann::json elements = nlohmann::json::array();
    for (const auto& m : report.elements)
        elements.push_back({{"perm", m.perm.one_based()},
                            {"poly", m.poly.to_string()},
                            {"degree", degree_json(m.degree)},
                            {"affine", m.affine}});
    return {{"order", report.order},
            {"affine_order", report.affine_order},
            {"equal", report.is_affine_equal},
            {"abelian", report.hint.abelian},
            {"label", report.hint.label},
            {"elements", std::move(elements)}};
}

nlohmann::json to_json(const VerificationReport& report) {
    nlohmann::json affine = nlohmann::json::array();
    for (const auto& p : report.affine) affine.push_back(p.one_based());
    return {{"n", report.n},
            {"k", report.k},
            {"in_range", report.in_range},
            {"warning", report.warning},
            {"order", report.group.order},
            {"affine_order", report.affine.size()},
            {"equal", report.equal},
            {"affine_contained", report.affine_contained},
            {"all_degree_one", report.all_degree_one},
            {"degree_bound_holds", report.degree_bound_holds},
            {"passed", report.passed()},
            {"affine", std::move(affine)},
            {"group", to_json(report.group)}};
}

nlohmann::json to_json(const std::vector<AffinePermutation>& group) {
    nlohmann::json maps = nlohmann::json::array();
    for (const auto& ap : group)
        maps.push_back({{"a", ap.map.a().to_string()},
                        {"b", ap.map.b().to_string()},
                        {"poly", ap.map.to_string()},
                        {"perm", ap.perm.one_based()},
                        {"cycles", ap.perm.cycle_string()}});
    return {{"order", group.size()}, {"maps", std::move(maps)}};
}

nlohmann::json to_json(const SweepResult& result) {
    nlohmann::json instances = nlohmann::json::array();
    for (const auto& s : result.instances)
        instances.push_back({{"trial", s.trial},
                             {"q", s.spec.order()},
                             {"p", s.spec.p()},
                             {"modulus", s.spec.modulus()},
                             {"points", s.points},
                             {"n", s.n},
                             {"k", s.k},
                             {"order", s.order},
                             {"dual_order", s.dual_order},
                             {"affine_order", s.affine_order},
                             {"theorem_ok", s.theorem_ok},
                             {"duality_ok", s.duality_ok},
                             {"degree_ok", s.degree_ok},
                             {"passed", s.passed()}});
    return {{"rng", result.rng},
            {"seed", result.seed},
            {"trials", result.instances.size()},
            {"passed", result.passed()},
            {"failed", result.failed()},
            {"instances", std::move(instances)}};
}

}  // namespace rsperm
