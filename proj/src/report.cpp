#include "dsr/report.hpp"

#include <cmath>
#include <sstream>

namespace dsr {

using nlohmann::ordered_json;

namespace {

ordered_json key_json(const ClassKey& k)
{
    return {{"n", k.n}, {"delta", k.delta}, {"r", k.r}, {"h", k.h}, {"ckappa", k.ckappa}};
}

ordered_json finite_or_null(double v)
{
    return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr);
}

std::string fmt_double(double v)
{
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

} // namespace

ordered_json to_json(const VerificationReport& r)
{
    ordered_json j;
    j["key"] = key_json(r.key);
    j["class_size"] = r.class_size;
    j["min_lambda1"] = r.min_lambda1 ? ordered_json(*r.min_lambda1) : ordered_json(nullptr);
    j["minimizers"] = r.minimizers;
    j["predicted"] = r.predicted ? ordered_json(*r.predicted) : ordered_json(nullptr);
    j["predicted_case"] =
        r.predicted_case ? ordered_json(to_string(*r.predicted_case)) : ordered_json(nullptr);
    j["predicted_member"] = r.predicted_member;
    j["verdict"] = to_string(r.verdict);
    return j;
}

ordered_json to_json(const TheoremSweep& s)
{
    ordered_json j;
    j["n"] = s.n;
    j["r"] = s.r;
    j["h"] = s.h;
    j["graphs"] = s.graphs;
    j["skipped_inputs"] = s.skipped_inputs;
    j["undefined_ckappa"] = s.undefined_ckappa;
    j["grid_infeasible"] = s.grid_infeasible;
    j["all_match"] = s.all_match();
    j["consistency_failures"] = s.consistency_failures;
    ordered_json classes = ordered_json::array();
    for (const auto& r : s.reports)
        classes.push_back(to_json(r));
    j["classes"] = std::move(classes);
    return j;
}

ordered_json to_json(const EdgeLemmaReport& r)
{
    ordered_json j;
    j["graphs"] = r.graphs;
    j["pairs_checked"] = r.pairs_checked;
    j["pairs_skipped"] = r.pairs_skipped;
    j["violations"] = r.violations;
    j["min_margin"] = finite_or_null(r.min_margin);
    j["worst_graph"] = r.worst_graph;
    j["worst_edge"] = {r.worst_edge.first, r.worst_edge.second};
    j["holds"] = r.holds();
    return j;
}

ordered_json to_json(const JoinLemmaReport& r)
{
    ordered_json j;
    j["n_max"] = r.n_max;
    j["instances"] = r.instances;
    j["violations"] = r.violations;
    j["min_margin"] = finite_or_null(r.min_margin);
    if (r.worst)
        j["worst"] = {{"n", r.worst->n}, {"s", r.worst->s}, {"p", r.worst->p},
                      {"parts", r.worst->parts}};
    else
        j["worst"] = nullptr;
    j["holds"] = r.holds();
    return j;
}

ordered_json to_json(const FamilyParams& p, const FamilyValidation& v)
{
    ordered_json j;
    j["params"] = {{"n", p.n}, {"r", p.r}, {"h", p.h}, {"delta", p.delta}, {"ckappa", p.ckappa}};
    j["case"] = to_string(classify(p));
    j["order"] = {{"expected", p.n}, {"observed", v.order}, {"pass", v.order_ok}};
    j["min_degree"] = {{"expected", p.delta}, {"observed", v.min_degree}, {"pass", v.min_degree_ok}};
    j["ckappa"] = {{"expected", p.ckappa},
                   {"observed", v.ckappa ? ordered_json(*v.ckappa) : ordered_json(nullptr)},
                   {"pass", v.ckappa_ok}};
    j["connected"] = {{"pass", v.connected}};
    j["all_pass"] = v.all_pass();
    return j;
}

ordered_json timing_json(const TheoremSweep& s)
{
    ordered_json arr = ordered_json::array();
    for (const auto& r : s.reports)
        arr.push_back({{"key", key_json(r.key)}, {"seconds", r.seconds}});
    return arr;
}

std::string theorem_csv(const TheoremSweep& s)
{
    std::ostringstream os;
    os << "n,r,h,delta,ckappa,class_size,min_lambda1,minimizers,predicted,predicted_case,"
          "predicted_member,verdict\n";
    for (const auto& r : s.reports) {
        os << r.key.n << ',' << r.key.r << ',' << r.key.h << ',' << r.key.delta << ','
           << r.key.ckappa << ',' << r.class_size << ','
           << (r.min_lambda1 ? fmt_double(*r.min_lambda1) : "") << ',';
        // graph6 bytes lie in 63..126, so ';' and ',' never occur inside a key.
        for (std::size_t i = 0; i < r.minimizers.size(); ++i)
            os << (i ? ";" : "") << r.minimizers[i];
        os << ',' << r.predicted.value_or("") << ','
           << (r.predicted_case ? to_string(*r.predicted_case) : "") << ','
           << (r.predicted_member ? "true" : "false") << ',' << to_string(r.verdict) << '\n';
    }
    return os.str();
}

} // namespace dsr
