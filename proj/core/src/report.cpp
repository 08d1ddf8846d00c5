#include "wbt/report.hpp"

#include <algorithm>
#include <cmath>

namespace wbt {

BoundReport make_bound_report(std::string label, std::optional<double> lhs, double rhs, Relation relation,
                              double slack, Json params)
{
    BoundReport r;
    r.label = std::move(label);
    r.lhs = lhs;
    r.rhs = rhs;
    r.slack = slack;
    r.relation = relation;
    r.params = std::move(params);
    if (!lhs) {
        r.margin = 0.0;
        r.holds = false;
        return r;
    }
    r.margin = rhs - *lhs;
    if (relation == Relation::less) {
        r.holds = r.margin > slack;
        r.inconclusive = !r.holds && r.margin > 0.0;
    } else {
        r.holds = r.margin >= -slack;
    }
    if (std::isnan(r.margin))
        r.holds = false;
    return r;
}

ConstantsReport check_upper(std::string name, double computed, double bound, double slack)
{
    return {std::move(name), computed, bound, slack, computed * (1.0 + slack) <= bound, "<="};
}

ConstantsReport check_lower(std::string name, double computed, double bound, double slack)
{
    return {std::move(name), computed, bound, slack, computed * (1.0 - slack) >= bound, ">="};
}

ConstantsReport check_close(std::string name, double computed, double expected, double tolerance)
{
    return {std::move(name), computed, expected, tolerance, std::fabs(computed - expected) <= tolerance, "=="};
}

namespace {

Json number_or_null(double v)
{
    if (std::isfinite(v))
        return v;
    return nullptr;
}

} // namespace

Json to_json(const BoundReport& r)
{
    Json j;
    j["label"] = r.label;
    j["lhs"] = r.lhs ? number_or_null(*r.lhs) : Json(nullptr);
    j["rhs"] = number_or_null(r.rhs);
    j["margin"] = number_or_null(r.margin);
    j["slack"] = r.slack;
    j["relation"] = r.relation == Relation::less ? "<" : "<=";
    j["holds"] = r.holds;
    j["inconclusive"] = r.inconclusive;
    j["params"] = r.params;
    return j;
}

Json to_json(const ConstantsReport& r)
{
    Json j;
    j["name"] = r.name;
    j["computed"] = number_or_null(r.computed);
    j["relation"] = r.relation;
    j["paper_bound"] = number_or_null(r.paper_bound);
    j["slack"] = r.slack;
    j["verdict"] = r.verdict;
    return j;
}

Json to_json(const std::vector<BoundReport>& rs)
{
    Json arr = Json::array();
    for (const auto& r : rs)
        arr.push_back(to_json(r));
    return arr;
}

BoundReport bound_report_from_json(const Json& j)
{
    BoundReport r;
    r.label = j.at("label").get<std::string>();
    if (!j.at("lhs").is_null())
        r.lhs = j.at("lhs").get<double>();
    r.rhs = j.at("rhs").is_null() ? NAN : j.at("rhs").get<double>();
    r.margin = j.at("margin").is_null() ? NAN : j.at("margin").get<double>();
    r.slack = j.at("slack").get<double>();
    r.relation = j.at("relation").get<std::string>() == "<" ? Relation::less : Relation::less_equal;
    r.holds = j.at("holds").get<bool>();
    r.inconclusive = j.value("inconclusive", false);
    r.params = j.value("params", Json::object());
    return r;
}

bool all_hold(const std::vector<BoundReport>& rs)
{
    return std::all_of(rs.begin(), rs.end(), [](const BoundReport& r) { return r.holds; });
}

std::string dump_stable(const Json& j)
{
    return j.dump(2);
}

} // namespace wbt
