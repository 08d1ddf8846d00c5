#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace wbt {

using Json = nlohmann::ordered_json;

/// Version tag written into every JSON document this library produces.
inline constexpr int kSchemaVersion = 1;

enum class Relation {
    less,       ///< strict: passes only when margin > slack (slack is a safety buffer)
    less_equal, ///< non-strict: passes when margin >= -slack (slack absorbs rounding)
};

/// One evaluated inequality lhs (<|<=) rhs.
struct BoundReport {
    std::string label;
    std::optional<double> lhs; ///< absent in bound-only mode
    double rhs = 0.0;
    double margin = 0.0; ///< rhs - lhs (0 when lhs is absent)
    double slack = 0.0;
    Relation relation = Relation::less;
    bool holds = false;
    bool inconclusive = false; ///< strict check with 0 < margin <= slack
    Json params = Json::object();
};

/// Builds a report and applies the verdict rule for the relation.
[[nodiscard]] BoundReport make_bound_report(std::string label, std::optional<double> lhs, double rhs,
                                            Relation relation, double slack, Json params = Json::object());

/// A computed constant compared with the value or bound the literature states.
struct ConstantsReport {
    std::string name;
    double computed = 0.0;
    double paper_bound = 0.0;
    double slack = 0.0;
    bool verdict = false;
    std::string relation; ///< "<=", ">=" or "=="
};

/// computed * (1 + slack) <= bound; slack pushes the comparison against us.
[[nodiscard]] ConstantsReport check_upper(std::string name, double computed, double bound, double slack = 1e-9);
/// computed * (1 - slack) >= bound.
[[nodiscard]] ConstantsReport check_lower(std::string name, double computed, double bound, double slack = 1e-9);
/// |computed - expected| <= tolerance (absolute).
[[nodiscard]] ConstantsReport check_close(std::string name, double computed, double expected, double tolerance);

[[nodiscard]] Json to_json(const BoundReport& r);
[[nodiscard]] Json to_json(const ConstantsReport& r);
[[nodiscard]] Json to_json(const std::vector<BoundReport>& rs);

[[nodiscard]] BoundReport bound_report_from_json(const Json& j);

[[nodiscard]] bool all_hold(const std::vector<BoundReport>& rs);

/// Serializes with fixed layout so identical data yields identical bytes.
[[nodiscard]] std::string dump_stable(const Json& j);

} // namespace wbt
