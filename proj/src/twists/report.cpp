#include <jtwist/report.hpp>

#include <algorithm>

namespace jtwist
{

VerificationReport::VerificationReport(std::string check_id, int order) : check(std::move(check_id))
{
    for (int g = 0; g <= order; ++g) {
        grades.push_back(GradeResult{g, true});
    }
}

void VerificationReport::parameter(std::string key, std::string value)
{
    parameters.emplace_back(std::move(key), std::move(value));
}

void VerificationReport::record(const std::string &label, const Comparison &c, int legs, bool informational)
{
    std::string detail;
    if (!c.equal && c.first_difference) {
        detail = "first difference at " + c.first_difference->describe(legs);
    }
    if (!c.equal && !informational) {
        for (int g : c.failing_grades) {
            auto it = std::find_if(grades.begin(), grades.end(), [g](const GradeResult &r) { return r.grade == g; });
            if (it != grades.end()) {
                it->pass = false;
            }
        }
    }
    record(label, c.equal, std::move(detail), informational);
}

void VerificationReport::record(const std::string &label, bool ok, std::string detail, bool informational)
{
    if (!ok && !informational && !first_failure) {
        first_failure = label + (detail.empty() ? std::string() : ": " + detail);
    }
    items.push_back(ReportItem{label, ok, informational, std::move(detail)});
}

void VerificationReport::finalize()
{
    pass = std::all_of(grades.begin(), grades.end(), [](const GradeResult &g) { return g.pass; })
           && std::all_of(items.begin(), items.end(),
                          [](const ReportItem &i) { return i.pass || i.informational; });
}

} // namespace jtwist
