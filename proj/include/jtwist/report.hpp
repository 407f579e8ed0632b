#pragma once

#include <jtwist/tensor.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace jtwist
{

struct GradeResult
{
    int grade = 0;
    bool pass = true;
};

/// One labelled comparison inside a check.
struct ReportItem
{
    std::string label;
    bool pass = true;
    /// Informational items never fail the report.
    bool informational = false;
    std::string detail;
};

struct VerificationReport
{
    std::string check;
    std::vector<std::pair<std::string, std::string>> parameters;
    bool pass = true;
    /// Per kappa-grade status; empty for checks that are not graded.
    std::vector<GradeResult> grades;
    std::vector<ReportItem> items;
    std::optional<std::string> first_failure;
    std::vector<std::string> notes;

    VerificationReport() = default;
    VerificationReport(std::string check_id, int order);

    void parameter(std::string key, std::string value);
    /// Folds a comparison into the per-grade table and the item list.
    void record(const std::string &label, const Comparison &c, int legs, bool informational = false);
    void record(const std::string &label, bool ok, std::string detail = {}, bool informational = false);
    /// pass <=> every grade and every non-informational item passes.
    void finalize();
};

} // namespace jtwist
