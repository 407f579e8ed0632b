#pragma once

#include <jtwist/report.hpp>
#include <jtwist/tensor.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace jtwist
{

inline constexpr int schema_version = 1;

/// {"schema": 1, "legs", "truncation", "terms": [{"kappa_power", "legs": [{"p", "q"}],
///  "dpoly": [{"exps": [...], "upoly": [[degree, "num/den"], ...]}]}]}
/// Terms sorted by kappa power, then lexicographically by momentum.
nlohmann::ordered_json to_json(const TensorElement &e);
/// Inverse of to_json. Throws std::invalid_argument on schema violations.
TensorElement tensor_from_json(const nlohmann::json &j);

nlohmann::ordered_json to_json(const VerificationReport &r);

struct TextOptions
{
    bool ascii = false;
};

/// One line per (momentum, D-monomial) term, e.g. "(1-u)/κ · P⊗D".
std::vector<std::string> to_text_lines(const TensorElement &e, const TextOptions &opts = {});
std::string to_text(const VerificationReport &r);

} // namespace jtwist
