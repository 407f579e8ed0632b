#include <jtwist/serialize.hpp>

#include <algorithm>
#include <stdexcept>

namespace jtwist
{

using nlohmann::json;
using nlohmann::ordered_json;

namespace
{

std::vector<std::pair<MomentumKey, const DPoly *>> sorted_terms(const TensorElement &e)
{
    std::vector<std::pair<MomentumKey, const DPoly *>> out;
    for (const auto &[k, d] : e.terms()) {
        out.emplace_back(k, &d);
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const auto &a, const auto &b) { return grade_of(a.first) < grade_of(b.first); });
    return out;
}

int require_int(const json &j, const char *key)
{
    if (!j.contains(key) || !j.at(key).is_number_integer()) {
        throw std::invalid_argument(std::string("expected integer field '") + key + "'");
    }
    return j.at(key).get<int>();
}

} // namespace

ordered_json to_json(const TensorElement &e)
{
    ordered_json out;
    out["schema"] = schema_version;
    out["legs"] = e.legs();
    out["truncation"] = e.truncation();
    ordered_json terms = ordered_json::array();
    for (const auto &[k, d] : sorted_terms(e)) {
        ordered_json t;
        t["kappa_power"] = grade_of(k);
        ordered_json legs = ordered_json::array();
        for (int i = 0; i < e.legs(); ++i) {
            legs.push_back({{"p", k[static_cast<std::size_t>(i)].p}, {"q", k[static_cast<std::size_t>(i)].q}});
        }
        t["legs"] = legs;
        ordered_json dpoly = ordered_json::array();
        for (const auto &[exps, c] : d->terms()) {
            ordered_json m;
            m["exps"] = std::vector<int>(exps.begin(), exps.begin() + e.legs());
            ordered_json up = ordered_json::array();
            for (const auto &[deg, q] : c.terms()) {
                up.push_back(ordered_json::array({deg, to_fraction_string(q)}));
            }
            m["upoly"] = up;
            dpoly.push_back(m);
        }
        t["dpoly"] = dpoly;
        terms.push_back(t);
    }
    out["terms"] = terms;
    return out;
}

TensorElement tensor_from_json(const json &j)
{
    if (!j.is_object()) {
        throw std::invalid_argument("tensor JSON must be an object");
    }
    if (require_int(j, "schema") != schema_version) {
        throw std::invalid_argument("unsupported schema version");
    }
    const int legs = require_int(j, "legs");
    TensorElement e(legs, require_int(j, "truncation"));
    for (const auto &t : j.at("terms")) {
        const auto &leg_list = t.at("legs");
        if (static_cast<int>(leg_list.size()) != legs) {
            throw std::invalid_argument("term has wrong number of legs");
        }
        MomentumKey key{};
        for (int i = 0; i < legs; ++i) {
            const auto &l = leg_list.at(static_cast<std::size_t>(i));
            key[static_cast<std::size_t>(i)] = LegMonomial{static_cast<std::uint16_t>(require_int(l, "p")),
                                                           static_cast<std::uint16_t>(require_int(l, "q"))};
        }
        if (require_int(t, "kappa_power") != grade_of(key)) {
            throw std::invalid_argument("kappa_power does not match momentum degrees");
        }
        DPoly d(legs);
        for (const auto &m : t.at("dpoly")) {
            const auto exps_list = m.at("exps").get<std::vector<int>>();
            if (static_cast<int>(exps_list.size()) != legs) {
                throw std::invalid_argument("exponent vector has wrong length");
            }
            Exponents exps{};
            for (int i = 0; i < legs; ++i) {
                exps[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(exps_list[static_cast<std::size_t>(i)]);
            }
            UPoly c;
            for (const auto &pair : m.at("upoly")) {
                c += UPoly::monomial(pair.at(0).get<std::uint32_t>(), parse_rational(pair.at(1).get<std::string>()));
            }
            d.add_term(exps, c);
        }
        e.add_term(key, d);
    }
    return e;
}

ordered_json to_json(const VerificationReport &r)
{
    ordered_json out;
    out["check"] = r.check;
    ordered_json params = ordered_json::object();
    for (const auto &[k, v] : r.parameters) {
        params[k] = v;
    }
    out["parameters"] = params;
    out["status"] = r.pass ? "pass" : "fail";
    ordered_json grades = ordered_json::array();
    for (const auto &g : r.grades) {
        grades.push_back({{"grade", g.grade}, {"status", g.pass ? "pass" : "fail"}});
    }
    out["grades"] = grades;
    ordered_json items = ordered_json::array();
    for (const auto &i : r.items) {
        ordered_json item{{"label", i.label}, {"status", i.pass ? "pass" : "fail"}};
        if (i.informational) {
            item["informational"] = true;
        }
        if (!i.detail.empty()) {
            item["detail"] = i.detail;
        }
        items.push_back(item);
    }
    out["items"] = items;
    out["first_failure"] = r.first_failure ? ordered_json(*r.first_failure) : ordered_json(nullptr);
    out["notes"] = r.notes;
    return out;
}

std::vector<std::string> to_text_lines(const TensorElement &e, const TextOptions &opts)
{
    const std::string kappa = opts.ascii ? "kappa" : "κ";
    const std::string otimes = opts.ascii ? "(x)" : "⊗";
    const std::string dot = opts.ascii ? "*" : "·";

    std::vector<std::string> lines;
    for (const auto &[k, d] : sorted_terms(e)) {
        const int grade = grade_of(k);
        for (const auto &[exps, c] : d->terms()) {
            std::string legs;
            for (int i = 0; i < e.legs(); ++i) {
                const auto s = static_cast<std::size_t>(i);
                std::string leg;
                auto factor = [&](const char *name, unsigned n) {
                    if (n == 0) {
                        return;
                    }
                    if (!leg.empty()) {
                        leg += dot;
                    }
                    leg += name;
                    if (n > 1) {
                        leg += "^" + std::to_string(n);
                    }
                };
                factor("P", k[s].p);
                factor("Q", k[s].q);
                factor("D", exps[s]);
                legs += (i ? otimes : "") + (leg.empty() ? std::string("1") : leg);
            }

            std::string coeff;
            const bool compound = c.terms().size() > 1;
            const bool unit = c == UPoly(1);
            const bool fractional = !compound && !c.is_zero() && c.terms().front().second.get_den() != 1;
            if (compound || (fractional && grade > 0)) {
                coeff = "(" + c.to_string() + ")";
            } else if (!unit || grade > 0) {
                coeff = c.to_string();
            }
            if (grade > 0) {
                coeff += "/" + kappa;
                if (grade > 1) {
                    coeff += "^" + std::to_string(grade);
                }
            }
            lines.push_back(coeff.empty() ? legs : coeff + " " + dot + " " + legs);
        }
    }
    if (lines.empty()) {
        lines.emplace_back("0");
    }
    return lines;
}

std::string to_text(const VerificationReport &r)
{
    std::string out = std::string(r.pass ? "PASS" : "FAIL") + "  " + r.check;
    for (const auto &[k, v] : r.parameters) {
        out += " " + k + "=" + v;
    }
    out += "\n";
    if (!r.grades.empty()) {
        out += "    grades:";
        for (const auto &g : r.grades) {
            out += " " + std::to_string(g.grade) + (g.pass ? ":ok" : ":FAIL");
        }
        out += "\n";
    }
    for (const auto &i : r.items) {
        out += std::string("    [") + (i.pass ? "ok" : (i.informational ? "info" : "FAIL")) + "] " + i.label;
        if (!i.detail.empty()) {
            out += " -- " + i.detail;
        }
        out += "\n";
    }
    for (const auto &n : r.notes) {
        out += "    note: " + n + "\n";
    }
    return out;
}

} // namespace jtwist
