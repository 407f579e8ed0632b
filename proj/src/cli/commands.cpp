#include <jtwist/checks.hpp>
#include <jtwist/commands.hpp>
#include <jtwist/identities.hpp>
#include <jtwist/serialize.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

namespace jtwist
{

namespace
{

struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct RunConfig
{
    std::string family = "L";
    bool inverse = false;
    std::string form;
    std::optional<int> order;
    std::string u = "symbolic";
    std::string v = "0";
    std::string format = "text";
    std::string out_path;
    bool ascii = false;

    // verify
    bool all = false;
    std::vector<std::string> checks;
    std::vector<std::string> generators;

    // identities
    bool bigident = false;
    std::vector<std::string> chains;
    std::optional<int> bound;
    std::optional<int> det;
};

Family parse_family(const std::string &s)
{
    if (s == "0" || s == "zero") {
        return Family::zero;
    }
    if (s == "1" || s == "one") {
        return Family::one;
    }
    if (s == "L" || s == "l") {
        return Family::L;
    }
    if (s == "R" || s == "r") {
        return Family::R;
    }
    throw UsageError("unknown family '" + s + "' (expected 0, 1, L or R)");
}

std::optional<Rational> parse_u(const std::string &s)
{
    if (s == "symbolic") {
        return std::nullopt;
    }
    try {
        return parse_rational(s);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
}

Form default_form(Family family, Direction direction)
{
    if (family == Family::R && direction == Direction::twist) {
        return Form::inverted_closed;
    }
    if (family == Family::L && direction == Direction::inverse) {
        return Form::inverted_closed;
    }
    return Form::closed;
}

TwistSpec spec_from(const RunConfig &cfg, int default_order)
{
    TwistSpec spec;
    spec.family = parse_family(cfg.family);
    spec.direction = cfg.inverse ? Direction::inverse : Direction::twist;
    if (cfg.form.empty()) {
        spec.form = default_form(spec.family, spec.direction);
    } else if (cfg.form == "product") {
        spec.form = Form::product;
    } else if (cfg.form == "closed") {
        spec.form = Form::closed;
    } else if (cfg.form == "inverted-closed") {
        spec.form = Form::inverted_closed;
    } else {
        throw UsageError("unknown form '" + cfg.form + "'");
    }
    spec.order = cfg.order.value_or(default_order);
    spec.u = parse_u(cfg.u);
    return spec;
}

void emit(const RunConfig &cfg, const std::string &text, std::ostream &out)
{
    if (cfg.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) {
        throw UsageError("cannot open output file '" + cfg.out_path + "'");
    }
    file << text;
}

int cmd_expand(const RunConfig &cfg, std::ostream &out)
{
    const TwistSpec spec = spec_from(cfg, 2);
    TensorElement e(2, 0);
    try {
        e = build_twist(spec);
    } catch (const std::invalid_argument &ex) {
        throw UsageError(ex.what());
    }
    std::string text;
    if (cfg.format == "json") {
        text = to_json(e).dump(2) + "\n";
    } else {
        for (const auto &line : to_text_lines(e, TextOptions{cfg.ascii})) {
            text += line + "\n";
        }
    }
    emit(cfg, text, out);
    return exit_pass;
}

using Task = std::function<VerificationReport()>;

// Runs independent checks concurrently; results keep submission order.
std::vector<VerificationReport> run_tasks(const std::vector<Task> &tasks)
{
    std::vector<std::future<VerificationReport>> futures;
    futures.reserve(tasks.size());
    for (const auto &t : tasks) {
        futures.push_back(std::async(std::launch::async, t));
    }
    std::vector<VerificationReport> reports;
    reports.reserve(tasks.size());
    for (auto &f : futures) {
        reports.push_back(f.get());
    }
    return reports;
}

int emit_reports(const RunConfig &cfg, const std::vector<VerificationReport> &reports,
                 const nlohmann::ordered_json &extra, std::ostream &out)
{
    const bool all_pass = std::all_of(reports.begin(), reports.end(), [](const auto &r) { return r.pass; });
    std::string text;
    if (cfg.format == "json") {
        nlohmann::ordered_json j;
        j["schema"] = schema_version;
        j["status"] = all_pass ? "pass" : "fail";
        nlohmann::ordered_json list = nlohmann::ordered_json::array();
        for (const auto &r : reports) {
            list.push_back(to_json(r));
        }
        j["reports"] = list;
        for (const auto &[k, v] : extra.items()) {
            j[k] = v;
        }
        text = j.dump(2) + "\n";
    } else {
        for (const auto &r : reports) {
            text += to_text(r);
        }
        const auto failed = std::count_if(reports.begin(), reports.end(), [](const auto &r) { return !r.pass; });
        text += failed == 0 ? "ALL PASS (" + std::to_string(reports.size()) + " checks)\n"
                            : std::to_string(failed) + " of " + std::to_string(reports.size()) + " checks FAILED\n";
    }
    emit(cfg, text, out);
    return all_pass ? exit_pass : exit_fail;
}

std::vector<Generator> generators_from(const RunConfig &cfg, std::vector<Generator> fallback)
{
    if (cfg.generators.empty()) {
        return fallback;
    }
    std::vector<Generator> gs;
    for (const auto &g : cfg.generators) {
        if (g == "P") {
            gs.push_back(Generator::P);
        } else if (g == "Q") {
            gs.push_back(Generator::Q);
        } else if (g == "D") {
            gs.push_back(Generator::D);
        } else {
            throw UsageError("unknown generator '" + g + "'");
        }
    }
    return gs;
}

Family interpolating_family(const RunConfig &cfg)
{
    const Family f = parse_family(cfg.family);
    if (f != Family::L && f != Family::R) {
        throw UsageError("this check needs --family L or R");
    }
    return f;
}

// Appends the tasks for one named check using the family/u/order in cfg.
void add_check(const std::string &name, const RunConfig &cfg, std::vector<Task> &tasks)
{
    const auto order = [&cfg](int fallback) { return cfg.order.value_or(fallback); };
    const std::optional<Rational> u = parse_u(cfg.u);

    if (name == "cocycle") {
        const TwistSpec spec = spec_from(cfg, 5);
        tasks.emplace_back([spec] { return check_cocycle(spec); });
    } else if (name == "normalization") {
        const TwistSpec spec = spec_from(cfg, 6);
        tasks.emplace_back([spec] { return check_normalization(spec); });
    } else if (name == "inverse") {
        const Family f = interpolating_family(cfg);
        const int n = order(6);
        tasks.emplace_back([f, n, u] { return check_inverse_pair(f, n, u); });
    } else if (name == "endpoints") {
        const Family f = interpolating_family(cfg);
        const int n = order(6);
        tasks.emplace_back([f, n] { return check_endpoints(f, n); });
    } else if (name == "form") {
        const Family f = interpolating_family(cfg);
        const int n = order(5);
        tasks.emplace_back([f, n, u] { return check_form_equality(f, n, u); });
    } else if (name == "hopf") {
        const Family f = interpolating_family(cfg);
        const int n = order(4);
        for (Generator g : generators_from(cfg, {Generator::P, Generator::Q, Generator::D})) {
            tasks.emplace_back([f, g, n, u] { return check_hopf_data(f, g, n, u); });
        }
    } else if (name == "lr") {
        const int n = order(6);
        tasks.emplace_back([n, u] { return check_lr_relation(n, u); });
    } else if (name == "vfamily") {
        const int n = order(5);
        Rational v;
        try {
            v = parse_rational(cfg.v);
        } catch (const std::invalid_argument &e) {
            throw UsageError(e.what());
        }
        tasks.emplace_back([v, n] { return check_v_family(v, n); });
    } else if (name == "coassoc") {
        const Family f = interpolating_family(cfg);
        const int n = order(4);
        for (Generator g : generators_from(cfg, {Generator::P, Generator::D})) {
            tasks.emplace_back([f, g, n, u] { return check_twisted_coassociativity(f, g, n, u); });
        }
    } else if (name == "counit") {
        const Family f = interpolating_family(cfg);
        const int n = order(6);
        for (Generator g : generators_from(cfg, {Generator::P, Generator::Q, Generator::D})) {
            tasks.emplace_back([f, g, n, u] { return check_deformed_counit(f, g, n, u); });
        }
    } else {
        throw UsageError("unknown check '" + name + "'");
    }
}

std::vector<Task> all_checks(const RunConfig &base)
{
    std::vector<Task> tasks;
    auto with = [&base](std::string family, bool inverse = false, std::string u = "symbolic") {
        RunConfig c = base;
        c.family = std::move(family);
        c.inverse = inverse;
        c.form.clear();
        c.u = std::move(u);
        c.generators.clear();
        return c;
    };
    for (const char *family : {"L", "R", "0", "1"}) {
        add_check("cocycle", with(family), tasks);
        add_check("normalization", with(family), tasks);
    }
    add_check("cocycle", with("R", true), tasks);
    add_check("cocycle", with("R", false, "1/2"), tasks);
    add_check("normalization", with("R", false, "1/2"), tasks);
    for (const char *family : {"L", "R"}) {
        for (const char *check : {"inverse", "endpoints", "form", "hopf", "coassoc", "counit"}) {
            add_check(check, with(family), tasks);
        }
    }
    add_check("lr", with("L"), tasks);
    for (const char *v : {"-2", "-1", "0", "1/2", "3"}) {
        RunConfig c = with("L");
        c.v = v;
        add_check("vfamily", c, tasks);
    }
    return tasks;
}

int cmd_verify(const RunConfig &cfg, std::ostream &out)
{
    if (!cfg.all && cfg.checks.empty()) {
        throw UsageError("verify needs --all or at least one --check");
    }
    std::vector<Task> tasks;
    if (cfg.all) {
        tasks = all_checks(cfg);
    }
    for (const auto &name : cfg.checks) {
        add_check(name, cfg, tasks);
    }
    return emit_reports(cfg, run_tasks(tasks), nlohmann::ordered_json::object(), out);
}

int cmd_identities(const RunConfig &cfg, std::ostream &out)
{
    const bool run_all = !cfg.bigident && cfg.chains.empty() && !cfg.det;
    std::vector<Task> tasks;
    if (cfg.bigident || run_all) {
        const int b = cfg.bound.value_or(4);
        tasks.emplace_back([b] { return verify_bigident_suite(b); });
    }
    std::vector<std::string> chains = cfg.chains;
    if (run_all) {
        chains = {"L", "R"};
    }
    for (const auto &c : chains) {
        if (c != "L" && c != "R") {
            throw UsageError("unknown chain '" + c + "' (expected L or R)");
        }
        const Chain chain = c == "L" ? Chain::L : Chain::R;
        const int b = cfg.bound.value_or(chain == Chain::L ? 4 : 3);
        tasks.emplace_back([chain, b] { return verify_identity_chain(chain, b); });
    }

    nlohmann::ordered_json extra = nlohmann::ordered_json::object();
    bool det_ok = true;
    std::string det_text;
    if (cfg.det) {
        if (*cfg.det < 0) {
            throw UsageError("--det needs n >= 0");
        }
        const Rational d = independence_det(*cfg.det);
        det_ok = abs(d) == 1;
        extra["det"] = {{"n", *cfg.det}, {"value", to_fraction_string(d)}};
        det_text = to_short_string(d) + "\n";
    }
    if (tasks.empty()) {
        emit(cfg, cfg.format == "json" ? [&] {
            nlohmann::ordered_json j;
            j["schema"] = schema_version;
            j["status"] = det_ok ? "pass" : "fail";
            for (const auto &[k, v] : extra.items()) {
                j[k] = v;
            }
            return j.dump(2) + "\n";
        }()
                                       : det_text,
             out);
        return det_ok ? exit_pass : exit_fail;
    }
    if (cfg.format != "json" && !det_text.empty()) {
        out << "independence_det(" << *cfg.det << ") = " << det_text;
    }
    const int code = emit_reports(cfg, run_tasks(tasks), extra, out);
    return det_ok ? code : exit_fail;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Jordanian twist expansion and verification engine", "jtwist"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto common = [&cfg](CLI::App *sub) {
        sub->add_option("--order,-N", cfg.order, "Truncation order in 1/kappa")->check(CLI::NonNegativeNumber);
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--out", cfg.out_path, "Write output to this file");
    };
    auto twist_opts = [&cfg](CLI::App *sub) {
        sub->add_option("--family", cfg.family, "Twist family: 0, 1, L or R");
        sub->add_flag("--inverse", cfg.inverse, "Use the inverse twist");
        sub->add_option("--form", cfg.form, "product, closed or inverted-closed")
            ->check(CLI::IsMember({"product", "closed", "inverted-closed"}));
        sub->add_option("--u", cfg.u, "Interpolation parameter: 'symbolic' or a rational p/q");
    };

    CLI::App *expand = app.add_subcommand("expand", "Print the normal-ordered expansion of a twist");
    common(expand);
    twist_opts(expand);
    expand->add_flag("--ascii", cfg.ascii, "ASCII rendering (kappa, (x), *)");

    CLI::App *verify = app.add_subcommand("verify", "Run twist verification checks");
    common(verify);
    twist_opts(verify);
    verify->add_flag("--all", cfg.all, "Run the full suite");
    verify->add_option("--check", cfg.checks,
                       "cocycle, normalization, inverse, endpoints, form, hopf, lr, vfamily, coassoc, counit");
    verify->add_option("--generator", cfg.generators, "Generators for hopf/coassoc/counit: P, Q, D");
    verify->add_option("--v", cfg.v, "Cochain shift v for the vfamily check");

    CLI::App *identities = app.add_subcommand("identities", "Verify the binomial identities");
    identities->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    identities->add_option("--out", cfg.out_path, "Write output to this file");
    identities->add_flag("--bigident", cfg.bigident, "Cocycle-reducing identity, exhaustive up to --bound");
    identities->add_option("--chain", cfg.chains, "Identity chain: L or R");
    identities->add_option("--bound", cfg.bound, "Largest index value")->check(CLI::NonNegativeNumber);
    identities->add_option("--det", cfg.det, "Print the linear-independence determinant for n");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_pass;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_pass;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        if (expand->parsed()) {
            return cmd_expand(cfg, out);
        }
        if (verify->parsed()) {
            return cmd_verify(cfg, out);
        }
        return cmd_identities(cfg, out);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
}

} // namespace jtwist
