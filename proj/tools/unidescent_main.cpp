#include <chrono>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "unidescent/errors.hpp"
#include "unidescent/ggp.hpp"
#include "unidescent/table_io.hpp"
#include "unidescent/verify.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;
using unidescent::Partition;

// exit codes: 0 ok, 1 verification failure, 2 parse/usage, 3 size/parity
// violation, 4 cache I/O
enum ExitCode { kOk = 0, kVerifyFailed = 1, kParse = 2, kConstraint = 3, kCache = 4 };

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

std::string csv_quote(const std::string& field) {
    if (field.find(',') == std::string::npos && field.find('"') == std::string::npos)
        return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

unidescent::Model parse_model(const std::string& name) {
    if (name == "bessel") return unidescent::Model::bessel;
    if (name == "fj") return unidescent::Model::fourier_jacobi;
    throw unidescent::parse_error("unknown model '" + name + "' (expected bessel or fj)");
}

ordered_json engine_block(const Timer& timer, const unidescent::TableStore& store) {
    ordered_json engine;
    engine["timing_ms"] = timer.ms();
    engine["table_levels"] = store.levels();
    return engine;
}

ordered_json mult_payload(const unidescent::MultiplicityResult& r) {
    ordered_json out;
    out["raw"] = r.raw.str();
    out["value"] = r.value.str();
    out["covered"] = r.covered;
    out["case"] = unidescent::case_tag_name(r.case_tag);
    return out;
}

struct CliState {
    unidescent::TableStore store;
    std::filesystem::path cache_path;
    bool use_cache = true;

    void open_cache() {
        if (!use_cache) return;
        if (cache_path.empty()) cache_path = unidescent::default_cache_path();
        if (cache_path.empty()) {
            use_cache = false;
            return;
        }
        for (auto& table : unidescent::load_table_cache(cache_path))
            store.preload(std::move(table));
    }
    void close_cache() {
        if (use_cache && store.dirty())
            unidescent::save_table_cache(cache_path, store.snapshot());
    }
};

int cmd_descend(CliState& state, const std::string& partition_text, const std::string& model_text,
                bool no_verify, const std::string& format) {
    if (format != "json")
        throw unidescent::parse_error("descend output is JSON-only");
    Timer timer;
    const Partition lam = Partition::parse(partition_text);
    const unidescent::Model model = parse_model(model_text);
    unidescent::DescendOptions options;
    options.verify = !no_verify;
    const unidescent::DescentResult r = unidescent::descend(state.store, lam, model, options);

    ordered_json doc;
    doc["command"] = "descend";
    doc["inputs"] = {{"partition", lam.str()}, {"model", model_text}};
    ordered_json out;
    out["n"] = lam.size();
    out["rows"] = lam.rows();
    out["ell0_bound"] = r.ell0_bound;
    out["determined"] = r.determined;
    if (r.determined) {
        out["ell0"] = *r.ell0;
        out["descent"] = r.descent->str();
        out["target_level"] = model == unidescent::Model::bessel ? lam.size() - 2 * *r.ell0 - 1
                                                                 : lam.size() - 2 * *r.ell0;
    } else {
        out["ell0"] = nullptr;
        out["descent"] = "undetermined";
        out["target_level"] = nullptr;
    }
    out["verified"] = r.verified;
    doc["outputs"] = std::move(out);
    doc["engine"] = engine_block(timer, state.store);
    std::cout << doc.dump(2) << "\n";
    return kOk;
}

int cmd_mult(CliState& state, const std::string& lambda_text, const std::string& nu_text,
             const std::string& model_text, const std::string& mode_text,
             std::optional<int> mu0, bool sweep, std::optional<int> sweep_m,
             const std::string& format) {
    Timer timer;
    const Partition lam = Partition::parse(lambda_text);
    const unidescent::Model model = parse_model(model_text);
    unidescent::FjMode mode;
    if (mode_text == "declarative")
        mode = unidescent::FjMode::declarative;
    else if (mode_text == "seesaw")
        mode = unidescent::FjMode::seesaw;
    else
        throw unidescent::parse_error("unknown mode '" + mode_text +
                                      "' (expected declarative or seesaw)");

    auto evaluate = [&](const Partition& nu) {
        return model == unidescent::Model::bessel
                   ? unidescent::bessel_multiplicity(state.store, lam, nu)
                   : unidescent::fj_multiplicity(state.store, lam, nu, mode, mu0);
    };

    if (!sweep) {
        if (nu_text.empty()) throw unidescent::parse_error("mult requires --nu (or --sweep)");
        const Partition nu = Partition::parse(nu_text);
        const unidescent::MultiplicityResult r = evaluate(nu);
        if (format == "csv") {
            std::cout << "lambda,nu,model,raw,value,covered,case\n"
                      << csv_quote(lam.str()) << ',' << csv_quote(nu.str()) << ',' << model_text
                      << ',' << r.raw.str() << ',' << r.value.str() << ','
                      << (r.covered ? "true" : "false") << ','
                      << unidescent::case_tag_name(r.case_tag) << "\n";
            return kOk;
        }
        ordered_json doc;
        doc["command"] = "mult";
        doc["inputs"] = {{"lambda", lam.str()},
                         {"nu", nu.str()},
                         {"model", model_text},
                         {"mode", model == unidescent::Model::bessel ? "formula" : mode_text}};
        doc["outputs"] = mult_payload(r);
        doc["engine"] = engine_block(timer, state.store);
        std::cout << doc.dump(2) << "\n";
        return kOk;
    }

    // Sweep all nu at one level; defaults to the boundary stratum n - k.
    const int m = sweep_m.value_or(lam.size() - lam.rows());
    if (m < 0 || m >= lam.size())
        throw unidescent::constraint_error("sweep level must satisfy 0 <= m < n");
    std::vector<std::pair<Partition, unidescent::MultiplicityResult>> rows;
    unidescent::for_each_partition(
        m, [&](const Partition& nu) { rows.emplace_back(nu, evaluate(nu)); });
    if (format == "csv") {
        std::cout << "nu,raw,value,covered,case\n";
        for (const auto& [nu, r] : rows)
            std::cout << csv_quote(nu.str()) << ',' << r.raw.str() << ',' << r.value.str() << ','
                      << (r.covered ? "true" : "false") << ','
                      << unidescent::case_tag_name(r.case_tag) << "\n";
        return kOk;
    }
    ordered_json doc;
    doc["command"] = "mult";
    doc["inputs"] = {{"lambda", lam.str()},
                     {"m", m},
                     {"model", model_text},
                     {"mode", model == unidescent::Model::bessel ? "formula" : mode_text}};
    ordered_json sweep_rows = ordered_json::array();
    for (const auto& [nu, r] : rows) {
        ordered_json row;
        row["nu"] = nu.str();
        row.update(mult_payload(r));
        sweep_rows.push_back(std::move(row));
    }
    doc["outputs"] = {{"sweep", std::move(sweep_rows)}};
    doc["engine"] = engine_block(timer, state.store);
    std::cout << doc.dump(2) << "\n";
    return kOk;
}

int cmd_theta(CliState& state, const std::string& lambda_text, int target,
              const std::string& format) {
    if (format != "json")
        throw unidescent::parse_error("theta output is JSON-only");
    Timer timer;
    const Partition lam = Partition::parse(lambda_text);
    const unidescent::ThetaLift lift = unidescent::theta_lift(lam, target);
    ordered_json doc;
    doc["command"] = "theta";
    doc["inputs"] = {{"lambda", lam.str()}, {"target", target}};
    ordered_json components = ordered_json::array();
    for (const Partition& p : lift.components) components.push_back(p.str());
    doc["outputs"] = {{"components", std::move(components)},
                      {"count", lift.components.size()}};
    doc["engine"] = engine_block(timer, state.store);
    std::cout << doc.dump(2) << "\n";
    return kOk;
}

int cmd_chartable(CliState& state, int n, const std::string& format) {
    Timer timer;
    if (n < 0) throw unidescent::constraint_error("chartable: n must be nonnegative");
    auto table = state.store.get(n);
    if (format == "csv") {
        std::cout << "lambda\\mu";
        for (const Partition& mu : table->partitions()) std::cout << ',' << csv_quote(mu.str());
        std::cout << "\n";
        for (int i = 0; i < table->classes(); ++i) {
            std::cout << csv_quote(table->partitions()[static_cast<size_t>(i)].str());
            for (int j = 0; j < table->classes(); ++j)
                std::cout << ',' << table->value(i, j).str();
            std::cout << "\n";
        }
        return kOk;
    }
    ordered_json doc;
    doc["command"] = "chartable";
    doc["inputs"] = {{"n", n}};
    ordered_json classes = ordered_json::array();
    ordered_json centralizers = ordered_json::array();
    for (int j = 0; j < table->classes(); ++j) {
        classes.push_back(table->partitions()[static_cast<size_t>(j)].str());
        centralizers.push_back(table->centralizer(j).str());
    }
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < table->classes(); ++i) {
        ordered_json row;
        row["partition"] = table->partitions()[static_cast<size_t>(i)].str();
        ordered_json values = ordered_json::array();
        for (int j = 0; j < table->classes(); ++j) values.push_back(table->value(i, j).str());
        row["values"] = std::move(values);
        rows.push_back(std::move(row));
    }
    doc["outputs"] = {{"n", n},
                      {"classes", std::move(classes)},
                      {"centralizers", std::move(centralizers)},
                      {"rows", std::move(rows)}};
    doc["engine"] = engine_block(timer, state.store);
    std::cout << doc.dump(2) << "\n";
    return kOk;
}

int cmd_verify(CliState& state, int max_n, const std::string& suites_text) {
    unidescent::VerifyOptions options;
    options.max_n = max_n;
    if (!suites_text.empty()) {
        size_t pos = 0;
        while (pos <= suites_text.size()) {
            size_t comma = suites_text.find(',', pos);
            std::string name = suites_text.substr(
                pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (!name.empty()) options.suites.push_back(name);
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }
    int failures = unidescent::run_verification(state.store, options, std::cout);
    return failures == 0 ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "unidescent: exact Gan-Gross-Prasad multiplicities, first descents and theta\n"
        "lifts of unipotent representations of finite unitary groups U_n(F_q)"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    std::string format = "json";
    std::string cache_text;
    bool no_cache = false;
    app.add_option("--format", format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--cache", cache_text,
                   "character-table cache file (default: $UNIDESCENT_CACHE or "
                   "$XDG_CACHE_HOME/unidescent/chartables.json)")
        ->envname("UNIDESCENT_CACHE");
    app.add_flag("--no-cache", no_cache, "do not read or write the character-table cache");

    auto* descend_cmd = app.add_subcommand("descend", "first descent of a unipotent label");
    std::string partition_text, descend_model = "bessel";
    bool no_verify = false;
    descend_cmd->add_option("--partition", partition_text, "partition, e.g. 3,2,1 or []")
        ->required();
    descend_cmd->add_option("--model", descend_model, "bessel or fj");
    descend_cmd->add_flag("--no-verify-descent", no_verify,
                          "skip the engine sweep that confirms the descent");

    auto* mult_cmd = app.add_subcommand("mult", "multiplicity m(pi_lambda, pi_nu)");
    std::string lambda_text, nu_text, mult_model = "bessel", mode_text = "declarative";
    int mu0_value = -1;
    bool sweep = false;
    int sweep_m_value = -1;
    mult_cmd->add_option("--lambda", lambda_text, "partition of n")->required();
    mult_cmd->add_option("--nu", nu_text, "partition of m");
    mult_cmd->add_option("--model", mult_model, "bessel or fj");
    mult_cmd->add_option("--mode", mode_text, "fj evaluation: declarative or seesaw");
    mult_cmd->add_option("--mu0", mu0_value, "see-saw padding row (>= max(lambda_1, nu_1))");
    mult_cmd->add_flag("--sweep", sweep, "evaluate all nu at one level");
    mult_cmd->add_option("--m", sweep_m_value, "sweep level (default n - rows)");

    auto* theta_cmd = app.add_subcommand("theta", "theta lift to U_{n'}");
    std::string theta_lambda;
    int target = 0;
    theta_cmd->add_option("--lambda", theta_lambda, "partition of n")->required();
    theta_cmd->add_option("--target", target, "target size n'")->required();

    auto* chartable_cmd = app.add_subcommand("chartable", "character table of S_n");
    int chartable_n = 0;
    chartable_cmd->add_option("--n", chartable_n, "symmetric group level")->required();

    auto* verify_cmd = app.add_subcommand("verify", "run the acceptance suites");
    int max_n = 0;
    std::string suites_text;
    verify_cmd->add_option("--max-n", max_n, "cap the suite bounds at this n");
    verify_cmd->add_option("--suites", suites_text, "comma-separated suite names (default all)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParse;
    }

    CliState state;
    if (!cache_text.empty()) state.cache_path = cache_text;
    state.use_cache = !no_cache;

    try {
        state.open_cache();
        int code = kOk;
        if (descend_cmd->parsed())
            code = cmd_descend(state, partition_text, descend_model, no_verify, format);
        else if (mult_cmd->parsed())
            code = cmd_mult(state, lambda_text, nu_text, mult_model, mode_text,
                            mu0_value >= 0 ? std::optional<int>(mu0_value) : std::nullopt, sweep,
                            sweep_m_value >= 0 ? std::optional<int>(sweep_m_value) : std::nullopt,
                            format);
        else if (theta_cmd->parsed())
            code = cmd_theta(state, theta_lambda, target, format);
        else if (chartable_cmd->parsed())
            code = cmd_chartable(state, chartable_n, format);
        else if (verify_cmd->parsed())
            code = cmd_verify(state, max_n, suites_text);
        state.close_cache();
        return code;
    } catch (const unidescent::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParse;
    } catch (const unidescent::cache_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCache;
    } catch (const unidescent::constraint_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConstraint;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kConstraint;
    }
}
