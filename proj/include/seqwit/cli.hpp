// cli.hpp
// Command execution for the seqwit tool. Argument parsing lives in
// tools/seqwit.cpp; everything here is callable directly from tests.
//
// Output tables are rendered as CSV (header row, '.' decimal point, 12
// significant digits) or as JSON ({"meta": {...}, "rows": [{column: value}]}).
// Identical configs produce byte-identical files.

#pragma once

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <fmt/format.h>
#include "json.hpp"

#include "seqwit/cascade.hpp"
#include "seqwit/correlations.hpp"
#include "seqwit/verify.hpp"
#include "seqwit/witness.hpp"

namespace seqwit::cli {

inline constexpr std::string_view version = "1.0.0";
inline constexpr std::string_view output_dir_env = "SEQWIT_OUTPUT_DIR";

enum exit_code : int { ok = 0, check_failed = 1, bad_config = 2, invariant_breach = 3 };

class config_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class command { thresholds, max_bobs, sweep_entanglement, sweep_lambda, discord_final, verify };
enum class format { csv, json };

inline std::string_view to_string(command c) {
    switch (c) {
    case command::thresholds: return "thresholds";
    case command::max_bobs: return "max-bobs";
    case command::sweep_entanglement: return "sweep-entanglement";
    case command::sweep_lambda: return "sweep-lambda";
    case command::discord_final: return "discord-final";
    case command::verify: return "verify";
    }
    return "";
}

inline std::string_view to_string(final_convention c) {
    switch (c) {
    case final_convention::all_threshold: return "all-threshold";
    case final_convention::last_sharp: return "last-sharp";
    case final_convention::post_alice: return "post-alice";
    }
    return "";
}

inline std::optional<final_convention> parse_convention(std::string_view s) {
    for (auto c : {final_convention::all_threshold, final_convention::last_sharp, final_convention::post_alice})
        if (to_string(c) == s) return c;
    return std::nullopt;
}

// start:stop:step, endpoints inclusive within 1e-12.
struct grid_spec {
    double start = 0.0;
    double stop = 0.0;
    double step = 1.0;

    std::string str() const { return fmt::format("{:.12g}:{:.12g}:{:.12g}", start, stop, step); }

    std::vector<double> values() const {
        std::vector<double> out;
        const double span = (stop - start) / step;
        const auto count = static_cast<long>(std::floor(span + 1e-12 / step)) + 1;
        for (long k = 0; k < count; ++k) out.push_back(start + static_cast<double>(k) * step);
        return out;
    }
};

inline grid_spec parse_grid(std::string_view text) {
    std::vector<double> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t next = std::min(text.find(':', pos), text.size());
        const std::string piece(text.substr(pos, next - pos));
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(piece, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (piece.empty() || used != piece.size() || !std::isfinite(v))
            throw config_error(fmt::format("grid '{}' must be start:stop:step", text));
        parts.push_back(v);
        pos = next + 1;
    }
    if (parts.size() != 3) throw config_error(fmt::format("grid '{}' must be start:stop:step", text));
    grid_spec g{parts[0], parts[1], parts[2]};
    if (!(g.step > 0.0)) throw config_error(fmt::format("grid '{}' needs a positive step", text));
    if (g.stop < g.start - 1e-12) throw config_error(fmt::format("grid '{}' is empty", text));
    return g;
}

struct run_config {
    command cmd = command::thresholds;
    double entanglement = 1.0;
    grid_spec lambda_grid{0.30, 0.70, 0.01};
    grid_spec entanglement_grid{0.0, 1.0, 0.05};
    double epsilon = 1e-9;
    std::string output_path;   // empty: $SEQWIT_OUTPUT_DIR/<command>.<ext>, else stdout
    format output_format = format::csv;
    std::uint64_t seed = 20190101;
    std::optional<final_convention> convention;   // unset: every convention

    void validate() const {
        if (!(entanglement >= 0.0 && entanglement <= 1.0))
            throw config_error(fmt::format("entanglement {} outside [0, 1]", entanglement));
        if (!(epsilon > 0.0)) throw config_error("epsilon must be positive");
        for (double l : lambda_grid.values())
            if (!(l > 0.0 && l <= 1.0 + 1e-12)) throw config_error(fmt::format("lambda {} outside (0, 1]", l));
        for (double e : entanglement_grid.values())
            if (!(e >= -1e-12 && e <= 1.0 + 1e-12))
                throw config_error(fmt::format("entanglement {} outside [0, 1]", e));
    }
};

using cell = std::variant<double, long, std::string>;

struct table {
    std::vector<std::string> columns;
    std::vector<std::vector<cell>> rows;
    int status = exit_code::ok;
};

inline std::string format_number(double v) {
    if (v == 0.0) v = 0.0;   // drops the sign of -0
    return fmt::format("{:.12g}", v);
}

inline std::string render_cell(const cell& c) {
    if (const auto* d = std::get_if<double>(&c)) return format_number(*d);
    if (const auto* i = std::get_if<long>(&c)) return std::to_string(*i);
    return std::get<std::string>(c);
}

inline std::string render_csv(const table& t) {
    std::string out;
    for (std::size_t j = 0; j < t.columns.size(); ++j) out += (j ? "," : "") + t.columns[j];
    out += '\n';
    for (const auto& row : t.rows) {
        for (std::size_t j = 0; j < row.size(); ++j) out += (j ? "," : "") + render_cell(row[j]);
        out += '\n';
    }
    return out;
}

inline nlohmann::ordered_json meta_of(const run_config& cfg) {
    nlohmann::ordered_json m;
    m["tool"] = "seqwit";
    m["version"] = version;
    m["command"] = to_string(cfg.cmd);
    nlohmann::ordered_json c;
    c["entanglement"] = std::stod(format_number(cfg.entanglement));
    c["lambda_grid"] = cfg.lambda_grid.str();
    c["entanglement_grid"] = cfg.entanglement_grid.str();
    c["epsilon"] = std::stod(format_number(cfg.epsilon));
    c["seed"] = cfg.seed;
    c["convention"] = cfg.convention ? std::string(to_string(*cfg.convention)) : std::string("all");
    m["config"] = c;
    return m;
}

inline std::string render_json(const table& t, const run_config& cfg) {
    nlohmann::ordered_json doc;
    doc["meta"] = meta_of(cfg);
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        nlohmann::ordered_json obj;
        for (std::size_t j = 0; j < row.size(); ++j) {
            const auto& c = row[j];
            if (const auto* d = std::get_if<double>(&c))
                obj[t.columns[j]] = std::stod(format_number(*d));
            else if (const auto* i = std::get_if<long>(&c))
                obj[t.columns[j]] = *i;
            else
                obj[t.columns[j]] = std::get<std::string>(c);
        }
        rows.push_back(std::move(obj));
    }
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
}

inline table thresholds_table(const run_config& cfg) {
    table t{{"stage", "threshold", "witness_below", "witness_above", "cumulative_shrink"}, {}};
    const double ab = entanglement_to_ab(cfg.entanglement);
    const auto rep = max_bobs_unequal(ab);
    std::vector<double> schedule;
    double shrink = 1.0;
    for (std::size_t i = 0; i < rep.thresholds.size(); ++i) {
        const double th = rep.thresholds[i];
        schedule.push_back(std::max(th - cfg.epsilon, 1e-300));
        const double below = e_n_analytic(ab, schedule);
        schedule.back() = std::min(th + cfg.epsilon, 1.0);
        const double above = e_n_analytic(ab, schedule);
        schedule.back() = th;
        shrink *= shrink_factor(th);
        t.rows.push_back({static_cast<long>(i + 1), th, below, above, shrink});
    }
    return t;
}

inline table max_bobs_table(const run_config& cfg) {
    const double ab = entanglement_to_ab(cfg.entanglement);
    const auto rep = max_bobs_unequal(ab);
    return {{"entanglement_ebits", "ab", "max_bobs"}, {{cfg.entanglement, ab, static_cast<long>(rep.max_bobs)}}};
}

inline table sweep_entanglement_table(const run_config& cfg) {
    table t{{"entanglement_ebits", "max_bobs"}, {}};
    auto grid = cfg.entanglement_grid.values();
    for (auto& e : grid) e = std::clamp(e, 0.0, 1.0);
    for (const auto& p : sweep_entanglement(grid)) t.rows.push_back({p.entanglement, static_cast<long>(p.max_bobs)});
    return t;
}

inline table sweep_lambda_table(const run_config& cfg) {
    table t{{"lambda", "max_bobs"}, {}};
    const double ab = entanglement_to_ab(cfg.entanglement);
    auto grid = cfg.lambda_grid.values();
    for (auto& l : grid) l = std::min(l, 1.0);
    for (const auto& p : sweep_lambda(ab, grid)) t.rows.push_back({p.lambda, static_cast<long>(p.max_bobs)});
    return t;
}

inline table discord_final_table(const run_config& cfg) {
    table t{{"convention", "discord_bits", "classical_correlation_bits", "mutual_information_bits",
             "best_direction_x", "best_direction_y", "best_direction_z", "method", "negativity",
             "min_pt_eigenvalue"},
            {}};
    const double ab = entanglement_to_ab(cfg.entanglement);
    std::vector<final_convention> convs;
    if (cfg.convention)
        convs.push_back(*cfg.convention);
    else
        convs = {final_convention::all_threshold, final_convention::last_sharp, final_convention::post_alice};
    for (auto conv : convs) {
        const auto rho = cascade_final_state(ab, conv);
        const auto d = discord(rho, side::bob);
        t.rows.push_back({std::string(to_string(conv)), d.discord, d.classical_correlation, d.mutual_information,
                          d.best_direction[0], d.best_direction[1], d.best_direction[2],
                          std::string(d.method == discord_method::closed_form ? "closed_form" : "numeric"),
                          negativity(rho), min_partial_transpose_eigenvalue(rho)});
    }
    return t;
}

inline table verify_table(const run_config& cfg) {
    verify_options opt;
    opt.seed = cfg.seed;
    opt.epsilon = cfg.epsilon;
    table t{{"check", "passed", "failed", "worst"}, {}};
    for (const auto& r : run_verification(opt)) {
        t.rows.push_back({r.name, r.passed, r.failed, r.worst});
        if (!r.ok()) t.status = exit_code::check_failed;
    }
    return t;
}

inline table build_table(const run_config& cfg) {
    switch (cfg.cmd) {
    case command::thresholds: return thresholds_table(cfg);
    case command::max_bobs: return max_bobs_table(cfg);
    case command::sweep_entanglement: return sweep_entanglement_table(cfg);
    case command::sweep_lambda: return sweep_lambda_table(cfg);
    case command::discord_final: return discord_final_table(cfg);
    case command::verify: return verify_table(cfg);
    }
    throw config_error("unknown command");
}

inline std::string render(const table& t, const run_config& cfg) {
    return cfg.output_format == format::json ? render_json(t, cfg) : render_csv(t);
}

// Writes to a sibling temp file and renames it into place.
inline void write_atomic(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string());
        out << content;
        if (!out.flush()) throw std::runtime_error("cannot write " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

inline std::optional<std::filesystem::path> resolve_output(const run_config& cfg) {
    if (!cfg.output_path.empty()) return std::filesystem::path(cfg.output_path);
    if (const char* dir = std::getenv(output_dir_env.data()); dir && *dir)
        return std::filesystem::path(dir) /
               fmt::format("{}.{}", to_string(cfg.cmd), cfg.output_format == format::json ? "json" : "csv");
    return std::nullopt;
}

// Runs one command and emits its table. Returns the process exit status.
inline int run(const run_config& cfg, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    table t;
    try {
        cfg.validate();
        t = build_table(cfg);
    } catch (const config_error& e) {
        err << "seqwit: " << e.what() << '\n';
        return exit_code::bad_config;
    } catch (const seqwit::error& e) {
        err << "seqwit: internal invariant breached: " << e.what() << '\n';
        return exit_code::invariant_breach;
    }

    const std::string text = render(t, cfg);
    if (const auto path = resolve_output(cfg)) {
        try {
            write_atomic(*path, text);
        } catch (const std::exception& e) {
            err << "seqwit: " << e.what() << '\n';
            return exit_code::bad_config;
        }
    } else {
        out << text;
    }
    if (cfg.cmd == command::verify) {
        long passed = 0;
        long failed = 0;
        for (const auto& row : t.rows) {
            passed += std::get<long>(row[1]);
            failed += std::get<long>(row[2]);
        }
        err << fmt::format("verify: {} passed, {} failed\n", passed, failed);
    }
    return t.status;
}

} // namespace seqwit::cli
