// Command-line front end: constructs Florentine rectangles, synthesizes the
// complementary code families and spreading sets built from them, verifies
// their correlation properties, and reproduces the shipped reference tables.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "florcc/bounds.hpp"
#include "florcc/correlation.hpp"
#include "florcc/cyclotomic.hpp"
#include "florcc/io.hpp"
#include "florcc/seqgen.hpp"
#include "florcc/tables.hpp"

using namespace florcc;

namespace {

int worker_count() {
    if (const char* env = std::getenv("FLORCC_WORKERS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 0;  // library default: hardware concurrency
}

std::string rho4(double rho) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", rho);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string iso_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%FT%TZ", std::gmtime(&t));
    return buf;
}

void emit(const std::string& payload, const std::string& out_path,
          const std::string& summary) {
    if (out_path.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
    } else {
        write_file(out_path, payload);
        if (!summary.empty()) std::cout << summary << '\n';
    }
}

std::string rect_csv(const FlorentineRect& rect) {
    std::string out;
    for (const auto& row : rect.rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out += ',';
            out += std::to_string(row[j]);
        }
        out += '\n';
    }
    return out;
}

struct CommonOpts {
    std::string format = "text";
    std::string out_path;
    bool no_timestamp = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--out", opts.out_path, "Write the result to this path");
    cmd->add_flag("--no-timestamp", opts.no_timestamp,
                  "Omit the generated_at field from JSON reports");
}

// ---- florentine ------------------------------------------------------------

int run_florentine_generate(int n, const CommonOpts& opts) {
    const auto best = best_florentine(n);
    const std::string summary = "F(" + std::to_string(n) + ") = " +
                                std::to_string(best.plan.f) + ", construction " +
                                to_string(best.rect.construction) + " over modulus " +
                                std::to_string(best.rect.source_modulus);
    std::string payload;
    if (opts.format == "json") {
        payload = rect_to_json(best.rect).dump(2) + "\n";
    } else if (opts.format == "csv") {
        payload = rect_csv(best.rect);
    } else {
        payload = summary + "\n" + rect_to_text(best.rect);
    }
    emit(payload, opts.out_path, summary);
    return 0;
}

int run_florentine_check(const std::string& in_path, int k) {
    const FlorentineRect rect = load_rect(in_path);
    if (rect.n < 2) {
        std::cerr << "check: rectangle must have at least two columns\n";
        return 1;
    }
    const int bound = k > 0 ? k : rect.n - 1;
    const auto check = is_tuscan_k(rect, bound);
    if (check.ok) {
        std::cout << "OK: " << rect.row_count() << "x" << rect.n
                  << " rectangle is Tuscan-" << bound << '\n';
        return 0;
    }
    std::cout << "FAIL: " << check.witness->describe() << '\n';
    return 1;
}

int run_florentine_search(int n, int row_limit, std::uint64_t budget,
                          const CommonOpts& opts) {
    const auto result = max_florentine_search(n, row_limit, budget);
    const std::string summary =
        "found " + std::to_string(result.best_rows) + " rows in " +
        std::to_string(result.nodes) + " nodes (" +
        (result.status == SearchStatus::ProvenMaximum ? "proven maximum"
                                                      : "budget exhausted") +
        ")";
    std::string payload;
    if (opts.format == "json") {
        Json j = rect_to_json(result.rect);
        j["proven_maximum"] = result.status == SearchStatus::ProvenMaximum;
        j["nodes"] = result.nodes;
        payload = j.dump(2) + "\n";
    } else if (opts.format == "csv") {
        payload = rect_csv(result.rect);
    } else {
        payload = summary + "\n" + rect_to_text(result.rect);
    }
    emit(payload, opts.out_path, summary);
    return 0;
}

// ---- ccc -------------------------------------------------------------------

std::string ccc_text(const Ccc& ccc) {
    std::string out;
    for (const auto& set : ccc.sets) {
        out += "# set k=" + std::to_string(set.k) + " m=" + std::to_string(set.m) + "\n";
        out += sequence_set_to_text(set);
    }
    return out;
}

int run_ccc_generate(int n, int k, const CommonOpts& opts) {
    const auto family = best_florentine(n).family;
    const Ccc ccc = build_ccc(family, k);
    std::string payload;
    if (opts.format == "json") {
        payload = ccc_to_json(ccc).dump(2) + "\n";
    } else {
        payload = ccc_text(ccc);
    }
    emit(payload, opts.out_path,
         "wrote code family k=" + std::to_string(k) + " over Z_" + std::to_string(n));
    return 0;
}

// Exhaustive within-family check: single peak N^2 at (m1 == m2, tau == 0),
// exact zero everywhere else in the index set.
int verify_ccc(const Ccc& ccc) {
    const int n = ccc.n;
    if (static_cast<int>(ccc.sets.size()) != n) {
        std::cout << "FAIL: expected " << n << " sets, found " << ccc.sets.size() << '\n';
        return 1;
    }
    const CyclotomicField field(n);
    std::uint64_t checked = 0;
    for (int m1 = 0; m1 < n; ++m1) {
        for (int m2 = 0; m2 < n; ++m2) {
            for (int tau = 0; tau < n; ++tau) {
                const auto v = set_correlation(ccc.sets[m1], ccc.sets[m2], tau);
                ++checked;
                if (m1 == m2 && tau == 0) {
                    std::vector<std::int64_t> peak(n, 0);
                    peak[0] = static_cast<std::int64_t>(n) * n;
                    if (v.counts != peak) {
                        std::cout << "FAIL: in-phase peak of set " << m1
                                  << " is not N^2\n";
                        return 1;
                    }
                } else if (!field.is_zero_sum(v.counts)) {
                    std::cout << "FAIL: sets (" << m1 << ", " << m2 << ") at shift "
                              << tau << " correlate to a nonzero value (|R| = "
                              << v.magnitude() << ")\n";
                    return 1;
                }
            }
        }
    }
    std::cout << "OK: " << n << " sets, " << checked
              << " set correlations, ideal complementary behaviour\n";
    return 0;
}

int run_ccc_verify(int n, int k, const std::string& in_path) {
    if (!in_path.empty()) return verify_ccc(load_ccc(in_path));
    const auto family = best_florentine(n).family;
    return verify_ccc(build_ccc(family, k));
}

// ---- qcss ------------------------------------------------------------------

int run_qcss_generate(int n, const CommonOpts& opts) {
    const Qcss q = build_qcss(best_florentine(n).family);
    std::string payload;
    if (opts.format == "json") {
        payload = qcss_to_json(q).dump(2) + "\n";
    } else {
        for (const auto& set : q.sets) {
            payload += "# set k=" + std::to_string(set.k) + " m=" +
                       std::to_string(set.m) + "\n";
            payload += sequence_set_to_text(set);
        }
    }
    emit(payload, opts.out_path,
         "wrote (" + std::to_string(q.set_count()) + ", " + std::to_string(n) + ", " +
             std::to_string(n) + ") spreading family");
    return 0;
}

int run_qcss_analyze(int n, const std::string& mode, int exact_cap,
                     const CommonOpts& opts) {
    if (mode == "exact" && n > exact_cap) {
        std::cerr << "analyze: exact mode is limited to n <= " << exact_cap
                  << " (got n = " << n
                  << "); use --mode float or raise --exact-cap\n";
        return 2;
    }
    const auto best = best_florentine(n);
    const Qcss q = build_qcss(best.family);
    const Backend backend = mode == "exact" ? Backend::Exact : Backend::Float;
    const CorrelationReport corr = delta_max(q, backend, worker_count());
    const BoundsReport bounds =
        optimality_factor(q.set_count(), q.flock_size(), q.length(), corr.delta_max);

    const std::string line = "Z_" + std::to_string(n) + ", " +
                             std::to_string(q.set_count()) + ", " + std::to_string(n) +
                             ", " + std::to_string(n) + ", " + rho4(bounds.rho);
    std::string payload;
    if (opts.format == "json") {
        Json j;
        j["alphabet"] = "Z_" + std::to_string(n);
        j["mode"] = mode;
        j["delta_source"] = "computed";
        j["bounds"] = bounds_report_to_json(bounds);
        j["correlation"] = correlation_report_to_json(corr);
        if (!opts.no_timestamp) j["generated_at"] = iso_timestamp();
        payload = j.dump(2) + "\n";
    } else if (opts.format == "csv") {
        payload = "alphabet,K,M,N,rho\n" + csv_field("Z_" + std::to_string(n)) + "," +
                  std::to_string(q.set_count()) + "," + std::to_string(n) + "," +
                  std::to_string(n) + "," + rho4(bounds.rho) + "\n";
    } else {
        payload = line + "\n";
    }
    emit(payload, opts.out_path, line);
    return 0;
}

// ---- tables ----------------------------------------------------------------

int emit_param_table(const std::vector<TableRowResult>& rows, const std::string& name,
                     const CommonOpts& opts) {
    bool all_ok = true;
    std::string text = "Alphabet, K, M, N, rho (ours | reference)\n";
    std::string csv = "alphabet,K_expected,K_ours,M,N,rho_ours,rho_expected,delta,ok,note\n";
    Json jrows = Json::array();
    for (const auto& row : rows) {
        all_ok = all_ok && row.ok;
        const std::string delta_src = row.delta_computed ? "computed" : "analytic";
        text += row.label + ", " + std::to_string(row.k_ours) + ", " +
                std::to_string(row.n) + ", " + std::to_string(row.n) + ", " +
                rho4(row.rho_ours) + " | " + rho4(row.rho_expected) + " [" + delta_src +
                "]" + (row.ok ? "" : "  << MISMATCH") +
                (row.note.empty() ? "" : "  note: " + row.note) + "\n";
        csv += csv_field(row.label) + "," + std::to_string(row.k_expected) + "," +
               std::to_string(row.k_ours) + "," + std::to_string(row.n) + "," +
               std::to_string(row.n) + "," + rho4(row.rho_ours) + "," +
               rho4(row.rho_expected) + "," + delta_src + "," +
               (row.ok ? "true" : "false") + "," + csv_field(row.note) + "\n";
        Json j;
        j["alphabet"] = row.label;
        j["n"] = row.n;
        j["K_expected"] = row.k_expected;
        j["K_ours"] = row.k_ours;
        j["rho_expected"] = row.rho_expected;
        j["rho_ours"] = row.rho_ours;
        j["delta_source"] = delta_src;
        j["ok"] = row.ok;
        j["note"] = row.note;
        jrows.push_back(std::move(j));
    }
    std::string payload;
    if (opts.format == "json") {
        Json j;
        j["table"] = name;
        j["rows"] = std::move(jrows);
        j["all_ok"] = all_ok;
        if (!opts.no_timestamp) j["generated_at"] = iso_timestamp();
        payload = j.dump(2) + "\n";
    } else if (opts.format == "csv") {
        payload = csv;
    } else {
        payload = text;
    }
    emit(payload, opts.out_path,
         all_ok ? "all rows match" : "some rows mismatch the reference");
    return all_ok ? 0 : 1;
}

int run_tables(const std::string& which, int correlate_cap, const std::string& mode,
               const CommonOpts& opts) {
    const Backend backend = mode == "exact" ? Backend::Exact : Backend::Float;
    const int workers = worker_count();
    if (which == "iv") {
        return emit_param_table(reproduce_even_optimal(correlate_cap, backend, workers),
                                "iv", opts);
    }
    if (which == "v") {
        return emit_param_table(
            reproduce_even_near_optimal(correlate_cap, backend, workers), "v", opts);
    }
    if (which == "vi") {
        const auto rows = compare_spf3(correlate_cap, backend, workers);
        bool all_ok = true;
        std::string text = "Alphabet, K_ours, K_prev, M, N, rho_ours, rho_prev\n";
        std::string csv = "alphabet,K_ours,K_prev,M,N,rho_ours,rho_prev,ok\n";
        Json jrows = Json::array();
        const auto refs = spf3_comparison_rows();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto& row = rows[i];
            const auto& ref = refs[i];
            all_ok = all_ok && row.ok;
            text += row.label + ", " + std::to_string(row.k_ours) + ", " +
                    std::to_string(ref.k_prev) + ", " + std::to_string(row.n) + ", " +
                    std::to_string(row.n) + ", " + rho4(row.rho_ours) + ", " +
                    rho4(ref.rho_prev) + (row.ok ? "" : "  << MISMATCH") + "\n";
            csv += csv_field(row.label) + "," + std::to_string(row.k_ours) + "," +
                   std::to_string(ref.k_prev) + "," + std::to_string(row.n) + "," +
                   std::to_string(row.n) + "," + rho4(row.rho_ours) + "," +
                   rho4(ref.rho_prev) + "," + (row.ok ? "true" : "false") + "\n";
            Json j;
            j["alphabet"] = row.label;
            j["n"] = row.n;
            j["K_ours"] = row.k_ours;
            j["K_prev"] = ref.k_prev;
            j["rho_ours"] = row.rho_ours;
            j["rho_prev"] = ref.rho_prev;
            j["delta_source"] = row.delta_computed ? "computed" : "analytic";
            j["ok"] = row.ok;
            jrows.push_back(std::move(j));
        }
        std::string payload;
        if (opts.format == "json") {
            Json j;
            j["table"] = "vi";
            j["rows"] = std::move(jrows);
            j["all_ok"] = all_ok;
            if (!opts.no_timestamp) j["generated_at"] = iso_timestamp();
            payload = j.dump(2) + "\n";
        } else if (opts.format == "csv") {
            payload = csv;
        } else {
            payload = text;
        }
        emit(payload, opts.out_path, all_ok ? "all rows match" : "some rows mismatch");
        return all_ok ? 0 : 1;
    }
    // iii: known maxima beside what the selection rules achieve.
    const auto rows = compare_known_max_rows();
    bool all_ok = true;
    std::string text = "N, reference F(N), ours\n";
    std::string csv = "n,reference,ours,within\n";
    Json jrows = Json::array();
    for (const auto& row : rows) {
        all_ok = all_ok && row.within;
        text += std::to_string(row.n) + ", " + row.reference + ", " +
                std::to_string(row.ours) + (row.within ? "" : "  << EXCEEDS REFERENCE") +
                "\n";
        csv += std::to_string(row.n) + "," + csv_field(row.reference) + "," +
               std::to_string(row.ours) + "," + (row.within ? "true" : "false") + "\n";
        Json j;
        j["n"] = row.n;
        j["reference"] = row.reference;
        j["ours"] = row.ours;
        j["within"] = row.within;
        jrows.push_back(std::move(j));
    }
    const std::string footnote =
        "note: the near-optimal reference table lists Z_36 with K = 144 (implied "
        "F = 4), but the selection rules give F(36) = 36 since 37 is prime; that "
        "row is reproduced via the four-row pipeline and flagged as inconsistent.";
    std::string payload;
    if (opts.format == "json") {
        Json j;
        j["table"] = "iii";
        j["rows"] = std::move(jrows);
        j["all_ok"] = all_ok;
        j["note"] = footnote;
        if (!opts.no_timestamp) j["generated_at"] = iso_timestamp();
        payload = j.dump(2) + "\n";
    } else if (opts.format == "csv") {
        payload = csv;
    } else {
        payload = text + footnote + "\n";
    }
    emit(payload, opts.out_path, all_ok ? "all rows within reference" : "mismatch");
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Florentine rectangles, complete complementary codes, and "
        "quasi-complementary spreading families over Z_n"};
    app.require_subcommand(1);

    // florentine
    auto* florentine = app.add_subcommand("florentine", "Construct and check rectangles");
    florentine->require_subcommand(1);

    int gen_n = 0;
    CommonOpts gen_opts;
    auto* fgen = florentine->add_subcommand("generate", "Best systematic rectangle");
    fgen->add_option("--n", gen_n, "Number of symbols")->required()
        ->check(CLI::Range(2, 65536));
    add_common(fgen, gen_opts);

    std::string check_in;
    int check_k = 0;
    auto* fcheck = florentine->add_subcommand("check", "Validate a rectangle file");
    fcheck->add_option("--in", check_in, "Rectangle file (JSON or text grid)")
        ->required();
    fcheck->add_option("--k", check_k, "Displacement bound (default n-1)");

    int search_n = 0, search_rows = 0;
    std::uint64_t search_budget = 0;
    CommonOpts search_opts;
    auto* fsearch = florentine->add_subcommand("search", "Backtracking row-count search");
    fsearch->add_option("--n", search_n, "Number of symbols")->required();
    fsearch->add_option("--row-limit", search_rows, "Stop at this many rows");
    fsearch->add_option("--budget", search_budget, "Node budget (0 = unlimited)");
    add_common(fsearch, search_opts);

    // ccc
    auto* ccc = app.add_subcommand("ccc", "Complete complementary code families");
    ccc->require_subcommand(1);

    int cgen_n = 0, cgen_k = 0;
    CommonOpts cgen_opts;
    auto* cgen = ccc->add_subcommand("generate", "Build the family for generator k");
    cgen->add_option("--n", cgen_n, "Alphabet size")->required()
        ->check(CLI::Range(2, 4096));
    cgen->add_option("--k", cgen_k, "Generator index")->required();
    add_common(cgen, cgen_opts);

    int cver_n = 2, cver_k = 0;
    std::string cver_in;
    auto* cver = ccc->add_subcommand("verify", "Exact complementary-property check");
    cver->add_option("--n", cver_n, "Alphabet size (when generating)");
    cver->add_option("--k", cver_k, "Generator index (when generating)");
    cver->add_option("--in", cver_in, "Verify this code file instead of generating");

    // qcss
    auto* qcss = app.add_subcommand("qcss", "Merged spreading families");
    qcss->require_subcommand(1);

    int qgen_n = 0;
    CommonOpts qgen_opts;
    auto* qgen = qcss->add_subcommand("generate", "Build the full family union");
    qgen->add_option("--n", qgen_n, "Alphabet size")->required()
        ->check(CLI::Range(2, 4096));
    add_common(qgen, qgen_opts);

    int qana_n = 0, exact_cap = 24;
    std::string qana_mode = "float";
    CommonOpts qana_opts;
    auto* qana = qcss->add_subcommand("analyze", "Worst correlation and bounds");
    qana->add_option("--n", qana_n, "Alphabet size")->required()
        ->check(CLI::Range(2, 4096));
    qana->add_option("--mode", qana_mode, "Correlation backend")
        ->check(CLI::IsMember({"float", "exact"}));
    qana->add_option("--exact-cap", exact_cap, "Largest n allowed in exact mode");
    add_common(qana, qana_opts);

    // tables
    auto* tables = app.add_subcommand("tables", "Reproduce the reference tables");
    tables->require_subcommand(1);
    int correlate_cap = 22;
    std::string tbl_mode = "float";
    CommonOpts tbl_opts;
    std::string which;
    for (const char* name : {"iii", "iv", "v", "vi"}) {
        auto* t = tables->add_subcommand(name, "Reference table " + std::string(name));
        t->callback([&which, name] { which = name; });
        t->add_option("--correlate-cap", correlate_cap,
                      "Run the full correlation scan for rows with n at most this");
        t->add_option("--mode", tbl_mode, "Correlation backend")
            ->check(CLI::IsMember({"float", "exact"}));
        add_common(t, tbl_opts);
    }

    CLI11_PARSE(app, argc, argv);

    try {
        if (fgen->parsed()) return run_florentine_generate(gen_n, gen_opts);
        if (fcheck->parsed()) return run_florentine_check(check_in, check_k);
        if (fsearch->parsed()) {
            return run_florentine_search(search_n, search_rows, search_budget,
                                         search_opts);
        }
        if (cgen->parsed()) return run_ccc_generate(cgen_n, cgen_k, cgen_opts);
        if (cver->parsed()) return run_ccc_verify(cver_n, cver_k, cver_in);
        if (qgen->parsed()) return run_qcss_generate(qgen_n, qgen_opts);
        if (qana->parsed()) {
            return run_qcss_analyze(qana_n, qana_mode, exact_cap, qana_opts);
        }
        if (!which.empty()) return run_tables(which, correlate_cap, tbl_mode, tbl_opts);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
