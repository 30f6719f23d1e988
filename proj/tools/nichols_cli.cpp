// Command-line front end; talks to the library through the C interface only.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "nichols.h"

namespace {

int status_to_exit(nq_status s) {
    switch (s) {
        case NQ_OK: return 0;
        case NQ_ERROR_VERIFY: return 1;
        default: return 2;
    }
}

int fail(nq_status s) {
    std::cerr << "error: " << nq_last_error() << "\n";
    return status_to_exit(s);
}

struct MatrixHandle {
    nq_matrix* m = nullptr;
    ~MatrixHandle() { nq_matrix_free(m); }
};

int load_matrix(const std::string& path, bool averaged, MatrixHandle& handle) {
    nq_status s = nq_matrix_load(path.c_str(), averaged ? 1 : 0, &handle.m);
    return s == NQ_OK ? 0 : fail(s);
}

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit_line(const char* line, void*) {
    std::fputs(line, stdout);
    std::fputc('\n', stdout);
    std::fflush(stdout);
}

int print_result(nq_status s, char* out) {
    if (s != NQ_OK && !out) return fail(s);
    if (out) {
        std::fputs(out, stdout);
        std::fputc('\n', stdout);
        nq_string_free(out);
    }
    if (s != NQ_OK) std::cerr << "error: " << nq_last_error() << "\n";
    return status_to_exit(s);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact generating sets, degree bounds and q->1 specialization\n"
                 "for Nichols algebras of diagonal type"};
    app.require_subcommand(1);

    std::string matrix_path, side = "right", out_path, relations_path;
    bool averaged = false, constants_only = false, all_integers = false, redundancy = false;
    int degree = 2, height = 4, depth = 3, n_max = 4, trials = 5;
    unsigned seed = 1;

    auto add_matrix_opts = [&](CLI::App* cmd) {
        cmd->add_option("--matrix", matrix_path, "matrix JSON file")->required();
        cmd->add_flag("--averaged", averaged, "symmetrize Cartan input entrywise before use");
    };

    CLI::App* rel = app.add_subcommand("relations", "generating set at one degree (JSON lines)");
    add_matrix_opts(rel);
    rel->add_option("--degree", degree, "relation degree (>= 2)")->required();
    rel->add_option("--side", side, "right|left")->check(CLI::IsMember({"right", "left"}));
    rel->add_flag("--constants", constants_only, "full one-sided constants instead of pre-relations");
    rel->add_flag("--redundancy", redundancy,
                  "flag relations already generated by lower-degree output (informational)");
    rel->add_option("--out", out_path, "also write the whole table to a file");

    CLI::App* deg = app.add_subcommand("degrees", "candidate relation degrees via the twist form");
    add_matrix_opts(deg);
    deg->add_option("--max", height, "height bound for the sweep")->required();
    deg->add_flag("--all-integers", all_integers, "list every integral point, not only block indices");

    CLI::App* dims = app.add_subcommand("dims", "graded dimensions of the Nichols algebra");
    add_matrix_opts(dims);
    dims->add_option("--max", n_max, "top degree")->required();

    CLI::App* spec = app.add_subcommand("specialize", "evaluate pre-relations at q = 1");
    add_matrix_opts(spec);
    spec->add_option("--degree", degree, "relation degree")->required();
    spec->add_option("--relations", relations_path, "relation table JSON to load (re-verified)");

    CLI::App* wit = app.add_subcommand("witness", "radical-membership witness search");
    add_matrix_opts(wit);
    wit->add_option("--degree", degree, "relation degree")->required();
    wit->add_option("--depth", depth, "maximal adjoint chain length");
    wit->add_option("--relations", relations_path, "relation table JSON to load (re-verified)");

    CLI::App* chk = app.add_subcommand("check-identities", "seed-driven exact identity suites");
    chk->add_option("--n", n_max, "check all strand counts 2..n")->required();
    chk->add_option("--seed", seed, "random seed")->required();
    chk->add_option("--trials", trials, "random braidings per run");

    CLI11_PARSE(app, argc, argv);

    if (rel->parsed()) {
        MatrixHandle m;
        if (int rc = load_matrix(matrix_path, averaged, m)) return rc;
        const char* kind = constants_only ? "constants" : "prerelations";
        int redundant = redundancy ? 1 : 0;
        nq_status s = nq_relations_stream(m.m, degree, side.c_str(), kind, redundant, emit_line, nullptr);
        if (s != NQ_OK) return fail(s);
        if (!out_path.empty()) {
            char* table = nullptr;
            s = nq_relations(m.m, degree, side.c_str(), kind, redundant, &table);
            if (s != NQ_OK) return fail(s);
            std::ofstream out(out_path);
            out << table << "\n";
            nq_string_free(table);
            if (!out) {
                std::cerr << "error: cannot write " << out_path << "\n";
                return 2;
            }
        }
        return 0;
    }
    if (deg->parsed()) {
        MatrixHandle m;
        if (int rc = load_matrix(matrix_path, averaged, m)) return rc;
        char* out = nullptr;
        nq_status s = nq_degrees(m.m, height, all_integers ? 1 : 0, &out);
        return print_result(s, out);
    }
    if (dims->parsed()) {
        MatrixHandle m;
        if (int rc = load_matrix(matrix_path, averaged, m)) return rc;
        char* out = nullptr;
        nq_status s = nq_dims(m.m, n_max, &out);
        return print_result(s, out);
    }
    if (spec->parsed() || wit->parsed()) {
        MatrixHandle m;
        if (int rc = load_matrix(matrix_path, averaged, m)) return rc;
        std::optional<std::string> table;
        if (!relations_path.empty()) {
            table = read_file(relations_path);
            if (!table) {
                std::cerr << "error: cannot read " << relations_path << "\n";
                return 2;
            }
        }
        const char* table_cstr = table ? table->c_str() : nullptr;
        char* out = nullptr;
        nq_status s = spec->parsed() ? nq_specialize(m.m, degree, table_cstr, &out)
                                     : nq_witness(m.m, degree, depth, table_cstr, &out);
        return print_result(s, out);
    }
    if (chk->parsed()) {
        char* out = nullptr;
        nq_status s = nq_check_identities(n_max, seed, trials, &out);
        return print_result(s, out);
    }
    return 2;
}
