#include "nichols.h"

#include <cstdlib>
#include <cstring>

#include "nichols/degsearch.hpp"
#include "nichols/identities.hpp"
#include "nichols/json_io.hpp"

using namespace nichols;

struct nq_matrix {
    MatrixSpec spec;
};

namespace {

thread_local std::string g_last_error;

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
nq_status guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        return fn();
    } catch (const VerificationFailure& e) {
        g_last_error = e.what();
        return NQ_ERROR_VERIFY;
    } catch (const InputError& e) {
        g_last_error = e.what();
        return NQ_ERROR_INPUT;
    } catch (const Error& e) {
        g_last_error = e.what();
        return NQ_ERROR_INPUT;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return NQ_ERROR_INTERNAL;
    }
}

Side parse_side(const char* side) {
    if (!side || std::strcmp(side, "right") == 0) return Side::Right;
    if (std::strcmp(side, "left") == 0) return Side::Left;
    throw InputError("side must be \"right\" or \"left\"");
}

RelationKind parse_kind(const char* kind) {
    if (!kind || std::strcmp(kind, "prerelations") == 0) return RelationKind::Prerelation;
    if (std::strcmp(kind, "constants") == 0) return RelationKind::Constant;
    throw InputError("kind must be \"prerelations\" or \"constants\"");
}

RelationSet compute_relations(const MatrixSpec& spec, int degree, Side side, RelationKind kind) {
    if (degree < 2) throw InputError("relation degree must be >= 2");
    return kind == RelationKind::Constant ? constants(spec.braiding, degree, side)
                                          : prerelations(spec.braiding, degree, side);
}

void attach_redundancy(const BraidingMatrix& A, const RelationSet& set, json& blocks) {
    auto flags = redundancy_flags(A, set);
    for (auto& bj : blocks) {
        Multidegree md = bj.at("multidegree").get<Multidegree>();
        auto it = flags.find(md);
        if (it != flags.end()) bj["redundant"] = it->second;
    }
}

RelationSet table_or_compute(const MatrixSpec& spec, int degree, const char* table_json) {
    if (!table_json) return compute_relations(spec, degree, Side::Right, RelationKind::Prerelation);
    json table = json::parse(table_json);
    RelationSet set = relation_set_from_json(spec.braiding, table, /*verify=*/true);
    if (set.degree != degree) throw InputError("relation table degree does not match request");
    return set;
}

} // namespace

extern "C" {

const char* nq_last_error(void) { return g_last_error.c_str(); }

void nq_string_free(char* text) { std::free(text); }

nq_status nq_matrix_parse(const char* json_text, int average, nq_matrix** out) {
    return guarded([&]() -> nq_status {
        if (!json_text || !out) throw InputError("null argument");
        json j;
        try {
            j = json::parse(json_text);
        } catch (const std::exception& e) {
            throw InputError(std::string("malformed JSON: ") + e.what());
        }
        *out = new nq_matrix{matrix_from_json(j, average != 0)};
        return NQ_OK;
    });
}

nq_status nq_matrix_load(const char* path, int average, nq_matrix** out) {
    return guarded([&]() -> nq_status {
        if (!path || !out) throw InputError("null argument");
        *out = new nq_matrix{matrix_from_file(path, average != 0)};
        return NQ_OK;
    });
}

void nq_matrix_free(nq_matrix* m) { delete m; }

int nq_matrix_size(const nq_matrix* m) { return m ? m->spec.braiding.size() : 0; }

nq_status nq_relations(const nq_matrix* m, int degree, const char* side, const char* kind,
                       int mark_redundant, char** out_json) {
    return guarded([&]() -> nq_status {
        if (!m || !out_json) throw InputError("null argument");
        RelationSet set = compute_relations(m->spec, degree, parse_side(side), parse_kind(kind));
        json table = relation_set_to_json(m->spec, set);
        if (mark_redundant) attach_redundancy(m->spec.braiding, set, table["blocks"]);
        *out_json = copy_string(table.dump());
        return NQ_OK;
    });
}

nq_status nq_relations_stream(const nq_matrix* m, int degree, const char* side, const char* kind,
                              int mark_redundant, nq_emit_fn emit, void* user) {
    return guarded([&]() -> nq_status {
        if (!m || !emit) throw InputError("null argument");
        RelationSet set = compute_relations(m->spec, degree, parse_side(side), parse_kind(kind));
        json header;
        header["matrix"] = m->spec.echo;
        header["degree"] = set.degree;
        header["side"] = side_str(set.side);
        header["kind"] = kind_str(set.kind);
        header["block_count"] = set.blocks.size();
        emit(header.dump().c_str(), user);
        json blocks = json::array();
        for (const auto& b : set.blocks) blocks.push_back(block_relations_to_json(b));
        if (mark_redundant) attach_redundancy(m->spec.braiding, set, blocks);
        for (const auto& b : blocks) emit(b.dump().c_str(), user);
        return NQ_OK;
    });
}

nq_status nq_relations_verify(const nq_matrix* m, const char* table_json) {
    return guarded([&]() -> nq_status {
        if (!m || !table_json) throw InputError("null argument");
        relation_set_from_json(m->spec.braiding, json::parse(table_json), /*verify=*/true);
        return NQ_OK;
    });
}

nq_status nq_degrees(const nq_matrix* m, int height_max, int all_integers, char** out_json) {
    return guarded([&]() -> nq_status {
        if (!m || !out_json) throw InputError("null argument");
        if (height_max < 2) throw InputError("height bound must be >= 2");
        ThetaForm tf(m->spec.braiding);
        json out;
        try {
            QuadraticForm qf = QuadraticForm::from_theta(tf);
            EnumerationResult e = enumerate_E(qf, height_max, all_integers != 0);
            out["semipositive"] = e.bounded;
            out["points"] = e.points;
            if (e.truncated_at) out["truncated_at"] = *e.truncated_at;
        } catch (const InputError&) {
            // no uniform quadratic-form view: report the exponent sweep alone
            if (all_integers) throw InputError("full-integer sweep needs the quadratic-form view");
            out["semipositive"] = nullptr;
            out["points"] = zero_blocks(tf, height_max);
            out["truncated_at"] = height_max;
        }
        *out_json = copy_string(out.dump());
        return NQ_OK;
    });
}

nq_status nq_dims(const nq_matrix* m, int n_max, char** out_json) {
    return guarded([&]() -> nq_status {
        if (!m || !out_json) throw InputError("null argument");
        if (n_max < 0) throw InputError("n_max must be >= 0");
        *out_json = copy_string(dims_to_json(nichols_dims(m->spec.braiding, n_max)).dump());
        return NQ_OK;
    });
}

nq_status nq_specialize(const nq_matrix* m, int degree, const char* table_json, char** out_json) {
    return guarded([&]() -> nq_status {
        if (!m || !out_json) throw InputError("null argument");
        RelationSet set = table_or_compute(m->spec, degree, table_json);
        json lines = json::array();
        for (const auto& b : set.blocks)
            for (const auto& rel : b.relations) {
                json line;
                line["multidegree"] = b.md;
                line["relation"] = tensor_to_json(rel);
                try {
                    line["specialized"] = classical_to_json(specialize_element(rel));
                } catch (const NotInA1&) {
                    line["error"] = "NotInA1";
                }
                lines.push_back(std::move(line));
            }
        *out_json = copy_string(lines.dump());
        return NQ_OK;
    });
}

nq_status nq_witness(const nq_matrix* m, int degree, int depth, const char* table_json,
                     char** out_json) {
    return guarded([&]() -> nq_status {
        if (!m || !out_json) throw InputError("null argument");
        if (!m->spec.cartan) throw InputError("witness search requires Cartan input");
        if (depth < 1) throw InputError("depth must be >= 1");
        RelationSet set = table_or_compute(m->spec, degree, table_json);
        json lines = json::array();
        for (const auto& b : set.blocks)
            for (const auto& rel : b.relations) {
                json line;
                line["multidegree"] = b.md;
                line["relation"] = tensor_to_json(rel);
                try {
                    ClassicalElement u = specialize_element(rel);
                    line["specialized"] = classical_to_json(u);
                    WitnessResult w = r_minus_witness(*m->spec.cartan, u, depth);
                    line["verdict"] =
                        w.verdict == WitnessVerdict::NotInRadical ? "NotInRadical" : "Inconclusive";
                    if (w.verdict == WitnessVerdict::NotInRadical) {
                        line["chain"] = w.chain;
                        line["terminal"] = classical_to_json(w.terminal);
                    }
                } catch (const NotInA1&) {
                    line["error"] = "NotInA1";
                }
                lines.push_back(std::move(line));
            }
        *out_json = copy_string(lines.dump());
        return NQ_OK;
    });
}

nq_status nq_balance(const nq_matrix* m, int degree, const char* kind, char** out_json) {
    return guarded([&]() -> nq_status {
        if (!m || !out_json) throw InputError("null argument");
        BalanceReport r = balance_check(m->spec.braiding, degree, parse_kind(kind));
        *out_json = copy_string(balance_report_to_json(r).dump());
        if (!r.balanced) {
            g_last_error = "Garside balance check failed";
            return NQ_ERROR_VERIFY;
        }
        return NQ_OK;
    });
}

nq_status nq_check_identities(int n_max, unsigned seed, int trials, char** out_report) {
    return guarded([&]() -> nq_status {
        if (!out_report) throw InputError("null argument");
        if (n_max < 2 || trials < 1) throw InputError("need n_max >= 2 and trials >= 1");
        IdentityReport report = run_identity_suites(n_max, seed, trials);
        *out_report = copy_string(report_summary(report));
        if (!report.ok()) {
            g_last_error = "identity suite found a counterexample";
            return NQ_ERROR_VERIFY;
        }
        return NQ_OK;
    });
}

} // extern "C"
