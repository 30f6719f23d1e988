#include "nichols/json_io.hpp"

#include <cctype>
#include <fstream>

namespace nichols {

namespace {

// recursive-descent parser for the canonical scalar text
class ScalarParser {
public:
    explicit ScalarParser(const std::string& text) : text_(text) {}

    Scalar parse() {
        skip_spaces();
        Scalar result;
        if (peek() == '(') {
            Laurent num = parse_parenthesized();
            skip_spaces();
            expect('/');
            Laurent den = parse_parenthesized();
            result = Scalar(num, den);
        } else {
            result = Scalar(parse_poly(), Laurent(1));
        }
        skip_spaces();
        if (pos_ != text_.size()) fail("trailing characters");
        return result;
    }

private:
    Laurent parse_parenthesized() {
        skip_spaces();
        expect('(');
        Laurent p = parse_poly();
        skip_spaces();
        expect(')');
        return p;
    }

    Laurent parse_poly() {
        Laurent p;
        bool negative = false;
        skip_spaces();
        if (peek() == '-') {
            negative = true;
            ++pos_;
        } else if (peek() == '+') {
            ++pos_;
        }
        while (true) {
            p += parse_term(negative);
            skip_spaces();
            char c = peek();
            if (c == '+') {
                negative = false;
                ++pos_;
            } else if (c == '-') {
                negative = true;
                ++pos_;
            } else {
                break;
            }
        }
        return p;
    }

    Laurent parse_term(bool negative) {
        skip_spaces();
        Rational coeff = 1;
        bool have_coeff = false;
        if (std::isdigit(peek())) {
            coeff = parse_rational();
            have_coeff = true;
            skip_spaces();
            if (peek() == '*') {
                ++pos_;
                skip_spaces();
            } else {
                return Laurent::term(negative ? Rational(-coeff) : coeff, 0);
            }
        }
        if (peek() != 'q') {
            if (have_coeff) fail("expected q after coefficient");
            fail("expected a term");
        }
        long exp = parse_q_power();
        return Laurent::term(negative ? Rational(-coeff) : coeff, exp);
    }

    long parse_q_power() {
        expect('q');
        if (peek() != '^') return 2; // bare q
        ++pos_;
        if (peek() == '{') {
            ++pos_;
            long e = parse_integer();
            expect('/');
            expect('2');
            expect('}');
            return e; // already a t exponent
        }
        return 2 * parse_integer();
    }

    Rational parse_rational() {
        std::string digits = parse_digits();
        if (peek() == '/') {
            size_t save = pos_;
            ++pos_;
            if (std::isdigit(peek())) {
                std::string den = parse_digits();
                Rational r(digits + "/" + den);
                r.canonicalize();
                return r;
            }
            pos_ = save;
        }
        return Rational(digits);
    }

    long parse_integer() {
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        }
        long v = std::stol(parse_digits());
        return neg ? -v : v;
    }

    std::string parse_digits() {
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        return text_.substr(start, pos_ - start);
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    void skip_spaces() {
        while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
    }

    [[noreturn]] void fail(const std::string& why) {
        throw InputError("bad scalar \"" + text_ + "\" at " + std::to_string(pos_) + ": " + why);
    }

    const std::string& text_;
    size_t pos_ = 0;
};

std::vector<std::vector<long>> long_matrix(const json& j, const std::string& key) {
    if (!j.is_array() || j.empty()) throw InputError(key + " must be a non-empty array of rows");
    std::vector<std::vector<long>> m;
    for (const auto& row : j) {
        if (!row.is_array()) throw InputError(key + " rows must be arrays");
        std::vector<long> r;
        for (const auto& e : row) {
            if (!e.is_number_integer()) throw InputError(key + " entries must be integers");
            r.push_back(e.get<long>());
        }
        m.push_back(std::move(r));
    }
    return m;
}

} // namespace

Scalar scalar_from_string(const std::string& text) { return ScalarParser(text).parse(); }

json tensor_to_json(const TensorElement& x) {
    json terms = json::array();
    for (const auto& [w, c] : x.terms()) {
        json term;
        term["word"] = w;
        term["coeff"] = c.str();
        terms.push_back(std::move(term));
    }
    return terms;
}

TensorElement tensor_from_json(const json& j) {
    if (!j.is_array()) throw InputError("tensor element must be an array of terms");
    TensorElement x;
    for (const auto& term : j) {
        Word w = term.at("word").get<Word>();
        x.add_term(w, scalar_from_string(term.at("coeff").get<std::string>()));
    }
    return x;
}

json classical_to_json(const ClassicalElement& x) {
    json terms = json::array();
    for (const auto& [w, c] : x.terms()) {
        json term;
        term["fword"] = w.f;
        if (!w.h.empty()) term["hword"] = w.h;
        term["coeff"] = rational_str(c);
        terms.push_back(std::move(term));
    }
    return terms;
}

MatrixSpec matrix_from_json(const json& j, bool average_requested) {
    if (!j.is_object()) throw InputError("matrix file must hold a JSON object");
    const bool has_cartan = j.contains("cartan");
    const bool has_braiding = j.contains("braiding_exponents_doubled");
    if (has_cartan == has_braiding)
        throw InputError("matrix file needs exactly one of \"cartan\" or \"braiding_exponents_doubled\"");

    json echo = j;
    echo["averaged"] = average_requested;
    if (has_braiding) {
        if (average_requested) throw InputError("averaging requires Cartan input");
        auto exps = long_matrix(j["braiding_exponents_doubled"], "braiding_exponents_doubled");
        return MatrixSpec{BraidingMatrix::from_t_exponents(exps), std::nullopt, false, std::move(echo)};
    }
    CartanMatrix cartan(long_matrix(j["cartan"], "cartan"));
    if (average_requested) {
        RationalMatrix avg = average(cartan);
        BraidingMatrix braiding =
            BraidingMatrix::from_cartan(avg, CartanSide::Negative, MatrixOrigin::Averaged);
        return MatrixSpec{std::move(braiding), std::move(avg), true, std::move(echo)};
    }
    return MatrixSpec{BraidingMatrix::from_cartan(cartan, CartanSide::Negative),
                      RationalMatrix(cartan), false, std::move(echo)};
}

MatrixSpec matrix_from_file(const std::string& path, bool average) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open matrix file: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw InputError("malformed JSON in " + path + ": " + e.what());
    }
    return matrix_from_json(j, average);
}

json block_relations_to_json(const BlockRelations& b) {
    json out;
    out["multidegree"] = b.md;
    json rels = json::array();
    for (const auto& r : b.relations) rels.push_back(tensor_to_json(r));
    out["relations"] = std::move(rels);
    json wits = json::array();
    for (const auto& w : b.witnesses) wits.push_back(tensor_to_json(w));
    out["witnesses"] = std::move(wits);
    return out;
}

json relation_set_to_json(const MatrixSpec& matrix, const RelationSet& set) {
    json out;
    out["matrix"] = matrix.echo;
    out["degree"] = set.degree;
    out["side"] = side_str(set.side);
    out["kind"] = kind_str(set.kind);
    json blocks = json::array();
    for (const auto& b : set.blocks) blocks.push_back(block_relations_to_json(b));
    out["blocks"] = std::move(blocks);
    return out;
}

RelationSet relation_set_from_json(const BraidingMatrix& A, const json& j, bool verify) {
    RelationSet set;
    std::string side = j.at("side").get<std::string>();
    set.side = side == "left" ? Side::Left : Side::Right;
    std::string kind = j.value("kind", "prerelation");
    set.kind = kind == "constant"  ? RelationKind::Constant
               : kind == "degree2" ? RelationKind::Degree2
                                   : RelationKind::Prerelation;
    set.degree = j.at("degree").get<int>();
    const bool right = set.side == Side::Right;
    for (const auto& bj : j.at("blocks")) {
        BlockRelations b;
        b.md = bj.at("multidegree").get<Multidegree>();
        auto blk = block(A.size(), b.md);
        std::vector<std::vector<Scalar>> coords;
        for (const auto& rj : bj.at("relations")) {
            TensorElement rel = tensor_from_json(rj);
            if (verify) {
                BraidOperator op =
                    make_operator(right ? OperatorName::Tn : OperatorName::Un, set.degree);
                if (!apply_operator(A, op, rel).is_zero())
                    throw VerificationFailure("loaded relation fails re-verification");
            }
            coords.push_back(blk->coordinates(rel));
            b.relations.push_back(std::move(rel));
        }
        for (const auto& wj : bj.value("witnesses", json::array()))
            b.witnesses.push_back(tensor_from_json(wj));
        if (verify && set.kind == RelationKind::Prerelation) {
            // each relation must be the Dynkin image of its recorded witness,
            // and the witness must survive the cutoff
            if (b.witnesses.size() != b.relations.size())
                throw VerificationFailure("loaded block lacks a witness per relation");
            BraidOperator dynkin =
                make_operator(right ? OperatorName::Pn : OperatorName::Qn, set.degree);
            BraidOperator cutoff = make_operator(right ? OperatorName::Xmn : OperatorName::XmnLeft,
                                                 set.degree, set.degree - 2);
            for (size_t k = 0; k < b.relations.size(); ++k) {
                if (apply_operator(A, dynkin, b.witnesses[k]) != b.relations[k])
                    throw VerificationFailure("loaded witness does not map to its relation");
                if (apply_operator(A, cutoff, b.witnesses[k]).is_zero())
                    throw VerificationFailure("loaded witness vanishes under the cutoff");
            }
        }
        b.span = span_of(blk->dim(), coords);
        set.blocks.push_back(std::move(b));
    }
    return set;
}

json balance_report_to_json(const BalanceReport& r) {
    json out;
    out["degree"] = r.degree;
    out["kind"] = kind_str(r.kind);
    out["balanced"] = r.balanced;
    json blocks = json::array();
    for (const auto& b : r.blocks) {
        json bj;
        bj["multidegree"] = b.md;
        bj["dim_right"] = b.dim_right;
        bj["dim_left"] = b.dim_left;
        bj["garside_maps_onto"] = b.garside_maps_onto;
        blocks.push_back(std::move(bj));
    }
    out["blocks"] = std::move(blocks);
    return out;
}

json dims_to_json(const std::vector<GradedDims>& dims) {
    json out = json::array();
    for (const auto& g : dims) {
        json gj;
        gj["degree"] = g.degree;
        gj["total"] = g.total;
        json blocks = json::array();
        for (const auto& [md, rank] : g.block_ranks) {
            json bj;
            bj["multidegree"] = md;
            bj["rank"] = rank;
            blocks.push_back(std::move(bj));
        }
        gj["blocks"] = std::move(blocks);
        out.push_back(std::move(gj));
    }
    return out;
}

} // namespace nichols
