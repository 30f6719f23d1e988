#include "nichols/relations.hpp"

#include <algorithm>

#include "nichols/parallel.hpp"

namespace nichols {

const char* side_str(Side s) { return s == Side::Right ? "right" : "left"; }

const char* kind_str(RelationKind k) {
    switch (k) {
        case RelationKind::Degree2: return "degree2";
        case RelationKind::Constant: return "constant";
        case RelationKind::Prerelation: return "prerelation";
    }
    return "?";
}

int RelationSet::total_dim() const {
    int d = 0;
    for (const auto& b : blocks) d += b.span.dim();
    return d;
}

std::vector<TensorElement> RelationSet::all_relations() const {
    std::vector<TensorElement> r;
    for (const auto& b : blocks) r.insert(r.end(), b.relations.begin(), b.relations.end());
    return r;
}

RelationSet degree2_relations(const BraidingMatrix& A) {
    RelationSet set;
    set.side = Side::Right;
    set.kind = RelationKind::Degree2;
    set.degree = 2;
    const int N = A.size();
    for (int s = 1; s <= N; ++s)
        for (int t = s; t <= N; ++t) {
            if ((A.at(s - 1, t - 1) * A.at(t - 1, s - 1)) != Scalar(1)) continue;
            BlockRelations br;
            TensorElement rel;
            if (s == t) {
                // on the diagonal q_ss^2 = 1 only cuts the kernel when q_ss = -1
                if (A.at(s - 1, s - 1) != Scalar(-1)) continue;
                rel = TensorElement::monomial(Word{s, s});
            } else {
                rel = TensorElement::monomial(Word{s, t}) -
                      A.at(s - 1, t - 1) * TensorElement::monomial(Word{t, s});
            }
            Multidegree md(N, 0);
            ++md[s - 1];
            ++md[t - 1];
            auto blk = block(N, md);
            br.md = md;
            br.relations.push_back(rel);
            br.span = span_of(blk->dim(), {blk->coordinates(rel)});
            set.blocks.push_back(std::move(br));
        }
    std::sort(set.blocks.begin(), set.blocks.end(),
              [](const BlockRelations& a, const BlockRelations& b) { return a.md < b.md; });
    return set;
}

namespace {

/// Rectangular matrix of a one-letter differential restricted to a block.
ScalarMatrix differential_matrix(const BraidingMatrix& A, int i, Side side, const Block& b) {
    const int N = A.size();
    Multidegree target_md = b.md();
    if (target_md[i - 1] == 0) return ScalarMatrix(0, b.dim());
    --target_md[i - 1];
    auto target = block(N, target_md);
    ScalarMatrix M(target->dim(), b.dim());
    for (int j = 0; j < b.dim(); ++j) {
        TensorElement x = TensorElement::monomial(b.basis()[j]);
        TensorElement image = side == Side::Right ? dR(A, i, x) : dL(A, i, x);
        auto coords = target->coordinates(image);
        for (int r = 0; r < target->dim(); ++r) M.at(r, j) = coords[r];
    }
    return M;
}

Subspace differential_kernel_intersection(const BraidingMatrix& A, Side side, const Block& b) {
    Subspace result = kernel(ScalarMatrix(0, b.dim())); // full space
    for (int i = 1; i <= A.size(); ++i) {
        ScalarMatrix M = differential_matrix(A, i, side, b);
        if (M.rows() == 0) continue;
        result = intersect(result, kernel(M));
        if (result.dim() == 0) break;
    }
    return result;
}

// normalization of emitted representatives: coefficient 1 on the
// lexicographically largest support word (the leading monomial)
Scalar leading_coefficient(const TensorElement& x) {
    return x.terms().rbegin()->second;
}

std::vector<TensorElement> independent_images(const Block& blk, const BraidingMatrix& A,
                                              const BraidOperator& dynkin,
                                              const std::vector<std::vector<Scalar>>& witnesses,
                                              std::vector<TensorElement>& kept_witnesses,
                                              Subspace& image_span) {
    std::vector<TensorElement> relations;
    for (const auto& wcoords : witnesses) {
        TensorElement witness = blk.from_coordinates(wcoords);
        TensorElement rel = apply_operator(A, dynkin, witness);
        if (rel.is_zero()) continue;
        auto coords = blk.coordinates(rel);
        if (image_span.contains(coords)) continue;
        image_span = join(image_span, span_of(blk.dim(), {coords}));
        // rescale the pair together so the Dynkin image of the stored witness
        // stays the stored relation
        Scalar scale = leading_coefficient(rel).inverse();
        relations.push_back(rel * scale);
        kept_witnesses.push_back(witness * scale);
    }
    return relations;
}

} // namespace

RelationSet constants(const BraidingMatrix& A, int n, Side side) {
    if (n < 2) throw InputError("constants need degree >= 2");
    RelationSet set;
    set.side = side;
    set.kind = RelationKind::Constant;
    set.degree = n;
    const int N = A.size();
    auto mds = multidegrees_of(N, n);
    std::vector<BlockRelations> results(mds.size());
    parallel_for(mds.size(), [&](size_t idx) {
        auto blk = block(N, mds[idx]);
        BraidOperator op = make_operator(side == Side::Right ? OperatorName::Tn : OperatorName::Un, n);
        Subspace ker_op = kernel(operator_matrix(A, op, *blk));
        Subspace ker_diff = differential_kernel_intersection(A, side, *blk);
        if (!(ker_op == ker_diff))
            throw VerificationFailure("kernel of T_n/U_n differs from differential kernels");
        BlockRelations br;
        br.md = mds[idx];
        br.span = ker_op;
        for (const auto& v : ker_op.basis()) {
            TensorElement rel = blk->from_coordinates(v);
            br.relations.push_back(rel * leading_coefficient(rel).inverse());
        }
        results[idx] = std::move(br);
    });
    for (auto& br : results)
        if (br.span.dim() > 0) set.blocks.push_back(std::move(br));
    return set;
}

RelationSet prerelations(const BraidingMatrix& A, int n, Side side) {
    if (n < 2) throw InputError("pre-relations need degree >= 2");
    RelationSet set;
    set.side = side;
    set.kind = RelationKind::Prerelation;
    set.degree = n;
    const int N = A.size();
    auto mds = multidegrees_of(N, n);
    std::vector<BlockRelations> results(mds.size());
    parallel_for(mds.size(), [&](size_t idx) {
        const Multidegree& md = mds[idx];
        // only theta-fixed blocks can carry pre-relations
        if (theta_scalar(A, md) != Scalar(1)) return;
        auto blk = block(N, md);
        const bool right = side == Side::Right;
        BraidOperator annihilator = make_operator(right ? OperatorName::TnPrime : OperatorName::UnPrime, n);
        BraidOperator cutoff = make_operator(right ? OperatorName::Xmn : OperatorName::XmnLeft, n, n - 2);
        BraidOperator dynkin = make_operator(right ? OperatorName::Pn : OperatorName::Qn, n);
        BraidOperator check = make_operator(right ? OperatorName::Tn : OperatorName::Un, n);

        Subspace K = kernel(operator_matrix(A, annihilator, *blk));
        if (K.dim() == 0) return;
        Subspace K0 = intersect(K, kernel(operator_matrix(A, cutoff, *blk)));
        Subspace complement = complement_in(K, K0);
        if (complement.dim() == 0) return;

        BlockRelations br;
        br.md = md;
        Subspace image_span(blk->dim());
        br.relations = independent_images(*blk, A, dynkin, complement.basis(), br.witnesses, image_span);
        br.span = image_span;
        for (const auto& rel : br.relations)
            if (!apply_operator(A, check, rel).is_zero())
                throw VerificationFailure("pre-relation not annihilated by the differential element");
        results[idx] = std::move(br);
    });
    for (auto& br : results)
        if (br.span.dim() > 0) set.blocks.push_back(std::move(br));
    return set;
}

BalanceReport balance_check(const BraidingMatrix& A, int n, RelationKind kind) {
    BalanceReport report;
    report.degree = n;
    report.kind = kind;
    auto compute = [&](Side side) {
        return kind == RelationKind::Constant ? constants(A, n, side) : prerelations(A, n, side);
    };
    RelationSet right = compute(Side::Right);
    RelationSet left = compute(Side::Left);
    BraidOperator garside = make_operator(OperatorName::Garside, n);
    const int N = A.size();

    std::map<Multidegree, const BlockRelations*> left_by_md;
    for (const auto& b : left.blocks) left_by_md[b.md] = &b;
    std::map<Multidegree, const BlockRelations*> right_by_md;
    for (const auto& b : right.blocks) right_by_md[b.md] = &b;

    std::set<Multidegree> all_mds;
    for (const auto& [md, b] : left_by_md) all_mds.insert(md);
    for (const auto& [md, b] : right_by_md) all_mds.insert(md);

    for (const auto& md : all_mds) {
        BalanceBlockReport br;
        br.md = md;
        auto blk = block(N, md);
        const BlockRelations* r = right_by_md.count(md) ? right_by_md[md] : nullptr;
        const BlockRelations* l = left_by_md.count(md) ? left_by_md[md] : nullptr;
        br.dim_right = r ? r->span.dim() : 0;
        br.dim_left = l ? l->span.dim() : 0;
        Subspace mapped(blk->dim());
        if (r) {
            std::vector<std::vector<Scalar>> images;
            for (const auto& v : r->span.basis())
                images.push_back(blk->coordinates(apply_operator(A, garside, blk->from_coordinates(v))));
            mapped = span_of(blk->dim(), images);
        }
        Subspace left_span = l ? l->span : Subspace(blk->dim());
        br.garside_maps_onto = (mapped == left_span) && (br.dim_right == br.dim_left);
        if (!br.garside_maps_onto) report.balanced = false;
        report.blocks.push_back(std::move(br));
    }
    return report;
}

std::vector<GradedDims> nichols_dims(const BraidingMatrix& A, int n_max) {
    if (n_max < 0) throw InputError("nichols_dims needs n_max >= 0");
    std::vector<GradedDims> result;
    const int N = A.size();
    for (int n = 0; n <= n_max; ++n) {
        GradedDims g;
        g.degree = n;
        if (n == 0) {
            g.total = 1;
            g.block_ranks.emplace_back(Multidegree(N, 0), 1);
            result.push_back(std::move(g));
            continue;
        }
        auto mds = multidegrees_of(N, n);
        std::vector<int> ranks(mds.size());
        if (n == 1) {
            std::fill(ranks.begin(), ranks.end(), 1);
        } else {
            BraidOperator sn = make_operator(OperatorName::SnFactoredT, n);
            parallel_for(mds.size(), [&](size_t idx) {
                auto blk = block(N, mds[idx]);
                ranks[idx] = operator_matrix(A, sn, *blk).rank();
            });
        }
        for (size_t i = 0; i < mds.size(); ++i) {
            g.block_ranks.emplace_back(mds[i], ranks[i]);
            g.total += ranks[i];
        }
        result.push_back(std::move(g));
    }
    return result;
}

std::map<Multidegree, Subspace> ideal_component(const BraidingMatrix& A,
                                                const std::map<int, std::vector<TensorElement>>& generators,
                                                int n) {
    const int N = A.size();
    std::map<Multidegree, std::vector<std::vector<Scalar>>> vectors;

    // all words of a given length over 1..N
    auto words_of = [&](int len) {
        std::vector<Word> result{Word{}};
        for (int l = 0; l < len; ++l) {
            std::vector<Word> next;
            for (const auto& w : result)
                for (int letter = 1; letter <= N; ++letter) {
                    Word e = w;
                    e.push_back(letter);
                    next.push_back(std::move(e));
                }
            result = std::move(next);
        }
        return result;
    };

    for (const auto& [deg, gens] : generators) {
        if (deg > n) continue;
        for (int left_len = 0; left_len + deg <= n; ++left_len) {
            int right_len = n - deg - left_len;
            for (const auto& u : words_of(left_len))
                for (const auto& w : words_of(right_len))
                    for (const auto& r : gens) {
                        TensorElement prod = TensorElement::monomial(u)
                                                 .concat_mul(r)
                                                 .concat_mul(TensorElement::monomial(w));
                        if (prod.is_zero()) continue;
                        Multidegree md = multidegree(prod.terms().begin()->first, N);
                        vectors[md].push_back(block(N, md)->coordinates(prod));
                    }
        }
    }
    std::map<Multidegree, Subspace> result;
    for (auto& [md, vecs] : vectors) result.emplace(md, span_of(block(N, md)->dim(), vecs));
    return result;
}

std::map<int, std::vector<TensorElement>> relations_up_to(const BraidingMatrix& A, int n_max,
                                                          Side side, RelationKind kind) {
    std::map<int, std::vector<TensorElement>> result;
    for (int n = 2; n <= n_max; ++n) {
        RelationSet set = kind == RelationKind::Constant ? constants(A, n, side) : prerelations(A, n, side);
        auto rels = set.all_relations();
        if (!rels.empty()) result[n] = std::move(rels);
    }
    return result;
}

std::map<Multidegree, std::vector<bool>> redundancy_flags(const BraidingMatrix& A,
                                                          const RelationSet& set) {
    auto lower = relations_up_to(A, set.degree - 1, set.side, set.kind);
    auto slices = ideal_component(A, lower, set.degree);
    std::map<Multidegree, std::vector<bool>> flags;
    for (const auto& b : set.blocks) {
        auto blk = block(A.size(), b.md);
        std::vector<bool> block_flags;
        auto it = slices.find(b.md);
        for (const auto& rel : b.relations)
            block_flags.push_back(it != slices.end() && it->second.contains(blk->coordinates(rel)));
        flags[b.md] = std::move(block_flags);
    }
    return flags;
}

} // namespace nichols
