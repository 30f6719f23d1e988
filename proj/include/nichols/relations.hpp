#pragma once

#include <map>

#include "nichols/calculus.hpp"
#include "nichols/linalg.hpp"

namespace nichols {

enum class Side { Right, Left };
enum class RelationKind { Degree2, Constant, Prerelation };

const char* side_str(Side s);
const char* kind_str(RelationKind k);

/// Relations found in one multidegree block.
struct BlockRelations {
    Multidegree md;
    Subspace span;                         // relation span, RREF over the lex word basis
    std::vector<TensorElement> relations;  // emitted representatives
    std::vector<TensorElement> witnesses;  // Dynkin pre-images (pre-relations only)
};

struct RelationSet {
    Side side = Side::Right;
    RelationKind kind = RelationKind::Constant;
    int degree = 0;
    std::vector<BlockRelations> blocks; // nonempty blocks, sorted by multidegree

    int total_dim() const;
    std::vector<TensorElement> all_relations() const;
};

/// v_s v_t - q_st v_t v_s for every s <= t with q_st q_ts = 1 (v_s^2 when
/// q_ss = -1); exactly the degree-2 kernel of the symmetrizer.
RelationSet degree2_relations(const BraidingMatrix& A);

/// Per-block kernel of T_n (right) or U_n (left), cross-checked against the
/// intersection of the one-sided differential kernels.
RelationSet constants(const BraidingMatrix& A, int n, Side side);

/// The degree-n generating set: per theta-fixed block, Dynkin images of a
/// complement of ker X_{n-2,n} inside ker T'_n, each verified annihilated
/// by T_n. Left side is the Garside mirror.
RelationSet prerelations(const BraidingMatrix& A, int n, Side side);

struct BalanceBlockReport {
    Multidegree md;
    int dim_right = 0;
    int dim_left = 0;
    bool garside_maps_onto = false;
};

struct BalanceReport {
    int degree = 0;
    RelationKind kind = RelationKind::Prerelation;
    std::vector<BalanceBlockReport> blocks;
    bool balanced = true;
};

/// Checks that the Garside element carries the right-side spans onto the
/// left-side spans with equal dimensions.
BalanceReport balance_check(const BraidingMatrix& A, int n, RelationKind kind = RelationKind::Prerelation);

struct GradedDims {
    int degree = 0;
    std::vector<std::pair<Multidegree, int>> block_ranks;
    long total = 0;
};

/// Graded dimensions of the Nichols algebra: per-block rank of the
/// factorized symmetrizer, degrees 0..n_max.
std::vector<GradedDims> nichols_dims(const BraidingMatrix& A, int n_max);

/// Degree-n component of the two-sided ideal generated by homogeneous
/// elements (keyed by degree), split per multidegree block.
std::map<Multidegree, Subspace> ideal_component(const BraidingMatrix& A,
                                                const std::map<int, std::vector<TensorElement>>& generators,
                                                int n);

/// Relations of every degree 2..n_max, keyed by degree (feed for
/// ideal_component).
std::map<int, std::vector<TensorElement>> relations_up_to(const BraidingMatrix& A, int n_max,
                                                          Side side, RelationKind kind);

/// Informational post-pass: marks, per block and relation of the set, whether
/// the relation already lies in the degree slice of the two-sided ideal
/// generated by the lower-degree output. Redundant entries are kept.
std::map<Multidegree, std::vector<bool>> redundancy_flags(const BraidingMatrix& A,
                                                          const RelationSet& set);

} // namespace nichols
