#pragma once

#include <random>
#include <string>
#include <vector>

#include "nichols/calculus.hpp"
#include "nichols/linalg.hpp"

namespace nichols {

struct IdentityFailure {
    std::string identity;
    std::string context;
};

struct IdentityReport {
    long checks = 0;
    std::vector<IdentityFailure> failures;

    bool ok() const { return failures.empty(); }
    void merge(const IdentityReport& o);
};

/// Monomial braiding with t-exponents drawn uniformly from [-range, range].
BraidingMatrix random_monomial_braiding(std::mt19937& rng, int n_letters, int range = 4);
BraidingMatrix random_symmetric_braiding(std::mt19937& rng, int n_letters, int range = 4);

/// Random homogeneous element of the given degree (mixed blocks).
TensorElement random_element(std::mt19937& rng, int n_letters, int degree, int terms = 3);

/// The braid-algebra identities checked as exact block-matrix equalities on
/// every multidegree block of degree n: Garside conjugation, the full-twist
/// product forms, the telescoping identity, both symmetrizer factorizations,
/// both Dynkin factorizations, the Garside intertwiners and the closed-form
/// full-twist scalar.
IdentityReport braid_identity_suite(const BraidingMatrix& A, int n);

/// Braid relations, generator inverses and Matsumoto-Tits well-definedness
/// on random elements.
IdentityReport braid_relation_suite(const BraidingMatrix& A, int n, std::mt19937& rng);

/// Differential laws: the one-sided expansions of T_n and U_n, left/right
/// commutation, recursion-vs-pairing oracles, pairing route consistency,
/// coassociativity and the kernel characterization of constants.
IdentityReport calculus_identity_suite(const BraidingMatrix& A, int n, std::mt19937& rng);

/// Bar laws for symmetric braidings: the twisted commutation rule and the
/// Garside/Dynkin conjugation formula on full-twist-fixed monomials.
IdentityReport bar_identity_suite(const BraidingMatrix& A, int n, std::mt19937& rng);

/// Seed-driven driver behind `check-identities`: random matrices of sizes
/// 1..3, all suites for 2 <= n <= n_max.
IdentityReport run_identity_suites(int n_max, unsigned seed, int trials);

std::string report_summary(const IdentityReport& r);

} // namespace nichols
