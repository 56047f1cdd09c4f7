/**
 * @file symfunc.hpp
 * @brief Symmetric-group character values via the Murnaghan-Nakayama rule,
 *        standard Young tableaux with major index, and the multiplicity
 *        check against the type-A coinvariant characters.
 */
#pragma once

#include <map>
#include <string>
#include <vector>

#include "torilab/partition.hpp"

namespace torilab {

/// Irreducible character value chi^lambda_mu, |lambda| = |mu|, by the
/// border-strip recursion; memoized and safe to call concurrently.
long long mn_character(const Partition& lambda, const Partition& mu);

/// A standard filling of the Young diagram of shape by 1..n, increasing
/// along rows and down columns.
struct StandardTableau {
    Partition shape;
    std::vector<std::vector<int>> rows;

    /// positions i with i+1 strictly below i
    std::vector<int> descent_set() const;
    /// sum of the descent set
    int major_index() const;
};

std::vector<StandardTableau> enumerate_standard_tableaux(const Partition& shape);

/// f_{lambda,i}: tableaux of the given shape tallied by major index.
std::map<int, long long> f_lambda_i(const Partition& lambda);

/// Number of standard tableaux by the hook length formula (independent of
/// the enumeration above).
Integer count_syt_hook(const Partition& lambda);

struct MultiplicityReport {
    bool ok = false;
    int n = 0;
    std::string detail;
};

/// Checks <chi^lambda, chi_{R_n^i}> = f_{lambda,i} for every lambda of n
/// and every i.
MultiplicityReport verify_multiplicity_lemma(int n);

} // namespace torilab
