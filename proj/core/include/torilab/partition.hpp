/**
 * @file partition.hpp
 * @brief Integer partitions, double partitions, enumeration, and the
 *        centralizer constants z_lambda and v_mu.
 *
 * Text format: a partition is its comma-separated parts ("2,1"), the empty
 * partition is "". A double partition is "mu|lambda" ("2,1|3").
 */
#pragma once

#include <string>
#include <vector>

#include "torilab/rational.hpp"

namespace torilab {

class Partition {
public:
    Partition() = default;
    /// Parts are sorted into weakly decreasing order; all must be positive.
    explicit Partition(std::vector<int> parts);

    static Partition parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    int size() const; ///< |lambda|, the sum of the parts
    int num_parts() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// Multiplicity n_r(lambda) of the part r.
    int multiplicity(int r) const;
    int largest_part() const { return parts_.empty() ? 0 : parts_.front(); }

    std::string str() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

private:
    std::vector<int> parts_; // weakly decreasing, all > 0
};

struct DoublePartition {
    Partition positive; ///< mu, lengths of positive cycles
    Partition negative; ///< lambda, lengths of negative cycles

    int size() const { return positive.size() + negative.size(); }

    static DoublePartition parse(const std::string& text);
    std::string str() const { return positive.str() + "|" + negative.str(); }

    friend bool operator==(const DoublePartition& a, const DoublePartition& b) {
        return a.positive == b.positive && a.negative == b.negative;
    }
    friend bool operator!=(const DoublePartition& a, const DoublePartition& b) { return !(a == b); }
    friend bool operator<(const DoublePartition& a, const DoublePartition& b) {
        if (a.positive != b.positive) return a.positive < b.positive;
        return a.negative < b.negative;
    }
};

/// All partitions of n in reverse-lexicographic order: (n) first, (1,...,1)
/// last. p(0) = 1 (the empty partition).
std::vector<Partition> enumerate_partitions(int n);

/// All (mu, lambda) with |mu| + |lambda| = n, ordered by decreasing |mu|,
/// then reverse-lexicographically in mu and in lambda.
std::vector<DoublePartition> enumerate_double_partitions(int n);

/// z_lambda = prod_r n_r! r^{n_r}; n!/z_lambda is the S_n class size.
Integer z_lambda(const Partition& lambda);

/// v_mu = prod_r n_r! (2r)^{n_r}; 2^n n!/(v_mu v_lambda) is the B_n class size.
Integer v_mu(const Partition& mu);

/// Class size of the S_n conjugacy class labeled by lambda (n = |lambda|).
Integer class_size_a(const Partition& lambda);

/// Class size of the B_n conjugacy class labeled by (mu, lambda).
Integer class_size_bc(const DoublePartition& c);

} // namespace torilab
