#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "fanocalc/rational.hpp"

namespace fano {

/// A GL weight: a finite non-increasing sequence of integers. Negative
/// entries are first-class (Bott needs twists like (10,10) for O(-10)).
class IntWeight {
public:
    explicit IntWeight(std::vector<std::int64_t> entries);
    static IntWeight zero(std::size_t length);

    std::size_t length() const { return entries_.size(); }
    std::int64_t operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<std::int64_t>& entries() const { return entries_; }

    /// Entry-wise shift by a constant; stays non-increasing.
    IntWeight shifted(std::int64_t c) const;
    /// The weight of the dual representation: negate and reverse.
    IntWeight dual() const;

    friend bool operator==(const IntWeight&, const IntWeight&) = default;
    friend auto operator<=>(const IntWeight& a, const IntWeight& b) {
        return a.entries_ <=> b.entries_;
    }

private:
    std::vector<std::int64_t> entries_;
};

/// A partition: non-negative non-increasing parts, trailing zeros trimmed.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<std::int64_t> parts);

    std::size_t rows() const { return parts_.size(); }
    /// Part i (0-based); zero beyond the last row.
    std::int64_t part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    std::int64_t weight() const;
    const std::vector<std::int64_t>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    bool contains(const Partition& inner) const;

    /// Pad with zeros to the given length (for use as a GL(length) weight).
    IntWeight as_weight(std::size_t length) const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<std::int64_t> parts_;
};

/// Conjugate (transposed) Young diagram. An involution.
Partition transpose(const Partition& p);

/// All Littlewood-Richardson coefficients c^lambda_{mu,nu} > 0, computed by
/// enumerating LR skew tableaux of shape lambda/mu with content nu
/// (column-strict, row-weak, reverse reading word a lattice word).
std::map<Partition, std::int64_t> lr_coefficients(const Partition& mu, const Partition& nu);

/// dim of the irreducible GL(n) representation of highest weight lambda,
/// by Weyl's formula prod_{i<j} (lambda_i - lambda_j + j - i)/(j - i).
/// Requires lambda.length() == n.
Int weyl_dim(const IntWeight& lambda, std::size_t n);
Int weyl_dim(const Partition& lambda, std::size_t n);

}  // namespace fano
