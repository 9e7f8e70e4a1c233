#include "fanocalc/weights.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fano {

IntWeight::IntWeight(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw std::invalid_argument("IntWeight: length must be >= 1");
    for (std::size_t i = 0; i + 1 < entries_.size(); ++i)
        if (entries_[i] < entries_[i + 1])
            throw std::invalid_argument("IntWeight: entries must be non-increasing");
}

IntWeight IntWeight::zero(std::size_t length) {
    return IntWeight(std::vector<std::int64_t>(length, 0));
}

IntWeight IntWeight::shifted(std::int64_t c) const {
    auto e = entries_;
    for (auto& x : e) x += c;
    return IntWeight(std::move(e));
}

IntWeight IntWeight::dual() const {
    std::vector<std::int64_t> e(entries_.rbegin(), entries_.rend());
    for (auto& x : e) x = -x;
    return IntWeight(std::move(e));
}

Partition::Partition(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw std::invalid_argument("Partition: parts must be >= 0");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("Partition: parts must be non-increasing");
    }
}

std::int64_t Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
}

bool Partition::contains(const Partition& inner) const {
    if (inner.rows() > rows()) return false;
    for (std::size_t i = 0; i < inner.rows(); ++i)
        if (part(i) < inner.part(i)) return false;
    return true;
}

IntWeight Partition::as_weight(std::size_t length) const {
    if (rows() > length) throw std::invalid_argument("Partition has more rows than weight length");
    std::vector<std::int64_t> e(length, 0);
    std::copy(parts_.begin(), parts_.end(), e.begin());
    return IntWeight(std::move(e));
}

Partition transpose(const Partition& p) {
    if (p.empty()) return {};
    std::vector<std::int64_t> cols(static_cast<std::size_t>(p.part(0)), 0);
    for (std::size_t i = 0; i < p.rows(); ++i)
        for (std::int64_t j = 0; j < p.part(i); ++j) ++cols[static_cast<std::size_t>(j)];
    return Partition(std::move(cols));
}

namespace {

// Backtracking count of LR tableaux of shape lambda/mu, content nu.
// Cells are filled row by row, left to right. State per column: the value
// in the row above (for column strictness). The lattice condition is
// enforced on the reverse reading word, which in this fill order is
// equivalent to: value v may be placed only when, over the cells already
// placed in previous rows plus the cells placed to the RIGHT in the current
// row... To keep the check simple and exact we maintain counts over the
// standard "row by row, right to left" reading; within a row we therefore
// fill from the right.
struct LrCounter {
    const Partition& lambda;
    const Partition& mu;
    const Partition& nu;
    std::vector<std::int64_t> remaining;      // boxes of each value still to place
    std::vector<std::int64_t> read_count;     // occurrences already read (lattice prefix)
    std::vector<std::vector<std::int64_t>> cell;  // filled values, 0 = empty/mu
    std::int64_t count = 0;

    LrCounter(const Partition& l, const Partition& m, const Partition& n)
        : lambda(l), mu(m), nu(n) {
        remaining.assign(nu.rows() + 1, 0);
        read_count.assign(nu.rows() + 2, 0);
        for (std::size_t i = 0; i < nu.rows(); ++i) remaining[i + 1] = nu.part(i);
        cell.resize(lambda.rows());
        for (std::size_t r = 0; r < lambda.rows(); ++r)
            cell[r].assign(static_cast<std::size_t>(lambda.part(r)), 0);
    }

    void fill(std::size_t row, std::int64_t col) {
        if (row == lambda.rows()) {
            ++count;
            return;
        }
        if (col < mu.part(row)) {  // row done, move on
            fill(row + 1, lambda.part(row + 1) - 1);
            return;
        }
        const auto c = static_cast<std::size_t>(col);
        // candidate values at (row, col)
        std::int64_t lo = 1, hi = static_cast<std::int64_t>(nu.rows());
        if (row > 0 && col >= mu.part(row - 1)) {
            lo = std::max(lo, cell[row - 1][c] + 1);  // column strict
        }
        if (col + 1 < lambda.part(row)) {
            hi = std::min(hi, cell[row][c + 1]);      // row weak (right neighbor filled first)
        }
        for (std::int64_t v = lo; v <= hi; ++v) {
            if (remaining[static_cast<std::size_t>(v)] == 0) continue;
            // lattice: after reading this cell, #v must not exceed #(v-1)
            if (v > 1 && read_count[static_cast<std::size_t>(v)] + 1 >
                             read_count[static_cast<std::size_t>(v - 1)])
                continue;
            cell[row][c] = v;
            --remaining[static_cast<std::size_t>(v)];
            ++read_count[static_cast<std::size_t>(v)];
            fill(row, col - 1);
            --read_count[static_cast<std::size_t>(v)];
            ++remaining[static_cast<std::size_t>(v)];
            cell[row][c] = 0;
        }
    }

    std::int64_t run() {
        if (lambda.rows() == 0) return (mu.rows() == 0 && nu.rows() == 0) ? 1 : 0;
        fill(0, lambda.part(0) - 1);
        return count;
    }
};

void enumerate_partitions_of(std::int64_t n, std::int64_t max_part, std::size_t max_rows,
                             std::vector<std::int64_t>& stack,
                             std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(stack);
        return;
    }
    if (stack.size() == max_rows) return;
    for (std::int64_t p = std::min(n, max_part); p >= 1; --p) {
        stack.push_back(p);
        enumerate_partitions_of(n - p, p, max_rows, stack, out);
        stack.pop_back();
    }
}

}  // namespace

std::map<Partition, std::int64_t> lr_coefficients(const Partition& mu, const Partition& nu) {
    std::map<Partition, std::int64_t> result;
    const std::int64_t total = mu.weight() + nu.weight();
    if (total == 0) {
        result[Partition{}] = 1;
        return result;
    }
    const std::size_t max_rows = mu.rows() + nu.rows();
    const std::int64_t max_part = mu.part(0) + nu.part(0);
    std::vector<Partition> candidates;
    std::vector<std::int64_t> stack;
    enumerate_partitions_of(total, max_part, max_rows, stack, candidates);
    for (const auto& lambda : candidates) {
        if (!lambda.contains(mu)) continue;
        LrCounter counter(lambda, mu, nu);
        const std::int64_t c = counter.run();
        if (c > 0) result[lambda] = c;
    }
    return result;
}

Int weyl_dim(const IntWeight& lambda, std::size_t n) {
    if (lambda.length() != n)
        throw std::invalid_argument("weyl_dim: weight length does not match rank");
    Int num = 1, den = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            num *= lambda[i] - lambda[j] + static_cast<std::int64_t>(j - i);
            den *= static_cast<std::int64_t>(j - i);
        }
    return num / den;
}

Int weyl_dim(const Partition& lambda, std::size_t n) {
    return weyl_dim(lambda.as_weight(n), n);
}

}  // namespace fano
