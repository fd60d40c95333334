#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bsp {

using Index = std::int64_t;

/// Finitely supported real sequence indexed from 1, kept in canonical
/// sparse form: entries sorted by index, no explicit zeros.
class FinVec {
public:
    using Entry = std::pair<Index, double>;

    FinVec() = default;

    /// Builds from (index, coefficient) pairs in any order. Zero
    /// coefficients are dropped; duplicate, non-positive, or non-finite
    /// entries are rejected.
    static FinVec from_pairs(std::vector<Entry> entries);

    /// The unit vector e_n.
    static FinVec unit(Index n);

    std::span<const Entry> entries() const { return entries_; }
    std::size_t support_size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    /// Coefficient at `index`; 0 off the support.
    double coeff(Index index) const;

    FinVec scaled(double t) const;
    friend FinVec operator+(const FinVec& a, const FinVec& b);
    friend FinVec operator*(double t, const FinVec& x) { return x.scaled(t); }

    friend bool operator==(const FinVec&, const FinVec&) = default;

private:
    std::vector<Entry> entries_;  // sorted by index, all coefficients nonzero
};

/// True iff the indices, viewed as a set, form an admissible set:
/// empty, or all >= 1 with |F| <= min F.
bool is_schreier_set(std::span<const Index> indices);

/// True iff the list is non-empty, every member is a non-empty admissible
/// set, and each member lies entirely left of the next.
bool is_schreier_chain(std::span<const std::vector<Index>> sets);

/// Admissible index set: empty, or |F| <= min F.
class SchreierSet {
public:
    SchreierSet() = default;  // the empty set

    /// Sorts and deduplicates, then validates admissibility.
    static SchreierSet make(std::vector<Index> indices);

    std::span<const Index> indices() const { return indices_; }
    bool empty() const { return indices_.empty(); }
    std::size_t size() const { return indices_.size(); }
    Index min() const { return indices_.front(); }
    Index max() const { return indices_.back(); }

    friend bool operator==(const SchreierSet&, const SchreierSet&) = default;

private:
    std::vector<Index> indices_;  // sorted, distinct
};

/// Non-empty list of non-empty admissible sets, each entirely to the
/// left of the next.
class SchreierChain {
public:
    static SchreierChain make(std::vector<SchreierSet> sets);

    std::span<const SchreierSet> sets() const { return sets_; }
    std::size_t size() const { return sets_.size(); }

    friend bool operator==(const SchreierChain&, const SchreierChain&) = default;

private:
    SchreierChain() = default;
    std::vector<SchreierSet> sets_;
};

/// (sum_{n in F} |x(n)|^p)^{1/p}; 0 for the empty set. Requires p >= 1.
double mu_p(const FinVec& x, const SchreierSet& f, double p);

/// (sum_{F in C} (sum_{n in F} |x(n)|)^p)^{1/p}. Requires p > 1.
double beta_p(const FinVec& x, const SchreierChain& chain, double p);

/// Parses "index:value,index:value,...". Blank input is the zero vector.
/// Rejects duplicate indices, indices < 1, and malformed numerals.
FinVec parse_vector(std::string_view text);

/// Inverse of parse_vector. Coefficients are printed with shortest
/// round-trip precision, so parse_vector(format_vector(x)) == x.
std::string format_vector(const FinVec& x);

}  // namespace bsp
