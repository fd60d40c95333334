#include "bsp/norms.hpp"

#include "bsp/detail/numeric.hpp"
#include "bsp/errors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

namespace bsp {

namespace {

struct Weighted {
    double w;
    Index idx;
};

// Larger weight first; smaller index breaks ties (keeps witnesses canonical).
bool heavier(const Weighted& a, const Weighted& b) {
    return a.w > b.w || (a.w == b.w && a.idx < b.idx);
}

double block_sum(double head, const std::vector<Weighted>& kept) {
    detail::CompensatedSum acc;
    acc.add(head);
    for (const auto& k : kept) acc.add(k.w);
    return acc.value();
}

}  // namespace

double lp_norm(const FinVec& x, double p) {
    detail::require_p_at_least_one(p);
    detail::CompensatedSum acc;
    for (const auto& [idx, val] : x.entries()) acc.add(std::pow(std::abs(val), p));
    return std::pow(acc.value(), 1.0 / p);
}

double sup_norm(const FinVec& x) {
    double best = 0.0;
    for (const auto& [idx, val] : x.entries()) best = std::max(best, std::abs(val));
    return best;
}

SchreierNormValue schreier_norm(const FinVec& x, double p) {
    detail::require_p_at_least_one(p);
    if (x.empty()) return {};

    const auto entries = x.entries();
    const std::size_t s = entries.size();
    std::vector<double> pw(s);
    for (std::size_t i = 0; i < s; ++i) pw[i] = std::pow(std::abs(entries[i].second), p);

    double best = -1.0;
    std::vector<Index> best_set;
    std::vector<Weighted> cand;
    for (std::size_t i = 0; i < s; ++i) {
        const Index cap = entries[i].first - 1;  // room left beside the minimum
        cand.clear();
        for (std::size_t j = i + 1; j < s; ++j) cand.push_back({pw[j], entries[j].first});
        std::sort(cand.begin(), cand.end(), heavier);
        const std::size_t take = std::min<std::size_t>(static_cast<std::size_t>(cap), cand.size());

        detail::CompensatedSum acc;
        acc.add(pw[i]);
        for (std::size_t k = 0; k < take; ++k) acc.add(cand[k].w);
        const double total = acc.value();
        if (total > best) {
            best = total;
            best_set.assign(1, entries[i].first);
            for (std::size_t k = 0; k < take; ++k) best_set.push_back(cand[k].idx);
        }
    }
    return {std::pow(best, 1.0 / p), SchreierSet::make(std::move(best_set))};
}

double schreier_norm_oracle(const FinVec& x, double p) {
    detail::require_p_at_least_one(p);
    const auto entries = x.entries();
    const std::size_t s = entries.size();
    if (s > 20) throw LimitError("oracle limited to support size 20");
    if (s == 0) return 0.0;

    std::vector<double> pw(s);
    for (std::size_t i = 0; i < s; ++i) pw[i] = std::pow(std::abs(entries[i].second), p);

    double best = 0.0;
    for (std::uint32_t mask = 1; mask < (1u << s); ++mask) {
        const int first = std::countr_zero(mask);
        if (std::popcount(mask) > entries[static_cast<std::size_t>(first)].first) continue;
        detail::CompensatedSum acc;
        for (std::uint32_t m = mask; m != 0; m &= m - 1)
            acc.add(pw[static_cast<std::size_t>(std::countr_zero(m))]);
        best = std::max(best, acc.value());
    }
    return std::pow(best, 1.0 / p);
}

BaernsteinNormValue baernstein_norm(const FinVec& x, double p) {
    detail::require_p_above_one(p);
    if (x.empty()) return {};

    const auto entries = x.entries();
    const std::size_t s = entries.size();
    std::vector<double> w(s);
    for (std::size_t i = 0; i < s; ++i) w[i] = std::abs(entries[i].second);

    // V[c] = best sum of block powers using positions >= c; a block opened
    // at c runs until the cut c' (the next block starts at position c').
    std::vector<double> value(s + 1, 0.0);
    std::vector<std::size_t> cut(s, 0);    // chosen c' when a block is opened at c
    std::vector<char> opened(s, 0);        // whether opening at c beats skipping c
    std::vector<Weighted> kept;
    for (std::size_t c = s; c-- > 0;) {
        const std::size_t cap = static_cast<std::size_t>(entries[c].first - 1);
        kept.clear();
        double best_w = -1.0;
        std::size_t best_cut = c + 1;
        for (std::size_t cp = c + 1; cp <= s; ++cp) {
            if (cp > c + 1) {
                const Weighted extra{w[cp - 1], entries[cp - 1].first};
                auto pos = std::lower_bound(kept.begin(), kept.end(), extra, heavier);
                kept.insert(pos, extra);
                if (kept.size() > cap) kept.pop_back();
            }
            const double v = std::pow(block_sum(w[c], kept), p) + value[cp];
            if (v > best_w) {
                best_w = v;
                best_cut = cp;
            }
        }
        if (best_w >= value[c + 1]) {  // prefer opening a block at the earliest position
            value[c] = best_w;
            opened[c] = 1;
            cut[c] = best_cut;
        } else {
            value[c] = value[c + 1];
        }
    }

    // Rebuild the witness from the recorded decisions.
    std::vector<SchreierSet> blocks;
    std::vector<Weighted> cand;
    for (std::size_t c = 0; c < s;) {
        if (!opened[c]) {
            ++c;
            continue;
        }
        const std::size_t cp = cut[c];
        const std::size_t cap = static_cast<std::size_t>(entries[c].first - 1);
        cand.clear();
        for (std::size_t j = c + 1; j < cp; ++j) cand.push_back({w[j], entries[j].first});
        std::sort(cand.begin(), cand.end(), heavier);
        const std::size_t take = std::min(cap, cand.size());
        std::vector<Index> indices{entries[c].first};
        for (std::size_t k = 0; k < take; ++k) indices.push_back(cand[k].idx);
        blocks.push_back(SchreierSet::make(std::move(indices)));
        c = cp;
    }
    return {std::pow(value[0], 1.0 / p), SchreierChain::make(std::move(blocks))};
}

namespace {

struct ChainEnumerator {
    std::span<const FinVec::Entry> entries;
    double p = 2.0;
    double best = 0.0;  // best sum of block powers

    // Explore chains whose next block starts at position `start` or later.
    void chains(std::size_t start, double acc) {
        best = std::max(best, acc);
        for (std::size_t f = start; f < entries.size(); ++f)
            grow_block(f, f, std::abs(entries[f].second), 1, acc);
    }

    // Current block opened at `first` with rightmost position `last`.
    void grow_block(std::size_t first, std::size_t last, double sum, Index count, double acc) {
        chains(last + 1, acc + std::pow(sum, p));  // close the block here
        if (count >= entries[first].first) return;  // block is full
        for (std::size_t nxt = last + 1; nxt < entries.size(); ++nxt)
            grow_block(first, nxt, sum + std::abs(entries[nxt].second), count + 1, acc);
    }
};

}  // namespace

double baernstein_norm_oracle(const FinVec& x, double p) {
    detail::require_p_above_one(p);
    if (x.support_size() > 12) throw LimitError("oracle limited to support size 12");
    if (x.empty()) return 0.0;
    ChainEnumerator e{x.entries(), p};
    e.chains(0, 0.0);
    return std::pow(e.best, 1.0 / p);
}

FinVec decreasing_rearrangement(const FinVec& x) {
    std::vector<double> mags;
    mags.reserve(x.support_size());
    for (const auto& [idx, val] : x.entries()) mags.push_back(std::abs(val));
    std::sort(mags.begin(), mags.end(), std::greater<>());
    std::vector<FinVec::Entry> entries;
    entries.reserve(mags.size());
    for (std::size_t i = 0; i < mags.size(); ++i)
        entries.emplace_back(static_cast<Index>(i + 1), mags[i]);
    return FinVec::from_pairs(std::move(entries));
}

}  // namespace bsp
