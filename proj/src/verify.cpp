#include "bsp/verify.hpp"

#include "bsp/detail/numeric.hpp"
#include "bsp/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace bsp {

double VecSampler::uniform01() {
    return static_cast<double>((eng_() >> 11) + 1) * 0x1.0p-53;
}

std::uint64_t VecSampler::below(std::uint64_t n) {
    return eng_() % n;
}

FinVec VecSampler::next(int max_support_size, Index max_index) {
    const int s = 1 + static_cast<int>(below(static_cast<std::uint64_t>(max_support_size)));
    const std::uint64_t mode = below(3);
    Index range = mode == 0 ? 50 : mode == 1 ? 1000 : max_index;
    range = std::max(std::min(range, max_index), static_cast<Index>(s));

    std::vector<Index> indices;
    if (range <= 2 * static_cast<Index>(s) + 16) {
        indices.resize(static_cast<std::size_t>(range));
        std::iota(indices.begin(), indices.end(), Index{1});
        for (int i = 0; i < s; ++i) {  // partial Fisher-Yates
            const auto j = i + static_cast<std::size_t>(below(indices.size() - i));
            std::swap(indices[static_cast<std::size_t>(i)], indices[j]);
        }
        indices.resize(static_cast<std::size_t>(s));
    } else {
        std::set<Index> chosen;
        while (static_cast<int>(chosen.size()) < s)
            chosen.insert(1 + static_cast<Index>(below(static_cast<std::uint64_t>(range))));
        indices.assign(chosen.begin(), chosen.end());
    }

    const std::uint64_t law = below(3);
    std::vector<double> coeffs(static_cast<std::size_t>(s));
    for (auto& c : coeffs) {
        switch (law) {
            case 0: c = uniform01(); break;
            case 1: c = -std::log(uniform01()); break;
            default: c = below(8) == 0 ? -4.0 * std::log(uniform01()) : 0.05 * uniform01();
        }
        if (below(2) == 0) c = -c;
    }

    double peak = 0.0;
    for (double c : coeffs) peak = std::max(peak, std::abs(c));
    std::vector<FinVec::Entry> entries;
    entries.reserve(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        entries.emplace_back(indices[i], coeffs[i] / peak);
    return FinVec::from_pairs(std::move(entries));
}

TrialReport run_inclusion_trials(const SpaceLabel& y, const SpaceLabel& z,
                                 std::int64_t trials, std::uint64_t seed,
                                 bool record_ratios) {
    const auto inc = inclusion_constant(y, z);
    if (!inc.comparable)
        throw std::invalid_argument("pair " + y.to_string() + ", " + z.to_string() +
                                    " is not comparable");
    const double c = *inc.constant;

    VecSampler rng(seed);
    TrialReport report;
    report.seed = seed;
    report.trials = trials;
    if (record_ratios) report.ratios.reserve(static_cast<std::size_t>(trials));
    for (std::int64_t t = 0; t < trials; ++t) {
        const FinVec x = rng.next();
        const double ny = norm_in(y, x);
        const double nz = norm_in(z, x);
        if (nz > c * ny + 1e-9) ++report.violations;
        const double ratio = nz / ny;
        if (ratio > report.max_ratio) {
            report.max_ratio = ratio;
            report.worst_input = x;
        }
        if (record_ratios) report.ratios.push_back(ratio);
    }
    return report;
}

TrialReport check_jameson(double p, double q, std::int64_t trials, std::uint64_t seed) {
    detail::require_p_at_least_one(p);
    if (!(q > p)) throw std::domain_error("bound check requires q > p");
    const double lq_power_bound =
        (std::pow(2.0, q / p) - 1.0) / (std::pow(2.0, (q - p) / p) - 1.0);

    VecSampler rng(seed);
    TrialReport report;
    report.seed = seed;
    report.trials = trials;
    constexpr double tol = 1e-9;
    for (std::int64_t t = 0; t < trials; ++t) {
        const int k = 1 + static_cast<int>(rng.below(6));
        const Index top = Index{1} << k;
        const int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(top)));
        std::vector<double> vals(static_cast<std::size_t>(n));
        switch (t % 3) {
            case 0:
                for (auto& v : vals) v = rng.uniform01();
                break;
            case 1:
                for (auto& v : vals) v = -std::log(rng.uniform01());
                break;
            default:
                for (auto& v : vals) v = 1.0;
        }
        std::sort(vals.begin(), vals.end(), std::greater<>());
        std::vector<FinVec::Entry> entries;
        for (int i = 0; i < n; ++i) entries.emplace_back(i + 1, vals[static_cast<std::size_t>(i)]);
        FinVec x = FinVec::from_pairs(std::move(entries));
        const double sp = schreier_norm(x, p).value;
        std::vector<FinVec::Entry> scaled;
        for (const auto& [idx, val] : x.entries()) scaled.emplace_back(idx, val / sp);
        x = FinVec::from_pairs(std::move(scaled));

        bool bad = false;
        // Coordinate decay at dyadic positions.
        for (int m = 0; (Index{2} << m) <= 64; ++m)
            if (x.coeff(Index{2} << m) > std::pow(2.0, -m / p) + tol) bad = true;
        // Per-block l_q mass on [2^(m+1), 2^(m+2)).
        for (int m = 0; (Index{2} << m) <= 64; ++m) {
            detail::CompensatedSum mass;
            for (Index j = Index{2} << m; j < Index{4} << m; ++j)
                mass.add(std::pow(std::abs(x.coeff(j)), q));
            if (mass.value() > std::pow(std::pow(2.0, (p - q) / p), m) + tol) bad = true;
        }
        // Final l_q bound.
        const double lq = lp_norm(x, q);
        if (std::pow(lq, q) > lq_power_bound + tol) bad = true;

        if (bad) ++report.violations;
        if (lq > report.max_ratio) {
            report.max_ratio = lq;  // ratio ||x||_lq / ||x||_Sp with unit denominator
            report.worst_input = x;
        }
    }
    return report;
}

TrialReport check_rearrangement(double p, std::int64_t trials, std::uint64_t seed) {
    detail::require_p_at_least_one(p);
    VecSampler rng(seed);
    TrialReport report;
    report.seed = seed;
    report.trials = trials;
    constexpr double tol = 1e-10;
    for (std::int64_t t = 0; t < trials; ++t) {
        const FinVec x = rng.next(30, 3000);
        const FinVec y = decreasing_rearrangement(x);
        const double sx = schreier_norm(x, p).value;
        const double sy = schreier_norm(y, p).value;
        bool bad = sy > sx + tol;
        for (double qq : {1.0, 2.0})
            if (std::abs(lp_norm(x, qq) - lp_norm(y, qq)) > tol) bad = true;
        if (bad) ++report.violations;
        const double ratio = sy / sx;
        if (ratio > report.max_ratio) {
            report.max_ratio = ratio;
            report.worst_input = x;
        }
    }
    return report;
}

TrialReport run_oracle_trials(const SpaceLabel& space, int max_support,
                              std::int64_t trials, std::uint64_t seed) {
    double (*oracle)(const FinVec&, double) = nullptr;
    int limit = 0;
    switch (space.family()) {
        case Family::Schreier:
            oracle = &schreier_norm_oracle;
            limit = 20;
            break;
        case Family::Baernstein:
            oracle = &baernstein_norm_oracle;
            limit = 12;
            break;
        default:
            throw std::invalid_argument("no oracle for space " + space.to_string());
    }
    if (max_support < 1 || max_support > limit)
        throw LimitError("oracle supports at most " + std::to_string(limit) + " indices");

    VecSampler rng(seed);
    TrialReport report;
    report.seed = seed;
    report.trials = trials;
    double worst_dev = -1.0;
    for (std::int64_t t = 0; t < trials; ++t) {
        const FinVec x = rng.next(max_support, max_support);
        const double exact = norm_in(space, x);
        const double brute = oracle(x, space.param());
        if (std::abs(exact - brute) > 1e-12 * std::abs(brute)) ++report.violations;
        const double ratio = exact / brute;
        if (std::abs(ratio - 1.0) > worst_dev) {
            worst_dev = std::abs(ratio - 1.0);
            report.max_ratio = ratio;
            report.worst_input = x;
        }
    }
    return report;
}

FinVec make_xk(int k, std::span<const Index> subseq, double p) {
    detail::require_p_above_one(p);
    if (k < 1) throw std::domain_error("block number must be positive");
    if (k > 20) throw LimitError("block number limited to 20");
    const Index lo = Index{1} << (k - 1);
    const std::size_t count = static_cast<std::size_t>(lo);
    std::vector<Index> targets;
    if (subseq.empty()) {
        targets.resize(count);
        std::iota(targets.begin(), targets.end(), lo);
    } else {
        if (subseq.size() != count)
            throw std::invalid_argument("subsequence must cover the dyadic block exactly");
        Index prev = 0;
        for (std::size_t i = 0; i < count; ++i) {
            if (subseq[i] <= prev || subseq[i] < lo + static_cast<Index>(i))
                throw std::invalid_argument(
                    "subsequence must be strictly increasing with subseq(j) >= j");
            prev = subseq[i];
        }
        targets.assign(subseq.begin(), subseq.end());
    }
    const double value = std::ldexp(1.0, 1 - k);
    std::vector<FinVec::Entry> entries;
    entries.reserve(count);
    for (Index i : targets) entries.emplace_back(i, value);
    return FinVec::from_pairs(std::move(entries));
}

FinVec make_xk(int k, double p) {
    return make_xk(k, {}, p);
}

std::optional<DominationCounterexample> domination_probe(double p, double q, int blocks,
                                                         double c, std::int64_t budget,
                                                         std::uint64_t seed) {
    detail::require_p_above_one(p);
    detail::require_p_above_one(q);
    if (!(c > 0.0)) throw std::domain_error("threshold constant must be positive");
    if (budget < 1) throw std::domain_error("budget must be positive");
    if (blocks < 1 || blocks > 6)
        throw LimitError("blocks limited to 6 so supports stay brute-force checkable");

    std::vector<FinVec> xs;
    for (int k = 1; k <= blocks; ++k) xs.push_back(make_xk(k, p));

    const auto build = [&](std::span<const double> profile) {
        FinVec z;
        for (int k = 0; k < blocks; ++k) z = z + profile[static_cast<std::size_t>(k)] * xs[static_cast<std::size_t>(k)];
        return z;
    };

    // Structured profiles first (constant, geometric, spikes, ramps),
    // then random ones until the budget runs out.
    std::vector<std::vector<double>> structured;
    structured.emplace_back(static_cast<std::size_t>(blocks), 1.0);
    for (double r : {0.5, 2.0, 0.75, 1.25}) {
        std::vector<double> a(static_cast<std::size_t>(blocks));
        double v = 1.0;
        for (auto& x : a) {
            x = v;
            v *= r;
        }
        structured.push_back(std::move(a));
    }
    for (int k = 0; k < blocks; ++k) {
        std::vector<double> a(static_cast<std::size_t>(blocks), 0.0);
        a[static_cast<std::size_t>(k)] = 1.0;
        structured.push_back(std::move(a));
    }
    for (bool up : {true, false}) {
        std::vector<double> a(static_cast<std::size_t>(blocks));
        for (int k = 0; k < blocks; ++k)
            a[static_cast<std::size_t>(k)] = static_cast<double>(up ? k + 1 : blocks - k);
        structured.push_back(std::move(a));
    }

    VecSampler rng(seed);
    std::int64_t tried = 0;
    std::size_t next_structured = 0;
    while (tried < budget) {
        std::vector<double> profile;
        if (next_structured < structured.size()) {
            profile = structured[next_structured++];
        } else {
            profile.resize(static_cast<std::size_t>(blocks));
            const bool heavy = rng.below(2) == 0;
            for (auto& x : profile) x = heavy ? -std::log(rng.uniform01()) : rng.uniform01();
        }
        ++tried;
        const FinVec z = build(profile);
        if (z.empty()) continue;
        const double np = baernstein_norm(z, p).value;
        const double nq = baernstein_norm(z, q).value;
        if (nq > c * np + 1e-9) {
            // Rebuild and recompute before accepting.
            const FinVec z2 = build(profile);
            const double np2 = baernstein_norm(z2, p).value;
            const double nq2 = baernstein_norm(z2, q).value;
            if (nq2 > c * np2 + 1e-9)
                return DominationCounterexample{std::move(profile), z2, np2, nq2, nq2 / np2,
                                                tried};
        }
    }
    return std::nullopt;
}

}  // namespace bsp
