#pragma once

#include "bsp/norms.hpp"
#include "bsp/seqvec.hpp"
#include "bsp/spaces.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

namespace bsp {

/// Outcome of a randomized inequality check. worst_input is the sample
/// attaining max_ratio and reproduces it when re-fed through the norms.
struct TrialReport {
    std::int64_t trials = 0;
    std::int64_t violations = 0;
    double max_ratio = 0.0;
    FinVec worst_input;
    std::uint64_t seed = 0;
    std::vector<double> ratios;  // per-trial ratios, filled only on request
};

/// Deterministic sampler of canonical sparse vectors. Mixes uniform,
/// exponential, and sparse-spike coefficient laws and several index
/// ranges; every sample is rescaled to sup norm 1.
class VecSampler {
public:
    explicit VecSampler(std::uint64_t seed) : eng_(seed) {}

    FinVec next(int max_support_size = 40, Index max_index = 10000);
    double uniform01();  // (0, 1]
    std::uint64_t below(std::uint64_t n);

private:
    std::mt19937_64 eng_;
};

/// Checks ||x||_Z <= C ||x||_Y + 1e-9 on random samples, with C taken
/// from inclusion_constant. Requires a comparable pair.
TrialReport run_inclusion_trials(const SpaceLabel& y, const SpaceLabel& z,
                                 std::int64_t trials, std::uint64_t seed,
                                 bool record_ratios = false);

/// Checks the three displayed bounds behind the S_p -> l_q constant on
/// random decreasing vectors supported on {1..2^K}, K <= 6, rescaled to
/// unit Schreier norm: coordinate decay x(2^{m+1}) <= 2^{-m/p}, per-block
/// l_q mass on [2^{m+1}, 2^{m+2}), and the final l_q bound. Tolerance 1e-9.
TrialReport check_jameson(double p, double q, std::int64_t trials, std::uint64_t seed);

/// Checks that the decreasing rearrangement never increases the Schreier
/// norm and preserves l_q norms, tolerance 1e-10.
TrialReport check_rearrangement(double p, std::int64_t trials, std::uint64_t seed);

/// Compares an exact norm against its brute-force oracle on random
/// vectors with indices inside {1..max_support}; a violation is a
/// relative disagreement beyond 1e-12.
TrialReport run_oracle_trials(const SpaceLabel& space, int max_support,
                              std::int64_t trials, std::uint64_t seed);

/// Normalized block vector: value 2^{1-k} at subseq(j) for j in the
/// dyadic block [2^{k-1}, 2^k). subseq must be strictly increasing with
/// subseq(j) >= j; empty means the identity. The support is always an
/// admissible set, so the vector is a unit vector in every B_p.
FinVec make_xk(int k, std::span<const Index> subseq, double p);
FinVec make_xk(int k, double p);  // identity subsequence

struct DominationCounterexample {
    std::vector<double> profile;  // coefficients a_1..a_K
    FinVec vec;                   // sum_k a_k x_k
    double norm_from;             // B_p norm
    double norm_to;               // B_q norm
    double ratio;                 // norm_to / norm_from
    std::int64_t candidates_tried = 0;
};

/// Best-effort search for coefficients a with
/// ||sum a_k x_k||_{B_q} > C ||sum a_k x_k||_{B_p} (identity
/// subsequences, so both norms see the same vector). nullopt means no
/// counterexample was found within the budget, never a proof of absence.
std::optional<DominationCounterexample> domination_probe(double p, double q, int blocks,
                                                         double c, std::int64_t budget,
                                                         std::uint64_t seed);

}  // namespace bsp
