#pragma once

#include "bsp/spaces.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bsp {

/// A finite direct sum described by its summand parameters: Baernstein
/// parameters L (each > 1), l-space parameters M (each >= 1), Schreier
/// parameters N (each >= 1), and an optional c_0 summand.
class DirectSumSpec {
public:
    /// Deduplicates and sorts the sets, validates ranges, and rejects
    /// the trivial sum (everything empty and no c_0).
    static DirectSumSpec make(std::vector<double> l, std::vector<double> m,
                              std::vector<double> n, bool include_c0);

    /// Parses "L=2,3; M=1; N=1,2; c0=false". Omitted keys default to
    /// empty sets / false.
    static DirectSumSpec parse(std::string_view text);
    std::string to_string() const;

    std::span<const double> L() const { return l_; }
    std::span<const double> M() const { return m_; }
    std::span<const double> N() const { return n_; }
    bool include_c0() const { return c0_; }

    friend bool operator==(const DirectSumSpec&, const DirectSumSpec&) = default;

private:
    DirectSumSpec() = default;
    std::vector<double> l_, m_, n_;  // sorted, distinct
    bool c0_ = false;
};

/// Replaces M by M\L and drops the c_0 summand when N is non-empty;
/// neither change affects the isomorphism class of the sum.
DirectSumSpec canonicalize(const DirectSumSpec& spec);

/// The largest number of strictly singular operators on the sum whose
/// composition need not be compact: |L| + |L∪M| - 1 if N and c_0 are
/// absent, |L| + |L∪M| if only c_0 is present, |L| + |L∪M| + |N| otherwise.
int nilpotency_index(const DirectSumSpec& spec);

/// The sorted family of complemented subspaces witnessing sharpness;
/// always of length nilpotency_index(spec) + 1.
std::vector<SpaceLabel> witness_chain(const DirectSumSpec& spec);

enum class RuleKind { B3, L2, S2 };
std::string_view rule_name(RuleKind r);

/// A compactness rule firing on a path, with the 1-based positions of
/// the occurrences that trigger it.
struct RuleCertificate {
    RuleKind rule;
    SpaceLabel space;
    std::vector<std::size_t> positions;
};

/// First rule to fire on the path, scanning left to right: B3 = third
/// occurrence of one Baernstein label; L2 = second occurrence of one
/// l label (or of c_0 when c0_rule); S2 = second occurrence of one
/// Schreier label strictly before the final position. nullopt if the
/// path is rule-free.
std::optional<RuleCertificate> rule_check_path(std::span<const SpaceLabel> path,
                                               bool c0_rule);

/// Maximum length of a rule-free path over the canonical proof family;
/// always equals nilpotency_index(spec) + 1.
int max_rule_free_length(const DirectSumSpec& spec);

struct CertReport {
    int k = 0;
    std::vector<SpaceLabel> witness_chain;
    int max_rule_free_length = 0;
    std::optional<std::uint64_t> exhaustive_paths_checked;
    bool all_long_paths_forced = false;
};

/// Certifies nilpotency of index k+1: checks max_rule_free_length = k+1,
/// checks the witness chain (strictly increasing, rule-free, consecutive
/// inclusions strictly singular), and, when the path space fits within
/// exhaustive_limit, enumerates every path of length k+2 over the proof
/// family and confirms a rule fires on each.
CertReport certify(const DirectSumSpec& spec,
                   std::uint64_t exhaustive_limit = 1'000'000);

}  // namespace bsp
