#pragma once

#include "bsp/norms.hpp"
#include "bsp/seqvec.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bsp {

enum class Family { Ell, Baernstein, Schreier, C0 };

/// A label from {l_p : p >= 1} | {B_p : p > 1} | {S_p : p >= 1} | {c_0}.
class SpaceLabel {
public:
    static SpaceLabel ell(double p);         // p >= 1
    static SpaceLabel baernstein(double p);  // p > 1
    static SpaceLabel schreier(double p);    // p >= 1
    static SpaceLabel c0();

    /// Parses "l:p", "b:p", "s:p", or "c0".
    static SpaceLabel parse(std::string_view text);
    std::string to_string() const;

    Family family() const { return family_; }
    double param() const { return p_; }  // 0 for c_0

    friend bool operator==(const SpaceLabel&, const SpaceLabel&) = default;

private:
    SpaceLabel(Family f, double p) : family_(f), p_(p) {}
    Family family_;
    double p_;
};

enum class Order { Less, Equal, Greater };

/// Y is formally included in Z (reflexive; the five-case definition).
bool precedes(const SpaceLabel& y, const SpaceLabel& z);

/// Trichotomy consistent with precedes: Less iff strict inclusion.
Order compare(const SpaceLabel& y, const SpaceLabel& z);

/// Strictly increasing enumeration; rejects duplicate labels.
std::vector<SpaceLabel> sort_by_order(std::vector<SpaceLabel> labels);

/// ((2^{q/p}-1)/(2^{(q-p)/p}-1))^{1/q}, the norm bound for the formal
/// inclusion of the p-convexified Schreier space into l_q. Requires
/// 1 <= p < q.
double jameson_constant(double p, double q);

/// The nine proven one-step inclusions.
enum class LinkId { P1, P2, P3, P4, P5, P6, P7, P8, P9 };
std::string_view link_name(LinkId id);

/// One primitive inclusion with its proven norm constant.
struct PrimitiveLink {
    LinkId id;
    SpaceLabel from;
    SpaceLabel to;
    double constant;
};

struct InclusionAnswer {
    SpaceLabel from;
    SpaceLabel to;
    bool comparable = false;           // whether from is formally included in to
    std::optional<double> constant;    // product over the route; 1 for identity
    std::vector<PrimitiveLink> route;  // empty for identity
    std::optional<bool> strictly_singular;
    std::optional<bool> compact;
};

/// Norm constant and route for the formal inclusion of y into z;
/// comparable=false when no inclusion exists.
InclusionAnswer inclusion_constant(const SpaceLabel& y, const SpaceLabel& z);

enum class Fact { Yes, No, NotEstablished };
std::string_view fact_name(Fact f);

struct PairClassification {
    SpaceLabel from;
    SpaceLabel to;
    Fact formal_inclusion = Fact::NotEstablished;
    std::optional<double> constant;
    Fact inclusion_strictly_singular = Fact::NotEstablished;
    Fact inclusion_compact = Fact::NotEstablished;
    Fact ss_noncompact_exists = Fact::NotEstablished;
    std::vector<std::string> notes;
};

/// Established operator-theoretic facts about the pair; anything not
/// covered by a proven statement is reported NotEstablished, never guessed.
PairClassification classify_pair(const SpaceLabel& y, const SpaceLabel& z);

/// Norm of x in the space the label names.
double norm_in(const SpaceLabel& space, const FinVec& x);

}  // namespace bsp
