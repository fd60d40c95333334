#include "bsp/spaces.hpp"

#include "bsp/detail/numeric.hpp"
#include "bsp/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <tuple>

namespace bsp {

SpaceLabel SpaceLabel::ell(double p) {
    if (!std::isfinite(p)) throw std::domain_error("space parameter must be finite");
    detail::require_p_at_least_one(p);
    return {Family::Ell, p};
}

SpaceLabel SpaceLabel::baernstein(double p) {
    if (!std::isfinite(p)) throw std::domain_error("space parameter must be finite");
    detail::require_p_above_one(p);
    return {Family::Baernstein, p};
}

SpaceLabel SpaceLabel::schreier(double p) {
    if (!std::isfinite(p)) throw std::domain_error("space parameter must be finite");
    detail::require_p_at_least_one(p);
    return {Family::Schreier, p};
}

SpaceLabel SpaceLabel::c0() {
    return {Family::C0, 0.0};
}

SpaceLabel SpaceLabel::parse(std::string_view text) {
    auto trimmed = text;
    while (!trimmed.empty() && trimmed.front() == ' ') trimmed.remove_prefix(1);
    while (!trimmed.empty() && trimmed.back() == ' ') trimmed.remove_suffix(1);
    if (trimmed == "c0") return c0();
    if (trimmed.size() < 3 || trimmed[1] != ':')
        throw ParseError("bad space label '" + std::string(text) +
                         "' (expected l:p, b:p, s:p, or c0)");
    double p = 0.0;
    const char* begin = trimmed.data() + 2;
    const char* end = trimmed.data() + trimmed.size();
    auto [ptr, ec] = std::from_chars(begin, end, p);
    if (ec != std::errc{} || ptr != end)
        throw ParseError("bad space parameter in '" + std::string(text) + "'");
    try {
        switch (trimmed[0]) {
            case 'l': return ell(p);
            case 'b': return baernstein(p);
            case 's': return schreier(p);
            default: break;
        }
    } catch (const std::domain_error& e) {
        throw ParseError(e.what());
    }
    throw ParseError("unknown space family '" + std::string(1, trimmed[0]) + "'");
}

std::string SpaceLabel::to_string() const {
    if (family_ == Family::C0) return "c0";
    char buf[32];
    auto r = std::to_chars(buf, buf + sizeof buf, p_);
    std::string param(buf, r.ptr);
    switch (family_) {
        case Family::Ell: return "l:" + param;
        case Family::Baernstein: return "b:" + param;
        case Family::Schreier: return "s:" + param;
        default: return "c0";
    }
}

namespace {

// The order is linear; this key realizes it lexicographically:
// l_1, then all B_p by parameter, then l_p/S_p interleaved by parameter
// with l_p just before S_p, then c_0.
std::tuple<int, double, int> order_key(const SpaceLabel& x) {
    switch (x.family()) {
        case Family::Ell:
            return x.param() == 1.0 ? std::tuple{0, 0.0, 0} : std::tuple{2, x.param(), 0};
        case Family::Baernstein:
            return {1, x.param(), 0};
        case Family::Schreier:
            return {2, x.param(), 1};
        case Family::C0:
            return {3, 0.0, 0};
    }
    throw std::logic_error("unreachable");
}

}  // namespace

bool precedes(const SpaceLabel& y, const SpaceLabel& z) {
    const double p = y.param();
    const double q = z.param();
    if (y.family() == Family::Ell && p == 1.0) return true;
    switch (y.family()) {
        case Family::Baernstein:
            switch (z.family()) {
                case Family::Baernstein: return q >= p;
                case Family::Ell: return q > 1.0;
                case Family::Schreier: return true;
                case Family::C0: return true;
            }
            break;
        case Family::Ell:  // p > 1 here
            switch (z.family()) {
                case Family::Ell: return q >= p;
                case Family::Schreier: return q >= p;
                case Family::C0: return true;
                case Family::Baernstein: return false;
            }
            break;
        case Family::Schreier:
            switch (z.family()) {
                case Family::Ell: return q > p;
                case Family::Schreier: return q >= p;
                case Family::C0: return true;
                case Family::Baernstein: return false;
            }
            break;
        case Family::C0:
            return z.family() == Family::C0;
    }
    throw std::logic_error("unreachable");
}

Order compare(const SpaceLabel& y, const SpaceLabel& z) {
    const auto ky = order_key(y);
    const auto kz = order_key(z);
    if (ky < kz) return Order::Less;
    if (kz < ky) return Order::Greater;
    return Order::Equal;
}

std::vector<SpaceLabel> sort_by_order(std::vector<SpaceLabel> labels) {
    std::sort(labels.begin(), labels.end(), [](const SpaceLabel& a, const SpaceLabel& b) {
        return compare(a, b) == Order::Less;
    });
    for (std::size_t i = 1; i < labels.size(); ++i)
        if (labels[i - 1] == labels[i])
            throw std::invalid_argument("duplicate label " + labels[i].to_string());
    return labels;
}

double jameson_constant(double p, double q) {
    detail::require_p_at_least_one(p);
    if (!(q > p)) throw std::domain_error("jameson constant requires q > p");
    const double num = std::pow(2.0, q / p) - 1.0;
    const double den = std::pow(2.0, (q - p) / p) - 1.0;
    return std::pow(num / den, 1.0 / q);
}

std::string_view link_name(LinkId id) {
    switch (id) {
        case LinkId::P1: return "P1";
        case LinkId::P2: return "P2";
        case LinkId::P3: return "P3";
        case LinkId::P4: return "P4";
        case LinkId::P5: return "P5";
        case LinkId::P6: return "P6";
        case LinkId::P7: return "P7";
        case LinkId::P8: return "P8";
        case LinkId::P9: return "P9";
    }
    return "?";
}

namespace {

PrimitiveLink make_link(LinkId id, SpaceLabel from, SpaceLabel to) {
    const double c =
        id == LinkId::P7 ? jameson_constant(from.param(), to.param()) : 1.0;
    return {id, from, to, c};
}

// Fixed routing table over the nine primitive links; every strict pair
// gets a deterministic route, and constants multiply along it.
std::vector<PrimitiveLink> route_for(const SpaceLabel& y, const SpaceLabel& z) {
    const double p = y.param();
    const double q = z.param();
    const auto sch = &SpaceLabel::schreier;

    if (y.family() == Family::Ell && z.family() == Family::Ell)
        return {make_link(LinkId::P1, y, z)};
    if (y.family() == Family::Ell && z.family() == Family::Baernstein)
        return {make_link(LinkId::P2, y, z)};  // only from l_1
    if (y.family() == Family::Baernstein && z.family() == Family::Baernstein)
        return {make_link(LinkId::P3, y, z)};
    if (y.family() == Family::Baernstein && z.family() == Family::Schreier) {
        if (q == 1.0) return {make_link(LinkId::P4, y, z)};
        return {make_link(LinkId::P4, y, sch(1.0)), make_link(LinkId::P5, sch(1.0), z)};
    }
    if (y.family() == Family::Baernstein && z.family() == Family::Ell)
        return {make_link(LinkId::P4, y, sch(1.0)), make_link(LinkId::P7, sch(1.0), z)};
    if (y.family() == Family::Baernstein && z.family() == Family::C0)
        return {make_link(LinkId::P4, y, sch(1.0)), make_link(LinkId::P9, sch(1.0), z)};
    if (y.family() == Family::Ell && z.family() == Family::Schreier) {
        if (q == p) return {make_link(LinkId::P6, y, z)};
        return {make_link(LinkId::P6, y, sch(p)), make_link(LinkId::P5, sch(p), z)};
    }
    if (y.family() == Family::Schreier && z.family() == Family::Ell)
        return {make_link(LinkId::P7, y, z)};
    if (y.family() == Family::Schreier && z.family() == Family::Schreier)
        return {make_link(LinkId::P5, y, z)};
    if (y.family() == Family::Ell && z.family() == Family::C0)
        return {make_link(LinkId::P8, y, z)};
    if (y.family() == Family::Schreier && z.family() == Family::C0)
        return {make_link(LinkId::P9, y, z)};
    throw std::logic_error("no route for comparable pair " + y.to_string() + " -> " +
                           z.to_string());
}

}  // namespace

InclusionAnswer inclusion_constant(const SpaceLabel& y, const SpaceLabel& z) {
    InclusionAnswer a{y, z, false, std::nullopt, {}, std::nullopt, std::nullopt};
    if (!precedes(y, z)) return a;
    a.comparable = true;
    if (y == z) {
        a.constant = 1.0;
        return a;
    }
    a.route = route_for(y, z);
    double c = 1.0;
    for (const auto& link : a.route) c *= link.constant;
    a.constant = c;
    a.strictly_singular = true;
    a.compact = false;  // the inclusion maps the unit vector basis onto the unit vector basis
    return a;
}

std::string_view fact_name(Fact f) {
    switch (f) {
        case Fact::Yes: return "yes";
        case Fact::No: return "no";
        case Fact::NotEstablished: return "not-established";
    }
    return "?";
}

PairClassification classify_pair(const SpaceLabel& y, const SpaceLabel& z) {
    PairClassification c{y,
                         z,
                         Fact::NotEstablished,
                         std::nullopt,
                         Fact::NotEstablished,
                         Fact::NotEstablished,
                         Fact::NotEstablished,
                         {}};
    const auto inc = inclusion_constant(y, z);
    c.formal_inclusion = inc.comparable ? Fact::Yes : Fact::No;
    c.constant = inc.constant;

    if (y == z) {
        c.inclusion_strictly_singular = Fact::No;
        c.inclusion_compact = Fact::No;
        c.notes.push_back("the formal inclusion is the identity operator");
    } else if (inc.comparable) {
        c.inclusion_strictly_singular = Fact::Yes;
        c.inclusion_compact = Fact::No;
        c.notes.push_back("the inclusion maps the unit vector basis onto a normalized "
                          "basis with no convergent subsequence, hence is not compact");
    }

    if (y.family() == Family::Baernstein && z.family() == Family::Baernstein) {
        c.ss_noncompact_exists = Fact::Yes;
        c.notes.push_back("strictly singular non-compact operators exist between any "
                          "two spaces of this family, in both directions");
    } else if (compare(y, z) == Order::Less) {
        c.ss_noncompact_exists = Fact::Yes;  // witnessed by the formal inclusion
    } else if (y == z) {
        switch (y.family()) {
            case Family::Ell:
            case Family::C0:
                c.ss_noncompact_exists = Fact::No;
                c.notes.push_back("every strictly singular operator here is compact");
                break;
            case Family::Schreier:
                c.ss_noncompact_exists = Fact::Yes;
                c.notes.push_back("a strictly singular non-compact operator exists, "
                                  "although any composition of two is compact");
                break;
            case Family::Baernstein:
                break;  // covered by the two-sided case above
        }
    } else if (y.family() == Family::Ell && z.family() == Family::Ell &&
               z.param() < y.param()) {
        c.ss_noncompact_exists = Fact::No;
        c.notes.push_back("every operator in this direction is compact");
    }

    return c;
}

double norm_in(const SpaceLabel& space, const FinVec& x) {
    switch (space.family()) {
        case Family::Ell: return lp_norm(x, space.param());
        case Family::Baernstein: return baernstein_norm(x, space.param()).value;
        case Family::Schreier: return schreier_norm(x, space.param()).value;
        case Family::C0: return sup_norm(x);
    }
    throw std::logic_error("unreachable");
}

}  // namespace bsp
