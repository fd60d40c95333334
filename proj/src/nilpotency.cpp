#include "bsp/nilpotency.hpp"

#include "bsp/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <iterator>
#include <stdexcept>

namespace bsp {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<double> parse_param_list(std::string_view text) {
    text = trim(text);
    std::vector<double> out;
    if (text.empty()) return out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string_view tok = trim(text.substr(pos, comma - pos));
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
            throw ParseError("bad parameter '" + std::string(tok) + "'");
        out.push_back(v);
        pos = comma + 1;
    }
    return out;
}

std::vector<double> sorted_set(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::vector<double> set_union(std::span<const double> a, std::span<const double> b) {
    std::vector<double> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<double> set_difference(std::span<const double> a, std::span<const double> b) {
    std::vector<double> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::string format_param_list(std::span<const double> v) {
    std::string out;
    char buf[32];
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        auto r = std::to_chars(buf, buf + sizeof buf, v[i]);
        out.append(buf, r.ptr);
    }
    return out;
}

}  // namespace

DirectSumSpec DirectSumSpec::make(std::vector<double> l, std::vector<double> m,
                                  std::vector<double> n, bool include_c0) {
    DirectSumSpec s;
    s.l_ = sorted_set(std::move(l));
    s.m_ = sorted_set(std::move(m));
    s.n_ = sorted_set(std::move(n));
    s.c0_ = include_c0;
    for (double p : s.l_)
        if (!std::isfinite(p) || !(p > 1.0))
            throw std::invalid_argument("Baernstein parameters must satisfy p > 1");
    for (double q : s.m_)
        if (!std::isfinite(q) || !(q >= 1.0))
            throw std::invalid_argument("l-space parameters must satisfy q >= 1");
    for (double r : s.n_)
        if (!std::isfinite(r) || !(r >= 1.0))
            throw std::invalid_argument("Schreier parameters must satisfy r >= 1");
    if (s.l_.empty() && s.m_.empty() && s.n_.empty() && !s.c0_)
        throw std::invalid_argument("direct sum must have at least one summand");
    return s;
}

DirectSumSpec DirectSumSpec::parse(std::string_view text) {
    std::vector<double> l, m, n;
    bool c0 = false;
    bool seen[4] = {false, false, false, false};
    std::size_t pos = 0;
    text = trim(text);
    while (pos <= text.size() && !text.empty()) {
        const std::size_t semi = std::min(text.find(';', pos), text.size());
        const std::string_view part = trim(text.substr(pos, semi - pos));
        pos = semi + 1;
        if (part.empty()) continue;
        const std::size_t eq = part.find('=');
        if (eq == std::string_view::npos)
            throw ParseError("expected 'key=value' in '" + std::string(part) + "'");
        const std::string_view key = trim(part.substr(0, eq));
        const std::string_view value = trim(part.substr(eq + 1));
        if (key == "L") {
            if (seen[0]) throw ParseError("duplicate key L");
            seen[0] = true;
            l = parse_param_list(value);
        } else if (key == "M") {
            if (seen[1]) throw ParseError("duplicate key M");
            seen[1] = true;
            m = parse_param_list(value);
        } else if (key == "N") {
            if (seen[2]) throw ParseError("duplicate key N");
            seen[2] = true;
            n = parse_param_list(value);
        } else if (key == "c0") {
            if (seen[3]) throw ParseError("duplicate key c0");
            seen[3] = true;
            if (value == "true" || value == "1")
                c0 = true;
            else if (value == "false" || value == "0")
                c0 = false;
            else
                throw ParseError("bad c0 value '" + std::string(value) + "'");
        } else {
            throw ParseError("unknown key '" + std::string(key) + "'");
        }
    }
    try {
        return make(std::move(l), std::move(m), std::move(n), c0);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

std::string DirectSumSpec::to_string() const {
    std::string out = "L=" + format_param_list(l_);
    out += "; M=" + format_param_list(m_);
    out += "; N=" + format_param_list(n_);
    out += "; c0=";
    out += c0_ ? "true" : "false";
    return out;
}

DirectSumSpec canonicalize(const DirectSumSpec& spec) {
    return DirectSumSpec::make({spec.L().begin(), spec.L().end()},
                               set_difference(spec.M(), spec.L()),
                               {spec.N().begin(), spec.N().end()},
                               spec.include_c0() && spec.N().empty());
}

int nilpotency_index(const DirectSumSpec& spec) {
    const int l = static_cast<int>(spec.L().size());
    const int lum = static_cast<int>(set_union(spec.L(), spec.M()).size());
    const int n = static_cast<int>(spec.N().size());
    if (n > 0) return l + lum + n;
    return spec.include_c0() ? l + lum : l + lum - 1;
}

std::vector<SpaceLabel> witness_chain(const DirectSumSpec& spec) {
    std::vector<SpaceLabel> labels;
    for (double p : spec.L()) labels.push_back(SpaceLabel::baernstein(p));
    for (double q : set_union(spec.L(), spec.M())) labels.push_back(SpaceLabel::ell(q));
    if (!spec.N().empty()) {
        for (double r : spec.N()) labels.push_back(SpaceLabel::schreier(r));
        labels.push_back(SpaceLabel::c0());
    } else if (spec.include_c0()) {
        labels.push_back(SpaceLabel::c0());
    }
    labels = sort_by_order(std::move(labels));
    if (static_cast<int>(labels.size()) != nilpotency_index(spec) + 1)
        throw std::logic_error("witness chain length disagrees with the index");
    return labels;
}

std::string_view rule_name(RuleKind r) {
    switch (r) {
        case RuleKind::B3: return "B3";
        case RuleKind::L2: return "L2";
        case RuleKind::S2: return "S2";
    }
    return "?";
}

std::optional<RuleCertificate> rule_check_path(std::span<const SpaceLabel> path,
                                               bool c0_rule) {
    std::vector<std::pair<SpaceLabel, std::vector<std::size_t>>> occurrences;
    for (std::size_t j = 0; j < path.size(); ++j) {
        const SpaceLabel& label = path[j];
        auto it = std::find_if(occurrences.begin(), occurrences.end(),
                               [&](const auto& o) { return o.first == label; });
        if (it == occurrences.end()) {
            occurrences.push_back({label, {}});
            it = std::prev(occurrences.end());
        }
        auto& where = it->second;
        where.push_back(j + 1);
        switch (label.family()) {
            case Family::Baernstein:
                if (where.size() >= 3)
                    return RuleCertificate{RuleKind::B3, label, {where[0], where[1], where[2]}};
                break;
            case Family::Ell:
                if (where.size() >= 2)
                    return RuleCertificate{RuleKind::L2, label, {where[0], where[1]}};
                break;
            case Family::C0:
                if (c0_rule && where.size() >= 2)
                    return RuleCertificate{RuleKind::L2, label, {where[0], where[1]}};
                break;
            case Family::Schreier:
                if (where.size() >= 2 && j + 1 < path.size())
                    return RuleCertificate{RuleKind::S2, label, {where[0], where[1]}};
                break;
        }
    }
    return std::nullopt;
}

int max_rule_free_length(const DirectSumSpec& spec) {
    const auto canon = canonicalize(spec);
    int len = 2 * static_cast<int>(canon.L().size()) + static_cast<int>(canon.M().size()) +
              static_cast<int>(canon.N().size());
    if (!canon.N().empty()) len += 1;      // one Schreier label may repeat at the end
    if (canon.include_c0()) len += 1;      // c_0 behaves like one more l label
    if (len != nilpotency_index(spec) + 1)
        throw std::logic_error("rule-free bound disagrees with the index");
    return len;
}

CertReport certify(const DirectSumSpec& spec, std::uint64_t exhaustive_limit) {
    CertReport report;
    report.k = nilpotency_index(spec);
    report.witness_chain = witness_chain(spec);
    report.max_rule_free_length = max_rule_free_length(spec);

    // The witness must be usable as the sharpness example: strictly
    // increasing, pairwise strictly singular inclusions, and rule-free.
    for (std::size_t i = 1; i < report.witness_chain.size(); ++i) {
        const auto& y = report.witness_chain[i - 1];
        const auto& z = report.witness_chain[i];
        if (compare(y, z) != Order::Less)
            throw std::logic_error("witness chain is not strictly increasing");
        const auto facts = classify_pair(y, z);
        if (facts.inclusion_strictly_singular != Fact::Yes ||
            facts.inclusion_compact != Fact::No)
            throw std::logic_error("witness link is not a strictly singular inclusion");
    }
    if (rule_check_path(report.witness_chain, true))
        throw std::logic_error("witness chain is not rule-free");

    // Proof family for paths: the canonical summands.
    const auto canon = canonicalize(spec);
    std::vector<SpaceLabel> family;
    for (double p : canon.L()) family.push_back(SpaceLabel::baernstein(p));
    for (double q : canon.M()) family.push_back(SpaceLabel::ell(q));
    for (double r : canon.N()) family.push_back(SpaceLabel::schreier(r));
    if (canon.include_c0()) family.push_back(SpaceLabel::c0());

    const std::size_t n = family.size();
    const std::size_t path_len = static_cast<std::size_t>(report.k) + 2;
    std::uint64_t total = 1;
    bool overflow = false;
    for (std::size_t i = 0; i < path_len; ++i) {
        if (total > exhaustive_limit / n) {
            overflow = true;
            break;
        }
        total *= n;
    }

    if (!overflow) {
        // Odometer over all n^(k+2) paths.
        std::vector<std::size_t> digits(path_len, 0);
        std::vector<SpaceLabel> path(path_len, family[0]);
        bool all_forced = true;
        std::uint64_t checked = 0;
        for (;;) {
            for (std::size_t i = 0; i < path_len; ++i) path[i] = family[digits[i]];
            if (!rule_check_path(path, canon.include_c0())) all_forced = false;
            ++checked;
            std::size_t carry = 0;
            while (carry < path_len && ++digits[carry] == n) {
                digits[carry] = 0;
                ++carry;
            }
            if (carry == path_len) break;
        }
        report.exhaustive_paths_checked = checked;
        report.all_long_paths_forced = all_forced;
    } else {
        // Counting bound: any path longer than max_rule_free_length fires.
        report.all_long_paths_forced = report.max_rule_free_length == report.k + 1;
    }
    return report;
}

}  // namespace bsp
