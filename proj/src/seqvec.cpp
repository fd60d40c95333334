#include "bsp/seqvec.hpp"

#include "bsp/detail/numeric.hpp"
#include "bsp/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace bsp {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

FinVec FinVec::from_pairs(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    FinVec v;
    v.entries_.reserve(entries.size());
    Index prev = 0;
    for (const auto& [idx, val] : entries) {
        if (idx < 1)
            throw std::invalid_argument("vector index must be >= 1, got " + std::to_string(idx));
        if (idx == prev)
            throw std::invalid_argument("duplicate vector index " + std::to_string(idx));
        if (!std::isfinite(val))
            throw std::invalid_argument("non-finite coefficient at index " + std::to_string(idx));
        prev = idx;
        if (val != 0.0) v.entries_.emplace_back(idx, val);
    }
    return v;
}

FinVec FinVec::unit(Index n) {
    return from_pairs({{n, 1.0}});
}

double FinVec::coeff(Index index) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                               [](const Entry& e, Index i) { return e.first < i; });
    return (it != entries_.end() && it->first == index) ? it->second : 0.0;
}

FinVec FinVec::scaled(double t) const {
    FinVec v;
    if (t == 0.0) return v;
    v.entries_.reserve(entries_.size());
    for (const auto& [idx, val] : entries_) {
        const double y = t * val;
        if (y != 0.0) v.entries_.emplace_back(idx, y);
    }
    return v;
}

FinVec operator+(const FinVec& a, const FinVec& b) {
    FinVec v;
    v.entries_.reserve(a.entries_.size() + b.entries_.size());
    auto ia = a.entries_.begin(), ib = b.entries_.begin();
    while (ia != a.entries_.end() || ib != b.entries_.end()) {
        if (ib == b.entries_.end() || (ia != a.entries_.end() && ia->first < ib->first)) {
            v.entries_.push_back(*ia++);
        } else if (ia == a.entries_.end() || ib->first < ia->first) {
            v.entries_.push_back(*ib++);
        } else {
            const double s = ia->second + ib->second;
            if (s != 0.0) v.entries_.emplace_back(ia->first, s);
            ++ia, ++ib;
        }
    }
    return v;
}

bool is_schreier_set(std::span<const Index> indices) {
    std::vector<Index> s(indices.begin(), indices.end());
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.empty()) return true;
    return s.front() >= 1 && static_cast<Index>(s.size()) <= s.front();
}

bool is_schreier_chain(std::span<const std::vector<Index>> sets) {
    if (sets.empty()) return false;
    Index prev_max = 0;
    for (const auto& raw : sets) {
        std::vector<Index> s(raw.begin(), raw.end());
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (s.empty() || s.front() < 1 || static_cast<Index>(s.size()) > s.front()) return false;
        if (s.front() <= prev_max) return false;
        prev_max = s.back();
    }
    return true;
}

SchreierSet SchreierSet::make(std::vector<Index> indices) {
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    if (!indices.empty() &&
        (indices.front() < 1 || static_cast<Index>(indices.size()) > indices.front()))
        throw std::invalid_argument("not an admissible set: size exceeds smallest member");
    SchreierSet f;
    f.indices_ = std::move(indices);
    return f;
}

SchreierChain SchreierChain::make(std::vector<SchreierSet> sets) {
    if (sets.empty()) throw std::invalid_argument("chain must contain at least one set");
    Index prev_max = 0;
    for (const auto& f : sets) {
        if (f.empty()) throw std::invalid_argument("chain members must be non-empty");
        if (f.min() <= prev_max)
            throw std::invalid_argument("chain members must be strictly separated");
        prev_max = f.max();
    }
    SchreierChain c;
    c.sets_ = std::move(sets);
    return c;
}

double mu_p(const FinVec& x, const SchreierSet& f, double p) {
    detail::require_p_at_least_one(p);
    if (f.empty()) return 0.0;
    detail::CompensatedSum acc;
    for (Index i : f.indices()) acc.add(std::pow(std::abs(x.coeff(i)), p));
    return std::pow(acc.value(), 1.0 / p);
}

double beta_p(const FinVec& x, const SchreierChain& chain, double p) {
    detail::require_p_above_one(p);
    detail::CompensatedSum acc;
    for (const auto& f : chain.sets()) {
        detail::CompensatedSum block;
        for (Index i : f.indices()) block.add(std::abs(x.coeff(i)));
        acc.add(std::pow(block.value(), p));
    }
    return std::pow(acc.value(), 1.0 / p);
}

namespace {

Index parse_index(std::string_view tok) {
    tok = trim(tok);
    Index idx = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), idx);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError("bad vector index '" + std::string(tok) + "'");
    return idx;
}

double parse_value(std::string_view tok) {
    tok = trim(tok);
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    double val = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), val);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError("bad coefficient '" + std::string(tok) + "'");
    if (!std::isfinite(val)) throw ParseError("coefficient must be finite");
    return val;
}

}  // namespace

FinVec parse_vector(std::string_view text) {
    text = trim(text);
    if (text.empty()) return {};
    std::vector<FinVec::Entry> entries;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string_view item = trim(text.substr(pos, comma - pos));
        const std::size_t colon = item.find(':');
        if (colon == std::string_view::npos)
            throw ParseError("expected 'index:value' entry, got '" + std::string(item) + "'");
        entries.emplace_back(parse_index(item.substr(0, colon)),
                             parse_value(item.substr(colon + 1)));
        pos = comma + 1;
    }
    try {
        return FinVec::from_pairs(std::move(entries));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

std::string format_vector(const FinVec& x) {
    std::string out;
    char buf[64];
    bool first = true;
    for (const auto& [idx, val] : x.entries()) {
        if (!first) out += ',';
        first = false;
        auto ri = std::to_chars(buf, buf + sizeof buf, idx);
        out.append(buf, ri.ptr);
        out += ':';
        auto rv = std::to_chars(buf, buf + sizeof buf, val);
        out.append(buf, rv.ptr);
    }
    return out;
}

}  // namespace bsp
