#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bsp/errors.hpp"
#include "bsp/nilpotency.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

using namespace bsp;

namespace {

std::vector<double> to_vec(std::span<const double> s) {
    return {s.begin(), s.end()};
}

// All direct sums with L in {2,3}, M in {1,2,3}, N in {1,2}, both c_0 flags.
std::vector<DirectSumSpec> spec_grid() {
    const std::vector<std::vector<double>> ls{{}, {2}, {3}, {2, 3}};
    const std::vector<std::vector<double>> ms{{},     {1},    {2},    {3},
                                              {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}};
    const std::vector<std::vector<double>> ns{{}, {1}, {2}, {1, 2}};
    std::vector<DirectSumSpec> out;
    for (const auto& l : ls)
        for (const auto& m : ms)
            for (const auto& n : ns)
                for (bool c0 : {false, true}) {
                    if (l.empty() && m.empty() && n.empty() && !c0) continue;
                    out.push_back(DirectSumSpec::make(l, m, n, c0));
                }
    return out;
}

std::vector<SpaceLabel> labels(std::initializer_list<const char*> names) {
    std::vector<SpaceLabel> out;
    for (const char* n : names) out.push_back(SpaceLabel::parse(n));
    return out;
}

}  // namespace

TEST_CASE("spec parsing and canonical text") {
    const auto s = DirectSumSpec::parse("L=2,3; M=1; N=1,2; c0=false");
    CHECK(to_vec(s.L()) == std::vector<double>{2, 3});
    CHECK(to_vec(s.M()) == std::vector<double>{1});
    CHECK(to_vec(s.N()) == std::vector<double>{1, 2});
    CHECK_FALSE(s.include_c0());
    CHECK(DirectSumSpec::parse(s.to_string()) == s);

    CHECK(DirectSumSpec::parse("L=; M=2; N=; c0=true").include_c0());
    CHECK(DirectSumSpec::parse("M=2").M().size() == 1);   // omitted keys default
    CHECK(to_vec(DirectSumSpec::parse("L=3,2,3").L()) == std::vector<double>{2, 3});

    CHECK_THROWS_AS(DirectSumSpec::parse(""), ParseError);  // trivial sum
    CHECK_THROWS_AS(DirectSumSpec::parse("L=1"), ParseError);
    CHECK_THROWS_AS(DirectSumSpec::parse("M=0.5"), ParseError);
    CHECK_THROWS_AS(DirectSumSpec::parse("L=2; L=3"), ParseError);
    CHECK_THROWS_AS(DirectSumSpec::parse("Q=2"), ParseError);
    CHECK_THROWS_AS(DirectSumSpec::parse("c0=maybe"), ParseError);
    CHECK_THROWS_AS(DirectSumSpec::make({}, {}, {}, false), std::invalid_argument);
}

TEST_CASE("canonical form drops shadowed summands") {
    const auto a = canonicalize(DirectSumSpec::parse("L=2; M=2,3"));
    CHECK(to_vec(a.M()) == std::vector<double>{3});  // l_2 is absorbed by B_2's block

    const auto b = canonicalize(DirectSumSpec::parse("N=1; c0=true"));
    CHECK_FALSE(b.include_c0());  // c_0 is absorbed once a Schreier summand exists

    const auto c = canonicalize(DirectSumSpec::parse("M=2; c0=true"));
    CHECK(c.include_c0());

    for (const auto& s : spec_grid()) {
        const auto once = canonicalize(s);
        CHECK(canonicalize(once) == once);
        CHECK(nilpotency_index(once) == nilpotency_index(s));
    }
}

TEST_CASE("nilpotency index values") {
    CHECK(nilpotency_index(DirectSumSpec::parse("L=2")) == 1);
    CHECK(nilpotency_index(DirectSumSpec::parse("L=2,3")) == 3);        // 2m-1
    CHECK(nilpotency_index(DirectSumSpec::parse("M=1,2,3")) == 2);      // m-1
    CHECK(nilpotency_index(DirectSumSpec::parse("N=1,2")) == 2);        // m
    CHECK(nilpotency_index(DirectSumSpec::parse("M=2")) == 0);
    CHECK(nilpotency_index(DirectSumSpec::parse("M=2; c0=true")) == 1);
    CHECK(nilpotency_index(DirectSumSpec::parse("c0=true")) == 0);
    CHECK(nilpotency_index(DirectSumSpec::parse("N=1; c0=true")) == 1);
    CHECK(nilpotency_index(DirectSumSpec::parse("L=2,3; M=1; N=1,2")) == 7);
}

TEST_CASE("witness chains") {
    CHECK(witness_chain(DirectSumSpec::parse("L=2")) == labels({"b:2", "l:2"}));
    CHECK(witness_chain(DirectSumSpec::parse("N=1")) == labels({"s:1", "c0"}));
    CHECK(witness_chain(DirectSumSpec::parse("L=2; M=3; N=1")) ==
          labels({"b:2", "s:1", "l:2", "l:3", "c0"}));
    CHECK(witness_chain(DirectSumSpec::parse("M=2; c0=true")) == labels({"l:2", "c0"}));
    CHECK(witness_chain(DirectSumSpec::parse("L=2,3; M=1; N=1,2")) ==
          labels({"l:1", "b:2", "b:3", "s:1", "l:2", "s:2", "l:3", "c0"}));

    for (const auto& s : spec_grid()) {
        const auto chain = witness_chain(s);
        CHECK(static_cast<int>(chain.size()) == nilpotency_index(s) + 1);
        for (std::size_t i = 0; i + 1 < chain.size(); ++i)
            CHECK(compare(chain[i], chain[i + 1]) == Order::Less);
        CHECK_FALSE(rule_check_path(chain, true).has_value());
    }
}

TEST_CASE("rule firing on label paths") {
    const auto b3 = rule_check_path(labels({"b:2", "b:2", "b:2"}), false);
    REQUIRE(b3.has_value());
    CHECK(b3->rule == RuleKind::B3);
    CHECK(b3->space == SpaceLabel::baernstein(2.0));
    CHECK(b3->positions == std::vector<std::size_t>{1, 2, 3});

    const auto s2 = rule_check_path(labels({"s:1", "s:1", "c0"}), false);
    REQUIRE(s2.has_value());
    CHECK(s2->rule == RuleKind::S2);
    CHECK(s2->positions == std::vector<std::size_t>{1, 2});

    // a second Schreier occurrence in final position does not fire
    CHECK_FALSE(rule_check_path(labels({"s:1", "c0", "s:1"}), false).has_value());
    CHECK_FALSE(rule_check_path(labels({"s:1", "s:1"}), false).has_value());

    const auto l2 = rule_check_path(labels({"l:2", "b:2", "l:2"}), false);
    REQUIRE(l2.has_value());
    CHECK(l2->rule == RuleKind::L2);
    CHECK(l2->positions == std::vector<std::size_t>{1, 3});

    // c_0 repetition counts as an l-rule only when enabled
    CHECK_FALSE(rule_check_path(labels({"c0", "c0"}), false).has_value());
    const auto c2 = rule_check_path(labels({"c0", "c0"}), true);
    REQUIRE(c2.has_value());
    CHECK(c2->rule == RuleKind::L2);
    CHECK(c2->space == SpaceLabel::c0());

    // the scan reports the earliest completed rule, not the earliest start
    const auto first = rule_check_path(labels({"b:2", "l:3", "b:2", "l:3", "b:2"}), false);
    REQUIRE(first.has_value());
    CHECK(first->rule == RuleKind::L2);
    CHECK(first->positions == std::vector<std::size_t>{2, 4});

    // distinct parameters never interact
    CHECK_FALSE(rule_check_path(labels({"b:2", "b:3", "b:2", "b:3"}), false).has_value());
    CHECK_FALSE(rule_check_path(labels({"l:1", "l:2", "l:3"}), false).has_value());
}

TEST_CASE("rule-free bound matches the index") {
    for (const auto& s : spec_grid())
        CHECK(max_rule_free_length(s) == nilpotency_index(s) + 1);
}

TEST_CASE("certification on named sums") {
    const auto one = certify(DirectSumSpec::parse("L=2"));
    CHECK(one.k == 1);
    CHECK(one.witness_chain == labels({"b:2", "l:2"}));
    CHECK(one.max_rule_free_length == 2);
    CHECK(one.exhaustive_paths_checked == std::uint64_t{1});
    CHECK(one.all_long_paths_forced);

    const auto flat = certify(DirectSumSpec::parse("M=2"));
    CHECK(flat.k == 0);
    CHECK(flat.exhaustive_paths_checked == std::uint64_t{1});
    CHECK(flat.all_long_paths_forced);

    const auto two = certify(DirectSumSpec::parse("N=1,2"));
    CHECK(two.k == 2);
    CHECK(two.witness_chain == labels({"s:1", "s:2", "c0"}));
    CHECK(two.exhaustive_paths_checked == std::uint64_t{16});  // 2 labels, paths of length 4
    CHECK(two.all_long_paths_forced);

    // large sum: path space 5^9 overflows the default limit, counting bound only
    const auto big = certify(DirectSumSpec::parse("L=2,3; M=1; N=1,2"));
    CHECK(big.k == 7);
    CHECK_FALSE(big.exhaustive_paths_checked.has_value());
    CHECK(big.all_long_paths_forced);
    const auto big2 = certify(DirectSumSpec::parse("L=2,3; M=1; N=1,2"), 5'000'000);
    CHECK(big2.exhaustive_paths_checked == std::uint64_t{1953125});
    CHECK(big2.all_long_paths_forced);
}

TEST_CASE("certification over the grid") {
    for (const auto& s : spec_grid()) {
        const auto report = certify(s, 200'000);
        CHECK(report.k == nilpotency_index(s));
        CHECK(report.max_rule_free_length == report.k + 1);
        CHECK(report.all_long_paths_forced);
        CHECK(report.witness_chain == witness_chain(s));
    }
}
