#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bsp/errors.hpp"
#include "bsp/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

using namespace bsp;

namespace {

bool close(double a, double b, double rel = 1e-12) {
    return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

TEST_CASE("sampler output is canonical and sup-normalized") {
    VecSampler s(1);
    for (int t = 0; t < 200; ++t) {
        const auto x = s.next(10, 100);
        REQUIRE(!x.empty());
        CHECK(x.support_size() <= 10);
        CHECK(x.entries().front().first >= 1);
        CHECK(x.entries().back().first <= 100);
        for (std::size_t i = 1; i < x.entries().size(); ++i)
            CHECK(x.entries()[i - 1].first < x.entries()[i].first);
        CHECK(sup_norm(x) == 1.0);
    }
}

TEST_CASE("trial runs are deterministic in the seed") {
    const auto y = SpaceLabel::ell(2.0);
    const auto z = SpaceLabel::schreier(2.0);
    const auto a = run_inclusion_trials(y, z, 100, 42, true);
    const auto b = run_inclusion_trials(y, z, 100, 42, true);
    CHECK(a.trials == b.trials);
    CHECK(a.violations == b.violations);
    CHECK(a.max_ratio == b.max_ratio);
    CHECK(a.worst_input == b.worst_input);
    CHECK(a.ratios == b.ratios);
    CHECK(a.seed == 42);
    REQUIRE(a.ratios.size() == 100);
    CHECK(*std::max_element(a.ratios.begin(), a.ratios.end()) == a.max_ratio);
}

TEST_CASE("worst input reproduces the reported ratio") {
    const auto y = SpaceLabel::ell(2.0);
    const auto z = SpaceLabel::schreier(2.0);
    const auto r = run_inclusion_trials(y, z, 200, 7);
    CHECK(r.violations == 0);
    const double again = norm_in(z, r.worst_input) / norm_in(y, r.worst_input);
    CHECK(std::abs(again - r.max_ratio) <= 1e-12);
}

TEST_CASE("inclusion inequalities hold along every primitive direction") {
    using L = SpaceLabel;
    const std::vector<std::pair<SpaceLabel, SpaceLabel>> pairs{
        {L::ell(1.0), L::ell(2.0)},        {L::ell(1.0), L::baernstein(2.0)},
        {L::baernstein(1.5), L::baernstein(3.0)}, {L::baernstein(2.0), L::schreier(1.0)},
        {L::schreier(1.0), L::schreier(2.0)},     {L::ell(2.0), L::schreier(2.0)},
        {L::schreier(1.0), L::ell(2.0)},   {L::ell(2.0), L::c0()},
        {L::schreier(2.0), L::c0()},       {L::baernstein(2.0), L::ell(3.0)},
    };
    std::uint64_t seed = 1000;
    for (const auto& [y, z] : pairs) {
        const auto r = run_inclusion_trials(y, z, 150, seed++);
        const std::string pair = y.to_string() + " -> " + z.to_string();
        CAPTURE(pair);
        CHECK(r.violations == 0);
        const double c = *inclusion_constant(y, z).constant;
        CHECK(r.max_ratio <= c + 1e-9);
    }

    const auto id = run_inclusion_trials(L::ell(2.0), L::ell(2.0), 50, 3);
    CHECK(id.max_ratio == 1.0);
    CHECK(id.violations == 0);

    CHECK_THROWS_AS(run_inclusion_trials(L::c0(), L::ell(2.0), 10, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(run_inclusion_trials(L::ell(3.0), L::ell(2.0), 10, 1),
                    std::invalid_argument);
}

TEST_CASE("jameson bound checks") {
    const auto r = check_jameson(1.0, 2.0, 80, 11);
    CHECK(r.trials == 80);
    CHECK(r.violations == 0);
    CHECK(r.max_ratio <= jameson_constant(1.0, 2.0) + 1e-9);
    // samples are rescaled to unit Schreier norm before checking
    CHECK(close(schreier_norm(r.worst_input, 1.0).value, 1.0));

    const auto r2 = check_jameson(1.5, 3.0, 80, 12);
    CHECK(r2.violations == 0);
    CHECK(r2.max_ratio <= jameson_constant(1.5, 3.0) + 1e-9);

    CHECK_THROWS_AS(check_jameson(2.0, 2.0, 5, 1), std::domain_error);
    CHECK_THROWS_AS(check_jameson(0.5, 2.0, 5, 1), std::domain_error);
}

TEST_CASE("rearrangement checks") {
    for (double p : {1.0, 2.0}) {
        const auto r = check_rearrangement(p, 120, 21);
        CHECK(r.violations == 0);
        CHECK(r.max_ratio <= 1.0 + 1e-10);
    }
}

TEST_CASE("oracle trials") {
    const auto s = run_oracle_trials(SpaceLabel::schreier(2.0), 12, 80, 31);
    CHECK(s.violations == 0);
    CHECK(close(s.max_ratio, 1.0));
    const auto b = run_oracle_trials(SpaceLabel::baernstein(2.0), 8, 40, 32);
    CHECK(b.violations == 0);
    CHECK(close(b.max_ratio, 1.0));

    CHECK_THROWS_AS(run_oracle_trials(SpaceLabel::ell(2.0), 10, 5, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(run_oracle_trials(SpaceLabel::schreier(2.0), 21, 5, 1), LimitError);
    CHECK_THROWS_AS(run_oracle_trials(SpaceLabel::baernstein(2.0), 13, 5, 1), LimitError);
}

TEST_CASE("normalized block vectors") {
    CHECK(make_xk(1, 2.0) == FinVec::unit(1));

    const auto x3 = make_xk(3, 2.0);
    REQUIRE(x3.support_size() == 4);
    CHECK(x3.coeff(4) == 0.25);
    CHECK(x3.coeff(7) == 0.25);
    CHECK(sup_norm(x3) == std::ldexp(1.0, -2));

    std::vector<Index> support;
    for (const auto& [i, v] : x3.entries()) support.push_back(i);
    CHECK(is_schreier_set(support));

    for (int k = 1; k <= 6; ++k)
        for (double p : {1.5, 2.0, 3.0}) {
            const auto r = baernstein_norm(make_xk(k, p), p);
            CHECK(std::abs(r.value - 1.0) <= 1e-12);
            REQUIRE(r.witness.has_value());
            CHECK(r.witness->size() == 1);  // one full dyadic block
        }

    const std::vector<Index> sub{5, 9};
    const auto xs = make_xk(2, sub, 2.0);
    CHECK(xs == parse_vector("5:0.5,9:0.5"));
    CHECK(std::abs(baernstein_norm(xs, 2.0).value - 1.0) <= 1e-12);

    const std::vector<Index> too_low{1, 9};
    const std::vector<Index> repeat{5, 5};
    const std::vector<Index> short_list{5};
    CHECK_THROWS_AS(make_xk(2, too_low, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(make_xk(2, repeat, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(make_xk(2, short_list, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(make_xk(0, 2.0), std::domain_error);
    CHECK_THROWS_AS(make_xk(21, 2.0), LimitError);
    CHECK_THROWS_AS(make_xk(2, 1.0), std::domain_error);
}

TEST_CASE("domination probe finds the reversal and knows when to stop") {
    const auto hit = domination_probe(3.0, 1.5, 5, 1.0, 50, 7);
    REQUIRE(hit.has_value());
    CHECK(hit->candidates_tried == 1);  // the constant profile already works
    CHECK(hit->profile == std::vector<double>(5, 1.0));
    CHECK(close(hit->norm_from, std::pow(5.0, 1.0 / 3.0)));
    CHECK(close(hit->norm_to, std::pow(5.0, 2.0 / 3.0)));
    CHECK(close(hit->ratio, hit->norm_to / hit->norm_from));
    CHECK(hit->ratio > 1.0 + 1e-9);
    // the stored vector reproduces both norms
    CHECK(close(baernstein_norm(hit->vec, 3.0).value, hit->norm_from));
    CHECK(close(baernstein_norm(hit->vec, 1.5).value, hit->norm_to));

    // in the genuine inclusion direction there is nothing to find
    CHECK_FALSE(domination_probe(1.5, 3.0, 5, 1.0, 40, 7).has_value());
    CHECK_FALSE(domination_probe(2.0, 2.0, 4, 1.0, 30, 7).has_value());

    CHECK_THROWS_AS(domination_probe(1.0, 2.0, 3, 1.0, 10, 1), std::domain_error);
    CHECK_THROWS_AS(domination_probe(2.0, 3.0, 7, 1.0, 10, 1), LimitError);
    CHECK_THROWS_AS(domination_probe(2.0, 3.0, 3, 0.0, 10, 1), std::domain_error);
    CHECK_THROWS_AS(domination_probe(2.0, 3.0, 3, 1.0, 0, 1), std::domain_error);
}
