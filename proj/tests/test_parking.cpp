#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "madfa/parking.hpp"
#include "madfa/parking_count.hpp"
#include "madfa/parking_enum.hpp"
#include "madfa/weight.hpp"

using namespace madfa;

namespace {
std::vector<std::vector<Label>> slots_of(const std::string& text) { return parse_pf_text(text); }
}  // namespace

TEST_CASE("weight function families") {
    auto m2 = phi_mk(2);
    CHECK(m2(1) == 1);
    CHECK(m2(3) == 9);
    CHECK(m2.name() == "m^2");

    auto f = phi_constrained(2, 1);  // 2(m+1)^2 - 2
    CHECK(f(1) == 6);
    CHECK(f(2) == 16);
    CHECK(f.name() == "2(m+1)^2-2");

    CHECK(phi_2mk_minus1(3).name() == "2m^3-1");
    CHECK(phi_2mk_minus1(1)(1) == 1);

    CHECK_THROWS_AS(WeightFunction::power(2, 1, 0, -3), std::invalid_argument);  // phi(1) < 0
    CHECK_THROWS_AS(WeightFunction::power(0, 1, 0, 0), std::invalid_argument);

    auto tab = WeightFunction::table({1, 4, 9});
    CHECK(tab(2) == 4);
    CHECK_THROWS_AS(tab(4), std::out_of_range);
    CHECK_THROWS_AS(WeightFunction::table({3, 2}), std::invalid_argument);

    CHECK_THROWS_AS(phi_2mk(4)(100'000), std::overflow_error);
    CHECK(phi_2mk(4)(300) == 16'200'000'000LL);
}

TEST_CASE("parking condition") {
    auto m2 = phi_mk(2);
    CHECK(is_parking(slots_of("(12|·|·|·)"), m2));
    CHECK_FALSE(is_parking(slots_of("(·|12|·|·)"), m2));
    CHECK(is_parking(slots_of("(·|1|·|2)"), phi_2mk(1)));

    // structural errors are not "false"
    CHECK_THROWS_AS(is_parking(slots_of("(1|1)"), phi_2mk(1)), std::invalid_argument);
    CHECK_THROWS_AS(is_parking(slots_of("(1|2)"), phi_2mk(1)), std::invalid_argument);  // 4 slots needed
}

TEST_CASE("enumerate_pf matches the worked structures for m^2, n=2") {
    auto pfs = enumerate_pf(phi_mk(2), 2);
    REQUIRE(pfs.size() == 7);
    std::set<std::string> seen;
    for (const auto& pf : pfs) seen.insert(to_text(pf));
    std::set<std::string> expected{
        "(12|·|·|·)", "(1|2|·|·)", "(1|·|2|·)",
        "(1|·|·|2)",       "(2|1|·|·)", "(2|·|1|·)",
        "(2|·|·|1)"};
    CHECK(seen == expected);
}

TEST_CASE("enumerate_pf trivial cases") {
    auto empty = enumerate_pf(phi_mk(2), 0);
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].slots.empty());
    CHECK(to_text(empty[0]) == "()");
}

TEST_CASE("enumeration with a flat tabulated weight function") {
    // phi constant at 3: every map of [n] into three slots parks
    auto flat = WeightFunction::table({3, 3, 3});
    for (int n = 0; n <= 3; ++n) {
        BigCount enumerated = 0;
        for_each_pf(flat, n, [&](const ParkingFunction& pf) {
            ++enumerated;
            REQUIRE(is_parking(pf.slots, flat));
        });
        CHECK(enumerated == count_pf(flat, n));
    }
    CHECK(count_pf(flat, 3) == 27);
    BigCount simple = 0;
    for_each_simple_pf(flat, 3, [&](const ParkingFunction&) { ++simple; });
    CHECK(simple == count_simple_pf(flat, 3));  // 3! placements
}

TEST_CASE("enumeration over arbitrary label sets") {
    std::size_t count = 0;
    for_each_pf(phi_mk(1), 2, {3, 7}, [&](const ParkingFunction& pf) {
        ++count;
        CHECK(pf.labels == std::vector<Label>{3, 7});
        auto order = q_order(pf);
        std::sort(order.begin(), order.end());
        CHECK(order == pf.labels);  // q order permutes the labels
    });
    CHECK(count == 3);  // (3|7), (7|3), (37|·) -- count_pf(m, 2)
}

TEST_CASE("enumeration counts match count_pf across the family") {
    for (const auto& phi : {phi_mk(1), phi_mk(2), phi_2mk(1), phi_2mk(2), phi_2mk_minus1(1),
                            phi_2mk_minus1(2), phi_constrained(1, 1), phi_constrained(2, 1)}) {
        for (int n = 0; n <= 4; ++n) {
            BigCount enumerated = 0;
            std::set<std::string> distinct;
            for_each_pf(phi, n, [&](const ParkingFunction& pf) {
                ++enumerated;
                distinct.insert(to_text(pf));
                REQUIRE(is_parking(pf.slots, phi));
            });
            INFO(phi.name() << " n=" << n);
            CHECK(enumerated == count_pf(phi, n));
            CHECK(BigCount(distinct.size()) == enumerated);
        }
    }
}

TEST_CASE("count_pf pinned values") {
    CHECK(count_pf(phi_mk(1), 3) == 16);
    CHECK(count_pf(phi_mk(2), 2) == 7);
    CHECK(count_pf(phi_2mk(2), 2) == 28);
    CHECK(count_pf(phi_mk(2), 3) == 142);
    // (n+1)^(n-1) for the classical family
    for (int n = 1; n <= 8; ++n)
        CHECK(count_pf(phi_mk(1), n) == pow_count(BigCount(n + 1), n - 1));
}

namespace {
// literal composition-sum route, kept independent of the library's forward pass
BigCount simple_count_by_compositions(const WeightFunction& phi, int n) {
    BigCount total = 0;
    for_each_composition(n, [&](const Composition& tau) {
        BigCount prod = 1;
        for (int i = 1; i <= tau.length() && prod != 0; ++i) {
            std::int64_t width = i == 1 ? phi(1)
                                        : phi(1 + partial_sum(tau, i - 1)) -
                                              phi(1 + partial_sum(tau, i - 2));
            prod *= binomial(width, tau.parts[i - 1]);
        }
        total += prod;
    });
    return factorial(n) * total;
}
}  // namespace

TEST_CASE("count_simple_pf equals the composition sum") {
    for (const auto& phi : {phi_mk(1), phi_mk(3), phi_2mk(2), phi_2mk_minus1(2),
                            phi_constrained(2, 1), phi_constrained(3, 2)})
        for (int n = 0; n <= 10; ++n) {
            INFO(phi.name() << " n=" << n);
            REQUIRE(count_simple_pf(phi, n) == simple_count_by_compositions(phi, n));
        }
}

TEST_CASE("count_simple_pf pinned values") {
    CHECK(count_simple_pf(phi_2mk_minus1(2), 3) == 450);
    CHECK(count_simple_pf(phi_mk(1), 4) == 24);
    CHECK(count_simple_pf(phi_2mk_minus1(3), 4) == 1434384);
    // Catalan row: s(2m-1; n) / n!
    const std::int64_t catalan[] = {1, 1, 2, 5, 14, 42, 132};
    for (int n = 0; n <= 6; ++n)
        CHECK(count_simple_pf(phi_2mk_minus1(1), n) == BigCount(catalan[n]) * factorial(n));
}

TEST_CASE("simple enumeration agrees with its count") {
    for (const auto& phi : {phi_mk(1), phi_mk(2), phi_2mk(2), phi_2mk_minus1(2),
                            phi_constrained(2, 1)}) {
        for (int n = 0; n <= 4; ++n) {
            BigCount enumerated = 0;
            for_each_simple_pf(phi, n, [&](const ParkingFunction& pf) {
                ++enumerated;
                REQUIRE(is_simple_pf(pf));
                REQUIRE(is_parking(pf.slots, phi));
            });
            INFO(phi.name() << " n=" << n);
            CHECK(enumerated == count_simple_pf(phi, n));
        }
    }
}

TEST_CASE("simple enumeration examples") {
    auto perms = enumerate_simple_pf(phi_mk(1), 2);
    REQUIRE(perms.size() == 2);
    std::set<std::string> seen;
    for (const auto& pf : perms) seen.insert(to_text(pf));
    CHECK(seen == std::set<std::string>{"(1|2)", "(2|1)"});

    auto single = enumerate_simple_pf(phi_2mk_minus1(2), 1);
    REQUIRE(single.size() == 1);
    CHECK(to_text(single[0]) == "(1)");  // phi(1) = 1: a single slot

    // m^2, n=2: the 7 above minus (12|..)
    CHECK(enumerate_simple_pf(phi_mk(2), 2).size() == 6);
}

TEST_CASE("frobenius coefficients for m^2") {
    auto m2 = phi_mk(2);
    CHECK(frobenius_coefficient(m2, Composition{{2, 1}}) == 8);
    CHECK(frobenius_coefficient(m2, Composition{{1, 1, 1}}) == 18);
    CHECK(frobenius_coefficient(m2, Composition{{3}}) == 1);
    CHECK(frobenius_coefficient(m2, Composition{{1, 2}}) == 3);
}

TEST_CASE("frobenius route equals the recurrence") {
    CHECK(count_pf_via_frobenius(phi_mk(1), 0) == 1);
    CHECK(count_pf_via_frobenius(phi_2mk(1), 2) == 12);
    CHECK(count_pf_via_frobenius(phi_2mk(1), 2) == count_pf(phi_2mk(1), 2));
    for (const auto& phi : {phi_mk(1), phi_mk(2), phi_mk(3), phi_2mk(1), phi_2mk(2),
                            phi_2mk_minus1(2), phi_constrained(2, 2)})
        for (int n = 0; n <= 6; ++n) {
            INFO(phi.name() << " n=" << n);
            CHECK(count_pf_via_frobenius(phi, n) == count_pf(phi, n));
        }
}

TEST_CASE("division factors") {
    auto m2 = phi_mk(2);
    auto pf = make_parking_function(slots_of("(3|·|1|·|2|·|·|·|·)"), m2);
    auto factors = division_factors(pf, m2);
    REQUIRE(factors.size() == 3);
    CHECK(factors[0] == std::vector<std::vector<Label>>{{3}});
    CHECK(factors[1] == std::vector<std::vector<Label>>{{}, {1}, {}});
    CHECK(factors[2] == std::vector<std::vector<Label>>{{2}, {}, {}, {}, {}});

    // phi = m: n factors of size 1
    auto pm = phi_mk(1);
    auto pf2 = make_parking_function(slots_of("(2|1|3)"), pm);
    auto f2 = division_factors(pf2, pm);
    REQUIRE(f2.size() == 3);
    for (const auto& f : f2) CHECK(f.size() == 1);

    // phi = 2m^2: widths 2 and 6
    auto p22 = phi_2mk(2);
    auto pf3 = make_parking_function(slots_of("(12|·|·|·|·|·|·|·)"), p22);
    auto f3 = division_factors(pf3, p22);
    REQUIRE(f3.size() == 2);
    CHECK(f3[0].size() == 2);
    CHECK(f3[1].size() == 6);

    // factors repartition the slots exactly
    for_each_pf(phi_2mk(2), 2, [&](const ParkingFunction& q) {
        auto fs = division_factors(q, p22);
        std::vector<std::vector<Label>> glued;
        for (const auto& f : fs) glued.insert(glued.end(), f.begin(), f.end());
        REQUIRE(glued == q.slots);
    });
}

TEST_CASE("q order") {
    auto m2 = phi_mk(2);
    auto pf = make_parking_function(
        slots_of("(4|12|·|·|·|·|·|·|·|3|·|·|·|·|·|·)"),
        m2);
    CHECK(q_order(pf) == std::vector<Label>{4, 1, 2, 3});

    auto pf2 = make_parking_function(
        slots_of("(3|·|·|25|·|·|·|·|·|·|·|·|·|·|1|"
                 "·|·|·|·|·|4|·|·|·|·)"),
        m2);
    CHECK(q_order(pf2) == std::vector<Label>{3, 2, 5, 1, 4});

    // everything in Q_1 -> natural order
    auto pm3 = WeightFunction::table({3, 3, 3});
    auto pf3 = make_parking_function({{1, 2, 3}, {}, {}}, pm3);
    CHECK(q_order(pf3) == std::vector<Label>{1, 2, 3});
}

TEST_CASE("is_simple_pf") {
    auto m2 = phi_mk(2);
    CHECK_FALSE(is_simple_pf(make_parking_function(slots_of("(12|·|·|·)"), m2)));
    CHECK(is_simple_pf(make_parking_function(slots_of("(1|·|2|·)"), m2)));
    CHECK(is_simple_pf(make_parking_function({}, m2)));
}

TEST_CASE("text round-trip") {
    CHECK(parse_pf_text("(12|·|·|·)") ==
          std::vector<std::vector<Label>>{{1, 2}, {}, {}, {}});
    CHECK(parse_pf_text("(3,12|·)") == std::vector<std::vector<Label>>{{3, 12}, {}});
    CHECK(parse_pf_text("(10|·)") == std::vector<std::vector<Label>>{{10}, {}});
    for_each_pf(phi_2mk(2), 2, [](const ParkingFunction& pf) {
        REQUIRE(parse_pf_text(to_text(pf)) == pf.slots);
    });
    // labels above 9 switch the whole structure to comma form
    ParkingFunction wide;
    wide.labels = {3, 12};
    wide.slots = {{3, 12}, {}, {}, {}, {}, {}, {}, {}};
    CHECK(to_text(wide) == "(3,12|·|·|·|·|·|·|·)");
    CHECK(parse_pf_text(to_text(wide)) == wide.slots);
}
