#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "augss/ordinal.hpp"

#include <vector>

using namespace augss;

namespace {

// Test-local enumerator, independent of all_monotone_maps: every weakly
// increasing sequence of length src.n + 1 with values in 0..dst.n.
std::vector<MonotoneMap> brute_maps(Ordinal src, Ordinal dst) {
    std::vector<MonotoneMap> out;
    if (src.n == -1) {
        if (dst.n >= -1)
            out.push_back(MonotoneMap::from_empty(dst));
        return out;
    }
    if (dst.n < 0)
        return out;
    std::vector<int> v(static_cast<size_t>(src.n + 1), 0);
    auto rec = [&](auto&& self, int pos, int lo) -> void {
        if (pos > src.n) {
            out.emplace_back(src, dst, v);
            return;
        }
        for (int x = lo; x <= dst.n; ++x) {
            v[static_cast<size_t>(pos)] = x;
            self(self, pos + 1, x);
        }
    };
    rec(rec, 0, 0);
    return out;
}

}  // namespace

TEST_CASE("ordinal sum on objects") {
    CHECK(ordinal_sum(Ordinal(-1), Ordinal(4)) == Ordinal(4));
    CHECK(ordinal_sum(Ordinal(4), Ordinal(-1)) == Ordinal(4));
    CHECK(ordinal_sum(Ordinal(0), Ordinal(0)) == Ordinal(1));
    CHECK(ordinal_sum(Ordinal(2), Ordinal(3)) == Ordinal(6));
}

TEST_CASE("ordinal sum on maps") {
    // identities go to identities
    auto id_sum = ordinal_sum(MonotoneMap::identity(Ordinal(2)), MonotoneMap::identity(Ordinal(3)));
    CHECK(id_sum == MonotoneMap::identity(Ordinal(6)));

    // delta_0 : [0] -> [1] summed with id_[0]
    MonotoneMap d0(Ordinal(0), Ordinal(1), {1});
    auto s = ordinal_sum(d0, MonotoneMap::identity(Ordinal(0)));
    CHECK(s.src() == Ordinal(1));
    CHECK(s.dst() == Ordinal(2));
    CHECK(s.values() == std::vector<int>{1, 2});

    // empty first block shifts the second by q0 + 1
    auto t = ordinal_sum(MonotoneMap::from_empty(Ordinal(2)), MonotoneMap::identity(Ordinal(1)));
    CHECK(t.src() == Ordinal(1));
    CHECK(t.dst() == Ordinal(4));
    CHECK(t.values() == std::vector<int>{3, 4});
}

TEST_CASE("composition") {
    MonotoneMap f(Ordinal(0), Ordinal(1), {1});
    MonotoneMap sigma0(Ordinal(1), Ordinal(0), {0, 0});
    CHECK(compose(sigma0, f) == MonotoneMap::identity(Ordinal(0)));  // s0 d0 = id

    MonotoneMap g(Ordinal(1), Ordinal(2), {1, 2});
    auto gf = compose(g, f);
    CHECK(gf.src() == Ordinal(0));
    CHECK(gf.dst() == Ordinal(2));
    CHECK(gf.values() == std::vector<int>{2});

    MonotoneMap h(Ordinal(1), Ordinal(1), {0, 1});
    CHECK(compose(MonotoneMap::identity(Ordinal(1)), h) == h);
    CHECK_THROWS_AS(compose(f, g), std::invalid_argument);
}

TEST_CASE("monotone map invariants") {
    CHECK_THROWS_AS(MonotoneMap(Ordinal(1), Ordinal(1), {1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(MonotoneMap(Ordinal(1), Ordinal(1), {0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(MonotoneMap(Ordinal(1), Ordinal(-1), {}), std::invalid_argument);
    CHECK_NOTHROW(MonotoneMap::from_empty(Ordinal(-1)));
    CHECK(brute_maps(Ordinal(2), Ordinal(-1)).empty());
    CHECK(brute_maps(Ordinal(-1), Ordinal(5)).size() == 1);
}

TEST_CASE("epi-mono factorization: examples") {
    // injective f factors as (id, f)
    MonotoneMap inj(Ordinal(1), Ordinal(3), {0, 2});
    auto fac = epi_mono_factor(inj);
    CHECK(fac.epi.is_identity());
    CHECK(fac.mono == inj);

    // surjective f factors as (f, id)
    MonotoneMap surj(Ordinal(2), Ordinal(1), {0, 0, 1});
    fac = epi_mono_factor(surj);
    CHECK(fac.mono == MonotoneMap::identity(Ordinal(1)));
    CHECK(fac.epi.as_map() == surj);

    // mixed case from [2] to [2]
    MonotoneMap mixed(Ordinal(2), Ordinal(2), {0, 0, 2});
    fac = epi_mono_factor(mixed);
    CHECK(fac.epi.collapsed() == std::vector<int>{0});
    CHECK(fac.epi.dst() == Ordinal(1));
    CHECK(fac.mono.values() == std::vector<int>{0, 2});
    CHECK(compose(fac.mono, fac.epi.as_map()) == mixed);
}

TEST_CASE("epi-mono factorization: uniqueness by exhaustive search") {
    for (int a = -1; a <= 3; ++a)
        for (int b = -1; b <= 3; ++b)
            for (const auto& f : brute_maps(Ordinal(a), Ordinal(b))) {
                int matches = 0;
                for (int mid = -1; mid <= std::min(a, b); ++mid)
                    for (const auto& epi : brute_maps(Ordinal(a), Ordinal(mid)))
                        for (const auto& mono : brute_maps(Ordinal(mid), Ordinal(b)))
                            if (epi.is_surjective() && mono.is_injective() &&
                                compose(mono, epi) == f)
                                ++matches;
                CHECK(matches == 1);
                auto fac = epi_mono_factor(f);
                CHECK(compose(fac.mono, fac.epi.as_map()) == f);
                CHECK(fac.mono.is_injective());
                CHECK(fac.epi.as_map().is_surjective());
            }
}

TEST_CASE("epi-mono factorization is idempotent-consistent") {
    for (int a = -1; a <= 3; ++a)
        for (int b = -1; b <= 3; ++b)
            for (const auto& f : brute_maps(Ordinal(a), Ordinal(b))) {
                auto fac = epi_mono_factor(f);
                auto fac_epi = epi_mono_factor(fac.epi.as_map());
                CHECK(fac_epi.mono.is_identity());
                CHECK(fac_epi.epi == fac.epi);
                auto fac_mono = epi_mono_factor(fac.mono);
                CHECK(fac_mono.epi.is_identity());
                CHECK(fac_mono.mono == fac.mono);
            }
}

TEST_CASE("ordinal sum functoriality, exhaustive over small ordinals") {
    for (int p0 = -1; p0 <= 2; ++p0)
        for (int q0 = -1; q0 <= 2; ++q0)
            for (int r0 = -1; r0 <= 2; ++r0)
                for (int p1 = -1; p1 <= 2; ++p1)
                    for (int q1 = -1; q1 <= 2; ++q1)
                        for (int r1 = -1; r1 <= 2; ++r1)
                            for (const auto& f0 : brute_maps(Ordinal(p0), Ordinal(q0)))
                                for (const auto& g0 : brute_maps(Ordinal(q0), Ordinal(r0)))
                                    for (const auto& f1 : brute_maps(Ordinal(p1), Ordinal(q1)))
                                        for (const auto& g1 :
                                             brute_maps(Ordinal(q1), Ordinal(r1))) {
                                            auto lhs = ordinal_sum(compose(g0, f0),
                                                                   compose(g1, f1));
                                            auto rhs = compose(ordinal_sum(g0, g1),
                                                               ordinal_sum(f0, f1));
                                            REQUIRE(lhs == rhs);
                                        }
}

TEST_CASE("ordinal sum associativity and unit") {
    for (int a = -1; a <= 3; ++a)
        for (int b = -1; b <= 3; ++b)
            for (int c = -1; c <= 3; ++c)
                CHECK(ordinal_sum(ordinal_sum(Ordinal(a), Ordinal(b)), Ordinal(c)) ==
                      ordinal_sum(Ordinal(a), ordinal_sum(Ordinal(b), Ordinal(c))));

    for (int a = -1; a <= 2; ++a)
        for (int b = -1; b <= 2; ++b)
            for (int c = -1; c <= 2; ++c)
                for (int a2 = -1; a2 <= 2; ++a2)
                    for (int b2 = -1; b2 <= 2; ++b2)
                        for (int c2 = -1; c2 <= 2; ++c2)
                            for (const auto& f : brute_maps(Ordinal(a), Ordinal(a2)))
                                for (const auto& g : brute_maps(Ordinal(b), Ordinal(b2)))
                                    for (const auto& h : brute_maps(Ordinal(c), Ordinal(c2)))
                                        REQUIRE(ordinal_sum(ordinal_sum(f, g), h) ==
                                                ordinal_sum(f, ordinal_sum(g, h)));

    // [-1] with its unique maps is a strict two-sided unit on arrows
    auto empty_id = MonotoneMap::identity(Ordinal(-1));
    for (int a = -1; a <= 3; ++a)
        for (int b = -1; b <= 3; ++b)
            for (const auto& f : brute_maps(Ordinal(a), Ordinal(b))) {
                CHECK(ordinal_sum(empty_id, f) == f);
                CHECK(ordinal_sum(f, empty_id) == f);
            }
}

TEST_CASE("degeneracy operator canonical form round-trips, n <= 6") {
    for (int n = -1; n <= 6; ++n)
        for (int m = -1; m <= n; ++m) {
            auto ops = all_degeneracy_ops(Ordinal(n), Ordinal(m));
            // against the independent count: surjections [n] ->> [m]
            int brute = 0;
            for (const auto& f : brute_maps(Ordinal(n), Ordinal(m)))
                if (f.is_surjective())
                    ++brute;
            CHECK(static_cast<int>(ops.size()) == brute);
            for (const auto& op : ops) {
                CHECK(op.as_map().is_surjective());
                CHECK(DegeneracyOp::from_map(op.as_map()) == op);
            }
        }
    // value-sequence encoding -> collapsed-set encoding is injective
    for (int n = 0; n <= 6; ++n)
        for (int m = 0; m <= n; ++m) {
            auto ops = all_degeneracy_ops(Ordinal(n), Ordinal(m));
            std::set<std::vector<int>> images;
            for (const auto& op : ops)
                images.insert(op.as_map().values());
            CHECK(images.size() == ops.size());
        }
}

TEST_CASE("enumerators agree with brute force") {
    for (int a = -1; a <= 4; ++a)
        for (int b = -1; b <= 4; ++b) {
            auto lib = all_monotone_maps(Ordinal(a), Ordinal(b));
            auto ref = brute_maps(Ordinal(a), Ordinal(b));
            CHECK(lib == ref);
            auto inj = all_injections(Ordinal(a), Ordinal(b));
            size_t expect = 0;
            for (const auto& f : ref)
                if (f.is_injective())
                    ++expect;
            CHECK(inj.size() == expect);
        }
}

TEST_CASE("identity-like constructors") {
    CHECK(MonotoneMap::coface(Ordinal(2), 1).values() == std::vector<int>{0, 2});
    CHECK(MonotoneMap::codegeneracy(Ordinal(1), 0).values() == std::vector<int>{0, 0, 1});
    CHECK(DegeneracyOp::identity(Ordinal(-1)).as_map() == MonotoneMap::identity(Ordinal(-1)));
    CHECK(DegeneracyOp::collapse_to_point(Ordinal(3)).dst() == Ordinal(0));
    CHECK(DegeneracyOp::collapse_to_point(Ordinal(0)).is_identity());
}

TEST_CASE("text round-trips") {
    MonotoneMap m(Ordinal(2), Ordinal(3), {0, 0, 2});
    CHECK(to_text(m) == "map 2 3 : 0 0 2");
    CHECK(parse_monotone_map(to_text(m)) == m);
    auto empty = MonotoneMap::from_empty(Ordinal(2));
    CHECK(to_text(empty) == "map -1 2 :");
    CHECK(parse_monotone_map(to_text(empty)) == empty);

    DegeneracyOp op(Ordinal(4), {1, 3});
    CHECK(to_text(op) == "deg 4 2 : 1 3");
    CHECK(parse_degeneracy_op(to_text(op)) == op);
    CHECK(collapsed_text(op) == "1,3");
    CHECK(parse_collapsed("1,3") == std::vector<int>{1, 3});
    CHECK(parse_collapsed("-").empty());
    CHECK_THROWS_AS(parse_collapsed("1,,3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_collapsed("x"), std::invalid_argument);
}
