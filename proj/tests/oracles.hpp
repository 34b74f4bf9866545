#pragma once

#include <array>
#include <string_view>

namespace oracle {

// Right anticommutative monomials of degree 4, in order.
inline constexpr std::array<std::string_view, 60> kRaDegree4 = {
    "((ab)c)d", "((ab)d)c", "((ac)b)d", "((ac)d)b", "((ad)b)c", "((ad)c)b",
    "((ba)c)d", "((ba)d)c", "((bc)a)d", "((bc)d)a", "((bd)a)c", "((bd)c)a",
    "((ca)b)d", "((ca)d)b", "((cb)a)d", "((cb)d)a", "((cd)a)b", "((cd)b)a",
    "((da)b)c", "((da)c)b", "((db)a)c", "((db)c)a", "((dc)a)b", "((dc)b)a",
    "(a(bc))d", "(a(bd))c", "(a(cd))b", "(b(ac))d", "(b(ad))c", "(b(cd))a",
    "(c(ab))d", "(c(ad))b", "(c(bd))a", "(d(ab))c", "(d(ac))b", "(d(bc))a",
    "(ab)(cd)", "(ac)(bd)", "(ad)(bc)", "(ba)(cd)", "(bc)(ad)", "(bd)(ac)",
    "(ca)(bd)", "(cb)(ad)", "(cd)(ab)", "(da)(bc)", "(db)(ac)", "(dc)(ab)",
    "a((bc)d)", "a((bd)c)", "a((cd)b)", "b((ac)d)", "b((ad)c)", "b((cd)a)",
    "c((ab)d)", "c((ad)b)", "c((bd)a)", "d((ab)c)", "d((ac)b)", "d((bc)a)",
};

}  // namespace oracle
