// One line per acceptance criterion: "PASS"/"FAIL", number, name, elapsed
// time and a short detail. Exit status is nonzero if any criterion fails.

#include "latticecf/cf.hpp"
#include "latticecf/errors.hpp"
#include "latticecf/graphs.hpp"
#include "latticecf/lattice.hpp"
#include "latticecf/singularities.hpp"
#include "latticecf/zigzag.hpp"

#include "../support/oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>

using namespace latticecf;

namespace {

// Wall-clock budgets, seconds.
constexpr double budget_examples = 1.0;
constexpr double budget_hull = 60.0;

// Randomized sample sizes.
constexpr int random_cf_cases = 10000;
constexpr int random_cusp_cases = 10000;

// Exhaustive ranges.
constexpr long hull_max_p = 200;
constexpr long duality_max_p = 200;
constexpr long cf_sweep_max_p = 500;
constexpr long curve_max_p = 60;
constexpr long embdim_max_p = 100;
constexpr long embdim_an_max_n = 50;
constexpr long lens_max_p = 50;
constexpr long hj_chain_max_p = 300;

struct Outcome {
    bool ok = true;
    std::string detail;
};

// Records the first failure only.
struct Tally {
    long cases = 0;
    long failures = 0;
    std::string first;

    void check(bool cond, const std::string& what) {
        ++cases;
        if (!cond) {
            if (failures == 0)
                first = what;
            ++failures;
        }
    }

    Outcome outcome(const std::string& extra = "") const {
        std::ostringstream os;
        os << cases << " checks";
        if (!extra.empty())
            os << ", " << extra;
        if (failures)
            os << ", " << failures << " failed, first: " << first;
        return {failures == 0, os.str()};
    }
};

Rational frac(long p, long q) {
    return Rational(Integer(p), Integer(q));
}

bool coprime(long p, long q) {
    return std::gcd(p, q) == 1;
}

std::string pq(long p, long q) {
    return std::to_string(p) + "/" + std::to_string(q);
}

Outcome paper_examples() {
    Tally t;
    const Rational x = frac(11, 7);
    t.check(expand_e(x).terms == IntSeq{1, 1, 1, 3}, "11/7 E expansion");
    t.check(expand_hj(x).terms == IntSeq{2, 3, 2, 2}, "11/7 HJ expansion");
    t.check(eval({CFKind::e, {1, 1, 1, 3}}) == x, "[1,1,1,3]^+ = 11/7");
    t.check(eval({CFKind::hj, {2, 3, 2, 2}}) == x, "[2,3,2,2]^- = 11/7");
    t.check(involute(x) == frac(11, 4), "involute(11/7) = 11/4");
    t.check(expand_e(frac(11, 4)).terms == IntSeq{2, 1, 3}, "11/4 = [2,1,3]^+");
    t.check(involute_e(IntSeq{1, 1, 1, 3}) == IntSeq{2, 1, 3}, "involute_e");
    t.check(expand_hj(frac(11, 4)).terms == IntSeq{3, 4}, "11/4 = [3,4]^-");
    t.check(staircase_dual(staircase(IntSeq{2, 3, 2, 2})) == IntSeq{3, 4}, "staircase transpose");
    const ZigzagDiagram d = build_zigzag(x);
    t.check(read(d, Reading::hj_lambda).terms == IntSeq{2, 3, 2, 2}, "ZZ(11/7) hj");
    t.check(read(d, Reading::hj_involute).terms == IntSeq{3, 4}, "ZZ(11/7) hj-dual");
    t.check(read(d, Reading::e_involute).terms == IntSeq{2, 1, 3}, "ZZ(11/7) e-dual");
    t.check(read(d, Reading::e_lambda).terms == IntSeq{1, 1, 1, 3}, "ZZ(11/7) e");
    t.check(resolve_monomial(11, 4).size() == 6, "resolve_monomial(11,4) has 6 vertices");
    return t.outcome();
}

Outcome hull_equivalence() {
    Tally t;
    for (long p = 2; p <= hull_max_p; ++p)
        for (long q = 1; q < p; ++q)
            if (coprime(p, q))
                t.check(polygon({p, q}) == hull_oracle({p, q}), pq(p, q));
    return t.outcome();
}

Outcome duality() {
    Tally t;
    for (long p = 2; p <= duality_max_p; ++p) {
        for (long q = 1; q < p; ++q) {
            if (!coprime(p, q))
                continue;
            const DualityReport rep = duality_map({p, q});
            t.check(rep.image_on_dual_polygon && rep.dual_vertices_in_image, "double inclusion " + pq(p, q));
            t.check(rep.order_preserved, "orientation " + pq(p, q));
            t.check(rep.exceptional_ok, "exceptional points " + pq(p, q));
            t.check(rep.vertex_sets_equal, "vertex sets " + pq(p, q));
            t.check(dual_cone({p, q}) == supplementary({p, q}).type, "dual cone " + pq(p, q));
        }
    }
    return t.outcome();
}

Outcome cf_identities() {
    Tally t;
    for (int it = 0; it < random_cf_cases; ++it) {
        const IntSeq x = oracle::random_sequence(0, 12, 1, 9);
        for (bool plus : {true, false}) {
            const Sign sign = plus ? Sign::plus : Sign::minus;
            const std::span<const Integer> s(x);
            const Integer z = continuant(sign, x);
            t.check(z == oracle::continuant(plus, x), "recrel");
            if (x.size() >= 2) {
                const Integer head = x.back() * continuant(sign, s.first(x.size() - 1));
                const Integer tail = continuant(sign, s.first(x.size() - 2));
                t.check(z == (plus ? head + tail : head - tail), "twin");
            }
            const IntSeq rev(x.rbegin(), x.rend());
            t.check(continuant(sign, rev) == z, "sym");
        }
        if (x.empty())
            continue;
        const IntSeq e = canonical_e(x);
        const IntSeq h = e_to_hj(e);
        const Rational v = eval({CFKind::e, e});
        t.check(eval({CFKind::hj, h}) == v, "e_to_hj preserves value");
        t.check(hj_to_e(h) == e, "hj_to_e o e_to_hj");
        IntSeq longer = x;
        longer.push_back(1);
        IntSeq bumped = x;
        bumped.back() += 1;
        t.check(eval({CFKind::e, longer}) == eval({CFKind::e, bumped}), "id1");
        if (v > Rational(1) && v != Rational(2)) {
            const IntSeq hv = expand_hj(v).terms;
            t.check(involute_e(involute_e(e)) == e, "involute_e involutive");
            t.check(involute_hj(involute_hj(hv)) == hv, "involute_hj involutive");
            t.check(staircase_dual(staircase(hv)) == involute_hj(hv), "staircase transpose");
        }
    }
    long sweep = 0;
    for (long p = 2; p <= cf_sweep_max_p; ++p) {
        for (long q = 1; q < p; ++q) {
            if (!coprime(p, q))
                continue;
            ++sweep;
            const Rational x = frac(p, q);
            const IntSeq e = expand_e(x).terms;
            const IntSeq h = expand_hj(x).terms;
            t.check(eval({CFKind::e, e}) == x && eval({CFKind::hj, h}) == x, "eval o expand " + pq(p, q));
            t.check(e_to_hj(e) == h && hj_to_e(h) == e, "conversion " + pq(p, q));
            if (p == 2 * q)
                continue;
            const Rational y = involute(x);
            t.check(involute(y) == x, "involute " + pq(p, q));
            t.check(involute_e(e) == expand_e(y).terms, "involute_e " + pq(p, q));
            t.check(involute_hj(h) == expand_hj(y).terms, "involute_hj " + pq(p, q));
            t.check(staircase_dual(staircase(h)) == involute_hj(h), "staircase " + pq(p, q));
        }
    }
    return t.outcome(std::to_string(sweep) + " rationals swept");
}

Outcome cusps() {
    Tally t;
    for (int it = 0; it < random_cusp_cases; ++it) {
        IntSeq w = oracle::random_sequence(2, 10, 2, 9);
        bool big = false;
        for (const auto& x : w)
            big = big || x >= 3;
        if (!big) {
            std::uniform_int_distribution<std::size_t> pos(0, w.size() - 1);
            std::uniform_int_distribution<int> val(3, 9);
            w[pos(oracle::rng())] = val(oracle::rng());
        }
        const CuspCycle c(w);
        const UnimodularMap m = cusp_monodromy(c);
        const Integer tr = m.a + m.d;
        t.check(tr == cusp_trace_formula(c), "trace formula " + c.str());
        t.check(tr >= 3, "trace >= 3 " + c.str());
        const CuspCycle d = cusp_dual(c);
        t.check(cusp_dual(d) == c, "dual involutive " + c.str());
        const UnimodularMap md = cusp_monodromy(d);
        t.check(md.a + md.d == tr, "dual keeps trace " + c.str());
    }
    const CuspCycle four({4});
    const CuspCycle long_one({2, 3, 2, 2});
    t.check(cusp_dual(four) == CuspCycle({2, 3}), "(4) -> (2,3)");
    t.check(cusp_dual(long_one) == CuspCycle({6}), "(2,3,2,2) -> (6)");
    const UnimodularMap m4 = cusp_monodromy(four);
    const UnimodularMap m6 = cusp_monodromy(long_one);
    t.check(m4.a + m4.d == 4, "trace (4)");
    t.check(m6.a + m6.d == 6, "trace (2,3,2,2)");
    return t.outcome();
}

Outcome curves() {
    Tally t;
    for (long p = 3; p <= curve_max_p; ++p) {
        for (long q = 2; q < p; ++q) {
            if (!coprime(p, q))
                continue;
            const WeightedDualGraph g = resolve_monomial(p, q);
            t.check(g == blowup_oracle(p, q), "oracle " + pq(p, q));
            const IntSeq e = expand_e(frac(p, q)).terms;
            t.check(Integer(g.size()) == std::accumulate(e.begin(), e.end(), Integer(0)), "count " + pq(p, q));
            std::size_t minus_one = 0;
            for (const auto& v : g.vertices())
                minus_one += v.weight == -1 ? 1 : 0;
            const auto arrows = g.arrows();
            t.check(minus_one == 1 && arrows.size() == 1 && g.vertex(arrows[0]).weight == -1,
                    "arrowed -1 vertex " + pq(p, q));
            t.check(is_contractible(g.without_arrows()), "contractible " + pq(p, q));
        }
    }
    return t.outcome();
}

Outcome embedding_dimension() {
    Tally t;
    for (long p = 2; p <= embdim_max_p; ++p) {
        for (long q = 1; q < p; ++q) {
            if (!coprime(p, q))
                continue;
            const Integer e = embdim({p, q});
            t.check(e == embdim_oracle({p, q}), "oracle " + pq(p, q));
            t.check(e == Integer(2 + expand_hj(frac(p, p - q)).terms.size()), "dual length " + pq(p, q));
        }
    }
    for (long n = 1; n <= embdim_an_max_n; ++n)
        t.check(embdim({n + 1, n}) == 3, "A_" + std::to_string(n));
    return t.outcome();
}

Outcome lens() {
    Tally t;
    t.check(lens_oriented_equal({11, 7}, {11, 8}), "L(11,7) = L(11,8)");
    t.check(lens_reverse({11, 7}) == LensSpace{11, 4}, "reverse L(11,7)");
    std::vector<LensSpace> all;
    for (long p = 2; p <= lens_max_p; ++p)
        for (long q = 1; q < p; ++q)
            if (coprime(p, q))
                all.push_back({p, q});
    for (const auto& a : all) {
        t.check(lens_oriented_equal(a, a), "reflexive");
        t.check(lens_reverse(lens_reverse(a)) == a, "reverse twice");
        const long p = a.p.convert_to<long>();
        const long q = a.q.convert_to<long>();
        long qbar = 0;
        for (long k = 1; k < p + (p == 2 ? 1 : 0) && qbar == 0; ++k)
            if ((q * k) % p == 1 % p)
                qbar = k;
        t.check(lens_oriented_equal(a, {p, qbar}), "qbar closure");
        for (const auto& b : all) {
            if (b.p != a.p)
                continue;
            const long q2 = b.q.convert_to<long>();
            const bool expected = q2 == q || (q2 * q) % p == 1 % p;
            const bool eq = lens_oriented_equal(a, b);
            t.check(eq == expected, "classification");
            t.check(eq == lens_oriented_equal(b, a), "symmetric");
            t.check(lens_reversing_equal(a, b) == lens_oriented_equal(lens_reverse(a), b), "reversal");
            t.check(lens_reversing_equal(a, b) == lens_reversing_equal(b, a), "reversal symmetric");
        }
    }
    return t.outcome();
}

Outcome definiteness() {
    Tally t;
    for (long p = 2; p <= hj_chain_max_p; ++p)
        for (long q = 1; q < p; ++q)
            if (coprime(p, q))
                t.check(is_contractible(hj_resolution({p, q})), "chain " + pq(p, q));
    for (long p = 3; p <= curve_max_p; ++p)
        for (long q = 2; q < p; ++q)
            if (coprime(p, q))
                t.check(is_contractible(resolve_monomial(p, q).without_arrows()), "curve " + pq(p, q));
    WeightedDualGraph loop;
    loop.add_vertex(1);
    loop.add_edge(0, 0);
    t.check(!is_contractible(loop), "e=1 with a loop is not negative definite");
    t.check(euler_normalized(loop, 0) == -1, "normalized Euler number -1");
    t.check(is_contractible(chain({euler_normalized(loop, 0)})), "-1 alone would be");
    return t.outcome();
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
        double budget;
    };
    const Criterion criteria[] = {
        {1, "paper example suite", paper_examples, budget_examples},
        {2, "hull oracle equivalence", hull_equivalence, budget_hull},
        {3, "duality and dual cone", duality, 0},
        {4, "continued-fraction identities", cf_identities, 0},
        {5, "cusp suite", cusps, 0},
        {6, "curve resolution", curves, 0},
        {7, "embedding dimension", embedding_dimension, 0},
        {8, "lens classification", lens, 0},
        {9, "negative definiteness", definiteness, 0},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget > 0 && secs >= c.budget) {
            out.ok = false;
            out.detail += ", over the " + std::to_string(static_cast<int>(c.budget)) + " s budget";
        }
        std::printf("%s  %d  %-32s %8.2f s  %s\n", out.ok ? "PASS" : "FAIL", c.id, c.name, secs,
                    out.detail.c_str());
        std::fflush(stdout);
        failed += out.ok ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
    return failed == 0 ? 0 : 1;
}
