#include "latticecf/singularities.hpp"

#include "latticecf/cf.hpp"
#include "latticecf/errors.hpp"
#include "latticecf/zigzag.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

namespace latticecf {

void check_type(const HJType& t) {
    if (!(1 <= t.q && t.q < t.p) || gcd(t.p, t.q) != 1)
        fail(ErrorKind::domain, "type " + t.p.str() + "/" + t.q.str() + ": requires 1 <= q < p, gcd(p,q) = 1");
}

WeightedDualGraph hj_resolution(const HJType& t) {
    check_type(t);
    IntSeq w = expand_hj(Rational(t.p, t.q)).terms;
    for (auto& x : w)
        x = -x;
    return chain(w);
}

Integer embdim(const HJType& t) {
    check_type(t);
    Integer e = 3;
    for (const auto& a : expand_hj(Rational(t.p, t.q)).terms)
        e += a - 2;
    return e;
}

Integer embdim_oracle(const HJType& t) {
    check_type(t);
    if (t.p > 5000)
        fail(ErrorKind::domain, "embdim_oracle: p too large for enumeration");
    const std::int64_t p = t.p.convert_to<std::int64_t>();
    const std::int64_t q = t.q.convert_to<std::int64_t>();

    // Dual cone in the dual lattice: x >= 0 and p*y - q*x >= 0.
    auto inside = [&](std::int64_t x, std::int64_t y) { return x >= 0 && p * y - q * x >= 0; };
    struct Pt {
        std::int64_t x, y;
    };
    std::vector<Pt> pts;
    for (std::int64_t x = 0; x <= 2 * p; ++x) {
        for (std::int64_t y = 0; y <= 2 * p; ++y) {
            if ((x != 0 || y != 0) && inside(x, y))
                pts.push_back({x, y});
        }
    }
    // x + y is positive on the cone minus the origin; a point is a sum of
    // two nonzero semigroup elements iff it exceeds some smaller generator
    // by a nonzero semigroup element.
    std::stable_sort(pts.begin(), pts.end(), [](const Pt& a, const Pt& b) { return a.x + a.y < b.x + b.y; });
    std::vector<Pt> gens;
    for (const Pt& v : pts) {
        bool reducible = false;
        for (const Pt& g : gens) {
            const std::int64_t dx = v.x - g.x;
            const std::int64_t dy = v.y - g.y;
            if ((dx != 0 || dy != 0) && inside(dx, dy)) {
                reducible = true;
                break;
            }
        }
        if (!reducible)
            gens.push_back(v);
    }
    return Integer(gens.size());
}

std::vector<ConeNF> blowup_types(const HJType& t) {
    check_type(t);
    const ConePolygon poly = polygon(ConeNF{t.p, t.q});
    const std::size_t r = poly.weights.size();
    std::vector<std::size_t> marks{1};
    for (std::size_t v : poly.vertex_indices) {
        if (v > 1 && v < r)
            marks.push_back(v);
    }
    if (r > 1)
        marks.push_back(r);
    std::vector<ConeNF> out;
    for (std::size_t i = 0; i + 1 < marks.size(); ++i)
        out.push_back(cone_normal_form(poly.points[marks[i]], poly.points[marks[i + 1]]).type);
    return out;
}

std::string type_name(const ConeNF& c) {
    if (c.regular())
        return "smooth";
    if (c.q == c.p - 1)
        return "A_" + c.q.str();
    return "A_{" + c.p.str() + "," + c.q.str() + "}";
}

void check_lens(const LensSpace& l) {
    if (!(1 <= l.q && l.q < l.p) || gcd(l.p, l.q) != 1)
        fail(ErrorKind::domain, "L(" + l.p.str() + "," + l.q.str() + "): requires 1 <= q < p, gcd(p,q) = 1");
}

bool lens_oriented_equal(const LensSpace& a, const LensSpace& b) {
    check_lens(a);
    check_lens(b);
    if (a.p != b.p)
        return false;
    return b.q == a.q || b.q == mod_inverse(a.q, a.p);
}

LensSpace lens_reverse(const LensSpace& a) {
    check_lens(a);
    return LensSpace{a.p, a.p - a.q};
}

bool lens_reversing_equal(const LensSpace& a, const LensSpace& b) {
    return lens_oriented_equal(lens_reverse(a), b);
}

IntSeq minimal_rotation(const IntSeq& seq) {
    IntSeq best = seq;
    IntSeq cur = seq;
    for (std::size_t i = 1; i < seq.size(); ++i) {
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
        if (cur < best)
            best = cur;
    }
    return best;
}

CuspCycle::CuspCycle(IntSeq weights) {
    if (weights.empty())
        fail(ErrorKind::invalid_cycle, "cusp cycle: empty");
    bool big = false;
    for (const auto& w : weights) {
        if (w < 2)
            fail(ErrorKind::invalid_cycle, "cusp cycle: weights must be >= 2, got " + w.str());
        big = big || w >= 3;
    }
    if (!big)
        fail(ErrorKind::invalid_cycle, "cusp cycle: at least one weight must be >= 3");
    weights_ = minimal_rotation(weights);
}

std::string CuspCycle::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (i != 0)
            out += ',';
        out += weights_[i].str();
    }
    return out + ")";
}

UnimodularMap cusp_monodromy(const CuspCycle& c) {
    UnimodularMap m;
    for (const auto& a : c.weights())
        m = m * UnimodularMap{0, -1, 1, a};
    return m;
}

Integer cusp_trace_formula(const CuspCycle& c) {
    const IntSeq& w = c.weights();
    if (w.size() < 2)
        fail(ErrorKind::cycle_too_short, "cusp_trace_formula: needs a cycle of length >= 2");
    const std::span<const Integer> all(w);
    return continuant(Sign::minus, all) - continuant(Sign::minus, all.subspan(1, w.size() - 2));
}

CuspCycle cusp_dual(const CuspCycle& c) {
    IntSeq w = c.weights();
    // Rotate so that the sequence ends with a weight >= 3; it then splits
    // into whole blocks (2)^{m_i}, n_i + 3.
    std::size_t last = w.size();
    while (w[last - 1] < 3)
        --last;
    std::rotate(w.begin(), w.begin() + last, w.end());
    const HJBlocks b = hj_blocks(w);
    IntSeq out;
    for (std::size_t i = 0; i < b.s(); ++i) {
        out.push_back(b.twos[i] + 3);
        out.insert(out.end(), b.bumps[i].convert_to<std::size_t>(), Integer(2));
    }
    return CuspCycle(std::move(out));
}

namespace {

void check_monomial(const Integer& p, const Integer& q) {
    if (!(2 <= q && q < p) || gcd(p, q) != 1)
        fail(ErrorKind::domain, "monomial curve x^" + p.str() + " = y^" + q.str() +
                                    ": requires 2 <= q < p with gcd(p,q) = 1");
}

std::size_t to_index(const Integer& x) {
    return x.convert_to<std::size_t>();
}

} // namespace

WeightedDualGraph resolve_monomial(const Integer& p, const Integer& q) {
    check_monomial(p, q);
    const ZigzagDiagram zz = build_zigzag(Rational(p, p - q));
    const std::size_t s = zz.s();
    const IntSeq alpha = expand_hj(Rational(p, p - q)).terms;
    const IntSeq beta = expand_hj(Rational(p, q)).terms;
    const std::size_t r = alpha.size();

    // Positions of V_0 = A-, V_1..V_s, V_{s+1} = A+ on the right side and of
    // V_1'..V_{s+1}' on the left side.
    std::vector<std::size_t> vr{0};
    for (const auto& e : zz.right.edge_lengths)
        vr.push_back(vr.back() + to_index(e));
    std::vector<std::size_t> vl{0, 1};
    for (std::size_t j = 1; j <= s; ++j)
        vl.push_back(vl.back() + to_index(zz.left.edge_lengths[j]));

    // Points are keyed (side, index): side 0 right (index r+1 is A+), side 1 left.
    std::map<std::pair<int, std::size_t>, std::size_t> label;
    std::size_t next = 1;
    for (std::size_t i = 1; i <= s + 1; ++i) {
        for (std::size_t k = vr[i - 1] + 1; k <= vr[i]; ++k)
            label[{0, k}] = next++;
        if (i <= s) {
            for (std::size_t k = vl[i] + 1; k <= vl[i + 1]; ++k)
                label[{1, k}] = next++;
        }
    }

    std::vector<Integer> weight(next);
    for (const auto& [key, n] : label) {
        const auto [side, k] = key;
        if (side == 0)
            weight[n] = k == r + 1 ? Integer(-1) : Integer(-alpha[k - 1]);
        else
            weight[n] = -beta[k - 1];
    }
    WeightedDualGraph g;
    for (std::size_t n = 1; n < next; ++n)
        g.add_vertex(weight[n], 0, "E" + std::to_string(n));

    auto id = [&](int side, std::size_t k) { return label.at({side, k}) - 1; };
    for (std::size_t k = 1; k <= r; ++k)
        g.add_edge(id(0, k), id(0, k + 1));
    std::size_t prev = id(0, r + 1);
    for (std::size_t k = beta.size(); k >= 2; --k) {
        g.add_edge(prev, id(1, k));
        prev = id(1, k);
    }
    g.add_arrow(id(0, r + 1));
    return g;
}

WeightedDualGraph blowup_oracle(const Integer& p, const Integer& q) {
    check_monomial(p, q);
    // The strict transform is u = t^m, v = t^n at the current point; cu and
    // cv are the exceptional curves {u = 0} and {v = 0} through it, if any.
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    Integer m = q;
    Integer n = p;
    std::size_t cu = none;
    std::size_t cv = none;
    std::vector<Integer> weight;
    std::vector<Edge> edges;

    auto blow_up = [&]() {
        const std::size_t e = weight.size();
        weight.push_back(-1);
        for (std::size_t c : {cu, cv}) {
            if (c != none) {
                --weight[c];
                edges.emplace_back(c, e);
            }
        }
        if (cu != none && cv != none) {
            const Edge old{std::min(cu, cv), std::max(cu, cv)};
            const auto it = std::find(edges.begin(), edges.end(), old);
            if (it != edges.end())
                edges.erase(it);
        }
        return e;
    };

    while (!(m == 1 && n == 1)) {
        const std::size_t e = blow_up();
        if (m < n) {
            cu = e;
            n -= m;
        } else {
            cv = e;
            m -= n;
        }
    }
    const std::size_t last = blow_up();

    WeightedDualGraph g;
    for (std::size_t i = 0; i < weight.size(); ++i)
        g.add_vertex(weight[i], 0, "E" + std::to_string(i + 1));
    for (const auto& [a, b] : edges)
        g.add_edge(a, b);
    g.add_arrow(last);
    return g;
}

} // namespace latticecf
