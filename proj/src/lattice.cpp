#include "latticecf/lattice.hpp"

#include "latticecf/cf.hpp"
#include "latticecf/errors.hpp"

#include <algorithm>

namespace latticecf {

std::string Vec2::str() const {
    return "(" + x.str() + "," + y.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const Vec2& v) {
    return os << v.str();
}

Integer det(const Vec2& a, const Vec2& b) {
    return a.x * b.y - a.y * b.x;
}

Vec2 primitive(const Vec2& v) {
    if (v.is_zero())
        fail(ErrorKind::zero_vector, "primitive: zero vector");
    const Integer g = gcd(v.x, v.y);
    return {v.x / g, v.y / g};
}

Integer integral_length(const Vec2& a, const Vec2& b) {
    if (a == b)
        fail(ErrorKind::zero_vector, "integral_length: segment endpoints coincide");
    return gcd(b.x - a.x, b.y - a.y);
}

UnimodularMap UnimodularMap::inverse() const {
    const Integer e = det();
    if (e != 1 && e != -1)
        fail(ErrorKind::domain, "inverse: map is not unimodular");
    // 1/e == e for e = +-1
    return {e * d, -e * b, -e * c, e * a};
}

UnimodularMap operator*(const UnimodularMap& l, const UnimodularMap& r) {
    return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d, l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
}

std::string ConeNF::str() const {
    return p.str() + "/" + q.str();
}

std::vector<Vec2> ConePolygon::vertices() const {
    std::vector<Vec2> out;
    out.reserve(vertex_indices.size());
    for (std::size_t i : vertex_indices)
        out.push_back(points[i]);
    return out;
}

std::string_view to_string(EdgeKind kind) noexcept {
    switch (kind) {
    case EdgeKind::half_line_minus: return "half-line-";
    case EdgeKind::compact: return "compact";
    case EdgeKind::half_line_plus: return "half-line+";
    }
    return "?";
}

NormalForm cone_normal_form(const Vec2& u_minus, const Vec2& u_plus) {
    const Vec2 u = primitive(u_minus);
    const Vec2 v = primitive(u_plus);
    const Integer d = det(u, v);
    if (d == 0)
        fail(ErrorKind::degenerate_cone, "cone_normal_form: rays " + u_minus.str() + " and " + u_plus.str() +
                                              " are proportional");

    // Complete u to a basis (u, w) with v = alpha*u + beta*w, beta > 0.
    Integer s, t;
    ext_gcd(u.x, u.y, s, t);
    Vec2 w{-t, s};
    if (d < 0)
        w = -w;
    const Integer uw = det(u, w);
    const Integer beta = d * uw;
    const Integer alpha = det(v, w) * uw;

    const Integer q = mod(-alpha, beta);
    const Integer k = (alpha + q) / beta;
    const Vec2 a1 = w + k * u;
    const UnimodularMap basis{u.x, a1.x, u.y, a1.y};
    return NormalForm{ConeNF{beta, q}, basis.inverse()};
}

void check_cone(const ConeNF& c) {
    if (c.p == 1 && c.q == 0)
        fail(ErrorKind::regular_cone, "cone is regular (type 1/0)");
    if (!(0 <= c.q && c.q < c.p) || gcd(c.p, c.q) != 1)
        fail(ErrorKind::domain, "not a cone normal form: " + c.str() + " (need 0 <= q < p, gcd(p,q) = 1)");
}

namespace {

std::vector<std::size_t> vertices_from_weights(const IntSeq& weights) {
    std::vector<std::size_t> out{0};
    for (std::size_t n = 0; n < weights.size(); ++n) {
        if (weights[n] >= 3)
            out.push_back(n + 1);
    }
    out.push_back(weights.size() + 1);
    return out;
}

} // namespace

ConePolygon polygon(const ConeNF& c) {
    check_cone(c);
    ConePolygon poly;
    poly.weights = expand_hj(Rational(c.p, c.q)).terms;
    poly.points.reserve(poly.weights.size() + 2);
    poly.points.push_back({1, 0});
    poly.points.push_back({0, 1});
    for (std::size_t n = 1; n <= poly.weights.size(); ++n)
        poly.points.push_back(poly.weights[n - 1] * poly.points[n] - poly.points[n - 1]);
    poly.vertex_indices = vertices_from_weights(poly.weights);
    return poly;
}

ConePolygon hull_oracle(const ConeNF& c) {
    check_cone(c);
    const Integer& p = c.p;
    const Integer& q = c.q;

    // Triangle O, (1,0), (-q,p): for each row y, x runs from the line O-A+
    // to the line A- A+. Only the primitive point of each ray can lie on the
    // boundary facing O.
    std::vector<Vec2> pts;
    for (Integer y = 0; y <= p; ++y) {
        const Integer lo = ceil_div(-q * y, p);
        const Integer hi = floor_div(p - (1 + q) * y, p);
        for (Integer x = lo; x <= hi; ++x) {
            if ((x == 0 && y == 0) || gcd(x, y) != 1)
                continue;
            pts.push_back({x, y});
        }
    }
    // All points have y >= 0 and polar angle in [0, pi): sort counterclockwise.
    std::sort(pts.begin(), pts.end(), [](const Vec2& a, const Vec2& b) { return det(a, b) > 0; });

    std::vector<Vec2> chain;
    for (const auto& pt : pts) {
        while (chain.size() >= 2 &&
               det(chain.back() - chain[chain.size() - 2], pt - chain.back()) > 0)
            chain.pop_back();
        chain.push_back(pt);
    }

    ConePolygon poly;
    poly.points = chain;
    poly.vertex_indices.push_back(0);
    for (std::size_t n = 1; n + 1 < chain.size(); ++n) {
        const Vec2 sum = chain[n - 1] + chain[n + 1];
        const Vec2& a = chain[n];
        const Integer alpha = a.x != 0 ? sum.x / a.x : sum.y / a.y;
        if (!(alpha * a == sum))
            fail(ErrorKind::domain, "hull_oracle: neighbours of " + a.str() + " do not sum to a multiple of it");
        poly.weights.push_back(alpha);
        if (det(a - chain[n - 1], chain[n + 1] - a) < 0)
            poly.vertex_indices.push_back(n);
    }
    poly.vertex_indices.push_back(chain.size() - 1);
    return poly;
}

ConePolygon transform(const ConePolygon& poly, const UnimodularMap& m) {
    ConePolygon out = poly;
    for (auto& pt : out.points)
        pt = m(pt);
    return out;
}

ConePolygon polygon_of_rays(const Vec2& u_minus, const Vec2& u_plus) {
    const NormalForm nf = cone_normal_form(u_minus, u_plus);
    return transform(polygon(nf.type), nf.map.inverse());
}

Supplementary supplementary(const ConeNF& c) {
    check_cone(c);
    return Supplementary{ConeNF{c.p, c.p - c.q}, UnimodularMap{-1, -1, 0, 1}};
}

DualityReport duality_map(const ConeNF& c) {
    const Supplementary sup = supplementary(c);
    DualityReport rep;
    rep.type = c;
    rep.dual_type = sup.type;
    rep.polygon = polygon(c);
    rep.dual_polygon = transform(polygon(sup.type), sup.map);

    const auto& pts = rep.polygon.points;
    const auto& vidx = rep.polygon.vertex_indices;
    const auto& dpts = rep.dual_polygon.points;
    const auto& dvidx = rep.dual_polygon.vertex_indices;
    const std::size_t last = pts.size() - 1;

    auto locate = [&](const Vec2& v) {
        const auto it = std::find(dpts.begin(), dpts.end(), v);
        return it == dpts.end() ? static_cast<std::size_t>(-1) : static_cast<std::size_t>(it - dpts.begin());
    };
    auto add = [&](EdgeKind kind, std::size_t from, std::size_t to, Integer length, Vec2 image) {
        const std::size_t at = locate(image);
        const bool is_vertex = at != static_cast<std::size_t>(-1) &&
                               std::find(dvidx.begin(), dvidx.end(), at) != dvidx.end();
        rep.pairs.push_back(DualityPair{kind, from, to, std::move(length), std::move(image), at, is_vertex});
    };

    add(EdgeKind::half_line_minus, 0, 0, 0, -pts[0]);
    for (std::size_t j = 0; j + 1 < vidx.size(); ++j) {
        const Vec2& a = pts[vidx[j]];
        const Vec2& b = pts[vidx[j + 1]];
        add(EdgeKind::compact, vidx[j], vidx[j + 1], integral_length(a, b), primitive(b - a));
    }
    add(EdgeKind::half_line_plus, last, last, 0, pts[last]);

    rep.image_on_dual_polygon = std::all_of(rep.pairs.begin(), rep.pairs.end(), [](const DualityPair& d) {
        return d.image_index != static_cast<std::size_t>(-1);
    });

    rep.dual_vertices_in_image = true;
    for (std::size_t v : dvidx) {
        const bool hit = std::any_of(rep.pairs.begin(), rep.pairs.end(),
                                     [v](const DualityPair& d) { return d.image_index == v; });
        rep.dual_vertices_in_image = rep.dual_vertices_in_image && hit;
    }

    rep.order_preserved = rep.image_on_dual_polygon;
    for (std::size_t i = 1; i < rep.pairs.size() && rep.order_preserved; ++i)
        rep.order_preserved = rep.pairs[i - 1].image_index < rep.pairs[i].image_index;

    // Images of the first and last compact edges may fail to be vertices.
    // With two or more compact edges such an image is a vertex iff the edge
    // has integral length >= 2. A single compact edge [A0, A+] of length l is
    // sent to a point of weight l, which is a vertex iff l >= 3.
    const std::size_t compact = rep.pairs.size() - 2;
    rep.exceptional_ok = true;
    for (std::size_t i = 1; i <= compact; ++i) {
        const DualityPair& d = rep.pairs[i];
        const bool exceptional = i == 1 || i == compact;
        if (exceptional) {
            const Integer threshold = compact == 1 ? 3 : 2;
            rep.exceptional_ok = rep.exceptional_ok && d.image_is_vertex == (d.length >= threshold);
        }
    }

    // Every image other than the exceptional ones is a vertex, and the
    // vertices of P(sigma') are exactly the images that are vertices.
    rep.vertex_sets_equal = rep.dual_vertices_in_image;
    for (std::size_t i = 0; i < rep.pairs.size(); ++i) {
        const bool exceptional = i >= 1 && i <= compact && (i == 1 || i == compact);
        if (!exceptional)
            rep.vertex_sets_equal = rep.vertex_sets_equal && rep.pairs[i].image_is_vertex;
    }
    std::size_t image_vertices = 0;
    for (const auto& d : rep.pairs)
        image_vertices += d.image_is_vertex ? 1 : 0;
    rep.vertex_sets_equal = rep.vertex_sets_equal && image_vertices == dvidx.size();
    return rep;
}

ConeNF dual_cone(const ConeNF& c) {
    check_cone(c);
    // Inward normals in the dual lattice, each positive on the other ray.
    const Vec2 n_minus{0, 1};   // orthogonal to A0 = (1,0)
    const Vec2 n_plus{c.p, c.q};  // orthogonal to A+ = (-q,p)
    return cone_normal_form(n_minus, n_plus).type;
}

IntSeq klein_quotients(const Integer& p, const Integer& q) {
    if (!(1 <= q && q < p) || gcd(p, q) != 1)
        fail(ErrorKind::domain, "klein_quotients: requires 1 <= q < p with gcd(p,q) = 1");
    const Vec2 apex{q, p};

    struct Edge {
        Integer length;
        bool reaches_apex;
    };
    auto edges_of = [&](const Vec2& start) {
        std::vector<Edge> out;
        const NormalForm nf = cone_normal_form(start, apex);
        if (nf.type.regular()) {
            out.push_back({integral_length(start, apex), true});
            return out;
        }
        const std::vector<Vec2> verts = polygon_of_rays(start, apex).vertices();
        for (std::size_t i = 0; i + 1 < verts.size(); ++i)
            out.push_back({integral_length(verts[i], verts[i + 1]), verts[i + 1] == apex});
        return out;
    };
    const std::vector<Edge> xs = edges_of({1, 0});
    const std::vector<Edge> ys = edges_of({0, 1});

    IntSeq out;
    for (std::size_t i = 0; i < std::max(xs.size(), ys.size()); ++i) {
        for (const auto* side : {&xs, &ys}) {
            if (i >= side->size())
                fail(ErrorKind::domain, "klein_quotients: polygons ran out of edges");
            const Edge& e = (*side)[i];
            out.push_back(e.length);
            if (e.reaches_apex)
                return out;
        }
    }
    return out;
}

} // namespace latticecf
