// lattice-cf: command-line front end.
//
// Exit status: 0 success, 1 usage error, 2 domain error, 3 oracle mismatch.

#include "latticecf/cf.hpp"
#include "latticecf/errors.hpp"
#include "latticecf/graphs.hpp"
#include "latticecf/json_io.hpp"
#include "latticecf/lattice.hpp"
#include "latticecf/singularities.hpp"
#include "latticecf/zigzag.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <iostream>
#include <string>
#include <vector>

using namespace latticecf;
using nlohmann::json;

namespace {

constexpr int exit_usage = 1;
constexpr int exit_domain = 2;
constexpr int exit_mismatch = 3;

struct Mismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rational lambda_arg(const std::string& text) {
    const Rational x = Rational::parse(text);
    if (x <= Rational(1))
        fail(ErrorKind::domain, "expected P/Q with P/Q > 1, got " + x.str());
    return x;
}

ConeNF cone_arg(const std::string& text) {
    const Rational x = lambda_arg(text);
    return ConeNF{x.num(), x.den()};
}

HJType type_arg(const std::string& text) {
    const Rational x = lambda_arg(text);
    return HJType{x.num(), x.den()};
}

std::string matrix_str(const UnimodularMap& m) {
    return "[[" + m.a.str() + "," + m.b.str() + "],[" + m.c.str() + "," + m.d.str() + "]]";
}

json vec_json(const Vec2& v) {
    return json::array({integer_json(v.x), integer_json(v.y)});
}

json cone_json(const ConeNF& c) {
    return json{{"p", integer_json(c.p)}, {"q", integer_json(c.q)}};
}

json polygon_json(const ConeNF& c, const ConePolygon& poly) {
    json points = json::array();
    for (const auto& pt : poly.points)
        points.push_back(vec_json(pt));
    return json{{"schema", json_schema},
                {"type", cone_json(c)},
                {"points", points},
                {"weights", sequence_json(poly.weights)},
                {"vertices", poly.vertex_indices}};
}

json duality_json(const DualityReport& rep) {
    json pairs = json::array();
    for (const auto& d : rep.pairs) {
        pairs.push_back(json{{"edge", std::string(to_string(d.kind))},
                             {"from", d.from},
                             {"to", d.to},
                             {"length", integer_json(d.length)},
                             {"image", vec_json(d.image)},
                             {"image_index", d.image_index == static_cast<std::size_t>(-1) ? json(nullptr)
                                                                                          : json(d.image_index)},
                             {"image_is_vertex", d.image_is_vertex}});
    }
    json dual_points = json::array();
    for (const auto& pt : rep.dual_polygon.points)
        dual_points.push_back(vec_json(pt));
    return json{{"schema", json_schema},
                {"type", cone_json(rep.type)},
                {"dual_type", cone_json(rep.dual_type)},
                {"dual_points", dual_points},
                {"dual_vertices", rep.dual_polygon.vertex_indices},
                {"pairs", pairs},
                {"checks",
                 {{"image_on_dual_polygon", rep.image_on_dual_polygon},
                  {"dual_vertices_in_image", rep.dual_vertices_in_image},
                  {"order_preserved", rep.order_preserved},
                  {"exceptional_ok", rep.exceptional_ok},
                  {"vertex_sets_equal", rep.vertex_sets_equal}}},
                {"ok", rep.ok()}};
}

json zigzag_json(const ZigzagDiagram& d) {
    auto side = [](const ZigzagSide& s) {
        return json{{"edge_lengths", sequence_json(s.edge_lengths)},
                    {"vertex_weights", sequence_json(s.vertex_weights)}};
    };
    json readings;
    for (Reading r : {Reading::hj_lambda, Reading::hj_involute, Reading::e_lambda, Reading::e_involute})
        readings[std::string(to_string(r))] = sequence_json(read(d, r).terms);
    return json{{"schema", json_schema},
                {"lambda", d.lambda.str()},
                {"s", d.s()},
                {"right", side(d.right)},
                {"left", side(d.left)},
                {"end_flags", {{"first_vertex", d.first_end_vertex}, {"last_vertex", d.last_end_vertex}}},
                {"readings", readings}};
}

void print_json(const json& j) {
    std::cout << j.dump(2) << '\n';
}

void emit_graph(const WeightedDualGraph& g, const std::string& format) {
    if (format == "dot")
        std::cout << to_dot(g);
    else
        std::cout << to_json(g);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact continued fractions, lattice cones and singularity combinatorics"};
    app.name("lattice-cf");
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Print help for all subcommands");

    std::function<void()> action;

    // cf
    auto* cf = app.add_subcommand("cf", "Continued fractions");
    cf->require_subcommand(1);

    std::string kind = "e";
    std::string value;
    auto* cf_expand = cf->add_subcommand("expand", "Expand P/Q as an E or HJ continued fraction");
    cf_expand->add_option("--kind", kind, "e or hj")->check(CLI::IsMember({"e", "hj"}));
    cf_expand->add_option("value", value, "P/Q")->required();
    cf_expand->callback([&] {
        action = [&] {
            const Rational x = Rational::parse(value);
            std::cout << format_sequence((kind == "e" ? expand_e(x) : expand_hj(x)).terms) << '\n';
        };
    });

    std::string to_kind;
    std::string terms;
    auto* cf_convert = cf->add_subcommand("convert", "Convert partial quotients between E and HJ kinds");
    cf_convert->add_option("--to", to_kind, "target kind: e or hj")->required()->check(CLI::IsMember({"e", "hj"}));
    cf_convert->add_option("terms", terms, "a1,a2,...")->required();
    cf_convert->callback([&] {
        action = [&] {
            const IntSeq seq = parse_sequence(terms);
            std::cout << format_sequence(to_kind == "hj" ? e_to_hj(seq) : hj_to_e(seq)) << '\n';
        };
    });

    bool show_terms = false;
    auto* cf_involute = cf->add_subcommand("involute", "Apply lambda -> lambda/(lambda-1)");
    cf_involute->add_option("value", value, "P/Q > 1")->required();
    cf_involute->add_flag("--terms", show_terms, "Also print both expansions of the result");
    cf_involute->callback([&] {
        action = [&] {
            const Rational x = Rational::parse(value);
            const Rational y = involute(x);
            std::cout << y.str() << '\n';
            if (show_terms) {
                std::cout << "e  " << format_sequence(involute_e(expand_e(x).terms)) << '\n';
                std::cout << "hj " << format_sequence(involute_hj(expand_hj(x).terms)) << '\n';
            }
        };
    });

    auto* cf_stair = cf->add_subcommand("staircase", "Point diagram of an HJ sequence and its transpose");
    cf_stair->add_option("terms", terms, "a1,a2,... (all >= 2)")->required();
    cf_stair->callback([&] {
        action = [&] {
            const Staircase s = staircase(parse_sequence(terms));
            std::cout << s.render();
            std::cout << "dual " << format_sequence(staircase_dual(s)) << '\n';
        };
    });

    // cone
    auto* cone = app.add_subcommand("cone", "Lattice cones");
    cone->require_subcommand(1);

    std::vector<std::string> coords;
    auto* cone_type = cone->add_subcommand("type", "Normal form of cone(u, v)");
    cone_type->add_option("coords", coords, "UX UY VX VY")->required()->expected(4);
    cone_type->callback([&] {
        action = [&] {
            const Vec2 u{parse_integer(coords[0]), parse_integer(coords[1])};
            const Vec2 v{parse_integer(coords[2]), parse_integer(coords[3])};
            const NormalForm nf = cone_normal_form(u, v);
            std::cout << (nf.type.regular() ? "regular " : "type ") << nf.type.str() << '\n';
            std::cout << "map " << matrix_str(nf.map) << '\n';
        };
    });

    bool oracle = false;
    auto* cone_poly = cone->add_subcommand("polygon", "P(sigma) in normal coordinates");
    cone_poly->add_option("value", value, "P/Q > 1")->required();
    cone_poly->add_flag("--oracle", oracle, "Cross-check against the convex-hull search");
    cone_poly->callback([&] {
        action = [&] {
            const ConeNF c = cone_arg(value);
            const ConePolygon poly = polygon(c);
            if (oracle && !(hull_oracle(c) == poly))
                throw Mismatch("polygon differs from the convex-hull search for " + c.str());
            print_json(polygon_json(c, poly));
        };
    });

    auto* cone_dual = cone->add_subcommand("dual", "Normal form of the dual cone");
    cone_dual->add_option("value", value, "P/Q > 1")->required();
    cone_dual->callback([&] {
        action = [&] {
            const ConeNF c = cone_arg(value);
            const ConeNF d = dual_cone(c);
            if (!(d == supplementary(c).type))
                throw Mismatch("dual cone differs from the supplementary cone for " + c.str());
            std::cout << d.str() << '\n';
        };
    });

    auto* cone_report = cone->add_subcommand("duality-report", "Edges of P(sigma) against points of P(sigma')");
    cone_report->add_option("value", value, "P/Q > 1")->required();
    cone_report->callback([&] {
        action = [&] {
            const DualityReport rep = duality_map(cone_arg(value));
            print_json(duality_json(rep));
            if (!rep.ok())
                throw Mismatch("duality checks failed for " + rep.type.str());
        };
    });

    // zigzag
    std::string format;
    std::string reading;
    auto* zigzag = app.add_subcommand("zigzag", "Zigzag diagram of lambda");
    zigzag->add_option("value", value, "P/Q > 1")->required();
    zigzag->add_option("--format", format, "ascii, svg or json")->check(CLI::IsMember({"ascii", "svg", "json"}));
    zigzag->add_option("--read", reading, "hj, hj-dual, e or e-dual")
        ->check(CLI::IsMember({"hj", "hj-dual", "e", "e-dual"}));
    zigzag->callback([&] {
        action = [&] {
            const ZigzagDiagram d = build_zigzag(lambda_arg(value));
            if (!reading.empty()) {
                for (Reading r : {Reading::hj_lambda, Reading::hj_involute, Reading::e_lambda, Reading::e_involute}) {
                    if (to_string(r) == reading)
                        std::cout << format_sequence(read(d, r).terms) << '\n';
                }
                if (format.empty())
                    return;
            }
            if (format == "svg")
                std::cout << render_svg(d);
            else if (format == "json")
                print_json(zigzag_json(d));
            else
                std::cout << render_ascii(d);
        };
    });

    // sing
    auto* sing = app.add_subcommand("sing", "Hirzebruch-Jung singularities");
    sing->require_subcommand(1);

    auto* sing_resolve = sing->add_subcommand("resolve", "Minimal resolution graph");
    sing_resolve->add_option("value", value, "P/Q > 1")->required();
    sing_resolve->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
    sing_resolve->callback([&] { action = [&] { emit_graph(hj_resolution(type_arg(value)), format); }; });

    auto* sing_embdim = sing->add_subcommand("embdim", "Embedding dimension");
    sing_embdim->add_option("value", value, "P/Q > 1")->required();
    sing_embdim->add_flag("--oracle", oracle, "Cross-check by enumerating semigroup generators");
    sing_embdim->callback([&] {
        action = [&] {
            const HJType t = type_arg(value);
            const Integer e = embdim(t);
            if (oracle && embdim_oracle(t) != e)
                throw Mismatch("embedding dimension differs from the generator count");
            std::cout << e.str() << '\n';
        };
    });

    auto* sing_blowup = sing->add_subcommand("blowup", "Singularities left after blowing up the origin");
    sing_blowup->add_option("value", value, "P/Q > 1")->required();
    sing_blowup->callback([&] {
        action = [&] {
            std::string out = "[";
            const auto types = blowup_types(type_arg(value));
            for (std::size_t i = 0; i < types.size(); ++i)
                out += (i ? "," : "") + type_name(types[i]);
            std::cout << out << "]\n";
        };
    });

    // lens
    auto* lens = app.add_subcommand("lens", "Lens spaces L(p,q)");
    lens->require_subcommand(1);

    std::vector<std::string> nums;
    bool reverse = false;
    auto* lens_compare = lens->add_subcommand("compare", "Compare L(P,Q) with L(P2,Q2)");
    lens_compare->add_option("numbers", nums, "P Q P2 Q2")->required()->expected(4);
    lens_compare->add_flag("--reverse", reverse, "Ask for an orientation-reversing diffeomorphism");
    lens_compare->callback([&] {
        action = [&] {
            const LensSpace a{parse_integer(nums[0]), parse_integer(nums[1])};
            const LensSpace b{parse_integer(nums[2]), parse_integer(nums[3])};
            if (reverse)
                std::cout << (lens_reversing_equal(a, b) ? "orientation-reversing-diffeomorphic"
                                                         : "not-orientation-reversing-diffeomorphic")
                          << '\n';
            else
                std::cout << (lens_oriented_equal(a, b) ? "oriented-diffeomorphic" : "not-oriented-diffeomorphic")
                          << '\n';
        };
    });

    auto* lens_rev = lens->add_subcommand("reverse", "L(P,Q) with the opposite orientation");
    lens_rev->add_option("numbers", nums, "P Q")->required()->expected(2);
    lens_rev->callback([&] {
        action = [&] {
            const LensSpace r = lens_reverse(LensSpace{parse_integer(nums[0]), parse_integer(nums[1])});
            std::cout << "L(" << r.p.str() << "," << r.q.str() << ")\n";
        };
    });

    // cusp
    auto* cusp = app.add_subcommand("cusp", "Cusp cycles");
    cusp->require_subcommand(1);

    auto* cusp_mono = cusp->add_subcommand("monodromy", "Monodromy matrix over one period");
    cusp_mono->add_option("weights", terms, "a1,a2,...")->required();
    cusp_mono->callback([&] {
        action = [&] {
            const UnimodularMap m = cusp_monodromy(CuspCycle(parse_sequence(terms)));
            std::cout << matrix_str(m) << '\n';
            std::cout << "trace " << (m.a + m.d).str() << '\n';
        };
    });

    auto* cusp_tr = cusp->add_subcommand("trace", "Monodromy trace by the continuant formula");
    cusp_tr->add_option("weights", terms, "a1,a2,...")->required();
    cusp_tr->callback([&] {
        action = [&] {
            const CuspCycle c(parse_sequence(terms));
            const Integer t = cusp_trace_formula(c);
            const UnimodularMap m = cusp_monodromy(c);
            if (t != m.a + m.d)
                throw Mismatch("continuant trace differs from the matrix trace");
            std::cout << t.str() << '\n';
        };
    });

    auto* cusp_d = cusp->add_subcommand("dual", "Dual cusp cycle");
    cusp_d->add_option("weights", terms, "a1,a2,...")->required();
    cusp_d->callback([&] { action = [&] { std::cout << cusp_dual(CuspCycle(parse_sequence(terms))).str() << '\n'; }; });

    // curve
    auto* curve = app.add_subcommand("curve", "Monomial plane curves x^P = y^Q");
    curve->require_subcommand(1);

    auto* curve_resolve = curve->add_subcommand("resolve", "Embedded resolution graph");
    curve_resolve->add_option("numbers", nums, "P Q")->required()->expected(2);
    curve_resolve->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
    curve_resolve->add_flag("--oracle", oracle, "Cross-check by simulating the blow-ups");
    curve_resolve->callback([&] {
        action = [&] {
            const Integer p = parse_integer(nums[0]);
            const Integer q = parse_integer(nums[1]);
            const WeightedDualGraph g = resolve_monomial(p, q);
            if (oracle && !(blowup_oracle(p, q) == g))
                throw Mismatch("resolution graph differs from the blow-up simulation");
            emit_graph(g, format);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    try {
        if (action)
            action();
        std::cout.flush();
        return 0;
    } catch (const Mismatch& e) {
        std::cout.flush();
        std::cerr << "oracle mismatch: " << e.what() << '\n';
        return exit_mismatch;
    } catch (const Error& e) {
        std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
        return e.kind() == ErrorKind::parse ? exit_usage : exit_domain;
    }
}
