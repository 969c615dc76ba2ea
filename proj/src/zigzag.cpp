#include "latticecf/zigzag.hpp"

#include "latticecf/errors.hpp"

#include <map>
#include <sstream>

namespace latticecf {

std::string_view to_string(Reading r) noexcept {
    switch (r) {
    case Reading::hj_lambda: return "hj";
    case Reading::hj_involute: return "hj-dual";
    case Reading::e_involute: return "e-dual";
    case Reading::e_lambda: return "e";
    }
    return "?";
}

ZigzagDiagram build_zigzag(const Rational& lambda) {
    if (lambda <= Rational(1))
        fail(ErrorKind::domain, "zigzag: requires lambda > 1, got " + lambda.str());
    ZigzagDiagram d;
    d.lambda = lambda;
    d.blocks = hj_blocks(expand_hj(lambda).terms);
    const IntSeq& m = d.blocks.twos;
    const IntSeq& n = d.blocks.bumps;
    const std::size_t s = d.s();

    for (const auto& mi : m)
        d.right.edge_lengths.push_back(mi + 1);
    for (const auto& ni : n)
        d.right.vertex_weights.push_back(ni + 3);

    d.left.edge_lengths.push_back(1);
    for (const auto& ni : n)
        d.left.edge_lengths.push_back(ni + 1);
    d.left.edge_lengths.push_back(1);
    if (s == 0) {
        d.left.vertex_weights.push_back(m[0] + 1);
    } else {
        for (std::size_t j = 0; j <= s; ++j)
            d.left.vertex_weights.push_back(m[j] + (j == 0 || j == s ? 2 : 3));
    }
    d.first_end_vertex = d.left.vertex_weights.front() >= 3;
    d.last_end_vertex = d.left.vertex_weights.back() >= 3;
    return d;
}

CFExpansion read(const ZigzagDiagram& d, Reading which) {
    const std::size_t s = d.s();
    const IntSeq& redge = d.right.edge_lengths;
    const IntSeq& rweight = d.right.vertex_weights;
    const IntSeq& ledge = d.left.edge_lengths;
    const IntSeq& lweight = d.left.vertex_weights;

    switch (which) {
    case Reading::hj_lambda: {
        HJBlocks b;
        for (const auto& e : redge)
            b.twos.push_back(e - 1);
        for (const auto& w : rweight)
            b.bumps.push_back(w - 3);
        return {CFKind::hj, from_blocks(b)};
    }
    case Reading::hj_involute: {
        IntSeq out{lweight[0]};
        for (std::size_t j = 1; j <= s; ++j) {
            out.insert(out.end(), ledge[j].convert_to<std::size_t>() - 1, Integer(2));
            out.push_back(lweight[j]);
        }
        return {CFKind::hj, out};
    }
    case Reading::e_involute: {
        IntSeq out;
        for (std::size_t j = 0; j <= s; ++j) {
            out.push_back(redge[j]);
            if (j < s)
                out.push_back(ledge[j + 1]);
        }
        return {CFKind::e, canonical_e(std::move(out))};
    }
    case Reading::e_lambda: {
        IntSeq out;
        std::size_t j = 0;
        if (redge[0] == 1) {
            // m_1 = 0: the first block contributes n_1 + 2.
            out.push_back(ledge[1] + 1);
            j = 1;
        } else {
            out.push_back(1);
            out.push_back(redge[0] - 1);
            if (s >= 1)
                out.push_back(ledge[1]);
            j = 1;
        }
        for (; j <= s; ++j) {
            out.push_back(redge[j]);
            if (j < s)
                out.push_back(ledge[j + 1]);
        }
        return {CFKind::e, canonical_e(std::move(out))};
    }
    }
    fail(ErrorKind::domain, "unknown reading");
}

bool satisfies_rule(const ZigzagDiagram& d) {
    const std::size_t s = d.s();
    if (d.right.edge_lengths.size() != s + 1 || d.right.vertex_weights.size() != s ||
        d.left.edge_lengths.size() != s + 2 || d.left.vertex_weights.size() != s + 1)
        return false;
    for (std::size_t i = 1; i <= s; ++i) {
        if (d.right.vertex_weights[i - 1] != d.left.edge_lengths[i] + 2)
            return false;
    }
    for (std::size_t j = 1; j <= s + 1; ++j) {
        const int inner = (j - 1 >= 1 ? 1 : 0) + (j <= s ? 1 : 0);
        if (d.left.vertex_weights[j - 1] != d.right.edge_lengths[j - 1] + inner)
            return false;
    }
    return true;
}

namespace {

std::string point_text(const Integer& w) {
    return (w >= 3 ? "(" : "[") + w.str() + (w >= 3 ? ")" : "]");
}

std::string center(const std::string& text, std::size_t width) {
    if (text.size() >= width)
        return text;
    const std::size_t left = (width - text.size()) / 2;
    return std::string(left, ' ') + text + std::string(width - text.size() - left, ' ');
}

std::string pad_right(const std::string& text, std::size_t width) {
    return text.size() >= width ? text : text + std::string(width - text.size(), ' ');
}

std::string pad_left(const std::string& text, std::size_t width) {
    return text.size() >= width ? text : std::string(width - text.size(), ' ') + text;
}

void rtrim(std::string& line) {
    while (!line.empty() && line.back() == ' ')
        line.pop_back();
}

} // namespace

// Heights: A-, A-' at 0; V_j' at 2j-1; V_j at 2j; A+ at 2s+2. Rows are
// doubled so that chords and edge labels sit between point rows.
std::string render_ascii(const ZigzagDiagram& d) {
    const std::size_t s = d.s();
    const std::size_t top = 2 * s + 2;

    std::map<std::size_t, std::string> left_label;
    std::map<std::size_t, std::string> right_label;
    for (std::size_t j = 0; j <= s + 1; ++j) {
        const std::size_t a = j == 0 ? 0 : 2 * j - 1;
        const std::size_t b = j == s + 1 ? top : 2 * j + 1;
        left_label[a + b] = d.left.edge_lengths[j].str();
    }
    for (std::size_t i = 0; i <= s; ++i)
        right_label[4 * i + 2] = d.right.edge_lengths[i].str();

    constexpr std::size_t label_w = 4;
    constexpr std::size_t point_w = 7;
    constexpr std::size_t mid_w = 7;

    std::ostringstream out;
    out << "ZZ(" << d.lambda.str() << ")\n";
    for (std::size_t row = 2 * top + 1; row-- > 0;) {
        std::string lp = "|";
        std::string mid;
        std::string rp = "|";
        if (row % 2 == 0) {
            const std::size_t h = row / 2;
            if (h == 0) {
                lp = "A-'";
                mid = "O";
                rp = "A-";
            } else if (h == top) {
                lp = "A+";
                mid = "-----";
                rp = "A+";
            } else if (h % 2 == 1) {
                lp = point_text(d.left.vertex_weights[(h + 1) / 2 - 1]);
            } else {
                rp = point_text(d.right.vertex_weights[h / 2 - 1]);
            }
        } else {
            const std::size_t h = row / 2;
            mid = h % 2 == 0 ? "\\" : "/";
        }
        const std::string ll = left_label.count(row) ? left_label[row] : "";
        const std::string rl = right_label.count(row) ? right_label[row] : "";
        std::string line = pad_left(ll, label_w - 1) + " " + center(lp, point_w) + center(mid, mid_w) +
                           center(rp, point_w) + " " + pad_right(rl, label_w);
        rtrim(line);
        out << line << '\n';
    }
    return out.str();
}

std::string render_svg(const ZigzagDiagram& d) {
    const std::size_t s = d.s();
    const long top = static_cast<long>(2 * s + 2);
    const long xl = 60;
    const long xr = 220;
    const long step = 40;
    const long margin = 30;
    const long width = 280;
    const long height = 2 * margin + top * step;
    auto y_of = [&](long h) { return margin + (top - h) * step; };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";

    // Sides: A-' up to A+, A- up to A+, meeting at the apex.
    const long apex_x = (xl + xr) / 2;
    out << "<path d=\"M " << xl << ' ' << y_of(0) << " L " << xl << ' ' << y_of(top - 1) << " L " << apex_x
        << ' ' << y_of(top) << "\" fill=\"none\" stroke=\"black\"/>\n";
    out << "<path d=\"M " << xr << ' ' << y_of(0) << " L " << xr << ' ' << y_of(top - 1) << " L " << apex_x
        << ' ' << y_of(top) << "\" fill=\"none\" stroke=\"black\"/>\n";

    // Zigzag A- V_1' V_1 ... V_{s+1}' A+.
    out << "<path d=\"M " << xr << ' ' << y_of(0);
    for (long h = 1; h < top; ++h)
        out << " L " << (h % 2 == 1 ? xl : xr) << ' ' << y_of(h);
    out << " L " << apex_x << ' ' << y_of(top) << "\" fill=\"none\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";

    auto dot = [&](long x, long y, const Integer& w, bool right) {
        const bool vertex = w >= 3;
        out << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"5\" fill=\"" << (vertex ? "black" : "white")
            << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << (right ? x + 10 : x - 10) << "\" y=\"" << y + 4 << "\" text-anchor=\""
            << (right ? "start" : "end") << "\" font-size=\"12\">" << w.str() << "</text>\n";
    };
    for (std::size_t j = 1; j <= s + 1; ++j)
        dot(xl, y_of(static_cast<long>(2 * j - 1)), d.left.vertex_weights[j - 1], false);
    for (std::size_t i = 1; i <= s; ++i)
        dot(xr, y_of(static_cast<long>(2 * i)), d.right.vertex_weights[i - 1], true);

    auto label = [&](long x, long y, const std::string& text, const char* anchor) {
        out << "<text x=\"" << x << "\" y=\"" << y << "\" text-anchor=\"" << anchor
            << "\" font-size=\"10\" fill=\"gray\">" << text << "</text>\n";
    };
    for (std::size_t j = 0; j <= s + 1; ++j) {
        const long a = j == 0 ? 0 : static_cast<long>(2 * j - 1);
        const long b = j == s + 1 ? top : static_cast<long>(2 * j + 1);
        label(xl - 30, (y_of(a) + y_of(b)) / 2 + 4, d.left.edge_lengths[j].str(), "end");
    }
    for (std::size_t i = 0; i <= s; ++i) {
        const long a = static_cast<long>(2 * i);
        label(xr + 30, (y_of(a) + y_of(a + 2)) / 2 + 4, d.right.edge_lengths[i].str(), "start");
    }

    label(xl, y_of(0) + 18, "A-'", "middle");
    label(xr, y_of(0) + 18, "A-", "middle");
    label(apex_x, y_of(top) - 10, "A+", "middle");
    label(apex_x, y_of(0) + 18, "O", "middle");
    out << "</svg>\n";
    return out.str();
}

} // namespace latticecf
