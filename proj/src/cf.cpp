#include "latticecf/cf.hpp"

#include "latticecf/errors.hpp"

#include <algorithm>
#include <numeric>

namespace latticecf {

namespace {

std::size_t to_count(const Integer& x) {
    if (x < 0)
        fail(ErrorKind::invalid_sequence, "negative repetition count");
    return x.convert_to<std::size_t>();
}

void require_nonempty(std::span<const Integer> terms, const char* what) {
    if (terms.empty())
        fail(ErrorKind::invalid_sequence, std::string(what) + ": empty sequence");
}

void check_e(std::span<const Integer> terms, const char* what) {
    require_nonempty(terms, what);
    for (std::size_t i = 1; i < terms.size(); ++i) {
        if (terms[i] < 1)
            fail(ErrorKind::invalid_sequence,
                 std::string(what) + ": E partial quotients after the first must be >= 1, got " + to_string(terms[i]));
    }
}

void check_hj(std::span<const Integer> terms, const char* what) {
    require_nonempty(terms, what);
    for (std::size_t i = 1; i < terms.size(); ++i) {
        if (terms[i] < 2)
            fail(ErrorKind::invalid_sequence,
                 std::string(what) + ": HJ partial quotients after the first must be >= 2, got " + to_string(terms[i]));
    }
}

void append_twos(IntSeq& out, const Integer& count) {
    out.insert(out.end(), to_count(count), Integer(2));
}

} // namespace

std::string_view to_string(CFKind kind) noexcept {
    return kind == CFKind::e ? "e" : "hj";
}

Integer continuant(Sign sign, std::span<const Integer> terms) {
    // Right-to-left: cur = Z(x_k..x_n), next = Z(x_{k+1}..x_n), with Z of a
    // "negative length" tail taken as 0 so that Z(x) = x.
    Integer cur = 1;
    Integer next = 0;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        Integer z = *it * cur;
        if (sign == Sign::plus)
            z += next;
        else
            z -= next;
        next = std::move(cur);
        cur = std::move(z);
    }
    return cur;
}

Rational eval(const CFExpansion& cf) {
    require_nonempty(cf.terms, "eval");
    // value = num/den, folded from the right; numerators and denominators
    // are consecutive continuants, hence coprime.
    Integer num = cf.terms.back();
    Integer den = 1;
    for (std::size_t k = cf.terms.size() - 1; k-- > 0;) {
        if (num == 0)
            fail(ErrorKind::division_by_zero,
                 "eval: tail starting at position " + std::to_string(k + 2) + " evaluates to 0");
        Integer next = cf.terms[k] * num;
        if (cf.kind == CFKind::e)
            next += den;
        else
            next -= den;
        den = std::move(num);
        num = std::move(next);
    }
    return Rational(std::move(num), std::move(den));
}

CFExpansion expand_e(const Rational& x) {
    CFExpansion out{CFKind::e, {}};
    Integer n = x.num();
    Integer d = x.den();
    while (true) {
        Integer a = floor_div(n, d);
        Integer r = n - a * d;
        out.terms.push_back(std::move(a));
        if (r == 0)
            break;
        n = std::move(d);
        d = std::move(r);
    }
    return out;
}

CFExpansion expand_hj(const Rational& x) {
    CFExpansion out{CFKind::hj, {}};
    Integer n = x.num();
    Integer d = x.den();
    while (true) {
        Integer a = ceil_div(n, d);
        Integer r = a * d - n;
        out.terms.push_back(std::move(a));
        if (r == 0)
            break;
        n = std::move(d);
        d = std::move(r);
    }
    return out;
}

IntSeq canonical_e(IntSeq terms) {
    while (terms.size() >= 2 && terms.back() == 1) {
        terms.pop_back();
        terms.back() += 1;
    }
    return terms;
}

IntSeq e_to_hj(std::span<const Integer> terms) {
    check_e(terms, "e_to_hj");
    if (terms.size() == 1)
        return IntSeq(terms.begin(), terms.end());
    const std::size_t n = terms.size();
    IntSeq out{terms[0] + 1};
    for (std::size_t j = 1; j < n; j += 2) {
        append_twos(out, terms[j] - 1);
        if (j + 1 < n)
            out.push_back(terms[j + 1] + (j + 1 == n - 1 ? 1 : 2));
    }
    return out;
}

IntSeq hj_to_e(std::span<const Integer> terms) {
    check_hj(terms, "hj_to_e");
    if (terms.size() == 1)
        return IntSeq(terms.begin(), terms.end());
    IntSeq out{terms[0] - 1};
    std::size_t i = 1;
    while (true) {
        Integer run = 0;
        while (i < terms.size() && terms[i] == 2) {
            ++run;
            ++i;
        }
        out.push_back(run + 1);
        if (i == terms.size())
            break;
        const bool last = i + 1 == terms.size();
        out.push_back(terms[i] - (last ? 1 : 2));
        ++i;
        if (last)
            break;
    }
    return out;
}

PeriodicCF PeriodicCF::normalized(CFKind kind, IntSeq preperiod, IntSeq period) {
    if (period.empty())
        fail(ErrorKind::invalid_sequence, "periodic continued fraction with empty period");
    const std::size_t len = period.size();
    for (std::size_t d = 1; d <= len; ++d) {
        if (len % d != 0)
            continue;
        bool repeats = true;
        for (std::size_t i = d; i < len && repeats; ++i)
            repeats = period[i] == period[i - d];
        if (repeats) {
            period.resize(d);
            break;
        }
    }
    while (!preperiod.empty() && preperiod.back() == period.back()) {
        preperiod.pop_back();
        std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
    }
    return PeriodicCF{kind, std::move(preperiod), std::move(period)};
}

IntSeq PeriodicCF::prefix(std::size_t n) const {
    IntSeq out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (i < preperiod.size())
            out.push_back(preperiod[i]);
        else
            out.push_back(period[(i - preperiod.size()) % period.size()]);
    }
    return out;
}

PeriodicCF e_to_hj_periodic(const PeriodicCF& x) {
    if (x.kind != CFKind::e)
        fail(ErrorKind::invalid_sequence, "e_to_hj_periodic: input must be of kind E");
    const PeriodicCF in = PeriodicCF::normalized(CFKind::e, x.preperiod, x.period);
    for (const auto& t : in.period) {
        if (t < 1)
            fail(ErrorKind::invalid_sequence, "e_to_hj_periodic: period terms must be >= 1");
    }
    for (std::size_t i = 1; i < in.preperiod.size(); ++i) {
        if (in.preperiod[i] < 1)
            fail(ErrorKind::invalid_sequence, "e_to_hj_periodic: terms after the first must be >= 1");
    }

    // Terms pair up as (a_2,a_3), (a_4,a_5), ... Shift so the period starts at
    // a pair boundary (odd preperiod length) and spans whole pairs.
    IntSeq pre = in.preperiod;
    IntSeq per = in.period;
    if (pre.size() % 2 == 0) {
        pre.push_back(per.front());
        std::rotate(per.begin(), per.begin() + 1, per.end());
    }
    if (per.size() % 2 == 1) {
        const IntSeq copy = per;
        per.insert(per.end(), copy.begin(), copy.end());
    }

    IntSeq hj_pre{pre.front() + 1};
    for (std::size_t j = 1; j + 1 < pre.size(); j += 2) {
        append_twos(hj_pre, pre[j] - 1);
        hj_pre.push_back(pre[j + 1] + 2);
    }
    IntSeq hj_per;
    for (std::size_t j = 0; j + 1 < per.size(); j += 2) {
        append_twos(hj_per, per[j] - 1);
        hj_per.push_back(per[j + 1] + 2);
    }
    return PeriodicCF::normalized(CFKind::hj, std::move(hj_pre), std::move(hj_per));
}

Rational involute(const Rational& x) {
    if (x <= Rational(1))
        fail(ErrorKind::domain, "involute: requires lambda > 1, got " + x.str());
    return x / (x - Rational(1));
}

IntSeq involute_e(std::span<const Integer> terms) {
    check_e(terms, "involute_e");
    if (terms[0] < 1 || (terms.size() == 1 && terms[0] == 1))
        fail(ErrorKind::invalid_sequence, "involute_e: expansion must describe lambda > 1");
    if (terms.size() >= 2 && terms.back() == 1)
        fail(ErrorKind::invalid_sequence, "involute_e: expansion is not canonical (trailing 1)");
    IntSeq out;
    if (terms[0] == 1) {
        out.push_back(terms[1] + 1);
        out.insert(out.end(), terms.begin() + 2, terms.end());
    } else {
        out.push_back(1);
        out.push_back(terms[0] - 1);
        out.insert(out.end(), terms.begin() + 1, terms.end());
    }
    return canonical_e(std::move(out));
}

HJBlocks hj_blocks(std::span<const Integer> terms) {
    require_nonempty(terms, "hj_blocks");
    for (const auto& t : terms) {
        if (t < 2)
            fail(ErrorKind::invalid_sequence, "hj_blocks: all terms must be >= 2, got " + to_string(t));
    }
    HJBlocks blocks;
    Integer run = 0;
    for (const auto& t : terms) {
        if (t == 2) {
            ++run;
        } else {
            blocks.twos.push_back(run);
            blocks.bumps.push_back(t - 3);
            run = 0;
        }
    }
    blocks.twos.push_back(run);
    return blocks;
}

IntSeq from_blocks(const HJBlocks& blocks) {
    if (blocks.twos.size() != blocks.bumps.size() + 1)
        fail(ErrorKind::invalid_sequence, "from_blocks: need exactly one more run of 2s than bumps");
    IntSeq out;
    for (std::size_t i = 0; i < blocks.bumps.size(); ++i) {
        append_twos(out, blocks.twos[i]);
        out.push_back(blocks.bumps[i] + 3);
    }
    append_twos(out, blocks.twos.back());
    return out;
}

IntSeq involute_hj(std::span<const Integer> terms) {
    const HJBlocks b = hj_blocks(terms);
    const std::size_t s = b.s();
    if (s == 0)
        return IntSeq{b.twos[0] + 1};
    IntSeq out{b.twos[0] + 2};
    for (std::size_t i = 0; i < s; ++i) {
        append_twos(out, b.bumps[i]);
        out.push_back(b.twos[i + 1] + (i + 1 == s ? 2 : 3));
    }
    return out;
}

IntSeq Staircase::offsets() const {
    IntSeq out;
    out.reserve(rows.size());
    Integer col = 0;
    for (const auto& r : rows) {
        out.push_back(col);
        col += r - 1;
    }
    return out;
}

std::string Staircase::render() const {
    std::string out;
    const IntSeq offs = offsets();
    for (std::size_t k = 0; k < rows.size(); ++k) {
        out.append(2 * to_count(offs[k]), ' ');
        const std::size_t n = to_count(rows[k]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i != 0)
                out += ' ';
            out += '*';
        }
        out += '\n';
    }
    return out;
}

Staircase staircase(std::span<const Integer> terms) {
    require_nonempty(terms, "staircase");
    Staircase s;
    for (const auto& t : terms) {
        if (t < 2)
            fail(ErrorKind::invalid_sequence, "staircase: all terms must be >= 2, got " + to_string(t));
        s.rows.push_back(t - 1);
    }
    return s;
}

IntSeq staircase_dual(const Staircase& s) {
    if (s.rows.empty())
        fail(ErrorKind::invalid_sequence, "staircase_dual: empty diagram");
    for (const auto& r : s.rows) {
        if (r < 1)
            fail(ErrorKind::invalid_sequence, "staircase_dual: every row needs at least one point");
    }
    const IntSeq offs = s.offsets();
    const std::size_t columns = to_count(offs.back() + s.rows.back());
    std::vector<std::size_t> counts(columns, 0);
    for (std::size_t k = 0; k < s.rows.size(); ++k) {
        const std::size_t first = to_count(offs[k]);
        const std::size_t n = to_count(s.rows[k]);
        for (std::size_t c = first; c < first + n; ++c)
            ++counts[c];
    }
    IntSeq out;
    out.reserve(columns);
    for (std::size_t c : counts)
        out.push_back(Integer(c) + 1);
    return out;
}

ReversedHJ reverse_hj(const Integer& p, const Integer& q) {
    if (!(0 < q && q < p) || gcd(p, q) != 1)
        fail(ErrorKind::domain, "reverse_hj: requires 0 < q < p with gcd(p,q) = 1");
    IntSeq terms = expand_hj(Rational(p, q)).terms;
    std::reverse(terms.begin(), terms.end());
    Rational value = eval(CFExpansion{CFKind::hj, terms});
    return ReversedHJ{std::move(terms), std::move(value)};
}

} // namespace latticecf
