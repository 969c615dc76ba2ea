#include "latticecf/integer.hpp"

#include "latticecf/errors.hpp"

#include <cctype>

namespace latticecf {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::domain: return "DomainError";
    case ErrorKind::invalid_sequence: return "InvalidSequence";
    case ErrorKind::division_by_zero: return "DivisionByZero";
    case ErrorKind::zero_vector: return "ZeroVector";
    case ErrorKind::degenerate_cone: return "DegenerateCone";
    case ErrorKind::regular_cone: return "RegularCone";
    case ErrorKind::not_contractible: return "NotContractible";
    case ErrorKind::disconnected: return "Disconnected";
    case ErrorKind::unknown_vertex: return "UnknownVertex";
    case ErrorKind::invalid_cycle: return "InvalidCycle";
    case ErrorKind::cycle_too_short: return "CycleTooShort";
    case ErrorKind::parse: return "ParseError";
    }
    return "Error";
}

Integer gcd(const Integer& a, const Integer& b) {
    Integer x = abs(a);
    Integer y = abs(b);
    while (y != 0) {
        Integer r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

Integer floor_div(const Integer& a, const Integer& b) {
    if (b == 0)
        fail(ErrorKind::division_by_zero, "floor_div by zero");
    Integer q = a / b; // truncates toward zero
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

Integer ceil_div(const Integer& a, const Integer& b) {
    return -floor_div(-a, b);
}

Integer mod(const Integer& a, const Integer& m) {
    Integer r = a % m;
    if (r < 0)
        r += m;
    return r;
}

Integer ext_gcd(const Integer& a, const Integer& b, Integer& x, Integer& y) {
    Integer old_r = a, r = b;
    Integer old_s = 1, s = 0;
    Integer old_t = 0, t = 1;
    while (r != 0) {
        Integer q = old_r / r;
        Integer tmp = old_r - q * r;
        old_r = std::move(r);
        r = std::move(tmp);
        tmp = old_s - q * s;
        old_s = std::move(s);
        s = std::move(tmp);
        tmp = old_t - q * t;
        old_t = std::move(t);
        t = std::move(tmp);
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    x = old_s;
    y = old_t;
    return old_r;
}

Integer mod_inverse(const Integer& a, const Integer& m) {
    if (m <= 0)
        fail(ErrorKind::domain, "mod_inverse: modulus must be positive");
    Integer x, y;
    Integer g = ext_gcd(mod(a, m), m, x, y);
    if (g != 1)
        fail(ErrorKind::domain, "mod_inverse: " + to_string(a) + " is not invertible modulo " + to_string(m));
    return mod(x, m);
}

Integer parse_integer(std::string_view text) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    if (i == text.size())
        fail(ErrorKind::parse, "expected an integer, got '" + std::string(text) + "'");
    Integer value = 0;
    for (; i < text.size(); ++i) {
        const char c = text[i];
        if (!std::isdigit(static_cast<unsigned char>(c)))
            fail(ErrorKind::parse, "expected an integer, got '" + std::string(text) + "'");
        value = value * 10 + (c - '0');
    }
    return negative ? Integer(-value) : value;
}

std::string to_string(const Integer& x) {
    return x.str();
}

std::string format_sequence(const IntSeq& seq) {
    std::string out = "[";
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i != 0)
            out += ',';
        out += seq[i].str();
    }
    out += ']';
    return out;
}

IntSeq parse_sequence(std::string_view text) {
    std::string cleaned;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c)))
            cleaned += c;
    }
    std::string_view body = cleaned;
    if (!body.empty() && body.front() == '[') {
        if (body.back() != ']')
            fail(ErrorKind::parse, "unbalanced bracket in sequence '" + std::string(text) + "'");
        body = body.substr(1, body.size() - 2);
    }
    IntSeq out;
    if (body.empty())
        return out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = body.find(',', start);
        out.push_back(parse_integer(body.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

} // namespace latticecf
