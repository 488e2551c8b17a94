#pragma once

#include <univoque/errors.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace univoque {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline int sign_of(const Rat& r) { return r.sign(); }

/// Largest integer <= r.
inline Int floor_rat(const Rat& r) {
    Int q = rat_num(r) / rat_den(r);
    if (r < 0 && q * rat_den(r) != rat_num(r)) --q;
    return q;
}

/// Smallest integer >= r.
inline Int ceil_rat(const Rat& r) { return -floor_rat(-r); }

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

inline std::string rat_to_string(const Rat& r) {
    if (rat_den(r) == 1) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

/// Parses "p/q", plain integers and decimal literals ("1.25" -> 5/4).
inline Rat parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw ParseError("empty rational literal");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (num.empty() || den.empty()) throw ParseError("malformed rational: " + s);
        try {
            Int n(num), d(den);
            return Rat(n, d);
        } catch (const std::exception&) {
            throw ParseError("malformed rational: " + s);
        }
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
        if (tail.empty()) tail = "0";
        bool neg = !head.empty() && head[0] == '-';
        if (!head.empty() && (head[0] == '-' || head[0] == '+')) head = head.substr(1);
        if (head.empty()) head = "0";
        for (char c : head + tail)
            if (c < '0' || c > '9') throw ParseError("malformed decimal: " + s);
        Int scale = 1;
        for (size_t i = 0; i < tail.size(); ++i) scale *= 10;
        Int v = Int(head) * scale + Int(tail);
        Rat r(v, scale);
        return neg ? Rat(-r) : r;
    }
    try {
        return Rat(Int(s));
    } catch (const std::exception&) {
        throw ParseError("malformed integer: " + s);
    }
}

} // namespace univoque
