#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace nlie {

using Q = mpq_class;

inline std::string to_string(const Q& q) {
    Q c = q;
    c.canonicalize();
    return c.get_str();
}

// accepts "p", "-p", "p/q"
inline Q parse_rational(const std::string& s) {
    std::string t;
    for (char ch : s)
        if (ch != ' ' && ch != '\t') t += ch;
    if (t.empty()) throw std::invalid_argument("empty rational");
    if (t[0] == '+') t.erase(0, 1);
    Q q;
    if (q.set_str(t, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    if (t.find('/') != std::string::npos && q.get_den() == 0)
        throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Q& q) { return q.get_den() == 1; }

} // namespace nlie
