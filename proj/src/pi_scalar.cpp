#include "lcslab/pi_scalar.hpp"

#include <sstream>

namespace lcslab {

namespace {

// One monomial |q| * pi^e with q > 0, in the plainest exact spelling.
std::string monomial_str(const Rat& q, int e) {
    std::ostringstream os;
    mpz_class num = q.num(), den = q.den();
    if (e == 0) return q.str();
    std::string base = (e == 1 || e == -1) ? "pi" : "pi^" + std::to_string(e < 0 ? -e : e);
    if (e > 0) {
        if (num == 1 && den == 1) return base;
        if (den == 1) return num.get_str() + "*" + base;
        if (num == 1) return base + "/" + den.get_str();
        return num.get_str() + "*" + base + "/" + den.get_str();
    }
    // negative exponent: q / pi^|e|
    if (den == 1) return num.get_str() + "/" + base;
    return num.get_str() + "/(" + den.get_str() + "*" + base + ")";
}

} // namespace

std::string PiScalar::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // highest power of pi first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        os << monomial_str(c.abs(), e);
    }
    return os.str();
}

} // namespace lcslab
