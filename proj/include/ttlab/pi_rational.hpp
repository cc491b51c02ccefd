#ifndef TTLAB_PI_RATIONAL_HPP
#define TTLAB_PI_RATIONAL_HPP

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

#include "ttlab/rational.hpp"

namespace ttlab {

// Exact rational multiple of an integer power of pi.  The Jacobi moments and
// the orthogonal group volumes all live here.  Addition is only defined
// between values carrying the same power of pi; a zero value absorbs any
// power on the other summand.
struct PiRational {
    Rat value{0};
    int pi_power{0};

    PiRational() = default;
    PiRational(Rat v, int p) : value(std::move(v)), pi_power(p) {
        value.canonicalize();  // rational part stays in lowest terms
        if (value == 0) pi_power = 0;
    }
    explicit PiRational(long v) : value(v), pi_power(0) {}

    bool is_zero() const { return value == 0; }

    PiRational& operator+=(const PiRational& o) {
        if (o.is_zero()) return *this;
        if (is_zero()) {
            *this = o;
            return *this;
        }
        if (pi_power != o.pi_power)
            throw std::domain_error("PiRational: addition with mismatched pi powers");
        value += o.value;
        if (value == 0) pi_power = 0;
        return *this;
    }
    PiRational& operator-=(const PiRational& o) {
        PiRational neg = o;
        neg.value = -neg.value;
        return *this += neg;
    }
    PiRational& operator*=(const PiRational& o) {
        value *= o.value;
        pi_power += o.pi_power;
        if (value == 0) pi_power = 0;
        return *this;
    }
    PiRational& operator/=(const PiRational& o) {
        if (o.is_zero()) throw std::domain_error("PiRational: division by zero");
        value /= o.value;
        pi_power -= o.pi_power;
        if (value == 0) pi_power = 0;
        return *this;
    }

    friend PiRational operator+(PiRational a, const PiRational& b) { return a += b; }
    friend PiRational operator-(PiRational a, const PiRational& b) { return a -= b; }
    friend PiRational operator*(PiRational a, const PiRational& b) { return a *= b; }
    friend PiRational operator/(PiRational a, const PiRational& b) { return a /= b; }
    friend bool operator==(const PiRational& a, const PiRational& b) {
        return a.value == b.value && (a.is_zero() || a.pi_power == b.pi_power);
    }
    friend bool operator!=(const PiRational& a, const PiRational& b) { return !(a == b); }

    double to_double() const { return rat_double(value) * std::pow(M_PI, pi_power); }

    std::string str() const {
        std::ostringstream os;
        os << value.get_str();
        if (pi_power == 1)
            os << "*pi";
        else if (pi_power != 0)
            os << "*pi^" << pi_power;
        return os.str();
    }
};

}  // namespace ttlab

#endif
