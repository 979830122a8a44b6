#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace ultra {

// Exact rational arithmetic; every comparison in this library is an
// order/min/max question, so there are no tolerances anywhere.
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) {
    if (boost::multiprecision::denominator(r) == 1)
        return boost::multiprecision::numerator(r).str();
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

// Accepts "p/q" or a plain integer string.
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(boost::multiprecision::cpp_int(s));
        boost::multiprecision::cpp_int num(s.substr(0, slash));
        boost::multiprecision::cpp_int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator: " + s);
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational: " + s);
    }
}

inline Rational rational_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw std::invalid_argument("rational must be an integer or a \"p/q\" string");
}

inline nlohmann::json rational_to_json(const Rational& r) {
    if (boost::multiprecision::denominator(r) == 1 &&
        boost::multiprecision::numerator(r) >= -(1LL << 53) &&
        boost::multiprecision::numerator(r) <= (1LL << 53))
        return nlohmann::json(static_cast<long long>(boost::multiprecision::numerator(r)));
    return nlohmann::json(to_string(r));
}

}  // namespace ultra
