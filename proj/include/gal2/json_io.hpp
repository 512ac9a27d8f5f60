#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "gal2/clifford.hpp"
#include "gal2/grassmann.hpp"
#include "gal2/matrix.hpp"
#include "gal2/motion.hpp"
#include "gal2/pimenov.hpp"
#include "gal2/plane.hpp"
#include "gal2/point.hpp"
#include "gal2/representations.hpp"

// JSON forms:
//   element      [a0, a1, a2, a3]                 basis order (1, i1, i2, i1i2)
//   matrix       nested arrays of 4-tuples
//   motion       {"a":, "b":, "theta":}
//   point        {"x":, "y":}
//   grassmann    [a0, a1, a2, a3]                 basis order (1, e1, e2, e1e2)
//   clifford     8-array
//   rep element  {"rep": <name>, "payload": <matrix or grassmann>}
//
// Rationals serialize as exact integers where possible and as "p/q" strings
// otherwise; both forms are accepted on input.

namespace gal2 {

using json = nlohmann::json;

template <Scalar S>
json scalar_to_json(const S& s) {
    if constexpr (scalar_traits<S>::is_exact) {
        constexpr auto kMax = static_cast<Rational::Int>(INT64_MAX);
        if (s.is_integer() && s.num() <= kMax && s.num() >= -kMax) {
            return static_cast<std::int64_t>(s.num());
        }
        return s.to_string();
    } else {
        return s;
    }
}

template <Scalar S>
S scalar_from_json(const json& j) {
    if constexpr (scalar_traits<S>::is_exact) {
        if (j.is_string()) return Rational::from_string(j.get<std::string>());
        if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
        if (j.is_number_float()) return Rational::from_double(j.get<double>());
        throw std::invalid_argument("expected a number or \"p/q\" string");
    } else {
        if (j.is_string()) return Rational::from_string(j.get<std::string>()).to_double();
        if (!j.is_number()) throw std::invalid_argument("expected a number");
        return j.get<double>();
    }
}

template <Scalar S>
json to_json(const D2<S>& a) {
    return json::array({scalar_to_json(a.a0), scalar_to_json(a.a1), scalar_to_json(a.a2),
                        scalar_to_json(a.a3)});
}

template <Scalar S>
D2<S> d2_from_json(const json& j) {
    if (!j.is_array() || j.size() != 4) throw std::invalid_argument("element must be a 4-array");
    return {scalar_from_json<S>(j[0]), scalar_from_json<S>(j[1]), scalar_from_json<S>(j[2]),
            scalar_from_json<S>(j[3])};
}

template <Scalar S>
json to_json(const MatD2<S>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <Scalar S>
MatD2<S> matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be a non-empty array of rows");
    const std::size_t n = j.size();
    MatD2<S> m(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!j[i].is_array() || j[i].size() != n) {
            throw std::invalid_argument("matrix rows must all have the matrix dimension");
        }
        for (std::size_t c = 0; c < n; ++c) m(i, c) = d2_from_json<S>(j[i][c]);
    }
    return m;
}

template <Scalar S>
json to_json(const GalileanMotion<S>& m) {
    return {{"a", scalar_to_json(m.a)}, {"b", scalar_to_json(m.b)}, {"theta", scalar_to_json(m.theta)}};
}

template <Scalar S>
GalileanMotion<S> motion_from_json(const json& j) {
    if (!j.is_object() || !j.contains("a") || !j.contains("b") || !j.contains("theta")) {
        throw std::invalid_argument("motion must be {\"a\":, \"b\":, \"theta\":}");
    }
    return {scalar_from_json<S>(j.at("a")), scalar_from_json<S>(j.at("b")),
            scalar_from_json<S>(j.at("theta"))};
}

template <Scalar S>
json to_json(const GalileanPoint<S>& p) {
    return {{"x", scalar_to_json(p.x)}, {"y", scalar_to_json(p.y)}};
}

template <Scalar S>
GalileanPoint<S> point_from_json(const json& j) {
    if (!j.is_object() || !j.contains("x") || !j.contains("y")) {
        throw std::invalid_argument("point must be {\"x\":, \"y\":}");
    }
    return {scalar_from_json<S>(j.at("x")), scalar_from_json<S>(j.at("y"))};
}

template <Scalar S>
json to_json(const GrassmannElement<S>& q) {
    return json::array({scalar_to_json(q.a0), scalar_to_json(q.a1), scalar_to_json(q.a2),
                        scalar_to_json(q.a3)});
}

template <Scalar S>
GrassmannElement<S> grassmann_from_json(const json& j) {
    if (!j.is_array() || j.size() != 4) throw std::invalid_argument("grassmann element must be a 4-array");
    return {scalar_from_json<S>(j[0]), scalar_from_json<S>(j[1]), scalar_from_json<S>(j[2]),
            scalar_from_json<S>(j[3])};
}

template <Scalar S>
json to_json(const Cl3Element<S>& v) {
    json out = json::array();
    for (const S& c : v.c) out.push_back(scalar_to_json(c));
    return out;
}

template <Scalar S>
Cl3Element<S> cl3_from_json(const json& j) {
    if (!j.is_array() || j.size() != 8) throw std::invalid_argument("clifford element must be an 8-array");
    Cl3Element<S> v;
    for (std::size_t i = 0; i < 8; ++i) v.c[i] = scalar_from_json<S>(j[i]);
    return v;
}

template <Scalar S>
json to_json(const RepElement<S>& e) {
    json payload = e.holds_matrix() ? to_json(e.matrix()) : to_json(e.grassmann());
    return {{"rep", rep_name(e.rep)}, {"payload", std::move(payload)}};
}

template <Scalar S>
RepElement<S> rep_element_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rep") || !j.contains("payload")) {
        throw std::invalid_argument("rep element must be {\"rep\":, \"payload\":}");
    }
    const auto rep = rep_from_name(j.at("rep").get<std::string>());
    if (!rep) throw std::invalid_argument("unknown representation '" + j.at("rep").get<std::string>() + "'");
    RepElement<S> e;
    e.rep = *rep;
    if (*rep == RepId::Grassmann) {
        e.payload = grassmann_from_json<S>(j.at("payload"));
    } else {
        e.payload = matrix_from_json<S>(j.at("payload"));
    }
    return e;
}

}  // namespace gal2
