#pragma once

#include "dyckres/betti.hpp"
#include "dyckres/dyck.hpp"
#include "dyckres/enumeration.hpp"
#include "dyckres/errors.hpp"
#include "dyckres/partition.hpp"
#include "dyckres/series.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace dyckres {

using Json = nlohmann::ordered_json;

/// Integers go out as JSON numbers while they fit in 64 bits, otherwise as
/// decimal strings. Both forms are accepted on input.
inline Json integer_to_json(const Integer& v)
{
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

inline Integer integer_from_json(const Json& j)
{
    if (j.is_number_integer())
        return Integer(j.get<std::int64_t>());
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s.empty() || s.find_first_not_of("-0123456789") != std::string::npos)
            throw BadArgs("not an integer: " + s);
        return Integer(s);
    }
    throw BadArgs("expected an integer, got " + j.dump());
}

inline Json to_json(Box b) { return Json::array({b.x, b.y}); }

inline Box box_from_json(const Json& j)
{
    if (!j.is_array() || j.size() != 2)
        throw BadArgs("a box is [x, y], got " + j.dump());
    return {j[0].get<int>(), j[1].get<int>()};
}

/// {"paths":[[[x,y],...],...],"bullets":[[x,y],...],"lambda_of":"4,4","d":3,"b":0}
inline Json to_json(const PatternEntry& e)
{
    Json paths = Json::array();
    for (const DyckPath& p : e.pattern.paths()) {
        Json boxes_json = Json::array();
        for (Box b : p.boxes())
            boxes_json.push_back(to_json(b));
        paths.push_back(std::move(boxes_json));
    }
    Json bullets = Json::array();
    for (Box b : e.pattern.bullets())
        bullets.push_back(to_json(b));
    Json j;
    j["paths"] = std::move(paths);
    j["bullets"] = std::move(bullets);
    j["lambda_of"] = to_string(e.shape);
    j["d"] = e.size.dyck;
    j["b"] = e.size.bullet;
    return j;
}

inline PatternEntry pattern_entry_from_json(const Json& j)
{
    std::vector<DyckPath> paths;
    for (const Json& p : j.at("paths")) {
        std::vector<Box> bs;
        for (const Json& b : p)
            bs.push_back(box_from_json(b));
        paths.push_back(DyckPath::from_boxes(std::move(bs)));
    }
    std::vector<Box> bullets;
    for (const Json& b : j.at("bullets"))
        bullets.push_back(box_from_json(b));
    PatternEntry e{DyckPattern(std::move(paths), std::move(bullets)), parse_partition(j.at("lambda_of").get<std::string>()), {}};
    e.size = sizes(e.pattern);
    if (e.size.dyck != j.at("d").get<int>() || e.size.bullet != j.at("b").get<int>())
        throw BadArgs("pattern sizes disagree with its paths and bullets");
    return e;
}

/// {"5":225,"6":1132,...}
inline Json to_json(const GradedSeries& s)
{
    Json j = Json::object();
    for (const auto& [d, c] : s.terms())
        j[std::to_string(d)] = integer_to_json(c);
    return j;
}

inline GradedSeries series_from_json(const Json& j)
{
    GradedSeries s;
    for (const auto& [key, value] : j.items())
        s.add(std::stoi(key), integer_from_json(value));
    return s;
}

/// [{"alpha":"3,2","beta":"3,2","mult":1},...]
inline Json to_json(const GLCharacter& ch)
{
    Json j = Json::array();
    for (const auto& [k, c] : ch.terms())
        j.push_back({{"alpha", to_string(k.first)}, {"beta", to_string(k.second)}, {"mult", integer_to_json(c)}});
    return j;
}

inline GLCharacter character_from_json(const Json& j, int m, int n)
{
    GLCharacter ch(m, n);
    for (const Json& t : j)
        ch.add(parse_partition(t.at("alpha").get<std::string>()), parse_partition(t.at("beta").get<std::string>()), integer_from_json(t.at("mult")));
    return ch;
}

/// [{"mu":"3,2","mult":1},...]
inline Json to_json(const K0Class& cls)
{
    Json j = Json::array();
    for (const auto& [mu, c] : cls.terms())
        j.push_back({{"mu", to_string(mu)}, {"mult", integer_to_json(c)}});
    return j;
}

inline K0Class k0_from_json(const Json& j)
{
    K0Class cls;
    for (const Json& t : j)
        cls.add(parse_partition(t.at("mu").get<std::string>()), integer_from_json(t.at("mult")));
    return cls;
}

/// [{"mu":"4,4","d":3,"mult":1},...]
inline Json to_json(const BettiPolynomial& p)
{
    Json j = Json::array();
    for (const auto& [key, c] : p.terms())
        j.push_back({{"mu", to_string(key.first)}, {"d", key.second}, {"mult", integer_to_json(c)}});
    return j;
}

inline BettiPolynomial betti_polynomial_from_json(const Json& j)
{
    BettiPolynomial p;
    for (const Json& t : j)
        p.add(parse_partition(t.at("mu").get<std::string>()), t.at("d").get<int>(), integer_from_json(t.at("mult")));
    return p;
}

/// {"lambda":"3,2","m":3,"n":3,"conjectural":true,"columns":9,"rows":{"5":[225,...],...}}
inline Json to_json(const BettiTable& t)
{
    Json rows = Json::object();
    for (int r = t.first_row; r <= t.last_row; ++r) {
        Json row = Json::array();
        for (const Integer& v : t.row(r))
            row.push_back(integer_to_json(v));
        rows[std::to_string(r)] = std::move(row);
    }
    Json j;
    j["lambda"] = to_string(t.lambda);
    j["m"] = t.m;
    j["n"] = t.n;
    j["conjectural"] = t.conjectural;
    j["columns"] = t.columns;
    j["rows"] = std::move(rows);
    return j;
}

inline BettiTable betti_table_from_json(const Json& j)
{
    BettiTable t;
    t.lambda = parse_partition(j.at("lambda").get<std::string>());
    t.m = j.at("m").get<int>();
    t.n = j.at("n").get<int>();
    t.conjectural = j.at("conjectural").get<bool>();
    t.columns = j.at("columns").get<int>();
    bool first = true;
    for (const auto& [key, row] : j.at("rows").items()) {
        const int r = std::stoi(key);
        t.first_row = first ? r : std::min(t.first_row, r);
        t.last_row = first ? r : std::max(t.last_row, r);
        first = false;
        for (std::size_t i = 0; i < row.size(); ++i)
            t.add(r, static_cast<int>(i), integer_from_json(row[i]));
    }
    return t;
}

} // namespace dyckres
