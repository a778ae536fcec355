#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "hyperbolic.hpp"
#include "parse.hpp"

namespace veech {

using Json = nlohmann::ordered_json;

namespace detail {

[[noreturn]] inline void schema_error(const std::string& path, const std::string& what) {
    throw Error(ErrorCode::SchemaError, path + ": " + what);
}

inline long json_index(const Json& j, const std::string& path) {
    if (!j.is_number_integer()) schema_error(path, "expected a non-negative integer, got " + j.dump());
    const long v = j.get<long>();
    if (v < 0) schema_error(path, "expected a non-negative integer, got " + j.dump());
    return v;
}

} // namespace detail

// ---- field elements -------------------------------------------------------

inline Json to_json(const FieldElem& x) { return x.to_string(); }

/// Component form {"a": "p/q", "b": "r/s"}.
inline Json to_json_components(const FieldElem& x) { return Json{{"a", x.a().get_str()}, {"b", x.b().get_str()}}; }

/// Accepts an integer, an exact expression string, or {"a": .., "b": ..}.
inline FieldElem field_from_json(const Json& j, int d = kDefaultRadicand, const std::string& path = "$") {
    auto rational_part = [&](const Json& part, const std::string& where) -> Rational {
        const FieldElem v = field_from_json(part, d, where);
        if (!v.is_rational()) detail::schema_error(where, "component must be rational");
        return v.a();
    };
    try {
        if (j.is_number_integer()) return FieldElem(Rational(Integer(j.dump())), Rational(0), d);
        if (j.is_number_float())
            throw Error(ErrorCode::RequiresExactRational,
                        "decimal literal " + j.dump() + " is not exact; write a fraction string such as \"1/2\"");
        if (j.is_string()) return parse_field(j.get<std::string>(), d);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::SchemaError) throw;
        throw Error(e.code(), path + ": " + e.message());
    }
    if (j.is_object()) {
        for (const auto& [key, _] : j.items())
            if (key != "a" && key != "b") detail::schema_error(path + "." + key, "unknown key");
        if (!j.contains("a")) detail::schema_error(path, "missing key \"a\"");
        const Rational a = rational_part(j.at("a"), path + ".a");
        const Rational b = j.contains("b") ? rational_part(j.at("b"), path + ".b") : Rational(0);
        return FieldElem(a, b, d);
    }
    detail::schema_error(path, "expected a number, an exact expression string or {\"a\", \"b\"}, got " + j.dump());
}

// ---- vectors and matrices ---------------------------------------------------

inline Json to_json(const Vec2& v) { return Json::array({to_json(v.x), to_json(v.y)}); }

inline Vec2 vec2_from_json(const Json& j, int d = kDefaultRadicand, const std::string& path = "$") {
    if (!j.is_array() || j.size() != 2) detail::schema_error(path, "expected [x, y]");
    return Vec2{field_from_json(j[0], d, path + "[0]"), field_from_json(j[1], d, path + "[1]")};
}

inline Json to_json(const Mat2& m) {
    return Json::array({Json::array({to_json(m.a), to_json(m.b)}), Json::array({to_json(m.c), to_json(m.d)})});
}

/// [[a, b], [c, d]]; entries may mix integers and expression strings.
inline Mat2 mat2_from_json(const Json& j, int d = kDefaultRadicand, const std::string& path = "$") {
    if (!j.is_array() || j.size() != 2) detail::schema_error(path, "expected a 2x2 matrix [[a, b], [c, d]]");
    for (std::size_t r = 0; r < 2; ++r)
        if (!j[r].is_array() || j[r].size() != 2)
            detail::schema_error(path + "[" + std::to_string(r) + "]", "expected a row of two entries");
    auto at = [&](std::size_t r, std::size_t c) {
        return field_from_json(j[r][c], d, path + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
    };
    return Mat2(at(0, 0), at(0, 1), at(1, 0), at(1, 1));
}

inline Mat2 parse_mat2_json(const std::string& text, int d = kDefaultRadicand) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::ParseError, std::string("malformed JSON: ") + e.what());
    }
    return mat2_from_json(j, d);
}

// ---- surfaces -------------------------------------------------------------

inline Json to_json(const TranslationSurface& s) {
    Json polys = Json::array();
    for (const auto& p : s.polygons()) {
        Json verts = Json::array();
        for (const auto& v : p.vertices) verts.push_back(to_json(v));
        polys.push_back(verts);
    }
    Json glue = Json::array();
    for (const auto& [e, f] : s.gluings())
        glue.push_back(Json::array({Json::array({e.polygon, e.edge}), Json::array({f.polygon, f.edge})}));
    return Json{{"field_d", s.radicand()}, {"polygons", polys}, {"gluings", glue}};
}

inline TranslationSurface surface_from_json(const Json& j) {
    using detail::schema_error;
    if (!j.is_object()) schema_error("$", "expected an object with keys field_d, polygons, gluings");
    for (const auto& [key, _] : j.items())
        if (key != "field_d" && key != "polygons" && key != "gluings") schema_error("$." + key, "unknown key");
    for (const char* key : {"field_d", "polygons", "gluings"})
        if (!j.contains(key)) schema_error("$", std::string("missing key \"") + key + "\"");

    const Json& jd = j.at("field_d");
    if (!jd.is_number_integer()) schema_error("$.field_d", "expected an integer radicand");
    const long d = jd.get<long>();
    if (d < 2 || d > 1'000'000 || !is_square_free(static_cast<int>(d)))
        schema_error("$.field_d", "radicand must be a square-free integer >= 2");
    const int radicand = static_cast<int>(d);

    const Json& jp = j.at("polygons");
    if (!jp.is_array()) schema_error("$.polygons", "expected an array of polygons");
    if (jp.empty()) schema_error("$.polygons", "a surface needs at least one polygon");
    std::vector<PlanarPolygon> polys;
    for (std::size_t p = 0; p < jp.size(); ++p) {
        const std::string where = "$.polygons[" + std::to_string(p) + "]";
        if (!jp[p].is_array() || jp[p].size() < 3) schema_error(where, "expected an array of at least 3 vertices");
        PlanarPolygon poly;
        for (std::size_t v = 0; v < jp[p].size(); ++v)
            poly.vertices.push_back(vec2_from_json(jp[p][v], radicand, where + "[" + std::to_string(v) + "]"));
        polys.push_back(std::move(poly));
    }

    const Json& jg = j.at("gluings");
    if (!jg.is_array()) schema_error("$.gluings", "expected an array of edge pairs");
    std::vector<std::pair<EdgeRef, EdgeRef>> glue;
    for (std::size_t g = 0; g < jg.size(); ++g) {
        const std::string where = "$.gluings[" + std::to_string(g) + "]";
        if (!jg[g].is_array() || jg[g].size() != 2) schema_error(where, "expected [[p, e], [q, f]]");
        EdgeRef ends[2];
        for (std::size_t k = 0; k < 2; ++k) {
            const std::string at = where + "[" + std::to_string(k) + "]";
            const Json& ref = jg[g][k];
            if (!ref.is_array() || ref.size() != 2) schema_error(at, "expected [polygon, edge]");
            const auto p = static_cast<std::size_t>(detail::json_index(ref[0], at + "[0]"));
            if (p >= polys.size()) schema_error(at + "[0]", "polygon index " + std::to_string(p) + " out of range");
            const auto e = static_cast<std::size_t>(detail::json_index(ref[1], at + "[1]"));
            if (e >= polys[p].size()) schema_error(at + "[1]", "edge index " + std::to_string(e) + " out of range");
            ends[k] = EdgeRef{p, e};
        }
        glue.emplace_back(ends[0], ends[1]);
    }
    return TranslationSurface(radicand, std::move(polys), glue);
}

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::ParseError, path + ": malformed JSON: " + e.what());
    }
}

inline TranslationSurface load_surface(const std::string& path) { return surface_from_json(read_json_file(path)); }

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
    out << text;
}

inline void save_surface(const std::string& path, const TranslationSurface& s) {
    write_text_file(path, to_json(s).dump(2) + "\n");
}

// ---- analysis results -----------------------------------------------------

inline Json to_json(const CylinderDecomposition& dec) {
    Json cyls = Json::array();
    for (const auto& c : dec.cylinders)
        cyls.push_back(Json{{"circumference", to_json(c.circumference)},
                            {"height", to_json(c.height)},
                            {"modulus", to_json(c.modulus)},
                            {"boundary_saddle_connections", c.boundary_saddle_connections}});
    Json out{{"direction", to_json(dec.direction.vector())}, {"cylinders", cyls}};
    if (auto cls = commensurability_class(dec)) {
        out["gcd"] = to_json(cls->gcd);
        out["multipliers"] = cls->multipliers;
    } else {
        out["gcd"] = nullptr;
        out["multipliers"] = nullptr;
    }
    return out;
}

inline Json to_json(const GroupElement& g) {
    return Json{{"matrix", to_json(g.m)}, {"provenance", to_string(g.provenance)}, {"derivation", g.derivation}};
}

inline Json to_json(const CertificateReport& rep) {
    Json steps = Json::array();
    for (const auto& st : rep.steps) {
        Json values = Json::object();
        for (const auto& [k, v] : st.values) values[k] = v;
        Json step{{"name", st.name}, {"anchor", st.anchor}, {"values", values}, {"passed", st.passed}};
        if (!st.detail.empty()) step["detail"] = st.detail;
        steps.push_back(step);
    }
    Json out{{"verdict", rep.verdict()}, {"steps", steps}};
    if (!rep.confirmed) out["failing_step"] = rep.failing_step;
    return out;
}

} // namespace veech
