#pragma once

#include <cstdio>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "io.hpp"

namespace veech {

struct ReportEntry {
    std::string anchor;
    std::string expected;  // empty for informational entries
    std::string computed;
    std::string approx;
    bool match = false;
};

struct ReportStep {
    std::string name;
    std::string status;  // "ok", "failed" or "skipped"
    std::string error;
};

struct ReportOptions {
    long budget = kDefaultBudget;
    std::optional<TriangleSpec> triangle;
};

struct VerificationReport {
    std::string profile;
    long budget = kDefaultBudget;
    std::vector<ReportEntry> entries;
    std::vector<ReportStep> steps;
    Json generators = Json::array();
    Json certificate = nullptr;

    bool passed() const {
        for (const auto& s : steps)
            if (s.status != "ok") return false;
        for (const auto& e : entries)
            if (!e.match) return false;
        return !entries.empty();
    }

    const ReportEntry* find(const std::string& anchor) const {
        for (const auto& e : entries)
            if (e.anchor == anchor) return &e;
        return nullptr;
    }

    Json to_json() const {
        Json out{{"profile", profile}, {"budget", budget}, {"passed", passed()}};
        Json st = Json::array();
        for (const auto& s : steps) {
            Json j{{"name", s.name}, {"status", s.status}};
            if (!s.error.empty()) j["error"] = s.error;
            st.push_back(j);
        }
        out["steps"] = st;
        Json en = Json::array();
        for (const auto& e : entries) {
            Json j{{"anchor", e.anchor}};
            j["expected"] = e.expected.empty() ? Json(nullptr) : Json(e.expected);
            j["computed"] = e.computed;
            j["approx"] = e.approx;
            j["match"] = e.match;
            en.push_back(j);
        }
        out["entries"] = en;
        out["generators"] = generators;
        out["certificate"] = certificate;
        return out;
    }

    std::string to_text() const {
        std::ostringstream os;
        os << "profile: " << profile << "  (budget " << budget << ")\n\n";
        for (const auto& s : steps) {
            os << "step " << s.name << ": " << s.status;
            if (!s.error.empty()) os << "  [" << s.error << "]";
            os << "\n";
        }
        os << "\n";
        for (const auto& e : entries) {
            os << (e.match ? "[ ok ] " : "[FAIL] ") << e.anchor << "\n";
            os << "       computed: " << e.computed;
            if (!e.approx.empty() && e.approx != e.computed) os << "   ~ " << e.approx;
            os << "\n";
            if (!e.expected.empty() && !e.match) os << "       expected: " << e.expected << "\n";
        }
        os << "\n" << (passed() ? "ALL MATCH" : "MISMATCH") << "\n";
        return os.str();
    }
};

namespace detail {

inline std::string approx12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}
inline std::string approx12(const FieldElem& x) { return approx12(x.approximate()); }
inline std::string approx12(const Mat2& m) {
    return "[[" + approx12(m.a) + ", " + approx12(m.b) + "], [" + approx12(m.c) + ", " + approx12(m.d) + "]]";
}
inline std::string approx12(const std::vector<FieldElem>& xs) {
    std::string out = "[";
    for (std::size_t k = 0; k < xs.size(); ++k) out += (k ? ", " : "") + approx12(xs[k]);
    return out + "]";
}

inline std::string show(const std::vector<FieldElem>& xs) {
    std::string out = "[";
    for (std::size_t k = 0; k < xs.size(); ++k) out += (k ? ", " : "") + xs[k].to_string();
    return out + "]";
}
inline std::string show(const std::vector<long>& xs) {
    std::string out = "[";
    for (std::size_t k = 0; k < xs.size(); ++k) out += (k ? ", " : "") + std::to_string(xs[k]);
    return out + "]";
}

inline std::vector<FieldElem> fields(std::initializer_list<const char*> exprs) {
    std::vector<FieldElem> out;
    for (const char* e : exprs) out.push_back(parse_field(e));
    return out;
}

inline Mat2 matrix(const char* a, const char* b, const char* c, const char* d) {
    return Mat2(parse_field(a), parse_field(b), parse_field(c), parse_field(d));
}

class ReportBuilder {
public:
    explicit ReportBuilder(VerificationReport& r) : r_(r) {}

    void field(const std::string& anchor, const FieldElem& expected, const FieldElem& computed) {
        add(anchor, expected.to_string(), computed.to_string(), approx12(computed), expected == computed);
    }
    void fields(const std::string& anchor, std::vector<FieldElem> expected, std::vector<FieldElem> computed) {
        std::sort(expected.begin(), expected.end(), std::greater<>());
        std::sort(computed.begin(), computed.end(), std::greater<>());
        add(anchor, show(expected), show(computed), approx12(computed), expected == computed);
    }
    void matrix(const std::string& anchor, const Mat2& expected, const Mat2& computed) {
        add(anchor, expected.to_string(), computed.to_string(), approx12(computed), expected == computed);
    }
    void integer(const std::string& anchor, long expected, long computed) {
        add(anchor, std::to_string(expected), std::to_string(computed), std::to_string(computed), expected == computed);
    }
    void integers(const std::string& anchor, const std::vector<long>& expected, const std::vector<long>& computed) {
        add(anchor, show(expected), show(computed), show(computed), expected == computed);
    }
    void boolean(const std::string& anchor, bool expected, bool computed) {
        const auto word = [](bool b) { return std::string(b ? "true" : "false"); };
        add(anchor, word(expected), word(computed), word(computed), expected == computed);
    }
    void angle(const std::string& anchor, const AngleMultiple& expected, const AngleMultiple& computed) {
        add(anchor, expected.to_string(), computed.to_string(), approx12(computed.approximate()), expected == computed);
    }
    void text(const std::string& anchor, const std::string& expected, const std::string& computed) {
        add(anchor, expected, computed, computed, expected == computed);
    }
    void info(const std::string& anchor, const std::string& computed, const std::string& approx) {
        add(anchor, "", computed, approx, true);
    }

    /// Runs one pipeline step; failures are recorded, never propagated.
    bool step(const std::string& name, const std::vector<std::string>& needs, const std::function<void()>& body) {
        for (const auto& dep : needs)
            if (!ok(dep)) {
                r_.steps.push_back({name, "skipped", "needs " + dep});
                return false;
            }
        try {
            body();
        } catch (const std::exception& e) {
            r_.steps.push_back({name, "failed", e.what()});
            return false;
        }
        r_.steps.push_back({name, "ok", ""});
        return true;
    }

private:
    bool ok(const std::string& name) const {
        for (const auto& s : r_.steps)
            if (s.name == name) return s.status == "ok";
        return false;
    }
    void add(const std::string& anchor, std::string expected, std::string computed, std::string approx, bool match) {
        r_.entries.push_back({anchor, std::move(expected), std::move(computed), std::move(approx), match});
    }

    VerificationReport& r_;
};

inline std::string cone_summary(const ConePointReport& cp) {
    std::string out;
    for (const auto& [angle, count] : cp.cones) {
        if (angle == AngleMultiple::pi_times(2)) continue;
        out += (out.empty() ? "" : ", ") + angle.to_string() + " x" + std::to_string(count);
    }
    return out.empty() ? "none" : out;
}

inline long regular_count(const ConePointReport& cp) {
    for (const auto& [angle, count] : cp.cones)
        if (angle == AngleMultiple::pi_times(2)) return count;
    return 0;
}

inline std::string step_value(const CertificateReport& rep, const std::string& key) {
    for (const auto& st : rep.steps)
        for (const auto& [k, v] : st.values)
            if (k == key) return v;
    return "(missing)";
}

inline Json generators_json(const GeneratorSet& gen, const MembershipOracle& oracle) {
    Json out = Json::array();
    for (const auto& [name, g] : gen.all()) {
        Json j = veech::to_json(*g);
        j = Json{{"name", name}, {"matrix", j["matrix"]}, {"provenance", j["provenance"]},
                 {"derivation", j["derivation"]}, {"verified", oracle.contains(g->m)}};
        out.push_back(j);
    }
    return out;
}

inline VerificationReport triangle_report(const VerificationReport& base, const ReportOptions& opt) {
    VerificationReport r = base;
    ReportBuilder b(r);
    const TriangleSpec t = *opt.triangle;
    r.profile = "triangle " + std::to_string(t.p1) + "," + std::to_string(t.p2) + "," + std::to_string(t.p3) + "/" +
                std::to_string(t.n);
    std::vector<long> sorted{t.p1, t.p2, t.p3};
    std::sort(sorted.begin(), sorted.end());
    const long g = std::gcd(std::gcd(t.p1, t.p2), std::gcd(t.p3, t.n));
    const bool square = g > 0 && sorted == std::vector<long>{g, g, 2 * g} && t.n == 4 * g;

    std::optional<TranslationSurface> s;
    long genus = 0;
    b.step("unfold", {}, [&] {
        const Unfolding u = unfold_triangle_detailed(t.p1, t.p2, t.p3, t.n);
        s = u.surface;
        const ConePointReport cp = cone_points(*s);
        genus = cp.genus;
        b.integer("unfold.polygons", 2 * (t.n / g), static_cast<long>(s->num_polygons()));
        b.info("unfold.genus", std::to_string(cp.genus), std::to_string(cp.genus));
        b.info("unfold.cone_points", cone_summary(cp), cone_summary(cp));
        const FieldElem tri = u.triangle.signed_area();
        b.field("unfold.area", FieldElem(static_cast<long>(s->num_polygons())) * tri, s->area());
    });

    const Direction horizontal = Direction::horizontal();
    b.step("decomposition_horizontal", {"unfold"}, [&] {
        const auto dec = decompose(*s, horizontal, opt.budget);
        const long count = static_cast<long>(dec.cylinders.size());
        if (genus == 1) b.integer("cylinders_horizontal", 1, count);
        else b.info("cylinders_horizontal", std::to_string(count), std::to_string(count));
        if (square) b.fields("moduli_horizontal", {FieldElem(1)}, dec.moduli());
        else b.info("moduli_horizontal", show(dec.moduli()), approx12(dec.moduli()));
        FieldElem total(0);
        for (const auto& c : dec.cylinders) total += c.area();
        b.field("area_conservation_horizontal", s->area(), total);
    });
    b.step("parabolic_horizontal", {"decomposition_horizontal"}, [&] {
        const Mat2 p = parabolic_for_direction(*s, horizontal, opt.budget);
        b.info("P_horizontal", p.to_string(), approx12(p));
        b.boolean("membership.P_horizontal", true, MembershipOracle(*s).contains(p));
    });
    return r;
}

} // namespace detail

/// Full reproduction run for the (1,4,7)/12 triangle, or a smaller sanity
/// profile for any other triangle given in `opt.triangle`.
inline VerificationReport run_report(const ReportOptions& opt = {}) {
    VerificationReport r;
    r.budget = opt.budget;
    if (opt.triangle) {
        const auto& t = *opt.triangle;
        const bool reference = t.p1 == 1 && t.p2 == 4 && t.p3 == 7 && t.n == 12;
        if (!reference) return detail::triangle_report(r, opt);
    }
    r.profile = "triangle 1,4,7/12";
    detail::ReportBuilder b(r);
    using detail::fields;
    using detail::matrix;

    std::optional<TranslationSurface> s;
    b.step("unfold", {}, [&] {
        s = unfold_triangle(1, 4, 7, 12);
        const ConePointReport cp = cone_points(*s);
        b.integer("unfold.polygons", 24, static_cast<long>(s->num_polygons()));
        b.integer("unfold.genus", 4, cp.genus);
        b.text("unfold.cone_points", "14*pi x1", detail::cone_summary(cp));
        b.integer("unfold.regular_vertices", 5, detail::regular_count(cp));
    });

    GeneratorSet gen;
    b.step("symmetries", {"unfold"}, [&] {
        const auto [r_ab, r_ae] = seed_reflections(*s);
        gen.R_AB = GroupElement(r_ab, Provenance::Euclidean, "R_AB");
        gen.R_AE = GroupElement(r_ae, Provenance::Euclidean, "R_AE");
        gen.minus_I = GroupElement(Mat2::minus_identity(), Provenance::Scalar, "-I");
        b.matrix("R_AB", matrix("1", "0", "0", "-1"), gen.R_AB.m);
        b.matrix("R_AE", matrix("sqrt(3)/2", "1/2", "1/2", "-sqrt(3)/2"), gen.R_AE.m);
    });

    std::optional<CylinderDecomposition> dec_b, dec_e, dec_d;
    auto record_decomposition = [&](const std::string& tag, const CylinderDecomposition& dec,
                                    const std::vector<FieldElem>& moduli, const char* gcd,
                                    const std::vector<long>& multipliers) {
        b.integer("cylinders_" + tag, 4, static_cast<long>(dec.cylinders.size()));
        b.fields("moduli_" + tag, moduli, dec.moduli());
        FieldElem total(0);
        for (const auto& c : dec.cylinders) total += c.area();
        b.field("area_conservation_" + tag, s->area(), total);
        const auto cls = commensurability_class(dec);
        if (!cls) throw Error(ErrorCode::IncommensurableModuli, "moduli of direction " + tag + " are incommensurable");
        b.field("gcd_" + tag, parse_field(gcd), cls->gcd);
        std::vector<long> sorted = cls->multipliers;
        std::sort(sorted.rbegin(), sorted.rend());
        b.integers("multipliers_" + tag, multipliers, sorted);
        return cls->gcd;
    };

    b.step("decomposition_B", {"symmetries"}, [&] {
        gen.dir_B = eigendirection(gen.R_AB.m, FieldElem(1));
        b.field("slope_B", FieldElem(0), *gen.dir_B.slope());
        dec_b = decompose(*s, gen.dir_B, opt.budget);
        const FieldElem alpha = record_decomposition("B", *dec_b, fields({"1/(5+3*sqrt(3))", "1/(5+3*sqrt(3))",
                                                                          "1/(10+6*sqrt(3))", "1/(10+6*sqrt(3))"}),
                                                     "1/(10+6*sqrt(3))", {2, 2, 1, 1});
        gen.P_B = GroupElement(parabolic_from_gcd(gen.dir_B, alpha), Provenance::Parabolic, "P_B");
        gen.R_BC = GroupElement(gen.P_B.m * gen.R_AB.m, Provenance::Composition, "P_B * R_AB");
        b.matrix("P_B", matrix("1", "10+6*sqrt(3)", "0", "1"), gen.P_B.m);
        b.matrix("R_BC", matrix("1", "-10-6*sqrt(3)", "0", "-1"), gen.R_BC.m);
    });

    b.step("decomposition_E", {"symmetries"}, [&] {
        gen.dir_E = eigendirection(gen.R_AE.m, FieldElem(1));
        b.field("slope_E", parse_field("2-sqrt(3)"), *gen.dir_E.slope());
        dec_e = decompose(*s, gen.dir_E, opt.budget);
        const FieldElem alpha = record_decomposition("E", *dec_e, fields({"3/(6+4*sqrt(3))", "3/(6+4*sqrt(3))",
                                                                          "1/(6+4*sqrt(3))", "1/(6+4*sqrt(3))"}),
                                                     "1/(6+4*sqrt(3))", {3, 3, 1, 1});
        gen.P_E = GroupElement(parabolic_from_gcd(gen.dir_E, alpha), Provenance::Parabolic, "P_E");
        gen.R_DE = GroupElement(gen.R_AE.m * gen.P_E.m, Provenance::Composition, "R_AE * P_E");
        b.matrix("P_E", matrix("(-1-2*sqrt(3))/2", "(12+7*sqrt(3))/2", "-sqrt(3)/2", "(5+2*sqrt(3))/2"), gen.P_E.m);
        b.matrix("R_DE", matrix("(-3-sqrt(3))/2", "(13+7*sqrt(3))/2", "(1-sqrt(3))/2", "(3+sqrt(3))/2"), gen.R_DE.m);
    });

    b.step("decomposition_D", {"decomposition_E"}, [&] {
        gen.dir_D = eigendirection(gen.R_DE.m, FieldElem(-1));
        b.field("slope_D", parse_field("(-4+3*sqrt(3))/11"), *gen.dir_D.slope());
        dec_d = decompose(*s, gen.dir_D, opt.budget);
        const FieldElem alpha = record_decomposition("D", *dec_d, fields({"1/(29+17*sqrt(3))", "1/(29+17*sqrt(3))",
                                                                          "1/(58+34*sqrt(3))", "1/(58+34*sqrt(3))"}),
                                                     "1/(58+34*sqrt(3))", {2, 2, 1, 1});
        gen.P_D = GroupElement(parabolic_from_gcd(gen.dir_D, alpha), Provenance::Parabolic, "P_D");
        gen.R_CD = GroupElement(gen.R_DE.m * gen.P_D.m, Provenance::Composition, "R_DE * P_D");
        b.matrix("P_D", matrix("(-11-7*sqrt(3))/2", "(115+67*sqrt(3))/2", "(-1-sqrt(3))/2", "(15+7*sqrt(3))/2"),
                 gen.P_D.m);
        b.matrix("R_CD", matrix("5+3*sqrt(3)", "-51-30*sqrt(3)", "1", "-5-3*sqrt(3)"), gen.R_CD.m);
    });

    b.step("right_angle", {"decomposition_B", "decomposition_D"}, [&] {
        const Mat2 prod = gen.R_BC.m * gen.R_CD.m;
        b.matrix("R_BC*R_CD", matrix("-5-3*sqrt(3)", "53+30*sqrt(3)", "-1", "5+3*sqrt(3)"), prod);
        b.field("trace(R_BC*R_CD)", FieldElem(0), prod.trace());
        b.boolean("right_angle(BC,CD)", true, right_angle_check(gen.R_BC, gen.R_CD));
    });

    b.step("membership", {"decomposition_B", "decomposition_D"}, [&] {
        const MembershipOracle oracle(*s);
        for (const auto& [name, g] : gen.all()) b.boolean("membership." + name, true, oracle.contains(g->m));
        b.boolean("membership.negative_control", false, oracle.contains(matrix("1", "1", "0", "1")));
        r.generators = detail::generators_json(gen, oracle);
    });

    b.step("domain", {"membership"}, [&] {
        const DomainVertices v = domain_vertices(gen);
        const std::vector<std::pair<std::string, HypPoint>> expected{
            {"A", UHPoint(0, 1)},
            {"B", BoundaryPoint::infinity()},
            {"C", UHPoint(parse_field("5+3*sqrt(3)"), 1)},
            {"D", BoundaryPoint::at(parse_field("4+3*sqrt(3)"))},
            {"E", BoundaryPoint::at(parse_field("2+sqrt(3)"))}};
        const auto named = v.named();
        for (std::size_t k = 0; k < 5; ++k)
            b.text("vertex_" + named[k].first, to_string(expected[k].second), to_string(named[k].second));
        b.boolean("incidence", true, incidence_check(gen, v));
        const HypPolygon poly = domain_polygon(gen, v);
        b.angle("angle_A", AngleMultiple::pi_times(1, 6), poly.angle(0));
        b.angle("angle_C", AngleMultiple::pi_times(1, 2), poly.angle(2));
        b.angle("polygon_area(ABCDE)", AngleMultiple::pi_times(7, 3), polygon_area(poly));
        // Doubling the pentagon across its sides: interior angle t becomes a cone angle 2t.
        const std::vector<AngleMultiple> cones{AngleMultiple(2 * poly.angle(0).k), AngleMultiple(2 * poly.angle(2).k)};
        b.angle("area(Y_G)", AngleMultiple::pi_times(14, 3), gauss_bonnet_area({0, 3, cones}));
    });

    b.step("cusps", {"membership"}, [&] {
        const CuspInvariant ib = cusp_invariants(*s, gen.dir_B, opt.budget);
        const CuspInvariant ie = cusp_invariants(*s, gen.dir_E, opt.budget);
        const CuspInvariant id = cusp_invariants(*s, gen.dir_D, opt.budget);
        b.text("modulus_ratio_B", "2", ib.modulus_ratio.get_str());
        b.text("modulus_ratio_E", "3", ie.modulus_ratio.get_str());
        b.text("modulus_ratio_D", "2", id.modulus_ratio.get_str());
        b.field("w_B", parse_field("1+sqrt(3)"), ib.width_ratios.back());
        b.field("w_D", parse_field("(1+sqrt(3))/2"), id.width_ratios.back());
        b.boolean("cusps_distinct", true, !(ib == ie) && !(ib == id) && !(ie == id));
    });

    b.step("certificate", {"unfold"}, [&] {
        const CertificateReport cert = lattice_certificate(*s, Mat2::identity(), opt.budget);
        r.certificate = to_json(cert);
        b.text("ratio_bound", "14/11", detail::step_value(cert, "ratio_bound"));
        b.text("verdict", "LATTICE_CONFIRMED", cert.verdict());
    });

    b.step("symmetric_surface", {"unfold"}, [&] {
        const Mat2 a = matrix("1", "5+3*sqrt(3)", "0", "1");
        const TranslationSurface s2 = apply_matrix(a, *s);
        const auto group = euclidean_isometry_group(s2);
        b.integer("isometry_order(S')", 8, static_cast<long>(group.size()));
        b.boolean("dihedral(S')", true, is_dihedral(group, 8));
        b.text("verdict(S')", "LATTICE_CONFIRMED", lattice_certificate(s2, a, opt.budget).verdict());
    });
    return r;
}

} // namespace veech
