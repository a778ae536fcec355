#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <veech/report.hpp>
#include <veech/svg.hpp>

namespace {

using namespace veech;

constexpr int kPass = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

long default_budget() {
    const char* env = std::getenv("VEECH_KIT_BUDGET");
    if (!env || !*env) return kDefaultBudget;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v <= 0) throw UsageError("VEECH_KIT_BUDGET must be a positive integer, got \"" + std::string(env) + "\"");
    return v;
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) std::cout << text;
    else write_text_file(path, text);
}

Mat2 read_matrix(const std::string& arg) {
    if (std::filesystem::is_regular_file(arg)) return mat2_from_json(read_json_file(arg));
    if (!arg.empty() && arg.front() == '[') return parse_mat2_json(arg);
    return parse_mat2(arg);
}

bool is_input_error(ErrorCode c) {
    switch (c) {
    case ErrorCode::ParseError:
    case ErrorCode::RequiresExactRational:
    case ErrorCode::SchemaError:
    case ErrorCode::ZeroDirection:
    case ErrorCode::InvalidTriangle:
    case ErrorCode::InvalidSurface:
    case ErrorCode::UnsupportedField:
        return true;
    default:
        return false;
    }
}

struct Options {
    std::string surface, output, direction, matrix, angles, frame, triangle;
    long denominator = 0;
    long budget = 0;
    bool domain = false;
};

int cmd_unfold(const Options& o) {
    auto parts = detail::split(o.angles, ',');
    if (parts.size() != 3) throw UsageError("--angles expects p1,p2,p3");
    const TriangleSpec t = parse_triangle(o.angles + "/" + std::to_string(o.denominator));
    const TranslationSurface s = unfold_triangle(t.p1, t.p2, t.p3, t.n);
    emit(to_json(s).dump(2) + "\n", o.output);
    return kPass;
}

int cmd_decompose(const Options& o) {
    const TranslationSurface s = load_surface(o.surface);
    const Direction dir(parse_vec2(o.direction, s.radicand()));
    emit(to_json(decompose(s, dir, o.budget)).dump(2) + "\n", o.output);
    return kPass;
}

int cmd_parabolic(const Options& o) {
    const TranslationSurface s = load_surface(o.surface);
    const Direction dir(parse_vec2(o.direction, s.radicand()));
    const Mat2 p = parabolic_for_direction(s, dir, o.budget);
    const auto cls = commensurability_class(decompose(s, dir, o.budget));
    Json out{{"direction", to_json(dir.vector())}, {"matrix", to_json(p)}, {"gcd", to_json(cls->gcd)},
             {"multipliers", cls->multipliers}, {"verified", true}};
    emit(out.dump(2) + "\n", o.output);
    return kPass;
}

int cmd_verify(const Options& o) {
    const TranslationSurface s = load_surface(o.surface);
    const Mat2 m = read_matrix(o.matrix);
    const bool member = MembershipOracle(s).contains(m);
    emit(Json{{"matrix", to_json(m)}, {"member", member}}.dump(2) + "\n", o.output);
    return member ? kPass : kFailure;
}

TranslationSurface surface_or_default(const Options& o) {
    return o.surface.empty() ? unfold_triangle(1, 4, 7, 12) : load_surface(o.surface);
}

Mat2 frame_of(const Options& o) { return o.frame.empty() ? Mat2::identity() : read_matrix(o.frame); }

int cmd_domain_check(const Options& o) {
    const TranslationSurface s = surface_or_default(o);
    const GeneratorSet gen = build_generators(s, frame_of(o), o.budget);
    const DomainVertices v = domain_vertices(gen);
    const bool incident = incidence_check(gen, v);
    const HypPolygon poly = domain_polygon(gen, v);
    Json verts = Json::object(), angles = Json::object(), sides = Json::object();
    const auto named = v.named();
    for (std::size_t k = 0; k < named.size(); ++k) {
        verts[named[k].first] = to_string(named[k].second);
        angles[named[k].first] = poly.angle(k).to_string();
    }
    for (const auto& [name, r] : gen.reflections()) sides[name] = fixed_geodesic(*r).to_string();
    Json out{{"vertices", verts}, {"sides", sides}, {"angles", angles}, {"incidence", incident},
             {"polygon_area", polygon_area(poly).to_string()}};
    emit(out.dump(2) + "\n", o.output);
    return incident ? kPass : kFailure;
}

int cmd_certificate(const Options& o) {
    const TranslationSurface s = load_surface(o.surface);
    const CertificateReport rep = lattice_certificate(s, frame_of(o), o.budget);
    emit(to_json(rep).dump(2) + "\n", o.output);
    return rep.confirmed ? kPass : kFailure;
}

int cmd_render(const Options& o) {
    if (o.domain) {
        const TranslationSurface s = surface_or_default(o);
        const GeneratorSet gen = build_generators(s, frame_of(o), o.budget);
        const DomainVertices v = domain_vertices(gen);
        emit(render_domain_svg(domain_polygon(gen, v), {"A", "B", "C", "D", "E"}), o.output);
        return kPass;
    }
    if (o.surface.empty()) throw UsageError("render needs -s FILE or --domain");
    emit(render_surface_svg(load_surface(o.surface)), o.output);
    return kPass;
}

int cmd_report(const Options& o) {
    ReportOptions opt;
    opt.budget = o.budget;
    if (!o.triangle.empty()) opt.triangle = parse_triangle(o.triangle);
    const VerificationReport rep = run_report(opt);
    if (o.output.empty()) {
        std::cout << rep.to_text();
    } else {
        std::filesystem::create_directories(o.output);
        write_text_file((std::filesystem::path(o.output) / "report.json").string(), rep.to_json().dump(2) + "\n");
        write_text_file((std::filesystem::path(o.output) / "report.txt").string(), rep.to_text());
        std::cout << (rep.passed() ? "ALL MATCH" : "MISMATCH") << ": wrote report.json and report.txt to " << o.output
                  << "\n";
    }
    return rep.passed() ? kPass : kFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"veech-kit: exact translation surfaces of rational triangles and their Veech groups"};
    app.require_subcommand(1);
    Options o;
    long budget = -1;

    auto add_budget = [&](CLI::App* c) {
        c->add_option("--budget", budget, "maximum edge crossings per separatrix trace")->check(CLI::PositiveNumber);
    };
    auto add_output = [&](CLI::App* c, const char* what) { c->add_option("-o,--output", o.output, what); };

    auto* unfold = app.add_subcommand("unfold", "unfold a rational triangle into a translation surface");
    unfold->add_option("--angles", o.angles, "angle numerators p1,p2,p3")->required();
    unfold->add_option("--denominator", o.denominator, "common denominator n (angles are p_i*pi/n)")
        ->required()
        ->check(CLI::PositiveNumber);
    add_output(unfold, "surface JSON file (stdout if omitted)");

    auto* dec = app.add_subcommand("decompose", "cylinder decomposition in a direction");
    dec->add_option("-s,--surface", o.surface, "surface JSON file")->required();
    dec->add_option("--direction", o.direction, "direction \"x,y\" with exact entries")->required();
    add_budget(dec);
    add_output(dec, "JSON output file (stdout if omitted)");

    auto* par = app.add_subcommand("parabolic", "generating parabolic of a periodic direction");
    par->add_option("-s,--surface", o.surface, "surface JSON file")->required();
    par->add_option("--direction", o.direction, "direction \"x,y\" with exact entries")->required();
    add_budget(par);
    add_output(par, "JSON output file (stdout if omitted)");

    auto* ver = app.add_subcommand("verify", "test a matrix for membership in the Veech group");
    ver->add_option("-s,--surface", o.surface, "surface JSON file")->required();
    ver->add_option("--matrix", o.matrix, "matrix file, JSON [[a,b],[c,d]] or \"a,b,c,d\"")->required();
    add_output(ver, "JSON output file (stdout if omitted)");

    auto* dom = app.add_subcommand("domain-check", "fundamental pentagon incidence and angles");
    dom->add_option("-s,--surface", o.surface, "surface JSON file (default: the 1,4,7/12 unfolding)");
    dom->add_option("--frame", o.frame, "matrix taking the reference surface to the input");
    add_budget(dom);
    add_output(dom, "JSON output file (stdout if omitted)");

    auto* cert = app.add_subcommand("certificate", "lattice certificate by the index argument");
    cert->add_option("-s,--surface", o.surface, "surface JSON file")->required();
    cert->add_option("--frame", o.frame, "matrix taking the reference surface to the input");
    add_budget(cert);
    add_output(cert, "JSON output file (stdout if omitted)");

    auto* render = app.add_subcommand("render", "SVG of a surface or of the fundamental domain");
    render->add_option("-s,--surface", o.surface, "surface JSON file");
    render->add_flag("--domain", o.domain, "draw the fundamental pentagon instead of the surface");
    render->add_option("--frame", o.frame, "matrix taking the reference surface to the input (with --domain)");
    add_budget(render);
    add_output(render, "SVG output file (stdout if omitted)");

    auto* rep = app.add_subcommand("report", "recompute every reference quantity and compare");
    rep->add_option("--triangle", o.triangle, "other triangle \"p1,p2,p3/n\" for a sanity profile");
    add_budget(rep);
    add_output(rep, "directory for report.json and report.txt (text to stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        o.budget = budget > 0 ? budget : default_budget();
        CLI::App* cmd = app.get_subcommands().front();
        const std::string name = cmd->get_name();
        if (name == "unfold") return cmd_unfold(o);
        if (name == "decompose") return cmd_decompose(o);
        if (name == "parabolic") return cmd_parabolic(o);
        if (name == "verify") return cmd_verify(o);
        if (name == "domain-check") return cmd_domain_check(o);
        if (name == "certificate") return cmd_certificate(o);
        if (name == "render") return cmd_render(o);
        return cmd_report(o);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return is_input_error(e.code()) ? kUsage : kFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailure;
    }
}
