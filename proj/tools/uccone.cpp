#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "uccone/io.hpp"

namespace {

using namespace uccone;
using io::Json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

int emit(const Json& report, bool positive) {
    std::cout << report.dump(2) << '\n';
    return positive ? kOk : kNegative;
}

ProjectionVector embed(const ProjectionVector& v, int n) {
    if (n == v.n()) return v;
    if (n < v.n()) throw std::invalid_argument("--n is smaller than the vector's dimension");
    ProjectionVector out(n);
    for (SubsetMask a : canonical_subset_order(v.n())) out[a] = v[a];
    return out;
}

int run_covers(const std::string& ground_text, std::optional<int> k_max, bool irreducible) {
    SubsetMask ground = SubsetMask::parse(ground_text, kMaxDimension);
    if (ground.empty()) throw ParseError("--ground must be nonempty");
    const int k = k_max.value_or(ground.size());
    if (k < 1) throw ParseError("--kmax must be positive");
    std::vector<UniformCover> covers = irreducible ? irreducible_covers(ground, k) : enumerate_covers(ground, k);
    Json list = Json::array();
    for (const UniformCover& c : covers) {
        Json entry = io::cover_json(c);
        entry["trivial"] = c.trivial();
        list.push_back(std::move(entry));
    }
    return emit(Json{{"ground", ground.to_string()}, {"k_max", k}, {"count", covers.size()}, {"covers", list}}, true);
}

int run_member(const std::string& path, std::optional<int> n, std::optional<int> k_max,
               const std::optional<std::string>& hrep_path) {
    ProjectionVector v = io::read_vector(io::read_file(path));
    if (n) v = embed(v, *n);
    check_dimension(v.n(), kMaxConeDimension);
    ConeSystem system = build_bt_system(v.n(), k_max.value_or(v.n()));
    if (hrep_path) io::write_file(*hrep_path, h_representation(system));
    MembershipReport report = membership(system, v);
    Json out = io::membership_json(report);
    out["generators"] = system.generators.size();
    return emit(out, report.inside);
}

int run_imply(const std::string& path, const std::optional<std::string>& body_path) {
    LinearInequality inequality = io::read_inequality(io::read_file(path));
    check_dimension(inequality.n, kMaxConeDimension);
    ConeSystem system = build_bt_system(inequality.n);
    Implication result = check_implication(system, inequality);
    if (auto* certificate = std::get_if<FarkasCertificate>(&result)) {
        return emit(Json{{"implied", true}, {"certificate", io::certificate_json(system, *certificate)}}, true);
    }
    const ProjectionVector& witness = std::get<ProjectionVector>(result);
    Json out{{"implied", false}, {"witness", io::vector_json(witness)}};
    if (body_path) {
        try {
            ViolatingBody body = violating_body(system, inequality, witness);
            io::write_file(*body_path, io::write_body(body.body));
            out["body"] = Json{{"path", *body_path},
                               {"lambda", io::format_real(body.lambda)},
                               {"violated_exactly", body.violated_exactly},
                               {"log_margin", io::format_real(body.margin, 12)}};
        } catch (const RealizationInconclusive& e) {
            out["body"] = Json{{"inconclusive", e.what()}};
        }
    }
    return emit(out, false);
}

int run_realize(const std::string& path, const std::string& epsilon, double lambda_cap, const std::string& body_path,
                const std::optional<std::string>& report_path) {
    ProjectionVector v = io::read_vector(io::read_file(path));
    check_dimension(v.n(), kMaxConeDimension);
    const Rational eps = parse_rational(epsilon);
    if (eps <= 0) throw ParseError("--epsilon must be positive");
    ConeSystem system = build_bt_system(v.n());
    if (!membership(system, v).inside) {
        return emit(Json{{"realized", false}, {"reason", "vector is not in the cone"}}, false);
    }
    try {
        RealizationResult result = find_lambda(system, v, eps, Real(lambda_cap));
        io::write_file(body_path, io::write_body(result.body));
        Json report = io::realization_json(result);
        if (report_path) {
            io::write_file(*report_path, report.dump(2));
            return emit(Json{{"realized", true}, {"lambda", report["lambda"]}, {"max_gap", report["max_gap"]}}, true);
        }
        report["realized"] = true;
        return emit(report, true);
    } catch (const RealizationInconclusive& e) {
        return emit(Json{{"realized", false}, {"reason", e.what()}}, false);
    }
}

int run_project(const std::string& path, const std::string& out_path) {
    BoxUnionBody body = io::read_body(io::read_file(path));
    LogProjection projection = log_projection_vector(body);
    Json out = io::log_projection_json(projection);
    if (!projection.all_positive()) {
        out["error"] = "some projection has zero volume; no log vector written";
        return emit(out, false);
    }
    ProjectionVector logs(body.n());
    for (SubsetMask a : canonical_subset_order(body.n())) logs[a] = to_decimal_rational(projection.logs[a]);
    io::write_file(out_path, io::write_vector(logs));
    return emit(out, true);
}

int run_witness(int n, std::optional<int> k_max, std::size_t samples, std::uint64_t seed) {
    check_dimension(n, kMaxConeDimension);
    ConeSystem system = build_bt_system(n, k_max.value_or(n));
    WitnessReport report = analyze_witness(system, closure_witness_vector(n));
    Json out = io::witness_report_json(report);
    if (samples > 0) {
        NeighbourhoodSample sample = sample_neighbourhood(report.vector, samples, seed);
        out["neighbourhood"] = Json{{"bodies", sample.bodies}, {"min_distance", io::format_real(sample.min_distance, 12)}};
    }
    return emit(out, report.in_cone);
}

int run_shearer(const std::string& family_path, const std::string& cover_path, int k) {
    SetFamily family = io::read_family(io::read_file(family_path));
    io::CoverSpec cover = io::read_cover_spec(io::read_file(cover_path));
    if (!cover.ground.subset_of(SubsetMask::full(family.n()))) throw ParseError("cover ground lies outside [n]");
    ShearerReport report = shearer_check(family, cover.parts, k);
    return emit(io::shearer_json(report), report.holds);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Uniform-cover cone of log projection-volume vectors"};
    app.require_subcommand(1, 1);
    std::uint64_t seed = 1;
    app.add_option("--seed", seed, "Seed for every randomized subcommand")->capture_default_str();

    std::string ground;
    std::optional<int> k_max;
    bool irreducible = false;
    CLI::App* covers = app.add_subcommand("covers", "Enumerate uniform covers of a ground set");
    covers->add_option("--ground", ground, "Ground set, e.g. 1,2,3")->required();
    covers->add_option("--kmax", k_max, "Largest multiplicity (default |ground|)");
    covers->add_flag("--irreducible", irreducible, "Keep only irreducible covers");

    std::string vector_path;
    std::optional<int> dimension;
    CLI::App* member = app.add_subcommand("member", "Test membership in the cone");
    member->add_option("--vector", vector_path, "Vector file")->required()->check(CLI::ExistingFile);
    member->add_option("--n", dimension, "Embed the vector into this dimension");
    member->add_option("--kmax", k_max, "Largest cover multiplicity (default n)");
    std::optional<std::string> hrep_path;
    member->add_option("--hrep", hrep_path, "Write the generator list as plain-text inequalities");

    std::string inequality_path;
    std::optional<std::string> body_out;
    CLI::App* imply = app.add_subcommand("imply", "Decide whether the cone implies a linear inequality");
    imply->add_option("--inequality", inequality_path, "Inequality file")->required()->check(CLI::ExistingFile);
    imply->add_option("--emit-body", body_out, "Write a violating body here when not implied");

    std::string epsilon = "1/4";
    double lambda_cap = 1024;
    std::string out_path;
    std::optional<std::string> report_path;
    CLI::App* realize = app.add_subcommand("realize", "Realize a multiple of a cone vector by a union of boxes");
    realize->add_option("--vector", vector_path, "Vector file")->required()->check(CLI::ExistingFile);
    realize->add_option("--epsilon", epsilon, "Interior shift (rational)")->capture_default_str();
    realize->add_option("--lambda-cap", lambda_cap, "Largest scale tried")->capture_default_str()->check(CLI::PositiveNumber);
    realize->add_option("--out", out_path, "Body file to write")->required();
    realize->add_option("--report", report_path, "Write the full realization report here");

    std::string body_path;
    CLI::App* project = app.add_subcommand("project", "Projection volumes of a body and its log vector");
    project->add_option("--body", body_path, "Body file")->required()->check(CLI::ExistingFile);
    project->add_option("--out", out_path, "Vector file to write")->required();

    int witness_n = 4;
    std::size_t samples = 0;
    CLI::App* witness = app.add_subcommand("witness", "Analyse the closure witness vector");
    witness->add_option("--n", witness_n, "Dimension (>= 4)")->required();
    witness->add_option("--kmax", k_max, "Largest cover multiplicity (default n)");
    witness->add_option("--samples", samples, "Random bodies sampled near the witness");

    std::string family_path;
    std::string cover_path;
    int k = 1;
    CLI::App* shearer = app.add_subcommand("shearer", "Check the trace product inequality for a set family");
    shearer->add_option("--family", family_path, "Family file")->required()->check(CLI::ExistingFile);
    shearer->add_option("--cover", cover_path, "Cover file")->required()->check(CLI::ExistingFile);
    shearer->add_option("--k", k, "Required coverage")->required()->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*covers) return run_covers(ground, k_max, irreducible);
        if (*member) return run_member(vector_path, dimension, k_max, hrep_path);
        if (*imply) return run_imply(inequality_path, body_out);
        if (*realize) return run_realize(vector_path, epsilon, lambda_cap, out_path, report_path);
        if (*project) return run_project(body_path, out_path);
        if (*witness) return run_witness(witness_n, k_max, samples, seed);
        if (*shearer) return run_shearer(family_path, cover_path, k);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ResourceLimit& e) {
        std::cerr << "resource limit: " << e.what() << " (lower --kmax)" << '\n';
        return kUsage;
    }
    return kUsage;
}
