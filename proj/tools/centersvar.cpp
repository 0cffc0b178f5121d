#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "io.hpp"

#include "centersvar/error.hpp"

using namespace centersvar;
using io::json;

namespace {

enum Exit { Ok = 0, BadInput = 2, Undecided = 3, Broken = 4 };

int exit_code(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidInput:
        case ErrorCode::CenterHit:
        case ErrorCode::DegenerateInput:
        case ErrorCode::InadmissibleCenter:
        case ErrorCode::DegenerateCurve:
        case ErrorCode::NoRationalImage: return BadInput;
        case ErrorCode::NotFinite:
        case ErrorCode::AmbiguousMatch:
        case ErrorCode::GenerationFailed:
        case ErrorCode::Inconclusive: return Undecided;
        case ErrorCode::Inconsistent: return Broken;
    }
    return Broken;
}

struct RunConfig {
    std::string command;
    std::string input;
    std::string second;
    std::string center;
    std::string kind;
    std::string out;
    std::string format = "json";
    double tol = 1e-9;
    std::optional<std::uint64_t> seed;
    int bound = 10;
    std::size_t n = 7;
    bool associated = false;

    std::uint64_t resolved_seed() const {
        if (seed) return *seed;
        if (const char* env = std::getenv("CENTERSVAR_SEED")) {
            try {
                return std::stoull(env);
            } catch (const std::exception&) {
                fail(ErrorCode::InvalidInput, "CENTERSVAR_SEED is not an unsigned integer");
            }
        }
        return 0;
    }

    json to_json() const {
        json j = {{"command", command}, {"tol", io::format_double(tol)}, {"seed", resolved_seed()}};
        if (!input.empty()) j["input"] = input;
        if (!second.empty()) j["second"] = second;
        if (!center.empty()) j["center"] = center;
        if (!kind.empty()) j["kind"] = kind;
        return j;
    }
};

Configuration load(const std::string& path, std::string_view role) {
    if (path.empty()) fail(ErrorCode::InvalidInput, "missing input file");
    return io::configuration_from_json(io::read_json(path), role);
}

// Permutation that moves a frame of p (d + 2 points in general position) to the front.
std::optional<std::vector<std::size_t>> frame_order(const Configuration& p) {
    const std::size_t d = p.ambient_dim(), n = p.size(), need = d + 2;
    if (n < need) return std::nullopt;
    std::vector<std::size_t> pick;
    std::optional<std::vector<std::size_t>> found;
    auto general = [&](const std::vector<std::size_t>& idx) {
        std::vector<std::size_t> sub(d + 1);
        for (std::size_t skip = 0; skip < idx.size(); ++skip) {
            sub.clear();
            for (std::size_t k = 0; k < idx.size(); ++k)
                if (k != skip) sub.push_back(idx[k]);
            std::vector<ProjectivePoint> pts;
            for (auto i : sub) pts.push_back(p[i]);
            if (span_rank(pts) != d + 1) return false;
        }
        return true;
    };
    std::function<void(std::size_t)> search = [&](std::size_t start) {
        if (found) return;
        if (pick.size() == need) {
            if (general(pick)) found = pick;
            return;
        }
        for (std::size_t i = start; i < n && !found; ++i) {
            pick.push_back(i);
            search(i + 1);
            pick.pop_back();
        }
    };
    search(0);
    if (!found) return std::nullopt;
    std::vector<std::size_t> order = *found;
    for (std::size_t i = 0; i < n; ++i)
        if (std::find(order.begin(), order.end(), i) == order.end()) order.push_back(i);
    return order;
}

struct Verdict {
    bool equivalent = false;
    std::string certainty;
    std::string method;
    std::optional<RMatrix> witness;
};

std::optional<Verdict> by_homography(const Configuration& p, const Configuration& q) {
    const auto order = frame_order(p);
    if (!order) return std::nullopt;
    const Configuration ps = p.subset(*order), qs = q.subset(*order);
    Verdict v{false, "ExactWitness", "homography", std::nullopt};
    if (auto h = homography_fit(ps, qs)) {
        v.equivalent = true;
        v.witness = std::move(h);
    }
    return v;
}

InvariantVector invariants_of(const Configuration& p) {
    switch (p.size()) {
        case 5: return g5(p);
        case 6: return t6(p);
        case 7: return fano15(p);
        default: fail(ErrorCode::InvalidInput, "invariants are defined for 5, 6 or 7 points");
    }
}

std::optional<Verdict> by_invariants(const Configuration& p, const Configuration& q) {
    if (p.ambient_dim() != 2 || p.size() < 5 || p.size() > 7) return std::nullopt;
    const InvariantVector u = invariants_of(p), w = invariants_of(q);
    const bool same = equivalent(u, w);
    const bool stable = stability_class(p) == StabilityClass::Stable && stability_class(q) == StabilityClass::Stable;
    if (!same && !u.non_semistable() && !w.non_semistable()) return Verdict{false, "InvariantSeparation", "invariants", std::nullopt};
    if (same && stable) return Verdict{true, "InvariantSeparation", "invariants", std::nullopt};
    return std::nullopt;
}

Verdict decide(const Configuration& p, const Configuration& q) {
    if (auto v = by_homography(p, q)) return *v;
    if (auto v = by_invariants(p, q)) return *v;
    fail(ErrorCode::Inconclusive, "no frame in general position and the invariants do not decide equivalence");
}

json cmd_project(const RunConfig& cfg) {
    const Configuration world = load(cfg.input, "x");
    if (cfg.center.empty()) fail(ErrorCode::InvalidInput, "--center is required");
    const ProjectivePoint a = io::parse_center(cfg.center);
    if (a.size() != world.ambient_dim() + 1) fail(ErrorCode::InvalidInput, "center has the wrong number of coordinates");
    for (const auto& p : world.points())
        if (p == a) fail(ErrorCode::InadmissibleCenter, "center coincides with the point " + p.to_string());
    return io::to_json(project(world, a));
}

json cmd_invariants(const RunConfig& cfg) {
    const Configuration p = load(cfg.input, "x");
    if (p.ambient_dim() != 2) fail(ErrorCode::InvalidInput, "invariants need points of P^2");
    InvariantKind kind = p.size() == 5 ? InvariantKind::N5 : p.size() == 6 ? InvariantKind::N6 : InvariantKind::N7;
    if (!cfg.kind.empty()) kind = parse_invariant_kind(cfg.kind);
    const std::size_t expected = kind == InvariantKind::N5 ? 5 : kind == InvariantKind::N6 ? 6 : 7;
    if (p.size() != expected)
        fail(ErrorCode::InvalidInput, "kind " + std::string(to_string(kind)) + " needs " + std::to_string(expected) + " points");
    json out = io::to_json(invariants_of(p));
    if (kind == InvariantKind::N7) out["morley"] = io::to_json(morley(p));
    return out;
}

json cmd_equiv(const RunConfig& cfg) {
    const Configuration p = load(cfg.input, "x");
    const Configuration q = load(cfg.second.empty() ? cfg.input : cfg.second, cfg.second.empty() ? "y" : "x");
    if (p.size() != q.size() || p.ambient_dim() != q.ambient_dim())
        fail(ErrorCode::InvalidInput, "configurations differ in size or dimension");
    const Verdict v = decide(p, q);
    json out = {{"equivalent", v.equivalent}, {"certainty", v.certainty}, {"method", v.method}};
    out["witness"] = v.witness ? io::to_json(*v.witness) : json(nullptr);
    if (cfg.associated) {
        if (p.size() != 6 || p.ambient_dim() != 2) fail(ErrorCode::InvalidInput, "--associated applies to 6 points of P^2");
        const Verdict g = decide(gale_transform(p), q);
        out["associated"] = {{"equivalent", g.equivalent}, {"certainty", g.certainty}, {"method", g.method}};
    }
    return out;
}

json cmd_centers(const RunConfig& cfg) {
    const Configuration x = load(cfg.input, "x");
    const Configuration y = load(cfg.second.empty() ? cfg.input : cfg.second, "y");
    std::optional<ProjectivePoint> a;
    if (!cfg.center.empty()) a = io::parse_center(cfg.center);
    return io::to_json(centers_variety(x, y, a, {.tol = cfg.tol, .seed = cfg.resolved_seed()}));
}

json cmd_generate(const RunConfig& cfg) {
    const std::uint64_t seed = cfg.resolved_seed();
    if (!cfg.kind.empty()) {
        const DegenerateKind kind = parse_degenerate_kind(cfg.kind);
        const DegenerateInstance inst = generate_degenerate(kind, cfg.n, seed);
        json out = io::to_json(inst.points);
        out["kind"] = to_string(kind);
        out["center"] = inst.center ? io::to_json(*inst.center) : json(nullptr);
        return out;
    }
    json out = io::to_json(generate_reconstruction(cfg.n, seed, cfg.bound));
    out["n"] = cfg.n;
    out["bound"] = cfg.bound;
    return out;
}

json cmd_classify(const RunConfig& cfg) {
    const Configuration x = load(cfg.input, "x");
    const Configuration y = cfg.second.empty() ? x : load(cfg.second, "y");
    const ProjectivePoint a = io::parse_center(cfg.center.empty() ? cfg.input : cfg.center);
    json comps = json::array();
    for (const auto& c : predicted_components_n5(x, y, a)) comps.push_back(io::to_json(c));
    return {{"degeneration", to_string(classify_degeneration_n5(x, a))}, {"components", comps}};
}

void emit(const RunConfig& cfg, const json& doc) {
    const std::string text = cfg.format == "text" ? io::to_text(doc) : doc.dump(2) + "\n";
    if (cfg.out.empty())
        std::cout << text;
    else
        io::write_atomic(cfg.out, text);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Centers of projection for two views of the same points"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--tol", cfg.tol, "Residual tolerance")->check(CLI::PositiveNumber);
        sub->add_option("--seed", cfg.seed, "Random seed (falls back to CENTERSVAR_SEED, then 0)");
        sub->add_option("-o,--out", cfg.out, "Output file (stdout when omitted)");
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    };

    auto* project_cmd = app.add_subcommand("project", "Project points of P^3 from a center");
    project_cmd->add_option("-i,--input", cfg.input, "Point set in P^3")->required();
    project_cmd->add_option("--center", cfg.center, "Center: inline a0,a1,a2,a3 or a JSON file");
    common(project_cmd);

    auto* inv_cmd = app.add_subcommand("invariants", "Invariant vector of a plane configuration");
    inv_cmd->add_option("-i,--input", cfg.input, "Point set in P^2")->required();
    inv_cmd->add_option("--kind", cfg.kind, "N5, N6 or N7 (default from the point count)");
    common(inv_cmd);

    auto* equiv_cmd = app.add_subcommand("equiv", "Decide projective equivalence of two plane configurations");
    equiv_cmd->add_option("-i,--input", cfg.input, "First point set")->required();
    equiv_cmd->add_option("-j,--second", cfg.second, "Second point set");
    equiv_cmd->add_flag("--associated", cfg.associated, "Also compare the association of the first set with the second (n = 6)");
    common(equiv_cmd);

    auto* centers_cmd = app.add_subcommand("centers", "Centers variety of two configurations in P^3");
    centers_cmd->add_option("-i,--input", cfg.input, "X (or an instance file)")->required();
    centers_cmd->add_option("-j,--second", cfg.second, "Y (defaults to the \"y\" set of the input)");
    centers_cmd->add_option("--center", cfg.center, "Given center a (required for n = 5)");
    common(centers_cmd);

    auto* gen_cmd = app.add_subcommand("generate", "Generate an oracle reconstruction or a degenerate instance");
    gen_cmd->add_option("--n", cfg.n, "Number of points")->check(CLI::Range(0, 64));
    gen_cmd->add_option("--bound", cfg.bound, "Coordinate bound (at least 10)");
    gen_cmd->add_option("--kind", cfg.kind, "Degenerate kind instead of a reconstruction");
    common(gen_cmd);

    auto* classify_cmd = app.add_subcommand("classify", "Degeneration type of the b-locus for 5 points and a center");
    classify_cmd->add_option("-i,--input", cfg.input, "X (5 points of P^3)")->required();
    classify_cmd->add_option("-j,--second", cfg.second, "Y (defaults to X)");
    classify_cmd->add_option("--center", cfg.center, "Center a (defaults to the \"center\" entry of the input)");
    common(classify_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? Ok : BadInput;
    }
    cfg.command = app.get_subcommands().front()->get_name();

    try {
        json result;
        if (cfg.command == "project") result = cmd_project(cfg);
        else if (cfg.command == "invariants") result = cmd_invariants(cfg);
        else if (cfg.command == "equiv") result = cmd_equiv(cfg);
        else if (cfg.command == "centers") result = cmd_centers(cfg);
        else if (cfg.command == "generate") result = cmd_generate(cfg);
        else result = cmd_classify(cfg);
        result["config"] = cfg.to_json();
        emit(cfg, result);
        return Ok;
    } catch (const Error& e) {
        const json err = {{"error", {{"code", to_string(e.code())}, {"message", e.what()}}}};
        std::cout << err.dump(2) << "\n";
        std::cerr << "centersvar: " << e.what() << "\n";
        return exit_code(e.code());
    } catch (const std::exception& e) {
        const json err = {{"error", {{"code", "Internal"}, {"message", e.what()}}}};
        std::cout << err.dump(2) << "\n";
        std::cerr << "centersvar: " << e.what() << "\n";
        return Broken;
    }
}
