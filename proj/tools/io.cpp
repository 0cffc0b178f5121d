#include "io.hpp"

#include <unistd.h>

#include <charconv>
#include <fstream>
#include <sstream>

#include "centersvar/error.hpp"

namespace centersvar::io {

std::string format_double(double v) {
    char buf[40];
    const auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

json to_json(const Rational& v) { return format_rational(v); }

json to_json(const ProjectivePoint& p) {
    json out = json::array();
    for (const auto& c : p.coords()) out.push_back(c.get_str());
    return out;
}

json to_json(const Configuration& c) {
    json pts = json::array();
    for (const auto& p : c.points()) pts.push_back(to_json(p));
    return {{"ambient_dim", c.ambient_dim()}, {"points", pts}};
}

json to_json(const RMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

json to_json(const Form& f) {
    json coeffs = json::array();
    for (const auto& c : f.coeffs()) coeffs.push_back(to_json(c));
    return {{"degree", f.degree()}, {"text", f.to_mpoly().to_string("z")}, {"coefficients", coeffs}};
}

json to_json(const BinaryForm& f) {
    json coeffs = json::array();
    for (int k = 0; k <= f.degree; ++k) coeffs.push_back(to_json(f.poly.coeff(k)));
    return {{"degree", f.degree}, {"coefficients", coeffs}};
}

json to_json(const InvariantVector& v) {
    const InvariantVector c = v.canonical();
    json values = json::array();
    for (const auto& x : c.values) values.push_back(to_json(x));
    return {{"kind", to_string(c.kind)}, {"values", values}, {"non_semistable", c.non_semistable()}};
}

json to_json(const NumericPoint& p) {
    json coords = json::array();
    for (const auto& z : p.coords) coords.push_back({format_double(z.real()), format_double(z.imag())});
    json out = {{"coords", coords}, {"residual", format_double(p.residual)}, {"is_real", p.is_real}};
    out["exact"] = p.exact ? to_json(*p.exact) : json(nullptr);
    return out;
}

json to_json(const CenterPair& p) {
    return {{"a", to_json(p.a)}, {"b", to_json(p.b)}, {"residual", format_double(p.residual)}};
}

json to_json(const LocusComponent& c) {
    json span = json::array();
    for (const auto& p : c.span) span.push_back(to_json(p));
    return {{"type", to_string(c.type)}, {"span", span}};
}

json to_json(const Reconstruction& r) {
    return {{"x", to_json(r.x)},
            {"y", to_json(r.y)},
            {"ground_truth",
             {{"a", to_json(r.a_true)},
              {"b", to_json(r.b_true)},
              {"Aprime", to_json(r.a_prime)},
              {"Bprime", to_json(r.b_prime)},
              {"Aprime_center", to_json(r.a_prime_center)},
              {"Bprime_center", to_json(r.b_prime_center)},
              {"Z", to_json(r.z)}}}};
}

namespace {

json pairs_json(const std::vector<CenterPair>& pairs) {
    json out = json::array();
    for (const auto& p : pairs) out.push_back(to_json(p));
    return out;
}

template <class T>
json list_json(const std::vector<T>& items) {
    json out = json::array();
    for (const auto& i : items) out.push_back(to_json(i));
    return out;
}

json surfaces_json(const std::vector<QuadricSurface>& qs) {
    json out = json::array();
    for (const auto& q : qs) out.push_back(to_json(q.form()));
    return out;
}

json vector_json(const RVector& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(to_json(x));
    return out;
}

struct VarietyJson {
    json operator()(const EverythingN4& v) const {
        return {{"type", "EverythingN4"}, {"n", v.n}};
    }
    json operator()(const CubicFibrationN5& v) const {
        json quadrics = json::array();
        for (const auto& q : v.cubic.quadrics) quadrics.push_back(to_json(q));
        json out = {{"type", "CubicFibrationN5"},
                    {"given_center", to_json(v.given_center)},
                    {"degeneration", to_string(v.degeneration)},
                    {"quadrics", quadrics},
                    {"base_points", to_json(v.cubic.base_points)}};
        if (v.cubic.param) {
            json coords = json::array();
            for (const auto& c : v.cubic.param->coords) coords.push_back(to_json(c));
            out["parametrization"] = coords;
        } else {
            out["parametrization"] = nullptr;
        }
        return out;
    }
    json operator()(const SurfacePairN6& v) const {
        json samples = json::array();
        for (const auto& [a, b] : v.sampled_pairs) samples.push_back({{"a", to_json(a)}, {"b", to_json(b)}});
        return {{"type", "SurfacePairN6"},
                {"s_beta", to_json(v.surfaces.s_beta.form())},
                {"s_alpha", to_json(v.surfaces.s_alpha.form())},
                {"beta", vector_json(v.surfaces.beta)},
                {"alpha", vector_json(v.surfaces.alpha)},
                {"sampled_pairs", samples},
                {"matched_b", v.matched_b ? to_json(*v.matched_b) : json(nullptr)}};
    }
    json operator()(const ThreePairsN7& v) const {
        return {{"type", "ThreePairsN7"},
                {"a_candidates", list_json(v.candidates.a)},
                {"b_candidates", list_json(v.candidates.b)},
                {"s_beta", surfaces_json(v.candidates.s_beta)},
                {"s_alpha", surfaces_json(v.candidates.s_alpha)},
                {"pairs", pairs_json(v.pairs)}};
    }
    json operator()(const EmptyN8& v) const {
        return {{"type", "EmptyN8"},
                {"empty", v.certificate.common.empty()},
                {"first", pairs_json(v.certificate.first)},
                {"second", pairs_json(v.certificate.second)},
                {"common", pairs_json(v.certificate.common)}};
    }
};

}  // namespace

json to_json(const CentersVariety& v) { return std::visit(VarietyJson{}, v); }

Rational rational_from_json(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(Integer(j.dump()));
    fail(ErrorCode::InvalidInput, "exact numbers must be fraction strings or integers, got " + j.dump());
}

ProjectivePoint point_from_json(const json& j) {
    if (!j.is_array() || j.empty()) fail(ErrorCode::InvalidInput, "a point must be a nonempty array");
    RVector v;
    for (const auto& c : j) v.push_back(rational_from_json(c));
    return ProjectivePoint(v);
}

RMatrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_array()) fail(ErrorCode::InvalidInput, "a matrix must be an array of rows");
    RMatrix m(j.size(), j[0].size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (j[i].size() != m.cols()) fail(ErrorCode::InvalidInput, "matrix rows have different lengths");
        for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = rational_from_json(j[i][k]);
    }
    return m;
}

Configuration configuration_from_json(const json& doc, std::string_view role) {
    const json* set = &doc;
    if (!doc.contains("points")) {
        if (!doc.contains(role)) fail(ErrorCode::InvalidInput, "document has neither \"points\" nor \"" + std::string(role) + "\"");
        set = &doc[std::string(role)];
    }
    if (!set->contains("points") || !(*set)["points"].is_array())
        fail(ErrorCode::InvalidInput, "point set needs a \"points\" array");
    std::vector<ProjectivePoint> pts;
    for (const auto& p : (*set)["points"]) pts.push_back(point_from_json(p));
    if (pts.empty()) fail(ErrorCode::InvalidInput, "point set is empty");
    const std::size_t dim = set->contains("ambient_dim") ? (*set)["ambient_dim"].get<std::size_t>() : pts[0].dim();
    for (const auto& p : pts)
        if (p.dim() != dim) fail(ErrorCode::InvalidInput, "point " + p.to_string() + " has the wrong number of coordinates");
    return Configuration(dim, std::move(pts));
}

ProjectivePoint parse_center(const std::string& text) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(text, ec)) {
        const json doc = read_json(text);
        if (doc.is_array()) return point_from_json(doc);
        for (const char* key : {"center", "point"})
            if (doc.contains(key) && !doc[key].is_null()) return point_from_json(doc[key]);
        if (doc.contains("ground_truth")) return point_from_json(doc["ground_truth"]["a"]);
        fail(ErrorCode::InvalidInput, "center file " + text + " has no \"center\" entry");
    }
    RVector v;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) v.push_back(parse_rational(part));
    if (v.empty()) fail(ErrorCode::InvalidInput, "empty center");
    return ProjectivePoint(v);
}

json read_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::InvalidInput, "cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        fail(ErrorCode::InvalidInput, path.string() + ": " + e.what());
    }
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
    const auto dir = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
    const auto tmp = dir / ("." + path.filename().string() + ".tmp" + std::to_string(::getpid()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) fail(ErrorCode::InvalidInput, "cannot write " + tmp.string());
        out << content;
        out.flush();
        if (!out) fail(ErrorCode::InvalidInput, "write failed for " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        fail(ErrorCode::InvalidInput, "cannot replace " + path.string());
    }
}

namespace {

bool scalar_array(const json& j) {
    return j.is_array() && std::all_of(j.begin(), j.end(), [](const json& e) { return e.is_primitive(); });
}

std::string scalar_text(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void render(const json& j, int indent, std::ostream& out) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (value.is_primitive()) {
                out << pad << key << ": " << scalar_text(value) << "\n";
            } else if (scalar_array(value)) {
                out << pad << key << ": (";
                for (std::size_t i = 0; i < value.size(); ++i) out << (i ? " : " : "") << scalar_text(value[i]);
                out << ")\n";
            } else {
                out << pad << key << ":\n";
                render(value, indent + 1, out);
            }
        }
    } else if (j.is_array()) {
        for (const auto& e : j) {
            if (scalar_array(e)) {
                out << pad << "- (";
                for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " : " : "") << scalar_text(e[i]);
                out << ")\n";
            } else if (e.is_primitive()) {
                out << pad << "- " << scalar_text(e) << "\n";
            } else {
                out << pad << "-\n";
                render(e, indent + 1, out);
            }
        }
    } else {
        out << pad << scalar_text(j) << "\n";
    }
}

}  // namespace

std::string to_text(const json& j) {
    std::ostringstream out;
    render(j, 0, out);
    return out.str();
}

}  // namespace centersvar::io
