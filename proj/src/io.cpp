#include "uccone/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace uccone::io {

namespace {

const Json& field(const Json& object, const char* key) {
    if (!object.is_object()) throw ParseError("expected a JSON object");
    auto it = object.find(key);
    if (it == object.end()) throw ParseError(std::string("missing key \"") + key + "\"");
    return *it;
}

int integer_field(const Json& object, const char* key) {
    const Json& value = field(object, key);
    if (!value.is_number_integer()) throw ParseError(std::string("\"") + key + "\" must be an integer");
    return value.get<int>();
}

const std::string& string_value(const Json& value, const char* what) {
    if (!value.is_string()) throw ParseError(std::string(what) + " must be a string");
    return value.get_ref<const std::string&>();
}

Rational rational_value(const Json& value) { return parse_rational(string_value(value, "rational")); }

int dimension_field(const Json& object) {
    int n = integer_field(object, "n");
    if (n < 1 || n > kMaxDimension) throw ParseError("n = " + std::to_string(n) + " outside [1, 16]");
    return n;
}

SubsetMask nonempty_subset(std::string_view text, int n) {
    SubsetMask a = SubsetMask::parse(text, n);
    if (a.empty()) throw ParseError("empty subset label");
    return a;
}

std::map<SubsetMask, Rational, CanonicalLess> coefficient_map(const Json& object, int n) {
    if (!object.is_object()) throw ParseError("coefficients must be a JSON object");
    std::map<SubsetMask, Rational, CanonicalLess> out;
    for (const auto& [key, value] : object.items()) {
        SubsetMask a = nonempty_subset(key, n);
        if (!out.emplace(a, rational_value(value)).second) throw ParseError("duplicate subset \"" + key + "\"");
    }
    return out;
}

Json cover_parts(const UniformCover& c) {
    Json parts = Json::array();
    for (SubsetMask p : c.parts) parts.push_back(p.to_string());
    return parts;
}

Json inequality_list(const std::vector<CoverInequality>& list) {
    Json out = Json::array();
    for (const CoverInequality& g : list) out.push_back(inequality_json(g));
    return out;
}

template <class F>
auto translate_errors(F&& body) {
    try {
        return body();
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    } catch (const std::out_of_range& e) {
        throw ParseError(e.what());
    }
}

}  // namespace

Json parse_json(std::string_view text) {
    std::vector<std::set<std::string>> keys;
    auto reject_duplicates = [&keys](int, Json::parse_event_t event, Json& parsed) {
        switch (event) {
            case Json::parse_event_t::object_start:
                keys.emplace_back();
                break;
            case Json::parse_event_t::object_end:
                keys.pop_back();
                break;
            case Json::parse_event_t::key:
                if (!keys.back().insert(parsed.get<std::string>()).second) {
                    throw ParseError("duplicate key \"" + parsed.get<std::string>() + "\"");
                }
                break;
            default:
                break;
        }
        return true;
    };
    try {
        return Json::parse(text.begin(), text.end(), reject_duplicates);
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
    if (content.empty() || content.back() != '\n') out << '\n';
}

ProjectionVector read_vector(std::string_view text) {
    Json doc = parse_json(text);
    const int n = dimension_field(doc);
    const Json& entries = field(doc, "entries");
    if (!entries.is_object()) throw ParseError("\"entries\" must be a JSON object");
    ProjectionVector v(n);
    std::set<std::uint32_t> seen;
    for (const auto& [key, value] : entries.items()) {
        SubsetMask a = nonempty_subset(key, n);
        if (!seen.insert(a.bits()).second) throw ParseError("duplicate subset \"" + key + "\"");
        v[a] = rational_value(value);
    }
    return v;
}

Json vector_json(const ProjectionVector& v) {
    Json entries = Json::object();
    for (SubsetMask a : canonical_subset_order(v.n())) entries[a.to_string()] = format_rational(v[a]);
    return Json{{"n", v.n()}, {"entries", std::move(entries)}};
}

std::string write_vector(const ProjectionVector& v) { return vector_json(v).dump(); }

CoverSpec read_cover_spec(std::string_view text) {
    Json doc = parse_json(text);
    CoverSpec spec;
    spec.ground = SubsetMask::parse(string_value(field(doc, "ground"), "\"ground\""), kMaxDimension);
    if (spec.ground.empty()) throw ParseError("empty ground set");
    spec.k = integer_field(doc, "k");
    if (spec.k < 1) throw ParseError("k must be positive");
    const Json& parts = field(doc, "parts");
    if (!parts.is_array()) throw ParseError("\"parts\" must be an array");
    for (const Json& p : parts) {
        SubsetMask part = nonempty_subset(string_value(p, "part"), kMaxDimension);
        if (!part.subset_of(spec.ground)) throw ParseError("part {" + part.to_string() + "} not inside the ground set");
        spec.parts.push_back(part);
    }
    return spec;
}

UniformCover read_cover(std::string_view text) {
    CoverSpec spec = read_cover_spec(text);
    return translate_errors([&] { return UniformCover::make(spec.ground, spec.parts, spec.k); });
}

Json cover_json(const UniformCover& c) {
    return Json{{"ground", c.ground.to_string()}, {"k", c.k}, {"parts", cover_parts(c)}};
}

std::string write_cover(const UniformCover& c) { return cover_json(c).dump(); }

LinearInequality read_inequality(std::string_view text) {
    Json doc = parse_json(text);
    const int n = dimension_field(doc);
    auto lhs = coefficient_map(field(doc, "lhs"), n);
    auto rhs = coefficient_map(field(doc, "rhs"), n);
    return translate_errors([&] { return LinearInequality::make(n, std::move(lhs), std::move(rhs)); });
}

std::string write_inequality(const LinearInequality& inequality) {
    Json lhs = Json::object();
    Json rhs = Json::object();
    for (const auto& [a, c] : inequality.lhs) lhs[a.to_string()] = format_rational(c);
    for (const auto& [a, c] : inequality.rhs) rhs[a.to_string()] = format_rational(c);
    return Json{{"n", inequality.n}, {"lhs", std::move(lhs)}, {"rhs", std::move(rhs)}}.dump();
}

BoxUnionBody read_body(std::string_view text) {
    Json doc = parse_json(text);
    const int n = dimension_field(doc);
    const Json& boxes = field(doc, "boxes");
    if (!boxes.is_array()) throw ParseError("\"boxes\" must be an array");
    std::vector<Box> out;
    for (const Json& b : boxes) {
        const Json& intervals = field(b, "intervals");
        if (!intervals.is_array() || intervals.size() != static_cast<std::size_t>(n)) {
            throw ParseError("each box needs exactly n intervals");
        }
        std::vector<Interval> axes;
        for (const Json& iv : intervals) {
            if (!iv.is_array() || iv.size() != 2) throw ParseError("an interval is a pair [lo, hi]");
            axes.push_back({rational_value(iv[0]), rational_value(iv[1])});
        }
        out.push_back(translate_errors([&] { return Box(std::move(axes)); }));
    }
    return translate_errors([&] { return BoxUnionBody(n, std::move(out)); });
}

std::string write_body(const BoxUnionBody& body) {
    Json boxes = Json::array();
    for (const Box& b : body.boxes()) {
        Json intervals = Json::array();
        for (const Interval& iv : b.intervals()) {
            intervals.push_back(Json::array({format_rational(iv.lo), format_rational(iv.hi)}));
        }
        boxes.push_back(Json{{"intervals", std::move(intervals)}});
    }
    return Json{{"n", body.n()}, {"boxes", std::move(boxes)}}.dump();
}

SetFamily read_family(std::string_view text) {
    Json doc = parse_json(text);
    const int n = dimension_field(doc);
    const Json& members = field(doc, "members");
    if (!members.is_array()) throw ParseError("\"members\" must be an array");
    std::vector<SubsetMask> out;
    for (const Json& m : members) out.push_back(SubsetMask::parse(string_value(m, "member"), n));
    return SetFamily(n, std::move(out));
}

std::string write_family(const SetFamily& family) {
    Json members = Json::array();
    for (SubsetMask m : family.members()) members.push_back(m.to_string());
    return Json{{"n", family.n()}, {"members", std::move(members)}}.dump();
}

Json inequality_json(const CoverInequality& g) {
    Json out = cover_json(g.cover);
    out["inequality"] = g.to_string();
    return out;
}

Json membership_json(const MembershipReport& report) {
    return Json{{"inside", report.inside},
                {"violated", inequality_list(report.violated)},
                {"tight", inequality_list(report.tight)}};
}

Json certificate_json(const ConeSystem& system, const FarkasCertificate& certificate) {
    Json out = Json::array();
    for (const auto& [index, weight] : certificate.weights) {
        const UniformCover& c = system.generators.at(index).cover;
        out.push_back(Json{{"ground", c.ground.to_string()},
                           {"parts", cover_parts(c)},
                           {"k", c.k},
                           {"weight", format_rational(weight)}});
    }
    return out;
}

Json witness_report_json(const WitnessReport& report) {
    return Json{{"vector", vector_json(report.vector)},
                {"in_cone", report.in_cone},
                {"tight", inequality_list(report.tight)},
                {"violated", inequality_list(report.violated)},
                {"obstruction_lhs", format_rational(report.obstruction_lhs)},
                {"obstruction_rhs", format_rational(report.obstruction_rhs)},
                {"obstruction_holds", report.obstruction_holds}};
}

Json shearer_json(const ShearerReport& report) {
    return Json{{"lhs_product", report.lhs_product.str()},
                {"rhs_power", report.rhs_power.str()},
                {"holds", report.holds},
                {"trace_sizes", report.trace_sizes}};
}

Json realization_json(const RealizationResult& result) {
    Json gaps = Json::object();
    for (SubsetMask a : canonical_subset_order(result.vector.n())) gaps[a.to_string()] = format_real(result.log_gap[a], 8);
    Json steps = Json::array();
    for (const RealizationStep& step : result.steps) {
        Json z = Json::object();
        for (std::size_t i = 0; i < step.system.subsets.size(); ++i) {
            z[step.system.subsets[i].to_string()] = format_real(boost::multiprecision::exp(step.system.solution_log[i]));
        }
        Json sides = Json::array();
        for (const Rational& s : step.sides) sides.push_back(format_rational(s));
        steps.push_back(Json{{"support", step.support.to_string()},
                             {"z", std::move(z)},
                             {"product_gap", format_real(step.system.product_gap, 8)},
                             {"sides", std::move(sides)}});
    }
    return Json{{"lambda", format_real(result.lambda)},
                {"vector", vector_json(result.vector)},
                {"max_gap", format_real(result.max_gap, 8)},
                {"gaps", std::move(gaps)},
                {"steps", std::move(steps)}};
}

Json log_projection_json(const LogProjection& projection) {
    Json volumes = Json::object();
    for (SubsetMask a : canonical_subset_order(projection.volumes.n())) {
        volumes[a.to_string()] = format_rational(projection.volumes[a]);
    }
    return Json{{"n", projection.volumes.n()}, {"volumes", std::move(volumes)}};
}

std::string format_real(const Real& value, int digits) { return value.str(digits); }

}  // namespace uccone::io
