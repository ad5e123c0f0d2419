// JSON schema for inputs and reports. Exactness survives serialization:
// rationals and angles travel as numerator/denominator pairs, big integers
// as decimal strings when they do not fit a 64-bit field, and report keys
// come out sorted so runs diff cleanly.

#pragma once

#include "abtv/catalog.hpp"
#include "abtv/center.hpp"
#include "abtv/invariants.hpp"

#include <json.hpp>

#include <fstream>
#include <limits>
#include <optional>
#include <string>

namespace abtv {

using nlohmann::json;

/// Input files that fail to parse or validate land here; the CLI maps it
/// to its input-error exit code.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---- serialization -------------------------------------------------------

inline json int_to_json(const Int& x) {
    static const Int lo = std::numeric_limits<int64_t>::min();
    static const Int hi = std::numeric_limits<int64_t>::max();
    if (x >= lo && x <= hi) return json(x.convert_to<int64_t>());
    return json(x.str());
}

inline json rational_to_json(const Rational& x) {
    return json{{"num", int_to_json(numerator(x))}, {"den", int_to_json(denominator(x))}};
}

inline json angle_to_json(const RationalAngle& a) {
    return json{{"num", int_to_json(a.num())}, {"den", int_to_json(a.den())}, {"angle", true}};
}

inline json matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Index j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline json homology_to_json(const HomologySummary& h) {
    json torsion = json::array();
    for (const Int& p : h.torsion) torsion.push_back(int_to_json(p));
    return json{{"betti1", h.betti1}, {"torsion", std::move(torsion)}};
}

inline json surgery_to_json(const SurgeryPresentation& s) {
    json out{{"linking_matrix", matrix_to_json(s.linking)}};
    if (s.external) {
        json lambda = json::array();
        for (Index i = 0; i < s.external->lambda.size(); ++i)
            lambda.push_back(int_to_json(s.external->lambda(i)));
        out["external_link"] =
            json{{"lambda", std::move(lambda)}, {"framing", int_to_json(s.external->framing)}};
    }
    return out;
}

inline json complex_to_json(const CellComplex& c) {
    return json{{"vertices", c.vertices},
                {"edges", c.edges},
                {"faces", c.faces},
                {"incidence", matrix_to_json(c.incidence)}};
}

inline json phased_to_json(const PhasedInt& p) {
    return json{{"magnitude", int_to_json(p.magnitude)}, {"phase", angle_to_json(p.phase)}};
}

inline json phased_to_json(const PhasedRational& p) {
    return json{{"magnitude", rational_to_json(p.magnitude)}, {"phase", angle_to_json(p.phase)}};
}

inline const char* status_name(IdentityCheck::Status s) {
    switch (s) {
        case IdentityCheck::Status::passed: return "passed";
        case IdentityCheck::Status::failed: return "failed";
        case IdentityCheck::Status::skipped: return "skipped";
    }
    return "unknown";
}

inline json check_to_json(const IdentityCheck& c) {
    json out{{"name", c.name}, {"status", status_name(c.status)}};
    if (!c.lhs.empty() || !c.rhs.empty()) {
        out["lhs"] = c.lhs;
        out["rhs"] = c.rhs;
    }
    if (!c.note.empty()) out["note"] = c.note;
    return out;
}

inline json report_to_json(const InvariantReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back(check_to_json(c));
    return json{{"k", r.k},
                {"homology", homology_to_json(r.homology)},
                {"upsilon", int_to_json(r.upsilon)},
                {"tau", rational_to_json(r.tau)},
                {"rt_center", rational_to_json(r.rt_center)},
                {"z_bf", int_to_json(r.z_bf)},
                {"identity_checks", std::move(checks)}};
}

inline json axiom_report_to_json(const AxiomReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        json item{{"name", c.name}, {"passed", c.passed}};
        if (!c.counterexample.empty()) item["counterexample"] = c.counterexample;
        checks.push_back(std::move(item));
    }
    return json{{"k", r.k}, {"checks", std::move(checks)}};
}

// ---- parsing -------------------------------------------------------------

namespace detail {

inline const json& field(const json& obj, const std::string& name, const std::string& where) {
    if (!obj.is_object()) throw InputError(where + ": expected an object");
    auto it = obj.find(name);
    if (it == obj.end()) throw InputError(where + ": missing field '" + name + "'");
    return *it;
}

inline Int int_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Int(j.get<int64_t>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::exception&) {
            throw InputError(where + ": not a valid integer string");
        }
    }
    throw InputError(where + ": expected an integer (number or decimal string)");
}

inline IntMatrix matrix_from_json(const json& j, const std::string& where) {
    if (!j.is_array()) throw InputError(where + ": expected an array of rows");
    const Index rows = static_cast<Index>(j.size());
    Index cols = 0;
    if (rows > 0) {
        if (!j[0].is_array()) throw InputError(where + "[0]: expected an array");
        cols = static_cast<Index>(j[0].size());
    }
    IntMatrix out(rows, cols);
    for (Index i = 0; i < rows; ++i) {
        const json& row = j[static_cast<size_t>(i)];
        const std::string row_where = where + "[" + std::to_string(i) + "]";
        if (!row.is_array() || static_cast<Index>(row.size()) != cols)
            throw InputError(row_where + ": rows must all have " + std::to_string(cols) +
                             " entries");
        for (Index c = 0; c < cols; ++c)
            out(i, c) = int_from_json(row[static_cast<size_t>(c)],
                                      row_where + "[" + std::to_string(c) + "]");
    }
    return out;
}

}  // namespace detail

inline SurgeryPresentation surgery_from_json(const json& j, const std::string& where = "surgery") {
    SurgeryPresentation s;
    s.linking = detail::matrix_from_json(detail::field(j, "linking_matrix", where),
                                         where + ".linking_matrix");
    if (j.contains("external_link") && !j["external_link"].is_null()) {
        const json& ext = j["external_link"];
        const std::string ext_where = where + ".external_link";
        ExternalLink link;
        const json& lambda = detail::field(ext, "lambda", ext_where);
        if (!lambda.is_array()) throw InputError(ext_where + ".lambda: expected an array");
        link.lambda = IntVector(static_cast<Index>(lambda.size()));
        for (Index i = 0; i < link.lambda.size(); ++i)
            link.lambda(i) = detail::int_from_json(lambda[static_cast<size_t>(i)],
                                                   ext_where + ".lambda[" + std::to_string(i) + "]");
        if (ext.contains("framing"))
            link.framing = detail::int_from_json(ext["framing"], ext_where + ".framing");
        s.external = std::move(link);
    }
    try {
        s.validate();
    } catch (const std::invalid_argument& e) {
        throw InputError(where + ": " + e.what());
    }
    return s;
}

inline CellComplex complex_from_json(const json& j, const std::string& where = "complex") {
    CellComplex c;
    const json& v = detail::field(j, "vertices", where);
    const json& e = detail::field(j, "edges", where);
    const json& f = detail::field(j, "faces", where);
    if (!v.is_number_integer() || !e.is_number_integer() || !f.is_number_integer())
        throw InputError(where + ": vertices/edges/faces must be integers");
    c.vertices = v.get<int64_t>();
    c.edges = e.get<int64_t>();
    c.faces = f.get<int64_t>();
    c.incidence = detail::matrix_from_json(detail::field(j, "incidence", where),
                                           where + ".incidence");
    if (j.contains("connected")) {
        if (!j["connected"].is_boolean()) throw InputError(where + ".connected: expected a boolean");
        c.connected = j["connected"].get<bool>();
    }
    try {
        c.validate();
    } catch (const std::invalid_argument& err) {
        throw InputError(where + ": " + err.what());
    }
    return c;
}

/// One manifold description: a surgery presentation, a cell complex, or
/// both (in which case the caller promises they present the same manifold).
struct InputFile {
    std::string name;
    std::optional<SurgeryPresentation> surgery;
    std::optional<CellComplex> complex;
};

inline InputFile input_from_json(const json& j) {
    if (!j.is_object()) throw InputError("input: expected a JSON object");
    InputFile in;
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw InputError("name: expected a string");
        in.name = j["name"].get<std::string>();
    }
    if (j.contains("surgery")) in.surgery = surgery_from_json(j["surgery"]);
    if (j.contains("complex")) in.complex = complex_from_json(j["complex"]);
    if (!in.surgery && !in.complex)
        throw InputError("input: need at least one of 'surgery' or 'complex'");
    return in;
}

inline json input_to_json(const InputFile& in) {
    json out = json::object();
    if (!in.name.empty()) out["name"] = in.name;
    if (in.surgery) out["surgery"] = surgery_to_json(*in.surgery);
    if (in.complex) out["complex"] = complex_to_json(*in.complex);
    return out;
}

inline InputFile parse_input_file(const std::string& path) {
    std::ifstream stream(path);
    if (!stream) throw InputError("cannot open input file: " + path);
    json j;
    try {
        j = json::parse(stream);
    } catch (const json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
    return input_from_json(j);
}

/// Inclusive k range; parses "a..b" or a single "k".
struct KRange {
    long long lo = 1;
    long long hi = 1;
};

inline KRange parse_k_range(const std::string& text) {
    const auto parse_one = [&](const std::string& s) {
        try {
            size_t used = 0;
            const long long v = std::stoll(s, &used);
            if (used != s.size()) throw std::invalid_argument("trailing junk");
            return v;
        } catch (const std::exception&) {
            throw InputError("invalid k value '" + s + "' (expected integer or a..b)");
        }
    };
    KRange range;
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        range.lo = range.hi = parse_one(text);
    } else {
        range.lo = parse_one(text.substr(0, dots));
        range.hi = parse_one(text.substr(dots + 2));
    }
    if (range.lo < 1 || range.hi < range.lo)
        throw InputError("invalid k range '" + text + "' (need 1 <= a <= b)");
    return range;
}

}  // namespace abtv
