#include "derivlab/serialize.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "json_io.hpp"

namespace derivlab {

namespace detail {

Json int_to_json(const Int& v) {
    static const Int lo = Int(std::numeric_limits<std::int64_t>::min());
    static const Int hi = Int(std::numeric_limits<std::int64_t>::max());
    if (v >= lo && v <= hi) return Json(v.convert_to<std::int64_t>());
    return Json(v.str());
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw ParseError("expected an integer or integer string");
}

Json ring_spec_json(const RingSpec& spec) {
    Json j;
    switch (spec.kind) {
        case RingKind::PrimeField:
            j["kind"] = "prime-field";
            j["p"] = int_to_json(spec.p);
            break;
        case RingKind::ExtensionField: {
            j["kind"] = "extension-field";
            j["p"] = int_to_json(spec.p);
            j["k"] = spec.k;
            Json mod = Json::array();
            for (const Int& c : spec.modulus) mod.push_back(int_to_json(c));
            j["modulus"] = std::move(mod);
            break;
        }
        case RingKind::Rationals:
            j["kind"] = "rationals";
            break;
        case RingKind::Integers:
            j["kind"] = "integers";
            break;
        case RingKind::IntegersMod:
            j["kind"] = "integers-mod";
            j["m"] = int_to_json(spec.m);
            break;
    }
    return j;
}

RingSpec ring_spec_from(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
        throw ParseError("ring spec must be an object with a \"kind\" field");
    }
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "prime-field") {
        if (!j.contains("p")) throw ParseError("prime-field spec needs \"p\"");
        return RingSpec::prime_field(int_from_json(j["p"]));
    }
    if (kind == "extension-field") {
        if (!j.contains("p") || !j.contains("k")) {
            throw ParseError("extension-field spec needs \"p\" and \"k\"");
        }
        std::vector<Int> modulus;
        if (j.contains("modulus")) {
            if (!j["modulus"].is_array()) throw ParseError("modulus must be a coefficient array");
            for (const auto& c : j["modulus"]) modulus.push_back(int_from_json(c));
        }
        return RingSpec::extension_field(int_from_json(j["p"]), j["k"].get<unsigned>(),
                                         std::move(modulus));
    }
    if (kind == "rationals") return RingSpec::rationals();
    if (kind == "integers") return RingSpec::integers();
    if (kind == "integers-mod") {
        if (!j.contains("m")) throw ParseError("integers-mod spec needs \"m\"");
        return RingSpec::integers_mod(int_from_json(j["m"]));
    }
    throw ParseError("unknown ring kind: " + kind);
}

Json scalar_json(const Scalar& s) {
    if (s.ring().kind() == RingKind::ExtensionField) {
        Json arr = Json::array();
        for (const Int& c : s.coeffs()) arr.push_back(int_to_json(c));
        return arr;
    }
    return Json(to_string(s));
}

Scalar scalar_from(const Ring& ring, const Json& j) {
    if (j.is_array()) {
        if (ring.kind() != RingKind::ExtensionField) {
            throw ParseError("coefficient-list scalar over a non-extension ring");
        }
        std::vector<Int> coeffs;
        for (const auto& c : j) coeffs.push_back(int_from_json(c));
        if (coeffs.size() > ring.spec().k) throw ParseError("coefficient list too long");
        return Scalar(ring, std::move(coeffs));
    }
    if (j.is_string()) return scalar_from_string(ring, j.get<std::string>());
    if (j.is_number_integer()) return ring.from_int(Int(j.get<std::int64_t>()));
    throw ParseError("expected a scalar string, integer or coefficient list");
}

Json matrix_json(const Matrix& m) {
    Json j;
    j["n"] = m.rows();
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_json(m.at(i, c)));
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

Matrix matrix_from(const Ring& ring, const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("rows")) {
        throw ParseError("matrix must be an object with \"n\" and \"rows\"");
    }
    const std::size_t n = j["n"].get<std::size_t>();
    if (n == 0) throw ParseError("matrix dimension must be positive");
    if (!j["rows"].is_array() || j["rows"].size() != n) {
        throw ParseError("matrix \"rows\" must hold n rows");
    }
    std::vector<Scalar> entries;
    entries.reserve(n * n);
    for (const auto& row : j["rows"]) {
        if (!row.is_array() || row.size() != n) throw ParseError("matrix row of the wrong length");
        for (const auto& cell : row) entries.push_back(scalar_from(ring, cell));
    }
    return Matrix(ring, n, n, std::move(entries));
}

std::string carrier_name(Carrier c) {
    return c == Carrier::FullMatrixAlgebra ? "full" : "jordan";
}

Carrier carrier_from_name(const std::string& name) {
    if (name == "full") return Carrier::FullMatrixAlgebra;
    if (name == "jordan") return Carrier::JordanSymmetric;
    throw ParseError("unknown carrier: " + name + " (expected \"full\" or \"jordan\")");
}

Json map_json(const AdditiveMap& f) {
    Json j;
    j["ring"] = ring_spec_json(f.ring().spec());
    j["n"] = f.n();
    j["carrier"] = carrier_name(f.carrier());
    Json images = Json::array();
    for (const Matrix& img : f.basis_images()) images.push_back(matrix_json(img));
    j["basis_images"] = std::move(images);
    return j;
}

AdditiveMap map_from(const Json& j) {
    if (!j.is_object() || !j.contains("ring") || !j.contains("n") || !j.contains("carrier") ||
        !j.contains("basis_images")) {
        throw ParseError("map file needs \"ring\", \"n\", \"carrier\" and \"basis_images\"");
    }
    const Ring ring(ring_spec_from(j["ring"]));
    const std::size_t n = j["n"].get<std::size_t>();
    const Carrier carrier = carrier_from_name(j["carrier"].get<std::string>());
    if (!j["basis_images"].is_array()) throw ParseError("basis_images must be an array");
    std::vector<Matrix> images;
    images.reserve(j["basis_images"].size());
    for (const auto& img : j["basis_images"]) images.push_back(matrix_from(ring, img));
    return map_from_basis_images(ring, n, carrier, images);
}

Json verdict_json(const Verdict& v) {
    Json j;
    switch (v.outcome) {
        case Verdict::Outcome::CertifiedAccept:
            j["outcome"] = "certified-accept";
            break;
        case Verdict::Outcome::ProbabilisticAccept:
            j["outcome"] = "probabilistic-accept";
            break;
        case Verdict::Outcome::Reject:
            j["outcome"] = "reject";
            break;
    }
    j["checked_points"] = v.checked_points;
    j["seed"] = v.seed;
    if (v.witness) j["witness"] = matrix_json(*v.witness);
    return j;
}

namespace {

Json failure_json(const GlobalizeFailure& f) {
    Json v;
    v["detail"] = f.detail;
    if (f.unit) v["unit"] = Json::array({f.unit->first, f.unit->second});
    return v;
}

} // namespace

Json reconstruct_json(const ReconstructReport& r) {
    Json j;
    if (r.success) {
        j["status"] = "success";
        j["implementer"] = matrix_json(*r.implementer);
        j["paths_agree"] = r.paths_agree;
        j["points_verified"] = r.points_verified;
    } else {
        j["status"] = "failure";
        j["stage"] = r.failure ? r.failure->stage : "direct";
        if (r.failure) j["violation"] = failure_json(*r.failure);
        if (r.consistency_fault) j["consistency_fault"] = true;
    }
    return j;
}

Json jordan_outcome_json(const JordanGlobalizeOutcome& r) {
    Json j;
    if (r.ok()) {
        j["status"] = "success";
        j["implementer"] = matrix_json(r.implementer->matrix());
    } else {
        j["status"] = "failure";
        j["stage"] = r.failure ? r.failure->stage : "direct";
        if (r.failure) j["violation"] = failure_json(*r.failure);
    }
    return j;
}

} // namespace detail

namespace {

using detail::Json;

Json parse_or_throw(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON");
    return j;
}

// converts wrong-typed field accesses into the documented error type
template <typename Fn>
auto with_parse_errors(Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const Json::exception& e) {
        throw ParseError(e.what());
    }
}

} // namespace

std::string to_json(const RingSpec& spec) { return detail::ring_spec_json(spec).dump(); }

RingSpec ring_spec_from_json(const std::string& text) {
    return with_parse_errors([&] { return detail::ring_spec_from(parse_or_throw(text)); });
}

RingSpec ring_spec_from_string(const std::string& text) {
    std::string t;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) t += static_cast<char>(std::tolower(c));
    }
    if (t.empty()) throw ParseError("empty ring spec");
    if (t.front() == '{') return ring_spec_from_json(text);
    if (t == "q" || t == "rationals") return RingSpec::rationals();
    if (t == "z" || t == "integers") return RingSpec::integers();
    auto parse_tail_int = [](const std::string& s) { return Int(s); };
    if (t.rfind("gf(", 0) == 0 && t.back() == ')') {
        const std::string body = t.substr(3, t.size() - 4);
        const std::size_t caret = body.find('^');
        try {
            if (caret == std::string::npos) return RingSpec::prime_field(parse_tail_int(body));
            const Int p = parse_tail_int(body.substr(0, caret));
            const unsigned k = static_cast<unsigned>(std::stoul(body.substr(caret + 1)));
            return RingSpec::extension_field(p, k);
        } catch (const std::exception&) {
            throw ParseError("malformed ring spec: " + text);
        }
    }
    if (t.rfind("z/", 0) == 0) {
        try {
            return RingSpec::integers_mod(parse_tail_int(t.substr(2)));
        } catch (const std::exception&) {
            throw ParseError("malformed ring spec: " + text);
        }
    }
    if (t.rfind("mod(", 0) == 0 && t.back() == ')') {
        try {
            return RingSpec::integers_mod(parse_tail_int(t.substr(4, t.size() - 5)));
        } catch (const std::exception&) {
            throw ParseError("malformed ring spec: " + text);
        }
    }
    throw ParseError("unrecognized ring spec: " + text);
}

std::string to_json(const Matrix& m) { return detail::matrix_json(m).dump(); }

Matrix matrix_from_json(const Ring& ring, const std::string& text) {
    return with_parse_errors([&] { return detail::matrix_from(ring, parse_or_throw(text)); });
}

std::string to_json(const AdditiveMap& f) { return detail::map_json(f).dump(2); }

AdditiveMap map_from_json(const std::string& text) {
    return with_parse_errors([&] { return detail::map_from(parse_or_throw(text)); });
}

std::string to_json(const Verdict& v) { return detail::verdict_json(v).dump(2); }

std::string to_json(const ReconstructReport& r) { return detail::reconstruct_json(r).dump(2); }

std::string to_json(const JordanGlobalizeOutcome& r) {
    return detail::jordan_outcome_json(r).dump(2);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path);
    out << content;
}

namespace {

void strip_timings(Json& j) {
    if (j.is_object()) {
        j.erase("timing_ms");
        j.erase("timings_ms");
        j.erase("elapsed_seconds");
        for (auto& [key, value] : j.items()) strip_timings(value);
    } else if (j.is_array()) {
        for (auto& value : j) strip_timings(value);
    }
}

} // namespace

std::string report_without_timings(const std::string& report_json) {
    Json j = parse_or_throw(report_json);
    strip_timings(j);
    return j.dump(2);
}

} // namespace derivlab
