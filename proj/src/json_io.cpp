#include "pospoly/json_io.hpp"

#include <fstream>

#include "pospoly/errors.hpp"

namespace pospoly {

Poset poset_from_json(const json& j) {
    if (!j.is_object() || !j.contains("elements") || !j["elements"].is_array())
        fail(Errc::MalformedInput, "poset JSON needs an \"elements\" array");
    std::vector<std::string> labels;
    for (const auto& e : j["elements"]) {
        if (!e.is_string()) fail(Errc::MalformedInput, "poset elements must be strings");
        labels.push_back(e.get<std::string>());
    }
    std::vector<std::pair<std::string, std::string>> relations;
    if (j.contains("relations")) {
        if (!j["relations"].is_array()) fail(Errc::MalformedInput, "\"relations\" must be an array");
        for (const auto& r : j["relations"]) {
            if (!r.is_array() || r.size() != 2 || !r[0].is_string() || !r[1].is_string())
                fail(Errc::MalformedInput, "each relation must be a pair of labels");
            relations.emplace_back(r[0].get<std::string>(), r[1].get<std::string>());
        }
    }
    return Poset::build(std::move(labels), relations);
}

json poset_to_json(const Poset& poset) {
    json j;
    j["elements"] = poset.labels();
    json rels = json::array();
    for (auto [a, b] : poset.cover_relations())
        rels.push_back(json::array({poset.label(a), poset.label(b)}));
    j["relations"] = std::move(rels);
    return j;
}

namespace {

const json& zfield(const json& j) {
    if (!j.is_object() || !j.contains("z") || !j["z"].is_object())
        fail(Errc::MalformedInput, "vector JSON needs a \"z\" object");
    return j["z"];
}

}  // namespace

IntPoint zvector_from_json(const json& j, const Poset& poset) {
    IntPoint z(poset.size(), 0);
    for (const auto& [label, value] : zfield(j).items()) {
        if (!value.is_number_integer())
            fail(Errc::MalformedInput, "coordinate of \"" + label + "\" must be an integer");
        z[poset.index_of(label)] = value.get<long long>();
    }
    return z;
}

std::vector<Rational> zvector_rational_from_json(const json& j, const Poset& poset) {
    std::vector<Rational> z(poset.size(), Rational(0));
    for (const auto& [label, value] : zfield(j).items()) {
        Rational v;
        if (value.is_number_integer())
            v = Rational(value.get<long long>());
        else if (value.is_string())
            v = parse_rational(value.get<std::string>());
        else
            fail(Errc::MalformedInput, "coordinate of \"" + label + "\" must be an integer or a rational string");
        z[poset.index_of(label)] = v;
    }
    return z;
}

json zvector_to_json(const IntPoint& z, const Poset& poset) {
    json j;
    j["z"] = point_to_json(z, poset);
    return j;
}

json point_to_json(const IntPoint& z, const Poset& poset) {
    json obj = json::object();
    for (int e = 0; e < poset.size(); ++e)
        if (z[e] != 0) obj[poset.label(e)] = z[e];
    return obj;
}

json cert_to_json(const DecompositionCert& cert, const Poset& poset) {
    json j;
    json layers = json::array();
    for (const Antichain& a : cert.antichains) {
        json names = json::array();
        for (int e : a) names.push_back(poset.label(e));
        layers.push_back(std::move(names));
    }
    j["antichains"] = std::move(layers);
    j["remainder"] = point_to_json(cert.remainder, poset);
    return j;
}

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) fail(Errc::MalformedInput, "zero denominator in \"" + text + "\"");
        return Rational(num, den);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        fail(Errc::MalformedInput, "cannot parse rational \"" + text + "\"");
    }
}

std::string rational_str(const Rational& value) {
    std::string s = boost::multiprecision::numerator(value).str();
    if (boost::multiprecision::denominator(value) != 1)
        s += "/" + boost::multiprecision::denominator(value).str();
    return s;
}

Subspace subspace_from_json(const json& j) {
    const json& rows = j.is_object() && j.contains("matrix") ? j["matrix"] : j;
    if (!rows.is_array() || rows.empty())
        fail(Errc::MalformedInput, "subspace JSON must be a nonempty array of rows");
    Subspace u;
    for (const auto& row : rows) {
        if (!row.is_array()) fail(Errc::MalformedInput, "subspace rows must be arrays");
        std::vector<Rational> entries;
        for (const auto& cell : row) {
            if (cell.is_number_integer())
                entries.emplace_back(cell.get<long long>());
            else if (cell.is_string())
                entries.push_back(parse_rational(cell.get<std::string>()));
            else
                fail(Errc::MalformedInput, "matrix entries must be integers or rational strings");
        }
        u.rows.push_back(std::move(entries));
    }
    return u;
}

json qpoly_to_json(const QPolynomial& p) {
    json j;
    j["coeffs"] = p.coeffs;
    j["pretty"] = p.str();
    return j;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::MalformedInput, "cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        fail(Errc::MalformedInput, "invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

}  // namespace pospoly
