#include "biquad/poly_io.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace biquad {

namespace {

// Translates a byte offset from the JSON parser into 1-based line/column.
std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

} // namespace

BiasPolynomial parse_bias_polynomial(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, col] = line_col(json_text, e.byte > 0 ? e.byte - 1 : 0);
        throw InputError("malformed JSON at line " + std::to_string(line) + ", column " +
                         std::to_string(col) + ": " + e.what());
    }

    if (!j.is_object() || !j.contains("terms")) {
        throw InputError("polynomial JSON must be an object with a \"terms\" array");
    }
    const auto& terms = j["terms"];
    if (!terms.is_array()) {
        throw InputError("\"terms\" must be an array");
    }

    BiasPolynomial p;
    p.terms.reserve(terms.size());
    for (const auto& t : terms) {
        if (!t.is_object() || !t.contains("coeff") || !t.contains("alice") || !t.contains("bob")) {
            throw InputError("each term needs \"coeff\", \"alice\" and \"bob\" fields");
        }
        if (!t["coeff"].is_number()) {
            throw InputError("term \"coeff\" must be a number");
        }
        if (!t["alice"].is_string() || !t["bob"].is_string()) {
            throw InputError("term \"alice\" and \"bob\" must be strings over {u, v}");
        }
        Term term;
        term.coeff = t["coeff"].get<double>();
        if (!std::isfinite(term.coeff)) {
            throw InputError("term \"coeff\" must be finite");
        }
        term.alice = Word(t["alice"].get<std::string>());
        term.bob = Word(t["bob"].get<std::string>());
        term.alice.validate();
        term.bob.validate();
        p.terms.push_back(std::move(term));
    }
    return p;
}

std::string serialize_bias_polynomial(const BiasPolynomial& p) {
    const BiasPolynomial canon = canonicalize(p);
    std::string out = "{\"terms\":[";
    bool first = true;
    for (const Term& t : canon.terms) {
        if (!first) out += ',';
        first = false;
        out += "{\"coeff\":" + fmt17(t.coeff);
        out += ",\"alice\":\"" + escape(t.alice.letters) + "\"";
        out += ",\"bob\":\"" + escape(t.bob.letters) + "\"}";
    }
    out += "]}";
    return out;
}

} // namespace biquad
