#include "matrix_document.hpp"

#include <json.hpp>

#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>

namespace qtexp::cli {

namespace {

using nlohmann::json;

int infer_dimension(std::size_t scalars, bool complex)
{
    for (int n : {2, 3, 4}) {
        const std::size_t want = static_cast<std::size_t>(n * n) * (complex ? 2 : 1);
        if (scalars == want) {
            return n;
        }
    }
    if (complex) {
        throw ParseError("expected 8, 18 or 32 scalars (re,im pairs of a complex matrix), found "
            + std::to_string(scalars));
    }
    throw ParseError("expected 4, 9 or 16 entries, found " + std::to_string(scalars));
}

double parse_scalar(std::string_view token)
{
    double value = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (!token.empty() && *first == '+') {
        ++first;
    }
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw ParseError("not a number: '" + std::string(token) + "'");
    }
    if (!std::isfinite(value)) {
        throw ParseError("entry is not finite: '" + std::string(token) + "'");
    }
    return value;
}

MatrixDocument parse_plain(std::string_view text)
{
    std::vector<std::string> tokens;
    std::istringstream lines{std::string(text)};
    std::string line;
    while (std::getline(lines, line)) {
        line = line.substr(0, line.find('#'));
        std::istringstream words(line);
        std::string word;
        while (words >> word) {
            // Allow commas and brackets as decoration.
            std::string cleaned;
            for (char c : word) {
                if (c == ',' || c == '[' || c == ']' || c == ';') {
                    if (!cleaned.empty()) {
                        tokens.push_back(cleaned);
                        cleaned.clear();
                    }
                } else {
                    cleaned += c;
                }
            }
            if (!cleaned.empty()) {
                tokens.push_back(cleaned);
            }
        }
    }
    MatrixDocument doc;
    std::size_t start = 0;
    if (!tokens.empty() && (tokens[0] == "complex" || tokens[0] == "real")) {
        doc.complex = tokens[0] == "complex";
        start = 1;
    }
    std::vector<double> scalars;
    for (std::size_t k = start; k < tokens.size(); ++k) {
        scalars.push_back(parse_scalar(tokens[k]));
    }
    doc.n = infer_dimension(scalars.size(), doc.complex);
    for (std::size_t k = 0; k < scalars.size(); k += doc.complex ? 2 : 1) {
        doc.entries.emplace_back(scalars[k], doc.complex ? scalars[k + 1] : 0.0);
    }
    return doc;
}

MatrixDocument parse_json(std::string_view text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) {
        throw ParseError("JSON document must be an object");
    }
    MatrixDocument doc;
    try {
        doc.n = j.at("n").get<int>();
        const std::string kind = j.value("kind", "real");
        if (kind != "real" && kind != "complex") {
            throw ParseError("kind must be \"real\" or \"complex\", got \"" + kind + "\"");
        }
        doc.complex = kind == "complex";
        doc.label = j.value("label", "");
        if (j.contains("route")) {
            doc.route = j.at("route").get<std::string>();
        }
        const auto& entries = j.at("entries");
        if (!entries.is_array()) {
            throw ParseError("entries must be an array");
        }
        std::vector<double> scalars;
        for (const auto& e : entries) {
            if (!e.is_number()) {
                throw ParseError("entries must be numbers");
            }
            scalars.push_back(e.get<double>());
        }
        if (doc.n < 2 || doc.n > 4) {
            throw ParseError("n must be 2, 3 or 4, got " + std::to_string(doc.n));
        }
        const std::size_t want = static_cast<std::size_t>(doc.n * doc.n) * (doc.complex ? 2 : 1);
        if (scalars.size() != want) {
            throw ParseError("entry count " + std::to_string(scalars.size()) + " does not match n = "
                + std::to_string(doc.n) + " (" + kind + " needs " + std::to_string(want) + ")");
        }
        for (std::size_t k = 0; k < scalars.size(); k += doc.complex ? 2 : 1) {
            doc.entries.emplace_back(scalars[k], doc.complex ? scalars[k + 1] : 0.0);
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed matrix document: ") + e.what());
    }
    return doc;
}

} // namespace

MatrixDocument parse_document(std::string_view text)
{
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') {
        return parse_json(text);
    }
    return parse_plain(text);
}

std::string to_json(const MatrixDocument& doc)
{
    json j;
    j["n"] = doc.n;
    j["kind"] = doc.complex ? "complex" : "real";
    json entries = json::array();
    for (const auto& v : doc.entries) {
        entries.push_back(v.real());
        if (doc.complex) {
            entries.push_back(v.imag());
        }
    }
    j["entries"] = entries;
    if (!doc.label.empty()) {
        j["label"] = doc.label;
    }
    if (doc.route) {
        j["route"] = *doc.route;
    }
    return j.dump(2);
}

} // namespace qtexp::cli
