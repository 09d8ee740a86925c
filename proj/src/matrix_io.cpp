#include "powmat/matrix_io.hpp"

#include <sstream>
#include <vector>

#include <json.hpp>

#include "powmat/errors.hpp"

namespace powmat {

namespace {

Matrix from_rows(const std::vector<std::vector<Rational>>& rows) {
    const std::size_t n = rows.size();
    if (n == 0) throw dimension_error("matrix input is empty");
    std::vector<Rational> flat;
    flat.reserve(n * n);
    for (const auto& row : rows) {
        if (row.size() != n)
            throw dimension_error("matrix input is not square: " + std::to_string(n) +
                                  " rows but a row of length " + std::to_string(row.size()));
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return Matrix(static_cast<int>(n), std::move(flat));
}

Rational entry_from_json(const nlohmann::json& v) {
    if (v.is_number_unsigned()) return Rational(mpz_class(v.get<unsigned long>()));
    if (v.is_number_integer()) return Rational(mpz_class(v.get<long>()));
    if (v.is_string()) return Rational::from_string(v.get<std::string>());
    if (v.is_number_float())
        throw parse_error("matrix entries must be exact: use integers or \"p/q\" strings");
    throw parse_error("matrix entries must be integers or \"p/q\" strings");
}

Matrix parse_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("entries"))
        throw parse_error("matrix JSON must be an object with an \"entries\" field");
    const nlohmann::json& entries = doc["entries"];
    if (!entries.is_array())
        throw parse_error("\"entries\" must be an array of rows");
    std::vector<std::vector<Rational>> rows;
    for (const auto& row : entries) {
        if (!row.is_array()) throw parse_error("each matrix row must be an array");
        std::vector<Rational> r;
        for (const auto& v : row) r.push_back(entry_from_json(v));
        rows.push_back(std::move(r));
    }
    return from_rows(rows);
}

Matrix parse_plain(const std::string& text) {
    std::vector<std::vector<Rational>> rows;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        std::istringstream tokens(line);
        std::vector<Rational> row;
        std::string tok;
        while (tokens >> tok) row.push_back(Rational::from_string(tok));
        if (!row.empty()) rows.push_back(std::move(row));
    }
    return from_rows(rows);
}

}  // namespace

Matrix parse_matrix_input(const std::string& text) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        if (c == '{' || c == '[') return parse_json(text);
        break;
    }
    return parse_plain(text);
}

}  // namespace powmat
