#pragma once
// JSON wire format: scalars as "p/q" strings, matrices as arrays of rows,
// subspaces as {"n": 4, "basis": [matrix, ...]}, elements as
// {"n": 4, "matrix": matrix} or a bare matrix.

#include "redn/lie.hpp"

#include "json.hpp"

#include <stdexcept>
#include <string>

namespace redn {

// Malformed input; where is a JSON path like $.basis[2][0][1].
struct InputError : std::runtime_error {
    std::string where;
    InputError(std::string where_, const std::string& what)
        : std::runtime_error(where_ + ": " + what), where(std::move(where_)) {}
};

using Json = nlohmann::json;

Json to_json(const Rational& q);
Json to_json(const Mat& m);
Json to_json(const LieSubspace& a);

Rational rational_from_json(const Json& j, const std::string& where);
Mat mat_from_json(const Json& j, const std::string& where);
Mat element_from_json(const Json& j, int n, const std::string& where);   // n = 0: any size
LieSubspace subspace_from_json(const Json& j, const std::string& where = "$");

Json read_json_file(const std::string& path);

}  // namespace redn
