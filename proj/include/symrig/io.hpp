#ifndef SYMRIG_IO_HPP
#define SYMRIG_IO_HPP

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "symrig/core.hpp"
#include "symrig/rigidity.hpp"
#include "symrig/symmetric.hpp"

namespace symrig {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// On-disk description of a complex, with optional involution, exact
/// coordinates and point group.
struct ComplexDocument {
    int k = -1;
    std::vector<std::vector<VertexId>> facets;
    std::optional<std::vector<int>> multiplicities;
    std::optional<std::vector<std::pair<VertexId, VertexId>>> involution;
    std::optional<std::map<VertexId, std::vector<std::string>>> coordinates;
    std::optional<PointGroup> group;

    bool operator==(const ComplexDocument&) const = default;
};

ComplexDocument parse_document(const nlohmann::json& j);
ComplexDocument load_document(const std::string& path);
nlohmann::json to_json(const ComplexDocument& doc);

/// "3", "-4/7"
Rational parse_rational(const std::string& s);
std::string rational_str(const Rational& r);

MultiComplex to_complex(const ComplexDocument& doc);
std::optional<Involution> to_involution(const ComplexDocument& doc);
/// Requires coordinates; d inferred from the first point.
Framework to_framework(const ComplexDocument& doc);

ComplexDocument from_complex(const MultiComplex& S,
                             const Involution* sigma = nullptr);
ComplexDocument from_framework(const Framework& F,
                               const Involution* sigma = nullptr,
                               const PointGroup* group = nullptr);

}  // namespace symrig

#endif
