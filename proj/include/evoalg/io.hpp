#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "evoalg/algebra.hpp"
#include "evoalg/classify.hpp"
#include "evoalg/graph.hpp"
#include "evoalg/tensor.hpp"

namespace evoalg {

// Text format:
//   line 1    field header (`Q`, `F 5`, `F 2^2 t^2+t+1`)
//   line 2    dimension n
//   n lines   rows of the structure matrix, whitespace separated
// Blank lines are ignored. Throws ParseError.
EvolutionAlgebra parse_algebra(std::string_view text);
EvolutionAlgebra read_algebra_file(const std::string& path);
std::string format_algebra(const EvolutionAlgebra& a);

nlohmann::json to_json(const EvolutionAlgebra& a);
nlohmann::json to_json(const Vector& v);
nlohmann::json to_json(const TypeTag& tag);
nlohmann::json to_json(const DiGraph& g);
nlohmann::json to_json(const CensusReport& r);
nlohmann::json to_json(const DecompositionReport& r);
nlohmann::json to_json(const QuotientReport& r);

} // namespace evoalg
