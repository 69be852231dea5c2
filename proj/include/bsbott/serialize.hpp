#pragma once

#include <bsbott/core.hpp>

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace bsbott {

// Text forms (1-based):
//   word      "6,3,8,3,6,2,9" or "6 3 8 3 6 2 9"
//   assembly  "((6|2 4),(1 5),(3|7))"
//   matrix    one row per line, entries separated by whitespace

std::string format_word(const Word& w);
/// Parses a comma/space separated word. The bound defaults to the largest letter.
Word parse_word(std::string_view text, std::optional<int> bound = std::nullopt);

std::string format_partition(const OrderedPartition& p);
std::string format_assembly(const Assembly& a);
Assembly parse_assembly(std::string_view text, int m, int n);

std::string format_matrix(const BottMatrix& b);
/// Accepts the JSON schema or whitespace-separated rows.
BottMatrix parse_matrix(std::string_view text);

nlohmann::json to_json(const Word& w);
nlohmann::json to_json(const Assembly& a);
nlohmann::json to_json(const BottMatrix& b);
/// Integers beyond 53 bits are written as decimal strings.
nlohmann::json integer_to_json(const Integer& x);

Word word_from_json(const nlohmann::json& j);
Assembly assembly_from_json(const nlohmann::json& j);
BottMatrix bott_matrix_from_json(const nlohmann::json& j);

}  // namespace bsbott
