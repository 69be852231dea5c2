#include <bsbott/serialize.hpp>

#include <cctype>
#include <charconv>
#include <sstream>

namespace bsbott {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

long long parse_ll(std::string_view token) {
  long long v = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) parse_fail("not an integer: '" + std::string(token) + "'");
  return v;
}

std::vector<std::string_view> split_tokens(std::string_view text, std::string_view seps) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && seps.find(text[i]) != std::string_view::npos) ++i;
    std::size_t j = i;
    while (j < text.size() && seps.find(text[j]) == std::string_view::npos) ++j;
    if (j > i) out.push_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_number_unsigned()) return Integer(j.get<unsigned long long>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    try {
      return Integer(s);
    } catch (const std::exception&) {
      parse_fail("not an integer: '" + s + "'");
    }
  }
  parse_fail("expected an integer");
}

}  // namespace

std::string format_word(const Word& w) {
  std::string out;
  for (std::size_t t = 0; t < w.size(); ++t) {
    if (t) out += ',';
    out += std::to_string(w[t]);
  }
  return out;
}

Word parse_word(std::string_view text, std::optional<int> bound) {
  std::vector<long long> raw;
  for (auto token : split_tokens(text, ", \t\n")) raw.push_back(parse_ll(token));
  if (raw.empty()) throw Error(ErrorCode::EmptyWord, "word has no letters");
  long long n = bound.value_or(0);
  if (!bound) {
    for (long long x : raw) n = std::max(n, x);
  }
  return validate_word(raw, n);
}

std::string format_partition(const OrderedPartition& p) {
  std::string out = "(";
  for (std::size_t b = 0; b < p.size(); ++b) {
    if (b) out += '|';
    for (std::size_t i = 0; i < p[b].size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(p[b][i] + 1);
    }
  }
  out += ')';
  return out;
}

std::string format_assembly(const Assembly& a) {
  std::string out = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ',';
    out += format_partition(a[i]);
  }
  out += ')';
  return out;
}

Assembly parse_assembly(std::string_view text, int m, int n) {
  // Grammar: '(' partition (',' partition)* ')' ; partition: '(' block ('|' block)* ')'
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c) {
      parse_fail(std::string("expected '") + c + "' at offset " + std::to_string(pos));
    }
    ++pos;
  };
  auto peek = [&]() -> char {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  };

  RawAssembly raw;
  expect('(');
  while (true) {
    expect('(');
    std::vector<std::vector<int>> partition(1);
    while (true) {
      const char c = peek();
      if (c == '|') {
        ++pos;
        partition.emplace_back();
      } else if (c == ')') {
        ++pos;
        break;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t end = pos;
        while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
        partition.back().push_back(static_cast<int>(parse_ll(text.substr(pos, end - pos))));
        pos = end;
      } else {
        parse_fail("unexpected character at offset " + std::to_string(pos));
      }
    }
    raw.push_back(std::move(partition));
    const char c = peek();
    if (c == ',') {
      ++pos;
      continue;
    }
    expect(')');
    break;
  }
  skip_ws();
  if (pos != text.size()) parse_fail("trailing characters in assembly");
  return validate_assembly(raw, m, n);
}

std::string format_matrix(const BottMatrix& b) {
  std::vector<std::string> cells;
  std::size_t width = 0;
  for (Eigen::Index j = 0; j < b.size(); ++j) {
    for (Eigen::Index k = 0; k < b.size(); ++k) {
      cells.push_back(b(j, k).str());
      width = std::max(width, cells.back().size());
    }
  }
  std::string out;
  std::size_t c = 0;
  for (Eigen::Index j = 0; j < b.size(); ++j) {
    for (Eigen::Index k = 0; k < b.size(); ++k, ++c) {
      if (k) out += ' ';
      out += std::string(width - cells[c].size(), ' ') + cells[c];
    }
    out += '\n';
  }
  return out;
}

BottMatrix parse_matrix(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      parse_fail(e.what());
    }
    return bott_matrix_from_json(j);
  }
  std::vector<std::vector<Integer>> rows;
  for (auto line : split_tokens(text, "\n\r")) {
    std::vector<Integer> row;
    for (auto token : split_tokens(line, " \t,")) {
      try {
        row.emplace_back(std::string(token));
      } catch (const std::exception&) {
        parse_fail("not an integer: '" + std::string(token) + "'");
      }
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  const auto m = static_cast<Eigen::Index>(rows.size());
  IntegerMatrix entries(m, m);
  for (Eigen::Index j = 0; j < m; ++j) {
    const auto& row = rows[static_cast<std::size_t>(j)];
    if (static_cast<Eigen::Index>(row.size()) != m) {
      throw Error(ErrorCode::NotABottMatrix, "row " + std::to_string(j + 1) + " has wrong length");
    }
    for (Eigen::Index k = 0; k < m; ++k) entries(j, k) = row[static_cast<std::size_t>(k)];
  }
  return BottMatrix(std::move(entries));
}

// ---------------------------------------------------------------------------

nlohmann::json integer_to_json(const Integer& x) {
  constexpr long long kLimit = (1LL << 53);
  if (x < kLimit && x > -kLimit) return x.convert_to<long long>();
  return x.str();
}

nlohmann::json to_json(const Word& w) { return {{"letters", w.letters()}, {"bound", w.bound()}}; }

nlohmann::json to_json(const Assembly& a) {
  auto partitions = nlohmann::json::array();
  for (const auto& p : a.partitions()) {
    auto blocks = nlohmann::json::array();
    for (const auto& block : p.blocks()) {
      auto items = nlohmann::json::array();
      for (int x : block) items.push_back(x + 1);
      blocks.push_back(std::move(items));
    }
    partitions.push_back(std::move(blocks));
  }
  return {{"partitions", std::move(partitions)}, {"m", a.ground_size()}, {"n", a.bound()}};
}

nlohmann::json to_json(const BottMatrix& b) {
  auto rows = nlohmann::json::array();
  for (Eigen::Index j = 0; j < b.size(); ++j) {
    auto row = nlohmann::json::array();
    for (Eigen::Index k = 0; k < b.size(); ++k) row.push_back(integer_to_json(b(j, k)));
    rows.push_back(std::move(row));
  }
  return {{"size", b.size()}, {"rows", std::move(rows)}};
}

Word word_from_json(const nlohmann::json& j) {
  try {
    return validate_word(j.at("letters").get<std::vector<long long>>(), j.at("bound").get<long long>());
  } catch (const nlohmann::json::exception& e) {
    parse_fail(e.what());
  }
}

Assembly assembly_from_json(const nlohmann::json& j) {
  try {
    return validate_assembly(j.at("partitions").get<RawAssembly>(), j.at("m").get<int>(),
                             j.at("n").get<int>());
  } catch (const nlohmann::json::exception& e) {
    parse_fail(e.what());
  }
}

BottMatrix bott_matrix_from_json(const nlohmann::json& j) {
  try {
    const auto& rows = j.at("rows");
    const auto m = static_cast<Eigen::Index>(rows.size());
    if (j.contains("size") && j.at("size").get<Eigen::Index>() != m) {
      throw Error(ErrorCode::NotABottMatrix, "size does not match row count");
    }
    IntegerMatrix entries(m, m);
    for (Eigen::Index r = 0; r < m; ++r) {
      const auto& row = rows.at(static_cast<std::size_t>(r));
      if (static_cast<Eigen::Index>(row.size()) != m) {
        throw Error(ErrorCode::NotABottMatrix, "row " + std::to_string(r + 1) + " has wrong length");
      }
      for (Eigen::Index k = 0; k < m; ++k) entries(r, k) = integer_from_json(row.at(static_cast<std::size_t>(k)));
    }
    return BottMatrix(std::move(entries));
  } catch (const nlohmann::json::exception& e) {
    parse_fail(e.what());
  }
}

}  // namespace bsbott
