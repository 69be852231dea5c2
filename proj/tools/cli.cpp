#include "cli.hpp"

#include <bsbott/count.hpp>
#include <bsbott/equiv.hpp>
#include <bsbott/fan.hpp>
#include <bsbott/maps.hpp>
#include <bsbott/matops.hpp>
#include <bsbott/serialize.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace bsbott::cli {

namespace {

using nlohmann::json;

struct Globals {
  bool json = false;
  int threads = 1;
  std::optional<std::size_t> cap;
};

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ' ';
    out += p;
  }
  return out;
}

std::optional<int> optional_int(const CLI::Option* opt, int value) {
  if (opt->count() == 0) return std::nullopt;
  return value;
}

std::size_t parse_cap(const std::string& text, const std::string& origin) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != text.size() || v == 0 || text.front() == '-') {
    throw Error(ErrorCode::ParseError, origin + " must be a positive integer, got '" + text + "'");
  }
  return static_cast<std::size_t>(v);
}

std::optional<std::size_t> resolve_cap(const CLI::Option* opt, const std::string& flag_value) {
  if (opt->count() > 0) return parse_cap(flag_value, "--cap");
  if (const char* env = std::getenv(kCapEnv); env != nullptr && *env != '\0') return parse_cap(env, kCapEnv);
  return std::nullopt;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// Matrix inputs are files; anything else is read as a word.
BottMatrix matrix_or_word(const std::string& arg, std::optional<int> n) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return parse_matrix(read_file(arg));
  return bott_matrix(parse_word(arg, n));
}

json positions_json(const std::vector<int>& positions) {
  json out = json::array();
  for (int p : positions) out.push_back(p + 1);
  return out;
}

void write_table(std::ostream& out, const Globals& g, bool csv, int max_n, int max_m,
                 const std::vector<std::vector<std::string>>& rows) {
  if (g.json) {
    json j;
    j["max_n"] = max_n;
    j["max_m"] = max_m;
    j["rows"] = json::array();
    for (const auto& row : rows) j["rows"].push_back(row);
    out << j.dump() << '\n';
    return;
  }
  if (csv) {
    out << "m";
    for (int n = 1; n <= max_n; ++n) out << ',' << n;
    out << '\n';
    for (int m = 1; m <= max_m; ++m) {
      out << m;
      for (const auto& cell : rows[static_cast<std::size_t>(m - 1)]) out << ',' << cell;
      out << '\n';
    }
    return;
  }
  std::size_t width = std::to_string(max_n).size();
  for (const auto& row : rows) {
    for (const auto& cell : row) width = std::max(width, cell.size());
  }
  const std::size_t lead = std::max<std::size_t>(3, std::to_string(max_m).size());
  const int w = static_cast<int>(width) + 1;
  out << std::left << std::setw(static_cast<int>(lead)) << "m\\n" << std::right;
  for (int n = 1; n <= max_n; ++n) out << std::setw(w) << n;
  out << '\n';
  for (int m = 1; m <= max_m; ++m) {
    out << std::left << std::setw(static_cast<int>(lead)) << m << std::right;
    for (const auto& cell : rows[static_cast<std::size_t>(m - 1)]) out << std::setw(w) << cell;
    out << '\n';
  }
}

int write_reports(std::ostream& out, const Globals& g, const std::vector<Report>& reports) {
  bool ok = true;
  json j = json::array();
  for (const auto& r : reports) {
    ok = ok && r.passed();
    if (g.json) {
      j.push_back({{"name", r.name},
                   {"passed", r.passed()},
                   {"checked", r.checked},
                   {"failure_count", r.failure_count},
                   {"failures", r.failures}});
      continue;
    }
    out << (r.passed() ? "PASS " : "FAIL ") << r.name << " checked=" << r.checked;
    if (!r.passed()) out << " failures=" << r.failure_count;
    out << '\n';
    for (const auto& f : r.failures) out << "  " << f << '\n';
  }
  if (g.json) out << j.dump() << '\n';
  return ok ? kOk : kInternal;
}

/// Folds per-item reports into one, keeping the first failures.
void absorb(Report& total, const Report& part) {
  total.checked += part.checked;
  for (const auto& f : part.failures) total.fail(part.name + ": " + f);
  total.failure_count += part.failure_count - part.failures.size();
}

CountStrategy count_strategy(const std::string& name) {
  if (name == "words") return CountStrategy::Words;
  if (name == "assemblies") return CountStrategy::Assemblies;
  return CountStrategy::Auto;
}

Integer count_value(int n, int m, const std::string& strategy, int threads) {
  if (strategy == "gf") return gf_coefficients(m, n).at(n, m);
  return count_b(n, m, count_strategy(strategy), threads);
}

void write_error(std::ostream& err, bool as_json, std::string_view code, std::string_view message) {
  if (as_json) {
    err << json{{"error", {{"code", code}, {"message", message}}}}.dump() << '\n';
  } else {
    err << "error: " << code << ": " << message << '\n';
  }
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::OrbitCapExceeded:
      return kCapExceeded;
    case ErrorCode::InternalAssertion:
      return kInternal;
    default:
      return kValidation;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Globals g;
  for (const auto& a : args) {
    if (a == "--json") g.json = true;
  }

  CLI::App app{"Bott manifolds of Bott-Samelson type: matrices, assemblies, isomorphism and counting"};
  app.name("bsbott");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", g.json, "JSON output");
  app.add_option("--threads", g.threads, "worker threads for word enumeration")
      ->check(CLI::PositiveNumber);
  std::string cap_text;
  auto* cap_opt = app.add_option("--cap", cap_text, "orbit size cap (default from " + std::string(kCapEnv) +
                                                        " or a size bound of the search space)");

  int n = 0;
  int m = 0;
  std::vector<std::string> word_parts;
  std::string second_word;
  std::string file_arg;
  std::string strategy = "auto";
  bool oracle = false;
  bool csv = false;
  bool matrices = false;
  bool raw = false;
  std::string relation = "approx";
  int max_n = 0;
  int max_m = 0;

  auto add_n = [&](CLI::App* sub, const std::string& help) { return sub->add_option("--n", n, help); };

  auto* alpha = app.add_subcommand("alpha", "assembly of a word");
  alpha->add_option("word", word_parts, "letters, comma or space separated")->required();
  auto* alpha_n = add_n(alpha, "bound (default: largest letter)");

  auto* matrix = app.add_subcommand("matrix", "Bott matrix of a word");
  matrix->add_option("word", word_parts, "letters")->required();
  auto* matrix_n = add_n(matrix, "bound (default: largest letter)");

  auto* recover = app.add_subcommand("recover", "assembly of a BS-type matrix, up to block reversal");
  recover->add_option("matrix-file", file_arg, "JSON or whitespace rows")->required();
  auto* recover_n = add_n(recover, "bound (default: 2m-1, which admits every BS-type matrix of size m)");

  auto* iso = app.add_subcommand("iso", "toric isomorphism of two words");
  iso->add_option("word1", file_arg, "first word")->required();
  iso->add_option("word2", second_word, "second word")->required();
  iso->add_flag("--oracle", oracle, "cross-check by matrix orbit search");
  auto* iso_n = add_n(iso, "bound (default: largest letter of either word)");

  auto* decompose_cmd = app.add_subcommand("decompose", "indecomposable factors of a word");
  decompose_cmd->add_option("word", word_parts, "letters")->required();
  auto* decompose_n = add_n(decompose_cmd, "bound (default: largest letter)");

  auto* orbit = app.add_subcommand("orbit", "isomorphism orbit of a word's assembly");
  orbit->add_option("word", word_parts, "letters")->required();
  orbit->add_flag("--matrices", matrices, "list the Bott matrix orbit instead");
  auto* orbit_n = add_n(orbit, "bound (default: largest letter)");

  auto* classify = app.add_subcommand("classify", "classes of AOP(n,m) with representatives");
  add_n(classify, "bound")->required();
  classify->add_option("--m", m, "word length")->required();
  classify->add_option("--relation", relation, "approx (isomorphism) or sim (block reversal)")
      ->check(CLI::IsMember({"approx", "sim"}));

  auto* count = app.add_subcommand("count", "number b(n,m) of BS-type Bott matrices");
  add_n(count, "bound")->required();
  count->add_option("--m", m, "word length")->required();
  count->add_option("--strategy", strategy, "auto, words, assemblies or gf")
      ->check(CLI::IsMember({"auto", "words", "assemblies", "gf"}));

  auto* table = app.add_subcommand("table", "b(n,m) with rows m and columns n");
  table->add_option("--max-n", max_n, "largest n")->required()->check(CLI::PositiveNumber);
  table->add_option("--max-m", max_m, "largest m")->required()->check(CLI::PositiveNumber);
  table->add_option("--strategy", strategy, "auto, words, assemblies or gf")
      ->check(CLI::IsMember({"auto", "words", "assemblies", "gf"}));
  table->add_flag("--csv", csv, "comma separated output");

  auto* gf = app.add_subcommand("gf", "coefficients m! [x^m y^n] of the generating function");
  gf->add_option("--max-x", max_m, "largest x degree")->required()->check(CLI::PositiveNumber);
  gf->add_option("--max-y", max_n, "largest y degree")->required()->check(CLI::PositiveNumber);
  gf->add_flag("--raw", raw, "unscaled rational coefficients");
  gf->add_flag("--csv", csv, "comma separated output");

  auto* fan = app.add_subcommand("fan", "fan of a Bott manifold");
  fan->add_option("input", file_arg, "word or matrix file")->required();
  fan->add_flag("--csv", csv, "rays as CSV");
  auto* fan_n = add_n(fan, "bound for a word (default: largest letter)");

  auto* check = app.add_subcommand("check", "exhaustive property checks");
  check->require_subcommand(1);
  auto* lemma52 = check->add_subcommand("lemma52", "basis changes of every matrix in B(n,m)");
  lemma52->add_option("--n", n, "bound")->default_val(3);
  lemma52->add_option("--m", m, "size")->default_val(3);
  auto* stabilization = check->add_subcommand("stabilization", "B(n,m) = B(2m-1,m) for n up to 2m+2");
  stabilization->add_option("--max-m", max_m, "largest m")->default_val(4);
  auto* schubert = check->add_subcommand("schubert", "isomorphism of Schubert words via permutations");
  schubert->add_option("--max-n", max_n, "largest n")->default_val(4);
  auto* prop43 = check->add_subcommand("prop43", "F(a) = F(b) iff a ~ b");
  prop43->add_option("--max-n", max_n, "largest n")->default_val(5);
  prop43->add_option("--max-m", max_m, "largest m")->default_val(4);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    write_error(err, g.json, "UsageError", e.what());
    return kValidation;
  }

  try {
    g.cap = resolve_cap(cap_opt, cap_text);
    const std::string word_text = join(word_parts);

    if (alpha->parsed()) {
      const Assembly a = assembly_of(parse_word(word_text, optional_int(alpha_n, n)));
      out << (g.json ? to_json(a).dump() : format_assembly(a)) << '\n';
    } else if (matrix->parsed()) {
      const BottMatrix b = bott_matrix(parse_word(word_text, optional_int(matrix_n, n)));
      if (g.json) out << to_json(b).dump() << '\n';
      else out << format_matrix(b);
    } else if (recover->parsed()) {
      const BottMatrix b = parse_matrix(read_file(file_arg));
      const int bound = recover_n->count() ? n : static_cast<int>(2 * b.size() - 1);
      const Assembly a = recover_assembly(b, bound);
      out << (g.json ? to_json(a).dump() : format_assembly(a)) << '\n';
    } else if (iso->parsed()) {
      const Word probe1 = parse_word(file_arg);
      const Word probe2 = parse_word(second_word);
      const int bound = iso_n->count() ? n : std::max(probe1.max_letter(), probe2.max_letter());
      const Word w1 = parse_word(file_arg, bound);
      const Word w2 = parse_word(second_word, bound);
      const bool result = isomorphic_words(w1, w2, g.cap);
      std::optional<bool> cross;
      if (oracle) {
        cross = matrix_isomorphic(bott_matrix(w1), bott_matrix(w2), g.cap);
        if (*cross != result) {
          internal_assertion("assembly test says " + std::string(result ? "true" : "false") +
                             " but matrix orbit search says " + (*cross ? "true" : "false"));
        }
      }
      if (g.json) {
        json j{{"isomorphic", result}};
        if (cross) j["oracle"] = *cross;
        out << j.dump() << '\n';
      } else {
        out << (result ? "true" : "false") << '\n';
        if (cross) out << "matrix orbit: " << (*cross ? "true" : "false") << '\n';
      }
    } else if (decompose_cmd->parsed()) {
      const Word w = parse_word(word_text, optional_int(decompose_n, n));
      const auto factors = decompose(w);
      if (g.json) {
        json j = json::array();
        for (const auto& f : factors) {
          j.push_back({{"assembly", to_json(f.assembly)},
                       {"positions", positions_json(f.positions)},
                       {"word", to_json(f.witness)}});
        }
        out << j.dump() << '\n';
      } else {
        for (const auto& f : factors) {
          out << format_assembly(f.assembly) << " positions";
          for (int p : f.positions) out << ' ' << p + 1;
          out << " word " << format_word(f.witness) << '\n';
        }
      }
    } else if (orbit->parsed()) {
      const Word w = parse_word(word_text, optional_int(orbit_n, n));
      json j = json::array();
      if (matrices) {
        for (const auto& b : matrix_orbit(bott_matrix(w), g.cap)) {
          if (g.json) j.push_back(to_json(b));
          else out << format_matrix(b) << '\n';
        }
      } else {
        for (const auto& a : approx_orbit(assembly_of(w), g.cap)) {
          if (g.json) j.push_back(to_json(a));
          else out << format_assembly(a) << '\n';
        }
      }
      if (g.json) out << j.dump() << '\n';
    } else if (classify->parsed()) {
      const Relation rel = relation == "sim" ? Relation::Sim : Relation::Approx;
      const auto classes = classify_assemblies(n, m, rel, g.cap);
      if (g.json) {
        json list = json::array();
        for (const auto& c : classes) {
          list.push_back({{"representative", to_json(c.representative)},
                          {"text", format_assembly(c.representative)},
                          {"members", c.members}});
        }
        out << json{{"n", n}, {"m", m}, {"relation", relation}, {"count", classes.size()}, {"classes", list}}
                   .dump()
            << '\n';
      } else {
        for (const auto& c : classes) out << format_assembly(c.representative) << ' ' << c.members << '\n';
      }
    } else if (count->parsed()) {
      const Integer value = count_value(n, m, strategy, g.threads);
      out << (g.json ? json{{"n", n}, {"m", m}, {"b", integer_to_json(value)}}.dump() : value.str()) << '\n';
    } else if (table->parsed()) {
      std::vector<std::vector<std::string>> rows;
      std::optional<GfTable> series;
      if (strategy == "gf") series = gf_coefficients(max_m, max_n);
      for (int mm = 1; mm <= max_m; ++mm) {
        auto& row = rows.emplace_back();
        for (int nn = 1; nn <= max_n; ++nn) {
          row.push_back(series ? series->at(nn, mm).str()
                               : count_b(nn, mm, count_strategy(strategy), g.threads).str());
        }
      }
      write_table(out, g, csv, max_n, max_m, rows);
    } else if (gf->parsed()) {
      std::vector<std::vector<std::string>> rows;
      if (raw) {
        const Series2 s = generating_function(max_m, max_n);
        for (int mm = 1; mm <= max_m; ++mm) {
          auto& row = rows.emplace_back();
          for (int nn = 1; nn <= max_n; ++nn) row.push_back(s.coeff(mm, nn).str());
        }
      } else {
        const GfTable t = gf_coefficients(max_m, max_n);
        for (int mm = 1; mm <= max_m; ++mm) {
          auto& row = rows.emplace_back();
          for (int nn = 1; nn <= max_n; ++nn) row.push_back(t.at(nn, mm).str());
        }
      }
      write_table(out, g, csv, max_n, max_m, rows);
    } else if (fan->parsed()) {
      const Fan f = fan_of(matrix_or_word(file_arg, optional_int(fan_n, n)));
      if (g.json) {
        out << fan_to_json(f).dump() << '\n';
      } else if (csv) {
        out << fan_to_csv(f);
      } else {
        for (Eigen::Index r = 0; r < f.rays.cols(); ++r) {
          out << f.label(r);
          for (Eigen::Index i = 0; i < f.rays.rows(); ++i) out << ' ' << f.rays(i, r).str();
          out << '\n';
        }
        for (const auto& cone : f.maximal_cones) {
          out << "cone";
          for (auto r : cone) out << ' ' << f.label(r);
          out << '\n';
        }
        out << "smooth " << (is_smooth(f) ? "true" : "false") << '\n';
      }
    } else if (lemma52->parsed()) {
      Report total("basis-change n=" + std::to_string(n) + " m=" + std::to_string(m));
      for (const auto& b : bs_matrices(n, m, g.threads)) absorb(total, basis_change_check(b, n));
      return write_reports(out, g, {total});
    } else if (stabilization->parsed()) {
      std::vector<Report> reports;
      for (int mm = 1; mm <= max_m; ++mm) reports.push_back(stabilization_check(mm));
      return write_reports(out, g, reports);
    } else if (schubert->parsed()) {
      std::vector<Report> reports;
      for (int nn = 1; nn <= max_n; ++nn) reports.push_back(schubert_iso_check(nn));
      return write_reports(out, g, reports);
    } else if (prop43->parsed()) {
      std::vector<Report> reports;
      for (int nn = 1; nn <= max_n; ++nn) {
        for (int mm = 1; mm <= max_m; ++mm) reports.push_back(fiber_check(nn, mm));
      }
      return write_reports(out, g, reports);
    }
    return kOk;
  } catch (const Error& e) {
    const std::string_view name = code_name(e.code());
    std::string_view message = e.what();
    if (message.starts_with(name) && message.substr(name.size()).starts_with(": ")) {
      message.remove_prefix(name.size() + 2);
    }
    write_error(err, g.json, name, message);
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    write_error(err, g.json, "InternalAssertion", e.what());
    return kInternal;
  }
}

}  // namespace bsbott::cli
