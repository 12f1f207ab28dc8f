#include "cli_app.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <memory>
#include <ostream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace bqroot::cli {

namespace {

using nlohmann::json;

struct SolutionDeleter {
  void operator()(bqr_solution_set* s) const { bqr_solution_free(s); }
};
struct ReportDeleter {
  void operator()(bqr_report* r) const { bqr_report_free(r); }
};
using SolutionPtr = std::unique_ptr<bqr_solution_set, SolutionDeleter>;
using ReportPtr = std::unique_ptr<bqr_report, ReportDeleter>;

class ApiError : public std::runtime_error {
 public:
  ApiError(const char* what, bqr_status status)
      : std::runtime_error(std::string(what) + ": " + bqr_status_string(status) + " (" + bqr_last_error() + ")") {}
};

void expect_ok(bqr_status status, const char* what) {
  if (status != BQR_OK) throw ApiError(what, status);
}

// Parses a double at text[pos...], advancing pos. An optional leading '+'
// is accepted.
std::optional<double> read_number(std::string_view text, std::size_t& pos) {
  std::size_t start = pos;
  if (start < text.size() && text[start] == '+') ++start;
  if (start < text.size() && text[start] == '+') return std::nullopt;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + text.size(), value);
  if (ec != std::errc{}) return std::nullopt;
  pos = static_cast<std::size_t>(ptr - text.data());
  return value;
}

std::string_view trim(std::string_view s, std::size_t& offset) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
    ++offset;
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_degree(std::string_view text, std::size_t offset) {
  std::size_t local = 0;
  text = trim(text, local);
  int n = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError("expected an integer n", offset + local);
  }
  return n;
}

ParsedInput finish(ParsedInput parsed, std::optional<int> n_override, bool has_n) {
  if (n_override) {
    parsed.n = *n_override;
  } else if (!has_n) {
    throw ParseError("missing n", 0);
  }
  if (parsed.n < 2) throw InputDomainError("n must be >= 2, got " + std::to_string(parsed.n));
  return parsed;
}

bqr_complex json_component(const json& value, std::size_t index) {
  if (value.is_number()) return {value.get<double>(), 0.0};
  if (value.is_array() && value.size() == 2 && value[0].is_number() && value[1].is_number()) {
    return {value[0].get<double>(), value[1].get<double>()};
  }
  throw ParseError("component " + std::to_string(index) + " must be [re, im]", 0);
}

ParsedInput parse_structured(std::string_view text, std::optional<int> n_override) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
  }
  if (!doc.is_object() || !doc.contains("a")) throw ParseError("expected an object with key \"a\"", 0);
  const json& a = doc.at("a");
  if (!a.is_array() || a.size() != 4) throw ParseError("\"a\" must hold exactly 4 components", 0);
  ParsedInput parsed;
  for (std::size_t k = 0; k < 4; ++k) parsed.a.c[k] = json_component(a[k], k);
  const bool has_n = doc.contains("n");
  if (has_n) {
    if (!doc.at("n").is_number_integer()) throw ParseError("\"n\" must be an integer", 0);
    parsed.n = doc.at("n").get<int>();
  }
  return finish(parsed, n_override, has_n);
}

// `base` is the offset of `text` inside the caller's input, for error positions.
ParsedInput parse_compact(std::string_view text, std::size_t base, std::optional<int> n_override) {
  const std::size_t semi = text.find(';');
  const std::string_view quat_part = text.substr(0, semi);
  ParsedInput parsed;

  std::size_t start = 0;
  std::size_t count = 0;
  while (true) {
    const std::size_t comma = quat_part.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? quat_part.size() : comma;
    if (count == 4) throw ParseError("too many components, expected 4", base + start);
    parsed.a.c[count++] = parse_component(quat_part.substr(start, end - start), base + start);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (count != 4) throw ParseError("expected 4 components, got " + std::to_string(count), base + quat_part.size());

  const bool has_n = semi != std::string_view::npos;
  if (has_n) {
    const std::string_view rest = text.substr(semi + 1);
    if (rest.find(';') != std::string_view::npos) {
      throw ParseError("unexpected second ';'", base + semi + 1 + rest.find(';'));
    }
    parsed.n = parse_degree(rest, base + semi + 1);
  }
  return finish(parsed, n_override, has_n);
}

std::string read_all(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string format_double(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json to_json(bqr_complex z) { return json::array({z.re, z.im}); }

json to_json(const bqr_quat& q) {
  json out = json::array();
  for (const auto& c : q.c) out.push_back(to_json(c));
  return out;
}

std::string format_quat(const bqr_quat& q) {
  return "(" + format_complex(q.c[0]) + ", " + format_complex(q.c[1]) + ", " + format_complex(q.c[2]) +
         ", " + format_complex(q.c[3]) + ")";
}

const char* branch_name(bqr_branch b) { return b == BQR_BRANCH_NEGATED ? "negated" : "principal"; }

const char* stream_name(bqr_stream s) {
  switch (s) {
    case BQR_STREAM_GENERIC: return "generic";
    case BQR_STREAM_SCALAR: return "scalar";
    case BQR_STREAM_NULL_CONE: return "nullcone";
    case BQR_STREAM_SINGULAR: return "singular";
    case BQR_STREAM_NILPOTENT: return "nilpotent";
    case BQR_STREAM_INSOLUBLE: return "insoluble";
  }
  return "?";
}

json boundary_list(unsigned flags) {
  json out = json::array();
  if (flags & BQR_BOUNDARY_SCALAR_PART) out.push_back("scalar_part");
  if (flags & BQR_BOUNDARY_VECTOR_PART) out.push_back("vector_part");
  if (flags & BQR_BOUNDARY_VECTOR_SQUARE) out.push_back("vector_square");
  if (flags & BQR_BOUNDARY_NORM_FORM) out.push_back("norm_form");
  return out;
}

int run_oracle(const CliConfig& config, std::ostream& out) {
  const int n = config.n.value_or(2);
  if (n < 2) throw InputDomainError("n must be >= 2, got " + std::to_string(n));
  const auto [seed, count] = *config.oracle;
  bqr_report* raw = nullptr;
  expect_ok(bqr_oracle_roundtrip(seed, n, count, config.stream, 1e-6, &raw), "oracle");
  const ReportPtr report(raw);
  const bool pass = bqr_report_pass(report.get()) != 0;

  if (config.format == OutputFormat::Json) {
    json doc = {{"oracle",
                 {{"seed", seed},
                  {"count", count},
                  {"n", n},
                  {"stream", stream_name(config.stream)},
                  {"trials", bqr_report_trials(report.get())},
                  {"recovered", bqr_report_recovered(report.get())},
                  {"skipped", bqr_report_skipped(report.get())},
                  {"max_error", bqr_report_max_residual(report.get())},
                  {"tolerance", bqr_report_tolerance(report.get())},
                  {"pass", pass}}}};
    out << doc.dump(2) << '\n';
  } else {
    out << "oracle round-trip: stream " << stream_name(config.stream) << ", n = " << n << ", seed = " << seed
        << '\n'
        << "  trials:    " << bqr_report_trials(report.get()) << '\n'
        << "  recovered: " << bqr_report_recovered(report.get()) << '\n'
        << "  skipped:   " << bqr_report_skipped(report.get()) << '\n'
        << "  max error: " << format_double(bqr_report_max_residual(report.get())) << " (tolerance "
        << format_double(bqr_report_tolerance(report.get())) << ")\n"
        << (pass ? "PASS" : "FAIL") << '\n';
  }
  return pass ? kExitSolved : kExitError;
}

int run_solve(const CliConfig& config, std::istream& in, std::ostream& out) {
  std::string text;
  switch (config.source) {
    case InputSource::Inline: text = config.input; break;
    case InputSource::Stdin: text = read_all(in); break;
    case InputSource::File: {
      std::ifstream file(config.input);
      if (!file) throw std::runtime_error("cannot open input file '" + config.input + "'");
      text = read_all(file);
      break;
    }
  }
  const ParsedInput input = parse_input(text, config.n);

  bqr_solution_set* raw = nullptr;
  expect_ok(bqr_solve(&input.a, input.n, config.tol, config.branch, &raw), "solve");
  const SolutionPtr set(raw);

  ReportPtr report;
  if (config.check) {
    bqr_report* r = nullptr;
    expect_ok(bqr_check(&input.a, set.get(), config.tol, config.family_samples, &r), "check");
    report.reset(r);
  }

  const bqr_case label = bqr_solution_case(set.get());
  const char* reason = bqr_solution_insoluble_reason(set.get());
  std::vector<bqr_quat> isolated(bqr_solution_isolated_count(set.get()));
  for (std::size_t k = 0; k < isolated.size(); ++k) {
    expect_ok(bqr_solution_isolated(set.get(), k, &isolated[k]), "isolated root");
  }
  std::vector<bqr_family> families(bqr_solution_family_count(set.get()));
  std::vector<std::vector<bqr_quat>> samples(families.size());
  for (std::size_t k = 0; k < families.size(); ++k) {
    expect_ok(bqr_solution_family(set.get(), k, &families[k]), "family");
    samples[k].resize(config.family_samples);
    for (std::size_t j = 0; j < config.family_samples; ++j) {
      expect_ok(bqr_family_sample_deterministic(&families[k], j, &samples[k][j]), "family sample");
    }
  }
  const unsigned flags = bqr_solution_boundary_flags(set.get());

  if (config.format == OutputFormat::Json) {
    json doc;
    doc["case"] = bqr_case_code(label);
    doc["case_name"] = bqr_case_name(label);
    doc["input"] = to_json(input.a);
    doc["isolated"] = json::array();
    for (const auto& q : isolated) doc["isolated"].push_back(to_json(q));
    doc["families"] = json::array();
    for (std::size_t k = 0; k < families.size(); ++k) {
      const bqr_family& f = families[k];
      json fam = {{"x0", to_json(f.x0)},
                  {"c", to_json(f.c)},
                  {"origin", f.origin == BQR_FAMILY_NULL_CONE ? "null_cone" : "pair_of_roots"}};
      if (f.origin == BQR_FAMILY_PAIR_OF_ROOTS) fam["roots"] = json::array({to_json(f.w1), to_json(f.w2)});
      fam["samples"] = json::array();
      for (const auto& q : samples[k]) fam["samples"].push_back(to_json(q));
      doc["families"].push_back(std::move(fam));
    }
    doc["insoluble"] = reason ? json(reason) : json(nullptr);
    doc["metadata"] = {{"n", input.n},
                       {"branch", branch_name(config.branch)},
                       {"tol", config.tol},
                       {"boundary_flags", boundary_list(flags)},
                       {"self_check_max_residual", bqr_solution_self_check_residual(set.get())}};
    if (report) {
      doc["verification"] = {{"max_residual", bqr_report_max_residual(report.get())},
                             {"tolerance", bqr_report_tolerance(report.get())},
                             {"family_samples", config.family_samples},
                             {"pass", bqr_report_pass(report.get()) != 0}};
    }
    out << doc.dump(2) << '\n';
  } else {
    out << "case " << bqr_case_code(label) << " (" << bqr_case_name(label) << "), n = " << input.n << '\n';
    if (reason) {
      out << reason << '\n';
    } else {
      out << "isolated roots: " << isolated.size() << '\n';
      for (std::size_t k = 0; k < isolated.size(); ++k) {
        out << "  X" << k + 1 << " = " << format_quat(isolated[k]) << '\n';
      }
      out << "families: " << families.size() << '\n';
      for (std::size_t k = 0; k < families.size(); ++k) {
        const bqr_family& f = families[k];
        out << "  F" << k + 1 << ": x0 = " << format_complex(f.x0) << ", x^2 = " << format_complex(f.c);
        if (f.origin == BQR_FAMILY_PAIR_OF_ROOTS) {
          out << "  (roots " << format_complex(f.w1) << ", " << format_complex(f.w2) << ")\n";
        } else {
          out << "  (null cone)\n";
        }
        for (const auto& q : samples[k]) out << "      sample " << format_quat(q) << '\n';
      }
    }
    if (flags != 0) out << "warning: classification near tolerance boundary: " << boundary_list(flags).dump() << '\n';
    if (report) {
      out << "check: max residual " << format_double(bqr_report_max_residual(report.get())) << " (tolerance "
          << format_double(bqr_report_tolerance(report.get())) << ") "
          << (bqr_report_pass(report.get()) ? "PASS" : "FAIL") << '\n';
    }
  }

  if (reason) return kExitInsoluble;
  if (report && !bqr_report_pass(report.get())) return kExitError;
  return kExitSolved;
}

}  // namespace

bqr_complex parse_component(std::string_view text, std::size_t offset) {
  text = trim(text, offset);
  if (text.empty()) throw ParseError("empty component", offset);

  // Bare unit: "i", "-i", "+i"
  if (text == "i" || text == "+i") return {0.0, 1.0};
  if (text == "-i") return {0.0, -1.0};

  std::size_t pos = 0;
  const auto first = read_number(text, pos);
  if (!first) throw ParseError("expected a number", offset);
  if (pos == text.size()) return {*first, 0.0};
  if (text[pos] == 'i') {
    if (pos + 1 != text.size()) throw ParseError("unexpected trailing characters", offset + pos + 1);
    return {0.0, *first};
  }
  if (text[pos] != '+' && text[pos] != '-') throw ParseError("unexpected character", offset + pos);

  // <re>(+|-)<im>i, with the imaginary coefficient optional ("1+i").
  const double sign = text[pos] == '-' ? -1.0 : 1.0;
  const std::size_t im_start = pos + 1;
  if (im_start < text.size() && text[im_start] == 'i' && im_start + 1 == text.size()) return {*first, sign};
  std::size_t im_pos = im_start;
  if (im_pos < text.size() && (text[im_pos] == '+' || text[im_pos] == '-')) {
    throw ParseError("unexpected sign", offset + im_pos);
  }
  const auto second = read_number(text, im_pos);
  if (!second) throw ParseError("expected the imaginary part", offset + im_start);
  if (im_pos >= text.size() || text[im_pos] != 'i') throw ParseError("expected 'i'", offset + im_pos);
  if (im_pos + 1 != text.size()) throw ParseError("unexpected trailing characters", offset + im_pos + 1);
  return {*first, sign * *second};
}

ParsedInput parse_input(std::string_view text, std::optional<int> n_override) {
  std::size_t offset = 0;
  const std::string_view body = trim(text, offset);
  if (body.empty()) throw ParseError("empty input", 0);
  if (body.front() == '{') return parse_structured(text, n_override);
  return parse_compact(body, offset, n_override);
}

std::string format_complex(bqr_complex z) {
  if (z.im == 0.0) return format_double(z.re);
  if (z.re == 0.0) return format_double(z.im) + "i";
  const std::string im = format_double(std::abs(z.im));
  return format_double(z.re) + (z.im < 0.0 ? "-" : "+") + im + "i";
}

int run(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    if (config.oracle) return run_oracle(config, out);
    return run_solve(config, in, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
  } catch (const InputDomainError& e) {
    err << "domain error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitError;
}

}  // namespace bqroot::cli
