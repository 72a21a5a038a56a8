#include "expc/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <regex>
#include <sstream>

#include "expc/errors.hpp"

namespace expc {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

struct Line {
  int number;
  std::string text;
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  for (int number = 1; std::getline(in, raw); ++number) {
    std::string t = trim(raw);
    if (t.empty() || t[0] == '#') continue;
    out.push_back({number, std::move(t)});
  }
  return out;
}

[[noreturn]] void fail(const Line& line, const std::string& what) {
  throw ValidationError("line " + std::to_string(line.number) + " (\"" + line.text + "\"): " + what);
}

long parse_int(const Line& line, const std::string& token) {
  try {
    std::size_t used = 0;
    const long v = std::stol(token, &used);
    if (used == token.size()) return v;
  } catch (const std::exception&) {
  }
  fail(line, "'" + token + "' is not an integer");
}

std::vector<long> parse_ints(const Line& line) {
  std::istringstream in(line.text);
  std::vector<long> out;
  std::string tok;
  while (in >> tok) out.push_back(parse_int(line, tok));
  return out;
}

ExponentVector parse_monomial(const Line& line, int n) {
  static const std::regex factor(R"(x(\d+)(\^(\d+))?)");
  ExponentVector u(n, 0);
  std::string compact;
  for (char c : line.text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  std::stringstream in(compact);
  std::string part;
  while (std::getline(in, part, '*')) {
    std::smatch m;
    if (!std::regex_match(part, m, factor)) fail(line, "'" + part + "' is not of the form xI or xI^E");
    const long var = parse_int(line, m[1]);
    const long exp = m[3].matched ? parse_int(line, m[3]) : 1;
    if (var < 1 || var > n) fail(line, "variable x" + std::to_string(var) + " outside x1..x" + std::to_string(n));
    if (exp < 1 || exp > 255) fail(line, "exponent must lie in 1..255");
    u[var - 1] += static_cast<int>(exp);
  }
  return u;
}

}  // namespace

MonomialIdeal parse_ideal(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ValidationError("empty ideal file");
  static const std::regex vars_re(R"(vars:\s*(\S+))");
  std::smatch m;
  if (!std::regex_match(lines[0].text, m, vars_re)) fail(lines[0], "expected \"vars: n\"");
  const long n = parse_int(lines[0], m[1]);
  if (n < 1 || n > 64) fail(lines[0], "variable count must lie in 1..64");
  if (lines.size() < 2 || lines[1].text != "gens:") {
    if (lines.size() < 2) throw ValidationError("missing \"gens:\" line");
    fail(lines[1], "expected \"gens:\"");
  }
  std::vector<ExponentVector> raw;
  int kind = 0;  // 1 vectors, 2 monomials
  for (std::size_t k = 2; k < lines.size(); ++k) {
    const Line& line = lines[k];
    const int this_kind = line.text[0] == 'x' ? 2 : 1;
    if (kind != 0 && kind != this_kind) fail(line, "exponent vectors and monomials may not be mixed");
    kind = this_kind;
    if (kind == 2) {
      raw.push_back(parse_monomial(line, static_cast<int>(n)));
      continue;
    }
    const auto values = parse_ints(line);
    if (static_cast<long>(values.size()) != n) {
      fail(line, "expected " + std::to_string(n) + " entries, found " + std::to_string(values.size()));
    }
    ExponentVector u;
    for (long v : values) {
      if (v < 0 || v > 255) fail(line, "exponents must lie in 0..255");
      u.push_back(static_cast<int>(v));
    }
    if (std::all_of(u.begin(), u.end(), [](int e) { return e == 0; })) fail(line, "zero generator");
    raw.push_back(std::move(u));
  }
  if (raw.empty()) throw ValidationError("no generators after \"gens:\"");
  return MonomialIdeal::minimalize(raw, static_cast<int>(n));
}

std::string serialize_ideal(const MonomialIdeal& ideal) {
  std::string out = "vars: " + std::to_string(ideal.num_vars()) + "\ngens:\n";
  for (const auto& u : ideal.generators()) {
    for (std::size_t i = 0; i < u.size(); ++i) out += (i ? " " : "") + std::to_string(u[i]);
    out += '\n';
  }
  return out;
}

GradingMatrix parse_matrix(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ValidationError("empty matrix file");
  const auto header = parse_ints(lines[0]);
  if (header.size() != 2 || header[0] < 1 || header[1] < 1) fail(lines[0], "expected \"d n\" with d, n >= 1");
  const int d = static_cast<int>(header[0]), n = static_cast<int>(header[1]);
  if (static_cast<int>(lines.size()) != d + 1) {
    throw ValidationError("matrix file has " + std::to_string(lines.size() - 1) + " rows, header says " +
                          std::to_string(d));
  }
  std::vector<std::int64_t> entries;
  for (int r = 1; r <= d; ++r) {
    const auto row = parse_ints(lines[r]);
    if (static_cast<int>(row.size()) != n) fail(lines[r], "expected " + std::to_string(n) + " entries");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return GradingMatrix(d, n, std::move(entries));
}

std::string serialize_matrix(const GradingMatrix& grading) {
  std::string out = std::to_string(grading.rows()) + " " + std::to_string(grading.cols()) + "\n";
  for (int r = 0; r < grading.rows(); ++r) {
    for (int c = 0; c < grading.cols(); ++c) out += (c ? " " : "") + std::to_string(grading(r, c));
    out += '\n';
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json to_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(format_rational(q));
  return out;
}

Json to_json(const SimplicialComplex& complex) {
  Json facets = Json::array();
  for (VertexSet f : complex.facets()) facets.push_back(f.labels());
  return facets;
}

Json to_json(const MonomialIdeal& ideal) {
  Json gens = Json::array();
  for (const auto& u : ideal.generators()) gens.push_back(u);
  return {{"vars", ideal.num_vars()}, {"gens", gens}};
}

Json to_json(const GradingMatrix& grading) {
  Json rows = Json::array();
  for (int r = 0; r < grading.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < grading.cols(); ++c) row.push_back(grading(r, c));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const Component& component) {
  return {{"sigma", component.sigma.labels()}, {"base", component.base}, {"dimension", component.sigma.size()}};
}

Json to_json(const CmReport& report) {
  Json witnesses = Json::array();
  for (const auto& w : report.witnesses) {
    Json item = {{"witness_b", w.point}, {"complex", to_json(w.complex)}};
    if (w.reisner) {
      item["reisner"] = {{"face", w.reisner->face.labels()}, {"degree", w.reisner->degree}};
    } else {
      item["reisner"] = nullptr;
    }
    item["note"] = w.note;
    witnesses.push_back(item);
  }
  Json out = {{"verdict", report.verdict}};
  if (!report.witnesses.empty()) out["witness_b"] = report.witnesses.front().point;
  out["witnesses"] = witnesses;
  out["catalog_size"] = report.catalog_size;
  return out;
}

Json to_json(const BenchmarkReport& r) {
  return {{"criterion_verdict", r.criterion_verdict},
          {"polarization_verdict", r.polarization_verdict},
          {"agree", r.agree()},
          {"criterion_seconds", r.criterion_seconds},
          {"polarization_seconds", r.polarization_seconds},
          {"catalog_size", r.catalog_size},
          {"polarized_vars", r.polarized_vars},
          {"f_vector", r.f_vector}};
}

Json to_json(const VerifyReport& report) {
  Json records = Json::array();
  for (const auto& rec : report.records) {
    const auto& inst = report.instances[rec.instance];
    records.push_back({{"instance", rec.instance},
                       {"ideal", to_json(inst.ideal)},
                       {"A", to_json(inst.grading)},
                       {"beta", to_json(rec.beta)},
                       {"formula", rec.closed},
                       {"spectral", rec.spectral},
                       {"oracle", rec.oracle},
                       {"agree", rec.agree()}});
  }
  return {{"instances", report.instances.size()},
          {"checks", report.records.size()},
          {"mismatches", report.mismatches()},
          {"records", records}};
}

Json report_document(const std::string& command, const Json& ideal, const Json& inputs, const Json& results,
                     std::uint64_t seed) {
  return {{"command", command},
          {"ideal", ideal},
          {"inputs", inputs},
          {"results", results},
          {"provenance", {{"tool", "expc"}, {"version", kVersion}, {"seed", seed}}}};
}

}  // namespace expc
