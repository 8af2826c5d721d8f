#include "lrc/io.hpp"

#include <chrono>
#include <ctime>
#include <fstream>

#include "lrc/error.hpp"

namespace lrc::io {

namespace {

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::FormatError, std::string(what) + ": " + e.what());
  }
}

std::string utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

json to_json(const gf::Field& f) {
  return {{"p", f.characteristic()}, {"e", f.degree()}, {"poly", f.modulus_poly()}};
}

gf::Field field_from_json(const json& j) {
  return guarded("field", [&] {
    const auto p = j.at("p").get<std::uint64_t>();
    const int e = j.value("e", 1);
    const auto poly = j.value("poly", std::uint64_t{0});
    return gf::Field::make(p, e, e > 1 && poly != 0 ? std::optional<std::uint64_t>(poly) : std::nullopt);
  });
}

json to_json(const linalg::Matrix& m) {
  json data = json::array();
  for (int i = 0; i < m.rows(); ++i) data.push_back(std::vector<std::uint32_t>(m.row(i).begin(), m.row(i).end()));
  return {{"field", to_json(m.field())}, {"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

linalg::Matrix matrix_from_json(const json& j) {
  return guarded("matrix", [&] {
    const gf::Field f = field_from_json(j.at("field"));
    const int rows = j.at("rows").get<int>();
    const int cols = j.at("cols").get<int>();
    const auto data = j.at("data").get<std::vector<std::vector<std::uint64_t>>>();
    if (static_cast<int>(data.size()) != rows) throw Error(ErrorKind::FormatError, "row count mismatch");
    linalg::Matrix m(f, rows, cols);
    for (int i = 0; i < rows; ++i) {
      const auto& row = data[static_cast<std::size_t>(i)];
      if (static_cast<int>(row.size()) != cols) throw Error(ErrorKind::FormatError, "column count mismatch");
      for (int c = 0; c < cols; ++c) {
        if (row[static_cast<std::size_t>(c)] >= f.order())
          throw Error(ErrorKind::FormatError, "entry outside [0, q)");
        m.set(i, c, static_cast<std::uint32_t>(row[static_cast<std::size_t>(c)]));
      }
    }
    return m;
  });
}

json to_json(const covers::Structure& s) {
  return {{"kind", std::string(covers::to_string(s.kind))},
          {"n", s.n},
          {"groups", s.groups},
          {"hub_blocks", s.hub_blocks},
          {"tail_block", s.tail_block},
          {"hubs", s.hubs}};
}

covers::Structure structure_from_json(const json& j) {
  return guarded("structure", [&] {
    covers::Structure s;
    s.n = j.at("n").get<int>();
    s.groups = j.at("groups").get<std::vector<IndexSet>>();
    s.hub_blocks = j.value("hub_blocks", std::vector<IndexSet>{});
    s.tail_block = j.value("tail_block", IndexSet{});
    s.hubs = j.value("hubs", std::vector<int>{});
    const std::string kind = j.value("kind", std::string{});
    if (kind == "frame" || (kind.empty() && !s.hubs.empty())) {
      s.kind = covers::Kind::Frame;
    } else if (kind == "cover") {
      s.kind = covers::Kind::Cover;
    } else if (kind == "partition" || kind.empty()) {
      s.kind = covers::Kind::Partition;
    } else {
      throw Error(ErrorKind::FormatError, "unknown structure kind '" + kind + "'");
    }
    return s;
  });
}

json to_json(const construct::LrcCode& code) {
  json trace = json::array();
  for (const auto& t : code.trace)
    trace.push_back({{"lambda", t.lambda}, {"column", t.column}, {"lambda_size", t.lambda_size},
                     {"attempts", t.attempts}});
  const auto& p = code.params;
  return {{"format", "lrc-code"},
          {"tool_version", kToolVersion},
          {"params", {{"n", p.n}, {"k", p.k}, {"r", p.r}, {"delta", p.delta}}},
          {"field", to_json(code.field)},
          {"matrix", to_json(code.generator)},
          {"structure", to_json(code.structure)},
          {"claimed_d", code.claimed_d},
          {"method", code.method},
          {"seed", code.seed},
          {"trace", trace}};
}

construct::LrcCode code_from_json(const json& j) {
  return guarded("code", [&] {
    const auto& jp = j.at("params");
    params::CodeParams p{jp.at("n").get<int>(), jp.at("k").get<int>(), jp.at("r").get<int>(),
                         jp.at("delta").get<int>()};
    params::validate(p);
    linalg::Matrix g = matrix_from_json(j.at("matrix"));
    gf::Field f = j.contains("field") ? field_from_json(j.at("field")) : g.field();
    if (!(f == g.field())) throw Error(ErrorKind::FormatError, "field and matrix field differ");
    if (g.rows() != p.k || g.cols() != p.n) throw Error(ErrorKind::FormatError, "matrix is not k x n");
    construct::LrcCode code{f, std::move(g), structure_from_json(j.at("structure")), p,
                            j.value("claimed_d", 0), j.value("method", std::string{}),
                            j.value("seed", std::uint64_t{0}), {}};
    for (const auto& t : j.value("trace", json::array())) {
      code.trace.push_back({t.at("lambda").get<int>(), t.at("column").get<std::vector<std::uint32_t>>(),
                            t.value("lambda_size", std::uint64_t{0}), t.value("attempts", 0)});
    }
    return code;
  });
}

void write_code(const construct::LrcCode& code, const std::string& path) {
  json j = to_json(code);
  j["created"] = utc_now();
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::FormatError, "cannot open " + path + " for writing");
  out << j.dump(2) << '\n';
  if (!out) throw Error(ErrorKind::FormatError, "write to " + path + " failed");
}

construct::LrcCode read_code(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::FormatError, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::FormatError, path + ": " + e.what());
  }
  return code_from_json(j);
}

}  // namespace lrc::io
