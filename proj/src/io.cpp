#include "ncsp/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace ncsp {

namespace {

/// Line reader that skips blanks and comments and remembers line numbers.
class LineReader {
 public:
  LineReader(std::istream& in, std::string source) : in_(in), source_(std::move(source)) {}

  bool next(std::istringstream& fields) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      fields.clear();
      fields.str(line);
      return true;
    }
    return false;
  }

  void require(std::istringstream& fields, const char* what) {
    if (!next(fields)) fail(std::string("unexpected end of file, expected ") + what);
  }

  [[noreturn]] void fail(const std::string& msg) const {
    std::ostringstream os;
    os << source_ << ":" << line_no_ << ": " << msg;
    throw Error(ErrorKind::ParseError, os.str());
  }

  template <typename T>
  T read(std::istringstream& fields, const char* what) {
    T value{};
    if (!(fields >> value)) fail(std::string("expected ") + what);
    return value;
  }

  void expect_end(std::istringstream& fields) {
    std::string extra;
    if (fields >> extra) fail("trailing token '" + extra + "'");
  }

 private:
  std::istream& in_;
  std::string source_;
  int line_no_ = 0;
};

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

}  // namespace

InstanceData parse_instance(std::istream& in, const std::string& source) {
  LineReader reader(in, source);
  std::istringstream fields;
  InstanceData data;

  reader.require(fields, "header `n m`");
  const long long n = reader.read<long long>(fields, "vertex count n");
  const long long m = reader.read<long long>(fields, "edge count m");
  reader.expect_end(fields);
  if (n < 1 || n > 100'000'000 || m < 0 || m > 300'000'000) reader.fail("header values out of range");

  data.rotations.resize(n);
  std::vector<std::uint8_t> seen(n, 0);
  long long entries = 0;
  for (long long j = 0; j < n; ++j) {
    reader.require(fields, "vertex line `v deg u_1 ... u_deg`");
    const long long v = reader.read<long long>(fields, "vertex id");
    if (v < 0 || v >= n) reader.fail("vertex id out of range");
    if (seen[v]) reader.fail("vertex listed twice");
    seen[v] = 1;
    const long long deg = reader.read<long long>(fields, "degree");
    if (deg < 0 || deg >= n) reader.fail("degree out of range");
    auto& list = data.rotations[v];
    list.reserve(deg);
    for (long long t = 0; t < deg; ++t) {
      const long long u = reader.read<long long>(fields, "neighbor id");
      if (u < 0 || u >= n) reader.fail("neighbor id out of range");
      list.push_back(static_cast<VertexId>(u));
    }
    reader.expect_end(fields);
    entries += deg;
  }
  if (entries != 2 * m) reader.fail("degree sum does not equal 2m");

  reader.require(fields, "`outer r w_1 ... w_r`");
  if (reader.read<std::string>(fields, "keyword 'outer'") != "outer") reader.fail("expected keyword 'outer'");
  const long long r = reader.read<long long>(fields, "outer length");
  if (r < 0 || r > n) reader.fail("outer length out of range");
  for (long long j = 0; j < r; ++j) {
    const long long w = reader.read<long long>(fields, "outer vertex");
    if (w < 0 || w >= n) reader.fail("outer vertex out of range");
    data.outer.push_back(static_cast<VertexId>(w));
  }
  reader.expect_end(fields);

  while (reader.next(fields)) {
    const auto keyword = reader.read<std::string>(fields, "section keyword");
    if (keyword == "coords") {
      reader.expect_end(fields);
      if (!data.coords.empty()) reader.fail("duplicate coords section");
      data.coords.resize(n);
      std::vector<std::uint8_t> has(n, 0);
      for (long long j = 0; j < n; ++j) {
        reader.require(fields, "coordinate line `v x y`");
        const long long v = reader.read<long long>(fields, "vertex id");
        if (v < 0 || v >= n || has[v]) reader.fail("bad or repeated vertex id in coords");
        has[v] = 1;
        data.coords[v].x = reader.read<double>(fields, "x");
        data.coords[v].y = reader.read<double>(fields, "y");
        reader.expect_end(fields);
      }
    } else if (keyword == "weights") {
      const long long count = reader.read<long long>(fields, "weight count");
      reader.expect_end(fields);
      if (count < 0 || count > m) reader.fail("weight count out of range");
      for (long long j = 0; j < count; ++j) {
        reader.require(fields, "weight line `u v w`");
        WeightedEdge e;
        e.u = static_cast<VertexId>(reader.read<long long>(fields, "u"));
        e.v = static_cast<VertexId>(reader.read<long long>(fields, "v"));
        e.weight = reader.read<long long>(fields, "w");
        reader.expect_end(fields);
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) reader.fail("weighted edge endpoint out of range");
        data.weights.push_back(e);
      }
    } else {
      reader.fail("unknown section '" + keyword + "'");
    }
  }
  return data;
}

InstanceData read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  return parse_instance(in, path);
}

PlanarEmbedding embedding_from(const InstanceData& data, bool cw_rotations) {
  if (!cw_rotations) return build_embedding(data.rotations, data.outer, data.coords);
  RawRotations flipped = data.rotations;
  for (auto& list : flipped) std::reverse(list.begin(), list.end());
  return build_embedding(flipped, data.outer, data.coords);
}

InstanceData instance_data_of(const PlanarEmbedding& emb) {
  InstanceData data;
  data.rotations = emb.raw_rotations();
  data.outer.assign(emb.outer_vertices().begin(), emb.outer_vertices().end());
  data.coords.assign(emb.coords().begin(), emb.coords().end());
  return data;
}

void write_instance(std::ostream& out, const InstanceData& data) {
  std::size_t entries = 0;
  for (const auto& list : data.rotations) entries += list.size();
  out << data.rotations.size() << ' ' << entries / 2 << '\n';
  for (std::size_t v = 0; v < data.rotations.size(); ++v) {
    out << v << ' ' << data.rotations[v].size();
    for (VertexId u : data.rotations[v]) out << ' ' << u;
    out << '\n';
  }
  out << "outer " << data.outer.size();
  for (VertexId w : data.outer) out << ' ' << w;
  out << '\n';
  if (!data.coords.empty()) {
    out << "coords\n";
    for (std::size_t v = 0; v < data.coords.size(); ++v) {
      out << v << ' ' << format_double(data.coords[v].x) << ' ' << format_double(data.coords[v].y) << '\n';
    }
  }
  if (!data.weights.empty()) {
    out << "weights " << data.weights.size() << '\n';
    for (const auto& e : data.weights) out << e.u << ' ' << e.v << ' ' << e.weight << '\n';
  }
}

void write_instance_file(const std::string& path, const InstanceData& data) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path);
  write_instance(out, data);
}

std::vector<TerminalPair> parse_pairs(std::istream& in, const std::string& source) {
  LineReader reader(in, source);
  std::istringstream fields;
  reader.require(fields, "pair count `k`");
  const long long k = reader.read<long long>(fields, "pair count");
  reader.expect_end(fields);
  if (k < 0 || k > 100'000'000) reader.fail("pair count out of range");
  std::vector<TerminalPair> pairs;
  pairs.reserve(k);
  for (long long j = 0; j < k; ++j) {
    reader.require(fields, "pair line `a b`");
    TerminalPair p;
    p.a = static_cast<VertexId>(reader.read<long long>(fields, "terminal a"));
    p.b = static_cast<VertexId>(reader.read<long long>(fields, "terminal b"));
    reader.expect_end(fields);
    pairs.push_back(p);
  }
  if (reader.next(fields)) reader.fail("unexpected content after the last pair");
  return pairs;
}

std::vector<TerminalPair> read_pairs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  return parse_pairs(in, path);
}

void write_pairs(std::ostream& out, const std::vector<TerminalPair>& pairs) {
  out << pairs.size() << '\n';
  for (const auto& p : pairs) out << p.a << ' ' << p.b << '\n';
}

void write_pairs_file(const std::string& path, const std::vector<TerminalPair>& pairs) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path);
  write_pairs(out, pairs);
}

}  // namespace ncsp
