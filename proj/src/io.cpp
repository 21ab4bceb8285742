#include "mopiso/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace mopiso {

namespace {

long long parse_int(const std::string& tok, long long lo, long long hi) {
  size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(tok, &used);
  } catch (const std::exception&) {
    throw Error(Errc::ParseError, "expected an integer, got \"" + tok + "\"");
  }
  require(used == tok.size(), Errc::ParseError, "trailing characters in \"" + tok + "\"");
  require(v >= lo && v <= hi, Errc::ParseError, "value " + tok + " out of range");
  return v;
}

std::vector<std::string> tokens_of(std::istream& in) {
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

}  // namespace

Mop read_mop1(std::istream& in) {
  std::vector<std::string> toks = tokens_of(in);
  require(!toks.empty(), Errc::ParseError, "empty input");
  int n = static_cast<int>(parse_int(toks[0], 0, 1000000));
  require((toks.size() - 1) % 2 == 0, Errc::ParseError, "dangling chord endpoint");
  std::vector<Edge> diags;
  for (size_t i = 1; i + 1 < toks.size(); i += 2)
    diags.emplace_back(static_cast<int>(parse_int(toks[i], 0, 1000000)),
                       static_cast<int>(parse_int(toks[i + 1], 0, 1000000)));
  return Mop(n, std::move(diags));
}

void write_mop1(std::ostream& out, const Mop& g) {
  out << g.order() << "\n";
  for (const Edge& d : g.diagonals()) out << d.a << " " << d.b << "\n";
}

Mop mop_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
  require(j.is_object() && j.contains("n") && j.contains("diagonals"), Errc::ParseError,
          "expected an object with \"n\" and \"diagonals\"");
  require(j["n"].is_number_integer(), Errc::ParseError, "\"n\" must be an integer");
  require(j["diagonals"].is_array(), Errc::ParseError, "\"diagonals\" must be an array");
  std::vector<Edge> diags;
  for (const auto& item : j["diagonals"]) {
    require(item.is_array() && item.size() == 2 && item[0].is_number_integer() &&
                item[1].is_number_integer(),
            Errc::ParseError, "each diagonal must be a pair of integers");
    diags.emplace_back(item[0].get<int>(), item[1].get<int>());
  }
  return Mop(j["n"].get<int>(), std::move(diags));
}

std::string mop_to_json(const Mop& g) {
  nlohmann::json j;
  j["n"] = g.order();
  j["diagonals"] = nlohmann::json::array();
  for (const Edge& d : g.diagonals()) j["diagonals"].push_back({d.a, d.b});
  return j.dump();
}

SimplePolygon read_poly1(std::istream& in) {
  std::vector<std::string> toks = tokens_of(in);
  require(!toks.empty(), Errc::ParseError, "empty input");
  long long n = parse_int(toks[0], 0, 1000000);
  require(static_cast<long long>(toks.size()) == 1 + 2 * n, Errc::ParseError,
          "expected " + std::to_string(2 * n) + " coordinates");
  std::vector<Point> pts;
  for (long long i = 0; i < n; ++i)
    pts.push_back({parse_int(toks[static_cast<size_t>(1 + 2 * i)], -(1LL << 40), 1LL << 40),
                   parse_int(toks[static_cast<size_t>(2 + 2 * i)], -(1LL << 40), 1LL << 40)});
  return SimplePolygon(std::move(pts));
}

void write_poly1(std::ostream& out, const SimplePolygon& poly) {
  out << poly.size() << "\n";
  for (const Point& p : poly.corners()) out << p.x << " " << p.y << "\n";
}

std::vector<int> read_vertex_set(std::istream& in) {
  std::vector<int> set;
  for (const std::string& t : tokens_of(in))
    set.push_back(static_cast<int>(parse_int(t, 0, 1000000)));
  return set;
}

void write_vertex_set(std::ostream& out, const std::vector<int>& set) {
  for (size_t i = 0; i < set.size(); ++i) out << set[i] << (i + 1 == set.size() ? "" : " ");
  out << "\n";
}

Mop read_mop_auto(std::istream& in) {
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  size_t first = text.find_first_not_of(" \t\r\n");
  require(first != std::string::npos, Errc::ParseError, "empty input");
  if (text[first] == '{') return mop_from_json(text);
  std::istringstream is(text);
  return read_mop1(is);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), Errc::ParseError, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), Errc::ParseError, "cannot open " + path + " for writing");
  out << content;
  require(static_cast<bool>(out << std::flush), Errc::ParseError, "write to " + path + " failed");
}

}  // namespace mopiso
