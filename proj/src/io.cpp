#include "rfot/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace rfot {
namespace {

std::vector<std::string> tokenize(const std::string& raw) {
  std::string line = raw.substr(0, raw.find('#'));
  std::istringstream ss(line);
  std::vector<std::string> tokens;
  std::string tok;
  while (ss >> tok) tokens.push_back(tok);
  return tokens;
}

// key=value tokens of a record; every key must be known and present once.
class Fields {
 public:
  Fields(int line, const std::vector<std::string>& tokens, std::size_t first,
         std::initializer_list<const char*> keys)
      : line_(line) {
    for (std::size_t i = first; i < tokens.size(); ++i) {
      const auto eq = tokens[i].find('=');
      if (eq == std::string::npos) throw ParseError(line, "expected key=value, got '" + tokens[i] + "'");
      std::string key = tokens[i].substr(0, eq);
      bool known = false;
      for (const char* k : keys) known = known || key == k;
      if (!known) throw ParseError(line, "unknown key '" + key + "'");
      if (!values_.emplace(key, tokens[i].substr(eq + 1)).second) {
        throw ParseError(line, "repeated key '" + key + "'");
      }
    }
    for (const char* k : keys) {
      if (!values_.count(k)) throw ParseError(line, std::string("missing key '") + k + "'");
    }
  }

  const std::string& get(const std::string& key) const { return values_.at(key); }

  std::int64_t integer(const std::string& key) const {
    const std::string& text = get(key);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      throw ParseError(line_, key + " must be an integer, got '" + text + "'");
    }
    return value;
  }

  Rational rational(const std::string& key) const {
    try {
      return parse_rational(get(key));
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_, key + ": " + e.what());
    }
  }

  bool is_inf(const std::string& key) const { return get(key) == "inf"; }

 private:
  int line_;
  std::map<std::string, std::string> values_;
};

Path parse_path(int line, const std::string& text, const Instance& inst) {
  Path path;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    auto comma = text.find(',', begin);
    if (comma == std::string::npos) comma = text.size();
    const std::string id = text.substr(begin, comma - begin);
    const auto e = inst.find_edge(id);
    if (!e) throw ParseError(line, "unknown edge '" + id + "' in path");
    path.edges.push_back(*e);
    begin = comma + 1;
  }
  if (auto err = path_error(path, inst)) throw ParseError(line, *err);
  return path;
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return in;
}

}  // namespace

Instance read_instance(std::istream& in) {
  Instance inst;
  bool have_header = false;
  std::string source_id;
  std::string sink_id;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto tokens = tokenize(raw);
    if (tokens.empty()) continue;
    const std::string& kind = tokens[0];
    if (!have_header) {
      if (kind != "instance") throw ParseError(line, "expected 'instance' header");
      Fields f(line, tokens, 1, {"T", "gamma", "s", "d"});
      inst.horizon = f.integer("T");
      inst.budget = f.integer("gamma");
      source_id = f.get("s");
      sink_id = f.get("d");
      have_header = true;
    } else if (kind == "vertex") {
      if (tokens.size() != 2) throw ParseError(line, "expected 'vertex <vid>'");
      if (inst.find_vertex(tokens[1])) throw ParseError(line, "duplicate vertex '" + tokens[1] + "'");
      inst.vertices.push_back(tokens[1]);
    } else if (kind == "edge") {
      if (tokens.size() != 7) throw ParseError(line, "expected 'edge <eid> <tail> <head> u= tau= delta='");
      Edge e;
      e.id = tokens[1];
      if (e.id.find(',') != std::string::npos) throw ParseError(line, "edge ids may not contain ','");
      if (inst.find_edge(e.id)) throw ParseError(line, "duplicate edge '" + e.id + "'");
      const auto tail = inst.find_vertex(tokens[2]);
      const auto head = inst.find_vertex(tokens[3]);
      if (!tail || !head) throw ParseError(line, "edge " + e.id + " references an undeclared vertex");
      e.tail = *tail;
      e.head = *head;
      Fields f(line, tokens, 4, {"u", "tau", "delta"});
      e.capacity = f.is_inf("u") ? Capacity::infinite() : Capacity(f.rational("u"));
      e.travel_time = f.integer("tau");
      e.delay = f.is_inf("delta") ? Delay::infinite() : Delay(f.integer("delta"));
      inst.edges.push_back(std::move(e));
    } else {
      throw ParseError(line, "unknown record '" + kind + "'");
    }
  }
  if (!have_header) throw ParseError(line, "missing 'instance' header");
  const auto s = inst.find_vertex(source_id);
  const auto d = inst.find_vertex(sink_id);
  if (!s) throw ParseError(line, "source '" + source_id + "' is not a declared vertex");
  if (!d) throw ParseError(line, "sink '" + sink_id + "' is not a declared vertex");
  inst.source = *s;
  inst.sink = *d;
  return inst;
}

Instance read_instance_file(const std::string& path) {
  auto in = open(path);
  return read_instance(in);
}

void write_instance(std::ostream& out, const Instance& inst) {
  out << "instance T=" << inst.horizon << " gamma=" << inst.budget
      << " s=" << inst.vertices.at(inst.source) << " d=" << inst.vertices.at(inst.sink)
      << '\n';
  for (const auto& v : inst.vertices) out << "vertex " << v << '\n';
  for (const auto& e : inst.edges) {
    out << "edge " << e.id << ' ' << inst.vertices.at(e.tail) << ' '
        << inst.vertices.at(e.head) << " u="
        << (e.capacity.is_infinite() ? std::string("inf") : to_string(e.capacity.value()))
        << " tau=" << e.travel_time << " delta="
        << (e.delay.is_infinite() ? std::string("inf") : std::to_string(e.delay.value()))
        << '\n';
  }
}

SolutionFile read_solution(std::istream& in, const Instance& inst) {
  SolutionFile sol;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto tokens = tokenize(raw);
    if (tokens.empty()) continue;
    if (tokens[0] == "triple") {
      Fields f(line, tokens, 1, {"path", "rate", "a", "b"});
      Triple t{parse_path(line, f.get("path"), inst), f.rational("rate"), f.integer("a"),
               f.integer("b")};
      if (t.rate <= 0) throw ParseError(line, "rate must be positive");
      if (t.start < 0 || t.start >= t.end || t.end > inst.horizon) {
        throw ParseError(line, "dispatch interval must satisfy 0 <= a < b <= T");
      }
      sol.triples.triples.push_back(std::move(t));
    } else if (tokens[0] == "trpath") {
      Fields f(line, tokens, 1, {"path", "rate"});
      Path p = parse_path(line, f.get("path"), inst);
      Rational rate = f.rational("rate");
      if (rate <= 0) throw ParseError(line, "rate must be positive");
      if (!sol.repeated.rates.emplace(std::move(p), rate).second) {
        throw ParseError(line, "path listed twice");
      }
    } else {
      throw ParseError(line, "unknown record '" + tokens[0] + "'");
    }
  }
  return sol;
}

SolutionFile read_solution_file(const std::string& path, const Instance& inst) {
  auto in = open(path);
  return read_solution(in, inst);
}

void write_solution(std::ostream& out, const TripleSolution& sol, const Instance& inst) {
  for (const auto& t : sol.triples) {
    out << "triple path=" << format_path(t.path, inst) << " rate=" << to_string(t.rate)
        << " a=" << t.start << " b=" << t.end << '\n';
  }
}

void write_solution(std::ostream& out, const TemporallyRepeatedFlow& flow,
                    const Instance& inst) {
  for (const auto& [path, rate] : flow.rates) {
    out << "trpath path=" << format_path(path, inst) << " rate=" << to_string(rate) << '\n';
  }
}

}  // namespace rfot
