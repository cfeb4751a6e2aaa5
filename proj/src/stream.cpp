#include "netaug/stream.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include "text_tokens.hpp"

namespace netaug {

using detail::parse_keyed;
using detail::parse_uint;
using detail::Tokenizer;

namespace {

using Fields = std::vector<std::pair<std::string, std::size_t>>;

Fields rest_of(Tokenizer& tok) {
  Fields fields;
  std::string more;
  std::size_t col = 0;
  while (tok.next(more, col)) fields.push_back({more, col});
  return fields;
}

Vertex parse_vertex(const std::pair<std::string, std::size_t>& f, std::size_t n, std::size_t line) {
  const auto v = parse_uint(f.first, line, f.second);
  if (v >= n) throw ParseError(line, f.second, "endpoint " + f.first + " out of range");
  return static_cast<Vertex>(v);
}

Weight parse_weight(const std::pair<std::string, std::size_t>& f, std::size_t line) {
  if (!f.first.empty() && f.first[0] == '-') throw ParseError(line, f.second, "negative weight");
  const auto w = parse_uint(f.first, line, f.second);
  if (w > kMaxWeight) throw ParseError(line, f.second, "weight exceeds 2^63-1");
  return w;
}

std::vector<WeightedEdge> of_kind(const std::vector<StreamEvent>& events, std::optional<EventKind> kind) {
  std::vector<WeightedEdge> out;
  for (const auto& e : events) {
    if (!kind || e.kind == *kind) out.push_back(e.edge);
  }
  return out;
}

}  // namespace

std::vector<WeightedEdge> StreamFile::base_edges() const { return of_kind(events, EventKind::kBase); }
std::vector<WeightedEdge> StreamFile::links() const { return of_kind(events, EventKind::kLink); }
std::vector<WeightedEdge> StreamFile::all_edges() const { return of_kind(events, std::nullopt); }

StreamFile parse_stream(std::istream& in) {
  StreamFile s;
  bool header = false;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    Tokenizer tok{raw, line_no};
    std::string word;
    std::size_t col = 1;
    if (!tok.next(word, col) || word[0] == '#') continue;
    const Fields fields = rest_of(tok);
    if (!header) {
      if (word != "header" || fields.empty() || fields.size() > 2) {
        throw ParseError(line_no, col, "expected 'header n=<uint> [k=<uint>]'");
      }
      s.n = parse_keyed(fields[0].first, "n", line_no, fields[0].second);
      if (fields.size() == 2) s.k = parse_keyed(fields[1].first, "k", line_no, fields[1].second);
      header = true;
      continue;
    }
    if ((word != "E" && word != "L") || fields.size() != 3) {
      throw ParseError(line_no, col, "expected 'E <u> <v> <w>' or 'L <u> <v> <w>'");
    }
    StreamEvent ev;
    ev.kind = word == "E" ? EventKind::kBase : EventKind::kLink;
    ev.edge.u = parse_vertex(fields[0], s.n, line_no);
    ev.edge.v = parse_vertex(fields[1], s.n, line_no);
    if (ev.edge.u == ev.edge.v) {
      throw ParseError(line_no, col, ev.kind == EventKind::kLink ? "self-loop link" : "self-loop edge");
    }
    ev.edge.w = parse_weight(fields[2], line_no);
    ev.edge.id = s.events.size();
    s.events.push_back(ev);
  }
  if (!header) throw ParseError(line_no + 1, 1, "missing stream header");
  return s;
}

StreamFile parse_stream_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_stream(in);
}

void write_stream(std::ostream& out, const StreamFile& s) {
  out << "header n=" << s.n;
  if (s.k) out << " k=" << *s.k;
  out << '\n';
  for (const auto& ev : s.events) {
    out << (ev.kind == EventKind::kBase ? 'E' : 'L') << ' ' << ev.edge.u << ' ' << ev.edge.v << ' ' << ev.edge.w
        << '\n';
  }
}

Requirements parse_requirements(std::istream& in, std::size_t n) {
  Requirements r(n);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    Tokenizer tok{raw, line_no};
    std::string word;
    std::size_t col = 1;
    if (!tok.next(word, col) || word[0] == '#') continue;
    const Fields fields = rest_of(tok);
    if (word != "R" || fields.size() != 3) throw ParseError(line_no, col, "expected 'R <s> <t> <r>'");
    const Vertex s = parse_vertex(fields[0], n, line_no);
    const Vertex t = parse_vertex(fields[1], n, line_no);
    if (s == t) throw ParseError(line_no, fields[1].second, "requirement on a single vertex");
    const auto value = parse_uint(fields[2].first, line_no, fields[2].second);
    if (value > 64) throw ParseError(line_no, fields[2].second, "requirement too large");
    r.set(s, t, static_cast<std::uint32_t>(value));
  }
  return r;
}

Requirements parse_requirements_file(const std::string& path, std::size_t n) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_requirements(in, n);
}

}  // namespace netaug
