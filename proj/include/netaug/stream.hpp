#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "netaug/oracles.hpp"
#include "netaug/types.hpp"

namespace netaug {

enum class EventKind { kBase, kLink };

/// One stream record. edge.id is the record's position among all records.
struct StreamEvent {
  EventKind kind = EventKind::kBase;
  WeightedEdge edge;

  friend bool operator==(const StreamEvent&, const StreamEvent&) = default;
};

struct StreamFile {
  std::size_t n = 0;
  std::optional<std::size_t> k;
  std::vector<StreamEvent> events;

  std::vector<WeightedEdge> base_edges() const;
  std::vector<WeightedEdge> links() const;
  /// Every record regardless of kind, in stream order.
  std::vector<WeightedEdge> all_edges() const;
};

/// Grammar: `header n=<uint> [k=<uint>]` then `E u v w`, `L u v w` or `# ...`
/// lines. Throws ParseError with the offending line and column.
StreamFile parse_stream(std::istream& in);
StreamFile parse_stream_file(const std::string& path);
void write_stream(std::ostream& out, const StreamFile& s);

/// Lines `R s t r`; `#` starts a comment line.
Requirements parse_requirements(std::istream& in, std::size_t n);
Requirements parse_requirements_file(const std::string& path, std::size_t n);

}  // namespace netaug
