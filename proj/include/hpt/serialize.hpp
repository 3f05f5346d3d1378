#pragma once

#include <iosfwd>
#include <optional>

#include <json.hpp>

#include "hpt/triangle.hpp"

namespace hpt {

/// One line: comma-separated decimal labels.
void write_csv_row(std::ostream& os, const Row& row);

/// {"n": 3, "values": ["1","3","2","3","1"], "kinds": ["W","A","B","A","W"]}
nlohmann::json row_json(const Row& row);

/// Streams rows (0, 1, 2, ... in order) as a Graphviz digraph. Vertices are
/// labelled with their values; TypeA cells are ellipses, TypeB cells and
/// wingers are boxes; edges run parent -> child.
class DotWriter {
 public:
  DotWriter(std::ostream& os, TriangleParams params);
  DotWriter(const DotWriter&) = delete;
  DotWriter& operator=(const DotWriter&) = delete;

  /// Throws std::logic_error if rows arrive out of order.
  void add_row(const Row& row);
  /// Closes the graph; called by the destructor if not done explicitly.
  void finish();
  ~DotWriter();

 private:
  std::ostream& os_;
  TriangleParams params_;
  std::optional<Row> previous_;
  bool finished_ = false;
};

}  // namespace hpt
