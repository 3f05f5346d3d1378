#include "hpt/serialize.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

namespace hpt {
namespace {

void node_id(std::ostream& os, std::size_t n, std::size_t k) { os << 'r' << n << 'c' << k; }

}  // namespace

void write_csv_row(std::ostream& os, const Row& row) {
  for (std::size_t k = 0; k < row.size(); ++k) {
    if (k != 0) os << ',';
    if (row.is_wide())
      os << row.wide_values()[k].get_str();
    else
      os << row.narrow_values()[k];
  }
  os << '\n';
}

nlohmann::json row_json(const Row& row) {
  nlohmann::json values = nlohmann::json::array();
  nlohmann::json kinds = nlohmann::json::array();
  for (std::size_t k = 0; k < row.size(); ++k) {
    values.push_back(row.value(k).get_str());
    kinds.push_back(std::string(1, kind_code(row.kind(k))));
  }
  return {{"n", row.index()}, {"values", std::move(values)}, {"kinds", std::move(kinds)}};
}

DotWriter::DotWriter(std::ostream& os, TriangleParams params) : os_(os), params_(params) {
  os_ << "digraph hyperbolic_pascal_4_" << params_.q() << " {\n";
  os_ << "  node [fontname=\"Helvetica\"];\n";
}

void DotWriter::add_row(const Row& row) {
  const std::size_t expected = previous_ ? previous_->index() + 1 : 0;
  if (row.index() != expected)
    throw std::logic_error("DOT rows must arrive in order; expected row " +
                           std::to_string(expected) + ", got " + std::to_string(row.index()));
  os_ << "  { rank=same;";
  for (std::size_t k = 0; k < row.size(); ++k) {
    os_ << ' ';
    node_id(os_, row.index(), k);
  }
  os_ << " }\n";
  for (std::size_t k = 0; k < row.size(); ++k) {
    os_ << "  ";
    node_id(os_, row.index(), k);
    os_ << " [label=\"" << row.value(k).get_str() << "\", shape="
        << (row.kind(k) == CellKind::TypeA ? "ellipse" : "box") << "];\n";
  }
  if (previous_) {
    const auto parents = child_parents(*previous_, params_);
    for (std::size_t k = 0; k < parents.size(); ++k) {
      for (auto p : {std::optional<std::size_t>(parents[k].first), parents[k].second}) {
        if (!p) continue;
        os_ << "  ";
        node_id(os_, previous_->index(), *p);
        os_ << " -> ";
        node_id(os_, row.index(), k);
        os_ << ";\n";
      }
    }
  }
  previous_ = row;
}

void DotWriter::finish() {
  if (finished_) return;
  os_ << "}\n";
  finished_ = true;
}

DotWriter::~DotWriter() {
  try {
    finish();
  } catch (...) {
  }
}

}  // namespace hpt
