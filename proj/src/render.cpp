#include "condis/render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace condis {

namespace {

constexpr int kColumnWidth = 4;
constexpr int kEdgeRows = 3;

std::string label_row(int count) {
  std::string row;
  for (int k = 0; k < count; ++k) {
    std::string label = std::to_string(k);
    row.resize(static_cast<std::size_t>(k) * kColumnWidth, ' ');
    row += label;
  }
  return row;
}

std::string trim_right(std::string s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

// Spreadsheet-style class names: a..z, aa, ab, ...
std::string class_name(int k) {
  std::string name;
  for (++k; k > 0; k = (k - 1) / 26) name.insert(name.begin(), static_cast<char>('a' + (k - 1) % 26));
  return name;
}

}  // namespace

std::string render_finfun_text(const FinFun& f) {
  const int columns = std::max(f.src, f.tgt);
  std::vector<std::string> canvas(kEdgeRows, std::string(static_cast<std::size_t>(columns) * kColumnWidth, ' '));
  for (int i = 0; i < f.src; ++i) {
    const int x0 = i * kColumnWidth;
    const int x1 = f.table[i] * kColumnWidth;
    const char stroke = x1 == x0 ? '|' : (x1 > x0 ? '\\' : '/');
    for (int r = 1; r <= kEdgeRows; ++r) {
      const int x = x0 + (x1 - x0) * r / (kEdgeRows + 1);
      char& cell = canvas[r - 1][x];
      cell = (cell == ' ' || cell == stroke) ? stroke : 'X';
    }
  }
  std::ostringstream out;
  out << trim_right(label_row(f.src)) << "\n";
  for (const auto& row : canvas) out << trim_right(row) << "\n";
  out << trim_right(label_row(f.tgt)) << "\n";
  return out.str();
}

std::string render_finfun_dot(const FinFun& f) {
  std::ostringstream out;
  out << "digraph finfun {\n  rankdir = TB;\n  { rank = min;";
  for (int i = 0; i < f.src; ++i) out << " s" << i << " [label=\"" << i << "\"];";
  out << " }\n  { rank = max;";
  for (int j = 0; j < f.tgt; ++j) out << " t" << j << " [label=\"" << j << "\"];";
  out << " }\n";
  for (int i = 0; i < f.src; ++i) out << "  s" << i << " -> t" << f.table[i] << ";\n";
  out << "}\n";
  return out.str();
}

std::string render_spliteq_text(const SplitEq& r) {
  std::vector<std::string> names(r.src + r.tgt);
  for (std::size_t c = 0; c < r.classes.size(); ++c)
    for (int x : r.classes[c]) names[x] = class_name(static_cast<int>(c));
  auto row = [&](int offset, int count) {
    std::string line;
    for (int k = 0; k < count; ++k) {
      line.resize(static_cast<std::size_t>(k) * kColumnWidth, ' ');
      line += std::to_string(k) + "." + names[offset + k];
    }
    return trim_right(line);
  };
  std::ostringstream out;
  out << row(0, r.src) << "\n" << row(r.src, r.tgt) << "\n";
  return out.str();
}

std::string render_spliteq_dot(const SplitEq& r) {
  auto node = [&](int x) {
    return x < r.src ? "s" + std::to_string(x) : "t" + std::to_string(x - r.src);
  };
  std::ostringstream out;
  out << "graph spliteq {\n  rankdir = TB;\n  { rank = min;";
  for (int i = 0; i < r.src; ++i) out << " s" << i << " [label=\"" << i << "\"];";
  out << " }\n  { rank = max;";
  for (int j = 0; j < r.tgt; ++j) out << " t" << j << " [label=\"" << j << "\"];";
  out << " }\n";
  for (const auto& c : r.classes)
    for (std::size_t k = 1; k < c.size(); ++k)
      out << "  " << node(c[k - 1]) << " -- " << node(c[k]) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace condis
