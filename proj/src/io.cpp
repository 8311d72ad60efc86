#include "etbfs/io.hpp"

#include <charconv>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string_view>

namespace etbfs {
namespace {

constexpr char kGraphMagic[4] = {'E', 'T', 'G', '1'};
constexpr char kTreeMagic[4] = {'E', 'T', 'T', '1'};

[[noreturn]] void parse_fail(const std::string& path, std::uint64_t offset,
                             const std::string& what) {
  throw std::runtime_error(path + ": " + what + " (byte offset " + std::to_string(offset) + ")");
}

[[noreturn]] void line_fail(const std::string& path, std::uint64_t line, const std::string& what) {
  throw std::runtime_error(path + ": " + what + " (line " + std::to_string(line) + ")");
}

void put_u64(std::ostream& out, std::uint64_t v) {
  char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(b, 8);
}

std::uint64_t get_u64(std::istream& in, const std::string& path, std::uint64_t& offset) {
  unsigned char b[8];
  if (!in.read(reinterpret_cast<char*>(b), 8)) parse_fail(path, offset, "unexpected end of file");
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  offset += 8;
  return v;
}

std::uint64_t parse_u64(std::string_view token, const std::string& path, std::uint64_t line) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    line_fail(path, line, "expected an unsigned integer, got \"" + std::string(token) + "\"");
  return value;
}

void write_graph_binary(const std::string& path, const EdgeList& edges) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  out.write(kGraphMagic, 4);
  put_u64(out, edges.vertex_count);
  put_u64(out, edges.edges.size());
  for (const Edge& e : edges.edges) {
    put_u64(out, e.src);
    put_u64(out, e.dst);
  }
  if (!out) throw std::runtime_error(path + ": write failed");
}

EdgeList read_graph_binary(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(path + ": cannot open for reading");
  in.seekg(0, std::ios::end);
  const auto file_size = static_cast<std::uint64_t>(in.tellg());
  in.seekg(0);

  std::uint64_t offset = 0;
  char magic[4];
  if (!in.read(magic, 4) || std::memcmp(magic, kGraphMagic, 4) != 0)
    parse_fail(path, 0, "bad magic, expected ETG1");
  offset = 4;

  EdgeList list;
  list.vertex_count = get_u64(in, path, offset);
  if (list.vertex_count > kMaxVertexCount)
    parse_fail(path, offset - 8, "vertex count exceeds the supported maximum");
  const std::uint64_t edge_count = get_u64(in, path, offset);
  if (file_size < offset || (file_size - offset) / 16 < edge_count)
    parse_fail(path, offset, "file too short for declared edge count");

  list.edges.resize(edge_count);
  for (std::uint64_t i = 0; i < edge_count; ++i) {
    const std::uint64_t record_offset = offset;
    const std::uint64_t src = get_u64(in, path, offset);
    const std::uint64_t dst = get_u64(in, path, offset);
    if (src >= list.vertex_count || dst >= list.vertex_count)
      parse_fail(path, record_offset, "edge endpoint out of range");
    list.edges[i] = {src, dst};
  }
  return list;
}

void write_graph_text(const std::string& path, const EdgeList& edges) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  out << "# vertices " << edges.vertex_count << "\n";
  for (const Edge& e : edges.edges) out << e.src << " " << e.dst << "\n";
  if (!out) throw std::runtime_error(path + ": write failed");
}

EdgeList read_graph_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open for reading");

  EdgeList list;
  bool declared = false;
  std::uint64_t inferred = 0;
  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    while (!view.empty() && (view.back() == '\r' || view.back() == ' ')) view.remove_suffix(1);
    while (!view.empty() && view.front() == ' ') view.remove_prefix(1);
    if (view.empty()) continue;
    if (view.front() == '#') {
      constexpr std::string_view kHeader = "# vertices ";
      if (view.substr(0, kHeader.size()) == kHeader) {
        list.vertex_count = parse_u64(view.substr(kHeader.size()), path, line_no);
        declared = true;
      }
      continue;
    }
    const auto space = view.find(' ');
    if (space == std::string_view::npos) line_fail(path, line_no, "expected \"src dst\"");
    const std::uint64_t src = parse_u64(view.substr(0, space), path, line_no);
    std::string_view rest = view.substr(space + 1);
    while (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
    const std::uint64_t dst = parse_u64(rest, path, line_no);
    if (declared && (src >= list.vertex_count || dst >= list.vertex_count))
      line_fail(path, line_no, "edge endpoint out of range");
    inferred = std::max({inferred, src + 1, dst + 1});
    list.edges.push_back({src, dst});
  }
  if (!declared) list.vertex_count = inferred;
  if (list.vertex_count > kMaxVertexCount)
    line_fail(path, line_no, "vertex count exceeds the supported maximum");
  return list;
}

}  // namespace

void write_graph(const std::string& path, const EdgeList& edges, GraphFormat format) {
  if (format == GraphFormat::kBinary)
    write_graph_binary(path, edges);
  else
    write_graph_text(path, edges);
}

EdgeList read_graph(const std::string& path, GraphFormat format) {
  return format == GraphFormat::kBinary ? read_graph_binary(path) : read_graph_text(path);
}

void write_tree(const std::string& path, const BfsTree& tree) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  out.write(kTreeMagic, 4);
  put_u64(out, tree.parent.size());
  put_u64(out, tree.root);
  for (vertex_t p : tree.parent) put_u64(out, p);
  if (!out) throw std::runtime_error(path + ": write failed");
}

BfsTree read_tree(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(path + ": cannot open for reading");
  std::uint64_t offset = 0;
  char magic[4];
  if (!in.read(magic, 4) || std::memcmp(magic, kTreeMagic, 4) != 0)
    parse_fail(path, 0, "bad magic, expected ETT1");
  offset = 4;

  BfsTree tree;
  const std::uint64_t n = get_u64(in, path, offset);
  if (n > kMaxVertexCount) parse_fail(path, offset - 8, "vertex count exceeds the supported maximum");
  tree.root = get_u64(in, path, offset);
  if (n > 0 && tree.root >= n) parse_fail(path, offset - 8, "root out of range");
  tree.parent.resize(n);
  for (std::uint64_t i = 0; i < n; ++i) tree.parent[i] = get_u64(in, path, offset);
  return tree;
}

GraphFormat parse_graph_format(const std::string& name) {
  if (name == "binary") return GraphFormat::kBinary;
  if (name == "text") return GraphFormat::kText;
  throw std::invalid_argument("unknown graph format \"" + name + "\" (binary or text)");
}

}  // namespace etbfs
