#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "cpctaxo/error.hpp"
#include "cpctaxo/ingest.hpp"
#include "cpctaxo/taxonomy.hpp"
#include "cpctaxo/text.hpp"
#include "fs_util.hpp"

namespace cpctaxo {

namespace {

constexpr std::string_view kMagic = "#cpc-taxo ";
constexpr std::string_view kVersion = "v1";
constexpr std::string_view kTrailer = "#end ";

std::string escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      default: out += c;
    }
  }
  return out;
}

std::string unescape(std::string_view s, std::size_t line_no) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '\\') {
      out += s[i];
      continue;
    }
    if (++i == s.size()) throw IoFailure("line " + std::to_string(line_no) + ": dangling escape");
    switch (s[i]) {
      case '\\': out += '\\'; break;
      case 't': out += '\t'; break;
      case 'n': out += '\n'; break;
      case 'r': out += '\r'; break;
      default: throw IoFailure("line " + std::to_string(line_no) + ": bad escape");
    }
  }
  return out;
}

std::size_t parse_count(std::string_view s, std::size_t line_no) {
  std::size_t value = 0;
  if (s.empty()) throw IoFailure("line " + std::to_string(line_no) + ": missing number");
  for (char c : s) {
    if (c < '0' || c > '9') throw IoFailure("line " + std::to_string(line_no) + ": bad number '" + std::string(s) + "'");
    value = value * 10 + static_cast<std::size_t>(c - '0');
  }
  return value;
}

CpcCode parse_code(std::string_view s, std::size_t line_no) {
  auto code = CpcCode::try_parse(s);
  if (!code) throw IoFailure("line " + std::to_string(line_no) + ": bad code '" + std::string(s) + "'");
  return *code;
}

}  // namespace

void save_taxonomy(const Taxonomy& taxonomy, std::ostream& out) {
  const auto& tree = taxonomy.tree();
  out << kMagic << kVersion << " section=" << taxonomy.section() << '\n';
  // The stored tree is compacted, so ids are dense pre-order positions.
  std::size_t synonym_rows = 0;
  for (NodeId id : tree.preorder()) {
    const auto& n = tree.node(id);
    out << "N\t" << id.value << '\t';
    if (n.parent) out << n.parent->value;
    else out << '-';
    out << '\t' << n.code.to_string() << '\t' << escape(n.label) << '\n';
  }
  for (const auto& e : taxonomy.synonyms()) {
    for (const auto& s : e.synonyms) {
      out << "S\t" << escape(e.canonical) << '\t' << escape(s) << '\t' << e.source_code.to_string()
          << '\n';
      ++synonym_rows;
    }
  }
  out << kTrailer << "nodes=" << tree.size() << " synonyms=" << synonym_rows << '\n';
  if (!out) throw IoFailure("write failed");
}

void save_taxonomy(const Taxonomy& taxonomy, const std::filesystem::path& destination) {
  std::ostringstream buffer;
  save_taxonomy(taxonomy, buffer);
  write_file_atomically(destination, buffer.str());
}

Taxonomy load_taxonomy(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw IoFailure("empty taxonomy file");
  if (line.rfind(kMagic, 0) != 0) throw FormatVersionMismatch("not a taxonomy file");
  auto header = text::words(std::string_view(line).substr(kMagic.size()));
  if (header.size() != 2 || header[0] != kVersion)
    throw FormatVersionMismatch("unsupported taxonomy header '" + line + "'");
  if (header[1].size() != 9 || header[1].substr(0, 8) != "section=" || !is_section_letter(header[1][8]))
    throw FormatVersionMismatch("bad section in header '" + line + "'");
  const char section = header[1][8];

  TitleTree tree;
  std::vector<SynonymEntry> synonyms;
  std::size_t synonym_rows = 0;
  std::size_t line_no = 1;
  bool finished = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (finished) throw IoFailure("line " + std::to_string(line_no) + ": data after trailer");
    if (line.rfind(kTrailer, 0) == 0) {
      auto counts = text::words(std::string_view(line).substr(kTrailer.size()));
      if (counts.size() != 2 || counts[0].rfind("nodes=", 0) != 0 || counts[1].rfind("synonyms=", 0) != 0)
        throw IoFailure("line " + std::to_string(line_no) + ": bad trailer");
      if (parse_count(counts[0].substr(6), line_no) != tree.size() ||
          parse_count(counts[1].substr(9), line_no) != synonym_rows)
        throw IoFailure("row counts disagree with trailer");
      finished = true;
      continue;
    }
    auto fields = text::split(line, '\t');
    if (fields[0] == "N" && fields.size() == 5) {
      std::size_t id = parse_count(fields[1], line_no);
      if (id != tree.size()) throw IoFailure("line " + std::to_string(line_no) + ": node ids out of order");
      NodeSpec spec;
      spec.code = parse_code(fields[3], line_no);
      spec.label = unescape(fields[4], line_no);
      spec.raw_title = spec.label;
      if (fields[2] == "-") {
        if (!tree.empty()) throw IoFailure("line " + std::to_string(line_no) + ": second root");
        tree.add_root(std::move(spec));
      } else {
        std::size_t parent = parse_count(fields[2], line_no);
        if (parent >= id) throw IoFailure("line " + std::to_string(line_no) + ": parent after child");
        tree.add_child(NodeId{static_cast<std::uint32_t>(parent)}, std::move(spec));
      }
    } else if (fields[0] == "S" && fields.size() == 4) {
      std::string canonical = unescape(fields[1], line_no);
      std::string synonym = unescape(fields[2], line_no);
      CpcCode code = parse_code(fields[3], line_no);
      ++synonym_rows;
      if (!synonyms.empty() && synonyms.back().canonical == canonical && synonyms.back().source_code == code)
        synonyms.back().synonyms.push_back(std::move(synonym));
      else
        synonyms.push_back(SynonymEntry{std::move(canonical), {std::move(synonym)}, code});
    } else {
      throw IoFailure("line " + std::to_string(line_no) + ": unrecognised row");
    }
  }
  if (in.bad()) throw IoFailure("read failed");
  if (!finished) throw IoFailure("truncated taxonomy file (no trailer)");
  if (tree.empty()) throw IoFailure("taxonomy file without nodes");
  return Taxonomy(section, std::move(tree), std::move(synonyms));
}

Taxonomy load_taxonomy(const std::filesystem::path& source) {
  std::ifstream in(source, std::ios::binary);
  if (!in) throw IoFailure("cannot open " + source.string());
  return load_taxonomy(in);
}

}  // namespace cpctaxo
