#include "posetpart/text_format.hpp"

#include <algorithm>
#include <map>

#include "posetpart/error.hpp"

namespace posetpart {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

// Nonempty lines, comments stripped, split on blanks.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  for (std::size_t pos = 0; pos <= text.size();) {
    ++number;
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && is_blank(raw[i])) ++i;
      const std::size_t start = i;
      while (i < raw.size() && !is_blank(raw[i])) ++i;
      if (i > start) line.tokens.emplace_back(raw.substr(start, i - start));
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] void fail(ErrorCode code, const std::string& what, std::size_t line) {
  throw Error(code, what, line);
}

void expect_arity(const Line& line, std::size_t n, std::string_view form) {
  if (line.tokens.size() != n) {
    fail(ErrorCode::syntax_error, "expected '" + std::string(form) + "'", line.number);
  }
}

// Rethrows library errors raised while handling `line` with its number.
template <typename F>
auto on_line(std::size_t line, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.line()) throw;
    throw e.at_line(line);
  }
}

std::size_t header_line(const std::vector<Line>& lines) {
  return lines.empty() ? 1 : lines.front().number;
}

const PosetDocument& find_poset(std::span<const PosetDocument> posets, std::string_view name,
                                std::size_t line) {
  for (const auto& doc : posets) {
    if (doc.name == name) return doc;
  }
  fail(ErrorCode::unknown_poset, "no poset named '" + std::string(name) + "' is loaded", line);
}

std::string quoted(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

}  // namespace

PosetDocument parse_poset(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty() || lines.front().tokens[0] != "poset") {
    fail(ErrorCode::syntax_error, "document must start with 'poset <name>'", header_line(lines));
  }
  expect_arity(lines.front(), 2, "poset <name>");
  const std::string name = lines.front().tokens[1];

  std::vector<std::string> labels;
  std::map<std::string, std::size_t, std::less<>> index;
  std::vector<std::pair<std::size_t, std::size_t>> covers;

  for (auto it = lines.begin() + 1; it != lines.end(); ++it) {
    const Line& line = *it;
    const std::string& keyword = line.tokens[0];
    if (keyword == "elements") {
      if (line.tokens.size() < 2) fail(ErrorCode::syntax_error, "expected labels", line.number);
      for (auto t = line.tokens.begin() + 1; t != line.tokens.end(); ++t) {
        if (!index.emplace(*t, labels.size()).second) {
          fail(ErrorCode::duplicate_label, "label '" + *t + "' appears twice", line.number);
        }
        if (labels.size() == kMaxElements) {
          fail(ErrorCode::too_large,
               "more than " + std::to_string(kMaxElements) + " elements", line.number);
        }
        labels.push_back(*t);
      }
    } else if (keyword == "cover") {
      expect_arity(line, 3, "cover <x> <y>");
      std::size_t ends[2];
      for (std::size_t k = 0; k < 2; ++k) {
        auto found = index.find(line.tokens[k + 1]);
        if (found == index.end()) {
          fail(ErrorCode::unknown_label, "no element labelled '" + line.tokens[k + 1] + "'",
               line.number);
        }
        ends[k] = found->second;
      }
      covers.emplace_back(ends[0], ends[1]);
      if (!is_antisymmetric(
              reflexive_transitive_closure(Relation::from_pairs(labels.size(), covers)))) {
        fail(ErrorCode::cycle_detected,
             "'" + line.tokens[1] + "' and '" + line.tokens[2] + "' close a cycle", line.number);
      }
    } else if (keyword == "poset") {
      fail(ErrorCode::syntax_error, "one poset per document", line.number);
    } else {
      fail(ErrorCode::syntax_error, "unknown keyword '" + keyword + "'", line.number);
    }
  }
  Poset poset = on_line(lines.front().number, [&] {
    return Poset::from_cover_indices(std::move(labels), covers);
  });
  return PosetDocument{name, std::move(poset)};
}

PartitionDocument parse_partition(std::string_view text, std::span<const PosetDocument> posets) {
  const auto lines = tokenize(text);
  if (lines.empty() || lines.front().tokens[0] != "partition") {
    fail(ErrorCode::syntax_error, "document must start with 'partition of <poset>'",
         header_line(lines));
  }
  const Line& head = lines.front();
  expect_arity(head, 3, "partition of <poset>");
  if (head.tokens[1] != "of") {
    fail(ErrorCode::syntax_error, "expected 'partition of <poset>'", head.number);
  }
  const PosetDocument& target = find_poset(posets, head.tokens[2], head.number);
  const Poset& poset = target.poset;

  std::vector<std::string> names;
  std::vector<ElementSet> blocks;
  std::vector<std::pair<std::size_t, std::size_t>> order_pairs;
  std::vector<std::size_t> order_lines;
  ElementSet used;

  for (auto it = lines.begin() + 1; it != lines.end(); ++it) {
    const Line& line = *it;
    const std::string& keyword = line.tokens[0];
    if (keyword == "block") {
      if (line.tokens.size() < 3 || line.tokens[2] != "=") {
        fail(ErrorCode::syntax_error, "expected 'block <B> = <label>...'", line.number);
      }
      if (std::find(names.begin(), names.end(), line.tokens[1]) != names.end()) {
        fail(ErrorCode::syntax_error, "block '" + line.tokens[1] + "' declared twice",
             line.number);
      }
      if (line.tokens.size() == 3) {
        fail(ErrorCode::empty_block, "block '" + line.tokens[1] + "' has no elements",
             line.number);
      }
      ElementSet block;
      for (auto t = line.tokens.begin() + 3; t != line.tokens.end(); ++t) {
        const auto i = poset.index_of(*t);
        if (!i) fail(ErrorCode::unknown_label, "no element labelled '" + *t + "'", line.number);
        if (block.contains(*i) || used.contains(*i)) {
          fail(ErrorCode::overlapping_blocks, "'" + *t + "' lies in two blocks", line.number);
        }
        block.insert(*i);
      }
      used |= block;
      names.push_back(line.tokens[1]);
      blocks.push_back(block);
    } else if (keyword == "order") {
      expect_arity(line, 4, "order <B> <= <C>");
      if (line.tokens[2] != "<=") fail(ErrorCode::syntax_error, "expected '<='", line.number);
      std::size_t ends[2];
      for (std::size_t k = 0; k < 2; ++k) {
        const std::string& name = line.tokens[k == 0 ? 1 : 3];
        auto found = std::find(names.begin(), names.end(), name);
        if (found == names.end()) {
          fail(ErrorCode::unknown_block_name, "no block named '" + name + "'", line.number);
        }
        ends[k] = static_cast<std::size_t>(found - names.begin());
      }
      order_pairs.emplace_back(ends[0], ends[1]);
      order_lines.push_back(line.number);
    } else if (keyword == "partition") {
      fail(ErrorCode::syntax_error, "one partition per document", line.number);
    } else {
      fail(ErrorCode::syntax_error, "unknown keyword '" + keyword + "'", line.number);
    }
  }

  // Order lines may only name blocks declared above them, so the declaration
  // order is final here; map it onto canonical indices.
  SetPartition support =
      on_line(head.number, [&] { return SetPartition::from_blocks(poset.size(), blocks); });
  std::vector<std::size_t> canonical(blocks.size());
  std::vector<std::string> block_names(blocks.size());
  for (std::size_t d = 0; d < blocks.size(); ++d) {
    canonical[d] = support.block_of(blocks[d].min());
    block_names[canonical[d]] = names[d];
  }

  std::optional<Relation> order;
  if (!order_pairs.empty()) {
    Relation declared(blocks.size());
    for (std::size_t k = 0; k < order_pairs.size(); ++k) {
      declared.set(canonical[order_pairs[k].first], canonical[order_pairs[k].second]);
      if (!is_antisymmetric(reflexive_transitive_closure(declared))) {
        fail(ErrorCode::cycle_detected, "block order has a cycle", order_lines[k]);
      }
    }
    order = reflexive_transitive_closure(declared);
  }
  return PartitionDocument{target.name, std::move(support), std::move(block_names),
                           std::move(order)};
}

MapDocument parse_map(std::string_view text, std::span<const PosetDocument> posets) {
  const auto lines = tokenize(text);
  if (lines.empty() || lines.front().tokens[0] != "map") {
    fail(ErrorCode::syntax_error, "document must start with 'map <name> : <P> -> <Q>'",
         header_line(lines));
  }
  const Line& head = lines.front();
  expect_arity(head, 6, "map <name> : <P> -> <Q>");
  if (head.tokens[2] != ":" || head.tokens[4] != "->") {
    fail(ErrorCode::syntax_error, "expected 'map <name> : <P> -> <Q>'", head.number);
  }
  const PosetDocument& dom = find_poset(posets, head.tokens[3], head.number);
  const PosetDocument& cod = find_poset(posets, head.tokens[5], head.number);

  std::vector<std::optional<std::size_t>> images(dom.poset.size());
  for (auto it = lines.begin() + 1; it != lines.end(); ++it) {
    const Line& line = *it;
    if (line.tokens[0] != "send") {
      fail(ErrorCode::syntax_error, "unknown keyword '" + line.tokens[0] + "'", line.number);
    }
    expect_arity(line, 3, "send <x> <y>");
    const auto x = dom.poset.index_of(line.tokens[1]);
    const auto y = cod.poset.index_of(line.tokens[2]);
    if (!x) fail(ErrorCode::unknown_label, "no element '" + line.tokens[1] + "' in " + dom.name, line.number);
    if (!y) fail(ErrorCode::unknown_label, "no element '" + line.tokens[2] + "' in " + cod.name, line.number);
    if (images[*x] && *images[*x] != *y) {
      fail(ErrorCode::conflicting_assignment, "'" + line.tokens[1] + "' is sent twice",
           line.number);
    }
    images[*x] = *y;
  }
  std::vector<std::size_t> assignment;
  for (std::size_t x = 0; x < images.size(); ++x) {
    if (!images[x]) {
      fail(ErrorCode::missing_assignment, "'" + dom.poset.label(x) + "' has no image",
           head.number);
    }
    assignment.push_back(*images[x]);
  }
  return MapDocument{head.tokens[1], dom.name, cod.name,
                     PosetMap(dom.poset, cod.poset, std::move(assignment))};
}

std::string serialize_poset(const Poset& poset, std::string_view name) {
  std::string out = "poset " + std::string(name) + "\n";
  if (poset.size() > 0) {
    out += "elements";
    for (const auto& label : poset.labels()) out += " " + label;
    out += "\n";
  }
  for (auto [lo, hi] : poset.cover_relation().pairs()) {
    out += "cover " + poset.label(lo) + " " + poset.label(hi) + "\n";
  }
  return out;
}

std::string serialize_map(const PosetMap& f, std::string_view name, std::string_view dom_name,
                          std::string_view cod_name) {
  std::string out = "map " + std::string(name) + " : " + std::string(dom_name) + " -> " +
                    std::string(cod_name) + "\n";
  for (std::size_t x = 0; x < f.dom().size(); ++x) {
    out += "send " + f.dom().label(x) + " " + f.cod().label(f(x)) + "\n";
  }
  return out;
}

std::string format_support(const Poset& poset, const SetPartition& support) {
  std::string out;
  for (ElementSet block : support.blocks()) {
    out += "{";
    bool first = true;
    for (std::size_t i : block) {
      if (!first) out += ",";
      out += poset.label(i);
      first = false;
    }
    out += "}";
  }
  return out;
}

std::string format_ordered_partition(const Poset& poset, const OrderedPartition& op) {
  std::string out = format_support(poset, op.support()) + " |";
  bool any = false;
  for (auto [b, c] : op.block_order().pairs()) {
    if (b == c) continue;
    out += " B" + std::to_string(b + 1) + "<=B" + std::to_string(c + 1);
    any = true;
  }
  if (!any) out += " -";
  return out;
}

std::string to_dot(const Poset& poset, std::string_view name) {
  std::string out = "digraph " + quoted(name) + " {\n  rankdir=BT;\n";
  for (const auto& label : poset.labels()) out += "  " + quoted(label) + ";\n";
  for (auto [lo, hi] : poset.cover_relation().pairs()) {
    out += "  " + quoted(poset.label(lo)) + " -> " + quoted(poset.label(hi)) + ";\n";
  }
  return out + "}\n";
}

}  // namespace posetpart
