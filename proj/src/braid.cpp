#include "quandle/braid.hpp"

#include <array>
#include <cctype>
#include <cstdlib>
#include <map>
#include <sstream>

#include "quandle/error.hpp"

namespace quandle {

BraidWord::BraidWord(int strands, std::vector<int> letters) : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) throw DomainError("braid needs at least one strand");
  for (int l : letters_)
    if (l == 0 || std::abs(l) >= strands_)
      throw DomainError("braid letter " + std::to_string(l) + " out of range for " + std::to_string(strands_) +
                        " strands");
}

BraidWord parse_braid(std::string_view text) {
  std::string s(text);
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw ParseError("braid must start with 'strands:'", 1, 1);
  auto parse_int = [&](const std::string& tok, std::size_t col) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || tok.empty())
      throw ParseError("expected an integer, found '" + tok + "'", 1, static_cast<int>(col) + 1);
    return v;
  };
  std::string head = s.substr(0, colon);
  const auto b = head.find_first_not_of(" \t\r\n");
  const auto e = head.find_last_not_of(" \t\r\n");
  head = b == std::string::npos ? "" : head.substr(b, e - b + 1);
  const int strands = parse_int(head, 0);

  std::vector<int> letters;
  std::size_t pos = colon + 1;
  while (pos < s.size()) {
    while (pos < s.size() && (std::isspace(static_cast<unsigned char>(s[pos])) || s[pos] == ',')) ++pos;
    if (pos >= s.size()) break;
    const std::size_t start = pos;
    while (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos])) && s[pos] != ',') ++pos;
    letters.push_back(parse_int(s.substr(start, pos - start), start));
  }
  try {
    return BraidWord(strands, std::move(letters));
  } catch (const DomainError& err) {
    throw ParseError(err.what(), 1, 1);
  }
}

std::string to_string(const BraidWord& braid) {
  std::ostringstream os;
  os << braid.strands() << ':';
  for (int l : braid.letters()) os << ' ' << l;
  return os.str();
}

std::string strand_generator(int j) { return "x" + std::to_string(j); }

std::vector<FreeQuandleElement> braid_strand_action(const BraidWord& braid) {
  std::vector<FreeQuandleElement> s;
  for (int j = 1; j <= braid.strands(); ++j) s.emplace_back(strand_generator(j));
  for (int l : braid.letters()) {
    const std::size_t i = static_cast<std::size_t>(std::abs(l)) - 1;
    FreeQuandleElement left = s[i], right = s[i + 1];
    if (l > 0) {
      s[i] = right;
      s[i + 1] = rack_op(left, right);
    } else {
      s[i] = inv_rack_op(right, left);
      s[i + 1] = left;
    }
  }
  return s;
}

QuandlePresentation braid_closure_presentation(const BraidWord& braid) {
  QuandlePresentation pres;
  for (int j = 1; j <= braid.strands(); ++j) pres.add_generator(strand_generator(j));
  const auto finals = braid_strand_action(braid);
  for (int j = 1; j <= braid.strands(); ++j)
    pres.add_relation(FreeQuandleElement(strand_generator(j)), finals[static_cast<std::size_t>(j - 1)]);
  return pres;
}

LinkDiagram braid_closure_diagram(const BraidWord& braid) {
  // Strands run top to bottom. Edge labels are integers; the closure glues
  // each bottom edge to the top edge of the same position.
  const auto q = static_cast<std::size_t>(braid.strands());
  std::vector<int> cur(q);
  for (std::size_t j = 0; j < q; ++j) cur[j] = static_cast<int>(j) + 1;
  int next = static_cast<int>(q) + 1;
  std::vector<std::array<int, 4>> raw;
  for (int l : braid.letters()) {
    const std::size_t p = static_cast<std::size_t>(std::abs(l)) - 1;
    const int in_left = cur[p], in_right = cur[p + 1];
    const int out_left = next++, out_right = next++;
    if (l > 0)  // under: top-left → bottom-right; over: top-right → bottom-left
      raw.push_back({in_left, out_left, out_right, in_right});
    else  // under: top-right → bottom-left; over: top-left → bottom-right
      raw.push_back({in_right, in_left, out_left, out_right});
    cur[p] = out_left;
    cur[p + 1] = out_right;
  }
  std::map<int, int> glue;
  std::vector<int> loop_raw;
  for (std::size_t j = 0; j < q; ++j) {
    if (cur[j] == static_cast<int>(j) + 1)
      loop_raw.push_back(cur[j]);
    else
      glue[cur[j]] = static_cast<int>(j) + 1;
  }
  // compact relabelling in order of first appearance
  std::map<int, int> compact;
  auto label = [&](int e) {
    if (auto it = glue.find(e); it != glue.end()) e = it->second;
    auto [it, inserted] = compact.emplace(e, static_cast<int>(compact.size()) + 1);
    return std::to_string(it->second);
  };
  std::vector<PdCrossing> pd;
  for (const auto& x : raw) pd.push_back({{label(x[0]), label(x[1]), label(x[2]), label(x[3])}});
  std::vector<std::string> loops;
  for (int e : loop_raw) loops.push_back(label(e));
  return LinkDiagram(std::move(pd), std::move(loops));
}

BraidWord torus_knot_braid(int p, int q) {
  if (q < 2 || p <= q) throw DomainError("torus knot braid requires p > q >= 2");
  std::vector<int> letters;
  for (int k = 0; k < p; ++k)
    for (int i = 1; i < q; ++i) letters.push_back(i);
  return BraidWord(q, std::move(letters));
}

}  // namespace quandle
