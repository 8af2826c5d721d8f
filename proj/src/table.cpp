#include "lrc/table.hpp"

#include <array>
#include <iomanip>
#include <sstream>

#include "lrc/error.hpp"
#include "lrc/params.hpp"

namespace lrc::table {

namespace {

// Published grid for n=60, delta=5: rows r=2..11, columns k=11..20.
constexpr std::array<std::array<const char*, 10>, 10> kPublished = {{
    {"E_M", "E_M", "E_M", "E_M", "E_M", "E_M", "E_M", "E_M", "E_M", "E_M"},
    {"N11", "N10", "E27", "E27", "N10", "N11", "N11", "N10", "N11", "N11"},
    {"E27", "N10", "E27", "E27", "N11", "N10", "E27", "E27", "N11", "N10"},
    {"E16", "E27", "E27", "E27", "N10", "E27", "E27", "E27", "N12", "N10"},
    {"E_M", "E_M", "E_M", "E_M", "E_M", "E_M", "E_M", "E_M", "E_M", "E_M"},
    {"E26", "E26", "E26", "N10", "E26", "E26", "E26", "E26", "E26", "~"},
    {"E_M", "E_M", "E_M", "E_M", "E_M", "E_M", "E_M", "E_M", "E_M", "E_M"},
    {"E16", "E16", "E16", "E26", "E26", "E26", "E26", "N10", "E16", "E16"},
    {"~", "~", "~", "~", "~", "~", "~", "~", "~", "N10"},
    {"E_M", "E_M", "E_M", "E_M", "E_M", "E_M", "E_M", "E_M", "E_M", "E_M"},
}};

bool exists_tag(const std::string& t) { return t.size() > 1 && (t[0] == 'E' || t == "MDS"); }

std::string explain(const Cell& c, int n, int delta) {
  const params::CodeParams p{n, c.k, c.r, delta};
  const auto d = params::decompose(p);
  const int s = c.r + delta - 1;
  std::ostringstream os;
  os << "(r=" << c.r << ",k=" << c.k << ") table " << *c.reference << ", classifier " << c.tag << ": w=" << d.w
     << " m=" << d.m << " u=" << d.u << " v=" << d.v;
  if (*c.reference == "E26" && c.tag == "~")
    os << "; hub frame needs w >= r+delta-1-m = " << s - d.m << ", which fails";
  else if (exists_tag(*c.reference) && exists_tag(c.tag))
    os << "; both exist, a different sufficient condition is checked first";
  else if (*c.reference == "N12")
    os << "; N12 is not a legend tag";
  else if (*c.reference == "E27" && c.tag == "N11")
    os << "; u >= 2(r-v)+1 holds, and min(2(r-v), w) >= u fails";
  return os.str();
}

}  // namespace

Range parse_range(const std::string& text) {
  try {
    const auto dots = text.find("..");
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const int v = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {v, v};
    }
    const std::string lo = text.substr(0, dots), hi = text.substr(dots + 2);
    Range r{std::stoi(lo, &used), 0};
    if (used != lo.size()) throw std::invalid_argument(text);
    r.hi = std::stoi(hi, &used);
    if (used != hi.size()) throw std::invalid_argument(text);
    if (r.lo > r.hi) throw std::invalid_argument(text);
    return r;
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::FormatError, "expected a range like 2..11, got '" + text + "'");
  }
}

std::optional<std::string> reference_tag(int r, int k) {
  if (r < 2 || r > 11 || k < 11 || k > 20) return std::nullopt;
  return kPublished[static_cast<std::size_t>(r - 2)][static_cast<std::size_t>(k - 11)];
}

std::vector<Cell> classify_grid(int n, int delta, Range r, Range k) {
  std::vector<Cell> out;
  for (int ri = r.lo; ri <= r.hi; ++ri)
    for (int ki = k.lo; ki <= k.hi; ++ki) {
      Cell c{ri, ki, "-", std::nullopt};
      const params::CodeParams p{n, ki, ri, delta};
      if (ri >= 1 && ri <= ki && ki <= n && delta >= 2) c.tag = params::table_tag(p, params::classify(p));
      if (n == 60 && delta == 5) c.reference = reference_tag(ri, ki);
      out.push_back(std::move(c));
    }
  return out;
}

std::string render(int n, int delta, Range r, Range k) {
  const auto cells = classify_grid(n, delta, r, k);
  std::ostringstream os;
  os << "n=" << n << ", delta=" << delta << "\n";
  os << std::setw(5) << "r\\k";
  for (int ki = k.lo; ki <= k.hi; ++ki) os << std::setw(6) << ki;
  os << '\n';
  std::size_t i = 0;
  for (int ri = r.lo; ri <= r.hi; ++ri) {
    os << std::setw(5) << ri;
    for (int ki = k.lo; ki <= k.hi; ++ki) os << std::setw(6) << cells[i++].tag;
    os << '\n';
  }
  std::vector<std::string> notes;
  for (const auto& c : cells)
    if (c.reference && *c.reference != c.tag) notes.push_back(explain(c, n, delta));
  if (!notes.empty()) {
    os << "\nCells differing from the published table:\n";
    for (const auto& note : notes) os << "  * " << note << '\n';
  }
  return os.str();
}

}  // namespace lrc::table
