#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "lrc/construct.hpp"
#include "lrc/error.hpp"
#include "lrc/io.hpp"
#include "lrc/simd.hpp"
#include "lrc/table.hpp"
#include "lrc/verify.hpp"

namespace {

using namespace lrc;

std::string fmt(const IndexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

gf::Field parse_field(const std::string& text) {
  std::vector<std::uint64_t> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stoull(item, &used, 0));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::FormatError, "bad --field component '" + item + "'");
    }
  }
  if (parts.empty() || parts.size() > 3) throw Error(ErrorKind::FormatError, "--field expects P[,E[,POLY]]");
  const int e = parts.size() > 1 ? static_cast<int>(parts[1]) : 1;
  std::optional<std::uint64_t> poly;
  if (parts.size() > 2) poly = parts[2];
  return gf::Field::make(parts[0], e, poly);
}

int cmd_classify(const params::CodeParams& p) {
  const auto c = params::classify(p);
  std::cout << params::describe(c) << '\n';
  switch (c.verdict) {
    case params::Verdict::ExistsMDS:
    case params::Verdict::Exists: return 0;
    case params::Verdict::NotExists: return 2;
    case params::Verdict::Unknown: return 3;
  }
  return 1;
}

void print_structure(const covers::Structure& s) {
  std::cout << "structure: " << covers::to_string(s.kind) << ", t=" << s.t() << '\n';
  for (int i = 1; i <= s.t(); ++i) std::cout << "  S" << i << " = " << fmt(s.group(i)) << '\n';
  for (std::size_t j = 0; j < s.hub_blocks.size(); ++j)
    std::cout << "  A" << j + 1 << " = " << fmt(s.hub_blocks[j]) << ", hub " << s.hubs[j] << '\n';
  if (s.kind == covers::Kind::Frame) std::cout << "  B = " << fmt(s.tail_block) << '\n';
}

int cmd_construct(const params::CodeParams& p, const std::string& field, std::uint64_t seed,
                  const std::string& out) {
  std::optional<gf::Field> f;
  if (!field.empty()) f = parse_field(field);
  construct::RunOptions opts;
  opts.seed = seed;
  const auto code = construct::construct(p, f, opts);
  std::cout << "method: " << code.method << "\nfield: " << code.field.describe() << "\nclaimed d: " << code.claimed_d
            << '\n';
  print_structure(code.structure);
  if (out.empty()) {
    std::cout << io::to_json(code).dump() << '\n';
  } else {
    io::write_code(code, out);
    std::cout << "written to " << out << '\n';
  }
  return 0;
}

int cmd_verify(const std::string& path, std::uint64_t budget) {
  const auto code = io::read_code(path);
  const auto& p = code.params;
  std::cout << "params: n=" << p.n << " k=" << p.k << " r=" << p.r << " delta=" << p.delta << " over "
            << code.field.describe() << '\n';
  const auto loc = verify::check_locality(code);
  for (const auto& g : loc.per_group) {
    std::cout << "  group " << fmt(g.group) << ": rank " << g.rank << (g.rank_ok ? "" : " (> r)")
              << (g.subsets_ok ? ", repairable" : ", NOT repairable");
    if (g.failing_subset) std::cout << " (subset " << fmt(*g.failing_subset) << " falls short)";
    std::cout << '\n';
  }
  if (!loc.uncovered.empty()) std::cout << "  uncovered coordinates: " << fmt(loc.uncovered) << '\n';
  std::cout << "locality: " << (loc.overall ? "PASS" : "FAIL") << '\n';

  bool ok = loc.overall;
  try {
    const auto d = verify::min_distance(code.generator, budget);
    std::cout << "distance: d=" << d.d << " ("
              << (d.method == verify::DistanceMethod::WeightEnumeration ? "weight enumeration" : "rank criterion")
              << ")\n";
  } catch (const Error& e) {
    std::cout << "distance: skipped (" << e.what() << ")\n";
  }
  try {
    const auto opt = verify::certify_optimal(code, budget);
    std::cout << "optimal: " << (opt.optimal ? "YES" : "NO") << " (all " << opt.subsets << " column sets of size "
              << opt.subset_size << " have rank k; bound d=" << opt.bound_d << ")";
    if (opt.witness) std::cout << ", deficient set " << fmt(*opt.witness);
    std::cout << '\n';
    ok = ok && opt.optimal;
  } catch (const Error& e) {
    std::cout << "optimal: not checked (" << e.what() << ")\n";
  }
  if (p.k % p.r == 0 && p.r < p.k) {
    const auto st = verify::check_structure_theorem(code);
    std::cout << "structure theorem: " << (st.ok ? "PASS" : "FAIL") << '\n';
    for (const auto& v : st.violations) std::cout << "  " << v << '\n';
  }
  return ok ? 0 : 4;
}

int cmd_demo() {
  const params::CodeParams p{12, 5, 2, 3};
  const auto code = construct::construct(p);
  std::cout << "File split into k=5 packets, stored as n=12 coded symbols with (r,delta)=(2,3)\n"
            << "method: " << code.method << " over " << code.field.describe() << '\n';
  for (int i = 1; i <= code.structure.t(); ++i) std::cout << "group " << i << ": " << fmt(code.structure.group(i)) << '\n';
  const auto d = verify::min_distance(code.generator);
  std::cout << "d = " << d.d << " (bound " << params::distance_bound(p) << ")\n";

  const auto& g = code.generator;
  bool all = true;
  for (const auto& grp : code.structure.groups) {
    for (int x : grp) {
      IndexSet others;
      for (int y : grp)
        if (y != x) others.push_back(y);
      // Any 2 of the 3 other symbols in the group repair x.
      for (std::size_t a = 0; a < others.size(); ++a)
        for (std::size_t b = a + 1; b < others.size(); ++b) {
          const bool ok = linalg::in_span({g.field(), g.column(x)}, {others[a], others[b]}, g);
          all = all && ok;
          if (x == 1 && a == 0 && b == 1)
            std::cout << "symbol 1 recoverable from {" << others[a] << "," << others[b] << "}: " << (ok ? "yes" : "no")
                      << '\n';
        }
    }
  }
  std::cout << "every symbol recoverable from any 2 survivors of its group: " << (all ? "yes" : "no") << '\n';
  const IndexSet five{1, 3, 7, 8, 10};
  const int rk = linalg::rank(g, five);
  std::cout << "file recoverable from symbols " << fmt(five) << ": " << (rk == p.k ? "yes" : "no") << " (rank " << rk
            << ")\n";
  return all && rk == p.k ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Locally repairable codes: classify parameters, construct optimal codes, verify them"};
  app.require_subcommand(1);
  std::string kernels;
  app.add_option("--kernels", kernels, "Arithmetic kernels: scalar, avx2 or auto");

  params::CodeParams p;
  auto add_params = [&](CLI::App* sub) {
    sub->add_option("n", p.n)->required();
    sub->add_option("k", p.k)->required();
    sub->add_option("r", p.r)->required();
    sub->add_option("delta", p.delta)->required();
  };

  auto* classify = app.add_subcommand("classify", "Classify (n, k, r, delta)");
  add_params(classify);

  auto* table = app.add_subcommand("table", "Grid of verdict tags");
  int tn = 60, tdelta = 5;
  std::string tr = "2..11", tk = "11..20";
  table->add_option("--n", tn, "Code length")->capture_default_str();
  table->add_option("--delta", tdelta, "Locality tolerance")->capture_default_str();
  table->add_option("--r", tr, "Locality range a..b")->capture_default_str();
  table->add_option("--k", tk, "Dimension range c..d")->capture_default_str();

  auto* cons = app.add_subcommand("construct", "Construct an optimal code");
  add_params(cons);
  std::string field, out;
  std::uint64_t seed = 0;
  cons->add_option("--field", field, "P[,E[,POLY]]");
  cons->add_option("--seed", seed, "Seed for the extension step")->capture_default_str();
  cons->add_option("--out", out, "Output file");

  auto* ver = app.add_subcommand("verify", "Verify a code file");
  std::string path;
  std::uint64_t budget = verify::kDefaultBudget;
  ver->add_option("file", path)->required();
  ver->add_option("--budget", budget, "Enumeration budget")->capture_default_str();

  auto* demo = app.add_subcommand("demo", "The n=12, k=5, (2,3) storage example");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (!kernels.empty() && !simd::select_kernels(kernels)) {
    std::cerr << "unknown or unavailable kernels '" << kernels << "'\n";
    return 1;
  }

  try {
    if (*classify) return cmd_classify(p);
    if (*table) {
      std::cout << table::render(tn, tdelta, table::parse_range(tr), table::parse_range(tk));
      return 0;
    }
    if (*cons) return cmd_construct(p, field, seed, out);
    if (*ver) return cmd_verify(path, budget);
    if (*demo) return cmd_demo();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::NotConstructible: return 2;
      case ErrorKind::UnknownCase: return 3;
      case ErrorKind::InvalidParams:
      case ErrorKind::FormatError: return 1;
      default: return 4;
    }
  }
  return 1;
}
