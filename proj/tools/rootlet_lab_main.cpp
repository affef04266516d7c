// Command-line driver: enumerate atlases, run the verification battery,
// answer ad-hoc join/rootlet/centraliser queries, and export artifacts.
#include <algorithm>
#include <cctype>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rootlet/atlas_io.hpp"
#include "rootlet/central.hpp"
#include "rootlet/ideals.hpp"
#include "rootlet/lattice.hpp"
#include "rootlet/verify.hpp"

namespace {

using namespace rootlet;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

bool integer_cell(const std::string& s) {
  size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

// One summand: an optional positive integer multiplier followed by theta,
// "alphaK" or the Greek spellings, with K a 1-based display index.
Root parse_term(const RootSystem& rs, Numbering nb, const std::string& term) {
  size_t i = 0;
  int count = 1;
  if (i < term.size() && std::isdigit(static_cast<unsigned char>(term[i]))) {
    count = 0;
    while (i < term.size() && std::isdigit(static_cast<unsigned char>(term[i])))
      count = count * 10 + (term[i++] - '0');
  }
  std::string rest = term.substr(i);
  Root base;
  if (rest == "theta" || rest == "\xce\xb8") {
    base = rs.theta;
  } else {
    size_t skip = 0;
    if (rest.rfind("alpha", 0) == 0) skip = 5;
    else if (rest.rfind("\xce\xb1", 0) == 0) skip = 2;
    else throw std::invalid_argument("cannot parse root term '" + term + "'");
    std::string num = rest.substr(skip);
    if (!integer_cell(num) || num[0] == '-')
      throw std::invalid_argument("cannot parse root term '" + term + "'");
    int idx = std::stoi(num);
    if (idx < 1 || idx > rs.rank)
      throw std::invalid_argument("simple-root index out of range in '" + term + "'");
    std::vector<int> c(rs.rank, 0);
    c[idx - 1] = 1;
    base = rs.from_display(c, nb);
  }
  for (int& x : base) x *= count;
  return base;
}

Root parse_symbolic(const RootSystem& rs, Numbering nb, const std::string& expr) {
  Root acc(rs.rank, 0);
  for (const std::string& term : split(expr, '+')) {
    if (term.empty()) throw std::invalid_argument("empty term in '" + expr + "'");
    Root t = parse_term(rs, nb, term);
    for (int i = 0; i < rs.rank; ++i) acc[i] += t[i];
  }
  return acc;
}

// A single root: either a full coefficient vector "1,0,1" (display
// numbering) or a symbolic expression like "theta" / "alpha1+alpha2".
Root parse_root_arg(const RootSystem& rs, Numbering nb, const std::string& arg) {
  std::vector<std::string> cells = split(arg, ',');
  if (std::all_of(cells.begin(), cells.end(), integer_cell)) {
    if (static_cast<int>(cells.size()) != rs.rank)
      throw std::invalid_argument("expected " + std::to_string(rs.rank) + " coefficients in '" + arg
                                  + "', got " + std::to_string(cells.size()));
    std::vector<int> c;
    for (const std::string& cell : cells) c.push_back(std::stoi(cell));
    return rs.from_display(c, nb);
  }
  if (cells.size() != 1)
    throw std::invalid_argument("cannot parse '" + arg + "' as a single root");
  return parse_symbolic(rs, nb, cells[0]);
}

// A list of roots: ';' always separates roots; ',' separates roots when the
// cells are symbolic, coefficients when they are all integers.
void parse_root_list(const RootSystem& rs, Numbering nb, const std::string& arg,
                     std::vector<Root>& out) {
  if (arg.find(';') != std::string::npos) {
    for (const std::string& piece : split(arg, ';'))
      if (!piece.empty()) out.push_back(parse_root_arg(rs, nb, piece));
    return;
  }
  std::vector<std::string> cells = split(arg, ',');
  if (std::all_of(cells.begin(), cells.end(), integer_cell)) {
    out.push_back(parse_root_arg(rs, nb, arg));
  } else {
    for (const std::string& cell : cells) {
      if (cell.empty()) throw std::invalid_argument("empty root in '" + arg + "'");
      out.push_back(parse_symbolic(rs, nb, cell));
    }
  }
}

RootSet ideal_set(const RootSystem& rs, Numbering nb, const std::vector<Root>& roots, bool close) {
  RootSet s;
  for (const Root& g : roots) {
    int idx = rs.index_if_positive(g);
    if (idx < 0)
      throw std::invalid_argument("not a positive root: " + rs.coeff_string(g, nb));
    s.set(idx);
  }
  if (close) {
    s = rs.upper_closure(s);
  } else {
    for (int i : s.indices())
      for (int j = 0; j < static_cast<int>(rs.positive.size()); ++j)
        if (rs.root_leq(i, j) && !s.test(j))
          throw std::invalid_argument("not an ideal: contains " + rs.pretty(rs.positive[i], nb)
                                      + " but is missing " + rs.pretty(rs.positive[j], nb)
                                      + " above it (pass --close to complete the set)");
  }
  std::vector<int> idx = s.indices();
  for (size_t a = 0; a < idx.size(); ++a)
    for (size_t b = a; b < idx.size(); ++b)
      if (rs.sum_idx[idx[a]][idx[b]] >= 0)
        throw std::invalid_argument("not abelian: " + rs.pretty(rs.positive[idx[a]], nb) + " + "
                                    + rs.pretty(rs.positive[idx[b]], nb) + " = "
                                    + rs.pretty(rs.positive[rs.sum_idx[idx[a]][idx[b]]], nb)
                                    + " is a root");
  return s;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw std::runtime_error("error while writing '" + path + "'");
}

// ---------------------------------------------------------------------------

int cmd_enumerate(const std::string& type_name, const std::string& out_path) {
  RootSystem rs = RootSystem::build(CartanType::parse(type_name));
  Atlas atlas = enumerate_ideals(rs);
  std::cout << atlas.ideals.size() << " ideals, " << atlas.fibers.size() << " long-root fibers\n";
  std::string path = out_path.empty() ? rs.type.name() + "_atlas.json" : out_path;
  write_file(path, atlas_json(rs, atlas).dump(2) + "\n");
  std::cout << "wrote " << path << "\n";
  return 0;
}

std::string render_report(const TypeReport& rep) {
  std::ostringstream os;
  os << "== " << rep.type.name() << " ==\n";
  for (const CheckResult& ch : rep.checks) {
    os << std::left << std::setw(10) << status_word(ch.status) << ch.name;
    if (!ch.details.empty()) os << "  (" << ch.details << ")";
    os << "\n";
  }
  return os.str();
}

int cmd_verify(const std::vector<std::string>& type_args, const std::string& filter) {
  std::vector<CartanType> types;
  if (type_args.size() == 1 && type_args[0] == "all") {
    types = all_types_up_to_rank8();
  } else {
    for (const std::string& t : type_args) types.push_back(CartanType::parse(t));
  }
  VerifyOptions opt;
  opt.filter = filter;
  opt.brute_cap = default_brute_cap();

  // fan out per type; buffered output keeps the order deterministic
  std::vector<std::future<TypeReport>> futures;
  futures.reserve(types.size());
  for (CartanType t : types)
    futures.push_back(std::async(std::launch::async, [t, opt] { return run_checks(t, opt); }));

  size_t n_pass = 0, n_fail = 0, n_reported = 0;
  for (auto& f : futures) {
    TypeReport rep = f.get();
    std::cout << render_report(rep);
    for (const CheckResult& ch : rep.checks) {
      n_pass += ch.status == CheckStatus::pass;
      n_fail += ch.status == CheckStatus::fail;
      n_reported += ch.status == CheckStatus::reported;
    }
  }
  std::cout << "== summary ==\n"
            << types.size() << " types, " << (n_pass + n_fail + n_reported) << " checks: " << n_pass
            << " passed, " << n_fail << " failed, " << n_reported << " reported\n";
  return n_fail ? 2 : 0;
}

int cmd_join(const std::string& type_name, const std::string& a_arg, const std::string& b_arg,
             Numbering nb, const std::string& format) {
  RootSystem rs = RootSystem::build(CartanType::parse(type_name));
  Root a = parse_root_arg(rs, nb, a_arg);
  Root b = parse_root_arg(rs, nb, b_arg);
  for (const Root* g : {&a, &b})
    if (!rs.is_positive_root(*g))
      throw std::invalid_argument("not a positive root: " + rs.coeff_string(*g, nb));
  JoinResult jr = join(rs, a, b);
  const char* mode = jr.mode == JoinMode::comparable ? "comparable"
                     : jr.mode == JoinMode::overlap_max ? "overlap_max"
                                                        : "disjoint_bridge";
  if (format == "json") {
    nlohmann::json j;
    j["value"] = rs.display_coeffs(jr.value, nb);
    j["mode"] = mode;
    if (jr.bridge) j["bridge"] = rs.display_coeffs(*jr.bridge, nb);
    else j["bridge"] = nullptr;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << rs.coeff_string(jr.value, nb);
    if (jr.bridge) std::cout << " (bridge: " << rs.coeff_string(*jr.bridge, nb) << ")";
    std::cout << "\n";
  }
  return 0;
}

int cmd_rootlet(const std::string& type_name, const std::vector<std::string>& root_args,
                Numbering nb, bool close) {
  RootSystem rs = RootSystem::build(CartanType::parse(type_name));
  std::vector<Root> roots;
  for (const std::string& arg : root_args) parse_root_list(rs, nb, arg, roots);
  RootSet s = ideal_set(rs, nb, roots, close);
  if (s.empty()) throw std::invalid_argument("the empty ideal has no rootlet");
  Atlas atlas = enumerate_ideals(rs);
  int id = atlas.id_for(s);
  if (id < 0) throw std::logic_error("validated ideal missing from the enumeration");
  std::cout << rs.pretty(rs.positive[*atlas.ideals[id].rootlet_idx], nb) << "\n";
  return 0;
}

int cmd_centralizer(const std::string& type_name, const std::vector<std::string>& root_args,
                    Numbering nb, bool close) {
  RootSystem rs = RootSystem::build(CartanType::parse(type_name));
  std::vector<Root> roots;
  for (const std::string& arg : root_args) parse_root_list(rs, nb, arg, roots);
  RootSet s = ideal_set(rs, nb, roots, close);
  CentraliserProfile p = centraliser(rs, s);
  if (self_centralising(rs, s)) {
    std::cout << "self-centralising; P3\n";
  } else {
    std::cout << p.pos.count() << " positive roots, " << p.neg.count()
              << " negative roots, toral dimension " << p.toral_dim << "; "
              << (p.p3 ? "P3" : p.p2 ? "P2" : p.p1 ? "P1" : "not P1") << "\n";
  }
  return 0;
}

int cmd_export(const std::string& type_name, const std::string& what, std::string format,
               Numbering nb, const std::string& out_path) {
  RootSystem rs = RootSystem::build(CartanType::parse(type_name));
  Atlas atlas = enumerate_ideals(rs);
  std::string content;
  if (what == "hasse") {
    if (format.empty()) format = "dot";
    if (format != "dot") throw std::invalid_argument("hasse supports only the dot format");
    content = hasse_dot(rs, atlas);
  } else if (what == "fibers") {
    if (format.empty()) format = "json";
    if (format == "json") content = fibers_json(rs, atlas).dump(2) + "\n";
    else if (format == "md") content = fibers_markdown(rs, atlas, nb);
    else if (format == "csv") content = fibers_csv(rs, atlas, nb);
    else throw std::invalid_argument("fibers supports json, md or csv");
  } else if (what == "table1") {
    if (format.empty()) format = "md";
    std::vector<Table1Row> rows = table1(rs, atlas, nb);  // rejects non-E8 types
    if (format == "md") content = table1_markdown(rs, rows, nb);
    else if (format == "csv") content = table1_csv(rs, rows, nb);
    else throw std::invalid_argument("table1 supports md or csv");
  } else {
    throw std::invalid_argument("unknown export target '" + what + "' (expected hasse, fibers or table1)");
  }
  std::string path = out_path.empty() ? rs.type.name() + "_" + what + "." + format : out_path;
  write_file(path, content);
  std::cout << "wrote " << path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with abelian ideals of a Borel subalgebra"};
  app.require_subcommand(1);

  std::string numbering = "bourbaki";
  std::string out_path, filter = "*", format;
  bool close = false;

  auto* sub_enum = app.add_subcommand("enumerate", "build the atlas of abelian ideals and write it as JSON");
  std::string enum_type;
  sub_enum->add_option("type", enum_type, "Cartan type, e.g. B3")->required();
  sub_enum->add_option("--out", out_path, "output path (default <type>_atlas.json)");

  auto* sub_verify = app.add_subcommand("verify", "run the verification battery");
  std::vector<std::string> verify_types;
  sub_verify->add_option("types", verify_types, "Cartan types, or 'all'")->required();
  sub_verify->add_option("--filter", filter, "glob over check names (default *)");

  auto* sub_join = app.add_subcommand("join", "least upper bound of two positive roots");
  std::string join_type, join_a, join_b;
  sub_join->add_option("type", join_type)->required();
  sub_join->add_option("eta", join_a, "first root")->required();
  sub_join->add_option("beta", join_b, "second root")->required();
  sub_join->add_option("--numbering", numbering)->check(CLI::IsMember({"paper", "bourbaki"}));
  sub_join->add_option("--format", format, "text (default) or json");

  auto* sub_rootlet = app.add_subcommand("rootlet", "the long root attached to an abelian ideal");
  std::string rootlet_type;
  std::vector<std::string> rootlet_roots;
  sub_rootlet->add_option("type", rootlet_type)->required();
  sub_rootlet->add_option("roots", rootlet_roots, "roots of the ideal")->required();
  sub_rootlet->add_option("--numbering", numbering)->check(CLI::IsMember({"paper", "bourbaki"}));
  sub_rootlet->add_flag("--close", close, "complete the set to its upper closure");

  auto* sub_central = app.add_subcommand("centralizer", "centraliser profile of an abelian ideal");
  std::string central_type;
  std::vector<std::string> central_roots;
  sub_central->add_option("type", central_type)->required();
  sub_central->add_option("roots", central_roots, "roots of the ideal")->required();
  sub_central->add_option("--numbering", numbering)->check(CLI::IsMember({"paper", "bourbaki"}));
  sub_central->add_flag("--close", close, "complete the set to its upper closure");

  auto* sub_export = app.add_subcommand("export", "write hasse, fibers or table1 artifacts");
  std::string export_type, export_what, export_fmt;
  sub_export->add_option("type", export_type)->required();
  sub_export->add_option("what", export_what, "hasse, fibers or table1")->required();
  sub_export->add_option("fmt", export_fmt, "dot, json, md or csv (defaults depend on the target)");
  sub_export->add_option("--format", format, "same as the positional format");
  sub_export->add_option("--out", out_path, "output path (default <type>_<what>.<format>)");
  sub_export->add_option("--numbering", numbering)->check(CLI::IsMember({"paper", "bourbaki"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    Numbering nb = numbering_parse(numbering);
    if (*sub_enum) return cmd_enumerate(enum_type, out_path);
    if (*sub_verify) return cmd_verify(verify_types, filter);
    if (*sub_join) return cmd_join(join_type, join_a, join_b, nb, format);
    if (*sub_rootlet) return cmd_rootlet(rootlet_type, rootlet_roots, nb, close);
    if (*sub_central) return cmd_centralizer(central_type, central_roots, nb, close);
    if (*sub_export)
      return cmd_export(export_type, export_what, export_fmt.empty() ? format : export_fmt, nb, out_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
