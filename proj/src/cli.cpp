#include "bsato/cli.hpp"

#include "bsato/budget.hpp"
#include "bsato/database.hpp"
#include "bsato/dmod.hpp"
#include "bsato/errors.hpp"
#include "bsato/fs_action.hpp"
#include "bsato/stratify.hpp"
#include "bsato/token.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <iostream>
#include <set>
#include <sstream>

namespace bsato {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

std::string read_arg(const std::string& arg, std::istream& in) {
  if (arg != "-") return arg;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Variables auto-detected from the text, sorted by name; -n pads the ambient
// algebra with fresh x<k> names.
CPoly parse_input_poly(const std::string& text, int n) {
  std::set<std::string> names;
  for (auto& t : tok::lex(text))
    if (t.kind == tok::Kind::Name) names.insert(t.text);
  if (n >= 0 && (int)names.size() > n)
    throw domain_error("polynomial uses more variables than -n allows");
  for (int k = 1; n >= 0 && (int)names.size() < n; ++k) {
    std::string fresh = "x" + std::to_string(k);
    if (!names.count(fresh)) names.insert(fresh);
  }
  std::vector<std::string> sorted(names.begin(), names.end());
  if (sorted.empty()) sorted.push_back("x1");
  return CPoly::parse(Ring::make(sorted), text);
}

void report(std::ostream& err, Clock::time_point t0, const Budget& bud, int depth, int strata) {
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
  err << "# wall-ms=" << ms << " gb-pairs=" << bud.pairs_used.load() << " depth=" << depth
      << " strata=" << strata << "\n";
}

json roots_json(const CPoly& b) {
  json out = json::array();
  for (auto& r : bs_roots(b)) out.push_back(to_string(r));
  return out;
}

int cmd_bpoly(const std::string& poly, int n, bool as_json, std::ostream& out, std::ostream& err,
              std::istream& in) {
  Budget bud;
  auto t0 = Clock::now();
  CPoly f = parse_input_poly(read_arg(poly, in), n);
  CPoly b = bpoly(f, &bud);
  if (as_json)
    out << json{{"b", b.str()}, {"factored", factored_b(b)}, {"roots", roots_json(b)}}.dump()
        << "\n";
  else
    out << factored_b(b) << "\n";
  report(err, t0, bud, 0, 0);
  return 0;
}

int cmd_annfs(const std::string& poly, int n, bool as_json, std::ostream& out, std::ostream& err,
              std::istream& in) {
  Budget bud;
  auto t0 = Clock::now();
  CPoly f = parse_input_poly(read_arg(poly, in), n);
  AnnFsResult A = ann_fs(f, &bud);
  if (as_json) {
    json gens = json::array();
    for (auto& g : A.gens) gens.push_back(g.str());
    out << json{{"s", A.s_name}, {"gens", gens}}.dump() << "\n";
  } else {
    for (auto& g : A.gens) out << g.str() << "\n";
  }
  report(err, t0, bud, 0, 0);
  return 0;
}

int cmd_verify(const std::string& poly, int n, bool as_json, std::ostream& out, std::ostream& err,
               std::istream& in) {
  Budget bud;
  auto t0 = Clock::now();
  CPoly f = parse_input_poly(read_arg(poly, in), n);
  BCertificate cert = bpoly_with_certificate(f, &bud);

  // independent oracle: b(s) f^s - Q f^(s+1) must vanish identically
  RingPtr FR = fs_ring(cert.P.sig());
  CPoly fe = f.rename_into(FR);
  FsState lhs{cert.b.rename_into(FR), 0};
  FsState rhs = fs_apply(cert.P, f, FsState{fe, 0});
  bool pass = fs_equal(f, lhs, rhs);

  if (as_json) {
    out << json{{"b", cert.b.str()},
                {"factored", factored_b(cert.b)},
                {"Q", cert.P.str()},
                {"pass", pass}}
               .dump()
        << "\n";
  } else {
    out << "b = " << factored_b(cert.b) << "\n";
    out << "Q = " << cert.P.str() << "\n";
    out << "functional equation b(s)*f^s = Q*f^(s+1): " << (pass ? "PASS" : "FAIL") << "\n";
  }
  report(err, t0, bud, 0, 0);
  return pass ? 0 : 1;
}

void print_strata(const Database& db, std::ostream& out) {
  if (db.kind == "ann") {
    for (auto& st : db.ann_strata) {
      out << "gens =";
      for (auto& g : st.gens) out << " " << g.str() << ";";
      out << "  [pieces: " << st.region.pieces.size() << "]\n";
    }
    return;
  }
  for (auto& st : db.strata)
    out << "b = " << factored_b(st.b) << "  [pieces: " << st.region.pieces.size() << "]\n";
}

int meta_depth(const Database& db) {
  auto it = db.meta.find("max_depth");
  return it == db.meta.end() ? 0 : std::stoi(it->second);
}

int finish_stratify(const Database& db, const std::string& out_path, bool as_json,
                    std::ostream& out, std::ostream& err, Clock::time_point t0,
                    const Budget& bud) {
  if (as_json)
    out << serialize(db);
  else
    print_strata(db, out);
  if (!out_path.empty()) save_database(db, out_path);
  size_t count = db.kind == "ann" ? db.ann_strata.size() : db.strata.size();
  report(err, t0, bud, meta_depth(db), (int)count);
  return 0;
}

int dump_partial(const StratifyAbort& ab, const std::string& what, const std::string& out_path,
                 std::ostream& out, std::ostream& err) {
  err << "error: " << what << "\n";
  out << "partial strata:\n";
  print_strata(ab.partial, out);
  out << "unexplored primes:\n";
  for (auto& p : ab.pending_primes) out << "  (" << p << ")\n";
  if (!out_path.empty()) save_database(ab.partial, out_path);
  return 3;
}

int cmd_stratify(int n, int d, bool ann, int jobs, long max_pairs, double max_seconds,
                 const std::string& out_path, bool as_json, std::ostream& out,
                 std::ostream& err) {
  Budget bud;
  bud.max_pairs = max_pairs;
  bud.max_seconds = max_seconds;
  auto t0 = Clock::now();
  StratifyAbort ab;
  try {
    Database db = ann ? stratify_ann(n, d, &bud, jobs, &ab) : stratify_bsp(n, d, &bud, jobs, &ab);
    if (ann) db = compress_ann(db, &bud);
    return finish_stratify(db, out_path, as_json, out, err, t0, bud);
  } catch (const resource_error& e) {
    if (!ab.aborted) throw;
    return dump_partial(ab, e.what(), out_path, out, err);
  }
}

int cmd_family(const std::string& poly, const std::string& params_csv, int jobs, long max_pairs,
               double max_seconds, const std::string& out_path, bool as_json, std::ostream& out,
               std::ostream& err, std::istream& in) {
  std::string text = read_arg(poly, in);
  std::set<std::string> names;
  for (auto& t : tok::lex(text))
    if (t.kind == tok::Kind::Name) names.insert(t.text);

  std::vector<std::string> params;
  if (!params_csv.empty()) {
    std::istringstream ss(params_csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      if (!names.count(item)) throw domain_error("--params name not in polynomial: " + item);
      params.push_back(item);
    }
  } else {
    // coordinates look like x, y, z, w or x<digits>; everything else is a
    // family parameter
    auto is_coord = [](const std::string& s) {
      if (s == "x" || s == "y" || s == "z" || s == "w") return true;
      if (s.size() >= 2 && s[0] == 'x' &&
          std::all_of(s.begin() + 1, s.end(), [](char c) { return c >= '0' && c <= '9'; }))
        return true;
      return false;
    };
    for (auto& v : names)
      if (!is_coord(v)) params.push_back(v);
  }
  std::sort(params.begin(), params.end());
  if (params.empty()) throw domain_error("stratify-family: no free parameters found");
  if (params.size() == names.size())
    throw domain_error("stratify-family: no coordinate variables found");

  std::vector<std::string> all(names.begin(), names.end());
  CPoly f = CPoly::parse(Ring::make(all), text);
  RingPtr C = Ring::make(params);

  Budget bud;
  bud.max_pairs = max_pairs;
  bud.max_seconds = max_seconds;
  auto t0 = Clock::now();
  StratifyAbort ab;
  try {
    Database db = stratify_bsp_family(f, C, &bud, jobs, &ab);
    return finish_stratify(db, out_path, as_json, out, err, t0, bud);
  } catch (const resource_error& e) {
    if (!ab.aborted) throw;
    return dump_partial(ab, e.what(), out_path, out, err);
  }
}

int cmd_lookup(const std::string& poly, const std::string& db_path, bool as_json,
               std::ostream& out, std::ostream& err, std::istream& in) {
  Budget bud;
  auto t0 = Clock::now();
  Database db = load_database(db_path);
  CPoly f = parse_input_poly(read_arg(poly, in), -1);
  CPoly b = lookup(f, db);
  if (as_json)
    out << json{{"b", b.str()}, {"factored", factored_b(b)}, {"roots", roots_json(b)}}.dump()
        << "\n";
  else
    out << factored_b(b) << "\n";
  report(err, t0, bud, 0, 0);  // gb-pairs stays 0: lookup is evaluation only
  return 0;
}

int cmd_tvalue(const std::string& db_path, bool as_json, std::ostream& out) {
  Database db = load_database(db_path);
  int t = t_of(db);
  if (as_json)
    out << json{{"t", t}}.dump() << "\n";
  else
    out << t << "\n";
  return 0;
}

// Piece grammar: "g1, g2, ... \ h1, h2, ..." (outer \ inner); empty or "0"
// sides mean the zero ideal.
std::vector<std::string> split_gens(const std::string& side) {
  std::vector<std::string> out;
  std::istringstream ss(side);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t a = item.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) continue;
    size_t b = item.find_last_not_of(" \t\r\n");
    item = item.substr(a, b - a + 1);
    if (!item.empty() && item != "0") out.push_back(item);
  }
  return out;
}

int cmd_canon(const std::vector<std::string>& piece_args, bool as_json, std::ostream& out,
              std::ostream& err, std::istream& in) {
  std::vector<std::string> specs;
  for (auto& a : piece_args) {
    if (a != "-") {
      specs.push_back(a);
      continue;
    }
    std::string line;
    while (std::getline(in, line))
      if (line.find_first_not_of(" \t\r") != std::string::npos) specs.push_back(line);
  }
  if (specs.empty()) throw domain_error("canon: no pieces given");

  std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> raw;
  std::set<std::string> names;
  for (auto& spec : specs) {
    size_t cut = spec.find('\\');
    std::string outer = spec.substr(0, cut == std::string::npos ? spec.size() : cut);
    std::string inner = cut == std::string::npos ? "1" : spec.substr(cut + 1);
    raw.emplace_back(split_gens(outer), split_gens(inner));
    for (auto& g : raw.back().first)
      for (auto& t : tok::lex(g))
        if (t.kind == tok::Kind::Name) names.insert(t.text);
    for (auto& g : raw.back().second)
      for (auto& t : tok::lex(g))
        if (t.kind == tok::Kind::Name) names.insert(t.text);
  }
  if (names.empty()) throw domain_error("canon: no variables in pieces");
  RingPtr R = Ring::make(std::vector<std::string>(names.begin(), names.end()));

  Budget bud;
  auto t0 = Clock::now();
  Constructible S;
  for (auto& [og, ig] : raw) {
    std::vector<CPoly> o, i;
    for (auto& g : og) o.push_back(CPoly::parse(R, g));
    for (auto& g : ig) i.push_back(CPoly::parse(R, g));
    S.pieces.push_back(make_piece(make_ideal(R, o), make_ideal(R, i)));
  }
  Constructible C = canonicalize(S, &bud);

  auto gens_line = [](const CommIdeal& I) {
    std::string s;
    for (size_t k = 0; k < I.gens.size(); ++k) s += (k ? ", " : "") + I.gens[k].str();
    return s.empty() ? std::string("0") : s;
  };
  if (as_json) {
    json chain = json::array();
    for (auto& I : C.chain) {
      json gens = json::array();
      for (auto& g : I.gens) gens.push_back(g.str());
      chain.push_back(gens);
    }
    out << json{{"chain", chain}}.dump() << "\n";
  } else {
    for (size_t i = 0; i + 1 < C.chain.size(); i += 2)
      out << "V" << (i / 2 + 1) << "' = V(" << gens_line(C.chain[i]) << ")   V" << (i / 2 + 1)
          << "'' = V(" << gens_line(C.chain[i + 1]) << ")\n";
  }
  report(err, t0, bud, 0, 0);
  return 0;
}

}  // namespace

std::string factored_b(const CPoly& b) {
  std::vector<Rat> roots = bs_roots(b);  // ascending, with multiplicity
  if (roots.empty()) return "1";
  auto linear = [](const Rat& r) {
    if (r == Rat(0)) return std::string("s");
    return (r < Rat(0) ? "s+" + to_string(-r) : "s-" + to_string(r));
  };
  if (roots.size() == 1) return linear(roots[0]);
  std::string out;
  size_t i = 0;
  while (i < roots.size()) {
    size_t j = i;
    while (j < roots.size() && roots[j] == roots[i]) ++j;
    std::string f = "(" + linear(roots[i]) + ")";
    if (j - i > 1) f += "^" + std::to_string(j - i);
    if (!out.empty()) out += "*";
    out += f;
    i = j;
  }
  return out;
}

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err,
        std::istream& in) {
  CLI::App app{"exact Bernstein-Sato engine"};
  app.require_subcommand(1);

  std::string poly, db_path, out_path, params_csv;
  std::vector<std::string> pieces;
  int n = -1, d = -1, jobs = 1;
  long max_pairs = -1;
  double max_seconds = -1;
  bool as_json = false, ann = false;

  auto add_common = [&](CLI::App* c, bool with_poly) {
    c->add_flag("--json", as_json, "machine-readable output");
    if (with_poly) c->add_option("poly", poly, "polynomial ('-' reads stdin)")->required();
  };

  CLI::App* c_bpoly = app.add_subcommand("bpoly", "Bernstein-Sato polynomial of f");
  add_common(c_bpoly, true);
  c_bpoly->add_option("-n", n, "ambient variable count");

  CLI::App* c_annfs = app.add_subcommand("annfs", "generators of Ann f^s");
  add_common(c_annfs, true);
  c_annfs->add_option("-n", n, "ambient variable count");

  CLI::App* c_verify = app.add_subcommand("verify", "b with operator certificate, checked");
  add_common(c_verify, true);
  c_verify->add_option("-n", n, "ambient variable count");

  CLI::App* c_strat = app.add_subcommand("stratify", "definitive computation on P(n,d)");
  add_common(c_strat, false);
  c_strat->add_option("-n", n, "number of variables")->required();
  c_strat->add_option("-d", d, "degree bound")->required();
  c_strat->add_flag("--ann", ann, "stratify Ann f^s instead of b");
  c_strat->add_option("--jobs", jobs, "parallel expansion width");
  c_strat->add_option("--max-pairs", max_pairs, "GB pair budget");
  c_strat->add_option("--max-seconds", max_seconds, "wall-clock budget");
  c_strat->add_option("-o", out_path, "write database file");

  CLI::App* c_fam = app.add_subcommand("stratify-family", "stratify a parametric family");
  add_common(c_fam, true);
  c_fam->add_option("--params", params_csv, "comma-separated parameter names");
  c_fam->add_option("--jobs", jobs, "parallel expansion width");
  c_fam->add_option("--max-pairs", max_pairs, "GB pair budget");
  c_fam->add_option("--max-seconds", max_seconds, "wall-clock budget");
  c_fam->add_option("-o", out_path, "write database file");

  CLI::App* c_lookup = app.add_subcommand("lookup", "b_f from a database, no GB");
  add_common(c_lookup, true);
  c_lookup->add_option("--db", db_path, "database file")->required();

  CLI::App* c_canon = app.add_subcommand("canon", "canonical chain of a constructible set");
  c_canon->add_flag("--json", as_json, "machine-readable output");
  c_canon->add_option("pieces", pieces, "pieces \"g1,g2 \\ h1,h2\" ('-' reads lines)")
      ->required();

  CLI::App* c_tval = app.add_subcommand("tvalue", "t(n,d) from a database");
  c_tval->add_flag("--json", as_json, "machine-readable output");
  c_tval->add_option("--db", db_path, "database file")->required();

  std::vector<std::string> full = argv;
  full.insert(full.begin(), "bsato");
  std::vector<const char*> cargv;
  for (auto& s : full) cargv.push_back(s.c_str());

  try {
    app.parse((int)cargv.size(), cargv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(c_bpoly)) return cmd_bpoly(poly, n, as_json, out, err, in);
    if (app.got_subcommand(c_annfs)) return cmd_annfs(poly, n, as_json, out, err, in);
    if (app.got_subcommand(c_verify)) return cmd_verify(poly, n, as_json, out, err, in);
    if (app.got_subcommand(c_strat))
      return cmd_stratify(n, d, ann, jobs, max_pairs, max_seconds, out_path, as_json, out, err);
    if (app.got_subcommand(c_fam))
      return cmd_family(poly, params_csv, jobs, max_pairs, max_seconds, out_path, as_json, out,
                        err, in);
    if (app.got_subcommand(c_lookup)) return cmd_lookup(poly, db_path, as_json, out, err, in);
    if (app.got_subcommand(c_canon)) return cmd_canon(pieces, as_json, out, err, in);
    if (app.got_subcommand(c_tval)) return cmd_tvalue(db_path, as_json, out);
    err << "usage error: no verb\n";
    return 2;
  } catch (const resource_error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const incomplete_error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace bsato
