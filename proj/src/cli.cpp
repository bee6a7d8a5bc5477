#include "critbase/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "critbase/critical.hpp"
#include "critbase/numerics.hpp"
#include "critbase/records.hpp"
#include "critbase/uniqueness.hpp"
#include "critbase/words.hpp"

namespace critbase {

namespace {

struct Options {
  std::string word, directive, sturmian, block_v, block_w;
  std::string curve = "L";
  std::string format = "text";
  std::string out_file;
  double m = 0.0, beta = 0.0;
  double from = 0.0, to = 0.0, step = 0.0;
  double tol = 1e-12, tau = 1e-9;
  int max_depth = 48;
  size_t horizon = 64, length = 0, prefix_len = 64, depth = 16, h_max = 12;
  bool fg = false, holes_flag = false, kl = false, figure = false, serial = false;
  bool auto_blocks = false;
};

std::string block_repeat(const std::string& unit, size_t h) {
  std::string out;
  for (size_t i = 0; i < h; ++i) out += unit;
  return out;
}

Record critical_record(const CriticalResult& r, const std::string& key) {
  Record rec;
  rec.add("m", r.m)
      .add(key, r.beta)
      .add("case", case_label(r.c))
      .add("witness", r.c.witness.str())
      .add("bracket_width", r.bracket_width)
      .add("depth", r.depth_used);
  return rec;
}

std::vector<Record> do_word(const Options& o) {
  EPWord u = EPWord::parse(o.word);
  Record r;
  r.add("input", o.word)
      .add("canonical", u.str())
      .add("preperiod", u.pre())
      .add("period", u.per())
      .add("orbit_inf", orbit_inf(u).str())
      .add("orbit_sup", orbit_sup(u).str())
      .add("orbit_inf1", contains(u, '1') ? orbit_inf1(u).str() : std::string())
      .add("orbit_sup0", contains(u, '0') ? orbit_sup0(u).str() : std::string());
  return {r};
}

std::vector<Record> do_mu(const Options& o) {
  Record r;
  if (!o.word.empty()) {
    EPWord u = EPWord::parse(o.word);
    RootResult res = solve_mu_root(u, o.tol);
    r.add("word", u.str()).add("mu", res.value).add("bracket", res.bracket);
  } else if (!o.directive.empty()) {
    RootResult res = mu_periodic_closed_form(o.directive, o.tol);
    r.add("directive", o.directive)
        .add("image0", morphism_of(o.directive).image0)
        .add("mu", res.value)
        .add("bracket", res.bracket);
  } else if (!o.sturmian.empty()) {
    EPWord v = EPWord::parse(o.sturmian);
    RootResult res = mu_sturmian_closed_form(v, o.tol);
    r.add("v", v.str()).add("mu", res.value).add("bracket", res.bracket);
  } else {
    KLResult res = komornik_loreti_root(o.prefix_len, o.tol);
    r.add("prefix_len", res.prefix_len).add("beta", res.value).add("bracket", res.bracket);
  }
  return {r};
}

std::vector<Record> do_fg(const Options& o) {
  EPWord u = EPWord::parse(o.word);
  RootResult f = solve_f_root(u, o.m, o.tol);
  RootResult g = solve_g_root(u, o.m, o.tol);
  Record r;
  r.add("word", u.str())
      .add("m", o.m)
      .add("f", f.value)
      .add("f_bracket", f.bracket)
      .add("g", g.value)
      .add("g_bracket", g.bracket)
      .add("max_fg", std::max(f.value, g.value));
  return {r};
}

std::vector<Record> do_critical(const Options& o) {
  DescentParams p{o.tol, o.tau, o.max_depth};
  CriticalResult r = o.curve == "G" ? critical_G(o.m, p) : critical_L(o.m, p);
  return {critical_record(r, o.curve)};
}

std::vector<Record> do_scan(const Options& o) {
  DescentParams p{o.tol, o.tau, o.max_depth};
  std::vector<ScanRow> rows = scan(o.from, o.to, o.step, p, !o.serial);
  std::vector<Record> recs;
  recs.reserve(rows.size());
  for (const ScanRow& row : rows) {
    Record r;
    if (o.figure) {
      r.add("m", row.m)
          .add("G", row.G)
          .add("L", row.L)
          .add("sqrt_bound", 1.0 + std::sqrt(row.m))
          .add("upper", 1.0 + row.m);
    } else {
      r.add("m", row.m)
          .add("G", row.G)
          .add("L", row.L)
          .add("caseG", row.caseG)
          .add("caseL", row.caseL);
    }
    recs.push_back(std::move(r));
  }
  return recs;
}

std::vector<Record> do_unique(const Options& o) {
  Record r;
  if (o.holes_flag) {
    HoleGeometry h = holes(o.beta, o.m);
    r.add("beta", o.beta)
        .add("m", o.m)
        .add("h1_lo", h.h1_lo)
        .add("h1_hi", h.h1_hi)
        .add("h2_lo", h.h2_lo)
        .add("h2_hi", h.h2_hi)
        .add("domain_hi", h.domain_hi);
    return {r};
  }
  EPWord u = EPWord::parse(o.word);
  Verdict v = o.fg ? binary_membership_via_fg(u, o.beta, o.m, o.tol, o.tau)
                   : is_unique(u, o.beta, o.m, o.tau);
  r.add("word", u.str())
      .add("beta", o.beta)
      .add("m", o.m)
      .add("verdict", uniqueness_name(v.status))
      .add("witness_position", v.witness_position);
  return {r};
}

std::vector<Record> do_certify(const Options& o) {
  if (!o.auto_blocks) {
    Certificate c = pair_certificate(o.block_v, o.block_w, o.beta, o.m, o.horizon);
    Record r;
    r.add("v", o.block_v)
        .add("w", o.block_w)
        .add("beta", o.beta)
        .add("m", o.m)
        .add("horizon", o.horizon)
        .add("result", c == Certificate::certified ? "certified" : "unknown")
        .add("dim", hutchinson_dim(o.block_v.size(), o.block_w.size(), o.beta));
    return {r};
  }
  DescentParams p{o.tol, o.tau, o.max_depth};
  CriticalResult res = critical_L(o.m, p);
  Directive sigma = res.c.directive;
  std::string unit = "10", head = "1";  // f-side family blocks 1(10)^h
  if (res.c.kind == CaseKind::PlateauG) {
    unit = "01";
    head = "0";
  } else if (res.c.kind == CaseKind::TopG) {
    unit = "1";
    head = "0";
  }
  if (!sigma.empty() && sigma.back() == 'M') sigma.pop_back();
  Morphism mo = morphism_of(sigma);
  Record r;
  r.add("m", o.m).add("beta", o.beta).add("case", case_label(res.c));
  for (size_t h = 1; h <= o.h_max; ++h) {
    FiniteWord v = mo(head + block_repeat(unit, h));
    FiniteWord w = mo(head + block_repeat(unit, h + 1));
    if (pair_certificate(v, w, o.beta, o.m, o.horizon) == Certificate::certified) {
      r.add("h", h)
          .add("v", v)
          .add("w", w)
          .add("result", "certified")
          .add("dim", hutchinson_dim(v.size(), w.size(), o.beta));
      return {r};
    }
  }
  r.add("h", 0).add("v", "").add("w", "").add("result", "unknown").add("dim", 0.0);
  return {r};
}

std::vector<Record> do_limitword(const Options& o) {
  FiniteWord prefix = limit_word_prefix(o.directive, o.length);
  Record r;
  r.add("directive", o.directive).add("length", o.length).add("prefix", prefix);
  return {r};
}

std::vector<Record> do_classify(const Options& o) {
  DescentParams p{o.tol, o.tau, o.max_depth};
  Classification c = classify_L(o.m, p);
  std::vector<Record> recs;
  for (size_t i = 0; i < c.trace.size(); ++i) {
    const TraceEntry& e = c.trace[i];
    Record r;
    r.add("depth", i)
        .add("node", e.node)
        .add("mu1", e.b.mu[0])
        .add("mu2", e.b.mu[1])
        .add("mu3", e.b.mu[2])
        .add("mu4", e.b.mu[3])
        .add("decision", e.decision);
    recs.push_back(std::move(r));
  }
  return recs;
}

std::vector<Record> do_count(const Options& o) {
  std::vector<CensusRow> rows = survivor_census(o.beta, o.m, o.depth);
  std::vector<Record> recs;
  for (const CensusRow& row : rows) {
    Record r;
    r.add("depth", row.depth).add("survivors", static_cast<long long>(row.survivors));
    recs.push_back(std::move(r));
  }
  return recs;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"critical bases for unique beta-expansions over the alphabet {0,1,m}"};
  app.require_subcommand(1);
  Options o;

  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "output format: text, csv, json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    sub->add_option("--out", o.out_file, "write records to FILE instead of stdout");
  };
  auto add_descent = [&](CLI::App* sub) {
    sub->add_option("--tol", o.tol, "root tolerance");
    sub->add_option("--tau", o.tau, "interval-membership slack");
    sub->add_option("--max-depth", o.max_depth, "descent depth limit");
  };

  CLI::App* c_word = app.add_subcommand("word", "canonical form and orbit extremes of a word");
  c_word->add_option("--word", o.word, "word literal pre(per)")->required();
  add_output(c_word);

  CLI::App* c_mu = app.add_subcommand("mu", "critical parameter mu of a word, or closed forms");
  c_mu->add_option("--word", o.word, "generic mu via nested bisection");
  c_mu->add_option("--directive", o.directive, "periodic closed form for sigma(0-bar)");
  c_mu->add_option("--sturmian", o.sturmian, "closed form (beta-1)^2 from pi_beta(20v) = 1");
  c_mu->add_flag("--kl", o.kl, "Komornik-Loreti root pi_beta(u) = 1 on the Thue-Morse shift");
  c_mu->add_option("--prefix-len", o.prefix_len, "prefix length for --kl");
  c_mu->add_option("--tol", o.tol, "root tolerance");
  add_output(c_mu);

  CLI::App* c_fg = app.add_subcommand("fg", "the bases f_u(m) and g_u(m)");
  c_fg->add_option("--word", o.word)->required();
  c_fg->add_option("--m", o.m, "alphabet parameter in (1,2]")->required();
  c_fg->add_option("--tol", o.tol, "root tolerance");
  add_output(c_fg);

  CLI::App* c_critical = app.add_subcommand("critical", "critical base L(m) or G(m)");
  c_critical->add_option("--m", o.m)->required();
  c_critical->add_option("--curve", o.curve)->check(CLI::IsMember({"L", "G"}));
  add_descent(c_critical);
  add_output(c_critical);

  CLI::App* c_scan = app.add_subcommand("scan", "sweep m over a grid, emitting G and L per row");
  c_scan->add_option("--from", o.from)->required();
  c_scan->add_option("--to", o.to)->required();
  c_scan->add_option("--step", o.step)->required();
  c_scan->add_flag("--figure", o.figure, "emit columns m,G,L,sqrt_bound,upper");
  c_scan->add_flag("--serial", o.serial, "use the serial reference instead of OpenMP");
  add_descent(c_scan);
  add_output(c_scan);

  CLI::App* c_unique = app.add_subcommand("unique", "membership of a word in U_beta(m)");
  c_unique->add_option("--word", o.word);
  c_unique->add_option("--beta", o.beta)->required();
  c_unique->add_option("--m", o.m)->required();
  c_unique->add_flag("--fg", o.fg, "use the f/g criterion instead of the hole oracle");
  c_unique->add_flag("--holes", o.holes_flag, "report the hole geometry only");
  c_unique->add_option("--tol", o.tol, "root tolerance");
  c_unique->add_option("--tau", o.tau, "boundary slack");
  add_output(c_unique);

  CLI::App* c_certify = app.add_subcommand("certify", "pair-witness certificate for uncountability");
  c_certify->add_option("--v", o.block_v, "first block");
  c_certify->add_option("--w", o.block_w, "second block");
  c_certify->add_option("--beta", o.beta)->required();
  c_certify->add_option("--m", o.m)->required();
  c_certify->add_option("--horizon", o.horizon, "pattern length bound");
  c_certify->add_flag("--auto", o.auto_blocks, "derive blocks from the L(m) descent, h = 1..h-max");
  c_certify->add_option("--h-max", o.h_max, "largest block exponent tried with --auto");
  add_descent(c_certify);
  add_output(c_certify);

  CLI::App* c_limitword = app.add_subcommand("limitword", "prefix of the limit word of a directive");
  c_limitword->add_option("--directive", o.directive)->required();
  c_limitword->add_option("--length", o.length)->required();
  add_output(c_limitword);

  CLI::App* c_classify = app.add_subcommand("classify", "descent trace for L(m)");
  c_classify->add_option("--m", o.m)->required();
  add_descent(c_classify);
  add_output(c_classify);

  CLI::App* c_count = app.add_subcommand("count", "upper-bound census of not-yet-excluded prefixes");
  c_count->add_option("--beta", o.beta)->required();
  c_count->add_option("--m", o.m)->required();
  c_count->add_option("--depth", o.depth, "prefix length bound");
  add_output(c_count);

  std::vector<const char*> argv;
  argv.push_back("critbase");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  // usage-level validation beyond what CLI11 expresses
  if (c_mu->parsed()) {
    int modes = (!o.word.empty()) + (!o.directive.empty()) + (!o.sturmian.empty()) + o.kl;
    if (modes != 1) {
      err << "mu: give exactly one of --word, --directive, --sturmian, --kl\n";
      return 2;
    }
  }
  if (c_scan->parsed() &&
      !(o.from > 1.0 && o.from < o.to && o.to <= 2.0 && o.step > 0.0)) {
    err << "scan: grid must satisfy 1 < from < to <= 2 and step > 0\n";
    return 2;
  }
  if (c_unique->parsed() && !o.holes_flag && o.word.empty()) {
    err << "unique: give --word or --holes\n";
    return 2;
  }
  if (c_certify->parsed() && !o.auto_blocks && (o.block_v.empty() || o.block_w.empty())) {
    err << "certify: give --v and --w, or --auto\n";
    return 2;
  }
  if (c_scan->parsed() && o.figure && c_scan->count("--format") == 0) o.format = "csv";

  std::vector<Record> records;
  try {
    if (c_word->parsed()) records = do_word(o);
    else if (c_mu->parsed()) records = do_mu(o);
    else if (c_fg->parsed()) records = do_fg(o);
    else if (c_critical->parsed()) records = do_critical(o);
    else if (c_scan->parsed()) records = do_scan(o);
    else if (c_unique->parsed()) records = do_unique(o);
    else if (c_certify->parsed()) records = do_certify(o);
    else if (c_limitword->parsed()) records = do_limitword(o);
    else if (c_classify->parsed()) records = do_classify(o);
    else if (c_count->parsed()) records = do_count(o);
  } catch (const std::invalid_argument& e) {
    out << error_record("invalid_argument", e.what());
    return 1;
  } catch (const std::domain_error& e) {
    out << error_record("domain_error", e.what());
    return 1;
  } catch (const std::exception& e) {
    out << error_record("error", e.what());
    return 1;
  }

  Format fmt = format_from_string(o.format);
  if (!o.out_file.empty()) {
    std::ofstream file(o.out_file);
    if (!file) {
      out << error_record("io_error", "cannot open output file " + o.out_file);
      return 1;
    }
    emit(records, fmt, file);
  } else {
    emit(records, fmt, out);
  }
  return 0;
}

}  // namespace critbase
