// Command-line front end for parabraid.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "parabraid/verify.hpp"

using namespace parabraid;
using nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kUsage = 1, kParse = 2, kCheckFail = 3, kUnproven = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string type = "A";
  int rank = 0;  // 0: inferred
  std::string ring;
  std::string format = "text";
  std::vector<std::string> colors;
  bool allow_unproven = false;
  bool no_prove = false;
  long max_steps = -1;
  int max_len = -1;
  std::string out = "parabraid-derivation.json";
};

// Largest generator index mentioned as y<k> or y<k>p.
int max_generator(const std::string& text) {
  int best = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != 'y' || (i > 0 && std::isalnum(static_cast<unsigned char>(text[i - 1])))) continue;
    std::size_t j = i + 1;
    int v = 0;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) v = v * 10 + (text[j++] - '0');
    best = std::max(best, v);
  }
  return best;
}

// Largest epsilon index in root text such as x{e1-e3}.
int max_epsilon(const std::string& text) {
  int best = 0;
  for (std::size_t i = 0; i + 1 < text.size(); ++i) {
    if (text[i] != 'e' || !std::isdigit(static_cast<unsigned char>(text[i + 1]))) continue;
    int v = 0;
    for (std::size_t j = i + 1; j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])); ++j)
      v = v * 10 + (text[j] - '0');
    best = std::max(best, v);
  }
  return best;
}

RootSystem make_system(const Options& o, const std::vector<std::string>& texts) {
  int rank = o.rank;
  if (o.type != "A" && o.type != "D") throw UsageError("--type must be A or D");
  if (rank == 0) {
    for (const auto& t : texts) rank = std::max(rank, max_generator(t));
    for (const auto& t : texts) rank = std::max(rank, o.type == "A" ? max_epsilon(t) - 1 : max_epsilon(t));
    if (o.type == "A" && !o.colors.empty()) rank = std::max(rank, static_cast<int>(o.colors.size()) - 1);
    if (o.type == "A") rank = std::max(rank, 1);
    if (o.type == "D") rank = std::max(rank, 3);
  }
  try {
    return o.type == "A" ? RootSystem(Family::A, rank + 1) : RootSystem(Family::D, rank);
  } catch (const RootSystemError& e) {
    throw UsageError(e.what());
  }
}

// Symbols in the parameters of the given texts, for an inferred ring.
Ring make_ring(const Options& o, const RootSystem& rs, const std::vector<std::string>& texts) {
  Ring r;
  if (!o.ring.empty()) {
    r = parse_ring(o.ring);
  } else {
    std::vector<std::string> syms;
    auto note = [&](const std::string& expr) {
      for (const auto& s : scan_symbols(expr))
        if (std::find(syms.begin(), syms.end(), s) == syms.end()) syms.push_back(s);
    };
    for (const auto& t : texts) {
      std::size_t pos = 0;
      while ((pos = t.find('[', pos)) != std::string::npos) {
        std::size_t end = t.find(']', pos);
        note(t.substr(pos + 1, end == std::string::npos ? std::string::npos : end - pos - 1));
        pos = end == std::string::npos ? t.size() : end;
      }
    }
    for (const auto& c : o.colors) note(c);
    if (syms.empty()) {
      r = parse_ring("int");
    } else {
      std::string spec = "poly:";
      for (std::size_t i = 0; i < syms.size(); ++i) spec += (i ? "," : "") + syms[i];
      if (rs.family() == Family::A) spec += ",noncomm";
      r = parse_ring(spec);
    }
  }
  if (rs.family() == Family::D && !r->commutative) throw UsageError("type D needs a commutative ring");
  return r;
}

void emit(const Options& o, const ordered_json& j, const std::string& text) {
  if (o.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

int cmd_normalize(const Options& o, const std::string& word) {
  RootSystem rs = make_system(o, {word});
  Ring ring = make_ring(o, rs, {word});
  ParamBraidWord w = parse_param_word(rs, ring, word);
  SemidirectElem e = normalize(rs, w);
  GarsideNF nf = garside_nf(rs, e.br);
  ordered_json j{{"steinberg", st_str(rs, e.st)}, {"braid", braid_str(rs, e.br)}, {"garside", nf.str(rs)}};
  emit(o, j, "steinberg: " + st_str(rs, e.st) + "\nbraid: " + braid_str(rs, e.br) + "\ngarside: " + nf.str(rs) + "\n");
  return kOk;
}

int cmd_eval(const Options& o, const std::string& word) {
  RootSystem rs = make_system(o, {word});
  Ring ring = make_ring(o, rs, {word});
  ParamBraidWord w = parse_param_word(rs, ring, word);
  PaintAction act = paint_word(rs, ring, w);
  std::vector<std::string> names = o.colors;
  std::size_t dim = static_cast<std::size_t>(act.matrix.dim);
  if (names.empty())
    for (std::size_t i = 0; i < dim; ++i) names.push_back("c" + std::to_string(i + 1));
  if (names.size() != dim)
    throw UsageError("expected " + std::to_string(dim) + " colours for " + rs.name() + ", got " +
                     std::to_string(names.size()));
  std::vector<RingElem> cols;
  for (const auto& c : names) cols.push_back(parse_ring_expr(ring, c));
  std::vector<std::string> outs;
  for (const auto& c : paint_colors(act, cols)) outs.push_back(c.str());
  std::string line;
  for (std::size_t i = 0; i < outs.size(); ++i) line += (i ? ", " : "") + outs[i];
  emit(o, ordered_json{{"colors", outs}, {"matrix", act.matrix.str()}}, line + "\n");
  return kOk;
}

int cmd_phi(const Options& o, const std::string& word) {
  RootSystem rs = make_system(o, {word});
  Ring ring = make_ring(o, rs, {word});
  SemidirectElem e = phi(rs, parse_param_word(rs, ring, word));
  emit(o, ordered_json{{"steinberg", st_str(rs, e.st)}, {"braid", braid_str(rs, e.br)}},
       "steinberg: " + st_str(rs, e.st) + "\nbraid: " + braid_str(rs, e.br) + "\n");
  return kOk;
}

int cmd_psi(const Options& o, const std::string& text) {
  std::vector<std::string> texts{text};
  RootSystem rs = make_system(o, texts);
  Ring ring = make_ring(o, rs, texts);
  ParamBraidWord w = psi_word(rs, ring, parse_st_word(rs, ring, text));
  emit(o, ordered_json{{"word", param_word_str(rs, w)}}, param_word_str(rs, w) + "\n");
  return kOk;
}

int cmd_pure_gens(const Options& o) {
  RootSystem rs = make_system(o, {});
  ordered_json arr = ordered_json::array();
  std::ostringstream text;
  for (const auto& g : pure_braid_gens(rs)) {
    arr.push_back({{"name", g.name}, {"reflection_form", reflection_form(rs, g.word)}, {"word", braid_str(rs, g.word)}});
    text << g.name << "  " << reflection_form(rs, g.word) << "\n";
  }
  emit(o, ordered_json{{"system", rs.name()}, {"generators", arr}}, text.str());
  return kOk;
}

ProverBounds bounds_of(const Options& o) {
  ProverBounds b = ProverBounds::from_env();
  if (o.max_steps >= 0) b.max_steps = o.max_steps;
  if (o.max_len >= 0) b.max_len = o.max_len;
  return b;
}

int report_exit(const Options& o, const CheckReport& rep) {
  if (!rep.ok()) return kCheckFail;
  if (rep.count(CheckStatus::Unproven) > 0 && !o.allow_unproven) return kUnproven;
  return kOk;
}

int cmd_check(const Options& o, const std::string& suite) {
  const auto names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) throw UsageError("unknown suite " + suite);
  Options opt = o;
  if (opt.rank == 0) opt.rank = opt.type == "A" ? 3 : 4;
  if (opt.ring.empty()) opt.ring = opt.type == "A" ? "poly:a,b,c,noncomm" : "poly:a,b,c";
  RootSystem rs = make_system(opt, {});
  Ring ring = make_ring(opt, rs, {});
  SuiteOptions so;
  so.prove = !o.no_prove;
  so.bounds = bounds_of(o);
  CheckReport rep;
  try {
    rep = run_suite(suite, rs, ring, so);
  } catch (const VerifyError& e) {
    throw UsageError(e.what());
  }
  if (o.format == "json")
    std::cout << rep.to_json() << "\n";
  else
    std::cout << rep.to_text();
  return report_exit(o, rep);
}

int cmd_prove(const Options& o, const std::vector<std::string>& args) {
  std::string all;
  for (const auto& a : args) all += (all.empty() ? "" : " ") + a;
  std::size_t eq = all.find("==");
  if (eq == std::string::npos) throw UsageError("prove expects \"<w1> == <w2>\"");
  std::string lhs = all.substr(0, eq), rhs = all.substr(eq + 2);
  RootSystem rs = make_system(o, {lhs, rhs});
  Ring ring = make_ring(o, rs, {lhs, rhs});
  ParamBraidWord u = parse_param_word(rs, ring, lhs), v = parse_param_word(rs, ring, rhs);
  ProofResult res = prove_equal(rs, ring, u, v, bounds_of(o));
  if (res.refuted) {
    emit(o, ordered_json{{"status", "refuted"}}, "refuted: the phi images differ\n");
    return kCheckFail;
  }
  if (!res.derivation) {
    emit(o, ordered_json{{"status", "unproven"}, {"expanded", res.expanded}},
         "unproven after " + std::to_string(res.expanded) + " expansions\n");
    return o.allow_unproven ? kOk : kUnproven;
  }
  std::string json = derivation_to_json(rs, ring, *res.derivation);
  std::ofstream(o.out) << json << "\n";
  std::ostringstream text;
  text << "proved in " << res.derivation->steps.size() << " steps (" << res.expanded << " expansions), stored in "
       << o.out << "\n";
  auto rules = rule_set(rs);
  ProofState s = to_state(rs, u);
  text << "  " << param_word_str(rs, state_word(rs, ring, s)) << "\n";
  for (const auto& st : res.derivation->steps) {
    s = *apply_step(rs, ring, rules, s, st);
    text << "  = " << param_word_str(rs, state_word(rs, ring, s)) << "    by " << st.rule
         << (st.forward ? "" : " (right to left)") << "\n";
  }
  emit(o, ordered_json{{"status", "proved"}, {"steps", res.derivation->steps.size()}, {"file", o.out}}, text.str());
  return kOk;
}

int cmd_replay(const Options& o, const std::string& file) {
  std::ifstream in(file);
  if (!in) throw UsageError("cannot read " + file);
  std::stringstream buf;
  buf << in.rdbuf();
  ordered_json head;
  try {
    head = ordered_json::parse(buf.str());
  } catch (const std::exception& e) {
    throw ParseError(0, "JSON", e.what());
  }
  Options opt = o;
  std::string sys = head.value("system", "");
  if (opt.rank == 0 && sys.size() >= 2) {
    opt.type = sys.substr(0, 1);
    opt.rank = std::stoi(sys.substr(1));
  }
  if (opt.ring.empty()) opt.ring = head.value("ring", "");
  RootSystem rs = make_system(opt, {});
  Ring ring = make_ring(opt, rs, {});
  Derivation d = derivation_from_json(rs, ring, buf.str());
  std::string why;
  bool ok = replay(rs, ring, d, &why);
  emit(o, ordered_json{{"valid", ok}, {"steps", d.steps.size()}, {"reason", why}},
       ok ? "valid: " + std::to_string(d.steps.size()) + " steps\n" : "invalid: " + why + "\n");
  return ok ? kOk : kCheckFail;
}

// Strands at columns 0, 4, 8, ...; each letter takes three rows.
int cmd_draw(const Options& o, const std::string& word) {
  if (o.type != "A") throw UsageError("draw supports type A");
  RootSystem rs = make_system(o, {word});
  Ring ring = make_ring(o, rs, {word});
  ParamBraidWord w = parse_param_word(rs, ring, word);
  int strands = rs.n();
  std::size_t width = static_cast<std::size_t>(4 * (strands - 1) + 1);
  auto blank = [&] {
    std::string s(width, ' ');
    for (int i = 0; i < strands; ++i) s[static_cast<std::size_t>(4 * i)] = '|';
    return s;
  };
  std::ostringstream out;
  out << blank() << "\n";
  for (const auto& l : w) {
    std::size_t c = static_cast<std::size_t>(4 * l.gen);
    std::string r1 = blank(), r2 = blank(), r3 = blank();
    r1[c] = r1[c + 4] = ' ';
    r2[c] = r2[c + 4] = ' ';
    r3[c] = r3[c + 4] = ' ';
    r1[c + 1] = '\\';
    r1[c + 3] = '/';
    r2[c + 2] = l.exp > 0 ? '/' : '\\';
    r3[c + 1] = '/';
    r3[c + 3] = '\\';
    std::string tag = "y" + rs.token(l.gen);
    if (!l.param.is_zero()) tag += "[" + l.param.str() + "]";
    if (l.exp < 0) tag += "^-1";
    out << r1 << "\n" << r2 << "   " << tag << "\n" << r3 << "\n";
  }
  out << blank() << "\n";
  emit(o, ordered_json{{"diagram", out.str()}}, out.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"parabraid: parametrized braid groups, Steinberg groups and their semidirect product"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* c) {
    c->add_option("--type", o.type, "root system family")->check(CLI::IsMember({"A", "D"}));
    c->add_option("--rank", o.rank, "rank of the root system (inferred from the words if omitted)");
    c->add_option("--ring", o.ring, "int | mod:<m> | mod:<m>/<g> | poly:<s1>,<s2>[,noncomm]");
    c->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
  };
  std::string word, suite, file;
  std::vector<std::string> prove_args;

  auto* normalize_cmd = app.add_subcommand("normalize", "folded phi image and Garside normal form");
  normalize_cmd->add_option("word", word)->required();
  auto* eval_cmd = app.add_subcommand("eval", "final colours of the painted braid");
  eval_cmd->add_option("word", word)->required();
  eval_cmd->add_option("--colors", o.colors, "starting colours, comma separated")->delimiter(',');
  auto* phi_cmd = app.add_subcommand("phi", "image in the semidirect product");
  phi_cmd->add_option("word", word)->required();
  auto* psi_cmd = app.add_subcommand("psi", "parametrized braid word of a Steinberg word");
  psi_cmd->add_option("word", word)->required();
  auto* gens_cmd = app.add_subcommand("pure-gens", "generators of the pure braid group");
  auto* check_cmd = app.add_subcommand("check", "run a verification suite");
  check_cmd->add_option("suite", suite)->required();
  check_cmd->add_flag("--allow-unproven", o.allow_unproven, "exit 0 when only prover attempts are unproven");
  check_cmd->add_flag("--no-prove", o.no_prove, "skip prover attempts");
  auto* prove_cmd = app.add_subcommand("prove", "search for a derivation of \"<w1> == <w2>\"");
  prove_cmd->add_option("equation", prove_args)->required();
  prove_cmd->add_option("--out", o.out, "where to store the derivation");
  prove_cmd->add_flag("--allow-unproven", o.allow_unproven, "exit 0 when no derivation is found");
  auto* replay_cmd = app.add_subcommand("replay", "re-validate a stored derivation");
  replay_cmd->add_option("file", file)->required();
  auto* draw_cmd = app.add_subcommand("draw", "ASCII diagram of a type A word");
  draw_cmd->add_option("word", word)->required();
  for (auto* c : {normalize_cmd, eval_cmd, phi_cmd, psi_cmd, gens_cmd, check_cmd, prove_cmd, replay_cmd, draw_cmd})
    common(c);
  for (auto* c : {check_cmd, prove_cmd}) {
    c->add_option("--max-steps", o.max_steps, "prover expansion bound");
    c->add_option("--max-len", o.max_len, "prover word length bound");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*normalize_cmd) return cmd_normalize(o, word);
    if (*eval_cmd) return cmd_eval(o, word);
    if (*phi_cmd) return cmd_phi(o, word);
    if (*psi_cmd) return cmd_psi(o, word);
    if (*gens_cmd) return cmd_pure_gens(o);
    if (*check_cmd) return cmd_check(o, suite);
    if (*prove_cmd) return cmd_prove(o, prove_args);
    if (*replay_cmd) return cmd_replay(o, file);
    if (*draw_cmd) return cmd_draw(o, word);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const RingError& e) {
    std::cerr << "ring error: " << e.what() << "\n";
    return kParse;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
