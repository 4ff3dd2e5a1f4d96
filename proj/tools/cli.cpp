#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "csync/classifier.hpp"
#include "csync/codes.hpp"
#include "csync/decomposition.hpp"
#include "csync/errors.hpp"
#include "csync/reductions.hpp"
#include "csync/solver.hpp"
#include "csync/sparsity.hpp"
#include "csync/syntax.hpp"

namespace csync::cli {

namespace {

using json = nlohmann::ordered_json;

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',' || c == ' ' || c == '\t') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t env_cap(std::size_t fallback) {
  const char* v = std::getenv("CSYNC_CAP");
  if (v == nullptr || *v == '\0') return fallback;
  char* end = nullptr;
  unsigned long long n = std::strtoull(v, &end, 10);
  if (*end != '\0' || n == 0) throw InputError(std::string("CSYNC_CAP must be a positive integer, got '") + v + "'");
  return static_cast<std::size_t>(n);
}

std::string letters_of(const std::string& list) {
  std::string seq;
  for (const auto& tok : split_list(list)) {
    if (tok.size() == 1) {
      seq += tok;
      continue;
    }
    throw InputError("letter '" + tok + "' is not a single symbol");
  }
  if (seq.empty()) throw InputError("empty letter sequence");
  return seq;
}

Dcsa load_dcsa(const std::string& path) { return parse_dcsa(read_file(path)); }

StateSet state_list(const Dcsa& a, const std::string& list, const char* what) {
  StateSet s(a.num_states());
  for (const auto& tok : split_list(list)) {
    auto it = std::find(a.names().begin(), a.names().end(), tok);
    if (it == a.names().end()) throw InputError(std::string(what) + ": unknown state '" + tok + "'");
    s.insert(static_cast<State>(it - a.names().begin()));
  }
  return s;
}

json opt_word(const std::optional<Word>& w) { return w ? json(*w) : json(nullptr); }

json verdict_json(const Verdict& v) {
  json j;
  j["command"] = "classify";
  j["verdict"] = verdict_label(v.kind);
  j["route"] = v.route;
  j["witness_triple"] = v.triple ? json::array({(*v.triple)[0], (*v.triple)[1], (*v.triple)[2]}) : json(nullptr);
  j["witness_word"] = opt_word(v.witness);
  if (v.witness_preimage) j["witness_preimage"] = *v.witness_preimage;
  j["bounding"] = v.bounding;
  j["np_member"] = v.kind != VerdictKind::not_sparse;
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

json code_counterexample(const std::optional<CodeCounterexample>& c) {
  if (!c) return nullptr;
  return json{{"u", c->u}, {"v", c->v}, {"offset", c->offset}, {"match", c->match}};
}

json factor_json(const UnaryFactor& f) {
  json j{{"letter", std::string(1, f.letter)}, {"r", f.r}};
  if (f.infinite()) j["p"] = f.p;
  return j;
}

struct Options {
  // constraint input
  std::string constraint, constraint_file;
  std::string letters, words;
  bool auto_bound = false;
  // automaton input
  std::string automaton;
  std::string method = "auto";
  std::size_t cap = 0;
  // codes
  std::vector<std::string> code_words;
  bool strong = false;
  std::string base;
  char marker = 0;
  // reductions and oracle
  std::string kind, map, s_list, t_list;
  std::size_t inflate_n = 1, r2 = 0, p2 = 1, max_steps = 0;
  bool shortest = false;
};

Pdfa constraint_from(const Options& o, std::optional<Alphabet> sigma = std::nullopt) {
  if (!o.constraint.empty() && !o.constraint_file.empty())
    throw InputError("give either --constraint or --constraint-file, not both");
  if (!o.constraint_file.empty()) {
    Pdfa b = parse_pdfa(read_file(o.constraint_file));
    return sigma ? extend_alphabet(b, *sigma) : b;
  }
  if (o.constraint.empty()) throw InputError("missing --constraint");
  if (sigma) {
    for (char c : regex_letters(*parse_regex(o.constraint)))
      if (!sigma->contains(c))
        throw InputError(std::string("constraint letter '") + c + "' is not in the automaton alphabet");
  }
  return compile_regex(o.constraint, sigma);
}

int cmd_classify(const Options& o, std::ostream& out, std::ostream& err) {
  int modes = (!o.letters.empty()) + (!o.words.empty()) + (o.auto_bound ? 1 : 0);
  if (modes != 1) throw InputError("give exactly one of --letters, --words, --auto");
  Pdfa b = constraint_from(o);
  Verdict v;
  if (!o.letters.empty())
    v = classify_letter_bounded(b, letters_of(o.letters));
  else if (!o.words.empty())
    v = classify_word_bounded(b, split_list(o.words));
  else
    v = classify_auto(b);
  out << verdict_json(v).dump() << '\n';
  err << verdict_label(v.kind) << " (" << v.route << ")";
  if (v.witness) err << ", witness " << *v.witness;
  if (!v.note.empty()) err << "; " << v.note;
  err << '\n';
  bool undecided = v.kind == VerdictKind::np_member_undecided || v.kind == VerdictKind::not_sparse;
  return undecided ? kUndecided : kOk;
}

int cmd_solve(const Options& o, std::ostream& out, std::ostream& err) {
  Dcsa a = load_dcsa(o.automaton);
  Pdfa b = constraint_from(o, a.alphabet());
  const std::size_t cap = o.cap ? o.cap : env_cap(kDefaultSearchCap);
  std::string method = o.method;
  std::optional<Word> w;
  std::optional<BoundedUnion> u;
  if (method == "auto" || method == "poly") {
    std::optional<Bounding> bound = infer_bounding(b);
    if (bound && bound->letter_bounded) {
      Verdict v = classify_letter_bounded(b, bound->letters());
      if (v.kind == VerdictKind::in_p) u = decompose(b, bound->letters());
    }
    if (!u && method == "poly")
      throw InputError("the polynomial method needs a letter-bounded constraint classified as P");
    method = u ? "poly" : "brute";
  } else if (method != "brute") {
    throw InputError("unknown method '" + method + "'");
  }
  w = method == "poly" ? solve_poly(a, *u, trim(b).num_states()) : solve_brute(a, b, cap);
  json j;
  j["command"] = "solve";
  j["method"] = method;
  j["found"] = w.has_value();
  j["word"] = w ? *w : std::string("none");
  if (w) {
    j["length"] = w->size();
    j["synchronizing"] = is_synchronizing_word(a, *w);
    j["in_constraint"] = b.accepts(*w);
  }
  out << j.dump() << '\n';
  err << (w ? *w : std::string("none")) << " via " << method << '\n';
  return kOk;
}

int cmd_check_code(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<std::string> words;
  for (const auto& w : o.code_words)
    for (const auto& t : split_list(w)) words.push_back(t);
  CodeSet c(words);
  CodeCheck self = is_self_synchronizing(c);
  json j;
  j["command"] = "check-code";
  j["code"] = c.words();
  j["prefix_code"] = is_prefix_code(c);
  j["infix_code"] = is_infix_code(c);
  j["self_synchronizing"] = self.ok;
  bool result = self.ok;
  std::optional<CodeCounterexample> cex = self.counterexample;
  if (o.strong) {
    CodeCheck strong = is_strongly_self_synchronizing(c);
    j["strongly_self_synchronizing"] = strong.ok;
    j["positional"] = positional_check(c);
    result = strong.ok;
    cex = strong.counterexample;
  }
  j["result"] = result;
  j["counterexample"] = code_counterexample(cex);
  out << j.dump() << '\n';
  err << (result ? "true" : "false");
  if (cex) err << ": (" << cex->u << ")(" << cex->v << ") contains " << cex->match;
  err << '\n';
  return kOk;
}

int cmd_make_code(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.marker == 0) throw InputError("missing --marker");
  ConstructedCode y = construct_code(split_list(o.base), o.marker);
  json j;
  j["command"] = "make-code";
  j["code"] = y.words;
  j["k"] = y.k;
  j["strongly_self_synchronizing"] = y.strong.ok;
  j["counterexample"] = code_counterexample(y.strong.counterexample);
  out << j.dump() << '\n';
  for (const auto& w : y.words) err << w << ' ';
  err << (y.strong.ok ? "(strongly self-synchronizing)" : "(strong check FAILED)") << '\n';
  return kOk;
}

int cmd_decompose(const Options& o, std::ostream& out, std::ostream& err) {
  Pdfa b = constraint_from(o);
  BoundedUnion u = decompose(b, letters_of(o.letters));
  json terms = json::array();
  for (const auto& t : u.terms) {
    json fs = json::array();
    for (const auto& f : t.factors) fs.push_back(factor_json(f));
    terms.push_back(fs);
  }
  const std::string text = to_string(u);
  out << json{{"command", "decompose"}, {"sequence", u.sequence}, {"decomposition", text}, {"terms", terms}}.dump()
      << '\n';
  err << text << '\n';
  return kOk;
}

// Parses "x=ab,y=" into ordered (symbol, image) pairs.
std::vector<std::pair<char, Word>> parse_map(const std::string& text) {
  std::vector<std::pair<char, Word>> out;
  for (const auto& tok : split_list(text)) {
    auto eq = tok.find('=');
    if (eq != 1) throw InputError("map entry '" + tok + "' must look like x=word");
    out.emplace_back(tok[0], tok.substr(2));
  }
  if (out.empty()) throw InputError("empty --map");
  return out;
}

int cmd_reduce(const Options& o, std::ostream& out, std::ostream& err) {
  Dcsa a = load_dcsa(o.automaton);
  json j;
  j["command"] = "reduce";
  j["kind"] = o.kind;
  std::string text;
  std::size_t states = 0;
  if (o.kind == "hom") {
    auto m = parse_map(o.map);
    std::string dom;
    std::vector<Word> images;
    for (const auto& [x, w] : m) {
      dom.push_back(x);
      images.push_back(w);
    }
    Dcsa r = hom_reduce(a, Hom(Alphabet(dom), a.alphabet(), images));
    states = r.num_states();
    text = serialize_automaton(r);
  } else if (o.kind == "lift") {
    auto m = parse_map(o.map);
    std::vector<Word> images(a.alphabet().size());
    std::vector<bool> given(a.alphabet().size(), false);
    std::string gamma;
    for (const auto& [x, w] : m) {
      std::size_t i = a.alphabet().require(x);
      images[i] = w;
      given[i] = true;
      gamma += w;
    }
    for (std::size_t i = 0; i < given.size(); ++i)
      if (!given[i]) throw InputError(std::string("--map lacks an image for '") + a.alphabet().symbol(i) + "'");
    Lift l = lift_strongly_self_sync(a, Hom(a.alphabet(), Alphabet(sorted_letters(gamma)), images));
    states = l.automaton.num_states();
    j["prefixes"] = l.prefixes;
    text = serialize_automaton(l.automaton);
  } else if (o.kind == "inflate") {
    Dcsa r = inflate(a, o.inflate_n);
    states = r.num_states();
    text = serialize_automaton(r);
  } else if (o.kind == "transporter" || o.kind == "abba") {
    StateSet s = state_list(a, o.s_list, "--S"), t = state_list(a, o.t_list, "--T");
    Gadget g = o.kind == "abba" ? gen_abba_gadget(a, s, t) : gen_transporter_gadget(a, s, t, o.r2, o.p2);
    states = g.automaton.num_states();
    text = serialize_automaton(g.automaton, g.roles);
  } else {
    throw InputError("unknown reduction '" + o.kind + "' (hom, lift, inflate, transporter, abba)");
  }
  j["states"] = states;
  j["automaton"] = text;
  out << j.dump() << '\n';
  err << text;
  return kOk;
}

int cmd_oracle(const Options& o, std::ostream& out, std::ostream& err) {
  Dcsa a = load_dcsa(o.automaton);
  StateSet s = state_list(a, o.s_list, "--S"), t = state_list(a, o.t_list, "--T");
  std::size_t steps = o.max_steps ? o.max_steps : env_cap(kDefaultStepCap);
  std::optional<std::size_t> m = transporter_oracle(a, s, t, steps);
  json j{{"command", "oracle"}, {"found", m.has_value()}, {"m", m ? json(*m) : json(nullptr)}};
  out << j.dump() << '\n';
  err << (m ? "m = " + std::to_string(*m) : std::string("none")) << '\n';
  return kOk;
}

int cmd_sync(const Options& o, std::ostream& out, std::ostream& err) {
  Dcsa a = load_dcsa(o.automaton);
  std::optional<Word> w =
      o.shortest ? shortest_sync_word(a, o.cap ? o.cap : env_cap(kDefaultSearchCap)) : sync_unconstrained(a);
  json j{{"command", "sync"}, {"shortest", o.shortest}, {"found", w.has_value()}, {"word", w ? *w : "none"}};
  if (w) j["length"] = w->size();
  out << j.dump() << '\n';
  err << (w ? *w : std::string("none")) << '\n';
  return kOk;
}

void error_record(std::ostream& out, std::ostream& err, const char* kind, const std::string& msg) {
  out << json{{"error", kind}, {"message", msg}}.dump() << '\n';
  err << "error: " << msg << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Constrained synchronization toolkit", "csync"};
  app.require_subcommand(1);

  auto add_constraint = [&](CLI::App* c) {
    c->add_option("--constraint", o.constraint, "constraint regular expression");
    c->add_option("--constraint-file", o.constraint_file, "constraint automaton file");
  };

  auto* classify = app.add_subcommand("classify", "decide P vs NP-complete for a constraint");
  add_constraint(classify);
  classify->add_option("--letters", o.letters, "bounding letter sequence, e.g. a,b,a");
  classify->add_option("--words", o.words, "bounding words, e.g. aacc,bbc,bac");
  classify->add_flag("--auto", o.auto_bound, "infer the bounding sequence");

  auto* solve = app.add_subcommand("solve", "find a synchronizing word in the constraint");
  solve->add_option("automaton", o.automaton, "semi-automaton file")->required();
  add_constraint(solve);
  solve->add_option("--method", o.method, "auto, brute or poly");
  solve->add_option("--cap", o.cap, "exploration cap");

  auto* check = app.add_subcommand("check-code", "check code properties");
  check->add_option("words", o.code_words, "code words")->required();
  check->add_flag("--strong", o.strong, "check strong self-synchronization");

  auto* make = app.add_subcommand("make-code", "build a strongly self-synchronizing code");
  make->add_option("--base", o.base, "base words of equal length")->required();
  make->add_option("--marker", o.marker, "marker symbol")->required();

  auto* decomp = app.add_subcommand("decompose", "decompose a letter-bounded constraint");
  add_constraint(decomp);
  decomp->add_option("--letters", o.letters, "bounding letter sequence")->required();

  auto* reduce = app.add_subcommand("reduce", "run a reduction construction");
  reduce->add_option("kind", o.kind, "hom, lift, inflate, transporter or abba")->required();
  reduce->add_option("--automaton", o.automaton, "semi-automaton file")->required();
  reduce->add_option("--map", o.map, "homomorphism, e.g. x=ab,y=a");
  reduce->add_option("-n,--factor", o.inflate_n, "inflation factor");
  reduce->add_option("--S", o.s_list, "source set");
  reduce->add_option("--T", o.t_list, "target set");
  reduce->add_option("--r2", o.r2, "gadget offset r2");
  reduce->add_option("--p2", o.p2, "gadget period p2");

  auto* oracle = app.add_subcommand("oracle", "unary set-transporter oracle");
  oracle->add_option("--automaton", o.automaton, "unary semi-automaton file")->required();
  oracle->add_option("--S", o.s_list, "source set")->required();
  oracle->add_option("--T", o.t_list, "target set")->required();
  oracle->add_option("--max-steps", o.max_steps, "step cap");

  auto* sync = app.add_subcommand("sync", "unconstrained synchronization");
  sync->add_option("--automaton", o.automaton, "semi-automaton file")->required();
  sync->add_flag("--shortest", o.shortest, "exact shortest word by subset search");
  sync->add_option("--cap", o.cap, "exploration cap");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    error_record(out, err, "usage", e.what());
    return kInputError;
  }

  try {
    if (*classify) return cmd_classify(o, out, err);
    if (*solve) return cmd_solve(o, out, err);
    if (*check) return cmd_check_code(o, out, err);
    if (*make) return cmd_make_code(o, out, err);
    if (*decomp) return cmd_decompose(o, out, err);
    if (*reduce) return cmd_reduce(o, out, err);
    if (*oracle) return cmd_oracle(o, out, err);
    if (*sync) return cmd_sync(o, out, err);
  } catch (const ResourceError& e) {
    error_record(out, err, "resource", e.what());
    return kResourceError;
  } catch (const InputError& e) {
    error_record(out, err, "input", e.what());
    return kInputError;
  }
  return kInputError;
}

}  // namespace csync::cli
