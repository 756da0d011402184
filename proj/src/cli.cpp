#include "castella/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "castella/arith.hpp"
#include "castella/castle.hpp"
#include "castella/complexity.hpp"
#include "castella/functions.hpp"
#include "castella/instances.hpp"
#include "castella/text.hpp"

namespace castella {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  bool json = false;
  bool co = false;
  std::string monoid = "thompson";
  std::string mode = "weak";
  std::uint64_t max_n = 8;
  std::vector<std::string> args;
};

struct Outcome {
  Json input = Json::array();
  Json result;
  std::optional<Json> trace;
  std::string text;
};

struct Command {
  const char* name;
  const char* help;
  std::size_t min_args;
  std::size_t max_args;  // 0 means unbounded
};

const Command kCommands[] = {
    {"normalize", "normal form of an element", 1, 1},
    {"words", "all words of an element", 1, 1},
    {"minword", "minimum word", 1, 1},
    {"maxword", "maximum word (the normal form)", 1, 1},
    {"divisors", "left divisors", 1, 1},
    {"codivisors", "right divisors", 1, 1},
    {"divides", "does the first element divide the second", 2, 2},
    {"gcd", "greatest common divisor", 1, 0},
    {"lcm", "least common multiple", 1, 0},
    {"lcmco", "least common co-multiple below the first element", 2, 0},
    {"gcdco", "greatest common co-divisor below the first element", 2, 0},
    {"castle", "castle the pair (u, v)", 2, 2},
    {"pdm", "prime divisors with multiplicity", 1, 1},
    {"pdmco", "prime co-divisors with multiplicity", 1, 1},
    {"tau", "number of divisors", 1, 1},
    {"omega", "number of distinct prime divisors", 1, 1},
    {"bigomega", "number of prime divisors with multiplicity", 1, 1},
    {"mu", "Moebius function", 1, 1},
    {"lambda", "Liouville function", 1, 1},
    {"fully", "is the element fully castlable", 1, 1},
    {"gfc", "greatest fully castlable decomposition", 1, 1},
    {"tau0", "tau(u^n)^(1/n) for n up to --max-n", 1, 1},
    {"folner", "Folner ratio for k generators, generator i, scale n", 3, 3},
    {"instance", "factorizations of an element in the selected monoid", 1, 1},
};

std::string join_lines(const std::vector<std::string>& lines) {
  std::string s;
  for (const auto& l : lines) s += l + "\n";
  return s;
}

std::string bool_text(bool b) { return b ? "true\n" : "false\n"; }

Json word_json(const Word& w) {
  Json a = Json::array();
  for (Index i : w) a.push_back(i);
  return a;
}

Json multiset_json(const PrimeMultiset& m) {
  Json a = Json::array();
  for (const auto& [p, k] : m) a.push_back(Json::array({p, k}));
  return a;
}

std::string multiset_text(const PrimeMultiset& m) {
  if (m.empty()) return "{}\n";
  std::string s;
  for (const auto& [p, k] : m) s += (s.empty() ? "p" : " p") + std::to_string(p) + ":" + std::to_string(k);
  return s + "\n";
}

template <class E, class R>
void element_list(Outcome& o, const std::vector<E>& xs, R render_fn) {
  o.result = Json::array();
  std::vector<std::string> lines;
  for (const auto& x : xs) {
    lines.push_back(render_fn(x));
    o.result.push_back(lines.back());
  }
  o.text = join_lines(lines);
}

std::uint64_t parse_count(const std::string& s, const char* what) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) throw ParseError(std::string("expected ") + what, 0);
  return v;
}

[[noreturn]] void unsupported(const std::string& cmd, const std::string& monoid) {
  throw DomainError("command '" + cmd + "' is not available for monoid " + monoid);
}

Outcome run_thompson(const std::string& cmd, const Options& opt, const Limits& limits) {
  Outcome o;
  std::vector<Element> xs;
  if (cmd != "folner") {
    for (const auto& a : opt.args) {
      xs.push_back(parse_element(a));
      o.input.push_back(render(xs.back()));
    }
  }
  auto scalar = [&](auto v) {
    o.result = v;
    std::ostringstream os;
    os << v << "\n";
    o.text = os.str();
  };
  auto element = [&](const Element& e) {
    o.result = render(e);
    o.text = render(e) + "\n";
  };
  auto word = [&](const Word& w) {
    o.result = word_json(w);
    o.text = render_word(w) + "\n";
  };

  if (cmd == "normalize") {
    element(xs[0]);
  } else if (cmd == "words") {
    auto ws = enumerate_words(xs[0], limits);
    o.result = Json::array();
    std::vector<std::string> lines;
    for (const auto& w : ws) {
      o.result.push_back(word_json(w));
      lines.push_back(render_word(w));
    }
    o.text = join_lines(lines);
  } else if (cmd == "minword") {
    word(min_word(xs[0]));
  } else if (cmd == "maxword") {
    word(max_word(xs[0]));
  } else if (cmd == "divisors") {
    element_list(o, divisors(xs[0], limits), [](const Element& e) { return render(e); });
  } else if (cmd == "codivisors") {
    element_list(o, co_divisors(xs[0], limits), [](const Element& e) { return render(e); });
  } else if (cmd == "divides") {
    bool b = divides(xs[0], xs[1]);
    o.result = b;
    o.text = bool_text(b);
  } else if (cmd == "gcd") {
    element(gcd(xs, limits));
  } else if (cmd == "lcm") {
    element(lcm(xs));
  } else if (cmd == "lcmco" || cmd == "gcdco") {
    std::vector<Element> rest(xs.begin() + 1, xs.end());
    element(cmd == "lcmco" ? lcm_co(xs[0], rest, limits) : gcd_co(xs[0], rest, limits));
  } else if (cmd == "castle") {
    std::vector<CastleStep> steps;
    std::optional<CastlePair> c;
    if (opt.mode == "weak")
      c = weak_castle(xs[0], xs[1], &steps);
    else if (opt.mode == "strong")
      c = strong_castle(xs[0], xs[1], &steps);
    else if (opt.mode == "free")
      c = free_castle(xs[0], xs[1], &steps);
    else
      throw DomainError("unknown castle mode '" + opt.mode + "'");
    if (!c) throw DomainError("pair is not " + opt.mode + "ly castlable");
    o.result = Json{{"left", render(c->left)}, {"right", render(c->right)}};
    o.text = render(c->left) + "\n" + render(c->right) + "\n";
    Json t = Json::array();
    for (const auto& s : steps) t.push_back(Json::array({Json::array({s.i, s.j}), Json::array({s.left, s.right})}));
    o.trace = t;
  } else if (cmd == "pdm" || cmd == "pdmco") {
    auto m = cmd == "pdm" ? pdm(xs[0]) : pdm_co(xs[0]);
    o.result = multiset_json(m);
    o.text = multiset_text(m);
  } else if (cmd == "tau") {
    scalar(tau(xs[0], limits));
  } else if (cmd == "omega") {
    scalar(opt.co ? omega_co(xs[0]) : omega(xs[0]));
  } else if (cmd == "bigomega") {
    scalar(opt.co ? big_omega_co(xs[0]) : big_omega(xs[0]));
  } else if (cmd == "mu") {
    scalar(mu(xs[0], limits));
  } else if (cmd == "lambda") {
    scalar(opt.co ? lambda_co(xs[0]) : lambda(xs[0]));
  } else if (cmd == "fully") {
    bool b = is_fully_castlable(xs[0]);
    o.result = b;
    o.text = bool_text(b);
  } else if (cmd == "gfc") {
    element_list(o, gfc_decompose(xs[0]), [](const Element& e) { return render(e); });
  } else if (cmd == "tau0") {
    auto est = tau0_estimate(xs[0], opt.max_n, limits);
    double c = est.final_estimate / static_cast<double>(tau(xs[0], limits));
    Json samples = Json::array();
    std::string text;
    for (const auto& s : est.samples) {
      Json j{{"n", s.n}, {"tau", s.tau}, {"root", format_decimal(s.root)}};
      text += std::to_string(s.n) + " " + std::to_string(s.tau) + " " + format_decimal(s.root);
      if (s.lower) {
        j["lower"] = *s.lower;
        j["upper"] = *s.upper;
        text += " [" + std::to_string(*s.lower) + ", " + std::to_string(*s.upper) + "]";
      }
      samples.push_back(j);
      text += "\n";
    }
    o.result = Json{{"samples", samples},
                    {"estimate", format_decimal(est.final_estimate)},
                    {"complexity", format_decimal(c)}};
    o.text = text + "estimate " + format_decimal(est.final_estimate) + "\ncomplexity " + format_decimal(c) + "\n";
  } else if (cmd == "folner") {
    std::uint64_t k = parse_count(opt.args[0], "generator count");
    std::uint64_t i = parse_count(opt.args[1], "generator index");
    std::uint64_t n = parse_count(opt.args[2], "scale");
    for (auto v : {k, i, n}) o.input.push_back(v);
    auto r = folner_ratio(k, i, n, limits);
    o.result = r.str();
    o.text = r.str() + "\n";
  } else if (cmd == "instance") {
    ThompsonMonoid m(limits);
    auto pairs = m.divisor_pairs(xs[0]);
    Json f = Json::array();
    std::vector<std::string> lines;
    for (const auto& [a, b] : pairs) {
      f.push_back(Json::array({render(a), render(b)}));
      lines.push_back(render(a) + " | " + render(b));
    }
    o.result = Json{{"monoid", "thompson"}, {"element", render(xs[0])}, {"tau", pairs.size()}, {"factorizations", f}};
    o.text = join_lines(lines);
  }
  return o;
}

Outcome run_abelian(const std::string& cmd, const Options& opt, const Limits& limits, std::size_t k) {
  FreeAbelianMonoid m(k, limits);
  Outcome o;
  std::vector<AbelianElement> xs;
  for (const auto& a : opt.args) {
    xs.push_back(parse_abelian(a, m));
    o.input.push_back(m.render(xs.back()));
  }
  auto r = [&](const AbelianElement& e) { return m.render(e); };
  auto scalar = [&](auto v) {
    o.result = v;
    std::ostringstream os;
    os << v << "\n";
    o.text = os.str();
  };
  auto element = [&](const AbelianElement& e) {
    o.result = r(e);
    o.text = r(e) + "\n";
  };
  if (cmd == "normalize") {
    element(xs[0]);
  } else if (cmd == "divisors") {
    auto ds = m.divisors(xs[0]);
    std::sort(ds.begin(), ds.end(), [&](const auto& a, const auto& b) {
      auto ia = m.big_omega(a), ib = m.big_omega(b);
      return ia != ib ? ia < ib : a < b;
    });
    element_list(o, ds, r);
  } else if (cmd == "divides") {
    bool b = m.divides(xs[0], xs[1]);
    o.result = b;
    o.text = bool_text(b);
  } else if (cmd == "gcd" || cmd == "lcm") {
    AbelianElement acc = xs[0];
    for (std::size_t t = 1; t < xs.size(); ++t) acc = cmd == "gcd" ? m.gcd(acc, xs[t]) : m.lcm(acc, xs[t]);
    element(acc);
  } else if (cmd == "tau") {
    scalar(m.tau(xs[0]));
  } else if (cmd == "omega") {
    scalar(m.omega(xs[0]));
  } else if (cmd == "bigomega") {
    scalar(m.big_omega(xs[0]));
  } else if (cmd == "mu") {
    scalar(m.mu(xs[0]));
  } else if (cmd == "lambda") {
    scalar(m.lambda(xs[0]));
  } else if (cmd == "instance") {
    auto pairs = m.divisor_pairs(xs[0]);
    Json f = Json::array();
    std::vector<std::string> lines;
    for (const auto& [a, b] : pairs) {
      f.push_back(Json::array({r(a), r(b)}));
      lines.push_back(r(a) + " | " + r(b));
    }
    o.result = Json{{"monoid", opt.monoid}, {"element", r(xs[0])}, {"tau", pairs.size()}, {"factorizations", f}};
    o.text = join_lines(lines);
  } else {
    unsupported(cmd, opt.monoid);
  }
  return o;
}

Outcome run_uv(const std::string& cmd, const Options& opt) {
  UVMonoid m;
  Outcome o;
  std::vector<UVElement> xs;
  for (const auto& a : opt.args) {
    xs.push_back(parse_uv(a));
    o.input.push_back(render_uv(xs.back()));
  }
  if (cmd == "normalize") {
    o.result = render_uv(xs[0]);
    o.text = render_uv(xs[0]) + "\n";
  } else if (cmd == "tau") {
    auto n = m.divisor_pairs(xs[0]).size();
    o.result = n;
    o.text = std::to_string(n) + "\n";
  } else if (cmd == "divisors" || cmd == "instance") {
    auto pairs = m.divisor_pairs(xs[0]);
    std::sort(pairs.begin(), pairs.end());
    Json f = Json::array();
    std::vector<std::string> lines;
    for (const auto& [a, b] : pairs) {
      if (cmd == "divisors") {
        f.push_back(render_uv(a));
        lines.push_back(render_uv(a));
      } else {
        f.push_back(Json::array({render_uv(a), render_uv(b)}));
        lines.push_back(render_uv(a) + " | " + render_uv(b));
      }
    }
    if (cmd == "divisors")
      o.result = f;
    else
      o.result = Json{{"monoid", "uv2"}, {"element", render_uv(xs[0])}, {"tau", pairs.size()}, {"factorizations", f}};
    o.text = join_lines(lines);
  } else {
    unsupported(cmd, "uv2");
  }
  return o;
}

Outcome execute(const std::string& cmd, const Options& opt, const Limits& limits) {
  if (opt.monoid == "thompson" || cmd == "folner") return run_thompson(cmd, opt, limits);
  if (opt.monoid == "uv2") return run_uv(cmd, opt);
  if (opt.monoid == "abelian") return run_abelian(cmd, opt, limits, 0);
  if (opt.monoid.rfind("abelian:", 0) == 0) {
    std::string k = opt.monoid.substr(8);
    return run_abelian(cmd, opt, limits, parse_count(k, "generator count after 'abelian:'"));
  }
  throw DomainError("unknown monoid '" + opt.monoid + "'");
}

}  // namespace

Limits limits_from_env() {
  Limits limits;
  if (const char* cap = std::getenv("CASTELLA_NODE_CAP")) {
    std::string s(cap);
    std::uint64_t v = parse_count(s, "a positive integer in CASTELLA_NODE_CAP");
    if (v == 0) throw DomainError("CASTELLA_NODE_CAP must be positive");
    limits.node_cap = v;
  }
  return limits;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Arithmetic in Thompson's monoid and sibling monoids", "castella"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "machine-readable output");
  app.add_option("--monoid", opt.monoid, "thompson | abelian[:k] | uv2")->capture_default_str();

  std::map<const CLI::App*, std::string> names;
  for (const auto& c : kCommands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    auto* pos = sub->add_option("args", opt.args)->required();
    pos->expected(static_cast<int>(c.min_args), c.max_args ? static_cast<int>(c.max_args) : CLI::detail::expected_max_vector_size);
    sub->add_flag("--json", opt.json, "machine-readable output");
    sub->add_option("--monoid", opt.monoid, "thompson | abelian[:k] | uv2");
    std::string n = c.name;
    if (n == "castle") sub->add_option("--mode", opt.mode, "weak | strong | free")->check(CLI::IsMember({"weak", "strong", "free"}));
    if (n == "tau0") sub->add_option("--max-n", opt.max_n, "largest power")->check(CLI::PositiveNumber);
    if (n == "omega" || n == "bigomega" || n == "lambda") sub->add_flag("--co", opt.co, "use prime co-divisors");
    names[sub] = n;
  }

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 1;
  }

  std::string cmd;
  for (const auto& [sub, n] : names)
    if (sub->parsed()) cmd = n;

  try {
    Limits limits = limits_from_env();
    Outcome o = execute(cmd, opt, limits);
    if (opt.json) {
      Json j{{"command", cmd}, {"input", o.input}, {"result", o.result}};
      if (o.trace) j["trace"] = *o.trace;
      out << j.dump() << "\n";
    } else {
      out << o.text;
    }
    return 0;
  } catch (const ResourceLimitError& e) {
    err << "castella: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "castella: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "castella: internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace castella
