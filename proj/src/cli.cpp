#include "condis/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <sstream>

#include "condis/brauer.hpp"
#include "condis/render.hpp"
#include "condis/serialize.hpp"
#include "condis/syntax.hpp"

namespace condis {

namespace {

// Arguments may be inline text or paths; an existing file wins.
std::string slurp_or_self(const std::string& arg) {
  std::ifstream in(arg);
  if (!in) return arg;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string preview(const std::string& arg) {
  return arg.size() <= 40 ? arg : arg.substr(0, 37) + "...";
}

json read_json_input(const std::string& arg) {
  const std::string text = slurp_or_self(arg);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error("input '" + preview(arg) + "' is not a readable file nor valid JSON: " + e.what());
  }
}

Radices parse_radices(const std::string& text) {
  std::istringstream in(text);
  std::vector<int> entries;
  std::string word;
  while (in >> word) {
    try {
      std::size_t used = 0;
      int value = std::stoi(word, &used);
      if (used != word.size()) throw std::invalid_argument(word);
      entries.push_back(value);
    } catch (const std::exception&) {
      throw OutOfRange("radix entry '" + word + "' is not a number");
    }
  }
  return Radices(std::move(entries));
}

std::string finfun_text(const FinFun& f) {
  std::string s = std::to_string(f.src) + " -> " + std::to_string(f.tgt) + " [";
  for (int i = 0; i < f.src; ++i) s += (i ? "," : "") + std::to_string(f.table[i]);
  return s + "]";
}

std::string spliteq_text(const SplitEq& r) {
  std::string s = std::to_string(r.src) + " -> " + std::to_string(r.tgt) + " {";
  for (std::size_t c = 0; c < r.classes.size(); ++c) {
    if (c) s += ",";
    s += "{";
    for (std::size_t k = 0; k < r.classes[c].size(); ++k)
      s += (k ? "," : "") + std::to_string(r.classes[c][k]);
    s += "}";
  }
  return s + "}";
}

std::string binrel_text(const BinRel& r) {
  std::string s = std::to_string(r.src) + " -> " + std::to_string(r.tgt) + " {";
  bool first = true;
  for (auto [i, j] : r.pairs) {
    if (!first) s += ",";
    first = false;
    s += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  }
  return s + "}";
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  if (std::none_of(allowed.begin(), allowed.end(),
                   [&](const char* f) { return format == f; }))
    throw CLI::ValidationError("--format", "format '" + format + "' is not available here");
}

void emit_finfun(const FinFun& f, const std::string& format, std::ostream& out) {
  require_format(format, {"text", "json"});
  if (format == "json")
    out << finfun_to_json(f).dump() << "\n";
  else
    out << finfun_text(f) << "\n";
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"deduction calculus over finite functions", "condis"};
  app.require_subcommand(1);

  int exit_code = 0;
  std::string format = "text";
  std::string arg1, arg2, arg3;

  auto add_format = [&](CLI::App* sc) {
    sc->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "dot"}))
        ->capture_default_str();
  };

  auto* eval_disj_cmd = app.add_subcommand("eval-disj", "evaluate a disjunctive term to a finite function");
  eval_disj_cmd->add_option("term", arg1, "term text or file")->required();
  add_format(eval_disj_cmd);
  eval_disj_cmd->callback([&] {
    emit_finfun(eval_F(*parse_disj(slurp_or_self(arg1))), format, out);
  });

  auto* eval_conj_cmd = app.add_subcommand("eval-conj", "evaluate a conjunctive term to a finite function");
  eval_conj_cmd->add_option("term", arg1, "term text or file")->required();
  add_format(eval_conj_cmd);
  eval_conj_cmd->callback([&] {
    emit_finfun(eval_H(*parse_conj(slurp_or_self(arg1))), format, out);
  });

  auto add_eq = [&](const char* name, const char* help, auto decide) {
    auto* sc = app.add_subcommand(name, help);
    sc->add_option("term1", arg1, "first term")->required();
    sc->add_option("term2", arg2, "second term")->required();
    add_format(sc);
    sc->callback([&, decide] {
      require_format(format, {"text", "json"});
      bool equal = decide(slurp_or_self(arg1), slurp_or_self(arg2));
      if (format == "json")
        out << json{{"equal", equal}}.dump() << "\n";
      else
        out << (equal ? "equal" : "unequal") << "\n";
    });
  };
  add_eq("eq-disj", "decide equality of two disjunctive terms", [](const std::string& a, const std::string& b) {
    return eq_disj(*parse_disj(a), *parse_disj(b));
  });
  add_eq("eq-conj", "decide equality of two conjunctive terms", [](const std::string& a, const std::string& b) {
    return eq_conj(*parse_conj(a), *parse_conj(b));
  });

  auto* synth_cmd = app.add_subcommand("synth", "synthesize a disjunctive term denoting a finite function");
  synth_cmd->add_option("finfun", arg1, "function as JSON (file or inline)")->required();
  add_format(synth_cmd);
  synth_cmd->callback([&] {
    require_format(format, {"text", "json"});
    auto term = synth_disj(finfun_from_json(read_json_input(arg1)));
    if (format == "json")
      out << json{{"term", to_text(*term)}}.dump() << "\n";
    else
      out << to_text(*term) << "\n";
  });

  auto* translate_cmd =
      app.add_subcommand("translate", "compile a conjunctive term to a one-letter disjunctive term");
  translate_cmd->add_option("term", arg1, "conjunctive term text or file")->required();
  add_format(translate_cmd);
  translate_cmd->callback([&] {
    require_format(format, {"text", "json"});
    auto term = parse_conj(slurp_or_self(arg1));
    FinFun h = eval_H(*term);
    auto image = conj_to_disj(*term);
    FinFun f = eval_F(*image);
    if (!(f == h)) throw InternalInvariantViolation("translated term denotes a different function");
    if (format == "json") {
      out << json{{"term", to_text(*image)},
                  {"h_image", finfun_to_json(h)},
                  {"f_image", finfun_to_json(f)},
                  {"check", "OK"}}
                 .dump()
          << "\n";
    } else {
      out << "term: " << to_text(*image) << "\n";
      out << "H: " << finfun_text(h) << "\n";
      out << "F: " << finfun_text(f) << "\n";
      out << "F(image) = H(term): OK\n";
    }
  });

  auto* gen_compose_cmd = app.add_subcommand("gen-compose", "compose split equivalences (first applied first)");
  gen_compose_cmd->add_option("r", arg1, "R as JSON (file or inline)")->required();
  gen_compose_cmd->add_option("s", arg2, "S as JSON (file or inline)")->required();
  add_format(gen_compose_cmd);
  gen_compose_cmd->callback([&] {
    require_format(format, {"text", "json"});
    SplitEq r = spliteq_from_json(read_json_input(arg1));
    SplitEq s = spliteq_from_json(read_json_input(arg2));
    SplitEq composite = se_compose(s, r);
    if (format == "json")
      out << spliteq_to_json(composite).dump() << "\n";
    else
      out << spliteq_text(composite) << "\n";
  });

  auto* represent_cmd =
      app.add_subcommand("represent", "Brauerian representation of a split equivalence over given radices");
  represent_cmd->add_option("a-radices", arg1, "source radices, e.g. \"3 2 2\"")->required();
  represent_cmd->add_option("b-radices", arg2, "target radices, e.g. \"2 2 2 2\"")->required();
  represent_cmd->add_option("spliteq", arg3, "split equivalence as JSON (file or inline)")->required();
  add_format(represent_cmd);
  represent_cmd->callback([&] {
    require_format(format, {"text", "json"});
    Radices a = parse_radices(arg1);
    Radices b = parse_radices(arg2);
    SplitEq r = spliteq_from_json(read_json_input(arg3));
    const bool is_appropriate = appropriate(a, b, r);
    BinRel rel = f_ab_rel(a, b, r);
    FinFun fun;
    std::string why_not;
    int witness_source = -1, witness_images = -1;
    bool is_function = true;
    try {
      fun = f_ab_fun(a, b, r);
    } catch (const NotAFunction& e) {
      is_function = false;
      why_not = e.what();
      witness_source = e.source;
      witness_images = e.images;
      exit_code = 1;  // a domain error, but the report is still printed
    }
    if (format == "json") {
      json j{{"appropriate", is_appropriate}, {"is_function", is_function}};
      j["function"] = is_function ? finfun_to_json(fun) : json(nullptr);
      j["witness"] = is_function
                         ? json(nullptr)
                         : json{{"source", witness_source}, {"images", witness_images}};
      j["relation"] = binrel_to_json(rel);
      out << j.dump() << "\n";
    } else if (is_function) {
      out << (is_appropriate ? "appropriate" : "not appropriate") << "\n";
      out << "function: " << finfun_text(fun) << "\n";
    } else {
      out << (is_appropriate ? "appropriate" : "not appropriate") << "; " << why_not << "\n";
      out << "relation: " << binrel_text(rel) << "\n";
    }
  });

  auto* primes_cmd = app.add_subcommand("primes", "print the first N primes");
  int prime_count = 0;
  primes_cmd->add_option("n", prime_count, "how many primes")->required()->check(CLI::NonNegativeNumber);
  add_format(primes_cmd);
  primes_cmd->callback([&] {
    require_format(format, {"text", "json"});
    std::vector<int> primes;
    for (int i = 1; i <= prime_count; ++i) primes.push_back(nth_prime(i));
    if (format == "json") {
      out << json(primes).dump() << "\n";
    } else {
      for (std::size_t k = 0; k < primes.size(); ++k) out << (k ? " " : "") << primes[k];
      out << "\n";
    }
  });

  auto* render_cmd = app.add_subcommand("render", "draw a value as a two-row picture");
  render_cmd->add_option("kind", arg1, "finfun or spliteq")
      ->required()
      ->check(CLI::IsMember({"finfun", "spliteq"}));
  render_cmd->add_option("value", arg2, "value as JSON (file or inline)")->required();
  add_format(render_cmd);
  render_cmd->callback([&] {
    json j = read_json_input(arg2);
    if (arg1 == "finfun") {
      FinFun f = finfun_from_json(j);
      if (format == "dot")
        out << render_finfun_dot(f);
      else if (format == "json")
        out << finfun_to_json(f).dump() << "\n";
      else
        out << render_finfun_text(f);
    } else {
      SplitEq r = spliteq_from_json(j);
      if (format == "dot")
        out << render_spliteq_dot(r);
      else if (format == "json")
        out << spliteq_to_json(r).dump() << "\n";
      else
        out << render_spliteq_text(r);
    }
  });

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}

}  // namespace condis
