#include "linearr/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <functional>
#include <ostream>

#include "linearr/corpus.hpp"
#include "linearr/elimination.hpp"
#include "linearr/io.hpp"
#include "linearr/report.hpp"

namespace linearr {

Arrangement resolve_arrangement(const std::string& ref, std::ostream& warnings) {
  if (const CorpusEntry* e = find_corpus_entry(ref)) return e->arrangement;
  if (ref.find(':') != std::string::npos && !std::filesystem::exists(ref)) {
    FamilyInstance inst = instantiate_family_spec(ref);
    for (const auto& w : inst.warnings) warnings << "warning: " << w << "\n";
    return inst.arrangement;
  }
  if (!std::filesystem::exists(ref)) throw DataError("'" + ref + "' is neither a corpus entry, a family nor a file");
  return load_arrangement(ref);
}

namespace {

std::string classes_text(const NetStructure& n) {
  std::string out;
  for (const auto& cls : n.classes) {
    out += out.empty() ? "{" : " {";
    for (std::size_t i = 0; i < cls.size(); ++i) out += (i ? "," : "") + std::to_string(cls[i] + 1);
    out += "}";
  }
  return out;
}

std::string indent(const std::string& block) {
  std::string out;
  std::size_t pos = 0;
  while (pos < block.size()) {
    const std::size_t end = block.find('\n', pos);
    out += "  " + block.substr(pos, end - pos) + "\n";
    if (end == std::string::npos) break;
    pos = end + 1;
  }
  return out;
}

std::string vector_text(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact analysis of projective line arrangements over Q and Q(w).", "linearr"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Structured JSON output");

  std::function<int()> action;
  std::string ref;
  std::string ref_b;

  auto* census_cmd = app.add_subcommand("census", "Multiplicity census of the multiple points");
  census_cmd->add_option("arrangement", ref, "Corpus name, family:value or file")->required();
  census_cmd->callback([&] {
    action = [&] {
      const Arrangement a = resolve_arrangement(ref, err);
      const Census c = census(a);
      if (json) print_json(out, Json{{"arrangement", a.name()}, {"census", census_json(c)}});
      else out << c.to_string() << "\n";
      return int{kExitOk};
    };
  });

  int prime = 0;
  auto* betti_cmd = app.add_subcommand("betti", "Aomoto-Betti number over F_p");
  betti_cmd->add_option("-p", prime, "Prime p")->required()->check(CLI::Validator(
      [](std::string& s) {
        try {
          return is_prime(std::stoi(s)) ? std::string() : s + " is not prime";
        } catch (const std::exception&) {
          return s + " is not an integer";
        }
      },
      "PRIME"));
  betti_cmd->add_option("arrangement", ref, "Corpus name, family:value or file")->required();
  betti_cmd->callback([&] {
    action = [&] {
      const Arrangement a = resolve_arrangement(ref, err);
      const BettiResult r = beta_1p(a, prime);
      if (json) {
        print_json(out, Json{{"arrangement", a.name()}, {"betti", betti_json(r)}});
      } else {
        out << "beta_1" << prime << "=" << r.beta << "\n";
        if (auto v = nonconstant_solution(r)) out << "nonconstant solution " << vector_text(*v) << "\n";
      }
      return int{kExitOk};
    };
  });

  int classes = 3;
  auto* nets_cmd = app.add_subcommand("nets", "Nets with k classes");
  nets_cmd->add_option("-k", classes, "Number of classes")->check(CLI::IsMember({3, 4}));
  nets_cmd->add_option("arrangement", ref, "Corpus name, family:value or file")->required();
  nets_cmd->callback([&] {
    action = [&] {
      const Arrangement a = resolve_arrangement(ref, err);
      const Lattice lat(a);
      const auto nets = find_nets(lat, classes);
      if (json) {
        Json arr = Json::array();
        for (const auto& n : nets) arr.push_back(net_json(lat, n));
        print_json(out, Json{{"arrangement", a.name()}, {"nets", arr}});
        return int{kExitOk};
      }
      out << "(" << classes << "," << a.size() / classes << ")-nets: " << nets.size() << "\n";
      for (const auto& n : nets) {
        out << classes_text(n) << "\n";
        for (const ClassCensus& cc : mixed_census(lat, n)) {
          out << "  class census " << cc.census.to_string();
          if (cc.type) out << (*cc.type == ClassType::WithTriplePoint ? "  type (i)" : "  type (ii)");
          out << "\n";
        }
      }
      return int{kExitOk};
    };
  });

  int order = 0;
  auto* latin_cmd = app.add_subcommand("latin", "Latin squares of 3-class nets, or the inventory of an order");
  latin_cmd->add_option("--order", order, "Enumerate all squares of this order (1..4)")->check(CLI::Range(1, 4));
  latin_cmd->add_option("arrangement", ref, "Corpus name, family:value or file");
  latin_cmd->callback([&] {
    action = [&] {
      if (order > 0) {
        const LatinInventory inv = enumerate_latin_squares(order);
        if (json) {
          Json classes_json = Json::array();
          for (const auto& [code, squares] : inv.classes)
            classes_json.push_back(Json{{"code", code.representative.rows()}, {"squares", squares.size()}});
          print_json(out, Json{{"order", order}, {"squares", inv.square_count()}, {"main_classes", classes_json}});
        } else {
          out << "order " << order << ": " << inv.square_count() << " squares, " << inv.class_count()
              << " main classes\n";
          for (const auto& [code, squares] : inv.classes)
            out << indent(code.representative.to_string()) << "  (" << squares.size() << " squares)\n";
        }
        return int{kExitOk};
      }
      if (ref.empty()) throw CLI::ValidationError("latin", "needs an arrangement or --order");
      const Arrangement a = resolve_arrangement(ref, err);
      const Lattice lat(a);
      const auto nets = find_nets(lat, 3);
      if (json) {
        Json arr = Json::array();
        for (const auto& n : nets) arr.push_back(net_json(lat, n));
        print_json(out, Json{{"arrangement", a.name()}, {"nets", arr}});
        return int{kExitOk};
      }
      for (const auto& n : nets) {
        const std::string name = main_class_name(*n.square);
        out << classes_text(n) << "  main class " << (name.empty() ? "unnamed" : name) << "\n"
            << indent(n.square->to_string());
      }
      if (nets.empty()) out << "no 3-class nets\n";
      return int{kExitOk};
    };
  });

  auto* pencil_cmd = app.add_subcommand("pencil", "Linear relation among the class products of each 3-class net");
  pencil_cmd->add_option("arrangement", ref, "Corpus name, family:value or file")->required();
  pencil_cmd->callback([&] {
    action = [&] {
      const Arrangement a = resolve_arrangement(ref, err);
      const auto nets = find_nets(a, 3);
      Json arr = Json::array();
      for (const auto& n : nets) {
        const auto rel = pencil_check(a, n);
        if (json) {
          Json entry = pencil_json(rel);
          entry["classes"] = classes_text(n);
          arr.push_back(std::move(entry));
          continue;
        }
        out << classes_text(n) << "\n";
        if (!rel) {
          out << "  no pencil relation\n";
          continue;
        }
        for (std::size_t i = 0; i < 3; ++i) out << "  Q" << i + 1 << " = " << rel->products[i].to_string() << "\n";
        out << "  lambda = (" << rel->lambda[0].to_string() << ", " << rel->lambda[1].to_string() << ", "
            << rel->lambda[2].to_string() << ")\n";
      }
      if (json) print_json(out, Json{{"arrangement", a.name()}, {"pencil", arr}});
      else if (nets.empty()) out << "no 3-class nets\n";
      return int{kExitOk};
    };
  });

  auto* mono_cmd = app.add_subcommand("monodromy", "Combinatorial monodromy report");
  mono_cmd->add_option("arrangement", ref, "Corpus name, family:value or file")->required();
  mono_cmd->callback([&] {
    action = [&] {
      const Arrangement a = resolve_arrangement(ref, err);
      const MonodromyReport r = monodromy_verdict(a);
      if (json) {
        print_json(out, Json{{"arrangement", a.name()}, {"monodromy", monodromy_json(r)}});
        return int{kExitOk};
      }
      out << "d=" << r.d << " max_mult=" << r.max_mult << " admissible=" << vector_text(r.admissible) << "\n";
      for (auto [p, beta] : r.betti) out << "beta_1" << p << "=" << beta << "\n";
      for (const OrderBound& b : r.bounds)
        out << "b_" << b.m << " in [" << b.lower << ", " << (b.upper ? std::to_string(*b.upper) : "?") << "]\n";
      for (const NetStructure& n : r.nets) out << "net (" << n.k << "," << n.q << ") " << classes_text(n) << "\n";
      out << "dim H1(F) in [" << r.h1_lower << ", " << (r.h1_upper ? std::to_string(*r.h1_upper) : "?")
          << "] (eigenvalue-1 part d-1 included)\n";
      out << "verdict: " << verdict_name(r.verdict) << " (" << r.reason << ")\n";
      return int{kExitOk};
    };
  });

  auto* iso_cmd = app.add_subcommand("isomorphic", "Lattice isomorphism test");
  iso_cmd->add_option("a", ref, "First arrangement")->required();
  iso_cmd->add_option("b", ref_b, "Second arrangement")->required();
  iso_cmd->callback([&] {
    action = [&] {
      const Arrangement a = resolve_arrangement(ref, err);
      const Arrangement b = resolve_arrangement(ref_b, err);
      const auto w = lattice_isomorphism(a, b);
      if (json) {
        Json witness = nullptr;
        if (w) {
          witness = Json::array();
          for (int v : *w) witness.push_back(v + 1);
        }
        print_json(out, Json{{"a", a.name()}, {"b", b.name()}, {"isomorphic", w.has_value()}, {"witness", witness}});
      } else if (w) {
        std::vector<int> one_based;
        for (int v : *w) one_based.push_back(v + 1);
        out << "isomorphic, line i -> witness[i]: " << vector_text(one_based) << "\n";
      } else {
        out << "not isomorphic\n";
      }
      return int{kExitOk};
    };
  });

  std::string what;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification: lemma14 or corpus");
  verify_cmd->add_option("what", what, "lemma14 | corpus")->required()->check(CLI::IsMember({"lemma14", "corpus"}));
  verify_cmd->callback([&] {
    action = [&] {
      if (what == "lemma14") {
        const EliminationCertificate cert = verify_lemma14();
        if (json) {
          Json steps = Json::array();
          for (const auto& s : cert.steps) {
            Json stripped = Json::array();
            for (const auto& f : s.stripped)
              stripped.push_back(Json{{"factor", f.factor.to_string()},
                                      {"multiplicity", f.multiplicity},
                                      {"excluded_by", f.excluded_by}});
            steps.push_back(Json{{"label", s.label},
                                 {"derivation", s.derivation},
                                 {"raw", s.raw.to_string()},
                                 {"stripped", stripped},
                                 {"result", s.result.to_string()}});
          }
          Json degenerate = Json::array();
          for (const auto& z : cert.degenerate) {
            Json pt = Json::object();
            for (const auto& [k, v] : z.point) pt[k] = v.to_string();
            degenerate.push_back(Json{{"constraint", z.constraint}, {"point", pt}, {"factor", z.factor}});
          }
          print_json(out, Json{{"steps", steps},
                               {"final_eliminant", cert.final_eliminant.to_string()},
                               {"conclusion", cert.conclusion()},
                               {"degenerate", degenerate}});
        } else {
          out << cert.to_string();
        }
        return int{cert.no_admissible_solution ? kExitOk : kExitVerificationFailed};
      }
      std::vector<std::string> problems;
      for (const auto& e : corpus()) {
        auto p = verify_entry(e);
        problems.insert(problems.end(), p.begin(), p.end());
      }
      if (json) print_json(out, Json{{"entries", corpus().size()}, {"problems", problems}});
      else {
        for (const auto& p : problems) out << p << "\n";
        out << corpus().size() << " corpus entries, " << problems.size() << " problems\n";
      }
      return int{problems.empty() ? kExitOk : kExitVerificationFailed};
    };
  });

  auto* corpus_cmd = app.add_subcommand("corpus", "Built-in arrangements");
  corpus_cmd->require_subcommand(1);
  auto* list_cmd = corpus_cmd->add_subcommand("list", "List corpus entries");
  list_cmd->callback([&] {
    action = [&] {
      if (json) {
        Json arr = Json::array();
        for (const auto& e : corpus())
          arr.push_back(Json{{"name", e.name}, {"d", e.arrangement.size()}, {"census", census_json(e.expected_census)},
                             {"note", e.note}});
        print_json(out, arr);
      } else {
        for (const auto& e : corpus())
          out << e.name << "  d=" << e.arrangement.size() << "  " << e.expected_census.to_string() << "\n";
      }
      return int{kExitOk};
    };
  });
  auto* show_cmd = corpus_cmd->add_subcommand("show", "Print an entry in arrangement file format");
  show_cmd->add_option("name", ref, "Corpus entry")->required();
  show_cmd->callback([&] {
    action = [&] {
      const CorpusEntry& e = corpus_entry(ref);
      if (json) {
        Json j = arrangement_json(e.arrangement);
        j["note"] = e.note;
        j["census"] = census_json(e.expected_census);
        print_json(out, j);
      } else {
        out << "# " << e.note << "\n" << format_arrangement(e.arrangement);
      }
      return int{kExitOk};
    };
  });

  auto* analyze_cmd = app.add_subcommand("analyze", "Full report");
  analyze_cmd->add_option("arrangement", ref, "Corpus name, family:value or file")->required();
  analyze_cmd->callback([&] {
    action = [&] {
      const Arrangement a = resolve_arrangement(ref, err);
      const Json report = analysis_report(a);
      if (json) {
        print_json(out, report);
        return int{kExitOk};
      }
      out << a.name() << ": d=" << a.size() << ", field " << field_name(a.field()) << "\n";
      out << "census " << census(a).to_string() << "\n";
      for (const auto& [p, b] : report["betti"].items()) out << "beta_1" << p << "=" << b["beta"].get<int>() << "\n";
      out << "nets " << report["nets"].size() << "\n";
      for (const auto& n : report["nets"]) {
        out << "  (" << n["k"].get<int>() << "," << n["q"].get<int>() << ") " << n["classes"].dump();
        if (n.contains("main_class") && !n["main_class"].is_null())
          out << " main class " << n["main_class"].get<std::string>();
        out << "\n";
      }
      const Json& m = report["monodromy"];
      out << "monodromy " << (m["verdict"].is_null() ? std::string("n/a") : m["verdict"].get<std::string>()) << " ("
          << m["reason"].get<std::string>() << ")\n";
      return int{kExitOk};
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    return action ? action() : int{kExitUsage};
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DataError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDataError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitDataError;
  }
}

}  // namespace linearr
