// lawbench: command-line front end for the lawlessness toolkit.
//
// Exit status: 0 when every certified check passed, 1 on a certificate
// failure, 2 on a configuration error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "lawless/acceptance.hpp"
#include "lawless/ball.hpp"
#include "lawless/engine.hpp"
#include "lawless/errors.hpp"
#include "lawless/free_group.hpp"
#include "lawless/golod.hpp"
#include "lawless/grigorchuk.hpp"
#include "lawless/permutation.hpp"
#include "lawless/pl_map.hpp"
#include "lawless/rfbounds.hpp"
#include "lawless/slowgrowth.hpp"
#include "lawless/thompson.hpp"
#include "lawless/wreath.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace lawless;

struct Output {
  std::string format = "json";
  std::string path;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string csv_cell(const json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

// CSV: the "rows" array when present, else one key,value line per scalar.
std::string to_csv(const json& report) {
  std::ostringstream os;
  if (report.contains("rows") && report["rows"].is_array() && !report["rows"].empty()) {
    const auto& rows = report["rows"];
    bool first = true;
    for (const auto& [k, v] : rows[0].items()) {
      os << (first ? "" : ",") << k;
      first = false;
    }
    os << '\n';
    for (const auto& r : rows) {
      first = true;
      for (const auto& [k, v] : r.items()) {
        os << (first ? "" : ",") << csv_cell(v);
        first = false;
      }
      os << '\n';
    }
    return os.str();
  }
  os << "key,value\n";
  for (const auto& [k, v] : report.items()) os << k << ',' << csv_cell(v) << '\n';
  return os.str();
}

void emit(const Output& out, const json& report) {
  std::string text = out.format == "csv" ? to_csv(report) : report.dump(2) + "\n";
  if (out.path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out.path);
  if (!f) throw ConfigError("cannot write " + out.path);
  f << text;
}

// Geodesic spelling of a ball element over generator names.
template <GroupBackend B>
std::string spell(const Ball<B>& ball, const typename B::Element& g) {
  auto i = ball.find(g);
  if (!i) return "?";
  FreeWord w = ball.word(*i);
  if (w.empty()) return "1";
  const auto& gens = ball.backend().generators();
  std::string s;
  for (Letter l : w.letters()) {
    if (!s.empty()) s += ' ';
    s += gens[static_cast<std::size_t>(std::abs(l) - 1)].name;
    if (l < 0) s += "^-1";
  }
  return s;
}

int trailing_int(const std::string& s, const std::string& prefix) {
  if (s.size() <= prefix.size() || s.compare(0, prefix.size(), prefix) != 0) return -1;
  try {
    std::size_t used = 0;
    int v = std::stoi(s.substr(prefix.size()), &used);
    return used == s.size() - prefix.size() ? v : -1;
  } catch (const std::exception&) {
    return -1;
  }
}

// Calls f(backend) for the group named by `group`: free<k>, sym<n>, w<n>,
// dsum<n>, grig, thompson.
template <class F>
auto with_backend(const std::string& group, F&& f) {
  if (int k = trailing_int(group, "free"); k >= 1) return f(FreeBackend(k));
  if (int n = trailing_int(group, "sym"); n >= 2) return f(SymBackend(n));
  if (int n = trailing_int(group, "dsum"); n >= 2) return f(DirectSumBackend(n));
  if (int n = trailing_int(group, "w"); n >= 0) return f(wreath::WreathBackend(n));
  if (group == "grig") return f(grig::GrigBackend());
  if (group == "thompson") return f(thompson::ThompsonBackend());
  throw ConfigError("unknown group '" + group +
                    "' (expected free<k>, sym<n>, dsum<n>, w<n>, grig, thompson)");
}

std::vector<FreeWord> read_words(const std::string& path, int rank) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot read " + path);
  std::vector<FreeWord> out;
  std::string line;
  while (std::getline(f, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line.erase(0, line.find_first_not_of(" \t\r"));
    line.erase(line.find_last_not_of(" \t\r") + 1);
    if (line.empty()) continue;
    FreeWord w = FreeWord::parse(line, rank);
    if (w.empty()) throw ConfigError("trivial word in " + path);
    out.push_back(w);
  }
  return out;
}

json table_report(const GrowthTable& t, const std::string& group) {
  json j;
  j["group"] = group;
  j["quantity"] = t.quantity();
  j["rows"] = json::array();
  for (const auto& e : t.entries()) {
    j["rows"].push_back({{"n", e.n}, {"value", e.value}, {"status", to_string(e.status)}});
  }
  return j;
}

std::string q(const golod::Rational& r) { return golod::to_string(r); }

json certificate_json(const golod::GSCertificate& c) {
  return {{"accepted", c.accepted},       {"reason", c.reason},
          {"tau", q(c.tau)},              {"linear_part", q(c.linear_part)},
          {"finite_part", q(c.finite_part)}, {"h", q(c.h)},
          {"schedule_sum", q(c.schedule_sum)}, {"tail_bound", q(c.tail_bound)},
          {"total", q(c.total)},          {"total_approx", c.total.convert_to<double>()}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lawbench: lawlessness growth experiments with exact certificates"};
  app.require_subcommand(1);
  Output out;
  app.add_option("--format", out.format, "Report format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", out.path, "Write the report to a file instead of stdout");

  std::string group = "free2";
  int n = 4, m = 1, l = 1, k = 2, budget = 6, rank = 2;
  std::string words_file, word;
  bool ok = true;
  std::function<void()> action;

  auto positive = CLI::PositiveNumber;

  auto* growth = app.add_subcommand("growth", "Lawlessness growth table A(n)");
  growth->add_option("--group", group)->capture_default_str();
  growth->add_option("--n", n)->check(positive)->capture_default_str();
  growth->add_option("--budget", budget)->check(positive)->capture_default_str();
  growth->add_option("--rank", rank)->check(positive)->capture_default_str();
  growth->add_option("--words-file", words_file, "One word per line, '#' comments");
  growth->callback([&] {
    action = [&] {
      with_backend(group, [&](const auto& b) {
        using B = std::decay_t<decltype(b)>;
        Ball<B> ball(b);
        std::vector<FreeWord> words;
        if (!words_file.empty()) words = read_words(words_file, rank);
        emit(out, table_report(lawlessness_growth(ball, n, budget, rank, words), b.name()));
        return 0;
      });
    };
  });

  auto* cx = app.add_subcommand("complexity", "chi(w) with a witness tuple");
  cx->add_option("--group", group)->capture_default_str();
  cx->add_option("--word", word)->required();
  cx->add_option("--rank", rank)->check(positive)->capture_default_str();
  cx->add_option("--budget", budget)->check(positive)->capture_default_str();
  cx->callback([&] {
    action = [&] {
      with_backend(group, [&](const auto& b) {
        using B = std::decay_t<decltype(b)>;
        Ball<B> ball(b);
        FreeWord w = FreeWord::parse(word, rank);
        auto r = complexity(ball, w, budget);
        json j{{"group", b.name()}, {"word", w.str()}, {"status", to_string(r.status)},
               {"value", r.value}};
        j["witness"] = json::array();
        for (const auto& g : r.witness) j["witness"].push_back(spell(ball, g));
        emit(out, j);
        return 0;
      });
    };
  });

  auto* wit = app.add_subcommand("witness", "k-tuple on which no word of length <= l vanishes");
  wit->add_option("--group", group)->capture_default_str();
  wit->add_option("--l", l)->check(positive)->capture_default_str();
  wit->add_option("--k", k)->check(positive)->capture_default_str();
  wit->add_option("--budget", budget)->check(positive)->capture_default_str();
  wit->callback([&] {
    action = [&] {
      with_backend(group, [&](const auto& b) {
        using B = std::decay_t<decltype(b)>;
        Ball<B> ball(b);
        json j{{"group", b.name()}, {"l", l}, {"k", k}};
        try {
          auto t = find_spotless_tuple(ball, l, k, budget);
          j["status"] = "exact";
          j["tuple"] = json::array();
          int total = 0;
          for (const auto& g : t) {
            j["tuple"].push_back(spell(ball, g));
            total += ball.length(*ball.find(g));
          }
          j["total_length"] = total;
        } catch (const NotFound& e) {
          j["status"] = "budget_exceeded";
          j["detail"] = e.what();
        }
        emit(out, j);
        return 0;
      });
    };
  });

  std::vector<std::string> combine_words;
  auto* comb = app.add_subcommand("combine", "Word vanishing on the union of vanishing sets");
  comb->add_option("--words", combine_words, "Words to combine")->required()->delimiter(',');
  comb->add_option("--rank", rank)->check(positive)->capture_default_str();
  comb->callback([&] {
    action = [&] {
      std::vector<FreeWord> ws;
      std::size_t longest = 0;
      for (const auto& s : combine_words) {
        ws.push_back(FreeWord::parse(s, rank));
        longest = std::max(longest, ws.back().length());
      }
      FreeWord w = combine(ws);
      emit(out, {{"inputs", combine_words}, {"combined", w.str()}, {"length", w.length()},
                 {"bound", 16 * ws.size() * ws.size() * longest}});
    };
  });

  int max_len = 0;
  auto* wl = app.add_subcommand("wreath-law", "Law witnesses and shortest laws in W_n");
  wl->add_option("--n", n)->check(CLI::NonNegativeNumber)->capture_default_str();
  wl->add_option("--word", word, "Build the inductive witness for this word");
  wl->add_option("--search,--max-len", max_len, "Search for a law of length <= this (n <= 3)");
  wl->add_option("--k", k)->check(positive)->capture_default_str();
  wl->callback([&] {
    action = [&] {
      json j{{"n", n}};
      if (!word.empty()) {
        FreeWord w = FreeWord::parse(word, k);
        auto lw = wreath::law_witness(w, n);
        if (n <= 3) wreath::attach_exact_length(lw, wreath::LengthOracle(n));
        j["word"] = w.str();
        j["tuple"] = json::array();
        for (const auto& iw : lw.words) j["tuple"].push_back(iw.str());
        j["construction_length"] = lw.construction_length;
        if (lw.exact_length) j["exact_length"] = *lw.exact_length;
        j["bound"] = (n + 1) * (n + 1);
        ok = lw.construction_length <= static_cast<std::size_t>((n + 1) * (n + 1));
      }
      if (max_len > 0) {
        auto s = wreath::shortest_law(n, max_len, k);
        j["max_len"] = max_len;
        j["law"] = s.law ? json(s.law->str()) : json(nullptr);
        j["words_checked"] = s.words_checked;
        j["dismissed_by_witness"] = s.by_witness;
      }
      if (word.empty() && max_len == 0) throw ConfigError("wreath-law needs --word or --search");
      emit(out, j);
    };
  });

  auto* grig_cmd = app.add_subcommand("grig", "Grigorchuk group experiments");
  grig_cmd->require_subcommand(1);
  auto* tor = grig_cmd->add_subcommand("torsion", "Torsion growth pi(n)");
  tor->add_option("--n", n)->check(positive)->capture_default_str();
  tor->callback([&] {
    action = [&] {
      auto r = grig::torsion_growth(n);
      json j = table_report(r.pi, "grig");
      j["all_powers_of_two"] = r.all_powers_of_two;
      j["elements"] = r.elements;
      j["max_order_over_length_1.5"] = r.max_ratio;
      ok = r.all_powers_of_two;
      emit(out, j);
    };
  });
  bool check_words = false;
  std::uint64_t seed = 1;
  int phi_n = 1;
  auto* phi = grig_cmd->add_subcommand("phi", "Certificate for the embedding of W_n");
  phi->add_option("--n", phi_n)->check(CLI::Range(0, 3))->capture_default_str();
  phi->add_flag("--check-words,--verify", check_words, "Also run the word problem on every image");
  phi->add_option("--seed", seed)->capture_default_str();
  phi->callback([&] {
    action = [&] {
      auto c = grig::phi(phi_n, check_words, seed);
      json j{{"n", c.n},
             {"images", c.images},
             {"orders_two", c.orders_two},
             {"rigid_sections", c.rigid_sections},
             {"x4_sections", c.x4_sections},
             {"injective_portraits", c.injective_portraits},
             {"injective_words", c.words_checked ? json(c.injective_words) : json(nullptr)},
             {"homomorphism_spot_checks", c.homomorphism_spot_checks},
             {"nontrivial_elements", c.nontrivial_elements},
             {"longest_image", c.longest_image},
             {"ok", c.ok()}};
      ok = c.ok();
      emit(out, j);
    };
  });
  auto* pw = grig_cmd->add_subcommand("power", "chi(x^(2^m)) by ball scan");
  pw->add_option("--m", m)->check(CLI::NonNegativeNumber)->capture_default_str();
  pw->add_option("--budget", budget)->check(positive)->capture_default_str();
  pw->callback([&] {
    action = [&] {
      auto r = grig::power_complexity(m, budget);
      emit(out, {{"m", r.m}, {"status", to_string(r.status)}, {"value", r.value},
                 {"witness", r.witness}});
    };
  });

  auto* th = app.add_subcommand("thompson", "Thompson's group F");
  th->require_subcommand(1);
  auto* thc = th->add_subcommand("check", "Recursion identity, membership and short words");
  thc->add_option("--n", n)->check(positive)->capture_default_str();
  thc->callback([&] {
    action = [&] {
      json j{{"n", n}};
      bool rec = true;
      for (int i = 0; i <= n; ++i) rec = thompson::check_recursion(i) && rec;
      bool mem = thompson::is_member(thompson::make_U(n)) && thompson::is_member(thompson::make_V(n));
      auto bs = thompson::brin_squier_check(n);
      j["recursion"] = rec;
      j["membership"] = mem;
      j["U_n"] = thompson::make_U(n).str();
      j["V_n"] = thompson::make_V(n).str();
      j["words"] = bs.words;
      j["failures"] = bs.failures;
      j["length_bound_U_n"] = "(M+16)n + M, M = |U_0|_S";
      j["length_bound_V_n"] = "(M+16)n + M + 4";
      ok = rec && mem && bs.ok();
      emit(out, j);
    };
  });

  auto* gs = app.add_subcommand("gs", "Golod-Shafarevich certificates");
  gs->require_subcommand(1);
  int p = 2, depth = 4;
  std::string tau = "3/4", schedule_file, q_text = "2", c_text = "3/5";
  auto* gsv = gs->add_subcommand("verify", "Check 1 - k tau + sum tau^D(r) < 0 exactly");
  gsv->add_option("--k", k)->check(positive)->capture_default_str();
  gsv->add_option("--p", p)->check(positive)->capture_default_str();
  gsv->add_option("--tau", tau)->capture_default_str();
  gsv->add_option("--schedule", schedule_file,
                  "JSON with optional degrees [[d, count], ...] and schedule {C, q, c, m0}");
  gsv->callback([&] {
    action = [&] {
      golod::GSInput in;
      in.k = k;
      in.tau = golod::parse_rational(tau);
      if (!schedule_file.empty()) {
        std::ifstream f(schedule_file);
        if (!f) throw ConfigError("cannot read " + schedule_file);
        json s;
        try {
          s = json::parse(f);
        } catch (const json::exception& e) {
          throw ConfigError(std::string("bad schedule file: ") + e.what());
        }
        auto rat = [](const json& v) {
          return golod::parse_rational(v.is_string() ? v.get<std::string>() : v.dump());
        };
        for (const auto& d : s.value("degrees", json::array())) {
          in.degrees.emplace_back(d.at(0).get<std::int64_t>(),
                                  golod::BigInt(d.at(1).get<std::int64_t>()));
        }
        if (s.contains("schedule")) {
          const auto& sc = s["schedule"];
          golod::Schedule sch;
          sch.k = k;
          sch.p = p;
          sch.C = rat(sc.at("C"));
          sch.q = rat(sc.at("q"));
          if (sc.contains("c")) sch.c = rat(sc["c"]);
          sch.m0 = sc.at("m0").get<int>();
          in.schedule = sch;
        }
        in.exact_terms = s.value("exact_terms", in.exact_terms);
      }
      auto c = golod::gs_verify(in);
      json j = certificate_json(c);
      j["k"] = k;
      j["p"] = p;
      ok = c.accepted;
      emit(out, j);
    };
  });
  auto* gss = gs->add_subcommand("schedule", "Least m0 for the linear-torsion schedule");
  gss->add_option("--k", k)->check(positive)->capture_default_str();
  gss->add_option("--p", p)->check(positive)->capture_default_str();
  gss->add_option("--q", q_text)->capture_default_str();
  gss->add_option("--c", c_text)->capture_default_str();
  gss->add_option("--tau", tau)->capture_default_str();
  gss->add_option("--depth", depth)->check(positive)->capture_default_str();
  gss->callback([&] {
    action = [&] {
      auto r = golod::build_schedule(k, p, golod::parse_rational(q_text),
                                     golod::parse_rational(c_text), golod::parse_rational(tau),
                                     depth);
      json j{{"k", k}, {"p", p}, {"q", q(r.schedule.q)}, {"c", q(r.schedule.c)},
             {"C", q(r.schedule.C)}, {"m0", r.schedule.m0}, {"torsion_slope", q(r.torsion_slope)}};
      j["rows"] = json::array();
      for (const auto& [mm, a, ball] : r.ball_checks) {
        j["rows"].push_back({{"m", mm}, {"a_m", q(a)}, {"ball", ball.str()}});
      }
      j["balls_ok"] = r.balls_ok;
      j["certificate"] = certificate_json(r.certificate);
      if (r.below_threshold) j["below_threshold"] = certificate_json(*r.below_threshold);
      ok = r.balls_ok && r.certificate.accepted;
      emit(out, j);
    };
  });

  auto* sg = app.add_subcommand("slowgrowth", "Slow lawlessness growth construction");
  sg->require_subcommand(1);
  std::string f_name = "log";
  int cap = 6;
  auto* sgv = sg->add_subcommand("verify", "Certify A(n) <= f(n) for n <= nmax");
  sgv->add_option("--f", f_name)->check(CLI::IsMember({"log", "id"}))->capture_default_str();
  sgv->add_option("--nmax", n)->check(positive)->capture_default_str();
  sgv->add_option("--cap", cap, "Witness verification length cap")->check(positive)->capture_default_str();
  sgv->add_option("--seed", seed)->capture_default_str();
  sgv->callback([&] {
    action = [&] {
      auto f = f_name == "log" ? slow::GrowthFunction::log2_plus_two() : slow::GrowthFunction::identity();
      slow::GammaContext ctx(f, std::max(cap, n), seed);
      auto r = slow::verify_slow(ctx, n);
      json j{{"f", r.f_name}, {"L", r.L}};
      j["rows"] = json::array();
      for (const auto& row : r.rows) {
        j["rows"].push_back({{"n", row.n}, {"index", row.index}, {"shift", row.shift},
                             {"tuple_cost", row.tuple_cost}, {"f", row.f_value},
                             {"words", row.words}, {"status", row.ok ? "bound" : "failed"}});
      }
      j["failures"] = r.failures;
      ok = r.ok();
      emit(out, j);
    };
  });

  auto* rf_cmd = app.add_subcommand("rf", "Residual finiteness lower-bound certificates");
  rf_cmd->require_subcommand(1);
  std::string law_class = "p2";
  auto* rfb = rf_cmd->add_subcommand("bound", "Certificate element for a class law");
  rfb->add_option("--group", group)->capture_default_str();
  rfb->add_option("--class", law_class, "p<prime> (p-power law), exp (exponent law), nil")
      ->capture_default_str();
  rfb->add_option("--m", m, "Exponent, order bound, or nilpotency class")
      ->check(positive)->capture_default_str();
  rfb->add_option("--budget", budget)->check(positive)->capture_default_str();
  rfb->callback([&] {
    action = [&] {
      rf::ClassLaw law;
      if (int pr = trailing_int(law_class, "p"); pr >= 2) {
        law = rf::p_power_law(pr, m);
      } else if (law_class == "exp") {
        law = rf::exponent_law(m);
      } else if (law_class == "nil") {
        law = rf::nilpotent_law(m);
      } else {
        throw ConfigError("unknown class '" + law_class + "'");
      }
      with_backend(group, [&](const auto& b) {
        using B = std::decay_t<decltype(b)>;
        if constexpr (KeyedBackend<B>) {
          Ball<B> ball(b);
          auto c = rf::rf_lower_bound(ball, law, budget);
          json j{{"group", c.group}, {"class", law.class_name}, {"law_length", law.law.length()},
                 {"argument", law.argument}};
          j["witness"] = json::array();
          for (const auto& w : c.witness) j["witness"].push_back(w.str());
          j["witness_lengths"] = c.witness_lengths;
          j["element_word_length"] = c.element_word.length();
          j["element_length"] = c.element_length ? json(*c.element_length) : json(nullptr);
          j["length_bound"] = c.length_bound;
          j["statement"] = c.statement();
          j["reverified"] = c.reverified;
          if (law.class_name.find("nilpotent") != std::string::npos) {
            j["optimal_length_exponent"] = rf::nilpotent_law_alpha();
          }
          if (c.group == "grig") {
            j["word_problem_nontrivial"] =
                !grig::is_identity_word(grig::from_free_word(c.element_word));
            ok = ok && j["word_problem_nontrivial"].get<bool>();
          }
          ok = ok && c.reverified;
          emit(out, j);
        } else {
          throw ConfigError("rf bound needs a group with canonical keys");
        }
        return 0;
      });
    };
  });

  bool long_running = false;
  auto* pc = app.add_subcommand("paper-check", "Run the full acceptance suite");
  pc->add_flag("--long", long_running, "Include long-running certificates");
  pc->callback([&] {
    action = [&] {
      acceptance::Options o;
      o.long_running = long_running;
      auto results = acceptance::run_all(o);
      json j;
      j["rows"] = json::array();
      for (const auto& r : results) {
        std::cerr << acceptance::format(r) << '\n';
        j["rows"].push_back({{"criterion", r.id}, {"name", r.name},
                             {"status", r.pass ? "pass" : "fail"}, {"detail", r.detail}});
        ok = ok && r.pass;
      }
      emit(out, j);
    };
  });

  // Global options may follow the subcommand.
  std::function<void(CLI::App*)> fall = [&](CLI::App* a) {
    for (auto* sub : a->get_subcommands({})) {
      sub->fallthrough();
      fall(sub);
    }
  };
  fall(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    if (action) action();
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 2;
  } catch (const InvalidArgument& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 2;
  } catch (const CertificateFailure& e) {
    std::cerr << "certificate failure: " << e.what() << '\n';
    return 1;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return ok ? 0 : 1;
}
