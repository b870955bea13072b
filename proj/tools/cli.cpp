#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <functional>
#include <iomanip>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "ferrers/augmented.hpp"
#include "ferrers/containment.hpp"
#include "ferrers/equivalence.hpp"
#include "ferrers/errors.hpp"
#include "ferrers/generating_function.hpp"
#include "ferrers/marked.hpp"
#include "ferrers/profile.hpp"
#include "ferrers/rook.hpp"
#include "ferrers/splice.hpp"
#include "ferrers/staircase.hpp"
#include "ferrers/transform.hpp"
#include "ferrers/verify.hpp"

namespace ferrers::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { Plain, Json, Csv };

struct Context {
  std::ostream& out;
  Format format = Format::Plain;
  bool format_given = false;
  std::uint64_t seed = 1;
};

json to_json(const Partition& p) { return json(p.parts()); }

json to_json(const TruncatedSeries& s) {
  json arr = json::array();
  for (Count c : s.coefficients()) arr.push_back(std::to_string(c));
  return arr;
}

json to_json(const ProfileEntry& e) {
  json b = e.interval.infinite() ? json("inf") : json(e.interval.right());
  return json{{"p", e.p}, {"a", e.interval.left()}, {"b", b}};
}

json to_json(const std::vector<ProfileEntry>& entries) {
  json arr = json::array();
  for (const auto& e : entries) arr.push_back(to_json(e));
  return arr;
}

std::string bound(const Interval& i) { return i.infinite() ? "inf" : std::to_string(i.right()); }

std::string quoted(const Partition& p) { return "\"" + p.to_string() + "\""; }

std::string series_plain(const TruncatedSeries& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.coefficients().size(); ++i)
    out += (i ? ", " : "") + std::to_string(s.coefficients()[i]);
  return out + "]";
}

void print_json(Context& ctx, const json& j) { ctx.out << j.dump(2) << '\n'; }

std::vector<Partition> parse_all(const std::vector<std::string>& texts) {
  std::vector<Partition> out;
  for (const auto& t : texts) out.push_back(Partition::parse(t));
  return out;
}

// ---- contains ----

int cmd_contains(Context& ctx, const std::string& sigma_text, const std::string& mu_text, bool oracle) {
  const Partition sigma = Partition::parse(sigma_text);
  const Partition mu = Partition::parse(mu_text);
  const bool fast = contains(sigma, mu);
  std::optional<bool> slow;
  if (oracle) slow = contains_oracle(sigma, mu);
  const bool agree = !slow || *slow == fast;
  switch (ctx.format) {
    case Format::Json: {
      json j{{"sigma", to_json(sigma)}, {"mu", to_json(mu)}, {"contains", fast}};
      if (slow) {
        j["oracle"] = *slow;
        j["agree"] = agree;
      }
      print_json(ctx, j);
      break;
    }
    case Format::Csv:
      ctx.out << "sigma,mu,contains" << (slow ? ",oracle" : "") << '\n'
              << quoted(sigma) << ',' << quoted(mu) << ',' << std::boolalpha << fast;
      if (slow) ctx.out << ',' << *slow;
      ctx.out << '\n';
      break;
    case Format::Plain:
      ctx.out << std::boolalpha << fast << '\n';
      if (slow && !agree) ctx.out << "oracle disagrees: " << *slow << '\n';
      break;
  }
  return agree ? kOk : kMismatch;
}

// ---- gf / wilf-series ----

struct NamedSeries {
  std::string method;
  TruncatedSeries series;
};

int print_series(Context& ctx, json header, const std::vector<NamedSeries>& all, const std::string& note) {
  bool match = true;
  for (const auto& s : all) match = match && s.series == all.front().series;
  const bool compared = all.size() > 1;
  switch (ctx.format) {
    case Format::Json: {
      json series = json::object();
      for (const auto& s : all) series[s.method] = to_json(s.series);
      header["series"] = series;
      if (compared) header["match"] = match;
      if (!note.empty()) header["note"] = note;
      print_json(ctx, header);
      break;
    }
    case Format::Csv: {
      ctx.out << "n";
      for (const auto& s : all) ctx.out << ',' << s.method;
      ctx.out << '\n';
      const std::size_t len = all.front().series.coefficients().size();
      for (std::size_t n = 0; n < len; ++n) {
        ctx.out << n;
        for (const auto& s : all) ctx.out << ',' << s.series.coefficients()[n];
        ctx.out << '\n';
      }
      break;
    }
    case Format::Plain:
      if (!note.empty()) ctx.out << "note: " << note << '\n';
      for (const auto& s : all)
        ctx.out << s.method << ": " << s.series.to_string() << "\n  coefficients " << series_plain(s.series) << '\n';
      if (compared) ctx.out << (match ? "match" : "MISMATCH") << '\n';
      break;
  }
  return match ? kOk : kMismatch;
}

int cmd_gf(Context& ctx, const std::string& mu_text, int k, std::optional<int> h_opt, int N,
           const std::string& method) {
  const Partition mu = Partition::parse(mu_text);
  if (mu.empty()) throw InvalidArgument("gf: mu must be nonempty");
  if (k < 0) throw InvalidArgument("gf: k must be nonnegative");
  const int h = h_opt.value_or(mu.height());
  std::string note;
  std::vector<NamedSeries> all;
  const auto want = [&](const std::string& m) {
    if (method == "all" || method == m) return true;
    return method == "both" && (m == "enum" || m == "closed");
  };
  if (want("enum")) all.push_back({"enum", f_mu_k_enumerated(mu, k, N)});
  if (k == 0) {
    if (want("closed") || want("ie") || want("staircases")) {
      note = "k=0 uses the Q(mu) form q^|mu| / prod_{i<=w_mu}(1-q^i)";
      all.push_back({"closed", q_gf(mu, N)});
    }
  } else {
    if (want("closed")) all.push_back({"closed", f_mu_k_closed(mu, k, h, N)});
    if (want("ie")) all.push_back({"ie", f_mu_k_inclusion_exclusion(mu, k, h, N)});
    if (want("staircases")) all.push_back({"staircases", f_mu_k_staircases(mu, k, h, N)});
  }
  json header{{"mu", to_json(mu)}, {"k", k}, {"h", h}, {"N", N}, {"method", method}};
  return print_series(ctx, std::move(header), all, note);
}

int cmd_wilf_series(Context& ctx, const std::string& mu_text, int N, const std::string& method) {
  const Partition mu = Partition::parse(mu_text);
  std::vector<NamedSeries> all;
  if (method == "closed" || method == "both") all.push_back({"closed", wilf_series(mu, N)});
  if (method == "enum" || method == "both") all.push_back({"enum", wilf_series_enumerated(mu, N)});
  json header{{"mu", to_json(mu)}, {"N", N}, {"method", method}};
  return print_series(ctx, std::move(header), all, "");
}

// ---- equiv / chain / classes ----

int cmd_equiv(Context& ctx, const std::string& mu_text, const std::string& tau_text, const std::string& mode,
              int N) {
  const Partition mu = Partition::parse(mu_text);
  const Partition tau = Partition::parse(tau_text);
  bool result = false;
  std::string scope;
  if (mode == "rook") {
    result = rook_equivalent(mu, tau);
    scope = "exact";
  } else if (mode == "wilf") {
    result = wilf_equivalent_upto(mu, tau, N);
    scope = "verified up to N=" + std::to_string(N);
  } else {
    result = width_wilf_equivalent_upto(mu, tau, N);
    scope = "verified up to N=" + std::to_string(N);
  }
  switch (ctx.format) {
    case Format::Json: {
      json j{{"mu", to_json(mu)}, {"tau", to_json(tau)}, {"mode", mode}};
      if (mode != "rook") j["N"] = N;
      j["equivalent"] = result;
      j["scope"] = scope;
      print_json(ctx, j);
      break;
    }
    case Format::Csv:
      ctx.out << "mu,tau,mode,N,equivalent\n"
              << quoted(mu) << ',' << quoted(tau) << ',' << mode << ',' << (mode == "rook" ? "" : std::to_string(N))
              << ',' << std::boolalpha << result << '\n';
      break;
    case Format::Plain:
      ctx.out << std::boolalpha << result << " (" << scope << ")\n";
      break;
  }
  return kOk;
}

int cmd_chain(Context& ctx, const std::string& mu_text, const std::string& tau_text, int max_steps) {
  const Partition mu = Partition::parse(mu_text);
  const Partition tau = Partition::parse(tau_text);
  const auto chain = transform_chain(mu, tau, max_steps);
  switch (ctx.format) {
    case Format::Json: {
      json j{{"mu", to_json(mu)}, {"tau", to_json(tau)}, {"max_steps", max_steps}, {"found", chain.has_value()}};
      json steps = json::array();
      if (chain)
        for (const auto& s : *chain) steps.push_back(json{{"i", s.i}, {"j", s.j}});
      j["chain"] = chain ? steps : json(nullptr);
      print_json(ctx, j);
      break;
    }
    case Format::Csv:
      ctx.out << "step,i,j\n";
      if (chain)
        for (std::size_t n = 0; n < chain->size(); ++n)
          ctx.out << n + 1 << ',' << (*chain)[n].i << ',' << (*chain)[n].j << '\n';
      break;
    case Format::Plain:
      if (!chain) {
        ctx.out << "no chain within " << max_steps << " steps\n";
        break;
      }
      ctx.out << '[';
      for (std::size_t n = 0; n < chain->size(); ++n)
        ctx.out << (n ? ", " : "") << '(' << (*chain)[n].i << ',' << (*chain)[n].j << ')';
      ctx.out << "]\n";
      break;
  }
  return kOk;
}

int cmd_classes(Context& ctx, int n) {
  const auto classes = rook_classes(n);
  switch (ctx.format) {
    case Format::Json: {
      json arr = json::array();
      for (const auto& cls : classes) {
        json members = json::array();
        for (const auto& p : cls) members.push_back(to_json(p));
        arr.push_back(members);
      }
      print_json(ctx, arr);
      break;
    }
    case Format::Csv:
      ctx.out << "class,partition\n";
      for (std::size_t c = 0; c < classes.size(); ++c)
        for (const auto& p : classes[c]) ctx.out << c + 1 << ',' << quoted(p) << '\n';
      break;
    case Format::Plain:
      for (const auto& cls : classes) {
        for (std::size_t i = 0; i < cls.size(); ++i) ctx.out << (i ? " " : "") << cls[i];
        ctx.out << '\n';
      }
      break;
  }
  return kOk;
}

// ---- profile / closure / staircases / augmented ----

void print_entries_csv(Context& ctx, const std::string& label, const std::vector<ProfileEntry>& entries) {
  for (const auto& e : entries)
    ctx.out << label << ',' << e.p << ',' << e.interval.left() << ',' << bound(e.interval) << '\n';
}

int cmd_profile(Context& ctx, const std::vector<std::string>& texts) {
  const auto family = parse_all(texts);
  const Profile pr = profile(family);
  const auto stair = Staircase::from_profile(pr);
  switch (ctx.format) {
    case Format::Json:
      print_json(ctx, json{{"profile", to_json(pr.entries())},
                           {"staircase", stair.has_value()},
                           {"seg", stair ? json(seg(*stair)) : json(nullptr)}});
      break;
    case Format::Csv:
      ctx.out << "profile,p,a,b\n";
      print_entries_csv(ctx, "1", pr.entries());
      break;
    case Format::Plain:
      ctx.out << pr.to_string() << '\n';
      if (stair) ctx.out << "staircase with seg = " << seg(*stair) << '\n';
      break;
  }
  return kOk;
}

int cmd_closure(Context& ctx, const std::vector<std::string>& texts) {
  const auto family = parse_all(texts);
  const auto cl = closure(family);
  switch (ctx.format) {
    case Format::Json: {
      json arr = json::array();
      for (const auto& p : cl) arr.push_back(to_json(p));
      print_json(ctx, json{{"family", json(texts)}, {"closure", arr}});
      break;
    }
    case Format::Csv:
      ctx.out << "partition\n";
      for (const auto& p : cl) ctx.out << quoted(p) << '\n';
      break;
    case Format::Plain:
      for (const auto& p : cl) ctx.out << p << '\n';
      break;
  }
  return kOk;
}

int cmd_staircases(Context& ctx, int h, int k) {
  const auto stairs = enumerate_staircases(h, k);
  switch (ctx.format) {
    case Format::Json: {
      json arr = json::array();
      for (const auto& s : stairs) {
        const auto m = stair_to_marked(s);
        arr.push_back(json{{"entries", to_json(s.entries())},
                           {"seg", seg(s)},
                           {"sigma", to_json(m.sigma())},
                           {"marks", m.marks()}});
      }
      print_json(ctx, json{{"h", h}, {"k", k}, {"count", stairs.size()}, {"staircases", arr}});
      break;
    }
    case Format::Csv:
      ctx.out << "staircase,p,a,b\n";
      for (std::size_t i = 0; i < stairs.size(); ++i) print_entries_csv(ctx, std::to_string(i + 1), stairs[i].entries());
      break;
    case Format::Plain:
      for (const auto& s : stairs) {
        const auto m = stair_to_marked(s);
        ctx.out << s.to_string() << "  seg=" << seg(s) << "  sigma=" << m.sigma() << " A={";
        for (std::size_t i = 0; i < m.marks().size(); ++i) ctx.out << (i ? "," : "") << m.marks()[i];
        ctx.out << "}\n";
      }
      ctx.out << stairs.size() << " staircases\n";
      break;
  }
  return kOk;
}

int cmd_augmented(Context& ctx, const std::string& mu_text, std::optional<int> h_opt, int k,
                  std::optional<int> max_weight) {
  const Partition mu = Partition::parse(mu_text);
  const int h = h_opt.value_or(mu.height());
  const auto all = enumerate_augmented(mu, h, k, max_weight);
  switch (ctx.format) {
    case Format::Json: {
      json arr = json::array();
      for (const auto& a : all)
        arr.push_back(json{{"mu", to_json(a.mu)},
                           {"lambda", to_json(a.lambda)},
                           {"off", to_json(a.off)},
                           {"weight", augmented_weight(a)},
                           {"sign", a.sign()}});
      print_json(ctx, json{{"mu", to_json(mu)}, {"h", h}, {"k", k}, {"count", all.size()}, {"structures", arr}});
      break;
    }
    case Format::Csv:
      ctx.out << "mu,lambda,off,weight,sign\n";
      for (const auto& a : all)
        ctx.out << quoted(a.mu) << ',' << quoted(a.lambda) << ',' << quoted(a.off) << ',' << augmented_weight(a)
                << ',' << a.sign() << '\n';
      break;
    case Format::Plain:
      for (const auto& a : all)
        ctx.out << "lambda=" << a.lambda << " off=" << a.off << " weight=" << augmented_weight(a)
                << " sign=" << (a.sign() > 0 ? "+" : "-") << '\n';
      ctx.out << all.size() << " structures\n";
      break;
  }
  return kOk;
}

// ---- verify ----

int cmd_verify(Context& ctx, const std::string& suite, bool timings) {
  verify::Config config;
  config.seed = ctx.seed;
  const auto results = verify::run_suite(suite, config);
  bool ok = true;
  for (const auto& r : results) ok = ok && r.passed;
  const Format format = ctx.format_given ? ctx.format : Format::Json;
  switch (format) {
    case Format::Json: {
      json checks = json::array();
      for (const auto& r : results) {
        json c{{"criterion", r.criterion}, {"name", r.name}, {"passed", r.passed}, {"cases", r.cases},
               {"detail", r.detail}};
        if (timings) c["seconds"] = std::round(r.elapsed.count() * 1000.0) / 1000.0;
        checks.push_back(c);
      }
      print_json(ctx, json{{"suite", suite}, {"seed", ctx.seed}, {"passed", ok}, {"checks", checks}});
      break;
    }
    case Format::Csv:
      ctx.out << "criterion,name,passed,cases" << (timings ? ",seconds" : "") << '\n';
      for (const auto& r : results) {
        ctx.out << r.criterion << ",\"" << r.name << "\"," << std::boolalpha << r.passed << ',' << r.cases;
        if (timings) ctx.out << ',' << std::fixed << std::setprecision(3) << r.elapsed.count();
        ctx.out << '\n';
      }
      break;
    case Format::Plain:
      for (const auto& r : results) {
        ctx.out << (r.passed ? "PASS" : "FAIL") << " criterion " << r.criterion << ": " << r.name << " ["
                << r.cases << " cases";
        if (timings) ctx.out << ", " << std::fixed << std::setprecision(2) << r.elapsed.count() << "s";
        ctx.out << "] " << r.detail << '\n';
      }
      break;
  }
  return ok ? kOk : kVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Partition containment, generating functions and rook/Wilf equivalence", "ferrers"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_help_flag("--help", "Print this help message and exit");

  Context ctx{out};
  std::string format_text = "plain";
  auto* format_opt = app.add_option("--format", format_text, "Output format")
                         ->check(CLI::IsMember({"plain", "json", "csv"}))
                         ->capture_default_str();
  app.add_option("--seed", ctx.seed, "Seed for sampled checks")->capture_default_str();

  std::function<int()> action;

  // contains
  std::string sigma_text, mu_text, tau_text;
  bool oracle = false;
  auto* contains_cmd = app.add_subcommand("contains", "Does SIGMA contain MU?");
  contains_cmd->add_option("sigma", sigma_text, "Partition, e.g. 5,5,2,2,2 (\"-\" for empty)")->required();
  contains_cmd->add_option("mu", mu_text, "Pattern partition")->required();
  contains_cmd->add_flag("--oracle", oracle, "Also run the column-deletion oracle; exit 3 on disagreement");
  contains_cmd->callback([&] { action = [&] { return cmd_contains(ctx, sigma_text, mu_text, oracle); }; });

  // gf
  int k = 1;
  int N = 24;
  std::optional<int> h;
  std::string method = "closed";
  auto* gf_cmd = app.add_subcommand("gf", "F_{mu,k}(q) up to q^N");
  gf_cmd->add_option("mu", mu_text, "Pattern partition")->required();
  gf_cmd->add_option("--k", k, "Extra width k (k = 0 gives Q(mu))")->capture_default_str();
  gf_cmd->add_option("--h", h, "Height bound for the closed form (default h_mu)");
  gf_cmd->add_option("--N", N, "Degree bound")->capture_default_str();
  gf_cmd->add_option("--method", method, "enum, closed, ie, staircases, both (enum+closed) or all")
      ->check(CLI::IsMember({"enum", "closed", "ie", "staircases", "both", "all"}))
      ->capture_default_str();
  gf_cmd->callback([&] { action = [&] { return cmd_gf(ctx, mu_text, k, h, N, method); }; });

  // wilf-series
  std::string wilf_method = "closed";
  auto* ws_cmd = app.add_subcommand("wilf-series", "sum_n |P_n(mu)| q^n up to q^N");
  ws_cmd->add_option("mu", mu_text, "Pattern partition")->required();
  ws_cmd->add_option("--N", N, "Degree bound")->capture_default_str();
  ws_cmd->add_option("--method", wilf_method, "closed, enum or both")
      ->check(CLI::IsMember({"closed", "enum", "both"}))
      ->capture_default_str();
  ws_cmd->callback([&] { action = [&] { return cmd_wilf_series(ctx, mu_text, N, wilf_method); }; });

  // equiv
  std::string mode = "rook";
  auto* equiv_cmd = app.add_subcommand("equiv", "Rook, Wilf or width-Wilf equivalence of MU and TAU");
  equiv_cmd->add_option("mu", mu_text, "First partition")->required();
  equiv_cmd->add_option("tau", tau_text, "Second partition")->required();
  equiv_cmd->add_option("--mode", mode, "rook, wilf or width-wilf")
      ->check(CLI::IsMember({"rook", "wilf", "width-wilf"}))
      ->capture_default_str();
  equiv_cmd->add_option("--N", N, "Degree bound for wilf modes")->capture_default_str();
  equiv_cmd->callback([&] { action = [&] { return cmd_equiv(ctx, mu_text, tau_text, mode, N); }; });

  // chain
  int max_steps = 8;
  auto* chain_cmd = app.add_subcommand("chain", "Shortest (i,j)-transform chain from MU to TAU");
  chain_cmd->add_option("mu", mu_text, "Start partition")->required();
  chain_cmd->add_option("tau", tau_text, "Target partition")->required();
  chain_cmd->add_option("max_steps,--max-steps", max_steps, "Step bound")->capture_default_str();
  chain_cmd->callback([&] { action = [&] { return cmd_chain(ctx, mu_text, tau_text, max_steps); }; });

  // classes
  int n = 0;
  auto* classes_cmd = app.add_subcommand("classes", "Rook classes of the partitions of n");
  classes_cmd->add_option("n,--n", n, "Weight")->required();
  classes_cmd->callback([&] { action = [&] { return cmd_classes(ctx, n); }; });

  // profile / closure
  std::vector<std::string> family;
  auto* profile_cmd = app.add_subcommand("profile", "Profile of a finite family of partitions");
  profile_cmd->add_option("partitions", family, "Family members")->required();
  profile_cmd->callback([&] { action = [&] { return cmd_profile(ctx, family); }; });
  auto* closure_cmd = app.add_subcommand("closure", "Splice closure of a finite family");
  closure_cmd->add_option("partitions", family, "Family members")->required();
  closure_cmd->callback([&] { action = [&] { return cmd_closure(ctx, family); }; });

  // staircases
  int sh = 2, sk = 1;
  auto* stairs_cmd = app.add_subcommand("staircases", "List S(h,k) with the matching marked partitions");
  stairs_cmd->add_option("--h", sh, "Height bound")->capture_default_str();
  stairs_cmd->add_option("--k", sk, "Top value")->capture_default_str();
  stairs_cmd->callback([&] { action = [&] { return cmd_staircases(ctx, sh, sk); }; });

  // augmented
  std::optional<int> max_weight;
  auto* aug_cmd = app.add_subcommand("augmented", "List the augmented structures A(mu,h,k)");
  aug_cmd->add_option("mu", mu_text, "Pattern partition")->required();
  aug_cmd->add_option("--h", h, "Height bound (default h_mu)");
  aug_cmd->add_option("--k", k, "Width k")->capture_default_str();
  aug_cmd->add_option("--N", max_weight, "Only structures of weight <= N");
  aug_cmd->callback([&] { action = [&] { return cmd_augmented(ctx, mu_text, h, k, max_weight); }; });

  // verify
  std::string suite = "all";
  bool timings = true;
  auto* verify_cmd = app.add_subcommand("verify", "Run acceptance suites");
  verify_cmd->add_option("--suite", suite, "core, profiles, staircases, gf, equivalence or all")
      ->check(CLI::IsMember(verify::suite_names()))
      ->capture_default_str();
  verify_cmd->add_flag("--timings,!--no-timings", timings, "Include per-check timings (default on)");
  verify_cmd->callback([&] { action = [&] { return cmd_verify(ctx, suite, timings); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  ctx.format = format_text == "json" ? Format::Json : format_text == "csv" ? Format::Csv : Format::Plain;
  ctx.format_given = format_opt->count() > 0;

  try {
    return action();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kBadInput;
  } catch (const LimitExceeded& e) {
    err << "limit exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const Overflow& e) {
    err << "overflow: " << e.what() << '\n';
    return kBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
}

}  // namespace ferrers::cli
