#include "ferrers/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "ferrers/augmented.hpp"
#include "ferrers/bipartite.hpp"
#include "ferrers/containment.hpp"
#include "ferrers/enumeration.hpp"
#include "ferrers/equivalence.hpp"
#include "ferrers/errors.hpp"
#include "ferrers/generating_function.hpp"
#include "ferrers/marked.hpp"
#include "ferrers/profile.hpp"
#include "ferrers/profile_class.hpp"
#include "ferrers/rook.hpp"
#include "ferrers/splice.hpp"
#include "ferrers/staircase.hpp"
#include "ferrers/transform.hpp"

namespace ferrers::verify {

namespace {

using Clock = std::chrono::steady_clock;

// Thrown inside a check body to stop at the first failing case.
struct Failure {
  std::string detail;
};

template <class... Ts>
[[noreturn]] void fail(const Ts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  throw Failure{os.str()};
}

CheckResult run(int criterion, std::string name, const std::function<std::string(std::uint64_t&)>& body) {
  CheckResult r;
  r.criterion = criterion;
  r.name = std::move(name);
  const auto start = Clock::now();
  try {
    r.detail = body(r.cases);
    r.passed = true;
  } catch (const Failure& f) {
    r.detail = f.detail;
  } catch (const std::exception& e) {
    r.detail = std::string("error: ") + e.what();
  }
  r.elapsed = Clock::now() - start;
  return r;
}

std::vector<Partition> nonempty_up_to(int w, const Limits& limits) {
  auto all = partitions_up_to(w, limits);
  all.erase(std::remove_if(all.begin(), all.end(), [](const Partition& p) { return p.empty(); }), all.end());
  return all;
}

// Portable draws: mt19937_64 output is fixed by the standard, the
// distributions are not.
struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  int below(int n) { return static_cast<int>(gen() % static_cast<std::uint64_t>(n)); }
  int between(int lo, int hi) { return lo + below(hi - lo + 1); }
};

Partition random_partition(Rng& rng, int max_height, int max_part) {
  const int height = rng.between(1, max_height);
  std::vector<int> parts(static_cast<std::size_t>(height));
  for (auto& p : parts) p = rng.between(1, max_part);
  return Partition(parts);
}

std::string join_ints(const std::vector<Count>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"core", "gf", "staircases", "profiles", "equivalence", "all"};
  return names;
}

std::vector<int> suite_criteria(std::string_view suite) {
  if (suite == "core") return {3};
  if (suite == "gf") return {1, 2};
  if (suite == "staircases") return {7};
  if (suite == "profiles") return {6, 8, 10};
  if (suite == "equivalence") return {4, 5, 9};
  if (suite == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  throw InvalidArgument("unknown suite '" + std::string(suite) + "'");
}

CheckResult run_criterion(int criterion, const Config& config) {
  switch (criterion) {
    case 1: return gf_closed_vs_enumerated(config);
    case 2: return gf_h_independence(config);
    case 3: return containment_oracle(config);
    case 4: return rook_implies_wilf(config);
    case 5: return width_wilf_three_way(config);
    case 6: return only_staircases_survive(config);
    case 7: return staircase_bijections(config);
    case 8: return closure_profile_join(config);
    case 9: return rook_oracles(config);
    case 10: return bipartite_identity(config);
    default: throw InvalidArgument("no criterion " + std::to_string(criterion));
  }
}

std::vector<CheckResult> run_suite(std::string_view suite, const Config& config) {
  std::vector<CheckResult> out;
  for (int c : suite_criteria(suite)) out.push_back(run_criterion(c, config));
  return out;
}

CheckResult gf_closed_vs_enumerated(const Config& config) {
  return run(1, "closed form F_{mu,k} equals enumeration (|mu|<=7, k<=3, n<=18)", [&](std::uint64_t& cases) {
    constexpr int N = 18;
    for (const auto& mu : nonempty_up_to(7, config.limits))
      for (int k = 1; k <= 3; ++k) {
        const auto closed = f_mu_k_closed(mu, k, N);
        const auto direct = f_mu_k_enumerated(mu, k, N, config.limits);
        ++cases;
        if (closed != direct)
          fail("mu=", mu, " k=", k, " closed=[", closed.to_string(), "] enumerated=[", direct.to_string(), "]");
      }
    return std::string("all series agree");
  });
}

CheckResult gf_h_independence(const Config& config) {
  return run(2, "closed form independent of h (h_mu+1, h_mu+2)", [&](std::uint64_t& cases) {
    constexpr int N = 18;
    for (const auto& mu : nonempty_up_to(7, config.limits))
      for (int k = 1; k <= 3; ++k) {
        const auto base = f_mu_k_closed(mu, k, N);
        for (int extra = 1; extra <= 2; ++extra) {
          const int h = mu.height() + extra;
          const auto other = f_mu_k_closed(mu, k, h, N);
          ++cases;
          if (other != base)
            fail("mu=", mu, " k=", k, " h=", h, " gives [", other.to_string(), "] but h_mu gives [",
                 base.to_string(), "]");
        }
      }
    return std::string("all series agree");
  });
}

CheckResult containment_oracle(const Config& config) {
  return run(3, "contains equals column-deletion oracle (|sigma|<=10, |mu|<=6)", [&](std::uint64_t& cases) {
    const auto sigmas = partitions_up_to(10, config.limits);
    const auto mus = partitions_up_to(6, config.limits);
    std::uint64_t positive = 0;
    for (const auto& sigma : sigmas)
      for (const auto& mu : mus) {
        const bool fast = contains(sigma, mu);
        const bool slow = contains_oracle(sigma, mu, config.limits);
        ++cases;
        if (fast != slow) fail("sigma=", sigma, " mu=", mu, " contains=", fast, " oracle=", slow);
        positive += fast;
      }
    return std::to_string(positive) + " containing pairs";
  });
}

CheckResult rook_implies_wilf(const Config& config) {
  return run(4, "rook equivalent pairs (weight<=9) are Wilf equivalent up to N=18", [&](std::uint64_t& cases) {
    constexpr int N = 18;
    for (int n = 1; n <= 9; ++n)
      for (const auto& cls : rook_classes(n, config.limits))
        for (std::size_t a = 0; a < cls.size(); ++a)
          for (std::size_t b = a + 1; b < cls.size(); ++b) {
            ++cases;
            if (!wilf_equivalent_upto(cls[a], cls[b], N))
              fail(cls[a], " and ", cls[b], " are rook equivalent but their series differ");
          }
    return std::to_string(cases) + " pairs verified up to N=18";
  });
}

CheckResult width_wilf_three_way(const Config& config) {
  return run(5, "width-Wilf, F_{.,1} equality and rook equivalence coincide (weight<=9)",
             [&](std::uint64_t& cases) {
               constexpr int N = 18;
               std::uint64_t equivalent = 0;
               for (int n = 1; n <= 9; ++n) {
                 const auto parts = partitions_of(n, config.limits);
                 std::map<Partition, TruncatedSeries> f1;
                 for (const auto& p : parts) f1.emplace(p, f_mu_k_closed(p, 1, N));
                 for (std::size_t a = 0; a < parts.size(); ++a)
                   for (std::size_t b = a + 1; b < parts.size(); ++b) {
                     const auto& mu = parts[a];
                     const auto& tau = parts[b];
                     if (mu.width() != tau.width()) continue;
                     const bool width_wilf = width_wilf_equivalent_upto(mu, tau, N, config.limits);
                     const bool first = f1.at(mu) == f1.at(tau);
                     const bool rook = rook_equivalent(mu, tau);
                     ++cases;
                     if (width_wilf != first || first != rook)
                       fail(mu, " vs ", tau, ": width-Wilf=", width_wilf, " F1=", first, " rook=", rook);
                     equivalent += rook;
                   }
               }
               return std::to_string(equivalent) + " equivalent pairs among " + std::to_string(cases);
             });
}

CheckResult only_staircases_survive(const Config& config) {
  return run(6, "class alternating sums vanish off staircases", [&](std::uint64_t& cases) {
    std::uint64_t stairs = 0;
    for (auto [h, k] : {std::pair{1, 1}, {1, 2}, {2, 1}, {2, 2}})
      for (const auto& cls : class_reps(h, k, config.limits)) {
        const Count got = class_alternating_sum(cls);
        const Count want = staircase_sign_prediction(cls.rep.profile);
        ++cases;
        if (got != want)
          fail("h=", h, " k=", k, " profile ", cls.rep.profile.to_string(), ": sum=", got, " predicted=", want);
        stairs += want != 0;
      }
    return std::to_string(stairs) + " staircase classes among " + std::to_string(cases);
  });
}

CheckResult staircase_bijections(const Config& config) {
  return run(7, "f and g round-trip and transport sign and weight (h,k<=4)", [&](std::uint64_t& cases) {
    Rng rng(config.seed);
    for (int h = 1; h <= 4; ++h)
      for (int k = 1; k <= 4; ++k) {
        const auto stairs = enumerate_staircases(h, k);
        const auto marked = enumerate_marked(h, k);
        if (stairs.size() != marked.size())
          fail("h=", h, " k=", k, ": |S|=", stairs.size(), " but |M|=", marked.size());
        std::set<MarkedPartition> images;
        for (const auto& s : stairs) {
          const auto m = stair_to_marked(s);
          ++cases;
          if (marked_to_stair(m) != s) fail("f^-1(f(S)) != S for S=", s.to_string());
          images.insert(m);
        }
        if (images != std::set<MarkedPartition>(marked.begin(), marked.end()))
          fail("h=", h, " k=", k, ": f(S(h,k)) != M(h,k)");
        for (const auto& m : marked) {
          ++cases;
          if (stair_to_marked(marked_to_stair(m)) != m) fail("f(f^-1(m)) != m for sigma=", m.sigma());
        }

        for (int sample = 0; sample < 20; ++sample) {
          const Partition mu = random_partition(rng, h, 5);
          std::vector<AugmentedStructure> built;
          for (const auto& s : stairs) {
            const auto m = stair_to_marked(s);
            const auto a = marked_to_augmented(m, mu, h);
            ++cases;
            if (!a.valid()) fail("g(f(S)) invalid for S=", s.to_string(), " mu=", mu);
            if (augmented_to_marked(a) != m) fail("g^-1(g(m)) != m for S=", s.to_string(), " mu=", mu);
            const auto expected_width = static_cast<int>(s.size() - seg(s));
            if (a.lambda.width() != expected_width)
              fail("w_lambda=", a.lambda.width(), " but |S|-seg(S)=", expected_width, " for S=", s.to_string());
            const int joined = vee_staircase(s, mu).weight();
            if (joined != augmented_weight(a))
              fail("|vee_S(mu)|=", joined, " but weight=", augmented_weight(a), " for S=", s.to_string(),
                   " mu=", mu);
            built.push_back(a);
          }
          auto listed = enumerate_augmented(mu, h, k);
          std::sort(built.begin(), built.end());
          std::sort(listed.begin(), listed.end());
          if (built != listed) fail("enumerate_augmented differs from g(M(h,k)) for mu=", mu, " h=", h, " k=", k);
        }
      }
    return std::to_string(cases) + " round trips";
  });
}

CheckResult closure_profile_join(const Config& config) {
  return run(8, "closure, profile and join agree (<=3 partitions of weight<=5)", [&](std::uint64_t& cases) {
    const auto pool = partitions_up_to(5, config.limits);
    std::vector<std::vector<Partition>> families;
    const std::size_t n = pool.size();
    for (std::size_t a = 0; a < n; ++a) {
      families.push_back({pool[a]});
      for (std::size_t b = a + 1; b < n; ++b) {
        families.push_back({pool[a], pool[b]});
        for (std::size_t c = b + 1; c < n; ++c) families.push_back({pool[a], pool[b], pool[c]});
      }
    }

    std::map<Profile, std::vector<Partition>> closure_of_profile;
    std::map<std::vector<Partition>, Profile> profile_of_closure;
    std::map<Profile, std::vector<std::size_t>> groups;
    for (std::size_t f = 0; f < families.size(); ++f) {
      const auto& fam = families[f];
      const Profile pr = profile(fam);
      const auto cl = closure(fam, config.limits);
      ++cases;
      auto [pit, pfresh] = closure_of_profile.try_emplace(pr, cl);
      if (!pfresh && pit->second != cl) fail("same profile ", pr.to_string(), " but different closures");
      auto [cit, cfresh] = profile_of_closure.try_emplace(cl, pr);
      if (!cfresh && cit->second != pr)
        fail("same closure but profiles ", cit->second.to_string(), " and ", pr.to_string());
      groups[pr].push_back(f);
    }

    Rng rng(config.seed);
    std::vector<Partition> random_mus;
    for (int i = 0; i < 50; ++i) random_mus.push_back(random_partition(rng, 6, 12));

    std::uint64_t joins = 0;
    for (const auto& [pr, members] : groups) {
      std::set<Partition> uni;
      for (auto f : members) uni.insert(families[f].begin(), families[f].end());
      int max_width = 1, max_height = 0;
      for (const auto& g : uni) {
        max_width = std::max(max_width, g.width());
        max_height = std::max(max_height, g.height());
      }
      std::set<Partition> mus(random_mus.begin(), random_mus.end());
      for (const auto& g : uni)
        for (const auto& entry : intervals_of(g)) {
          Partition w = separating_witness(g, entry.p, max_width, max_height);
          if (!w.empty()) mus.insert(std::move(w));
        }
      for (const auto& mu : mus) {
        const Partition ref = join(families[members.front()], mu);
        for (std::size_t i = 1; i < members.size(); ++i) {
          ++joins;
          if (join(families[members[i]], mu) != ref)
            fail("profile ", pr.to_string(), " shared but joins differ at mu=", mu);
        }
      }
    }
    return std::to_string(groups.size()) + " profiles, " + std::to_string(joins) + " join comparisons";
  });
}

CheckResult rook_oracles(const Config& config) {
  return run(9, "rook criterion, distinct-parts representatives and transform chains", [&](std::uint64_t& cases) {
    const auto all = partitions_up_to(9, config.limits);
    std::vector<RookVector> numbers;
    for (const auto& p : all) numbers.push_back(rook_numbers(p));
    for (std::size_t a = 0; a < all.size(); ++a)
      for (std::size_t b = a; b < all.size(); ++b) {
        const bool multiset = rook_equivalent(all[a], all[b]);
        const bool counts = numbers[a] == numbers[b];
        ++cases;
        if (multiset != counts)
          fail(all[a], " vs ", all[b], ": multiset=", multiset, " rook numbers ", join_ints(numbers[a]), " vs ",
               join_ints(numbers[b]));
      }

    std::uint64_t chains = 0;
    for (int n = 0; n <= 9; ++n) {
      const auto classes = rook_classes(n, config.limits);
      for (const auto& cls : classes) {
        const auto distinct = std::count_if(cls.begin(), cls.end(), [](const Partition& p) {
          const auto& v = p.parts();
          return std::adjacent_find(v.begin(), v.end()) == v.end();
        });
        ++cases;
        if (distinct != 1) fail("rook class of ", cls.front(), " has ", distinct, " distinct-parts members");
        if (n > 8) continue;
        const int max_steps = static_cast<int>(partitions_of(n, config.limits).size());
        for (std::size_t a = 0; a < cls.size(); ++a)
          for (std::size_t b = a + 1; b < cls.size(); ++b) {
            const auto chain = transform_chain(cls[a], cls[b], max_steps, config.limits);
            ++cases;
            ++chains;
            if (!chain) fail("no transform chain from ", cls[a], " to ", cls[b]);
            if (apply_chain(cls[a], *chain) != cls[b]) fail("chain from ", cls[a], " does not reach ", cls[b]);
          }
      }
    }
    return std::to_string(chains) + " chains found";
  });
}

CheckResult bipartite_identity(const Config& config) {
  return run(10, "bipartite covering sums agree on 200 random graphs", [&](std::uint64_t& cases) {
    Rng rng(config.seed);
    for (int g = 0; g < 200; ++g) {
      const int left = rng.between(1, 7);
      const int right = rng.between(1, 7);
      BipartiteGraph graph(static_cast<std::size_t>(left), static_cast<std::size_t>(right));
      std::string edges;
      for (int a = 0; a < left; ++a)
        for (int b = 0; b < right; ++b)
          if (rng.below(2)) {
            graph.add_edge(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
            edges += " " + std::to_string(a) + "-" + std::to_string(b);
          }
      const Count l = covering_alternating_sum(graph, Side::Left, config.limits);
      const Count r = covering_alternating_sum(graph, Side::Right, config.limits);
      ++cases;
      if (l != r) fail("graph ", g, " (", left, "x", right, ", edges", edges, "): ", l, " vs ", r);
    }
    return std::string("200 graphs");
  });
}

}  // namespace ferrers::verify
