#ifndef MONOCOVER_TOOLS_CLI_HPP
#define MONOCOVER_TOOLS_CLI_HPP

#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "monocover/monocover.hpp"

namespace monocover::cli {

enum ExitCode : int { ok = 0, fails = 1, exhausted = 2, usage = 64 };

class usage_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::optional<double> time_budget;
  std::optional<std::size_t> memo_budget;
  std::string format = "plain";

  SolverLimits limits() const {
    SolverLimits l;
    if (memo_budget) l.memo_budget = *memo_budget;
    l.time_budget = time_budget;
    return l;
  }
  bool structured() const { return format == "structured"; }
};

namespace detail {

inline std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ' ';
    out += p;
  }
  return out;
}

/// One permutation from the positional words, or a line of stdin when none
/// (or "-") are given.
inline Permutation read_permutation(const std::vector<std::string>& words, std::istream& in) {
  std::string text;
  if (words.empty() || (words.size() == 1 && words[0] == "-")) {
    std::getline(in, text);
  } else {
    text = join(words);
  }
  try {
    return parse_permutation(text);
  } catch (const std::invalid_argument& e) {
    throw usage_error(std::string("malformed permutation: ") + e.what());
  }
}

inline Permutation parse_one(const std::string& text) {
  try {
    return parse_permutation(text);
  } catch (const std::invalid_argument& e) {
    throw usage_error(std::string("malformed permutation: ") + e.what());
  }
}

inline Downset parse_target(const std::string& text) {
  try {
    return parse_downset(text);
  } catch (const std::invalid_argument& e) {
    throw usage_error(std::string("malformed target: ") + e.what());
  }
}

inline std::pair<Permutation, Permutation> two_permutations(
    const std::vector<std::string>& words) {
  if (words.size() != 2)
    throw usage_error("expected two quoted permutations, got " + std::to_string(words.size()));
  return {parse_one(words[0]), parse_one(words[1])};
}

inline void print_cover(std::ostream& out, const Permutation& pi, const MonotoneCover& cover,
                        bool structured) {
  const auto chains = cover.chains();
  for (std::size_t c = 0; c < chains.size(); ++c) {
    const bool inc = cover.direction_of(c) == Direction::increasing;
    if (structured) out << "chain." << c << '=';
    out << (inc ? "inc" : "dec");
    if (structured) out << ':';
    for (std::size_t k = 0; k < chains[c].size(); ++k)
      out << (structured && k == 0 ? "" : " ") << pi[chains[c][k]];
    out << '\n';
  }
}

}  // namespace detail

/**
 * Runs one command line. Exit status: 0 property holds / success,
 * 1 property fails, 2 resource exhausted, 64 usage error.
 */
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Monotone-subsequence cover solver and critical-permutation toolkit",
               "monocover"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--time-budget", g.time_budget, "Wall-clock seconds per solver query")
      ->envname("MONOCOVER_TIME_BUDGET");
  app.add_option("--memo-budget", g.memo_budget, "Maximum memoized solver states")
      ->envname("MONOCOVER_MEMO_BUDGET");
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"plain", "structured"}))
      ->envname("MONOCOVER_FORMAT");

  std::vector<std::string> words;
  std::size_t r = 0, s = 0, k = 0, n = 0;
  std::string target_text;
  std::function<int()> action;

  // solve
  auto* solve = app.add_subcommand("solve", "Decide (r,s)-coverability");
  solve->add_option("-r", r, "Increasing chains")->required();
  solve->add_option("-s", s, "Decreasing chains")->required();
  solve->add_option("perm", words, "Permutation (stdin if omitted)");
  solve->callback([&] {
    action = [&] {
      const Permutation pi = detail::read_permutation(words, in);
      const auto outcome = CoverSolver(g.limits()).solve(pi, r, s);
      if (outcome.verdict == Verdict::exhausted) {
        out << (g.structured() ? "verdict=EXHAUSTED\n" : "EXHAUSTED\n");
        return int{exhausted};
      }
      const bool yes = outcome.verdict == Verdict::yes;
      out << (g.structured() ? "verdict=" : "") << (yes ? "YES" : "NO") << '\n';
      if (yes) detail::print_cover(out, pi, *outcome.cover, g.structured());
      return yes ? int{ok} : int{fails};
    };
  });

  // dset
  auto* dset_cmd = app.add_subcommand("dset", "Print D(pi) as column heights");
  dset_cmd->add_option("perm", words, "Permutation (stdin if omitted)");
  dset_cmd->callback([&] {
    action = [&] {
      const Permutation pi = detail::read_permutation(words, in);
      const Downset d = CoverSolver(g.limits()).dset(pi);
      if (g.structured()) out << "dset=" << d << "\nsize=" << d.size() << '\n';
      else out << d << '\n';
      return int{ok};
    };
  });

  // check-critical / check-minimal / check-sharp
  bool certificates = false;
  auto* crit = app.add_subcommand("check-critical", "Decide A-criticality");
  crit->add_option("--target", target_text, "Downset: heights, Tk or RxS")->required();
  crit->add_flag("--certificates", certificates, "Print a cover of every deletion");
  crit->add_option("perm", words, "Permutation (stdin if omitted)");
  crit->callback([&] {
    action = [&] {
      const Downset target = detail::parse_target(target_text);
      const Permutation pi = detail::read_permutation(words, in);
      const auto rep = is_critical(pi, target, {g.limits(), certificates});
      if (g.structured()) {
        out << "status=" << to_string(rep.status) << '\n';
        if (rep.failing_deletion) out << "failing_deletion=" << *rep.failing_deletion + 1 << '\n';
      } else {
        out << to_string(rep.status);
        if (rep.failing_deletion) out << " (deleting position " << *rep.failing_deletion + 1
                                      << " is not coverable)";
        out << '\n';
      }
      for (std::size_t i = 0; i < rep.certificates.size(); ++i) {
        out << (g.structured() ? "deletion=" : "# without position ") << i + 1 << '\n';
        detail::print_cover(out, delete_at(pi, i), rep.certificates[i], g.structured());
      }
      if (rep.status == CriticalStatus::resource_exhausted) return int{exhausted};
      return rep.critical() ? int{ok} : int{fails};
    };
  });

  auto* minimal = app.add_subcommand("check-minimal", "Decide A-minimality");
  minimal->add_option("--target", target_text, "Downset: heights, Tk or RxS")->required();
  minimal->add_option("perm", words, "Permutation (stdin if omitted)");
  minimal->callback([&] {
    action = [&] {
      const Downset target = detail::parse_target(target_text);
      const Permutation pi = detail::read_permutation(words, in);
      const auto rep = is_minimal(pi, target, {g.limits(), false});
      if (rep.status == CriticalStatus::resource_exhausted) {
        out << (g.structured() ? "status=" : "") << "resource-exhausted\n";
        return int{exhausted};
      }
      const bool yes = rep.minimal.value_or(false);
      if (g.structured()) {
        out << "status=" << to_string(rep.status) << "\nminimal=" << (yes ? "yes" : "no") << '\n';
      } else {
        out << (yes ? "minimal" : "not minimal") << " (" << to_string(rep.status) << ")\n";
      }
      return yes ? int{ok} : int{fails};
    };
  });

  auto* sharp = app.add_subcommand("check-sharp", "Decide (r,s)-sharpness");
  sharp->add_option("-r", r, "Increasing chains")->required();
  sharp->add_option("-s", s, "Decreasing chains")->required();
  sharp->add_option("perm", words, "Permutation (stdin if omitted)");
  sharp->callback([&] {
    action = [&] {
      const Permutation pi = detail::read_permutation(words, in);
      const bool yes = is_sharp(pi, r, s, g.limits());
      out << (g.structured() ? "sharp=" : "") << (yes ? (g.structured() ? "yes" : "sharp")
                                                      : (g.structured() ? "no" : "not sharp"))
          << '\n';
      return yes ? int{ok} : int{fails};
    };
  });

  // compose
  auto* compose = app.add_subcommand("compose", "Direct sum, skew sum or tensor product");
  std::string op;
  compose->add_option("op", op, "dsum | ssum | tensor")
      ->required()
      ->check(CLI::IsMember({"dsum", "ssum", "tensor"}));
  compose->add_option("perms", words, "Two quoted permutations");
  compose->callback([&] {
    action = [&] {
      const auto [a, b] = detail::two_permutations(words);
      const Permutation result =
          op == "dsum" ? direct_sum(a, b) : op == "ssum" ? skew_sum(a, b) : tensor(a, b);
      out << (g.structured() ? "permutation=" : "") << result << '\n';
      return int{ok};
    };
  });

  // construct
  auto* construct = app.add_subcommand("construct", "Build a permutation from a recipe");
  construct->require_subcommand(1);
  bool verify = false;
  std::size_t r1 = 0, r2 = 0, a = 0, b = 0, c = 0, d = 0;
  std::optional<std::size_t> n_block;
  std::string variant = "even";
  auto emit = [&](const Construction& built) {
    if (g.structured()) out << serialize(built);
    else out << built.permutation << '\n';
    if (!verify) return int{ok};
    const bool holds = verify_claim(built, g.limits());
    out << (g.structured() ? "verified=" : "# verified: ") << (holds ? "yes" : "no") << '\n';
    return holds ? int{ok} : int{fails};
  };
  auto add_construct = [&](const std::string& name, const std::string& help,
                           std::function<Construction()> build) {
    auto* sub = construct->add_subcommand(name, help);
    sub->add_flag("--verify", verify, "Check the claimed property with the solver");
    sub->callback([&, build] { action = [&, build] { return emit(build()); }; });
    return sub;
  };
  auto* enkel_cmd = add_construct("enkel", "pi skew sigma, (r1+r2+1,s)-critical", [&] {
    const auto [p, q] = detail::two_permutations(words);
    return enkel(p, q, r1, r2, s);
  });
  enkel_cmd->add_option("--r1", r1)->required();
  enkel_cmd->add_option("--r2", r2)->required();
  enkel_cmd->add_option("-s", s)->required();
  enkel_cmd->add_option("perms", words);

  auto* step_cmd = add_construct("epic-step", "pi skew (1..k+2), T(k+1)-minimal", [&] {
    return epic_step(detail::read_permutation(words, in), k);
  });
  step_cmd->add_option("-k", k)->required();
  step_cmd->add_option("perm", words);

  auto* double_cmd = add_construct("epic-double", "T(2k+2) or T(2k+3)-minimal doubling", [&] {
    const auto [p, q] = detail::two_permutations(words);
    return epic_double(p, q, k,
                       variant == "even" ? EpicVariant::double_even : EpicVariant::double_odd);
  });
  double_cmd->add_option("-k", k)->required();
  double_cmd->add_option("--variant", variant)->check(CLI::IsMember({"even", "odd"}));
  double_cmd->add_option("perms", words);

  auto* ghee_cmd = add_construct("ghee", "Tensor product, (ac-1,bd-1)-sharp", [&] {
    const auto [p, q] = detail::two_permutations(words);
    return ghee_tensor(p, q, a, b, c, d);
  });
  ghee_cmd->add_option("-a", a)->required();
  ghee_cmd->add_option("-b", b)->required();
  ghee_cmd->add_option("-c", c)->required();
  ghee_cmd->add_option("-d", d)->required();
  ghee_cmd->add_option("perms", words);

  auto* embed_cmd = add_construct("nio-embed", "(L + tau) skew R gadget", [&] {
    const Permutation tau = detail::read_permutation(words, in);
    try {
      return n_block ? nio_embed(tau, r, s, *n_block) : nio_embed(tau, r, s);
    } catch (const std::invalid_argument& e) {
      throw usage_error(e.what());
    }
  });
  embed_cmd->add_option("-r", r)->required();
  embed_cmd->add_option("-s", s)->required();
  embed_cmd->add_option("-N", n_block, "Block length (default r+s+1)");
  embed_cmd->add_option("perm", words);

  auto* lift_cmd = add_construct("nio-lift", "(1..k+2) skew sigma", [&] {
    return nio_lift(detail::read_permutation(words, in), k);
  });
  lift_cmd->add_option("-k", k)->required();
  lift_cmd->add_option("perm", words);

  auto* f15_cmd = add_construct("family15", "n-th tensor power of pi15", [&] {
    if (n == 0) throw usage_error("family15 needs -n >= 1");
    return family15(n);
  });
  f15_cmd->add_option("-n", n)->required();

  auto* punkt_cmd = add_construct("punkt", "Longest T(k)-minimal from the recurrences",
                                  [&] { return punkt_family(k); });
  punkt_cmd->add_option("-k", k)->required();

  // criticalize
  auto* crz = app.add_subcommand("criticalize", "Shrink to an A-critical pattern");
  crz->add_option("--target", target_text, "Downset: heights, Tk or RxS")->required();
  crz->add_option("perm", words, "Permutation (stdin if omitted)");
  crz->callback([&] {
    action = [&] {
      const Downset target = detail::parse_target(target_text);
      const Permutation pi = detail::read_permutation(words, in);
      if (is_downset_coverable(pi, target, g.limits())) {
        err << "monocover: input is already coverable for the target\n";
        return int{fails};
      }
      const auto res = criticalize(pi, target, g.limits());
      if (g.structured()) {
        out << "critical=" << res.critical << "\nlength=" << res.critical.size() << "\ntrace=";
        for (std::size_t i = 0; i < res.deletion_trace.size(); ++i)
          out << (i ? " " : "") << res.deletion_trace[i] + 1;
        out << '\n';
      } else {
        out << res.critical << '\n';
      }
      return int{ok};
    };
  });

  // separable
  auto* sep = app.add_subcommand("separable", "Separable permutations");
  sep->require_subcommand(1);
  auto* decomp = sep->add_subcommand("decompose", "Print the decomposition tree");
  decomp->add_option("perm", words);
  decomp->callback([&] {
    action = [&] {
      const auto tree = decompose(detail::read_permutation(words, in));
      if (!tree) {
        out << (g.structured() ? "separable=no\n" : "not separable\n");
        return int{fails};
      }
      out << (g.structured() ? "tree=" : "") << to_string(*tree) << '\n';
      return int{ok};
    };
  });
  auto* sep_dset = sep->add_subcommand("dset", "D(pi) from the decomposition tree");
  sep_dset->add_option("perm", words);
  sep_dset->callback([&] {
    action = [&] {
      const auto tree = decompose(detail::read_permutation(words, in));
      if (!tree) {
        out << (g.structured() ? "separable=no\n" : "not separable\n");
        return int{fails};
      }
      out << (g.structured() ? "dset=" : "") << separable_dset(*tree) << '\n';
      return int{ok};
    };
  });
  auto* sep_enum = sep->add_subcommand("enumerate", "All separable A-critical permutations");
  sep_enum->add_option("--target", target_text)->required();
  sep_enum->callback([&] {
    action = [&] {
      const Downset target = detail::parse_target(target_text);
      if (target.empty()) throw usage_error("target must be nonempty");
      const auto all = enumerate_critical(target);
      if (g.structured()) out << "count=" << all.size() << '\n';
      for (const auto& pi : all) out << (g.structured() ? "permutation=" : "") << pi << '\n';
      return int{ok};
    };
  });

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Bound formulas and certificates");
  bounds->require_subcommand(1);
  std::optional<std::size_t> opt_r, opt_s, opt_k, opt_d;
  auto* upper = bounds->add_subcommand("upper", "Upper bounds: -r R -s S, -k K, or -r R -d D");
  upper->add_option("-r", opt_r);
  upper->add_option("-s", opt_s);
  upper->add_option("-k", opt_k);
  upper->add_option("-d", opt_d, "Report N(r,d) for this d");
  upper->callback([&] {
    action = [&] {
      std::string label;
      BigInt value;
      if (opt_k && !opt_r && !opt_s && !opt_d) {
        label = "C(" + std::to_string(*opt_k) + ")";
        value = c_k_upper(*opt_k);
      } else if (opt_r && opt_s && !opt_k && !opt_d) {
        label = "C(" + std::to_string(*opt_r) + "," + std::to_string(*opt_s) + ")";
        value = c_rs_upper(*opt_r, *opt_s);
      } else if (opt_r && opt_d && !opt_k && !opt_s) {
        if (*opt_r < 2) throw usage_error("N(r,d) requires r >= 2");
        label = "N(" + std::to_string(*opt_r) + "," + std::to_string(*opt_d) + ")";
        value = n_upper(*opt_r, *opt_d);
      } else {
        throw usage_error("give exactly one of: -k K | -r R -s S | -r R -d D");
      }
      if (g.structured()) out << "quantity=" << label << "\nupper=" << value << '\n';
      else out << label << " <= " << value << '\n';
      return int{ok};
    };
  });
  std::size_t k_max = 20, rs_max = 10;
  auto* lower = bounds->add_subcommand("lower", "Lower-bound tables with provenance");
  lower->add_option("--k-max", k_max);
  lower->add_option("--rs-max", rs_max);
  lower->callback([&] {
    action = [&] {
      out << serialize(bound_reports(lower_bounds(k_max, rs_max)));
      return int{ok};
    };
  });
  auto* gadget = bounds->add_subcommand("gadget", "Verify the tree gadget for N(r,d) >= |U|");
  gadget->add_option("-r", r)->required();
  gadget->add_option("-d", d)->required();
  gadget->callback([&] {
    action = [&] {
      Gadget gd;
      try {
        gd = gadget_build(r, d);
      } catch (const std::invalid_argument& e) {
        throw usage_error(e.what());
      }
      const bool holds = gadget_verify(gd);
      if (g.structured()) {
        out << "size=" << gd.size() << "\nmax_disagreement=" << gadget_max_disagreement(gd)
            << "\nverified=" << (holds ? "yes" : "no") << '\n';
      } else {
        out << (holds ? "verified" : "not verified") << ": N(" << r << "," << d
            << ") >= " << gd.size() << '\n';
      }
      return holds ? int{ok} : int{fails};
    };
  });

  // search
  auto* search = app.add_subcommand("search", "Exhaustive search for A-critical permutations");
  SearchJob job;
  bool no_symmetry = false;
  std::optional<std::string> checkpoint;
  std::optional<double> search_budget;
  search->add_option("--target", target_text)->required();
  search->add_option("--max-len", job.max_len)->required();
  search->add_flag("--no-symmetry", no_symmetry, "Report every permutation, not orbit representatives");
  search->add_option("--jobs", job.parallelism, "Worker threads");
  search->add_option("--safety-cap", job.safety_cap, "Largest allowed --max-len");
  search->add_option("--split-length", job.split_length, "Prefix length of parallel tasks");
  search->add_option("--checkpoint", checkpoint, "Checkpoint file written on interruption");
  search->add_flag("--resume", job.resume, "Skip tasks marked done in --checkpoint");
  search->add_option("--search-budget", search_budget, "Wall-clock seconds for the whole run");
  search->callback([&] {
    action = [&] {
      job.target = detail::parse_target(target_text);
      if (job.target.empty()) throw usage_error("target must be nonempty");
      if (job.max_len > job.safety_cap)
        throw usage_error("--max-len exceeds --safety-cap " + std::to_string(job.safety_cap));
      job.use_symmetry = !no_symmetry;
      job.limits = g.limits();
      job.checkpoint_path = checkpoint;
      job.time_budget = search_budget;
      job.sink = [&](const Permutation& pi, const CriticalityReport&) {
        out << (g.structured() ? "hit=" : "") << pi.size() << ": " << pi << '\n';
        out.flush();
      };
      SearchResult res;
      try {
        res = search_critical(job);
      } catch (const std::invalid_argument& e) {
        throw usage_error(e.what());
      }
      if (g.structured()) {
        out << "hits=" << res.hits.size() << "\ncomplete=" << (res.complete ? "yes" : "no")
            << "\nnodes=" << res.nodes << '\n';
      } else {
        out << "# hits=" << res.hits.size() << " complete=" << (res.complete ? "yes" : "no")
            << " nodes=" << res.nodes << '\n';
      }
      return res.complete ? int{ok} : int{exhausted};
    };
  });

  std::vector<const char*> argv{"monocover"};
  for (const auto& a_ : args) argv.push_back(a_.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "monocover: " << e.what() << '\n';
    return usage;
  }
  if (!action) {
    err << "monocover: missing subcommand\n";
    return usage;
  }
  try {
    return action();
  } catch (const usage_error& e) {
    err << "monocover: " << e.what() << '\n';
    return usage;
  } catch (const resource_exhausted& e) {
    err << "monocover: " << e.what() << '\n';
    out << (g.structured() ? "status=" : "") << "resource-exhausted\n";
    return exhausted;
  } catch (const std::invalid_argument& e) {
    err << "monocover: " << e.what() << '\n';
    return usage;
  }
}

}  // namespace monocover::cli

#endif  // MONOCOVER_TOOLS_CLI_HPP
