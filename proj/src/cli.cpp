#include "weylstat/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "weylstat/closed_forms.hpp"
#include "weylstat/enumeration.hpp"
#include "weylstat/genfun.hpp"
#include "weylstat/identities.hpp"
#include "weylstat/overpartition.hpp"
#include "weylstat/permutation.hpp"
#include "weylstat/search.hpp"
#include "weylstat/statistics.hpp"

namespace weylstat {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

// "{1,3}", "1,3", "{}" or "".
IndexSet parse_index_set(std::string_view text, Interval universe) {
  std::string s = trim(text);
  if (!s.empty() && s.front() == '{') {
    if (s.back() != '}') throw UsageError("unbalanced braces in set '" + s + "'");
    s = s.substr(1, s.size() - 2);
  }
  IndexSet out(universe);
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw UsageError("bad set member '" + item + "'");
    }
    if (used != item.size()) throw UsageError("bad set member '" + item + "'");
    out.insert(v);
  }
  return out;
}

int parse_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw UsageError("bad " + what + " '" + s + "'");
  }
  if (used != s.size()) throw UsageError("bad " + what + " '" + s + "'");
  return v;
}

// Filters: domino, neg={..}, negodd={..}, negeven={..}, negparity=0|1,
// sign:POS=+|-, abs:POS=VALUE, noabsdes=odd|even.
void apply_filter(GroupSpec& spec, const std::string& f) {
  if (f == "domino") {
    spec.domino = true;
    return;
  }
  const auto eq = f.find('=');
  if (eq == std::string::npos) throw UsageError("unknown filter '" + f + "'");
  const std::string key = f.substr(0, eq);
  const std::string value = f.substr(eq + 1);
  const Interval positions{1, std::max(1, spec.n)};
  if (key == "neg") {
    spec.neg_exact = parse_index_set(value, positions);
  } else if (key == "negodd") {
    spec.neg_odd_exact = parse_index_set(value, positions);
  } else if (key == "negeven") {
    spec.neg_even_exact = parse_index_set(value, positions);
  } else if (key == "negparity") {
    spec.neg_parity = parse_int(value, "parity");
  } else if (key.rfind("sign:", 0) == 0) {
    if (value != "+" && value != "-") throw UsageError("sign filter takes + or -");
    spec.position_signs.emplace_back(parse_int(key.substr(5), "position"), value == "+" ? 1 : -1);
  } else if (key.rfind("abs:", 0) == 0) {
    spec.abs_values.emplace_back(parse_int(key.substr(4), "position"), parse_int(value, "value"));
  } else if (key == "noabsdes") {
    if (value != "odd" && value != "even") throw UsageError("noabsdes takes odd or even");
    spec.no_abs_descents_of_parity = value == "odd" ? 1 : 0;
  } else {
    throw UsageError("unknown filter '" + f + "'");
  }
}

bool has_negative(std::string_view text) {
  // a '-' directly before a digit, after '[', ',' or blank
  for (std::size_t i = 0; i + 1 < text.size(); ++i) {
    if (text[i] == '-' && std::isdigit(static_cast<unsigned char>(text[i + 1]))) return true;
  }
  return false;
}

int cmd_stats(const std::string& literal, std::optional<std::string> family_flag, std::ostream& out) {
  Family fam = Family::A;
  if (family_flag) {
    fam = parse_family(*family_flag);
  } else if (has_negative(literal)) {
    fam = Family::B;
  }
  if (fam == Family::A) {
    if (has_negative(literal)) throw UsageError("family mismatch: negative entries need --family B or D");
    const Perm p = parse_perm(literal);
    out << "element: " << format(p) << "\n";
    out << "family: A\n";
    out << "Des: " << descent_set_A(p).to_string() << "\n";
    for (Stat s : all_stats()) {
      if (legal_on_perm(s)) out << stat_name(s) << "=" << eval_stat(s, p) << "\n";
    }
    return kExitPass;
  }
  const SignedPerm w = parse_signed_perm(literal);
  if (fam == Family::D && !w.in_D()) throw UsageError("family mismatch: an element of D_n has an even number of negatives");
  out << "element: " << format(w) << "\n";
  out << "family: " << family_letter(fam) << "\n";
  out << "Des: " << descent_set_B(w).to_string() << "\n";
  if (fam == Family::D) out << "DesD: " << descent_set_D(w).to_string() << "\n";
  out << "Neg: " << neg_set(w).to_string() << "\n";
  for (Stat s : all_stats()) {
    if (!legal_on_signed(s)) continue;
    if (s == Stat::lenD && fam != Family::D) continue;
    out << stat_name(s) << "=" << eval_stat(s, w) << "\n";
  }
  return kExitPass;
}

struct GenfunArgs {
  std::string family = "A";
  int n = 0;
  std::string quotient;
  std::string chi = "trivial";
  std::string stats;
  std::vector<std::string> filters;
  bool force = false;
  bool json = false;
  int jobs = 0;
};

int cmd_genfun(const GenfunArgs& a, std::ostream& out, std::ostream& err) {
  GroupSpec spec = GroupSpec::full(parse_family(a.family), a.n);
  spec.force = a.force;
  if (!a.quotient.empty()) spec.quotient = parse_index_set(a.quotient, Interval{1, std::max(1, a.n - 1)});
  for (const auto& f : a.filters) apply_filter(spec, f);
  const Character chi = parse_character(a.chi);
  const StatBinding binding = StatBinding::parse(a.stats);
  check_character(chi, spec.family);
  check_binding(binding, spec.family);
  validate(spec);
  const auto bound = group_order(spec.family, spec.n);
  if (bound >= 1000000) err << "enumerating up to " << bound << " elements\n";
  const auto sweep = twisted_genfun_counted(spec, chi, binding, a.jobs);
  const std::string poly = to_string(sweep.cells.at(0));
  if (a.json) {
    nlohmann::ordered_json j;
    j["family"] = std::string(1, family_letter(spec.family));
    j["n"] = spec.n;
    j["char"] = std::string(character_name(chi));
    j["stats"] = binding.to_string();
    j["poly"] = poly;
    j["count"] = sweep.count;
    out << j.dump(2) << "\n";
  } else {
    out << poly << "\n";
  }
  return kExitPass;
}

struct VerifyArgs {
  std::string id;
  bool all = false;
  std::optional<int> n;
  std::optional<int> n_max;
  int jobs = 0;
  std::string json_path;
  bool no_timing = false;
  bool force = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  if (a.all == !a.id.empty()) throw UsageError("verify takes an identity id or --all");
  if (a.n && a.n_max) throw UsageError("--n and --n-max are exclusive");
  std::vector<const IdentitySpec*> specs;
  if (a.all) {
    for (const auto& s : identity_registry()) specs.push_back(&s);
  } else {
    specs.push_back(&find_identity(a.id));
  }
  // plan every (identity, rank) first so that bad flags fail before any sweep
  std::vector<std::pair<const IdentitySpec*, int>> plan;
  for (const auto* s : specs) {
    std::vector<int> ranks;
    if (a.n) {
      ranks = {*a.n};
    } else {
      int top = s->n_max;
      if (a.n_max) top = a.all && !a.force ? std::min(*a.n_max, s->n_limit) : *a.n_max;
      if (s->n_min == s->n_max) top = std::min(top, s->n_max);
      ranks = domain_ranks(*s, top);
    }
    for (int r : ranks) {
      if (!rank_in_domain(*s, r, a.force)) {
        if (a.all && a.n) continue;
        throw UsageError(s->id + ": " + s->rank_name + "=" + std::to_string(r) + " is outside the domain " +
                         std::to_string(s->n_min) + ".." + std::to_string(s->n_limit));
      }
      plan.emplace_back(s, r);
    }
  }
  if (plan.empty()) throw UsageError("nothing to verify in the requested range");

  const VerifyOptions opts{a.jobs, a.force};
  const bool timing = !a.no_timing;
  std::vector<IdentityReport> all_reports;
  std::size_t failed = 0;
  for (const auto& [s, r] : plan) {
    auto reports = verify(s->id, r, opts);
    for (const auto& rep : reports) {
      if (!rep.equal) ++failed;
      out << report_line(rep, timing) << "\n";
      out.flush();
    }
    all_reports.insert(all_reports.end(), std::make_move_iterator(reports.begin()), std::make_move_iterator(reports.end()));
  }
  if (!a.json_path.empty()) {
    const std::string text = reports_to_json(all_reports, timing);
    if (a.json_path == "-") {
      out << text << "\n";
    } else {
      std::ofstream f(a.json_path);
      if (!f) throw std::runtime_error("cannot write " + a.json_path);
      f << text << "\n";
    }
  }
  out << (all_reports.size() - failed) << " passed, " << failed << " failed\n";
  return failed == 0 ? kExitPass : kExitFailure;
}

int cmd_search(const std::string& kind, int n, const std::string& target_text, std::ostream& out) {
  if (kind == "descent-major") {
    const MultiPoly target = target_text == "oddlen" ? odd_length_distribution_A(n) : parse_poly(target_text);
    const auto found = search_descent_major_A(n, target);
    if (!found) {
      out << "NONE\n";
      return kExitPass;
    }
    std::string j;
    for (int v : *found) j += (j.empty() ? "" : ",") + std::to_string(v);
    out << "j=(" << j << ")\n";
    return kExitPass;
  }
  if (kind == "descent-neg-major") {
    const MultiPoly target = target_text == "oddlen" ? odd_length_distribution_B(n) : parse_poly(target_text);
    const auto found = search_descent_neg_major_B(n, target);
    if (!found) {
      out << "NONE\n";
      return kExitPass;
    }
    auto join = [](const std::vector<int>& v) {
      std::string s;
      for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
      return s;
    };
    out << "j=(" << join(found->j) << ") k=(" << join(found->k) << ")\n";
    return kExitPass;
  }
  throw UsageError("unknown search '" + kind + "' (descent-major or descent-neg-major)");
}

struct OverpartitionArgs {
  int max_part = 0;
  std::optional<int> weight, max_weight, length, max_length;
  bool poly = false;
};

int cmd_overpartitions(const OverpartitionArgs& a, std::ostream& out) {
  if (a.poly) {
    if (!a.length) throw UsageError("--poly needs --length");
    out << to_string(overpartition_length_poly(a.max_part, *a.length)) << "\n";
    return kExitPass;
  }
  OverpartitionQuery q;
  q.max_part = a.max_part;
  q.weight = a.weight;
  q.max_weight = a.max_weight;
  q.length = a.length;
  q.max_length = a.max_length;
  for_each_overpartition(q, [&](const Overpartition& p) { out << format(p) << "\n"; });
  return kExitPass;
}

int cmd_list(std::ostream& out) {
  for (const auto& s : identity_registry()) {
    out << s.id << "  " << family_letter(s.family) << "  " << s.rank_name << "=" << s.n_min << ".." << s.n_max;
    if (s.parity == RankParity::odd) out << " odd";
    if (s.parity == RankParity::even) out << " even";
    out << "  " << s.formula << "\n";
  }
  return kExitPass;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Permutation statistics and generating-function identities for S_n, B_n, D_n", "weylstat"};
  app.require_subcommand(1);

  auto* stats = app.add_subcommand("stats", "evaluate every statistic on one element");
  std::string literal;
  std::string stats_family;
  stats->add_option("element", literal, "one-line or window notation, e.g. [-2,5,3,1,-4] or 81725634")->required();
  stats->add_option("--family", stats_family, "A, B or D (default: A, or B when negatives appear)");

  auto* genfun = app.add_subcommand("genfun", "twisted generating function over a group or a filtered subset");
  GenfunArgs ga;
  genfun->add_option("--family", ga.family, "A, B or D")->capture_default_str();
  genfun->add_option("--n", ga.n, "rank")->required();
  genfun->add_option("--quotient", ga.quotient, "J for the quotient S_n^J, e.g. {1,3}");
  genfun->add_option("--char", ga.chi, "trivial, sign_length, sign_neg, sign_length_neg")->capture_default_str();
  genfun->add_option("--stats", ga.stats, "bindings, e.g. omaj:q1,emaj:q2");
  genfun->add_option("--filter", ga.filters,
                     "domino, neg={..}, negodd={..}, negeven={..}, negparity=0|1, sign:i=+|-, abs:i=v, noabsdes=odd|even");
  genfun->add_option("--jobs", ga.jobs, "threads (0: all cores)");
  genfun->add_flag("--force", ga.force, "lift the default rank ceiling");
  genfun->add_flag("--json", ga.json, "print a JSON object");

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "verify identities by enumeration");
  verify_cmd->add_option("id", va.id, "identity id (see list)");
  verify_cmd->add_flag("--all", va.all, "every registered identity");
  verify_cmd->add_option("--n", va.n, "a single rank");
  verify_cmd->add_option("--n-max", va.n_max, "top rank");
  verify_cmd->add_option("--jobs", va.jobs, "threads (0: all cores)");
  verify_cmd->add_option("--json", va.json_path, "write reports as JSON to a file ('-' for stdout)");
  verify_cmd->add_flag("--no-timing", va.no_timing, "omit timings");
  verify_cmd->add_flag("--force", va.force, "allow ranks past the default ceilings");

  VerifyArgs vall;
  vall.all = true;
  auto* verify_all = app.add_subcommand("verify-all", "same as verify --all");
  verify_all->add_option("--n-max", vall.n_max, "top rank");
  verify_all->add_option("--jobs", vall.jobs, "threads (0: all cores)");
  verify_all->add_option("--json", vall.json_path, "write reports as JSON to a file ('-' for stdout)");
  verify_all->add_flag("--no-timing", vall.no_timing, "omit timings");

  auto* search = app.add_subcommand("search", "search for descent-based weight functions");
  std::string kind;
  int search_n = 0;
  std::string target = "oddlen";
  search->add_option("kind", kind, "descent-major or descent-neg-major")->required();
  search->add_option("--n", search_n, "rank")->required();
  search->add_option("--target", target, "oddlen or a polynomial in one variable")->capture_default_str();

  auto* over = app.add_subcommand("overpartitions", "list overpartitions, or P_{n,m} with --poly");
  OverpartitionArgs oa;
  over->add_option("--max-part", oa.max_part, "largest part")->required();
  over->add_option("--weight", oa.weight, "exact weight");
  over->add_option("--max-weight", oa.max_weight, "weight bound");
  over->add_option("--length", oa.length, "exact number of parts");
  over->add_option("--max-length", oa.max_length, "bound on the number of parts");
  over->add_flag("--poly", oa.poly, "print sum q^|l| over length --length, parts <= --max-part");

  auto* list = app.add_subcommand("list", "list registered identities");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (stats->parsed()) {
      return cmd_stats(literal, stats_family.empty() ? std::nullopt : std::optional<std::string>(stats_family), out);
    }
    if (genfun->parsed()) return cmd_genfun(ga, out, err);
    if (verify_cmd->parsed()) return cmd_verify(va, out);
    if (verify_all->parsed()) return cmd_verify(vall, out);
    if (search->parsed()) return cmd_search(kind, search_n, target, out);
    if (over->parsed()) return cmd_overpartitions(oa, out);
    if (list->parsed()) return cmd_list(out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << " (at " << e.position() << ")\n";
    return kExitUsage;
  } catch (const UnknownIdentity& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace weylstat
