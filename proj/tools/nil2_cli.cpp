// command line front end: construct | square | classify | verify | order | axioms

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <nil2/nil2.hpp>

namespace {

using namespace nil2;

Subset load_subset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open subset file '" + path + "'");
  return subset_from_stream(in);
}

void print_report_with_csv(const VerificationReport& report) {
  Json out = report;
  std::cout << out.dump(2) << "\n";
  std::printf("%s,%s,%llu,%llu,%llu,%.6f,%s\n", to_string(report.theorem),
              to_string(report.mode),
              static_cast<unsigned long long>(report.instances_checked),
              static_cast<unsigned long long>(report.hypothesis_hits),
              static_cast<unsigned long long>(report.counterexample_count),
              report.elapsed_seconds, report.status());
}

struct VerifyOptions {
  std::string theorem;
  int n = 2;
  Coord gen_bound = 1;
  Coord comm_bound = 1;
  int k = 0;
  std::uint64_t budget = 1000000;
  bool sampled = false;
  std::uint64_t seed = 0;
  bool reversed_only = false;
  int jobs = 1;
  Coord imax = 6;
  Coord jmax = 6;
  int kmin = 4;
  int kmax = 12;
};

int run_verify(const VerifyOptions& opt) {
  const auto id = theorem_from_string(opt.theorem);
  if (!id) throw std::invalid_argument("unknown theorem id '" + opt.theorem + "'");

  VerificationReport report;
  switch (*id) {
    case TheoremId::L2_3:
    case TheoremId::L2_4:
      report = verify_lemmas_2_3_2_4(*id, opt.imax, opt.jmax);
      break;
    case TheoremId::E3_1:
      report = verify_example_3_1(opt.kmin, opt.kmax);
      break;
    default: {
      if (opt.k < 1) throw std::invalid_argument("--k is required for subset sweeps");
      BoxSpec box;
      box.generators = opt.n;
      box.gen_bound = opt.gen_bound;
      box.comm_bound = opt.comm_bound;
      box.subset_size = opt.k;
      box.budget = opt.budget;
      box.seed = opt.seed;
      const EnumerationMode mode =
          opt.sampled ? EnumerationMode::sampled : EnumerationMode::exhaustive;
      std::vector<OrderDirection> dirs{OrderDirection::standard};
      if (*id == TheoremId::L2_1 || *id == TheoremId::T2_5)
        dirs = {OrderDirection::standard, OrderDirection::reversed};
      if (opt.reversed_only) dirs = {OrderDirection::reversed};
      report = sweep_box(*id, box, mode, dirs, opt.jobs);
      break;
    }
  }
  print_report_with_csv(report);
  return report.exit_code();
}

int run_square(const std::string& path, bool dump, bool json) {
  const Subset s = load_subset(path);
  const DoublingReport report = doubling_report(s);
  if (json) {
    Json out = report;
    if (dump) out["square_elements"] = product_set(s);
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "k=" << report.k << "\n"
            << "square=" << report.square_size << "\n"
            << "generated_abelian=" << (report.generated_abelian ? "true" : "false") << "\n"
            << "cna=" << (report.cna ? "true" : "false") << "\n"
            << "band=" << to_string(report.band) << "\n"
            << "landmarks: 2k-1=" << report.landmark(0) << " 3k-3=" << report.landmark(1)
            << " 3k-2=" << report.landmark(2) << " 3k-1=" << report.landmark(3)
            << " 4k-4=" << report.landmark(4) << "\n";
  if (dump)
    for (const auto& g : product_set(s)) std::cout << to_text(g) << "\n";
  return 0;
}

int run_classify(const std::string& path) {
  const Subset s = load_subset(path);
  if (s.size() < 3) throw std::invalid_argument("classification needs at least 3 elements");
  Json out;
  if (s.size() == 3) {
    const K3Classification cls = classify_k3(s);
    if (cls.kind == K3Case::not_extremal) {
      std::cout << "none\n";
      return 0;
    }
    out = cls;
  } else {
    const auto two = recognize_structure(s);
    if (two) {
      out = Json{{"kind", "two_progressions"}, {"description", *two}};
    } else {
      const auto plus = recognize_progression_plus_point(s);
      if (!plus) {
        std::cout << "none\n";
        return 0;
      }
      out = Json{{"kind", "progression_plus_point"}, {"description", *plus}};
    }
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

struct ConstructOptions {
  std::string a, b, c;
  Coord i = 0;
  Coord j = 0;
  bool general = false;
  std::string out_path;
  bool json = false;
};

int run_construct(const ConstructOptions& opt) {
  const MalcevElement a = element_from_any(opt.a);
  const MalcevElement b = element_from_any(opt.b);
  const MalcevElement c = element_from_any(opt.c);
  if (a.gens.size() != b.gens.size() || a.gens.size() != c.gens.size())
    throw DimensionError("a, b, c come from groups of different rank");
  const GroupContext ctx(static_cast<int>(a.gens.size()));

  Subset set = Subset::from_elements(ctx, {a});
  Coord v = 1;
  ProgressionRelation relation = ProgressionRelation::ba_eq_ab_cv;
  long long predicted_square = 0;
  long long union_size = -1;
  if (opt.general) {
    GeneralConstruction built = construct_general(ctx, a, b, c, opt.i, opt.j);
    set = built.set;
    v = built.v;
    relation = built.relation;
    predicted_square = built.predicted_square;
    union_size = static_cast<long long>(two_sided_product_size(built.a_part, built.b_part));
    if (union_size != built.predicted_union)
      throw std::logic_error("two-sided union differs from i+j+v+1; engine defect");
  } else {
    set = construct_two_progressions(ctx, a, b, c, opt.i, opt.j);
    const MalcevElement q = commutator(b, a);
    relation = q == c ? ProgressionRelation::ba_eq_ab_cv : ProgressionRelation::ab_eq_ba_cv;
    predicted_square = 3 * static_cast<long long>(set.size()) - 2;
  }
  const std::size_t square = product_set_size(set);

  if (opt.json) {
    Json out{{"set", set},
             {"k", set.size()},
             {"v", v},
             {"relation", to_string(relation)},
             {"square_size", square},
             {"predicted_square", predicted_square}};
    if (union_size >= 0) out["union_size"] = union_size;
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  std::string text = "n=" + std::to_string(ctx.generators()) + "\n";
  text += "# k=" + std::to_string(set.size()) + " v=" + std::to_string(v) +
          " relation=" + to_string(relation) + " square=" + std::to_string(square) +
          " predicted=" + std::to_string(predicted_square);
  if (union_size >= 0) text += " union=" + std::to_string(union_size);
  text += "\n";
  for (const auto& g : set) text += to_text(g) + "\n";

  if (!opt.out_path.empty()) {
    std::ofstream out(opt.out_path);
    if (!out) throw ParseError("cannot write '" + opt.out_path + "'");
    out << text;
  } else {
    std::cout << text;
  }
  return 0;
}

int run_order_compare(const std::string& left, const std::string& right, bool reversed) {
  const MalcevElement g = element_from_any(left);
  const MalcevElement h = element_from_any(right);
  const OrderDirection dir = reversed ? OrderDirection::reversed : OrderDirection::standard;
  std::cout << to_string(compare(g, h, dir)) << "\n";
  return 0;
}

int run_axioms(int n, std::uint64_t trials, std::uint64_t seed, Coord bound, bool json) {
  const auto results = run_axiom_suite(n, trials, seed, bound);
  bool all_ok = true;
  for (const auto& r : results) all_ok = all_ok && r.passed();
  if (json) {
    Json out{{"generators", n}, {"trials", trials}, {"seed", seed}, {"results", results},
             {"status", all_ok ? "pass" : "fail"}};
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      if (r.passed()) {
        std::printf("[PASS] %s (%llu trials)\n", r.name.c_str(),
                    static_cast<unsigned long long>(r.trials));
      } else {
        std::printf("[FAIL] %s (%llu of %llu trials): %s\n", r.name.c_str(),
                    static_cast<unsigned long long>(r.failures),
                    static_cast<unsigned long long>(r.trials), r.first_failure.c_str());
      }
    }
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"small product sets in the free nilpotent group of class 2"};
  app.require_subcommand(1);

  auto* order_cmd = app.add_subcommand("order", "bi-order utilities");
  order_cmd->require_subcommand(1);
  auto* compare_cmd = order_cmd->add_subcommand("compare", "compare two elements");
  std::string cmp_left, cmp_right;
  bool cmp_reversed = false;
  compare_cmd->add_option("left", cmp_left, "first element")->required();
  compare_cmd->add_option("right", cmp_right, "second element")->required();
  compare_cmd->add_flag("--reversed", cmp_reversed, "use the reversed order");

  auto* square_cmd = app.add_subcommand("square", "size and growth class of S*S");
  std::string square_in;
  bool square_dump = false, square_json = false;
  square_cmd->add_option("--in", square_in, "subset file")->required();
  square_cmd->add_flag("--dump", square_dump, "list the product set");
  square_cmd->add_flag("--json", square_json, "JSON output");

  auto* classify_cmd = app.add_subcommand("classify", "recognize the structure of a subset");
  std::string classify_in;
  classify_cmd->add_option("--in", classify_in, "subset file")->required();

  auto* construct_cmd = app.add_subcommand("construct", "build a two-progression set");
  ConstructOptions con;
  construct_cmd->add_option("--a", con.a, "base of the first progression")->required();
  construct_cmd->add_option("--b", con.b, "base of the second progression")->required();
  construct_cmd->add_option("--c", con.c, "central ratio")->required();
  construct_cmd->add_option("--i", con.i, "top exponent of the first progression")->required();
  construct_cmd->add_option("--j", con.j, "top exponent of the second progression")->required();
  construct_cmd->add_flag("--general", con.general, "allow [b,a] = c^v with v > 1");
  construct_cmd->add_option("--out", con.out_path, "write the subset file here");
  construct_cmd->add_flag("--json", con.json, "JSON output");

  auto* verify_cmd = app.add_subcommand("verify", "sweep a statement over subset families");
  VerifyOptions ver;
  verify_cmd->add_option("--theorem", ver.theorem,
                         "one of L2_1 P2_2 L2_3 L2_4 T2_5 E3_1 T3_2 P3_3 P3_4 BG_1_3")
      ->required();
  verify_cmd->add_option("--n", ver.n, "generator count of the ambient group");
  verify_cmd->add_option("--gen-bound", ver.gen_bound, "generator exponent bound of the box");
  verify_cmd->add_option("--comm-bound", ver.comm_bound, "commutator exponent bound of the box");
  verify_cmd->add_option("--k", ver.k, "subset size for box sweeps");
  verify_cmd->add_option("--budget", ver.budget, "max subsets to enumerate or sample");
  verify_cmd->add_flag("--sampled", ver.sampled, "sample subsets instead of full enumeration");
  verify_cmd->add_option("--seed", ver.seed, "seed for sampled sweeps");
  verify_cmd->add_flag("--reversed-order", ver.reversed_only, "check only the reversed order");
  verify_cmd->add_option("--jobs", ver.jobs, "worker threads");
  verify_cmd->add_option("--imax", ver.imax, "grid bound on i (L2_3, L2_4)");
  verify_cmd->add_option("--jmax", ver.jmax, "grid bound on j (L2_4)");
  verify_cmd->add_option("--kmin", ver.kmin, "smallest k (E3_1)");
  verify_cmd->add_option("--kmax", ver.kmax, "largest k (E3_1)");

  auto* axioms_cmd = app.add_subcommand("axioms", "randomized checks of the core laws");
  int ax_n = 2;
  std::uint64_t ax_trials = 100000, ax_seed = 1;
  Coord ax_bound = 6;
  bool ax_json = false;
  axioms_cmd->add_option("--n", ax_n, "generator count");
  axioms_cmd->add_option("--trials", ax_trials, "trials per law");
  axioms_cmd->add_option("--seed", ax_seed, "RNG seed");
  axioms_cmd->add_option("--bound", ax_bound, "coordinate bound for random elements");
  axioms_cmd->add_flag("--json", ax_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (compare_cmd->parsed()) return run_order_compare(cmp_left, cmp_right, cmp_reversed);
    if (square_cmd->parsed()) return run_square(square_in, square_dump, square_json);
    if (classify_cmd->parsed()) return run_classify(classify_in);
    if (construct_cmd->parsed()) return run_construct(con);
    if (verify_cmd->parsed()) return run_verify(ver);
    if (axioms_cmd->parsed())
      return run_axioms(ax_n, ax_trials, ax_seed, ax_bound, ax_json);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 2;
}
