// Command-line surface over the construct / verify / twist workflows.

#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "hitrans/json_io.hpp"
#include "hitrans/verify.hpp"

namespace {

using namespace hitrans;

// Default designated words for a genus: the curves whose cyclic groups must
// be non-discrete. Even 2r: gamma = [phi1,phi1']...[phir,phir'] over the
// assignment alphabet (phi1 = s). Odd 2r+1: tau and gamma * tau.
std::vector<Word> default_designated(int genus) {
  int r = genus / 2;
  auto phi = phi_assignment_map(r, genus % 2 == 0);
  auto target = [&](int i) { return Word::generator(phi[static_cast<std::size_t>(i)].second); };
  Word gamma;
  for (int i = 0; i < r; ++i)
    gamma = gamma * commutator(target(2 * i), target(2 * i + 1));
  if (genus % 2 == 0) return {gamma};
  Word tau = target(2 * r);
  return {tau, gamma * tau};
}

int required_n_free(int genus) {
  // even 2r needs phi1..phir' = 2r permutations, one of them the shift;
  // odd 2r+1 needs one more for tau
  return genus - 1;
}

struct ConstructOptions {
  int genus = 2;
  int power = 2;
  int word_len = 3;
  int tuple_max = 1;
  Int window_radius = 2;
  Int orbit_target = 4;
  int n_free = 0;  // 0: derive from genus
  std::vector<std::string> designated;
  std::optional<std::uint64_t> seed;
  std::string out_path;
  std::string log_path;  // optional JSONL sidecar
};

int run_construct(const ConstructOptions& opt) {
  ConstructionBudget budget;
  budget.n_free = opt.n_free > 0 ? opt.n_free : required_n_free(opt.genus);
  if (budget.n_free < required_n_free(opt.genus))
    throw BudgetError("construct: genus " + std::to_string(opt.genus) + " needs at least " +
                      std::to_string(required_n_free(opt.genus)) + " free generators");
  budget.word_len = opt.word_len;
  budget.tuple_max = opt.tuple_max;
  budget.window = Window(opt.window_radius);
  budget.orbit_target = opt.orbit_target;
  budget.seed = opt.seed;
  if (opt.designated.empty()) {
    budget.designated = default_designated(opt.genus);
  } else {
    for (const std::string& text : opt.designated)
      budget.designated.push_back(Word::parse(text));
  }
  budget.validate();

  ConstructionResult result = run_construction(budget);
  GeneratorAssignment assign = finalize(result.assignment);
  int r = opt.genus / 2;
  EmbeddingSpec spec = opt.genus % 2 == 0 ? surface_hom_even(assign, r, opt.power)
                                          : surface_hom_odd(assign, r, opt.power);
  spec.budget = budget;
  spec.log = std::move(result.log);

  write_text_file(opt.out_path, artifact_to_string(spec));
  if (!opt.log_path.empty()) write_text_file(opt.log_path, log_to_jsonl(spec.log));

  std::size_t by_kind[4] = {0, 0, 0, 0};
  for (const LogEntry& e : spec.log.entries) {
    if (e.op == "force_nontrivial") ++by_kind[0];
    else if (e.op == "force_mapping") ++by_kind[1];
    else if (e.op == "force_long_orbit") ++by_kind[2];
    else ++by_kind[3];
  }
  std::cout << "requirements discharged: " << spec.log.entries.size() << " (freeness "
            << by_kind[0] << ", transitivity " << by_kind[1] << ", long-orbit " << by_kind[2]
            << ", finite-orbit " << by_kind[3] << ")\n";
  for (const auto& [name, perm] : assign.entries()) {
    if (perm.is_shift())
      std::cout << "  " << name << ": shift " << perm.shift_amount() << "\n";
    else
      std::cout << "  " << name << ": " << perm.table_data().size() << " pairs\n";
  }
  for (const Word& w : budget.designated) {
    OrbitReport report = orbit_structure(w, assign, budget.window, 1000000);
    std::cout << "  orbits of " << w.str() << " on window " << budget.window.radius() << ": ";
    for (std::size_t i = 0; i < report.orbit_lengths.size(); ++i)
      std::cout << (i ? " " : "") << report.orbit_lengths[i];
    if (!report.truncated.empty()) std::cout << " (+" << report.truncated.size() << " open)";
    std::cout << "\n";
  }
  std::cout << "wrote " << opt.out_path << "\n";
  return 0;
}

struct VerifyOptions {
  std::string in_path;
  std::string report_path;
  std::string format = "text";
  std::vector<std::string> sample;
};

int run_verify(const VerifyOptions& opt) {
  EmbeddingSpec spec = artifact_from_string(read_text_file(opt.in_path));
  if (!spec.budget) throw std::runtime_error("verify: artifact carries no budget");
  const ConstructionBudget& budget = *spec.budget;

  Json report;
  ReplayReport replay = replay_log(spec.log, spec.assignment);
  report["witness_replay"] = Json{{"total", replay.total},
                                  {"failed", replay.failed},
                                  {"inserted_pairs_present", replay.pairs_present}};

  Window search(std::max<Int>(log_extent(spec.log), budget.window.radius()));
  FreenessReport freeness = check_freeness(spec.assignment, budget.word_len, search);
  Json flagged = Json::array();
  for (const Word& w : freeness.flagged) flagged.push_back(w.str());
  report["freeness"] = Json{{"words_checked", freeness.words_checked},
                            {"search_radius", search.radius()},
                            {"flagged", std::move(flagged)}};

  Json transitivity = Json::array();
  for (int k = 1; k <= budget.tuple_max; ++k) {
    TransitivityReport tr =
        check_transitivity(spec.assignment, k, budget.window, budget.word_len, &spec.log);
    transitivity.push_back(Json{{"k", k},
                                {"pairs_checked", tr.pairs_checked},
                                {"unrealized", tr.unrealized.size()}});
  }
  report["transitivity"] = std::move(transitivity);

  Json nondiscrete = Json::array();
  for (const Word& w : budget.designated) {
    Json item;
    item["word"] = w.str();
    try {
      NondiscreteReport nd = check_nondiscrete(w, spec.assignment, budget.window, 1000000,
                                               orbit_hint_points(spec.log, w));
      item["q"] = nd.q;
      if (nd.moved)
        item["moved"] = *nd.moved;
      else
        item["moved"] = nullptr;
    } catch (const OrbitExceedsCap& e) {
      item["error"] = e.what();
    }
    nondiscrete.push_back(std::move(item));
  }
  report["nondiscrete"] = std::move(nondiscrete);

  std::vector<Word> sample;
  Presentation pres = spec.presentation();
  if (opt.sample.empty()) {
    for (const auto& g : pres.generators) sample.push_back(Word::generator(g));
    sample.push_back(pres.relator);
  } else {
    for (const std::string& text : opt.sample) sample.push_back(Word::parse(text));
  }
  EmbeddingReport emb = check_embedding(spec, sample, Window(50));
  Json embedding = Json::array();
  for (const EmbeddingItem& item : emb.items) {
    Json e;
    e["element"] = item.element.str();
    switch (item.cls) {
      case EmbeddingClass::CertifiedNontrivial: e["status"] = "certified-nontrivial"; break;
      case EmbeddingClass::RelatorEquivalent: e["status"] = "relator-equivalent"; break;
      case EmbeddingClass::Unverified: e["status"] = "unverified"; break;
    }
    if (item.moved_point) e["moved_point"] = *item.moved_point;
    embedding.push_back(std::move(e));
  }
  report["embedding"] = std::move(embedding);

  bool ok = replay.clean();
  report["ok"] = ok;

  std::string rendered;
  if (opt.format == "json") {
    rendered = report.dump(2) + "\n";
  } else {
    std::ostringstream out;
    out << "witness replay: " << replay.total - replay.failed << "/" << replay.total
        << (replay.pairs_present ? "" : " (missing inserted pairs)") << "\n";
    out << "freeness: " << freeness.words_checked << " words, " << freeness.flagged.size()
        << " flagged (search radius " << search.radius() << ")\n";
    for (const auto& t : report["transitivity"])
      out << "transitivity k=" << t["k"] << ": " << t["unrealized"] << " unrealized of "
          << t["pairs_checked"] << "\n";
    for (const auto& n : report["nondiscrete"]) {
      out << "nondiscrete " << n["word"].get<std::string>() << ": ";
      if (n.contains("error"))
        out << n["error"].get<std::string>() << "\n";
      else
        out << "q=" << n["q"] << " moved=" << n["moved"] << "\n";
    }
    for (const auto& e : report["embedding"])
      out << "embedding " << e["element"].get<std::string>() << ": "
          << e["status"].get<std::string>() << "\n";
    out << (ok ? "OK" : "FAILED") << "\n";
    rendered = out.str();
  }
  if (opt.report_path.empty())
    std::cout << rendered;
  else
    write_text_file(opt.report_path, rendered);
  return ok ? 0 : 1;
}

int run_twist(int genus, int n, const std::string& element) {
  Word g = Word::parse(element);
  GroupMap f = twist_folding(genus, n);
  std::cout << f.apply(g).str() << "\n";
  return 0;
}

int run_faithful_index(int genus, int n_max, const std::string& element) {
  std::optional<int> n0 = faithful_index(genus, Word::parse(element), n_max);
  if (n0)
    std::cout << *n0 << "\n";
  else
    std::cout << "none <= " << n_max << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"explicit highly transitive actions of surface groups on Z"};
  app.require_subcommand(1);

  ConstructOptions copt;
  std::uint64_t seed_value = 0;
  CLI::App* construct = app.add_subcommand("construct", "run the construction and emit an artifact");
  construct->add_option("--genus", copt.genus, "surface genus (>= 2)")->required();
  construct->add_option("--power", copt.power, "twist power n for the embedding")->default_val(2);
  construct->add_option("--word-len", copt.word_len, "freeness sweep word length");
  construct->add_option("--tuple-max", copt.tuple_max, "transitivity tuple bound");
  construct->add_option("--window", copt.window_radius, "window radius");
  construct->add_option("--orbit-target", copt.orbit_target, "long-orbit bound");
  construct->add_option("--n-free", copt.n_free, "free generator count (default from genus)");
  construct->add_option("--designated", copt.designated, "designated words (CLI word syntax)");
  CLI::Option* seed_opt = construct->add_option("--seed", seed_value,
                                                "randomized fresh-point selection");
  construct->add_option("-o,--out", copt.out_path, "artifact path")->required();
  construct->add_option("--log", copt.log_path, "construction log as JSON lines");

  VerifyOptions vopt;
  CLI::App* verify = app.add_subcommand("verify", "re-check an artifact");
  verify->add_option("-i,--in", vopt.in_path, "artifact path")->required();
  verify->add_option("--report", vopt.report_path, "report path (default stdout)");
  verify->add_option("--format", vopt.format, "report format")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--sample", vopt.sample, "surface words to classify");

  int tw_genus = 2, tw_n = 1;
  std::string tw_element;
  CLI::App* twist = app.add_subcommand("twist", "print the twisted folding image of a word");
  twist->add_option("--genus", tw_genus, "surface genus (>= 2)")->required();
  twist->add_option("--n", tw_n, "twist power")->required();
  twist->add_option("element", tw_element, "word in the surface generators")->required();

  int fi_genus = 2, fi_nmax = 10;
  std::string fi_element;
  CLI::App* findex = app.add_subcommand("faithful-index", "first power surviving the foldings");
  findex->add_option("--genus", fi_genus, "surface genus (>= 2)")->required();
  findex->add_option("--n-max", fi_nmax, "search bound")->default_val(10);
  findex->add_option("element", fi_element, "word in the surface generators")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (construct->parsed()) {
      if (copt.genus < 2) throw BudgetError("construct: genus must be >= 2");
      if (seed_opt->count() > 0) copt.seed = seed_value;
      return run_construct(copt);
    }
    if (verify->parsed()) return run_verify(vopt);
    if (twist->parsed()) return run_twist(tw_genus, tw_n, tw_element);
    if (findex->parsed()) return run_faithful_index(fi_genus, fi_nmax, fi_element);
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
