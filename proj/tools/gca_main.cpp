#include <cstdio>
#include <exception>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gca/report.hpp"
#include "gca/seedfile.hpp"

namespace {

using namespace gca;

OutputFormat format_of(const std::string& name) {
  return name == "json" ? OutputFormat::Json : OutputFormat::Text;
}

// All words of the given length over 1..n with no immediate repeats (repeats
// cancel under free reduction, so they never reach new states).
void enumerate_words(int n, int length, std::vector<int>& cur,
                     std::vector<MutationWord>& out) {
  if (static_cast<int>(cur.size()) == length) {
    out.emplace_back(cur);
    return;
  }
  for (int k = 1; k <= n; ++k) {
    if (!cur.empty() && cur.back() == k) continue;
    cur.push_back(k);
    enumerate_words(n, length, cur, out);
    cur.pop_back();
  }
}

MutationWord random_word(int n, int length, std::mt19937_64& rng) {
  std::vector<int> w;
  std::uniform_int_distribution<int> pick(1, n);
  while (static_cast<int>(w.size()) < length) {
    int k = pick(rng);
    if (!w.empty() && w.back() == k) continue;
    w.push_back(k);
  }
  return MutationWord(std::move(w));
}

int run_command(const GenSeed& seed, const std::string& word_csv, const std::string& table,
                const std::string& fmt) {
  const MutationWord w = MutationWord::parse(word_csv);
  const TableKind kind = table == "xy"      ? TableKind::Xy
                         : table == "seeds" ? TableKind::Seeds
                                            : TableKind::Cgf;
  RunReport rep = run_word(seed, w, kind != TableKind::Cgf);
  std::fputs(render_tables(rep, kind, format_of(fmt)).c_str(), stdout);
  return 0;
}

int verify_command(const GenSeed& seed, const std::string& side, const std::string& word_csv,
                   int depth, int restarts, std::uint64_t rng_seed, const std::string& fmt) {
  std::vector<MutationWord> words;
  std::vector<GenSeed> bases;
  if (!word_csv.empty()) {
    words.push_back(MutationWord::parse(word_csv));
    bases.push_back(seed);
  } else {
    std::vector<int> cur;
    enumerate_words(seed.n, depth, cur, words);
    bases.assign(words.size(), seed);
    // A restart re-roots at a random point of the mutation pattern: mutate
    // the exchange matrix along a random word, then start from fresh
    // generators there (the exchange degrees are mutation-invariant).
    std::mt19937_64 rng(rng_seed);
    const std::vector<std::int64_t> d = seed.degrees();
    for (int r = 0; r < restarts; ++r) {
      IntMat B = seed.B;
      const MutationWord reroot = random_word(seed.n, depth, rng);
      for (int k : reroot.letters()) B = matrix_mutate(B, d, k);
      std::vector<ExchangePoly> Z;
      for (int i = 0; i < seed.n; ++i)
        Z.push_back(ExchangePoly::formal(i + 1, static_cast<int>(d[static_cast<std::size_t>(i)])));
      bases.push_back(validate_seed(seed.P.kind, std::move(B), std::move(Z)));
      words.push_back(random_word(seed.n, depth, rng));
    }
  }

  std::vector<CompanionReport> reports;
  bool pass = true;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (side != "right") reports.push_back(verify_left(bases[i], words[i]));
    if (side != "left") reports.push_back(verify_right(bases[i], words[i]));
  }
  for (const CompanionReport& r : reports) pass = pass && r.pass;
  std::fputs(render_verification(reports, format_of(fmt)).c_str(), stdout);
  return pass ? 0 : 1;
}

int oracle_command(const GenSeed& seed, const std::string& word_csv, const std::string& fmt) {
  OracleDiff diff = oracle_compare(seed, MutationWord::parse(word_csv));
  std::fputs(render_oracle(diff, format_of(fmt)).c_str(), stdout);
  return diff.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact mutation engine for generalized cluster algebras"};
  app.require_subcommand(1);

  std::string seed_path;
  std::string word_csv;
  std::string table = "cgf";
  std::string fmt = "text";
  std::string side = "both";
  int depth = 0;
  int restarts = 0;
  std::uint64_t rng_seed = 1;

  CLI::App* run = app.add_subcommand("run", "walk a mutation word and print tables");
  run->add_option("seedfile", seed_path, "seed document (JSON)")->required();
  run->add_option("--word", word_csv, "comma-separated 1-based directions, e.g. 1,2,1");
  run->add_option("--table", table, "cgf: recursion invariants; xy: cluster variables and "
                                    "coefficients; seeds: full seeds")
      ->check(CLI::IsMember({"cgf", "xy", "seeds"}));
  run->add_option("--format", fmt, "text or json")->check(CLI::IsMember({"text", "json"}));

  CLI::App* verify =
      app.add_subcommand("verify", "check the companion identities along mutation words");
  verify->add_option("seedfile", seed_path, "seed document (JSON)")->required();
  verify->add_option("--side", side, "left, right, or both")
      ->check(CLI::IsMember({"left", "right", "both"}));
  verify->add_option("--word", word_csv, "verify along one word (all prefixes)");
  verify->add_option("--depth", depth,
                     "verify along every reduced word of this length instead");
  verify->add_option("--restarts", restarts,
                     "extra randomized runs from mutated starting seeds (with --depth)");
  verify->add_option("--rng-seed", rng_seed, "seed for the randomized restarts");
  verify->add_option("--format", fmt, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* oracle = app.add_subcommand(
      "oracle", "recompute the pattern invariants along an independent route and diff");
  oracle->add_option("seedfile", seed_path, "seed document (JSON)")->required();
  oracle->add_option("--word", word_csv, "comma-separated 1-based directions");
  oracle->add_option("--format", fmt, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed() && word_csv.empty() && depth <= 0) {
      std::fprintf(stderr, "error: verify needs --word or a positive --depth\n");
      return 2;
    }
    const gca::GenSeed seed = gca::load_seed_file(seed_path);
    if (run->parsed()) return run_command(seed, word_csv, table, fmt);
    if (verify->parsed())
      return verify_command(seed, side, word_csv, depth, restarts, rng_seed, fmt);
    return oracle_command(seed, word_csv, fmt);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
