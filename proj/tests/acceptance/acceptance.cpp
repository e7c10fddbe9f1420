// Acceptance suite. Usage: acceptance [N ...] runs the listed criteria (all
// by default) and prints one PASS/FAIL line for each.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <unordered_set>

#include "../oracles.hpp"
#include "../random_elements.hpp"
#include "bicomm/cli.hpp"
#include "bicomm/dimension.hpp"
#include "bicomm/ideals.hpp"
#include "bicomm/orders.hpp"
#include "bicomm/parallel.hpp"
#include "bicomm/structalg.hpp"
#include "bicomm/tideals.hpp"

using namespace bicomm;

namespace {

const Field Q = Field::rationals();

// Failure notes of one criterion; empty means pass.
struct Outcome {
  std::vector<std::string> problems;
  std::string summary;

  void require(bool ok, const std::string& what) {
    if (!ok && problems.size() < 20) problems.push_back(what);
  }
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fixed(double x) {
  std::ostringstream s;
  s.precision(2);
  s << std::fixed << x;
  return s.str();
}

Element e(const std::string& text) { return parse_element(text, Q); }

IndexMap random_index_map(testing::Random& rnd, std::uint32_t n) {
  std::vector<std::uint32_t> images;
  std::uint32_t next = 0;
  for (std::uint32_t k = 0; k < n; ++k) images.push_back(next += rnd.uniform(1, 2));
  return IndexMap::from_images(images);
}

Outcome identities() {
  Outcome out;
  Stopwatch clock;
  testing::Random rnd(101);
  for (Field f : {Q, Field::prime(2), Field::prime(3)}) {
    for (int i = 0; i < 1000; ++i) {
      auto a = rnd.element(f, 4, 3, 3, true);
      auto b = rnd.element(f, 4, 3, 3, true);
      auto c = rnd.element(f, 4, 3, 3, true);
      out.require(a * (b * c) == b * (a * c), "left-commutativity over " + f.name() + " at triple " + std::to_string(i));
      out.require((a * b) * c == (a * c) * b, "right-commutativity over " + f.name() + " at triple " + std::to_string(i));
      auto p = rnd.element(f, 4, 3, 3, false);
      auto q = rnd.element(f, 4, 3, 3, false);
      auto r = rnd.element(f, 4, 3, 3, false);
      out.require(p * q == q * p, "square not commutative over " + f.name());
      out.require((p * q) * r == p * (q * r), "square not associative over " + f.name());
    }
  }
  out.require(clock.seconds() < 10, "took " + fixed(clock.seconds()) + " s");
  out.summary = "3000 triples in F_4 over q, fp:2, fp:3, " + fixed(clock.seconds()) + " s";
  return out;
}

std::size_t enumerated_rank(const std::vector<std::vector<std::uint32_t>>& words) {
  // each bracketing normalizes to a single monomial; deduplicate before the rank
  std::unordered_set<std::string> seen;
  std::vector<oracle::Vec> distinct;
  for (const auto& w : words)
    for (const auto& t : oracle::bracketings(w)) {
      auto v = normalize_term(Q, t);
      if (seen.insert(v.to_string()).second) distinct.push_back(oracle::from_element(v));
    }
  return oracle::rank(distinct);
}

Outcome normalization() {
  Outcome out;
  Stopwatch clock;
  for (std::uint32_t d = 1; d <= 3; ++d)
    for (std::uint32_t n = 1; n <= 6; ++n) {
      std::vector<std::vector<std::uint32_t>> words;
      std::vector<std::uint32_t> w(n, 1);
      while (true) {
        words.push_back(w);
        std::size_t k = n;
        while (k > 0 && w[k - 1] == d) w[--k] = 1;
        if (k == 0) break;
        ++w[k - 1];
      }
      auto r = enumerated_rank(words);
      out.require(r == graded_dimension(d, n), "d=" + std::to_string(d) + " n=" + std::to_string(n) + ": rank " +
                                                   std::to_string(r) + " vs " + graded_dimension(d, n).get_str());
    }
  for (std::uint32_t n = 2; n <= 7; ++n) {
    std::vector<std::vector<std::uint32_t>> perms;
    std::vector<std::uint32_t> p(n);
    for (std::uint32_t i = 0; i < n; ++i) p[i] = i + 1;
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    auto r = enumerated_rank(perms);
    mpz_class expected = (mpz_class(1) << n) - 2;
    out.require(r == expected && multilinear_dimension(n) == expected,
                "multilinear n=" + std::to_string(n) + ": enumerated " + std::to_string(r) + ", formula " +
                    multilinear_dimension(n).get_str());
  }
  out.require(clock.seconds() < 120, "took " + fixed(clock.seconds()) + " s");
  out.summary = "d<=3, n<=6 and multilinear n<=7, " + fixed(clock.seconds()) + " s";
  return out;
}

std::string y1z1(std::uint32_t a, std::uint32_t b) {
  return "y1^" + std::to_string(a) + "*z1^" + std::to_string(b);
}

Outcome non_noetherian() {
  Outcome out;
  std::vector<std::vector<Element>> chain;
  for (std::uint32_t n = 1; n <= 8; ++n) {
    std::vector<Element> gens;
    for (std::uint32_t delta = 1; delta <= n; ++delta) gens.push_back(e(y1z1(1, delta)));
    chain.push_back(gens);
    out.require(!left_ideal_member(e(y1z1(1, n + 1)), gens).member, "y1z1^" + std::to_string(n + 1) + " in left ideal");
    for (std::uint32_t delta = 1; delta <= n; ++delta)
      for (std::uint32_t a = 0; a <= 3; ++a) {
        // x1 applied a times on the left
        out.require(left_ideal_member(e(y1z1(a + 1, delta)), gens).member, y1z1(a + 1, delta) + " missing");
        // left product with the mixed monomial y1^a z1^b
        for (std::uint32_t b = 1; a >= 1 && b <= 3; ++b)
          out.require(left_ideal_member(e(y1z1(a + 1, b + delta)), gens).member, y1z1(a + 1, b + delta) + " missing");
      }
  }
  auto strict = chain_strict_steps(chain, IdealMode::Left);
  for (std::size_t k = 1; k < strict.size(); ++k)
    out.require(strict[k], "left step " + std::to_string(k + 1) + " not strict");
  out.require(!chain_stabilization(chain, IdealMode::Left), "left chain reported stable");
  auto two = chain_stabilization(chain, IdealMode::TwoSided);
  out.require(two == 1u, "two-sided stabilization index " + (two ? std::to_string(*two) : std::string("none")));
  out.summary = "n = 1..8, left chain strictly ascending, two-sided index 1";
  return out;
}

Element random_ideal_element(testing::Random& rnd, const std::vector<Element>& gens) {
  Element sum(Q);
  for (int k = 0; k < 2; ++k) {
    Element t = gens[rnd.uniform(0, static_cast<std::uint32_t>(gens.size() - 1))];
    for (std::uint32_t s = rnd.uniform(0, 2); s > 0; --s) {
      auto x = Element::generator(Q, rnd.uniform(1, 2));
      t = rnd.chance(0.5) ? x * t : t * x;
    }
    sum += t.scaled(rnd.scalar(Q));
  }
  return sum.is_zero() ? gens.front() : sum;
}

Outcome weak_noetherian() {
  Outcome out;
  Stopwatch clock;
  testing::Random rnd(404);
  std::size_t total_steps = 0, max_index = 0;
  for (int chain_no = 0; chain_no < 20; ++chain_no) {
    std::vector<std::vector<Element>> chain;
    std::vector<Element> current;
    std::size_t last_strict = 1, quiet = 0;
    // add random elements until five in a row are already members
    for (std::size_t step = 1; quiet < 5; ++step) {
      if (step > 60) {
        out.require(false, "chain " + std::to_string(chain_no) + " still growing after 60 additions");
        break;
      }
      auto g = rnd.element(Q, 2, 5, 2, false);
      bool strict = step == 1 || !two_sided_member(g, current);
      current.push_back(g);
      chain.push_back(current);
      if (strict && step > 1) {
        last_strict = step;
        quiet = 0;
      } else if (step > 1) {
        ++quiet;
      }
    }
    auto index = chain_stabilization(chain, IdealMode::TwoSided);
    out.require(index == last_strict, "chain " + std::to_string(chain_no) + ": detected index differs");
    for (int k = 0; k < 5; ++k) {
      auto g = random_ideal_element(rnd, current);
      out.require(two_sided_member(g, current), "element drawn from the ideal is not a member");
      current.push_back(g);
      chain.push_back(current);
    }
    out.require(chain_stabilization(chain, IdealMode::TwoSided) == index,
                "chain " + std::to_string(chain_no) + ": index moved after further additions");
    total_steps += chain.size();
    max_index = std::max(max_index, index.value_or(0));
  }
  out.require(clock.seconds() < 60, "took " + fixed(clock.seconds()) + " s");
  out.summary = "20 chains in F_2 over q, " + std::to_string(total_steps) + " steps, largest index " +
                std::to_string(max_index) + ", " + fixed(clock.seconds()) + " s";
  return out;
}

// The order written out directly: Y exponents from the highest index down,
// then Z exponents.
int reference_weight_compare(const Monomial& a, const Monomial& b) {
  const std::uint32_t n = std::max(a.max_index(), b.max_index());
  for (std::uint32_t i = n; i >= 1; --i)
    if (a.y_exp(i) != b.y_exp(i)) return a.y_exp(i) < b.y_exp(i) ? -1 : 1;
  for (std::uint32_t i = n; i >= 1; --i)
    if (a.z_exp(i) != b.z_exp(i)) return a.z_exp(i) < b.z_exp(i) ? -1 : 1;
  return 0;
}

Outcome orders() {
  Outcome out;
  std::vector<Monomial> all;
  for (std::uint32_t code = 0; code < 729; ++code) {
    std::vector<std::uint32_t> y(3), z(3);
    std::uint32_t c = code;
    for (auto& v : y) v = c % 3, c /= 3;
    for (auto& v : z) v = c % 3, c /= 3;
    Monomial m(y, z);
    if (m.is_mixed()) all.push_back(m);
  }
  std::size_t pairs = 0;
  for (const auto& a : all)
    for (const auto& b : all) {
      ++pairs;
      out.require(higman_leq(a, b) == oracle::higman_leq(a, b), "higman " + a.to_string() + " vs " + b.to_string());
    }

  testing::Random rnd(505);
  auto cmp = [](const Monomial& a, const Monomial& b) { return weight_compare(a, b); };
  for (int i = 0; i < 10000; ++i) {
    auto a = rnd.mixed(rnd.uniform(1, 4), rnd.uniform(2, 6));
    auto b = rnd.mixed(rnd.uniform(1, 4), rnd.uniform(2, 6));
    auto c = rnd.mixed(rnd.uniform(1, 4), rnd.uniform(2, 6));
    auto ab = cmp(a, b);
    int ref = reference_weight_compare(a, b);
    out.require((ab < 0) == (ref < 0) && (ab > 0) == (ref > 0), "weight order definition");
    out.require((ab == 0) == (a == b), "antisymmetry");
    out.require(cmp(b, a) == 0 ? ab == 0 : (cmp(b, a) < 0) == (ab > 0), "totality");
    if (ab <= 0 && cmp(b, c) <= 0) out.require(cmp(a, c) <= 0, "transitivity");
    if (ab < 0) out.require(cmp(a * c, b * c) < 0, "multiplicativity");
  }

  for (int i = 0; i < 1000; ++i) {
    auto f = rnd.element(Q, 3, 4, 4, false);
    auto g = rnd.element(Q, 3, 4, 4, false);
    std::uint32_t k = rnd.uniform(1, 4);
    auto x = Element::generator(Q, k);
    auto wf = weight_of(f).first;
    out.require(weight_of(f * g).first == wf * weight_of(g).first, "wt(fg) = wt(f) wt(g)");
    out.require(weight_of(x * f).first == Monomial::y(k) * wf, "wt(x_i f) = y_i wt(f)");
    out.require(weight_of(f * x).first == wf * Monomial::z(k), "wt(f x_i) = wt(f) z_i");
    auto phi = random_index_map(rnd, 3);
    out.require(weight_of(apply_index_map(f, phi)).first == phi.apply(wf), "wt(phi f) = phi wt(f)");
  }
  out.summary = std::to_string(pairs) + " Higman pairs, 10^4 weight triples, 10^3 weight equations";
  return out;
}

Outcome key_lemma() {
  Outcome out;
  Stopwatch clock;
  testing::Random rnd(606);
  for (int i = 0; i < 200; ++i) {
    auto f = rnd.element(Q, 2, 3, 3, false);
    auto wf = weight_of(f).first;
    auto target = random_index_map(rnd, wf.max_index()).apply(wf);
    for (std::uint32_t extra = rnd.uniform(0, 2); extra > 0; --extra)
      target *= rnd.chance(0.5) ? Monomial::y(rnd.uniform(1, 4)) : Monomial::z(rnd.uniform(1, 4));
    out.require(higman_leq(wf, target), "target not dominating");
    auto h = lift_weight(f, target);
    out.require(weight_of(h).first == target, "wt(lift) = " + weight_of(h).first.to_string() + ", want " + target.to_string());
    ClosureWindow window{h.max_degree(), std::max(h.max_index(), f.max_index())};
    out.require(t_ideal_member_bounded(h, {f}, window), "lift of " + f.to_string() + " not in its T-ideal");
  }
  out.require(clock.seconds() < 60, "took " + fixed(clock.seconds()) + " s");
  out.summary = "200 random lifts, " + fixed(clock.seconds()) + " s";
  return out;
}

bool strictly_descending(const std::vector<Monomial>& trace) {
  for (std::size_t k = 1; k < trace.size(); ++k)
    if (weight_compare(trace[k], trace[k - 1]) >= 0) return false;
  return true;
}

Outcome specht_reduction() {
  Outcome out;
  testing::Random rnd(707);
  const ClosureWindow window{4, 2};
  std::size_t done = 0, attempts = 0;
  while (done < 100 && attempts < 400) {
    ++attempts;
    std::vector<Element> gens = {rnd.element(Q, 2, 3, 3, false)};
    auto search = specht_basis_search(gens, window);
    if (!search.verified) continue;
    auto span = t_ideal_closure_bounded(gens, window);
    for (const auto& [md, rows] : span.basis_by_multidegree) {
      if (rows.empty() || done >= 100) continue;
      Element g(Q);
      for (const auto& r : rows) g += r.scaled(rnd.scalar(Q, false));
      if (g.is_zero()) continue;
      auto red = specht_reduce(g, search.basis);
      out.require(red.remainder.is_zero(), "remainder " + red.remainder.to_string() + " for " + g.to_string());
      out.require(strictly_descending(red.trace), "weights not strictly decreasing for " + g.to_string());
      ++done;
    }
  }
  out.require(done == 100, "only " + std::to_string(done) + " closure elements reduced");

  auto worked = specht_reduce(e("y1*y2*z2*z3"), {e("x1*x1 - x1*x2")});
  out.require(worked.remainder == e("y1*y2*z1^2"), "worked example remainder " + worked.remainder.to_string());
  out.require(worked.trace.size() == 3, "worked example visited " + std::to_string(worked.trace.size()) + " weights");
  out.require(strictly_descending(worked.trace), "worked example trace not decreasing");
  out.summary = std::to_string(done) + " closure elements reduced to 0; worked example: " +
                std::to_string(worked.trace.size()) + " steps, " + std::to_string(worked.cancellations) +
                " cancellations, remainder " + worked.remainder.to_string();
  return out;
}

Outcome specht_end_to_end() {
  Outcome out;
  std::string notes;
  struct Case {
    const char* gens;
    ClosureWindow window;
  };
  for (auto [text, window] : {Case{"x1*x2 - x2*x1", {5, 3}}, Case{"x1*x1", {4, 2}}}) {
    Stopwatch clock;
    auto result = specht_basis_search({e(text)}, window);
    double t = clock.seconds();
    std::string name = std::string("{") + text + "} at (" + std::to_string(window.max_degree) + "," +
                       std::to_string(window.max_variables) + ")";
    out.require(result.verified, name + " not verified");
    std::string weights;
    for (const auto& w : result.antichain) weights += (weights.empty() ? "" : " ") + w.to_string();
    out.require(result.basis.size() == 1,
                name + " basis has " + std::to_string(result.basis.size()) + " elements, antichain " + weights);
    out.require(t < 120, name + " took " + fixed(t) + " s");
    notes += (notes.empty() ? "" : "; ") + name + ": " + std::to_string(result.basis.size()) + " element(s), " +
             (result.verified ? "verified" : "unverified") + ", " + fixed(t) + " s";
  }
  out.summary = notes;
  return out;
}

Outcome witt() {
  Outcome out;
  auto w = witt_truncated(3, Q);
  auto left = check_identity(left_commutativity(Q), w, CheckMode::MultilinearExhaustive);
  out.require(left.holds, "left-commutativity fails");
  auto right = check_identity(right_commutativity(Q), w, CheckMode::MultilinearExhaustive);
  out.require(!right.holds, "right-commutativity holds");
  std::string found = "none";
  if (right.witness_basis) {
    found.clear();
    for (auto i : *right.witness_basis) found += (found.empty() ? "e" : ", e") + std::to_string(i);
  }
  out.require(right.witness_basis == std::vector<std::uint32_t>{1, 1, 2},
              "least witness is (" + found + "), expected (e1, e1, e2)");
  out.require(!(evaluate_polynomial(right_commutativity(Q), {w.basis(1), w.basis(1), w.basis(2)}, w) == w.zero()),
              "(e1, e1, e2) is not a witness");
  out.require(!check_bicommutative(w).holds, "check_bicommutative reports Holds");
  out.summary = "left holds, right fails at (" + found + ")";
  return out;
}

std::vector<std::string> golden_args(const std::filesystem::path& file) {
  std::vector<std::string> args;
  std::ifstream in(file);
  std::string line;
  const std::string marker = "@GOLDEN@";
  while (std::getline(in, line)) {
    if (auto at = line.find(marker); at != std::string::npos) line.replace(at, marker.size(), GOLDEN_DIR);
    args.push_back(line);
  }
  return args;
}

std::string run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int status = cli::dispatch(args, out, err);
  return out.str() + "exit " + std::to_string(status) + "\n";
}

Outcome determinism() {
  Outcome out;
  std::vector<std::filesystem::path> cases;
  for (const auto& entry : std::filesystem::directory_iterator(GOLDEN_DIR))
    if (entry.path().extension() == ".args") cases.push_back(entry.path());
  std::sort(cases.begin(), cases.end());
  out.require(!cases.empty(), "no golden files");
  for (const auto& args_file : cases) {
    auto expected_file = args_file;
    expected_file.replace_extension(".out");
    std::ifstream in(expected_file, std::ios::binary);
    std::string expected((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    auto args = golden_args(args_file);
    for (std::size_t threads : {1u, 4u}) {
      set_thread_count(threads);
      for (int run = 0; run < 5; ++run)
        out.require(run_cli(args) == expected, args_file.stem().string() + " differs with " + std::to_string(threads) +
                                                   " thread(s), run " + std::to_string(run + 1));
    }
  }
  set_thread_count(0);
  out.summary = std::to_string(cases.size()) + " golden files x 5 runs x threads {1, 4}";
  return out;
}

struct Criterion {
  const char* name;
  Outcome (*run)();
};

const Criterion kCriteria[] = {
    {"identity suite", identities},
    {"normalization oracle", normalization},
    {"non-noetherianity demo", non_noetherian},
    {"weak noetherianity demo", weak_noetherian},
    {"order suite", orders},
    {"key lemma", key_lemma},
    {"specht reduction", specht_reduction},
    {"specht end-to-end", specht_end_to_end},
    {"witt corpus", witt},
    {"determinism", determinism},
};

}  // namespace

int main(int argc, char** argv) {
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));
  int failures = 0;
  for (int k = 1; k <= 10; ++k) {
    if (!selected.empty() && !selected.count(k)) continue;
    Outcome result;
    try {
      result = kCriteria[k - 1].run();
    } catch (const std::exception& ex) {
      result.problems.push_back(std::string("exception: ") + ex.what());
    }
    bool pass = result.problems.empty();
    failures += !pass;
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << k << " (" << kCriteria[k - 1].name << ")"
              << (result.summary.empty() ? "" : ": " + result.summary) << '\n';
    for (const auto& p : result.problems) std::cout << "      " << p << '\n';
    std::cout.flush();
  }
  return failures == 0 ? 0 : 1;
}
