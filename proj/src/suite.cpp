#include "caygraph/suite.hpp"

#include <chrono>
#include <set>
#include <sstream>

#include "caygraph/bounds.hpp"
#include "caygraph/cayley.hpp"
#include "caygraph/cliques.hpp"
#include "caygraph/gf.hpp"
#include "caygraph/subspace.hpp"

namespace caygraph {

namespace {

using Clock = std::chrono::steady_clock;

class Recorder {
 public:
  Recorder(std::vector<SuiteResult>& out,
           const std::function<void(const SuiteResult&)>& cb)
      : out_(out), cb_(cb) {}

  void record(const std::string& claim, nlohmann::json params,
              const std::string& expected, const std::string& provenance,
              const std::function<std::string()>& compute,
              bool blocking = true) {
    SuiteResult r;
    r.claim = claim;
    r.parameters = std::move(params);
    r.expected = expected;
    r.provenance = provenance;
    r.blocking = blocking;
    const auto t0 = Clock::now();
    try {
      r.computed = compute();
    } catch (const std::exception& e) {
      r.computed = std::string("error: ") + e.what();
    }
    r.elapsed_ms =
        std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    r.pass = !blocking || r.computed == r.expected;
    out_.push_back(r);
    if (cb_) cb_(r);
  }

 private:
  std::vector<SuiteResult>& out_;
  const std::function<void(const SuiteResult&)>& cb_;
};

FieldPtr make_field(int p, int s, int m) {
  return std::make_shared<FiniteField>(FiniteField::build(p, s, m));
}

std::string omega_peisert(int p, int s, const SuiteOptions& opt) {
  CayleyGraph graph(peisert_connection_set(make_field(p, s, 4)));
  SolverConfig cfg;
  cfg.threads = opt.threads;
  cfg.time_limit_seconds = opt.time_limit_seconds;
  CliqueCertificate cert = max_clique(graph, cfg);
  if (!cert.complete) return "incomplete, best " + std::to_string(cert.size);
  return std::to_string(cert.size);
}

std::string peisert_subfield_maximal(int base_q_p, int base_q_s) {
  // F_q maximality in P*_{q^4} for q = base_q_p^base_q_s.
  FieldPtr field = make_field(base_q_p, 4 * base_q_s, 4);
  DichotomyResult d = peisert_quartic_dichotomy(field);
  return d.extended ? "not maximal" : "maximal";
}

std::string gp_subfield_maximal(int p, int s, int d, int t) {
  CayleyGraph graph(gp_connection_set(make_field(p, s, d), d));
  ExtensionResult r = maximal_subspace_clique(graph, t);
  std::ostringstream os;
  os << (r.maximal ? "maximal" : "extended") << ", dim " << r.certificate.dim();
  return os.str();
}

}  // namespace

nlohmann::json SuiteResult::to_json() const {
  return nlohmann::json{{"claim", claim},       {"parameters", parameters},
                        {"expected", expected}, {"provenance", provenance},
                        {"computed", computed}, {"pass", pass},
                        {"blocking", blocking}, {"elapsed_ms", elapsed_ms}};
}

SuiteResult SuiteResult::from_json(const nlohmann::json& j) {
  SuiteResult r;
  r.claim = j.at("claim").get<std::string>();
  r.parameters = j.at("parameters");
  r.expected = j.at("expected").get<std::string>();
  r.provenance = j.at("provenance").get<std::string>();
  r.computed = j.at("computed").get<std::string>();
  r.pass = j.at("pass").get<bool>();
  r.blocking = j.at("blocking").get<bool>();
  r.elapsed_ms = j.at("elapsed_ms").get<double>();
  return r;
}

bool suite_passed(const std::vector<SuiteResult>& results) {
  for (const SuiteResult& r : results)
    if (r.blocking && !r.pass) return false;
  return true;
}

std::vector<SuiteResult> run_paper_suite(
    const SuiteOptions& options,
    const std::function<void(const SuiteResult&)>& on_result) {
  std::vector<SuiteResult> results;
  Recorder rec(results, on_result);
  const SuiteOptions& opt = options;

  rec.record("omega(P*_49) = 7", {{"p", 7}, {"s", 2}}, "7", "published-value",
             [&] { return omega_peisert(7, 2, opt); });
  rec.record("omega(P*_121) = 11", {{"p", 11}, {"s", 2}}, "11",
             "published-value", [&] { return omega_peisert(11, 2, opt); });
  rec.record("omega(P*_81) = 9", {{"p", 3}, {"s", 4}}, "9", "published-value",
             [&] { return omega_peisert(3, 4, opt); });

  rec.record("F_3 + hF_3 maximum clique of P*_81 with basis {1,h,g^2,g^2h}",
             {{"p", 3}, {"s", 4}}, "extended, size 9, maximum, basis ok",
             "published-value", [&] {
               DichotomyResult d = peisert_quartic_dichotomy(make_field(3, 4, 4));
               if (!d.extended) return std::string("maximal");
               std::ostringstream os;
               os << "extended, size " << d.clique.span_size()
                  << (d.clique_is_maximum ? ", maximum" : ", not maximum")
                  << (d.basis_ok ? ", basis ok" : ", basis fails");
               return os.str();
             });

  for (int q : {7, 9, 11}) {
    int p = (q == 9) ? 3 : q;
    int s = (q == 9) ? 2 : 1;
    rec.record("F_" + std::to_string(q) + " maximal clique of P*_" +
                   std::to_string(q) + "^4",
               {{"q", q}}, "maximal", "published-value",
               [&] { return peisert_subfield_maximal(p, s); });
  }

  rec.record("F_7 maximal clique of GP(343,3)", {{"p", 7}, {"s", 3}, {"d", 3}},
             "maximal, dim 1", "published-value",
             [&] { return gp_subfield_maximal(7, 3, 3, 1); });
  rec.record("F_3 maximal clique of GP(81,4)", {{"p", 3}, {"s", 4}, {"d", 4}},
             "maximal, dim 1", "published-value",
             [&] { return gp_subfield_maximal(3, 4, 4, 1); });
  rec.record("F_5 maximal clique of GP(625,4)", {{"p", 5}, {"s", 4}, {"d", 4}},
             "maximal, dim 1", "published-value",
             [&] { return gp_subfield_maximal(5, 4, 4, 1); });

  rec.record("F_25 maximal clique of GP(15625,3), not maximum",
             {{"p", 5}, {"s", 6}, {"d", 3}}, "maximal, dim 1",
             "published-value", [&] { return gp_subfield_maximal(5, 6, 3, 2); });
  rec.record("F_125 clique of size 125 = sqrt(15625) in GP(15625,3)",
             {{"p", 5}, {"s", 6}, {"d", 3}}, "clique, size 125, omega 125",
             "published-value", [&] {
               CayleyGraph graph(gp_connection_set(make_field(5, 6, 3), 3));
               SubspaceClique c = subfield_clique(graph, 3);
               std::ostringstream os;
               os << "clique, size " << c.span_size();
               // size sqrt(q) meets the trivial upper bound, so omega = 125
               BoundReport b = best_upper_bound(15625, 3, 5);
               os << ", omega "
                  << (c.span_size() >= b.best ? c.span_size() : 0);
               return os.str();
             });

  rec.record("maximal clique sizes of P_25 contain {3, 5}",
             {{"p", 5}, {"s", 2}, {"d", 2}}, "yes", "published-value", [&] {
               CayleyGraph graph(gp_connection_set(make_field(5, 2, 2), 2));
               std::set<int> sizes = enumerate_maximal_clique_sizes(graph);
               return (sizes.count(3) && sizes.count(5)) ? std::string("yes")
                                                         : std::string("no");
             });
  rec.record("maximal clique sizes of P_49 contain {5, 7}",
             {{"p", 7}, {"s", 2}, {"d", 2}}, "yes", "published-value", [&] {
               CayleyGraph graph(gp_connection_set(make_field(7, 2, 2), 2));
               std::set<int> sizes = enumerate_maximal_clique_sizes(graph);
               return (sizes.count(5) && sizes.count(7)) ? std::string("yes")
                                                         : std::string("no");
             });

  rec.record("C + g^2 C decomposition of F_49 for a maximum clique of P*_49",
             {{"p", 7}, {"s", 2}}, "distinct and covering", "published-value",
             [&] {
               FieldPtr field = make_field(7, 2, 4);
               CayleyGraph graph(peisert_connection_set(field));
               CliqueCertificate cert = max_clique(graph);
               bool ok = sqrt_decomposition_check(graph, cert.vertices,
                                                  field->generator());
               return ok ? std::string("distinct and covering")
                         : std::string("fails");
             });

  rec.record("omega(GP(81,4)) <= 8 via the Lucas refutation, witness n = 7",
             {{"q", 81}, {"d", 4}}, "bound 8, n 7, solver consistent",
             "published-value", [&] {
               SqrtRefutation ref = refute_sqrt_quadruple(81);
               CayleyGraph graph(gp_connection_set(make_field(3, 4, 4), 4));
               CliqueCertificate cert = max_clique(graph);
               std::ostringstream os;
               os << "bound " << ref.bound << ", n " << ref.witness_n << ", "
                  << (static_cast<std::uint64_t>(cert.size) <= ref.bound
                          ? "solver consistent"
                          : "solver exceeds bound");
               return os.str();
             });
  rec.record("omega(GP(2401,4)) <= 48 via the Lucas refutation, witness n = 36",
             {{"q", 2401}, {"d", 4}}, "bound 48, n 36", "published-value",
             [&] {
               SqrtRefutation ref = refute_sqrt_quadruple(2401);
               std::ostringstream os;
               os << "bound " << ref.bound << ", n " << ref.witness_n;
               return os.str();
             });

  // Evidence records: dichotomy outcomes bearing on whether any quartic
  // Peisert graph beyond order 81 attains the sqrt(q) clique bound.
  for (int q : {3, 7, 9, 11}) {
    int p = (q == 9) ? 3 : q;
    int s = (q == 9) ? 2 : 1;
    rec.record("quartic dichotomy evidence, q = " + std::to_string(q),
               {{"q", q}}, "", "evidence",
               [&] { return peisert_subfield_maximal(p, s); },
               /*blocking=*/false);
  }

  if (options.tier == SuiteTier::full) {
    rec.record("omega(P*_2401) = 17", {{"p", 7}, {"s", 4}}, "17",
               "published-value", [&] { return omega_peisert(7, 4, opt); });
    for (int q : {19, 23, 27, 31}) {
      int p = (q == 27) ? 3 : q;
      int s = (q == 27) ? 3 : 1;
      rec.record("F_" + std::to_string(q) + " maximal clique of P*_" +
                     std::to_string(q) + "^4",
                 {{"q", q}}, "maximal", "published-value",
                 [&] { return peisert_subfield_maximal(p, s); });
      rec.record("quartic dichotomy evidence, q = " + std::to_string(q),
                 {{"q", q}}, "", "evidence",
                 [&] { return peisert_subfield_maximal(p, s); },
                 /*blocking=*/false);
    }
  }
  return results;
}

}  // namespace caygraph
