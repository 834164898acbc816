#include <sstream>

#include "cliffrep/blade.hpp"
#include "cliffrep/tables.hpp"

namespace cliffrep {

bool Report::passed() const noexcept {
  for (const auto& line : lines) {
    if (line.status == CheckStatus::fail) return false;
  }
  return true;
}

const CheckLine* Report::find(const std::string& name) const noexcept {
  for (const auto& line : lines) {
    if (line.name == name) return &line;
  }
  return nullptr;
}

void Report::append(const Report& other) { lines.insert(lines.end(), other.lines.begin(), other.lines.end()); }

std::ostream& operator<<(std::ostream& os, const Report& report) {
  for (const auto& line : report.lines) {
    const char* tag = line.status == CheckStatus::pass ? "PASS" : line.status == CheckStatus::fail ? "FAIL" : "SKIP";
    os << tag << "  " << line.name << "  [" << line.checked << " checked]";
    if (!line.detail.empty()) os << "  " << line.detail;
    os << '\n';
  }
  os << (report.passed() ? "all checks passed" : "FAILURES present") << '\n';
  return os;
}

namespace {

// Collects the first counterexample of a universally quantified check.
class Tally {
 public:
  explicit Tally(std::string name) { line_.name = std::move(name); }

  void count() { ++line_.checked; }

  template <typename... Args>
  void fail(const Args&... args) {
    if (line_.status == CheckStatus::fail) return;
    std::ostringstream os;
    os << "counterexample:";
    ((os << ' ' << args), ...);
    line_.status = CheckStatus::fail;
    line_.detail = os.str();
  }

  void witness(const std::string& text) {
    if (line_.status == CheckStatus::pass && line_.detail.empty()) line_.detail = text;
  }

  bool failed() const { return line_.status == CheckStatus::fail; }

  CheckLine done() { return line_; }

 private:
  CheckLine line_;
};

CheckLine skipped(std::string name, std::string why) {
  return {std::move(name), CheckStatus::skip, 0, std::move(why)};
}

std::string cell(Ordinal mu, Ordinal nu) {
  return "(" + std::to_string(mu) + "," + std::to_string(nu) + ")";
}

}  // namespace

Report check_table_lemmas(const MultTable& m, const ScalarTable& g) {
  const Signature& sig = m.signature();
  const unsigned n = sig.n();
  const auto dim = static_cast<Ordinal>(m.dim());
  const BasisOrder& order = basis_order(n);
  const auto mask = [&](Ordinal j) { return order.masks()[j - 1]; };
  Report report;

  {
    Tally t("identity row and column");
    for (Ordinal j = 1; j <= dim; ++j) {
      t.count();
      if (m.at(1, j) != TableEntry{1, j}) t.fail("row 1 at", cell(1, j));
      if (m.at(j, 1) != TableEntry{1, j}) t.fail("column 1 at", cell(j, 1));
    }
    report.lines.push_back(t.done());
  }

  {
    Tally t("diagonal equals blade squares");
    for (Ordinal mu = 1; mu <= dim; ++mu) {
      t.count();
      if (m.at(mu, mu) != TableEntry{g(mu), 1}) t.fail("at", cell(mu, mu));
    }
    report.lines.push_back(t.done());
  }

  {
    // Nonzero results in a row (column) are pairwise distinct; for r = 0 every row and
    // column is a permutation of the basis.
    Tally t("row and column distinctness");
    std::vector<Ordinal> seen(dim + 1);
    for (int pass = 0; pass < 2; ++pass) {
      for (Ordinal a = 1; a <= dim; ++a) {
        std::fill(seen.begin(), seen.end(), 0);
        Ordinal live = 0;
        for (Ordinal b = 1; b <= dim; ++b) {
          const Ordinal mu = pass == 0 ? a : b;
          const Ordinal nu = pass == 0 ? b : a;
          t.count();
          if (m.sign(mu, nu) == 0) continue;
          ++live;
          const Ordinal o = m.ordinal(mu, nu);
          if (seen[o] != 0) t.fail(pass == 0 ? "row" : "column", a, "repeats ordinal", o, "at", cell(mu, nu));
          seen[o] = b;
        }
        if (!sig.degenerate() && live != dim) t.fail(pass == 0 ? "row" : "column", a, "has a zero cell");
      }
    }
    report.lines.push_back(t.done());
  }

  {
    Tally t("scalar table is diagonal");
    for (Ordinal mu = 1; mu <= dim; ++mu) {
      for (Ordinal nu = 1; nu <= dim; ++nu) {
        t.count();
        const bool scalar = m.sign(mu, nu) != 0 && m.ordinal(mu, nu) == 1;
        if (scalar != (mu == nu && g(mu) != 0)) t.fail("scalar product at", cell(mu, nu));
      }
    }
    report.lines.push_back(t.done());
  }

  if (!sig.degenerate()) {
    Tally t("G G = I");
    for (Ordinal mu = 1; mu <= dim; ++mu) {
      t.count();
      if (g(mu) * g(mu) != 1) t.fail("entry", mu);
    }
    report.lines.push_back(t.done());
    report.lines.push_back(skipped("H = G^2 idempotent", "non-degenerate signature"));
  } else {
    report.lines.push_back(skipped("G G = I", "degenerate signature"));
    Tally t("H = G^2 idempotent");
    for (Ordinal mu = 1; mu <= dim; ++mu) {
      t.count();
      const int h = g(mu) * g(mu);
      if ((h != 0 && h != 1) || h * h != h) t.fail("entry", mu);
    }
    report.lines.push_back(t.done());
  }

  if (n <= 8) {
    // e_L e_M = m e_S, e_M e_L' = m' e_T with S, T disjoint, S before T and e_S e_T = +e_{S u T}:
    // then m_{L L'} = m_{L M} sigma_M m_{M L'}.
    Tally t("product structure identity");
    for (Ordinal l = 1; l <= dim && !t.failed(); ++l) {
      for (Ordinal mu = 1; mu <= dim; ++mu) {
        const int sm = g(mu);
        const int a = m.sign(l, mu);
        if (sm == 0 || a == 0) continue;
        const Ordinal os = m.ordinal(l, mu);
        const IndexSet s(mask(os));
        for (Ordinal lp = 1; lp <= dim; ++lp) {
          const int b = m.sign(mu, lp);
          const int c = m.sign(l, lp);
          if (b == 0 || c == 0) continue;
          const Ordinal ot = m.ordinal(mu, lp);
          const IndexSet tset(mask(ot));
          if (!(s & tset).empty() || os >= ot || reorder_sign(s, tset) != 1) continue;
          t.count();
          if (c != a * sm * b || m.ordinal(l, lp) != order.ordinal(s ^ tset)) {
            t.fail("lambda", l, "mu", mu, "lambda'", lp);
          } else {
            t.witness("witness lambda=" + std::to_string(l) + " mu=" + std::to_string(mu) +
                      " lambda'=" + std::to_string(lp));
          }
        }
      }
    }
    CheckLine line = t.done();
    if (line.status == CheckStatus::pass && line.checked == 0) {
      line.status = CheckStatus::fail;
      line.detail = "no triple satisfies the hypotheses";
    }
    report.lines.push_back(line);
  } else {
    report.lines.push_back(skipped("product structure identity", "n > 8"));
  }

  {
    Tally t("mirror ordinal");
    for (Ordinal l = 1; l <= dim; ++l) {
      t.count();
      const Ordinal mirrored = mirror_ordinal(n, l);
      if (mirrored + l != dim + 1 || mirror_ordinal(n, mirrored) != l) t.fail("lambda", l);
    }
    report.lines.push_back(t.done());
  }

  if (!sig.degenerate()) {
    // For e_s and each row M: L' = M^S^I, L'' = M^I.
    Tally t("dual structure identities");
    const std::uint32_t pseudo = sig.full_mask();
    const int sigma_i = g(dim);
    for (Ordinal s = 1; s <= dim; ++s) {
      const int sigma_s = g(s);
      const int q = duality_coefficient(sig, IndexSet(mask(s)));
      for (Ordinal mu = 1; mu <= dim; ++mu) {
        const Ordinal lp = order.ordinal_of_mask(mask(mu) ^ mask(s) ^ pseudo);
        const Ordinal lpp = order.ordinal_of_mask(mask(mu) ^ pseudo);
        t.count();
        const int m_lp_lpp = m.sign(lp, lpp);
        const int m_lpp_lp = m.sign(lpp, lp);
        const int m_lp_mu = m.sign(lp, mu);
        const int m_lpp_mu = m.sign(lpp, mu);
        const int m_mu_lpp = m.sign(mu, lpp);
        const bool swap_ok = m_lpp_lp == sigma_s * g(lp) * g(lpp) * m_lp_lpp;
        const bool row_ok = m_lp_mu == q * sigma_i * m_lp_lpp * g(lpp) * m_lpp_mu;
        const bool q_ok = q == sigma_s * g(lpp) * m_lpp_lp * g(lp) * m_lp_mu * g(mu) * m_mu_lpp;
        const bool cells_ok = m.ordinal(lp, lpp) == s && m.ordinal(lpp, lp) == s && m.ordinal(lpp, mu) == dim;
        if (!(swap_ok && row_ok && q_ok && cells_ok)) t.fail("s", s, "mu", mu);
      }
    }
    report.lines.push_back(t.done());
  } else {
    report.lines.push_back(skipped("dual structure identities", "degenerate signature"));
  }

  return report;
}

}  // namespace cliffrep
