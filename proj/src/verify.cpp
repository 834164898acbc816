#include <sstream>

#include "cliffrep/matrep.hpp"

namespace cliffrep {
namespace {

CheckLine line(std::string name) {
  CheckLine l;
  l.name = std::move(name);
  return l;
}

void record_failure(CheckLine& l, const std::string& where) {
  if (l.status == CheckStatus::fail) return;
  l.status = CheckStatus::fail;
  l.detail = "first failure at " + where;
}

std::string at(Ordinal s) { return "s=" + std::to_string(s); }
std::string at(Ordinal s, Ordinal t) { return "s=" + std::to_string(s) + " t=" + std::to_string(t); }

}  // namespace

Report verify_representation(const Signature& sig) {
  const RepContext ctx(sig);
  const auto dim = static_cast<Ordinal>(ctx.dim());
  const unsigned n = sig.n();
  const ScalarTable& g = ctx.scalars();
  const SparseSignedMatrix gm = SparseSignedMatrix::diagonal(g.diag());
  const SparseSignedMatrix id = SparseSignedMatrix::identity(dim);

  std::vector<SparseSignedMatrix> a(dim + 1);
  std::vector<SparseSignedMatrix> e(dim + 1);
  for (Ordinal s = 1; s <= dim; ++s) {
    a[s] = ctx.coefficients(s);
    e[s] = gm * a[s];
  }

  Report report;

  {
    CheckLine l = line("E_s is a signed permutation matrix");
    for (Ordinal s = 1; s <= dim; ++s) {
      ++l.checked;
      if (!e[s].is_signed_permutation()) record_failure(l, at(s));
      if (n <= 6) {
        const RepMatrix dense = ctx.rep_blade(s);
        for (std::size_t i = 0; i < dim; ++i) {
          for (std::size_t j = 0; j < dim; ++j) {
            if (dense(i, j) != e[s].value(i, j)) record_failure(l, at(s) + " dense entry");
          }
        }
      }
    }
    report.lines.push_back(l);
  }

  {
    CheckLine l = line("E_s E_s = sigma_s I");
    for (Ordinal s = 1; s <= dim; ++s) {
      ++l.checked;
      if (!(e[s] * e[s] == id.scaled(g(s)))) record_failure(l, at(s));
    }
    report.lines.push_back(l);
  }

  {
    // Generators are the grade-1 ordinals 2..n+1.
    CheckLine l = line("generators anticommute");
    for (Ordinal s = 2; s <= n + 1; ++s) {
      for (Ordinal t = 2; t <= n + 1; ++t) {
        if (s == t) continue;
        ++l.checked;
        if (!(e[s] * e[t] == (e[t] * e[s]).scaled(-1))) record_failure(l, at(s, t));
      }
    }
    report.lines.push_back(l);
  }

  {
    CheckLine l = line("A_s and E_s orthogonal");
    for (Ordinal s = 1; s <= dim; ++s) {
      ++l.checked;
      if (!a[s].is_signed_permutation() || !(a[s].transpose() * a[s] == id)) record_failure(l, at(s) + " (A_s)");
      if (!(e[s].transpose() * e[s] == id)) record_failure(l, at(s) + " (E_s)");
    }
    report.lines.push_back(l);
  }

  {
    CheckLine l = line("G A_s = sigma_s A_s^T G");
    for (Ordinal s = 1; s <= dim; ++s) {
      ++l.checked;
      if (!(gm * a[s] == (a[s].transpose() * gm).scaled(g(s)))) record_failure(l, at(s));
    }
    report.lines.push_back(l);
  }

  {
    CheckLine l = line("symmetric iff sigma_s = +1, antisymmetric iff -1");
    for (Ordinal s = 1; s <= dim; ++s) {
      ++l.checked;
      if (!(e[s].transpose() == e[s].scaled(g(s)))) record_failure(l, at(s));
    }
    report.lines.push_back(l);
  }

  {
    CheckLine l = line("basis homomorphism pi(e_S e_T) = pi(e_S) pi(e_T)");
    const MultTable& m = ctx.table();
    for (Ordinal s = 1; s <= dim; ++s) {
      for (Ordinal t = 1; t <= dim; ++t) {
        ++l.checked;
        if (!(e[s] * e[t] == e[m.ordinal(s, t)].scaled(m.sign(s, t)))) record_failure(l, at(s, t));
      }
    }
    report.lines.push_back(l);
  }

  return report;
}

}  // namespace cliffrep
