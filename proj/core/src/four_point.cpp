// four_point.cpp — four-weight singlet counting over glued triangle pairs.
// SPDX-License-Identifier: MIT
#include "sunmult/four_point.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "sunmult/three_point.hpp"

namespace sunmult {

namespace {

void check_quad(const Weight& lambda, const Weight& mu, const Weight& nu, const Weight& sigma) {
  const int r = lambda.rank();
  if (r < 1) throw std::invalid_argument("rank must be at least 1");
  for (const Weight* w : {&lambda, &mu, &nu, &sigma}) {
    if (w->rank() != r) throw std::invalid_argument("weights must share one rank");
    if (!is_dominant(*w)) throw std::invalid_argument("weights must be dominant");
  }
}

long long checked_add(long long a, long long b) {
  long long out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("count exceeds 64 bits");
  return out;
}

long long checked_mul(long long a, long long b) {
  long long out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("count exceeds 64 bits");
  return out;
}

// Exact division by the dual-label denominator; the combinations divided here
// are integral whenever the integrality preconditions already checked hold.
long long exact_div(long long num, long long den) {
  if (num % den != 0) throw std::logic_error("non-integral coupling parameter");
  return num / den;
}

// Coefficient columns for the glued pair, aligned with four_point_order.
std::vector<std::vector<long long>> four_point_columns(int rank) {
  const int e = entry_count(rank);
  std::vector<std::vector<long long>> cols;
  for (const VarId& id : four_point_order(rank)) {
    std::vector<long long> col(2 * e, 0);
    if (id.kind == VarId::Kind::hexagon) {
      const BZTriangle v = virtual_triangle(rank, id.i, id.j);
      const int base = id.block == 0 ? 0 : e;
      for (int k = 0; k < e; ++k) col[base + k] = v.entries()[k];
    } else {
      const auto [left, right] = gluing_root(rank, id.i);
      for (int k = 0; k < e; ++k) {
        col[k] = -left.entries()[k];
        col[e + k] = -right.entries()[k];
      }
    }
    cols.push_back(std::move(col));
  }
  return cols;
}

std::vector<long long> diagram_entries(const GluedDiagram& d) {
  std::vector<long long> all;
  for (const BZTriangle& t : d.triangles)
    all.insert(all.end(), t.entries().begin(), t.entries().end());
  return all;
}

}  // namespace

std::vector<VarId> four_point_order(int rank) {
  std::vector<VarId> order;
  for (VarId id : three_point_order(rank)) {
    id.block = 0;
    order.push_back(id);
  }
  for (int i = rank; i >= 1; --i)
    order.push_back(VarId{VarId::Kind::gluing, 0, i, 0});
  std::vector<VarId> second = three_point_order(rank);
  std::reverse(second.begin(), second.end());
  for (VarId id : second) {
    id.block = 1;
    order.push_back(id);
  }
  return order;
}

BoundSystem four_point_bounds(const Weight& lambda, const Weight& mu, const Weight& nu,
                              const Weight& sigma) {
  check_quad(lambda, mu, nu, sigma);
  const GluedDiagram d0 = initial_diagram(lambda, mu, nu, sigma);
  return derive_bounds(diagram_entries(d0), four_point_columns(lambda.rank()),
                       four_point_order(lambda.rank()));
}

long long multiplicity4(const Weight& lambda, const Weight& mu, const Weight& nu,
                        const Weight& sigma) {
  check_quad(lambda, mu, nu, sigma);
  if (!root_lattice_check({lambda, mu, nu, sigma})) return 0;
  return count_points(four_point_bounds(lambda, mu, nu, sigma)).count;
}

long long multiplicity4_su2(long long lambda1, long long mu1, long long nu1, long long sigma1) {
  if (lambda1 < 0 || mu1 < 0 || nu1 < 0 || sigma1 < 0)
    throw std::invalid_argument("labels must be non-negative");
  const long long twice_s = lambda1 + mu1 + nu1 + sigma1;
  if (twice_s % 2 != 0) return 0;
  const long long s = twice_s / 2;
  const long long lo = std::max(0LL, s - lambda1 - mu1);
  const long long hi = std::min({s - lambda1, s - mu1, nu1, sigma1});
  return hi >= lo ? hi - lo + 1 : 0;
}

long long multiplicity4_su3(const Weight& lambda, const Weight& mu, const Weight& nu,
                            const Weight& sigma) {
  check_quad(lambda, mu, nu, sigma);
  if (lambda.rank() != 2) throw std::invalid_argument("rank must be 2");

  // Dual labels carried as numerators over 3.
  const DualLabels dl = dual_labels(lambda), dm = dual_labels(mu), dn = dual_labels(nu),
                   ds = dual_labels(sigma);
  for (int i = 1; i <= 2; ++i) {
    const long long s_num =
        dl.numerator(i) + dm.numerator(i) + dn.numerator(i) + ds.numerator(i);
    if (s_num % 3 != 0) return 0;
  }

  const long long n1 = exact_div(dl.numerator(2) + dm.numerator(2) - dn.numerator(1) - ds.numerator(1), 3);
  const long long n2 = exact_div(dl.numerator(1) + dm.numerator(1) - dn.numerator(2) - ds.numerator(2), 3);
  const long long bn1 = exact_div(-dl.numerator(2) - dm.numerator(1) + dm.numerator(2) +
                                      dn.numerator(1) + ds.numerator(1),
                                  3);
  const long long bn2 = exact_div(-dl.numerator(1) + dl.numerator(2) + dm.numerator(1) -
                                      dn.numerator(1) + dn.numerator(2) - ds.numerator(1) +
                                      ds.numerator(2),
                                  3);
  const long long bp1 = exact_div(dl.numerator(2) + dm.numerator(1) - dm.numerator(2) +
                                      dn.numerator(1) - dn.numerator(2) + ds.numerator(1) -
                                      ds.numerator(2),
                                  3);
  const long long bp2 = exact_div(dl.numerator(1) - dl.numerator(2) - dm.numerator(1) +
                                      dn.numerator(2) + ds.numerator(2),
                                  3);

  const long long la2 = lambda.label(2), mu1l = mu.label(1), mu2l = mu.label(2);
  const long long nu1l = nu.label(1), nu2l = nu.label(2);
  const long long sg1l = sigma.label(1), sg2l = sigma.label(2);

  long long total = 0;
  for (long long v1 = 0; v1 <= std::min(la2, mu1l); ++v1)
    for (long long g2 = -n2 + v1; g2 <= bp2 + v1; ++g2)
      for (long long g1 = std::max(-bn2 + v1 + g2, -n1 + v1);
           g1 <= std::min(bn1 + v1, bp1 + g2 - v1); ++g1) {
        const long long lo = std::max({0LL, -sg2l + g2, -nu1l + g1});
        const long long hi =
            std::min({nu2l, sg1l, g1, g2, nu2l + g1 - g2, sg1l - g1 + g2});
        if (hi >= lo) total = checked_add(total, hi - lo + 1);
      }
  return total;
}

long long multiplicity4_su4(const Weight& lambda, const Weight& mu, const Weight& nu,
                            const Weight& sigma) {
  check_quad(lambda, mu, nu, sigma);
  if (lambda.rank() != 3) throw std::invalid_argument("rank must be 3");

  const DualLabels dl = dual_labels(lambda), dm = dual_labels(mu), dn = dual_labels(nu),
                   ds = dual_labels(sigma);
  for (int i = 1; i <= 3; ++i) {
    const long long s_num =
        dl.numerator(i) + dm.numerator(i) + dn.numerator(i) + ds.numerator(i);
    if (s_num % 4 != 0) return 0;
  }

  const CouplingParams cp = coupling_params(lambda, mu, nu + sigma);
  const long long n1 = cp.n[0], n2 = cp.n[1], n3 = cp.n[2];
  const long long bn1 = cp.N[0], bn2 = cp.N[1], bn3 = cp.N[2];
  const long long bp1 = cp.Nprime[0], bp2 = cp.Nprime[1], bp3 = cp.Nprime[2];

  const long long la2 = lambda.label(2), la3 = lambda.label(3);
  const long long mu1l = mu.label(1), mu2l = mu.label(2);
  const long long nu1l = nu.label(1), nu2l = nu.label(2), nu3l = nu.label(3);
  const long long sg1l = sigma.label(1), sg2l = sigma.label(2), sg3l = sigma.label(3);

  long long total = 0;
  for (long long a = 0; a <= std::min(la3, mu1l); ++a)
    for (long long b = a; b <= la2 + a; ++b)
      for (long long c = std::max(-mu1l + b + a, a);
           c <= std::min(la3 + b - a, mu2l + a); ++c)
        for (long long g3 = -n3 + b; g3 <= bp3 + b; ++g3)
          for (long long g2 = std::max(-bn3 + g3 + b, -n2 + c + b - a);
               g2 <= bp2 + g3 + c - b; ++g2)
            for (long long g1 = std::max(-n1 + c, -bn2 + g2 + c - b);
                 g1 <= std::min(bp1 + g2 - c, bn1 + c); ++g1)
              for (long long d = -sg3l + g3; d <= std::min(nu3l + g2 - g3, g3); ++d)
                for (long long e = std::max(-nu1l + g1, -sg2l + d + g2 - g3);
                     e <= std::min({nu2l + d + g1 - g2, sg1l - g1 + g2, g1}); ++e) {
                  const long long lo = std::max({0LL, -nu2l + e, -sg2l + d, e + d - g2});
                  const long long hi =
                      std::min({nu3l, sg1l, e, d, nu3l + e - d, sg1l - e + d});
                  if (hi >= lo) total = checked_add(total, hi - lo + 1);
                }
  return total;
}

Channel4Result channel_decompose4(const Weight& lambda, const Weight& mu, const Weight& nu,
                                  const Weight& sigma) {
  check_quad(lambda, mu, nu, sigma);
  Channel4Result res;
  if (!root_lattice_check({lambda, mu, nu, sigma})) return res;
  for (const Weight& rho : dominant_weights_below(lambda + mu)) {
    const long long left = multiplicity3(lambda, mu, conjugate(rho));
    if (left == 0) continue;
    const long long right = multiplicity3(rho, nu, sigma);
    if (right == 0) continue;
    const long long product = checked_mul(left, right);
    res.terms.push_back(ChannelTerm{rho, left, right, product});
    res.total = checked_add(res.total, product);
  }
  return res;
}

std::vector<CoefficientVector4> enumerate4(const Weight& lambda, const Weight& mu,
                                           const Weight& nu, const Weight& sigma) {
  check_quad(lambda, mu, nu, sigma);
  std::vector<CoefficientVector4> out;
  if (!root_lattice_check({lambda, mu, nu, sigma})) return out;
  const BoundSystem bs = four_point_bounds(lambda, mu, nu, sigma);
  const int r = lambda.rank();
  for_each_point(bs, [&](const std::vector<long long>& x) {
    CoefficientVector4 cv;
    cv.rank = r;
    cv.g.assign(r, 0);
    for (std::size_t k = 0; k < bs.vars.size(); ++k) {
      const VarId& id = bs.vars[k].id;
      if (id.kind == VarId::Kind::hexagon)
        (id.block == 0 ? cv.v1 : cv.v2)[{id.i, id.j}] = x[k];
      else
        cv.g[id.i - 1] = x[k];
    }
    out.push_back(std::move(cv));
  });
  return out;
}

long long multiplicity4_box(const Weight& lambda, const Weight& mu, const Weight& nu,
                            const Weight& sigma, bool pruned) {
  check_quad(lambda, mu, nu, sigma);
  if (!root_lattice_check({lambda, mu, nu, sigma})) return 0;
  const int r = lambda.rank();
  const GluedDiagram d0 = initial_diagram(lambda, mu, nu, sigma);
  const std::vector<long long> init = diagram_entries(d0);

  long long box = 0;
  for (long long v : init) box = std::max(box, std::llabs(v));
  for (const Weight* w : {&lambda, &mu, &nu, &sigma})
    for (long long l : w->labels) box += l;
  // Keep a positive radius so the boundary-touch validation stays meaningful
  // for the all-zero query, whose only solution is the origin.
  box = std::max(box, 1LL);

  if (pruned) {
    const CountResult res =
        count_points(derive_bounds(init, four_point_columns(r), four_point_order(r), box));
    if (res.touched_clamp) throw std::logic_error("search box too small");
    return res.count;
  }

  // Plain odometer scan of the full box; exponential, for validation only.
  const std::vector<std::vector<long long>> cols = four_point_columns(r);
  const int nvars = static_cast<int>(cols.size());
  std::vector<long long> x(nvars, -box);
  long long count = 0;
  while (true) {
    bool ok = true;
    for (std::size_t e = 0; e < init.size() && ok; ++e) {
      long long v = init[e];
      for (int k = 0; k < nvars; ++k) v += x[k] * cols[k][e];
      ok = v >= 0;
    }
    if (ok) count = checked_add(count, 1);
    int k = nvars - 1;
    while (k >= 0 && x[k] == box) x[k--] = -box;
    if (k < 0) break;
    ++x[k];
  }
  return count;
}

ConeReport cone_su2(long long lambda1, long long mu1, long long nu1, long long sigma1) {
  ConeReport rep;
  rep.S_denominator = 2;
  const long long s_num = lambda1 + mu1 + nu1 + sigma1;
  rep.S_numerators = {s_num};
  auto require = [&rep](bool ok, const char* what) {
    if (!ok) rep.violated.push_back(what);
  };
  require(s_num % 2 == 0, "S integral");
  require(lambda1 >= 0, "lambda1 >= 0");
  require(mu1 >= 0, "mu1 >= 0");
  require(nu1 >= 0, "nu1 >= 0");
  require(sigma1 >= 0, "sigma1 >= 0");
  require(s_num - 2 * lambda1 >= 0, "S - lambda1 >= 0");
  require(s_num - 2 * mu1 >= 0, "S - mu1 >= 0");
  require(s_num - 2 * nu1 >= 0, "S - nu1 >= 0");
  require(s_num - 2 * sigma1 >= 0, "S - sigma1 >= 0");
  rep.member = rep.violated.empty();
  return rep;
}

ConeReport cone_su3(const Weight& lambda, const Weight& mu, const Weight& nu,
                    const Weight& sigma) {
  const int r = lambda.rank();
  if (r != 2 || mu.rank() != 2 || nu.rank() != 2 || sigma.rank() != 2)
    throw std::invalid_argument("rank must be 2");
  ConeReport rep;
  rep.S_denominator = 3;
  const DualLabels dl = dual_labels(lambda), dm = dual_labels(mu), dn = dual_labels(nu),
                   ds = dual_labels(sigma);
  const long long s_num[2] = {
      dl.numerator(1) + dm.numerator(1) + dn.numerator(1) + ds.numerator(1),
      dl.numerator(2) + dm.numerator(2) + dn.numerator(2) + ds.numerator(2)};
  rep.S_numerators = {s_num[0], s_num[1]};
  auto require = [&rep](bool ok, const std::string& what) {
    if (!ok) rep.violated.push_back(what);
  };
  require(s_num[0] % 3 == 0, "S1 integral");
  require(s_num[1] % 3 == 0, "S2 integral");
  require(s_num[0] >= 0, "S1 >= 0");
  require(s_num[1] >= 0, "S2 >= 0");

  const char* names[4] = {"lambda", "mu", "nu", "sigma"};
  const Weight* ws[4] = {&lambda, &mu, &nu, &sigma};
  for (int w = 0; w < 4; ++w)
    for (int i = 1; i <= 2; ++i)
      require(ws[w]->label(i) >= 0,
              std::string(names[w]) + std::to_string(i) + " >= 0");
  for (int i = 0; i < 2; ++i) {
    const std::string si = "S" + std::to_string(i + 1);
    for (int w = 0; w < 4; ++w)
      require(s_num[i] - 3 * (ws[w]->label(1) + ws[w]->label(2)) >= 0,
              si + " - " + names[w] + "1 - " + names[w] + "2 >= 0");
    for (int w = 0; w < 4; ++w)
      for (int u = w + 1; u < 4; ++u)
        require(s_num[i] - 3 * (ws[w]->label(i + 1) + ws[u]->label(i + 1)) >= 0,
                si + " - " + names[w] + std::to_string(i + 1) + " - " + names[u] +
                    std::to_string(i + 1) + " >= 0");
  }
  rep.member = rep.violated.empty();
  return rep;
}

}  // namespace sunmult
