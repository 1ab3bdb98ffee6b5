#include "downcolor/designs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

namespace downcolor {

namespace {

constexpr std::uint64_t kU64Max = std::numeric_limits<std::uint64_t>::max();

std::uint64_t mul_checked(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kU64Max / a)
    throw CapExceeded("integer overflow in design parameters");
  return a * b;
}

std::uint64_t pow_checked(std::uint64_t base, std::uint32_t e) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < e; ++i)
    r = mul_checked(r, base);
  return r;
}

// Addition and multiplication tables over element indices.
struct FieldTables {
  explicit FieldTables(const FiniteField &f) : q(f.order()), add(q * q), mul(q * q) {
    std::vector<FieldElement> elems;
    elems.reserve(q);
    for (std::uint32_t i = 0; i < q; ++i)
      elems.push_back(f.element(i));
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b) {
        add[a * q + b] = f.index(f.add(elems[a], elems[b]));
        mul[a * q + b] = f.index(f.mul(elems[a], elems[b]));
      }
  }

  std::size_t q;
  std::vector<std::uint32_t> add;
  std::vector<std::uint32_t> mul;
};

} // namespace

AffineDesign affine_design(const FiniteField &f, std::uint32_t m, std::uint64_t point_cap) {
  if (m == 0)
    throw InvalidArgument("affine dimension must be positive");
  const std::uint64_t q = f.order();
  std::uint64_t v = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    v = mul_checked(v, q);
    if (v > point_cap)
      throw CapExceeded("AG(" + std::to_string(m) + "," + std::to_string(q) + ") has more than " +
                        std::to_string(point_cap) + " points");
  }
  // Point id = coordinates read as base-q digits, first coordinate most
  // significant.
  auto coords = [&](std::uint64_t id) {
    std::vector<std::uint32_t> c(m);
    for (std::uint32_t i = m; i-- > 0;) {
      c[i] = static_cast<std::uint32_t>(id % q);
      id /= q;
    }
    return c;
  };
  auto point_id = [&](const std::vector<std::uint32_t> &c) {
    std::uint64_t id = 0;
    for (auto x : c)
      id = id * q + x;
    return static_cast<VertexId>(id);
  };

  std::vector<std::string> labels;
  labels.reserve(v);
  for (std::uint64_t id = 0; id < v; ++id) {
    std::string label = "p";
    const auto c = coords(id);
    for (std::uint32_t i = 0; i < m; ++i) {
      if (i)
        label += '.';
      label += std::to_string(c[i]);
    }
    labels.push_back(std::move(label));
  }

  std::set<Hypergraph::HyperEdge> lines;
  if (m == 1) {
    // The whole line; skips building q x q tables for large q.
    Hypergraph::HyperEdge all(v);
    for (std::uint64_t id = 0; id < v; ++id)
      all[id] = static_cast<VertexId>(id);
    lines.insert(std::move(all));
  }
  std::optional<FieldTables> tables;
  if (m > 1)
    tables.emplace(f);

  // One direction per 1-dimensional subspace: first nonzero coordinate is 1.
  // Each line is generated from the first uncovered point in every parallel
  // class; the set also canonicalises and deduplicates.
  std::vector<char> covered(v);
  std::vector<std::uint32_t> point(m);
  for (std::uint64_t dir_id = 1; m > 1 && dir_id < v; ++dir_id) {
    const auto dir = coords(dir_id);
    const auto lead = std::find_if(dir.begin(), dir.end(), [](auto x) { return x != 0; });
    if (*lead != 1)
      continue;
    std::fill(covered.begin(), covered.end(), 0);
    for (std::uint64_t a = 0; a < v; ++a) {
      if (covered[a])
        continue;
      const auto base = coords(a);
      Hypergraph::HyperEdge line;
      line.reserve(q);
      for (std::uint32_t t = 0; t < q; ++t) {
        for (std::uint32_t i = 0; i < m; ++i)
          point[i] = tables->add[base[i] * q + tables->mul[t * q + dir[i]]];
        const VertexId id = point_id(point);
        covered[id] = 1;
        line.push_back(id);
      }
      std::sort(line.begin(), line.end());
      lines.insert(std::move(line));
    }
  }

  AffineDesign design{
      Hypergraph(v, std::vector<Hypergraph::HyperEdge>(lines.begin(), lines.end()),
                 std::move(labels)),
      DesignParams{}};
  const std::uint64_t qm1 = pow_checked(q, m - 1);
  design.params.v = v;
  design.params.block_size = q;
  design.params.lambda = 1;
  design.params.r = (v - 1) / (q - 1);
  design.params.b = qm1 * design.params.r;
  return design;
}

Hypergraph hkm_design(std::uint32_t k, std::uint32_t m) {
  if (k < 2 || m < 1)
    throw InvalidArgument("H(k,m) needs k >= 2 and m >= 1");
  std::vector<std::string> labels;
  for (std::uint32_t i = 1; i <= k; ++i)
    for (std::uint32_t j = 1; j <= m; ++j)
      labels.push_back("a" + std::to_string(i) + "_" + std::to_string(j));
  std::vector<Hypergraph::HyperEdge> edges;
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = i + 1; j < k; ++j) {
      Hypergraph::HyperEdge e;
      for (std::uint32_t t = 0; t < m; ++t) {
        e.push_back(i * m + t);
        e.push_back(j * m + t);
      }
      edges.push_back(std::move(e));
    }
  return Hypergraph(std::size_t{k} * m, std::move(edges), std::move(labels));
}

DesignParams validate_bibd(const Hypergraph &h) {
  using Kind = BibdError::Kind;
  if (!h.is_simple())
    throw BibdError(Kind::not_simple, "design has repeated or trivial blocks");
  if (h.edge_count() == 0)
    throw BibdError(Kind::no_blocks, "design has no blocks");

  DesignParams params;
  params.v = h.vertex_count();
  params.b = h.edge_count();
  params.block_size = h.edge(0).size();
  for (const auto &e : h.edges())
    if (e.size() != params.block_size)
      throw BibdError(Kind::non_uniform_blocks,
                      "block sizes differ (" + std::to_string(params.block_size) + " and " +
                          std::to_string(e.size()) + ")");
  if (params.block_size >= params.v)
    throw BibdError(Kind::complete_blocks, "blocks are not smaller than the point set");

  params.r = h.incident(0).size();
  for (VertexId v = 0; v < h.vertex_count(); ++v)
    if (h.incident(v).size() != params.r || params.r == 0)
      throw BibdError(Kind::non_constant_replication,
                      "point '" + h.label(v) + "' lies in " +
                          std::to_string(h.incident(v).size()) + " blocks, point '" +
                          h.label(0) + "' in " + std::to_string(params.r));

  // Pair counts in a packed upper triangle.
  const std::size_t n = h.vertex_count();
  auto slot = [n](std::size_t i, std::size_t j) { return i * (2 * n - i - 1) / 2 + (j - i - 1); };
  std::vector<std::uint32_t> cover(n * (n - 1) / 2, 0);
  for (const auto &e : h.edges())
    for (std::size_t a = 0; a < e.size(); ++a)
      for (std::size_t b = a + 1; b < e.size(); ++b)
        ++cover[slot(e[a], e[b])];
  params.lambda = cover.empty() ? 0 : cover[0];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (cover[slot(i, j)] != params.lambda || params.lambda == 0)
        throw BibdError(Kind::non_constant_pair_coverage,
                        "pair {" + h.label(static_cast<VertexId>(i)) + "," +
                            h.label(static_cast<VertexId>(j)) + "} lies in " +
                            std::to_string(cover[slot(i, j)]) + " blocks, expected " +
                            std::to_string(params.lambda));
  return params;
}

double r_plus(std::uint32_t sigma, double n) {
  if (sigma < 2)
    throw InvalidArgument("r+ needs sigma >= 2");
  if (!(n > 0))
    throw InvalidArgument("r+ needs n > 0");
  const double s = static_cast<double>(sigma) * (sigma - 1);
  const double root4 = std::sqrt(4 * s * n);
  const double x = std::sqrt(s * n) / (std::sqrt(1 + (s - 1) * (s - 1) / (4 * s * n)) + (s - 1) / root4);
  const double residual = x + x * (x - 1) / s - n;
  if (std::abs(residual) > 1e-9 * n)
    throw Error("r+ residual " + std::to_string(residual) + " exceeds tolerance");
  return x;
}

DsBounds ds_bounds(std::uint32_t sigma, double n) {
  const double s = static_cast<double>(sigma) * (sigma - 1);
  return DsBounds{r_plus(sigma, n) / (sigma + 1), std::sqrt(s) * std::sqrt(n) / (sigma + 1)};
}

DiscrepancyPoint cor4_point(std::uint32_t p, std::uint32_t k, std::uint32_t m) {
  if (!is_prime(p))
    throw InvalidArgument(std::to_string(p) + " is not prime");
  if (k == 0 || m == 0)
    throw InvalidArgument("cor4 point needs k >= 1 and m >= 1");
  const std::uint64_t sigma = pow_checked(p, k);
  if (sigma > std::numeric_limits<std::uint32_t>::max())
    throw CapExceeded("sigma does not fit in 32 bits");
  const std::uint64_t top = pow_checked(sigma, m);
  const std::uint64_t blocks = mul_checked(pow_checked(sigma, m - 1), (top - 1) / (sigma - 1));
  if (top > kU64Max - blocks)
    throw CapExceeded("integer overflow in design parameters");

  DiscrepancyPoint point;
  point.sigma = sigma;
  point.n = top + blocks;
  point.ratio = static_cast<double>(top) / static_cast<double>(sigma + 1);
  const auto bounds = ds_bounds(static_cast<std::uint32_t>(sigma), static_cast<double>(point.n));
  point.r_plus = r_plus(static_cast<std::uint32_t>(sigma), static_cast<double>(point.n));
  point.thm4_bound = bounds.thm4;
  point.cor2_bound = bounds.cor2;
  return point;
}

AffineDesign cor4_witness(std::uint32_t p, std::uint32_t k, std::uint32_t m,
                          std::uint64_t point_cap) {
  return affine_design(build_field(p, k), m, point_cap);
}

std::optional<Cor3Point> cor3_point(std::uint32_t sigma, std::uint64_t k) {
  if (sigma < 2)
    throw InvalidArgument("cor3 point needs sigma >= 2");
  if (k == 0)
    throw InvalidArgument("cor3 point needs k >= 1");
  const std::uint64_t kk = mul_checked(k, k - 1);
  if (kk % sigma != 0)
    return std::nullopt;

  Cor3Point out;
  const std::uint64_t v = mul_checked(k, sigma - 1) + 1;
  out.point.sigma = sigma;
  out.point.n = mul_checked(k, sigma - 1 + k) + 1 - kk / sigma;
  out.point.ratio = static_cast<double>(v) / (sigma + 1);
  const auto bounds = ds_bounds(sigma, static_cast<double>(out.point.n));
  out.point.r_plus = r_plus(sigma, static_cast<double>(out.point.n));
  out.point.thm4_bound = bounds.thm4;
  out.point.cor2_bound = bounds.cor2;
  if (k == std::uint64_t{sigma} + 1)
    if (auto pp = prime_power(sigma))
      out.witness = affine_design(build_field(pp->first, pp->second), 2);
  return out;
}

std::string discrepancy_csv(const std::vector<DiscrepancyPoint> &points) {
  std::ostringstream out;
  out.precision(12);
  out << "sigma,n,ratio,thm4_bound,cor2_bound\n";
  for (const auto &pt : points) {
    out << pt.sigma << ',' << pt.n << ',';
    if (pt.ratio >= 0)
      out << pt.ratio;
    out << ',' << pt.thm4_bound << ',' << pt.cor2_bound << '\n';
  }
  return out.str();
}

} // namespace downcolor
