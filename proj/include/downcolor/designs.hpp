#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "downcolor/error.hpp"
#include "downcolor/finite_field.hpp"
#include "downcolor/hypergraph.hpp"

namespace downcolor {

struct DesignParams {
  std::uint64_t v = 0;
  std::uint64_t b = 0;
  std::uint64_t r = 0;
  std::uint64_t block_size = 0;
  std::uint64_t lambda = 0;

  friend bool operator==(const DesignParams &, const DesignParams &) = default;
};

struct AffineDesign {
  Hypergraph hypergraph;
  DesignParams params;
};

// Points of AG(m, q) are the m-tuples over f, labelled "p" followed by the
// coordinate indices joined with '.'; edges are the lines {a + t b : t in f},
// each listed once, sorted. Throws CapExceeded beyond `point_cap` points.
AffineDesign affine_design(const FiniteField &f, std::uint32_t m,
                           std::uint64_t point_cap = 4096);

// H(k, m): groups A_1..A_k of m vertices ("a<i>_<j>", 1-based) and the edges
// A_i u A_j for i < j.
Hypergraph hkm_design(std::uint32_t k, std::uint32_t m);

class BibdError : public VerificationError {
public:
  enum class Kind {
    not_simple,
    no_blocks,
    non_uniform_blocks,
    complete_blocks,
    non_constant_replication,
    non_constant_pair_coverage,
  };

  BibdError(Kind kind, const std::string &what) : VerificationError(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

private:
  Kind kind_;
};

// Checks uniform block size below v, constant replication r > 0 and constant
// pair coverage lambda > 0. Throws BibdError naming the first failed clause.
DesignParams validate_bibd(const Hypergraph &h);

// Positive root of x + x(x-1)/(sigma(sigma-1)) = n, via the cancellation-free
// form sqrt(s n) / (sqrt(1 + (s-1)^2/(4 s n)) + (s-1)/sqrt(4 s n)), s = sigma(sigma-1).
double r_plus(std::uint32_t sigma, double n);

struct DsBounds {
  double thm4 = 0; // r_plus / (sigma + 1)
  double cor2 = 0; // sqrt(sigma(sigma-1)) sqrt(n) / (sigma + 1)
};

DsBounds ds_bounds(std::uint32_t sigma, double n);

// One (sigma, n) point of the strong-coloring discrepancy: the ratio
// chi_s / (sigma + 1) achieved by a construction, with both upper bounds.
struct DiscrepancyPoint {
  std::uint64_t sigma = 0;
  std::uint64_t n = 0;
  double ratio = 0;
  double r_plus = 0;
  double thm4_bound = 0;
  double cor2_bound = 0;
};

// sigma = p^k, n = sigma^m + sigma^(m-1)(sigma^m - 1)/(sigma - 1),
// ratio = sigma^m / (sigma + 1), realised by AG(m, sigma).
DiscrepancyPoint cor4_point(std::uint32_t p, std::uint32_t k, std::uint32_t m);
AffineDesign cor4_witness(std::uint32_t p, std::uint32_t k, std::uint32_t m,
                          std::uint64_t point_cap = 4096);

struct Cor3Point {
  DiscrepancyPoint point;
  // AG(2, sigma) when k = sigma + 1 and sigma is a prime power.
  std::optional<AffineDesign> witness;
};

// Formula for a lambda = 1 design on v = k(sigma-1)+1 points, applicable when
// k^2 = k (mod sigma). Existence is not constructed in general.
std::optional<Cor3Point> cor3_point(std::uint32_t sigma, std::uint64_t k);

// CSV with header sigma,n,ratio,thm4_bound,cor2_bound. A point with ratio < 0
// is written with the ratio cell blank.
std::string discrepancy_csv(const std::vector<DiscrepancyPoint> &points);

} // namespace downcolor
