#pragma once

// Interval families (the finite stand-ins for "all cubes Q"), exact
// prefix-sum integration against grid cells, and shifted dyadic lattices.

#include <string>
#include <vector>

#include "wnlab/grid.hpp"

namespace wnlab {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double length() const { return hi - lo; }
  bool contains(double x) const { return x >= lo && x < hi; }
};

struct IntervalFamily {
  std::vector<Interval> sets;
  std::string descriptor;
};

// Exact integrals of a piecewise-constant (per grid cell) function over
// arbitrary intervals; partial cells are weighted by overlap fraction.
class PrefixIntegrator {
 public:
  PrefixIntegrator(const Grid& g, const std::vector<double>& cell_values);

  double prefix_at(double x) const;                 // integral over [-R, x]
  double integral(double lo, double hi) const;      // clamped to [-R, R]
  double average(double lo, double hi) const;       // integral / overlap length

 private:
  const Grid* grid_;
  std::vector<double> prefix_;  // at cell edges
  const std::vector<double>* vals_;
  std::vector<double> owned_;
};

// Shifted dyadic lattice over a root interval: level l in {0..depth} splits
// the (shifted) root into 2^l half-open cubes.
struct DyadicFamily {
  double root_lo = 0.0;
  double root_len = 0.0;
  int depth = 1;
  std::vector<double> shifts{0.0};

  DyadicFamily(double lo, double len, int d, std::vector<double> sh = {0.0});

  Interval cube(int level, long index, double shift) const;
  long cubes_at(int level) const { return 1L << level; }

  // all cubes of all shifts; levels 1..depth, plus the root when requested
  IntervalFamily sets(bool include_root = true) const;
};

// every grid-aligned interval [edge_i, edge_j), i < j (quadratic count)
IntervalFamily all_grid_intervals(const Grid& g, std::size_t stride = 1);

// origin-anchored sets (0, b) with b running over positive grid edges
IntervalFamily origin_anchored_family(const Grid& g);

// dyadic-in-coordinates cover of [-R, R]: levels 0..depth of [-R, R] treated
// as a root cube, with optional one-third shifts; cubes narrower than the
// local cell size are dropped (they contain at most one node anyway)
IntervalFamily coordinate_dyadic_family(const Grid& g, int depth,
                                        bool one_third_shift = true);

}  // namespace wnlab
