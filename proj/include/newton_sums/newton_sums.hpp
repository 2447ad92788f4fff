#ifndef NEWTON_SUMS_NEWTON_SUMS_HPP
#define NEWTON_SUMS_NEWTON_SUMS_HPP

#include <newton_sums/bench.hpp>
#include <newton_sums/newton.hpp>
#include <newton_sums/parser.hpp>
#include <newton_sums/polynomial.hpp>
#include <newton_sums/roots.hpp>
#include <newton_sums/scalar.hpp>
#include <newton_sums/series.hpp>

#endif // NEWTON_SUMS_NEWTON_SUMS_HPP
