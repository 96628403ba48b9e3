#pragma once

#include <prophom/core/rational.hpp>

#include <prophom/freealg/assoc_poly.hpp>
#include <prophom/freealg/lie_poly.hpp>
#include <prophom/freealg/pbw.hpp>
#include <prophom/freealg/sym_lie.hpp>
#include <prophom/freealg/tensor_lie.hpp>
#include <prophom/freealg/text.hpp>
#include <prophom/freealg/word.hpp>

#include <prophom/symgrp/antisym.hpp>
#include <prophom/symgrp/characters.hpp>
#include <prophom/symgrp/combinatorics.hpp>
#include <prophom/symgrp/permutation.hpp>

#include <prophom/exactlin/complex_window.hpp>
#include <prophom/exactlin/homology.hpp>
#include <prophom/exactlin/market.hpp>
#include <prophom/exactlin/rank.hpp>
#include <prophom/exactlin/sparse_matrix.hpp>
#include <prophom/exactlin/subspace.hpp>

#include <prophom/complexes/assoc_side.hpp>
#include <prophom/complexes/dims.hpp>
#include <prophom/complexes/elementary.hpp>
#include <prophom/complexes/factorization.hpp>
#include <prophom/complexes/koszul.hpp>
#include <prophom/complexes/lie_side.hpp>
#include <prophom/complexes/pbw_check.hpp>
#include <prophom/complexes/poisson.hpp>
#include <prophom/complexes/tensor.hpp>
#include <prophom/complexes/wedge.hpp>
