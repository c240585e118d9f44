#pragma once

#include "pathhom/chain.hpp"
#include "pathhom/chain_complex.hpp"
#include "pathhom/constructions.hpp"
#include "pathhom/cross.hpp"
#include "pathhom/digraph.hpp"
#include "pathhom/errors.hpp"
#include "pathhom/forms.hpp"
#include "pathhom/holes.hpp"
#include "pathhom/homology.hpp"
#include "pathhom/io.hpp"
#include "pathhom/l1.hpp"
#include "pathhom/linalg.hpp"
#include "pathhom/path_complex.hpp"
#include "pathhom/rational.hpp"
#include "pathhom/reduce.hpp"
#include "pathhom/sparse.hpp"
