#pragma once

#include "srct/composition.hpp"
#include "srct/permutation.hpp"
#include "srct/tableau.hpp"
#include "srct/hecke.hpp"
#include "srct/classes.hpp"
#include "srct/poset.hpp"
#include "srct/qsym.hpp"
#include "srct/linalg.hpp"
#include "srct/modrep.hpp"
#include "srct/shifted.hpp"
#include "srct/parallel.hpp"
