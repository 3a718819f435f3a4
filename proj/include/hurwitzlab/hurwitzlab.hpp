#pragma once

#include "hurwitzlab/characters.hpp"
#include "hurwitzlab/ginibre.hpp"
#include "hurwitzlab/hurwitz.hpp"
#include "hurwitzlab/matrixfn.hpp"
#include "hurwitzlab/oracle.hpp"
#include "hurwitzlab/partition.hpp"
#include "hurwitzlab/powersum.hpp"
#include "hurwitzlab/rational.hpp"
#include "hurwitzlab/report.hpp"
#include "hurwitzlab/rng.hpp"
#include "hurwitzlab/schur.hpp"
#include "hurwitzlab/series.hpp"
#include "hurwitzlab/theorems.hpp"
