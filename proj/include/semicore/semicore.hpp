#pragma once

#include "semicore/dense.hpp"
#include "semicore/digraph.hpp"
#include "semicore/errors.hpp"
#include "semicore/extremal.hpp"
#include "semicore/generators.hpp"
#include "semicore/io.hpp"
#include "semicore/oracle.hpp"
#include "semicore/peel.hpp"
#include "semicore/rational.hpp"
#include "semicore/rng.hpp"
