#pragma once

#include "vanish/boolfunc.hpp"
#include "vanish/covers.hpp"
#include "vanish/cycliccode.hpp"
#include "vanish/dopoly.hpp"
#include "vanish/gf2n.hpp"
#include "vanish/parallel.hpp"
#include "vanish/vflats.hpp"
