#pragma once

#include "sumset/error.hpp"
#include "sumset/rational.hpp"
#include "sumset/point_set.hpp"
#include "sumset/bounds.hpp"
#include "sumset/compression.hpp"
#include "sumset/families.hpp"
#include "sumset/classify.hpp"
#include "sumset/search.hpp"
#include "sumset/convex.hpp"
#include "sumset/io.hpp"
#include "sumset/svg.hpp"
#include "sumset/cli.hpp"
