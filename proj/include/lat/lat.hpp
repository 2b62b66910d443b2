#pragma once

#include "lat/bounds.hpp"
#include "lat/cache.hpp"
#include "lat/certificate.hpp"
#include "lat/chromatic.hpp"
#include "lat/constructions.hpp"
#include "lat/error.hpp"
#include "lat/families.hpp"
#include "lat/graph.hpp"
#include "lat/graph_codec.hpp"
#include "lat/labeling.hpp"
#include "lat/solver.hpp"
#include "lat/transforms.hpp"
#include "lat/version.hpp"
