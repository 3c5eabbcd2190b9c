#pragma once

#include "ratsurf/blowup.hpp"
#include "ratsurf/error.hpp"
#include "ratsurf/hgeom.hpp"
#include "ratsurf/meshio.hpp"
#include "ratsurf/nets.hpp"
#include "ratsurf/polyform.hpp"
#include "ratsurf/split.hpp"
#include "ratsurf/surfaces.hpp"
