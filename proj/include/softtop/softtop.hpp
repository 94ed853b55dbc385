#pragma once

#include "softtop/error.hpp"
#include "softtop/soft_set.hpp"
#include "softtop/topology.hpp"
#include "softtop/open_classes.hpp"
#include "softtop/soft_maps.hpp"
#include "softtop/homeo_groups.hpp"
#include "softtop/search.hpp"
#include "softtop/space_file.hpp"
