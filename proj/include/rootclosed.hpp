#pragma once

#include "rootclosed/brute_force.hpp"
#include "rootclosed/closed.hpp"
#include "rootclosed/dedupe.hpp"
#include "rootclosed/enumerate.hpp"
#include "rootclosed/error.hpp"
#include "rootclosed/export.hpp"
#include "rootclosed/golden.hpp"
#include "rootclosed/parallel.hpp"
#include "rootclosed/perm.hpp"
#include "rootclosed/regalg.hpp"
#include "rootclosed/rootset.hpp"
#include "rootclosed/rootsys.hpp"
#include "rootclosed/setspec.hpp"
#include "rootclosed/subsystems.hpp"
#include "rootclosed/topo.hpp"
#include "rootclosed/weyl.hpp"
