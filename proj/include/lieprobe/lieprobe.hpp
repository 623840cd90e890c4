#pragma once

#include "lieprobe/bitset.hpp"
#include "lieprobe/cliques.hpp"
#include "lieprobe/error.hpp"
#include "lieprobe/field.hpp"
#include "lieprobe/forms.hpp"
#include "lieprobe/generators.hpp"
#include "lieprobe/geometry.hpp"
#include "lieprobe/graph.hpp"
#include "lieprobe/graph_io.hpp"
#include "lieprobe/isomorphism.hpp"
#include "lieprobe/json_io.hpp"
#include "lieprobe/parallel.hpp"
#include "lieprobe/reconstruct.hpp"
#include "lieprobe/recognize.hpp"
#include "lieprobe/subspace.hpp"
