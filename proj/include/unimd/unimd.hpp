#pragma once

#include "unimd/graph.hpp"
#include "unimd/decomposition.hpp"
#include "unimd/landmarks.hpp"
#include "unimd/configurations.hpp"
#include "unimd/oracle.hpp"
#include "unimd/dimension.hpp"
#include "unimd/corpus.hpp"
