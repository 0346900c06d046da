#pragma once

#include "vnr/error.hpp"
#include "vnr/group.hpp"
#include "vnr/config_space.hpp"
#include "vnr/cellular_automaton.hpp"
#include "vnr/finite_field.hpp"
#include "vnr/polynomial.hpp"
#include "vnr/factorization.hpp"
#include "vnr/group_ring.hpp"
#include "vnr/witnesses.hpp"
#include "vnr/io.hpp"
