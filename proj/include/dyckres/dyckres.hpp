#pragma once

#include "dyckres/betti.hpp"
#include "dyckres/cache.hpp"
#include "dyckres/characters.hpp"
#include "dyckres/cli.hpp"
#include "dyckres/dyck.hpp"
#include "dyckres/enumeration.hpp"
#include "dyckres/errors.hpp"
#include "dyckres/integer.hpp"
#include "dyckres/partition.hpp"
#include "dyckres/serialize.hpp"
#include "dyckres/series.hpp"
