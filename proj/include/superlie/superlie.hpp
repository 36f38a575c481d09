#pragma once

#include <superlie/cartan.hpp>
#include <superlie/classical.hpp>
#include <superlie/error.hpp>
#include <superlie/exactlin.hpp>
#include <superlie/family.hpp>
#include <superlie/genpair.hpp>
#include <superlie/grassmann.hpp>
#include <superlie/rootsys.hpp>
#include <superlie/scalar.hpp>
#include <superlie/serialize.hpp>
#include <superlie/superalgebra.hpp>
#include <superlie/sweep.hpp>
#include <superlie/weight.hpp>
