#pragma once

#include <boxrank/chains.hpp>
#include <boxrank/enumerate.hpp>
#include <boxrank/genfun.hpp>
#include <boxrank/io.hpp>
#include <boxrank/mcd.hpp>
#include <boxrank/poly.hpp>
#include <boxrank/poset.hpp>
