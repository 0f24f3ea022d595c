#pragma once

#include "construct.hpp"
#include "cyclic.hpp"
#include "epclass.hpp"
#include "intset.hpp"
#include "json.hpp"
#include "parse.hpp"
#include "sumset.hpp"
#include "verify.hpp"
