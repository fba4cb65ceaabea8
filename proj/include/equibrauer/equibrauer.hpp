// Everything: the library, scenario parsing, reports, commands and the self-test.
#pragma once

#include "corpus.hpp"
#include "oracle.hpp"
#include "scenario.hpp"
#include "witness.hpp"
#include "commands.hpp"
#include "selftest.hpp"
