#pragma once

#include "gtorsion/alexander.hpp"
#include "gtorsion/braid.hpp"
#include "gtorsion/certificate.hpp"
#include "gtorsion/certificate_io.hpp"
#include "gtorsion/dehn_twist.hpp"
#include "gtorsion/error.hpp"
#include "gtorsion/laurent.hpp"
#include "gtorsion/permutation.hpp"
#include "gtorsion/presentation.hpp"
#include "gtorsion/presets.hpp"
#include "gtorsion/quotient.hpp"
#include "gtorsion/reproduce.hpp"
#include "gtorsion/smith.hpp"
#include "gtorsion/tietze.hpp"
#include "gtorsion/word.hpp"
#include "gtorsion/word_io.hpp"
