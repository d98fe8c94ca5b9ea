// Generated by tests/oracles/generate_oracles.py (mpmath, 50 digits). Do not edit.
#pragma once

#include <complex>

namespace oracle {

using C = std::complex<double>;

inline constexpr double kInvFactorialSquaredSum40 = 2.2795853023360672674;

struct GCase { C a, b, c, d, z, value; };
inline const GCase kGCases[] = {
    {C{0.5, 0.25}, C{-0.2999999999999999889, 0.10000000000000000555}, C{1.5, -0.5}, C{0.69999999999999995559, 0.2000000000000000111}, C{0.9000000000000000222, -0.4000000000000000222}, C{1.3367421851381787275, 0.15408383453261768394}},
    {C{2.0, 0.0}, C{1.0, 0.0}, C{3.0, 0.0}, C{1.0, 0.0}, C{-1.25, 0.0}, C{0.45486618504265251106, 0.0}},
    {C{-1.5, 1.0}, C{0.0, 0.0}, C{2.0, 0.0}, C{1.0, 0.0}, C{0.2999999999999999889, 1.6999999999999999556}, C{0.015766026802277411607, -0.45687967868411523615}},
    {C{1.0, -1.0}, C{0.5, 0.5}, C{0.25, 0.0}, C{0.0, 0.0}, C{0.2000000000000000111, 0.10000000000000000555}, C{3.6219125591855044, 0.000000000000000080422614327735443515}},
    {C{0.75, 0.0}, C{1.25, -0.5}, C{4.0, 1.0}, C{2.0, 0.0}, C{-2.5, 1.5}, C{0.64948569718800638063, 0.17190024679584904406}},
};

struct KummerCase { C a, b, z, value; };
inline const KummerCase kKummerCases[] = {
    {C{0.5, 0.0}, C{1.5, 0.0}, C{1.0, 0.0}, C{1.4626517459071816088, 0.0}},
    {C{-2.2999999999999998224, 0.69999999999999995559}, C{3.0, 0.0}, C{1.5, -2.0}, C{-0.50182444449836155655, 1.3116209340108899222}},
    {C{1.1999999999999999556, -0.4000000000000000222}, C{0.5, 0.5}, C{-3.0, 0.5}, C{-0.44607015190333721174, 0.47595812008602543356}},
    {C{4.0, 0.0}, C{11.0, 0.0}, C{6.0, 0.0}, C{12.808562013932826221, 0.0}},
};

struct BesselCase { int n; C z, value; };
inline const BesselCase kBesselCases[] = {
    {0, C{2.0, 0.0}, C{2.2795853023360672674, 0.0}},
    {1, C{0.5, 0.0}, C{0.25789430539089631636, 0.0}},
    {3, C{1.5, -2.0}, C{-0.29577024364623821251, 0.0066552231307277044393}},
    {7, C{4.0, 1.0}, C{-0.018547197645563394229, 0.046161236443810302816}},
    {20, C{10.0, 0.0}, C{0.00012507997356449475591, 0.0}},
    {2, C{-3.0, 0.25}, C{2.1698264578984237517, -0.60804377232807288075}},
};

struct PCase { C s, t, r; int m; C z, value; };
inline const PCase kPCases[] = {
    {C{1.0, 0.0}, C{0.0, 0.0}, C{0.0, 0.0}, 0, C{0.5, 0.5}, C{1.0, 0.0}},
    {C{0.2999999999999999889, -0.2000000000000000111}, C{-0.10000000000000000555, 0.4000000000000000222}, C{1.1000000000000000888, 0.5999999999999999778}, 3, C{-0.69999999999999995559, 0.2000000000000000111}, C{0.69778486579881372514, 0.076629016679399710026}},
    {C{2.0, 0.0}, C{-2.0, 0.0}, C{-1.0, 0.5}, 5, C{1.8999999999999999112, -0.2999999999999999889}, C{11.485108400471739798, -2.5649545849650445367}},
    {C{-1.5, 0.5}, C{0.25, -1.0}, C{0.5, 0.0}, 12, C{3.0, 2.0}, C{0.0029311646220928657313, -0.0019432439824669820398}},
};

}  // namespace oracle
