#pragma once

// Published reference values (9 decimals) for the two benchmark problems.
//
// Deviation table: Q = 2, p = 5, basis 150, rho = 2; entry [k][l] is
// E_k - E_k^Coulomb for l = 0..3.
// Valence table: Q = 1, d = 5, p = 3, basis 150, rho = 2; per m the lowest
// four positive dipole channels with gamma and -E_0..-E_3.

#include <array>

namespace reference {

inline constexpr std::array<std::array<double, 4>, 8> kDeviation = {{
    {1.689836518, 0.251015112, 0.050288629, 0.011582200},
    {0.337411507, 0.084819527, 0.021878946, 0.005967795},
    {0.123110800, 0.038411932, 0.011425659, 0.003470897},
    {0.058497441, 0.020566781, 0.006704777, 0.002194508},
    {0.032357265, 0.012276277, 0.004266330, 0.001474931},
    {0.019771611, 0.007908751, 0.002881243, 0.001038673},
    {0.012964075, 0.005391547, 0.002036676, 0.000758897},
    {0.008960226, 0.003839389, 0.001492591, 0.000571260},
}};

struct ValenceRow {
  int m;
  double gamma;
  std::array<double, 4> minus_energy;
};

inline constexpr std::array<ValenceRow, 12> kValence = {{
    {0, 0.904753862, {0.088604373, 0.044160252, 0.026297735, 0.017415888}},
    {0, 2.351197519, {0.041574253, 0.025056330, 0.016731035, 0.011957498}},
    {0, 3.172671646, {0.027927569, 0.018272110, 0.012878292, 0.009562772}},
    {0, 4.073926412, {0.019185950, 0.013415538, 0.009904961, 0.007611586}},
    {1, 1.973702871, {0.050720257, 0.029200677, 0.018946465, 0.013277165}},
    {1, 3.095983541, {0.028917932, 0.018793782, 0.013185974, 0.009759184}},
    {1, 4.060300322, {0.019286713, 0.013474421, 0.009942300, 0.007636732}},
    {1, 5.034941193, {0.013648539, 0.010052469, 0.007710801, 0.006101341}},
    {2, 1.539965664, {0.064078256, 0.034819564, 0.021813636, 0.014931773}},
    {2, 2.966289119, {0.030706849, 0.019723198, 0.013729065, 0.010103555}},
    {2, 4.023558622, {0.019562282, 0.013635068, 0.010043998, 0.007705129}},
    {2, 5.022510687, {0.013704236, 0.010087660, 0.007734435, 0.006117972}},
}};

}  // namespace reference
