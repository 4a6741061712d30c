#pragma once

// Generated by tests/oracles/generate.py (mpmath, 40 digits). Do not edit by hand.

namespace oracle {

struct Bessel {
  double x, j0, j1, y0, y1, i0, i1, k0, k1;
};
inline constexpr Bessel kBessel[] = {
    {0.1, 0.99750156206604003228, 0.049937526036241997556, -1.5342386513503668441, -6.4589510947020269877, 1.0025015629340956014, 0.050062526047092692114, 2.4270690247020166125, 9.8538447808706061348},
    {1.0, 0.76519768655796655145, 0.44005058574493351596, 0.088256964215676957983, -0.78121282130028871655, 1.2660658777520083356, 0.56515910399248502721, 0.42102443824070833334, 0.60190723019723457474},
    {2.5, -0.048383776468197996327, 0.49709410246427403801, 0.49807035961523188783, 0.14591813796678579888, 3.2898391440501230357, 2.5167162452886984415, 0.062347553200366186029, 0.073890816347747063649},
    {7.3, 0.28821694763501438437, 0.08257043049325788024, 0.062773886374037648286, -0.28459437186807209037, 222.658799873011903, 206.79167004622551833, 0.00030836221306093174528, 0.00032884199678432625429},
    {20.0, 0.16702466434058315473, 0.066833124175850045579, 0.062640596809383831162, -0.16551161436252129586, 43558282.559553533272, 42454973.385127770181, 5.7412378153365242927e-10, 5.8830579695570381777e-10},
    {60.0, -0.091471804089061869531, 0.046598383758166317869, 0.047358952209449399203, 0.091869609369866895264, 5.8940770556098011683e+24, 5.8447515883904682813e+24, 1.4138978405591078091e-27, 1.4256320265171043232e-27},
};

inline constexpr double j01 = 2.4048255576957727686;
inline constexpr double j11 = 3.8317059702075123156;
inline constexpr double j12 = 7.0155866698156187535;
inline constexpr double j13 = 10.173468135062722077;
inline constexpr double j14 = 13.323691936314223032;

struct Compound {
  double r, omega, anchor, t0, t1, s0, s1, v0, v1;
};
inline constexpr Compound kCompound[] = {
    {0.5, 3.0, 5.0, 22.500633086193276103, -40.30951524366519062, -0.0016383143111899199486, 0.044698803997127330563, 0.044600427221507620082, 0.0047734076562997307515},
    {2.2, 1.7, 5.0, 2.1830524430124855204, -2.6179963864104130168, 0.078570412318246864561, -0.054141119940830747461, -0.057099561473497200165, -0.088143734143241432014},
    {4.9, 9.9, 5.0, 0.20100760867569062731, -0.020237771255140291581, 0.0067161681376513942807, -0.090920168956175654056, -0.087418627154037729846, -0.047967348232159059803},
    {-0.4, 2.5, 1.5, __builtin_nan(""), __builtin_nan(""), -0.097416201060366725586, -0.12788077833961794429, -0.12661108293394868942, 0.067357413863962638461},
    {1.0, 30.0, 3.0, 1.7153061621631858374, -2.3568673448650975503, -0.0013898009232313276385, -0.0085630209359891515317, -0.0085584678585438487493, 0.0012709656050204524537},
};

inline constexpr double chi1_R5 = 1.5872788256849557303;
inline constexpr double chi2_R5 = 2.9687382528677841468;
inline constexpr double chi3_R5 = 5.1399781558054632133;
inline constexpr double chi4_R5 = 8.1008306725521859945;
inline constexpr double rhat0_R5 = 3.9429902540713699058;

struct Ring {
  double chi, radius, coeff, energy, umax;
};
// Inner ring on R = 5, M = 25 pi: support radius, exterior T0 coefficient, energy, max u.
inline constexpr Ring kInner[] = {
    {3.0, 2.0431914836742791614, 0.6907055865473190041, -143.11999509511741588, 15.137958475669337156},
    {10.0, 0.87224536447501356189, 0.54385365011882746584, -527.34930272724549176, 78.7532497020526898},
    {100.0, 0.24577844087289610476, 0.51603764202469226599, -1536.3208304766985927, 964.44150247015579674},
    {100000.0, 0.0076051441019833485288, 0.51365218378248090291, -4903.9643588126432877, 1001141.9871067901656},
};
// Outer ring: cap width, interior I0 coefficient, energy, max u.
inline constexpr Ring kOuter[] = {
    {3.0, 1.5854036401225011622, 0.12736245328347701294, -68.702002535178191462, 2.9022977066819448179},
    {10.0, 0.63498866253693566744, 0.10658269757790274039, -129.97410748671059726, 6.6042663000886842922},
    {100.0, 0.16817607465723331877, 0.10300307271778704195, -189.6882125870717808, 23.768756907710524924},
    {100000.0, 0.0049775136427356445844, 0.10273021975072923631, -218.80742271424627297, 789.36402628366579073},
};

inline constexpr double volcano_center_chi5 = 3.3830873847908157967;
inline constexpr double volcano_center_chi100 = 3.8696398662028187472;
inline constexpr double rstar_chi10 = 0.87221178762154259115;
inline constexpr double constant_energy_chi2 = -39.269908169872415481;

}  // namespace oracle
