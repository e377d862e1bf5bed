#pragma once

// Generated by gen_oracles.py (mpmath, 40 digits). Do not edit by hand.

#include <array>
#include <complex>

namespace oracle {

using C = std::complex<double>;

struct GammaCase { C s; C value; };
inline const std::array<GammaCase, 9> kGamma = {{
    {{2.5000000000000000000, 0.0}, {1.3293403881791370205, 0.0}},
    {{0.29999999999999998890, 2.0000000000000000000}, {0.057465337569588033460, -0.074984912582646138176}},
    {{-2.7000000000000001776, 0.40000000000000002220}, {-0.42601364816873742892, 0.036482419059879668823}},
    {{10.500000000000000000, -3.0000000000000000000}, {570500.42950061239000, -451563.27794731673075}},
    {{-0.50000000000000000000, 0.0}, {-3.5449077018110320546, 0.0}},
    {{0.010000000000000000208, -0.020000000000000000416}, {19.432936412460990423, 39.980583603316279436}},
    {{25.000000000000000000, 20.000000000000000000}, {-3.6320132790904134786e+20, 43588116059528902618.}},
    {{-12.300000000000000711, -7.0999999999999996447}, {-8.0457005353312288482e-18, 1.7643115677734505641e-18}},
    {{1.5000000000000000000, 40.000000000000000000}, {-3.4473795254882209219e-26, 3.8555082607816557415e-26}},
}};

struct MLCase { C nu; C beta; C x; C value; };
inline const std::array<MLCase, 6> kMittagLeffler = {{
    {{0.50000000000000000000, 0.0}, {1.0000000000000000000, 0.0}, {-0.29999999999999998890, 0.0}, {0.73459933456765514992, 0.0}},
    {{0.69999999999999995559, 0.0}, {1.3000000000000000444, 0.0}, {1.0000000000000000000, 1.0000000000000000000}, {0.71181859742050782948, 2.5524969870895437621}},
    {{0.50000000000000000000, 0.40000000000000002220}, {1.0000000000000000000, 0.0}, {2.0000000000000000000, -1.0000000000000000000}, {-1.7486058769862851409, -1.3841988804962788219}},
    {{1.5000000000000000000, 0.0}, {2.0000000000000000000, 0.0}, {-4.0000000000000000000, 0.0}, {0.28397995796753764880, 0.0}},
    {{0.80000000000000004441, -0.29999999999999998890}, {0.50000000000000000000, 0.50000000000000000000}, {-3.0000000000000000000, 2.0000000000000000000}, {-0.28344014238654720281, 0.28995848502087895395}},
    {{0.29999999999999998890, 0.0}, {1.0000000000000000000, 0.0}, {0.90000000000000002220, 0.0}, {5.6214684216776340090, 0.0}},
}};

struct TailCase { C nu; C x; C value; };
inline const std::array<TailCase, 4> kMLTail = {{
    {{0.50000000000000000000, 0.50000000000000000000}, {0.20000000000000001110, 0.0}, {-0.32291843798248485373, -0.0026196464740422067748}},
    {{0.40000000000000002220, -0.80000000000000004441}, {-1.0000000000000000000, 0.50000000000000000000}, {0.80196323699652006104, -0.012891663181609812496}},
    {{1.1999999999999999556, 0.29999999999999998890}, {1.5000000000000000000, 0.0}, {1.6588963296521076628, -2.3669694473157150072}},
    {{0.50000000000000000000, -0.40000000000000002220}, {0.29999999999999998890, 0.69999999999999995559}, {-0.74429422805085136486, -1.8247378954624380243}},
}};

struct DoubleTailCase { C mu; C nu; C x; C value; };
inline const std::array<DoubleTailCase, 4> kDoubleTail = {{
    {{2.0000000000000000000, 0.0}, {0.40000000000000002220, 0.59999999999999997780}, {0.10000000000000000555, 0.0}, {0.14083011485985820902, 0.11853856193492398908}},
    {{0.50000000000000000000, 0.29999999999999998890}, {0.29999999999999998890, -0.69999999999999995559}, {0.50000000000000000000, 0.0}, {0.21615743255601218460, -0.0055486353496622375306}},
    {{-1.5000000000000000000, 0.0}, {0.59999999999999997780, 0.20000000000000001110}, {-0.40000000000000002220, 0.0}, {0.46202662014146039879, 0.85917094411127902135}},
    {{-1.0000000000000000000, 0.0}, {0.50000000000000000000, 0.40000000000000002220}, {0.59999999999999997780, -0.20000000000000001110}, {-0.64528804495014721749, -0.023040084426086334645}},
}};

inline constexpr double kBeta2Half = 1.3333333333333333333;  // B(2, 1/2)
inline constexpr double kGamma2OverGamma25 = 0.75225277806367504926;
inline constexpr double kABIntegralPowHalf = 0.87612638903183752463;  // B=1, f=z, c=0, z=1, nu=1/2

// |I^{1/2}(I^{1/2} z) - I^1 z| at z = 1, c = 0, B = 1
inline constexpr double kNonSemigroupGap = 0.25112638903183752463;
// |ABR^{1/2} z - AB I^{-1/2} z| at z = 1, c = 0, B = 1
inline constexpr double kNegOrderGap = 0.17611507005039544356;

// f = (z-c)^alpha, B = 1: closed forms of the AB integral and of ABR = ABC
struct PowerCase { double alpha; C nu; double dz; C ab_int; C abr; };
inline const std::array<PowerCase, 36> kPowerGrid = {{
    {0.50000000000000000000, {0.30000000000000000000, 0.0}, 0.50000000000000000000, {0.65892554398967257960, 0.0}, {0.75551757431661727562, 0.0}},
    {0.50000000000000000000, {0.30000000000000000000, 0.0}, 1.0000000000000000000, {0.98545491763938758049, 0.0}, {1.0087156233801540472, 0.0}},
    {0.50000000000000000000, {0.30000000000000000000, 0.0}, 2.0000000000000000000, {1.4869553723544016960, 0.0}, {1.3342218336358127227, 0.0}},
    {0.50000000000000000000, {0.50000000000000000000, 0.0}, 0.50000000000000000000, {0.57511012195646326561, 0.0}, {0.84518294944626615422, 0.0}},
    {0.50000000000000000000, {0.50000000000000000000, 0.0}, 1.0000000000000000000, {0.94311346272637900682, 0.0}, {1.0145816947642039213, 0.0}},
    {0.50000000000000000000, {0.50000000000000000000, 0.0}, 2.0000000000000000000, {1.5933337066393055380, 0.0}, {1.1765477720796510135, 0.0}},
    {0.50000000000000000000, {0.70000000000000000000, 0.0}, 0.50000000000000000000, {0.45720941840760499300, 0.0}, {0.97401918226830347155, 0.0}},
    {0.50000000000000000000, {0.70000000000000000000, 0.0}, 1.0000000000000000000, {0.86303997581419259070, 0.0}, {0.95990288329789215497, 0.0}},
    {0.50000000000000000000, {0.70000000000000000000, 0.0}, 2.0000000000000000000, {1.7177902567425953244, 0.0}, {0.89143587849700827786, 0.0}},
    {0.50000000000000000000, {0.50000000000000000000, 0.40000000000000000000}, 0.50000000000000000000, {0.64468503405784026952, -0.21647588409705843634}, {0.73267199888867305368, 0.21891228872464030179}},
    {0.50000000000000000000, {0.50000000000000000000, 0.40000000000000000000}, 1.0000000000000000000, {1.0236943871349913456, -0.11295828208357933884}, {1.0492720303384010437, 0.072099513505974076733}},
    {0.50000000000000000000, {0.50000000000000000000, 0.40000000000000000000}, 2.0000000000000000000, {1.5573568458185400417, 0.27316489743116694794}, {1.4269008184232418410, -0.33288858323191388465}},
    {1.0000000000000000000, {0.30000000000000000000, 0.0}, 0.50000000000000000000, {0.45442840165648413460, 0.0}, {0.54866930921271006177, 0.0}},
    {1.0000000000000000000, {0.30000000000000000000, 0.0}, 1.0000000000000000000, {0.95713288658783888767, 0.0}, {1.0409311383801876904, 0.0}},
    {1.0000000000000000000, {0.30000000000000000000, 0.0}, 2.0000000000000000000, {2.0331354336197396003, 0.0}, {1.9575547309350462536, 0.0}},
    {1.0000000000000000000, {0.50000000000000000000, 0.0}, 0.50000000000000000000, {0.38298076013381089265, 0.0}, {0.64208228906622419849, 0.0}},
    {1.0000000000000000000, {0.50000000000000000000, 0.0}, 1.0000000000000000000, {0.87612638903183752463, 0.0}, {1.1119254865026391566, 0.0}},
    {1.0000000000000000000, {0.50000000000000000000, 0.0}, 2.0000000000000000000, {2.0638460810704871412, 0.0}, {1.8639462481041438492, 0.0}},
    {1.0000000000000000000, {0.70000000000000000000, 0.0}, 0.50000000000000000000, {0.28947837543414590770, 0.0}, {0.80933469396032838068, 0.0}},
    {1.0000000000000000000, {0.70000000000000000000, 0.0}, 1.0000000000000000000, {0.75316657874503882285, 0.0}, {1.1910144128392343877, 0.0}},
    {1.0000000000000000000, {0.70000000000000000000, 0.0}, 2.0000000000000000000, {2.0723425581368579599, 0.0}, {1.6459484377231690138, 0.0}},
    {1.0000000000000000000, {0.50000000000000000000, 0.40000000000000000000}, 0.50000000000000000000, {0.42592623382361522162, -0.17990586285001943487}, {0.51300373132511011509, 0.20385748746086797891}},
    {1.0000000000000000000, {0.50000000000000000000, 0.40000000000000000000}, 1.0000000000000000000, {0.96303423887930328164, -0.20913406174287453729}, {1.0425986700797068111, 0.19711202001180694173}},
    {1.0000000000000000000, {0.50000000000000000000, 0.40000000000000000000}, 2.0000000000000000000, {2.1118739124510613520, 0.077713224750110363962}, {2.0549635993496758090, -0.14881244269993463426}},
    {2.0000000000000000000, {0.30000000000000000000, 0.0}, 0.50000000000000000000, {0.22040365289412353678, 0.0}, {0.28317964579725794776, 0.0}},
    {2.0000000000000000000, {0.30000000000000000000, 0.0}, 1.0000000000000000000, {0.92359381442420772841, 0.0}, {1.0806537781980049360, 0.0}},
    {2.0000000000000000000, {0.30000000000000000000, 0.0}, 2.0000000000000000000, {3.9011051019473732180, 0.0}, {4.0906615883347601923, 0.0}},
    {2.0000000000000000000, {0.50000000000000000000, 0.0}, 0.50000000000000000000, {0.17819230405352435706, 0.0}, {0.34801065920293553815, 0.0}},
    {2.0000000000000000000, {0.50000000000000000000, 0.0}, 1.0000000000000000000, {0.80090111122547001971, 0.0}, {1.2328620852599785103, 0.0}},
    {2.0000000000000000000, {0.50000000000000000000, 0.0}, 2.0000000000000000000, {3.7021537297127794259, 0.0}, {4.2386611447721848278, 0.0}},
    {2.0000000000000000000, {0.70000000000000000000, 0.0}, 0.50000000000000000000, {0.12665865756820218804, 0.0}, {0.47936772811430731678, 0.0}},
    {2.0000000000000000000, {0.70000000000000000000, 0.0}, 1.0000000000000000000, {0.63567894721854727618, 0.0}, {1.4949392624641985343, 0.0}},
    {2.0000000000000000000, {0.70000000000000000000, 0.0}, 2.0000000000000000000, {3.3812482342768266073, 0.0}, {4.3725126333744071610, 0.0}},
    {2.0000000000000000000, {0.50000000000000000000, 0.40000000000000000000}, 0.50000000000000000000, {0.19486790006537133855, -0.10314120915046718812}, {0.25402096704793175139, 0.13081619556285074148}},
    {2.0000000000000000000, {0.50000000000000000000, 0.40000000000000000000}, 1.0000000000000000000, {0.88500217550736611207, -0.30890759747547820776}, {1.0318649399686030298, 0.34312449853919240590}},
    {2.0000000000000000000, {0.50000000000000000000, 0.40000000000000000000}, 2.0000000000000000000, {3.9536786714681419816, -0.50824742783472613471}, {4.1461334960493905712, 0.45266518888138251521}},
}};

// ABR of (z-0)^2 at z = 0.1 along nu = 1 - delta(1+i), B = 1
struct NearOneCase { double delta; C abr; };
inline const std::array<NearOneCase, 3> kNearOne = {{
    {0.010000000000000000000, {0.17648625214130333348, -0.022792031126047553296}},
    {0.0075000000000000000000, {0.18236271836579371021, -0.017159709627957873890}},
    {0.0050000000000000000000, {0.18825704392851204153, -0.011548679147737763813}},
}};

}  // namespace oracle
