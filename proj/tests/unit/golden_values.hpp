// Generated by tests/oracles/golden.py at 50 significant digits. Do not edit.
// Worked triple (a1, a2, a3) = (2, 1, sqrt 5).
#ifndef PTLAB_TESTS_GOLDEN_VALUES_HPP
#define PTLAB_TESTS_GOLDEN_VALUES_HPP

#include <array>
#include <complex>

namespace golden {

inline constexpr double kA3 = 2.236067977499789696409173668731276235441;
inline constexpr double kCoupling = 0.5590169943749474241022934171828190588602;
inline constexpr double kOmega1Sq = 3.5;
inline constexpr double kOmega2Sq = 1.5;
inline constexpr double kFrequencySum = 5.0;
inline constexpr double kFrequencyProduct = 5.25;
inline const std::complex<double> kCaseThreeRoot1{2.5, 1.322875655532295295250807876819630212855};
inline const std::complex<double> kCaseThreeRoot2{2.5, -1.322875655532295295250807876819630212855};
inline const std::complex<double> kAlpha1{0.0, -2.236067977499789696409173668731276235441};
inline const std::complex<double> kAlpha2{0.0, -0.4472135954999579392818347337462552470881};
inline constexpr double kU = 0.8091067115702212142899530486161977963839;
inline constexpr double kOmega = 1.513700052017545516769829559239945072751;
inline constexpr double kMass = 0.7807200583588265434835077089920801516751;
inline constexpr double kOmega1 = 1.870828693386970692791874366158274650878;
inline constexpr double kOmega2 = 1.224744871391589049098642037352945695983;
inline constexpr double kScale1 = 1.34507159962670025955449948297865275551;
inline constexpr double kScale2 = 0.7434548467736078148802912460395785838735;

// Rows define the new variables, columns are x1 x2 p1 p2.
inline const std::array<std::complex<double>, 16> kIntermediateMap{{
    {0.0, -1.11803398874989484820458683436563811772}, {0.25, 0.0}, {0.0, 0.0}, {0.0, 0.0},
    {0.0, 1.11803398874989484820458683436563811772}, {-1.25, 0.0}, {0.0, 0.0}, {0.0, 0.0},
    {0.0, 0.0}, {0.0, 0.0}, {0.0, -1.11803398874989484820458683436563811772}, {1.0, 0.0},
    {0.0, 0.0}, {0.0, 0.0}, {0.0, -0.2236067977499789696409173668731276235441}, {1.0, 0.0},
}};
inline const std::array<std::complex<double>, 16> kPrintedFinalMap{{
    {0.0, -1.50383576568484126549671734874149483247}, {0.3362678999066750648886248707446631888776, 0.0}, {0.0, 0.0}, {0.0, 0.0},
    {0.0, 0.8312077877937386378868367607575903605004}, {-0.9293185584670097686003640575494732298419, 0.0}, {0.0, 0.0}, {0.0, 0.0},
    {0.0, 0.0}, {0.0, 0.0}, {0.0, -0.8312077877937386378868367607575903605004}, {0.7434548467736078148802912460395785838735, 0.0},
    {0.0, 0.0}, {0.0, 0.0}, {0.0, -0.3007671531369682530993434697482989664941}, {1.34507159962670025955449948297865275551, 0.0},
}};
inline const std::array<std::complex<double>, 16> kFinalMap{{
    {0.0, 1.50383576568484126549671734874149483247}, {-0.3362678999066750648886248707446631888776, 0.0}, {0.0, 0.0}, {0.0, 0.0},
    {0.0, -0.8312077877937386378868367607575903605004}, {0.9293185584670097686003640575494732298419, 0.0}, {0.0, 0.0}, {0.0, 0.0},
    {0.0, 0.0}, {0.0, 0.0}, {0.0, -0.8312077877937386378868367607575903605004}, {0.7434548467736078148802912460395785838735, 0.0},
    {0.0, 0.0}, {0.0, 0.0}, {0.0, -0.3007671531369682530993434697482989664941}, {1.34507159962670025955449948297865275551, 0.0},
}};

// Symmetric matrices C of H = 1/2 z^T C z after each change of variables.
inline const std::array<std::complex<double>, 16> kIntermediateForm{{
    {-4.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0},
    {0.0, 0.0}, {0.8, 0.0}, {0.0, 0.0}, {0.0, 0.0},
    {0.0, 0.0}, {0.0, 0.0}, {-0.875, 0.0}, {0.0, 0.0},
    {0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {1.875, 0.0},
}};
inline const std::array<std::complex<double>, 16> kFinalForm{{
    {-2.210900436764674697403663699051459927184, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0},
    {0.0, 0.0}, {1.447374086497864193454499607804173207955, 0.0}, {0.0, 0.0}, {0.0, 0.0},
    {0.0, 0.0}, {0.0, 0.0}, {-1.583065407107038961590858946035814446201, 0.0}, {0.0, 0.0},
    {0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {1.036359579733441264407967358930371840868, 0.0},
}};

// Coefficients of P'1^2, X'1^2, P'2^2, X'2^2.
inline constexpr std::array<double, 4> kIntermediateCoefficients{-0.4375, -2.0, 0.9375, 0.4};
// Coefficients of P1^2, X1^2, P2^2, X2^2 in the lower-sign branch.
inline constexpr std::array<double, 4> kBranchTwoCoefficients{-0.7915327035535194807954294730179072231003, -1.105450218382337348701831849525729963592, 0.5181797898667206322039836794651859204338, 0.7236870432489320967272498039020866039774};

inline constexpr double kGroundLevel = 1.54778678238927987094525820175561017343;
inline constexpr double kNaiveGroundBranchOne = 0.3230419109976908218466161644026644774475;
inline constexpr std::array<double, 4> kBoundedLevels{1.54778678238927987094525820175561017343, 2.772531653780868920043900239108555869413, 3.418615475776250563737132567913884824309, 3.997276525172457969142542276461501565396};
inline constexpr std::array<std::array<int, 2>, 4> kBoundedQuantumNumbers{{{0, 0}, {0, 1}, {1, 0}, {0, 2}}};

inline constexpr double kVacuumDiagonal = 1.75;
inline constexpr double kPtFormTwoTerm = 1.0;
inline constexpr int kTruncationNmax = 10;
// Lowest eigenvalues of the truncated Hamiltonian, by real part.
inline const std::array<std::complex<double>, 6> kTruncatedEigenvalues{{
    {1.547718768068525161262499685382275785289, 0.0},
    {2.772391731262374798939928923490469167329, 0.0},
    {3.419716379892689704800504205489547736314, 0.0},
    {3.99523862856948981824238888551354682438, 0.0},
    {4.666323378664342203987544484220337851026, 0.0},
    {5.217312270212333889130658087888456147647, 0.0},
}};

} // namespace golden

#endif
