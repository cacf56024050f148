#pragma once

// Values computed offline with 40-digit arbitrary precision arithmetic
// (mpmath). Used as frozen oracles.

namespace qphase::reference {

inline constexpr double kLn120 = 4.787491742782046;
inline constexpr double kLnFactorial10000 = 82108.92783681435345538503;

inline constexpr double kHermite10At1_3 = -66123.4130330624;
inline constexpr double kHermite50At2_5 = -4.371506248896345445e+40;
inline constexpr double kLogAbsHermite400At3_7 = 1143.809686781509989749;  // negative sign
inline constexpr double kLaguerre5_3At2_2 = -4.7916026666666666667;
inline constexpr double kLogAbsLaguerre300_7At102_01 = 51.459592189848324780;  // negative sign

inline constexpr double kDisplaced_2_1_0_5 = 0.5460171011694800169788;    // <2|1, 0.5>
inline constexpr double kDisplaced_0_3_2 = -0.4420031841663186364875;     // <0|3, 2>
inline constexpr double kDisplaced_75_3_10_1 = -0.1596543823616569780008; // <75|3, 10.1>
inline constexpr double kDisplaced_5_3_10_1 = -2.446461745699930748e-16;  // <5|3, 10.1>
inline constexpr double kPmf_100_3_10_1 = 0.003876269756013709944;

inline constexpr double kTpcs_0_1_0_5 = 0.7196439703832741882433;      // <0|1, 0.5>
inline constexpr double kTpcs_3_1_0_5 = -0.1562998520130927051425;     // <3|1, 0.5>
inline constexpr double kTpcs_10_5_1_3 = 0.01129660282723138625258;    // <10|5.1, 3>
inline constexpr double kTpcs_101_5_1_3 = -0.06352877953677580125183;  // <101|5.1, 3>

// beta = 5.1, r = 3.
inline constexpr double kTpcsMass2000 = 0.999991579472001899681785546072;
inline constexpr double kTpcsMean2000 = 100.40381567694167;
inline constexpr double kTpcsMeanExact = 100.422290405343039;

inline constexpr double kSech1 = 0.6480542736638854;

// m = 100, n = 3, beta = 10.1.
inline constexpr double kX0 = 9.851980198019802;
inline constexpr double kY0 = 1.714201323598166;
inline constexpr double kBandArea_100_3 = 0.01449104824949257;
inline constexpr double kLensFig6Outer = 5.000951778700296;  // radii sqrt(100.5), sqrt(3.5)

inline constexpr double kPsi_4_4_2 = -7.652891819924146;
inline constexpr double kLensUnitRightAngle = 0.5707963267948966;  // (pi - 2) / 2
inline constexpr double kLens_2_2_2 = 4.913478794435027;

// beta = 5.1, r = 3.
inline constexpr double kEllipseCenter = 0.2539140486761061;
inline constexpr double kEllipseSemiX = 0.0497870683678639;
inline constexpr double kEllipseSemiY = 20.085536923187668;
inline constexpr double kY2_100 = 9.996775863041289;
inline constexpr double kDy_100 = 0.0500162823878429;
inline constexpr double kDx_100 = 0.0863649714434434;
inline constexpr double kArea_100 = 0.00431965480013325;
inline constexpr double kFourX2Y2_100 = 10.15328733236955;
inline constexpr double kParityLimit_100 = 1.745083371857871e-4;

}  // namespace qphase::reference
