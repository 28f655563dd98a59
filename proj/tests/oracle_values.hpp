#pragma once

// Generated by tests/oracles/generate_oracles.py (mpmath, 30 digits).

namespace oracle {

// Gamma(7.3)
inline constexpr double kGamma7_3 = 1271.4236336639092731;
// ln Gamma(10.5)
inline constexpr double kLogGamma10_5 = 13.940625219403763633;
// B(2.3, 4.1)
inline constexpr double kBeta2_3_4_1 = 0.033003543773855469236;
// K_{2.7}(3.3)
inline constexpr double kBesselK2_7_3_3 = 0.06342202176339139679;
// Phi(1.7; 3.4; 2.5)
inline constexpr double kKummer1_7_3_4_2_5 = 4.1490976910716859105;
// 2F1(1.2, 2.1; 3.7; 0.4)
inline constexpr double kGauss1_2_2_1_3_7_0_4 = 1.387393116601874338;
// int_0^1 t^0.3 (1-t)^1.1 exp(-0.5/(t(1-t))) dt
inline constexpr double kDampedBetaIntegral = 0.024019361096183414643;
// int_-1^1 (1+u)^0.2 (1-u)^0.4 e^{u/2} K_{1/2}(1.4/((1+u)(1-u))) du
inline constexpr double kSymmetricBesselIntegral = 0.25557694630620955741;
// B_p(1.5, 2.5; 1)
inline constexpr double kBetaP1_5_2_5_1 = 0.001686608359827520547;
// B_{p,q}(1.1, 3.3; 0.4, 0.9)
inline constexpr double kBetaPQ = 0.010043241234702015433;
// B_v(1.5, 2.5; p=1, v=1)
inline constexpr double kBetaV1_5_2_5_1_1 = 0.0020780143631250504426;
// Phi_{p,v}(1.5; 3; 2), p=0.8, v=1
inline constexpr double kPhiPV = 0.075172265134755986615;
// F_{p,v}(2, 1.5; 3.5; 0.3), p=0.7, v=0.5
inline constexpr double kFPV = 0.050588463925761370369;
// F_p(1, 1; 2; 0.4), p=0.5
inline constexpr double kFP = 0.083786213303787272605;
// F_{p,q}(1.5, 1; 2.5; 0.4), p=0.3, q=0.6
inline constexpr double kFPQ = 0.12975832537111079109;
// M_{0.25,0.75}(2)
inline constexpr double kWhittakerM = 2.2441132821777292401;
// M_{p,v,lambda,rho}(2), (0.8, 1, 0.25, 1.1)
inline constexpr double kMPV = 0.079195851403545832394;
// M_{p,v,lambda,rho}(4), (1, 0.5, 0.4, 1.2)
inline constexpr double kMPVAlt = 0.095455755401794531582;
// Mellin transform at (v, lambda, rho, r, z) = (0.5, 0, 1.2, 2, 0.5)
inline constexpr double kMellin = 0.015998087440275934022;

}  // namespace oracle
