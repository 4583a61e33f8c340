// Generated by tests/oracles/compute_oracles.py (mpmath, 60 digits). Do not edit.
#pragma once

namespace kglab::oracle {

inline constexpr double gauss_ft_0 = 0.7071067811865475244;
inline constexpr double gauss_ft_1 = 0.55069531490318374762;
inline constexpr double gauss_ft_2 = 0.26013004751144444818;
inline constexpr double sech_ft_0 = 1.2533141373155002512;
inline constexpr double res_poly_0 = 2.4094294535746858496;
inline constexpr double res_poly_1 = 1.3244777120140199968;
inline constexpr double res_poly_sqrt3 = -0.69704961125804425449;
inline constexpr double resonance_re = 0.024894628973501580517;
inline constexpr double resonance_im = -0.12935628665304294991;
inline constexpr double resonance_abs = 0.1317299944902166994;
inline constexpr double alpha1_hat_0 = 0.74775396835076457402;
inline constexpr double alpha1_hat_1 = 0.6180895989398759985;
inline constexpr double alpha1_hat_sqrt3 = 0.34852480562902212724;
inline constexpr double alpha2_hat_0 = -0.14390531830497494369;
inline constexpr double alpha2_hat_1 = -0.30587502542678163025;
inline constexpr double alpha2_hat_sqrt3 = -0.60366267104753376627;
inline constexpr double alpha3_hat_0 = -0.1869384920876911435;
inline constexpr double alpha3_hat_1 = -0.33111942800350499919;
inline constexpr double alpha3_hat_sqrt3 = -0.52278720844353319087;
inline constexpr double alpha_combined_sqrt3 = -0.17426240281451106362;
inline constexpr double energy_Q = 1.3333333333333333333;
inline constexpr double conv1_0p3 = 0.53903365376760845241;
inline constexpr double conv1_1 = 0.79707363067677336087;
inline constexpr double conv1_sqrt3 = 0.45410692130884569604;
inline constexpr double conv1_2p5 = 0.19695227236301912171;
inline constexpr double conv2_0p3 = -0.81753437488087281949;
inline constexpr double conv2_1 = -1.1220348605829449692e-66;
inline constexpr double conv2_sqrt3 = 0.26217875325853426681;
inline constexpr double conv2_2p5 = 0.20679988598117007779;
inline constexpr double conv3_0p3 = 0.18409628640318533765;
inline constexpr double conv3_1 = 0.43453720809469579438;
inline constexpr double conv3_sqrt3 = 0.3966913565282926413;
inline constexpr double conv3_2p5 = 0.24638155844308995586;
inline constexpr double omega_omega_smeared = -2.0799029826557944941;
inline constexpr double omega3_at_0 = 0.63661977236758134308;
inline constexpr double trapping_threshold_eps0p04 = 0.016650951848044862383;
inline constexpr double dstar_bound_eps0p05 = 0.011180339887498948482;
inline constexpr double i1_gauss_ft_1_imag = -0.56121758587296303348;

}  // namespace kglab::oracle
