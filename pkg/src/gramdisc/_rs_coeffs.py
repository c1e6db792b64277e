"""Riemann-Siegel remainder polynomials C_j(z), z = 2p - 1, ascending powers.

Generated by tools/gen_rs_coeffs.py; do not edit by hand.
"""

RS_COEFFS = (
    (
        0.3826834323650898,
        0.0,
        0.43724046807752043,
        0.0,
        0.1323765754803435,
        0.0,
        -0.013605026047674188,
        0.0,
        -0.013567621970103581,
        8.880879632500218e-65,
        -0.0016237253231444653,
        -1.8955050158490809e-65,
        0.0002970535373337969,
        -5.744455707870394e-66,
        7.94330087952147e-05,
        -3.7346651042516665e-68,
        4.6556124614504504e-07,
        1.2537943001605488e-67,
        -1.4327251630955106e-06,
        9.753855103393718e-69,
        -1.0354847112312946e-07,
        -1.2391688371599922e-69,
        1.2357927083861738e-08,
        -1.8907930564162024e-70,
        1.7881083857954906e-09,
        3.751052625290508e-72,
        -3.391414389927036e-11,
        1.875250842579474e-72,
        -1.6326633902565907e-11,
        4.485531892522495e-74,
        -3.7851093185412205e-13,
        -1.133685496974408e-74,
        9.327423259201725e-14,
        -6.473734578977527e-76,
        5.221843015978137e-15,
        4.215055637324938e-77,
        -3.350673072744264e-16,
        4.334215545587415e-78,
        -3.4124265228117265e-17,
        -7.339710463439622e-80,
        5.751203341432399e-19,
        -1.9009447724451492e-80,
        1.4895301363211506e-19,
        -1.5959620933124182e-82,
        1.2565372717021416e-21,
        5.9392610760719785e-83,
        -4.721295250143426e-22,
        1.6450213632144269e-84,
    ),
    (
        0.0,
        -0.026825102628375348,
        0.0,
        0.013784773426351853,
        0.0,
        0.03849125048223508,
        -3.779249191830218e-64,
        0.009871066299062077,
        1.584452197397991e-64,
        -0.0033107597608584044,
        8.323101239344486e-65,
        -0.0014647808577954152,
        8.608615671804185e-67,
        -1.3207940624876963e-05,
        -4.3192213662336333e-66,
        5.9227487018471416e-05,
        -4.7881785384150274e-67,
        5.980242585373449e-06,
        8.349344545364358e-68,
        -9.641322456169826e-07,
        1.6964177928669022e-68,
        -1.8334733722714413e-07,
        -4.370702556840027e-70,
        4.4670875627178334e-09,
        -2.7787885368229864e-70,
        2.7096350821772744e-09,
        -8.303338649251298e-72,
        7.785288654315851e-11,
        2.581621360800187e-72,
        -2.343762601089369e-11,
        1.7893673559500956e-73,
        -1.5830172789987521e-12,
        -1.3976010600408027e-74,
        1.211994157372379e-13,
        -1.7060893942971576e-75,
        1.4583781161108306e-14,
        3.3981916194113616e-77,
        -2.878630525813192e-16,
        1.0265898434606276e-77,
        -8.662862902123724e-17,
        9.977992730587374e-80,
        -8.430722727137041e-19,
        -4.2695791667272486e-80,
        3.6308072230973464e-19,
        -1.3513217106036075e-81,
        1.1626698212838296e-20,
        1.2539567226275371e-82,
        -1.0975486711527531e-21,
    ),
    (
        0.005188542830293168,
        0.0,
        0.00030946583880634744,
        1.9145900069779306e-64,
        -0.011335941078229373,
        -2.2475400089109446e-64,
        0.0022330457419581446,
        -2.1249998511686523e-64,
        0.00519663740886233,
        -1.8001061523290408e-65,
        0.0003439914407620834,
        3.4149362778747586e-65,
        -0.0005910648427470583,
        6.742349747628437e-66,
        -0.00010229972547935857,
        -1.5098084945153053e-66,
        2.0888392216992754e-05,
        -4.6874240028556784e-67,
        5.927665493096536e-06,
        1.375372922220758e-68,
        -1.6423838362436276e-07,
        1.3640573770866379e-68,
        -1.5161199700940684e-07,
        5.610999560276701e-70,
        -5.907803698206668e-09,
        -2.058918656914849e-70,
        2.0911514859478188e-09,
        -1.81713847794836e-71,
        1.781564958329235e-10,
        1.6891556917468224e-72,
        -1.6164072455353832e-11,
        2.542739286865744e-73,
        -2.3806962496667617e-12,
        -5.828275424077109e-75,
        5.398265295542595e-14,
        -2.1571235775229859e-75,
        1.9750142196969516e-14,
        -2.5660078861348897e-77,
        2.3332868732882633e-16,
        1.221816486180599e-77,
        -1.118751761004808e-16,
        4.515086502543533e-79,
        -4.164009488883767e-18,
        -4.747168393130302e-80,
        4.446081109291883e-19,
        -2.9898700471281824e-81,
        2.8546114783637145e-20,
        1.2137961355640687e-82,
    ),
    (
        -3.2331420949465944e-66,
        -0.0013397160907194568,
        3.7953902331061212e-65,
        0.003744215136379394,
        3.465301642866464e-65,
        -0.0013303178919321468,
        9.67065443271965e-65,
        -0.0022654660765471786,
        -3.759664237785605e-65,
        0.0009548499998506731,
        -3.0991468722648237e-65,
        0.0006010038458963604,
        5.531601122150768e-66,
        -0.00010128858286776622,
        4.462600923888832e-66,
        -6.865733449299826e-05,
        -2.687102387191583e-68,
        5.985366791538599e-07,
        -2.5523949582459254e-67,
        3.331659851239947e-06,
        -1.8317922015172358e-68,
        2.1919289102435082e-07,
        6.780191718663343e-69,
        -7.890884245681494e-08,
        8.539697499133547e-70,
        -9.414685081295262e-09,
        -8.873385245630384e-71,
        9.57011621088348e-10,
        -1.8056441454062578e-71,
        1.8763137453470662e-10,
        4.268909701786672e-73,
        -4.4378376793233995e-12,
        2.2312814439333244e-73,
        -2.242673850561735e-12,
        3.7056597821427997e-75,
        -3.6276868657352434e-14,
        -1.7703478404070141e-75,
        1.7639809550821582e-14,
        -8.002023817569105e-77,
        7.960765246786778e-16,
        9.305863763403429e-78,
        -9.419651490589691e-17,
        6.95960179304287e-79,
        -7.133103854569658e-18,
        -3.116261789267519e-80,
        3.2899105845546245e-19,
        -3.860018245251787e-81,
        4.1807303748984594e-20,
    ),
    (
        0.00046483389361763383,
        8.428855278416932e-66,
        -0.001005660736534047,
        -6.434765129059366e-65,
        0.00024044856573725794,
        -3.522884209915756e-65,
        0.0010283086149702322,
        2.5978570262736624e-65,
        -0.0007657861071755644,
        1.163563813153741e-65,
        -0.00020365286803084818,
        -1.134170379810604e-65,
        0.0002321229049106873,
        -2.1653811716098946e-66,
        3.2602144243865195e-05,
        1.5656806973443506e-66,
        -2.5579062517949524e-05,
        2.948596003756743e-67,
        -4.107464438915745e-06,
        -8.402220098830222e-68,
        1.1781113640371294e-06,
        -1.930170182288045e-68,
        2.445656142248458e-07,
        1.877267122479963e-69,
        -2.3915824767344323e-08,
        6.377313644028936e-70,
        -7.505214207035756e-09,
        -1.033875379202352e-71,
        1.3312279416258429e-10,
        -1.1960982528020676e-71,
        1.344062675422562e-10,
        -3.3202063393790345e-73,
        3.513770042430486e-12,
        1.3777354898377816e-73,
        -1.519154453370392e-12,
        8.237334931428472e-75,
        -8.915417681447087e-14,
        -1.00688687864038e-75,
        1.1195891165228536e-14,
        -9.46553925792442e-77,
        1.0516013329914816e-15,
        4.480660267967795e-78,
        -5.1786552736466835e-17,
        6.900831555870838e-79,
        -8.065874861916566e-18,
        -8.3873342196031585e-81,
        1.0608204530563966e-19,
        -3.492871548272356e-81,
    ),
)
