// Generated by tools/gen_coeffs.py -- do not edit by hand.
// High-precision reference values (mpmath, 50 digits), hi/lo split.
#pragma once

namespace incgamneg::testrefs {

struct Ref1 { double x, hi, lo; };
struct Ref2 { double a, b, hi, lo; };

// exp(x)
inline constexpr Ref1 kExpRefs[] = {
    {0x1.0000000000000p-7, 0x1.0202015600446p+0, -0x1.3cf3671f50e32p-54},
    {0x1.c000000000000p-2, 0x1.8c802477b0010p+0, -0x1.1ed925f893d67p-55},
    {0x1.0000000000000p+0, 0x1.5bf0a8b145769p+1, 0x1.4d57ee2b1013ap-53},
    {0x1.4000000000000p+1, 0x1.85d6fd931e0bbp+3, 0x1.d4dec34de84a0p-53},
    {-0x1.e000000000000p+1, 0x1.81509354f0d29p-6, 0x1.75db52f890742p-60},
    {0x1.4000000000000p+3, 0x1.5829dcf950560p+14, -0x1.83e055cfea4bbp-40},
    {0x1.9000000000000p+6, 0x1.3494a9b171bf5p+144, -0x1.4cf76bdb3376fp+90},
    {0x1.2c00000000000p+9, 0x1.88a122d234b39p+865, 0x1.2e21a5ab69fdfp+811},
    {-0x1.4500000000000p+9, 0x1.300ff6c7c2e28p-938, 0x1.3149289268fd6p-992},
};

// log(x)
inline constexpr Ref1 kLogRefs[] = {
    {0x1.0000000000000p-7, -0x1.3687a9f1af2b1p+2, -0x1.3b28539e9281cp-52},
    {0x1.c000000000000p-2, -0x1.a74269f84330ep-1, -0x1.6830fa3790e9bp-56},
    {0x1.0000000000000p+0, 0x0.0p+0, 0x0.0p+0},
    {0x1.4000000000000p+1, 0x1.d5240f0e0e078p-1, -0x1.7df5360740fe5p-55},
    {0x1.4000000000000p+3, 0x1.26bb1bbb55516p+1, -0x1.f48ad494ea3e9p-53},
    {0x1.81c8000000000p+13, 0x1.2d78e26ae18e8p+3, -0x1.d154d8174f844p-52},
    {0x1.19799812dea11p-40, -0x1.ba18a998fffa0p+4, -0x1.16fbdb9ca0a22p-50},
    {0x1.7d83612f2e450p+360, 0x1.f3dd28f1f6a0fp+7, 0x1.9da3a2f5c941bp-50},
};

// sin(x), |x| <= pi/2
inline constexpr Ref1 kSinRefs[] = {
    {0x1.12e0be826d695p-30, 0x1.12e0be826d695p-30, -0x1.a68cd9e985016p-93},
    {0x1.0000000000000p-3, 0x1.feaaeee86ee36p-4, -0x1.afcb2bcc6f03bp-59},
    {0x1.0000000000000p-1, 0x1.eaee8744b05f0p-2, -0x1.789b43c9b027dp-58},
    {0x1.0000000000000p+0, 0x1.aed548f090ceep-1, 0x1.06374f484e288p-59},
    {0x1.8000000000000p+0, 0x1.feb7a9b2c6d8bp-1, -0x1.0c8f40129a886p-56},
    {-0x1.6666666666666p-1, -0x1.49d6e694619b8p-1, -0x1.a822cbb5cf8f0p-59},
};

// cos(x), |x| <= pi/2
inline constexpr Ref1 kCosRefs[] = {
    {0x1.12e0be826d695p-30, 0x1.0000000000000p+0, -0x1.2725dd1d243acp-61},
    {0x1.0000000000000p-3, 0x1.fc015527d5bd3p-1, 0x1.b68f35094efb8p-55},
    {0x1.0000000000000p-1, 0x1.c1528065b7d50p-1, -0x1.892111312e828p-55},
    {0x1.0000000000000p+0, 0x1.14a280fb5068cp-1, -0x1.b71edcc9344bcp-55},
    {0x1.8000000000000p+0, 0x1.21bd54fc5f9a7p-4, 0x1.0fcb936b1ce7ep-58},
    {-0x1.6666666666666p-1, 0x1.87996529f9d93p-1, -0x1.7234b60138711p-55},
};

// sinh(x)
inline constexpr Ref1 kSinhRefs[] = {
    {0x1.0000000000000p-4, 0x1.002aacccd9cddp-4, -0x1.3a7fdfac9c47cp-58},
    {0x1.0000000000000p+0, 0x1.2cd9fc44eb982p+0, 0x1.6a0092521fc19p-54},
    {0x1.8000000000000p+1, 0x1.40926e70949aep+3, -0x1.923f985ab875fp-51},
    {0x1.2000000000000p+2, 0x1.68062ab5fa9fcp+5, 0x1.a7390d1abb049p-52},
};

// cosh(x)
inline constexpr Ref1 kCoshRefs[] = {
    {0x1.0000000000000p-4, 0x1.00800aab05b20p+0, -0x1.36eb99febdb21p-54},
    {0x1.0000000000000p+0, 0x1.8b07551d9f550p+0, 0x1.30af4a040065bp-54},
    {0x1.8000000000000p+1, 0x1.422a497d6185ep+3, 0x1.28e5883d54185p-51},
    {0x1.2000000000000p+2, 0x1.681ceb0641358p+5, 0x1.3ab66a0c5447ep-49},
};

// log Gamma(x), x > 0
inline constexpr Ref1 kLgammaRefs[] = {
    {0x1.0000000000000p-4, 0x1.5eac3fbdac563p+1, -0x1.6cd826b29932cp-53},
    {0x1.0000000000000p-1, 0x1.250d048e7a1bdp-1, 0x1.7abf2ad8d5088p-58},
    {0x1.0000000000000p+0, 0x0.0p+0, 0x0.0p+0},
    {0x1.8000000000000p+0, -0x1.eeb95b094c191p-4, -0x1.346863f58b075p-58},
    {0x1.a000000000000p+1, 0x1.df216e434a8ecp-1, 0x1.798367e4e8fbep-56},
    {0x1.e000000000000p+2, 0x1.e233060e41f7fp+2, 0x1.3cf483b899ae1p-52},
    {0x1.3fe0000000000p+4, 0x1.3a888ec141b60p+5, -0x1.d7509d11e9c00p-50},
    {0x1.4800000000000p+4, 0x1.46a6e9fba19d8p+5, 0x1.537d3e8f9ddf0p-51},
    {0x1.5700000000000p+7, 0x1.6292532a8beaap+9, 0x1.eb11fbc6c0d2ap-48},
    {0x1.cc40000000000p+8, 0x1.26f802696216cp+11, 0x1.de95088ef82edp-43},
};

// Dawson F(x)
inline constexpr Ref1 kDawsonRefs[] = {
    {0x1.0c6f7a0b5ed8dp-20, 0x1.0c6f7a0b5e141p-20, -0x1.f45f0be84ab16p-75},
    {0x1.0624dd2f1a9fcp-10, 0x1.0624d1bb12fc8p-10, 0x1.508b3e5f03511p-65},
    {0x1.999999999999ap-5, 0x1.98eb03108c0f6p-5, -0x1.d663d4ccd6f0fp-59},
    {0x1.0000000000000p-1, 0x1.b29f73897eab2p-2, 0x1.89ad28ffcb887p-57},
    {0x1.d916872b020c5p-1, 0x1.1503bf4b5b5d1p-1, -0x1.98fd6d3ad7b86p-55},
    {0x1.0000000000000p+1, 0x1.3492932d91017p-2, 0x1.6a0fd93ec3c80p-56},
    {0x1.4000000000000p+2, 0x1.a25756d75a1bbp-4, -0x1.a4067448451afp-58},
    {0x1.1000000000000p+3, 0x1.e549f78dc731ap-5, -0x1.15308d61e54eap-59},
    {0x1.e000000000000p+3, 0x1.11ad7565782fcp-5, -0x1.2ae0a3b268af5p-62},
    {0x1.6800000000000p+4, 0x1.6c7315f21a89dp-6, 0x1.915d736c1db63p-61},
    {0x1.e000000000000p+4, 0x1.1137f7bca4d95p-6, 0x1.880c5043fc543p-61},
    {0x1.8c00000000000p+5, 0x1.4b0eb72b6e935p-7, 0x1.4cd0abd95f381p-61},
};

// eta(lambda)
inline constexpr Ref1 kEtaRefs[] = {
    {0x1.0000000000000p-7, -0x1.63a3aaa3337a6p+1, -0x1.33898e12d54d3p-53},
    {0x1.8000000000000p-4, -0x1.b595773c80391p+0, -0x1.ef4ffa2f9e8cfp-55},
    {0x1.0000000000000p-1, -0x1.3e38a24cf0acbp-1, -0x1.f25b65d3ea5d4p-57},
    {0x1.f000000000000p-1, -0x1.02b7635840aaap-5, -0x1.77b7dd996ce8ep-62},
    {0x1.0800000000000p+0, 0x1.fac306ffae9e0p-6, -0x1.16a9841a649c1p-69},
    {0x1.0000000000000p+1, 0x1.9118f98ee8338p-1, 0x1.97e567f92ca1bp-58},
    {0x1.e000000000000p+2, 0x1.7f5d15932eab4p+1, 0x1.7f112473cb299p-58},
    {0x1.4c00000000000p+6, 0x1.8e9af7585910dp+3, -0x1.025b1b2b6dd1bp-51},
};

// Gamma*(a)
inline constexpr Ref1 kGammaStarRefs[] = {
    {0x1.0000000000000p+0, 0x1.159db309e65fep+0, 0x1.193062f9f3f38p-54},
    {0x1.0000000000000p+1, 0x1.0ace15fb90e0ep+0, 0x1.25ef7d20832a5p-54},
    {0x1.2000000000000p+2, 0x1.04c6ede62129ap+0, -0x1.cab30cd3b03fcp-54},
    {0x1.0000000000000p+3, 0x1.02ade07d0adb2p+0, 0x1.5a8dd2f818739p-54},
    {0x1.0000000000000p+5, 0x1.00aae22def9aap+0, -0x1.993c094d4414ep-54},
    {0x1.1300000000000p+7, 0x1.0027bb12d73f8p+0, 0x1.5813dbe261abcp-56},
    {0x1.f400000000000p+8, 0x1.000aec6f715e4p+0, 0x1.f8e359b16acfdp-54},
};

// C_n(eta(lambda)): {n, lambda, value}
inline constexpr Ref2 kCnRefs[] = {
    {0x0.0p+0, 0x1.8000000000000p-6, -0x1.33075a905a4cdp-1, 0x1.dd4685d64dcf0p-56},
    {0x0.0p+0, 0x1.7000000000000p-4, -0x1.0ae40c6fe22acp-1, 0x1.a4153c730a7c6p-59},
    {0x0.0p+0, 0x1.1000000000000p+2, -0x1.c05077dde1303p-3, -0x1.30e9697661d75p-59},
    {0x0.0p+0, 0x1.3800000000000p+4, -0x1.00c745d57e3cep-3, 0x1.cad22d4d97b61p-62},
    {0x0.0p+0, 0x1.7c00000000000p+6, -0x1.06aac95a46754p-4, 0x1.ff5990e1d1d1ap-58},
    {0x1.0000000000000p+0, 0x1.8000000000000p-6, 0x1.174b689cda0a2p-5, -0x1.a4b64e2d52e16p-59},
    {0x1.0000000000000p+0, 0x1.7000000000000p-4, 0x1.29dfe3db6df62p-6, -0x1.65e1cda00dc23p-60},
    {0x1.0000000000000p+0, 0x1.1000000000000p+2, -0x1.c0354a480428fp-9, 0x1.4c87bb0899911p-64},
    {0x1.0000000000000p+0, 0x1.3800000000000p+4, -0x1.d9b9380e73275p-10, 0x1.bdab6f3dab290p-65},
    {0x1.0000000000000p+0, 0x1.7c00000000000p+6, -0x1.31a4040291e93p-11, 0x1.bba7f24742e67p-65},
    {0x1.0000000000000p+1, 0x1.8000000000000p-6, 0x1.05f915a57d4d3p-7, -0x1.3739ed71a0e77p-63},
    {0x1.0000000000000p+1, 0x1.7000000000000p-4, 0x1.2c223316ce1bap-7, -0x1.8912cd41871cap-61},
    {0x1.0000000000000p+1, 0x1.1000000000000p+2, 0x1.493cdcef811c9p-10, -0x1.09615a6ca3eaep-64},
    {0x1.0000000000000p+1, 0x1.3800000000000p+4, 0x1.023a324bb447fp-12, 0x1.d4dd5090e5ca7p-69},
    {0x1.0000000000000p+1, 0x1.7c00000000000p+6, 0x1.5fc3b51bb1552p-15, 0x1.f68746a07fc19p-70},
    {0x1.4000000000000p+2, 0x1.8000000000000p-6, 0x1.e2d7cc47ad524p-10, -0x1.1f3dd912b7e97p-64},
    {0x1.4000000000000p+2, 0x1.7000000000000p-4, 0x1.89f2e2b72965dp-10, -0x1.5b64c17827f00p-65},
    {0x1.4000000000000p+2, 0x1.1000000000000p+2, -0x1.6e767fd593036p-13, -0x1.76955dc72a030p-68},
    {0x1.4000000000000p+2, 0x1.3800000000000p+4, -0x1.58039cd468adcp-15, -0x1.0a8b5cbb7e2ddp-71},
    {0x1.4000000000000p+2, 0x1.7c00000000000p+6, -0x1.16c81f45fae33p-17, -0x1.27c86f0fae44dp-72},
    {0x1.2000000000000p+3, 0x1.8000000000000p-6, 0x1.b10aa6066abf5p-11, -0x1.bbc97b49a2ab5p-66},
    {0x1.2000000000000p+3, 0x1.7000000000000p-4, 0x1.6ca72bae96cd0p-9, -0x1.acdef20c5540ap-63},
    {0x1.2000000000000p+3, 0x1.1000000000000p+2, -0x1.d71f5407a53e7p-13, 0x1.836202615676ap-68},
    {0x1.2000000000000p+3, 0x1.3800000000000p+4, -0x1.79a6bdf4fc849p-15, 0x1.0d9114fb30961p-69},
    {0x1.2000000000000p+3, 0x1.7c00000000000p+6, -0x1.2b6bfdee1b2a6p-17, -0x1.04f99b9ae4800p-71},
    {0x1.1000000000000p+4, 0x1.8000000000000p-6, 0x1.ba32713dd672dp-3, 0x1.155fa53b7e3efp-58},
    {0x1.1000000000000p+4, 0x1.7000000000000p-4, 0x1.dadf03be4edb4p-4, 0x1.fcdb5f3c754b9p-58},
    {0x1.1000000000000p+4, 0x1.1000000000000p+2, -0x1.aedb95624a88dp-5, 0x1.925df8360f9d8p-59},
    {0x1.1000000000000p+4, 0x1.3800000000000p+4, -0x1.3d6a2c4a32436p-7, 0x1.95a85ca284fa9p-62},
    {0x1.1000000000000p+4, 0x1.7c00000000000p+6, -0x1.f49a11dc865c3p-10, 0x1.69d7a8a861dd0p-64},
    {0x1.9000000000000p+4, 0x1.8000000000000p-6, 0x1.c2ae4f1836de2p+10, 0x1.45463604f0100p-49},
    {0x1.9000000000000p+4, 0x1.7000000000000p-4, -0x1.2bd15739f455ep+11, 0x1.90b265d045c60p-43},
    {0x1.9000000000000p+4, 0x1.1000000000000p+2, -0x1.493120acf9485p+9, -0x1.e6b283920cdedp-46},
    {0x1.9000000000000p+4, 0x1.3800000000000p+4, -0x1.d9ae0fa9479bfp+6, 0x1.5c4fb4426841bp-50},
    {0x1.9000000000000p+4, 0x1.7c00000000000p+6, -0x1.752bb685c99a2p+4, -0x1.7e390b3567919p-52},
    {0x1.1000000000000p+5, 0x1.8000000000000p-6, 0x1.d6757931b1861p+27, -0x1.7670c8044e19bp-31},
    {0x1.1000000000000p+5, 0x1.7000000000000p-4, 0x1.11f3faa7499f0p+31, 0x1.b23a33d960000p-25},
    {0x1.1000000000000p+5, 0x1.1000000000000p+2, 0x1.a408b0b0dbb29p+25, -0x1.4df2e0f09d900p-29},
    {0x1.1000000000000p+5, 0x1.3800000000000p+4, 0x1.629305adf32a1p+21, 0x1.5ecc7321177b8p-34},
    {0x1.1000000000000p+5, 0x1.7c00000000000p+6, 0x1.76af1c41c563ap+18, 0x1.c63f2b065f19bp-37},
};

// gamma*(a, z): {a, z, value} (50-digit series)
inline constexpr Ref2 kGstarRefs[] = {
    {0x1.0000000000000p+0, -0x1.0000000000000p+1, 0x1.98e64b8d4ddaep+1, -0x1.9e62e22efca4cp-54},
    {0x1.0000000000000p+1, -0x1.0000000000000p+0, 0x1.0000000000000p+0, 0x0.0p+0},
    {0x1.0000000000000p-1, -0x1.0000000000000p+0, 0x1.a6824d7282ed2p+0, 0x1.a7c36779c1d05p-55},
    {0x1.0000000000000p-1, -0x1.2000000000000p+3, 0x1.0faa6fee5eee6p+9, -0x1.85bf830128e14p-52},
    {0x1.6000000000000p+2, -0x1.e000000000000p+6, 0x1.5e72d645e1acbp+160, -0x1.004a3806cb3a0p+105},
    {0x1.999999999999ap+1, -0x1.4000000000000p+3, 0x1.6e1f17ef8b28ep+9, 0x1.4bba0f1b6237bp-47},
    {0x1.4000000000000p+4, -0x1.b800000000000p+5, 0x1.4cbb7d054b7f5p+16, -0x1.425f575e8fc7dp-40},
    {0x1.2d00000000000p+7, -0x1.9000000000000p+8, 0x1.a9085ca7855eap-302, -0x1.7a29aa37325dcp-362},
    {-0x1.3333333333333p-2, -0x1.0000000000000p+0, 0x1.6b6b3932b2844p-2, -0x1.80d579bc31ffcp-59},
    {-0x1.4000000000000p+1, -0x1.e000000000000p+6, -0x1.4433313bdca95p+166, 0x1.dc653cc8054e5p+111},
    {-0x1.0000000000000p-1, -0x1.2000000000000p+3, -0x1.3e4eee24441ddp+8, 0x1.5441bd3d5d518p-50},
    {-0x1.4010000000000p+2, -0x1.4000000000000p+5, 0x1.73a4a6627b373p+49, 0x1.4320ef3a8f7eep-5},
    {-0x1.9400000000000p+5, -0x1.9000000000000p+7, -0x1.a4eea6872d29cp+496, 0x1.352f4b5b7ede3p+437},
    {-0x1.9080000000000p+7, -0x1.2c00000000000p+8, -inf, inf},
    {-0x1.d333333333333p+2, -0x1.9000000000000p+3, 0x1.5076ca36ff076p+26, 0x1.43ab227d789eap-28},
    {-0x1.92ccccccccccdp+6, -0x1.9000000000000p+8, -inf, inf},
};

// normalized gtilde_a(z) = (gamma*(-a,-z) - z^a cos(pi a))/(sin(pi a) Gamma(a) e^z)
inline constexpr Ref2 kGtildeRefs[] = {
    {0x1.4000000000000p+1, 0x1.e000000000000p+6, -0x1.bfc5f6953348cp-8, -0x1.f26ef3f6a9a54p-62},
    {0x1.0100000000000p+3, 0x1.2c00000000000p+7, -0x1.2941926090246p-6, 0x1.42b18f5ba629bp-61},
    {0x1.9000000000000p+2, 0x1.e000000000000p+6, -0x1.21422bfd864cdp-6, -0x1.edcd8b01cfda1p-60},
    {0x1.5333333333333p+2, 0x1.4000000000000p+5, -0x1.9c91b2750d918p-5, 0x1.28c25f5ee83c1p-60},
    {0x1.9666666666666p+3, 0x1.2c00000000000p+8, -0x1.cec27e2dac5ccp-7, 0x1.26a9ec8ec814ap-65},
    {0x1.0466666666666p+6, 0x1.8000000000000p+0, 0x1.4dc33d31a0ed6p-2, -0x1.89b50cf0a98e1p-56},
    {0x1.9133333333333p+6, 0x1.c200000000000p+8, -0x1.7756cba77c0adp-4, -0x1.b69a0fdd5b790p-60},
    {0x1.c240000000000p+8, 0x1.e000000000000p+4, 0x1.5d46ed6647bc4p-2, -0x1.b442c6f7c9ef5p-58},
    {0x1.0400000000000p+5, 0x1.0000000000000p+5, 0x1.0fbf8e9b78664p-2, 0x1.2c5a03e4ab787p-56},
};

// T_a(eta(lambda)): {a, lambda, value}
inline constexpr Ref2 kTRefs[] = {
    {0x1.499999999999ap+3, 0x1.35c28f5c28f5cp+0, -0x1.44d5bcab5567fp-2, -0x1.61a6c9205bd68p-57},
    {0x1.499999999999ap+3, 0x1.51eb851eb851fp-1, -0x1.78cadc822486bp-2, -0x1.d273a289f3ef8p-56},
    {0x1.4cccccccccccdp+2, 0x1.ccccccccccccdp+0, -0x1.231274a6b6d3cp-2, -0x1.0595adb72a5e5p-56},
    {0x1.4cccccccccccdp+2, 0x1.999999999999ap-2, -0x1.a38dc2021a16cp-2, 0x1.9dc6126b99d5bp-57},
    {0x1.959999999999ap+5, 0x1.0cccccccccccdp+0, -0x1.5121492b95cb9p-2, 0x1.1e79a84efe15dp-56},
    {0x1.909999999999ap+7, 0x1.3d70a3d70a3d7p-2, -0x1.b8411647a38eap-2, 0x1.282d5b78ba32ep-59},
    {0x1.00ccccccccccdp+5, 0x1.a000000000000p+2, -0x1.83b658511b68ap-3, -0x1.6586f39b9420cp-58},
    {0x1.9333333333333p+2, 0x1.e000000000000p+4, -0x1.ae4c48adbed0bp-4, -0x1.687b864756d5bp-58},
    {0x1.c2b3333333333p+8, 0x1.0624dd2f1a9fcp-8, -0x1.57eda1c490ea0p-1, -0x1.f8e56b5a43af8p-55},
};

}  // namespace incgamneg::testrefs
