// Generated by tools/gen_coeffs.py -- do not edit by hand.
// Regenerate with:  python3 tools/gen_coeffs.py
// checksum: fnv1a64 over all table doubles (little-endian bytes, in
// registration order) = 0x4A054D02CAC0571E

#include "generated/uae_tables.hpp"

namespace incgamneg::tables {

const std::uint64_t kChecksum = 0x4A054D02CAC0571Eull;

// d_n: eta/(lambda-1) = sum d_n eta^n; d1 = -1/3, d2 = 1/12, d3 = -2/135
const std::array<double, 67> kD = {
    0x1.0000000000000p+0,  // d0 = 1
    -0x1.5555555555555p-2,  // d1 = -1/3
    0x1.5555555555555p-4,  // d2 = 1/12
    -0x1.e573ac901e574p-7,  // d3 = -2/135
    0x1.2f684bda12f68p-10,  // d4 = 1/864
    0x1.71de3a556c734p-12,  // d5 = 1/2835
    -0x1.76e06fec7273bp-13,  // d6 = -139/777600
    0x1.48c5892f7cd83p-15,  // d7 = 1/25515
    -0x1.255370652afc1p-19,  // d8 = -571/261273600
    -0x1.f1b22f594c6b5p-20,
    0x1.bd6d21e4b4109p-21,
    -0x1.7b5f9a2d0465cp-23,
    0x1.ccf5ceb7f0d9fp-28,
    0x1.6097d55c37c1cp-27,
    -0x1.2d2197c7a2faap-28,
    0x1.f6e66d24d5c8ap-31,
    -0x1.c0d9b6edf2b0bp-36,
    -0x1.0070a87340428p-34,
    0x1.ac9475c463659p-36,
    -0x1.61ca701fd754ap-38,
    0x1.ef98008f5eec2p-44,
    0x1.7ba0759769d7cp-42,
    -0x1.3989bebb193c0p-43,
    0x1.0104fc4369a3cp-45,
    -0x1.283fe7950ad7bp-51,
    -0x1.1ca914d71a27cp-49,
    0x1.d2e7d5ca48b90p-51,
    -0x1.7cfbcf3db9bfcp-53,
    0x1.75713641cd216p-59,
    0x1.af2c06678a063p-57,
    -0x1.5ff773ccd8f52p-58,
    0x1.1e448645d530ap-60,
    -0x1.e8941961647b2p-67,
    -0x1.491cd2eefcbb9p-64,
    0x1.0bc59c3d0ab18p-65,
    -0x1.b2882c51c4622p-68,
    0x1.487cb1da37454p-74,
    0x1.f996834a9fa6dp-72,
    -0x1.9a58bdfb91736p-73,
    0x1.4c5495fbedc54p-75,
    -0x1.c31ad5ffa1756p-82,
    -0x1.8657eec8c52adp-79,
    0x1.3c3598d51940dp-80,
    -0x1.ff6c2759d486ep-83,
    0x1.3af7d5e7d52c2p-89,
    0x1.2ea760cd7e58dp-86,
    -0x1.e99a671da8ae3p-88,
    0x1.8b7383a1be43fp-90,
    -0x1.bddc15230e586p-97,
    -0x1.d703133baabcap-94,
    0x1.7c816395acc64p-95,
    -0x1.3305eba919c68p-97,
    0x1.3f29ea7d8b04ep-104,
    0x1.6fa22723a4bbfp-101,
    -0x1.28af3ab6a9b47p-102,
    0x1.de5eb978bb2eap-105,
    -0x1.cd53fd6ba00b7p-112,
    -0x1.1fb398ac366b4p-108,
    0x1.cff380b5df968p-110,
    -0x1.75c2a0f222d69p-112,
    0x1.5025f7222a4a5p-119,
    0x1.c354e070b58ecp-116,
    -0x1.6ba38e87bd81dp-117,
    0x1.24c326a15748ep-119,
    -0x1.ed5b4c0634be7p-127,
    -0x1.62ba1a3aa49aep-123,
    0x1.1d9e6a26da267p-124,
};

// gamma_n: 1/Gamma*(a) ~ sum gamma_n a^-n
const std::array<double, 17> kGammaRecip = {
    0x1.0000000000000p+0,  // 1
    -0x1.5555555555555p-4,  // -1/12
    0x1.c71c71c71c71cp-9,  // 1/288
    0x1.5f7268edab4c8p-9,  // 139/51840
    -0x1.e13ce465fa859p-13,  // -571/2488320
    -0x1.9b0ff6874f2c4p-11,  // -163879/209018880
    0x1.247604839c038p-14,  // 5246819/75246796800
    0x1.36773bdb97b48p-11,  // 534703531/902961561600
    -0x1.b1d75d3346711p-15,  // -4483131259/86684309913600
    -0x1.b8239c670e690p-11,
    0x1.2e31f9b7913eap-14,
    0x1.f5dbcaf756cdep-10,
    -0x1.54d241144693fp-13,
    -0x1.a3a699f4a401bp-8,
    0x1.1b33b019b3e6fp-11,
    0x1.e3c8e8bed86bbp-6,
    -0x1.45497f334cd1dp-9,
};

// Stirling series log Gamma*(x) = sum_k S_k x^-k (odd k), as hi/lo pairs.
// S_k = B_{k+1} / ((k+1) k) for odd k.
const std::array<StirlingTerm, 20> kStirling = {{
    {1, 0x1.5555555555555p-4, 0x1.5555555555555p-58},
    {3, -0x1.6c16c16c16c17p-9, 0x1.f49f49f49f49fp-64},
    {5, 0x1.a01a01a01a01ap-11, 0x1.a01a01a01a01ap-71},
    {7, -0x1.3813813813814p-11, 0x1.fb1fb1fb1fb20p-65},
    {9, 0x1.b951e2b18ff23p-11, 0x1.5c3a9ce01b952p-65},
    {11, -0x1.f6ab0d9993c7dp-10, 0x1.f82553c999b0ep-64},
    {13, 0x1.a41a41a41a41ap-8, 0x1.0690690690690p-62},
    {15, -0x1.e4286cb0f5398p-6, 0x1.1efcdab896745p-61},
    {17, 0x1.6fe96381e0680p-3, -0x1.79e2405a71f88p-61},
    {19, -0x1.6476701181f3ap+0, 0x1.24246319da678p-56},
    {21, 0x1.ace44322ce006p+3, -0x1.62c2b1bbcdd32p-51},
    {23, -0x1.39b2525cccc1bp+7, 0x1.52604768a30fcp-47},
    {25, 0x1.12234e81b4e82p+11, -0x1.2c5f92c5f92c6p-43},
    {27, -0x1.1a198ae1c4ab8p+15, 0x1.4c012227b696ep-41},
    {29, 0x1.51a2089a6e11ap+19, 0x1.c219ee4fdc447p-36},
    {31, -0x1.d1089b142d357p+23, -0x1.e2030b4d5de20p-31},
    {33, 0x1.6d29a0f6433b8p+28, -0x1.9dbcc48676f31p-26},
    {35, -0x1.445119d9e466fp+33, 0x1.5159fdb2a3b69p-22},
    {37, 0x1.43779bc9d4025p+38, -0x1.95e8efdb195e9p-18},
    {39, -0x1.6800b7bc07a8dp+43, 0x1.eaede53f475a8p-11},
}};

// Large-eta coefficient functions C_n(eta):
//   C_n = N_n(u)/u^(2n+1) + (-1)^(n+1) (2n-1)!!/eta^(2n+1),  u = lambda-1.
// kCnU[n] holds N_n in powers of u, kCnLambda[n] holds N_n in powers of
// lambda (better conditioned as lambda -> 0); degree of N_n is 2n.
namespace {
const std::array<double, 1225> kCnUFlat = {
    // n = 0
    0x1.0000000000000p+0,  // 1
    // n = 1
    -0x1.0000000000000p+0,  // -1
    -0x1.0000000000000p+0,  // -1
    -0x1.5555555555555p-4,  // -1/12
    // n = 2
    0x1.8000000000000p+1,  // 3
    0x1.4000000000000p+2,  // 5
    0x1.0aaaaaaaaaaabp+1,  // 25/12
    0x1.5555555555555p-4,  // 1/12
    0x1.c71c71c71c71cp-9,  // 1/288
    // n = 3
    -0x1.e000000000000p+3,  // -15
    -0x1.1800000000000p+5,  // -35
    -0x1.a400000000000p+4,  // -105/4
    -0x1.9aaaaaaaaaaabp+2,  // -77/12
    -0x1.5c71c71c71c72p-3,  // -49/288
    -0x1.c71c71c71c71cp-9,  // -1/288
    0x1.5f7268edab4c8p-9,  // 139/51840
    // n = 4
    0x1.a400000000000p+6,
    0x1.3b00000000000p+8,
    0x1.5540000000000p+8,
    0x1.39d5555555555p+7,
    0x1.a2d5555555555p+4,
    0x1.08e38e38e38e4p-1,
    0x1.17633d5046cb9p-8,
    -0x1.5f7268edab4c8p-9,
    -0x1.e13ce465fa859p-13,
    // n = 5
    -0x1.d880000000000p+9,
    -0x1.b120000000000p+11,
    -0x1.32cc000000000p+12,
    -0x1.a048000000000p+11,
    -0x1.0c18aaaaaaaabp+10,
    -0x1.09e8e38e38e39p+7,
    -0x1.0a86a314dbf87p+1,
    -0x1.e6b74f0329162p-8,
    0x1.6e7c5010db20bp-8,
    0x1.e13ce465fa859p-13,
    -0x1.9b0ff6874f2c4p-11,
    // n = 6
    0x1.44d8000000000p+13,
    0x1.5fea000000000p+15,
    0x1.33ecc00000000p+16,
    0x1.14a4c00000000p+16,
    0x1.0ac9655555555p+15,
    0x1.03836aaaaaaabp+13,
    0x1.9411f684bda13p+9,
    0x1.4e1ba781948b1p+3,
    0x1.a7b425ed097b4p-7,
    -0x1.1a622f9e3c429p-6,
    0x1.54e308a8a3d2fp-12,
    0x1.9b0ff6874f2c4p-11,
    0x1.247604839c038p-14,
    // n = 7
    -0x1.07ef800000000p+17,
    -0x1.49eb600000000p+19,
    -0x1.57aa840000000p+20,
    -0x1.8099bc0000000p+20,
    -0x1.efdf390000000p+19,
    -0x1.6d036caaaaaabp+18,
    -0x1.199c6625ed098p+16,
    -0x1.657a0aaaaaaabp+12,
    -0x1.f5ade38e38e39p+5,
    0x1.19197ea16558bp-8,
    0x1.1663868442572p-4,
    -0x1.4d5d1e82e5054p-9,
    -0x1.ad5756cf88ec8p-10,
    -0x1.247604839c038p-14,
    0x1.36773bdb97b48p-11,
    // n = 8
    0x1.eee1100000000p+20,
    0x1.5e8a160000000p+23,
    0x1.a791854000000p+24,
    0x1.1bd6ec2000000p+25,
    0x1.cae8089800000p+24,
    0x1.c6fa892555555p+23,
    0x1.0bbc224800000p+22,
    0x1.5327939555555p+19,
    0x1.68e7faf8e38e4p+15,
    0x1.b6f1908379fecp+8,
    -0x1.7656cc04746d3p-2,
    -0x1.51917f313bc4cp-2,
    0x1.ee5ddf10b85dfp-7,
    0x1.4b25313fc3917p-8,
    -0x1.dab3757561673p-12,
    -0x1.36773bdb97b48p-11,
    -0x1.b1d75d3346711p-15,
    // n = 9
    -0x1.06e7908000000p+25,
    -0x1.a043fa2000000p+27,
    -0x1.1e2ebbf600000p+29,
    -0x1.bee8451200000p+29,
    -0x1.b2ca5219c0000p+29,
    -0x1.0fbd3d34c0000p+29,
    -0x1.b14492a4c0000p+27,
    -0x1.a520de3255555p+25,
    -0x1.c151c8202aaabp+22,
    -0x1.9972dd7906f40p+18,
    -0x1.b69fad86d9054p+11,
    0x1.225c88f469599p+2,
    0x1.e70a941332737p+0,
    -0x1.87c3f7ba641f1p-4,
    -0x1.34e4c7be4300ap-6,
    0x1.4d3ee9f9d060fp-9,
    0x1.4405f6c531e80p-10,
    0x1.b1d75d3346711p-15,
    -0x1.b8239c670e690p-11,
    // n = 10
    0x1.3832fb9800000p+29,
    0x1.112c9c2500000p+32,
    0x1.a524c60e60000p+33,
    0x1.777cf663b0000p+34,
    0x1.ab42f90512000p+34,
    0x1.42b1a14326000p+34,
    0x1.45c783579f000p+33,
    0x1.aefde0cf4c000p+31,
    0x1.6275add883aabp+29,
    0x1.44e6b63cd79aep+26,
    0x1.01d53e0edc0cap+22,
    0x1.ece274f339f14p+14,
    -0x1.8ce6d9589c62dp+5,
    -0x1.97cc11f40f739p+3,
    0x1.5616b901858f6p-1,
    0x1.58761c6e99b4bp-4,
    -0x1.c6c12683c317fp-7,
    -0x1.f397ad11650f9p-9,
    0x1.81e8b0c0a59aep-11,
    0x1.b8239c670e690p-11,
    0x1.2e31f9b7913eap-14,
    // n = 11
    -0x1.99c2ea3780000p+33,
    -0x1.88b0207530000p+36,
    -0x1.4f6bc66419000p+38,
    -0x1.503d356457800p+39,
    -0x1.b631dee2c4900p+39,
    -0x1.845464ec44900p+39,
    -0x1.db6726d438880p+38,
    -0x1.8fb2944f7db00p+37,
    -0x1.c11e0c055d3ebp+35,
    -0x1.3e753e559f313p+33,
    -0x1.fd8264b08a516p+29,
    -0x1.64ed50669e99dp+25,
    -0x1.339de82ae34adp+18,
    0x1.123b5c8059e60p+9,
    0x1.8516d3d5fa25bp+6,
    -0x1.4b9ef48bb3467p+2,
    -0x1.bda2fca150134p-2,
    0x1.5aabadb48690ep-4,
    0x1.ab3c0bed46028p-7,
    -0x1.fd8052c40368bp-9,
    -0x1.cb06bc02877cfp-10,
    -0x1.2e31f9b7913eap-14,
    0x1.f5dbcaf756cdep-10,
    // n = 12
    0x1.26841857e4000p+38,
    0x1.32c9995b8d800p+41,
    0x1.1f9cffc5d4a80p+43,
    0x1.40359e778ee40p+44,
    0x1.d653ddb55b658p+44,
    0x1.de9d151b8b468p+44,
    0x1.58b6df1545952p+44,
    0x1.607b71b49d744p+43,
    0x1.f8f59f20bf8abp+41,
    0x1.eab5d0e7c23d8p+39,
    0x1.308635a7e2513p+37,
    0x1.aeb511943fd15p+33,
    0x1.0d58f56c31ebep+29,
    0x1.a64dba21284ebp+21,
    -0x1.8d81696a878cdp+12,
    -0x1.a0ffbf07fe360p+9,
    0x1.63fdde5c85a77p+5,
    0x1.44ee6c7b4cd5bp+1,
    -0x1.25617335ee64ep-1,
    -0x1.96aafa3796a8fp-5,
    0x1.54d16ca27b1bcp-6,
    0x1.61b69ccfa227ap-8,
    -0x1.d0158bc064a60p-10,
    -0x1.f5dbcaf756cdep-10,
    -0x1.54d241144693fp-13,
    // n = 13
    -0x1.cc2e660954400p+42,
    -0x1.02da19653f640p+46,
    -0x1.083ea4975b60cp+48,
    -0x1.438148dd4aa92p+49,
    -0x1.0865f3389b1bbp+50,
    -0x1.2fe49b581d835p+50,
    -0x1.f7cec1a5d85cap+49,
    -0x1.2fcf4c6f6d994p+49,
    -0x1.09560f17f201dp+48,
    -0x1.499936a65e096p+46,
    -0x1.190aa2bd8da44p+44,
    -0x1.350bb9437fa99p+41,
    -0x1.868bf3d836602p+37,
    -0x1.b82a036702dbcp+32,
    -0x1.3c31a71ca19c6p+25,
    0x1.31dcf365dd0d0p+16,
    0x1.f037d5277c5dcp+12,
    -0x1.a4cc80efcb29cp+8,
    -0x1.04c11b4780afap+4,
    0x1.13c54889cba83p+2,
    0x1.8cfd936dd50c2p-3,
    -0x1.0139b77f81365p-3,
    -0x1.0ab2929b8f488p-6,
    0x1.2b7f0725fb71cp-7,
    0x1.059477844d9b9p-8,
    0x1.54d241144693fp-13,
    -0x1.a3a699f4a401bp-8,
    // n = 14
    0x1.84472617df160p+47,
    0x1.d52b4e0782e54p+50,
    0x1.03053dbed043ep+53,
    0x1.59d96ef117b0ap+54,
    0x1.3759c223ab7b5p+55,
    0x1.8ef6719d43c63p+55,
    0x1.763d0256ff48bp+55,
    0x1.04409f6d3d3e4p+55,
    0x1.0ca71c40c0585p+54,
    0x1.97c9494b39d4dp+52,
    0x1.bd7330b5836a3p+50,
    0x1.513cc411d673cp+48,
    0x1.4bedec8d2ad93p+45,
    0x1.7a2c5ab2840e2p+41,
    0x1.832693a9b106fp+36,
    0x1.0075a4ebfd1c3p+29,
    -0x1.f570396a3043ap+19,
    -0x1.44b66581c790dp+16,
    0x1.102a9a8b62804p+12,
    0x1.c0cfd91bfbb71p+6,
    -0x1.1ea03791cc7b8p+5,
    -0x1.34e52ec0f303cp-1,
    0x1.ab827a279034dp-1,
    0x1.6f3f675eeac39p-5,
    -0x1.8d96b3f7988c1p-5,
    -0x1.9305454f169dfp-7,
    0x1.8e5975e35f987p-8,
    0x1.a3a699f4a401bp-8,
    0x1.1b33b019b3e6fp-11,
    // n = 15
    -0x1.5fe07a85a22bfp+52,
    -0x1.c681f39746ce1p+55,
    -0x1.0ddd28a1d20a6p+58,
    -0x1.8646e030631c3p+59,
    -0x1.7fbe74bdcf982p+60,
    -0x1.0f3b7a70e8668p+61,
    -0x1.1c1a57723d287p+61,
    -0x1.bfe84749a1971p+60,
    -0x1.0b1342e05937dp+60,
    -0x1.e00a3bfc7e866p+58,
    -0x1.40fce709f5a6cp+57,
    -0x1.37e8f07e482f5p+55,
    -0x1.a779f5fed0f31p+52,
    -0x1.784f910125c7ap+49,
    -0x1.8583fc05fcbdep+45,
    -0x1.6cb4f84fb2f17p+40,
    -0x1.c0022b05a7cdbp+32,
    0x1.b5dc482a71ec8p+23,
    0x1.cfadeefab0e23p+19,
    -0x1.7efea3bd335afp+15,
    -0x1.8fc9b020f79f6p+9,
    0x1.4747d33f09d70p+8,
    -0x1.04b3f086aca9dp+0,
    -0x1.874923bb112f6p+2,
    -0x1.af15d0c70bb26p-6,
    0x1.2aded924a22b4p-2,
    0x1.fb477233a5899p-6,
    -0x1.fc966564d9b33p-6,
    -0x1.b559d4f63f402p-7,
    -0x1.1b33b019b3e6fp-11,
    0x1.e3c8e8bed86bbp-6,
    // n = 16
    0x1.54e176b1751a9p+57,
    0x1.d4b6033401048p+60,
    0x1.29d3a75e60a59p+63,
    0x1.cfc63a93a9e55p+64,
    0x1.ee87b4955284ap+65,
    0x1.7e44acbbd0677p+66,
    0x1.ba54e7ccfc9aep+66,
    0x1.85ebaf0cdc604p+66,
    0x1.07f206c43ca8bp+66,
    0x1.12779a60a5df3p+65,
    0x1.b35a050cdb972p+63,
    0x1.03625d32447cdp+62,
    0x1.c4bf4721ad3f3p+59,
    0x1.15e6024160b85p+57,
    0x1.c13746ddb0493p+53,
    0x1.a941e388da214p+49,
    0x1.6e58fa58083ecp+44,
    0x1.a34277f5babf0p+36,
    -0x1.96ac9447deaa7p+27,
    -0x1.66c9627ed14f8p+23,
    0x1.238a6572412d3p+19,
    0x1.59286e25ee54cp+12,
    -0x1.97f47da034ca8p+11,
    0x1.d09bbf60f1bf2p+5,
    0x1.88c256d1bf599p+5,
    -0x1.9127e2e12df97p+0,
    -0x1.e7efdaa2fc2fbp+0,
    -0x1.f60ba56ed4e2fp-6,
    0x1.504c0aa098b5ap-3,
    0x1.50dcfd397d0f5p-5,
    -0x1.d215adbd3d2d4p-6,
    -0x1.e3c8e8bed86bbp-6,
    -0x1.45497f334cd1dp-9,
    // n = 17
    -0x1.5f88826700c36p+62,
    -0x1.005389c0708e8p+66,
    -0x1.5b1bca89edc0fp+68,
    -0x1.21862dfe130bap+70,
    -0x1.4cc7f38e4535ep+71,
    -0x1.1748ca7bffdf5p+72,
    -0x1.61d9dd5ca5be9p+72,
    -0x1.590390e7b4187p+72,
    -0x1.058249c1e1390p+72,
    -0x1.3521ef2d8d978p+71,
    -0x1.1c13e0b0cbdc9p+70,
    -0x1.921283aa855f8p+68,
    -0x1.aeeea1d0a4980p+66,
    -0x1.5489770850ce5p+64,
    -0x1.7cb69d142cfbep+61,
    -0x1.19ac23137056ap+58,
    -0x1.ea941449e1ab8p+53,
    -0x1.86e1cc757e7d7p+48,
    -0x1.a283d710390eap+40,
    0x1.90e0ce6650322p+31,
    0x1.2b222f0829d65p+27,
    -0x1.ddcc5e241bb46p+22,
    -0x1.da891db58267dp+14,
    0x1.13ee90ffb1eeep+15,
    -0x1.ff4ea87292b9dp+9,
    -0x1.ad516294edd50p+8,
    0x1.9e0ce117e5519p+4,
    0x1.b0d4023ee9286p+3,
    -0x1.463cde43f6f88p-1,
    -0x1.f8964c971e26ep-1,
    -0x1.4429b8250c3cbp-4,
    0x1.27ba5b56ad0bfp-3,
    0x1.f81d80b20d38dp-5,
    0x1.45497f334cd1dp-9,
    -0x1.6fb2ba98c8bc4p-3,
    // n = 18
    0x1.807d4ea0a8d5bp+67,
    0x1.286097468224cp+71,
    0x1.aa0ad9755b14dp+73,
    0x1.7b035835a2575p+75,
    0x1.d324caf0dc920p+76,
    0x1.a70517cd29677p+77,
    0x1.2340d7381b0b1p+78,
    0x1.374847b359e51p+78,
    0x1.0544868329cecp+78,
    0x1.5a3bb766178dap+77,
    0x1.6a23561a12ad4p+76,
    0x1.2953003a18463p+75,
    0x1.7afcc3d3619afp+73,
    0x1.704324c36430bp+71,
    0x1.09597cb85f3e8p+69,
    0x1.0fd949d2c24c1p+66,
    0x1.724baa990a4c2p+62,
    0x1.2a26e423eeb71p+58,
    0x1.b97ab218af89bp+52,
    0x1.bbe3a41a09777p+44,
    -0x1.a267cf27caa5bp+35,
    -0x1.0b5f7584aa76fp+31,
    0x1.a39461c7bbb7dp+26,
    -0x1.c56715c10f1f6p+14,
    -0x1.92e9a8e114bf5p+18,
    0x1.e5af829d4f325p+13,
    0x1.fb88d3667b2a8p+11,
    -0x1.551c3f2d2b47fp+8,
    -0x1.9efcae1731a6cp+6,
    0x1.4bf2fdf6675b5p+3,
    0x1.93c3fbd43b91ep+2,
    -0x1.748120fe1597fp-3,
    -0x1.863fe3780f869p-1,
    -0x1.84406c7f24513p-3,
    0x1.65886e9f2e55bp-3,
    0x1.6fb2ba98c8bc4p-3,
    0x1.ed5bd48e4f389p-7,
    // n = 19
    -0x1.bc90e2e9c3372p+72,
    -0x1.6935b85dee9ccp+76,
    -0x1.12ab8432181c9p+79,
    -0x1.0399429789b24p+81,
    -0x1.558bdc1270da7p+82,
    -0x1.4bf20838ad916p+83,
    -0x1.eda95c64eee67p+83,
    -0x1.1efd49db3f3cbp+84,
    -0x1.084cee8f81151p+84,
    -0x1.84403a2388315p+83,
    -0x1.c7bb28cc547d0p+82,
    -0x1.aa5788bd999ebp+81,
    -0x1.3b98ce6e7cc95p+80,
    -0x1.6d220fe1c70a3p+78,
    -0x1.43e06ffbac41cp+76,
    -0x1.ac29fbf9424eep+73,
    -0x1.942afa805900dp+70,
    -0x1.fd4e59bbac2a4p+66,
    -0x1.7ce1a3fadfa6ap+62,
    -0x1.071a89caf6df1p+57,
    -0x1.f281d1773d82cp+48,
    0x1.cd44437291f77p+39,
    0x1.fe29394ea0ee2p+34,
    -0x1.894250080f6d8p+30,
    0x1.60297c676faf2p+22,
    0x1.3bfbbc2731004p+22,
    -0x1.c37f264b98911p+17,
    -0x1.4247dc66ed4bap+15,
    0x1.0f8d2ff77e087p+12,
    0x1.a95de41b4af03p+9,
    -0x1.fc98bc23416b2p+6,
    -0x1.58907593bf9e1p+5,
    0x1.39c0245aadc09p+2,
    0x1.246ffbbaee3e4p+2,
    0x1.e068661f06439p-3,
    -0x1.c3ffb043c71e7p-1,
    -0x1.7f1d993d3b361p-2,
    -0x1.ed5bd48e4f389p-7,
    0x1.644d13921c967p+0,
    // n = 20
    0x1.0ee84a4672f59p+78,
    0x1.ceccd43859b8ep+81,
    0x1.73344a37dd4c4p+84,
    0x1.7371ff20f5e0cp+86,
    0x1.03cb9714b471ap+88,
    0x1.0dbcd28b2710fp+89,
    0x1.aee3e80227640p+89,
    0x1.0ec44ebfa535cp+90,
    0x1.0f83e87b22249p+90,
    0x1.b608a25bace38p+89,
    0x1.1d3e827ef2fb7p+89,
    0x1.2bc3f4660fe36p+88,
    0x1.fa310ebc830fdp+86,
    0x1.5473d96715b7fp+85,
    0x1.67ed82c6995d2p+83,
    0x1.252b471bfccacp+81,
    0x1.656f597c79ba4p+78,
    0x1.386141e7505e6p+75,
    0x1.6dc51eead0896p+71,
    0x1.fe2f309b332f6p+66,
    0x1.4a09295213636p+61,
    0x1.277b592bd44c9p+53,
    -0x1.0bee952400472p+44,
    -0x1.02bbd3f185031p+39,
    0x1.87f829236e74cp+34,
    -0x1.2f5194a1a1ca3p+27,
    -0x1.09058a295f809p+26,
    0x1.ab44c870b8740p+21,
    0x1.b4bf865bda47fp+18,
    -0x1.b7d8cd9891012p+15,
    -0x1.cc2fe2ad28793p+12,
    0x1.743a0738c4b3cp+10,
    0x1.363f7199d49d0p+8,
    -0x1.eddc1c9b8ab73p+5,
    -0x1.c96c0d959b9c0p+4,
    0x1.2ddf105a15295p+1,
    0x1.29d564dd5ea95p+2,
    0x1.270ba24025a57p+0,
    -0x1.5c97a43fe3599p+0,
    -0x1.644d13921c967p+0,
    -0x1.dd5fa0e771b94p-4,
    // n = 21
    -0x1.5b199f2a434aap+83,
    -0x1.36f19e95dc483p+87,
    -0x1.065bddce71dcfp+90,
    -0x1.1518a6ca14b41p+92,
    -0x1.9aa93e6db9a21p+93,
    -0x1.c5a620348444cp+94,
    -0x1.835ed94f73844p+95,
    -0x1.05aa9b466689fp+96,
    -0x1.1bd84db54d5f6p+96,
    -0x1.f30458ecd1a77p+95,
    -0x1.652e986354239p+95,
    -0x1.a0d868fad2d63p+94,
    -0x1.8bb6d2766496cp+93,
    -0x1.2fd7923bf8236p+92,
    -0x1.75d177d0175a9p+90,
    -0x1.6b3d30c940bfcp+88,
    -0x1.111b0983e547fp+86,
    -0x1.34881c16eea26p+83,
    -0x1.f56e98a21149fp+79,
    -0x1.11dbb1c41b7c4p+76,
    -0x1.65852183a2166p+71,
    -0x1.b29d606b303bdp+65,
    -0x1.70bb19ce3bff9p+57,
    0x1.4743eb8e3e01ap+48,
    0x1.160f91120878ap+43,
    -0x1.9e19088c62188p+38,
    0x1.ab8c2d65068e7p+31,
    0x1.d98ca01768fabp+29,
    -0x1.a237a307f590dp+25,
    -0x1.399f49e453c26p+22,
    0x1.716eb7ad4e3b4p+19,
    0x1.0237dab62d174p+16,
    -0x1.1445307d1cd67p+14,
    -0x1.1f4bdc399dd9cp+11,
    0x1.5afdb1467f65cp+9,
    0x1.73f1a25a762cap+7,
    -0x1.2b59052c23195p+5,
    -0x1.be0da6a4bfbd0p+4,
    -0x1.0ccf3881d9120p-1,
    0x1.b79844f8f8ce6p+2,
    0x1.7338109958243p+1,
    0x1.dd5fa0e771b94p-4,
    -0x1.acbc4bfe43e00p+3,
    // n = 22
    0x1.d26a6de0ca6c5p+88,
    0x1.b543c702bdc59p+92,
    0x1.832958351806ep+95,
    0x1.ae683d88ba59ep+97,
    0x1.50d6d62a03971p+99,
    0x1.8a7a34249d183p+100,
    0x1.66a02731860cep+101,
    0x1.032962289111dp+102,
    0x1.2e6a41d6bffdcp+102,
    0x1.1fc7721e0e00ap+102,
    0x1.c14655d106c34p+101,
    0x1.206220d1ec17ep+101,
    0x1.30427b7615c79p+100,
    0x1.06e3143766e15p+99,
    0x1.718b8e3d5debbp+97,
    0x1.a23b37409b541p+95,
    0x1.77713eb1eb04fp+93,
    0x1.05c4a2e19db13p+91,
    0x1.132a7d468bbc0p+88,
    0x1.a16affe900157p+84,
    0x1.aad905a793026p+80,
    0x1.05a2e0dfc344bp+76,
    0x1.2bbe2d12a0808p+70,
    0x1.e329076b75d8ap+61,
    -0x1.a3667a53f8d28p+52,
    -0x1.3ba39af87a9c6p+47,
    0x1.ce4f9fbd77adap+42,
    -0x1.1e540c20989b0p+36,
    -0x1.c10b5d89f1973p+33,
    0x1.aa6194ec6f611p+29,
    0x1.d9cc44005eb01p+25,
    -0x1.445f31bde3ca5p+23,
    -0x1.245bff6641b92p+19,
    0x1.a8c2fd150850ep+17,
    0x1.0587796c317b9p+14,
    -0x1.e359d005ecddap+12,
    -0x1.32762938ce7f2p+10,
    0x1.ad330304669d1p+8,
    0x1.53ca4916190b2p+7,
    -0x1.8d97e424aee39p+4,
    -0x1.2166a5993cee0p+5,
    -0x1.1ddf8af69fe21p+3,
    0x1.a546cd7aa6192p+3,
    0x1.acbc4bfe43e00p+3,
    0x1.1eed0a9756022p+0,
    // n = 23
    -0x1.47f2d5420e542p+94,
    -0x1.411dc626035d1p+98,
    -0x1.29b39a5de873ap+101,
    -0x1.5b7c5a32a5542p+103,
    -0x1.1e66bb4b58df8p+105,
    -0x1.6271313057558p+106,
    -0x1.55cfc82d9ec76p+107,
    -0x1.07255e392cfa8p+108,
    -0x1.48b600583d214p+108,
    -0x1.50b59e410edf1p+108,
    -0x1.1cb96ba80fb9cp+108,
    -0x1.8ee6985dd51f8p+107,
    -0x1.cf4a8a87ee144p+106,
    -0x1.bd36196d79e68p+105,
    -0x1.6062e0aa43a06p+104,
    -0x1.c80512be97641p+102,
    -0x1.dd272c00e0ddfp+100,
    -0x1.8d81a472977b4p+98,
    -0x1.021189bbdab7ep+96,
    -0x1.fabc9164b5cf7p+92,
    -0x1.67fe88b3febf0p+89,
    -0x1.59bd2ef568011p+85,
    -0x1.8f2fd6d2d001fp+80,
    -0x1.b02d8cffe099cp+74,
    -0x1.4ba29779bd775p+66,
    0x1.1965724df5af3p+57,
    0x1.79648d4911528p+51,
    -0x1.0ffb09bd35b7cp+47,
    0x1.7dc21010fdc48p+40,
    0x1.c275fa13c9ba9p+37,
    -0x1.c6248ce874ed6p+33,
    -0x1.753aacdecef0dp+29,
    0x1.2aabf77e58a77p+27,
    0x1.3bcc601e47ae8p+22,
    -0x1.550be23f127d4p+21,
    -0x1.a11c6be5d4095p+16,
    0x1.5930bfcfb1146p+16,
    0x1.daf05b3d9d4f7p+12,
    -0x1.20edc17f08c8fp+12,
    -0x1.040ac28fe5846p+10,
    0x1.49f91d0d87aa1p+8,
    0x1.b13831bd34220p+7,
    -0x1.e158f255cb0c9p+1,
    -0x1.0929a00d8f417p+6,
    -0x1.beab1ca7b9402p+4,
    -0x1.1eed0a9756022p+0,
    0x1.399a52c414c0dp+7,
    // n = 24
    0x1.e1aca939050bap+99,
    0x1.ebb5976a35268p+103,
    0x1.dc57eaaee37d5p+106,
    0x1.233a102553863p+109,
    0x1.f84ccaaea8414p+110,
    0x1.48d0cb33092b3p+112,
    0x1.4f464061165fdp+113,
    0x1.11f3e90258f87p+114,
    0x1.6cc64319815cdp+114,
    0x1.903abe2c6614bp+114,
    0x1.6c870833c9ebdp+114,
    0x1.14cc0d178d084p+114,
    0x1.5f101795f2fb4p+113,
    0x1.739f22836a945p+112,
    0x1.475e3b6e0e31dp+111,
    0x1.dd673c5f3b967p+109,
    0x1.1dca47b366ecep+108,
    0x1.15b42a95daabfp+106,
    0x1.af21835ffd913p+103,
    0x1.059634c5c0280p+101,
    0x1.e15cd7a31af3bp+97,
    0x1.414d5eba55394p+94,
    0x1.22a8a1260a14fp+90,
    0x1.3cede87bb2235p+85,
    0x1.4510869cc7f38p+79,
    0x1.dbf844006ac29p+70,
    -0x1.8aa8cd10f16bdp+61,
    -0x1.da145cad1e89fp+55,
    0x1.506f1f465acafp+51,
    -0x1.0257851f7adbcp+45,
    -0x1.dc9c4bfad32e2p+41,
    0x1.f9da8084e92b4p+37,
    0x1.2f3a5edd32299p+33,
    -0x1.20a3cea74712cp+31,
    -0x1.138c0061be6bap+25,
    0x1.1ee0525aa1fe0p+25,
    0x1.2e0f34365523fp+18,
    -0x1.ffbdcede63c64p+19,
    -0x1.0ca0f85e1ac14p+15,
    0x1.860e2a52e3433p+15,
    0x1.77b88869dfae6p+12,
    -0x1.c32f0c12ca419p+11,
    -0x1.4036c6f0109dep+10,
    0x1.1bf71984e92ffp+8,
    0x1.5ce9b56d01fd7p+8,
    0x1.57f7bdd285a03p+6,
    -0x1.351e9e99b768cp+7,
    -0x1.399a52c414c0dp+7,
    -0x1.a3739d2755201p+3,
    // n = 25
    -0x1.70c8318fa7dcep+105,
    -0x1.87d4b4a8a25abp+109,
    -0x1.8be9968a640bap+112,
    -0x1.fa179b4bc3d4ep+114,
    -0x1.cb3edc5038522p+116,
    -0x1.3ab50b53c9e13p+118,
    -0x1.524af91ac62f3p+119,
    -0x1.2469aa8a27e73p+120,
    -0x1.9d7713e5e1428p+120,
    -0x1.e3d3b9d816ac7p+120,
    -0x1.d846ffdb4ed8bp+120,
    -0x1.827b70c58ac8ap+120,
    -0x1.09d3ce9753f98p+120,
    -0x1.337a0f57a672fp+119,
    -0x1.2a8d47aa03d51p+118,
    -0x1.e4de7d09ab5a7p+116,
    -0x1.474cfe8ed8310p+115,
    -0x1.6c25a49678cf4p+113,
    -0x1.49e9397e7a608p+111,
    -0x1.def7aba356ae1p+108,
    -0x1.108093b0212c4p+106,
    -0x1.d76099c831bf1p+102,
    -0x1.287797628c1a3p+99,
    -0x1.fa94a4be790f2p+94,
    -0x1.057920892aad9p+90,
    -0x1.fd4ecc87f8bc8p+83,
    -0x1.646c5e569dfb3p+75,
    0x1.20c10b6309998p+66,
    0x1.382170eea2458p+60,
    -0x1.b4862372b9c42p+55,
    0x1.664d000af73f2p+49,
    0x1.09341e984130ep+46,
    -0x1.269c58711b52bp+42,
    -0x1.f40a2242670f0p+36,
    0x1.24ad1ba8b59cdp+35,
    0x1.d3be131531a9cp+23,
    -0x1.f9de41884c113p+28,
    0x1.05182df0b83e1p+23,
    0x1.8b5945d2d5fb0p+23,
    -0x1.d8d17d98dd28fp+16,
    -0x1.0e33d40b3fc44p+19,
    -0x1.8a3026db6d06dp+14,
    0x1.27a3818de8c35p+15,
    0x1.c5e3329245a25p+12,
    -0x1.af0b6487d0226p+11,
    -0x1.0511091e71f27p+11,
    0x1.ded8c05035f3dp+6,
    0x1.84a4205553eefp+9,
    0x1.46b5efad4f69dp+8,
    0x1.a3739d2755201p+3,
    -0x1.1211c6f39f917p+11,
    // n = 26
    0x1.25df877e79c40p+111,
    0x1.447c259ba6732p+115,
    0x1.55629ce66c73cp+118,
    0x1.c7596a495005ep+120,
    0x1.b02696e91e143p+122,
    0x1.3682aa96f370fp+124,
    0x1.5ef5c738efe62p+125,
    0x1.3ff700d2651b9p+126,
    0x1.ded4a69d6ec7ap+126,
    0x1.29a779aa211cfp+127,
    0x1.360836ef26b20p+127,
    0x1.100d5131faa01p+127,
    0x1.938a385fade97p+126,
    0x1.fa8a9ce4792c6p+125,
    0x1.0cdd4fd32fefdp+125,
    0x1.e191ee074c9fcp+123,
    0x1.6a3c33f07f804p+122,
    0x1.c6b63624348cap+120,
    0x1.d7f61fb27be92p+118,
    0x1.901778bed9095p+116,
    0x1.107b67b3ff5b6p+114,
    0x1.239b38155b0d1p+111,
    0x1.db801c51d8822p+107,
    0x1.1a8671b284472p+104,
    0x1.c90bf35de5ad6p+99,
    0x1.bfb3a70031ed4p+94,
    0x1.9ee67ad82dc49p+88,
    0x1.1608614f6648ap+80,
    -0x1.b824515dea8b4p+70,
    -0x1.adee4ed11b488p+64,
    0x1.286fae3ec2eddp+60,
    -0x1.ffb534d62eb28p+53,
    -0x1.35a38badec75fp+50,
    0x1.66a3d6a07b420p+46,
    0x1.970f6fd913759p+40,
    -0x1.371529447249cp+39,
    0x1.cba26cd71dc2dp+32,
    0x1.d31cb42e32467p+32,
    -0x1.12d6d876f7892p+28,
    -0x1.3e734e7ee8903p+27,
    0x1.cc2e8b1c21258p+22,
    0x1.82ed251409f02p+22,
    -0x1.58e765da06ddep+16,
    -0x1.85545811ee900p+18,
    -0x1.094e3696da934p+15,
    0x1.1e7b5f66d5c9fp+15,
    0x1.74e5162a88d02p+13,
    -0x1.cf75fe61dc5d1p+11,
    -0x1.ff285a3651b6ap+11,
    -0x1.f72c846d31c7bp+9,
    0x1.0ecadfb950e73p+11,
    0x1.1211c6f39f917p+11,
    0x1.6e61a7d1bc918p+7,
    // n = 27
    -0x1.e6ba386979acap+116,
    -0x1.16dab051c30afp+121,
    -0x1.30ff30d96d53fp+124,
    -0x1.a7c0804b2e1fap+126,
    -0x1.a3cd024ccca8ap+128,
    -0x1.3b9962d3d5569p+130,
    -0x1.762d7e466b775p+131,
    -0x1.66d7c7be20c25p+132,
    -0x1.1b5386def5481p+133,
    -0x1.74f9e6384fb61p+133,
    -0x1.9cf0a88da4c37p+133,
    -0x1.82d642317a78ap+133,
    -0x1.33cb0357722ddp+133,
    -0x1.a0cfdd24b1477p+132,
    -0x1.e06d7eb37cf1ep+131,
    -0x1.d6a50bf38d2bcp+130,
    -0x1.86a40c57da59fp+129,
    -0x1.115c6da42119fp+128,
    -0x1.404d24c9c4800p+126,
    -0x1.373db75ef496bp+124,
    -0x1.ef58c1072e6f7p+121,
    -0x1.3d72a9f44ab7ep+119,
    -0x1.406579cc4fa90p+116,
    -0x1.edbfdcc2353e6p+112,
    -0x1.15cfa13bc4c3ep+109,
    -0x1.aa70be1e1982ap+104,
    -0x1.8d357bfec54a1p+99,
    -0x1.5ef45e7577210p+93,
    -0x1.c321aff13d867p+84,
    0x1.5ce62a7dd28ebp+75,
    0x1.3521b6c902b4bp+69,
    -0x1.a4a15828eb357p+64,
    0x1.7932fec884806p+58,
    0x1.7a61da8fbcb9ap+54,
    -0x1.c7da559be12eep+50,
    -0x1.34666d9b46d22p+44,
    0x1.5a271545b773bp+43,
    -0x1.ddbca3e960f2cp+37,
    -0x1.c3021d7f39c57p+36,
    0x1.8cfbdd470dcfap+32,
    0x1.0af5b626d4a6bp+31,
    -0x1.4c0bd66af1314p+27,
    -0x1.1e7d5f76efe13p+26,
    0x1.2e9c7c8cae482p+22,
    0x1.05fc36e1d0786p+22,
    0x1.7f93c05c0377bp+13,
    -0x1.700d7c4023b77p+18,
    -0x1.dec4a765bcc95p+15,
    0x1.4d88db95ac2bfp+15,
    0x1.7e5ec8ef994b2p+14,
    -0x1.35341abec0edfp+11,
    -0x1.54210b44cc762p+13,
    -0x1.1d84d4322d760p+12,
    -0x1.6e61a7d1bc918p+7,
    0x1.1a0a3d14004eep+15,
    // n = 28
    0x1.a248087aa4906p+122,
    0x1.f0b58a11a36b7p+126,
    0x1.19fc650cae1bbp+130,
    0x1.97713d5a191c2p+132,
    0x1.a49a77e47874dp+134,
    0x1.4a31acaacb713p+136,
    0x1.99c2bf48a99d3p+137,
    0x1.9c5f40258db57p+138,
    0x1.56a241f30869dp+139,
    0x1.dc24f484356bdp+139,
    0x1.173669fe08922p+140,
    0x1.16264202ce063p+140,
    0x1.d8bfb3c0c4e9cp+139,
    0x1.57909acecae24p+139,
    0x1.ab6b7bb5925c5p+138,
    0x1.c6d9b8e71828ap+137,
    0x1.9d2d233afcc2cp+136,
    0x1.3f33681242e28p+135,
    0x1.a1340ed53a1bcp+133,
    0x1.c9e28e1bfffe6p+131,
    0x1.a1de90aece82dp+129,
    0x1.390dc4225f516p+127,
    0x1.7a96e946e5a82p+124,
    0x1.6944a366d57a2p+121,
    0x1.07b200a439091p+118,
    0x1.199f71c3c85d1p+114,
    0x1.9b0975ff2f00dp+109,
    0x1.6cc4cfa97dec1p+104,
    0x1.33d424dd0202dp+98,
    0x1.7c16aef248cbep+89,
    -0x1.1f410be16f3c6p+80,
    -0x1.cf4d1d782933dp+73,
    0x1.373c8f822feb2p+69,
    -0x1.1f5edb844c584p+63,
    -0x1.e2e1a37fda067p+58,
    0x1.2e2a48404ff7dp+55,
    0x1.67f1a8c16733ep+47,
    -0x1.92a898612fa52p+47,
    0x1.8486ac0911e10p+42,
    0x1.c6628182bc84cp+40,
    -0x1.050f8554a0beep+37,
    -0x1.d03b6a151c573p+34,
    0x1.96ed4a65e47eap+31,
    0x1.b52d0f7415773p+29,
    -0x1.9712c324c208ep+26,
    -0x1.692a87ceb827bp+25,
    0x1.8f136644900bcp+21,
    0x1.d9e7c0b4dfc79p+21,
    0x1.75d9ce858c45bp+17,
    -0x1.b33b4b7cd022ap+18,
    -0x1.069f049ccbe5cp+17,
    0x1.b4c153a068c08p+15,
    0x1.bf32dad79d826p+15,
    0x1.b7ba4b89d2159p+13,
    -0x1.172d79c45cd5cp+15,
    -0x1.1a0a3d14004eep+15,
    -0x1.78e27958520bep+11,
    // n = 29
    -0x1.7488278d3a909p+128,
    -0x1.c9e75b4842a71p+132,
    -0x1.0d7ed463dc8fap+136,
    -0x1.945cc579be97ap+138,
    -0x1.b241ce3a350cap+140,
    -0x1.635c571d123c3p+142,
    -0x1.ccab5e9349cf4p+143,
    -0x1.e56e02544a4a6p+144,
    -0x1.a7696f8cbdcbep+145,
    -0x1.35b7f8f09d40fp+146,
    -0x1.7f99d1882253cp+146,
    -0x1.94f77548925fcp+146,
    -0x1.6e1ee4a3c94eap+146,
    -0x1.1c4d1a68daf7fp+146,
    -0x1.7bc985fd2aa69p+145,
    -0x1.b46ba7c9d2436p+144,
    -0x1.aed756a08cd10p+143,
    -0x1.6c70fb177ed38p+142,
    -0x1.070f0f4de5a7dp+141,
    -0x1.42335a221768bp+139,
    -0x1.4c43af49e3d7fp+137,
    -0x1.1d9a9b39e4cb1p+135,
    -0x1.93f21e8b5ca18p+132,
    -0x1.ce102cd9338a2p+129,
    -0x1.a1d6dfb26e2bfp+126,
    -0x1.218987c597572p+123,
    -0x1.2610fb1642095p+119,
    -0x1.98e0ee64acb93p+114,
    -0x1.5a5463b48734ap+109,
    -0x1.179e8b54d3d26p+103,
    -0x1.4c1aa9a2fc977p+94,
    0x1.ea9f7eac323bcp+84,
    0x1.693c32efc6232p+78,
    -0x1.df92671651155p+73,
    0x1.c4bf6c1eb0cfbp+67,
    0x1.411a8b4e5dd55p+63,
    -0x1.a1529085ebcc3p+59,
    0x1.ee590fba41a53p+47,
    0x1.e8e7bf1725649p+51,
    -0x1.2695d05bc5204p+47,
    -0x1.dc82c1fdd6bc0p+44,
    0x1.4f67eaec8e55bp+41,
    0x1.a08b9b5d2b905p+38,
    -0x1.dd205120eae8cp+35,
    -0x1.552f85b3d7136p+33,
    0x1.d22f317b62b61p+30,
    0x1.fb7420ec2fda8p+28,
    -0x1.1d47176017726p+26,
    -0x1.355580b3bdcb3p+25,
    0x1.c1e18ea36276ep+20,
    0x1.13106ec0b4ab9p+22,
    0x1.27cdc8b63d89ep+19,
    -0x1.2f8863bf8880fp+19,
    -0x1.4e771237fcb43p+18,
    0x1.8dce21c3446bcp+15,
    0x1.5e6739dd45c7cp+17,
    0x1.25d150dec2df4p+16,
    0x1.78e27958520bep+11,
    -0x1.51924c095ab12p+19,
    // n = 30
    0x1.576d847631fd5p+134,
    0x1.b4708300df874p+138,
    0x1.09f48fd488366p+142,
    0x1.9dd26a14c2e0bp+144,
    0x1.cda4d86ca7481p+146,
    0x1.89220ccf08c88p+148,
    0x1.09b46f891e688p+150,
    0x1.24942b86bc762p+151,
    0x1.0b4e5aeb32b65p+152,
    0x1.9aabbcee0e79fp+152,
    0x1.0bd4bf741a917p+153,
    0x1.2ab5ae3154080p+153,
    0x1.1e4c23ef5acecp+153,
    0x1.d9361ae3a537fp+152,
    0x1.51dc44165e60cp+152,
    0x1.a10eb3e362444p+151,
    0x1.bcc65a74afdc9p+150,
    0x1.990dc0979439ep+149,
    0x1.436cf7ae5eca9p+148,
    0x1.b5bb57c6758fbp+146,
    0x1.f7fcd01320aeap+144,
    0x1.e9bc63b73d9b7p+142,
    0x1.8d8996bee4148p+140,
    0x1.0a051ccfd72d1p+138,
    0x1.20794984df85bp+135,
    0x1.ef7748b36699ap+131,
    0x1.46963870e00e3p+128,
    0x1.3c088a62197f7p+124,
    0x1.a35cfc6963d11p+119,
    0x1.539a532161155p+114,
    0x1.06bb1eb4646fbp+108,
    0x1.2c8cd6d7ff3e4p+99,
    -0x1.b20eba0295310p+89,
    -0x1.249d935c3e1e9p+83,
    0x1.80201d9041f8cp+78,
    -0x1.70c2caffa6884p+72,
    -0x1.bc2965f98490ap+67,
    0x1.2bde1a0c9479fp+64,
    -0x1.5615e914315c1p+56,
    -0x1.35563b439ad6cp+56,
    0x1.b6f6ad3e64483p+51,
    0x1.035854aa157dap+49,
    -0x1.b0a772ec7fe99p+45,
    -0x1.7ef04aeee0ec4p+42,
    0x1.168bba3b88a8ap+40,
    0x1.0cdf63ef1ad64p+37,
    -0x1.fefce1fbf017bp+34,
    -0x1.66d1065de27c1p+32,
    0x1.404ab5c5dad3ap+30,
    0x1.97c2c164c31ecp+28,
    -0x1.c208f92bda063p+25,
    -0x1.5a6c35af92f24p+25,
    -0x1.e36716ea61906p+18,
    0x1.8703fe1c96346p+22,
    0x1.b78a660d785d7p+20,
    -0x1.dab7a46a4b297p+19,
    -0x1.cc95b830cedb8p+19,
    -0x1.c4810d18e6df4p+17,
    0x1.4ea08716aa0d1p+19,
    0x1.51924c095ab12p+19,
    0x1.c2f2ac37c6c70p+15,
    // n = 31
    -0x1.47546240a7a57p+140,
    -0x1.ad9ec0f4dc092p+144,
    -0x1.0ec00c44faab1p+148,
    -0x1.b4520d48cc002p+150,
    -0x1.f8e87cc979231p+152,
    -0x1.bec77f6558ee7p+154,
    -0x1.3a5682a7200dbp+156,
    -0x1.69088ca69a149p+157,
    -0x1.58cb65a79d80dp+158,
    -0x1.1584366618e11p+159,
    -0x1.7c434d513b0d7p+159,
    -0x1.becb78a70ed22p+159,
    -0x1.c4903b99cb2c9p+159,
    -0x1.8ca695989f7b5p+159,
    -0x1.2d832b15949c8p+159,
    -0x1.8dff0aa6249f9p+158,
    -0x1.c8204d187474ap+157,
    -0x1.c55831ce269afp+156,
    -0x1.85e00f9cc9bfdp+155,
    -0x1.211df2cfb6f9bp+154,
    -0x1.6ffa6eed4d624p+152,
    -0x1.8f6364e0e2903p+150,
    -0x1.6ea5b4499b404p+148,
    -0x1.19bc9a232ced3p+146,
    -0x1.659799d703d3ep+143,
    -0x1.7062a01e3fa96p+140,
    -0x1.2d065dc0a1076p+137,
    -0x1.7a30deebf8c10p+133,
    -0x1.5d4cd22aa08eep+129,
    -0x1.bb14b6e5b9f84p+124,
    -0x1.579468385c1a8p+119,
    -0x1.fe244f86ed17bp+112,
    -0x1.1961b2145ab49p+104,
    0x1.8d5d80161a0ddp+94,
    0x1.ebd21052513aep+87,
    -0x1.3f6c9fddf8ccbp+83,
    0x1.367647ad0ecb4p+77,
    0x1.3ee38539c1a59p+72,
    -0x1.bfe16793d1b00p+68,
    0x1.ca8b0844fdeddp+61,
    0x1.97557361e5ca5p+60,
    -0x1.4897aeeb852b0p+56,
    -0x1.2411fc4d0d5ebp+53,
    0x1.1bd0518137c35p+50,
    0x1.64d136d4ecbd0p+46,
    -0x1.4990625d248e0p+44,
    -0x1.a1fb82e72966fp+40,
    0x1.16c566a05d50bp+39,
    0x1.f1cf714beb732p+35,
    -0x1.50b137f3a661bp+34,
    -0x1.0b254ba1cd9a8p+32,
    0x1.06f4e66df0dddp+30,
    0x1.b546eb0f070a5p+28,
    -0x1.6506be801b584p+25,
    -0x1.e72a446f8888dp+25,
    -0x1.9d287747da448p+22,
    0x1.41f3a7371cd42p+23,
    0x1.586db4c19e252p+22,
    -0x1.13b044158ba3fp+20,
    -0x1.a3c18b55ace26p+21,
    -0x1.5fa9e16b18e76p+20,
    -0x1.c2f2ac37c6c70p+15,
    0x1.d0f5c84a9b314p+23,
    // n = 32
    0x1.423710b7a506dp+146,
    0x1.b4553bf8af794p+150,
    0x1.1c122860923dap+154,
    0x1.d990af60aefaep+156,
    0x1.1bdcc71365be3p+159,
    0x1.04a1301b23c1ap+161,
    0x1.7d2e3f39ceb23p+162,
    0x1.c7e2014033181p+163,
    0x1.c64288e4eec3bp+164,
    0x1.7e4ef3942aab4p+165,
    0x1.1287a4f6b4f28p+166,
    0x1.52f687078078fp+166,
    0x1.69d420c324f92p+166,
    0x1.4f428a2ee53ffp+166,
    0x1.0e5d48ede1301p+166,
    0x1.7c1810fad383bp+165,
    0x1.d1fb244b963a8p+164,
    0x1.f1e36a840b655p+163,
    0x1.cee829494aacdp+162,
    0x1.7583d671a4c0bp+161,
    0x1.0493a790a9cb2p+160,
    0x1.38c291145529bp+158,
    0x1.40d1c4135e8bep+156,
    0x1.16e79f94a67a4p+154,
    0x1.96a5d91bb9bdcp+151,
    0x1.ea7f67428a1d6p+148,
    0x1.e0f709b0c2df4p+145,
    0x1.76a6cc1351ae2p+142,
    0x1.c157bb2761d2ep+138,
    0x1.8cc235f140490p+134,
    0x1.e1d88aafe68fap+129,
    0x1.664d54192cd58p+124,
    0x1.ff34e62b70cf9p+117,
    0x1.10398299b2b0dp+109,
    -0x1.780314d24da03p+99,
    -0x1.ac3e6e0c76023p+92,
    0x1.13673cb051a13p+88,
    -0x1.0e0c935bfbe63p+82,
    -0x1.da74b5606b32dp+76,
    0x1.5b38485f1454ap+73,
    -0x1.ea4afbaaed071p+66,
    -0x1.16a6e66a3e709p+65,
    0x1.f3bb83e87b4cbp+60,
    0x1.52ff0e68f0d5cp+57,
    -0x1.7d3fecf353463p+54,
    -0x1.4b07d572a6d88p+50,
    0x1.8e84225a22df9p+48,
    0x1.30b887c56d551p+44,
    -0x1.33f08e43d01c7p+43,
    -0x1.3f64f1bc93f13p+39,
    0x1.5cdea4520f58ep+38,
    0x1.4f80c47db3c7ep+35,
    -0x1.105fdd3909dc2p+34,
    -0x1.10bc3ab852b43p+32,
    0x1.f12bfd8ecde42p+29,
    0x1.2bda4df33a714p+29,
    -0x1.2c83dab1305d8p+24,
    -0x1.9ade5618d4878p+26,
    -0x1.ae7d79dbb1947p+24,
    0x1.2807daf192147p+24,
    0x1.13d09feeeb1c9p+24,
    0x1.0ecb33c131c8ap+22,
    -0x1.cd6fe2f22ba3bp+23,
    -0x1.d0f5c84a9b314p+23,
    -0x1.367b7a3a615cdp+20,
    // n = 33
    -0x1.473fecfa839afp+152,
    -0x1.c8c93ac857b2fp+156,
    -0x1.32e7337e9aec4p+160,
    -0x1.085650eab6c02p+163,
    -0x1.47e6f2fb3229ap+165,
    -0x1.37fab88910c3dp+167,
    -0x1.d99230d6034f0p+168,
    -0x1.266c112369ca0p+170,
    -0x1.3192d53e7de6ap+171,
    -0x1.0c675b0bcbd48p+172,
    -0x1.932f1c54d62b5p+172,
    -0x1.04f649d92bf33p+173,
    -0x1.24d1d687f7823p+173,
    -0x1.1e04ddb3da712p+173,
    -0x1.e7d86663a9b64p+172,
    -0x1.6bebbcbf8a11cp+172,
    -0x1.db54f128e4c14p+171,
    -0x1.0fbcc7ddb1a56p+171,
    -0x1.0fb1e785f8fbbp+170,
    -0x1.da2ddf62aa0c2p+168,
    -0x1.6812ab0a8a1bfp+167,
    -0x1.d9f285826c0c0p+165,
    -0x1.0ce8ffad3b6e2p+164,
    -0x1.054eefeb66d61p+162,
    -0x1.af3091388b3fdp+159,
    -0x1.2ad43326f5c7ep+157,
    -0x1.573271c68d2a6p+154,
    -0x1.40e4eb0d25cffp+151,
    -0x1.dd5ee95d49908p+147,
    -0x1.11b98c183fd08p+144,
    -0x1.ced2a36ceb738p+139,
    -0x1.0d75347d9d151p+135,
    -0x1.80d08675793b8p+129,
    -0x1.081f636fb3046p+123,
    -0x1.0fde71daa7c20p+114,
    0x1.6f65f13a12907p+104,
    0x1.81e12e3bb2027p+97,
    -0x1.ebc8c5f81010dp+92,
    0x1.e51895a943a67p+86,
    0x1.6d0ec1afb2625p+81,
    -0x1.171fa5a405726p+78,
    0x1.e7892b056097cp+71,
    0x1.8b876d326c1eep+69,
    -0x1.8450b20c1d518p+65,
    -0x1.939236f05f7c6p+61,
    0x1.072041d6292a8p+59,
    0x1.277a909c8e344p+54,
    -0x1.eea9e256eb197p+52,
    -0x1.666f9a5428e13p+47,
    0x1.5b25e643d65d4p+47,
    0x1.37b9296c397f1p+42,
    -0x1.6bc2cf8aae0d3p+42,
    -0x1.6dd3741da29afp+38,
    0x1.10712ec0e784ap+38,
    0x1.43a6c87ff0ab2p+35,
    -0x1.089b57851909dp+34,
    -0x1.6c403ebfce5a4p+32,
    0x1.ef636b9aaa21dp+29,
    0x1.f909c8c0e3600p+29,
    0x1.354fccd61ba52p+26,
    -0x1.8a68482a80813p+27,
    -0x1.9c7794daf255ep+26,
    0x1.a55ca0aa0facfp+24,
    0x1.2147672d7729bp+26,
    0x1.e45d7fee41471p+24,
    0x1.367b7a3a615cdp+20,
    -0x1.6d1cabf9499b3p+28,
    // n = 34
    0x1.5696ec1641c63p+158,
    0x1.ec78f35ffe8cfp+162,
    0x1.5523c8967efefp+166,
    0x1.2f4caaf4496b2p+169,
    0x1.84dceb69f3110p+171,
    0x1.7eecb8909995fp+173,
    0x1.2d3e63f72fa31p+175,
    0x1.84dd25b431f73p+176,
    0x1.a3b6049e35a74p+177,
    0x1.801758cd7ec0ep+178,
    0x1.2d29cfdf1fbb9p+179,
    0x1.97e27b3bcdd42p+179,
    0x1.dffbd4fadf28bp+179,
    0x1.ecf86f6c99035p+179,
    0x1.bb53b5750494ep+179,
    0x1.5dd75f13145cbp+179,
    0x1.e5136171eb537p+178,
    0x1.27899628e489ap+178,
    0x1.3c4d96c67c199p+177,
    0x1.28eccf2512830p+176,
    0x1.e7d94257de3f6p+174,
    0x1.5d9749992cd6bp+173,
    0x1.b33039d8a48d6p+171,
    0x1.d3faca0486ec8p+169,
    0x1.afb9b2482cca1p+167,
    0x1.52bb71f661e1bp+165,
    0x1.bf2d975bef321p+162,
    0x1.e9dc668072c6cp+159,
    0x1.b57ae0970a5e7p+156,
    0x1.37369b9aa5909p+153,
    0x1.55c572c47b498p+149,
    0x1.150ae55362a48p+145,
    0x1.35b76b5992aa2p+140,
    0x1.a94698771751fp+134,
    0x1.192d885962f32p+128,
    0x1.18018bed2e7b7p+119,
    -0x1.72519583a6396p+109,
    -0x1.6769c2fd0ff9ep+102,
    0x1.c62dc07a097a8p+97,
    -0x1.c199aeed332f8p+91,
    -0x1.21fc93016f82fp+86,
    0x1.d0d4e9b8f7b71p+82,
    -0x1.d95fe64837995p+76,
    -0x1.22ce04f6d3185p+74,
    0x1.355d9700e2473p+70,
    0x1.e9af1857eb1c3p+65,
    -0x1.75eae174e46f9p+63,
    -0x1.d2778e24a2595p+57,
    0x1.3bd0bf9362b21p+57,
    0x1.18cf21bcfb13bp+48,
    -0x1.90e448ec6911ap+51,
    0x1.04709c3d87b16p+43,
    0x1.813233586a944p+46,
    0x1.a24ccfcbf774dp+40,
    -0x1.0f41f945c9057p+42,
    -0x1.477a842c144ebp+38,
    0x1.050f8c6cca3eep+38,
    0x1.a770cd779126ep+35,
    -0x1.28d9d216951d9p+34,
    -0x1.2f6a7db9e1a05p+33,
    0x1.7ce6b174453cfp+29,
    0x1.f3c816f74b513p+30,
    0x1.e7066d13469acp+28,
    -0x1.a4f459629c0fcp+28,
    -0x1.7c18ef2a23670p+28,
    -0x1.74f9fbc484003p+26,
    0x1.6aafb504d4d87p+28,
    0x1.6d1cabf9499b3p+28,
    0x1.e783fc6a302eap+24,
};
const std::array<double, 1225> kCnLambdaFlat = {
    // n = 0
    0x1.0000000000000p+0,  // 1
    // n = 1
    -0x1.5555555555555p-4,  // -1/12
    -0x1.aaaaaaaaaaaabp-1,  // -5/6
    -0x1.5555555555555p-4,  // -1/12
    // n = 2
    0x1.c71c71c71c71cp-9,  // 1/288
    0x1.11c71c71c71c7p+0,  // 77/72
    0x1.daaaaaaaaaaabp+0,  // 89/48
    0x1.1c71c71c71c72p-4,  // 5/72
    0x1.c71c71c71c71cp-9,  // 1/288
    // n = 3
    0x1.5f7268edab4c8p-9,  // 139/51840
    -0x1.1a573ac901e57p+0,  // -9529/8640
    -0x1.fc897b425ed09p+2,  // -27461/3456
    -0x1.74c3f35ba7819p+2,  // -15097/2592
    -0x1.cd097b425ed09p-4,  // -389/3456
    -0x1.40795ceb24079p-6,  // -169/8640
    0x1.5f7268edab4c8p-9,  // 139/51840
    // n = 4
    -0x1.e13ce465fa859p-13,
    0x1.16017992db8c9p+0,
    0x1.680b2258128aap+4,
    0x1.c9b9b9a057a6bp+5,
    0x1.7bb64df5770b9p+4,
    0x1.cb15b3ba0c387p-2,
    0x1.1017992db8c89p-6,
    -0x1.bb4fdaeab826cp-11,
    -0x1.e13ce465fa859p-13,
    // n = 5
    -0x1.9b0ff6874f2c4p-11,
    -0x1.13784c7e75bb2p+0,
    -0x1.add3c28b1f36bp+5,
    -0x1.49126eb3370d8p+8,
    -0x1.b6630518a6dfcp+8,
    -0x1.e2d0fc1a2072ap+6,
    -0x1.075f268edab4cp+1,
    0x1.9b17446acb6a5p-5,
    -0x1.0422d35c9e15cp-5,
    0x1.086eeda62965cp-7,
    -0x1.9b0ff6874f2c4p-11,
    // n = 6
    0x1.247604839c038p-14,
    0x1.1576ac50971acp+0,
    0x1.d8e344e5b43adp+6,
    0x1.6fb066681e307p+10,
    0x1.122285ffd1ed5p+12,
    0x1.cb058773181a2p+11,
    0x1.7051372ee20c4p+9,
    0x1.3c34e6c4aa3ccp+3,
    0x1.67bcd14b802cfp-4,
    0x1.de216b7b80960p-8,
    -0x1.e49c1b8f93781p-9,
    -0x1.ba1103e1ad90ap-15,
    0x1.247604839c038p-14,
    // n = 7
    0x1.36773bdb97b48p-11,
    -0x1.17d164f2421fep+0,
    -0x1.f2cacdf4b0a19p+7,
    -0x1.650ecf88a3d6ep+12,
    -0x1.f7ee6704c844cp+14,
    -0x1.c3daf00fe039fp+15,
    -0x1.0806d26bc6740p+15,
    -0x1.46ba4dcdab0e6p+12,
    -0x1.d1b464c1046f4p+5,
    -0x1.b0b83c72589f8p+0,
    0x1.337b1bfb28ca3p-1,
    -0x1.a18a4c1ed5a3ap-3,
    0x1.b373cd8316e35p-5,
    -0x1.11f140692bf5fp-7,
    0x1.36773bdb97b48p-11,
    // n = 8
    -0x1.b1d75d3346711p-15,
    0x1.15c1804daccc4p+0,
    0x1.010b5560046fap+9,
    0x1.3e73d2398db09p+14,
    0x1.81dcb5494a786p+17,
    0x1.3a6e65a935935p+19,
    0x1.7d6b57b19058ep+19,
    0x1.4cc4331962028p+18,
    0x1.4a5c61cc68b94p+15,
    0x1.a74bc8d912c5ap+8,
    0x1.dc71d687b7f18p+1,
    -0x1.11818ffa14e92p-1,
    0x1.5610ac9112afep-4,
    -0x1.65932076d6899p-6,
    0x1.2374e308a8a3dp-9,
    0x1.ed80855ebaf28p-13,
    -0x1.b1d75d3346711p-15,
    // n = 9
    -0x1.b8239c670e690p-11,
    -0x1.11a99193641c8p+0,
    -0x1.056a93cb7eef9p+10,
    -0x1.0cf5824e3a787p+16,
    -0x1.0697d9bb4f8ddp+20,
    -0x1.61468c6a13cfbp+22,
    -0x1.7adb2c4cbbe63p+23,
    -0x1.4f048208edf4fp+23,
    -0x1.c941f1fa1e922p+21,
    -0x1.7756244983d88p+18,
    -0x1.b08a68cd456f0p+11,
    0x1.a25a0e33326e3p+2,
    -0x1.ac34d39656acfp+3,
    0x1.c3c669ff7cc19p+2,
    -0x1.41a01aaee51dep+1,
    0x1.5983597bfcb28p-1,
    -0x1.0652315f13b3dp-3,
    0x1.f0d9e751237c9p-7,
    -0x1.b8239c670e690p-11,
    // n = 10
    0x1.2e31f9b7913eap-14,
    0x1.15607688cf815p+0,
    0x1.07d2c177963bfp+11,
    0x1.b6286092f1787p+17,
    0x1.49d53bb452a92p+22,
    0x1.57e345431e470p+25,
    0x1.28a10e648c408p+27,
    0x1.c6640c2f8687ap+27,
    0x1.346ba0e864efbp+27,
    0x1.54c15edc27808p+25,
    0x1.d96571dfcd6a7p+21,
    0x1.e54bb036e18d6p+14,
    0x1.d5700afeee6d1p+6,
    -0x1.d74899e415bb1p+1,
    -0x1.188b829bef794p+2,
    0x1.52f1212516bebp+0,
    -0x1.3414c3b5d577cp-2,
    0x1.6b60f3595c36ap-5,
    -0x1.8fcc800ed950ap-10,
    -0x1.3b5953e3dcb38p-11,
    0x1.2e31f9b7913eap-14,
    // n = 11
    0x1.f5dbcaf756cdep-10,
    -0x1.208bd7cb101a6p+0,
    -0x1.092666a670aa9p+12,
    -0x1.5c334b2206c89p+19,
    -0x1.8772db47eec3fp+24,
    -0x1.2e8ab24c7bff3p+28,
    -0x1.8a6a6b319a1ebp+30,
    -0x1.dce2c5600c4b6p+31,
    -0x1.13e6ab2ab602ep+32,
    -0x1.2a82ab8456ecbp+31,
    -0x1.120ed6e825625p+29,
    -0x1.4813a99cf327dp+25,
    -0x1.2f79e4786a416p+18,
    -0x1.ea2999c3a806ep+10,
    0x1.5f80914a9a534p+9,
    -0x1.3babd8777fb0ep+8,
    0x1.176c732566f62p+7,
    -0x1.8d511b563f97dp+5,
    0x1.bb551a7f6f144p+3,
    -0x1.77535f5b589e3p+1,
    0x1.c49aef00edbaep-2,
    -0x1.599e3486e7762p-5,
    0x1.f5dbcaf756cdep-10,
    // n = 12
    -0x1.54d241144693fp-13,
    0x1.1645c5acd11c3p+0,
    0x1.09ec6aee20bb3p+13,
    0x1.10068e31004a1p+21,
    0x1.bddade96ba54ep+26,
    0x1.ee6378149740cp+30,
    0x1.d1fdd4a549761p+33,
    0x1.a22bbf53672d1p+35,
    0x1.7864b83de8bcap+36,
    0x1.569d00c28aef0p+36,
    0x1.3004a7803a593p+35,
    0x1.d989cf6263a0bp+32,
    0x1.efabd0a1539d6p+28,
    0x1.a470cb0f4c42bp+21,
    0x1.272d9dc1b183fp+13,
    -0x1.58debb070fb5bp+10,
    0x1.54e9057b28100p+7,
    -0x1.35bf6b8a63682p+6,
    0x1.abd34957df45cp+4,
    -0x1.a9a5058c301f6p+2,
    0x1.297e564bc37f0p+0,
    -0x1.c6f6e33e7f698p-4,
    -0x1.53d60a618d8b2p-9,
    0x1.044d7c22be76fp-9,
    -0x1.54d241144693fp-13,
    // n = 13
    -0x1.a3a699f4a401bp-8,
    -0x1.d5392b8e4139cp-1,
    -0x1.0a5d18224757fp+14,
    -0x1.a3fbb17ee2b90p+22,
    -0x1.ec9c0502d595cp+28,
    -0x1.7e2412befdd00p+33,
    -0x1.f7fd755e8a4d5p+36,
    -0x1.414a7eb4a6af2p+39,
    -0x1.a76af7e4f237fp+40,
    -0x1.2851a9f086e72p+41,
    -0x1.b59e759f7a225p+40,
    -0x1.45b633582873bp+39,
    -0x1.b594b256c335ap+36,
    -0x1.9565cca63c07ep+32,
    -0x1.3ccfa9166feb7p+25,
    -0x1.07923a655ee71p+15,
    -0x1.6685c97872cd8p+14,
    0x1.3537d62791e8fp+14,
    -0x1.344cf9417ac32p+13,
    0x1.037525d08f867p+12,
    -0x1.6c655bb5a6b90p+10,
    0x1.a1bc411a2863cp+8,
    -0x1.7cea6d5e0b433p+6,
    0x1.09c605198a477p+4,
    -0x1.0a63989f73dfep+1,
    0x1.554c91a70a530p-3,
    -0x1.a3a699f4a401bp-8,
    // n = 14
    0x1.1b33b019b3e6fp-11,
    0x1.12fff31b93f37p+0,
    0x1.0a8d287b484c0p+15,
    0x1.417d8930fd1a7p+24,
    0x1.09fdcee97c135p+31,
    0x1.1b1890274e6c8p+36,
    0x1.fd5a7e7a25fa5p+39,
    0x1.be8059607755bp+42,
    0x1.9c840b23ca37bp+44,
    0x1.a21572c6c71c5p+45,
    0x1.d61d63f14b73ep+45,
    0x1.20777f4e75596p+45,
    0x1.6ebc241850d90p+43,
    0x1.aed19246c71f2p+40,
    0x1.64e383c3b4f99p+36,
    0x1.01a407a06e733p+29,
    0x1.80f6a8dc0b371p+19,
    -0x1.758cfc8cb4017p+16,
    -0x1.9d6e125a5d914p+13,
    0x1.8289e5093d918p+12,
    -0x1.298056c264854p+11,
    0x1.8b88875338137p+9,
    -0x1.9fbf7eaf487d6p+7,
    0x1.48100fb8aef8ap+5,
    -0x1.5be031f2783bep+2,
    0x1.3b0c798666d6ep-2,
    0x1.32222f3a90f94p-5,
    -0x1.1dc72732a8d34p-7,
    0x1.1b33b019b3e6fp-11,
    // n = 15
    0x1.e3c8e8bed86bbp-6,
    -0x1.f9c8bb9366921p+0,
    -0x1.0a9e6440515f1p+16,
    -0x1.e943c28bc8662p+25,
    -0x1.1a512d4c5dd8bp+33,
    -0x1.95d246dc7bdd3p+38,
    -0x1.e82d14d93aa9bp+42,
    -0x1.1ede69d7d24bfp+46,
    -0x1.67be24486b08dp+48,
    -0x1.f9e2b7e285d26p+49,
    -0x1.983696f441a68p+50,
    -0x1.7a4a8720645cap+50,
    -0x1.8949b5e956f86p+49,
    -0x1.b1692fa0f11cfp+47,
    -0x1.c255ff63228dep+44,
    -0x1.5078a4f98a22dp+40,
    -0x1.c35e0325c0271p+32,
    -0x1.7316acd7a67d3p+23,
    0x1.e0e9e93328031p+21,
    -0x1.82f70cfe7ecf5p+20,
    0x1.aa3af4ea190d7p+19,
    -0x1.97dd080cccd61p+18,
    0x1.4e1e957bcd1e1p+17,
    -0x1.d1a1d8395c141p+15,
    0x1.10254ba31cfafp+14,
    -0x1.05c69fdb4c9b5p+12,
    0x1.938130d7394dbp+9,
    -0x1.df0a117bce3cbp+6,
    0x1.9b1a2eb4b2f54p+3,
    -0x1.c5d3271ef151fp-1,
    0x1.e3c8e8bed86bbp-6,
    // n = 16
    -0x1.45497f334cd1dp-9,
    0x1.23c802ca2a8b0p+0,
    0x1.0abb6973b5653p+17,
    0x1.72b9519e26739p+27,
    0x1.27b207930888cp+35,
    0x1.1b69fc11d531dp+41,
    0x1.c09086076ee0cp+45,
    0x1.5a5b6aaf55c83p+49,
    0x1.1f7279d51e016p+52,
    0x1.0f9018c1c05a0p+54,
    0x1.2d76fe622da19p+55,
    0x1.8ded7183775acp+55,
    0x1.362c668fedeeap+55,
    0x1.158872d918beap+54,
    0x1.0c6bdec0d5e02p+52,
    0x1.f232711960198p+48,
    0x1.523c01907eec6p+44,
    0x1.a7ee9dc3e28bbp+36,
    0x1.766d8bba7c4aep+26,
    -0x1.34cf2f4f7d00ep+24,
    0x1.e8f117a10a401p+19,
    -0x1.f33bf7b4e726ep+18,
    0x1.edf05cffedb32p+17,
    -0x1.83775e132e0c8p+16,
    0x1.febf8736a0fb1p+14,
    -0x1.14cdcc575cc7ap+13,
    0x1.dad396fc14880p+10,
    -0x1.2dc477270bf95p+8,
    0x1.e14d29bda9ebdp+4,
    -0x1.0d8d52de47508p-1,
    -0x1.6048e4d0da2f3p-2,
    0x1.98ae8a072d6ddp-5,
    -0x1.45497f334cd1dp-9,
    // n = 17
    -0x1.6fb2ba98c8bc4p-3,
    0x1.42f9b4bc7e423p+2,
    -0x1.0addb5e922fd1p+18,
    -0x1.180fa6bffb3c7p+29,
    -0x1.328e767b5d7afp+37,
    -0x1.83c3a5d98db22p+43,
    -0x1.8e6b93ad2903bp+48,
    -0x1.8dae799e10a48p+52,
    -0x1.ac279d2cbc55ap+55,
    -0x1.0909c58417fecp+58,
    -0x1.8816718ed9affp+59,
    -0x1.617725db90d6cp+60,
    -0x1.85e3e480b92bep+60,
    -0x1.03ecdaa1ee470p+60,
    -0x1.95a2284d47116p+58,
    -0x1.5bf10d119e10ap+56,
    -0x1.22ce4067792eep+53,
    -0x1.69221638163dfp+48,
    -0x1.a86f82785422ap+40,
    -0x1.67ce09580b004p+29,
    0x1.98ab347427999p+23,
    0x1.396e6892959d2p+27,
    -0x1.75629b849a83ap+26,
    0x1.8412cd63ff956p+25,
    -0x1.6411bd1992046p+24,
    0x1.1d2ac9a581051p+23,
    -0x1.8b4c7936a8e6bp+21,
    0x1.d518aedef4833p+19,
    -0x1.d5b7f27c53d36p+17,
    0x1.853df39111569p+15,
    -0x1.03cf67f05ef4ep+13,
    0x1.0c76a1b3140d7p+10,
    -0x1.92f82eb71cea7p+6,
    0x1.86d68f723bb1ap+2,
    -0x1.6fb2ba98c8bc4p-3,
    // n = 18
    0x1.ed5bd48e4f389p-7,
    0x1.640a9344ddce3p-1,
    0x1.0ac972dc21be3p+19,
    0x1.a63de1b929093p+30,
    0x1.3b4ef3b84b179p+39,
    0x1.04e9e7d418082p+46,
    0x1.58419c316baf6p+51,
    0x1.b63d09df8604ep+55,
    0x1.2d11f930f2ad4p+59,
    0x1.decbb48379c5cp+61,
    0x1.cc65f7749c01cp+63,
    0x1.12a9b95f468d9p+65,
    0x1.9b4ed214f2a15p+65,
    0x1.81d4050e4cdafp+65,
    0x1.be21256f92959p+64,
    0x1.32f8a9fabd2b0p+63,
    0x1.d74718635da8fp+60,
    0x1.65528e33e10ebp+57,
    0x1.9823d6f42edadp+52,
    0x1.c32b67c27b6bbp+44,
    0x1.631a240c0f372p+33,
    -0x1.bd5142c7e05d7p+31,
    -0x1.579038b15fd4cp+26,
    0x1.0271966263895p+26,
    -0x1.e08aae0968109p+24,
    0x1.ac4a4e21b7d08p+23,
    -0x1.4adfb10162640p+22,
    0x1.b485cf3c532bfp+20,
    -0x1.e48ee4c1b5e5bp+18,
    0x1.b91959f987ae8p+16,
    -0x1.3b879ef2d922bp+14,
    0x1.45843c89ec33cp+11,
    -0x1.718e8f323ebc9p+7,
    -0x1.b32a558cd2b3ep+2,
    0x1.b0218bd1f2becp+1,
    -0x1.732df1d3b4c18p-2,
    0x1.ed5bd48e4f389p-7,
    // n = 19
    0x1.644d13921c967p+0,
    -0x1.b12095e61e811p+5,
    -0x1.0a8ddc6d7b87ep+20,
    -0x1.3dd2637dbb74bp+32,
    -0x1.425179eef61fep+41,
    -0x1.5a76f88927ccap+48,
    -0x1.22ce721ea9405p+54,
    -0x1.d2d54c77d059fp+58,
    -0x1.93c8478145dc2p+62,
    -0x1.95beba742938bp+65,
    -0x1.f138d9a261e0bp+67,
    -0x1.7f0fb3d6b570ap+69,
    -0x1.7967756540cd1p+70,
    -0x1.de13b62e33cbdp+70,
    -0x1.82f643fb152c4p+70,
    -0x1.889a1abf1dcd5p+69,
    -0x1.e0feccc44930fp+67,
    -0x1.4d01237751385p+65,
    -0x1.cd0073f862829p+61,
    -0x1.e6c25e4158ffcp+56,
    -0x1.fbbd6f41bbd4ep+48,
    -0x1.31ca1369683aep+37,
    0x1.5959e6eb1d9dap+36,
    -0x1.43f474238dcdep+34,
    0x1.8b57336590564p+33,
    -0x1.bdb8f6e81e754p+32,
    0x1.bdf0414170a5cp+31,
    -0x1.8c97b28bbca5bp+30,
    0x1.37d5ab07dd2f2p+29,
    -0x1.ae779d394be9cp+27,
    0x1.02821afe67b81p+26,
    -0x1.0b1800dd98f3bp+24,
    0x1.d3d8f798bbce1p+21,
    -0x1.548de4cd0f50dp+19,
    0x1.90f835f23bd9ap+16,
    -0x1.6ed567016e2a8p+13,
    0x1.e94f3ef1af2a9p+9,
    -0x1.a73a5cfacad79p+5,
    0x1.644d13921c967p+0,
    // n = 20
    -0x1.dd5fa0e771b94p-4,
    0x1.2170f4f104618p+2,
    0x1.0acb50040c8fdp+21,
    0x1.ddefcb8334db3p+33,
    0x1.47e7aca978863p+43,
    0x1.c71d488192771p+50,
    0x1.e23978302e563p+56,
    0x1.e373dc54befa8p+61,
    0x1.043ecd4f9cd72p+66,
    0x1.4605ca32a62a6p+69,
    0x1.f4f4ef6bf0733p+71,
    0x1.e8a88e41311f4p+73,
    0x1.351daab3e7a95p+75,
    0x1.0053a68819e12p+76,
    0x1.16dde0e1b1a27p+76,
    0x1.8a548360f3a9ap+75,
    0x1.62936da7df12fp+74,
    0x1.85f149e2efcd1p+72,
    0x1.ea4b98eb6dfdap+69,
    0x1.3790675b9b0b2p+66,
    0x1.3176d1307414bp+61,
    0x1.2d91ac22750b4p+53,
    0x1.a42edf9ad2444p+39,
    -0x1.f0368be0fb1b0p+39,
    0x1.4a0982e82847fp+34,
    -0x1.b5b8f72cbc120p+32,
    0x1.19b4072ec9cfap+32,
    -0x1.1404b67ff613bp+31,
    0x1.dc5ec2657cd6ep+29,
    -0x1.69a3084d198c5p+28,
    0x1.dd3cdf12d12e6p+26,
    -0x1.0e0f1accd103bp+25,
    0x1.01313bb282b96p+23,
    -0x1.903df3207ebbcp+20,
    0x1.e3176b4cde68dp+17,
    -0x1.918c24c6f249ep+14,
    0x1.0c4ff0a1752f9p+10,
    0x1.5a193df827ebap+7,
    -0x1.2fe67c688383ap+5,
    0x1.a290ff583fdc5p+1,
    -0x1.dd5fa0e771b94p-4,
    // n = 21
    -0x1.acbc4bfe43e00p+3,
    0x1.197c527b230bfp+9,
    -0x1.0b826247e3afbp+22,
    -0x1.6716216d0e2c4p+35,
    -0x1.4c56c6e3dfc7dp+45,
    -0x1.284b6c48abe19p+53,
    -0x1.89ab293dc51aep+59,
    -0x1.e8f33c38a7e5ap+64,
    -0x1.44743092e1267p+69,
    -0x1.f4f6e556066a8p+72,
    -0x1.dc1bfabcc9f01p+75,
    -0x1.214d42e28ce94p+78,
    -0x1.cce542b57d0aap+79,
    -0x1.e866da019ea8cp+80,
    -0x1.5a4a4419d4ae8p+81,
    -0x1.47b704892662ep+81,
    -0x1.99098628bfc60p+80,
    -0x1.48cd397b43eb3p+79,
    -0x1.46ee482ae4106p+77,
    -0x1.77860d93a7237p+74,
    -0x1.b8553262e4bb5p+70,
    -0x1.9277be79fc031p+65,
    -0x1.79023f8d4844dp+57,
    0x1.848d18f7642c8p+43,
    0x1.94d9e46f85646p+43,
    0x1.76be8134112b1p+41,
    -0x1.045635713c170p+41,
    0x1.31dabda2886e0p+40,
    -0x1.47b8ce39e9a5ap+39,
    0x1.3c90acfa87d53p+38,
    -0x1.127a57030d7d9p+37,
    0x1.a9384ef2bb9d4p+35,
    -0x1.2482d5605ecf4p+34,
    0x1.62c8eec9c2350p+32,
    -0x1.77e7c3b35804ep+30,
    0x1.57eacd0898047p+28,
    -0x1.0baadbd1e3ce4p+26,
    0x1.5b74f8d7ea9aep+23,
    -0x1.6df052ebf0ba5p+20,
    0x1.2c61a6dfb5f60p+17,
    -0x1.688c598ce3853p+13,
    0x1.196a7cdbe3c69p+9,
    -0x1.acbc4bfe43e00p+3,
    // n = 22
    0x1.1eed0a9756022p+0,
    -0x1.2162e554ed5a1p+5,
    0x1.0ad1f141a5272p+23,
    0x1.0da64705662eap+37,
    0x1.4fd87e3c1517ep+47,
    0x1.7f06956ddf7a7p+55,
    0x1.3d3df7f7ba78dp+62,
    0x1.e4ba91a78013ep+67,
    0x1.8936650ad8ce9p+72,
    0x1.7282a6488d297p+76,
    0x1.aea311a0d7ebap+79,
    0x1.41a454a06cefcp+82,
    0x1.3d7c9a755558fp+84,
    0x1.a5a8d4e091055p+85,
    0x1.7c70b3fc0f6bfp+86,
    0x1.d37117d7b2bb9p+86,
    0x1.850285823189bp+86,
    0x1.b0768c771fd3fp+85,
    0x1.392040da2f523p+84,
    0x1.1b491b6377388p+82,
    0x1.2ad7de269de10p+79,
    0x1.44be30ded32b1p+75,
    0x1.15b5848822b67p+70,
    0x1.eeca28d476240p+61,
    -0x1.10580636f4013p+49,
    -0x1.3b023a11de44fp+48,
    0x1.3b62a4120b612p+40,
    0x1.9e4520a2c19dap+40,
    -0x1.89a3c1aa5768ep+39,
    0x1.9b477328ec597p+38,
    -0x1.857f99cc34b14p+37,
    0x1.48c0768513967p+36,
    -0x1.ecaee38ed83a3p+34,
    0x1.451df8b67b217p+33,
    -0x1.75c929a6a9d5ep+31,
    0x1.70dd0893e5330p+29,
    -0x1.31c7a5d594ef1p+27,
    0x1.9b5f27aa332e9p+24,
    -0x1.a454e4c4d8a1ep+21,
    0x1.10a99d0df23ecp+18,
    -0x1.7e48e47f8335ap+10,
    -0x1.9d6d3330dd27bp+11,
    0x1.f155217165cfbp+8,
    -0x1.1f56db90854afp+5,
    0x1.1eed0a9756022p+0,
    // n = 23
    0x1.399a52c414c0dp+7,
    -0x1.c3b20bdcfd9c5p+12,
    -0x1.0851c82b68741p+24,
    -0x1.94d39e567b1afp+38,
    -0x1.529c51f34b68ep+49,
    -0x1.ec3aa5dda7067p+57,
    -0x1.f9c9779fd59fcp+64,
    -0x1.d877b039554adp+70,
    -0x1.d12a16a9b4a0bp+75,
    -0x1.093e5a2360e56p+80,
    -0x1.755aa9c8ee945p+83,
    -0x1.52e1910045f6ep+86,
    -0x1.98fcc0cd39dc9p+88,
    -0x1.4f00d61fbaefap+90,
    -0x1.7945b92e8f3d9p+91,
    -0x1.25d518c4a560dp+92,
    -0x1.3c5da48da8218p+92,
    -0x1.d369c64da1785p+91,
    -0x1.d278cd2598c41p+90,
    -0x1.324010c8dcc7fp+89,
    -0x1.fb0887379de7dp+86,
    -0x1.ed94e51f19c90p+83,
    -0x1.f30c15f74bc06p+79,
    -0x1.909890f6957c7p+74,
    -0x1.541d1ea204107p+66,
    0x1.1e4dc4dc22c71p+54,
    0x1.b9beedd344279p+52,
    -0x1.49c4c926a20e6p+49,
    0x1.8a68ecb951194p+48,
    -0x1.f034035043fb1p+47,
    0x1.195a43dc08b78p+47,
    -0x1.22752dc24a4fdp+46,
    0x1.1061660b0272dp+45,
    -0x1.ce6159e7a46e0p+43,
    0x1.61b971f601f4ap+42,
    -0x1.e552263f7147dp+40,
    0x1.28b9be0f11b24p+39,
    -0x1.40f195ef34f71p+37,
    0x1.3034abe3c5798p+35,
    -0x1.f3757ef210216p+32,
    0x1.5dc9ad6a4eb9ep+30,
    -0x1.99af5a4200077p+27,
    0x1.8651cc3721996p+24,
    -0x1.228d07f34d558p+21,
    0x1.3d03fda439092p+17,
    -0x1.c2dfc5ca874a8p+12,
    0x1.399a52c414c0dp+7,
    // n = 24
    -0x1.a3739d2755201p+3,
    0x1.e6a3908af1c2cp+8,
    0x1.0abe3746c44b7p+25,
    0x1.2fcd3096a58eep+40,
    0x1.54c8f4e824f22p+51,
    0x1.3ac0afe319810p+60,
    0x1.8f878185765ecp+67,
    0x1.c5e95c4677598p+73,
    0x1.0d7e651954f7ep+79,
    0x1.71438edba7873p+83,
    0x1.38172ce015e0bp+87,
    0x1.54e748c44510bp+90,
    0x1.f15c722a12c03p+92,
    0x1.efdae76a03876p+94,
    0x1.5706f2c539fa4p+96,
    0x1.4c43d7182f613p+97,
    0x1.c403eb0b79718p+97,
    0x1.aea2d015d9c48p+97,
    0x1.1cb291cdad2bdp+97,
    0x1.00d43f72d9ff1p+96,
    0x1.3394b9401981fp+94,
    0x1.d44c68e27a7a5p+91,
    0x1.a67a7f1ae3ee2p+88,
    0x1.8ee0de6ad41adp+84,
    0x1.2d71828ce8bebp+79,
    0x1.e8cdec34ed110p+70,
    -0x1.1eb90efa221ddp+59,
    -0x1.fd31109dde88bp+56,
    0x1.e6f06db439949p+50,
    -0x1.427d59d3c8909p+47,
    0x1.3cca51c9352e0p+47,
    -0x1.6766109c9dc69p+46,
    0x1.6b6c285218034p+45,
    -0x1.4d9b1f9772ad7p+44,
    0x1.140257ccea1b3p+43,
    -0x1.99518ccc702cep+41,
    0x1.0e2b223086a47p+40,
    -0x1.3aab6cd6ae9fcp+38,
    0x1.3f93df2a4f921p+36,
    -0x1.1666ed67e7360p+34,
    0x1.95f32738b240ep+31,
    -0x1.db1b4a737437fp+28,
    0x1.98841c7a0a6f4p+25,
    -0x1.7b4460775bdd9p+21,
    -0x1.4eed99baa7571p+17,
    0x1.f72e077ba309ep+15,
    -0x1.d929019f76cabp+12,
    0x1.d8604258f54fbp+8,
    -0x1.a3739d2755201p+3,
    // n = 25
    -0x1.1211c6f39f917p+11,
    0x1.acd76c54c29bep+16,
    -0x1.1513f513925bep+26,
    -0x1.c7e379f05a136p+41,
    -0x1.567daccec45c4p+53,
    -0x1.90edc639261e5p+62,
    -0x1.392be8b2fb526p+70,
    -0x1.aeba121e5aaf7p+76,
    -0x1.32ba89ab1d06cp+82,
    -0x1.f5be7d19399b8p+86,
    -0x1.f98214bcbfb83p+90,
    -0x1.497611b33624cp+94,
    -0x1.1fb7546a0b898p+97,
    -0x1.5935a7033ada3p+99,
    -0x1.21889b4c1a5bcp+101,
    -0x1.5757999731ea2p+102,
    -0x1.21850507b7885p+103,
    -0x1.5b754477b8762p+103,
    -0x1.2763a10cc597bp+103,
    -0x1.600c001558767p+102,
    -0x1.20d6386db066ep+101,
    -0x1.3d290c7caae84p+99,
    -0x1.be1162b27d74dp+96,
    -0x1.7662753c628b4p+93,
    -0x1.4b275dc7f3317p+89,
    -0x1.d87f3c619f4f4p+83,
    -0x1.6e7dc8b5f6e04p+75,
    0x1.0712ca79a09f1p+64,
    0x1.41cee558277e9p+61,
    0x1.7ef00eb3222d9p+56,
    -0x1.751426dbf56dfp+56,
    0x1.d7f1b85b3760ap+55,
    -0x1.17fa833cfc996p+55,
    0x1.31827d6801e5fp+54,
    -0x1.31908fe7ac707p+53,
    0x1.176f674d5b0b4p+52,
    -0x1.d1d97581e4246p+50,
    0x1.60a45af81c8c9p+49,
    -0x1.e2b9975c52f84p+47,
    0x1.292b38ddc8f65p+46,
    -0x1.47026eea01921p+44,
    0x1.3f284212c8dedp+42,
    -0x1.11ab4789289fcp+40,
    0x1.977950c3274c4p+37,
    -0x1.036472b3851b9p+35,
    0x1.14c58c13fe98dp+32,
    -0x1.e17798a207b59p+28,
    0x1.47dec343016c6p+25,
    -0x1.47e7a0d9b95b2p+21,
    0x1.ac48e279928dfp+16,
    -0x1.1211c6f39f917p+11,
    // n = 26
    0x1.6e61a7d1bc918p+7,
    -0x1.d41024bc972d1p+12,
    0x1.0b124e8bb4a18p+27,
    0x1.5605182467875p+43,
    0x1.57d39770221f6p+55,
    0x1.fd055a1e9206cp+64,
    0x1.e7c48b740b104p+72,
    0x1.94692bce4a64dp+79,
    0x1.57be8739b8d2dp+85,
    0x1.4dc07b7dee477p+90,
    0x1.8e428d7c1b46bp+94,
    0x1.3377017d6fedcp+98,
    0x1.3ebe64d78992ap+101,
    0x1.c7cf4f233ed91p+103,
    0x1.ca4f630c8201ep+105,
    0x1.485409c6dea2dp+107,
    0x1.51e3c8e8e7d7dp+108,
    0x1.f53fc9e00abbdp+108,
    0x1.0baa51ab31917p+109,
    0x1.99224e1b82079p+108,
    0x1.ba4ef1b79f96ap+107,
    0x1.4bd842b6b6edap+106,
    0x1.4fabfa3037027p+104,
    0x1.b5e299fa2e853p+101,
    0x1.571bfefa35e59p+98,
    0x1.1d2dc4bd61685p+94,
    0x1.81112743a80a8p+88,
    0x1.1e36849c00c38p+80,
    -0x1.d0f019dadcd7fp+68,
    -0x1.e4bcd68dfd82cp+65,
    0x1.6ff9a6f8a0a26p+59,
    0x1.8a9093bac1024p+56,
    -0x1.3b91d0d6efa2bp+55,
    0x1.669365a8de446p+54,
    -0x1.82f98e48d1e7cp+53,
    0x1.7c71f73ba314ep+52,
    -0x1.54cebd5a112b1p+51,
    0x1.1533dff41f8c1p+50,
    -0x1.977906dfa02b2p+48,
    0x1.0d082110301aap+47,
    -0x1.3cc805dc226a7p+45,
    0x1.49708f9357b95p+43,
    -0x1.2ab6b9786dedcp+41,
    0x1.cfb634c42e157p+38,
    -0x1.2b638aa96b020p+36,
    0x1.3139d553079fep+33,
    -0x1.b0ef45955e92fp+29,
    0x1.b0c953557852ep+24,
    0x1.94ddc9538a15ap+22,
    -0x1.4c99a3d62a061p+20,
    0x1.044475c4d9ca1p+17,
    -0x1.ca55cd3b02a3bp+12,
    0x1.6e61a7d1bc918p+7,
    // n = 27
    0x1.1a0a3d14004eep+15,
    -0x1.dc7c08aaf74e5p+20,
    -0x1.b2dd82d1cfca0p+27,
    -0x1.0092ca40d7325p+45,
    -0x1.58deca16bda6bp+57,
    -0x1.42405056354f0p+67,
    -0x1.79c188b3a4958p+75,
    -0x1.783f4bbb160e6p+82,
    -0x1.7c13fa29415fbp+88,
    -0x1.b3e508b2d192ep+93,
    -0x1.3246ada735ffbp+98,
    -0x1.1646feca15888p+102,
    -0x1.53f1d81ecfe7ep+105,
    -0x1.1f4534735b993p+108,
    -0x1.56f384107c84ap+110,
    -0x1.258b94c307f8ep+112,
    -0x1.6be3ca42881c9p+113,
    -0x1.487ca1c628e2bp+114,
    -0x1.b083af7e51eb6p+114,
    -0x1.9e38788368d16p+114,
    -0x1.1e768f434e036p+114,
    -0x1.1a822f94a84d3p+113,
    -0x1.8589d1b7005f0p+111,
    -0x1.6c85f6342f896p+109,
    -0x1.baaf1041fffacp+106,
    -0x1.44de1b2e06b03p+103,
    -0x1.fcd707c9b7154p+98,
    -0x1.45d7f73f74cd7p+93,
    -0x1.d0e5827147f88p+84,
    0x1.a07f54028d27dp+73,
    0x1.7124ac03d1171p+70,
    -0x1.ac288040c4be3p+65,
    0x1.78dacadaf31d0p+64,
    -0x1.034e2bf596263p+64,
    0x1.40dfd94f85b4bp+63,
    -0x1.6eae24c587a7fp+62,
    0x1.831713ab5806bp+61,
    -0x1.78af3036902e5p+60,
    0x1.5118204f58e36p+59,
    -0x1.14a6128af529ap+58,
    0x1.9f12885b2e9efp+56,
    -0x1.1b89dcffb9556p+55,
    0x1.5f257f540cec9p+53,
    -0x1.8817d189e290fp+51,
    0x1.8836304db9dadp+49,
    -0x1.5cbd0f843e1f8p+47,
    0x1.1101d1b061279p+45,
    -0x1.73dc285eea9b6p+42,
    0x1.b1f34127359f2p+39,
    -0x1.a9311be2dea88p+36,
    0x1.5437a7684738ep+33,
    -0x1.aaff4561bb3f8p+29,
    0x1.8a2dd9420177ep+25,
    -0x1.dbfcba1eff131p+20,
    0x1.1a0a3d14004eep+15,
    // n = 28
    -0x1.78e27958520bep+11,
    0x1.0799a7b1fdffdp+17,
    0x1.097909ba7226ep+29,
    0x1.80e78449f6d5fp+46,
    0x1.59af4152d21f1p+59,
    0x1.971baa9000930p+69,
    0x1.232f387cd5e22p+78,
    0x1.5b4ae50e4bf1dp+85,
    0x1.9f59e942cb709p+91,
    0x1.1814aa5b5f62fp+97,
    0x1.cd2b80a125280p+101,
    0x1.ea4e7762a697ap+105,
    0x1.5e9dc9ac9354dp+109,
    0x1.5b9b793814446p+112,
    0x1.e89a7dfa21109p+114,
    0x1.eee6dc11673e5p+116,
    0x1.6d69221b2909dp+118,
    0x1.8c410531d0a9dp+119,
    0x1.3caf09692f50dp+120,
    0x1.7504e53c0a7a4p+120,
    0x1.4284d08ef356dp+120,
    0x1.9604644e648d0p+119,
    0x1.6f1e029966e25p+118,
    0x1.d336328218ecbp+116,
    0x1.96065fba5f88bp+114,
    0x1.cc9348676ea3fp+111,
    0x1.3d7baf2dc559ep+108,
    0x1.d5ba50d3bca9bp+103,
    0x1.1de85cc047c0ap+98,
    0x1.8812783d911aep+89,
    -0x1.7dae18d5bc3ffp+78,
    -0x1.135144885a2abp+75,
    0x1.03b026f4c28dep+69,
    0x1.5f2957b30a111p+60,
    0x1.40674409b8ad9p+63,
    -0x1.a181f8fcb8669p+62,
    0x1.d4fce28a34214p+61,
    -0x1.e7ce4ef9d592cp+60,
    0x1.d2c15752b00b7p+59,
    -0x1.9979559c3f43fp+58,
    0x1.483eda59ecd4bp+57,
    -0x1.dee45db2dac3ap+55,
    0x1.3c49db321eca9p+54,
    -0x1.77e6a15598dc4p+52,
    0x1.8ec6e38ec63e1p+50,
    -0x1.75b8937ceaffep+48,
    0x1.310a6e8cafdd6p+46,
    -0x1.a8c0a5d1465d8p+43,
    0x1.e7863cc785975p+40,
    -0x1.aef41a6b5b76bp+37,
    0x1.e0d8237fdf858p+33,
    0x1.99b9fb0fd6c38p+26,
    -0x1.9496228344dffp+27,
    0x1.e6ee6815bfc0bp+24,
    -0x1.48c881e7b4937p+21,
    0x1.03439ae847b6bp+17,
    -0x1.78e27958520bep+11,
    // n = 29
    -0x1.51924c095ab12p+19,
    0x1.3234a4f4dadbap+25,
    -0x1.0dde859f7b3b5p+31,
    -0x1.20afccd8511c0p+48,
    -0x1.5a51a520fa056p+61,
    -0x1.00add4db4ff69p+72,
    -0x1.bf1d0890024a2p+80,
    -0x1.3e62227cb95d9p+88,
    -0x1.c14439a130ee0p+94,
    -0x1.62d75a79afc5fp+100,
    -0x1.54bf1055d91bdp+105,
    -0x1.a5c0eeb1685a8p+109,
    -0x1.5f1070b5286eep+113,
    -0x1.95b1cb643c436p+116,
    -0x1.4d4108c8b56ecp+119,
    -0x1.8c201d7a2f80cp+121,
    -0x1.591851434a656p+123,
    -0x1.bc99e49bdd248p+124,
    -0x1.a9cb188a4d07ap+125,
    -0x1.2fb81dc9ebf18p+126,
    -0x1.424469485243cp+126,
    -0x1.fa23020f025abp+125,
    -0x1.237ba0de763e4p+125,
    -0x1.e57c8feb2901ep+123,
    -0x1.1e4563ce96331p+122,
    -0x1.cfb0f4ca4c4dep+119,
    -0x1.ecd1d83214e2fp+116,
    -0x1.3ff27b55ea7c9p+113,
    -0x1.c030065006ea2p+108,
    -0x1.03cc3c63ef341p+103,
    -0x1.56e37fd426f2ep+94,
    0x1.63dcb879d59d6p+83,
    0x1.b0ca4124a4535p+79,
    -0x1.4097da18446d0p+71,
    -0x1.f842611726c32p+72,
    0x1.49a77cf1a843ep+72,
    -0x1.a3ee0e2ef8a80p+71,
    0x1.f37e211287188p+70,
    -0x1.140ee7fdccfabp+70,
    0x1.1b29b639d81a0p+69,
    -0x1.0d09ad7f061e6p+68,
    0x1.d886d1cf2bdd9p+66,
    -0x1.7e9646e1cd1a7p+65,
    0x1.1cc53c24658b5p+64,
    -0x1.84678d2061056p+62,
    0x1.e374a936c71d3p+60,
    -0x1.11524b72a292bp+59,
    0x1.1734343886abep+57,
    -0x1.ffff7fdd5f2b4p+54,
    0x1.a20ed22dd9dd1p+52,
    -0x1.2d1250e549d8ap+50,
    0x1.79e5d75c3eeaap+47,
    -0x1.970c37580ad59p+44,
    0x1.70b5df8632dcfp+41,
    -0x1.11281ad844c7cp+38,
    0x1.3de2cbc298bbbp+34,
    -0x1.107c9aa769ed8p+30,
    0x1.31f278725f91dp+25,
    -0x1.51924c095ab12p+19,
    // n = 30
    0x1.c2f2ac37c6c70p+15,
    -0x1.56dfef37fe5f7p+21,
    0x1.126b379bc9c3fp+31,
    0x1.b1167e09a6298p+49,
    0x1.5acff217b4097p+63,
    0x1.432c8665e2486p+74,
    0x1.561a5bc8ca677p+83,
    0x1.2227fe85dc3e8p+91,
    0x1.e19a3121dbc1cp+97,
    0x1.bbf29186741e6p+103,
    0x1.ef3ce41713b77p+108,
    0x1.632d363a664c9p+113,
    0x1.5660814921e42p+117,
    0x1.ca887ea3f5cf7p+120,
    0x1.b564ccc7a4692p+123,
    0x1.2ed7eae7d60d5p+126,
    0x1.34b732c3a586fp+128,
    0x1.d40e180c03778p+129,
    0x1.09a39dea0a3a2p+131,
    0x1.c51b6d687d704p+131,
    0x1.22887384cd2c2p+132,
    0x1.176b6e7e88842p+132,
    0x1.90b74885620b4p+131,
    0x1.a84353dd7a165p+130,
    0x1.46c313ab033aap+129,
    0x1.66642d11b5bb7p+127,
    0x1.0f5caa060398fp+125,
    0x1.0efb7cfadaa25p+122,
    0x1.4c33cb821ab21p+118,
    0x1.b98a0ed35a860p+113,
    0x1.e860668365a80p+107,
    0x1.369313f128a47p+99,
    -0x1.526c80f09b920p+88,
    -0x1.6bf1405a27092p+84,
    0x1.506cd395d5106p+78,
    0x1.c51169a7a3143p+73,
    -0x1.e04e4d53d2dc0p+71,
    0x1.0f6c809f5b048p+71,
    -0x1.4177934370db6p+70,
    0x1.5f380102c484cp+69,
    -0x1.6323b3fbd2a2bp+68,
    0x1.4be4ac58017b8p+67,
    -0x1.1de7970b2b2c2p+66,
    0x1.c4a5c6c243bcap+64,
    -0x1.4811cb448229bp+63,
    0x1.b17eaf7565fa0p+61,
    -0x1.03ab3a29264b3p+60,
    0x1.182d56d633eecp+58,
    -0x1.0df4695663b6ep+56,
    0x1.cb535c87d7409p+53,
    -0x1.539f3089b3357p+51,
    0x1.aa1b6541b611cp+48,
    -0x1.b2eccc545aff8p+45,
    0x1.48ec12fb37ffep+42,
    -0x1.0059779a7693dp+38,
    -0x1.48b891aa0408cp+34,
    0x1.9654006fa3725p+32,
    -0x1.8ce0673db7e26p+29,
    0x1.d9801ab22423dp+25,
    -0x1.525eee71f3ae4p+21,
    0x1.c2f2ac37c6c70p+15,
    // n = 31
    0x1.d0f5c84a9b314p+23,
    -0x1.c2c509653382dp+29,
    0x1.6b3906c979979p+34,
    -0x1.44e5979c01cc7p+51,
    -0x1.5b320d52d1ae1p+65,
    -0x1.96616a6c2fc32p+76,
    -0x1.04fee0acef163p+86,
    -0x1.0712f3ec2590bp+94,
    -0x1.001a347cfcf87p+101,
    -0x1.12a5ace6a1f17p+107,
    -0x1.629cb156141dap+112,
    -0x1.2583a60072cb6p+117,
    -0x1.4627358e41661p+121,
    -0x1.f79fd86336b1ep+124,
    -0x1.1555b1561604ep+128,
    -0x1.bc856f6aa70b1p+130,
    -0x1.073131cd23b04p+133,
    -0x1.d1b84c77f23a6p+134,
    -0x1.3650e117c6f1cp+136,
    -0x1.38fe1294441c6p+137,
    -0x1.deef47ff928d4p+137,
    -0x1.15ceaa42983bap+138,
    -0x1.e7054b0c04591p+137,
    -0x1.406bc94313aeep+137,
    -0x1.392c8d7b91184p+136,
    -0x1.bfd11f8b313a7p+134,
    -0x1.ca4f853d252dcp+132,
    -0x1.4561e02508ff4p+130,
    -0x1.321609eba5b96p+127,
    -0x1.631692c9a87d3p+123,
    -0x1.c0b17853b0887p+118,
    -0x1.da4a41d079b7bp+112,
    -0x1.22ff8f73475e8p+104,
    0x1.49fe0def72201p+93,
    0x1.3b1145baba81cp+89,
    -0x1.9c242780ba71cp+83,
    0x1.3542f1d66764ap+81,
    -0x1.d7bcebe016732p+80,
    0x1.3815d3d3ee44ep+80,
    -0x1.800467b6a9618p+79,
    0x1.b9a004189aa51p+78,
    -0x1.d9f830d7b1de5p+77,
    0x1.da0250c985294p+76,
    -0x1.b8fc008c04d01p+75,
    0x1.7ce59d139fe23p+74,
    -0x1.30c2a00a71a4ep+73,
    0x1.c295d3d449807p+71,
    -0x1.32d552120cf14p+70,
    0x1.7f9c51486bffcp+68,
    -0x1.b67ea50203496p+66,
    0x1.c81f78d143717p+64,
    -0x1.ad60631045e51p+62,
    0x1.6b63c06875793p+60,
    -0x1.124f0ae70460ep+58,
    0x1.6dcfd496469c5p+55,
    -0x1.a9be8d55b69f8p+52,
    0x1.a9cf367f66288p+49,
    -0x1.669f8ec438292p+46,
    0x1.eeb43e09702b4p+42,
    -0x1.0c55498af1303p+39,
    0x1.ad58e0a2be888p+34,
    -0x1.c27525d2f736dp+29,
    0x1.d0f5c84a9b314p+23,
    // n = 32
    -0x1.367b7a3a615cdp+20,
    0x1.fe287830ee9ebp+25,
    0x1.b2de0c5bc68d7p+32,
    0x1.e74385a75b26cp+52,
    0x1.5b7e330ad5f30p+67,
    0x1.fe79e94fefad0p+78,
    0x1.8d3f72252e77bp+88,
    0x1.dae85adee20f0p+96,
    0x1.0e7d3dd3e7065p+104,
    0x1.507d3326e35c5p+110,
    0x1.f532d0243f4dfp+115,
    0x1.dcff74f77001dp+120,
    0x1.303c25e2c85dep+125,
    0x1.0d92bf93a53fap+129,
    0x1.5508336eb3f30p+132,
    0x1.3a895a1cf2bb1p+135,
    0x1.ade33b9522546p+137,
    0x1.b8b209325ee47p+139,
    0x1.55ebba187af50p+141,
    0x1.9407b94cc052ep+142,
    0x1.6cd97345cc9fap+143,
    0x1.f818641b6a5e1p+143,
    0x1.0a0488a1c4a67p+144,
    0x1.ab262067cddbep+143,
    0x1.02fbb8511781dp+143,
    0x1.d5252497c872fp+141,
    0x1.38703e42db015p+140,
    0x1.2b474bab41716p+138,
    0x1.8f88853f703f7p+135,
    0x1.62e4e22a294dfp+132,
    0x1.866d2efcb6af5p+128,
    0x1.d5e4e3d556203p+123,
    0x1.db6d415fdd92ep+117,
    0x1.19bd0946d5d7bp+109,
    -0x1.4a4abfc7eb783p+98,
    -0x1.1676b0fab6dbdp+94,
    0x1.1077857ca7427p+88,
    0x1.eb17822d58382p+81,
    0x1.e7e51d107688cp+79,
    -0x1.9b97a18a7dfebp+79,
    0x1.f1d2e11fcb7dfp+78,
    -0x1.1af403048f4ecp+78,
    0x1.2c09bfe6f40cap+77,
    -0x1.27e634da1fc28p+76,
    0x1.0ee146f736a0ep+75,
    -0x1.cb4b2774c85cdp+73,
    0x1.679ab5e20d33ep+72,
    -0x1.032d5ce5f9a38p+71,
    0x1.569305c84f347p+69,
    -0x1.9d4822158d082p+67,
    0x1.c47a8755063f6p+65,
    -0x1.be64c9c5ed92bp+63,
    0x1.8934218ea9893p+61,
    -0x1.316f1f963770cp+59,
    0x1.9b0ec8a7f3665p+56,
    -0x1.d1ce141c654e7p+53,
    0x1.a549e4171e865p+50,
    -0x1.08db8bd2f3bb1p+47,
    0x1.7213c56388163p+41,
    0x1.175b7043cfe72p+40,
    -0x1.afd8dbbeb2253p+37,
    0x1.6830ae04613e0p+34,
    -0x1.8204ffd41ba3cp+30,
    0x1.f8b982621bed5p+25,
    -0x1.367b7a3a615cdp+20,
    // n = 33
    -0x1.6d1cabf9499b3p+28,
    0x1.78c1d2851ebbap+34,
    -0x1.8731484818408p+39,
    -0x1.6d34945ed3736p+54,
    -0x1.5bb93c0fa5671p+69,
    -0x1.4057661488371p+81,
    -0x1.2dacba31682dcp+91,
    -0x1.aafd036cd77f6p+99,
    -0x1.1bf05266b6f11p+107,
    -0x1.98a9caedd6ffap+113,
    -0x1.5e0d73aee86eep+119,
    -0x1.7dc695c601ce2p+124,
    -0x1.167c0dc02f169p+129,
    -0x1.1a03af7fe9bf2p+133,
    -0x1.97eacad4d8968p+136,
    -0x1.aec208f93f423p+139,
    -0x1.51cf44fddffb4p+142,
    -0x1.8eaf91b1d98dbp+144,
    -0x1.65975c20a8bf8p+146,
    -0x1.eafdb2af8c7d2p+147,
    -0x1.0336ba9d650fbp+149,
    -0x1.a5f0e5e612c72p+149,
    -0x1.08b9f16108299p+150,
    -0x1.fef7cb3eae3abp+149,
    -0x1.796f6a6287e90p+149,
    -0x1.a773c54d8b44dp+148,
    -0x1.64ae038471c42p+147,
    -0x1.bbe9d5d79ab79p+145,
    -0x1.8f17986e4dfd9p+143,
    -0x1.f629c7b02076dp+140,
    -0x1.a621e4303d2f6p+137,
    -0x1.b941194a1cebdp+133,
    -0x1.fab0e71833a38p+128,
    -0x1.eb6b365a31fa2p+122,
    -0x1.19912d841f8c4p+114,
    0x1.5311608ceb865p+103,
    0x1.fed594f1b3cfdp+98,
    -0x1.9e2f800240cdap+92,
    -0x1.322af2cd093f8p+90,
    0x1.86dff75254369p+89,
    -0x1.0537201d42609p+89,
    0x1.4b6539f7dbcecp+88,
    -0x1.8a8b00da523afp+87,
    0x1.b86f8c692b08ap+86,
    -0x1.cc7b2ddac3b2ep+85,
    0x1.c247ef734292bp+84,
    -0x1.9b2996b4b44d6p+83,
    0x1.5df6259508194p+82,
    -0x1.1515c6cfd6357p+81,
    0x1.973293b7c5ca3p+79,
    -0x1.14eec46410801p+78,
    0x1.5b93116c54f85p+76,
    -0x1.911bf341b376ap+74,
    0x1.a7e173db8209ep+72,
    -0x1.983f4437bb0adp+70,
    0x1.645888afe76b4p+68,
    -0x1.1807cbb722940p+66,
    0x1.8915e4744351cp+63,
    -0x1.e80a0381f951bp+60,
    0x1.08bc1041caebbp+58,
    -0x1.ee3aecb619299p+54,
    0x1.84f10fa46da8fp+51,
    -0x1.f5e6537ac3a5ep+47,
    0x1.fde4ad36d6a39p+43,
    -0x1.7e6db98eb9758p+39,
    0x1.788a6b46fcd19p+34,
    -0x1.6d1cabf9499b3p+28,
    // n = 34
    0x1.e783fc6a302eap+24,
    -0x1.ae7923f32e03fp+30,
    0x1.39b87a6e977c4p+36,
    0x1.1217a43a016b8p+56,
    0x1.5be6e2d185823p+71,
    0x1.91c389f0a3cebp+83,
    0x1.c95c69f5ac37ep+93,
    0x1.7e99a80af5482p+102,
    0x1.2872bc0067415p+110,
    0x1.ec7735ca67f46p+116,
    0x1.e3dc0c9793e58p+122,
    0x1.2d7106591a1e1p+128,
    0x1.f53d85639706fp+132,
    0x1.20f7a58c38092p+137,
    0x1.dbe6ff8434205p+140,
    0x1.1e5e9032e67e3p+144,
    0x1.00670c5190d71p+147,
    0x1.5a65dae3a2d16p+149,
    0x1.64e1b8bbd7e71p+151,
    0x1.1aa742509e4e7p+153,
    0x1.5a2157a433d8bp+154,
    0x1.48cf3c7b1460dp+155,
    0x1.e544fb30131bbp+155,
    0x1.15f3443d7d0bcp+156,
    0x1.ecd423a00abfbp+155,
    0x1.504b780358840p+155,
    0x1.5e575231ca810p+154,
    0x1.135123ce96330p+153,
    0x1.4118ba52d13a7p+151,
    0x1.0fa3beb2b15d4p+149,
    0x1.42e4caef66dc5p+146,
    0x1.0167506fe1bf8p+143,
    0x1.001f61d611139p+139,
    0x1.190e4b8156391p+134,
    0x1.05a68a001badap+128,
    0x1.222f5b8a584ebp+119,
    -0x1.6506b8efb5e36p+108,
    -0x1.e767d2d72f5dap+103,
    0x1.e01d8055ed085p+97,
    0x1.237ce705ef0f1p+92,
    -0x1.6c25206823430p+89,
    0x1.527b3412fc65cp+88,
    -0x1.ae6968b9d3efbp+87,
    0x1.fca5968480dc1p+86,
    -0x1.18ea0b63d33bfp+86,
    0x1.223084718c062p+85,
    -0x1.17e3fb16d6822p+84,
    0x1.f72ae901af6f8p+82,
    -0x1.a4988b529e605p+81,
    0x1.4621b86bca358p+80,
    -0x1.d3cd6bf06ef8fp+78,
    0x1.3542e9372540ap+77,
    -0x1.7761f089535a4p+75,
    0x1.a03ddc6f1e630p+73,
    -0x1.a31a15dc70643p+71,
    0x1.7c44e6a28f9b9p+69,
    -0x1.33d8ffc4ea13ap+67,
    0x1.b6a7dd794ac3fp+64,
    -0x1.0d791b5947114p+62,
    0x1.13d1abeef8d9ep+59,
    -0x1.b5ff70cfc3188p+55,
    0x1.ae29daab87c9dp+51,
    0x1.18d56c57922f0p+46,
    -0x1.a013459e559dfp+45,
    0x1.eed078acc8d0fp+42,
    -0x1.6b2d91e04d2a0p+39,
    0x1.61fc6c68aa3a5p+35,
    -0x1.aab5113280cacp+30,
    0x1.e783fc6a302eap+24,
};
}  // namespace

static_assert(kNumC == 35);

std::span<const double> cn_numerator_u(int n) {
    const int off = n * n;  // sum of (2k+1) for k<n
    return {kCnUFlat.data() + off, static_cast<std::size_t>(2 * n + 1)};
}

std::span<const double> cn_numerator_lambda(int n) {
    const int off = n * n;
    return {kCnLambdaFlat.data() + off, static_cast<std::size_t>(2 * n + 1)};
}

const double k_pi_hi = 0x1.921fb54442d18p+1;
const double k_pi_lo = 0x1.1a62633145c07p-53;
const double k_pi_half_hi = 0x1.921fb54442d18p+0;
const double k_pi_half_lo = 0x1.1a62633145c07p-54;
const double k_two_pi_hi = 0x1.921fb54442d18p+2;
const double k_two_pi_lo = 0x1.1a62633145c07p-52;
const double k_ln2_hi = 0x1.62e42fefa39efp-1;
const double k_ln2_lo = 0x1.abc9e3b39803fp-56;
const double k_inv_pi_hi = 0x1.45f306dc9c883p-2;
const double k_inv_pi_lo = -0x1.6b01ec5417056p-56;
const double k_half_ln_two_pi_hi = 0x1.d67f1c864beb5p-1;
const double k_half_ln_two_pi_lo = -0x1.65b5a1b7ff5dfp-55;
const double k_sqrt_pi_hi = 0x1.c5bf891b4ef6bp+0;
const double k_sqrt_pi_lo = -0x1.618f13eb7ca89p-54;

}  // namespace incgamneg::tables
