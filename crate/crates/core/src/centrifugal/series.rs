// Maclaurin coefficients in u of the Pekeris-type coefficient sets.

pub(super) const MR_X12_SERIES: [f64; 24] = [
    0.08333333333333333,
    0.0,
    -0.025,
    0.016666666666666666,
    -0.00689484126984127,
    0.0021825396825396826,
    -0.0005715388007054673,
    0.00012896825396825398,
    -2.5715989257655926e-05,
    4.609587942921277e-06,
    -7.521367888431381e-07,
    1.1278954731335684e-07,
    -1.566320752415329e-08,
    2.0268807471188424e-09,
    -2.4567544356131087e-10,
    2.8015234387134998e-11,
    -3.0170051959885908e-12,
    3.078566832284694e-13,
    -2.985272266357377e-14,
    2.758129886739172e-15,
    -2.4336431132418323e-16,
    2.0550760328144308e-17,
    -1.6640290278531947e-18,
    1.2942447426861701e-19,
];
pub(super) const MR_X22_SERIES: [f64; 24] = [
    1.0,
    0.0,
    0.0,
    0.03333333333333333,
    -0.0125,
    0.004365079365079365,
    -0.0011243386243386243,
    0.00025793650793650796,
    -5.1256613756613754e-05,
    9.219175885842553e-06,
    -1.503126503126503e-06,
    2.2557909462671368e-07,
    -3.132087085460101e-08,
    4.053761494237685e-09,
    -4.913302697694232e-10,
    5.6030468774269996e-11,
    -6.033949559276357e-12,
    6.157133664569388e-13,
    -5.97052994197687e-14,
    5.516259773478344e-15,
    -4.867283325356037e-16,
    4.1101520656288617e-17,
    -3.3280575697055218e-18,
    2.5884894853723403e-19,
];
pub(super) const MR_X32_SERIES: [f64; 24] = [
    1.0,
    0.0,
    0.0,
    0.0,
    -0.0125,
    0.0,
    -0.0011243386243386243,
    0.0,
    -5.1256613756613754e-05,
    0.0,
    -1.503126503126503e-06,
    0.0,
    -3.132087085460101e-08,
    0.0,
    -4.913302697694232e-10,
    0.0,
    -6.033949559276357e-12,
    0.0,
    -5.97052994197687e-14,
    0.0,
    -4.867283325356037e-16,
    0.0,
    -3.3280575697055218e-18,
    0.0,
];
pub(super) const PT_X13_SERIES: [f64; 24] = [
    0.06666666666666667,
    0.0,
    -0.006349206349206349,
    0.0,
    0.0006349206349206349,
    0.0,
    -6.41333974667308e-05,
    0.0,
    6.493212842419191e-06,
    0.0,
    -6.577784355562133e-07,
    0.0,
    6.664382636993903e-08,
    0.0,
    -6.7523539550426975e-09,
    0.0,
    6.841545361377655e-10,
    0.0,
    -6.931929779700787e-11,
    0.0,
    7.0235120459474655e-12,
    0.0,
    -7.116305220070096e-13,
    0.0,
];
pub(super) const PT_X23_SERIES: [f64; 24] = [
    0.4666666666666667,
    0.0,
    -0.012698412698412698,
    0.0,
    -0.0019047619047619048,
    0.0,
    -0.00041045374378707714,
    0.0,
    1.5974619149222324e-07,
    0.0,
    -1.6914302628588343e-06,
    0.0,
    1.2545695707849458e-07,
    0.0,
    -1.3627542351832587e-08,
    0.0,
    1.3668005791312672e-09,
    0.0,
    -1.3865352193310555e-10,
    0.0,
    1.4046902409782785e-11,
    0.0,
    -1.4232618760284614e-12,
    0.0,
];
pub(super) const PT_X33_SERIES: [f64; 24] = [
    0.5333333333333333,
    0.0,
    0.012698412698412698,
    0.0,
    0.0019047619047619048,
    0.0,
    -0.00011864678531345198,
    0.0,
    1.3067767036021005e-05,
    0.0,
    -1.314822743394172e-06,
    0.0,
    1.3328635722037528e-07,
    0.0,
    -1.3504594568664121e-08,
    0.0,
    1.3683064928494431e-09,
    0.0,
    -1.386385294130281e-10,
    0.0,
    1.4047022417504225e-11,
    0.0,
    -1.4232610015972917e-12,
    0.0,
];
