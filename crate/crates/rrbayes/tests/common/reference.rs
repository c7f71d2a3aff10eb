//! Reference values for the 24-point surveillance dataset: Bayes factors,
//! posterior probabilities, decision constants, decision letters, and
//! conditional error probabilities under the three priors, rounded to
//! four decimals.

#[derive(Clone, Copy)]
pub struct BfRow {
    pub m: u32,
    pub x: u32,
    pub gamma_hat: f64,
    pub bf: [f64; 3],
    pub posterior: [f64; 3],
}

#[derive(Clone, Copy)]
pub struct RaRow {
    pub m: u32,
    pub r: [f64; 3],
    pub a: [f64; 3],
}

#[derive(Clone, Copy)]
pub struct DecisionRow {
    pub m: u32,
    pub letter: [&'static str; 3],
    pub error: [Option<f64>; 3],
}

pub const BF_UNIFORM: [BfRow; 24] = [
    BfRow { m: 12, x: 1, gamma_hat: 0.0909, bf: [0.0381, 22.2857, 584.1429], posterior: [0.0367, 0.9571, 0.9983] },
    BfRow { m: 18, x: 5, gamma_hat: 0.3846, bf: [0.621, 19.5382, 30.4623], posterior: [0.3831, 0.9513, 0.9682] },
    BfRow { m: 24, x: 11, gamma_hat: 0.8462, bf: [3.7195, 10.7807, 1.8984], posterior: [0.7881, 0.9151, 0.655] },
    BfRow { m: 30, x: 15, gamma_hat: 1.0, bf: [4.4784, 8.9568, 1.0], posterior: [0.8175, 0.8996, 0.5] },
    BfRow { m: 34, x: 15, gamma_hat: 0.7895, bf: [3.7811, 15.1377, 3.0035], posterior: [0.7908, 0.938, 0.7502] },
    BfRow { m: 40, x: 17, gamma_hat: 0.7391, bf: [3.3088, 18.9675, 4.7325], posterior: [0.7679, 0.9499, 0.8256] },
    BfRow { m: 46, x: 20, gamma_hat: 0.7692, bf: [3.7458, 19.6273, 4.2398], posterior: [0.7893, 0.9515, 0.8092] },
    BfRow { m: 67, x: 34, gamma_hat: 1.0303, bf: [6.5554, 11.958, 0.8241], posterior: [0.8676, 0.9228, 0.4518] },
    BfRow { m: 78, x: 39, gamma_hat: 1.0, bf: [7.1142, 14.2285, 1.0], posterior: [0.8768, 0.9343, 0.5] },
    BfRow { m: 100, x: 44, gamma_hat: 0.7857, bf: [3.9342, 33.8717, 7.6095], posterior: [0.7973, 0.9713, 0.8838] },
    BfRow { m: 115, x: 51, gamma_hat: 0.7969, bf: [4.1504, 36.5229, 7.7999], posterior: [0.8058, 0.9733, 0.8864] },
    BfRow { m: 135, x: 63, gamma_hat: 0.875, bf: [6.9197, 31.4257, 3.5415], posterior: [0.8737, 0.9692, 0.7798] },
    BfRow { m: 167, x: 88, gamma_hat: 1.1139, bf: [8.1376, 10.7609, 0.3224], posterior: [0.8906, 0.915, 0.2438] },
    BfRow { m: 172, x: 91, gamma_hat: 1.1235, bf: [7.8705, 10.1371, 0.288], posterior: [0.8873, 0.9102, 0.2236] },
    BfRow { m: 190, x: 107, gamma_hat: 1.2892, bf: [2.4347, 2.539, 0.0429], posterior: [0.7089, 0.7174, 0.0411] },
    BfRow { m: 197, x: 113, gamma_hat: 1.3452, bf: [1.3341, 1.3606, 0.0199], posterior: [0.5716, 0.5764, 0.0195] },
    BfRow { m: 211, x: 124, gamma_hat: 1.4253, bf: [0.4531, 0.4556, 0.0055], posterior: [0.3118, 0.313, 0.0054] },
    BfRow { m: 218, x: 130, gamma_hat: 1.4773, bf: [0.2055, 0.2059, 0.0022], posterior: [0.1704, 0.1707, 0.0022] },
    BfRow { m: 222, x: 134, gamma_hat: 1.5227, bf: [0.1003, 0.1004, 0.001], posterior: [0.0911, 0.0912, 0.001] },
    BfRow { m: 231, x: 141, gamma_hat: 1.5667, bf: [0.0427, 0.0427, 0.0004], posterior: [0.041, 0.041, 0.0004] },
    BfRow { m: 240, x: 148, gamma_hat: 1.6087, bf: [0.0175, 0.0175, 0.0001], posterior: [0.0172, 0.0172, 0.0001] },
    BfRow { m: 245, x: 153, gamma_hat: 1.663, bf: [0.006, 0.006, 0.0], posterior: [0.006, 0.006, 0.0] },
    BfRow { m: 247, x: 155, gamma_hat: 1.6848, bf: [0.0039, 0.0039, 0.0], posterior: [0.0038, 0.0038, 0.0] },
    BfRow { m: 251, x: 157, gamma_hat: 1.6702, bf: [0.0044, 0.0044, 0.0], posterior: [0.0044, 0.0044, 0.0] },
];

pub const BF_INFORMATIVE: [BfRow; 24] = [
    BfRow { m: 12, x: 1, gamma_hat: 0.0909, bf: [0.8321, 3.2157, 2.8646], posterior: [0.4542, 0.7628, 0.7412] },
    BfRow { m: 18, x: 5, gamma_hat: 0.3846, bf: [0.9115, 2.9928, 2.2834], posterior: [0.4768, 0.7495, 0.6954] },
    BfRow { m: 24, x: 11, gamma_hat: 0.8462, bf: [1.0431, 2.3194, 1.2234], posterior: [0.5106, 0.6987, 0.5502] },
    BfRow { m: 30, x: 15, gamma_hat: 1.0, bf: [1.064, 2.128, 1.0], posterior: [0.5155, 0.6803, 0.5] },
    BfRow { m: 34, x: 15, gamma_hat: 0.7895, bf: [1.0398, 2.5854, 1.4864], posterior: [0.5098, 0.7211, 0.5978] },
    BfRow { m: 40, x: 17, gamma_hat: 0.7391, bf: [1.0137, 2.8419, 1.8036], posterior: [0.5034, 0.7397, 0.6433] },
    BfRow { m: 46, x: 20, gamma_hat: 0.7692, bf: [1.0265, 2.8658, 1.7917], posterior: [0.5065, 0.7413, 0.6418] },
    BfRow { m: 67, x: 34, gamma_hat: 1.0303, bf: [1.136, 2.171, 0.9111], posterior: [0.5318, 0.6846, 0.4767] },
    BfRow { m: 78, x: 39, gamma_hat: 1.0, bf: [1.159, 2.3181, 1.0], posterior: [0.5368, 0.6986, 0.5] },
    BfRow { m: 100, x: 44, gamma_hat: 0.7857, bf: [0.9627, 3.7991, 2.9465], posterior: [0.4905, 0.7916, 0.7466] },
    BfRow { m: 115, x: 51, gamma_hat: 0.7969, bf: [0.9583, 3.9771, 3.1501], posterior: [0.4894, 0.7991, 0.759] },
    BfRow { m: 135, x: 63, gamma_hat: 0.875, bf: [1.1289, 3.5494, 2.1442], posterior: [0.5303, 0.7802, 0.682] },
    BfRow { m: 167, x: 88, gamma_hat: 1.1139, bf: [1.1885, 1.7609, 0.4817], posterior: [0.5431, 0.6378, 0.3251] },
    BfRow { m: 172, x: 91, gamma_hat: 1.1235, bf: [1.1693, 1.6904, 0.4456], posterior: [0.539, 0.6283, 0.3083] },
    BfRow { m: 190, x: 107, gamma_hat: 1.2892, bf: [0.6786, 0.771, 0.1361], posterior: [0.4043, 0.4354, 0.1198] },
    BfRow { m: 197, x: 113, gamma_hat: 1.3452, bf: [0.5061, 0.5497, 0.0862], posterior: [0.336, 0.3547, 0.0794] },
    BfRow { m: 211, x: 124, gamma_hat: 1.4253, bf: [0.2901, 0.3017, 0.04], posterior: [0.2249, 0.2318, 0.0384] },
    BfRow { m: 218, x: 130, gamma_hat: 1.4773, bf: [0.192, 0.1966, 0.0237], posterior: [0.1611, 0.1643, 0.0231] },
    BfRow { m: 222, x: 134, gamma_hat: 1.5227, bf: [0.1325, 0.1345, 0.0151], posterior: [0.117, 0.1185, 0.0149] },
    BfRow { m: 231, x: 141, gamma_hat: 1.5667, bf: [0.0824, 0.0831, 0.0086], posterior: [0.0761, 0.0767, 0.0085] },
    BfRow { m: 240, x: 148, gamma_hat: 1.6087, bf: [0.0494, 0.0496, 0.0048], posterior: [0.0471, 0.0473, 0.0047] },
    BfRow { m: 245, x: 153, gamma_hat: 1.663, bf: [0.0276, 0.0277, 0.0025], posterior: [0.0269, 0.0269, 0.0025] },
    BfRow { m: 247, x: 155, gamma_hat: 1.6848, bf: [0.0216, 0.0217, 0.0019], posterior: [0.0212, 0.0212, 0.0019] },
    BfRow { m: 251, x: 157, gamma_hat: 1.6702, bf: [0.0225, 0.0225, 0.002], posterior: [0.022, 0.022, 0.0019] },
];

pub const BF_JEFFREYS: [BfRow; 24] = [
    BfRow { m: 12, x: 1, gamma_hat: 0.0909, bf: [0.0348, 34.7839, 997.4399], posterior: [0.0337, 0.9721, 0.999] },
    BfRow { m: 18, x: 5, gamma_hat: 0.3846, bf: [0.857, 30.4686, 34.5543], posterior: [0.4615, 0.9682, 0.9719] },
    BfRow { m: 24, x: 11, gamma_hat: 0.8462, bf: [5.7079, 16.6892, 1.9239], posterior: [0.8509, 0.9435, 0.658] },
    BfRow { m: 30, x: 15, gamma_hat: 1.0, bf: [6.9221, 13.8442, 1.0], posterior: [0.8738, 0.9326, 0.5] },
    BfRow { m: 34, x: 15, gamma_hat: 0.7895, bf: [5.8156, 23.5774, 3.0541], posterior: [0.8533, 0.9593, 0.7533] },
    BfRow { m: 40, x: 17, gamma_hat: 0.7391, bf: [5.0778, 29.6152, 4.8323], posterior: [0.8355, 0.9673, 0.8285] },
    BfRow { m: 46, x: 20, gamma_hat: 0.7692, bf: [5.773, 30.6617, 4.3113], posterior: [0.8524, 0.9684, 0.8117] },
    BfRow { m: 67, x: 34, gamma_hat: 1.0303, bf: [10.2206, 18.6318, 0.823], posterior: [0.9109, 0.9491, 0.4514] },
    BfRow { m: 78, x: 39, gamma_hat: 1.0, bf: [11.1045, 22.209, 1.0], posterior: [0.9174, 0.9569, 0.5] },
    BfRow { m: 100, x: 44, gamma_hat: 0.7857, bf: [6.1053, 53.0962, 7.6967], posterior: [0.8593, 0.9815, 0.885] },
    BfRow { m: 115, x: 51, gamma_hat: 0.7969, bf: [6.4501, 57.2681, 7.8787], posterior: [0.8658, 0.9828, 0.8874] },
    BfRow { m: 135, x: 63, gamma_hat: 0.875, bf: [10.8056, 49.2625, 3.559], posterior: [0.9153, 0.9801, 0.7807] },
    BfRow { m: 167, x: 88, gamma_hat: 1.1139, bf: [12.7261, 16.8142, 0.3212], posterior: [0.9271, 0.9439, 0.2431] },
    BfRow { m: 172, x: 91, gamma_hat: 1.1235, bf: [12.3066, 15.8372, 0.2869], posterior: [0.9248, 0.9406, 0.2229] },
    BfRow { m: 190, x: 107, gamma_hat: 1.2892, bf: [3.784, 3.9445, 0.0424], posterior: [0.791, 0.7978, 0.0407] },
    BfRow { m: 197, x: 113, gamma_hat: 1.3452, bf: [2.0676, 2.1082, 0.0196], posterior: [0.674, 0.6783, 0.0193] },
    BfRow { m: 211, x: 124, gamma_hat: 1.4253, bf: [0.6991, 0.7028, 0.0054], posterior: [0.4114, 0.4127, 0.0053] },
    BfRow { m: 218, x: 130, gamma_hat: 1.4773, bf: [0.316, 0.3167, 0.0022], posterior: [0.2401, 0.2405, 0.0022] },
    BfRow { m: 222, x: 134, gamma_hat: 1.5227, bf: [0.1538, 0.1539, 0.001], posterior: [0.1333, 0.1334, 0.001] },
    BfRow { m: 231, x: 141, gamma_hat: 1.5667, bf: [0.0653, 0.0653, 0.0004], posterior: [0.0613, 0.0613, 0.0004] },
    BfRow { m: 240, x: 148, gamma_hat: 1.6087, bf: [0.0266, 0.0266, 0.0001], posterior: [0.0259, 0.0259, 0.0001] },
    BfRow { m: 245, x: 153, gamma_hat: 1.663, bf: [0.0091, 0.0091, 0.0], posterior: [0.009, 0.009, 0.0] },
    BfRow { m: 247, x: 155, gamma_hat: 1.6848, bf: [0.0058, 0.0058, 0.0], posterior: [0.0058, 0.0058, 0.0] },
    BfRow { m: 251, x: 157, gamma_hat: 1.6702, bf: [0.0067, 0.0067, 0.0], posterior: [0.0067, 0.0067, 0.0] },
];

pub const RA_UNIFORM: [RaRow; 24] = [
    RaRow { m: 12, r: [1.0, 1.0, 1.0], a: [1.571, 5.8652, 2.2226] },
    RaRow { m: 18, r: [1.0, 1.0, 1.0], a: [2.3066, 4.6903, 1.9583] },
    RaRow { m: 24, r: [1.0, 1.0, 1.0], a: [2.9225, 5.6789, 1.808] },
    RaRow { m: 30, r: [1.0, 1.0, 1.0], a: [2.4971, 6.5607, 1.7083] },
    RaRow { m: 34, r: [1.0, 1.0, 1.0], a: [2.8358, 7.1038, 1.6586] },
    RaRow { m: 40, r: [1.0, 1.0, 0.6363], a: [3.3088, 5.7628, 1.0] },
    RaRow { m: 46, r: [1.0, 1.0, 1.0], a: [2.7747, 6.4415, 1.5532] },
    RaRow { m: 67, r: [1.0, 1.0, 1.0], a: [3.634, 7.5499, 1.1945] },
    RaRow { m: 78, r: [1.0, 1.0, 1.0], a: [3.7717, 7.5508, 1.4105] },
    RaRow { m: 100, r: [1.0, 1.0, 1.0], a: [3.9342, 7.4389, 1.3574] },
    RaRow { m: 115, r: [1.0, 1.0, 1.0], a: [3.2564, 7.6064, 1.1485] },
    RaRow { m: 135, r: [1.0, 1.0, 1.0], a: [4.0694, 7.2192, 1.1371] },
    RaRow { m: 167, r: [1.0, 1.0, 1.0], a: [4.3758, 7.4343, 1.1233] },
    RaRow { m: 172, r: [1.0, 1.0, 1.0], a: [4.1132, 8.459, 1.2656] },
    RaRow { m: 190, r: [1.0, 1.0, 1.0], a: [3.8676, 7.8237, 1.2517] },
    RaRow { m: 197, r: [1.0, 1.0, 1.0], a: [3.6836, 7.4293, 1.1136] },
    RaRow { m: 211, r: [1.0, 1.0, 1.0], a: [4.1037, 8.0592, 1.1098] },
    RaRow { m: 218, r: [1.0, 1.0, 0.8116], a: [3.9079, 7.6559, 1.0] },
    RaRow { m: 222, r: [1.0, 1.0, 0.8131], a: [4.0227, 7.8268, 1.0] },
    RaRow { m: 231, r: [1.0, 1.0, 1.0], a: [3.8834, 7.5158, 1.1049] },
    RaRow { m: 240, r: [1.0, 1.0, 0.8193], a: [4.5363, 8.5869, 1.0] },
    RaRow { m: 245, r: [1.0, 1.0, 1.0], a: [4.2679, 8.0842, 1.1018] },
    RaRow { m: 247, r: [1.0, 1.0, 1.0], a: [4.3227, 8.1648, 1.1014] },
    RaRow { m: 251, r: [1.0, 1.0, 1.0], a: [4.432, 8.3256, 1.1006] },
];

pub const RA_INFORMATIVE: [RaRow; 24] = [
    RaRow { m: 12, r: [1.0, 1.0, 0.9138], a: [1.0175, 3.2157, 1.0] },
    RaRow { m: 18, r: [1.0, 1.0, 0.9091], a: [1.0304, 3.2401, 1.0] },
    RaRow { m: 24, r: [1.0, 1.0, 0.905], a: [1.0431, 3.5175, 1.0] },
    RaRow { m: 30, r: [1.0, 1.0, 0.902], a: [1.0557, 3.541, 1.0] },
    RaRow { m: 34, r: [1.0, 1.0, 0.901], a: [1.064, 3.304, 1.0] },
    RaRow { m: 40, r: [1.0, 1.0, 0.8988], a: [1.0764, 3.3275, 1.0] },
    RaRow { m: 46, r: [1.0, 1.0, 0.898], a: [1.0649, 3.3507, 1.0] },
    RaRow { m: 67, r: [1.0, 1.0, 1.0], a: [1.0905, 3.3071, 1.0337] },
    RaRow { m: 78, r: [1.0, 1.0, 0.8943], a: [1.129, 3.4708, 1.0] },
    RaRow { m: 100, r: [1.0, 1.0, 0.894], a: [1.1711, 3.55, 1.0] },
    RaRow { m: 115, r: [1.0, 1.0, 1.0], a: [1.1832, 3.4806, 1.0379] },
    RaRow { m: 135, r: [1.0, 1.0, 1.0], a: [1.1799, 3.5494, 1.0384] },
    RaRow { m: 167, r: [1.0, 1.0, 1.0], a: [1.2378, 3.8995, 1.0395] },
    RaRow { m: 172, r: [1.0, 1.0, 0.8962], a: [1.2671, 3.5525, 1.0] },
    RaRow { m: 190, r: [1.0, 1.0, 1.0], a: [1.255, 3.8506, 1.1207] },
    RaRow { m: 197, r: [1.0, 1.0, 1.0], a: [1.2897, 3.752, 1.0403] },
    RaRow { m: 211, r: [1.0, 1.0, 1.0], a: [1.2661, 3.559, 1.0404] },
    RaRow { m: 218, r: [1.0, 1.0, 1.0], a: [1.3027, 3.6984, 1.1186] },
    RaRow { m: 222, r: [1.0, 1.0, 0.8981], a: [1.3094, 3.7108, 1.0] },
    RaRow { m: 231, r: [1.0, 1.0, 1.0], a: [1.2999, 3.8571, 1.0403] },
    RaRow { m: 240, r: [1.0, 1.0, 1.0], a: [1.339, 4.0043, 1.1172] },
    RaRow { m: 245, r: [1.0, 1.0, 1.0], a: [1.3231, 3.6634, 1.0404] },
    RaRow { m: 247, r: [1.0, 1.0, 1.0], a: [1.3264, 3.6694, 1.0404] },
    RaRow { m: 251, r: [1.0, 1.0, 1.0], a: [1.3329, 3.6814, 1.0406] },
];

pub const RA_JEFFREYS: [RaRow; 24] = [
    RaRow { m: 12, r: [1.0, 1.0, 1.0], a: [2.2505, 5.2308, 2.3824] },
    RaRow { m: 18, r: [1.0, 1.0, 0.5104], a: [3.4458, 7.0875, 1.0] },
    RaRow { m: 24, r: [1.0, 1.0, 1.0], a: [2.9086, 5.6013, 1.8636] },
    RaRow { m: 30, r: [1.0, 1.0, 1.0], a: [3.7844, 6.907, 1.7492] },
    RaRow { m: 34, r: [1.0, 1.0, 1.0], a: [2.8478, 7.7198, 1.6929] },
    RaRow { m: 40, r: [1.0, 1.0, 1.0], a: [3.5652, 6.1286, 1.6267] },
    RaRow { m: 46, r: [1.0, 1.0, 0.6408], a: [2.8578, 7.112, 1.0] },
    RaRow { m: 67, r: [1.0, 1.0, 1.0], a: [4.1572, 8.8826, 1.2029] },
    RaRow { m: 78, r: [1.0, 1.0, 0.7064], a: [4.3958, 9.0068, 1.0] },
    RaRow { m: 100, r: [1.0, 1.0, 1.0], a: [4.7006, 9.0504, 1.3656] },
    RaRow { m: 115, r: [1.0, 1.0, 1.0], a: [3.8165, 9.3841, 1.1532] },
    RaRow { m: 135, r: [1.0, 1.0, 1.0], a: [4.9882, 8.9751, 1.1411] },
    RaRow { m: 167, r: [1.0, 1.0, 1.0], a: [4.3165, 9.4196, 1.1266] },
    RaRow { m: 172, r: [1.0, 1.0, 1.0], a: [5.1324, 8.7899, 1.2698] },
    RaRow { m: 190, r: [1.0, 1.0, 1.0], a: [4.8263, 10.0463, 1.2555] },
    RaRow { m: 197, r: [1.0, 1.0, 1.0], a: [4.5858, 9.5259, 1.1163] },
    RaRow { m: 211, r: [1.0, 1.0, 1.0], a: [5.1907, 8.5552, 1.1123] },
    RaRow { m: 218, r: [1.0, 1.0, 0.8092], a: [4.9304, 9.9074, 1.0] },
    RaRow { m: 222, r: [1.0, 1.0, 0.8107], a: [5.0959, 10.1571, 1.0] },
    RaRow { m: 231, r: [1.0, 1.0, 1.0], a: [4.9166, 9.7513, 1.1072] },
    RaRow { m: 240, r: [1.0, 1.0, 0.8171], a: [4.7401, 9.3589, 1.0] },
    RaRow { m: 245, r: [1.0, 1.0, 1.0], a: [5.4724, 8.762, 1.104] },
    RaRow { m: 247, r: [1.0, 1.0, 1.0], a: [5.552, 8.8709, 1.1036] },
    RaRow { m: 251, r: [1.0, 1.0, 1.0], a: [4.6391, 9.0885, 1.1027] },
];

pub const DEC_UNIFORM: [DecisionRow; 24] = [
    DecisionRow { m: 12, letter: ["R", "A", "A"], error: [Some(0.0367), Some(0.0441), Some(0.0016)] },
    DecisionRow { m: 18, letter: ["R", "A", "A"], error: [Some(0.3831), Some(0.0491), Some(0.0261)] },
    DecisionRow { m: 24, letter: ["A", "A", "A"], error: [Some(0.2145), Some(0.0926), Some(0.3313)] },
    DecisionRow { m: 30, letter: ["A", "A", "ND"], error: [Some(0.1841), Some(0.1072), None] },
    DecisionRow { m: 34, letter: ["A", "A", "A"], error: [Some(0.2145), Some(0.0621), Some(0.246)] },
    DecisionRow { m: 40, letter: ["ND", "A", "A"], error: [None, Some(0.0551), Some(0.1742)] },
    DecisionRow { m: 46, letter: ["A", "A", "A"], error: [Some(0.2145), Some(0.0491), Some(0.1742)] },
    DecisionRow { m: 67, letter: ["A", "A", "R"], error: [Some(0.1391), Some(0.0805), Some(0.4518)] },
    DecisionRow { m: 78, letter: ["A", "A", "ND"], error: [Some(0.1391), Some(0.0705), None] },
    DecisionRow { m: 100, letter: ["ND", "A", "A"], error: [None, Some(0.0303), Some(0.1173)] },
    DecisionRow { m: 115, letter: ["A", "A", "A"], error: [Some(0.2145), Some(0.0279), Some(0.0944)] },
    DecisionRow { m: 135, letter: ["A", "A", "A"], error: [Some(0.1391), Some(0.033), Some(0.2082)] },
    DecisionRow { m: 167, letter: ["A", "A", "R"], error: [Some(0.1098), Some(0.0926), Some(0.2438)] },
    DecisionRow { m: 172, letter: ["A", "A", "R"], error: [Some(0.1228), Some(0.0926), Some(0.2236)] },
    DecisionRow { m: 190, letter: ["ND", "ND", "R"], error: [None, None, Some(0.0411)] },
    DecisionRow { m: 197, letter: ["ND", "ND", "R"], error: [None, None, Some(0.0195)] },
    DecisionRow { m: 211, letter: ["R", "R", "R"], error: [Some(0.3118), Some(0.313), Some(0.0055)] },
    DecisionRow { m: 218, letter: ["R", "R", "R"], error: [Some(0.1705), Some(0.1707), Some(0.0022)] },
    DecisionRow { m: 222, letter: ["R", "R", "R"], error: [Some(0.0912), Some(0.0912), Some(0.001)] },
    DecisionRow { m: 231, letter: ["R", "R", "R"], error: [Some(0.041), Some(0.041), Some(0.0004)] },
    DecisionRow { m: 240, letter: ["R", "R", "R"], error: [Some(0.0172), Some(0.0172), Some(0.0001)] },
    DecisionRow { m: 245, letter: ["R", "R", "R"], error: [Some(0.006), Some(0.006), Some(0.0)] },
    DecisionRow { m: 247, letter: ["R", "R", "R"], error: [Some(0.0039), Some(0.0039), Some(0.0)] },
    DecisionRow { m: 251, letter: ["R", "R", "R"], error: [Some(0.0044), Some(0.0044), Some(0.0)] },
];

pub const DEC_INFORMATIVE: [DecisionRow; 24] = [
    DecisionRow { m: 12, letter: ["R", "ND", "A"], error: [Some(0.4542), None, Some(0.261)] },
    DecisionRow { m: 18, letter: ["R", "ND", "A"], error: [Some(0.4769), None, Some(0.2903)] },
    DecisionRow { m: 24, letter: ["ND", "ND", "A"], error: [None, None, Some(0.4549)] },
    DecisionRow { m: 30, letter: ["A", "ND", "ND"], error: [Some(0.4287), None, None] },
    DecisionRow { m: 34, letter: ["ND", "ND", "A"], error: [None, None, Some(0.3862)] },
    DecisionRow { m: 40, letter: ["ND", "ND", "A"], error: [None, None, Some(0.353)] },
    DecisionRow { m: 46, letter: ["ND", "ND", "A"], error: [None, None, Some(0.353)] },
    DecisionRow { m: 67, letter: ["A", "ND", "R"], error: [Some(0.4389), None, Some(0.4767)] },
    DecisionRow { m: 78, letter: ["A", "ND", "ND"], error: [Some(0.4389), None, None] },
    DecisionRow { m: 100, letter: ["R", "A", "A"], error: [Some(0.4905), Some(0.2136), Some(0.261)] },
    DecisionRow { m: 115, letter: ["R", "A", "A"], error: [Some(0.4894), Some(0.2034), Some(0.2334)] },
    DecisionRow { m: 135, letter: ["ND", "ND", "A"], error: [None, None, Some(0.321)] },
    DecisionRow { m: 167, letter: ["ND", "ND", "R"], error: [None, None, Some(0.3251)] },
    DecisionRow { m: 172, letter: ["ND", "ND", "R"], error: [None, None, Some(0.3082)] },
    DecisionRow { m: 190, letter: ["R", "R", "R"], error: [Some(0.4043), Some(0.4353), Some(0.1198)] },
    DecisionRow { m: 197, letter: ["R", "R", "R"], error: [Some(0.336), Some(0.3547), Some(0.0794)] },
    DecisionRow { m: 211, letter: ["R", "R", "R"], error: [Some(0.2249), Some(0.2318), Some(0.0385)] },
    DecisionRow { m: 218, letter: ["R", "R", "R"], error: [Some(0.1611), Some(0.1643), Some(0.0232)] },
    DecisionRow { m: 222, letter: ["R", "R", "R"], error: [Some(0.117), Some(0.1186), Some(0.0149)] },
    DecisionRow { m: 231, letter: ["R", "R", "R"], error: [Some(0.0761), Some(0.0767), Some(0.0085)] },
    DecisionRow { m: 240, letter: ["R", "R", "R"], error: [Some(0.0471), Some(0.0473), Some(0.0048)] },
    DecisionRow { m: 245, letter: ["R", "R", "R"], error: [Some(0.0269), Some(0.027), Some(0.0025)] },
    DecisionRow { m: 247, letter: ["R", "R", "R"], error: [Some(0.0211), Some(0.0212), Some(0.0019)] },
    DecisionRow { m: 251, letter: ["R", "R", "R"], error: [Some(0.022), Some(0.022), Some(0.002)] },
];

pub const DEC_JEFFREYS: [DecisionRow; 24] = [
    DecisionRow { m: 12, letter: ["R", "A", "A"], error: [Some(0.0336), Some(0.0286), Some(0.001)] },
    DecisionRow { m: 18, letter: ["R", "A", "A"], error: [Some(0.4615), Some(0.0319), Some(0.0256)] },
    DecisionRow { m: 24, letter: ["A", "A", "A"], error: [Some(0.1773), Some(0.0612), Some(0.3304)] },
    DecisionRow { m: 30, letter: ["A", "A", "ND"], error: [Some(0.1263), Some(0.0714), None] },
    DecisionRow { m: 34, letter: ["A", "A", "A"], error: [Some(0.149), Some(0.0462), Some(0.2449)] },
    DecisionRow { m: 40, letter: ["A", "A", "A"], error: [Some(0.1773), Some(0.0359), Some(0.1427)] },
    DecisionRow { m: 46, letter: ["A", "A", "A"], error: [Some(0.149), Some(0.0319), Some(0.173)] },
    DecisionRow { m: 67, letter: ["A", "A", "R"], error: [Some(0.0937), Some(0.053), Some(0.4515)] },
    DecisionRow { m: 78, letter: ["A", "A", "ND"], error: [Some(0.0937), Some(0.0462), None] },
    DecisionRow { m: 100, letter: ["A", "A", "A"], error: [Some(0.149), Some(0.0195), Some(0.0934)] },
    DecisionRow { m: 115, letter: ["A", "A", "A"], error: [Some(0.149), Some(0.0179), Some(0.0934)] },
    DecisionRow { m: 135, letter: ["A", "A", "A"], error: [Some(0.0937), Some(0.0213), Some(0.2071)] },
    DecisionRow { m: 167, letter: ["A", "A", "R"], error: [Some(0.073), Some(0.0612), Some(0.2431)] },
    DecisionRow { m: 172, letter: ["A", "A", "R"], error: [Some(0.0821), Some(0.0612), Some(0.2229)] },
    DecisionRow { m: 190, letter: ["ND", "ND", "R"], error: [None, None, Some(0.0407)] },
    DecisionRow { m: 197, letter: ["ND", "ND", "R"], error: [None, None, Some(0.0192)] },
    DecisionRow { m: 211, letter: ["R", "R", "R"], error: [Some(0.4115), Some(0.4127), Some(0.0054)] },
    DecisionRow { m: 218, letter: ["R", "R", "R"], error: [Some(0.2401), Some(0.2405), Some(0.0022)] },
    DecisionRow { m: 222, letter: ["R", "R", "R"], error: [Some(0.1333), Some(0.1334), Some(0.001)] },
    DecisionRow { m: 231, letter: ["R", "R", "R"], error: [Some(0.0613), Some(0.0613), Some(0.0004)] },
    DecisionRow { m: 240, letter: ["R", "R", "R"], error: [Some(0.0259), Some(0.0259), Some(0.0001)] },
    DecisionRow { m: 245, letter: ["R", "R", "R"], error: [Some(0.009), Some(0.009), Some(0.0)] },
    DecisionRow { m: 247, letter: ["R", "R", "R"], error: [Some(0.0058), Some(0.0058), Some(0.0)] },
    DecisionRow { m: 251, letter: ["R", "R", "R"], error: [Some(0.0067), Some(0.0067), Some(0.0)] },
];

